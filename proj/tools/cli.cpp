#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "motivic/axioms.hpp"
#include "motivic/error.hpp"
#include "motivic/expression.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/json_io.hpp"
#include "motivic/oracles.hpp"
#include "motivic/power_structure.hpp"

namespace motivic::cli {

namespace {

constexpr int kMaxTruncation = 200;

struct Config {
    std::vector<std::string> vars;
    bool laurent = false;
    int truncate = 10;
    std::string format = "text";

    // command arguments
    std::string expression;
    std::string series;
    std::string exponent;
    std::vector<std::string> exponents;
    int dimension = 0;
    std::string specialize;
    std::string local_file;
    std::uint64_t seed = 1;
    int samples = 100;
};

Ring ring_of(const Config& cfg) {
    return Ring(cfg.vars, cfg.laurent);
}

std::vector<Polynomial> parse_list(const std::vector<std::string>& sources, const Ring& ring, int order) {
    if (static_cast<int>(sources.size()) > order) {
        throw Error("got " + std::to_string(sources.size()) + " exponents for truncation order " +
                    std::to_string(order));
    }
    std::vector<Polynomial> out;
    for (const auto& s : sources) {
        out.push_back(parse_polynomial(s, ring));
    }
    out.resize(static_cast<std::size_t>(order), Polynomial(ring));
    return out;
}

void print_series(std::ostream& out, const Config& cfg, const Series& s) {
    if (cfg.format == "json") {
        out << to_json(s).dump(2) << '\n';
        return;
    }
    out << "n\tcoefficient\n";
    for (int k = 0; k <= s.order(); ++k) {
        out << k << '\t' << s[k].to_string() << '\n';
    }
}

void print_exponents(std::ostream& out, const Config& cfg, const EulerProduct& e) {
    if (cfg.format == "json") {
        out << to_json(e).dump(2) << '\n';
        return;
    }
    out << "i\texponent\n";
    for (int i = 1; i <= e.order(); ++i) {
        out << i << '\t' << e.exponent(i).to_string() << '\n';
    }
}

std::optional<LocalHilbertData> load_local(const std::string& path) {
    if (path.empty()) {
        return std::nullopt;
    }
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open local data file " + path);
    }
    try {
        return local_data_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("local data file " + path + ": " + e.what());
    }
}

// A class given over Z[L] is read as the same class over Z[L^±1].
Polynomial as_motivic(const Polynomial& p) {
    if (p.ring().variables() == motivic_ring().variables()) {
        return p.with_ring(motivic_ring());
    }
    throw RingMismatch("a motivic class must be a polynomial in L; got ring " + p.ring().to_string());
}

int run_hilbert(const Config& cfg, std::ostream& out) {
    const int n = cfg.truncate;
    const Polynomial x = parse_polynomial(cfg.expression, ring_of(cfg));
    const auto user = load_local(cfg.local_file);
    if (cfg.specialize == "euler") {
        const Series local = euler_specialization(local_series(cfg.dimension, n, user).series);
        print_series(out, cfg, pow(local, Polynomial(Ring::integers(), x.eval_at_ones())));
    } else if (cfg.specialize == "hodge") {
        if (x.ring().index_of("u") && x.ring().index_of("v")) {
            print_series(out, cfg, hodge_deligne_series(x, cfg.dimension, n, user));
        } else {
            const Series motivic = global_series({as_motivic(x), cfg.dimension}, local_series(cfg.dimension, n, user), n);
            print_series(out, cfg, hodge_deligne_image(motivic, Ring({"u", "v"}, true)));
        }
    } else {
        print_series(out, cfg, global_series({as_motivic(x), cfg.dimension}, local_series(cfg.dimension, n, user), n));
    }
    return 0;
}

struct Check {
    std::string name;
    bool ok = true;
    std::string counterexample;
};

std::vector<Check> oracle_sweeps(int order) {
    std::vector<Check> checks;

    Check profiles{"finite enumeration = configuration formula = pow (m <= 4, weights <= 4, a_i <= 3, N = 6)", true, {}};
    const Ring z;
    for (unsigned m = 0; m <= 4 && profiles.ok; ++m) {
        for (unsigned code = 0; code < 256 && profiles.ok; ++code) {
            oracles::WeightProfile p{{code & 3u, (code >> 2) & 3u, (code >> 4) & 3u, (code >> 6) & 3u}, m};
            const auto enumerated = oracles::finite_power_enumerate(p, 6);
            const auto formula = oracles::coefficient_formula_count(p, 6);
            std::vector<Polynomial> c{Polynomial(z, 1)};
            for (int i = 1; i <= 6; ++i) {
                c.emplace_back(z, i <= 4 ? Integer(p.sizes[static_cast<std::size_t>(i - 1)]) : Integer(0));
            }
            const Series powered = pow(Series(z, std::move(c)), Polynomial(z, static_cast<long>(m)));
            for (int k = 0; k <= 6; ++k) {
                const auto idx = static_cast<std::size_t>(k);
                if (enumerated[idx] != formula[idx] || powered[k].constant_term() != enumerated[idx]) {
                    profiles.ok = false;
                    std::ostringstream s;
                    s << "sizes (" << p.sizes[0] << "," << p.sizes[1] << "," << p.sizes[2] << "," << p.sizes[3]
                      << "), m = " << m << ", t^" << k << ": enumeration " << enumerated[idx] << ", formula "
                      << formula[idx] << ", pow " << powered[k].to_string();
                    profiles.counterexample = s.str();
                    break;
                }
            }
        }
    }
    checks.push_back(profiles);

    const int punctual_order = std::min(order, 40);
    Check punctual{"partition sum = prod (1 - L^(k-1) t^k)^-1 (n <= " + std::to_string(punctual_order) + ")", true, {}};
    std::vector<Polynomial> exponents;
    for (int k = 1; k <= punctual_order; ++k) {
        exponents.push_back(Polynomial::monomial(motivic_ring(), Exponent{k - 1}));
    }
    const Series product = assemble(EulerProduct(motivic_ring(), std::move(exponents)));
    for (int n = 1; n <= punctual_order; ++n) {
        const Polynomial expected = oracles::punctual_surface_class_oracle(n);
        if (!(product[n] == expected)) {
            punctual.ok = false;
            punctual.counterexample = "n = " + std::to_string(n) + ": product " + product[n].to_string() +
                                      ", partition sum " + expected.to_string();
            break;
        }
    }
    checks.push_back(punctual);

    const int euler_order = std::min(order, 40);
    Check euler{"Euler characteristic of surface series = partition convolution (chi in 0..3, 24)", true, {}};
    for (unsigned chi : {0u, 1u, 2u, 3u, 24u}) {
        const Series e = euler_specialization(
            global_series({Polynomial(motivic_ring(), static_cast<long>(chi)), 2}, local_series(2, euler_order), euler_order));
        const auto expected = oracles::partition_convolution(chi, euler_order);
        for (int n = 0; n <= euler_order; ++n) {
            if (e[n].constant_term() != expected[static_cast<std::size_t>(n)]) {
                euler.ok = false;
                euler.counterexample = "chi = " + std::to_string(chi) + ", n = " + std::to_string(n);
                break;
            }
        }
    }
    checks.push_back(euler);
    return checks;
}

void print_checks(std::ostream& out, const Config& cfg, const std::vector<Check>& checks) {
    if (cfg.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : checks) {
            j.push_back({{"check", c.name}, {"passed", c.ok}, {"counterexample", c.counterexample}});
        }
        out << j.dump(2) << '\n';
        return;
    }
    for (const auto& c : checks) {
        out << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
        if (!c.ok) {
            out << "  counterexample: " << c.counterexample << '\n';
        }
    }
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

int run_axioms(const Config& cfg, std::ostream& out) {
    AxiomSuiteConfig suite;
    suite.seed = cfg.seed;
    suite.samples = cfg.samples;
    suite.order = cfg.truncate;
    if (!cfg.vars.empty()) {
        suite.ring = ring_of(cfg);
    }
    std::vector<Check> checks;
    for (const auto& outcome : run_axiom_suite(suite)) {
        checks.push_back({outcome.name + " (" + std::to_string(outcome.checked) + " samples, " +
                              std::to_string(outcome.failed) + " failed)",
                          outcome.passed(), outcome.first_counterexample});
    }
    print_checks(out, cfg, checks);
    return all_passed(checks) ? 0 : 1;
}

void add_ring_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--vars", cfg.vars, "Ring variables, comma separated (none: the integers)")->delimiter(',');
    cmd->add_flag("--laurent", cfg.laurent, "Allow negative exponents");
    cmd->add_option("--truncate", cfg.truncate, "Truncation order N")->check(CLI::Range(0, kMaxTruncation));
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app("Power structures over polynomial rings and Hilbert schemes of points", "motivic-power");
    app.require_subcommand(1);

    std::function<int()> action;
    auto command = [&](const char* name, const char* description, std::function<int()> body) {
        CLI::App* cmd = app.add_subcommand(name, description);
        add_ring_options(cmd, cfg);
        cmd->callback([&action, body = std::move(body)] { action = body; });
        return cmd;
    };

    auto* normalize = command("normalize", "Print an expression in canonical form", [&] {
        const Polynomial p = parse_polynomial(cfg.expression, ring_of(cfg));
        out << (cfg.format == "json" ? to_json(p).dump(2) : p.to_string()) << '\n';
        return 0;
    });
    normalize->add_option("expression", cfg.expression, "Polynomial expression")->required();

    auto* zeta = command("zeta", "Kapranov zeta function (1 - t)^-[X]", [&] {
        print_series(out, cfg, kapranov_zeta(parse_polynomial(cfg.expression, ring_of(cfg)), cfg.truncate));
        return 0;
    });
    zeta->add_option("--class", cfg.expression, "The class [X]")->required();

    auto* power = command("pow", "A(t)^m", [&] {
        const Ring ring = ring_of(cfg);
        print_series(out, cfg, pow(parse_series(cfg.series, ring, cfg.truncate), parse_polynomial(cfg.exponent, ring)));
        return 0;
    });
    power->add_option("--series", cfg.series, "Unital series A(t) in t")->required();
    power->add_option("--exponent", cfg.exponent, "Exponent m")->required();

    auto* fac = command("factor", "Euler-product exponents b_i with A = prod (1 - t^i)^-b_i", [&] {
        print_exponents(out, cfg, factor(parse_series(cfg.series, ring_of(cfg), cfg.truncate)));
        return 0;
    });
    fac->add_option("--series", cfg.series, "Unital series A(t) in t")->required();

    auto* assem = command("assemble", "prod (1 - t^i)^-b_i from exponents b_1, b_2, ...", [&] {
        const Ring ring = ring_of(cfg);
        print_series(out, cfg, assemble(EulerProduct(ring, parse_list(cfg.exponents, ring, cfg.truncate))));
        return 0;
    });
    assem->add_option("--exponents", cfg.exponents, "b_1,b_2,... (missing ones are 0)")->delimiter(',')->required();

    auto* exp = command("exp", "Exp(P_1 t + P_2 t^2 + ...)", [&] {
        const Ring ring = ring_of(cfg);
        print_series(out, cfg, exp_map(ring, parse_list(cfg.exponents, ring, cfg.truncate)));
        return 0;
    });
    exp->add_option("--terms", cfg.exponents, "P_1,P_2,... (missing ones are 0)")->delimiter(',')->required();

    auto* log = command("log", "Log(A): the P_k with Exp(sum P_k t^k) = A", [&] {
        const Ring ring = ring_of(cfg);
        print_exponents(out, cfg, EulerProduct(ring, log_map(parse_series(cfg.series, ring, cfg.truncate))));
        return 0;
    });
    log->add_option("--series", cfg.series, "Unital series A(t) in t")->required();

    auto* hilbert = command("hilbert", "Generating series of Hilbert schemes of points", [&] { return run_hilbert(cfg, out); });
    hilbert->add_option("--dim", cfg.dimension, "Dimension d of X")->required()->check(CLI::PositiveNumber);
    hilbert->add_option("--class", cfg.expression, "[X] in L, e_X in u,v, or chi(X) in Z")->required();
    hilbert->add_option("--specialize", cfg.specialize, "Specialization")->check(CLI::IsMember({"euler", "hodge"}));
    hilbert->add_option("--local", cfg.local_file, "Local data JSON file (needed for d >= 3)");

    auto* oracle = command("oracle-check", "Compare the power structure against brute-force oracles", [&] {
        const auto checks = oracle_sweeps(cfg.truncate);
        print_checks(out, cfg, checks);
        return all_passed(checks) ? 0 : 1;
    });
    (void)oracle;

    auto* axioms = command("axioms", "Randomized check of properties 1-7 of a power structure", [&] { return run_axioms(cfg, out); });
    axioms->add_option("--seed", cfg.seed, "Random seed")->envname("MOTIVIC_POWER_SEED");
    axioms->add_option("--samples", cfg.samples, "Number of random samples")->check(CLI::Range(1, 100000));

    auto* local_data = command("local-data", "Generate the surface local data file from the partition sum", [&] {
        if (cfg.dimension != 2) {
            throw DataError("only d = 2 local data can be generated");
        }
        out << to_json(surface_local_data_from_partitions(std::min(cfg.truncate, 40))).dump(1) << '\n';
        return 0;
    });
    local_data->add_option("--dim", cfg.dimension, "Dimension (2)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace motivic::cli
