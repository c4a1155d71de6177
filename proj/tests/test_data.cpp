#include "doctest.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "motivic/hilbert.hpp"
#include "motivic/power_structure.hpp"

using namespace motivic;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("bundled surface data matches its generator") {
    const std::string text = read_file(std::string(MOTIVIC_DATA_DIR) + "/local_hilbert_d2.json");
    REQUIRE_FALSE(text.empty());
    const LocalHilbertData generated = surface_local_data_from_partitions(bundled_surface_order());
    CHECK(text == to_json(generated).dump(1) + "\n");
    CHECK(bundled_surface_order() == 40);

    const LocalHilbertData parsed = local_data_from_json(nlohmann::json::parse(text));
    CHECK(parsed.series == generated.series);
    CHECK(local_series(2, 40).series == generated.series);
}

TEST_CASE("bundled surface data agrees with the product formula") {
    const int n = bundled_surface_order();
    std::vector<Polynomial> exponents;
    for (int k = 1; k <= n; ++k) {
        exponents.push_back(Polynomial::monomial(motivic_ring(), Exponent{k - 1}));
    }
    CHECK(assemble(EulerProduct(motivic_ring(), exponents)) == local_series(2, n).series);
    // Past the bundled range the product formula takes over.
    const Series longer = local_series(2, n + 3).series;
    CHECK(truncate(longer, n) == local_series(2, n).series);
    CHECK(longer[n + 1].eval_at_ones() == 44583);
}
