#include "motivic/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "motivic/error.hpp"

namespace motivic {

namespace {

__extension__ using Wide = __int128;
__extension__ using UnsignedWide = unsigned __int128;

Integer from_wide(Wide value) {
    const bool negative = value < 0;
    UnsignedWide magnitude = negative ? -static_cast<UnsignedWide>(value) : static_cast<UnsignedWide>(value);
    Integer out(static_cast<unsigned long>(magnitude >> 64));
    out <<= 64;
    out += static_cast<unsigned long>(magnitude & 0xFFFFFFFFFFFFFFFFULL);
    return negative ? Integer(-out) : out;
}

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) {
    return GradedLexLess{}(a.first, b.first);
}

// Mixed-radix index of exponent vectors whose digits, most significant first,
// are the total degree and then -e_0, ..., -e_{r-2} (e_{r-1} follows from the
// degree). Ascending indices are therefore graded-lex order. The index is
// affine in the exponent, so index(a + b) = linear(a) + linear(b) + offset.
struct Box {
    std::vector<long> hi;
    long degree_lo = 0;
    std::vector<long long> radix;  // digit ranges
    std::vector<long long> weight; // digit place values
    std::vector<long long> coef;   // linear part per variable
    long long offset = 0;
    long double size = 1;

    Box(const std::vector<long>& lo, std::vector<long> high, long deg_lo, long deg_hi)
        : hi(std::move(high)), degree_lo(deg_lo) {
        const std::size_t r = hi.size();
        radix.push_back(deg_hi - deg_lo + 1);
        for (std::size_t j = 0; j + 1 < r; ++j) {
            radix.push_back(hi[j] - lo[j] + 1);
        }
        weight.assign(radix.size(), 1);
        for (std::size_t d = radix.size(); d-- > 0;) {
            weight[d] = static_cast<long long>(size);
            size *= static_cast<long double>(radix[d]);
        }
        if (size > static_cast<long double>(1LL << 50)) {
            return;
        }
        coef.assign(r, weight[0]);
        offset = -deg_lo * weight[0];
        for (std::size_t j = 0; j + 1 < r; ++j) {
            coef[j] -= weight[j + 1];
            offset += hi[j] * weight[j + 1];
        }
    }

    long long linear(const Exponent& e) const {
        long long idx = 0;
        for (std::size_t j = 0; j < e.size(); ++j) {
            idx += static_cast<long long>(e[j]) * coef[j];
        }
        return idx;
    }

    Exponent decode(long long idx) const {
        const std::size_t r = hi.size();
        Exponent e(r);
        if (r == 0) {
            return e;
        }
        long rest = static_cast<long>(idx / weight[0]) + degree_lo;
        for (std::size_t j = 0; j + 1 < r; ++j) {
            e[j] = static_cast<int>(hi[j] - (idx / weight[j + 1]) % radix[j + 1]);
            rest -= e[j];
        }
        e[r - 1] = static_cast<int>(rest);
        return e;
    }
};

} // namespace

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const noexcept {
    long da = 0;
    long db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) {
        return da < db;
    }
    return b < a;
}

Polynomial::Polynomial() : Polynomial(Ring::integers()) {}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, const Integer& constant) : ring_(std::move(ring)) {
    if (constant != 0) {
        terms_.emplace_back(Exponent(ring_.rank(), 0), constant);
    }
}

Polynomial Polynomial::monomial(Ring ring, Exponent exponent, const Integer& coefficient) {
    Polynomial p(std::move(ring));
    p.validate_exponent(exponent);
    if (coefficient != 0) {
        p.terms_.emplace_back(std::move(exponent), coefficient);
    }
    return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::string_view name) {
    auto index = ring.index_of(name);
    if (!index) {
        throw Error("unknown variable " + std::string(name));
    }
    Exponent e(ring.rank(), 0);
    e[*index] = 1;
    return monomial(ring, std::move(e));
}

Polynomial Polynomial::from_terms(Ring ring, std::span<const std::pair<Exponent, Integer>> terms) {
    Polynomial p(std::move(ring));
    p.terms_.reserve(terms.size());
    for (const auto& term : terms) {
        p.validate_exponent(term.first);
        p.terms_.push_back(term);
    }
    p.normalize();
    return p;
}

void Polynomial::validate_exponent(const Exponent& exponent) const {
    if (exponent.size() != ring_.rank()) {
        throw DataError("exponent vector of length " + std::to_string(exponent.size()) + " in ring " +
                        ring_.to_string());
    }
    if (!ring_.laurent()) {
        for (int k : exponent) {
            if (k < 0) {
                throw Error("negative exponent in non-Laurent ring " + ring_.to_string());
            }
        }
    }
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::size_t write = 0;
    for (std::size_t read = 0; read < terms_.size(); ++read) {
        if (write > 0 && terms_[write - 1].first == terms_[read].first) {
            terms_[write - 1].second += terms_[read].second;
            continue;
        }
        if (write > 0 && terms_[write - 1].second == 0) {
            --write;
        }
        if (write != read) {
            terms_[write] = std::move(terms_[read]);
        }
        ++write;
    }
    if (write > 0 && terms_[write - 1].second == 0) {
        --write;
    }
    terms_.resize(write);
}

void Polynomial::add_term_unchecked(const Exponent& exponent, const Integer& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, const Exponent& e) { return GradedLexLess{}(t.first, e); });
    if (it != terms_.end() && it->first == exponent) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
        return;
    }
    terms_.emplace(it, exponent, coefficient);
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() > 1) {
        return false;
    }
    return std::all_of(terms_.front().first.begin(), terms_.front().first.end(), [](int k) { return k == 0; });
}

bool Polynomial::is_one() const {
    return is_constant() && terms_.size() == 1 && terms_.front().second == 1;
}

bool Polynomial::is_unit_monomial() const {
    return terms_.size() == 1 && terms_.front().second == 1;
}

bool Polynomial::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.second >= 0; });
}

Integer Polynomial::coefficient(const Exponent& exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, const Exponent& e) { return GradedLexLess{}(t.first, e); });
    return it != terms_.end() && it->first == exponent ? it->second : Integer(0);
}

Integer Polynomial::constant_term() const {
    return coefficient(Exponent(ring_.rank(), 0));
}

Integer Polynomial::eval_at_ones() const {
    Integer sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c;
    }
    return sum;
}

Polynomial Polynomial::substitute_monomials(const Ring& target, std::span<const Polynomial> images) const {
    if (images.size() != ring_.rank()) {
        throw IncompatibleSubstitution("substitution needs " + std::to_string(ring_.rank()) + " images, got " +
                                       std::to_string(images.size()));
    }
    std::vector<const Exponent*> image_exponents;
    image_exponents.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        require_same_ring(images[i].ring(), target, "substitution image");
        if (!images[i].is_unit_monomial()) {
            throw IncompatibleSubstitution("image of " + ring_.variables()[i] + " is '" + images[i].to_string() +
                                           "', not a monomial with coefficient 1");
        }
        image_exponents.push_back(&images[i].terms().front().first);
    }
    Polynomial out(target);
    out.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
        Exponent mapped(target.rank(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = 0; j < mapped.size(); ++j) {
                mapped[j] += e[i] * (*image_exponents[i])[j];
            }
        }
        out.validate_exponent(mapped);
        out.terms_.emplace_back(std::move(mapped), c);
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::with_ring(const Ring& ring) const {
    if (ring.variables() != ring_.variables()) {
        throw RingMismatch("cannot reinterpret " + ring_.to_string() + " as " + ring.to_string());
    }
    Polynomial out(ring);
    for (const auto& [e, c] : terms_) {
        out.validate_exponent(e);
    }
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(ring_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial Polynomial::divide_exact(const Integer& divisor) const {
    if (divisor == 0) {
        throw Error("division by zero");
    }
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
            throw Error("coefficient " + c.get_str() + " is not divisible by " + divisor.get_str());
        }
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_ring(ring_, other.ring_, "polynomial addition");
    if (other.terms_.empty()) {
        return *this;
    }
    TermList merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || term_less(*b, *a)) {
            merged.push_back(*b++);
        } else {
            Integer sum = a->second + b->second;
            if (sum != 0) {
                merged.emplace_back(std::move(a->first), std::move(sum));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    return *this += -other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
    const Polynomial* lhs[] = {&a};
    const Polynomial* rhs[] = {&b};
    return Polynomial::sum_of_products(a.ring_, lhs, rhs);
}

Polynomial Polynomial::sum_of_products(const Ring& ring, std::span<const Polynomial* const> lhs,
                                       std::span<const Polynomial* const> rhs) {
    if (lhs.size() != rhs.size()) {
        throw Error("sum_of_products needs operand lists of equal length");
    }
    const std::size_t r = ring.rank();
    Polynomial out(ring);

    // Bounding box of every product's exponents, and coefficient sizes.
    std::vector<long> lo(r, 0), hi(r, 0);
    long deg_lo = 0, deg_hi = 0;
    bool any = false;
    std::size_t product_count = 0;
    std::size_t bits_a = 0, bits_b = 0;
    struct Extent {
        std::vector<long> min, max;
        long deg_min = 0, deg_max = 0;
    };
    auto extent = [r](const Polynomial& p, Extent& x, std::size_t& bits) {
        x.min.assign(r, 0);
        x.max.assign(r, 0);
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            long deg = 0;
            for (std::size_t j = 0; j < r; ++j) {
                x.min[j] = first ? e[j] : std::min<long>(x.min[j], e[j]);
                x.max[j] = first ? e[j] : std::max<long>(x.max[j], e[j]);
                deg += e[j];
            }
            x.deg_min = first ? deg : std::min(x.deg_min, deg);
            x.deg_max = first ? deg : std::max(x.deg_max, deg);
            first = false;
            bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
        }
    };
    Extent xa, xb;
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        require_same_ring(lhs[k]->ring_, ring, "polynomial multiplication");
        require_same_ring(rhs[k]->ring_, ring, "polynomial multiplication");
        if (lhs[k]->is_zero() || rhs[k]->is_zero()) {
            continue;
        }
        product_count += lhs[k]->term_count() * rhs[k]->term_count();
        extent(*lhs[k], xa, bits_a);
        extent(*rhs[k], xb, bits_b);
        for (std::size_t j = 0; j < r; ++j) {
            lo[j] = any ? std::min(lo[j], xa.min[j] + xb.min[j]) : xa.min[j] + xb.min[j];
            hi[j] = any ? std::max(hi[j], xa.max[j] + xb.max[j]) : xa.max[j] + xb.max[j];
        }
        deg_lo = any ? std::min(deg_lo, xa.deg_min + xb.deg_min) : xa.deg_min + xb.deg_min;
        deg_hi = any ? std::max(deg_hi, xa.deg_max + xb.deg_max) : xa.deg_max + xb.deg_max;
        any = true;
    }
    if (!any) {
        return out;
    }

    const Box box(lo, std::move(hi), deg_lo, deg_hi);
    if (box.size > static_cast<long double>(1LL << 50)) {
        // Too large to index linearly; multiply term by term.
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            for (const auto& [ea, ca] : lhs[k]->terms_) {
                for (const auto& [eb, cb] : rhs[k]->terms_) {
                    Exponent e(r);
                    for (std::size_t j = 0; j < r; ++j) {
                        e[j] = ea[j] + eb[j];
                    }
                    out.terms_.emplace_back(std::move(e), ca * cb);
                }
            }
        }
        out.normalize();
        return out;
    }

    const auto size = static_cast<long long>(box.size);
    const bool dense = size <= (1LL << 22) && size <= std::max<long long>(4096, 4 * static_cast<long long>(product_count));
    // |a| < 2^bits_a, |b| < 2^bits_b, fewer than 2^bits_n products: partial sums fit in 126 bits.
    const auto bits_n = static_cast<std::size_t>(std::bit_width(product_count));
    const bool word_sized = bits_a <= 62 && bits_b <= 62 && bits_a + bits_b + bits_n <= 125;

    auto emit = [&](long long idx, Integer coefficient) {
        out.terms_.emplace_back(box.decode(idx), std::move(coefficient));
    };

    if (dense && word_sized) {
        std::vector<Wide> buffer(static_cast<std::size_t>(size), 0);
        std::vector<std::pair<long long, long>> a, b;
        for (std::size_t k = 0; k < lhs.size(); ++k) {
            a.clear();
            b.clear();
            for (const auto& [e, c] : lhs[k]->terms_) {
                a.emplace_back(box.linear(e) + box.offset, c.get_si());
            }
            for (const auto& [e, c] : rhs[k]->terms_) {
                b.emplace_back(box.linear(e), c.get_si());
            }
            for (const auto& [ka, ca] : a) {
                for (const auto& [kb, cb] : b) {
                    buffer[static_cast<std::size_t>(ka + kb)] += static_cast<Wide>(ca) * cb;
                }
            }
        }
        for (long long idx = 0; idx < size; ++idx) {
            if (buffer[static_cast<std::size_t>(idx)] != 0) {
                emit(idx, from_wide(buffer[static_cast<std::size_t>(idx)]));
            }
        }
    } else {
        std::vector<std::pair<long long, const Integer*>> a, b;
        auto accumulate_into = [&](auto& buffer) {
            for (std::size_t k = 0; k < lhs.size(); ++k) {
                a.clear();
                b.clear();
                for (const auto& [e, c] : lhs[k]->terms_) {
                    a.emplace_back(box.linear(e) + box.offset, &c);
                }
                for (const auto& [e, c] : rhs[k]->terms_) {
                    b.emplace_back(box.linear(e), &c);
                }
                for (const auto& [ka, ca] : a) {
                    for (const auto& [kb, cb] : b) {
                        mpz_addmul(buffer[ka + kb].get_mpz_t(), ca->get_mpz_t(), cb->get_mpz_t());
                    }
                }
            }
        };
        if (dense) {
            std::vector<Integer> buffer(static_cast<std::size_t>(size));
            accumulate_into(buffer);
            for (long long idx = 0; idx < size; ++idx) {
                if (buffer[static_cast<std::size_t>(idx)] != 0) {
                    emit(idx, std::move(buffer[static_cast<std::size_t>(idx)]));
                }
            }
        } else {
            std::unordered_map<long long, Integer> buffer;
            buffer.reserve(product_count);
            accumulate_into(buffer);
            std::vector<std::pair<long long, Integer*>> entries;
            entries.reserve(buffer.size());
            for (auto& [idx, c] : buffer) {
                if (c != 0) {
                    entries.emplace_back(idx, &c);
                }
            }
            std::sort(entries.begin(), entries.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            for (auto& [idx, c] : entries) {
                emit(idx, std::move(*c));
            }
        }
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? '-' : '+';
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += ring_.variables()[i];
            if (e[i] != 1) {
                mono += '^' + std::to_string(e[i]);
            }
        }
        const Integer magnitude = abs(c);
        if (mono.empty()) {
            out += magnitude.get_str();
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += magnitude.get_str() + '*' + mono;
        }
    }
    return out;
}

} // namespace motivic
