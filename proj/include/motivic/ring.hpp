#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

/// Describes a coefficient ring Z[x_1^{±1}, ..., x_r^{±1}].
///
/// With no variables the ring is the plain integers. When `laurent` is false
/// every exponent must be nonnegative. Rings are cheap to copy; the variable
/// list is shared and never mutated.
class Ring {
public:
    /// The integers (r = 0).
    Ring();
    explicit Ring(std::vector<std::string> variables, bool laurent = false);

    static Ring integers() { return Ring(); }

    std::size_t rank() const noexcept { return data_->variables.size(); }
    const std::vector<std::string>& variables() const noexcept { return data_->variables; }
    bool laurent() const noexcept { return data_->laurent; }

    std::optional<std::size_t> index_of(std::string_view name) const;

    /// The same variables with the Laurent flag set.
    Ring with_laurent(bool laurent) const;

    /// Human-readable form, e.g. "Z[u,v]" or "Z[L^±1]".
    std::string to_string() const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept;

private:
    struct Data {
        std::vector<std::string> variables;
        bool laurent = false;
    };
    std::shared_ptr<const Data> data_;
};

/// Throws RingMismatch naming both rings unless `a == b`.
void require_same_ring(const Ring& a, const Ring& b, std::string_view context);

} // namespace motivic
