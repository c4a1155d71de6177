#include "motivic/ring.hpp"

#include <algorithm>
#include <set>

#include "motivic/error.hpp"

namespace motivic {

Ring::Ring() : data_(std::make_shared<const Data>()) {}

Ring::Ring(std::vector<std::string> variables, bool laurent) {
    std::set<std::string> seen;
    for (const auto& name : variables) {
        if (name.empty()) {
            throw Error("ring variable names must be nonempty");
        }
        if (!seen.insert(name).second) {
            throw Error("duplicate ring variable '" + name + "'");
        }
    }
    data_ = std::make_shared<const Data>(Data{std::move(variables), laurent});
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
    const auto& vars = data_->variables;
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - vars.begin());
}

Ring Ring::with_laurent(bool laurent) const {
    return Ring(data_->variables, laurent);
}

std::string Ring::to_string() const {
    if (rank() == 0) {
        return "Z";
    }
    std::string out = "Z[";
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += data_->variables[i];
        if (laurent()) {
            out += "^±1";
        }
    }
    out += ']';
    return out;
}

bool operator==(const Ring& a, const Ring& b) noexcept {
    if (a.data_ == b.data_) {
        return true;
    }
    return a.data_->laurent == b.data_->laurent && a.data_->variables == b.data_->variables;
}

void require_same_ring(const Ring& a, const Ring& b, std::string_view context) {
    if (!(a == b)) {
        throw RingMismatch(std::string(context) + ": ring mismatch (" + a.to_string() + " vs " +
                           b.to_string() + ")");
    }
}

} // namespace motivic
