#pragma once

#include <string_view>

#include "motivic/expression.hpp"
#include "motivic/polynomial.hpp"
#include "motivic/ring.hpp"
#include "motivic/series.hpp"

namespace testing_support {

inline const motivic::Ring& Z() {
    static const motivic::Ring ring;
    return ring;
}

inline const motivic::Ring& Zuv() {
    static const motivic::Ring ring({"u", "v"});
    return ring;
}

inline const motivic::Ring& ZL() {
    static const motivic::Ring ring({"L"}, true);
    return ring;
}

inline motivic::Polynomial poly(std::string_view src, const motivic::Ring& ring) {
    return motivic::parse_polynomial(src, ring);
}

inline motivic::Series series(std::string_view src, const motivic::Ring& ring, int order) {
    return motivic::parse_series(src, ring, order);
}

} // namespace testing_support
