#ifndef HDX_TEXT_HPP
#define HDX_TEXT_HPP

#include "hdx/error.hpp"
#include "hdx/ideal.hpp"

#include <string_view>

namespace hdx {

/// "n=3; x1^2, x1*x2, x3". Whitespace is free; a generator `1` is rejected
/// as an improper ideal. Errors carry the byte offset.
MonomialIdeal parse_ideal(std::string_view text);

/// "series; n=10; 10t^2 - 45t^4 + ... - t^20", the numerator of H(t) over
/// (1 - t)^n. Terms look like `5t^2`, `-5*t^3`, `t`, `7`.
HilbertSeries parse_series(std::string_view text);

/// A bare polynomial in t, same term syntax as parse_series.
IntPolynomial parse_polynomial(std::string_view text);

/// True when the text starts with the `series` keyword.
bool looks_like_series(std::string_view text);

}  // namespace hdx

#endif
