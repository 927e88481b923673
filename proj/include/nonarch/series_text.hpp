#pragma once

#include <string_view>

#include "nonarch/series.hpp"

namespace nonarch {

// Parses a sum of terms "coeff * t^(exp)" into a series over the given
// field. Whitespace is insignificant. Exponents use the Q+Q*sqrt2 literal
// syntax ('s' denotes sqrt 2), e.g. "t^(1+1*s)". Coefficients: integers or
// rationals for Q/F2/F3, plus 'i' and parenthesized "a/b+c/d*i" forms for
// Qi. Bare "t" means t^1, a bare coefficient is a constant term.
// Throws ParseError with the offending position.
Series parse_series_expression(FieldTag tag, std::string_view text);

}  // namespace nonarch
