#pragma once

#include "genus2/ratfunc.hpp"

#include <map>
#include <string>
#include <string_view>

namespace genus2 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses ASCII expressions such as "3/4*t2^2 - (s11*s22 - s12*s21)^-1".
// Identifiers resolve to table variables or to entries of `defs`.
RatFunc parse_expr(std::string_view text, const VarTablePtr& vars,
                   const std::map<std::string, RatFunc>& defs = {});
MPoly parse_poly(std::string_view text, const VarTablePtr& vars);

}  // namespace genus2
