#pragma once

#include <string>
#include <string_view>

#include "oddflag/weyl.hpp"

namespace oddflag {

// Rendering of barred values: Raw prints the integer encoding ("11"), Bar
// prints "b2" for bar(2).  Parsers accept both forms.
enum class Notation { Raw, Bar };

std::string render_value(int v, const FlagContext& ctx, Notation notation);
std::string render_rep(const CosetRep& rep, const FlagContext& ctx, Notation notation);

// "(d_1,...,d_m)"
std::string render_degree(const DegreeVector& d);

// "5|b4|2" or "5|9|2"; validates the result as a head for ctx.
CosetRep parse_rep(std::string_view text, const FlagContext& ctx);

// Comma-separated entries ("1,0,1") or the shorthand "1^3" / "1^m".
DegreeVector parse_degree(std::string_view text, const FlagContext& ctx);

}  // namespace oddflag
