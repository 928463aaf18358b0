#pragma once

#include <string>
#include <vector>

#include "ttc/syntax.hpp"

namespace ttc {

/// Prints a core term. `names` supplies one identifier per context slot,
/// outermost first; binders introduced while printing get fresh names.
/// Annotated mode emits the prefix form ((app K L f a), (lam K L b),
/// (pi K L), v<i>, U<n>, 0), which is stable byte for byte; surface mode
/// emits parseable syntax, with U0 rendered as Prop.
std::string pretty(const Term& t, const std::vector<std::string>& names, bool annotated);

}  // namespace ttc
