#pragma once

#include <string>

namespace dielrec {

/// Shortest fixed formatting that round-trips any double: %.17g with C-locale
/// semantics. Negative zero is collapsed to zero so emitted files never
/// depend on the sign of a vanished term.
std::string format_g17(double value);

std::string json_escape(const std::string& s);

} // namespace dielrec
