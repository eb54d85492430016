#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sphvar::cli {

/** Exit codes: 0 pass, 1 assertion failure, 2 usage or domain error. */
enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

/**
 * Runs the command line `args` (without the program name). Results go to out,
 * diagnostics to err. Used by main() and by the tests in-process.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/** Parses an exponent: a positive number or "inf". Throws InvalidExponent. */
double parse_exponent(const std::string& text);

} // namespace sphvar::cli
