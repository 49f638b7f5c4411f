#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dicke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `dicke` executable. `args` excludes the program
/// name. CSV goes to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "start:stop:step" (inclusive, values generated as start + i * step) or a
/// comma-separated list. Throws std::invalid_argument.
std::vector<double> parse_alpha_spec(std::string_view spec);

/// Comma-separated list of positive integers; "2^k" is accepted for powers
/// of two. Throws std::invalid_argument (N = 0 included).
std::vector<int> parse_n_list(std::string_view spec);

/// "lo:hi" exponents of a dyadic ladder.
std::vector<int> parse_n_range(std::string_view spec);

}  // namespace dicke::cli
