#ifndef HCONV_CLI_HPP
#define HCONV_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hconv/classes.hpp"

namespace hconv::cli {

inline constexpr int kExitSound = 0;
inline constexpr int kExitViolation = 1;  // a bound was exceeded or a certificate rejected
inline constexpr int kExitConfig = 2;
inline constexpr int kExitOracle = 3;  // the integrator could not settle a row

/// Comma separated reals; each entry may be a fraction such as 1/3.
/// DomainError on malformed entries. An empty string gives an empty list.
std::vector<double> parse_grid(std::string_view text);

struct FunctionSpec {
  RealFn f;
  RealFn f_prime;
};

/// poly:c0,c1,...   c0 + c1 x + c2 x^2 + ...
/// pow:BETA,R       BETA x^R
/// exp:K[,C]        C e^{K x}, C defaulting to 1
FunctionSpec parse_function(std::string_view text);

/// t, t^s (exponent taken from `s`), t^NUMBER, 1, 1/t.
HModulus parse_modulus(std::string_view text, std::optional<double> s);

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hconv::cli

#endif  // HCONV_CLI_HPP
