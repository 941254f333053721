#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mengoli/rational.hpp"
#include "mengoli/real.hpp"

namespace mengoli::cli {

enum class Command { Eval, Digamma, Zeta, Verify, Bench };
enum class Format { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Environment variable consulted for the default precision.
inline constexpr const char* kPrecisionEnv = "MENGOLI_PRECISION";

struct CliRequest {
    Command command = Command::Eval;
    std::vector<Rational> shifts;
    /// digamma argument "p/q", kept unreduced
    std::string arg;
    int s = 2;
    std::vector<std::int64_t> w_grid{16, 32, 64, 128};
    /// Richardson levels; negative means w_grid.size() - 1
    int order = -1;
    unsigned precision_bits = kDefaultPrecisionBits;
    /// oracle terms; 0 means "no oracle" for eval/digamma and 10^6 for verify
    std::int64_t terms = 0;
    std::uint64_t seed = 1;
    int trials = 100;
    std::int64_t max_den = 24;
    /// added to the closed-form value before verification (fault injection)
    double perturb = 0.0;
    double eps = 1e-9;
    Format format = Format::Text;
};

/// "p/q,r/s,..." -> rationals. Throws InvalidInput on any malformed entry,
/// before anything is evaluated.
std::vector<Rational> parse_shift_list(std::string_view text);
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// Precision from MENGOLI_PRECISION, or the library default.
unsigned default_precision_from_env();

/// Executes a request, writing the report to `out` and diagnostics to `err`.
/// Returns kExitOk, kExitInvalidInput, or kExitVerificationFailed.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

}  // namespace mengoli::cli
