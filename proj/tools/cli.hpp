#pragma once

// Command-line front end of the toolkit. run() is the whole program; main()
// only forwards argv and the standard streams.

#include "mfields/matching_field.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mfields::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitResource = 4;

/// Rows separated by ';', entries by ','. Throws InputError with the
/// offending row and column.
WeightMatrix parseWeightMatrix(const std::string& text);

/// Grades separated by ';', tuples by ',' or whitespace. A tuple is a digit
/// string ("41") or a '-'-joined list ("4-10").
std::vector<std::vector<Tuple>> parseTuples(const std::string& text);

/// "fnv1a64:" followed by 16 hex digits of the canonical field encoding.
std::string fingerprint(const MatchingField& mf);

/// Runs one job. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfields::cli
