#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "randlp/model.hpp"

namespace randlp {

// Instance text format:
//   line 1           n m d seed
//   next m lines     a_1 ... a_n b     (support rows first, then random rows)
//   last line        c_1 ... c_n
// Reals are printed with 17 significant digits.

void write_instance(const LPInstance& inst, std::ostream& out);
void write_instance(const LPInstance& inst, const std::filesystem::path& path);
std::string instance_to_string(const LPInstance& inst);

/// Parses the format above. alpha is recovered from the first support row
/// and theta from the last objective coefficient; the remaining generator
/// parameters, which the format does not carry, are taken from `defaults`.
LPInstance read_instance(std::istream& in, const GeneratorParams& defaults = {});
LPInstance read_instance(const std::filesystem::path& path, const GeneratorParams& defaults = {});

/// Key/value report, one `key = value` line per counter.
void write_stats(const GenerationStats& stats, std::ostream& out);
void write_stats(const GenerationStats& stats, const std::filesystem::path& path);

/// 17-significant-digit rendering shared by the instance and SVG writers.
std::string format_real(double v);

}  // namespace randlp
