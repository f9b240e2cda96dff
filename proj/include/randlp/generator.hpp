#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "randlp/geometry.hpp"
#include "randlp/model.hpp"
#include "randlp/rng.hpp"

namespace randlp {

enum class Verdict {
  accepted,
  rejected_distance,
  rejected_objective,
  rejected_similarity,
};

const char* to_string(Verdict v) noexcept;

/// Raised when the attempt budget runs out before d inequalities are
/// accepted. what() names the dominant rejection counter.
class GenerationStalled : public std::runtime_error {
 public:
  GenerationStalled(const std::string& what, GenerationStats stats)
      : std::runtime_error(what), stats_(stats) {}

  const GenerationStats& stats() const noexcept { return stats_; }

 private:
  GenerationStats stats_;
};

/// Read-only context shared by every candidate test of one run.
struct FilterContext {
  FilterContext(const GeneratorParams& params);

  GeneratorParams params;
  CenterPoint center;
  std::vector<double> objective;
  double center_value;  // f(h)
};

/// Returns q with every sign flipped when <a, h> > b, so that h satisfies
/// the result.
Inequality orient_toward_center(Inequality q, const CenterPoint& h);

/// Draws one candidate per the coefficient rule
///   a_j = rsgn() * rand(0, a_max),  b = rsgn() * rand(0, b_max)
/// and flips all signs when <a, h> > b. Zero-norm draws are redrawn.
Inequality draw_candidate(RngStream& rng, const GeneratorParams& p, const CenterPoint& h);

/// Applies the distance band, objective and similarity tests in that order.
/// `existing` is scanned in order and the scan stops at the first alike entry.
Verdict filter_candidate(const Inequality& q, const FilterContext& ctx,
                         std::span<const NormalizedInequality> existing);

/// Convenience overload for callers holding plain inequalities.
Verdict filter_candidate(const Inequality& q, const GeneratorParams& p, const CenterPoint& h,
                         std::span<const double> c, std::span<const Inequality> existing);

struct GenerationResult {
  LPInstance instance;
  GenerationStats stats;
};

/// Single-stream generator using stream (seed, 0). Similarity is tested
/// against the support rows followed by all previously accepted rows.
GenerationResult generate_sequential(const GeneratorParams& p);

/// Round-based coordinator/worker generator with p.workers threads. Worker l
/// owns stream (seed, l) and submits one candidate per round that survives
/// the distance, objective and support-similarity tests. The coordinator
/// admits submissions in ascending worker order against the accepted random
/// rows and stops as soon as d rows are held. Output is a pure function of
/// the parameters, including the worker count.
GenerationResult generate_parallel(const GeneratorParams& p);

}  // namespace randlp
