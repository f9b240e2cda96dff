#include "randlp/model.hpp"

#include <cmath>
#include <sstream>

#include "randlp/errors.hpp"

namespace randlp {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// !(x > 0) also catches NaN.
void require_positive(std::vector<ParamViolation>& out, const char* name, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    out.push_back({std::string(name) + " > 0", std::string(name) + " = " + fmt(v)});
  }
}

}  // namespace

std::vector<ParamViolation> validate_params(const GeneratorParams& p) {
  std::vector<ParamViolation> out;
  if (p.n < 1) out.push_back({"n ≥ 1", "n = " + std::to_string(p.n)});
  if (p.d < 0) out.push_back({"d ≥ 0", "d = " + std::to_string(p.d)});
  if (p.workers < 1) out.push_back({"workers ≥ 1", "workers = " + std::to_string(p.workers)});
  if (p.max_attempts < 1) out.push_back({"max_attempts ≥ 1", "max_attempts = 0"});

  require_positive(out, "alpha", p.alpha);
  require_positive(out, "theta", p.theta);
  require_positive(out, "rho", p.rho);
  require_positive(out, "l_max", p.l_max);
  require_positive(out, "s_min", p.s_min);
  require_positive(out, "a_max", p.a_max);
  require_positive(out, "b_max", p.b_max);

  if (!(p.theta <= p.alpha / 2.0)) {
    out.push_back({"theta ≤ alpha/2",
                   "theta = " + fmt(p.theta) + ", alpha/2 = " + fmt(p.alpha / 2.0)});
  }
  if (!(p.rho < p.theta)) {
    out.push_back({"rho < theta", "rho = " + fmt(p.rho) + ", theta = " + fmt(p.theta)});
  }
  if (!(p.l_max <= 0.7)) {
    out.push_back({"l_max ≤ 0.7", "l_max = " + fmt(p.l_max)});
  }
  return out;
}

std::string describe(const std::vector<ParamViolation>& violations) {
  std::string s;
  for (const auto& v : violations) {
    if (!s.empty()) s += "; ";
    s += "violated " + v.constraint + " (" + v.detail + ")";
  }
  return s;
}

void require_valid(const GeneratorParams& p) {
  auto violations = validate_params(p);
  if (!violations.empty()) throw InvalidParams("invalid parameters: " + describe(violations));
}

std::vector<Inequality> LPInstance::constraints() const {
  std::vector<Inequality> all;
  all.reserve(m());
  all.insert(all.end(), support.begin(), support.end());
  all.insert(all.end(), random.begin(), random.end());
  return all;
}

const Inequality& LPInstance::row(std::size_t i) const {
  return i < support.size() ? support.at(i) : random.at(i - support.size());
}

GenerationStats& GenerationStats::operator+=(const GenerationStats& o) {
  candidates_drawn += o.candidates_drawn;
  rejected_distance += o.rejected_distance;
  rejected_objective += o.rejected_objective;
  rejected_similarity += o.rejected_similarity;
  submitted += o.submitted;
  accepted += o.accepted;
  rejected_similarity_coordinator += o.rejected_similarity_coordinator;
  discarded_after_exit += o.discarded_after_exit;
  rounds += o.rounds;
  wall_time_ms += o.wall_time_ms;
  return *this;
}

}  // namespace randlp
