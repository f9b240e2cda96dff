#include "randlp/generator.hpp"

#include <barrier>
#include <chrono>
#include <exception>
#include <thread>

#include "randlp/support.hpp"

namespace randlp {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected_distance: return "rejected_distance";
    case Verdict::rejected_objective: return "rejected_objective";
    case Verdict::rejected_similarity: return "rejected_similarity";
  }
  return "unknown";
}

FilterContext::FilterContext(const GeneratorParams& p)
    : params(p),
      center(p.n, p.alpha),
      objective(build_objective(p.n, p.theta)),
      center_value(objective_value(objective, center.coords())) {}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<NormalizedInequality> normalize_all(std::span<const Inequality> rows) {
  std::vector<NormalizedInequality> out;
  out.reserve(rows.size());
  for (const auto& q : rows) out.emplace_back(q);
  return out;
}

void tally(GenerationStats& stats, Verdict v) {
  ++stats.candidates_drawn;
  switch (v) {
    case Verdict::rejected_distance: ++stats.rejected_distance; break;
    case Verdict::rejected_objective: ++stats.rejected_objective; break;
    case Verdict::rejected_similarity: ++stats.rejected_similarity; break;
    case Verdict::accepted: ++stats.submitted; break;
  }
}

[[noreturn]] void stall(const GenerationStats& stats, std::uint64_t budget, std::uint64_t target) {
  struct Entry {
    const char* name;
    std::uint64_t count;
  };
  const Entry entries[] = {
      {"rejected_distance", stats.rejected_distance},
      {"rejected_objective", stats.rejected_objective},
      {"rejected_similarity", stats.rejected_similarity + stats.rejected_similarity_coordinator},
  };
  const Entry* top = &entries[0];
  for (const auto& e : entries) {
    if (e.count > top->count) top = &e;
  }
  throw GenerationStalled(
      "generation stalled: " + std::to_string(budget) + " draws without an accepted inequality (" +
          std::to_string(stats.accepted) + " of " + std::to_string(target) +
          " accepted); dominant rejection is " + top->name + " (" + std::to_string(top->count) +
          " of " + std::to_string(stats.candidates_drawn) + " draws)",
      stats);
}

}  // namespace

Inequality draw_candidate(RngStream& rng, const GeneratorParams& p, const CenterPoint& h) {
  const auto dim = static_cast<std::size_t>(p.n);
  Inequality q{std::vector<double>(dim), 0.0};
  for (;;) {
    for (auto& a : q.a) a = rng.next_sign() * rng.next_real(0.0, p.a_max);
    q.b = rng.next_sign() * rng.next_real(0.0, p.b_max);
    if (norm(q.a) > 0.0) break;
  }
  return orient_toward_center(std::move(q), h);
}

Inequality orient_toward_center(Inequality q, const CenterPoint& h) {
  if (dot(q.a, h.coords()) > q.b) {
    for (auto& a : q.a) a = -a;
    q.b = -q.b;
  }
  return q;
}

Verdict filter_candidate(const Inequality& q, const FilterContext& ctx,
                         std::span<const NormalizedInequality> existing) {
  const double dist = distance_to_center(ctx.center, q);
  if (!(ctx.params.rho < dist && dist <= ctx.params.theta)) return Verdict::rejected_distance;

  const auto projected = project_center(ctx.center, q);
  if (objective_value(ctx.objective, projected) <= ctx.center_value) {
    return Verdict::rejected_objective;
  }

  const NormalizedInequality nq(q);
  for (const auto& e : existing) {
    if (likeness(nq, e, ctx.params.l_max, ctx.params.s_min)) return Verdict::rejected_similarity;
  }
  return Verdict::accepted;
}

Verdict filter_candidate(const Inequality& q, const GeneratorParams& p, const CenterPoint& h,
                         std::span<const double> c, std::span<const Inequality> existing) {
  FilterContext ctx(p);
  ctx.center = h;
  ctx.objective.assign(c.begin(), c.end());
  ctx.center_value = objective_value(ctx.objective, h.coords());
  return filter_candidate(q, ctx, normalize_all(existing));
}

GenerationResult generate_sequential(const GeneratorParams& p) {
  require_valid(p);
  const auto start = Clock::now();
  GenerationResult result{support_only_instance(p), {}};
  auto& stats = result.stats;
  LPInstance& inst = result.instance;
  const auto d = static_cast<std::uint64_t>(p.d);

  if (d > 0) {
    const FilterContext ctx(p);
    auto existing = normalize_all(inst.support);
    existing.reserve(inst.support.size() + d);
    inst.random.reserve(d);
    RngStream rng(p.seed, 0);

    std::uint64_t since_accept = 0;
    while (stats.accepted < d) {
      if (since_accept >= p.max_attempts) {
        stats.wall_time_ms = elapsed_ms(start);
        stall(stats, p.max_attempts, d);
      }
      Inequality q = draw_candidate(rng, p, ctx.center);
      const Verdict v = filter_candidate(q, ctx, existing);
      tally(stats, v);
      ++since_accept;
      if (v == Verdict::accepted) {
        existing.emplace_back(q);
        inst.random.push_back(std::move(q));
        ++stats.accepted;
        since_accept = 0;
      }
    }
  }
  stats.wall_time_ms = elapsed_ms(start);
  return result;
}

namespace {

// One worker's output for one round.
struct Submission {
  Inequality candidate;
  GenerationStats stats;
  bool stalled = false;
  std::exception_ptr error;
};

class ParallelRun {
 public:
  explicit ParallelRun(const GeneratorParams& p)
      : params_(p),
        ctx_(p),
        support_(build_support(p.n, p.alpha)),
        support_normalized_(normalize_all(support_)),
        slots_(static_cast<std::size_t>(p.workers)),
        sync_(p.workers + 1) {}

  GenerationResult run() {
    const auto start = Clock::now();
    std::vector<std::jthread> workers;
    workers.reserve(slots_.size());
    for (std::size_t l = 0; l < slots_.size(); ++l) {
      workers.emplace_back([this, l] { worker_loop(l); });
    }
    coordinator_loop();
    for (auto& w : workers) w.join();

    for (const auto& slot : slots_) {
      if (slot.error) std::rethrow_exception(slot.error);
    }
    stats_.wall_time_ms = elapsed_ms(start);
    if (stalled_) stall(stats_, params_.max_attempts, static_cast<std::uint64_t>(params_.d));

    LPInstance inst = support_only_instance(params_);
    inst.support = support_;
    inst.random = std::move(accepted_);
    return {std::move(inst), stats_};
  }

 private:
  void worker_loop(std::size_t l) {
    RngStream rng(params_.seed, l + 1);
    for (;;) {
      sync_.arrive_and_wait();
      if (stop_) return;
      Submission& slot = slots_[l];
      slot.stats = {};
      slot.stalled = true;
      try {
        for (std::uint64_t attempt = 0; attempt < params_.max_attempts; ++attempt) {
          Inequality q = draw_candidate(rng, params_, ctx_.center);
          const Verdict v = filter_candidate(q, ctx_, support_normalized_);
          tally(slot.stats, v);
          if (v == Verdict::accepted) {
            slot.candidate = std::move(q);
            slot.stalled = false;
            break;
          }
        }
      } catch (...) {
        slot.error = std::current_exception();
      }
      sync_.arrive_and_wait();
    }
  }

  void coordinator_loop() {
    const auto d = static_cast<std::uint64_t>(params_.d);
    std::vector<NormalizedInequality> accepted_normalized;
    accepted_normalized.reserve(d);
    accepted_.reserve(d);
    std::uint64_t since_accept = 0;

    for (;;) {
      sync_.arrive_and_wait();  // release workers into the round
      sync_.arrive_and_wait();  // every slot filled
      ++stats_.rounds;

      bool accepted_this_round = false;
      std::uint64_t drawn_this_round = 0;
      for (auto& slot : slots_) {
        stats_ += slot.stats;
        drawn_this_round += slot.stats.candidates_drawn;
        if (slot.error || slot.stalled) stalled_ = true;
      }
      if (stalled_) {
        for (const auto& slot : slots_) {
          if (!slot.error && !slot.stalled) ++stats_.discarded_after_exit;
        }
        break;
      }

      for (auto& slot : slots_) {
        if (stats_.accepted == d) {
          ++stats_.discarded_after_exit;
          continue;
        }
        NormalizedInequality nq(slot.candidate);
        bool alike = false;
        for (const auto& e : accepted_normalized) {
          if (likeness(nq, e, params_.l_max, params_.s_min)) {
            alike = true;
            break;
          }
        }
        if (alike) {
          ++stats_.rejected_similarity_coordinator;
          continue;
        }
        accepted_normalized.push_back(std::move(nq));
        accepted_.push_back(std::move(slot.candidate));
        ++stats_.accepted;
        accepted_this_round = true;
      }

      since_accept = accepted_this_round ? 0 : since_accept + drawn_this_round;
      if (stats_.accepted == d) break;
      if (since_accept >= params_.max_attempts) {
        stalled_ = true;
        break;
      }
    }
    stop_ = true;
    sync_.arrive_and_wait();
  }

  const GeneratorParams params_;
  const FilterContext ctx_;
  const std::vector<Inequality> support_;
  const std::vector<NormalizedInequality> support_normalized_;
  std::vector<Submission> slots_;
  std::barrier<> sync_;
  // Written by the coordinator between barrier phases only.
  bool stop_ = false;
  bool stalled_ = false;
  std::vector<Inequality> accepted_;
  GenerationStats stats_;
};

}  // namespace

GenerationResult generate_parallel(const GeneratorParams& p) {
  require_valid(p);
  if (p.d == 0) return {support_only_instance(p), {}};
  return ParallelRun(p).run();
}

}  // namespace randlp
