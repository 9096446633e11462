#include "helianthus/recursion.hpp"

#include "helianthus/errors.hpp"
#include "helianthus/eval.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace helianthus::eval {

namespace {

using core::ElementSet;

const Rational kHalf(1, 2);

Rational failure_probability(const SetSystem& family) { return 1 - satisfaction_probability(family, kHalf); }

SetSystem filter(const SetSystem& family, bool large, int w) {
  std::vector<ElementSet> out;
  for (const ElementSet s : family)
    if ((2 * s.size() >= w) == large) out.push_back(s);
  return SetSystem(family.universe_size(), std::move(out));
}

/// Smallest rational L with L >= log2 w; an integer when w is a power of two.
Rational log2_upper(int w) {
  if (std::has_single_bit(static_cast<unsigned>(w))) return std::countr_zero(static_cast<unsigned>(w));
  return Rational(log2(Interval::point(w)).hi);
}

Interval log2_of(int w) {
  if (std::has_single_bit(static_cast<unsigned>(w))) return Interval::point(std::countr_zero(static_cast<unsigned>(w)));
  return log2(Interval::point(w));
}

class CompressionSearch {
 public:
  CompressionSearch(const SetSystem& family, const Rational& eps, std::size_t budget)
      : family_(family), eps_(eps), budget_(budget), target_(satisfaction_probability(family, kHalf)) {}

  SetSystem run() {
    const std::size_t upper = core::minimal_subsystem(family_).size();
    for (std::size_t k = 0; k <= upper; ++k) {
      std::vector<ElementSet> chosen;
      dfs(chosen, k);
      if (best_) {
        auto sets = *best_;
        return SetSystem(family_.universe_size(), std::move(sets));
      }
    }
    // Unreachable: the minimal subsystem itself is at distance zero.
    return core::minimal_subsystem(family_);
  }

 private:
  static int total_elements(const std::vector<ElementSet>& sets) {
    int n = 0;
    for (const ElementSet s : sets) n += s.size();
    return n;
  }

  void offer(std::vector<ElementSet> sets) {
    std::sort(sets.begin(), sets.end());
    if (!best_) {
      best_ = std::move(sets);
      return;
    }
    const int a = total_elements(sets), b = total_elements(*best_);
    if (a < b || (a == b && std::lexicographical_compare(sets.begin(), sets.end(), best_->begin(), best_->end())))
      best_ = std::move(sets);
  }

  void dfs(std::vector<ElementSet>& chosen, std::size_t remaining) {
    if (++nodes_ > budget_) throw ResourceError("exhaustive compression search exceeded its node budget");
    const auto uncovered = std::find_if(family_.begin(), family_.end(), [&](ElementSet s) {
      return std::none_of(chosen.begin(), chosen.end(), [s](ElementSet t) { return t.subset_of(s); });
    });
    if (uncovered == family_.end()) {
      offer(chosen);
      return;
    }
    if (remaining == 0) return;
    const ElementSet s = *uncovered;
    core::for_each_subset(s, [&](ElementSet t) {
      if (t.empty() && !s.empty()) return;
      // A member strictly above t would become redundant; a smaller system exists.
      if (std::any_of(chosen.begin(), chosen.end(), [t](ElementSet m) { return t.subset_of(m) && !(t == m); }))
        return;
      chosen.push_back(t);
      const Rational pr = satisfaction_probability(SetSystem(family_.universe_size(), chosen), kHalf);
      if (pr - target_ <= eps_) dfs(chosen, remaining - 1);
      chosen.pop_back();
    });
  }

  const SetSystem& family_;
  Rational eps_;
  std::size_t budget_;
  Rational target_;
  std::size_t nodes_ = 0;
  std::optional<std::vector<ElementSet>> best_;
};

void verify_oracle_answer(const SetSystem& f1, const SetSystem& f2, const Rational& gamma) {
  if (f2.universe_size() != f1.universe_size())
    throw OracleContractError("oracle changed the universe size");
  if (!core::check_proper_upper(f2, f1).proper)
    throw OracleContractError("oracle output is not a proper upper bound system");
  if (f2.width() > f1.width()) throw OracleContractError("oracle output is wider than its input");
  Rational distance = satisfaction_probability(f2, kHalf) - satisfaction_probability(f1, kHalf);
  if (abs(distance) > gamma)
    throw OracleContractError("oracle output is " + to_string(distance) + " away, allowed " + to_string(gamma));
}

ConditionCheck make_check(Interval lhs, Interval rhs) { return {compare_ge(lhs, rhs), lhs, rhs}; }

}  // namespace

SetSystem identity_oracle(const SetSystem& family, const Rational& /*eps*/) { return family; }

SetSystem exhaustive_compression_oracle(const SetSystem& family, const Rational& eps,
                                        const ExhaustiveOracleOptions& options) {
  if (family.size() > 16) throw InputError("exhaustive compression needs at most 16 sets");
  if (family.universe_size() > 12) throw InputError("exhaustive compression needs a universe of at most 12");
  if (eps < 0) throw InputError("compression error must be non-negative");
  return CompressionSearch(family, eps, options.node_budget).run();
}

bool RecursionTrace::all_checks_pass() const {
  return std::all_of(levels.begin(), levels.end(), [](const RecursionLevel& l) { return l.all_checks_pass(); });
}

Interval kappa0(int w, const Rational& eps, const Rational& c_prime) {
  if (w < 1) throw InputError("kappa0 needs w >= 1");
  if (w == 1) return Interval::point(0.0);
  const Interval lw = log2_of(w);
  return pow(lw * lw / Interval::of(eps), Interval::of(c_prime));
}

RecursionTrace sandwich_recursion(const SetSystem& family, const Rational& eps, const CompressionOracle& oracle,
                                  const RecursionParams& params) {
  if (!core::is_non_trivial(family)) throw InputError("recursion needs a non-trivial family");
  if (eps <= 0 || eps > 1) throw InputError("recursion error must lie in (0, 1]");

  RecursionTrace trace;
  SetSystem current = family;
  int w = family.width();
  Rational eps_k = eps;
  for (int depth = 0;; ++depth) {
    RecursionLevel level;
    level.depth = depth;
    level.w = w;
    level.eps = eps_k;
    level.family = current;
    level.pr_f_zero = failure_probability(current);
    if (w <= 2 || current.empty()) {
      level.base_case = true;
      trace.levels.push_back(std::move(level));
      break;
    }

    level.f1 = filter(current, true, w);
    level.log_w_upper = log2_upper(w);
    level.gamma = eps_k / level.log_w_upper;
    level.eps_next = eps_k - level.gamma;
    level.f2 = oracle(level.f1, level.gamma);
    verify_oracle_answer(level.f1, level.f2, level.gamma);

    std::vector<ElementSet> f3 = filter(current, false, w).sets();
    f3.insert(f3.end(), level.f2.begin(), level.f2.end());
    level.f3 = SetSystem(current.universe_size(), std::move(f3));
    level.f3_constant_true = level.f3.contains(ElementSet());
    level.f4 = filter(level.f3, true, w);
    level.f5 = filter(level.f3, false, w);

    level.pr_f1_zero = failure_probability(level.f1);
    level.pr_f2_zero = failure_probability(level.f2);
    level.pr_f3_zero = failure_probability(level.f3);
    level.pr_f5_zero = failure_probability(level.f5);
    level.oracle_gap = level.pr_f1_zero - level.pr_f2_zero;

    level.chain_f_le_f3_plus_gap = level.pr_f_zero <= level.pr_f3_zero + level.oracle_gap;
    level.chain_gap_le_gamma = level.oracle_gap <= level.gamma;
    level.chain_f3_le_f5 = level.pr_f3_zero <= level.pr_f5_zero;
    level.sandwich_holds = level.pr_f_zero <= level.pr_f5_zero + level.gamma;
    level.identity_holds = level.eps_next + level.gamma == eps_k;

    level.kappa0 = kappa0(w, eps_k, params.c_prime);
    level.kappa0_next = kappa0(w / 2, level.eps_next, params.c_prime);
    level.f2_size_bound =
        pow(Interval::of(level.log_w_upper) / Interval::of(level.gamma), Interval::of(params.c * w));
    level.f4_mass_bound = Interval::point(static_cast<double>(level.f4.size())) /
                          pow(level.kappa0, Interval::of(Rational(w) / 2));

    const bool stop = level.f3_constant_true;
    current = level.f5;
    eps_k = level.eps_next;
    trace.levels.push_back(std::move(level));
    if (stop) break;
    w /= 2;
  }
  return trace;
}

TauReport tau_check(int w, const Rational& eps) {
  if (w < 2) throw InputError("tau check needs w >= 2");
  if (eps <= 0) throw InputError("tau check needs eps > 0");
  TauReport out;
  out.w = w;
  out.half = w / 2;
  // tau(h, eps') <= tau(w, eps) reduces to log h <= log w - 1, i.e. 2h <= w.
  out.holds = 2 * out.half <= w;
  out.equality = 2 * out.half == w;
  const Interval e = Interval::of(eps);
  const Interval lw = log2_of(w);
  out.tau_w = lw / e;
  if (w > 2) {
    const Interval eps_next = e * (Interval::point(1.0) - Interval::point(1.0) / lw);
    out.tau_half = log2_of(out.half) / eps_next;
    out.numeric = compare_ge(out.tau_w, out.tau_half);
  }
  return out;
}

bool Kappa0Report::all_pass() const {
  auto ok = [](const ConditionCheck& c) { return c.verdict == Verdict::Pass || c.verdict == Verdict::NotApplicable; };
  return c_prime_at_least_12c && ok(cond_i) && ok(cond_ii) && ok(cond_iii) && tau.holds;
}

Kappa0Report kappa0_conditions(int w, const Rational& eps, const Rational& c, const Rational& c_prime) {
  if (w < 1) throw InputError("kappa0 conditions need w >= 1");
  if (eps <= 0 || eps >= 1) throw InputError("kappa0 conditions need eps in (0, 1)");
  Kappa0Report out;
  out.w = w;
  out.eps = eps;
  out.c = c;
  out.c_prime = c_prime;
  out.c_prime_at_least_12c = c_prime >= 12 * c;
  const Interval k0 = kappa0(w, eps, c_prime);
  const Interval e = Interval::of(eps);
  if (w <= 2) {
    const Interval inner = Interval::point(std::ldexp(1.0, w)) * log2(Interval::of(1 / eps));
    out.cond_i = make_check(k0, Interval::point(w) * inner * inner);
    out.tau = tau_check(2, eps);
    return out;
  }
  const Interval lw = log2_of(w);
  out.cond_ii = make_check(k0, pow(lw / e, Interval::of(12 * c)));
  const Interval eps_next = e * (Interval::point(1.0) - Interval::point(1.0) / lw);
  const int half = w / 2;
  Interval k0_half = Interval::point(0.0);
  if (half >= 2) {
    const Interval lh = log2_of(half);
    k0_half = pow(lh * lh / eps_next, Interval::of(c_prime));
  }
  out.cond_iii = make_check(k0, k0_half + Interval::point(1.0));
  out.tau = tau_check(w, eps);
  return out;
}

}  // namespace helianthus::eval
