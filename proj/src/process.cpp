#include "helianthus/process.hpp"

#include "helianthus/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace helianthus::process {

namespace {

bool disjoint_tuple(const SetSystem& family, const std::vector<std::size_t>& tuple) {
  ElementSet used;
  for (const std::size_t i : tuple) {
    if (family[i].intersects(used)) return false;
    used = used | family[i];
  }
  return true;
}

}  // namespace

const char* to_string(HaltCause cause) {
  return cause == HaltCause::MassBelowHalf ? "mass_below_half" : "no_tuple";
}

TupleFinder exact_finder() {
  return [](const SetSystem& family, const std::vector<Rational>& mass, int r) {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < family.size(); ++i)
      if (mass[i] > 0) live.push_back(i);
    std::vector<std::size_t> chosen;
    const auto need = static_cast<std::size_t>(r);
    std::function<bool(std::size_t, ElementSet)> descend = [&](std::size_t from, ElementSet used) {
      if (chosen.size() == need) return true;
      for (std::size_t k = from; k + (need - chosen.size()) <= live.size(); ++k) {
        const ElementSet s = family[live[k]];
        if (s.intersects(used)) continue;
        chosen.push_back(live[k]);
        if (descend(k + 1, used | s)) return true;
        chosen.pop_back();
      }
      return false;
    };
    return descend(0, ElementSet()) ? std::optional(chosen) : std::nullopt;
  };
}

Rational ProcessTrace::delta_total() const {
  Rational sum;
  for (const auto& it : iterations) sum += it.delta;
  return sum;
}

ProcessTrace run_extraction(const WeightedFamily& d, int r, const TupleFinder& finder) {
  if (r < 1) throw InputError("extraction process needs r >= 1");
  if (!d.is_distribution()) throw InputError("extraction process needs a probability distribution");
  const SetSystem& family = d.family();
  const Rational half(1, 2);

  ProcessTrace trace;
  trace.r = r;
  trace.initial = d;
  std::vector<Rational> mass = d.weights();
  Rational total = d.total();
  while (true) {
    if (total < half) {
      trace.halt = HaltCause::MassBelowHalf;
      break;
    }
    auto tuple = finder(family, mass, r);
    if (!tuple) {
      trace.halt = HaltCause::NoTuple;
      break;
    }
    std::sort(tuple->begin(), tuple->end());
    if (tuple->size() != static_cast<std::size_t>(r) || std::adjacent_find(tuple->begin(), tuple->end()) != tuple->end() ||
        tuple->back() >= family.size() || !disjoint_tuple(family, *tuple) ||
        std::any_of(tuple->begin(), tuple->end(), [&](std::size_t i) { return mass[i] <= 0; }))
      throw std::logic_error("tuple finder returned an invalid tuple");

    Iteration it;
    it.tuple = *tuple;
    it.delta = mass[tuple->front()];
    for (const std::size_t i : *tuple) {
      it.delta = std::min(it.delta, mass[i]);
      it.union_set = it.union_set | family[i];
    }
    it.mass_before = total;
    for (const std::size_t i : *tuple) mass[i] -= it.delta;
    total -= it.delta * r;
    it.mass_after = total;
    trace.iterations.push_back(std::move(it));
  }
  trace.final = WeightedFamily(family, mass);
  return trace;
}

StarSystem build_star(const ProcessTrace& trace) {
  if (trace.iterations.empty()) throw InputError("star system needs at least one iteration");
  StarSystem star;
  std::vector<ElementSet> members;
  for (const auto& it : trace.iterations) {
    const auto pos = std::find(members.begin(), members.end(), it.union_set);
    const auto index = static_cast<std::size_t>(pos - members.begin());
    if (pos == members.end()) {
      members.push_back(it.union_set);
      star.raw_mass.emplace_back(0);
    }
    star.raw_mass[index] += it.delta;
    star.member_of_iteration.push_back(index);
    star.delta_total += it.delta;
  }
  star.family = SetSystem(trace.initial.family().universe_size(), members);
  std::vector<Rational> normalised;
  for (const auto& m : star.raw_mass) normalised.push_back(m / star.delta_total);
  star.distribution = WeightedFamily(star.family, std::move(normalised));
  return star;
}

StarOutcome analyze_star(const StarSystem& star, const WeightedFamily& original, const ProcessTrace& trace,
                         const Rational& beta) {
  if (beta <= 0) throw InputError("star analysis needs beta > 0");
  const auto cert = regular::is_kappa_regular(star.distribution, beta);
  const auto* violation = std::get_if<regular::Violation>(&cert);
  if (violation == nullptr) return RegularReport{beta};

  const SetSystem& family = original.family();
  const int r = trace.r;
  StarAnalysis out;
  out.t = violation->t;
  out.t_size = out.t.size();
  out.star_mass = violation->mass;

  for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
    const auto& it = trace.iterations[i];
    if (!out.t.subset_of(it.union_set)) continue;
    std::size_t best = 0;
    for (std::size_t j = 1; j < it.tuple.size(); ++j)
      if ((out.t & family[it.tuple[j]]).size() > (out.t & family[it.tuple[best]]).size()) best = j;
    out.iterations_above_t.push_back(i);
    out.j.push_back(best);
    out.t_parts.push_back(out.t & family[it.tuple[best]]);
    out.delta_above_t += it.delta;
  }

  // T* collects the most extracted mass among the pieces T_i; ties go to the
  // lexicographically first piece.
  std::vector<std::pair<ElementSet, Rational>> pieces;
  for (std::size_t k = 0; k < out.t_parts.size(); ++k) {
    const Rational& delta = trace.iterations[out.iterations_above_t[k]].delta;
    auto pos = std::find_if(pieces.begin(), pieces.end(), [&](const auto& p) { return p.first == out.t_parts[k]; });
    if (pos == pieces.end())
      pieces.emplace_back(out.t_parts[k], delta);
    else
      pos->second += delta;
  }
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  out.t_star = pieces.front().first;
  out.delta_at_t_star = pieces.front().second;
  for (std::size_t k = 0; k < out.t_parts.size(); ++k) {
    const auto& it = trace.iterations[out.iterations_above_t[k]];
    if (out.t_star.subset_of(family[it.tuple[out.j[k]]])) out.delta_t_star_inside += it.delta;
  }
  out.original_mass_above_t_star = regular::subset_mass(original, out.t_star);

  const auto t = static_cast<unsigned>(out.t_size);
  const Rational delta = star.delta_total;
  const Rational two_beta_t = helianthus::pow(2 * beta, t);
  out.a_star_violation = out.delta_above_t >= delta / helianthus::pow(beta, t);
  out.b_majority = out.delta_at_t_star * helianthus::pow(Rational(2), t) >= out.delta_above_t;
  out.c_t_star_size = r * out.t_star.size() >= out.t_size;

  // Telescoping: the mass removed from S over the iterations where S was the
  // chosen piece never exceeds D(S).
  std::vector<Rational> removed(family.size());
  for (std::size_t k = 0; k < out.t_parts.size(); ++k) {
    const auto& it = trace.iterations[out.iterations_above_t[k]];
    removed[it.tuple[out.j[k]]] += it.delta;
  }
  out.d_telescoping = true;
  for (std::size_t s = 0; s < family.size(); ++s)
    if (removed[s] > original.weight(s)) out.d_telescoping = false;

  out.chain_holds = out.original_mass_above_t_star >= out.delta_t_star_inside &&
                    out.delta_t_star_inside >= delta / two_beta_t;
  out.base_bound = 2 * r * two_beta_t;
  out.chain_unit_holds = out.original_mass_above_t_star * out.base_bound >= 1;
  out.eta_cap = 2 * r * helianthus::pow(2 * beta, static_cast<unsigned>(r));
  if (!out.t_star.empty()) {
    const Interval inv = Interval::point(1.0) / Interval::point(out.t_star.size());
    out.kappa_cap = pow(Interval::of(out.base_bound), inv);
    if (out.original_mass_above_t_star > 0)
      out.kappa_from_d = pow(Interval::of(1 / out.original_mass_above_t_star), inv);
  }
  return out;
}

Rational eta_bound(int r, const Rational& beta) {
  if (r < 1) throw InputError("eta needs r >= 1");
  return r * helianthus::pow(Rational(2), static_cast<unsigned>(r + 1)) * helianthus::pow(beta, static_cast<unsigned>(r));
}

Rational power_of_two_cascade(int r, const std::map<int, Rational>& eta) {
  if (r < 2) throw InputError("cascade needs r >= 2");
  const int s = static_cast<int>(std::bit_ceil(static_cast<unsigned>(r)));
  Rational best;
  bool first = true;
  Rational factor = 1;
  for (int part = s / 2; part >= 1; part /= 2) {
    const auto it = eta.find(part);
    if (it == eta.end()) throw InputError("cascade is missing eta at " + std::to_string(part));
    const Rational term = factor * it->second;
    if (first || term > best) best = term;
    first = false;
    factor *= 2;
  }
  return best;
}

MainBoundReport main_theorem_bound(int w, int r, const Rational& c) {
  if (w < 2 || r < 1 || c < 0) throw InputError("main bound needs w >= 2, r >= 1, c >= 0");
  MainBoundReport out;
  out.log_w = log2(Interval::point(w));
  if (std::has_single_bit(static_cast<unsigned>(w))) out.log_w = Interval::point(std::countr_zero(static_cast<unsigned>(w)));
  const long wr = static_cast<long>(w) * r;
  out.log_wr = std::has_single_bit(static_cast<unsigned long>(wr))
                   ? Interval::point(std::countr_zero(static_cast<unsigned long>(wr)))
                   : log2(Interval::point(static_cast<double>(wr)));
  out.prefactor = r * helianthus::pow(Rational(2), static_cast<unsigned>(r + 1));
  out.bound = Interval::of(out.prefactor) * pow(out.log_wr, Interval::of(c * r));
  if (out.log_w.lo > 1.0) out.c_r = log2(out.bound) / log2(out.log_w);
  out.size_threshold = pow(out.bound, static_cast<unsigned>(w));
  return out;
}

}  // namespace helianthus::process
