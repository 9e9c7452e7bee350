#ifndef SCLOSURE_WEAK_ARF_HPP
#define SCLOSURE_WEAK_ARF_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/exponent.hpp"
#include "sclosure/module.hpp"
#include "sclosure/polynomial.hpp"
#include "sclosure/saturation.hpp"
#include "sclosure/semigroup.hpp"
#include "sclosure/strict_closure.hpp"

namespace sclosure {

// One iterate R_n of the weakly Arf tower, as the monomial semigroup of the
// ring generated by R and the monomials acquired so far. Each step returns a
// new state.
class RingState {
 public:
  explicit RingState(AffineSemigroup base) : base_(base), ring_(std::move(base)) {}

  const AffineSemigroup& base() const { return base_; }
  const AffineSemigroup& ring() const { return ring_; }
  int iteration() const { return iteration_; }

  bool contains(const Exponent& u) const { return ring_.contains(u); }

  // Module generators over the base that are not in the base, within the box.
  std::vector<Exponent> extra(const Exponent& box) const {
    BoxTable t = ring_.table(box);
    std::vector<Exponent> out;
    BoxTable bt = base_.table(box);
    for (const auto& g : minimal_module_generators(base_, t))
      if (!bt(g)) out.push_back(g);
    return out;
  }

  // Ring generated by the current one and `added`; bumps the round counter.
  RingState with_added(const std::vector<Exponent>& added) const {
    if (added.empty()) return *this;
    std::vector<Exponent> gens = ring_.generators();
    gens.insert(gens.end(), added.begin(), added.end());
    RingState next(*this);
    next.ring_ = AffineSemigroup(base_.dim(), std::move(gens));
    next.iteration_ = iteration_ + 1;
    return next;
  }

 private:
  AffineSemigroup base_;
  AffineSemigroup ring_;
  int iteration_ = 0;
};

// The box on which k = 1 monomial closures are exact.
inline Exponent numerical_state_box(const AffineSemigroup& h) { return Exponent(std::max<Int>(h.conductor() - 1, 0)); }

// One round: adjoin every b + c - a for monomials a, b, c of the state in the
// box with b - a and c - a in the saturation.
inline RingState monomial_weak_arf_step(const RingState& state, const SaturationDescription& sat, const Exponent& box) {
  BoxTable mt = state.ring().table(box);
  BoxTable st = sat.table(box);
  std::vector<Exponent> members = mt.members();
  std::set<Exponent> added;
  std::vector<Exponent> over;
  for (const auto& a : members) {
    over.clear();
    for (const auto& b : members) {
      Exponent d = b - a;
      if (d.nonnegative() && st(d)) over.push_back(b);
    }
    for (std::size_t i = 0; i < over.size(); ++i)
      for (std::size_t j = i; j < over.size(); ++j) {
        Exponent v = over[i] + over[j] - a;
        if (mt.in_box(v) && !mt(v)) added.insert(v);
      }
  }
  return state.with_added(std::vector<Exponent>(added.begin(), added.end()));
}

struct WeakArfOptions {
  BoxPolicy box;
  int round_cap = 32;
};

struct WeakArfResult {
  RingState state;
  Exponent box;
  bool certified = false;
  int rounds = 0;

  std::vector<Exponent> extra() const { return state.extra(box); }
};

namespace detail {

inline WeakArfResult close_in_box(RingState state, const SaturationDescription& sat, const Exponent& box, int round_cap) {
  int rounds = 0;
  for (;;) {
    RingState next = monomial_weak_arf_step(state, sat, box);
    if (next.iteration() == state.iteration()) break;
    if (++rounds > round_cap) throw Error(Errc::RoundCapExceeded, "monomial closure did not stabilize");
    state = std::move(next);
  }
  bool certified = state.base().dim() == 1 ? true : shell_certified(state.base(), state.extra(box), box);
  return WeakArfResult{std::move(state), box, certified, rounds};
}

}  // namespace detail

// Monomial lower bound for the weakly Arf closure: exact for k = 1 (where it
// is the Arf closure).
inline WeakArfResult weak_arf_monomial_closure(const AffineSemigroup& h, const WeakArfOptions& opt = {}) {
  const SaturationDescription sat = saturation(h);
  if (h.dim() == 1) return detail::close_in_box(RingState(h), sat, numerical_state_box(h), opt.round_cap);
  return run_with_box(h, opt.box, [&](const Exponent& box) { return detail::close_in_box(RingState(h), sat, box, opt.round_cap); });
}

// Drops every term whose exponent already lies in the state.
template <class F>
SparsePolynomial<F> reduce_mod_state(const SparsePolynomial<F>& p, const RingState& state) {
  SparsePolynomial<F> r;
  for (const auto& [e, c] : p.terms())
    if (!state.contains(e)) r.add_term(e, c);
  return r;
}

template <class F>
struct Witness {
  SparsePolynomial<F> x;
  SparsePolynomial<F> y;
  SparsePolynomial<F> z;
};

template <class F>
struct WitnessOutcome {
  enum class Kind { Added, Unchanged, MixedResidual };
  Kind kind = Kind::Unchanged;
  RingState state;
  std::optional<Exponent> added;
  SparsePolynomial<F> residual;
};

// Adjoins yz/x. Requires x, y, z in the state and y/x, z/x over the
// normalization; the quotient is reduced modulo the state and a single
// surviving monomial is added.
template <class F>
WitnessOutcome<F> witness_apply(const Witness<F>& w, const RingState& state, const SaturationDescription& sat) {
  if (w.x.is_zero()) throw Error(Errc::DivisionByZero, "witness x is zero");
  for (const auto* p : {&w.x, &w.y, &w.z})
    for (const auto& e : p->support())
      if (!state.contains(e)) throw Error(Errc::WitnessNotInRing, "monomial " + e.to_string() + " is not in the current ring");
  auto qy = exact_divide(w.y, w.x);
  auto qz = exact_divide(w.z, w.x);
  if (!qy || !qz) throw Error(Errc::DivisionFailed, "x does not divide y and z");
  if (!support_in_saturation(*qy, sat) || !support_in_saturation(*qz, sat))
    throw Error(Errc::WitnessNotOverNormalization, "y/x or z/x is not in the normalization");
  auto q = exact_divide(w.y * w.z, w.x);
  if (!q) throw Error(Errc::DivisionFailed, "x does not divide yz");
  SparsePolynomial<F> residual = reduce_mod_state(*q, state);
  WitnessOutcome<F> out{WitnessOutcome<F>::Kind::Unchanged, state, std::nullopt, residual};
  if (residual.size() == 1) {
    Exponent u = residual.terms().begin()->first;
    out.kind = WitnessOutcome<F>::Kind::Added;
    out.added = u;
    out.state = state.with_added({u});
  } else if (residual.size() > 1) {
    out.kind = WitnessOutcome<F>::Kind::MixedResidual;
  }
  return out;
}

template <class F>
struct Comparison {
  bool equal = false;
  std::vector<Exponent> gap;      // minimal elements of R* \ lower bound in the box
  std::vector<Exponent> unsound;  // lower-bound members outside R*; always empty
  Exponent box;
  bool certified = false;
  RingState lower;
  ClosureReport strict;
  std::vector<WitnessOutcome<F>> outcomes;
};

// Monomial closure plus witnesses against the strict closure of H in its
// normalization, compared on the strict closure's box.
template <class F>
Comparison<F> compare_weak_arf_vs_strict(const AffineSemigroup& h, const std::vector<Witness<F>>& witnesses,
                                         const WeakArfOptions& opt = {}) {
  const SaturationDescription sat = saturation(h);
  ClosureOptions copt;
  copt.box = opt.box;
  ClosureReport strict = strict_closure_monomials(h, Overring(sat), copt);
  const Exponent box = strict.box;
  WeakArfResult lower = detail::close_in_box(RingState(h), sat, box, opt.round_cap);
  RingState state = lower.state;
  std::vector<WitnessOutcome<F>> outcomes;
  for (const auto& w : witnesses) {
    WitnessOutcome<F> o = witness_apply(w, state, sat);
    if (o.kind == WitnessOutcome<F>::Kind::Added) state = detail::close_in_box(o.state, sat, box, opt.round_cap).state;
    outcomes.push_back(std::move(o));
  }
  BoxTable star = strict.closure.table(box);
  BoxTable low = state.ring().table(box);
  std::vector<Exponent> diff, unsound;
  star.for_each_point([&](const Exponent& u) {
    if (star(u) && !low(u)) diff.push_back(u);
    if (low(u) && !star(u)) unsound.push_back(u);
  });
  Comparison<F> c{diff.empty() && unsound.empty(), minimal_under(h, diff), unsound, box, strict.certified,
                  state, std::move(strict), std::move(outcomes)};
  return c;
}

}  // namespace sclosure

#endif  // SCLOSURE_WEAK_ARF_HPP
