#ifndef SCLOSURE_MODULE_HPP
#define SCLOSURE_MODULE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/exponent.hpp"
#include "sclosure/saturation.hpp"
#include "sclosure/semigroup.hpp"

namespace sclosure {

// Monomial module over a base semigroup H_R: { g_j + h : h in H_R }.
class MonomialModule {
 public:
  MonomialModule(AffineSemigroup base, std::vector<Exponent> gens) : base_(std::move(base)), gens_(std::move(gens)) {
    for (const auto& g : gens_) {
      if (g.dim() != base_.dim()) throw Error(Errc::DimensionMismatch, "module generator " + g.to_string() + " has wrong dimension");
      if (!g.nonnegative()) throw Error(Errc::InvalidInput, "module generator " + g.to_string() + " has a negative coordinate");
    }
    sort_lex(gens_);
  }

  const AffineSemigroup& base() const { return base_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  std::vector<Exponent> nonzero_generators() const {
    std::vector<Exponent> out;
    for (const auto& g : gens_)
      if (!g.is_zero()) out.push_back(g);
    return out;
  }

  bool contains(const Exponent& u) const {
    for (const auto& g : gens_) {
      Exponent r = u - g;
      if (r.nonnegative() && base_.contains(r)) return true;
    }
    return false;
  }

  BoxTable table(const Exponent& box) const { return table(box, base_.table(box)); }

  BoxTable table(const Exponent& box, const BoxTable& base_table) const {
    return BoxTable::of(box, [&](const Exponent& u) {
      for (const auto& g : gens_) {
        Exponent r = u - g;
        if (r.nonnegative() && base_table(r)) return true;
      }
      return false;
    });
  }

 private:
  AffineSemigroup base_;
  std::vector<Exponent> gens_;
};

// Minimal generators of a set closed under +H within the box: members u with
// u - h outside the set for every generator h.
inline std::vector<Exponent> minimal_module_generators(const AffineSemigroup& base, const BoxTable& members) {
  std::vector<Exponent> out;
  members.for_each_point([&](const Exponent& u) {
    if (!members(u)) return;
    for (const auto& h : base.generators()) {
      Exponent r = u - h;
      if (r.nonnegative() && members(r)) return;
    }
    out.push_back(u);
  });
  return out;
}

// Minimal elements of an arbitrary finite set under u <= v iff v - u in H.
inline std::vector<Exponent> minimal_under(const AffineSemigroup& base, std::vector<Exponent> set) {
  sort_lex(set);
  std::vector<Exponent> out;
  for (const auto& u : set) {
    bool minimal = true;
    for (const auto& v : set) {
      if (v == u) continue;
      Exponent d = u - v;
      if (d.nonnegative() && base.contains(d)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  return out;
}

struct BoxPolicy {
  std::optional<Exponent> box;  // explicit box; disables doubling
  int max_doublings = 10;
};

inline Exponent default_box(const AffineSemigroup& h) { return Exponent::diagonal(h.dim(), 2 * h.max_coordinate_sum()); }

inline Int shell_width(const AffineSemigroup& h) { return h.max_coordinate(); }

// The shell is the band of width shell_width at the outer faces of the box.
// The certificate holds when no minimal generator lies on the shell, i.e.
// every shell member is already covered by the interior generators plus H.
inline bool shell_certified(const AffineSemigroup& base, const std::vector<Exponent>& gens, const Exponent& box) {
  Exponent inner = box - Exponent::diagonal(box.dim(), shell_width(base));
  for (const auto& g : gens) {
    if (!g.nonnegative() || !inner.nonnegative() || !g.dominated_by(inner)) return false;
  }
  return true;
}

// Runs compute(box) on the explicit box, or on the default box doubled until
// the report is certified. Returns the last report either way.
template <class Compute>
auto run_with_box(const AffineSemigroup& base, const BoxPolicy& policy, Compute&& compute) {
  if (policy.box) return compute(*policy.box);
  Exponent box = default_box(base);
  auto report = compute(box);
  for (int i = 0; i < policy.max_doublings && !report.certified; ++i) {
    box = 2 * box;
    report = compute(box);
  }
  return report;
}

struct ModuleReport {
  MonomialModule module;
  Exponent box;
  bool certified = false;
};

// The saturation as a module over H: generators {0, g_1, ..., g_m}.
inline ModuleReport module_generators_of_saturation(const AffineSemigroup& h, const BoxPolicy& policy = {}) {
  const SaturationDescription sat = saturation(h);
  if (h.dim() == 1) {
    // N over H is generated by 0, ..., m - 1.
    Exponent box(h.conductor() + h.multiplicity());
    BoxTable t = sat.table(box);
    return ModuleReport{MonomialModule(h, minimal_module_generators(h, t)), box, true};
  }
  auto compute = [&](const Exponent& box) {
    BoxTable t = sat.table(box);
    auto gens = minimal_module_generators(h, t);
    bool ok = shell_certified(h, gens, box);
    return ModuleReport{MonomialModule(h, std::move(gens)), box, ok};
  };
  ModuleReport r = run_with_box(h, policy, compute);
  if (!r.certified)
    throw Error(Errc::BoxTooSmall, "shell certificate failed at box " + r.box.to_string());
  return r;
}

}  // namespace sclosure

#endif  // SCLOSURE_MODULE_HPP
