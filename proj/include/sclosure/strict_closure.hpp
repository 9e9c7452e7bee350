#ifndef SCLOSURE_STRICT_CLOSURE_HPP
#define SCLOSURE_STRICT_CLOSURE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <variant>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/exponent.hpp"
#include "sclosure/module.hpp"
#include "sclosure/saturation.hpp"
#include "sclosure/semigroup.hpp"

namespace sclosure {

// The overring S = k[H_S]: a finitely generated semigroup or a saturation.
class Overring {
 public:
  Overring(AffineSemigroup s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  Overring(SaturationDescription s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)

  static Overring normalization_of(const AffineSemigroup& h) { return Overring(saturation(h)); }

  int dim() const {
    return std::visit([](const auto& s) { return s.dim(); }, repr_);
  }
  bool contains(const Exponent& u) const {
    return std::visit([&](const auto& s) { return s.contains(u); }, repr_);
  }
  BoxTable table(const Exponent& box) const {
    return std::visit([&](const auto& s) { return s.table(box); }, repr_);
  }
  const AffineSemigroup* semigroup() const { return std::get_if<AffineSemigroup>(&repr_); }

 private:
  std::variant<AffineSemigroup, SaturationDescription> repr_;
};

inline void check_extension(const AffineSemigroup& r, const Overring& s) {
  if (r.dim() != s.dim()) throw Error(Errc::DimensionMismatch, "base and overring have different dimensions");
  for (const auto& g : r.generators())
    if (!s.contains(g)) throw Error(Errc::NotSubsemigroup, "generator " + g.to_string() + " is not in the overring");
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace detail

// Degree-d piece of S (x)_R S: nodes are pairs (a, d - a) of S-monomials, and
// (a, b) is joined to (a - h, b + h) for every generator h of H_R. A node is
// named by its first component.
class PairGraph {
 public:
  PairGraph(const AffineSemigroup& r, const BoxTable& s_table, const Exponent& degree, bool keep_edges = false)
      : degree_(degree), index_(degree), uf_(0) {
    slot_.assign(static_cast<std::size_t>((degree[0] + 1) * (degree.dim() == 2 ? degree[1] + 1 : 1)), -1);
    index_.for_each_point([&](const Exponent& a) {
      if (s_table(a) && s_table(degree - a)) {
        slot_[index_.index(a)] = static_cast<long>(nodes_.size());
        nodes_.push_back(a);
      }
    });
    uf_ = detail::UnionFind(nodes_.size());
    if (keep_edges) adjacency_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      for (const auto& h : r.generators()) {
        Exponent a = nodes_[i] - h;
        if (!a.nonnegative()) continue;
        long j = slot_[index_.index(a)];
        if (j < 0) continue;
        uf_.unite(i, static_cast<std::size_t>(j));
        if (keep_edges) {
          adjacency_[i].push_back(static_cast<std::size_t>(j));
          adjacency_[static_cast<std::size_t>(j)].push_back(i);
        }
      }
    }
  }

  const Exponent& degree() const { return degree_; }
  std::size_t node_count() const { return nodes_.size(); }
  const std::vector<Exponent>& nodes() const { return nodes_; }

  bool has_node(const Exponent& a) const { return index_.in_box(a) && slot_[index_.index(a)] >= 0; }

  bool connected(const Exponent& a, const Exponent& b) {
    if (!has_node(a) || !has_node(b)) return false;
    return uf_.find(node(a)) == uf_.find(node(b));
  }

  std::size_t component_count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) c += uf_.find(i) == i;
    return c;
  }

  // Shortest path between two nodes; requires keep_edges.
  std::vector<Exponent> trace(const Exponent& from, const Exponent& to) const {
    if (adjacency_.empty() || !has_node(from) || !has_node(to)) return {};
    std::vector<long> prev(nodes_.size(), -1);
    std::queue<std::size_t> q;
    std::size_t s = node(from), t = node(to);
    prev[s] = static_cast<long>(s);
    q.push(s);
    while (!q.empty()) {
      std::size_t x = q.front();
      q.pop();
      if (x == t) break;
      for (std::size_t y : adjacency_[x])
        if (prev[y] < 0) {
          prev[y] = static_cast<long>(x);
          q.push(y);
        }
    }
    if (prev[t] < 0) return {};
    std::vector<Exponent> path;
    for (std::size_t x = t; x != s; x = static_cast<std::size_t>(prev[x])) path.push_back(nodes_[x]);
    path.push_back(nodes_[s]);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  std::size_t node(const Exponent& a) const { return static_cast<std::size_t>(slot_[index_.index(a)]); }

  Exponent degree_;
  BoxTable index_;
  std::vector<long> slot_;
  std::vector<Exponent> nodes_;
  detail::UnionFind uf_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// X^u lies in the strict closure iff (u, 0) and (0, u) are connected in the
// degree-u pair graph.
inline bool tensor_reaches(const AffineSemigroup& r, const Overring& s, const Exponent& u) {
  check_extension(r, s);
  if (u.dim() != r.dim()) throw Error(Errc::DimensionMismatch, "query has wrong dimension");
  if (!s.contains(u)) throw Error(Errc::NotInS, u.to_string() + " is not in the overring");
  BoxTable st = s.table(u);
  PairGraph g(r, st, u);
  return g.connected(u, Exponent::zero(u.dim()));
}

struct ClosureOptions {
  BoxPolicy box;
  bool traces = false;
};

struct ClosureReport {
  MonomialModule closure;  // R* over H_R, generators include 0
  Exponent box;
  bool certified = false;
  std::map<Exponent, std::vector<Exponent>> traces;  // generator -> path of first components

  std::vector<Exponent> generators() const { return closure.nonzero_generators(); }
  bool contains(const Exponent& u) const { return closure.contains(u); }
};

namespace detail {

inline Exponent exact_numerical_box(const AffineSemigroup& r) { return Exponent(std::max<Int>(r.conductor() - 1, 0)); }

// Membership table of R* over the box.
inline BoxTable strict_closure_table(const AffineSemigroup& r, const BoxTable& rt, const BoxTable& st, const Exponent& box) {
  const Exponent zero = Exponent::zero(box.dim());
  return BoxTable::of(box, [&](const Exponent& u) {
    if (!st(u)) return false;
    if (rt(u)) return true;
    PairGraph g(r, st, u);
    return g.connected(u, zero);
  });
}

inline ClosureReport strict_closure_in_box(const AffineSemigroup& r, const Overring& s, const Exponent& box, bool traces) {
  BoxTable rt = r.table(box);
  BoxTable st = s.table(box);
  BoxTable star = strict_closure_table(r, rt, st, box);
  auto gens = minimal_module_generators(r, star);
  MonomialModule m(r, gens);
  bool certified = r.dim() == 1 ? true : shell_certified(r, m.nonzero_generators(), box);
  ClosureReport rep{std::move(m), box, certified, {}};
  if (traces) {
    for (const auto& g : rep.closure.nonzero_generators()) {
      PairGraph pg(r, st, g, true);
      rep.traces[g] = pg.trace(g, Exponent::zero(g.dim()));
    }
  }
  return rep;
}

}  // namespace detail

// Monomial generators of R* over R. Exact for k = 1 (only degrees below the
// conductor of H_R contribute); for k = 2 the report carries the shell
// certificate.
inline ClosureReport strict_closure_monomials(const AffineSemigroup& r, const Overring& s, const ClosureOptions& opt = {}) {
  check_extension(r, s);
  if (r.dim() == 1) return detail::strict_closure_in_box(r, s, detail::exact_numerical_box(r), opt.traces);
  return run_with_box(r, opt.box, [&](const Exponent& box) { return detail::strict_closure_in_box(r, s, box, opt.traces); });
}

struct StrictnessVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Exponent> witness;  // least graded-lex element of R* \ R
  ClosureReport report;
};

inline const char* verdict_name(StrictnessVerdict::Kind k) {
  switch (k) {
    case StrictnessVerdict::Kind::Yes: return "yes";
    case StrictnessVerdict::Kind::No: return "no";
    case StrictnessVerdict::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

inline StrictnessVerdict is_strictly_closed_in(const AffineSemigroup& r, const Overring& s, const ClosureOptions& opt = {}) {
  ClosureReport rep = strict_closure_monomials(r, s, opt);
  auto gens = rep.generators();
  if (!gens.empty()) {
    Exponent w = *std::min_element(gens.begin(), gens.end(), GradedLexLess{});
    return {StrictnessVerdict::Kind::No, w, std::move(rep)};
  }
  auto kind = rep.certified ? StrictnessVerdict::Kind::Yes : StrictnessVerdict::Kind::Unknown;
  return {kind, std::nullopt, std::move(rep)};
}

// a * e_i - b * e_j in Ker(eps), with a + f_i = b + f_j = degree.
struct SyzygyGenerator {
  Exponent a;
  std::size_t i = 0;
  Exponent b;
  std::size_t j = 0;
  Exponent degree;

  friend bool operator==(const SyzygyGenerator&, const SyzygyGenerator&) = default;
};

namespace detail {

inline std::vector<Exponent> normalized_module_gens(const AffineSemigroup& r, std::vector<Exponent> f) {
  for (const auto& g : f)
    if (g.dim() != r.dim()) throw Error(Errc::DimensionMismatch, "module generator has wrong dimension");
  sort_lex(f);
  if (f.empty() || !f.front().is_zero()) throw Error(Errc::ModuleMismatch, "module generators must contain 0 as f_0");
  return f;
}

// Nodes (i, a) of the fiber of eps over a degree; a = degree - f_i in H_R.
struct Fiber {
  std::vector<std::pair<std::size_t, Exponent>> nodes;
};

inline Fiber fiber(const std::vector<Exponent>& f, const BoxTable& rt, const Exponent& d) {
  Fiber fb;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Exponent a = d - f[i];
    if (a.nonnegative() && rt(a)) fb.nodes.emplace_back(i, a);
  }
  return fb;
}

}  // namespace detail

// Exact degree bound for k = 1: beyond it every fiber node is a shift of a
// lower fiber by the multiplicity, so no new syzygies appear.
inline Exponent numerical_kernel_box(const AffineSemigroup& r, const std::vector<Exponent>& f) {
  Int fmax = 0;
  for (const auto& g : f) fmax = std::max(fmax, g[0]);
  return Exponent(r.conductor() + r.multiplicity() + fmax);
}

// A generating set of Ker(eps: R^{n+1} -> S, e_i -> X^{f_i}) up to the box.
// Per degree, fiber nodes already joined by lower generators shifted by H_R
// are merged first; one syzygy is emitted per remaining component, joining
// it to the component of the least node.
inline std::vector<SyzygyGenerator> kernel_generators(const AffineSemigroup& r, const Overring& s, std::vector<Exponent> f,
                                                      const std::optional<Exponent>& box_opt = std::nullopt) {
  check_extension(r, s);
  f = detail::normalized_module_gens(r, std::move(f));
  Exponent box = box_opt ? *box_opt : (r.dim() == 1 ? numerical_kernel_box(r, f) : default_box(r));
  BoxTable rt = r.table(box);
  {
    BoxTable mt = MonomialModule(r, f).table(box, rt);
    BoxTable st = s.table(box);
    bool same = true;
    st.for_each_point([&](const Exponent& u) { same = same && (mt(u) == st(u)); });
    if (!same) throw Error(Errc::ModuleMismatch, "module generators do not present the overring in the box");
  }
  std::vector<SyzygyGenerator> out;
  for (const auto& d : box_points_graded(box)) {
    detail::Fiber fb = detail::fiber(f, rt, d);
    const std::size_t n = fb.nodes.size();
    if (n < 2) continue;
    detail::UnionFind uf(n);
    for (const auto& h : r.generators()) {
      long first = -1;
      for (std::size_t k = 0; k < n; ++k) {
        Exponent a = fb.nodes[k].second - h;
        if (!a.nonnegative() || !rt(a)) continue;
        if (first < 0)
          first = static_cast<long>(k);
        else
          uf.unite(static_cast<std::size_t>(first), k);
      }
    }
    // Component representatives are the first node of each component.
    std::vector<std::size_t> reps;
    for (std::size_t k = 0; k < n; ++k) {
      bool seen = false;
      for (std::size_t rep : reps) seen = seen || uf.find(rep) == uf.find(k);
      if (!seen) reps.push_back(k);
    }
    for (std::size_t c = 1; c < reps.size(); ++c) {
      const auto& [i, a] = fb.nodes[reps[0]];
      const auto& [j, b] = fb.nodes[reps[c]];
      out.push_back(SyzygyGenerator{a, i, b, j, d});
    }
  }
  return out;
}

// Whether target lies in the R-span of gens: its two fiber nodes must be joined
// by the shifts gens + h, h in H_R.
inline bool syzygies_generate(const AffineSemigroup& r, const std::vector<Exponent>& f,
                              const std::vector<SyzygyGenerator>& gens, const SyzygyGenerator& target) {
  std::vector<Exponent> fs = f;
  sort_lex(fs);
  const Exponent& d = target.degree;
  BoxTable rt = r.table(d);
  detail::Fiber fb = detail::fiber(fs, rt, d);
  auto find_node = [&](std::size_t i, const Exponent& a) -> long {
    for (std::size_t k = 0; k < fb.nodes.size(); ++k)
      if (fb.nodes[k].first == i && fb.nodes[k].second == a) return static_cast<long>(k);
    return -1;
  };
  long s = find_node(target.i, target.a), t = find_node(target.j, target.b);
  if (s < 0 || t < 0) return false;
  detail::UnionFind uf(fb.nodes.size());
  for (const auto& g : gens) {
    Exponent shift = d - g.degree;
    if (!shift.nonnegative() || !rt(shift)) continue;
    long x = find_node(g.i, g.a + shift), y = find_node(g.j, g.b + shift);
    if (x >= 0 && y >= 0) uf.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
  }
  return uf.find(static_cast<std::size_t>(s)) == uf.find(static_cast<std::size_t>(t));
}

// R + ideal-style bound as a module over H_R.
struct BoundReport {
  MonomialModule module;
  Exponent box;
  bool certified = false;
  std::vector<Exponent> ideal;  // minimal generators of J as an ideal of S (thm26 only)
  std::vector<Exponent> module_gens_of_s;
  std::vector<SyzygyGenerator> syzygies;

  bool contains(const Exponent& u) const { return module.contains(u); }
};

namespace detail {

template <class Compute>
BoundReport bound_with_box(const AffineSemigroup& r, const BoxPolicy& policy, Compute&& compute) {
  if (r.dim() == 1) return compute(exact_numerical_box(r));
  return run_with_box(r, policy, compute);
}

}  // namespace detail

// R + J S, J generated by the first-row entries (e_0 coefficients) of the
// syzygies presenting S over R.
inline BoundReport thm26_bound(const AffineSemigroup& r, const Overring& s, const BoxPolicy& policy = {}) {
  check_extension(r, s);
  auto compute = [&](const Exponent& mbox) {
    // Module generators of S and the kernel need room beyond the module box.
    Exponent sbox = r.dim() == 1 ? Exponent(r.conductor() + r.multiplicity()) : mbox;
    BoxTable st_s = s.table(sbox);
    auto f = minimal_module_generators(r, st_s);
    Exponent kbox = r.dim() == 1 ? numerical_kernel_box(r, f) : mbox;
    auto syz = kernel_generators(r, s, f, kbox);
    std::vector<Exponent> first_row;
    for (const auto& g : syz) {
      if (g.i == 0) first_row.push_back(g.a);
      if (g.j == 0) first_row.push_back(g.b);
    }
    sort_lex(first_row);
    std::vector<Exponent> ideal;
    for (const auto& u : first_row) {
      bool redundant = false;
      for (const auto& v : first_row)
        if (v != u && (u - v).nonnegative() && s.contains(u - v)) redundant = true;
      if (!redundant) ideal.push_back(u);
    }
    BoxTable rt = r.table(mbox);
    BoxTable st = s.table(mbox);
    BoxTable members = BoxTable::of(mbox, [&](const Exponent& u) {
      if (rt(u)) return true;
      for (const auto& j : ideal) {
        Exponent d = u - j;
        if (d.nonnegative() && st(d)) return true;
      }
      return false;
    });
    MonomialModule m(r, minimal_module_generators(r, members));
    bool ok = r.dim() == 1 ? true : shell_certified(r, m.nonzero_generators(), mbox);
    return BoundReport{std::move(m), mbox, ok, std::move(ideal), std::move(f), std::move(syz)};
  };
  return detail::bound_with_box(r, policy, compute);
}

// R + M S with M the graded maximal ideal of R.
inline BoundReport prop22_bound(const AffineSemigroup& r, const Overring& s, const BoxPolicy& policy = {}) {
  check_extension(r, s);
  auto compute = [&](const Exponent& box) {
    BoxTable rt = r.table(box);
    BoxTable st = s.table(box);
    BoxTable members = BoxTable::of(box, [&](const Exponent& u) {
      if (rt(u)) return true;
      for (const auto& h : r.generators()) {
        Exponent d = u - h;
        if (d.nonnegative() && st(d)) return true;
      }
      return false;
    });
    MonomialModule m(r, minimal_module_generators(r, members));
    bool ok = r.dim() == 1 ? true : shell_certified(r, m.nonzero_generators(), box);
    return BoundReport{std::move(m), box, ok, {}, {}, {}};
  };
  return detail::bound_with_box(r, policy, compute);
}

struct MaximalIdealCheck {
  bool holds = false;
  bool exact = false;  // false: k = 2, only checked within the box
};

// Whether m S is contained in R, which makes R strictly closed in S.
inline MaximalIdealCheck cor23_check(const AffineSemigroup& r, const Overring& s, const std::optional<Exponent>& box_opt = std::nullopt) {
  check_extension(r, s);
  if (r.dim() == 1) {
    const Int c = r.conductor();
    for (const auto& h : r.generators())
      for (Int v = 0; v + h[0] < c; ++v)
        if (s.contains(Exponent(v)) && !r.contains(Exponent(v + h[0]))) return {false, true};
    return {true, true};
  }
  Exponent box = box_opt ? *box_opt : default_box(r);
  Exponent big = box + Exponent::diagonal(2, r.max_coordinate());
  BoxTable rt = r.table(big);
  BoxTable st = s.table(box);
  bool holds = true;
  st.for_each_point([&](const Exponent& v) {
    if (!holds || !st(v)) return;
    for (const auto& h : r.generators())
      if (!rt(v + h)) holds = false;
  });
  return {holds, false};
}

// f_i + f_j in H_R for all nonzero module generators: a sufficient
// condition for strict closedness.
inline bool cor27_check(const AffineSemigroup& r, const std::vector<Exponent>& f) {
  std::vector<Exponent> nz;
  for (const auto& g : f)
    if (!g.is_zero()) nz.push_back(g);
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i; j < nz.size(); ++j)
      if (!r.contains(nz[i] + nz[j])) return false;
  return true;
}

}  // namespace sclosure

#endif  // SCLOSURE_STRICT_CLOSURE_HPP
