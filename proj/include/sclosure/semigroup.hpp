#ifndef SCLOSURE_SEMIGROUP_HPP
#define SCLOSURE_SEMIGROUP_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/exponent.hpp"

namespace sclosure {

namespace detail {

// Membership table of the semigroup generated by gens over [0, box]; entries
// are filled in lexicographic order so u - g is always decided before u.
inline BoxTable generated_table(const std::vector<Exponent>& gens, const Exponent& box) {
  BoxTable t(box);
  t.for_each_point([&](const Exponent& u) {
    if (u.is_zero()) {
      t.set(u, true);
      return;
    }
    for (const auto& g : gens) {
      Exponent r = u - g;
      if (r.nonnegative() && t(r)) {
        t.set(u, true);
        return;
      }
    }
  });
  return t;
}

}  // namespace detail

// Finitely generated subsemigroup of N^k (k = 1 or 2). Generators are
// minimalized on construction and stored lexicographically sorted.
class AffineSemigroup {
 public:
  AffineSemigroup(int dim, std::vector<Exponent> gens) : dim_(dim) {
    if (dim != 1 && dim != 2) throw Error(Errc::DimensionMismatch, "dimension must be 1 or 2");
    std::vector<Exponent> clean;
    for (const auto& g : gens) {
      if (g.dim() != dim) throw Error(Errc::DimensionMismatch, "generator " + g.to_string() + " has wrong dimension");
      if (!g.nonnegative()) throw Error(Errc::InvalidInput, "generator " + g.to_string() + " has a negative coordinate");
      if (!g.is_zero()) clean.push_back(g);
    }
    if (clean.empty()) throw Error(Errc::EmptyGenerators, "at least one nonzero generator is required");
    sort_lex(clean);
    if (dim == 1) {
      init_numerical(clean);
    } else {
      init_planar(clean);
    }
  }

  static AffineSemigroup numerical(const std::vector<Int>& gens) {
    std::vector<Exponent> e;
    for (Int g : gens) e.emplace_back(g);
    return AffineSemigroup(1, std::move(e));
  }

  static AffineSemigroup naturals() { return numerical({1}); }

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }

  // k = 1 invariants.
  Int multiplicity() const { return gens_.front()[0]; }
  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  const std::vector<Int>& apery() const { return apery_; }

  bool contains(const Exponent& u) const {
    if (u.dim() != dim_) throw Error(Errc::DimensionMismatch, "query " + u.to_string() + " has wrong dimension");
    if (!u.nonnegative()) return false;
    if (dim_ == 1) {
      const Int m = multiplicity();
      return u[0] >= apery_[static_cast<std::size_t>(u[0] % m)];
    }
    return detail::generated_table(gens_, u)(u);
  }

  // Membership over a whole box at once.
  BoxTable table(const Exponent& box) const {
    if (dim_ == 1) return BoxTable::of(box, [&](const Exponent& u) { return contains(u); });
    return detail::generated_table(gens_, box);
  }

  Int max_coordinate() const {
    Int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.max_coord());
    return m;
  }

  Int max_coordinate_sum() const {
    Int m = 0;
    for (const auto& g : gens_) m = std::max(m, g.total());
    return m;
  }

  friend bool operator==(const AffineSemigroup& a, const AffineSemigroup& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }

 private:
  void init_numerical(const std::vector<Exponent>& clean) {
    Int g = 0;
    for (const auto& e : clean) g = std::gcd(g, e[0]);
    if (g != 1) throw Error(Errc::GcdNotOne, "generators of a numerical semigroup must have gcd 1");
    const Int m = clean.front()[0];
    // Dijkstra over residues mod m gives the Apery set.
    const Int inf = std::numeric_limits<Int>::max();
    std::vector<Int> dist(static_cast<std::size_t>(m), inf);
    dist[0] = 0;
    using Item = std::pair<Int, Int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
      auto [d, r] = pq.top();
      pq.pop();
      if (d != dist[static_cast<std::size_t>(r)]) continue;
      for (const auto& e : clean) {
        Int nd = d + e[0];
        Int nr = nd % m;
        if (nd < dist[static_cast<std::size_t>(nr)]) {
          dist[static_cast<std::size_t>(nr)] = nd;
          pq.emplace(nd, nr);
        }
      }
    }
    apery_ = dist;
    frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
    // Minimal generators: m together with the Apery elements that are not
    // a sum of two nonzero members.
    const Int bound = frobenius_ + m + 1;
    std::vector<bool> mem(static_cast<std::size_t>(bound + 1));
    for (Int u = 0; u <= bound; ++u) mem[static_cast<std::size_t>(u)] = u >= apery_[static_cast<std::size_t>(u % m)];
    for (Int u = 1; u <= bound; ++u) {
      if (!mem[static_cast<std::size_t>(u)]) continue;
      bool reducible = false;
      for (Int v = 1; v <= u / 2 && !reducible; ++v)
        reducible = mem[static_cast<std::size_t>(v)] && mem[static_cast<std::size_t>(u - v)];
      if (!reducible) gens_.emplace_back(u);
    }
  }

  void init_planar(const std::vector<Exponent>& clean) {
    for (std::size_t i = 0; i < clean.size(); ++i) {
      std::vector<Exponent> others;
      for (std::size_t j = 0; j < clean.size(); ++j)
        if (j != i) others.push_back(clean[j]);
      if (others.empty() || !detail::generated_table(others, clean[i])(clean[i])) gens_.push_back(clean[i]);
    }
  }

  int dim_;
  std::vector<Exponent> gens_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
};

}  // namespace sclosure

#endif  // SCLOSURE_SEMIGROUP_HPP
