#ifndef SCLOSURE_SATURATION_HPP
#define SCLOSURE_SATURATION_HPP

#include <numeric>
#include <tuple>
#include <vector>

#include "sclosure/exponent.hpp"
#include "sclosure/semigroup.hpp"

namespace sclosure {

namespace detail {

// x*a + y*b = g = gcd(a, b), g >= 0
inline std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Int cross(const Exponent& a, const Exponent& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace detail

// Lattice basis in lower-triangular form: the group generated is
// { k*(p, q) + l*(0, r) : k, l in Z } with p, r >= 0.
struct LatticeBasis {
  Int p = 0;
  Int q = 0;
  Int r = 0;

  bool contains(const Exponent& u) const {
    Int w = u[1];
    if (p == 0) {
      if (u[0] != 0) return false;
    } else {
      if (u[0] % p != 0) return false;
      w -= (u[0] / p) * q;
    }
    return r == 0 ? w == 0 : w % r == 0;
  }
};

// Decidable description of the saturation (normalization) of a semigroup.
// For k = 1 with gcd 1 the saturation is all of N.
class SaturationDescription {
 public:
  static SaturationDescription whole(int dim) {
    SaturationDescription s;
    s.dim_ = dim;
    s.whole_ = true;
    return s;
  }

  int dim() const { return dim_; }
  bool is_whole() const { return whole_; }
  const LatticeBasis& lattice() const { return lattice_; }
  const Exponent& low_ray() const { return low_ray_; }
  const Exponent& high_ray() const { return high_ray_; }

  bool contains(const Exponent& u) const {
    if (u.dim() != dim_) throw Error(Errc::DimensionMismatch, "query " + u.to_string() + " has wrong dimension");
    if (!u.nonnegative()) return false;
    if (whole_) return true;
    return in_cone(u) && lattice_.contains(u);
  }

  bool operator()(const Exponent& u) const { return contains(u); }

  BoxTable table(const Exponent& box) const { return BoxTable::of(box, *this); }

  friend SaturationDescription saturation(const AffineSemigroup& h);

 private:
  bool in_cone(const Exponent& u) const {
    return detail::cross(low_ray_, u) >= 0 && detail::cross(u, high_ray_) >= 0;
  }

  int dim_ = 1;
  bool whole_ = false;
  LatticeBasis lattice_;
  Exponent low_ray_{0, 0};
  Exponent high_ray_{0, 0};
};

// Lattice by 2 x m integer column reduction, cone from the extreme
// generators by angle.
inline SaturationDescription saturation(const AffineSemigroup& h) {
  if (h.dim() == 1) return SaturationDescription::whole(1);
  SaturationDescription s;
  s.dim_ = 2;
  const auto& gens = h.generators();

  Int p = 0;
  Exponent pivot(0, 0);
  for (const auto& c : gens) {
    if (c[0] == 0) continue;
    if (p == 0) {
      pivot = c;
      p = c[0];
      continue;
    }
    auto [g, x, y] = detail::ext_gcd(pivot[0], c[0]);
    Exponent combined(g, x * pivot[1] + y * c[1]);
    pivot = combined;
    p = g;
  }
  // L = Z*pivot + Z*(0, r), where the x-free part is spanned by the
  // columns with their pivot multiple removed.
  Int r = 0;
  if (p != 0) {
    for (const auto& c : gens) {
      Int k = c[0] / p;
      r = std::gcd(r, c[1] - k * pivot[1]);
    }
  } else {
    for (const auto& c : gens) r = std::gcd(r, c[1]);
  }
  if (r < 0) r = -r;
  Int q = pivot[1];
  if (r != 0) q = ((q % r) + r) % r;
  s.lattice_ = LatticeBasis{p, q, r};

  Exponent lo = gens.front(), hi = gens.front();
  for (const auto& g : gens) {
    if (detail::cross(g, lo) > 0) lo = g;
    if (detail::cross(hi, g) > 0) hi = g;
  }
  s.low_ray_ = lo;
  s.high_ray_ = hi;
  return s;
}

// Minimal generators (Hilbert basis) of the saturation found within a box.
inline std::vector<Exponent> saturation_hilbert_basis(const SaturationDescription& sat, const Exponent& box) {
  BoxTable t = sat.table(box);
  std::vector<Exponent> members = t.members();
  std::vector<Exponent> basis;
  for (const auto& u : members) {
    if (u.is_zero()) continue;
    bool reducible = false;
    for (const auto& v : members) {
      if (v.is_zero() || v == u) continue;
      Exponent w = u - v;
      if (w.nonnegative() && !w.is_zero() && t(w)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(u);
  }
  return basis;
}

}  // namespace sclosure

#endif  // SCLOSURE_SATURATION_HPP
