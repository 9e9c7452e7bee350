#ifndef SCLOSURE_ARF_HPP
#define SCLOSURE_ARF_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/semigroup.hpp"

namespace sclosure {

// Numerical semigroups viewed through their members below the conductor.
namespace numerical {

inline void require_numerical(const AffineSemigroup& h) {
  if (h.dim() != 1) throw Error(Errc::WrongDimension, "operation requires a numerical semigroup (k = 1)");
}

// Membership bitset over [0, bound).
inline std::vector<bool> members_below(const AffineSemigroup& h, Int bound) {
  std::vector<bool> out(static_cast<std::size_t>(std::max<Int>(bound, 0)));
  for (Int u = 0; u < bound; ++u) out[static_cast<std::size_t>(u)] = h.contains(Exponent(u));
  return out;
}

// The semigroup generated by the members of `below` together with every
// integer >= tail.
inline AffineSemigroup from_members(const std::vector<bool>& below, Int tail) {
  std::vector<Int> gens;
  for (Int u = 1; u < tail && u < static_cast<Int>(below.size()); ++u)
    if (below[static_cast<std::size_t>(u)]) gens.push_back(u);
  for (Int u = std::max<Int>(tail, 1); u < 2 * std::max<Int>(tail, 1); ++u) gens.push_back(u);
  return AffineSemigroup::numerical(gens);
}

inline std::vector<Int> small_elements(const AffineSemigroup& h) {
  std::vector<Int> out;
  for (Int u = 0; u < h.conductor(); ++u)
    if (h.contains(Exponent(u))) out.push_back(u);
  return out;
}

// The members as a sorted set of integers together with the conductor.
inline bool same_members(const AffineSemigroup& a, const AffineSemigroup& b) {
  return a.conductor() == b.conductor() && small_elements(a) == small_elements(b);
}

// Subset test: every member of a is a member of b.
inline bool is_subset(const AffineSemigroup& a, const AffineSemigroup& b) {
  Int bound = std::max(a.conductor(), b.conductor());
  for (Int u = 0; u < bound; ++u)
    if (a.contains(Exponent(u)) && !b.contains(Exponent(u))) return false;
  return true;
}

inline AffineSemigroup intersection(const AffineSemigroup& a, const AffineSemigroup& b) {
  require_numerical(a);
  require_numerical(b);
  Int bound = std::max(a.conductor(), b.conductor());
  std::vector<bool> below(static_cast<std::size_t>(bound));
  for (Int u = 0; u < bound; ++u) below[static_cast<std::size_t>(u)] = a.contains(Exponent(u)) && b.contains(Exponent(u));
  return from_members(below, bound);
}

}  // namespace numerical

// For x >= y >= z members, x + y - z must be a member. Triples with
// x >= conductor satisfy this automatically.
inline bool is_arf_numerical(const AffineSemigroup& h) {
  numerical::require_numerical(h);
  auto small = numerical::small_elements(h);
  for (std::size_t xi = 0; xi < small.size(); ++xi)
    for (std::size_t yi = 0; yi <= xi; ++yi)
      for (std::size_t zi = 0; zi <= yi; ++zi)
        if (!h.contains(Exponent(small[xi] + small[yi] - small[zi]))) return false;
  return true;
}

using ArfTrace = std::function<void(int round, const std::vector<Int>& added)>;

// Least Arf semigroup containing h: add every x + y - z (x >= y >= z below the
// conductor) in one batch per round, regenerate, repeat until stable.
inline AffineSemigroup arf_closure_numerical(const AffineSemigroup& h, const ArfTrace& trace = {}) {
  numerical::require_numerical(h);
  AffineSemigroup cur = h;
  for (int round = 1;; ++round) {
    const Int c = cur.conductor();
    auto small = numerical::small_elements(cur);
    std::vector<bool> below = numerical::members_below(cur, c);
    std::vector<Int> added;
    for (std::size_t xi = 0; xi < small.size(); ++xi)
      for (std::size_t yi = 0; yi <= xi; ++yi)
        for (std::size_t zi = 1; zi <= yi; ++zi) {
          Int v = small[xi] + small[yi] - small[zi];
          if (v < c && !below[static_cast<std::size_t>(v)]) {
            below[static_cast<std::size_t>(v)] = true;
            added.push_back(v);
          }
        }
    if (added.empty()) return cur;
    std::sort(added.begin(), added.end());
    if (trace) trace(round, added);
    cur = numerical::from_members(below, c);
  }
}

struct BlowupChain {
  std::vector<AffineSemigroup> chain;  // H_0 = H, ..., H_t = N
  std::vector<Int> multiplicities;     // ends at the first 1
};

// Successive blow-ups: the semigroup generated by {h - m : h in H, h != 0}.
inline BlowupChain blowup_chain(const AffineSemigroup& h) {
  numerical::require_numerical(h);
  BlowupChain out;
  AffineSemigroup cur = h;
  for (;;) {
    out.chain.push_back(cur);
    const Int m = cur.multiplicity();
    out.multiplicities.push_back(m);
    if (m == 1) return out;
    std::vector<Int> gens;
    const Int bound = cur.conductor() + 2 * m;
    for (Int u = m + 1; u <= bound; ++u)
      if (cur.contains(Exponent(u))) gens.push_back(u - m);
    cur = AffineSemigroup::numerical(gens);
  }
}

}  // namespace sclosure

#endif  // SCLOSURE_ARF_HPP
