// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sclosure/io.hpp"
#include "sclosure/repro.hpp"

using namespace sclosure;

namespace {

std::vector<Int> gens_of(const AffineSemigroup& h) {
  std::vector<Int> v;
  for (const auto& g : h.generators()) v.push_back(g[0]);
  return v;
}

std::string show(const std::vector<Exponent>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

template <class Rng>
std::pair<AffineSemigroup, AffineSemigroup> random_pair(Rng& rng) {
  auto s = random_numerical_semigroup(rng, 2, 3, 2, 9);
  std::uniform_int_distribution<Int> v(2, 30);
  std::uniform_int_distribution<int> count(2, 4);
  for (;;) {
    std::vector<Int> g;
    int want = count(rng);
    while (static_cast<int>(g.size()) < want) {
      Int x = v(rng);
      if (s.contains(Exponent(x))) g.push_back(x);
    }
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d == 1) return {AffineSemigroup::numerical(g), s};
  }
}

template <class Field>
Witness<typename Field::value_type> xi_witness(const Field& f) {
  std::ifstream in(std::string(SCLOSURE_DATA_DIR) + "/xi_witness.json");
  return io::witness_from_json(nlohmann::json::parse(in), f);
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string why;
  try {
    why = body();
  } catch (const std::exception& e) {
    why = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (why.empty() && secs > 10.0) why = "took " + std::to_string(secs) + " s";
  std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!why.empty()) {
    std::cout << " -- " << why;
    ++failures;
  }
  std::cout << "\n";
}

// strict closure idempotence and monotonicity
std::string closure_properties(int cases) {
  std::mt19937_64 rng(7001);
  for (int t = 0; t < cases; ++t) {
    auto r = random_numerical_semigroup(rng);
    auto n = Overring::normalization_of(r);
    auto star = strict_closure_monomials(r, n);
    std::vector<Exponent> g = r.generators();
    for (const auto& e : star.generators()) g.push_back(e);
    AffineSemigroup rs(1, g);
    if (!strict_closure_monomials(rs, n).generators().empty()) return "not idempotent on " + io::to_json(r).dump();
    std::vector<Exponent> tg = r.generators();
    tg.emplace_back(std::uniform_int_distribution<Int>(1, 25)(rng));
    auto tstar = strict_closure_monomials(AffineSemigroup(1, tg), n);
    for (Int u = 0; u <= r.conductor(); ++u)
      if (star.contains(Exponent(u)) && !tstar.contains(Exponent(u))) return "not monotone on " + io::to_json(r).dump();
  }
  return "";
}

std::string bound_properties(int cases) {
  std::mt19937_64 rng(7002);
  for (int t = 0; t < cases; ++t) {
    auto [r, sg] = random_pair(rng);
    Overring s(sg);
    auto star = strict_closure_monomials(r, s);
    auto t26 = thm26_bound(r, s);
    auto p22 = prop22_bound(r, s);
    for (Int u = 0; u <= r.conductor() + 3; ++u)
      if (star.contains(Exponent(u)) && (!t26.contains(Exponent(u)) || !p22.contains(Exponent(u))))
        return "bound misses " + std::to_string(u) + " for " + io::to_json(r).dump() + " in " + io::to_json(sg).dump();
  }
  // and the Veronese family in two dimensions
  for (Int n : {4, 5, 6}) {
    auto r = veronese_family(n);
    auto s = Overring::normalization_of(r);
    auto star = strict_closure_monomials(r, s);
    auto t26 = thm26_bound(r, s);
    auto p22 = prop22_bound(r, s);
    std::string bad;
    BoxTable(star.box).for_each_point([&](const Exponent& u) {
      if (bad.empty() && star.contains(u) && (!t26.contains(u) || !p22.contains(u))) bad = "bound misses " + u.to_string();
    });
    if (!bad.empty()) return bad;
  }
  return "";
}

std::vector<bool> members(const AffineSemigroup& h, Int bound) {
  std::vector<bool> m(static_cast<std::size_t>(bound + 1));
  for (Int u = 0; u <= bound; ++u) m[static_cast<std::size_t>(u)] = h.contains(Exponent(u));
  return m;
}

std::string arf_properties(int cases) {
  std::mt19937_64 rng(7003);
  int minimal_checked = 0;
  for (int t = 0; t < 20 * cases && minimal_checked < cases; ++t) {
    auto h = random_numerical_semigroup(rng, 2, 4, 3, 14);
    auto a = arf_closure_numerical(h);
    if (!numerical::is_subset(h, a)) return "not extensive on " + io::to_json(h).dump();
    if (!numerical::same_members(arf_closure_numerical(a), a)) return "not idempotent on " + io::to_json(h).dump();
    if (!oracle::arf_brute(members(a, 3 * a.conductor() + 3))) return "closure not Arf on " + io::to_json(h).dump();
    auto m = members(h, h.conductor());
    std::size_t gaps = 0;
    for (bool b : m) gaps += !b;
    if (gaps > 11) continue;
    auto best = oracle::smallest_arf_superset(m);
    for (Int u = 0; u <= h.conductor(); ++u)
      if (a.contains(Exponent(u)) != static_cast<bool>(best[static_cast<std::size_t>(u)])) return "not minimal on " + io::to_json(h).dump();
    ++minimal_checked;
  }
  if (minimal_checked < cases) return "only " + std::to_string(minimal_checked) + " minimality cases";
  return "";
}

std::string arf_intersection(int cases) {
  std::mt19937_64 rng(7004);
  for (int t = 0; t < cases; ++t) {
    auto a = arf_closure_numerical(random_numerical_semigroup(rng));
    auto b = arf_closure_numerical(random_numerical_semigroup(rng));
    auto i = numerical::intersection(a, b);
    if (!oracle::arf_brute(members(i, 3 * i.conductor() + 3))) return "intersection not Arf: " + io::to_json(a).dump() + " " + io::to_json(b).dump();
  }
  return "";
}

std::string blowup_partial_sums(int cases) {
  std::mt19937_64 rng(7005);
  for (int t = 0; t < cases; ++t) {
    auto a = arf_closure_numerical(random_numerical_semigroup(rng));
    auto c = blowup_chain(a);
    std::vector<bool> want(static_cast<std::size_t>(a.conductor() + 1), false);
    want[0] = true;
    Int s = 0;
    for (Int m : c.multiplicities) {
      s += m;
      if (s <= a.conductor()) want[static_cast<std::size_t>(s)] = true;
    }
    for (Int u = s; u <= a.conductor(); ++u) want[static_cast<std::size_t>(u)] = true;
    for (Int u = 0; u <= a.conductor(); ++u)
      if (a.contains(Exponent(u)) != static_cast<bool>(want[static_cast<std::size_t>(u)])) return "mismatch on " + io::to_json(a).dump();
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "<3,8,13> in <3,5> and in N", [] {
    auto r = AffineSemigroup::numerical({3, 8, 13});
    Overring s(AffineSemigroup::numerical({3, 5}));
    auto in_s = strict_closure_monomials(r, s);
    if (!in_s.generators().empty() || !in_s.certified) return "closure in <3,5> is " + show(in_s.generators());
    if (is_strictly_closed_in(r, s).kind != StrictnessVerdict::Kind::Yes) return std::string("verdict in <3,5> not Yes");
    if (!cor23_check(r, s).holds) return std::string("mS not inside R");
    auto v = is_strictly_closed_in(r, Overring::normalization_of(r));
    if (v.kind != StrictnessVerdict::Kind::No || !v.witness || *v.witness != Exponent(10)) return std::string("verdict in N not No/10");
    return std::string();
  });

  criterion(2, "strict closure in N = Arf closure = monomial weak Arf closure (200 random)", [] {
    std::mt19937_64 rng(20260101);
    for (int t = 0; t < 200; ++t) {
      auto h = random_numerical_semigroup(rng);
      auto star = strict_closure_monomials(h, Overring::normalization_of(h));
      auto arf = arf_closure_numerical(h);
      auto weak = weak_arf_monomial_closure(h);
      // everything from the conductor on is already in H
      for (Int u = 0; u <= h.conductor(); ++u) {
        Exponent e(u);
        bool in_h = h.contains(e);
        bool s = star.contains(e) && !in_h, a = arf.contains(e) && !in_h, w = weak.state.contains(e) && !in_h;
        if (s != a || s != w) return io::to_json(h).dump() + " differs at " + std::to_string(u);
      }
    }
    return std::string();
  });

  criterion(3, "Veronese strict closure generators, n = 4, 5, 6", [] {
    const std::vector<std::vector<Exponent>> want{
        {Exponent(7, 5)},
        {Exponent(9, 6), Exponent(8, 7), Exponent(4, 11)},
        {Exponent(11, 7), Exponent(10, 8), Exponent(9, 9), Exponent(5, 13), Exponent(4, 14)}};
    for (Int n = 4; n <= 6; ++n) {
      auto r = veronese_family(n);
      auto rep = strict_closure_monomials(r, Overring::normalization_of(r));
      auto w = want[static_cast<std::size_t>(n - 4)];
      sort_lex(w);
      if (!rep.certified) return "n=" + std::to_string(n) + " uncertified";
      if (rep.generators() != w) return "n=" + std::to_string(n) + " got " + show(rep.generators());
    }
    return std::string();
  });

  criterion(4, "first-row ideal J = ((n,n), (2,2n-2)), n = 4, 5, 6", [] {
    for (Int n = 4; n <= 6; ++n) {
      auto r = veronese_family(n);
      Overring s = Overring::normalization_of(r);
      auto b = thm26_bound(r, s);
      std::vector<Exponent> want{Exponent(n, n), Exponent(2, 2 * n - 2)};
      auto in = [&](const std::vector<Exponent>& gens, const Exponent& u) {
        for (const auto& g : gens)
          if ((u - g).nonnegative() && s.contains(u - g)) return true;
        return false;
      };
      std::string bad;
      BoxTable(b.box).for_each_point([&](const Exponent& u) {
        if (bad.empty() && s.contains(u) && in(b.ideal, u) != in(want, u)) bad = "n=" + std::to_string(n) + " differs at " + u.to_string();
      });
      if (!bad.empty()) return bad;
    }
    return std::string();
  });

  criterion(5, "gapped Veronese n = 6, 7, 8 strictly closed", [] {
    for (Int n = 6; n <= 8; ++n) {
      auto r = gapped_veronese(n);
      if (!cor27_check(r, module_generators_of_saturation(r).module.generators())) return "cor27 false for n=" + std::to_string(n);
      if (is_strictly_closed_in(r, Overring::normalization_of(r)).kind != StrictnessVerdict::Kind::Yes) return "not Yes for n=" + std::to_string(n);
    }
    return std::string();
  });

  criterion(6, "weak Arf vs strict closure for k[X^4,XY^3,Y^4] and k[X^5,XY^4,Y^5], char 0 and 2", [] {
    auto check = [](const auto& field) -> std::string {
      using F = typename std::decay_t<decltype(field)>::value_type;
      auto c1 = compare_weak_arf_vs_strict<F>(veronese_family(4), {});
      if (!c1.equal) return "n=4 not equal";
      auto c2 = compare_weak_arf_vs_strict<F>(veronese_family(5), {});
      if (c2.equal || c2.gap != std::vector<Exponent>{Exponent(8, 7)}) return "n=5 gap " + show(c2.gap);
      auto c3 = compare_weak_arf_vs_strict<F>(veronese_family(5), {xi_witness(field)});
      if (!c3.equal) return "n=5 with witness gap " + show(c3.gap);
      return "";
    };
    std::string a = check(RationalField{});
    if (!a.empty()) return "char 0: " + a;
    std::string b = check(PrimeField(2));
    if (!b.empty()) return "char 2: " + b;
    return std::string();
  });

  criterion(7, "property suites (>= 100 cases each)", [] {
    const int n = 100;
    for (auto [name, f] : std::vector<std::pair<std::string, std::function<std::string(int)>>>{
             {"strict closure idempotent/monotone", closure_properties},
             {"bounds contain the closure", bound_properties},
             {"Arf closure extensive/idempotent/minimal", arf_properties},
             {"Arf intersection", arf_intersection},
             {"blow-up partial sums", blowup_partial_sums}}) {
      std::string why = f(n);
      if (!why.empty()) return name + ": " + why;
    }
    return std::string();
  });

  criterion(8, "union-find tensor criterion = GF(2) linear algebra (50 random pairs, degrees <= 30)", [] {
    std::mt19937_64 rng(8008);
    for (int t = 0; t < 50; ++t) {
      auto [r, s] = random_pair(rng);
      auto rm = oracle::numerical_members(gens_of(r), 63);
      auto sm = oracle::numerical_members(gens_of(s), 63);
      for (Int u = 0; u <= 30; ++u) {
        if (!sm[static_cast<std::size_t>(u)]) continue;
        if (tensor_reaches(r, Overring(s), Exponent(u)) != oracle::tensor_identity_gf2(rm, sm, u))
          return io::to_json(r).dump() + " in " + io::to_json(s).dump() + " at " + std::to_string(u);
      }
    }
    return std::string();
  });

  return failures;
}
