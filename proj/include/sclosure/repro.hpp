#ifndef SCLOSURE_REPRO_HPP
#define SCLOSURE_REPRO_HPP

#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "sclosure/arf.hpp"
#include "sclosure/io.hpp"
#include "sclosure/module.hpp"
#include "sclosure/strict_closure.hpp"
#include "sclosure/weak_arf.hpp"

namespace sclosure {

// k[X^n, XY^{n-1}, Y^n]
inline AffineSemigroup veronese_family(Int n) { return AffineSemigroup(2, {Exponent(n, 0), Exponent(1, n - 1), Exponent(0, n)}); }

// k[X^{n-i} Y^i : 0 <= i <= n, i != 1, 3]
inline AffineSemigroup gapped_veronese(Int n) {
  std::vector<Exponent> g;
  for (Int i = 0; i <= n; ++i)
    if (i != 1 && i != 3) g.emplace_back(n - i, i);
  return AffineSemigroup(2, std::move(g));
}

// Closed form of the strict closure generators of veronese_family(n).
inline std::vector<Exponent> veronese_closure_closed_form(Int n) {
  if (n == 4) return {Exponent(7, 5)};
  std::vector<Exponent> out;
  for (Int i = 1; i <= n - 3; ++i) out.emplace_back(2 * n - i, n + i);
  for (Int j = 1; j <= n - 4; ++j) out.emplace_back(n - j, 2 * n + j);
  sort_lex(out);
  return out;
}

// Generators of the saturation over veronese_family(n): 0 and X^{n-i}Y^i, 1 <= i <= n-2.
inline std::vector<Exponent> veronese_normalization_gens(Int n) {
  std::vector<Exponent> out{Exponent(0, 0)};
  for (Int i = 1; i <= n - 2; ++i) out.emplace_back(n - i, i);
  sort_lex(out);
  return out;
}

// Random numerical semigroup with 2..4 generators in [2, 20] and gcd 1.
template <class Rng>
AffineSemigroup random_numerical_semigroup(Rng& rng, int min_gens = 2, int max_gens = 4, Int lo = 2, Int hi = 20) {
  std::uniform_int_distribution<int> count(min_gens, max_gens);
  std::uniform_int_distribution<Int> value(lo, hi);
  for (;;) {
    std::vector<Int> g(static_cast<std::size_t>(count(rng)));
    for (auto& x : g) x = value(rng);
    Int d = 0;
    for (Int x : g) d = std::gcd(d, x);
    if (d == 1) return AffineSemigroup::numerical(g);
  }
}

// Strict closure in N, Arf closure and monomial weakly Arf closure on the
// integers below the conductor; returns "" when they agree.
inline std::string zariski_mismatch(const AffineSemigroup& h) {
  ClosureReport star = strict_closure_monomials(h, Overring::normalization_of(h));
  AffineSemigroup arf = arf_closure_numerical(h);
  WeakArfResult weak = weak_arf_monomial_closure(h);
  for (Int u = 0; u < h.conductor(); ++u) {
    Exponent e(u);
    bool a = arf.contains(e), s = star.contains(e), w = weak.state.contains(e);
    if (a != s || a != w) return "disagreement at " + std::to_string(u);
  }
  return "";
}

struct ReproItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline std::vector<Exponent> exps(const nlohmann::json& j) {
  std::vector<Exponent> out;
  for (const auto& e : j) out.push_back(io::exponent_from_json(e));
  sort_lex(out);
  return out;
}

inline std::string show(const std::vector<Exponent>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "]";
}

}  // namespace detail

// Runs every bundled fixture. A fixture that throws or disagrees is a FAIL.
template <class Field>
std::vector<ReproItem> repro(const nlohmann::json& fx, const Field& field) {
  using F = typename Field::value_type;
  std::vector<ReproItem> items;
  auto run = [&](const std::string& name, const std::function<std::string()>& body) {
    ReproItem it{name, false, ""};
    try {
      it.detail = body();
      it.pass = it.detail.empty();
    } catch (const std::exception& e) {
      it.detail = e.what();
    }
    items.push_back(std::move(it));
  };

  run("<3,8,13> strictly closed in <3,5>", [&] {
    const auto& e = fx.at("numerical_overring");
    auto r = AffineSemigroup(1, detail::exps(e.at("base")));
    auto s = AffineSemigroup(1, detail::exps(e.at("over")));
    auto v = is_strictly_closed_in(r, Overring(s));
    return v.kind == StrictnessVerdict::Kind::Yes ? std::string() : std::string("verdict ") + verdict_name(v.kind);
  });
  run("<3,8,13> has mS inside R over <3,5>", [&] {
    const auto& e = fx.at("numerical_overring");
    auto r = AffineSemigroup(1, detail::exps(e.at("base")));
    auto s = AffineSemigroup(1, detail::exps(e.at("over")));
    return cor23_check(r, Overring(s)).holds ? std::string() : std::string("cor23 false");
  });
  run("<3,8,13> not strictly closed in N", [&] {
    const auto& e = fx.at("numerical_overring");
    auto r = AffineSemigroup(1, detail::exps(e.at("base")));
    auto v = is_strictly_closed_in(r, Overring::normalization_of(r));
    Exponent want(e.at("witness_in_N").get<Int>());
    if (v.kind != StrictnessVerdict::Kind::No || !v.witness || *v.witness != want)
      return std::string("verdict ") + verdict_name(v.kind) + (v.witness ? " witness " + v.witness->to_string() : "");
    return std::string();
  });
  for (const auto& jn : fx.at("gapped_veronese")) {
    Int n = jn.get<Int>();
    run("gapped veronese closed n=" + std::to_string(n), [&] {
      auto r = gapped_veronese(n);
      auto norm = module_generators_of_saturation(r);
      if (!cor27_check(r, norm.module.generators())) return std::string("cor27 false");
      auto v = is_strictly_closed_in(r, Overring::normalization_of(r));
      return v.kind == StrictnessVerdict::Kind::Yes ? std::string() : std::string("verdict ") + verdict_name(v.kind);
    });
  }
  for (const auto& [key, want] : fx.at("veronese_normalization").items()) {
    Int n = std::stoll(key);
    run("veronese normalization n=" + key, [&, n, want] {
      auto got = module_generators_of_saturation(veronese_family(n)).module.generators();
      auto w = detail::exps(want);
      return got == w ? std::string() : "got " + detail::show(got) + " want " + detail::show(w);
    });
  }
  for (const auto& [key, want] : fx.at("veronese_strict_closure").items()) {
    Int n = std::stoll(key);
    run("veronese strict closure n=" + key, [&, n, want] {
      auto r = veronese_family(n);
      auto rep = strict_closure_monomials(r, Overring::normalization_of(r));
      auto got = rep.generators();
      auto w = detail::exps(want);
      if (!rep.certified) return std::string("uncertified");
      return got == w ? std::string() : "got " + detail::show(got) + " want " + detail::show(w);
    });
  }
  for (const auto& [key, want] : fx.at("veronese_first_row_ideal").items()) {
    Int n = std::stoll(key);
    run("veronese first-row ideal n=" + key, [&, n, want] {
      auto r = veronese_family(n);
      Overring s = Overring::normalization_of(r);
      auto b = thm26_bound(r, s);
      auto w = detail::exps(want);
      std::string bad;
      BoxTable(b.box).for_each_point([&](const Exponent& u) {
        if (!bad.empty() || !s.contains(u)) return;
        auto in = [&](const std::vector<Exponent>& gens) {
          for (const auto& g : gens)
            if ((u - g).nonnegative() && s.contains(u - g)) return true;
          return false;
        };
        if (in(b.ideal) != in(w)) bad = "membership differs at " + u.to_string();
      });
      return bad;
    });
  }
  const auto& ex = fx.at("veronese_weak_arf");
  auto witnesses = io::witnesses_from_json(ex.at("witness"), field);
  for (const auto& c : ex.at("cases")) {
    Int n = c.at("n").get<Int>();
    bool use_witness = c.at("witness").get<bool>();
    run("veronese weak Arf n=" + std::to_string(n) + (use_witness ? " with witness" : " monomial only"), [&, c, n, use_witness] {
      auto r = veronese_family(n);
      std::vector<Witness<F>> ws;
      if (use_witness) ws = witnesses;
      auto cmp = compare_weak_arf_vs_strict<F>(r, ws);
      auto w = detail::exps(c.at("gap"));
      if (!cmp.unsound.empty()) return std::string("lower bound escapes the strict closure");
      if (cmp.gap != w) return "gap " + detail::show(cmp.gap) + " want " + detail::show(w);
      if (cmp.equal != w.empty()) return std::string("equality flag inconsistent");
      return std::string();
    });
  }
  run("zariski cross-oracle", [&] {
    const auto& z = fx.at("cross_oracle");
    std::mt19937_64 rng(z.at("seed").get<std::uint64_t>());
    int count = z.at("count").get<int>();
    for (int i = 0; i < count; ++i) {
      auto h = random_numerical_semigroup(rng);
      std::string m = zariski_mismatch(h);
      if (!m.empty()) return io::to_json(h).dump() + ": " + m;
    }
    return std::string();
  });
  return items;
}

}  // namespace sclosure

#endif  // SCLOSURE_REPRO_HPP
