#ifndef SCLOSURE_IO_HPP
#define SCLOSURE_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sclosure/arf.hpp"
#include "sclosure/error.hpp"
#include "sclosure/field.hpp"
#include "sclosure/module.hpp"
#include "sclosure/polynomial.hpp"
#include "sclosure/strict_closure.hpp"
#include "sclosure/weak_arf.hpp"

namespace sclosure::io {

using nlohmann::json;

inline json to_json(const Exponent& e) { return e.to_vector(); }

inline json to_json(const std::vector<Exponent>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

inline Exponent exponent_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "exponent must be an array of integers");
  std::vector<Int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(Errc::InvalidInput, "exponent coordinates must be integers");
    v.push_back(x.get<Int>());
  }
  return Exponent::from_vector(v);
}

inline json to_json(const AffineSemigroup& h) { return json{{"dim", h.dim()}, {"gens", to_json(h.generators())}}; }

inline AffineSemigroup semigroup_from_json(const json& j) {
  try {
    int dim = j.at("dim").get<int>();
    std::vector<Exponent> gens;
    for (const auto& g : j.at("gens")) gens.push_back(exponent_from_json(g));
    return AffineSemigroup(dim, std::move(gens));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed semigroup JSON: ") + e.what());
  }
}

inline json to_json(const MonomialModule& m) { return json{{"base", to_json(m.base())}, {"gens", to_json(m.generators())}}; }

inline MonomialModule module_from_json(const json& j) {
  std::vector<Exponent> gens;
  for (const auto& g : j.at("gens")) gens.push_back(exponent_from_json(g));
  return MonomialModule(semigroup_from_json(j.at("base")), std::move(gens));
}

inline json to_json(const ClosureReport& r, bool with_traces = false) {
  json j{{"gens", to_json(r.generators())}, {"box", to_json(r.box)}, {"certified", r.certified}};
  if (with_traces) {
    json t = json::array();
    for (const auto& [g, path] : r.traces) t.push_back(json{{"gen", to_json(g)}, {"path", to_json(path)}});
    j["traces"] = t;
  }
  return j;
}

inline json to_json(const SyzygyGenerator& s) {
  return json{{"a", to_json(s.a)}, {"i", s.i}, {"b", to_json(s.b)}, {"j", s.j}};
}

inline json to_json(const BoundReport& b) {
  json j{{"gens", to_json(b.module.nonzero_generators())}, {"box", to_json(b.box)}, {"certified", b.certified}};
  return j;
}

// "a/b", "a", or a JSON integer.
inline std::pair<mpz_class, mpz_class> parse_fraction(const json& c) {
  if (c.is_number_integer()) return {mpz_class(std::to_string(c.get<long long>())), mpz_class(1)};
  if (!c.is_string()) throw Error(Errc::InvalidInput, "coefficient must be an integer or a string \"a/b\"");
  std::string s = c.get<std::string>();
  auto slash = s.find('/');
  try {
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(1);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in coefficient " + s);
    return {num, den};
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidInput, "malformed coefficient \"" + s + "\"");
  }
}

template <class Field>
SparsePolynomial<typename Field::value_type> polynomial_from_json(const json& j, const Field& field) {
  if (!j.is_array()) throw Error(Errc::InvalidInput, "polynomial must be an array of [coeff, exponent] terms");
  SparsePolynomial<typename Field::value_type> p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw Error(Errc::InvalidInput, "term must be [coeff, exponent]");
    auto [num, den] = parse_fraction(term[0]);
    p.add_term(exponent_from_json(term[1]), field(num, den));
  }
  return p;
}

template <class F>
json to_json(const SparsePolynomial<F>& p) {
  json a = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) a.push_back(json::array({it->second.to_string(), to_json(it->first)}));
  return a;
}

template <class Field>
Witness<typename Field::value_type> witness_from_json(const json& j, const Field& field) {
  try {
    return {polynomial_from_json(j.at("x"), field), polynomial_from_json(j.at("y"), field), polynomial_from_json(j.at("z"), field)};
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("malformed witness JSON: ") + e.what());
  }
}

// A single witness object or an array of them.
template <class Field>
std::vector<Witness<typename Field::value_type>> witnesses_from_json(const json& j, const Field& field) {
  std::vector<Witness<typename Field::value_type>> out;
  if (j.is_array()) {
    for (const auto& w : j) out.push_back(witness_from_json(w, field));
  } else {
    out.push_back(witness_from_json(j, field));
  }
  return out;
}

template <class F>
const char* outcome_name(typename WitnessOutcome<F>::Kind k) {
  switch (k) {
    case WitnessOutcome<F>::Kind::Added: return "added";
    case WitnessOutcome<F>::Kind::Unchanged: return "unchanged";
    case WitnessOutcome<F>::Kind::MixedResidual: return "mixed_residual";
  }
  return "unchanged";
}

template <class F>
json to_json(const WitnessOutcome<F>& o) {
  json j{{"outcome", outcome_name<F>(o.kind)}, {"residual", to_json(o.residual)}};
  if (o.added) j["added"] = to_json(*o.added);
  return j;
}

// Inline generator syntax: "3,8,13" for k = 1, "4 0;1 3;0 4" for k = 2.
inline std::vector<Exponent> parse_generators(int dim, const std::string& text) {
  std::vector<Exponent> out;
  auto parse_ints = [&](const std::string& s) {
    std::vector<Int> v;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      std::size_t pos = 0;
      Int x = 0;
      try {
        x = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw Error(Errc::InvalidInput, "not an integer: \"" + tok + "\"");
      v.push_back(x);
    }
    return v;
  };
  if (dim == 1) {
    std::string s = text;
    for (char& ch : s)
      if (ch == ',') ch = ' ';
    for (Int x : parse_ints(s)) out.emplace_back(x);
  } else if (dim == 2) {
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ';')) {
      for (char& ch : item)
        if (ch == ',') ch = ' ';
      auto v = parse_ints(item);
      if (v.empty()) continue;
      if (v.size() != 2) throw Error(Errc::DimensionMismatch, "expected a pair in \"" + item + "\"");
      out.emplace_back(v[0], v[1]);
    }
  } else {
    throw Error(Errc::DimensionMismatch, "dimension must be 1 or 2");
  }
  if (out.empty()) throw Error(Errc::EmptyGenerators, "no generators given");
  return out;
}

inline Exponent parse_box(int dim, const std::string& text) {
  auto v = parse_generators(dim, text);
  if (v.size() != 1) throw Error(Errc::InvalidInput, "box must be a single exponent vector");
  for (int i = 0; i < dim; ++i)
    if (v[0][i] <= 0) throw Error(Errc::InvalidInput, "box coordinates must be positive");
  return v[0];
}

}  // namespace sclosure::io

#endif  // SCLOSURE_IO_HPP
