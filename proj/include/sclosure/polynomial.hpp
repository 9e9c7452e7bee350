#ifndef SCLOSURE_POLYNOMIAL_HPP
#define SCLOSURE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sclosure/error.hpp"
#include "sclosure/exponent.hpp"
#include "sclosure/saturation.hpp"

namespace sclosure {

// Sparse polynomial with exact coefficients. Terms are kept in graded-lex
// order and zero coefficients are never stored.
template <class F>
class SparsePolynomial {
 public:
  using Terms = std::map<Exponent, F, GradedLexLess>;

  SparsePolynomial() = default;

  static SparsePolynomial monomial(const Exponent& e, const F& c) {
    SparsePolynomial p;
    p.add_term(e, c);
    return p;
  }

  void add_term(const Exponent& e, const F& c) {
    if (!terms_.empty() && terms_.begin()->first.dim() != e.dim())
      throw Error(Errc::DimensionMismatch, "mixed exponent dimensions in polynomial");
    if (!e.nonnegative()) throw Error(Errc::InvalidInput, "negative exponent " + e.to_string());
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Leading term in graded-lex order; polynomial must be nonzero.
  const std::pair<const Exponent, F>& leading() const { return *terms_.rbegin(); }

  std::vector<Exponent> support() const {
    std::vector<Exponent> out;
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
  }

  std::optional<F> coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  SparsePolynomial operator-() const {
    SparsePolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  SparsePolynomial times_term(const Exponent& e, const F& c) const {
    SparsePolynomial r;
    for (const auto& [ea, ca] : terms_) r.add_term(ea + e, ca * c);
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

  // Highest terms first, e.g. "X^2*Y^8 + X*Y^9" or "-t^3 + 2*t".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs.erase(0, 1);
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      std::string mono = monomial_string(e);
      if (mono.empty())
        os << cs;
      else if (cs == "1")
        os << mono;
      else
        os << cs << "*" << mono;
    }
    return os.str();
  }

 private:
  static std::string monomial_string(const Exponent& e) {
    std::string out;
    auto var = [&](const char* name, Int k) {
      if (k == 0) return;
      if (!out.empty()) out += "*";
      out += name;
      if (k > 1) out += "^" + std::to_string(k);
    };
    if (e.dim() == 1) {
      var("t", e[0]);
    } else {
      var("X", e[0]);
      var("Y", e[1]);
    }
    return out;
  }

  Terms terms_;
};

// q with p = divisor * q, or nullopt when the divisor does not divide p.
// Division by a single polynomial under a monomial order leaves remainder
// zero exactly when it divides, since lt(divisor * q) = lt(divisor) * lt(q).
template <class F>
std::optional<SparsePolynomial<F>> exact_divide(SparsePolynomial<F> p, const SparsePolynomial<F>& divisor) {
  if (divisor.is_zero()) throw Error(Errc::DivisionByZero, "exact_divide by the zero polynomial");
  const auto& [dl, dc] = divisor.leading();
  SparsePolynomial<F> quotient;
  while (!p.is_zero()) {
    const auto [pl, pc] = p.leading();
    Exponent shift = pl - dl;
    if (!shift.nonnegative()) return std::nullopt;
    F c = pc / dc;
    quotient.add_term(shift, c);
    p -= divisor.times_term(shift, c);
  }
  return quotient;
}

template <class F>
bool support_in_saturation(const SparsePolynomial<F>& p, const SaturationDescription& sat) {
  for (const auto& [e, c] : p.terms())
    if (!sat.contains(e)) return false;
  return true;
}

}  // namespace sclosure

#endif  // SCLOSURE_POLYNOMIAL_HPP
