#ifndef SCLOSURE_EXPONENT_HPP
#define SCLOSURE_EXPONENT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "sclosure/error.hpp"

namespace sclosure {

using Int = std::int64_t;

// A point of Z^k, k in {1,2}. Members of semigroups are nonnegative; negative
// coordinates only appear transiently as differences.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(Int a) : dim_(1), c_{a, 0} {}
  Exponent(Int a, Int b) : dim_(2), c_{a, b} {}

  static Exponent zero(int dim) { return dim == 1 ? Exponent(0) : Exponent(0, 0); }
  static Exponent diagonal(int dim, Int v) { return dim == 1 ? Exponent(v) : Exponent(v, v); }

  static Exponent from_vector(const std::vector<Int>& v) {
    if (v.size() == 1) return Exponent(v[0]);
    if (v.size() == 2) return Exponent(v[0], v[1]);
    throw Error(Errc::DimensionMismatch, "exponent vectors must have 1 or 2 coordinates");
  }

  int dim() const { return dim_; }
  Int operator[](int i) const { return c_[i]; }

  std::vector<Int> to_vector() const {
    return dim_ == 1 ? std::vector<Int>{c_[0]} : std::vector<Int>{c_[0], c_[1]};
  }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0; }
  bool nonnegative() const { return c_[0] >= 0 && c_[1] >= 0; }
  Int total() const { return c_[0] + c_[1]; }
  Int max_coord() const { return std::max(c_[0], c_[1]); }

  // componentwise <=
  bool dominated_by(const Exponent& o) const {
    check_dim(o);
    return c_[0] <= o.c_[0] && c_[1] <= o.c_[1];
  }

  Exponent& operator+=(const Exponent& o) {
    check_dim(o);
    c_[0] += o.c_[0];
    c_[1] += o.c_[1];
    return *this;
  }
  Exponent& operator-=(const Exponent& o) {
    check_dim(o);
    c_[0] -= o.c_[0];
    c_[1] -= o.c_[1];
    return *this;
  }
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  friend Exponent operator*(Int s, Exponent a) {
    a.c_[0] *= s;
    a.c_[1] *= s;
    return a;
  }

  friend bool operator==(const Exponent&, const Exponent&) = default;
  // lexicographic; the storage order for generator lists
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.c_[0] <=> b.c_[0]; c != 0) return c;
    return a.c_[1] <=> b.c_[1];
  }

  std::string to_string() const {
    if (dim_ == 1) return std::to_string(c_[0]);
    return "(" + std::to_string(c_[0]) + "," + std::to_string(c_[1]) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.to_string(); }

  void check_dim(const Exponent& o) const {
    if (o.dim_ != dim_) throw Error(Errc::DimensionMismatch, "mixed exponent dimensions");
  }

 private:
  int dim_ = 1;
  std::array<Int, 2> c_{0, 0};
};

// Total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  }
};

inline void sort_lex(std::vector<Exponent>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Dense boolean table over the box [0, box] (inclusive, componentwise).
class BoxTable {
 public:
  BoxTable() = default;
  explicit BoxTable(const Exponent& box) : box_(box) {
    if (!box.nonnegative()) throw Error(Errc::InvalidInput, "box must be nonnegative");
    width_ = box[0] + 1;
    height_ = box.dim() == 2 ? box[1] + 1 : 1;
    bits_.assign(static_cast<std::size_t>(width_ * height_), false);
  }

  template <class Pred>
  static BoxTable of(const Exponent& box, Pred&& pred) {
    BoxTable t(box);
    t.for_each_point([&](const Exponent& u) { t.set(u, pred(u)); });
    return t;
  }

  const Exponent& box() const { return box_; }
  int dim() const { return box_.dim(); }

  bool in_box(const Exponent& u) const {
    return u.nonnegative() && u.dominated_by(box_);
  }

  // false outside the box
  bool operator()(const Exponent& u) const { return in_box(u) && bits_[index(u)]; }

  void set(const Exponent& u, bool v) { bits_[index(u)] = v; }

  // lexicographic order
  template <class F>
  void for_each_point(F&& f) const {
    if (box_.dim() == 1) {
      for (Int a = 0; a <= box_[0]; ++a) f(Exponent(a));
    } else {
      for (Int a = 0; a <= box_[0]; ++a)
        for (Int b = 0; b <= box_[1]; ++b) f(Exponent(a, b));
    }
  }

  std::vector<Exponent> members() const {
    std::vector<Exponent> out;
    for_each_point([&](const Exponent& u) {
      if (bits_[index(u)]) out.push_back(u);
    });
    return out;
  }

  std::size_t index(const Exponent& u) const {
    return static_cast<std::size_t>(u[0] * height_ + (box_.dim() == 2 ? u[1] : 0));
  }

 private:
  Exponent box_;
  Int width_ = 0;
  Int height_ = 0;
  std::vector<bool> bits_;
};

// All points of the box in graded-lexicographic order.
inline std::vector<Exponent> box_points_graded(const Exponent& box) {
  std::vector<Exponent> pts;
  BoxTable(box).for_each_point([&](const Exponent& u) { pts.push_back(u); });
  std::sort(pts.begin(), pts.end(), GradedLexLess{});
  return pts;
}

}  // namespace sclosure

#endif  // SCLOSURE_EXPONENT_HPP
