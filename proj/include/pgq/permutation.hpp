#pragma once

// Permutations of {0, ..., n-1} acting on the right: x^(gh) = (x^g)^h.

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace pgq {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  /// Takes an image array; throws unless it is a bijection.
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) throw std::invalid_argument("image array is not a bijection");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
    Permutation r(degree);
    for (const auto& c : cycles) {
      if (c.size() < 2) continue;
      Permutation cyc(degree);
      const Point* first = c.begin();
      for (auto it = c.begin(); it != c.end(); ++it) {
        auto next = it + 1 == c.end() ? first : it + 1;
        if (*it >= degree) throw std::out_of_range("cycle point out of range");
        cyc.images_[*it] = *next;
      }
      r = r * Permutation(std::move(cyc.images_));
    }
    return r;
  }

  static Permutation transposition(std::size_t degree, Point a, Point b) {
    Permutation r(degree);
    std::swap(r.images_[a], r.images_[b]);
    return r;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  Point image(Point x) const { return images_.at(x); }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (Point i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (Point i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
    return r;
  }

  /// this then other.
  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw std::invalid_argument("degree mismatch in product");
    Permutation r;
    r.images_.resize(g.images_.size());
    for (std::size_t i = 0; i < g.images_.size(); ++i) r.images_[i] = h.images_[g.images_[i]];
    return r;
  }

  Permutation& operator*=(const Permutation& h) {
    if (degree() != h.degree()) throw std::invalid_argument("degree mismatch in product");
    for (auto& x : images_) x = h.images_[x];
    return *this;
  }

  /// g^h = h^-1 g h.
  Permutation conjugate_by(const Permutation& h) const { return h.inverse() * *this * h; }

  std::vector<Point> support() const {
    std::vector<Point> s;
    for (Point i = 0; i < images_.size(); ++i)
      if (images_[i] != i) s.push_back(i);
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& g) {
  std::vector<bool> done(g.degree(), false);
  bool any = false;
  for (Point i = 0; i < g.degree(); ++i) {
    if (done[i] || g[i] == i) continue;
    any = true;
    os << '(';
    for (Point x = i; !done[x]; x = g[x]) {
      done[x] = true;
      os << x << (g[x] == i ? "" : " ");
    }
    os << ')';
  }
  if (!any) os << "()";
  return os;
}

}  // namespace pgq
