#pragma once

// Elementary moves of the generalized sliding puzzle on PG(2,q) and the
// generators of the hole group.
//
// For distinct points b, c with representatives u, v, the involution t[b,c]
// maps <u + s v> to <u - s v> for s != 0 and fixes everything else. The
// elementary move h[b,c] (hole at b, counter at c) is (b c) t[b,c]; both
// factors commute. Permutations act on the right, so a path
// b0, b1, ..., bs composes as h[b0,b1] h[b1,b2] ... h[b(s-1),bs].

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pgq/permutation.hpp"
#include "pgq/plane.hpp"

namespace pgq {

class move_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sequence of hole positions; consecutive entries differ.
using HolePath = std::vector<PointId>;

struct GroupoidElement {
  HolePath path;
  Permutation perm;

  PointId source() const { return path.front(); }
  PointId target() const { return path.back(); }
};

/// The transposed pairs of t[beta,gamma], each pair ordered by the
/// parameter s in code order (pairs <u+sv>, <u-sv> reported once).
inline std::vector<std::pair<PointId, PointId>> involution_pairs(const Plane& pl, PointId beta, PointId gamma) {
  if (beta == gamma) throw move_error("involution needs distinct points");
  const Field& f = pl.field();
  const Vec3& u = pl.coords(beta);
  const Vec3& v = pl.coords(gamma);
  std::vector<std::pair<PointId, PointId>> pairs;
  std::vector<bool> seen(pl.size(), false);
  for (std::uint32_t c = 1; c < f.order(); ++c) {
    const FieldElement s{c};
    const FieldElement ms = f.neg(s);
    Vec3 plus{}, minus{};
    for (int i = 0; i < 3; ++i) {
      plus[i] = f.add(u[i], f.mul(s, v[i]));
      minus[i] = f.add(u[i], f.mul(ms, v[i]));
    }
    const PointId a = pl.id_of(plus), b = pl.id_of(minus);
    if (seen[a]) continue;
    seen[a] = seen[b] = true;
    pairs.emplace_back(a, b);
  }
  return pairs;
}

inline Permutation involution_t(const Plane& pl, PointId beta, PointId gamma) {
  std::vector<Point> img(pl.size());
  for (Point i = 0; i < img.size(); ++i) img[i] = i;
  for (auto [a, b] : involution_pairs(pl, beta, gamma)) {
    img[a] = b;
    img[b] = a;
  }
  return Permutation(std::move(img));
}

/// h[beta,gamma]: hole at beta, the counter on gamma slides into it.
inline Permutation elementary_move(const Plane& pl, PointId beta, PointId gamma) {
  if (beta == gamma) throw move_error("elementary move needs the hole and a distinct counter point");
  std::vector<Point> img(pl.size());
  for (Point i = 0; i < img.size(); ++i) img[i] = i;
  for (auto [a, b] : involution_pairs(pl, beta, gamma)) {
    img[a] = b;
    img[b] = a;
  }
  img[beta] = gamma;
  img[gamma] = beta;
  return Permutation(std::move(img));
}

inline GroupoidElement compose_path(const Plane& pl, HolePath path) {
  if (path.empty()) throw move_error("hole path must have at least one point");
  for (PointId p : path)
    if (p >= pl.size()) throw move_error("hole path point out of range");
  Permutation perm = Permutation::identity(pl.size());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i] == path[i + 1]) throw move_error("hole path repeats a point consecutively");
    perm *= elementary_move(pl, path[i], path[i + 1]);
  }
  return {std::move(path), std::move(perm)};
}

/// Groupoid product; defined only when a ends where b starts.
inline GroupoidElement concatenate(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.target() != b.source()) throw move_error("groupoid product undefined: paths do not meet");
  GroupoidElement r{a.path, a.perm * b.perm};
  r.path.insert(r.path.end(), b.path.begin() + 1, b.path.end());
  return r;
}

/// x[beta,gamma] = h[alpha,beta] h[beta,gamma] h[gamma,alpha].
inline Permutation x_generator(const Plane& pl, PointId alpha, PointId beta, PointId gamma) {
  if (alpha == beta || beta == gamma || alpha == gamma)
    throw move_error("x generator needs three distinct points");
  return compose_path(pl, {alpha, beta, gamma, alpha}).perm;
}

struct GeneratorSet {
  std::vector<Permutation> generators;
  std::size_t raw_count = 0;       // ordered pairs examined
  std::size_t identity_count = 0;  // dropped as trivial
};

/// Every nontrivial x[beta,gamma] for ordered pairs of distinct points of
/// P(q) \ {alpha}, in pair-lexicographic order.
inline GeneratorSet hole_group_generators(const Plane& pl, PointId alpha) {
  if (alpha >= pl.size()) throw move_error("alpha out of range");
  GeneratorSet out;
  const std::vector<Permutation> h_from_alpha = [&] {
    std::vector<Permutation> v(pl.size());
    for (PointId b = 0; b < pl.size(); ++b)
      if (b != alpha) v[b] = elementary_move(pl, alpha, b);
    return v;
  }();
  for (PointId b = 0; b < pl.size(); ++b) {
    if (b == alpha) continue;
    for (PointId c = 0; c < pl.size(); ++c) {
      if (c == alpha || c == b) continue;
      ++out.raw_count;
      // h[c,alpha] is the inverse of h[alpha,c]
      Permutation x = h_from_alpha[b] * elementary_move(pl, b, c) * h_from_alpha[c];
      if (x.is_identity()) {
        ++out.identity_count;
        continue;
      }
      out.generators.push_back(std::move(x));
    }
  }
  return out;
}

/// Generators of G(ell): x[beta,gamma] for distinct beta, gamma on ell \ {alpha}.
inline GeneratorSet line_group_generators(const Plane& pl, PointId alpha, LineId ell) {
  if (!pl.incident(alpha, ell)) throw move_error("alpha is not on the line");
  GeneratorSet out;
  for (PointId b : pl.points_on(ell)) {
    if (b == alpha) continue;
    for (PointId c : pl.points_on(ell)) {
      if (c == alpha || c == b) continue;
      ++out.raw_count;
      Permutation x = x_generator(pl, alpha, b, c);
      if (x.is_identity()) {
        ++out.identity_count;
        continue;
      }
      out.generators.push_back(std::move(x));
    }
  }
  return out;
}

/// Points of ell other than alpha, ascending.
inline std::vector<PointId> line_minus_point(const Plane& pl, LineId ell, PointId alpha) {
  std::vector<PointId> out;
  for (PointId p : pl.points_on(ell))
    if (p != alpha) out.push_back(p);
  return out;
}

}  // namespace pgq
