#pragma once

// The projective plane PG(2,q) over an odd-order field.
//
// Points are 1-dimensional subspaces of GF(q)^3, stored by their normalized
// representative (first nonzero coordinate 1). Ids follow the enumeration
//   (1, y, z)  -> y*q + z
//   (0, 1, z)  -> q^2 + z
//   (0, 0, 1)  -> q^2 + q
// Lines use the same enumeration on their normalized covectors. Matrices act
// on row vectors from the right.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pgq/gf.hpp"

namespace pgq {

using PointId = std::uint32_t;
using LineId = std::uint32_t;
using Vec3 = std::array<FieldElement, 3>;

class plane_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 3x3 matrix over GF(q), acting on row vectors by right multiplication.
struct ProjMatrix {
  std::array<std::array<FieldElement, 3>, 3> m{};

  static ProjMatrix identity() {
    ProjMatrix r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = FieldElement{1};
    return r;
  }
  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
};

class Plane {
 public:
  explicit Plane(Field field) : field_(std::move(field)) {
    const std::uint32_t q = field_.order();
    n_ = q * q + q + 1;
    points_.reserve(n_);
    for (std::uint32_t id = 0; id < n_; ++id) points_.push_back(coords_of_rank(id));

    lines_.assign(n_, {});
    lines_of_point_.assign(n_, {});
    for (LineId l = 0; l < n_; ++l) {
      const Vec3& c = points_[l];  // covectors share the point enumeration
      for (PointId p = 0; p < n_; ++p) {
        if (dot(points_[p], c).code == 0) {
          lines_[l].push_back(p);
          lines_of_point_[p].push_back(l);
        }
      }
    }
  }

  const Field& field() const noexcept { return field_; }
  std::uint32_t q() const noexcept { return field_.order(); }
  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t num_lines() const noexcept { return n_; }

  const Vec3& coords(PointId p) const { return points_.at(p); }
  const Vec3& covector(LineId l) const { return points_.at(l); }

  /// Incident point ids, ascending.
  const std::vector<PointId>& points_on(LineId l) const { return lines_.at(l); }
  /// Lines through p, ascending.
  const std::vector<LineId>& lines_through(PointId p) const { return lines_of_point_.at(p); }

  bool incident(PointId p, LineId l) const { return dot(coords(p), covector(l)).code == 0; }

  FieldElement dot(const Vec3& a, const Vec3& b) const {
    FieldElement s = field_.zero();
    for (int i = 0; i < 3; ++i) s = field_.add(s, field_.mul(a[i], b[i]));
    return s;
  }

  Vec3 cross(const Vec3& a, const Vec3& b) const {
    const Field& f = field_;
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
  }

  /// Scales v so its first nonzero coordinate is 1.
  Vec3 normalize(const Vec3& v) const {
    for (int i = 0; i < 3; ++i) {
      if (v[i].code != 0) {
        const FieldElement s = field_.inv(v[i]);
        return {field_.mul(v[0], s), field_.mul(v[1], s), field_.mul(v[2], s)};
      }
    }
    throw plane_error("zero vector has no projective point");
  }

  /// Id of the point spanned by any nonzero vector.
  PointId id_of(const Vec3& v) const {
    const Vec3 c = normalize(v);
    const std::uint32_t q = this->q();
    if (c[0].code == 1) return c[1].code * q + c[2].code;
    if (c[1].code == 1) return q * q + c[2].code;
    return q * q + q;
  }

  LineId line_id_of(const Vec3& covector) const { return id_of(covector); }

  LineId line_through(PointId a, PointId b) const {
    if (a == b) throw plane_error("line_through needs two distinct points");
    return line_id_of(cross(coords(a), coords(b)));
  }

  /// The common point of two distinct lines.
  PointId meet(LineId l, LineId m) const {
    if (l == m) throw plane_error("meet needs two distinct lines");
    return id_of(cross(covector(l), covector(m)));
  }

  bool collinear(PointId a, PointId b, PointId c) const {
    if (a == b || b == c || a == c) throw plane_error("collinear needs three distinct points");
    return incident(c, line_through(a, b));
  }

  Vec3 times(const Vec3& v, const ProjMatrix& m) const {
    Vec3 r{};
    for (int j = 0; j < 3; ++j) {
      FieldElement s = field_.zero();
      for (int i = 0; i < 3; ++i) s = field_.add(s, field_.mul(v[i], m.m[i][j]));
      r[j] = s;
    }
    return r;
  }

  ProjMatrix multiply(const ProjMatrix& a, const ProjMatrix& b) const {
    ProjMatrix r;
    for (int i = 0; i < 3; ++i) r.m[i] = times(a.m[i], b);
    return r;
  }

  FieldElement determinant(const ProjMatrix& a) const {
    const auto& m = a.m;
    const Field& f = field_;
    auto minor = [&](int r0, int r1, int c0, int c1) {
      return f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
    };
    FieldElement d = f.mul(m[0][0], minor(1, 2, 1, 2));
    d = f.sub(d, f.mul(m[0][1], minor(1, 2, 0, 2)));
    d = f.add(d, f.mul(m[0][2], minor(1, 2, 0, 1)));
    return d;
  }

  ProjMatrix inverse(const ProjMatrix& a) const {
    const FieldElement det = determinant(a);
    if (det.code == 0) throw plane_error("singular matrix");
    const Field& f = field_;
    const auto& m = a.m;
    const FieldElement s = f.inv(det);
    ProjMatrix r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        // adjugate: cofactor of (j, i)
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        const FieldElement cof = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
        r.m[i][j] = f.mul(cof, s);
      }
    }
    return r;
  }

  PointId apply(const ProjMatrix& m, PointId p) const {
    if (determinant(m).code == 0) throw plane_error("singular matrix");
    return id_of(times(coords(p), m));
  }

  /// Images of every point under m, indexed by point id.
  std::vector<PointId> induced_images(const ProjMatrix& m) const {
    if (determinant(m).code == 0) throw plane_error("singular matrix");
    std::vector<PointId> out(n_);
    for (PointId p = 0; p < n_; ++p) out[p] = id_of(times(points_[p], m));
    return out;
  }

  /// An element of the stabilizer of alpha and ell: the lower triangular
  ///   [1 0 0; d a 0; e f b]
  /// expressed in a basis whose first vector spans alpha, second spans the
  /// least-id other point of ell, and third spans the least-id point off ell.
  ProjMatrix line_stabilizer_element(PointId alpha, LineId ell, FieldElement a, FieldElement b,
                                     FieldElement d, FieldElement e, FieldElement f) const {
    if (!incident(alpha, ell)) throw plane_error("alpha is not on ell");
    if (a.code == 0 || b.code == 0) throw plane_error("diagonal stabilizer parameters must be nonzero");
    PointId second = 0;
    for (PointId p : points_on(ell)) {
      if (p != alpha) {
        second = p;
        break;
      }
    }
    PointId third = 0;
    while (incident(third, ell)) ++third;

    ProjMatrix basis;
    basis.m = {coords(alpha), coords(second), coords(third)};
    ProjMatrix tri;
    tri.m = {{{field_.one(), field_.zero(), field_.zero()}, {d, a, field_.zero()}, {e, f, b}}};
    return multiply(multiply(inverse(basis), tri), basis);
  }

 private:
  Vec3 coords_of_rank(std::uint32_t id) const {
    const std::uint32_t q = field_.order();
    if (id < q * q) return {FieldElement{1}, FieldElement{id / q}, FieldElement{id % q}};
    if (id < q * q + q) return {FieldElement{0}, FieldElement{1}, FieldElement{id - q * q}};
    return {FieldElement{0}, FieldElement{0}, FieldElement{1}};
  }

  Field field_;
  std::uint32_t n_ = 0;
  std::vector<Vec3> points_;
  std::vector<std::vector<PointId>> lines_;
  std::vector<std::vector<LineId>> lines_of_point_;
};

}  // namespace pgq
