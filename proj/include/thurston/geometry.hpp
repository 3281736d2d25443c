#pragma once
// Projective model primitives shared by all five homogeneous spaces.
// Points are homogeneous row 4-vectors up to positive scale, planes are
// dual column forms, and isometries act on point rows from the right.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thurston {

enum class Space { S2xR, H2xR, Nil, Sl2R, Sol };

std::string space_name(Space s);
Space space_from_name(const std::string& name);

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double a) const { return {x * a, y * a, z * a}; }
  Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
// Lorentz product of signature (+,-,-) used on the H^2 sheet.
inline double ldot(const Vec3& a, const Vec3& b) {
  return a.x * b.x - a.y * b.y - a.z * b.z;
}

using Vec4 = std::array<double, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Vec3 mat3_apply_row(const Vec3& v, const Mat3& m);  // row vector times m
double mat3_det(const Mat3& m);
Mat3 mat3_inverse(const Mat3& m);
bool mat3_solve(const Mat3& m, const Vec3& rhs, Vec3& out);

Mat4 mat4_identity();
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Vec4 mat4_apply_row(const Vec4& v, const Mat4& m);
Mat4 mat4_inverse(const Mat4& m);
double mat4_norm_inf(const Mat4& m);

// Point of the projective model. Stored with positive first coordinate
// whenever the point lies in the affine chart x0 != 0.
struct HPoint {
  Vec4 c{1, 0, 0, 0};

  HPoint() = default;
  HPoint(double x0, double x1, double x2, double x3) : c{x0, x1, x2, x3} {}
  explicit HPoint(const Vec3& affine) : c{1, affine.x, affine.y, affine.z} {}

  double operator[](int i) const { return c[i]; }
  Vec3 affine() const {
    if (std::fabs(c[0]) < 1e-300)
      throw std::domain_error("point at the ideal plane has no affine image");
    return {c[1] / c[0], c[2] / c[0], c[3] / c[0]};
  }
  // Scale so that x0 = 1 (affine chart representative).
  HPoint normalized() const {
    Vec3 a = affine();
    return HPoint(a);
  }
};

// Dual plane form; incidence with points by contraction.
struct HPlane {
  Vec4 u{0, 0, 0, 0};

  HPlane() = default;
  HPlane(double u0, double u1, double u2, double u3) : u{u0, u1, u2, u3} {}
};

inline double incidence(const HPoint& x, const HPlane& p) {
  return x.c[0] * p.u[0] + x.c[1] * p.u[1] + x.c[2] * p.u[2] + x.c[3] * p.u[3];
}

// Collineation with cached inverse. Points transform as row * m,
// planes by m_inv * column, which keeps incidence invariant.
struct ProjMap {
  Mat4 m = mat4_identity();
  Mat4 m_inv = mat4_identity();

  ProjMap() = default;
  explicit ProjMap(const Mat4& mat);

  HPoint apply(const HPoint& x) const;
  HPlane apply(const HPlane& p) const;
  ProjMap compose(const ProjMap& then) const;  // this first, `then` second
  ProjMap inverse() const;
  double condition_estimate() const;
};

double max_abs_diff(const Vec4& a, const Vec4& b);
// Distance between normalized representatives; both points must be affine.
double affine_gap(const HPoint& a, const HPoint& b);

}  // namespace thurston
