#include "thurston/geometry.hpp"

#include <algorithm>

namespace thurston {

std::string space_name(Space s) {
  switch (s) {
    case Space::S2xR: return "s2xr";
    case Space::H2xR: return "h2xr";
    case Space::Nil: return "nil";
    case Space::Sl2R: return "sl2r";
    case Space::Sol: return "sol";
  }
  return "?";
}

Space space_from_name(const std::string& name) {
  if (name == "s2xr") return Space::S2xR;
  if (name == "h2xr") return Space::H2xR;
  if (name == "nil") return Space::Nil;
  if (name == "sl2r") return Space::Sl2R;
  if (name == "sol") return Space::Sol;
  throw std::invalid_argument("unknown space: " + name);
}

Mat3 mat3_identity() {
  return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Vec3 mat3_apply_row(const Vec3& v, const Mat3& m) {
  Vec3 r;
  for (int j = 0; j < 3; ++j)
    r[j] = v[0] * m[0][j] + v[1] * m[1][j] + v[2] * m[2][j];
  return r;
}

double mat3_det(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 mat3_inverse(const Mat3& m) {
  double d = mat3_det(m);
  if (std::fabs(d) < 1e-300) throw std::domain_error("singular 3x3 matrix");
  Mat3 r;
  r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / d;
  r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / d;
  r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / d;
  r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / d;
  r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / d;
  r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / d;
  r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / d;
  r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / d;
  r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / d;
  return r;
}

bool mat3_solve(const Mat3& m, const Vec3& rhs, Vec3& out) {
  double d = mat3_det(m);
  if (std::fabs(d) < 1e-250) return false;
  Mat3 inv = mat3_inverse(m);
  out = {inv[0][0] * rhs.x + inv[0][1] * rhs.y + inv[0][2] * rhs.z,
         inv[1][0] * rhs.x + inv[1][1] * rhs.y + inv[1][2] * rhs.z,
         inv[2][0] * rhs.x + inv[2][1] * rhs.y + inv[2][2] * rhs.z};
  return true;
}

Mat4 mat4_identity() {
  Mat4 r{};
  for (int i = 0; i < 4; ++i) r[i][i] = 1;
  return r;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Vec4 mat4_apply_row(const Vec4& v, const Mat4& m) {
  Vec4 r{};
  for (int j = 0; j < 4; ++j) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += v[i] * m[i][j];
    r[j] = s;
  }
  return r;
}

Mat4 mat4_inverse(const Mat4& m) {
  // Gauss-Jordan with partial pivoting.
  Mat4 a = m;
  Mat4 inv = mat4_identity();
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-300)
      throw std::domain_error("singular 4x4 matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    double p = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0) continue;
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

double mat4_norm_inf(const Mat4& m) {
  double best = 0;
  for (int i = 0; i < 4; ++i) {
    double s = 0;
    for (int j = 0; j < 4; ++j) s += std::fabs(m[i][j]);
    best = std::max(best, s);
  }
  return best;
}

ProjMap::ProjMap(const Mat4& mat) : m(mat), m_inv(mat4_inverse(mat)) {
  if (condition_estimate() > 1e12)
    throw std::domain_error("collineation matrix is numerically singular");
}

HPoint ProjMap::apply(const HPoint& x) const {
  Vec4 r = mat4_apply_row(x.c, m);
  return HPoint(r[0], r[1], r[2], r[3]);
}

HPlane ProjMap::apply(const HPlane& p) const {
  // Column action by the inverse keeps x.u invariant.
  HPlane r;
  for (int i = 0; i < 4; ++i) {
    double s = 0;
    for (int j = 0; j < 4; ++j) s += m_inv[i][j] * p.u[j];
    r.u[i] = s;
  }
  return r;
}

ProjMap ProjMap::compose(const ProjMap& then) const {
  ProjMap r;
  r.m = mat4_mul(m, then.m);
  r.m_inv = mat4_mul(then.m_inv, m_inv);
  return r;
}

ProjMap ProjMap::inverse() const {
  ProjMap r;
  r.m = m_inv;
  r.m_inv = m;
  return r;
}

double ProjMap::condition_estimate() const {
  return mat4_norm_inf(m) * mat4_norm_inf(m_inv);
}

double max_abs_diff(const Vec4& a, const Vec4& b) {
  double r = 0;
  for (int i = 0; i < 4; ++i) r = std::max(r, std::fabs(a[i] - b[i]));
  return r;
}

double affine_gap(const HPoint& a, const HPoint& b) {
  Vec3 d = a.affine() - b.affine();
  return norm(d);
}

}  // namespace thurston
