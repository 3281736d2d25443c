#include "thurston/model.hpp"

namespace thurston {

HPoint model_origin(Space s) {
  if (s == Space::S2xR || s == Space::H2xR) return HPoint(1, 1, 0, 0);
  return HPoint(1, 0, 0, 0);
}

bool in_domain(Space s, const HPoint& p) {
  if (p.c[0] <= 0) return false;
  Vec3 a = p.affine();
  switch (s) {
    case Space::S2xR:
      return dot(a, a) > 0;
    case Space::H2xR:
      return a.x > 0 && a.x * a.x - a.y * a.y - a.z * a.z > 0;
    case Space::Sl2R:
      return 1 + a.x * a.x - a.y * a.y - a.z * a.z > 0;
    case Space::Nil:
    case Space::Sol:
      return true;
  }
  return false;
}

// --- Nil ---

Vec3 nil_mul(const Vec3& g, const Vec3& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

Vec3 nil_inverse(const Vec3& g) {
  return {-g.x, -g.y, g.x * g.y - g.z};
}

ProjMap nil_translation(const Vec3& g) {
  Mat4 m{{{1, g.x, g.y, g.z},
          {0, 1, 0, 0},
          {0, 0, 1, g.x},
          {0, 0, 0, 1}}};
  return ProjMap(m);
}

Vec3 nil_rotation_apply(const Vec3& p, double omega) {
  double c = std::cos(omega), s = std::sin(omega);
  double c2 = std::cos(2 * omega), s2 = std::sin(2 * omega);
  Vec3 r;
  r.x = p.x * c - p.y * s;
  r.y = p.x * s + p.y * c;
  r.z = p.z - 0.5 * p.x * p.y + 0.25 * (p.x * p.x - p.y * p.y) * s2 +
        0.5 * p.x * p.y * c2;
  return r;
}

Vec3 nil_shear(const Vec3& p) { return {p.x, p.y, p.z - 0.5 * p.x * p.y}; }
Vec3 nil_unshear(const Vec3& p) { return {p.x, p.y, p.z + 0.5 * p.x * p.y}; }

// --- Sol ---

Vec3 sol_mul(const Vec3& g, const Vec3& h) {
  return {h.x + g.x * std::exp(-h.z), h.y + g.y * std::exp(h.z), h.z + g.z};
}

Vec3 sol_inverse(const Vec3& g) {
  return {-g.x * std::exp(g.z), -g.y * std::exp(-g.z), -g.z};
}

ProjMap sol_translation(const Vec3& g) {
  Mat4 m{{{1, g.x, g.y, g.z},
          {0, std::exp(-g.z), 0, 0},
          {0, 0, std::exp(g.z), 0},
          {0, 0, 0, 1}}};
  return ProjMap(m);
}

ProjMap sol_stabilizer_flip_y() {
  Mat4 m = mat4_identity();
  m[2][2] = -1;
  return ProjMap(m);
}

ProjMap sol_stabilizer_swap_xy() {
  Mat4 m{};
  m[0][0] = 1;
  m[1][2] = 1;
  m[2][1] = 1;
  m[3][3] = -1;
  return ProjMap(m);
}

std::array<ProjMap, 8> sol_stabilizer_elements() {
  ProjMap a = sol_stabilizer_flip_y();
  ProjMap b = sol_stabilizer_swap_xy();
  ProjMap e;
  std::array<ProjMap, 8> out{e,
                             a,
                             b,
                             a.compose(b),
                             b.compose(a),
                             a.compose(b).compose(a),
                             b.compose(a).compose(b),
                             a.compose(b).compose(a).compose(b)};
  return out;
}

// --- SL(2,R) cover ---

namespace {

// 2x2 matrix picture of a model point; right multiplications are the
// point translations.
struct M22 {
  double a, b, c, d;  // [[d, b], [c, a]]
};

M22 to_m22(const Vec4& x) {
  return {x[0] + x[3], x[1] + x[2], -x[1] + x[2], x[0] - x[3]};
}

Vec4 from_m22(const M22& m) {
  return {(m.a + m.d) / 2, (m.b - m.c) / 2, (m.b + m.c) / 2, (m.a - m.d) / 2};
}

M22 m22_mul(const M22& p, const M22& q) {
  // [[d,b],[c,a]] layout
  return {p.c * q.b + p.a * q.a, p.d * q.b + p.b * q.a,
          p.c * q.d + p.a * q.c, p.d * q.d + p.b * q.c};
}

ProjMap right_translation(const M22& g) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1;
    Vec4 img = from_m22(m22_mul(to_m22(e), g));
    for (int j = 0; j < 4; ++j) m[i][j] = img[j];
  }
  return ProjMap(m);
}

}  // namespace

ProjMap sl2r_fibre_translation(double phi) {
  double c = std::cos(phi), s = std::sin(phi);
  Mat4 m{{{c, s, 0, 0}, {-s, c, 0, 0}, {0, 0, c, -s}, {0, 0, s, c}}};
  return ProjMap(m);
}

ProjMap sl2r_translation(const HPoint& g) {
  if (!in_domain(Space::Sl2R, g))
    throw std::domain_error("point outside the sl2r model domain");
  return right_translation(to_m22(g.normalized().c));
}

HPoint sl2r_foot_point(const HPoint& p) {
  const Vec4& x = p.c;
  return HPoint(x[0] * x[0] + x[1] * x[1], 0, x[0] * x[2] - x[1] * x[3],
                x[0] * x[3] + x[1] * x[2]);
}

ProjMap sl2r_base_rotation(double lambda) {
  double c = std::cos(lambda), s = std::sin(lambda);
  Mat4 m{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, c, s}, {0, 0, -s, c}}};
  return ProjMap(m);
}

// --- products ---

double product_fibre_coord(Space s, const HPoint& p) {
  Vec3 a = p.affine();
  if (s == Space::S2xR) return 0.5 * std::log(dot(a, a));
  if (s == Space::H2xR) {
    double q = a.x * a.x - a.y * a.y - a.z * a.z;
    if (q <= 0 || a.x <= 0)
      throw std::domain_error("point outside the h2xr model domain");
    return 0.5 * std::log(q);
  }
  throw std::invalid_argument("fibre coordinate needs a product space");
}

Vec3 product_base_unit(Space s, const HPoint& p) {
  Vec3 a = p.affine();
  double t = product_fibre_coord(s, p);
  return a / std::exp(t);
}

namespace {

// Rotation (row-vector convention) carrying unit p to unit q.
Mat3 rotation_taking(const Vec3& p, const Vec3& q) {
  double g = dot(p, q);
  if (1 + g < 1e-12) {
    // Nearly antipodal: go through an intermediate perpendicular.
    Vec3 w = std::fabs(p.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    w = normalized(w - p * dot(w, p));
    return mat3_mul(rotation_taking(p, w), rotation_taking(w, q));
  }
  Vec3 h = p + q;
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    Vec3 e{};
    e[i] = 1;
    Vec3 img = e - h * (dot(e, h) / (1 + g)) + q * (2 * dot(e, p));
    for (int j = 0; j < 3; ++j) m[i][j] = img[j];
  }
  return m;
}

// Lorentz boost (row-vector convention) carrying upper-sheet p to q,
// with the (+,-,-) bilinear form.
Mat3 boost_taking(const Vec3& p, const Vec3& q) {
  double g = ldot(p, q);  // >= 1 on one sheet
  Vec3 h = p + q;
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    Vec3 e{};
    e[i] = 1;
    Vec3 img = e - h * (ldot(e, h) / (1 + g)) + q * (2 * ldot(e, p));
    for (int j = 0; j < 3; ++j) m[i][j] = img[j];
  }
  return m;
}

ProjMap product_to_origin(Space s, const HPoint& g) {
  double t = product_fibre_coord(s, g);
  Vec3 base = product_base_unit(s, g);
  Vec3 e1{1, 0, 0};
  Mat3 l = (s == Space::S2xR) ? rotation_taking(base, e1) : boost_taking(base, e1);
  double f = std::exp(-t);
  Mat4 m{};
  m[0][0] = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i + 1][j + 1] = f * l[i][j];
  return ProjMap(m);
}

}  // namespace

ProjMap product_translation(Space s, const HPoint& g) {
  return product_to_origin(s, g).inverse();
}

ProjMap translate_to_origin(Space s, const HPoint& p) {
  switch (s) {
    case Space::S2xR:
    case Space::H2xR:
      return product_to_origin(s, p);
    case Space::Nil:
      return nil_translation(nil_inverse(p.affine()));
    case Space::Sol:
      return sol_translation(sol_inverse(p.affine()));
    case Space::Sl2R:
      return sl2r_translation(p).inverse();
  }
  throw std::invalid_argument("bad space");
}

ProjMap translate_from_origin(Space s, const HPoint& p) {
  switch (s) {
    case Space::S2xR:
    case Space::H2xR:
      return product_translation(s, p);
    case Space::Nil:
      return nil_translation(p.affine());
    case Space::Sol:
      return sol_translation(p.affine());
    case Space::Sl2R:
      return sl2r_translation(p);
  }
  throw std::invalid_argument("bad space");
}

}  // namespace thurston
