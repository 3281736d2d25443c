#include "thurston/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "thurston/optim.hpp"

namespace thurston {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp(double v, double lo, double hi) {
  return std::max(lo, std::min(hi, v));
}

// sin(x)/x with a series fallback near zero.
double sinc(double x) {
  if (std::fabs(x) < 1e-4) {
    double x2 = x * x;
    return 1 - x2 / 6 + x2 * x2 / 120;
  }
  return std::sin(x) / x;
}

// (x - sin x)/x^3, smooth at zero.
double cubic_gap(double x) {
  if (std::fabs(x) < 0.5) {
    double x2 = x * x;
    return (1.0 / 6) - x2 / 120 + x2 * x2 / 5040 - x2 * x2 * x2 / 362880;
  }
  return (x - std::sin(x)) / (x * x * x);
}

// sinh(s sqrt(k))/sqrt(k), analytically continued through k <= 0.
double stretched_sinh(double s, double k) {
  double x = k * s * s;
  if (std::fabs(x) < 1e-8)
    return s * (1 + x / 6 + x * x / 120);
  if (k > 0) {
    double q = std::sqrt(k);
    return std::sinh(s * q) / q;
  }
  double q = std::sqrt(-k);
  return std::sin(s * q) / q;
}

// cosh(s sqrt(k)), analytically continued through k <= 0.
double stretched_cosh(double s, double k) {
  double x = k * s * s;
  if (std::fabs(x) < 1e-8) return 1 + x / 2 + x * x / 24;
  if (k > 0) return std::cosh(s * std::sqrt(k));
  return std::cos(s * std::sqrt(-k));
}

Vec3 s2xr_exp_affine(double u, double v, double s) {
  double t = s * std::sin(v);
  double sigma = s * std::cos(v);
  double f = std::exp(t);
  return {f * std::cos(sigma), f * std::sin(sigma) * std::cos(u),
          f * std::sin(sigma) * std::sin(u)};
}

Vec3 h2xr_exp_affine(double u, double v, double s) {
  double t = s * std::sin(v);
  double sigma = s * std::cos(v);
  double f = std::exp(t);
  return {f * std::cosh(sigma), f * std::sinh(sigma) * std::cos(u),
          f * std::sinh(sigma) * std::sin(u)};
}

}  // namespace

Vec3 unit_tangent(Space sp, double dir1, double dir2) {
  switch (sp) {
    case Space::S2xR:
    case Space::H2xR:
      // dir1 = u, dir2 = v
      return {std::sin(dir2), std::cos(dir2) * std::cos(dir1),
              std::cos(dir2) * std::sin(dir1)};
    case Space::Nil:
    case Space::Sol:
      // dir1 = alpha, dir2 = theta
      return {std::cos(dir2) * std::cos(dir1),
              std::cos(dir2) * std::sin(dir1), std::sin(dir2)};
    case Space::Sl2R:
      // dir1 = lambda, dir2 = alpha
      return {std::sin(dir2), std::cos(dir2) * std::cos(dir1),
              std::cos(dir2) * std::sin(dir1)};
  }
  throw std::invalid_argument("bad space");
}

Vec3 nil_geodesic(double alpha, double theta, double s) {
  double w = std::sin(theta), c = std::cos(theta);
  double half = 0.5 * w * s;
  double f = s * sinc(half);  // (2/w) sin(ws/2)
  Vec3 r;
  r.x = c * f * std::cos(half + alpha);
  r.y = c * f * std::sin(half + alpha);
  double sc = sinc(half);
  r.z = w * s + 0.5 * c * c * w * s * s * s * cubic_gap(w * s) +
        0.25 * c * c * s * s * sc * sc * std::sin(w * s + 2 * alpha);
  return r;
}

Vec3 sl2r_geodesic_chart(double alpha, double s) {
  double k = std::cos(2 * alpha);
  double sn = stretched_sinh(s, k);
  double cn = stretched_cosh(s, k);
  double r = std::asinh(std::cos(alpha) * sn);
  // atan2 keeps the branch continuous while s*sqrt(-k) stays below pi.
  double th = -std::atan2(std::sin(alpha) * sn, cn);
  double phi = 2 * std::sin(alpha) * s + th;
  return {r, th, phi};
}

Vec3 chart_coords(Space sp, const HPoint& p) {
  Vec3 a = p.affine();
  switch (sp) {
    case Space::S2xR: {
      double r = norm(a);
      if (r <= 0) throw std::domain_error("point outside s2xr domain");
      return {std::log(r), std::atan2(a.y, a.x), std::asin(clamp(a.z / r, -1, 1))};
    }
    case Space::H2xR: {
      double q = a.x * a.x - a.y * a.y - a.z * a.z;
      if (q <= 0 || a.x <= 0) throw std::domain_error("point outside h2xr domain");
      double e = std::sqrt(q);
      double r = std::acosh(std::max(1.0, a.x / e));
      return {0.5 * std::log(q), r, std::atan2(a.z, a.y)};
    }
    case Space::Sl2R: {
      double n = 1 + a.x * a.x - a.y * a.y - a.z * a.z;
      if (n <= 0) throw std::domain_error("point outside sl2r domain");
      double mu = 1 / std::sqrt(n);
      double ch = mu * std::sqrt(1 + a.x * a.x);
      double r = std::acosh(std::max(1.0, ch));
      double phi = std::atan(a.x);
      double theta = phi + ((a.y != 0 || a.z != 0) ? std::atan2(a.z, a.y) : 0.0);
      return {r, theta, phi};
    }
    case Space::Nil:
    case Space::Sol:
      return a;
  }
  throw std::invalid_argument("bad space");
}

HPoint chart_to_model(Space sp, const Vec3& ch) {
  switch (sp) {
    case Space::S2xR: {
      double f = std::exp(ch.x);
      return HPoint(Vec3{f * std::cos(ch.y) * std::cos(ch.z),
                         f * std::sin(ch.y) * std::cos(ch.z),
                         f * std::sin(ch.z)});
    }
    case Space::H2xR: {
      double f = std::exp(ch.x);
      return HPoint(Vec3{f * std::cosh(ch.y),
                         f * std::sinh(ch.y) * std::cos(ch.z),
                         f * std::sinh(ch.y) * std::sin(ch.z)});
    }
    case Space::Sl2R: {
      double r = ch.x, theta = ch.y, phi = ch.z;
      double x0 = std::cosh(r) * std::cos(phi);
      if (x0 <= 0)
        throw std::domain_error("sl2r chart point leaves the affine chart");
      return HPoint(x0, std::cosh(r) * std::sin(phi),
                    std::sinh(r) * std::cos(theta - phi),
                    std::sinh(r) * std::sin(theta - phi));
    }
    case Space::Nil:
    case Space::Sol:
      return HPoint(ch);
  }
  throw std::invalid_argument("bad space");
}

namespace {

Vec3 sol_accel(const Vec3& p, const Vec3& v) {
  return {-2 * v.x * v.z, 2 * v.y * v.z,
          std::exp(2 * p.z) * v.x * v.x - std::exp(-2 * p.z) * v.y * v.y};
}

Vec3 ode_accel(Space sp, const Vec3& p, const Vec3& v) {
  switch (sp) {
    case Space::S2xR: {
      // p = (t, phi, theta)
      double tn = std::tan(p.z);
      return {0, 2 * tn * v.y * v.z,
              -std::sin(p.z) * std::cos(p.z) * v.y * v.y};
    }
    case Space::H2xR: {
      // p = (t, r, alpha)
      if (std::fabs(p.y) < 1e-14) return {0, std::sinh(p.y) * std::cosh(p.y) * v.z * v.z, 0};
      return {0, std::sinh(p.y) * std::cosh(p.y) * v.z * v.z,
              -2 * (std::cosh(p.y) / std::sinh(p.y)) * v.y * v.z};
    }
    case Space::Nil: {
      double u = v.z - p.x * v.y;
      return {-u * v.y, u * v.x, v.x * v.y + p.x * v.x * u};
    }
    case Space::Sl2R: {
      // p = (r, theta, phi)
      double r = p.x, td = v.y, pd = v.z, rd = v.x;
      double s2 = std::sinh(2 * r);
      if (std::fabs(s2) < 1e-14)
        throw std::domain_error("sl2r geodesic equations need r > 0");
      double rdd = s2 * td * pd + 0.5 * (std::sinh(4 * r) - s2) * td * td;
      double th = std::tanh(r);
      double pdd = 2 * rd * th * (2 * std::sinh(r) * std::sinh(r) * td + pd);
      double tdd = -(2 * rd / s2) * ((3 * std::cosh(2 * r) - 1) * td + 2 * pd);
      return {rdd, tdd, pdd};
    }
    case Space::Sol:
      return sol_accel(p, v);
  }
  throw std::invalid_argument("bad space");
}

void rk4_step(Space sp, Vec3& p, Vec3& v, double h) {
  Vec3 k1p = v, k1v = ode_accel(sp, p, v);
  Vec3 k2p = v + k1v * (h / 2), k2v = ode_accel(sp, p + k1p * (h / 2), v + k1v * (h / 2));
  Vec3 k3p = v + k2v * (h / 2), k3v = ode_accel(sp, p + k2p * (h / 2), v + k2v * (h / 2));
  Vec3 k4p = v + k3v * h, k4v = ode_accel(sp, p + k3p * h, v + k3v * h);
  p = p + (k1p + k2p * 2 + k3p * 2 + k4p) * (h / 6);
  v = v + (k1v + k2v * 2 + k3v * 2 + k4v) * (h / 6);
}

// Sol exponential map by fixed-step integration in model coordinates.
Vec3 sol_exp_affine(double alpha, double theta, double s, int min_steps = 64) {
  if (s == 0) return {0, 0, 0};
  Vec3 p{0, 0, 0};
  Vec3 v = unit_tangent(Space::Sol, alpha, theta);
  int n = std::max(min_steps, int(std::ceil(std::fabs(s) / 0.004)));
  double h = s / n;
  for (int i = 0; i < n; ++i) rk4_step(Space::Sol, p, v, h);
  return p;
}

}  // namespace

HPoint exp_origin(const GeodesicParams& g) {
  switch (g.space) {
    case Space::S2xR:
      return HPoint(s2xr_exp_affine(g.dir1, g.dir2, g.s));
    case Space::H2xR:
      return HPoint(h2xr_exp_affine(g.dir1, g.dir2, g.s));
    case Space::Nil:
      return HPoint(nil_geodesic(g.dir1, g.dir2, g.s));
    case Space::Sl2R: {
      Vec3 ch = sl2r_geodesic_chart(g.dir2, g.s);
      ch.y += g.dir1;  // rotate the base direction
      return chart_to_model(Space::Sl2R, ch);
    }
    case Space::Sol:
      return HPoint(sol_exp_affine(g.dir1, g.dir2, g.s));
  }
  throw std::invalid_argument("bad space");
}

HPoint exp_point(Space sp, const HPoint& base, const GeodesicParams& g) {
  return translate_from_origin(sp, base).apply(exp_origin(g));
}

Mat3 metric_tensor(Space sp, const Vec3& q) {
  switch (sp) {
    case Space::S2xR: {
      double c = std::cos(q.z);
      return {{{1, 0, 0}, {0, c * c, 0}, {0, 0, 1}}};
    }
    case Space::H2xR: {
      double sh = std::sinh(q.y);
      return {{{1, 0, 0}, {0, 1, 0}, {0, 0, sh * sh}}};
    }
    case Space::Nil:
      return {{{1, 0, 0},
               {0, 1 + q.x * q.x, -q.x},
               {0, -q.x, 1}}};
    case Space::Sl2R: {
      double sh2 = std::sinh(q.x) * std::sinh(q.x);
      double ch2 = std::cosh(q.x) * std::cosh(q.x);
      return {{{1, 0, 0}, {0, sh2 * (sh2 + ch2), sh2}, {0, sh2, 1}}};
    }
    case Space::Sol:
      return {{{std::exp(2 * q.z), 0, 0},
               {0, std::exp(-2 * q.z), 0},
               {0, 0, 1}}};
  }
  throw std::invalid_argument("bad space");
}

double volume_element(Space sp, const Vec3& q) {
  switch (sp) {
    case Space::S2xR:
      return std::fabs(std::cos(q.z));
    case Space::H2xR:
      return std::sinh(q.y);
    case Space::Nil:
    case Space::Sol:
      return 1.0;
    case Space::Sl2R:
      return 0.5 * std::sinh(2 * q.x);
  }
  throw std::invalid_argument("bad space");
}

Mat3 metric_cartesian(Space sp, const HPoint& p) {
  switch (sp) {
    case Space::S2xR: {
      Vec3 a = p.affine();
      double r2 = dot(a, a);
      Mat3 g{};
      for (int i = 0; i < 3; ++i) g[i][i] = 1 / r2;
      return g;
    }
    case Space::Nil: {
      Vec3 a = p.affine();
      return metric_tensor(Space::Nil, a);
    }
    case Space::Sol: {
      Vec3 a = p.affine();
      return metric_tensor(Space::Sol, a);
    }
    default: {
      // Pull back the identity at the origin through the point translation.
      ProjMap t = translate_to_origin(sp, p);
      Vec3 a = p.affine();
      double h = 1e-6;
      Mat3 jac{};  // jac[i][j] = d(image_i)/d(source_j)
      for (int j = 0; j < 3; ++j) {
        Vec3 ap = a, am = a;
        ap[j] += h;
        am[j] -= h;
        Vec3 fp = t.apply(HPoint(ap)).affine();
        Vec3 fm = t.apply(HPoint(am)).affine();
        for (int i = 0; i < 3; ++i) jac[i][j] = (fp[i] - fm[i]) / (2 * h);
      }
      Mat3 g{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double s = 0;
          for (int k = 0; k < 3; ++k) s += jac[k][i] * jac[k][j];
          g[i][j] = s;
        }
      return g;
    }
  }
}

double angle(Space sp, const Vec3& chart_pos, const Vec3& tu, const Vec3& tv) {
  Mat3 g = metric_tensor(sp, chart_pos);
  auto ip = [&](const Vec3& a, const Vec3& b) {
    double s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += a[i] * g[i][j] * b[j];
    return s;
  };
  double c = ip(tu, tv) / std::sqrt(ip(tu, tu) * ip(tv, tv));
  return std::acos(clamp(c, -1, 1));
}

std::vector<OdeSample> geodesic_ode(Space sp, const OdeState& init,
                                    double s_end, double step,
                                    int renorm_every) {
  std::vector<OdeSample> out;
  Vec3 p = init.pos, v = init.vel;
  int n = std::max(1, int(std::ceil(std::fabs(s_end) / step)));
  double h = s_end / n;
  out.push_back({0, {p, v}});
  for (int i = 0; i < n; ++i) {
    rk4_step(sp, p, v, h);
    if ((i + 1) % renorm_every == 0) {
      Mat3 g = metric_tensor(sp, p);
      double sp2 = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) sp2 += v[a] * g[a][b] * v[b];
      if (sp2 > 0) v = v / std::sqrt(sp2);
    }
    out.push_back({(i + 1) * h, {p, v}});
  }
  return out;
}

namespace {

DistanceResult product_distance_from_origin(Space sp, const HPoint& q) {
  DistanceResult res;
  res.params.space = sp;
  double t = product_fibre_coord(sp, q);
  Vec3 b = product_base_unit(sp, q);
  double sigma, u;
  if (sp == Space::S2xR) {
    sigma = std::acos(clamp(b.x, -1, 1));
    res.ambiguous = sigma > kPi - 1e-9;
    if (sigma > 1e-12 && !res.ambiguous) {
      double sn = std::sin(sigma);
      u = std::atan2(b.z / sn, b.y / sn);
    } else if (res.ambiguous) {
      u = 0;  // any base direction works
    } else {
      u = 0;
    }
  } else {
    sigma = std::acosh(std::max(1.0, b.x));
    if (sigma > 1e-12) {
      double sn = std::sinh(sigma);
      u = std::atan2(b.z / sn, b.y / sn);
    } else {
      u = 0;
    }
  }
  res.d = std::hypot(sigma, t);
  res.params.dir1 = u;
  res.params.dir2 = std::atan2(t, sigma);
  res.params.s = res.d;
  res.residual = res.ambiguous ? 0 : affine_gap(exp_origin(res.params), q);
  res.converged = true;
  return res;
}

DistanceResult nil_distance_from_origin(const HPoint& q) {
  DistanceResult res;
  res.params.space = Space::Nil;
  Vec3 a = q.affine();
  double rho = std::hypot(a.x, a.y);
  if (rho < 1e-13) {
    res.d = std::fabs(a.z);
    res.params.dir1 = 0;
    res.params.dir2 = a.z >= 0 ? kPi / 2 : -kPi / 2;
    res.params.s = res.d;
    res.residual = 0;
    res.converged = true;
    return res;
  }
  auto fn = [&](const Vec3& x) {
    Vec3 e = nil_geodesic(x.x, x.y, x.z);
    return e - a;
  };
  double L = norm(a);
  double psi = std::atan2(a.y, a.x);
  double best_s = std::numeric_limits<double>::infinity();
  NewtonResult best;
  auto try_start = [&](double al, double th, double s0) {
    NewtonResult r = newton3(fn, {al, th, s0}, 1e-12);
    if (r.converged && r.residual < 1e-9 && r.x.z > 1e-13 &&
        r.x.z < best_s - 1e-12) {
      best_s = r.x.z;
      best = r;
    }
  };
  try_start(psi, std::atan2(a.z, rho), L);
  if (!std::isfinite(best_s)) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        double al = psi + (i - 3.5) * (kPi / 4);
        double th = (j - 3.5) / 3.5 * 1.5;
        try_start(al, th, L);
        try_start(al, th, 1.5 * L + 0.5);
      }
  } else {
    // Cheap sweep to guard against a shorter branch.
    for (int j = 0; j < 8; ++j)
      try_start(psi - 0.5 * best.x.y, (j - 3.5) / 3.5 * 1.5, best_s);
  }
  if (!std::isfinite(best_s)) {
    res.converged = false;
    return res;
  }
  res.params.dir1 = best.x.x;
  res.params.dir2 = best.x.y;
  res.params.s = best.x.z;
  res.d = best.x.z;
  res.residual = best.residual;
  res.converged = true;
  return res;
}

DistanceResult sl2r_distance_from_origin(const HPoint& q) {
  DistanceResult res;
  res.params.space = Space::Sl2R;
  Vec3 ch = chart_coords(Space::Sl2R, q);  // (r, theta, phi)
  double rq = ch.x, thq = ch.y, phq = ch.z;
  if (rq < 1e-13) {
    res.d = std::fabs(phq);
    res.params.dir1 = 0;
    res.params.dir2 = phq >= 0 ? kPi / 2 : -kPi / 2;
    res.params.s = res.d;
    res.residual = affine_gap(exp_origin(res.params), q);
    res.converged = true;
    return res;
  }
  auto fn = [&](const Vec3& x) {
    Vec3 g = sl2r_geodesic_chart(x.x, x.y);
    return Vec3{g.x - rq, g.z - phq, x.z};
  };
  double h0 = std::hypot(rq, phq);
  double best_s = std::numeric_limits<double>::infinity();
  NewtonResult best;
  auto try_start = [&](double al, double s0) {
    NewtonResult r = newton3(fn, {al, s0, 0}, 1e-12);
    if (r.converged && r.residual < 1e-10 && r.x.y > 1e-13 &&
        r.x.y < best_s - 1e-12)
    {
      best_s = r.x.y;
      best = r;
    }
  };
  try_start(std::atan2(phq, rq), h0);
  for (int i = 0; i < 17; ++i) {
    double al = -1.55 + 3.1 * i / 16.0;
    try_start(al, h0);
    try_start(al, 1.5 * h0 + 0.2);
  }
  if (!std::isfinite(best_s)) {
    res.converged = false;
    return res;
  }
  Vec3 g = sl2r_geodesic_chart(best.x.x, best.x.y);
  double lambda = thq - g.y;
  lambda = std::remainder(lambda, 2 * kPi);
  res.params.dir1 = lambda;
  res.params.dir2 = best.x.x;
  res.params.s = best.x.y;
  res.d = best.x.y;
  res.residual = affine_gap(exp_origin(res.params), q);
  res.converged = res.residual < 1e-8;
  return res;
}

DistanceResult sol_distance_from_origin(const HPoint& q) {
  DistanceResult res;
  res.params.space = Space::Sol;
  Vec3 a = q.affine();
  double L = norm(a);
  if (L < 1e-13) {
    res.d = 0;
    res.converged = true;
    res.residual = 0;
    return res;
  }
  auto fn = [&](const Vec3& x) {
    return sol_exp_affine(x.x, x.y, x.z) - a;
  };
  double best_s = std::numeric_limits<double>::infinity();
  NewtonResult best;
  auto try_start = [&](double al, double th, double s0) {
    NewtonResult r = newton3(fn, {al, th, s0}, 1e-11, 80);
    if (r.converged && r.residual < 1e-9 && r.x.z > 1e-13 &&
        r.x.z < best_s - 1e-12) {
      best_s = r.x.z;
      best = r;
    }
  };
  try_start(std::atan2(a.y, a.x), std::asin(clamp(a.z / L, -1, 1)), L);
  if (!std::isfinite(best_s)) {
    for (int i = 0; i < 8 && !std::isfinite(best_s); ++i)
      for (int j = 0; j < 8; ++j) {
        double al = -kPi + (i + 0.5) * kPi / 4;
        double th = (j - 3.5) / 3.5 * 1.5;
        try_start(al, th, L);
        try_start(al, th, 1.5 * L + 0.5);
      }
  }
  if (!std::isfinite(best_s)) {
    res.converged = false;
    return res;
  }
  res.params.dir1 = best.x.x;
  res.params.dir2 = best.x.y;
  res.params.s = best.x.z;
  res.d = best.x.z;
  res.residual = best.residual;
  res.converged = true;
  return res;
}

}  // namespace

DistanceResult distance_from_origin(Space sp, const HPoint& q) {
  switch (sp) {
    case Space::S2xR:
    case Space::H2xR:
      return product_distance_from_origin(sp, q);
    case Space::Nil:
      return nil_distance_from_origin(q);
    case Space::Sl2R:
      return sl2r_distance_from_origin(q);
    case Space::Sol:
      return sol_distance_from_origin(q);
  }
  throw std::invalid_argument("bad space");
}

DistanceResult distance(Space sp, const HPoint& p, const HPoint& q) {
  ProjMap t = translate_to_origin(sp, p);
  return distance_from_origin(sp, t.apply(q));
}

double max_sphere_radius(Space sp) {
  switch (sp) {
    case Space::S2xR: return kPi;
    case Space::Nil: return 2 * kPi;
    case Space::Sl2R: return kPi / 2 - 1e-9;
    case Space::H2xR:
    case Space::Sol:
      return std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("bad space");
}

namespace {

double jacobian_density(Space sp, double u, double v, double s) {
  // |det D exp| (model coordinates) times the metric volume factor.
  double hs = 1e-5, ha = 1e-5;
  auto E = [&](double uu, double vv, double ss) {
    GeodesicParams g{sp, uu, vv, ss};
    return exp_origin(g).affine();
  };
  Vec3 du = (E(u + ha, v, s) - E(u - ha, v, s)) / (2 * ha);
  Vec3 dv = (E(u, v + ha, s) - E(u, v - ha, s)) / (2 * ha);
  Vec3 ds = (E(u, v, s + hs) - E(u, v, s - hs)) / (2 * hs);
  Mat3 jac{{{ds.x, du.x, dv.x}, {ds.y, du.y, dv.y}, {ds.z, du.z, dv.z}}};
  double det = std::fabs(mat3_det(jac));
  HPoint p(E(u, v, s));
  Mat3 g = metric_cartesian(sp, p);
  return det * std::sqrt(std::max(0.0, mat3_det(g)));
}

double sol_ball_volume(double R, int n_elev, int n_azim);

}  // namespace

double ball_volume(Space sp, double R, int n_s, int n_elev, int n_azim) {
  if (R <= 0) return 0;
  if (R > max_sphere_radius(sp))
    throw std::domain_error("no geodesic ball of this radius");
  if (sp == Space::Sol) return sol_ball_volume(R, n_elev, n_azim);
  std::vector<double> sn, sw, vn, vw;
  gauss_legendre(n_s, 1e-6, R, sn, sw);
  gauss_legendre(n_elev, -kPi / 2 + 1e-9, kPi / 2 - 1e-9, vn, vw);
  double vol = 0;
  for (int iu = 0; iu < n_azim; ++iu) {
    double u = -kPi + 2 * kPi * (iu + 0.5) / n_azim;
    double wu = 2 * kPi / n_azim;
    for (int iv = 0; iv < n_elev; ++iv)
      for (int is = 0; is < n_s; ++is)
        vol += wu * vw[iv] * sw[is] * jacobian_density(sp, u, vn[iv], sn[is]);
  }
  return vol;
}

namespace {

// Sol needs its own path: one integration per (perturbed) direction with
// incremental sampling instead of seven integrations per node.
double sol_ball_volume(double R, int n_elev, int n_azim) {
  std::vector<double> sn, sw, vn, vw;
  int n_s = 24;
  gauss_legendre(n_s, 1e-6, R, sn, sw);
  gauss_legendre(n_elev, -kPi / 2 + 1e-9, kPi / 2 - 1e-9, vn, vw);
  double h = 2e-6;
  auto trace = [&](double al, double th, std::vector<Vec3>& pos,
                   std::vector<Vec3>& vel) {
    pos.clear();
    vel.clear();
    Vec3 p{0, 0, 0};
    Vec3 v = unit_tangent(Space::Sol, al, th);
    double s = 0;
    for (int i = 0; i < n_s; ++i) {
      double target = sn[i];
      int steps = std::max(8, int(std::ceil((target - s) / 0.004)));
      double hh = (target - s) / steps;
      for (int k = 0; k < steps; ++k) rk4_step(Space::Sol, p, v, hh);
      s = target;
      pos.push_back(p);
      vel.push_back(v);
    }
  };
  double vol = 0;
  std::vector<Vec3> p0, v0, pu, vu, pv, vv;
  for (int iu = 0; iu < n_azim; ++iu) {
    double u = -kPi + 2 * kPi * (iu + 0.5) / n_azim;
    double wu = 2 * kPi / n_azim;
    for (int iv = 0; iv < n_elev; ++iv) {
      trace(u, vn[iv], p0, v0);
      trace(u + h, vn[iv], pu, vu);
      trace(u, vn[iv] + h, pv, vv);
      for (int is = 0; is < n_s; ++is) {
        Vec3 du = (pu[is] - p0[is]) / h;
        Vec3 dv = (pv[is] - p0[is]) / h;
        Vec3 ds = v0[is];
        Mat3 jac{{{ds.x, du.x, dv.x}, {ds.y, du.y, dv.y}, {ds.z, du.z, dv.z}}};
        // Sol volume element in model coordinates is 1.
        vol += wu * vw[iv] * sw[is] * std::fabs(mat3_det(jac));
      }
    }
  }
  return vol;
}

}  // namespace

double nil_radius_from_xy(double x, double y, double theta) {
  double w = std::fabs(std::sin(theta)), c = std::fabs(std::cos(theta));
  double rho = std::hypot(x, y);
  if (w < 1e-14) return rho / (c > 0 ? c : 1);
  double arg = clamp(rho * w / (2 * c), -1, 1);
  return 2 * std::asin(arg) / w;
}

std::pair<double, double> nil_sphere_cross_section(double R, double theta) {
  double w = std::sin(theta), c = std::cos(theta);
  double half = 0.5 * w * R;
  double X = c * R * sinc(half);
  double Z = w * R + 0.5 * c * c * w * R * R * R * cubic_gap(w * R);
  return {X, Z};
}

NilProjection fibre_projection_nil(double alpha, double theta) {
  NilProjection pr;
  double w = std::sin(theta), c = std::cos(theta);
  if (std::fabs(w) < 1e-14) {
    pr.is_line = true;
    pr.dir = alpha;
    return pr;
  }
  pr.cx = -(c / w) * std::sin(alpha);
  pr.cy = (c / w) * std::cos(alpha);
  pr.radius = std::fabs(c / w);
  return pr;
}

}  // namespace thurston
