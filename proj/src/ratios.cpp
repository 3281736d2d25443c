#include "thurston/ratios.hpp"

#include <cmath>
#include <stdexcept>

namespace thurston {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool product_space(Space sp) {
  return sp == Space::S2xR || sp == Space::H2xR;
}

// --- base-plane helpers (unit sphere / unit hyperboloid) ---

HPoint base_point(const Vec3& u) { return HPoint(u); }

// geodesic interpolation on the base surface, f may leave [0, 1]
Vec3 sph_point_on(const Vec3& a, const Vec3& b, double f) {
  double s = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
  return (a * std::sin((1 - f) * s) + b * std::sin(f * s)) / std::sin(s);
}

Vec3 hyp_point_on(const Vec3& a, const Vec3& b, double f) {
  double s = std::acosh(std::max(1.0, ldot(a, b)));
  return (a * std::sinh((1 - f) * s) + b * std::sinh(f * s)) / std::sinh(s);
}

// dual of the line through two base points
Vec3 sph_line(const Vec3& a, const Vec3& b) { return cross(a, b); }

Vec3 hyp_line(const Vec3& a, const Vec3& b) {
  Vec3 c = cross(a, b);
  return {c.x, -c.y, -c.z};
}

// intersection candidates of two base lines
Vec3 sph_meet(const Vec3& l1, const Vec3& l2) {
  return normalized(cross(l1, l2));
}

Vec3 hyp_meet(const Vec3& l1, const Vec3& l2) {
  Vec3 c = cross(l1, l2);
  Vec3 p{c.x, -c.y, -c.z};
  double q = ldot(p, p);
  if (q <= 1e-12)
    throw std::domain_error("base lines do not meet in the hyperboloid");
  p = p / std::sqrt(q);
  return p.x > 0 ? p : p * -1.0;
}

// pick the candidate (p or its antipode) nearest the segment midpoint
Vec3 sph_pick(const Vec3& p, const Vec3& mid) {
  return dot(p, mid) >= 0 ? p : p * -1.0;
}

// --- euclidean plane through the fibre axis ---

HPoint plane_point(Space sp, double a, double b) {
  if (sp == Space::S2xR)
    return HPoint(1, std::exp(b) * std::cos(a), std::exp(b) * std::sin(a), 0);
  return HPoint(1, std::exp(b) * std::cosh(a), std::exp(b) * std::sinh(a), 0);
}

struct P2 {
  double a, b;
};

P2 lerp(const P2& u, const P2& v, double f) {
  return {u.a + (v.a - u.a) * f, u.b + (v.b - u.b) * f};
}

// intersection of lines (p,q) and (r,s) in the euclidean chart
P2 meet2(const P2& p, const P2& q, const P2& r, const P2& s) {
  double d1a = q.a - p.a, d1b = q.b - p.b;
  double d2a = s.a - r.a, d2b = s.b - r.b;
  double det = d1a * (-d2b) - (-d2a) * d1b;
  if (std::fabs(det) < 1e-14)
    throw std::domain_error("parallel plane lines do not meet");
  double ra = r.a - p.a, rb = r.b - p.b;
  double t = (ra * (-d2b) + d2a * rb) / det;
  return {p.a + d1a * t, p.b + d1b * t};
}

}  // namespace

CollinearStations collinear_stations(Space sp, const HPoint& a,
                                     const HPoint& p, const HPoint& b,
                                     double tol) {
  DistanceResult ab = distance(sp, a, b);
  DistanceResult ap = distance(sp, a, p);
  if (!ab.converged || !ap.converged)
    throw std::runtime_error("distance solver failed on a ratio triple");
  if (ab.d < 1e-12 || ap.d < 1e-12)
    throw std::invalid_argument("coincident points in a ratio triple");

  Vec3 tl = unit_tangent(sp, ab.params.dir1, ab.params.dir2);
  Vec3 tp = unit_tangent(sp, ap.params.dir1, ap.params.dir2);
  double c = dot(tl, tp);
  CollinearStations st;
  st.line = ab.params;
  st.sB = ab.d;
  if (c > 1 - 1e-9)
    st.sP = ap.d;
  else if (c < -(1 - 1e-9))
    st.sP = -ap.d;
  else
    throw std::invalid_argument("points are not collinear on one geodesic");
  if (std::fabs(st.sP - st.sB) < 1e-12)
    throw std::invalid_argument("coincident points in a ratio triple");

  GeodesicParams at = st.line;
  at.s = st.sP;
  st.residual = affine_gap(exp_point(sp, a, at), p.normalized());
  if (st.residual > tol)
    throw std::invalid_argument("points are not collinear on one geodesic");
  return st;
}

double simple_ratio(RatioKind kind, Space sp, const HPoint& a, const HPoint& p,
                    const HPoint& b) {
  if (kind == RatioKind::Nil) {
    if (sp != Space::Nil)
      throw std::invalid_argument("nil ratios require the nil space");
  } else if (!product_space(sp)) {
    throw std::invalid_argument("this ratio kind needs a product space");
  }
  if (kind == RatioKind::Base)
    for (const HPoint* q : {&a, &p, &b})
      if (std::fabs(product_fibre_coord(sp, *q)) > 1e-6)
        throw std::invalid_argument("base ratios need points on the base");

  CollinearStations st = collinear_stations(sp, a, p, b);
  double dap = std::fabs(st.sP);
  double dpb = std::fabs(st.sB - st.sP);
  double num = dap, den = dpb;
  if (kind == RatioKind::Base || kind == RatioKind::General) {
    double scale = 1;
    if (kind == RatioKind::General) scale = std::cos(st.line.dir2);
    if (sp == Space::S2xR) {
      num = std::sin(dap * scale);
      den = std::sin(dpb * scale);
    } else {
      num = std::sinh(dap * scale);
      den = std::sinh(dpb * scale);
    }
  }
  bool between = st.sP > 0 && st.sP < st.sB;
  double mag = num / den;
  return between ? mag : -mag;
}

double menelaus_product(RatioKind kind, Space sp,
                        const std::array<HPoint, 3>& tri,
                        const std::array<HPoint, 3>& feet) {
  return simple_ratio(kind, sp, tri[0], feet[0], tri[1]) *
         simple_ratio(kind, sp, tri[1], feet[1], tri[2]) *
         simple_ratio(kind, sp, tri[2], feet[2], tri[0]);
}

double ceva_product(RatioKind kind, Space sp, const std::array<HPoint, 3>& tri,
                    const std::array<HPoint, 3>& feet,
                    const HPoint* cevian_point) {
  if (cevian_point) {
    for (int i = 0; i < 3; ++i)
      if (affine_gap(*cevian_point, tri[i].normalized()) < 1e-9)
        throw std::invalid_argument("cevian point coincides with a vertex");
    // foot i lies on the side tri[i] tri[i+1]; its cevian starts at the
    // opposite vertex tri[i+2]
    for (int i = 0; i < 3; ++i)
      collinear_stations(sp, tri[(i + 2) % 3], *cevian_point, feet[i]);
  }
  return simple_ratio(kind, sp, tri[0], feet[0], tri[1]) *
         simple_ratio(kind, sp, tri[1], feet[1], tri[2]) *
         simple_ratio(kind, sp, tri[2], feet[2], tri[0]);
}

double projected_arc_ratio_nil(const HPoint& a, const HPoint& p,
                               const HPoint& b) {
  CollinearStations st = collinear_stations(Space::Nil, a, p, b);
  if (std::fabs(st.line.dir2) > kPi / 2 - 1e-6)
    throw std::invalid_argument(
        "fibre-like geodesic projects to a single point");

  // arc length of the projected curve between stations, by quadrature of
  // the numerically differentiated projection
  auto speed = [&](double s) {
    const double h = 1e-5;
    Vec3 f = nil_geodesic(st.line.dir1, st.line.dir2, s + h);
    Vec3 g = nil_geodesic(st.line.dir1, st.line.dir2, s - h);
    return std::hypot(f.x - g.x, f.y - g.y) / (2 * h);
  };
  auto arc = [&](double s0, double s1) {
    const int n = 64;  // Simpson rule, n even
    double h = (s1 - s0) / n, acc = speed(s0) + speed(s1);
    for (int i = 1; i < n; ++i) acc += speed(s0 + i * h) * (i % 2 ? 4 : 2);
    return std::fabs(acc * h / 3);
  };
  return arc(0, st.sP) / arc(st.sP, st.sB);
}

namespace {

void base_triangle(Space sp, Vec3& u0, Vec3& u1, Vec3& u2) {
  if (sp == Space::S2xR) {
    u0 = normalized({1, 0, 0});
    u1 = normalized({0.2, 1, 0.15});
    u2 = normalized({0.3, 0.25, 1});
  } else if (sp == Space::H2xR) {
    u0 = {1, 0, 0};
    u1 = Vec3{std::cosh(0.9), std::sinh(0.9) * 0.8, std::sinh(0.9) * 0.6};
    u2 = Vec3{std::cosh(0.7), -std::sinh(0.7) * 0.3, std::sinh(0.7) * 0.95};
    u2 = u2 / std::sqrt(ldot(u2, u2));
  } else {
    throw std::invalid_argument("base configurations need a product space");
  }
}

}  // namespace

RatioConfig base_menelaus_config(Space sp, double f1, double f2) {
  RatioConfig cfg;
  Vec3 u0, u1, u2;
  base_triangle(sp, u0, u1, u2);
  auto on = sp == Space::S2xR ? sph_point_on : hyp_point_on;
  Vec3 p = on(u0, u1, f1);
  Vec3 q = on(u1, u2, f2);
  Vec3 r;
  if (sp == Space::S2xR) {
    r = sph_meet(sph_line(p, q), sph_line(u2, u0));
    r = sph_pick(r, normalized(u2 + u0));
  } else {
    r = hyp_meet(hyp_line(p, q), hyp_line(u2, u0));
  }
  cfg.tri = {base_point(u0), base_point(u1), base_point(u2)};
  cfg.feet = {base_point(p), base_point(q), base_point(r)};
  return cfg;
}

RatioConfig base_ceva_config(Space sp) {
  RatioConfig cfg;
  Vec3 u0, u1, u2;
  base_triangle(sp, u0, u1, u2);
  cfg.tri = {base_point(u0), base_point(u1), base_point(u2)};
  Vec3 t = u0 * 0.9 + u1 * 1.2 + u2 * 1.05;
  Vec3 p, q, r;
  if (sp == Space::S2xR) {
    t = normalized(t);
    p = sph_pick(sph_meet(sph_line(u2, t), sph_line(u0, u1)),
                 normalized(u0 + u1));
    q = sph_pick(sph_meet(sph_line(u0, t), sph_line(u1, u2)),
                 normalized(u1 + u2));
    r = sph_pick(sph_meet(sph_line(u1, t), sph_line(u2, u0)),
                 normalized(u2 + u0));
  } else {
    t = t / std::sqrt(ldot(t, t));
    p = hyp_meet(hyp_line(u2, t), hyp_line(u0, u1));
    q = hyp_meet(hyp_line(u0, t), hyp_line(u1, u2));
    r = hyp_meet(hyp_line(u1, t), hyp_line(u2, u0));
  }
  cfg.feet = {base_point(p), base_point(q), base_point(r)};
  cfg.cevian_point = base_point(t);
  cfg.has_cevian_point = true;
  return cfg;
}

RatioConfig fibre_menelaus_config(Space sp) {
  if (!product_space(sp))
    throw std::invalid_argument("fibre configurations need a product space");
  P2 a0{0, 0}, a1{0.8, 0.15}, a2{0.25, 0.7};
  P2 p = lerp(a0, a1, 0.35);
  P2 q = lerp(a1, a2, 0.6);
  P2 r = meet2(p, q, a2, a0);
  RatioConfig cfg;
  cfg.tri = {plane_point(sp, a0.a, a0.b), plane_point(sp, a1.a, a1.b),
             plane_point(sp, a2.a, a2.b)};
  cfg.feet = {plane_point(sp, p.a, p.b), plane_point(sp, q.a, q.b),
              plane_point(sp, r.a, r.b)};
  return cfg;
}

RatioConfig fibre_ceva_config(Space sp) {
  if (!product_space(sp))
    throw std::invalid_argument("fibre configurations need a product space");
  P2 a0{0, 0}, a1{0.8, 0.15}, a2{0.25, 0.7};
  P2 t{(a0.a + a1.a + a2.a) / 3 + 0.05, (a0.b + a1.b + a2.b) / 3 - 0.04};
  P2 p = meet2(a2, t, a0, a1);
  P2 q = meet2(a0, t, a1, a2);
  P2 r = meet2(a1, t, a2, a0);
  RatioConfig cfg;
  cfg.tri = {plane_point(sp, a0.a, a0.b), plane_point(sp, a1.a, a1.b),
             plane_point(sp, a2.a, a2.b)};
  cfg.feet = {plane_point(sp, p.a, p.b), plane_point(sp, q.a, q.b),
              plane_point(sp, r.a, r.b)};
  cfg.cevian_point = plane_point(sp, t.a, t.b);
  cfg.has_cevian_point = true;
  return cfg;
}

RatioConfig nil_ceva_config(double f01, double f12) {
  if (f01 <= 0 || f01 >= 1 || f12 <= 0 || f12 >= 1)
    throw std::invalid_argument("cevian fractions must lie in (0, 1)");
  RatioConfig cfg;
  HPoint a0(1, 0, 0, 0);
  HPoint a1 = exp_origin({Space::Nil, 0.3, 0.55, 1.1});
  HPoint a2 = exp_origin({Space::Nil, 1.9, -0.35, 0.9});
  cfg.tri = {a0, a1, a2};

  auto foot_at = [&](const HPoint& a, const HPoint& b, double f) {
    DistanceResult d = distance(Space::Nil, a, b);
    GeodesicParams g = d.params;
    g.s = f * d.d;
    return exp_point(Space::Nil, a, g);
  };
  cfg.feet[0] = foot_at(a0, a1, f01);
  cfg.feet[1] = foot_at(a1, a2, f12);
  double s1 = simple_ratio(RatioKind::Nil, Space::Nil, a0, cfg.feet[0], a1);
  double s2 = simple_ratio(RatioKind::Nil, Space::Nil, a1, cfg.feet[1], a2);
  // close the Ceva condition on the third side
  double r = 1.0 / (s1 * s2);
  cfg.feet[2] = foot_at(a2, a0, r / (1 + r));
  return cfg;
}

RatioConfig nil_menelaus_line_config() {
  RatioConfig cfg;
  HPoint a0(1, 0, 0, 0);
  HPoint a1 = exp_origin({Space::Nil, 0.2, 0.75, 1.6});
  HPoint a2 = exp_origin({Space::Nil, 2.1, -0.55, 1.3});
  cfg.tri = {a0, a1, a2};

  auto station_point = [&](const HPoint& a, const HPoint& b, double f) {
    DistanceResult d = distance(Space::Nil, a, b);
    GeodesicParams g = d.params;
    g.s = f * d.d;
    return exp_point(Space::Nil, a, g);
  };
  cfg.feet[0] = station_point(a0, a1, 0.42);
  cfg.feet[1] = station_point(a1, a2, 0.55);

  // straight transversal through the two projected feet, cutting the
  // projected arc of the third side
  Vec3 p0 = cfg.feet[0].affine(), p1 = cfg.feet[1].affine();
  double la = p1.y - p0.y, lb = -(p1.x - p0.x);
  double lc = -(la * p0.x + lb * p0.y);
  auto side_gap = [&](double f) {
    Vec3 v = station_point(a2, a0, f).affine();
    return la * v.x + lb * v.y + lc;
  };
  double lo = -1.5, hi = 1.5, flo = side_gap(lo);
  bool bracketed = false;
  for (double f = lo + 0.05; f <= hi; f += 0.05) {
    double fv = side_gap(f);
    if (flo * fv <= 0) {
      hi = f;
      bracketed = true;
      break;
    }
    lo = f;
    flo = fv;
  }
  if (!bracketed)
    throw std::runtime_error("projected transversal misses the third side");
  for (int it = 0; it < 90; ++it) {
    double mid = 0.5 * (lo + hi);
    if (side_gap(mid) * flo <= 0)
      hi = mid;
    else {
      lo = mid;
      flo = side_gap(lo);
    }
  }
  cfg.feet[2] = station_point(a2, a0, 0.5 * (lo + hi));
  return cfg;
}

}  // namespace thurston
