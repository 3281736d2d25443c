// Acceptance suite: one check per shipped capability, each reported as a
// single PASS/FAIL line with its pinned tolerance and runtime.  Exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "thurston/packing.hpp"
#include "thurston/ratios.hpp"
#include "thurston/surfaces.hpp"
#include "thurston/triangles.hpp"

using namespace thurston;

namespace {

constexpr double kPi = 3.14159265358979323846;

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(int criterion, bool ok, const char* what, double secs) {
  std::printf("%s criterion %2d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL",
              criterion, what, secs);
  if (!ok) ++g_failures;
}

std::mt19937_64 rng(20240901);
double rnd(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}

// ---------------------------------------------------------------------------
// 1. circumscribed spheres of the two reference tetrahedra
void criterion_circumspheres() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  auto t1 = std::chrono::steady_clock::now();
  Circumsphere s = circumsphere(
      Space::S2xR, {HPoint(1, 1, 0, 0), HPoint(1, -2, -0.5, 3),
                    HPoint(1, 1, 3, 0), HPoint(1, 4, -1, 2)});
  double s_secs = seconds_since(t1);
  Vec3 sc = s.center.affine();
  ok &= s.valid && std::fabs(s.radius - 1.30678) < 1e-3;
  ok &= std::fabs(sc.x - 0.64697) < 1e-3 && std::fabs(sc.y - 0.51402) < 1e-3;
  // The companion coordinates quote the third center component as 0.15171,
  // but no point with that coordinate is equidistant from the four
  // vertices; the digit-shifted 1.5171 is, and the solved center confirms
  // it.  Demonstrate the inconsistency of the unshifted value directly.
  ok &= std::fabs(sc.z - 1.5171) < 1e-3;
  double bad_spread = 0;
  {
    HPoint forced(1, 0.64697, 0.51402, 0.15171);
    double dmin = 1e300, dmax = 0;
    for (const HPoint& v : {HPoint(1, 1, 0, 0), HPoint(1, -2, -0.5, 3),
                            HPoint(1, 1, 3, 0), HPoint(1, 4, -1, 2)}) {
      double d = distance(Space::S2xR, forced, v).d;
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
    }
    bad_spread = dmax - dmin;
  }
  ok &= s.spread < 1e-6 && bad_spread > 0.1;
  std::printf("     note: s2xr center z checked against 1.5171; "
              "z = 0.15171 violates equidistance (spread %.3f vs %.1e)\n",
              bad_spread, s.spread);
  ok &= s_secs <= 10.0;

  t1 = std::chrono::steady_clock::now();
  Circumsphere h = circumsphere(
      Space::H2xR, {HPoint(1, 1, 0, 0), HPoint(1, 1.5, 1, -1),
                    HPoint(1, 1, 0.5, 0), HPoint(1, 1, 0.5, 0.5)});
  double h_secs = seconds_since(t1);
  Vec3 hc = h.center.affine();
  ok &= h.valid && std::fabs(h.radius - 2.89269) < 1e-3;
  ok &= std::fabs(hc.x - 0.07017) < 1e-3 &&
        std::fabs(hc.y + 0.02714) < 1e-3 && std::fabs(hc.z + 0.02640) < 1e-3;
  ok &= h.spread < 1e-6 && h_secs <= 10.0;

  report(1, ok,
         "circumsphere radii/centers within 1e-3, each solve within 10 s",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 2. ball packing densities of the glide space group at q = 2
void criterion_packing() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  SpaceGroupSpec g1 = s2xr_group_4q_I_2(2, 2 * kPi);
  PackingResult c1 = packing_density(g1, {{0, -1, 0}, 0.0});
  ok &= std::fabs(c1.rho - kPi / 2) < 1e-9;
  ok &= std::fabs(c1.ball_vol / 13.74539472 - 1) < 1e-3;
  ok &= std::fabs(c1.density / 0.69634983 - 1) < 1e-2;

  SpaceGroupSpec g2 = s2xr_group_4q_I_2(2, 2 * kPi / std::sqrt(3.0));
  PackingResult c2 = packing_density(g2, {{0, 0, 1}, 0.0});
  ok &= std::fabs(c2.rho - 1.81379936) < 1e-4;
  ok &= std::fabs(c2.ball_vol / 20.00238509 - 1) < 1e-3;
  ok &= std::fabs(c2.density / 0.87757183 - 1) < 1e-2;
  ok &= c2.kissing == 4;

  double secs = seconds_since(t0);
  ok &= secs <= 300.0;
  report(2, ok,
         "packing cases: R pi/2 & 1.81379936, Vol 0.1%, density 1%, "
         "kissing 4, within 5 min",
         secs);
}

// ---------------------------------------------------------------------------
// 3. one-sided angle-sum bounds in the product spaces
void criterion_angle_sum_bounds() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  int done = 0, guard = 0;
  while (done < 500 && guard++ < 5000) {
    std::array<HPoint, 3> tri;
    for (int k = 0; k < 3; ++k)
      tri[k] = HPoint(1, rnd(-2, 2), rnd(-2, 2), rnd(-2, 2));
    bool fine = true;
    for (int k = 0; k < 3 && fine; ++k)
      fine = norm(tri[k].affine()) > 0.3 &&
             affine_gap(tri[k], tri[(k + 1) % 3]) > 0.2;
    if (!fine) continue;
    TriangleAngles a = interior_angles(Space::S2xR, tri);
    if (!a.converged) continue;
    ok &= a.sum >= kPi - 1e-9;
    ++done;
  }
  ok &= done == 500;

  done = 0;
  guard = 0;
  while (done < 500 && guard++ < 5000) {
    std::array<HPoint, 3> tri;
    for (int k = 0; k < 3; ++k) {
      double y = rnd(-1.2, 1.2), z = rnd(-1.2, 1.2);
      tri[k] = HPoint(1, std::hypot(y, z) + rnd(0.3, 1.2), y, z);
    }
    bool fine = true;
    for (int k = 0; k < 3 && fine; ++k)
      fine = affine_gap(tri[k], tri[(k + 1) % 3]) > 0.2;
    if (!fine) continue;
    TriangleAngles a = interior_angles(Space::H2xR, tri);
    if (!a.converged) continue;
    ok &= a.sum <= kPi + 1e-9;
    ++done;
  }
  ok &= done == 500;

  // triangles inside the flat [x,y] coordinate plane through the origin
  // have euclidean angle sums in both product spaces
  for (Space sp : {Space::S2xR, Space::H2xR}) {
    for (int i = 0; i < 20; ++i) {
      std::array<HPoint, 3> tri;
      for (int k = 0; k < 3; ++k) {
        double t = rnd(-0.5, 0.5), phi = rnd(-0.9, 0.9);
        tri[k] = sp == Space::S2xR
                     ? HPoint(1, std::exp(t) * std::cos(phi),
                              std::exp(t) * std::sin(phi), 0)
                     : HPoint(1, std::exp(t) * std::cosh(phi),
                              std::exp(t) * std::sinh(phi), 0);
      }
      bool fine = true;
      for (int k = 0; k < 3 && fine; ++k)
        fine = affine_gap(tri[k], tri[(k + 1) % 3]) > 0.15;
      TriangleAngles a = interior_angles(sp, tri);
      if (!fine || !a.converged) {
        --i;
        continue;
      }
      ok &= std::fabs(a.sum - kPi) <= 1e-6;
    }
  }

  double secs = seconds_since(t0);
  ok &= secs <= 300.0;
  report(3, ok,
         "500 s2xr sums >= pi-1e-9, 500 h2xr sums <= pi+1e-9, base "
         "triangles |sum-pi| <= 1e-6, within 5 min",
         secs);
}

// ---------------------------------------------------------------------------
// 4. angle-sum trichotomy in nil and the sl2r cover
void criterion_trichotomy() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  for (Space sp : {Space::Nil, Space::Sl2R}) {
    auto family = [sp](double t) -> std::array<HPoint, 3> {
      return {model_origin(sp), exp_origin({sp, 0.0, t, 1.0}),
              exp_origin({sp, 2.1, t, 0.8})};
    };
    TriangleAngles low = interior_angles(sp, family(0.0));
    TriangleAngles high = interior_angles(sp, family(1.0));
    ok &= low.converged && low.sum < kPi - 1e-3;
    ok &= high.converged && high.sum > kPi + 1e-3;
    double t_star = angle_sum_crossing(sp, family, 0.6, 0.8);
    TriangleAngles mid = interior_angles(sp, family(t_star));
    ok &= mid.converged && std::fabs(mid.sum - kPi) <= 1e-4;
  }

  report(4, ok,
         "nil & sl2r triangles with sum > pi+1e-3, < pi-1e-3, and "
         "|sum-pi| <= 1e-4 by bisection",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 5. geodesic equations versus the closed forms
void criterion_ode_vs_closed_form() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  // sl2r: seventeen launch elevations covering both sides of the pi/4
  // transition and the transition itself, chart comparison over s in [0,2]
  for (int i = 0; i < 17; ++i) {
    double alpha = (i + 1) * kPi / 36.0;  // i = 8 hits pi/4 exactly
    double s0 = 1e-3, h = 1e-5;
    Vec3 cm = sl2r_geodesic_chart(alpha, s0 - h);
    Vec3 cp = sl2r_geodesic_chart(alpha, s0 + h);
    Vec3 vel = (cp - cm) / (2 * h);
    auto path = geodesic_ode(Space::Sl2R, {sl2r_geodesic_chart(alpha, s0), vel},
                             2.0 - s0, 2e-4);
    double worst = 0;
    for (size_t k = 0; k < path.size(); k += 97)
      worst = std::max(
          worst, norm(sl2r_geodesic_chart(alpha, s0 + path[k].s) -
                      path[k].state.pos));
    ok &= worst <= 1e-6;
  }

  // nil: grid including the flat direction and the two fibre directions
  for (double theta : {0.0, 0.3, -0.3, 0.9, -0.9, 1.2, -1.2, kPi / 2,
                       -kPi / 2}) {
    for (double alpha : {0.0, 1.1, -2.3}) {
      OdeState init{{0, 0, 0}, unit_tangent(Space::Nil, alpha, theta)};
      auto path = geodesic_ode(Space::Nil, init, 2.0, 1e-3);
      double worst = 0;
      for (size_t k = 0; k < path.size(); k += 125)
        worst = std::max(
            worst, norm(nil_geodesic(alpha, theta, path[k].s) -
                        path[k].state.pos));
      ok &= worst <= 1e-6;
    }
  }

  report(5, ok,
         "sl2r ODE matches the chart closed form to 1e-6 on 17 elevations "
         "incl pi/4; nil ODE to 1e-6 incl theta = 0 and +-pi/2",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 6. nil sphere existence boundary and convexity flip
void criterion_nil_sphere() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  TriMesh at_limit = sphere_mesh(Space::Nil, model_origin(Space::Nil),
                                 2 * kPi, 16);
  ok &= at_limit.faces.size() > 100;
  bool rejected = false;
  try {
    sphere_mesh(Space::Nil, model_origin(Space::Nil), 2 * kPi + 0.01, 16);
  } catch (const std::domain_error&) {
    rejected = true;
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  ok &= rejected;

  ConvexityReport before = nil_ball_convexity_check(kPi / 2);
  ConvexityReport after = nil_ball_convexity_check(kPi / 2 + 0.2);
  ok &= before.convex && !after.convex && after.max_violation > 0;

  report(6, ok,
         "nil sphere meshes at R = 2 pi, rejects 2 pi + 0.01; convexity "
         "flips between pi/2 and pi/2 + 0.2",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 7. fibre projections of nil geodesics
void criterion_nil_projection() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  for (int i = 0; i < 100; ++i) {
    double alpha = rnd(-kPi, kPi);
    double theta = (rnd(0, 1) < 0.5 ? -1 : 1) * rnd(0.05, 1.4);
    NilProjection pr = fibre_projection_nil(alpha, theta);
    ok &= !pr.is_line;
    for (double s : {0.4, 1.1, 2.3, 3.6}) {
      Vec3 p = nil_geodesic(alpha, theta, s);
      ok &= std::fabs(std::hypot(p.x - pr.cx, p.y - pr.cy) - pr.radius) <=
            1e-9;
    }
  }

  for (int i = 0; i < 40; ++i) {
    double alpha = rnd(-kPi, kPi), theta = rnd(-1.1, 1.1);
    GeodesicParams g{Space::Nil, alpha, theta, 0};
    double sb = rnd(0.6, 1.6), st = rnd(0.15, 0.85) * sb;
    auto at = [&](double s) {
      GeodesicParams q = g;
      q.s = s;
      return exp_origin(q);
    };
    double projected = projected_arc_ratio_nil(at(0), at(st), at(sb));
    double direct = st / (sb - st);
    ok &= std::fabs(projected - direct) <= 1e-8 * std::max(1.0, direct);
  }

  report(7, ok,
         "100 nil geodesics lie on the predicted projection circles to "
         "1e-9; projected arc ratios match station ratios to 1e-8",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 8. ratio products over triangles
void criterion_ratio_products() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  for (Space sp : {Space::S2xR, Space::H2xR}) {
    RatioConfig bm = base_menelaus_config(sp, 0.2, 0.6);
    ok &= std::fabs(menelaus_product(RatioKind::Base, sp, bm.tri, bm.feet) +
                    1) <= 1e-6;
    RatioConfig bc = base_ceva_config(sp);
    ok &= std::fabs(ceva_product(RatioKind::Base, sp, bc.tri, bc.feet,
                                 &bc.cevian_point) -
                    1) <= 1e-6;
    RatioConfig fm = fibre_menelaus_config(sp);
    ok &= std::fabs(menelaus_product(RatioKind::Fibre, sp, fm.tri, fm.feet) +
                    1) <= 1e-6;
    RatioConfig fc = fibre_ceva_config(sp);
    ok &= std::fabs(ceva_product(RatioKind::Fibre, sp, fc.tri, fc.feet,
                                 &fc.cevian_point) -
                    1) <= 1e-6;
  }

  RatioConfig nc = nil_ceva_config(0.37, 0.64);
  double projected_product =
      projected_arc_ratio_nil(nc.tri[0], nc.feet[0], nc.tri[1]) *
      projected_arc_ratio_nil(nc.tri[1], nc.feet[1], nc.tri[2]) *
      projected_arc_ratio_nil(nc.tri[2], nc.feet[2], nc.tri[0]);
  ok &= std::fabs(projected_product - 1) <= 1e-6;

  RatioConfig nm = nil_menelaus_line_config();
  double transversal =
      menelaus_product(RatioKind::Nil, Space::Nil, nm.tri, nm.feet);
  ok &= std::fabs(transversal + 1) > 1e-2;

  report(8, ok,
         "base & fibre products -1/+1 to 1e-6 in both product spaces; nil "
         "projected cevian product +1 to 1e-6; nil transversal misses -1",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 9. constant-ratio surfaces versus the distance-ratio definition
void criterion_apollonius() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  for (Space sp : {Space::S2xR, Space::H2xR}) {
    HPoint p1 = model_origin(sp);
    HPoint p2 = exp_origin({sp, 0.4, 0.3, 0.9});
    for (double lam : {0.5, 1.0, 2.0}) {
      ApolloniusSpec spec{sp, p1, p2, lam};
      ApolloniusSpec swapped{sp, p2, p1, 1.0 / lam};
      Vec3 c1 = p1.affine(), c2 = p2.affine();
      Vec3 mid = (c1 + c2) / 2;
      int found = 0, guard = 0;
      std::vector<Vec3> neg, pos;
      while (found < 200 && guard++ < 20000) {
        Vec3 x{mid.x + rnd(-1.3, 1.3), mid.y + rnd(-1.3, 1.3),
               mid.z + rnd(-1.3, 1.3)};
        if (sp == Space::S2xR && norm(x) < 0.2) continue;
        if (sp == Space::H2xR &&
            x.x <= std::sqrt(x.y * x.y + x.z * x.z) + 0.05)
          continue;
        double r = apollonius_residual(spec, x);
        (r < 0 ? neg : pos).push_back(x);
        if (neg.empty() || pos.empty()) continue;
        Vec3 a = neg.back(), b = pos.back();
        neg.pop_back();
        pos.pop_back();
        for (int it = 0; it < 60; ++it) {  // chord bisection onto the surface
          Vec3 m = (a + b) / 2;
          (apollonius_residual(spec, m) < 0 ? a : b) = m;
        }
        Vec3 xs = (a + b) / 2;
        DistanceResult d1 = distance(sp, p1, HPoint(xs));
        DistanceResult d2 = distance(sp, HPoint(xs), p2);
        if (!d1.converged || !d2.converged || d1.ambiguous || d2.ambiguous)
          continue;
        if (d2.d < 0.1) continue;
        ok &= std::fabs(d1.d - lam * d2.d) <= 1e-5;
        if (lam == 1.0)
          ok &= std::fabs(apollonius_residual(swapped, xs)) <= 1e-6;
        ++found;
      }
      ok &= found == 200;
    }
  }

  report(9, ok,
         "600 surface points per product space satisfy d1 = lambda d2 to "
         "1e-5; lambda = 1 surfaces swap-symmetric",
         seconds_since(t0));
}

// ---------------------------------------------------------------------------
// 10. round trips and isometry invariance
void criterion_round_trip_invariance() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;

  for (Space sp : {Space::S2xR, Space::H2xR, Space::Nil, Space::Sl2R,
                   Space::Sol}) {
    // exp / distance round trips
    for (int i = 0; i < 25; ++i) {
      GeodesicParams g{sp, rnd(-kPi, kPi), rnd(-1.3, 1.3), rnd(0.1, 1.4)};
      DistanceResult d = distance_from_origin(sp, exp_origin(g));
      if (d.ambiguous) continue;
      ok &= d.converged && std::fabs(d.d - g.s) <= 1e-8;
    }

    // distances, angles and angle sums are unchanged by point translations
    HPoint shift = exp_origin({sp, 0.8, -0.4, 0.7});
    ProjMap iso = translate_from_origin(sp, shift);
    for (int i = 0; i < 10; ++i) {
      std::array<HPoint, 3> tri{exp_origin({sp, rnd(-kPi, kPi), rnd(-1, 1),
                                            rnd(0.2, 0.9)}),
                                exp_origin({sp, rnd(-kPi, kPi), rnd(-1, 1),
                                            rnd(0.2, 0.9)}),
                                exp_origin({sp, rnd(-kPi, kPi), rnd(-1, 1),
                                            rnd(0.2, 0.9)})};
      std::array<HPoint, 3> moved;
      for (int k = 0; k < 3; ++k) moved[k] = iso.apply(tri[k]);

      DistanceResult before = distance(sp, tri[0], tri[1]);
      DistanceResult after = distance(sp, moved[0], moved[1]);
      if (before.ambiguous || after.ambiguous) continue;
      ok &= before.converged && after.converged &&
            std::fabs(before.d - after.d) <= 1e-7;

      TriangleAngles ta = interior_angles(sp, tri);
      TriangleAngles tb = interior_angles(sp, moved);
      if (!ta.converged || !tb.converged) continue;
      for (int k = 0; k < 3; ++k)
        ok &= std::fabs(ta.angles[k] - tb.angles[k]) <= 1e-6;
      ok &= std::fabs(ta.sum - tb.sum) <= 1e-6;
    }
  }

  // packing densities are unchanged when the kernel moves by a group
  // element (the orbit, hence the packing, is the same set of balls)
  SpaceGroupSpec grp = s2xr_group_4q_I_2(2, 2 * kPi / std::sqrt(3.0));
  SpherePoint k{normalized({0.3, 0.2, 0.95}), 0.4};
  SpherePoint kg = apply_element(grp.generators[2], k);
  PackingResult pa = packing_density(grp, k, 20, 7);
  PackingResult pb = packing_density(grp, kg, 20, 7);
  ok &= std::fabs(pa.rho - pb.rho) <= 1e-9;
  ok &= std::fabs(pa.density - pb.density) <=
        3 * (pa.cell_std_error + pb.cell_std_error) * pa.density /
                pa.cell_volume +
            1e-12;
  ok &= pa.kissing == pb.kissing;

  report(10, ok,
         "exp/distance round trips to 1e-8; distances, angles, sums and "
         "packing densities isometry invariant",
         seconds_since(t0));
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_circumspheres();
  criterion_packing();
  criterion_angle_sum_bounds();
  criterion_trichotomy();
  criterion_ode_vs_closed_form();
  criterion_nil_sphere();
  criterion_nil_projection();
  criterion_ratio_products();
  criterion_apollonius();
  criterion_round_trip_invariance();
  double total = seconds_since(t0);
  std::printf("%d of 10 criteria passed in %.1fs%s\n", 10 - g_failures, total,
              total <= 900.0 ? "" : "  (over the 15 min budget)");
  if (total > 900.0) ++g_failures;
  return g_failures == 0 ? 0 : 1;
}
