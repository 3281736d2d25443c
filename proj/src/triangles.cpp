#include "thurston/triangles.hpp"

#include <cmath>

#include "thurston/optim.hpp"

namespace thurston {

namespace {

double clamp(double v, double lo, double hi) {
  return std::max(lo, std::min(hi, v));
}

}  // namespace

TriangleAngles interior_angles(Space sp, const std::array<HPoint, 3>& tri) {
  TriangleAngles out;
  out.converged = true;
  for (int i = 0; i < 3; ++i) {
    ProjMap t = translate_to_origin(sp, tri[i]);
    Vec3 tang[2];
    for (int k = 0; k < 2; ++k) {
      HPoint q = t.apply(tri[(i + 1 + k) % 3]);
      DistanceResult d = distance_from_origin(sp, q);
      if (!d.converged || d.ambiguous) out.converged = false;
      tang[k] = unit_tangent(sp, d.params.dir1, d.params.dir2);
    }
    // the metric is the identity at the origin in model coordinates
    out.angles[i] = std::acos(clamp(dot(tang[0], tang[1]), -1, 1));
    out.sum += out.angles[i];
  }
  return out;
}

std::vector<std::pair<double, double>> angle_sum_scan(
    Space sp, const std::function<std::array<HPoint, 3>(double)>& family,
    const std::vector<double>& params) {
  std::vector<std::pair<double, double>> out;
  out.reserve(params.size());
  for (double t : params)
    out.emplace_back(t, interior_angles(sp, family(t)).sum);
  return out;
}

double angle_sum_crossing(
    Space sp, const std::function<std::array<HPoint, 3>(double)>& family,
    double lo, double hi, double tol) {
  const double pi = 3.14159265358979323846;
  double flo = interior_angles(sp, family(lo)).sum - pi;
  double fhi = interior_angles(sp, family(hi)).sum - pi;
  if (flo * fhi > 0)
    throw std::invalid_argument("angle sum does not change side on interval");
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = interior_angles(sp, family(mid)).sum - pi;
    if (fm * flo <= 0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

Circumsphere circumsphere(Space sp, const std::array<HPoint, 4>& tet) {
  Circumsphere out;
  Vec3 seed{0, 0, 0};
  for (const HPoint& p : tet) seed = seed + p.affine() / 4.0;

  auto spread = [&](const std::vector<double>& x) {
    HPoint c(Vec3{x[0], x[1], x[2]});
    if (!in_domain(sp, c)) return 1e6;
    double d[4], mean = 0;
    for (int i = 0; i < 4; ++i) {
      DistanceResult r = distance(sp, c, tet[i]);
      if (!r.converged) return 1e6;
      d[i] = r.d;
      mean += r.d / 4;
    }
    double acc = 0;
    for (int i = 0; i < 4; ++i) acc += (d[i] - mean) * (d[i] - mean);
    return acc;
  };

  std::vector<double> best;
  double best_val = 1e300;
  const Vec3 offsets[5] = {{0, 0, 0}, {0.2, 0, 0}, {0, 0.2, 0}, {0, 0, 0.2},
                           {-0.15, -0.15, 0.1}};
  for (const Vec3& off : offsets) {
    std::vector<double> x0{seed.x + off.x, seed.y + off.y, seed.z + off.z};
    NelderMeadResult r = nelder_mead(spread, x0, 0.3, 1e-18, 4000);
    if (r.value < best_val) {
      best_val = r.value;
      best = r.x;
    }
    if (best_val < 1e-17) break;
  }
  if (best.empty() || best_val >= 1e5) return out;
  out.center = HPoint(Vec3{best[0], best[1], best[2]});
  double mean = 0, dd[4];
  for (int i = 0; i < 4; ++i) {
    dd[i] = distance(sp, out.center, tet[i]).d;
    mean += dd[i] / 4;
  }
  out.radius = mean;
  for (int i = 0; i < 4; ++i)
    out.spread = std::max(out.spread, std::fabs(dd[i] - mean));
  out.valid = out.spread < 1e-6 && out.radius <= max_sphere_radius(sp);
  return out;
}

}  // namespace thurston
