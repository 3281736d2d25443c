#include "thurston/surfaces.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include "thurston/optim.hpp"

namespace thurston {

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_cos(double v) {
  if (v > 1) {
    if (v > 1 + 1e-12) throw std::domain_error("cosine argument above 1");
    return 1;
  }
  if (v < -1) {
    if (v < -1 - 1e-12) throw std::domain_error("cosine argument below -1");
    return -1;
  }
  return v;
}

double clamp_cosh(double v) {
  if (v < 1) {
    if (v < 1 - 1e-12) throw std::domain_error("cosh argument below 1");
    return 1;
  }
  return v;
}

// Squared distance to the point with affine coordinates a, written with
// the base angle and fibre offset of the product metric, times four.
double four_dist_sq(Space sp, const Vec3& a, const Vec3& x) {
  if (sp == Space::S2xR) {
    double qa = dot(a, a), qx = dot(x, x);
    double w = std::acos(clamp_cos(dot(a, x) / std::sqrt(qa * qx)));
    double l = std::log(qa / qx);
    return 4 * w * w + l * l;
  }
  double qa = ldot(a, a), qx = ldot(x, x);
  if (qa <= 0 || qx <= 0) throw std::domain_error("point outside h2xr domain");
  double w = std::acosh(clamp_cosh(ldot(a, x) / std::sqrt(qa * qx)));
  double l = std::log(qa / qx);
  return 4 * w * w + l * l;
}

}  // namespace

double apollonius_residual(const ApolloniusSpec& spec, const Vec3& x) {
  if (spec.space != Space::S2xR && spec.space != Space::H2xR)
    throw std::invalid_argument("constant-ratio surfaces need a product space");
  double lhs = four_dist_sq(spec.space, spec.p1.affine(), x);
  double rhs = four_dist_sq(spec.space, spec.p2.affine(), x);
  return lhs - spec.lambda * spec.lambda * rhs;
}

void write_obj(const TriMesh& mesh, std::ostream& os) {
  char buf[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.12g %.12g %.12g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const auto& f : mesh.faces) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", f[0] + 1, f[1] + 1,
                  f[2] + 1);
    os << buf;
  }
}

void write_csv_vertices(const TriMesh& mesh, std::ostream& os) {
  os << "x,y,z\n";
  char buf[128];
  for (const Vec3& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", v.x, v.y, v.z);
    os << buf;
  }
}

double mesh_area(const TriMesh& mesh) {
  double area = 0;
  for (const auto& f : mesh.faces) {
    Vec3 e1 = mesh.vertices[f[1]] - mesh.vertices[f[0]];
    Vec3 e2 = mesh.vertices[f[2]] - mesh.vertices[f[0]];
    area += 0.5 * norm(cross(e1, e2));
  }
  return area;
}

TriMesh sphere_mesh(Space s, const HPoint& center, double R, int n_dirs) {
  if (n_dirs < 8) throw std::invalid_argument("need at least 8 directions");
  double rmax = max_sphere_radius(s);
  if (R < 0 || R > rmax + 1e-12) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "sphere radius %g outside the %s existence range [0, %g]", R,
                  space_name(s).c_str(), rmax);
    throw std::invalid_argument(msg);
  }

  ProjMap out = translate_from_origin(s, center);
  auto at = [&](double u, double v) {
    return out.apply(exp_origin({s, u, v, R})).affine();
  };

  TriMesh mesh;
  const int n = n_dirs;
  mesh.vertices.push_back(at(0, -kPi / 2));  // south pole, index 0
  mesh.vertices.push_back(at(0, kPi / 2));   // north pole, index 1
  for (int j = 1; j < n; ++j) {
    double v = -kPi / 2 + kPi * j / n;
    for (int i = 0; i < n; ++i) mesh.vertices.push_back(at(2 * kPi * i / n, v));
  }
  auto idx = [n](int j, int i) { return 2 + (j - 1) * n + (i % n); };
  for (int i = 0; i < n; ++i) {
    mesh.faces.push_back({0, idx(1, i + 1), idx(1, i)});
    mesh.faces.push_back({1, idx(n - 1, i), idx(n - 1, i + 1)});
  }
  for (int j = 1; j + 1 < n; ++j)
    for (int i = 0; i < n; ++i) {
      int a = idx(j, i), b = idx(j, i + 1), c = idx(j + 1, i + 1),
          d = idx(j + 1, i);
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  return mesh;
}

ConvexityReport nil_ball_convexity_check(double R, int n) {
  if (R <= 0 || R > 2 * kPi)
    throw std::invalid_argument("nil sphere radius outside (0, 2 pi]");
  // With the outward normal, the second fundamental form of a convex
  // surface is negative semidefinite; any positive principal curvature
  // certifies a non-convex spot.  The critical directions sit near the
  // poles, so the grid keeps one step of clearance there.
  ConvexityReport rep;
  rep.max_violation = 0;
  const double h = 1e-4;
  auto F = [&](double a, double t) { return nil_geodesic(a, t, R); };
  for (int j = 1; j < n; ++j) {
    double th = -kPi / 2 + kPi * j / n;
    for (int i = 0; i < n; ++i) {
      double al = -kPi + 2 * kPi * i / n;
      Vec3 f0 = F(al, th);
      Vec3 fa = (F(al + h, th) - F(al - h, th)) / (2 * h);
      Vec3 ft = (F(al, th + h) - F(al, th - h)) / (2 * h);
      Vec3 faa = (F(al + h, th) + F(al - h, th) - f0 * 2) / (h * h);
      Vec3 ftt = (F(al, th + h) + F(al, th - h) - f0 * 2) / (h * h);
      Vec3 fat = (F(al + h, th + h) - F(al + h, th - h) - F(al - h, th + h) +
                  F(al - h, th - h)) /
                 (4 * h * h);
      Vec3 nrm = cross(fa, ft);
      double nn = norm(nrm);
      if (nn < 1e-8) continue;
      nrm = nrm / nn;
      if (dot(nrm, f0) < 0) nrm = nrm * -1.0;  // orient outward
      double L = dot(nrm, faa), M = dot(nrm, fat), N = dot(nrm, ftt);
      double tr = L + N, det = L * N - M * M;
      double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
      rep.max_violation = std::max(rep.max_violation, tr / 2 + disc);
    }
  }
  rep.convex = rep.max_violation < 1e-5;
  return rep;
}

TriMesh isosurface_mesh(const std::function<double(const Vec3&)>& f, Vec3 lo,
                        Vec3 hi, int res) {
  if (res < 8) throw std::invalid_argument("resolution below 8 per axis");
  const int n = res + 1;
  std::vector<double> val(static_cast<size_t>(n) * n * n);
  std::vector<Vec3> pos(val.size());
  auto gi = [n](int i, int j, int k) {
    return (static_cast<size_t>(k) * n + j) * n + i;
  };
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        Vec3 p{lo.x + (hi.x - lo.x) * i / res, lo.y + (hi.y - lo.y) * j / res,
               lo.z + (hi.z - lo.z) * k / res};
        pos[gi(i, j, k)] = p;
        val[gi(i, j, k)] = f(p);
      }

  TriMesh mesh;
  std::map<std::pair<size_t, size_t>, int> edge_vertex;
  auto vertex_on = [&](size_t a, size_t b) {
    std::pair<size_t, size_t> key = std::minmax(a, b);
    auto it = edge_vertex.find(key);
    if (it != edge_vertex.end()) return it->second;
    double t = val[a] / (val[a] - val[b]);
    Vec3 p = pos[a] + (pos[b] - pos[a]) * t;
    mesh.vertices.push_back(p);
    int id = static_cast<int>(mesh.vertices.size()) - 1;
    edge_vertex.emplace(key, id);
    return id;
  };
  auto emit = [&](int a, int b, int c) {
    const Vec3 &pa = mesh.vertices[a], &pb = mesh.vertices[b],
               &pc = mesh.vertices[c];
    if (norm(cross(pb - pa, pc - pa)) > 2e-12) mesh.faces.push_back({a, b, c});
  };
  // Each cube splits into six tetrahedra around the main diagonal.
  static const int tets[6][4] = {{0, 1, 3, 7}, {0, 3, 2, 7}, {0, 2, 6, 7},
                                 {0, 6, 4, 7}, {0, 4, 5, 7}, {0, 5, 1, 7}};
  for (int k = 0; k < res; ++k)
    for (int j = 0; j < res; ++j)
      for (int i = 0; i < res; ++i) {
        size_t corner[8];
        for (int c = 0; c < 8; ++c)
          corner[c] = gi(i + (c & 1), j + ((c >> 1) & 1), k + ((c >> 2) & 1));
        for (const auto& tet : tets) {
          size_t id[4];
          int nneg = 0, negs[4], poss[4], npos = 0;
          for (int c = 0; c < 4; ++c) {
            id[c] = corner[tet[c]];
            if (val[id[c]] < 0)
              negs[nneg++] = c;
            else
              poss[npos++] = c;
          }
          if (nneg == 0 || nneg == 4) continue;
          if (nneg == 1) {
            emit(vertex_on(id[negs[0]], id[poss[0]]),
                 vertex_on(id[negs[0]], id[poss[1]]),
                 vertex_on(id[negs[0]], id[poss[2]]));
          } else if (nneg == 3) {
            emit(vertex_on(id[poss[0]], id[negs[0]]),
                 vertex_on(id[poss[0]], id[negs[1]]),
                 vertex_on(id[poss[0]], id[negs[2]]));
          } else {
            int e0 = vertex_on(id[negs[0]], id[poss[0]]);
            int e1 = vertex_on(id[negs[0]], id[poss[1]]);
            int e2 = vertex_on(id[negs[1]], id[poss[1]]);
            int e3 = vertex_on(id[negs[1]], id[poss[0]]);
            emit(e0, e1, e2);
            emit(e0, e2, e3);
          }
        }
      }
  return mesh;
}

SurfacePointResult triangle_surface_point(Space s, const HPoint& a0,
                                          const HPoint& a1, const HPoint& a2,
                                          double lambda1, double lambda2) {
  if (s != Space::S2xR && s != Space::H2xR)
    throw std::invalid_argument("surface points need a product space");
  if (lambda1 < 0 || lambda2 < 0 || (lambda1 == 0 && lambda2 == 0))
    throw std::invalid_argument("ratio parameters must be >= 0, not both 0");

  SurfacePointResult res;
  if (lambda1 == 0) {  // the first surface collapses to a0
    res.point = a0;
    res.res2 = std::fabs(distance(s, a2, a0).d);
    res.converged = true;
    return res;
  }
  if (lambda2 == 0) {  // the second surface collapses to a2
    res.point = a2;
    res.res1 =
        std::fabs(distance(s, a0, a2).d - lambda1 * distance(s, a2, a1).d);
    res.converged = true;
    return res;
  }

  auto constraints = [&](const Vec3& x) -> std::pair<double, double> {
    HPoint p(x);
    double d0 = distance(s, a0, p).d;
    double d1 = distance(s, p, a1).d;
    double d2 = distance(s, a2, p).d;
    return {d0 - lambda1 * d1, d2 - lambda2 * d0};
  };

  auto penalized = [&](const std::vector<double>& v, double w) {
    Vec3 x{v[0], v[1], v[2]};
    HPoint p(x);
    if (!in_domain(s, p)) return 1e9;
    auto [g1, g2] = constraints(x);
    double d0 = distance(s, a0, p).d;
    return d0 * d0 + w * (g1 * g1 + g2 * g2);
  };

  // Coarse seed over the expanded bounding box of the vertices.
  Vec3 vs[3] = {a0.affine(), a1.affine(), a2.affine()};
  Vec3 blo = vs[0], bhi = vs[0];
  for (const Vec3& v : vs)
    for (int c = 0; c < 3; ++c) {
      blo[c] = std::min(blo[c], v[c]);
      bhi[c] = std::max(bhi[c], v[c]);
    }
  Vec3 pad = (bhi - blo) * 0.5 + Vec3{0.2, 0.2, 0.2};
  blo = blo - pad;
  bhi = bhi + pad;
  const int g = 9;
  std::vector<std::vector<double>> seeds;
  std::vector<double> scores;
  for (int k = 0; k < g; ++k)
    for (int j = 0; j < g; ++j)
      for (int i = 0; i < g; ++i) {
        std::vector<double> v{blo.x + (bhi.x - blo.x) * i / (g - 1.0),
                              blo.y + (bhi.y - blo.y) * j / (g - 1.0),
                              blo.z + (bhi.z - blo.z) * k / (g - 1.0)};
        double f = penalized(v, 100);
        size_t at = 0;
        while (at < scores.size() && scores[at] < f) ++at;
        scores.insert(scores.begin() + at, f);
        seeds.insert(seeds.begin() + at, v);
        if (scores.size() > 3) {
          scores.pop_back();
          seeds.pop_back();
        }
      }

  double best_obj = 1e300;
  std::vector<double> best, second;
  double second_obj = 1e300;
  for (auto x : seeds) {
    for (double w : {1e3, 1e5, 1e7, 1e9}) {
      auto fn = [&](const std::vector<double>& v) { return penalized(v, w); };
      x = nelder_mead(fn, x, 0.1, 1e-16, 2500).x;
    }
    Vec3 p{x[0], x[1], x[2]};
    auto [g1, g2] = constraints(p);
    if (std::fabs(g1) > 1e-5 || std::fabs(g2) > 1e-5) continue;
    double obj = distance(s, a0, HPoint(p)).d;
    if (obj < best_obj - 1e-6) {
      second_obj = best_obj;
      second = best;
      best_obj = obj;
      best = x;
    } else if (obj < second_obj && std::fabs(obj - best_obj) > 1e-9) {
      second_obj = obj;
      second = x;
    }
  }
  if (best.empty()) {
    res.converged = false;
    return res;
  }

  // Gauss-Newton projection onto the two-constraint set.
  Vec3 x{best[0], best[1], best[2]};
  for (int it = 0; it < 30; ++it) {
    auto [g1, g2] = constraints(x);
    if (std::fabs(g1) < 1e-10 && std::fabs(g2) < 1e-10) break;
    const double h = 1e-6;
    double J[2][3];
    for (int c = 0; c < 3; ++c) {
      Vec3 xp = x;
      xp[c] += h;
      auto [p1, p2] = constraints(xp);
      J[0][c] = (p1 - g1) / h;
      J[1][c] = (p2 - g2) / h;
    }
    // minimal-norm step solving J dx = -g via the normal equations
    double a = 0, b = 0, c2 = 0;
    for (int c = 0; c < 3; ++c) {
      a += J[0][c] * J[0][c];
      b += J[0][c] * J[1][c];
      c2 += J[1][c] * J[1][c];
    }
    double det = a * c2 - b * b;
    if (std::fabs(det) < 1e-14) break;
    double l1 = (-g1 * c2 + g2 * b) / det;
    double l2 = (g1 * b - g2 * a) / det;
    for (int c = 0; c < 3; ++c) x[c] += J[0][c] * l1 + J[1][c] * l2;
  }

  res.point = HPoint(x);
  auto [g1, g2] = constraints(x);
  res.res1 = std::fabs(g1);
  res.res2 = std::fabs(g2);
  res.converged = res.res1 < 1e-6 && res.res2 < 1e-6;
  res.tie = !second.empty() && std::fabs(second_obj - best_obj) < 1e-6;
  return res;
}

}  // namespace thurston
