#include "thurston/optim.hpp"

#include <algorithm>
#include <cmath>

namespace thurston {

namespace {
double sq_norm(const Vec3& v) { return dot(v, v); }
}  // namespace

NewtonResult newton3(const std::function<Vec3(const Vec3&)>& f, Vec3 x0,
                     double tol, int max_iter) {
  NewtonResult res;
  Vec3 x = x0;
  Vec3 fx = f(x);
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it;
    double r = std::sqrt(sq_norm(fx));
    if (r < tol) {
      res.x = x;
      res.residual = r;
      res.converged = true;
      return res;
    }
    // Forward-difference Jacobian, columns J[.][k] = df/dx_k.
    Mat3 jac{};
    double h = 1e-7 * std::max(1.0, std::sqrt(sq_norm(x)));
    for (int k = 0; k < 3; ++k) {
      Vec3 xp = x;
      xp[k] += h;
      Vec3 fp = f(xp);
      for (int i = 0; i < 3; ++i) jac[i][k] = (fp[i] - fx[i]) / h;
    }
    Vec3 step;
    if (!mat3_solve(jac, fx, step)) break;
    // Backtracking line search on |f|^2.
    double lambda = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 12; ++bt) {
      Vec3 xn = x - step * lambda;
      Vec3 fn = f(xn);
      if (sq_norm(fn) < sq_norm(fx) * (1 - 1e-4 * lambda) + 1e-300) {
        x = xn;
        fx = fn;
        moved = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!moved) break;
  }
  res.x = x;
  res.residual = std::sqrt(sq_norm(fx));
  res.converged = res.residual < tol * 10;
  return res;
}

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double scale, double tol, int max_eval) {
  const size_t n = x0.size();
  NelderMeadResult res;
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (size_t i = 0; i < n; ++i) pts[i + 1][i] += scale;
  int evals = 0;
  for (size_t i = 0; i <= n; ++i) {
    vals[i] = f(pts[i]);
    ++evals;
  }
  auto order = [&]() {
    std::vector<size_t> idx(n + 1);
    for (size_t i = 0; i <= n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> v2;
    for (size_t i = 0; i <= n; ++i) {
      p2.push_back(pts[idx[i]]);
      v2.push_back(vals[idx[i]]);
    }
    pts = p2;
    vals = v2;
  };
  auto combine = [&](const std::vector<double>& c, const std::vector<double>& w,
                     double alpha) {
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = c[i] + alpha * (c[i] - w[i]);
    return r;
  };
  while (evals < max_eval) {
    order();
    if (std::fabs(vals[n] - vals[0]) < tol) break;
    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / double(n);
    std::vector<double> xr = combine(centroid, pts[n], 1.0);
    double fr = f(xr);
    ++evals;
    if (fr < vals[0]) {
      std::vector<double> xe = combine(centroid, pts[n], 2.0);
      double fe = f(xe);
      ++evals;
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      std::vector<double> xc = combine(centroid, pts[n], -0.5);
      double fc = f(xc);
      ++evals;
      if (fc < vals[n]) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (size_t i = 1; i <= n; ++i) {
          for (size_t j = 0; j < n; ++j)
            pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
          vals[i] = f(pts[i]);
          ++evals;
        }
      }
    }
  }
  order();
  res.x = pts[0];
  res.value = vals[0];
  res.evaluations = evals;
  return res;
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on Legendre P_n from a Chebyshev-like start.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    nodes[i] = a + (b - a) * 0.5 * (1 - x);
    weights[i] = (b - a) / ((1 - x * x) * dp * dp);
  }
}

}  // namespace thurston
