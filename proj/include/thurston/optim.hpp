#pragma once
// Small numerical kernels: damped Newton for 2/3 dimensional root finding,
// Nelder-Mead minimization, Gauss-Legendre nodes.

#include <functional>
#include <vector>

#include "thurston/geometry.hpp"

namespace thurston {

struct NewtonResult {
  Vec3 x{};
  double residual = 1e300;
  bool converged = false;
  int iterations = 0;
};

// Damped Newton with forward-difference Jacobian and backtracking on |f|^2.
NewtonResult newton3(const std::function<Vec3(const Vec3&)>& f, Vec3 x0,
                     double tol = 1e-12, int max_iter = 60);

struct NelderMeadResult {
  std::vector<double> x;
  double value = 1e300;
  int evaluations = 0;
};

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> x0, double scale, double tol = 1e-12,
    int max_eval = 20000);

// Nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace thurston
