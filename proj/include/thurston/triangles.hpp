#pragma once
// Geodesic triangles and tetrahedra: interior angles, angle sums,
// circumscribed spheres.

#include <array>
#include <functional>
#include <vector>

#include "thurston/geodesics.hpp"

namespace thurston {

struct TriangleAngles {
  std::array<double, 3> angles{};
  double sum = 0;
  bool converged = false;
};

// Interior angles at the three vertices, computed by translating each
// vertex to the origin and measuring between the initial tangents of the
// geodesics to the two other vertices.
TriangleAngles interior_angles(Space sp, const std::array<HPoint, 3>& tri);

// Angle sums of a one-parameter triangle family.
std::vector<std::pair<double, double>> angle_sum_scan(
    Space sp, const std::function<std::array<HPoint, 3>(double)>& family,
    const std::vector<double>& params);

// Parameter where the angle sum crosses pi, by bisection over [lo, hi].
double angle_sum_crossing(
    Space sp, const std::function<std::array<HPoint, 3>(double)>& family,
    double lo, double hi, double tol = 1e-10);

struct Circumsphere {
  HPoint center;
  double radius = 0;
  double spread = 0;  // max |d_i - radius| over the four vertices
  bool valid = false;
};

// Center equidistant from the four vertices, found by direct minimization
// of the distance spread from the affine centroid seed.
Circumsphere circumsphere(Space sp, const std::array<HPoint, 4>& tet);

}  // namespace thurston
