#pragma once
// Implicit constant-ratio (Apollonius) surfaces in the two product spaces,
// geodesic sphere meshes, convexity analysis of nil balls, and mesh
// extraction / export utilities.

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "thurston/geodesics.hpp"

namespace thurston {

struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};

// Wavefront OBJ: `v x y z` lines followed by 1-based `f i j k` lines.
void write_obj(const TriMesh& mesh, std::ostream& os);
// CSV vertex dump with an x,y,z header.
void write_csv_vertices(const TriMesh& mesh, std::ostream& os);
// Total Euclidean area of the faces.
double mesh_area(const TriMesh& mesh);

// Surface of points whose distances from p1 and p2 keep the constant
// ratio lambda.  Only the two product spaces admit the closed form.
struct ApolloniusSpec {
  Space space = Space::S2xR;
  HPoint p1, p2;
  double lambda = 1;
};

// Signed implicit residual at the affine point x: zero on the surface,
// sign separating the two sides.  Equals 4 d(p1,x)^2 - lambda^2 4 d(x,p2)^2.
double apollonius_residual(const ApolloniusSpec& spec, const Vec3& x);

// Triangulated geodesic sphere of radius R about center, built from the
// exponential map over an n_dirs x n_dirs direction grid with single
// vertices and triangle fans at the two poles.
TriMesh sphere_mesh(Space s, const HPoint& center, double R, int n_dirs);

struct ConvexityReport {
  bool convex = false;
  double max_violation = 0;  // largest wrong-signed turning of the profile
};

// Affine-Euclidean convexity of the nil ball of radius R, decided by the
// sign of the second fundamental form of the sphere surface over a
// direction grid (the ball is not a Euclidean body of revolution, so a
// planar meridian test is not sufficient).
ConvexityReport nil_ball_convexity_check(double R, int n = 64);

struct SurfacePointResult {
  HPoint point;
  double res1 = 0;   // |d(A0,P) - lambda1 d(P,A1)|
  double res2 = 0;   // |d(A2,P) - lambda2 d(P,A0)|
  bool converged = false;
  bool tie = false;  // a second minimizer matched within 1e-6
};

// Point of the intersection curve of the two constant-ratio surfaces
// (about sides A0A1 and A2A0) closest to A0.
SurfacePointResult triangle_surface_point(Space s, const HPoint& a0,
                                          const HPoint& a1, const HPoint& a2,
                                          double lambda1, double lambda2);

// Marching-tetrahedra extraction of the zero set of f over the box
// [lo, hi] sampled at (res+1)^3 grid points.
TriMesh isosurface_mesh(const std::function<double(const Vec3&)>& f, Vec3 lo,
                        Vec3 hi, int res);

}  // namespace thurston
