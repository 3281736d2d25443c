#pragma once
// Discrete isometry groups of the product-of-sphere-and-line space,
// orbits, Dirichlet-Voronoi cells, ball packing densities and kernel
// optimization for the glide-reflection space-group family 4q.I.2.

#include <cstdint>
#include <vector>

#include "thurston/geodesics.hpp"

namespace thurston {

// Isometry (A x R, r): base isometry A (orthogonal, acting on row
// vectors from the right), fibre reflection R = +-1 and fibre shift r.
// Composition follows (A1 A2 x R1 R2, r1 R2 + r2).
struct GroupElement {
  Mat3 A = mat3_identity();
  int R = 1;
  double r = 0;
};

GroupElement group_mul(const GroupElement& a, const GroupElement& b);

struct SpaceGroupSpec {
  Space space = Space::S2xR;
  std::vector<GroupElement> generators;
  double lattice_period = 0;
};

// Space group with point group the full (2, 2, q) spherical reflection
// group and fibre glide T/2 on the equator mirror; the lattice of pure
// fibre translations has period T.
SpaceGroupSpec s2xr_group_4q_I_2(int q, double lattice_period);

// Point of the product space as (unit base vector, fibre coordinate).
struct SpherePoint {
  Vec3 u{1, 0, 0};
  double t = 0;
};

HPoint sphere_point_to_model(const SpherePoint& p);
double sphere_point_distance(const SpherePoint& a, const SpherePoint& b);
SpherePoint apply_element(const GroupElement& g, const SpherePoint& p);

struct Orbit {
  SpherePoint kernel;
  std::vector<SpherePoint> points;  // distinct non-stabilizing images
  int stabilizer_order = 1;
  bool complete = false;  // closure reached within the word budget
  double bound = 0;
};

// All orbit images within the distance bound, with stabilizer detection.
Orbit orbit(const SpaceGroupSpec& grp, const SpherePoint& kernel,
            double bound, int budget = 200000);

// Half the minimal distance from the kernel to a non-stabilizing image.
double max_inradius(const SpaceGroupSpec& grp, const SpherePoint& kernel);

// Stratified Monte Carlo volume of the Dirichlet-Voronoi cell around the
// kernel, sampled uniformly in the invariant measure on the fundamental
// box (sphere times one lattice period). The orbit truncation bound is
// re-verified on a subsample against a doubled bound; a group whose
// orbit yields no competing image (e.g. the trivial group, whose cell
// is unbounded) is rejected.
double dv_cell_volume(const SpaceGroupSpec& grp, const SpherePoint& kernel,
                      int strata_per_axis, uint64_t seed,
                      double* std_error = nullptr);

struct PackingResult {
  SpherePoint kernel;
  double lattice_period = 0;
  double rho = 0;
  double ball_vol = 0;
  double cell_volume = 0;
  double cell_std_error = 0;
  double density = 0;
  int kissing = 0;
};

PackingResult packing_density(const SpaceGroupSpec& grp,
                              const SpherePoint& kernel,
                              int mc_strata = 48, uint64_t seed = 20240901);

// Closed-form ball volume from the product structure, used as the fast
// objective inside the kernel optimizer (the quadrature version in the
// geodesics module is the generic path).
double s2xr_ball_volume_exact(double R);

// Kernel search strata of the (2, 2, q) fundamental triangle.
enum class KernelRegion { SegmentA2A3, VertexA3 };

// One evaluated candidate of the kernel search.
struct SearchSample {
  double position = 0;  // arc parameter in [0, 1] from A2 towards A3
  double period = 0;
  double density = 0;
};

// Maximizes the density over the kernel position in the region and over
// the lattice period; the returned result is re-evaluated with the
// Monte Carlo cell volume. The grid stage is recorded in the trace.
// For the axis kernel the period search is constrained to arrangements
// whose balls stay in contact with both neighbour classes (see the
// implementation note), since the unconstrained density is monotone in
// the period up to the ball existence range.
PackingResult optimize_kernel(int q, KernelRegion region,
                              int mc_strata = 48, uint64_t seed = 20240901,
                              std::vector<SearchSample>* trace = nullptr);

}  // namespace thurston
