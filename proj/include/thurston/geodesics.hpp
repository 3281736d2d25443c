#pragma once
// Geodesics, exponential maps, distances and the metric data of the five
// model spaces.
//
// Chart coordinates used per space:
//   s2xr : (t, phi, theta)   fibre log-radius, longitude, latitude
//   h2xr : (t, r, alpha)     fibre log-radius, base radius, base angle
//   nil  : (x, y, z)         model affine coordinates
//   sl2r : (r, theta, phi)   hyperboloid coordinates
//   sol  : (x, y, z)         model affine coordinates
//
// Direction parameters of a unit-speed geodesic through the origin:
//   dir1 = azimuth  (u for the products, alpha for nil/sol, lambda for sl2r)
//   dir2 = elevation (v for the products, theta for nil/sol, alpha for sl2r)

#include <utility>
#include <vector>

#include "thurston/model.hpp"

namespace thurston {

struct GeodesicParams {
  Space space = Space::S2xR;
  double dir1 = 0;
  double dir2 = 0;
  double s = 0;
};

// Unit tangent vector at the origin in model coordinates.
Vec3 unit_tangent(Space s, double dir1, double dir2);

// Exponential map at the model origin.
HPoint exp_origin(const GeodesicParams& p);
// Exponential map at an arbitrary base point.
HPoint exp_point(Space s, const HPoint& base, const GeodesicParams& p);

// Closed-form chart solutions (origin start).
Vec3 nil_geodesic(double alpha, double theta, double s);      // affine coords
Vec3 sl2r_geodesic_chart(double alpha, double s);             // (r,theta,phi)

Mat3 metric_tensor(Space s, const Vec3& chart_pos);
double volume_element(Space s, const Vec3& chart_pos);
// Metric in model affine coordinates (identity at the origin).
Mat3 metric_cartesian(Space s, const HPoint& p);

Vec3 chart_coords(Space s, const HPoint& p);
HPoint chart_to_model(Space s, const Vec3& chart);

// Interior angle between tangents tu, tv (chart components) at chart_pos.
double angle(Space s, const Vec3& chart_pos, const Vec3& tu, const Vec3& tv);

struct OdeState {
  Vec3 pos;  // chart coordinates
  Vec3 vel;
};

struct OdeSample {
  double s;
  OdeState state;
};

// Fixed-step RK4 integration of the geodesic equations in chart
// coordinates, with periodic renormalization of the speed.
std::vector<OdeSample> geodesic_ode(Space s, const OdeState& init,
                                    double s_end, double step = 1e-3,
                                    int renorm_every = 100);

struct DistanceResult {
  double d = 0;
  GeodesicParams params;     // geodesic from the first point to the second
  double residual = 1e300;   // affine gap of exp at the solved parameters
  bool converged = false;
  bool ambiguous = false;    // antipodal base points in s2xr
};

DistanceResult distance_from_origin(Space s, const HPoint& q);
DistanceResult distance(Space s, const HPoint& p, const HPoint& q);

// Volume of the geodesic ball of radius R about the origin, by quadrature
// of the exponential-map Jacobian over the direction sphere.
double ball_volume(Space s, double R, int n_s = 48, int n_elev = 48,
                   int n_azim = 96);

// Largest sphere radius admitting a simply connected geodesic sphere
// (infinity when unrestricted).
double max_sphere_radius(Space s);

// --- Nil specific helpers ---

// Radius recovered from the projected endpoint of a sphere point.
double nil_radius_from_xy(double x, double y, double theta);

// Meridian of the origin-centred sphere in the [x,z] half plane.
std::pair<double, double> nil_sphere_cross_section(double R, double theta);

// Fibre projection of an origin-started geodesic: a circle through the
// origin (or a line when theta = 0).
struct NilProjection {
  bool is_line = false;
  double dir = 0;        // line direction angle (is_line case)
  double cx = 0, cy = 0; // circle centre
  double radius = 0;
};
NilProjection fibre_projection_nil(double alpha, double theta);

}  // namespace thurston
