#pragma once
// Signed simple ratios on geodesics (base, general, fibre and nil kinds),
// Menelaus and Ceva products, the fibre projection of nil ratios, and
// constructors for test configurations.

#include <array>

#include "thurston/geodesics.hpp"

namespace thurston {

// Weight rule applied to the two distances of a ratio:
//   Base    sin / sinh of the base-plane distance (points on the base)
//   General sin / sinh of distance * cos(v) of the carrying geodesic
//   Fibre   plain distance ratio (product-space plane through the fibre)
//   Nil     plain distance ratio
enum class RatioKind { Base, General, Fibre, Nil };

struct CollinearStations {
  GeodesicParams line;  // geodesic from the first point towards the last
  double sP = 0;        // signed station of the middle point
  double sB = 0;        // station of the last point (its distance)
  double residual = 0;  // affine gap of the middle point from the line
};

// Stations of P on the geodesic through A and B; throws when the triple
// is not collinear within tol or contains coincident points.
CollinearStations collinear_stations(Space sp, const HPoint& a,
                                     const HPoint& p, const HPoint& b,
                                     double tol = 1e-8);

// Signed simple ratio of the collinear triple (A, P, B): positive when P
// lies between A and B, negative otherwise.
double simple_ratio(RatioKind kind, Space sp, const HPoint& a,
                    const HPoint& p, const HPoint& b);

// s(A0,P,A1) s(A1,Q,A2) s(A2,R,A0) for feet {P, Q, R} on the three sides.
double menelaus_product(RatioKind kind, Space sp,
                        const std::array<HPoint, 3>& tri,
                        const std::array<HPoint, 3>& feet);

// Same cyclic product for cevian feet; when a cevian point is supplied,
// each foot is additionally verified collinear with its opposite vertex
// and the cevian point.
double ceva_product(RatioKind kind, Space sp,
                    const std::array<HPoint, 3>& tri,
                    const std::array<HPoint, 3>& feet,
                    const HPoint* cevian_point = nullptr);

// Euclidean arc-length ratio of the fibre-projected images of a collinear
// nil triple, computed by numeric arc-length integration of the
// projection (independent of the distance solver).
double projected_arc_ratio_nil(const HPoint& a, const HPoint& p,
                               const HPoint& b);

struct RatioConfig {
  std::array<HPoint, 3> tri;
  std::array<HPoint, 3> feet;  // ordered as in the products above
  HPoint cevian_point;
  bool has_cevian_point = false;
};

// Transversal of a triangle on the base sphere / base hyperboloid, with
// the third foot constructed as the line-line intersection.
RatioConfig base_menelaus_config(Space sp, double f1, double f2);
// Cevians through an interior point of a base triangle.
RatioConfig base_ceva_config(Space sp);
// Euclidean constructions inside the totally geodesic [x,y] plane
// through the fibre axis.
RatioConfig fibre_menelaus_config(Space sp);
RatioConfig fibre_ceva_config(Space sp);
// Nil cevian feet chosen on two sides, the third solved from the Ceva
// condition; the product of projected arc ratios recovers one.
RatioConfig nil_ceva_config(double f01, double f12);
// Feet cut out of the three nil side geodesics by a straight line in the
// fibre projection; its ratio product demonstrably misses -1.
RatioConfig nil_menelaus_line_config();

}  // namespace thurston
