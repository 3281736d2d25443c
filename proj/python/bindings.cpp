// Python bindings for the main kernel operations. Points pass as affine
// (x, y, z) tuples, spaces and ratio kinds as lowercase tags.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thurston/packing.hpp"
#include "thurston/ratios.hpp"
#include "thurston/surfaces.hpp"
#include "thurston/triangles.hpp"

namespace py = pybind11;
using namespace thurston;

namespace {

using Triple = std::array<double, 3>;

HPoint pt(const Triple& a) { return HPoint(1, a[0], a[1], a[2]); }
Triple tr(const Vec3& v) { return {v.x, v.y, v.z}; }

std::array<HPoint, 3> tri3(const Triple& a, const Triple& b, const Triple& c) {
  return {pt(a), pt(b), pt(c)};
}

RatioKind kind_of(const std::string& name) {
  if (name == "base") return RatioKind::Base;
  if (name == "general") return RatioKind::General;
  if (name == "fibre") return RatioKind::Fibre;
  if (name == "nil") return RatioKind::Nil;
  throw std::invalid_argument("unknown ratio kind: " + name);
}

py::dict mesh_dict(const TriMesh& m) {
  py::list vertices, faces;
  for (const Vec3& v : m.vertices) vertices.append(tr(v));
  for (const auto& f : m.faces) faces.append(py::make_tuple(f[0], f[1], f[2]));
  py::dict d;
  d["vertices"] = vertices;
  d["faces"] = faces;
  return d;
}

py::dict packing_dict(const PackingResult& r) {
  py::dict d;
  d["kernel_base"] = tr(r.kernel.u);
  d["kernel_t"] = r.kernel.t;
  d["lattice_period"] = r.lattice_period;
  d["rho"] = r.rho;
  d["ball_volume"] = r.ball_vol;
  d["cell_volume"] = r.cell_volume;
  d["cell_std_error"] = r.cell_std_error;
  d["density"] = r.density;
  d["kissing"] = r.kissing;
  return d;
}

}  // namespace

PYBIND11_MODULE(pythurston, m) {
  m.doc() =
      "Geodesics, distances, triangles, constant-ratio surfaces, signed "
      "ratio products and ball packings of the five fibred homogeneous "
      "3-geometries in the unified projective model";

  m.def(
      "spaces", [] { return std::vector<std::string>{"s2xr", "h2xr", "nil",
                                                     "sl2r", "sol"}; },
      "Supported space tags");

  m.def(
      "origin",
      [](const std::string& sp) {
        return tr(model_origin(space_from_name(sp)).affine());
      },
      py::arg("space"), "Model origin in affine coordinates");

  m.def(
      "exp_map",
      [](const std::string& sp, double dir1, double dir2, double s) {
        return tr(exp_origin({space_from_name(sp), dir1, dir2, s}).affine());
      },
      py::arg("space"), py::arg("dir1"), py::arg("dir2"), py::arg("s"),
      "Exponential map at the model origin");

  m.def(
      "distance",
      [](const std::string& sp, const Triple& p, const Triple& q) {
        DistanceResult d = distance(space_from_name(sp), pt(p), pt(q));
        py::dict out;
        out["d"] = d.d;
        out["dir1"] = d.params.dir1;
        out["dir2"] = d.params.dir2;
        out["s"] = d.params.s;
        out["residual"] = d.residual;
        out["converged"] = d.converged;
        out["ambiguous"] = d.ambiguous;
        return out;
      },
      py::arg("space"), py::arg("p"), py::arg("q"),
      "Distance and connecting geodesic parameters");

  m.def(
      "triangle_angles",
      [](const std::string& sp, const Triple& a, const Triple& b,
         const Triple& c) {
        TriangleAngles t = interior_angles(space_from_name(sp), tri3(a, b, c));
        py::dict out;
        out["angles"] = t.angles;
        out["sum"] = t.sum;
        out["converged"] = t.converged;
        return out;
      },
      py::arg("space"), py::arg("a"), py::arg("b"), py::arg("c"),
      "Interior angles and angle sum of a geodesic triangle");

  m.def(
      "circumsphere",
      [](const std::string& sp, const Triple& a, const Triple& b,
         const Triple& c, const Triple& d) {
        Circumsphere cs = circumsphere(space_from_name(sp),
                                       {pt(a), pt(b), pt(c), pt(d)});
        py::dict out;
        out["center"] = tr(cs.center.affine());
        out["radius"] = cs.radius;
        out["spread"] = cs.spread;
        out["valid"] = cs.valid;
        return out;
      },
      py::arg("space"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
      "Circumscribed sphere of a tetrahedron");

  m.def(
      "ball_volume",
      [](const std::string& sp, double R) {
        return ball_volume(space_from_name(sp), R);
      },
      py::arg("space"), py::arg("R"), "Volume of the geodesic ball");

  m.def(
      "sphere_mesh",
      [](const std::string& sp, const Triple& center, double R, int n) {
        return mesh_dict(sphere_mesh(space_from_name(sp), pt(center), R, n));
      },
      py::arg("space"), py::arg("center"), py::arg("R"), py::arg("n") = 32,
      "Triangulated geodesic sphere");

  m.def(
      "apollonius_residual",
      [](const std::string& sp, const Triple& p1, const Triple& p2,
         double lam, const Triple& x) {
        ApolloniusSpec spec{space_from_name(sp), pt(p1), pt(p2), lam};
        return apollonius_residual(spec, {x[0], x[1], x[2]});
      },
      py::arg("space"), py::arg("p1"), py::arg("p2"), py::arg("lam"),
      py::arg("x"), "Implicit residual of the constant distance-ratio surface");

  m.def(
      "nil_ball_convex",
      [](double R) {
        ConvexityReport r = nil_ball_convexity_check(R);
        return py::make_tuple(r.convex, r.max_violation);
      },
      py::arg("R"), "Euclidean convexity of the nil ball of radius R");

  m.def(
      "simple_ratio",
      [](const std::string& kind, const std::string& sp, const Triple& a,
         const Triple& p, const Triple& b) {
        return simple_ratio(kind_of(kind), space_from_name(sp), pt(a), pt(p),
                            pt(b));
      },
      py::arg("kind"), py::arg("space"), py::arg("a"), py::arg("p"),
      py::arg("b"), "Signed simple ratio of a collinear triple");

  m.def(
      "menelaus_product",
      [](const std::string& kind, const std::string& sp, const Triple& a0,
         const Triple& a1, const Triple& a2, const Triple& f0,
         const Triple& f1, const Triple& f2) {
        return menelaus_product(kind_of(kind), space_from_name(sp),
                                tri3(a0, a1, a2), tri3(f0, f1, f2));
      },
      py::arg("kind"), py::arg("space"), py::arg("a0"), py::arg("a1"),
      py::arg("a2"), py::arg("f0"), py::arg("f1"), py::arg("f2"),
      "Transversal ratio product over a triangle");

  m.def(
      "ceva_product",
      [](const std::string& kind, const std::string& sp, const Triple& a0,
         const Triple& a1, const Triple& a2, const Triple& f0,
         const Triple& f1, const Triple& f2) {
        return ceva_product(kind_of(kind), space_from_name(sp),
                            tri3(a0, a1, a2), tri3(f0, f1, f2));
      },
      py::arg("kind"), py::arg("space"), py::arg("a0"), py::arg("a1"),
      py::arg("a2"), py::arg("f0"), py::arg("f1"), py::arg("f2"),
      "Cevian ratio product over a triangle");

  m.def(
      "packing_density",
      [](int q, double period, const Triple& kernel_base, double kernel_t,
         int mc, uint64_t seed) {
        SpaceGroupSpec grp = s2xr_group_4q_I_2(q, period);
        SpherePoint k{{kernel_base[0], kernel_base[1], kernel_base[2]},
                      kernel_t};
        return packing_dict(packing_density(grp, k, mc, seed));
      },
      py::arg("q"), py::arg("period"), py::arg("kernel_base"),
      py::arg("kernel_t") = 0.0, py::arg("mc") = 48,
      py::arg("seed") = 20240901,
      "Ball packing density of the glide space group for a given kernel");

  m.def(
      "optimize_packing",
      [](int q, const std::string& region, int mc, uint64_t seed) {
        KernelRegion r;
        if (region == "segment")
          r = KernelRegion::SegmentA2A3;
        else if (region == "vertex")
          r = KernelRegion::VertexA3;
        else
          throw std::invalid_argument("region must be segment or vertex");
        return packing_dict(optimize_kernel(q, r, mc, seed));
      },
      py::arg("q"), py::arg("region"), py::arg("mc") = 48,
      py::arg("seed") = 20240901,
      "Optimized kernel and period for the glide space group");
}
