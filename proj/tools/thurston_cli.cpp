// Command-line interface to the computational kernel: geodesics,
// distances, angles, triangles, circumspheres, sphere and constant-ratio
// surface meshes, signed ratio products, ball packing densities and the
// nil-specific helpers.
//
// Exit codes: 0 success, 1 numeric failure (diagnostics on stderr),
// 2 validation error / bad arguments.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thurston/packing.hpp"
#include "thurston/ratios.hpp"
#include "thurston/surfaces.hpp"
#include "thurston/triangles.hpp"

using json = nlohmann::ordered_json;
using namespace thurston;

namespace {

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All serialized numbers carry 12 significant digits.
double sig12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

// Renders JSON with floats printed at 12 significant digits (the default
// dump would print shortest round-trip representations instead).
void dump12(const json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' '), pad2(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad2 << '"' << it.key() << "\": ";
      dump12(it.value(), os, indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      os << pad2;
      dump12(j[i], os, indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else if (j.is_number_float()) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
    os << buf;
  } else {
    os << j.dump();
  }
}

json num3(const Vec3& v) {
  return json::array({sig12(v.x), sig12(v.y), sig12(v.z)});
}

Vec3 as_vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

HPoint as_point(const std::vector<double>& v) {
  return HPoint(1, v[0], v[1], v[2]);
}

std::array<HPoint, 3> as_triple(const std::vector<double>& v) {
  return {HPoint(1, v[0], v[1], v[2]), HPoint(1, v[3], v[4], v[5]),
          HPoint(1, v[6], v[7], v[8])};
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw std::invalid_argument("cannot open output file: " + out);
  os << text;
}

void emit_json(const std::string& out, const json& j) {
  std::ostringstream os;
  dump12(j, os, 0);
  os << "\n";
  write_text(out, os.str());
}

void emit_mesh(const std::string& out, const std::string& format,
               const TriMesh& mesh) {
  std::ostringstream os;
  if (format == "obj")
    write_obj(mesh, os);
  else if (format == "csv")
    write_csv_vertices(mesh, os);
  else if (format == "json") {
    json j;
    j["vertices"] = json::array();
    for (const Vec3& v : mesh.vertices) j["vertices"].push_back(num3(v));
    j["faces"] = json::array();
    for (const auto& f : mesh.faces)
      j["faces"].push_back(json::array({f[0], f[1], f[2]}));
    dump12(j, os, 0);
    os << "\n";
  } else {
    throw std::invalid_argument("unknown mesh format: " + format);
  }
  write_text(out, os.str());
}

RatioKind kind_from_name(const std::string& name) {
  if (name == "base") return RatioKind::Base;
  if (name == "general") return RatioKind::General;
  if (name == "fibre") return RatioKind::Fibre;
  if (name == "nil") return RatioKind::Nil;
  throw std::invalid_argument("unknown ratio kind: " + name);
}

json distance_json(Space sp, const DistanceResult& d) {
  json j;
  j["space"] = space_name(sp);
  j["d"] = sig12(d.d);
  j["dir1"] = sig12(d.params.dir1);
  j["dir2"] = sig12(d.params.dir2);
  j["s"] = sig12(d.params.s);
  j["residual"] = sig12(d.residual);
  j["converged"] = d.converged;
  j["ambiguous"] = d.ambiguous;
  return j;
}

json packing_json(const PackingResult& r) {
  json j;
  j["kernel"] = {{"base", num3(r.kernel.u)}, {"t", sig12(r.kernel.t)}};
  j["lattice_period"] = sig12(r.lattice_period);
  j["rho"] = sig12(r.rho);
  j["ball_volume"] = sig12(r.ball_vol);
  j["cell_volume"] = sig12(r.cell_volume);
  j["cell_std_error"] = sig12(r.cell_std_error);
  j["density"] = sig12(r.density);
  j["kissing"] = r.kissing;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational kernel for the five fibred homogeneous "
               "3-geometries in the unified projective model"};
  app.require_subcommand(1);

  std::string space_tag = "s2xr", out = "-", format = "json";
  std::string kind_tag = "general";

  // --- geodesic ---
  auto* geo = app.add_subcommand("geodesic", "Sample a unit-speed geodesic");
  double g_u = 0, g_v = 0, g_s = 1;
  int g_samples = 100;
  geo->add_option("--space", space_tag, "Space tag")->capture_default_str();
  geo->add_option("--u", g_u, "First direction parameter");
  geo->add_option("--v", g_v, "Second direction parameter");
  geo->add_option("--s", g_s, "Arc length")->check(CLI::NonNegativeNumber);
  geo->add_option("--samples", g_samples, "Sample count")
      ->check(CLI::PositiveNumber);
  geo->add_option("--format", format, "csv or json")->capture_default_str();
  geo->add_option("--out", out, "Output path (- for stdout)");
  geo->callback([&] {
    Space sp = space_from_name(space_tag);
    std::ostringstream os;
    json rows = json::array();
    if (format == "csv") os << "s,x,y,z\n";
    for (int i = 0; i < g_samples; ++i) {
      double s = g_samples == 1 ? g_s : g_s * i / (g_samples - 1);
      Vec3 p = exp_origin({sp, g_u, g_v, s}).affine();
      if (format == "csv") {
        char line[160];
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n",
                      sig12(s), sig12(p.x), sig12(p.y), sig12(p.z));
        os << line;
      } else if (format == "json") {
        rows.push_back({{"s", sig12(s)}, {"point", num3(p)}});
      } else {
        throw std::invalid_argument("unknown format: " + format);
      }
    }
    if (format == "json") {
      dump12(rows, os, 0);
      os << "\n";
    }
    write_text(out, os.str());
  });

  // --- distance ---
  auto* dist = app.add_subcommand("distance", "Distance between two points");
  std::vector<double> d_p, d_q;
  dist->add_option("--space", space_tag, "Space tag")->capture_default_str();
  dist->add_option("--p", d_p, "First point (affine x y z)")->expected(3);
  dist->add_option("--q", d_q, "Second point (affine x y z)")->expected(3);
  dist->add_option("--out", out, "Output path");
  dist->callback([&] {
    Space sp = space_from_name(space_tag);
    if (d_p.size() != 3 || d_q.size() != 3)
      throw std::invalid_argument("both --p and --q are required");
    DistanceResult d = distance(sp, as_point(d_p), as_point(d_q));
    if (!d.converged)
      throw NumericFailure("distance solver did not converge; residual " +
                           std::to_string(d.residual));
    emit_json(out, distance_json(sp, d));
  });

  // --- angle ---
  auto* ang = app.add_subcommand(
      "angle", "Interior angle at the first of three points");
  std::vector<double> a_a, a_b, a_c;
  ang->add_option("--space", space_tag, "Space tag")->capture_default_str();
  ang->add_option("--a", a_a, "Vertex (affine x y z)")->expected(3);
  ang->add_option("--b", a_b, "Second point")->expected(3);
  ang->add_option("--c", a_c, "Third point")->expected(3);
  ang->add_option("--out", out, "Output path");
  ang->callback([&] {
    Space sp = space_from_name(space_tag);
    if (a_a.size() != 3 || a_b.size() != 3 || a_c.size() != 3)
      throw std::invalid_argument("--a, --b and --c are required");
    TriangleAngles t = interior_angles(
        sp, {as_point(a_a), as_point(a_b), as_point(a_c)});
    if (!t.converged)
      throw NumericFailure("angle computation did not converge");
    emit_json(out, json{{"space", space_name(sp)},
                        {"angle", sig12(t.angles[0])}});
  });

  // --- triangle ---
  auto* tri = app.add_subcommand("triangle",
                                 "Interior angles and angle sum");
  std::vector<double> t_v;
  tri->add_option("--space", space_tag, "Space tag")->capture_default_str();
  tri->add_option("--vertices", t_v, "Three affine points (9 numbers)")
      ->expected(9);
  tri->add_option("--out", out, "Output path");
  tri->callback([&] {
    Space sp = space_from_name(space_tag);
    if (t_v.size() != 9)
      throw std::invalid_argument("--vertices requires 9 numbers");
    TriangleAngles t = interior_angles(sp, as_triple(t_v));
    if (!t.converged)
      throw NumericFailure("triangle angle computation did not converge");
    emit_json(out, json{{"space", space_name(sp)},
                        {"angles", json::array({sig12(t.angles[0]),
                                                sig12(t.angles[1]),
                                                sig12(t.angles[2])})},
                        {"sum", sig12(t.sum)}});
  });

  // --- circumsphere ---
  auto* cs = app.add_subcommand("circumsphere",
                                "Circumscribed sphere of a tetrahedron");
  std::vector<double> c_v;
  cs->add_option("--space", space_tag, "Space tag")->capture_default_str();
  cs->add_option("--vertices", c_v, "Four affine points (12 numbers)")
      ->expected(12);
  cs->add_option("--out", out, "Output path");
  cs->callback([&] {
    Space sp = space_from_name(space_tag);
    if (c_v.size() != 12)
      throw std::invalid_argument("--vertices requires 12 numbers");
    std::array<HPoint, 4> tet{
        HPoint(1, c_v[0], c_v[1], c_v[2]), HPoint(1, c_v[3], c_v[4], c_v[5]),
        HPoint(1, c_v[6], c_v[7], c_v[8]),
        HPoint(1, c_v[9], c_v[10], c_v[11])};
    Circumsphere c = circumsphere(sp, tet);
    if (!c.valid)
      throw NumericFailure("circumsphere search failed; spread " +
                           std::to_string(c.spread));
    emit_json(out, json{{"space", space_name(sp)},
                        {"center", num3(c.center.affine())},
                        {"radius", sig12(c.radius)},
                        {"spread", sig12(c.spread)}});
  });

  // --- sphere-mesh ---
  auto* sm = app.add_subcommand("sphere-mesh", "Triangulated geodesic sphere");
  std::vector<double> s_c{0, 0, 0};
  double s_r = 1;
  int s_n = 32;
  sm->add_option("--space", space_tag, "Space tag")->capture_default_str();
  sm->add_option("--center", s_c, "Center (affine x y z)")->expected(3);
  sm->add_option("--radius", s_r, "Radius")->check(CLI::PositiveNumber);
  sm->add_option("--n", s_n, "Direction grid resolution")
      ->check(CLI::PositiveNumber);
  sm->add_option("--format", format, "obj, csv or json")
      ->capture_default_str();
  sm->add_option("--out", out, "Output path");
  sm->callback([&] {
    Space sp = space_from_name(space_tag);
    HPoint center = s_c.size() == 3 ? as_point(s_c) : model_origin(sp);
    emit_mesh(out, format, sphere_mesh(sp, center, s_r, s_n));
  });

  // --- apollonius-mesh ---
  auto* am = app.add_subcommand(
      "apollonius-mesh", "Constant distance-ratio surface mesh");
  std::vector<double> ap_1, ap_2, ap_lo, ap_hi;
  double ap_lambda = 1;
  int ap_res = 48;
  am->add_option("--space", space_tag, "s2xr or h2xr")->capture_default_str();
  am->add_option("--p1", ap_1, "First focus")->expected(3);
  am->add_option("--p2", ap_2, "Second focus")->expected(3);
  am->add_option("--lambda", ap_lambda, "Distance ratio")
      ->check(CLI::NonNegativeNumber);
  am->add_option("--lo", ap_lo, "Box lower corner")->expected(3);
  am->add_option("--hi", ap_hi, "Box upper corner")->expected(3);
  am->add_option("--res", ap_res, "Grid resolution")
      ->check(CLI::PositiveNumber);
  am->add_option("--format", format, "obj, csv or json")
      ->capture_default_str();
  am->add_option("--out", out, "Output path");
  am->callback([&] {
    Space sp = space_from_name(space_tag);
    if (ap_1.size() != 3 || ap_2.size() != 3)
      throw std::invalid_argument("--p1 and --p2 are required");
    if (ap_lo.size() != 3 || ap_hi.size() != 3)
      throw std::invalid_argument("--lo and --hi are required");
    ApolloniusSpec spec{sp, as_point(ap_1), as_point(ap_2), ap_lambda};
    auto f = [&](const Vec3& x) {
      if (!in_domain(sp, HPoint(x))) return 1.0;
      return apollonius_residual(spec, x);
    };
    emit_mesh(out, format,
              isosurface_mesh(f, as_vec3(ap_lo), as_vec3(ap_hi), ap_res));
  });

  // --- ratio ---
  auto* ra = app.add_subcommand("ratio",
                                "Signed simple ratio of a collinear triple");
  std::vector<double> r_a, r_p, r_b;
  ra->add_option("--space", space_tag, "Space tag")->capture_default_str();
  ra->add_option("--kind", kind_tag, "base, general, fibre or nil")
      ->capture_default_str();
  ra->add_option("--a", r_a, "First endpoint")->expected(3);
  ra->add_option("--p", r_p, "Middle point")->expected(3);
  ra->add_option("--b", r_b, "Second endpoint")->expected(3);
  ra->add_option("--out", out, "Output path");
  ra->callback([&] {
    Space sp = space_from_name(space_tag);
    if (r_a.size() != 3 || r_p.size() != 3 || r_b.size() != 3)
      throw std::invalid_argument("--a, --p and --b are required");
    RatioKind kind = kind_from_name(kind_tag);
    HPoint a = as_point(r_a), p = as_point(r_p), b = as_point(r_b);
    CollinearStations st = collinear_stations(sp, a, p, b);
    emit_json(out, json{{"space", space_name(sp)},
                        {"kind", kind_tag},
                        {"ratio", sig12(simple_ratio(kind, sp, a, p, b))},
                        {"station_p", sig12(st.sP)},
                        {"station_b", sig12(st.sB)},
                        {"residual", sig12(st.residual)}});
  });

  // --- menelaus / ceva ---
  auto add_product = [&](const char* name, const char* help, bool ceva) {
    auto* sub = app.add_subcommand(name, help);
    auto tri_v = std::make_shared<std::vector<double>>();
    auto feet_v = std::make_shared<std::vector<double>>();
    auto cev_v = std::make_shared<std::vector<double>>();
    auto builtin = std::make_shared<std::string>();
    sub->add_option("--space", space_tag, "Space tag")->capture_default_str();
    sub->add_option("--kind", kind_tag, "base, general, fibre or nil")
        ->capture_default_str();
    sub->add_option("--tri", *tri_v, "Triangle (9 numbers)")->expected(9);
    sub->add_option("--feet", *feet_v, "Feet on the sides (9 numbers)")
        ->expected(9);
    if (ceva)
      sub->add_option("--cevian-point", *cev_v, "Common cevian point")
          ->expected(3);
    sub->add_option("--builtin", *builtin,
                    ceva ? "Constructed configuration: base, fibre or nil"
                         : "Constructed configuration: base, fibre or "
                           "nil-line");
    sub->add_option("--out", out, "Output path");
    sub->callback([&, tri_v, feet_v, cev_v, builtin, ceva] {
      Space sp = space_from_name(space_tag);
      RatioConfig cfg;
      std::string kind_used = kind_tag;
      if (!builtin->empty()) {
        if (*builtin == "base") {
          cfg = ceva ? base_ceva_config(sp) : base_menelaus_config(sp, 0.2, 0.6);
          kind_used = "base";
        } else if (*builtin == "fibre") {
          cfg = ceva ? fibre_ceva_config(sp) : fibre_menelaus_config(sp);
          kind_used = "fibre";
        } else if (ceva && *builtin == "nil") {
          cfg = nil_ceva_config(0.37, 0.64);
          sp = Space::Nil;
          kind_used = "nil";
        } else if (!ceva && *builtin == "nil-line") {
          cfg = nil_menelaus_line_config();
          sp = Space::Nil;
          kind_used = "nil";
        } else {
          throw std::invalid_argument("unknown builtin configuration: " +
                                      *builtin);
        }
      } else {
        if (tri_v->size() != 9 || feet_v->size() != 9)
          throw std::invalid_argument("--tri and --feet are required");
        cfg.tri = as_triple(*tri_v);
        cfg.feet = as_triple(*feet_v);
        if (ceva && cev_v->size() == 3) {
          cfg.cevian_point = as_point(*cev_v);
          cfg.has_cevian_point = true;
        }
      }
      RatioKind kind = kind_from_name(kind_used);
      double product =
          ceva ? ceva_product(kind, sp, cfg.tri, cfg.feet,
                              cfg.has_cevian_point ? &cfg.cevian_point
                                                   : nullptr)
               : menelaus_product(kind, sp, cfg.tri, cfg.feet);
      json j;
      j["space"] = space_name(sp);
      j["kind"] = kind_used;
      j["product"] = sig12(product);
      j["triangle"] = json::array();
      j["feet"] = json::array();
      for (int i = 0; i < 3; ++i) {
        j["triangle"].push_back(num3(cfg.tri[i].affine()));
        j["feet"].push_back(num3(cfg.feet[i].affine()));
        j["ratios"].push_back(sig12(simple_ratio(
            kind, sp, cfg.tri[i], cfg.feet[i], cfg.tri[(i + 1) % 3])));
      }
      if (ceva && cfg.has_cevian_point)
        j["cevian_point"] = num3(cfg.cevian_point.affine());
      emit_json(out, j);
    });
  };
  add_product("menelaus", "Transversal ratio product over a triangle", false);
  add_product("ceva", "Cevian ratio product over a triangle", true);

  // --- packing ---
  auto* pk = app.add_subcommand("packing", "Ball packing density");
  std::string pk_group = "4q.I.2", pk_region = "auto", pk_trace;
  int pk_q = 2, pk_mc = 48;
  uint64_t pk_seed = 20240901;
  double pk_period = 0;
  std::vector<double> pk_kernel;
  bool pk_optimize = false;
  pk->add_option("--group", pk_group, "Space group family")
      ->capture_default_str();
  pk->add_option("--q", pk_q, "Point group parameter")->check(CLI::Range(2, 64));
  pk->add_flag("--optimize", pk_optimize, "Optimize the kernel and period");
  pk->add_option("--region", pk_region,
                 "Kernel search region: segment, vertex or auto");
  pk->add_option("--period", pk_period, "Lattice period (direct evaluation)");
  pk->add_option("--kernel", pk_kernel,
                 "Kernel (unit base x y z and fibre t)")
      ->expected(4);
  pk->add_option("--mc", pk_mc, "Monte Carlo strata per axis")
      ->check(CLI::PositiveNumber);
  pk->add_option("--seed", pk_seed, "Monte Carlo seed");
  pk->add_option("--trace", pk_trace, "CSV path for the search trace");
  pk->add_option("--out", out, "Output path");
  pk->callback([&] {
    if (pk_group != "4q.I.2")
      throw std::invalid_argument("unknown group family: " + pk_group);
    json j;
    j["group"] = pk_group;
    j["q"] = pk_q;
    j["seed"] = pk_seed;
    std::vector<SearchSample> trace;
    if (pk_optimize) {
      if (pk_region == "segment") {
        j["region"] = "segment";
        j["result"] = packing_json(optimize_kernel(
            pk_q, KernelRegion::SegmentA2A3, pk_mc, pk_seed, &trace));
      } else if (pk_region == "vertex") {
        j["region"] = "vertex";
        j["result"] = packing_json(optimize_kernel(
            pk_q, KernelRegion::VertexA3, pk_mc, pk_seed, &trace));
      } else if (pk_region == "auto") {
        PackingResult seg = optimize_kernel(pk_q, KernelRegion::SegmentA2A3,
                                            pk_mc, pk_seed, &trace);
        PackingResult ver = optimize_kernel(pk_q, KernelRegion::VertexA3,
                                            pk_mc, pk_seed, &trace);
        bool vertex_wins = ver.density > seg.density;
        j["region"] = vertex_wins ? "vertex" : "segment";
        j["result"] = packing_json(vertex_wins ? ver : seg);
        j["runner_up"] = packing_json(vertex_wins ? seg : ver);
      } else {
        throw std::invalid_argument("unknown region: " + pk_region);
      }
      if (!pk_trace.empty()) {
        std::ostringstream os;
        os << "position,period,density\n";
        for (const SearchSample& s : trace) {
          char line[120];
          std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g\n",
                        sig12(s.position), sig12(s.period), sig12(s.density));
          os << line;
        }
        write_text(pk_trace, os.str());
      }
    } else {
      if (pk_kernel.size() != 4 || pk_period <= 0)
        throw std::invalid_argument(
            "direct evaluation requires --kernel and --period");
      SpaceGroupSpec grp = s2xr_group_4q_I_2(pk_q, pk_period);
      SpherePoint k{{pk_kernel[0], pk_kernel[1], pk_kernel[2]}, pk_kernel[3]};
      if (norm(k.u) < 1e-12)
        throw std::invalid_argument("kernel base vector must be nonzero");
      j["result"] = packing_json(packing_density(grp, k, pk_mc, pk_seed));
    }
    emit_json(out, j);
  });

  // --- nil-tools ---
  auto* nt = app.add_subcommand("nil-tools", "Nil-specific helpers");
  nt->require_subcommand(1);
  auto* ntp = nt->add_subcommand("projection",
                                 "Fibre projection of a geodesic");
  double np_alpha = 0, np_theta = 0;
  ntp->add_option("--alpha", np_alpha, "Direction azimuth");
  ntp->add_option("--theta", np_theta, "Direction elevation");
  ntp->add_option("--out", out, "Output path");
  ntp->callback([&] {
    NilProjection pr = fibre_projection_nil(np_alpha, np_theta);
    json j;
    j["is_line"] = pr.is_line;
    if (pr.is_line) {
      j["dir"] = sig12(pr.dir);
    } else {
      j["center"] = json::array({sig12(pr.cx), sig12(pr.cy)});
      j["radius"] = sig12(pr.radius);
    }
    emit_json(out, j);
  });
  auto* ntc = nt->add_subcommand("cross-section",
                                 "Meridian point of the origin sphere");
  double nc_R = 1, nc_theta = 0;
  ntc->add_option("--radius", nc_R, "Sphere radius")
      ->check(CLI::PositiveNumber);
  ntc->add_option("--theta", nc_theta, "Direction elevation");
  ntc->add_option("--out", out, "Output path");
  ntc->callback([&] {
    auto [x, z] = nil_sphere_cross_section(nc_R, nc_theta);
    emit_json(out, json{{"x", sig12(x)}, {"z", sig12(z)}});
  });
  auto* ntx = nt->add_subcommand("convexity",
                                 "Euclidean convexity of the nil ball");
  double nx_R = 1;
  int nx_n = 64;
  ntx->add_option("--radius", nx_R, "Ball radius")->check(CLI::PositiveNumber);
  ntx->add_option("--n", nx_n, "Direction grid resolution")
      ->check(CLI::PositiveNumber);
  ntx->add_option("--out", out, "Output path");
  ntx->callback([&] {
    ConvexityReport r = nil_ball_convexity_check(nx_R, nx_n);
    emit_json(out, json{{"radius", sig12(nx_R)},
                        {"convex", r.convex},
                        {"max_violation", sig12(r.max_violation)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
