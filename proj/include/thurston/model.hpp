#pragma once
// Group structure and point translations of the five model spaces.

#include "thurston/geometry.hpp"

namespace thurston {

// Origin of each model: (1,1,0,0) for the two product spaces, whose base
// sheet passes through x = 1; (1,0,0,0) for Nil, Sol and the SL(2,R) cover.
HPoint model_origin(Space s);

// True if the affine point lies in the model's domain (base sheet condition
// for the products, negative quadratic form for the SL(2,R) cover).
bool in_domain(Space s, const HPoint& p);

// --- Nil (Heisenberg) ---
// Product in the order g * h where h acts as the translation.
Vec3 nil_mul(const Vec3& g, const Vec3& h);
Vec3 nil_inverse(const Vec3& g);
ProjMap nil_translation(const Vec3& g);
// Rotation about the z fibre through the origin; nonlinear in z.
Vec3 nil_rotation_apply(const Vec3& p, double omega);
// Shear conjugating the rotation above to the linear (x,y) rotation.
Vec3 nil_shear(const Vec3& p);      // z -> z - xy/2
Vec3 nil_unshear(const Vec3& p);    // z -> z + xy/2

// --- Sol ---
Vec3 sol_mul(const Vec3& g, const Vec3& h);
Vec3 sol_inverse(const Vec3& g);
ProjMap sol_translation(const Vec3& g);
// Generators of the D4 point stabilizer of the origin.
ProjMap sol_stabilizer_flip_y();        // y -> -y
ProjMap sol_stabilizer_swap_xy();       // x <-> y, z -> -z
std::array<ProjMap, 8> sol_stabilizer_elements();

// --- SL(2,R) universal cover ---
// One-parameter fibre translation subgroup.
ProjMap sl2r_fibre_translation(double phi);
// Right translation carrying the origin to g; general point translation.
ProjMap sl2r_translation(const HPoint& g);
// Projection of a point to its fibre's base foot point.
HPoint sl2r_foot_point(const HPoint& p);
// Rotation about the origin fibre (linear in x2,x3).
ProjMap sl2r_base_rotation(double lambda);

// --- product spaces ---
// Fibre coordinate t and unit base point of a product-space point.
double product_fibre_coord(Space s, const HPoint& p);
Vec3 product_base_unit(Space s, const HPoint& p);
// Isometry built from a base rotation/boost carrying the base part of g to
// the base origin combined with the fibre shift e^{-t}.
ProjMap product_translation(Space s, const HPoint& g);

// Isometry carrying p to the model origin, any space.
ProjMap translate_to_origin(Space s, const HPoint& p);
// Isometry carrying the origin to p.
ProjMap translate_from_origin(Space s, const HPoint& p);

}  // namespace thurston
