#pragma once

#include <cstdint>
#include <vector>

#include "ksph/killing.hpp"

namespace ksph {

// Killing spinor geometry on the unit sphere S^n in R^{n+1}, all in exact
// rational arithmetic. Killing spinor fields are constant spinors psi in
// the trivialization; the connection is D_X = d_X + (1/2) mu(X, x) and the
// Clifford action of a tangent vector X at x is c_x(X) = mu(X, x).

struct SpherePoint {
  Vec<Rational> x;  // |x|^2 = 1 exactly

  explicit SpherePoint(Vec<Rational> v);
};

// Inverse stereographic projection x = (2a, 1-|a|^2)/(1+|a|^2).
SpherePoint stereographic(const Vec<Rational>& a);

// Deterministic rational points (bounded numerators), seeded.
std::vector<SpherePoint> sample_sphere_points(int n, int count, std::uint64_t seed);

bool is_tangent(const SpherePoint& x, const Vec<Rational>& v);

// mu(v, w) = sum_{i,j<=n} v_i w_j g_i g_j
//          + sum_{i<=n} (v_i w_{n+1} - v_{n+1} w_i) g_i - v_{n+1} w_{n+1} I.
// Satisfies mu(v,w) + mu(w,v) = -2 <v,w> I.
SparseMatrix<Rational> mu(const CliffordAlgebra& ca, const Vec<Rational>& v,
                          const Vec<Rational>& w);

// c_x(X) s for tangent X at x.
Vec<Rational> clifford_action_at(const CliffordAlgebra& ca, const SpherePoint& x,
                                 const Vec<Rational>& X, const Vec<Rational>& s);

// Spinor field polynomial in the ambient coordinates: constant + linear.
struct PolySpinorField {
  Vec<Rational> constant;                // module_dim
  std::vector<Vec<Rational>> linear;     // n+1 spinors, may be empty

  Vec<Rational> value(const Vec<Rational>& x) const;
  Vec<Rational> directional(const Vec<Rational>& X) const;  // exact d_X
};

PolySpinorField constant_field(const Vec<Rational>& psi, int ambient_dim);

Vec<Rational> covariant_derivative(const CliffordAlgebra& ca, const PolySpinorField& f,
                                   const SpherePoint& x, const Vec<Rational>& X);

// The vector field V with <V(x), Y> = (psi1, c_x(P_x Y) psi2) is linear,
// V(x) = a x for an antisymmetric a; solves for a exactly and certifies it
// at extra points. Throws on a failed certificate.
SoElement spinor_squaring_field(const KillingAlgebra& ka, const Vec<Rational>& psi1,
                                const Vec<Rational>& psi2);

// rho of an ambient 2-form at x, realized frame-independently as
// (1/4) sum_{k,l} <B P_x u_k, P_x u_l> c_x(P_x u_k) c_x(P_x u_l)
// over the ambient standard basis u. Applied to a spinor.
Vec<Rational> rho_at(const CliffordAlgebra& ca, const SpherePoint& x,
                     const Mat<Rational>& b, const Vec<Rational>& s);

// Spinorial Lie derivative along the Killing field X = a x of the constant
// field psi, evaluated at x: (L_X eps)(x) = D_{X(x)} eps + rho_x(A_X) psi
// with A_X = -grad X realized by the 2-form -a.
Vec<Rational> lie_derivative_at(const KillingAlgebra& ka, const SoElement& a,
                                const Vec<Rational>& psi, const SpherePoint& x);

// Certifies (L_X eps) is the constant field of some psi' at the given
// points and returns psi'. Throws on a failed certificate.
Vec<Rational> lie_derivative(const KillingAlgebra& ka, const SoElement& a,
                             const Vec<Rational>& psi,
                             const std::vector<SpherePoint>& points);

struct GeometryReport {
  int sphere = 0;
  int points_checked = 0;
  long long ks_checks = 0;      // (point, frame vector, basis spinor) triples
  long long ks_failures = 0;
  bool mu_antisymmetry = false;
  bool squaring_matches = false;       // a = s * spinor_square, one global s
  bool squaring_killing_eq = false;    // <D_Y V, Z> + <D_Z V, Y> = 0
  bool lie_derivative_matches = false; // psi' = sign * rho(a) psi, one global sign
  bool leibniz = false;
  bool morphism = false;   // [L_X, L_Y] = L_{[X,Y]}
  bool clifford_compat = false;
  bool affine = false;     // [L_X, D_Y] = D_{[X,Y]}
  Rational squaring_scale;  // s
  int lie_sign = 0;         // sign
  bool passed() const;
};

GeometryReport geometry_check(const KillingAlgebra& ka, int points, std::uint64_t seed);

}  // namespace ksph
