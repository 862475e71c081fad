#pragma once

// Real geodesics of the ball.  A geodesic is the projectivization of a real
// 2-subspace W on which the form is real valued with signature -+.  We store
// the two isotropic vertices with representatives scaled so that
// herm(v1, v2) = 1/2 (not the canonical unit-norm scaling); the interior
// points are then exactly
//
//   alpha * v1 - (1/alpha) * v2,   alpha in (0, inf),
//
// each with self-product -1, and |log| of the parameter measures arclength:
// points at parameters alpha, beta are at distance |log(alpha/beta)|.

#include <array>

#include "hc2/hermitian.hpp"
#include "hc2/tangent.hpp"

namespace hc2 {

struct Geodesic {
  ProjPoint v1, v2;  // isotropic vertices, reps scaled to herm(v1,v2) = 1/2
  std::array<HVector, 2> w_basis;  // orthonormal basis of W: v1-v2, v1+v2
  HVector polar;  // unit positive vector orthogonal to the complex span
};

// Builds a geodesic from its two boundary classes, keeping the given order.
Geodesic geodesic_from_vertices(const ProjPoint& a, const ProjPoint& b,
                                const Tolerance& tol = {});

// Geodesic through two Negative points; the vertex pair is ordered
// lexicographically so equal point sets give identical objects.
Geodesic geodesic_through(const ProjPoint& p, const ProjPoint& q,
                          const Tolerance& tol = {});

// Geodesic through a Negative point and an Isotropic endpoint.
Geodesic geodesic_to_boundary(const ProjPoint& p, const ProjPoint& v,
                              const Tolerance& tol = {});

// Geodesic through p with unit tangent t at p.
Geodesic geodesic_from_tangent(const ProjPoint& p, const TangentVector& t,
                               const Tolerance& tol = {});

// Coordinates of x in the basis (v1, v2, polar); exact resolution of the
// representative, used by membership tests and parameter recovery.
struct GeodesicCoords {
  Complex c1, c2, cu;
};
GeodesicCoords geodesic_coords(const Geodesic& g, const HVector& x);

// Scale-free membership residual: out-of-line component, failure of
// c1*conj(c2) to be real, and a unit penalty when its real part is not
// negative (which would place the class outside the ball's sheet of W).
double geodesic_residual(const Geodesic& g, const ProjPoint& x);

bool on_geodesic(const Geodesic& g, const ProjPoint& x,
                 const Tolerance& tol = {});

ProjPoint point_at_vertex_param(const Geodesic& g, double alpha);

// Recovers alpha with point_at_vertex_param(g, alpha) = x.
double vertex_param_of(const Geodesic& g, const ProjPoint& x,
                       const Tolerance& tol = {});

// Unit tangent at p0 pointing toward growing alpha.
TangentVector geodesic_tangent(const Geodesic& g, const ProjPoint& p0,
                               const Tolerance& tol = {});

// cosh(theta) * p0 + sinh(theta) * t; requires p0 on g and t a unit tangent
// of g at p0.
ProjPoint point_at_arclength(const Geodesic& g, const ProjPoint& p0,
                             const TangentVector& t, double theta,
                             const Tolerance& tol = {});

// arccosh sqrt( herm(p,q) herm(q,p) / (herm(p,p) herm(q,q)) ), calibrated so
// point_at_arclength moves with unit speed.
double distance(const ProjPoint& p, const ProjPoint& q);

// Parameter of the point of g closest to p, minimizing the pairing
// |alpha * herm(v1,p) - (1/alpha) * herm(v2,p)| in closed form:
// alpha* = sqrt(|herm(p,v2)| / |herm(p,v1)|).
double project_param(const Geodesic& g, const ProjPoint& p,
                     const Tolerance& tol = {});

ProjPoint project_to_geodesic(const Geodesic& g, const ProjPoint& p,
                              const Tolerance& tol = {});

}  // namespace hc2
