#pragma once

// Bisectors: the hypersurfaces spanned by a real geodesic (the spine) and
// the complex line normal to its complex span.  With spine vertices v1, v2
// normalized to herm(v1, v2) = 1/2 and polar u, the bisector is cut out of
// the ball by
//
//   Im( herm(x, v1) * herm(v2, x) / herm(v1, v2) ) = 0,
//
// and the sign of that expression tells the two sides apart.  A bisector
// fibers in two ways: into complex-geodesic slices over the spine, and into
// real-plane meridians indexed by a unit phase z (z and -z give the same
// meridian).  Bisectors are the largest objects this kernel touches that
// are NOT totally geodesic; non_tg_witness produces the explicit two-point
// certificate.

#include "hc2/flats.hpp"
#include "hc2/geodesic.hpp"
#include "hc2/hermitian.hpp"

namespace hc2 {

struct Bisector {
  Geodesic spine;
  ProjPoint polar_u;  // unit positive vector orthogonal to the complex spine
};

Bisector bisector_from_spine(const Geodesic& g, const Tolerance& tol = {});

// Membership/side function evaluated at a raw representative.  The value
// scales quadratically with the representative, so only its sign and zero
// set are projective; the ProjPoint overload pins the canonical
// representative and is the deterministic quantity reported everywhere.
double bisector_residual(const Bisector& b, const HVector& rep);
double bisector_residual(const Bisector& b, const ProjPoint& x);

bool on_bisector(const Bisector& b, const ProjPoint& x,
                 const Tolerance& tol = {});

// The complex geodesic fiber over a spine point.
ComplexGeodesic slice_at(const Bisector& b, const ProjPoint& x,
                         const Tolerance& tol = {});

// The real plane spanned by the spine and the direction z*u, |z| = 1; the
// phase is sign-normalized (nonnegative imaginary part, then nonnegative
// real part), so meridian_at(z) and meridian_at(-z) coincide.
RealPlane meridian_at(const Bisector& b, Complex z, const Tolerance& tol = {});

// The normalized phase of the meridian through a bisector point off the
// spine.
Complex meridian_of_point(const Bisector& b, const ProjPoint& x,
                          const Tolerance& tol = {});

// Explicit certificate that a bisector is not totally geodesic: for the
// standard spine (vertices (1,1,0), (1,-1,0), polar (0,0,1)) take
//   x = v1 - v2 + r u   and   y = alpha v1 - (1/alpha) v2 + i s u,
// both on the bisector, and form q = x - (herm(x,y)/|herm(x,y)|) y, a
// representative of a point on the geodesic through x and y.  Closed forms:
//   herm(q, q) = -2 + r^2 + s^2 - sqrt((a^2+1)^2 + 4 a^2 r^2 s^2) / a,
//   residual   = r s (a^2 - 1) / sqrt((a^2+1)^2 + 4 a^2 r^2 s^2),
// (a = alpha; residual at the representative q as written).  The point is
// inside the ball with nonzero residual for every valid parameter choice.
struct WitnessRecord {
  ProjPoint q;
  double q_norm;
  double residual;
};
WitnessRecord non_tg_witness(double alpha, double r, double s);

// Point of the geodesic from p toward q_end (a Negative point or an
// isotropic endpoint) where the residual changes sign, found by bisection
// on the log of the vertex parameter; requires opposite sides.
ProjPoint bisector_crossing(const Bisector& b, const ProjPoint& p,
                            const ProjPoint& q_end,
                            const Tolerance& tol = {});

}  // namespace hc2
