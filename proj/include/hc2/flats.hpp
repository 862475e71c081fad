#pragma once

// The two kinds of totally geodesic surfaces.
//
// A complex geodesic is the projectivization of a complex 2-subspace of
// signature -+; it is cut out by a single positive polar vector.  A real
// plane is the projectivization of a totally real 3-subspace: a real span
// on which the form takes only real values.  Membership in a real plane
// cannot be tested against one normal vector; instead we resolve the point
// against an orthonormal real basis and require a common phase.

#include <array>
#include <optional>

#include "hc2/geodesic.hpp"
#include "hc2/hermitian.hpp"
#include "hc2/tangent.hpp"

namespace hc2 {

struct ComplexGeodesic {
  ProjPoint polar;                 // unit positive vector, phase-canonical
  std::array<HVector, 2> basis;    // orthonormal -+ pair spanning polar-perp
};

// Complex geodesic of the complex span of two distinct points.
ComplexGeodesic complex_geodesic_through(const ProjPoint& p,
                                         const ProjPoint& q,
                                         const Tolerance& tol = {});

// The complex span of a geodesic (its "complex" extension).
ComplexGeodesic complex_geodesic_of(const Geodesic& g,
                                    const Tolerance& tol = {});

// Complex geodesic with prescribed polar (positive) vector.
ComplexGeodesic complex_geodesic_with_polar(const ProjPoint& u,
                                            const Tolerance& tol = {});

double complex_geodesic_residual(const ComplexGeodesic& f, const ProjPoint& x);

bool on_complex_geodesic(const ComplexGeodesic& f, const ProjPoint& x,
                         const Tolerance& tol = {});

struct RealPlane {
  // Orthonormal real basis: self-products -1, +1, +1 in this order, all
  // pairwise products real (zero).
  std::array<HVector, 3> basis;
};

// Real plane through three points in general position.  Existence is decided
// by realness of the Hermitian triple product herm(p,q) herm(q,r) herm(r,p);
// when it fails the points lie on no common real plane and the result is
// empty.  When a pairing vanishes the corresponding phase is unconstrained
// and the remaining pairings decide.  Throws CollinearInput when the three
// points lie on one geodesic (the plane would not be unique).
std::optional<RealPlane> real_plane_through(const ProjPoint& p,
                                            const ProjPoint& q,
                                            const ProjPoint& r,
                                            const Tolerance& tol = {});

double real_plane_residual(const RealPlane& f, const ProjPoint& x);

bool on_real_plane(const RealPlane& f, const ProjPoint& x,
                   const Tolerance& tol = {});

// Orthonormal tangent pair of the surface at a point on it.  For a complex
// geodesic the pair is (t, i t) and spans the full complex tangent line; for
// a real plane the pair (t, n) is Hermitian-orthonormal and spans the
// tangent real plane.
std::array<TangentVector, 2> restrict_tangent(const ComplexGeodesic& f,
                                              const ProjPoint& p,
                                              const Tolerance& tol = {});

std::array<TangentVector, 2> restrict_tangent(const RealPlane& f,
                                              const ProjPoint& p,
                                              const Tolerance& tol = {});

}  // namespace hc2
