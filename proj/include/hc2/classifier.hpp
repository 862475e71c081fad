#pragma once

// Classification machinery on two levels.
//
// Infinitesimal: a real subspace of a tangent space exponentiates to a
// complete totally geodesic submanifold exactly when the curvature tensor
// maps it into itself.  classify_tangent_subspace decides this by dimension
// and, for planes, by the (a, b) shape of the second basis vector against
// the first: t2 = i a t1 + b n forces a = 0 (real plane type) or b = 0
// (complex line type); three-dimensional subspaces are never closed.
//
// Global: hull_classify finds the smallest complete totally geodesic subset
// containing finitely many points by walking the containment chain point ->
// geodesic -> complex geodesic / real plane -> whole space, and
// whole_space_construction certifies the last step constructively: it
// produces a bisector, a crossing point and a meridian that together
// witness that no proper flat contains the data.

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "hc2/bisector.hpp"
#include "hc2/flats.hpp"
#include "hc2/geodesic.hpp"
#include "hc2/hermitian.hpp"
#include "hc2/tangent.hpp"

namespace hc2 {

enum class TangentClass {
  line,
  complex_geodesic_plane,
  real_plane_plane,
  not_closed,
  whole,
};

const char* tangent_class_name(TangentClass t);

struct TangentClassification {
  TangentClass tag = TangentClass::not_closed;
  int dimension = 0;
  // Plane decomposition t2 = i a t1 + b n (only when dimension == 2).
  double a = 0.0;
  double b_abs = 0.0;
  // Set when the smaller of |a|, |b| sits within a factor 10 of eps_alg but
  // not below it: the verdict stays not_closed, no snapping to a flat type.
  bool near_degenerate = false;
  // Largest out-of-span component of R(x, y) z over ordered basis triples;
  // the independent check the decomposition verdict is validated against.
  double closure_residual = 0.0;
};

TangentClassification classify_tangent_detail(
    const ProjPoint& p, std::span<const TangentVector> span,
    const Tolerance& tol = {});

TangentClass classify_tangent_subspace(const ProjPoint& p,
                                       std::span<const TangentVector> span,
                                       const Tolerance& tol = {});

enum class HullTag {
  empty,
  point,
  geodesic,
  complex_geodesic,
  real_plane,
  whole,
};

const char* hull_tag_name(HullTag t);

struct HullClass {
  HullTag tag = HullTag::empty;
  std::variant<std::monostate, ProjPoint, Geodesic, ComplexGeodesic, RealPlane>
      witness;
};

// hull_classify plus the intermediates the caller needs to continue with
// whole_space_construction when the answer is the whole space.
struct HullDetail {
  HullClass hull;
  std::optional<Geodesic> base;       // geodesic of the first two distinct
  std::optional<ProjPoint> off_point; // first input point off that geodesic
};

HullDetail hull_classify_detailed(std::span<const ProjPoint> points,
                                  const Tolerance& tol = {});

HullClass hull_classify(std::span<const ProjPoint> points,
                        const Tolerance& tol = {});

// Representation of an isotropic class v3 against a geodesic's frame:
// adjusted representatives with v3 = eps v1 - conj(eps) v2 + r u, r >= 0.
// Isotropy forces Re(eps^2) = r^2.  r > 0 says v3 is off the complex span
// of the geodesic; eps non-real says no real plane contains both.
struct SpineDecomposition {
  Complex epsilon;
  double r = 0.0;
  HVector v1, v2, u, v3;
  bool off_complex_spine = false;
  bool epsilon_non_real = false;
};

SpineDecomposition spine_decomposition(const Geodesic& g, const ProjPoint& v3,
                                       const Tolerance& tol = {});

// Certificate that the hull of a geodesic g and a point p sharing no flat
// is everything.  The chain: v3 = far vertex of the geodesic from g's
// second vertex through p; the spine decomposition of v3; the isotropic
// direction v4 = 2 Re(eps) (v1 - v2) - v3; the bisector over g separates p
// from v4 (the two spine products below have opposite signs), so the
// geodesic from p to v4 crosses it at a point x off the spine; the meridian
// through x then fails to contain p.
struct ConstructionTrace {
  ProjPoint foot;          // orthogonal projection of p on g
  SpineDecomposition dec;
  double alpha = 0.0;      // p = alpha v3 - (1/alpha) eps v2 (adjusted reps)
  HVector p_rep;           // that representative of p
  HVector v4_rep;
  // Im herm(v1, x) herm(x, v2) at the two representatives above; closed
  // forms -(1/4) alpha^2 Im(eps^2) and +(1/4) Im(eps^2).
  double spine_product_im_p = 0.0;
  double spine_product_im_v4 = 0.0;
  Complex pairing_p_v4;    // herm(p_rep, v4_rep); never real here
  ProjPoint crossing;
  bool crossing_on_spine = false;  // must come out false
  Complex meridian_phase;
  RealPlane meridian;
  bool p_on_meridian = false;      // must come out false
};

ConstructionTrace whole_space_construction(const Geodesic& g,
                                           const ProjPoint& p,
                                           const Tolerance& tol = {});

// Randomized audit of a claimed hull: repeatedly draws a geodesic through
// two accepted members and samples it, checking membership in the claimed
// witness.  Any residual above eps_mem refutes the claim.
struct OracleReport {
  HullTag tag = HullTag::empty;
  std::size_t samples_run = 0;
  double max_residual = 0.0;
  bool refuted = false;
  std::optional<ProjPoint> refuting_point;
};

OracleReport closure_oracle(std::span<const ProjPoint> points,
                            const HullClass& claimed, std::size_t samples,
                            std::uint64_t seed, const Tolerance& tol = {});

}  // namespace hc2
