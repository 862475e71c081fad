#pragma once

// Core linear algebra for the projective model of the complex hyperbolic
// plane.  Everything lives in C^3 equipped with the signature -++ Hermitian
// form
//
//   herm(x, y) = -x0*conj(y0) + x1*conj(y1) + x2*conj(y2),
//
// linear in the first argument and conjugate-linear in the second.  Points of
// the space are projective classes of negative vectors (herm(x,x) < 0), the
// boundary consists of isotropic classes, and polar vectors of totally
// geodesic objects are positive classes.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "hc2/errors.hpp"

namespace hc2 {

using Complex = std::complex<double>;

struct HVector {
  std::array<Complex, 3> c{};

  Complex& operator[](std::size_t i) { return c[i]; }
  const Complex& operator[](std::size_t i) const { return c[i]; }
};

HVector operator+(const HVector& a, const HVector& b);
HVector operator-(const HVector& a, const HVector& b);
HVector operator-(const HVector& a);
HVector operator*(Complex s, const HVector& a);
HVector operator*(double s, const HVector& a);

Complex herm(const HVector& x, const HVector& y);

// Real part of herm(x, x); the imaginary part vanishes identically.
double herm_self(const HVector& x);

double eucl_norm(const HVector& x);
double eucl_norm_sq(const HVector& x);

// A vector herm-orthogonal to both arguments (unnormalized).  Vanishes
// exactly when a and b are complex-proportional.
HVector form_cross(const HVector& a, const HVector& b);

// Coordinate-wise lexicographic order on (Re, Im) pairs, with differences
// below 1e-9 treated as ties; used to fix the ordering of computed vertex
// pairs independently of rounding in the path that produced them.
bool lex_less(const HVector& a, const HVector& b);

// Multiplies by -1 when the dominant coordinate points into the negative
// real (or negative imaginary) half.  A deterministic sign choice that,
// unlike a full phase fix, keeps real vectors real.
HVector sign_fix(const HVector& v);

enum class PointKind { negative, isotropic, positive };

const char* point_kind_name(PointKind k);

// Numerical thresholds used throughout the kernel.  eps_iso classifies the
// sign of herm(x,x), eps_mem accepts membership in flats and bisectors,
// eps_alg accepts algebraic identities.  The constructor enforces
// 0 < eps_alg <= eps_mem <= eps_iso.
struct Tolerance {
  double eps_iso;
  double eps_mem;
  double eps_alg;

  Tolerance(double iso = 1e-8, double mem = 1e-9, double alg = 1e-11);
};

// Projective point with a canonical representative:
//   negative  -> herm(rep, rep) = -1
//   positive  -> herm(rep, rep) = +1
//   isotropic -> Euclidean unit norm
// and in all cases the first coordinate of significant modulus is real
// positive.  Canonical representatives make projective comparisons and
// serialized output deterministic.
struct ProjPoint {
  HVector rep;
  PointKind kind = PointKind::negative;
};

PointKind point_kind(const HVector& x, const Tolerance& tol = {});

ProjPoint canonicalize(const HVector& x, const Tolerance& tol = {});

// Scale-normalized distance between the projective classes; zero for equal
// classes regardless of representative.
double proj_residual(const ProjPoint& a, const ProjPoint& b);

bool proj_equal(const ProjPoint& a, const ProjPoint& b,
                const Tolerance& tol = {});

// Indefinite Gram-Schmidt.  Returns vectors spanning the same subspace with
// herm(u_i, u_j) = ±delta_ij.  The leading input is kept as the first output
// direction whenever it is well conditioned, so orthonormalizing an already
// orthonormal family is the identity.  Isotropic leading vectors are handled
// by recombining inputs; real-linear combinations are preferred so real
// spans stay real.  Throws degenerate_subspace when the form degenerates on
// the span (or the inputs are dependent) and signature_violation when more
// than one negative direction shows up.
std::vector<HVector> orthonormalize(std::span<const HVector> vectors,
                                    const Tolerance& tol = {});

}  // namespace hc2
