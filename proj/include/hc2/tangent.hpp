#pragma once

// Tangent vectors at points of the ball, the Hermitian metric they inherit,
// and the curvature tensor.  A tangent vector at p is a linear map from the
// line of p into its herm-orthogonal complement; we store its value at the
// canonical representative of p.  With herm(p,p) = -1 the induced Hermitian
// product of two tangent vectors is just herm of the stored images, the
// Riemannian metric is its real part and the Kaehler form its imaginary
// part.

#include <utility>

#include "hc2/hermitian.hpp"

namespace hc2 {

struct TangentVector {
  ProjPoint base;  // Negative, canonical representative
  HVector img;     // value at base.rep, herm(img, base.rep) = 0
};

// Validates the orthogonality invariant and that base is Negative.
TangentVector make_tangent(const ProjPoint& base, const HVector& img,
                           const Tolerance& tol = {});

// Projects an arbitrary vector into base-perp and wraps it; convenience for
// building tangents from raw directions.
TangentVector project_tangent(const ProjPoint& base, const HVector& raw,
                              const Tolerance& tol = {});

TangentVector tangent_add(const TangentVector& a, const TangentVector& b,
                          const Tolerance& tol = {});
TangentVector tangent_scale(Complex s, const TangentVector& t);

Complex tangent_herm(const TangentVector& a, const TangentVector& b,
                     const Tolerance& tol = {});

double riemannian_g(const TangentVector& a, const TangentVector& b,
                    const Tolerance& tol = {});

double symplectic_w(const TangentVector& a, const TangentVector& b,
                    const Tolerance& tol = {});

double tangent_norm(const TangentVector& t);

// Unit tangent herm-orthogonal to t at the same base; the pair (t, normal)
// spans the tangent space over C when t is nonzero.
TangentVector hermitian_normal(const TangentVector& t,
                               const Tolerance& tol = {});

// Curvature tensor of the metric of constant holomorphic curvature -4:
//   R(a,b)s = <b,a>s + <s,a>b - <a,b>s - <s,b>a
// with <.,.> = tangent_herm.
TangentVector curvature(const TangentVector& a, const TangentVector& b,
                        const TangentVector& s, const Tolerance& tol = {});

// Sectional curvature of the real plane spanned by (a, b); lands in [-4, -1].
// Throws degenerate_plane when a and b are really dependent.
double sectional_curvature(const TangentVector& a, const TangentVector& b,
                           const Tolerance& tol = {});

// Hermitian-orthonormal complex frame (b1, b2) of the orthogonal complement
// of p; the real tangent space at p is spanned by b1, i*b1, b2, i*b2.
std::pair<HVector, HVector> tangent_frame(const ProjPoint& p,
                                          const Tolerance& tol = {});

}  // namespace hc2
