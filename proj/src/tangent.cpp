#include "hc2/tangent.hpp"

#include <cmath>

namespace hc2 {

namespace {

void check_base(const ProjPoint& base) {
  if (base.kind != PointKind::negative)
    fail(Errc::parameter_out_of_range, "tangent base must be a Negative point");
}

void check_same_base(const TangentVector& a, const TangentVector& b,
                     const Tolerance& tol) {
  if (!proj_equal(a.base, b.base, tol))
    fail(Errc::base_mismatch, "tangent vectors live at different base points");
}

}  // namespace

TangentVector make_tangent(const ProjPoint& base, const HVector& img,
                           const Tolerance& tol) {
  check_base(base);
  double scale = std::max(1.0, eucl_norm(img)) * eucl_norm(base.rep);
  if (std::abs(herm(img, base.rep)) > tol.eps_alg * scale)
    fail(Errc::parameter_out_of_range,
         "tangent image is not herm-orthogonal to the base point");
  return {base, img};
}

TangentVector project_tangent(const ProjPoint& base, const HVector& raw,
                              const Tolerance& tol) {
  check_base(base);
  (void)tol;
  // herm(base.rep, base.rep) = -1 for canonical negative points.
  HVector img = raw + herm(raw, base.rep) * base.rep;
  return {base, img};
}

TangentVector tangent_add(const TangentVector& a, const TangentVector& b,
                          const Tolerance& tol) {
  check_same_base(a, b, tol);
  return {a.base, a.img + b.img};
}

TangentVector tangent_scale(Complex s, const TangentVector& t) {
  return {t.base, s * t.img};
}

Complex tangent_herm(const TangentVector& a, const TangentVector& b,
                     const Tolerance& tol) {
  check_same_base(a, b, tol);
  // -herm(img_a, img_b) / herm(p, p) with herm(p, p) = -1.
  return herm(a.img, b.img);
}

double riemannian_g(const TangentVector& a, const TangentVector& b,
                    const Tolerance& tol) {
  return tangent_herm(a, b, tol).real();
}

double symplectic_w(const TangentVector& a, const TangentVector& b,
                 const Tolerance& tol) {
  return tangent_herm(a, b, tol).imag();
}

double tangent_norm(const TangentVector& t) {
  return std::sqrt(std::max(0.0, herm_self(t.img)));
}

TangentVector hermitian_normal(const TangentVector& t, const Tolerance& tol) {
  HVector n = form_cross(t.base.rep, t.img);
  double s = herm_self(n);
  if (s <= tol.eps_alg * eucl_norm_sq(n))
    fail(Errc::zero_vector, "tangent vector is too small to complement");
  return {t.base, (1.0 / std::sqrt(s)) * n};
}

TangentVector curvature(const TangentVector& a, const TangentVector& b,
                        const TangentVector& s, const Tolerance& tol) {
  check_same_base(a, b, tol);
  check_same_base(a, s, tol);
  Complex ba = herm(b.img, a.img);
  Complex sa = herm(s.img, a.img);
  Complex ab = herm(a.img, b.img);
  Complex sb = herm(s.img, b.img);
  HVector img = ba * s.img + sa * b.img - ab * s.img - sb * a.img;
  return {a.base, img};
}

double sectional_curvature(const TangentVector& a, const TangentVector& b,
                           const Tolerance& tol) {
  check_same_base(a, b, tol);
  double gaa = herm_self(a.img);
  double gbb = herm_self(b.img);
  double gab = herm(a.img, b.img).real();
  double denom = gaa * gbb - gab * gab;
  if (denom < tol.eps_alg * std::max(1.0, gaa * gbb))
    fail(Errc::degenerate_plane,
         "tangent vectors do not span a real 2-plane");
  TangentVector r = curvature(a, b, b, tol);
  return herm(r.img, a.img).real() / denom;
}

std::pair<HVector, HVector> tangent_frame(const ProjPoint& p,
                                          const Tolerance& tol) {
  check_base(p);
  // Project the best-conditioned standard basis vector, then complete with
  // the form cross product.
  HVector best{};
  double best_n = -1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    HVector e{};
    e[i] = 1.0;
    HVector r = e + herm(e, p.rep) * p.rep;
    double n = herm_self(r);  // positive on p-perp
    if (n > best_n) {
      best_n = n;
      best = r;
    }
  }
  if (best_n <= tol.eps_alg)
    fail(Errc::internal_check, "failed to build a tangent frame");
  HVector b1 = (1.0 / std::sqrt(best_n)) * best;
  HVector b2 = form_cross(p.rep, b1);
  b2 = (1.0 / std::sqrt(herm_self(b2))) * b2;
  return {b1, b2};
}

}  // namespace hc2
