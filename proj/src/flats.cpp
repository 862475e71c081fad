#include "hc2/flats.hpp"

#include <algorithm>
#include <cmath>

#include "hc2/errors.hpp"

namespace hc2 {

namespace {

// Orders an orthonormal pair negative-first.
std::array<HVector, 2> neg_first_pair(std::vector<HVector> onb) {
  if (onb.size() != 2)
    fail(Errc::internal_check, "expected a plane basis");
  if (herm_self(onb[0]) > 0.0) std::swap(onb[0], onb[1]);
  if (!(herm_self(onb[0]) < 0.0) || !(herm_self(onb[1]) > 0.0))
    fail(Errc::signature_violation, "span misses the ball");
  return {onb[0], onb[1]};
}

// Unit phase lambda making herm(anchor, lambda * x) real positive, or 1
// when the pairing vanishes and the phase is unconstrained.
Complex phase_against(const HVector& anchor, const HVector& x,
                      double floor_abs) {
  Complex h = herm(anchor, x);
  if (std::abs(h) < floor_abs) return 1.0;
  return h / std::abs(h);
}

bool pair_is_real(const HVector& x, const HVector& y, const Tolerance& tol) {
  Complex h = herm(x, y);
  double scale = std::max({1.0, std::abs(h), eucl_norm(x) * eucl_norm(y)});
  return std::abs(h.imag()) <= tol.eps_alg * scale;
}

// Orthonormalizes three re-phased representatives with pairwise real
// products and orders the result negative-first.
RealPlane assemble_plane(const HVector& x0, const HVector& x1,
                         const HVector& x2, const Tolerance& tol) {
  if (!pair_is_real(x0, x1, tol) || !pair_is_real(x0, x2, tol) ||
      !pair_is_real(x1, x2, tol))
    fail(Errc::internal_check, "phase adjustment left a non-real pairing");
  std::vector<HVector> span = {x0, x1, x2};
  std::vector<HVector> onb = orthonormalize(span, tol);
  auto neg = std::find_if(onb.begin(), onb.end(),
                          [](const HVector& u) { return herm_self(u) < 0; });
  if (neg == onb.end())
    fail(Errc::signature_violation, "real span misses the ball");
  std::iter_swap(onb.begin(), neg);
  return RealPlane{{onb[0], onb[1], onb[2]}};
}

}  // namespace

ComplexGeodesic complex_geodesic_through(const ProjPoint& p,
                                         const ProjPoint& q,
                                         const Tolerance& tol) {
  HVector u = form_cross(p.rep, q.rep);
  if (eucl_norm(u) < tol.eps_iso * eucl_norm(p.rep) * eucl_norm(q.rep))
    fail(Errc::coincident_points, "need two distinct points");
  ProjPoint pu = canonicalize(u, tol);
  if (pu.kind != PointKind::positive)
    fail(Errc::signature_violation, "span misses the ball");
  std::vector<HVector> span = {p.rep, q.rep};
  return ComplexGeodesic{pu, neg_first_pair(orthonormalize(span, tol))};
}

ComplexGeodesic complex_geodesic_of(const Geodesic& g, const Tolerance& tol) {
  return ComplexGeodesic{canonicalize(g.polar, tol), g.w_basis};
}

ComplexGeodesic complex_geodesic_with_polar(const ProjPoint& u,
                                            const Tolerance& tol) {
  if (u.kind != PointKind::positive)
    fail(Errc::parameter_out_of_range, "polar vector must be positive");
  // Cross the polar with the two best-conditioned coordinate directions to
  // span its orthogonal complement.
  std::array<HVector, 3> cand;
  for (std::size_t j = 0; j < 3; ++j) {
    HVector e{};
    e[j] = 1.0;
    cand[j] = form_cross(u.rep, e);
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const HVector& a, const HVector& b) {
                     return eucl_norm_sq(a) > eucl_norm_sq(b);
                   });
  std::vector<HVector> span = {cand[0], cand[1]};
  return ComplexGeodesic{u, neg_first_pair(orthonormalize(span, tol))};
}

double complex_geodesic_residual(const ComplexGeodesic& f,
                                 const ProjPoint& x) {
  return std::abs(herm(x.rep, f.polar.rep)) / eucl_norm(x.rep);
}

bool on_complex_geodesic(const ComplexGeodesic& f, const ProjPoint& x,
                         const Tolerance& tol) {
  return complex_geodesic_residual(f, x) < tol.eps_mem;
}

std::optional<RealPlane> real_plane_through(const ProjPoint& p,
                                            const ProjPoint& q,
                                            const ProjPoint& r,
                                            const Tolerance& tol) {
  if (p.kind != PointKind::negative)
    fail(Errc::parameter_out_of_range, "first point must be negative");
  if (q.kind == PointKind::negative && r.kind == PointKind::negative) {
    Geodesic g = geodesic_through(p, q, tol);  // rejects p == q
    if (on_geodesic(g, r, tol))
      fail(Errc::collinear_input, "points lie on one geodesic");
  }
  // Existence: the product of the three pairings around the triangle is
  // phase-invariant, and a common real plane forces it to be real.
  Complex triple = herm(p.rep, q.rep) * herm(q.rep, r.rep) * herm(r.rep, p.rep);
  if (std::abs(triple.imag()) > tol.eps_alg * std::max(1.0, std::abs(triple)))
    return std::nullopt;
  // Construction: re-phase q and r against p (falling back to the q-r
  // pairing when one of them is orthogonal to p) so every pairing is real.
  double floor_q = 1e-12 * eucl_norm(p.rep) * eucl_norm(q.rep);
  double floor_r = 1e-12 * eucl_norm(p.rep) * eucl_norm(r.rep);
  HVector x1 = phase_against(p.rep, q.rep, floor_q) * q.rep;
  HVector x2 = phase_against(p.rep, r.rep, floor_r) * r.rep;
  if (std::abs(herm(p.rep, r.rep)) < floor_r)
    x2 = phase_against(x1, x2, floor_r) * x2;
  if (std::abs(herm(p.rep, q.rep)) < floor_q)
    x1 = phase_against(x2, x1, floor_q) * x1;
  return assemble_plane(p.rep, x1, x2, tol);
}

double real_plane_residual(const RealPlane& f, const ProjPoint& x) {
  std::array<Complex, 3> d;
  HVector rem = x.rep;
  for (int i = 0; i < 3; ++i) {
    d[i] = herm(x.rep, f.basis[i]);
    double sign = (i == 0) ? -1.0 : 1.0;
    rem = rem - (sign * d[i]) * f.basis[i];
  }
  double nx = eucl_norm(x.rep);
  double out = eucl_norm(rem) / nx;
  // In-span membership additionally needs one common phase across the real
  // coordinates: all products d_i * conj(d_j) real.
  double twist = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      twist = std::max(twist, std::abs((d[i] * std::conj(d[j])).imag()));
  return std::max(out, twist / (nx * nx));
}

bool on_real_plane(const RealPlane& f, const ProjPoint& x,
                   const Tolerance& tol) {
  return real_plane_residual(f, x) < tol.eps_mem;
}

std::array<TangentVector, 2> restrict_tangent(const ComplexGeodesic& f,
                                              const ProjPoint& p,
                                              const Tolerance& tol) {
  if (!on_complex_geodesic(f, p, tol))
    fail(Errc::not_on_flat, "point is not on the complex geodesic");
  HVector u = form_cross(p.rep, f.polar.rep);
  double n2 = herm_self(u);
  if (n2 <= 0.0)
    fail(Errc::internal_check, "tangent direction lost positivity");
  HVector t = sign_fix((1.0 / std::sqrt(n2)) * u);
  return {make_tangent(p, t, tol),
          make_tangent(p, Complex(0, 1) * t, tol)};
}

std::array<TangentVector, 2> restrict_tangent(const RealPlane& f,
                                              const ProjPoint& p,
                                              const Tolerance& tol) {
  if (!on_real_plane(f, p, tol))
    fail(Errc::not_on_flat, "point is not on the real plane");
  // Undo the representative's phase so the plane's basis directions become
  // tangent candidates with real mutual products.
  std::array<Complex, 3> d;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    d[i] = herm(p.rep, f.basis[i]);
    if (std::abs(d[i]) > std::abs(d[k])) k = i;
  }
  Complex phase = d[k] / std::abs(d[k]);
  std::array<HVector, 3> cand;
  for (std::size_t i = 0; i < 3; ++i)
    cand[i] = project_tangent(p, phase * f.basis[i], tol).img;
  std::stable_sort(cand.begin(), cand.end(),
                   [](const HVector& a, const HVector& b) {
                     return herm_self(a) > herm_self(b);
                   });
  // Riemannian Gram-Schmidt on the candidates; products are real, so the
  // resulting pair is Hermitian-orthonormal as well.
  HVector t1 = sign_fix((1.0 / std::sqrt(herm_self(cand[0]))) * cand[0]);
  HVector best{};
  double best_n2 = -1.0;
  for (std::size_t i = 1; i < 3; ++i) {
    HVector w = cand[i] - herm(cand[i], t1) * t1;
    double n2 = herm_self(w);
    if (n2 > best_n2) {
      best_n2 = n2;
      best = w;
    }
  }
  if (best_n2 < tol.eps_iso)
    fail(Errc::internal_check, "plane tangents collapsed");
  HVector t2 = sign_fix((1.0 / std::sqrt(best_n2)) * best);
  return {make_tangent(p, t1, tol), make_tangent(p, t2, tol)};
}

}  // namespace hc2
