#include "hc2/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "hc2/errors.hpp"

namespace hc2 {

namespace {

void require_kind(const ProjPoint& p, PointKind k, const char* what) {
  if (p.kind != k)
    fail(Errc::parameter_out_of_range,
         std::string(what) + " must be " + point_kind_name(k) + ", got " +
             point_kind_name(p.kind));
}

// Scales a pair of isotropic representatives so herm(v1, v2) = 1/2 exactly
// (up to rounding), without moving either class.
Geodesic from_vertex_reps(const HVector& a, const HVector& b,
                          const Tolerance& tol) {
  Complex h = herm(a, b);
  double ah = std::abs(h);
  if (ah < tol.eps_iso * eucl_norm(a) * eucl_norm(b))
    fail(Errc::coincident_points, "vertices span no geodesic");
  double lam1 = 1.0 / std::sqrt(2.0 * ah);
  Complex lam2 = 1.0 / (2.0 * std::conj(h) * lam1);
  Geodesic g;
  g.v1 = {lam1 * a, PointKind::isotropic};
  g.v2 = {lam2 * b, PointKind::isotropic};
  g.w_basis = {g.v1.rep - g.v2.rep, g.v1.rep + g.v2.rep};
  g.polar = canonicalize(form_cross(g.v1.rep, g.v2.rep), tol).rep;
  return g;
}

// Vertices of the geodesic through p and b, where herm(p, b) is real
// positive: the null directions of the form on the real span R p + R b,
// i.e. the real roots of herm(p + t b, p + t b) = 0.  Working inside the
// real span directly keeps the chord through p and b; a unitary basis of
// the complex span would only pin the boundary circle, not the chord.
Geodesic from_real_span(const HVector& p, const HVector& b,
                        const Tolerance& tol) {
  double A = herm_self(b);
  double B = 2.0 * herm(p, b).real();
  double C = herm_self(p);
  double disc = B * B - 4.0 * A * C;
  if (!(disc > 0.0))
    fail(Errc::degenerate_subspace, "span has no boundary chord");
  double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  double t1 = q / A;
  double t2 = C / q;
  HVector va = canonicalize(p + t1 * b, tol).rep;
  HVector vb = canonicalize(p + t2 * b, tol).rep;
  if (lex_less(va, vb)) std::swap(va, vb);  // larger vertex takes the v1 slot
  return from_vertex_reps(va, vb, tol);
}

}  // namespace

Geodesic geodesic_from_vertices(const ProjPoint& a, const ProjPoint& b,
                                const Tolerance& tol) {
  require_kind(a, PointKind::isotropic, "vertex");
  require_kind(b, PointKind::isotropic, "vertex");
  return from_vertex_reps(a.rep, b.rep, tol);
}

Geodesic geodesic_through(const ProjPoint& p, const ProjPoint& q,
                          const Tolerance& tol) {
  require_kind(p, PointKind::negative, "point");
  require_kind(q, PointKind::negative, "point");
  if (proj_equal(p, q, tol))
    fail(Errc::coincident_points, "need two distinct points");
  // W = R p + herm(p,q) R q: rotating q by the pairing makes the form real
  // valued on the real span.
  Complex h = herm(p.rep, q.rep);
  return from_real_span(p.rep, h * q.rep, tol);
}

Geodesic geodesic_to_boundary(const ProjPoint& p, const ProjPoint& v,
                              const Tolerance& tol) {
  require_kind(p, PointKind::negative, "point");
  require_kind(v, PointKind::isotropic, "endpoint");
  Complex h = herm(p.rep, v.rep);
  if (std::abs(h) < tol.eps_iso * eucl_norm(p.rep) * eucl_norm(v.rep))
    fail(Errc::orthogonal_pair, "endpoint is orthogonal to the point");
  // One vertex is v itself; the other is the second null direction of the
  // real span of p and h v, where the quadratic degenerates to a linear
  // equation because herm(v, v) = 0.
  HVector b = h * v.rep;
  double t = -herm_self(p.rep) / (2.0 * herm(p.rep, b).real());
  HVector va = canonicalize(p.rep + t * b, tol).rep;
  HVector vb = v.rep;
  if (lex_less(va, vb)) std::swap(va, vb);  // larger vertex takes the v1 slot
  return from_vertex_reps(va, vb, tol);
}

Geodesic geodesic_from_tangent(const ProjPoint& p, const TangentVector& t,
                               const Tolerance& tol) {
  require_kind(p, PointKind::negative, "point");
  double n = tangent_norm(t);
  if (std::abs(n - 1.0) > tol.eps_mem)
    fail(Errc::not_unit_tangent, "tangent must have unit norm");
  if (!proj_equal(p, t.base, tol))
    fail(Errc::base_mismatch, "tangent is based at a different point");
  // The cosh/sinh flow of t degenerates to the classes p.rep ± t.img at the
  // parameter limits; those are the vertices.
  ProjPoint va = canonicalize(p.rep + t.img, tol);
  ProjPoint vb = canonicalize(p.rep - t.img, tol);
  if (lex_less(va.rep, vb.rep)) std::swap(va, vb);  // larger vertex first
  return from_vertex_reps(va.rep, vb.rep, tol);
}

GeodesicCoords geodesic_coords(const Geodesic& g, const HVector& x) {
  // herm(v1,v1) = herm(v2,v2) = 0 and herm(v1,v2) = 1/2 turn coordinate
  // extraction into two products with the opposite vertex.
  GeodesicCoords c;
  c.c1 = 2.0 * herm(x, g.v2.rep);
  c.c2 = 2.0 * herm(x, g.v1.rep);
  c.cu = herm(x, g.polar);
  return c;
}

double geodesic_residual(const Geodesic& g, const ProjPoint& x) {
  GeodesicCoords c = geodesic_coords(g, x.rep);
  double off_line = std::abs(c.cu) / eucl_norm(x.rep);
  Complex prod = c.c1 * std::conj(c.c2);
  if (!(prod.real() < 0.0)) return std::max(off_line, 1.0);
  double twist = std::abs(prod.imag()) / std::abs(prod);
  return std::max(off_line, twist);
}

bool on_geodesic(const Geodesic& g, const ProjPoint& x, const Tolerance& tol) {
  return geodesic_residual(g, x) < tol.eps_mem;
}

ProjPoint point_at_vertex_param(const Geodesic& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    fail(Errc::nonpositive_alpha, "parameter must be positive");
  HVector rep = alpha * g.v1.rep - (1.0 / alpha) * g.v2.rep;
  ProjPoint p = canonicalize(rep);
  p.kind = PointKind::negative;  // herm_self(rep) = -1 identically
  return p;
}

double vertex_param_of(const Geodesic& g, const ProjPoint& x,
                       const Tolerance& tol) {
  if (!on_geodesic(g, x, tol))
    fail(Errc::not_on_geodesic, "point is not on the geodesic");
  GeodesicCoords c = geodesic_coords(g, x.rep);
  return std::sqrt(std::abs(c.c1) / std::abs(c.c2));
}

TangentVector geodesic_tangent(const Geodesic& g, const ProjPoint& p0,
                               const Tolerance& tol) {
  if (!on_geodesic(g, p0, tol))
    fail(Errc::not_on_geodesic, "point is not on the geodesic");
  // For p0 = c1 v1 + c2 v2 the unit velocity of alpha * v1 - v2 / alpha at
  // p0 is c1 v1 - c2 v2 (differentiating against log alpha).
  GeodesicCoords c = geodesic_coords(g, p0.rep);
  HVector img = c.c1 * g.v1.rep - c.c2 * g.v2.rep;
  TangentVector t = project_tangent(p0, img, tol);
  return tangent_scale(1.0 / tangent_norm(t), t);
}

ProjPoint point_at_arclength(const Geodesic& g, const ProjPoint& p0,
                             const TangentVector& t, double theta,
                             const Tolerance& tol) {
  if (!on_geodesic(g, p0, tol))
    fail(Errc::not_on_geodesic, "base point is not on the geodesic");
  if (!proj_equal(p0, t.base, tol))
    fail(Errc::base_mismatch, "tangent is based at a different point");
  if (std::abs(tangent_norm(t) - 1.0) > tol.eps_mem)
    fail(Errc::not_unit_tangent, "tangent must have unit norm");
  TangentVector dir = geodesic_tangent(g, p0, tol);
  double along =
      std::min(eucl_norm(t.img - dir.img), eucl_norm(t.img + dir.img));
  if (along > tol.eps_mem * eucl_norm(t.img))
    fail(Errc::not_unit_tangent, "tangent does not point along the geodesic");
  HVector rep = std::cosh(theta) * p0.rep + std::sinh(theta) * t.img;
  ProjPoint p = canonicalize(rep, tol);
  p.kind = PointKind::negative;
  return p;
}

double distance(const ProjPoint& p, const ProjPoint& q) {
  if (p.kind != PointKind::negative || q.kind != PointKind::negative)
    fail(Errc::parameter_out_of_range, "distance needs two negative points");
  double num = std::norm(herm(p.rep, q.rep));
  double den = herm_self(p.rep) * herm_self(q.rep);
  return std::acosh(std::max(1.0, std::sqrt(num / den)));
}

double project_param(const Geodesic& g, const ProjPoint& p,
                     const Tolerance& tol) {
  require_kind(p, PointKind::negative, "point");
  double a = std::abs(herm(p.rep, g.v1.rep));
  double b = std::abs(herm(p.rep, g.v2.rep));
  double scale = eucl_norm(p.rep);
  if (a < tol.eps_alg * scale && b < tol.eps_alg * scale)
    fail(Errc::polar_point, "point pairs to zero with both vertices");
  return std::sqrt(b / a);
}

ProjPoint project_to_geodesic(const Geodesic& g, const ProjPoint& p,
                              const Tolerance& tol) {
  return point_at_vertex_param(g, project_param(g, p, tol));
}

}  // namespace hc2
