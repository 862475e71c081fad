#include "hc2/bisector.hpp"

#include <cmath>

#include "hc2/errors.hpp"

namespace hc2 {

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kBracketCap = 20.0 * kLog2;  // vertex parameter in [2^-20, 2^20]

Complex sign_normalize_phase(Complex z) {
  if (z.imag() < 0.0 || (z.imag() == 0.0 && z.real() < 0.0)) return -z;
  return z;
}

}  // namespace

Bisector bisector_from_spine(const Geodesic& g, const Tolerance& tol) {
  return Bisector{g, canonicalize(g.polar, tol)};
}

double bisector_residual(const Bisector& b, const HVector& rep) {
  const Geodesic& g = b.spine;
  Complex val = herm(rep, g.v1.rep) * herm(g.v2.rep, rep) /
                herm(g.v1.rep, g.v2.rep);
  return val.imag();
}

double bisector_residual(const Bisector& b, const ProjPoint& x) {
  return bisector_residual(b, x.rep);
}

bool on_bisector(const Bisector& b, const ProjPoint& x, const Tolerance& tol) {
  const Geodesic& g = b.spine;
  Complex val = herm(x.rep, g.v1.rep) * herm(g.v2.rep, x.rep) /
                herm(g.v1.rep, g.v2.rep);
  return std::abs(val.imag()) < tol.eps_mem * std::max(1.0, std::abs(val));
}

ComplexGeodesic slice_at(const Bisector& b, const ProjPoint& x,
                         const Tolerance& tol) {
  if (!on_geodesic(b.spine, x, tol))
    fail(Errc::not_on_spine, "slices sit over spine points");
  // The slice plane is the complex span of x and u; that pair is already
  // Hermitian-orthonormal because spine points pair to zero with u.
  ProjPoint polar = canonicalize(form_cross(x.rep, b.polar_u.rep), tol);
  if (polar.kind != PointKind::positive)
    fail(Errc::internal_check, "slice polar lost positivity");
  return ComplexGeodesic{polar, {x.rep, b.polar_u.rep}};
}

RealPlane meridian_at(const Bisector& b, Complex z, const Tolerance& tol) {
  double az = std::abs(z);
  if (std::abs(az - 1.0) > tol.eps_mem)
    fail(Errc::non_unit_phase, "meridian phase must be unit");
  z = sign_normalize_phase(z / az);
  return RealPlane{
      {b.spine.w_basis[0], b.spine.w_basis[1], z * b.polar_u.rep}};
}

Complex meridian_of_point(const Bisector& b, const ProjPoint& x,
                          const Tolerance& tol) {
  if (!on_bisector(b, x, tol))
    fail(Errc::not_on_bisector, "point is not on the bisector");
  GeodesicCoords c = geodesic_coords(b.spine, x.rep);
  if (on_geodesic(b.spine, x, tol) ||
      std::abs(c.cu) < tol.eps_mem * eucl_norm(x.rep))
    fail(Errc::on_spine, "every meridian contains the spine");
  // x = e^{i phi} (real combination of v1, v2) + cu * u with phi the phase
  // of c1 up to sign; the meridian phase is the direction of cu seen from
  // that frame, with the sign ambiguity normalized away.
  Complex phase = c.c1 / std::abs(c.c1);
  Complex z = c.cu * std::conj(phase);
  return sign_normalize_phase(z / std::abs(z));
}

WitnessRecord non_tg_witness(double alpha, double r, double s) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || alpha == 1.0)
    fail(Errc::parameter_out_of_range,
         "witness needs alpha in (0,1) or (1,inf)");
  if (!(std::abs(r) > 0.0) || !(std::abs(r) < 1.0) ||
      !(std::abs(s) > 0.0) || !(std::abs(s) < 1.0))
    fail(Errc::parameter_out_of_range,
         "witness needs r, s nonzero in (-1,1)");
  Geodesic g = geodesic_from_vertices(canonicalize({{1.0, 1.0, 0.0}}),
                                      canonicalize({{1.0, -1.0, 0.0}}));
  Bisector b = bisector_from_spine(g);
  const HVector& v1 = g.v1.rep;
  const HVector& v2 = g.v2.rep;
  const HVector& u = b.polar_u.rep;
  HVector x = (v1 - v2) + r * u;
  HVector y = (alpha * v1 - (1.0 / alpha) * v2) + Complex(0, s) * u;
  Complex h = herm(x, y);
  HVector q = x - (h / std::abs(h)) * y;
  WitnessRecord rec;
  rec.q_norm = herm_self(q);
  rec.residual = bisector_residual(b, q);
  rec.q = canonicalize(q);
  return rec;
}

ProjPoint bisector_crossing(const Bisector& b, const ProjPoint& p,
                            const ProjPoint& q_end, const Tolerance& tol) {
  if (on_bisector(b, p, tol)) return p;
  Geodesic g;
  double t_hi_limit;
  if (q_end.kind == PointKind::negative) {
    g = geodesic_through(p, q_end, tol);
    t_hi_limit = std::log(vertex_param_of(g, q_end, tol));
  } else if (q_end.kind == PointKind::isotropic) {
    g = geodesic_to_boundary(p, q_end, tol);
    t_hi_limit = proj_equal(q_end, g.v1, tol) ? kBracketCap : -kBracketCap;
  } else {
    fail(Errc::parameter_out_of_range, "target must be a point or endpoint");
  }
  auto residual_at = [&](double t) {
    return bisector_residual(b, point_at_vertex_param(g, std::exp(t)));
  };
  double t_lo = std::log(vertex_param_of(g, p, tol));
  double f_lo = residual_at(t_lo);

  // Walk toward the target in doubling steps until the residual flips sign.
  double t_hi = t_lo, f_hi = f_lo;
  double step = 0.25;
  double dir = (t_hi_limit > t_lo) ? 1.0 : -1.0;
  bool flipped = false;
  while (!flipped) {
    double t_next = t_hi + dir * step;
    bool at_end = false;
    if ((dir > 0 && t_next >= t_hi_limit) || (dir < 0 && t_next <= t_hi_limit)) {
      t_next = t_hi_limit;
      at_end = true;
    }
    double f_next = residual_at(t_next);
    if (std::signbit(f_next) != std::signbit(f_lo) || f_next == 0.0) {
      t_lo = t_hi;
      f_lo = f_hi;
      t_hi = t_next;
      flipped = true;
      break;
    }
    t_hi = t_next;
    f_hi = f_next;
    if (at_end) break;
    step *= 2.0;
  }
  if (!flipped)
    fail(Errc::no_sign_change, "residual keeps its sign along the geodesic");

  // Bisection on the log-parameter.
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (t_lo + t_hi);
    double f_mid = residual_at(mid);
    if (std::abs(f_mid) < 0.5 * tol.eps_mem || t_hi - t_lo == 0.0) {
      t_lo = t_hi = mid;
      break;
    }
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      t_lo = mid;
      f_lo = f_mid;
    } else {
      t_hi = mid;
    }
  }
  return point_at_vertex_param(g, std::exp(0.5 * (t_lo + t_hi)));
}

}  // namespace hc2
