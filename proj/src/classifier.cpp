#include "hc2/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hc2/errors.hpp"

namespace hc2 {

namespace {

// Rank decisions for the real coordinate span; well above roundoff, well
// below anything a caller could mistake for a geometric tolerance.
constexpr double kRankTol = 1e-8;

// Deterministic uniform draw in [0, 1) straight from the engine words;
// std::uniform_real_distribution is implementation-defined and would break
// the byte-identical-report promise across toolchains.
double u01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

// Sequential Gram-Schmidt over the reals in the metric g.  Two projection
// rounds keep the result orthonormal even for nearly dependent inputs; a
// vector whose remainder drops below kRankTol of its size is dependent.
std::vector<TangentVector> real_orthonormalize(
    std::span<const TangentVector> span, const Tolerance& tol) {
  std::vector<TangentVector> basis;
  for (const TangentVector& t : span) {
    TangentVector w = t;
    for (int round = 0; round < 2; ++round)
      for (const TangentVector& e : basis)
        w = tangent_add(w, tangent_scale(-riemannian_g(w, e, tol), e), tol);
    double n = tangent_norm(w);
    if (n < kRankTol * std::max(1.0, tangent_norm(t)))
      fail(Errc::dependent_span, "tangent vectors are dependent over R");
    basis.push_back(tangent_scale(1.0 / n, w));
  }
  return basis;
}

double out_of_span(const TangentVector& w,
                   const std::vector<TangentVector>& basis,
                   const Tolerance& tol) {
  TangentVector rest = w;
  for (const TangentVector& e : basis)
    rest = tangent_add(rest, tangent_scale(-riemannian_g(rest, e, tol), e),
                       tol);
  return tangent_norm(rest);
}

}  // namespace

const char* tangent_class_name(TangentClass t) {
  switch (t) {
    case TangentClass::line: return "Line";
    case TangentClass::complex_geodesic_plane: return "ComplexGeodesicPlane";
    case TangentClass::real_plane_plane: return "RealPlanePlane";
    case TangentClass::not_closed: return "NotClosed";
    case TangentClass::whole: return "Whole";
  }
  return "?";
}

const char* hull_tag_name(HullTag t) {
  switch (t) {
    case HullTag::empty: return "Empty";
    case HullTag::point: return "Point";
    case HullTag::geodesic: return "Geodesic";
    case HullTag::complex_geodesic: return "ComplexGeodesic";
    case HullTag::real_plane: return "RealPlane";
    case HullTag::whole: return "Whole";
  }
  return "?";
}

TangentClassification classify_tangent_detail(
    const ProjPoint& p, std::span<const TangentVector> span,
    const Tolerance& tol) {
  if (span.empty())
    fail(Errc::parameter_out_of_range, "nothing to classify");
  if (span.size() > 4)
    fail(Errc::dependent_span, "more than four vectors cannot be independent");
  for (const TangentVector& t : span)
    if (!proj_equal(t.base, p, tol))
      fail(Errc::base_mismatch, "tangent vector based at a different point");

  std::vector<TangentVector> basis = real_orthonormalize(span, tol);

  TangentClassification out;
  out.dimension = static_cast<int>(basis.size());
  switch (out.dimension) {
    case 1:
      out.tag = TangentClass::line;
      break;
    case 3:
      out.tag = TangentClass::not_closed;
      break;
    case 4:
      out.tag = TangentClass::whole;
      break;
    case 2: {
      const TangentVector& t1 = basis[0];
      const TangentVector& t2 = basis[1];
      TangentVector n = hermitian_normal(t1, tol);
      Complex lam = tangent_herm(t2, t1, tol);  // = i a by g-orthogonality
      Complex b = tangent_herm(t2, n, tol);
      out.a = lam.imag();
      out.b_abs = std::abs(b);
      if (std::abs(lam.real()) > 1e-9 ||
          std::abs(out.a * out.a + out.b_abs * out.b_abs - 1.0) > 1e-9)
        fail(Errc::internal_check, "plane decomposition lost orthonormality");
      if (out.b_abs < tol.eps_alg) {
        out.tag = TangentClass::complex_geodesic_plane;
      } else if (std::abs(out.a) < tol.eps_alg) {
        out.tag = TangentClass::real_plane_plane;
      } else {
        out.tag = TangentClass::not_closed;
        out.near_degenerate =
            std::min(std::abs(out.a), out.b_abs) < 10.0 * tol.eps_alg;
      }
      break;
    }
  }

  // Independent verdict: closure under the curvature tensor, checked by
  // brute force over ordered basis triples.  The two must agree except in
  // the declared near-degenerate band.
  double worst = 0.0;
  for (const TangentVector& x : basis)
    for (const TangentVector& y : basis)
      for (const TangentVector& z : basis)
        worst = std::max(worst,
                         out_of_span(curvature(x, y, z, tol), basis, tol));
  out.closure_residual = worst;

  bool closed = out.tag != TangentClass::not_closed;
  if (closed && worst > 100.0 * tol.eps_alg)
    fail(Errc::internal_check, "closed verdict fails curvature closure");
  if (!closed && !out.near_degenerate && worst < tol.eps_alg)
    fail(Errc::internal_check, "open verdict passes curvature closure");
  return out;
}

TangentClass classify_tangent_subspace(const ProjPoint& p,
                                       std::span<const TangentVector> span,
                                       const Tolerance& tol) {
  return classify_tangent_detail(p, span, tol).tag;
}

HullDetail hull_classify_detailed(std::span<const ProjPoint> points,
                                  const Tolerance& tol) {
  HullDetail out;
  if (points.empty()) return out;
  for (const ProjPoint& x : points)
    if (x.kind != PointKind::negative)
      fail(Errc::parameter_out_of_range,
           "hull classification expects interior points");

  const ProjPoint& first = points[0];
  const ProjPoint* second = nullptr;
  for (std::size_t k = 1; k < points.size(); ++k)
    if (!proj_equal(first, points[k], tol)) {
      second = &points[k];
      break;
    }
  if (!second) {
    out.hull.tag = HullTag::point;
    out.hull.witness = first;
    return out;
  }

  Geodesic g = geodesic_through(first, *second, tol);
  out.base = g;
  const ProjPoint* off = nullptr;
  for (const ProjPoint& x : points)
    if (!on_geodesic(g, x, tol)) {
      off = &x;
      break;
    }
  if (!off) {
    out.hull.tag = HullTag::geodesic;
    out.hull.witness = g;
    return out;
  }
  out.off_point = *off;

  // The only complex geodesic containing g is its complex span, and a real
  // plane containing g and the off point is unique when it exists at all,
  // so testing one candidate per type settles the chain.
  ComplexGeodesic spine = complex_geodesic_of(g, tol);
  if (on_complex_geodesic(spine, *off, tol)) {
    if (std::all_of(points.begin(), points.end(), [&](const ProjPoint& x) {
          return on_complex_geodesic(spine, x, tol);
        })) {
      out.hull.tag = HullTag::complex_geodesic;
      out.hull.witness = spine;
      return out;
    }
  } else if (std::optional<RealPlane> plane =
                 real_plane_through(first, *second, *off, tol)) {
    if (std::all_of(points.begin(), points.end(), [&](const ProjPoint& x) {
          return on_real_plane(*plane, x, tol);
        })) {
      out.hull.tag = HullTag::real_plane;
      out.hull.witness = *plane;
      return out;
    }
  }
  out.hull.tag = HullTag::whole;
  return out;
}

HullClass hull_classify(std::span<const ProjPoint> points,
                        const Tolerance& tol) {
  return hull_classify_detailed(points, tol).hull;
}

SpineDecomposition spine_decomposition(const Geodesic& g, const ProjPoint& v3,
                                       const Tolerance& tol) {
  if (v3.kind != PointKind::isotropic)
    fail(Errc::parameter_out_of_range,
         "spine decomposition applies to boundary classes");
  GeodesicCoords c = geodesic_coords(g, v3.rep);
  double scale = eucl_norm(v3.rep);
  if (std::abs(c.c1) < 2.0 * tol.eps_iso * scale * eucl_norm(g.v2.rep) ||
      std::abs(c.c2) < 2.0 * tol.eps_iso * scale * eucl_norm(g.v1.rep))
    fail(Errc::vertex_input, "class coincides with a spine vertex");

  // Rotate the vertex pair by kappa (and 1/conj(kappa)) and the polar by a
  // unit zeta so the three coefficients take the shape (eps, -conj(eps), r).
  // kappa^2 = -c1/conj(c2) keeps the pairing herm(v1, v2) = 1/2 intact.
  Complex kappa = std::sqrt(-c.c1 / std::conj(c.c2));
  SpineDecomposition out;
  out.epsilon = c.c1 / kappa;
  out.r = std::abs(c.cu);
  Complex zeta = out.r > 0.0 ? c.cu / out.r : Complex(1.0);
  out.v1 = kappa * g.v1.rep;
  out.v2 = (1.0 / std::conj(kappa)) * g.v2.rep;
  out.u = zeta * g.polar;
  out.v3 = v3.rep;
  out.off_complex_spine = out.r > tol.eps_mem * scale;
  out.epsilon_non_real = std::abs(out.epsilon.imag()) >
                         tol.eps_alg * std::max(1.0, std::abs(out.epsilon));

  HVector recon =
      out.epsilon * out.v1 - std::conj(out.epsilon) * out.v2 + out.r * out.u;
  if (eucl_norm(recon - out.v3) > 1e3 * tol.eps_alg * std::max(1.0, scale))
    fail(Errc::internal_check, "decomposition fails to rebuild the class");
  double re2 = (out.epsilon * out.epsilon).real();
  if (std::abs(re2 - out.r * out.r) >
      1e3 * tol.eps_alg * std::max(1.0, std::norm(out.epsilon)))
    fail(Errc::internal_check, "isotropy constraint broken in decomposition");
  return out;
}

ConstructionTrace whole_space_construction(const Geodesic& g,
                                           const ProjPoint& p,
                                           const Tolerance& tol) {
  if (p.kind != PointKind::negative)
    fail(Errc::parameter_out_of_range,
         "construction starts at an interior point");
  if (on_geodesic(g, p, tol))
    fail(Errc::common_flat_exists, "point lies on the geodesic");

  ConstructionTrace tr;
  tr.foot = project_to_geodesic(g, p, tol);

  ProjPoint v2c = canonicalize(g.v2.rep, tol);
  Geodesic reach = geodesic_to_boundary(p, v2c, tol);
  ProjPoint far = canonicalize(reach.v1.rep, tol);
  if (proj_equal(far, v2c, tol)) far = canonicalize(reach.v2.rep, tol);

  tr.dec = spine_decomposition(g, far, tol);
  if (!tr.dec.off_complex_spine)
    fail(Errc::common_flat_exists, "a complex geodesic contains both inputs");
  if (!tr.dec.epsilon_non_real)
    fail(Errc::common_flat_exists, "a real plane contains both inputs");

  const Complex eps = tr.dec.epsilon;
  double num = std::abs(herm(p.rep, tr.dec.v2));
  double den = std::abs(herm(p.rep, tr.dec.v3));
  if (den <= 0.0)
    fail(Errc::internal_check, "point pairs to zero against its far vertex");
  tr.alpha = std::sqrt(std::abs(eps) * num / den);
  tr.p_rep = tr.alpha * tr.dec.v3 - (eps / tr.alpha) * tr.dec.v2;
  if (!proj_equal(canonicalize(tr.p_rep, tol), p, tol))
    fail(Errc::internal_check, "frame representative misses the input point");

  tr.v4_rep = (2.0 * eps.real()) * (tr.dec.v1 - tr.dec.v2) - tr.dec.v3;
  if (std::abs(herm_self(tr.v4_rep)) > tol.eps_iso * eucl_norm_sq(tr.v4_rep))
    fail(Errc::internal_check, "companion direction is not isotropic");

  tr.spine_product_im_p =
      (herm(tr.dec.v1, tr.p_rep) * herm(tr.p_rep, tr.dec.v2)).imag();
  tr.spine_product_im_v4 =
      (herm(tr.dec.v1, tr.v4_rep) * herm(tr.v4_rep, tr.dec.v2)).imag();
  tr.pairing_p_v4 = herm(tr.p_rep, tr.v4_rep);

  Bisector b = bisector_from_spine(g, tol);
  tr.crossing = bisector_crossing(b, p, canonicalize(tr.v4_rep, tol), tol);
  tr.crossing_on_spine = on_geodesic(g, tr.crossing, tol);
  tr.meridian_phase = meridian_of_point(b, tr.crossing, tol);
  tr.meridian = meridian_at(b, tr.meridian_phase, tol);
  tr.p_on_meridian = on_real_plane(tr.meridian, p, tol);
  return tr;
}

OracleReport closure_oracle(std::span<const ProjPoint> points,
                            const HullClass& claimed, std::size_t samples,
                            std::uint64_t seed, const Tolerance& tol) {
  bool shape_ok = false;
  switch (claimed.tag) {
    case HullTag::empty:
    case HullTag::whole:
      shape_ok = std::holds_alternative<std::monostate>(claimed.witness);
      break;
    case HullTag::point:
      shape_ok = std::holds_alternative<ProjPoint>(claimed.witness);
      break;
    case HullTag::geodesic:
      shape_ok = std::holds_alternative<Geodesic>(claimed.witness);
      break;
    case HullTag::complex_geodesic:
      shape_ok = std::holds_alternative<ComplexGeodesic>(claimed.witness);
      break;
    case HullTag::real_plane:
      shape_ok = std::holds_alternative<RealPlane>(claimed.witness);
      break;
  }
  if (!shape_ok)
    fail(Errc::parameter_out_of_range, "claim witness does not match its tag");

  OracleReport rep;
  rep.tag = claimed.tag;

  auto member_residual = [&](const ProjPoint& x) -> double {
    switch (claimed.tag) {
      case HullTag::empty:
        return 1.0;
      case HullTag::point:
        return proj_residual(std::get<ProjPoint>(claimed.witness), x);
      case HullTag::geodesic:
        return geodesic_residual(std::get<Geodesic>(claimed.witness), x);
      case HullTag::complex_geodesic:
        return complex_geodesic_residual(
            std::get<ComplexGeodesic>(claimed.witness), x);
      case HullTag::real_plane:
        return real_plane_residual(std::get<RealPlane>(claimed.witness), x);
      case HullTag::whole:
        return 0.0;
    }
    return 1.0;
  };

  auto check = [&](const ProjPoint& x) {
    double res = member_residual(x);
    rep.max_residual = std::max(rep.max_residual, res);
    ++rep.samples_run;
    if (res >= tol.eps_mem) {
      rep.refuted = true;
      rep.refuting_point = x;
    }
    return !rep.refuted;
  };

  // Members carry a generation: inputs are 0, points sampled from a
  // generation-k pair are k+1.  Every member is exact mathematically, but
  // each geodesic-and-sample round amplifies representative rounding by
  // roughly cosh(band)/separation, so growth stops after one generation
  // and pairs closer than kMinSep are not drawn; otherwise a deep pool
  // would refute its own exact members.
  struct Member {
    ProjPoint x;
    int gen = 0;
  };
  std::vector<Member> pool;
  for (const ProjPoint& x : points) {
    if (!check(x)) return rep;
    pool.push_back({x, 0});
    if (rep.samples_run >= samples) return rep;
  }

  constexpr double kMinSep = 0.2;
  constexpr double kBand = 1.0;
  std::mt19937_64 rng(seed);
  constexpr std::size_t kRound = 32;
  while (rep.samples_run < samples && pool.size() >= 2) {
    std::size_t i = 0, j = 0;
    bool found = false;
    for (int attempt = 0; !found && attempt < 8; ++attempt) {
      i = rng() % pool.size();
      j = rng() % pool.size();
      found = i != j && proj_residual(pool[i].x, pool[j].x) > kMinSep;
    }
    if (!found) break;  // members too clustered; nothing safe to draw
    Geodesic seg = geodesic_through(pool[i].x, pool[j].x, tol);
    ProjPoint last = pool[i].x;
    for (std::size_t k = 0; k < kRound && rep.samples_run < samples; ++k) {
      last = point_at_vertex_param(
          seg, std::exp(kBand * (2.0 * u01(rng) - 1.0)));
      if (!check(last)) return rep;
    }
    int gen = std::max(pool[i].gen, pool[j].gen) + 1;
    if (gen <= 1 && pool.size() < 64) pool.push_back({last, gen});
  }
  return rep;
}

}  // namespace hc2
