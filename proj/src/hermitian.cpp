#include "hc2/hermitian.hpp"

#include <algorithm>
#include <cmath>

namespace hc2 {

namespace {

constexpr double kZeroFloor = 1e-150;       // below this a vector is "zero"
constexpr double kDependenceRel = 1e-10;    // residual collapse threshold

}  // namespace

HVector sign_fix(const HVector& v) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[m])) m = i;
  double re = v[m].real(), im = v[m].imag();
  if (re < 0.0 || (re == 0.0 && im < 0.0)) return -v;
  return v;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_vector: return "zero_vector";
    case Errc::degenerate_subspace: return "degenerate_subspace";
    case Errc::signature_violation: return "signature_violation";
    case Errc::base_mismatch: return "base_mismatch";
    case Errc::degenerate_plane: return "degenerate_plane";
    case Errc::coincident_points: return "coincident_points";
    case Errc::not_on_geodesic: return "not_on_geodesic";
    case Errc::not_unit_tangent: return "not_unit_tangent";
    case Errc::nonpositive_alpha: return "nonpositive_alpha";
    case Errc::polar_point: return "polar_point";
    case Errc::orthogonal_pair: return "orthogonal_pair";
    case Errc::collinear_input: return "collinear_input";
    case Errc::not_on_flat: return "not_on_flat";
    case Errc::not_on_spine: return "not_on_spine";
    case Errc::non_unit_phase: return "non_unit_phase";
    case Errc::on_spine: return "on_spine";
    case Errc::not_on_bisector: return "not_on_bisector";
    case Errc::parameter_out_of_range: return "parameter_out_of_range";
    case Errc::no_sign_change: return "no_sign_change";
    case Errc::dependent_span: return "dependent_span";
    case Errc::vertex_input: return "vertex_input";
    case Errc::common_flat_exists: return "common_flat_exists";
    case Errc::internal_check: return "internal_check";
  }
  return "unknown";
}

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::negative: return "Negative";
    case PointKind::isotropic: return "Isotropic";
    case PointKind::positive: return "Positive";
  }
  return "unknown";
}

HVector operator+(const HVector& a, const HVector& b) {
  return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}

HVector operator-(const HVector& a, const HVector& b) {
  return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
}

HVector operator-(const HVector& a) { return {{-a[0], -a[1], -a[2]}}; }

HVector operator*(Complex s, const HVector& a) {
  return {{s * a[0], s * a[1], s * a[2]}};
}

HVector operator*(double s, const HVector& a) {
  return {{s * a[0], s * a[1], s * a[2]}};
}

Complex herm(const HVector& x, const HVector& y) {
  return -x[0] * std::conj(y[0]) + x[1] * std::conj(y[1]) +
         x[2] * std::conj(y[2]);
}

double herm_self(const HVector& x) {
  return -std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]);
}

double eucl_norm_sq(const HVector& x) {
  return std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]);
}

double eucl_norm(const HVector& x) { return std::sqrt(eucl_norm_sq(x)); }

HVector form_cross(const HVector& a, const HVector& b) {
  // herm(x, a) = dot(x, J*conj(a)) with J = diag(-1,1,1), so a common
  // herm-orthogonal direction is the bilinear cross product of J*conj(a)
  // and J*conj(b).
  HVector u{{-std::conj(a[0]), std::conj(a[1]), std::conj(a[2])}};
  HVector v{{-std::conj(b[0]), std::conj(b[1]), std::conj(b[2])}};
  return {{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
           u[0] * v[1] - u[1] * v[0]}};
}

bool lex_less(const HVector& a, const HVector& b) {
  // Banded comparison: vertex reps computed along different arithmetic
  // paths differ by ulps, and exact comparison would let that noise decide
  // the order when a leading coordinate ties (e.g. the vertices of any
  // geodesic through the origin share |x0|).  Treat sub-band differences
  // as ties so the ordering depends only on the projective vertex pair.
  constexpr double kBand = 1e-9;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::abs(a[i].real() - b[i].real()) > kBand)
      return a[i].real() < b[i].real();
    if (std::abs(a[i].imag() - b[i].imag()) > kBand)
      return a[i].imag() < b[i].imag();
  }
  return false;
}

Tolerance::Tolerance(double iso, double mem, double alg)
    : eps_iso(iso), eps_mem(mem), eps_alg(alg) {
  if (!(alg > 0.0) || !(alg <= mem) || !(mem <= iso))
    fail(Errc::parameter_out_of_range,
         "tolerances must satisfy 0 < eps_alg <= eps_mem <= eps_iso");
}

PointKind point_kind(const HVector& x, const Tolerance& tol) {
  double n = eucl_norm(x);
  if (n < kZeroFloor) fail(Errc::zero_vector, "cannot classify zero vector");
  double s = herm_self((1.0 / n) * x);
  if (std::abs(s) < tol.eps_iso) return PointKind::isotropic;
  return s < 0.0 ? PointKind::negative : PointKind::positive;
}

ProjPoint canonicalize(const HVector& x, const Tolerance& tol) {
  double n = eucl_norm(x);
  if (n < kZeroFloor) fail(Errc::zero_vector, "cannot canonicalize zero vector");
  HVector unit = (1.0 / n) * x;
  double s = herm_self(unit);
  PointKind kind;
  HVector rep = unit;
  if (std::abs(s) < tol.eps_iso) {
    kind = PointKind::isotropic;
  } else if (s < 0.0) {
    kind = PointKind::negative;
    rep = (1.0 / std::sqrt(-s)) * unit;
  } else {
    kind = PointKind::positive;
    rep = (1.0 / std::sqrt(s)) * unit;
  }
  // Global phase: first coordinate of significant modulus becomes real
  // positive.
  double top = std::max({std::abs(rep[0]), std::abs(rep[1]), std::abs(rep[2])});
  for (std::size_t i = 0; i < 3; ++i) {
    double m = std::abs(rep[i]);
    if (m > 1e-12 * top) {
      // rotate by the bare conjugate first: z * conj(z) cancels exactly,
      // so the pivot coordinate ends up real to the last bit
      rep = std::conj(rep[i]) * rep;
      rep = (1.0 / m) * rep;
      break;
    }
  }
  return {rep, kind};
}

double proj_residual(const ProjPoint& a, const ProjPoint& b) {
  bool a_iso = a.kind == PointKind::isotropic;
  bool b_iso = b.kind == PointKind::isotropic;
  if (a_iso != b_iso) return 1.0;  // kinds are projective invariants
  if (a_iso)
    // The Hermitian projection degenerates on the boundary, but two
    // isotropic lines coincide exactly when they pair to zero, so the
    // normalized pairing itself serves as a symmetric residual.
    return std::abs(herm(a.rep, b.rep)) /
           (eucl_norm(a.rep) * eucl_norm(b.rep));
  HVector res = b.rep - (herm(b.rep, a.rep) / herm_self(a.rep)) * a.rep;
  return eucl_norm(res) / eucl_norm(b.rep);
}

bool proj_equal(const ProjPoint& a, const ProjPoint& b, const Tolerance& tol) {
  return proj_residual(a, b) < tol.eps_mem;
}

std::vector<HVector> orthonormalize(std::span<const HVector> vectors,
                                    const Tolerance& tol) {
  const std::size_t k = vectors.size();
  if (k == 0 || k > 3)
    fail(Errc::parameter_out_of_range, "orthonormalize expects 1..3 vectors");

  double max_in = 0.0;
  for (const auto& v : vectors) max_in = std::max(max_in, eucl_norm(v));
  if (max_in < kZeroFloor) fail(Errc::zero_vector, "zero input vector");

  std::vector<HVector> work(vectors.begin(), vectors.end());
  std::vector<HVector> out;
  int negatives = 0;
  const double floor_sq = kDependenceRel * kDependenceRel * max_in * max_in;

  while (!work.empty()) {
    // Candidate directions: the remaining residuals themselves, then their
    // pairwise real combinations, then combinations with coefficient i.
    // Quality is |herm(v,v)| relative to the Euclidean norm squared, so the
    // choice is scale free.  Real combinations are preferred with a wide
    // margin so that spans on which the form is real valued keep a real
    // basis.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    struct Cand {
      HVector v;
      double q = -1.0;
      std::size_t src0 = 0, src1 = kNone;  // work indices the candidate used
    };
    Cand best_real, best_imag;
    auto consider = [&](const HVector& v, std::size_t i, std::size_t j,
                        Cand& slot) {
      double n2 = eucl_norm_sq(v);
      if (n2 < floor_sq) return;
      double q = std::abs(herm_self(v)) / n2;
      if (q > slot.q) slot = {v, q, i, j};
    };
    for (std::size_t i = 0; i < work.size(); ++i)
      consider(work[i], i, kNone, best_real);
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        consider(work[i] + work[j], i, j, best_real);
        consider(work[i] - work[j], i, j, best_real);
        consider(work[i] + Complex(0, 1) * work[j], i, j, best_imag);
        consider(work[i] - Complex(0, 1) * work[j], i, j, best_imag);
      }

    Cand best = best_real;
    if (best_imag.q > 1.5 * best_real.q) best = best_imag;
    if (best.q < tol.eps_iso)
      fail(Errc::degenerate_subspace,
           "form is degenerate (or inputs dependent) on the span");

    // Keep the leading input direction when it is within a constant factor
    // of the best conditioned candidate; plain Gram-Schmidt semantics.
    {
      double n2 = eucl_norm_sq(work.front());
      if (n2 >= floor_sq) {
        double q0 = std::abs(herm_self(work.front())) / n2;
        if (q0 >= 0.3 * best.q) best = {work.front(), q0, 0, kNone};
      }
    }

    double s = herm_self(best.v);
    HVector u = sign_fix((1.0 / std::sqrt(std::abs(s))) * best.v);
    if (s < 0.0 && ++negatives > 1)
      fail(Errc::signature_violation, "span carries two negative directions");
    double su = s < 0.0 ? -1.0 : 1.0;

    // Retire one of the vectors the candidate was built from, never a
    // bystander: for a pair candidate the two contributors leave the same
    // residual line once u is projected out, so dropping a third vector
    // would collapse the remaining rank.  Of the two, retire the one more
    // Euclidean-aligned with u.
    std::size_t drop = best.src0;
    if (best.src1 != kNone) {
      auto align = [&](const HVector& w) {
        Complex along;
        for (std::size_t c = 0; c < 3; ++c) along += w[c] * std::conj(u[c]);
        return std::abs(along) / eucl_norm(w);
      };
      if (align(work[best.src1]) > align(work[best.src0])) drop = best.src1;
    }
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(drop));
    for (auto& w : work) w = w - (herm(w, u) / su) * u;

    out.push_back(u);
  }
  return out;
}

}  // namespace hc2
