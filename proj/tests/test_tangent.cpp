#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hc2/tangent.hpp"
#include "support/generators.hpp"

using hc2::Complex;
using hc2::HVector;
using hc2::ProjPoint;
using hc2::TangentVector;
using gen::hv;

namespace {

const Complex I(0.0, 1.0);

double diff_norm(const TangentVector& a, const TangentVector& b) {
  return hc2::eucl_norm(a.img - b.img);
}

}  // namespace

TEST_CASE("tangent vectors live in the orthogonal complement of the base") {
  ProjPoint p = hc2::canonicalize(hv(1, 0, 0));
  TangentVector t = hc2::make_tangent(p, hv(0, 1, 0));
  CHECK(hc2::tangent_herm(t, t) == Complex(1.0));  // unit vector at the origin
  CHECK(hc2::tangent_norm(t) == 1.0);

  // non-orthogonal image is rejected, project_tangent repairs it
  CHECK_THROWS_AS(hc2::make_tangent(p, hv(0.5, 1, 0)), hc2::Error);
  TangentVector fixed = hc2::project_tangent(p, hv(0.5, 1, 0));
  CHECK(std::abs(hc2::herm(fixed.img, p.rep)) < 1e-14);
  CHECK(diff_norm(fixed, t) < 1e-14);

  // a positive base has no tangent space here
  ProjPoint pos = hc2::canonicalize(hv(0, 1, 0));
  CHECK_THROWS_AS(hc2::make_tangent(pos, hv(1, 0, 0)), hc2::Error);
}

TEST_CASE("projecting an already tangent image is the identity") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector t = gen::random_unit_tangent(rng, p);
    TangentVector again = hc2::project_tangent(p, t.img);
    CHECK(diff_norm(t, again) < 1e-13);
  }
}

TEST_CASE("metric pieces: g is the real part, w the imaginary part") {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector a = gen::random_unit_tangent(rng, p);
    TangentVector b = gen::random_unit_tangent(rng, p);
    Complex h = hc2::tangent_herm(a, b);
    CHECK(hc2::riemannian_g(a, b) == h.real());
    CHECK(hc2::symplectic_w(a, b) == h.imag());
    // the complex structure rotates by a quarter turn
    TangentVector ia = hc2::tangent_scale(I, a);
    CHECK(std::abs(hc2::riemannian_g(a, ia)) < 1e-13);
    CHECK(hc2::symplectic_w(a, ia) ==
          doctest::Approx(-hc2::riemannian_g(a, a)).epsilon(1e-12));
  }
}

TEST_CASE("base mismatch is refused") {
  std::mt19937_64 rng(17);
  ProjPoint p = gen::random_negative(rng);
  ProjPoint q = gen::random_negative(rng);
  REQUIRE(hc2::proj_residual(p, q) > 1e-3);
  TangentVector tp = gen::random_unit_tangent(rng, p);
  TangentVector tq = gen::random_unit_tangent(rng, q);
  CHECK_THROWS_AS(hc2::tangent_herm(tp, tq), hc2::Error);
  try {
    hc2::tangent_add(tp, tq);
    FAIL("expected a base mismatch");
  } catch (const hc2::Error& e) {
    CHECK(e.code() == hc2::Errc::base_mismatch);
  }
}

TEST_CASE("hermitian_normal completes a unit tangent to a complex frame") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 50; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector t = gen::random_unit_tangent(rng, p);
    TangentVector n = hc2::hermitian_normal(t);
    CHECK(std::abs(hc2::tangent_herm(n, n) - 1.0) < 1e-12);
    CHECK(std::abs(hc2::tangent_herm(t, n)) < 1e-12);
    CHECK(std::abs(hc2::herm(n.img, p.rep)) < 1e-12);
  }
}

TEST_CASE("tangent_frame spans the complement orthonormally") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 30; ++k) {
    ProjPoint p = gen::random_negative(rng);
    auto [b1, b2] = hc2::tangent_frame(p);
    CHECK(std::abs(hc2::herm(b1, b1) - 1.0) < 1e-12);
    CHECK(std::abs(hc2::herm(b2, b2) - 1.0) < 1e-12);
    CHECK(std::abs(hc2::herm(b1, b2)) < 1e-12);
    CHECK(std::abs(hc2::herm(b1, p.rep)) < 1e-12);
    CHECK(std::abs(hc2::herm(b2, p.rep)) < 1e-12);
  }
}

TEST_CASE("curvature tensor symmetries") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 40; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector a = gen::random_unit_tangent(rng, p);
    TangentVector b = gen::random_unit_tangent(rng, p);
    TangentVector s = gen::random_unit_tangent(rng, p);
    TangentVector w = gen::random_unit_tangent(rng, p);

    TangentVector rab = hc2::curvature(a, b, s);
    TangentVector rba = hc2::curvature(b, a, s);
    CHECK(hc2::eucl_norm(rab.img + rba.img) < 1e-12);

    // first Bianchi identity
    TangentVector cyc = hc2::tangent_add(
        rab, hc2::tangent_add(hc2::curvature(b, s, a), hc2::curvature(s, a, b)));
    CHECK(hc2::eucl_norm(cyc.img) < 1e-12);

    // skew-adjointness in the last pair: g(R(a,b)s, w) = -g(R(a,b)w, s)
    double lhs = hc2::riemannian_g(rab, w);
    double rhs = -hc2::riemannian_g(hc2::curvature(a, b, w), s);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("sectional curvature spans exactly [-4, -1]") {
  std::mt19937_64 rng(41);
  ProjPoint p = gen::random_negative(rng);
  TangentVector t = gen::random_unit_tangent(rng, p);
  TangentVector it = hc2::tangent_scale(I, t);
  TangentVector n = hc2::hermitian_normal(t);

  CHECK(hc2::sectional_curvature(t, it) == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(hc2::sectional_curvature(t, n) == doctest::Approx(-1.0).epsilon(1e-12));

  for (int k = 0; k < 100; ++k) {
    ProjPoint q = gen::random_negative(rng);
    TangentVector x = gen::random_unit_tangent(rng, q);
    TangentVector y = gen::random_unit_tangent(rng, q);
    double kap;
    try {
      kap = hc2::sectional_curvature(x, y);
    } catch (const hc2::Error&) {
      continue;  // really dependent draw
    }
    CHECK(kap <= -1.0 + 1e-9);
    CHECK(kap >= -4.0 - 1e-9);
  }

  // really dependent pair has no plane
  CHECK_THROWS_AS(hc2::sectional_curvature(t, hc2::tangent_scale(2.0, t)),
                  hc2::Error);
}

TEST_CASE("sectional curvature is a function of the Kaehler angle") {
  // plane spanned by t and i a t + b n with a^2 + |b|^2 = 1 has curvature
  // -(1 + 3 a^2); the two extremes above are a = 1 and a = 0
  std::mt19937_64 rng(43);
  for (int k = 0; k < 200; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector t = gen::random_unit_tangent(rng, p);
    TangentVector n = hc2::hermitian_normal(t);
    double a = gen::uniform(rng, -1.0, 1.0);
    Complex b = std::polar(std::sqrt(1.0 - a * a), gen::uniform(rng, 0.0, 6.28));
    TangentVector t2 = hc2::tangent_add(hc2::tangent_scale(I * a, t),
                                        hc2::tangent_scale(b, n));
    CHECK(hc2::sectional_curvature(t, t2) ==
          doctest::Approx(-(1.0 + 3.0 * a * a)).epsilon(1e-10));
  }
}

TEST_CASE("curvature of a plane section in closed form") {
  // R(t, t2)t2 = -(1 + 3a^2) t + 3 i a b n for t2 = i a t + b n as above;
  // the same identity drives the classifier's plane decision
  std::mt19937_64 rng(47);
  for (int k = 0; k < 200; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector t = gen::random_unit_tangent(rng, p);
    TangentVector n = hc2::hermitian_normal(t);
    double a = 2.0 * gen::u01(rng) - 1.0;
    Complex b = std::polar(std::sqrt(1.0 - a * a),
                           gen::uniform(rng, 0.0, 6.283185307179586));
    TangentVector t2 = hc2::tangent_add(hc2::tangent_scale(I * a, t),
                                        hc2::tangent_scale(b, n));
    TangentVector got = hc2::curvature(t, t2, t2);
    TangentVector want =
        hc2::tangent_add(hc2::tangent_scale(-(1.0 + 3.0 * a * a), t),
                         hc2::tangent_scale(3.0 * I * a * b, n));
    CHECK(diff_norm(got, want) < 1e-12);
  }
}

TEST_CASE("mixed curvature terms of a three-dimensional span in closed form") {
  // with t2 = e^{i theta} n and t3 = i(a t1 + b t2), |a|^2 + |b|^2 = 1:
  //   R(t1, t2)t3 = -i b t1 + i a t2
  //   R(t1, t3)t1 = 4 i a t1 + i b t2
  // the nonzero right-hand sides are what keeps 3-dimensional subspaces
  // from exponentiating to anything totally geodesic
  std::mt19937_64 rng(53);
  for (int k = 0; k < 200; ++k) {
    ProjPoint p = gen::random_negative(rng);
    TangentVector t1 = gen::random_unit_tangent(rng, p);
    TangentVector t2 = hc2::tangent_scale(
        std::polar(1.0, gen::uniform(rng, 0.0, 6.283185307179586)),
        hc2::hermitian_normal(t1));
    double a = 2.0 * gen::u01(rng) - 1.0;
    double b = std::sqrt(1.0 - a * a);
    TangentVector t3 = hc2::tangent_scale(
        I, hc2::tangent_add(hc2::tangent_scale(a, t1),
                            hc2::tangent_scale(b, t2)));

    TangentVector first = hc2::curvature(t1, t2, t3);
    TangentVector first_want = hc2::tangent_add(
        hc2::tangent_scale(-I * b, t1), hc2::tangent_scale(I * a, t2));
    CHECK(diff_norm(first, first_want) < 1e-12);

    TangentVector second = hc2::curvature(t1, t3, t1);
    TangentVector second_want = hc2::tangent_add(
        hc2::tangent_scale(4.0 * I * a, t1), hc2::tangent_scale(I * b, t2));
    CHECK(diff_norm(second, second_want) < 1e-12);
  }
}
