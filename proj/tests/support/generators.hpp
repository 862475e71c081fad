#pragma once

// Seeded draws shared by the test binaries.  Everything goes through
// mt19937_64 and ldexp so a seed pins the exact sequence on every platform;
// none of the std distributions are used (their streams vary by library).

#include <cmath>
#include <random>

#include "hc2/hermitian.hpp"
#include "hc2/tangent.hpp"

namespace gen {

inline double u01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * u01(rng);
}

inline hc2::Complex rand_complex(std::mt19937_64& rng, double radius) {
  return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

// Negative point with some margin from the boundary so pairings stay
// well conditioned.
inline hc2::ProjPoint random_negative(std::mt19937_64& rng,
                                      const hc2::Tolerance& tol = {}) {
  for (;;) {
    hc2::HVector x{};
    x[0] = 1.0;
    x[1] = rand_complex(rng, 0.55);
    x[2] = rand_complex(rng, 0.55);
    if (hc2::herm_self(x) < -0.2) return hc2::canonicalize(x, tol);
  }
}

inline hc2::TangentVector random_unit_tangent(std::mt19937_64& rng,
                                              const hc2::ProjPoint& base,
                                              const hc2::Tolerance& tol = {}) {
  for (;;) {
    hc2::HVector raw{};
    raw[0] = rand_complex(rng, 1.0);
    raw[1] = rand_complex(rng, 1.0);
    raw[2] = rand_complex(rng, 1.0);
    hc2::TangentVector t = hc2::project_tangent(base, raw, tol);
    double n = hc2::tangent_norm(t);
    if (n > 0.1) return hc2::tangent_scale(1.0 / n, t);
  }
}

// Form-preserving map as its three columns: a perturbed identity pushed
// through orthonormalize until the signature comes out (-,+,+).
inline std::array<hc2::HVector, 3> random_isometry(
    std::mt19937_64& rng, const hc2::Tolerance& tol = {}) {
  for (;;) {
    std::array<hc2::HVector, 3> cols{};
    for (std::size_t k = 0; k < 3; ++k) {
      cols[k][k] = 1.0;
      for (std::size_t c = 0; c < 3; ++c) cols[k][c] += rand_complex(rng, 0.4);
    }
    try {
      auto ortho = hc2::orthonormalize(
          std::span<const hc2::HVector>(cols.data(), 3), tol);
      if (ortho.size() != 3) continue;
      if (hc2::herm_self(ortho[0]) > 0.0 || hc2::herm_self(ortho[1]) < 0.0 ||
          hc2::herm_self(ortho[2]) < 0.0)
        continue;
      return {ortho[0], ortho[1], ortho[2]};
    } catch (const hc2::Error&) {
      continue;
    }
  }
}

inline hc2::HVector apply_isometry(const std::array<hc2::HVector, 3>& iso,
                                   const hc2::HVector& x) {
  return x[0] * iso[0] + x[1] * iso[1] + x[2] * iso[2];
}

inline hc2::HVector hv(hc2::Complex a, hc2::Complex b, hc2::Complex c) {
  hc2::HVector v{};
  v[0] = a;
  v[1] = b;
  v[2] = c;
  return v;
}

}  // namespace gen
