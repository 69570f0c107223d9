#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "module.hpp"
#include "mpoly.hpp"
#include "upoly.hpp"

namespace qnull {

/// Seeded generator of small-height exact values for property tests.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// num/den with |num| <= height and 1 <= den <= height; zero with probability `zero_p`.
  Rat rational(long height = 10, double zero_p = 0.0) {
    if (zero_p > 0 && coin(zero_p)) return {};
    return {mpz_class(integer(-height, height)), mpz_class(integer(1, height))};
  }

  Quat quat(long height = 10, double zero_p = 0.25) {
    return {rational(height, zero_p), rational(height, zero_p), rational(height, zero_p), rational(height, zero_p)};
  }
  Quat nonzero_quat(long height = 10, double zero_p = 0.25) {
    for (;;) {
      Quat q = quat(height, zero_p);
      if (!q.is_zero()) return q;
    }
  }

  /// A quaternion drawn from a "structured" mix: rational, inside Q(u) for a
  /// canonical u, or generic. Exercises the degenerate centralizer kinds.
  Quat structured_quat(long height = 10) {
    switch (integer(0, 5)) {
      case 0: return Quat(rational(height));
      case 1: return {rational(height), rational(height), 0, 0};
      case 2: return {rational(height), 0, rational(height), 0};
      default: return quat(height);
    }
  }

  /// Polynomial of exact degree `deg`.
  UPoly upoly(int deg, long height = 10) {
    std::vector<Quat> c;
    for (int k = 0; k < deg; ++k) c.push_back(quat(height));
    c.push_back(nonzero_quat(height));
    return UPoly(std::move(c));
  }

  /// (f_1(q), ..., f_n(q)) for one random q and random rational polynomials f_i,
  /// so the components commute by construction.
  CommutingPoint commuting_point(std::size_t n, long height = 5) {
    Quat q = quat(height);
    std::vector<Quat> comps;
    for (std::size_t i = 0; i < n; ++i) {
      int deg = static_cast<int>(integer(0, 2));
      Quat v, power(1);
      for (int k = 0; k <= deg; ++k) {
        v += rational(height) * power;
        power = power * q;
      }
      comps.push_back(v);
    }
    return CommutingPoint(std::move(comps));
  }

  MPoly mpoly(std::size_t nvars, unsigned max_deg, std::size_t terms, long height = 10) {
    MPoly p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
      Exponents e(nvars, 0);
      unsigned budget = static_cast<unsigned>(integer(0, max_deg));
      for (unsigned d = 0; d < budget && nvars > 0; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
      p.add_term(e, quat(height));
    }
    return p;
  }

  QMatrix invertible_matrix(std::size_t m, long height = 3) {
    for (;;) {
      QMatrix a(m, m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) a(r, c) = quat(height, 0.3);
      if (a.inverse()) return a;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Direct sum of m one-dimensional modules at commuting points whose components
/// lie in Q(i), conjugated by a random invertible matrix S (A_i -> S D_i S^-1).
inline ModulePresentation conjugated_diagonal_module(RandomSource& rs, std::size_t n, std::size_t m,
                                                     long height = 5) {
  std::vector<std::vector<Quat>> diag(n, std::vector<Quat>(m));
  for (std::size_t block = 0; block < m; ++block)
    for (std::size_t i = 0; i < n; ++i) diag[i][block] = Quat(rs.rational(height), rs.rational(height), 0, 0);
  QMatrix s = rs.invertible_matrix(m);
  QMatrix s_inv = *s.inverse();
  ModulePresentation mod;
  mod.m = m;
  for (std::size_t i = 0; i < n; ++i) mod.mats.push_back(s * QMatrix::diagonal(diag[i]) * s_inv);
  return mod;
}

}  // namespace qnull
