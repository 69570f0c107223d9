#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "linalg.hpp"
#include "mpoly.hpp"

namespace qnull {

/// Cofactors h[k][j] with (a p)^N = sum_k sum_j h[k][j] g_j (a p)^k, k = 0..N.
struct RabinowitschCertificate {
  unsigned N = 0;
  std::vector<std::vector<MPoly>> cofactors;
};

/// Left-hand side minus right-hand side of the certificate identity.
inline MPoly certificate_defect(const LeftIdealGens& ideal, const MPoly& p, const Quat& a,
                                const RabinowitschCertificate& cert) {
  const MPoly ap = a * p;
  MPoly rhs(ideal.nvars);
  MPoly power = MPoly::constant(ideal.nvars, 1);
  for (unsigned k = 0; k <= cert.N; ++k) {
    if (k < cert.cofactors.size())
      for (std::size_t j = 0; j < ideal.gens.size() && j < cert.cofactors[k].size(); ++j)
        rhs += cert.cofactors[k][j] * ideal.gens[j] * power;
    power = power * ap;
  }
  return pow(ap, cert.N) - rhs;
}

inline bool verify_certificate(const LeftIdealGens& ideal, const MPoly& p, const Quat& a,
                               const RabinowitschCertificate& cert) {
  return certificate_defect(ideal, p, a, cert).is_zero();
}

/// All exponent vectors of total degree <= bound, in grlex order.
inline std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned bound) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[var] = d;
      self(self, var + 1, left - d);
    }
    e[var] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

/// Decides whether (a p)^N lies in I + I(ap) + ... + I(ap)^N with cofactors of
/// total degree <= degbound, by exact linear algebra on monomial coordinates
/// (four rational unknowns per cofactor coefficient).
inline std::optional<RabinowitschCertificate> rabinowitsch_check(const LeftIdealGens& ideal, const MPoly& p,
                                                                const Quat& a, unsigned N, unsigned degbound) {
  if (N < 1) throw InvalidInput("N must be at least 1");
  if (p.nvars() != ideal.nvars) throw InvalidInput("polynomial and ideal have different nvars");
  const std::size_t n = ideal.nvars;
  const MPoly ap = a * p;
  std::vector<MPoly> ap_powers{MPoly::constant(n, 1)};
  for (unsigned k = 1; k <= N; ++k) ap_powers.push_back(ap_powers.back() * ap);
  const MPoly& target = ap_powers[N];

  const auto monos = monomials_up_to(n, degbound);
  struct Column {
    unsigned k;
    std::size_t gen, mono;
    int unit;
  };
  std::vector<Column> layout;
  std::vector<MPoly> columns;
  for (unsigned k = 0; k <= N; ++k)
    for (std::size_t j = 0; j < ideal.gens.size(); ++j) {
      MPoly tail = ideal.gens[j] * ap_powers[k];
      for (std::size_t mi = 0; mi < monos.size(); ++mi)
        for (int t = 0; t < 4; ++t) {
          MPoly h(n);
          h.add_term(monos[mi], Quat::unit(t));
          columns.push_back(h * tail);
          layout.push_back({k, j, mi, t});
        }
    }

  std::map<Exponents, std::size_t, GrlexLess> row_of;
  auto index = [&](const MPoly& q) {
    for (const auto& [e, c] : q.terms()) row_of.emplace(e, 0);
  };
  for (const auto& c : columns) index(c);
  index(target);
  std::size_t next = 0;
  for (auto& [e, r] : row_of) r = next++;

  RatMatrix m(4 * row_of.size(), columns.size());
  for (std::size_t col = 0; col < columns.size(); ++col)
    for (const auto& [e, c] : columns[col].terms())
      for (int t = 0; t < 4; ++t) m(4 * row_of[e] + t, col) = c[t];
  RatVector rhs(4 * row_of.size());
  for (const auto& [e, c] : target.terms())
    for (int t = 0; t < 4; ++t) rhs[4 * row_of[e] + t] = c[t];

  auto sol = linear_solve_rat(m, rhs);
  if (!sol.particular) return std::nullopt;

  RabinowitschCertificate cert;
  cert.N = N;
  cert.cofactors.assign(N + 1, std::vector<MPoly>(ideal.gens.size(), MPoly(n)));
  for (std::size_t col = 0; col < layout.size(); ++col) {
    const Rat& v = (*sol.particular)[col];
    if (v.is_zero()) continue;
    const auto& l = layout[col];
    cert.cofactors[l.k][l.gen].add_term(monos[l.mono], v * Quat::unit(l.unit));
  }
  if (!verify_certificate(ideal, p, a, cert)) throw InternalError("certificate does not reconstruct");
  return cert;
}

/// Smallest N in 1..maxN admitting a certificate within the degree bound.
inline std::optional<RabinowitschCertificate> find_certificate(const LeftIdealGens& ideal, const MPoly& p,
                                                              const Quat& a, unsigned maxN, unsigned degbound) {
  for (unsigned N = 1; N <= maxN; ++N)
    if (auto cert = rabinowitsch_check(ideal, p, a, N, degbound)) return cert;
  return std::nullopt;
}

}  // namespace qnull
