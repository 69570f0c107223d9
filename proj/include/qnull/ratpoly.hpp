#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "rat.hpp"

namespace qnull {

/// Dense polynomial over Q, coefficients low to high, trimmed.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  RatPoly(std::initializer_list<Rat> c) : c_(c) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }
  const Rat& lead() const { return c_.back(); }

  RatPoly monic() const {
    if (is_zero()) return {};
    Rat l = lead().inverse();
    std::vector<Rat> v;
    for (const auto& c : c_) v.push_back(c * l);
    return RatPoly(std::move(v));
  }
  RatPoly derivative() const {
    std::vector<Rat> v;
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(Rat(static_cast<long>(k)) * c_[k]);
    return RatPoly(std::move(v));
  }
  Rat operator()(const Rat& x) const {
    Rat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend RatPoly operator-(const RatPoly& p, const RatPoly& q) {
    std::vector<Rat> v(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k) - q.coeff(k);
    return RatPoly(std::move(v));
  }
  friend RatPoly operator*(const RatPoly& p, const RatPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rat> v(p.c_.size() + q.c_.size() - 1);
    for (std::size_t m = 0; m < p.c_.size(); ++m)
      for (std::size_t n = 0; n < q.c_.size(); ++n) v[m + n] += p.c_[m] * q.c_[n];
    return RatPoly(std::move(v));
  }
  friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.c_ == q.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Quotient and remainder over Q.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& p, const RatPoly& d) {
  if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
  std::vector<Rat> q(std::max(p.degree() - d.degree() + 1, 0));
  RatPoly r = p;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - d.degree());
    Rat c = r.lead() / d.lead();
    q[shift] = c;
    std::vector<Rat> term(shift + 1);
    term[shift] = c;
    r = r - RatPoly(std::move(term)) * d;
  }
  return {RatPoly(std::move(q)), r};
}

/// Monic gcd.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic squarefree part f / gcd(f, f').
inline RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() < 1) return f.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

/// Rational linear and definite quadratic factors of a squarefree polynomial.
struct RationalFactors {
  std::vector<Rat> roots;                      // rational roots t
  std::vector<std::pair<Rat, Rat>> quadratics;  // (t, n) for x^2 - t x + n with t^2 < 4n
  RatPoly remainder;                           // monic cofactor not split by the above
};

namespace detail {

inline constexpr mp_bitcnt_t kRootPrecision = 1024;

struct Cx {
  mpf_class re{0, kRootPrecision}, im{0, kRootPrecision};
};
inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cx operator/(const Cx& a, const Cx& b) {
  mpf_class d(b.re * b.re + b.im * b.im, kRootPrecision);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline mpf_class abs2(const Cx& a) { return mpf_class(a.re * a.re + a.im * a.im, kRootPrecision); }

/// Durand-Kerner iteration for the complex roots of a monic squarefree polynomial.
inline std::vector<Cx> complex_roots(const RatPoly& monic) {
  const int d = monic.degree();
  std::vector<mpf_class> c;
  for (const auto& r : monic.coeffs()) c.emplace_back(r.raw(), kRootPrecision);
  double radius = 1.0;
  for (int k = 0; k < d; ++k) radius = std::max(radius, std::pow(std::fabs(monic.coeff(k).to_double()), 1.0 / (d - k)));
  Cx w, z;
  w.re = 0.4;
  w.im = 0.9;
  z.re = radius;
  std::vector<Cx> roots;
  for (int k = 0; k < d; ++k) {
    z = z * w;
    roots.push_back(z);
  }
  auto eval = [&](const Cx& x) {
    Cx r;
    for (int k = d; k >= 0; --k) {
      r = r * x;
      r.re += c[k];
    }
    return r;
  };
  mpf_class tol(1, kRootPrecision);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), kRootPrecision - 64);
  for (int iter = 0; iter < 5000; ++iter) {
    mpf_class change(0, kRootPrecision);
    for (int k = 0; k < d; ++k) {
      Cx denom;
      denom.re = 1;
      for (int j = 0; j < d; ++j)
        if (j != k) denom = denom * (roots[k] - roots[j]);
      Cx step = eval(roots[k]) / denom;
      roots[k] = roots[k] - step;
      mpf_class s = abs2(step);
      if (s > change) change = s;
    }
    if (change < tol * tol) break;
  }
  return roots;
}

/// Continued-fraction reconstruction of a rational close to x.
inline std::optional<Rat> rationalize(const mpf_class& x) {
  mpf_class tol(1, kRootPrecision);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), 600);
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  mpf_class rest = x;
  for (int step = 0; step < 400; ++step) {
    mpf_class fl(0, kRootPrecision);
    mpf_floor(fl.get_mpf_t(), rest.get_mpf_t());
    mpz_class a(fl);
    mpz_class h2 = a * h0 + h1, k2 = a * k0 + k1;
    h1 = h0; h0 = h2; k1 = k0; k0 = k2;
    mpf_class approx(h0, kRootPrecision);
    approx /= mpf_class(k0, kRootPrecision);
    mpf_class err = abs(mpf_class(x - approx, kRootPrecision));
    if (err < tol) return Rat(h0, k0);
    if (mpz_sizeinbase(k0.get_mpz_t(), 2) > 256) return std::nullopt;
    mpf_class frac = rest - fl;
    if (frac == 0) return Rat(h0, k0);
    rest = mpf_class(1, kRootPrecision) / frac;
  }
  return std::nullopt;
}

inline bool try_split(RatPoly& f, const RatPoly& factor) {
  auto [q, r] = divmod(f, factor);
  if (!r.is_zero()) return false;
  f = q.monic();
  return true;
}

inline std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  return Rat(mpz_class(sqrt(n)), mpz_class(sqrt(d)));
}

}  // namespace detail

/// Splits off every rational root and every rational irreducible quadratic with
/// negative discriminant. Candidates come from high-precision numerical roots and
/// are accepted only after exact division, so the output is always sound; whatever
/// could not be split stays in `remainder`.
inline RationalFactors rational_factors(const RatPoly& squarefree) {
  RationalFactors out;
  RatPoly f = squarefree.monic();
  if (f.degree() > 2) {
    auto roots = detail::complex_roots(f);
    mpf_class eps(1, detail::kRootPrecision);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), 400);
    for (const auto& z : roots) {
      if (f.degree() <= 2) break;
      if (abs(z.im) < eps) {
        auto t = detail::rationalize(z.re);
        if (t && detail::try_split(f, RatPoly{-*t, 1})) out.roots.push_back(*t);
      } else if (z.im > 0) {
        auto s = detail::rationalize(mpf_class(2 * z.re, detail::kRootPrecision));
        auto n = detail::rationalize(detail::abs2(z));
        if (s && n && detail::try_split(f, RatPoly{*n, -*s, 1})) out.quadratics.emplace_back(*s, *n);
      }
    }
  }
  if (f.degree() == 1) {
    out.roots.push_back(-f.coeff(0));
    f = RatPoly{1};
  } else if (f.degree() == 2) {
    Rat t = -f.coeff(1), n = f.coeff(0);
    Rat disc = t * t - Rat(4) * n;
    if (disc.sign() < 0) {
      out.quadratics.emplace_back(t, n);
      f = RatPoly{1};
    } else if (auto sq = detail::rational_sqrt(disc)) {
      out.roots.push_back((t + *sq) / Rat(2));
      out.roots.push_back((t - *sq) / Rat(2));
      f = RatPoly{1};
    }
  }
  out.remainder = f;
  return out;
}

}  // namespace qnull
