#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "centralizer.hpp"
#include "quat.hpp"

namespace qnull {

/// Polynomial over H_Q in a central indeterminate x, coefficients low to high.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Quat> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<Quat> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const Quat& c) { return UPoly({c}); }
  /// x - a.
  static UPoly linear(const Quat& a) { return UPoly({-a, Quat(1)}); }
  static UPoly monomial(const Quat& c, std::size_t deg) {
    std::vector<Quat> v(deg + 1);
    v[deg] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Quat>& coeffs() const { return c_; }
  Quat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Quat(); }
  const Quat& lead() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == Quat(1); }

  /// inv(lead) * p, which generates the same left ideal.
  UPoly monic() const {
    Quat l = lead().inv();
    std::vector<Quat> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(l * c);
    return UPoly(std::move(v));
  }

  /// Coefficient-wise s p s^-1.
  UPoly conjugated_by(const Quat& s) const {
    Quat si = s.inv();
    std::vector<Quat> v;
    for (const auto& c : c_) v.push_back(s * c * si);
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly& p, const UPoly& q) {
    std::vector<Quat> v(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = p.coeff(k) + q.coeff(k);
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& p) {
    std::vector<Quat> v;
    for (const auto& c : p.c_) v.push_back(-c);
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }
  friend UPoly operator*(const UPoly& p, const UPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Quat> v(p.c_.size() + q.c_.size() - 1);
    for (std::size_t m = 0; m < p.c_.size(); ++m) {
      if (p.c_[m].is_zero()) continue;
      for (std::size_t n = 0; n < q.c_.size(); ++n) v[m + n] += p.c_[m] * q.c_[n];
    }
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.c_ == q.c_; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Quat> c_;
};

inline UPoly pow(const UPoly& p, unsigned e) {
  UPoly r = UPoly::constant(1);
  for (unsigned n = 0; n < e; ++n) r = r * p;
  return r;
}

/// sum a_k a^k, coefficients on the left.
inline Quat eval_left(const UPoly& p, const Quat& a) {
  Quat r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = r * a + *it;
  return r;
}

/// sum a^k a_k, coefficients on the right.
inline Quat eval_right(const UPoly& p, const Quat& a) {
  Quat r;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) r = a * r + *it;
  return r;
}

struct DivResult {
  UPoly quotient;
  UPoly remainder;
};

/// p = q d + r with deg r < deg d.
inline DivResult divide_right(const UPoly& p, const UPoly& d) {
  if (d.is_zero()) throw DivisionByZero("right division by the zero polynomial");
  Quat lead_inv = d.lead().inv();
  std::vector<Quat> q(std::max(p.degree() - d.degree() + 1, 0));
  UPoly r = p;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - d.degree());
    Quat c = r.lead() * lead_inv;
    q[shift] = c;
    r = r - UPoly::monomial(c, shift) * d;
  }
  return {UPoly(std::move(q)), r};
}

/// p = d q + r with deg r < deg d.
inline DivResult divide_left(const UPoly& p, const UPoly& d) {
  if (d.is_zero()) throw DivisionByZero("left division by the zero polynomial");
  Quat lead_inv = d.lead().inv();
  std::vector<Quat> q(std::max(p.degree() - d.degree() + 1, 0));
  UPoly r = p;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - d.degree());
    Quat c = lead_inv * r.lead();
    q[shift] = c;
    r = r - d * UPoly::monomial(c, shift);
  }
  return {UPoly(std::move(q)), r};
}

/// Monic generator of D[x]p + D[x]q.
inline UPoly gcrd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidInput("gcrd of two zero polynomials");
  UPoly a = p, b = q;
  while (!b.is_zero()) {
    UPoly r = divide_right(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

inline void put_poly_coords(RatMatrix& m, std::size_t col, const UPoly& p, int sign) {
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    for (int t = 0; t < 4; ++t) m(4 * k + t, col) = sign > 0 ? p.coeffs()[k][t] : -p.coeffs()[k][t];
}

}  // namespace detail

/// Monic generator of D[x]p ∩ D[x]q, found as the smallest-degree solution of
/// u p = v q over rational coordinates.
inline UPoly lclm(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("lclm of a zero polynomial");
  const int dp = p.degree(), dq = q.degree();
  for (int n = std::max(dp, dq); n <= dp + dq; ++n) {
    const int du = n - dp, dv = n - dq;
    // Unknowns: coefficients of u (4 each) then of v; columns are e_t x^k p and -e_t x^k q.
    RatMatrix m(4 * static_cast<std::size_t>(n + 1), 4 * static_cast<std::size_t>(du + 1 + dv + 1));
    std::size_t col = 0;
    for (int k = 0; k <= du; ++k)
      for (int t = 0; t < 4; ++t) detail::put_poly_coords(m, col++, UPoly::monomial(Quat::unit(t), k) * p, 1);
    for (int k = 0; k <= dv; ++k)
      for (int t = 0; t < 4; ++t) detail::put_poly_coords(m, col++, UPoly::monomial(Quat::unit(t), k) * q, -1);
    auto ns = nullspace(m);
    if (ns.empty()) continue;
    std::vector<Quat> u;
    for (int k = 0; k <= du; ++k) {
      const auto& v = ns.front();
      u.emplace_back(v[4 * k], v[4 * k + 1], v[4 * k + 2], v[4 * k + 3]);
    }
    UPoly prod = UPoly(std::move(u)) * p;
    if (prod.degree() != n) throw InternalError("lclm solution has unexpected degree");
    return prod.monic();
  }
  throw InternalError("lclm: no common left multiple up to degree deg p + deg q");
}

/// Coefficient-wise conjugate.
inline UPoly conj_poly(const UPoly& p) {
  std::vector<Quat> v;
  for (const auto& c : p.coeffs()) v.push_back(c.conj());
  return UPoly(std::move(v));
}

/// p * conj_poly(p); all of its coefficients are rational.
inline UPoly companion(const UPoly& p) { return p * conj_poly(p); }

/// Whether every coefficient lies in `c`.
inline bool coefficients_in(const UPoly& p, const CentralizerDesc& c) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [&](const Quat& q) { return c.contains(q); });
}

inline std::string UPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t n = c_.size(); n-- > 0;) {
    const Quat& c = c_[n];
    if (c.is_zero()) continue;
    std::string mono = n == 0 ? "" : (n == 1 ? "x" : "x^" + std::to_string(n));
    int nonzero = 0;
    for (int t = 0; t < 4; ++t) nonzero += c[t].is_zero() ? 0 : 1;
    std::string term;
    bool negative = false;
    if (nonzero == 1) {
      std::string s = c.str();
      if (s.front() == '-') {
        negative = true;
        s.erase(0, 1);
      }
      if (s == "1" && !mono.empty()) s.clear();
      term = s + mono;
    } else {
      term = mono.empty() ? c.str() : "(" + c.str() + ")" + mono;
      if (mono.empty() && !out.empty()) term = "(" + term + ")";
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace qnull
