#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quat.hpp"
#include "upoly.hpp"

namespace qnull {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with x1 > x2 > ...
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0U);
    unsigned db = std::accumulate(b.begin(), b.end(), 0U);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Polynomial in central commuting indeterminates x1..xn over H_Q. Coefficients
/// sit on the left of monomials; zero coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Exponents, Quat, GrlexLess>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Quat& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  /// x_{index+1}, zero based.
  static MPoly variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InvalidInput("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    MPoly p(nvars);
    p.add_term(e, Quat(1));
    return p;
  }
  static MPoly from_upoly(const UPoly& u) {
    MPoly p(1);
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) p.add_term({static_cast<unsigned>(k)}, u.coeffs()[k]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Quat constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Quat() : it->second;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }
  static unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

  UPoly to_upoly() const {
    if (nvars_ != 1) throw InvalidInput("only univariate polynomials convert to UPoly");
    std::vector<Quat> v;
    for (const auto& [e, c] : terms_) {
      if (v.size() <= e[0]) v.resize(e[0] + 1);
      v[e[0]] = c;
    }
    return UPoly(std::move(v));
  }

  void add_term(const Exponents& e, const Quat& c) {
    if (e.size() != nvars_) throw InvalidInput("exponent vector length does not match nvars");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return MPoly(a.nvars_) - a; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same(b);
    MPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  /// Left scalar multiple.
  friend MPoly operator*(const Quat& s, const MPoly& p) { return MPoly::constant(p.nvars_, s) * p; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Text form, highest grlex term first, variables written x1..xn.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  void check_same(const MPoly& o) const {
    if (o.nvars_ != nvars_)
      throw InvalidInput("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_) +
                         " variables");
  }

  std::size_t nvars_;
  Terms terms_;
};

inline MPoly pow(const MPoly& p, unsigned e) {
  MPoly r = MPoly::constant(p.nvars(), 1);
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

/// Point of D^n_c: pairwise commuting components, checked at construction.
class CommutingPoint {
 public:
  explicit CommutingPoint(std::vector<Quat> components) : c_(std::move(components)) {
    for (std::size_t a = 0; a < c_.size(); ++a)
      for (std::size_t b = a + 1; b < c_.size(); ++b)
        if (!commutator(c_[a], c_[b]).is_zero())
          throw InvalidInput("components " + c_[a].str() + " and " + c_[b].str() + " do not commute");
  }

  const std::vector<Quat>& components() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const Quat& operator[](std::size_t i) const { return c_[i]; }
  friend bool operator==(const CommutingPoint&, const CommutingPoint&) = default;

 private:
  std::vector<Quat> c_;
};

namespace detail {

inline Quat monomial_value(const Exponents& e, const CommutingPoint& pt, bool reversed) {
  Quat v(1);
  for (std::size_t s = 0; s < e.size(); ++s) {
    std::size_t var = reversed ? e.size() - 1 - s : s;
    v = v * pow(pt[var], e[var]);
  }
  return v;
}

inline Quat eval_c_ordered(const MPoly& p, const CommutingPoint& pt, bool reversed) {
  if (p.nvars() != pt.size()) throw InvalidInput("point dimension does not match nvars");
  Quat out;
  for (const auto& [e, c] : p.terms()) out += c * monomial_value(e, pt, reversed);
  return out;
}

}  // namespace detail

/// Left evaluation at a commuting point: sum c_e a^e.
inline Quat eval_c(const MPoly& p, const CommutingPoint& pt) { return detail::eval_c_ordered(p, pt, false); }

/// Same value with the monomial factors multiplied in reverse variable order.
inline Quat eval_c_reversed(const MPoly& p, const CommutingPoint& pt) {
  return detail::eval_c_ordered(p, pt, true);
}

/// The generator x_{i+1} - a_{i+1}.
inline MPoly point_generator(const CommutingPoint& pt, std::size_t i) {
  const std::size_t n = pt.size();
  return MPoly::variable(n, i) - MPoly::constant(n, pt[i]);
}

struct PointReduction {
  Quat remainder;
  std::vector<MPoly> quotients;
};

/// p = sum_i q_i (x_i - a_i) + r, dividing on the right one variable at a time.
/// Uses c x^e = c (sum_k a^k x^(e-1-k)) (x - a) + c a^e per variable.
inline PointReduction reduce_mod_point(const MPoly& p, const CommutingPoint& pt) {
  const std::size_t n = p.nvars();
  if (n != pt.size()) throw InvalidInput("point dimension does not match nvars");
  PointReduction out;
  MPoly cur = p;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly q(n), rest(n);
    for (const auto& [e, c] : cur.terms()) {
      const unsigned deg = e[i];
      if (deg == 0) {
        rest.add_term(e, c);
        continue;
      }
      Quat power(1);
      for (unsigned k = 0; k < deg; ++k) {
        Exponents qe = e;
        qe[i] = deg - 1 - k;
        q.add_term(qe, c * power);
        power = power * pt[i];
      }
      Exponents re = e;
      re[i] = 0;
      rest.add_term(re, c * power);
    }
    out.quotients.push_back(std::move(q));
    cur = std::move(rest);
  }
  if (!cur.is_constant()) throw InternalError("point reduction left a nonconstant remainder");
  out.remainder = cur.constant_term();
  return out;
}

inline bool in_point_ideal(const MPoly& p, const CommutingPoint& pt) {
  return reduce_mod_point(p, pt).remainder.is_zero();
}

/// Generators of the left ideal sum R_n g.
struct LeftIdealGens {
  std::vector<MPoly> gens;
  std::size_t nvars = 0;

  LeftIdealGens(std::vector<MPoly> g, std::size_t n) : gens(std::move(g)), nvars(n) {
    if (gens.empty()) throw InvalidInput("a left ideal needs at least one generator");
    for (const auto& p : gens)
      if (p.nvars() != nvars) throw InvalidInput("ideal generators with mismatched nvars");
  }
  friend bool operator==(const LeftIdealGens&, const LeftIdealGens&) = default;
};

/// R_n (x_1 - a_1) + ... + R_n (x_n - a_n).
inline LeftIdealGens point_ideal(const CommutingPoint& pt) {
  if (pt.size() == 0) throw InvalidInput("point ideal needs at least one variable");
  std::vector<MPoly> g;
  for (std::size_t i = 0; i < pt.size(); ++i) g.push_back(point_generator(pt, i));
  return {std::move(g), pt.size()};
}

inline std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      mono += "x" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
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
      term = "(" + c.str() + ")" + mono;
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace qnull
