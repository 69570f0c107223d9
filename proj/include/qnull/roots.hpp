#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centralizer.hpp"
#include "ratpoly.hpp"
#include "upoly.hpp"

namespace qnull {

/// A conjugacy class of right roots: a single root, or a whole sphere
/// {a : a^2 - t a + n = 0} with t^2 < 4n.
struct RootClass {
  enum class Kind { Isolated, Sphere };
  Kind kind;
  Quat root;  // Isolated only
  Rat t, n;   // Sphere only

  static RootClass isolated(Quat a) { return {Kind::Isolated, std::move(a), {}, {}}; }
  static RootClass sphere(Rat t, Rat n) { return {Kind::Sphere, {}, std::move(t), std::move(n)}; }

  std::string str() const {
    if (kind == Kind::Isolated) return "Isolated(" + root.str() + ")";
    return "Sphere(" + t.str() + ", " + n.str() + ")";
  }
  friend bool operator==(const RootClass&, const RootClass&) = default;
};

enum class RootStatus { Complete, PossiblyIncomplete };

struct RootReport {
  std::vector<RootClass> classes;
  RootStatus status = RootStatus::Complete;
};

/// Rational coefficients of a polynomial known to be central, e.g. a companion.
inline RatPoly to_rat_poly(const UPoly& p) {
  std::vector<Rat> v;
  for (const auto& c : p.coeffs()) {
    if (!c.is_real()) throw InternalError("expected central coefficients, got " + c.str());
    v.push_back(c.w());
  }
  return RatPoly(std::move(v));
}

inline UPoly from_rat_poly(const RatPoly& p) {
  std::vector<Quat> v;
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return UPoly(std::move(v));
}

/// Right roots by way of the central companion polynomial p * conj_poly(p).
///
/// Each rational root t of the companion is a right root of p. For each
/// definite quadratic factor x^2 - t x + n, the remainder alpha x + beta of p
/// modulo that factor is zero when the whole sphere consists of roots, and
/// otherwise the class holds the single root -alpha^-1 beta. Factors of the
/// companion that do not split over Q make the report PossiblyIncomplete.
inline RootReport right_roots(const UPoly& p) {
  if (p.degree() < 1) throw InvalidInput("right_roots needs a nonconstant polynomial");
  RatPoly comp = to_rat_poly(companion(p));
  RationalFactors facs = rational_factors(squarefree_part(comp));

  RootReport rep;
  for (const auto& t : facs.roots) {
    if (!eval_left(p, Quat(t)).is_zero()) throw InternalError("companion root " + t.str() + " is not a root");
    rep.classes.push_back(RootClass::isolated(Quat(t)));
  }
  for (const auto& [t, n] : facs.quadratics) {
    UPoly quad{Quat(n), Quat(-t), Quat(1)};
    UPoly rem = divide_right(p, quad).remainder;
    Quat alpha = rem.coeff(1), beta = rem.coeff(0);
    if (alpha.is_zero() && beta.is_zero()) {
      rep.classes.push_back(RootClass::sphere(t, n));
      continue;
    }
    if (alpha.is_zero()) throw InternalError("companion factor without a root in its class");
    Quat a = -(alpha.inv() * beta);
    if (!eval_left(p, a).is_zero() || !eval_left(quad, a).is_zero())
      throw InternalError("class root candidate " + a.str() + " failed verification");
    rep.classes.push_back(RootClass::isolated(a));
  }
  if (facs.remainder.degree() > 0) rep.status = RootStatus::PossiblyIncomplete;
  return rep;
}

namespace detail {

inline bool excluded_by_three_squares(mpz_class n) {
  if (n == 0) return false;
  while (mpz_divisible_ui_p(n.get_mpz_t(), 4)) n /= 4;
  return mpz_fdiv_ui(n.get_mpz_t(), 8) == 7;
}

}  // namespace detail

/// A rational quaternion on the sphere a^2 - t a + n = 0, if one exists and the
/// bounded search finds it.
inline std::optional<Quat> sphere_point(const Rat& t, const Rat& n, long max_steps = 2000000) {
  Rat s = n - t * t / Rat(4);
  if (s.sign() <= 0) return std::nullopt;
  // Integer points of X^2 + Y^2 + Z^2 = num * den give s = (X^2+Y^2+Z^2) / den^2.
  mpz_class target = s.num() * s.den();
  if (detail::excluded_by_three_squares(target)) return std::nullopt;
  long steps = 0;
  mpz_class x = sqrt(target);
  for (; x >= 0; --x) {
    mpz_class rest = target - x * x;
    mpz_class y = sqrt(rest);
    for (; 2 * y * y >= rest; --y) {
      if (++steps > max_steps) return std::nullopt;
      mpz_class zz = rest - y * y;
      if (mpz_perfect_square_p(zz.get_mpz_t())) {
        mpz_class z = sqrt(zz);
        return Quat(t / Rat(2), Rat(x, s.den()), Rat(y, s.den()), Rat(z, s.den()));
      }
      if (y == 0) break;
    }
  }
  return std::nullopt;
}

/// Some element of the class, for use as a representative.
inline std::optional<Quat> representative(const RootClass& rc) {
  if (rc.kind == RootClass::Kind::Isolated) return rc.root;
  return sphere_point(rc.t, rc.n);
}

/// A left root of p (p_r(a) = 0) lying in `within`, if one can be found over H_Q.
/// Left roots of p are the conjugates of the right roots of conj_poly(p).
inline std::optional<Quat> left_root_in(const UPoly& p, const CentralizerDesc& within) {
  RootReport rep = right_roots(conj_poly(p));
  for (const auto& rc : rep.classes) {
    std::optional<Quat> cand;
    if (rc.kind == RootClass::Kind::Isolated) {
      cand = rc.root.conj();
      if (!within.contains(*cand)) cand.reset();
    } else if (within.kind() == CentralizerDesc::Kind::FullRing) {
      cand = sphere_point(rc.t, rc.n);
    } else if (within.kind() == CentralizerDesc::Kind::QuadraticField) {
      // t/2 + lambda u with lambda^2 N(u) = n - t^2/4.
      const Quat& u = within.generator();
      if (auto lambda = detail::rational_sqrt((rc.n - rc.t * rc.t / Rat(4)) / u.norm()))
        cand = Quat(rc.t / Rat(2)) + *lambda * u;
    }
    if (cand && eval_right(p, *cand).is_zero()) return cand;
  }
  return std::nullopt;
}

/// E(p, a) = {r : p(r a r^-1) = 0} ∪ {0} as a right C(a)-space.
struct ESpaceBasis {
  std::vector<Quat> basis;
  CentralizerDesc over = CentralizerDesc::full_ring();
  std::size_t dim() const { return basis.size(); }
};

inline ESpaceBasis e_space(const UPoly& p, const Quat& a) {
  if (!eval_left(p, a).is_zero()) throw InvalidInput(a.str() + " is not a right root of " + p.str());
  // r a^k r^-1 summed against the coefficients vanishes iff sum c_k r a^k = 0.
  RatMatrix m(4, 4);
  for (int t = 0; t < 4; ++t) {
    Quat r = Quat::unit(t), acc;
    Quat power(1);
    for (const auto& c : p.coeffs()) {
      acc += c * r * power;
      power = power * a;
    }
    detail::put_coords(m, 0, t, acc);
  }
  ESpaceBasis out;
  out.over = centralizer_of(a);
  auto ns = nullspace(m);
  for (const auto& v : ns) {
    Quat r(v[0], v[1], v[2], v[3]);
    if (!right_linear_solve_over_C(std::span<const Quat>(out.basis), r, out.over)) out.basis.push_back(r);
  }
  if (out.basis.size() * out.over.dim() != ns.size())
    throw InternalError("E(p,a) is not a right vector space over C(a)");
  return out;
}

namespace detail {

inline UPoly minimal_poly(const Quat& b, const CentralizerDesc& over, bool left) {
  std::vector<Quat> powers{Quat(1)};
  for (int n = 1; n <= 4; ++n) {
    Quat next = powers.back() * b;
    auto sol = left ? left_linear_solve_over_C(std::span<const Quat>(powers), next, over)
                    : right_linear_solve_over_C(std::span<const Quat>(powers), next, over);
    if (sol) {
      std::vector<Quat> coeffs;
      for (const auto& c : *sol) coeffs.push_back(-c);
      coeffs.emplace_back(1);
      return UPoly(std::move(coeffs));
    }
    powers.push_back(next);
  }
  throw InternalError("element of degree above 4 over a centralizer");
}

}  // namespace detail

/// Monic p in C[x] of least degree with p(b) = 0 under left evaluation.
inline UPoly min_left_poly(const Quat& b, const CentralizerDesc& over) {
  return detail::minimal_poly(b, over, true);
}

/// Monic p in C[x] of least degree with p_r(a) = 0 under right evaluation.
inline UPoly min_right_poly(const Quat& a, const CentralizerDesc& over) {
  return detail::minimal_poly(a, over, false);
}

/// Monic generator of the intersection of D[x](x - r b r^-1) over the group
/// generated by `generators`, computed as an LCLM fixpoint.
inline UPoly wedderburn_lclm(const Quat& b, std::span<const Quat> generators) {
  for (const auto& g : generators)
    if (g.is_zero()) throw InvalidInput("conjugating generators must be nonzero");
  UPoly p = UPoly::linear(b);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& g : generators) {
      UPoly moved = p.conjugated_by(g);
      if (moved == p) continue;
      p = lclm(p, moved);
      if (p.degree() > 4) throw InternalError("Wedderburn fixpoint exceeded degree 4");
      changed = true;
    }
  }
  if (!coefficients_in(p, centralizer_of_set(generators)))
    throw InternalError("Wedderburn polynomial has coefficients outside C(S)");
  return p;
}

}  // namespace qnull
