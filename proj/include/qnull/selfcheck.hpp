#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "module.hpp"
#include "parse.hpp"
#include "rabinowitsch.hpp"
#include "random.hpp"
#include "ratexpr.hpp"
#include "roots.hpp"

namespace qnull {

/// Outcome of one randomized property suite.
struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  double seconds = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return total > 0 && passed == total; }

  void record(bool good, const std::function<std::string()>& describe) {
    ++total;
    if (good) {
      ++passed;
    } else if (failures.size() < 5) {
      failures.push_back(describe());
    }
  }
};

namespace detail {

template <class Body>
SuiteResult timed_suite(std::string name, Body body) {
  SuiteResult res;
  res.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  try {
    body(res);
  } catch (const std::exception& e) {
    res.record(false, [&] { return std::string("exception: ") + e.what(); });
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// q = (x - a) * random lower part, so q(a) = 0 with probability `p`.
inline UPoly maybe_vanishing(RandomSource& rs, int deg, const Quat& a, double p) {
  if (deg >= 1 && rs.coin(p)) return rs.upoly(deg - 1) * UPoly::linear(a);
  return rs.upoly(deg);
}

/// An element of C(a) with random rational coordinates.
inline Quat centralizer_element(RandomSource& rs, const Quat& a) {
  CentralizerDesc c = centralizer_of(a);
  std::vector<Rat> coords;
  for (std::size_t k = 0; k < c.dim(); ++k) coords.push_back(rs.rational(6, 0.2));
  return c.element(coords);
}

/// Random list of n quaternions, sometimes forced to be dependent over C(a).
inline std::vector<Quat> independence_instance(RandomSource& rs, const Quat& a, std::size_t n) {
  std::vector<Quat> bs;
  for (std::size_t k = 0; k < n; ++k) {
    switch (rs.integer(0, 7)) {
      case 0:
        bs.emplace_back();
        break;
      case 1:
      case 2:
        if (!bs.empty()) {
          Quat combo;
          for (const auto& b : bs) combo += centralizer_element(rs, a) * b;
          bs.push_back(combo);
          break;
        }
        [[fallthrough]];
      default:
        bs.push_back(rs.structured_quat(6));
    }
  }
  return bs;
}

}  // namespace detail

/// (pq)(a) = 0 if q(a) = 0, else p(q(a) a q(a)^-1) q(a).
inline SuiteResult suite_product_formula(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("product formula", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat a = rs.quat(10);
      int dp = static_cast<int>(rs.integer(0, 5));
      int dq = static_cast<int>(rs.integer(0, 5 - dp));
      UPoly p = rs.upoly(dp), q = detail::maybe_vanishing(rs, dq, a, 0.4);
      Quat qa = eval_left(q, a);
      Quat expected = qa.is_zero() ? Quat() : eval_left(p, qa * a * qa.inv()) * qa;
      res.record(eval_left(p * q, a) == expected,
                 [&] { return "p=" + p.str() + " q=" + q.str() + " a=" + a.str(); });
    }
  });
}

/// Remainder of p by (x - a) on the right is p(a), and a is a root iff it divides.
inline SuiteResult suite_remainder_law(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("remainder law", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat a = rs.quat(10);
      UPoly p = detail::maybe_vanishing(rs, static_cast<int>(rs.integer(1, 5)), a, 0.3);
      auto [quo, rem] = divide_right(p, UPoly::linear(a));
      Quat value = eval_left(p, a);
      bool good = rem == UPoly::constant(value) && quo * UPoly::linear(a) + rem == p &&
                  (value.is_zero() == rem.is_zero());
      res.record(good, [&] { return "p=" + p.str() + " a=" + a.str(); });
    }
  });
}

/// Sum of dim E(p, a) over the root classes found is at most deg p.
inline SuiteResult suite_root_inequality(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("root-class inequality", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      int factors = static_cast<int>(rs.integer(1, 4));
      UPoly p = UPoly::constant(Quat(1));
      std::vector<Quat> used;
      for (int f = 0; f < factors; ++f) {
        // Reuse an earlier root or a conjugate of it now and then, so classes collide.
        Quat r = rs.structured_quat(3);
        if (!used.empty() && rs.coin(0.3)) {
          Quat s = rs.nonzero_quat(3);
          r = s * used[static_cast<std::size_t>(rs.integer(0, static_cast<long>(used.size()) - 1))] * s.inv();
        }
        used.push_back(r);
        p = p * UPoly::linear(r);
        // (x - r)(x - conj r) is central, so a whole sphere of roots appears.
        if (f + 1 < factors && !r.is_real() && rs.coin(0.3)) {
          p = p * UPoly::linear(r.conj());
          ++f;
        }
      }
      auto report = right_roots(p);
      std::size_t total = 0;
      bool reps_ok = true;
      for (const auto& rc : report.classes) {
        std::optional<Quat> rep = representative(rc);
        if (!rep)
          for (const auto& u : used)
            if (rc.kind == RootClass::Kind::Sphere && u.re() * 2 == rc.t && u.norm() == rc.n) rep = u;
        if (!rep || !eval_left(p, *rep).is_zero()) {
          reps_ok = false;
          continue;
        }
        total += e_space(p, *rep).dim();
      }
      res.record(reps_ok && !report.classes.empty() && total <= static_cast<std::size_t>(p.degree()),
                 [&] { return "p=" + p.str() + " sum dim=" + std::to_string(total); });
    }
  });
}

/// dim E(p, b) = deg p for Wedderburn polynomials over a random conjugating set.
inline SuiteResult suite_wedderburn(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("wedderburn dimension", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat b = rs.structured_quat(4);
      std::vector<Quat> gens;
      for (long g = rs.integer(1, 2); g > 0; --g) gens.push_back(rs.coin(0.3) ? Quat(rs.integer(1, 4)) : rs.nonzero_quat(3));
      UPoly p = wedderburn_lclm(b, gens);
      std::size_t dim = e_space(p, b).dim();
      res.record(dim == static_cast<std::size_t>(p.degree()),
                 [&] { return "b=" + b.str() + " p=" + p.str() + " dim=" + std::to_string(dim); });
    }
  });
}

/// L_n(a; b_1..b_n) defined and nonzero iff the b's are left independent over C(a).
inline SuiteResult suite_independence(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("L_n independence", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat a = rs.structured_quat(6);
      auto bs = detail::independence_instance(rs, a, static_cast<std::size_t>(rs.integer(1, 4)));
      bool via_l = indep_via_L(a, bs), oracle = indep_oracle(a, bs);
      res.record(via_l == oracle, [&] {
        std::string s = "a=" + a.str() + " bs=";
        for (const auto& b : bs) s += "[" + b.str() + "]";
        return s;
      });
    }
  });
}

/// First n with F_n(a, b) = 0 equals the degree of the minimal left polynomial.
inline SuiteResult suite_degree_via_F(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("F_n degree", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat a = rs.structured_quat(6), b = rs.coin(0.2) ? detail::centralizer_element(rs, a) : rs.structured_quat(6);
      int via_f = left_degree_via_F(a, b), oracle = left_degree_via_oracle(a, b);
      res.record(via_f == oracle, [&] { return "a=" + a.str() + " b=" + b.str(); });
    }
  });
}

/// left_degree(a, b) = right_degree(b, a) in {1, 2}, with a valid closure witness.
inline SuiteResult suite_degree_symmetry(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("degree symmetry", [&](SuiteResult& res) {
    for (std::size_t n = 0; n < count; ++n) {
      Quat a = rs.structured_quat(6), b = rs.coin(0.2) ? detail::centralizer_element(rs, a) : rs.structured_quat(6);
      int l = left_degree(a, b), r = right_degree(b, a);
      // closure_witness(a, b) concerns a over C(b).
      auto w = closure_witness(a, b);
      std::vector<Quat> coeffs = w;
      coeffs.emplace_back(1);
      bool witness_ok = eval_right(UPoly(coeffs), a).is_zero() && static_cast<int>(w.size()) == r;
      for (const auto& c : w) witness_ok = witness_ok && commutator(c, b).is_zero();
      res.record(l == r && (l == 1 || l == 2) && witness_ok,
                 [&] { return "a=" + a.str() + " b=" + b.str(); });
    }
  });
}

/// Conjugated direct sums of one-dimensional modules over Q(i)-valued points.
inline SuiteResult suite_eigen(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("eigen-tuple extraction", [&](SuiteResult& res) {
    for (std::size_t c = 0; c < count; ++c) {
      auto n = static_cast<std::size_t>(rs.integer(1, 3)), m = static_cast<std::size_t>(rs.integer(1, 4));
      ModulePresentation mod = conjugated_diagonal_module(rs, n, m);
      QVector seed(m);
      seed[static_cast<std::size_t>(rs.integer(0, static_cast<long>(m) - 1))] = Quat(1);
      auto out = find_eigen_tuple(mod, seed);
      bool good = out.found() && is_eigen_tuple(mod, out.tuple->v, out.tuple->point.components());
      res.record(good, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  });
}

/// eval_c does not depend on the substitution order, and point reduction reconstructs p.
inline SuiteResult suite_point_reduction(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("point reduction", [&](SuiteResult& res) {
    for (std::size_t c = 0; c < count; ++c) {
      auto n = static_cast<std::size_t>(rs.integer(1, 3));
      MPoly p = rs.mpoly(n, 4, static_cast<std::size_t>(rs.integer(1, 6)));
      CommutingPoint pt = rs.commuting_point(n);
      auto red = reduce_mod_point(p, pt);
      MPoly rebuilt = MPoly::constant(n, red.remainder);
      for (std::size_t i = 0; i < n; ++i) rebuilt += red.quotients[i] * point_generator(pt, i);
      bool good = rebuilt == p && red.remainder == eval_c(p, pt) && eval_c(p, pt) == eval_c_reversed(p, pt);
      res.record(good, [&] { return "p=" + p.str(); });
    }
  });
}

/// Every certificate found reconstructs its identity exactly.
inline SuiteResult suite_certificates(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("certificate reconstruction", [&](SuiteResult& res) {
    for (std::size_t c = 0; c < count; ++c) {
      Quat root = rs.structured_quat(3);
      MPoly g = MPoly::from_upoly(UPoly::linear(root));
      LeftIdealGens ideal({rs.coin() ? g * g : g}, 1);
      MPoly p = MPoly::constant(1, rs.nonzero_quat(3)) * g;
      Quat a = rs.nonzero_quat(3);
      auto cert = find_certificate(ideal, p, a, 3, 1);
      res.record(cert && verify_certificate(ideal, p, a, *cert),
                 [&] { return "root=" + root.str() + " a=" + a.str(); });
    }
  });
}

/// print(parse(t)) reparses to an equal value.
inline SuiteResult suite_parse_roundtrip(RandomSource& rs, std::size_t count) {
  return detail::timed_suite("print/parse round-trip", [&](SuiteResult& res) {
    for (std::size_t c = 0; c < count; ++c) {
      Quat q = rs.quat(20);
      UPoly u = rs.upoly(static_cast<int>(rs.integer(0, 4)), 20);
      auto n = static_cast<std::size_t>(rs.integer(1, 3));
      MPoly m = rs.mpoly(n, 3, 4, 20);
      bool good = parse_quat(q.str()) == q && parse_upoly(u.str()) == u && parse_mpoly(m.str(), n) == m;
      res.record(good, [&] { return q.str() + " | " + u.str() + " | " + m.str(); });
    }
  });
}

/// Every kernel property suite at the given size.
inline std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, std::size_t count) {
  RandomSource rs(seed);
  std::size_t small = std::max<std::size_t>(1, count / 5);
  return {suite_product_formula(rs, count),  suite_remainder_law(rs, count),   suite_root_inequality(rs, small),
          suite_wedderburn(rs, small),        suite_independence(rs, count),    suite_degree_via_F(rs, count),
          suite_degree_symmetry(rs, count),   suite_eigen(rs, small),           suite_point_reduction(rs, count),
          suite_certificates(rs, small),      suite_parse_roundtrip(rs, count)};
}

}  // namespace qnull
