#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centralizer.hpp"
#include "mpoly.hpp"
#include "roots.hpp"
#include "upoly.hpp"

namespace qnull {

/// Square matrix over H_Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const std::vector<std::vector<Quat>>& rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.front().size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidInput("ragged quaternion matrix");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }
  static QMatrix identity(std::size_t m) {
    QMatrix out(m, m);
    for (std::size_t d = 0; d < m; ++d) out(d, d) = Quat(1);
    return out;
  }
  static QMatrix diagonal(const std::vector<Quat>& d) {
    QMatrix out(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) out(k, k) = d[k];
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Quat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix shapes do not chain");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
      }
    return out;
  }
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  /// Inverse by Gauss-Jordan over the division ring, or nullopt when singular.
  std::optional<QMatrix> inverse() const {
    if (!is_square()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t m = rows_;
    QMatrix a = *this, inv = identity(m);
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = col;
      while (piv < m && a(piv, col).is_zero()) ++piv;
      if (piv == m) return std::nullopt;
      for (std::size_t c = 0; c < m; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
      Quat s = a(col, col).inv();
      for (std::size_t c = 0; c < m; ++c) {
        a(col, c) = s * a(col, c);
        inv(col, c) = s * inv(col, c);
      }
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        Quat f = a(r, col);
        for (std::size_t c = 0; c < m; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Quat> data_;
};

/// Row vector times matrix: the action v -> v A.
inline QVector apply_right(const QVector& v, const QMatrix& a) {
  if (v.size() != a.rows()) throw InvalidInput("vector length does not match matrix");
  QVector out(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) out[c] += v[r] * a(r, c);
  }
  return out;
}

inline QVector scale_left(const Quat& s, const QVector& v) {
  QVector out;
  for (const auto& q : v) out.push_back(s * q);
  return out;
}

inline bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Quat& q) { return q.is_zero(); });
}

/// Left module over D[x1..xn] on row vectors of length m, x_i acting as v -> v A_i.
struct ModulePresentation {
  std::size_t m = 0;
  std::vector<QMatrix> mats;
};

struct PresentationCheck {
  bool ok = true;
  std::string violation;
};

inline PresentationCheck check_presentation(const ModulePresentation& mod) {
  if (mod.m == 0) return {false, "module dimension must be positive"};
  for (std::size_t i = 0; i < mod.mats.size(); ++i)
    if (mod.mats[i].rows() != mod.m || mod.mats[i].cols() != mod.m)
      return {false, "matrix " + std::to_string(i + 1) + " is not " + std::to_string(mod.m) + "x" +
                         std::to_string(mod.m)};
  for (std::size_t i = 0; i < mod.mats.size(); ++i)
    for (std::size_t j = i + 1; j < mod.mats.size(); ++j)
      if (!(mod.mats[i] * mod.mats[j] == mod.mats[j] * mod.mats[i]))
        return {false, "matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute"};
  return {};
}

/// Monic p of least degree with sum_k p_k (v A_i^k) = 0.
inline UPoly annihilator_minpoly(const ModulePresentation& mod, const QVector& v, std::size_t i) {
  if (is_zero_vector(v)) throw InvalidInput("annihilator of the zero vector");
  if (i >= mod.mats.size()) throw InvalidInput("variable index out of range");
  if (v.size() != mod.m) throw InvalidInput("vector length does not match module dimension");
  std::vector<QVector> powers{v};
  for (std::size_t deg = 1; deg <= mod.m; ++deg) {
    QVector next = apply_right(powers.back(), mod.mats[i]);
    if (auto sol = left_linear_solve_over_C(std::span<const QVector>(powers), next, CentralizerDesc::full_ring())) {
      std::vector<Quat> coeffs;
      for (const auto& c : *sol) coeffs.push_back(-c);
      coeffs.emplace_back(1);
      return UPoly(std::move(coeffs));
    }
    powers.push_back(std::move(next));
  }
  throw InternalError("no annihilating polynomial of degree <= module dimension");
}

/// Nonzero v with v A_i = a_i v for every i.
struct EigenTuple {
  QVector v;
  CommutingPoint point;
};

struct EigenOutcome {
  std::optional<EigenTuple> tuple;
  /// Set when no root was found: the polynomial and the (zero based) variable.
  std::optional<UPoly> unsolved;
  std::size_t unsolved_var = 0;

  bool found() const { return tuple.has_value(); }
};

inline bool is_eigen_tuple(const ModulePresentation& mod, const QVector& v, const std::vector<Quat>& point) {
  if (is_zero_vector(v) || point.size() != mod.mats.size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (apply_right(v, mod.mats[i]) != scale_left(point[i], v)) return false;
  for (std::size_t a = 0; a < point.size(); ++a)
    for (std::size_t b = a + 1; b < point.size(); ++b)
      if (!commutator(point[a], point[b]).is_zero()) return false;
  return true;
}

namespace detail {

enum class SeedResult { Found, NoRoot, OutsideCentralizer };

inline SeedResult eigen_from_seed(const ModulePresentation& mod, QVector v, EigenOutcome& out) {
  std::vector<Quat> point;
  for (std::size_t i = 0; i < mod.mats.size(); ++i) {
    UPoly p = annihilator_minpoly(mod, v, i);
    CentralizerDesc within = centralizer_of_set(point);
    if (!coefficients_in(p, within)) return SeedResult::OutsideCentralizer;
    auto a = left_root_in(p, within);
    if (!a) {
      out.unsolved = p;
      out.unsolved_var = i;
      return SeedResult::NoRoot;
    }
    auto [q, r] = divide_left(p, UPoly::linear(*a));
    if (!r.is_zero()) throw InternalError("left root does not split the annihilator");
    // v <- q(x_i) v = sum_k q_k (v A_i^k)
    QVector next(mod.m), power = v;
    for (const auto& c : q.coeffs()) {
      QVector term = scale_left(c, power);
      for (std::size_t e = 0; e < mod.m; ++e) next[e] += term[e];
      power = apply_right(power, mod.mats[i]);
    }
    v = std::move(next);
    point.push_back(*a);
  }
  if (!is_eigen_tuple(mod, v, point)) throw InternalError("extracted eigen-tuple failed verification");
  out.tuple = EigenTuple{v, CommutingPoint(point)};
  out.unsolved.reset();
  return SeedResult::Found;
}

}  // namespace detail

/// Common eigenvector of the commuting operators, one variable at a time: take
/// the minimal annihilator p of v under x_i (its coefficients commute with the
/// eigenvalues found so far), split p = (x - a) q at a left root a in that
/// centralizer, and continue with q(x_i) v. When the seed hits a polynomial
/// without a suitable root in H_Q, the canonical seeds e_1..e_m are tried next.
inline EigenOutcome find_eigen_tuple(const ModulePresentation& mod, const QVector& seed) {
  auto check = check_presentation(mod);
  if (!check.ok) throw InvalidInput(check.violation);
  if (seed.size() != mod.m) throw InvalidInput("seed length does not match module dimension");
  if (is_zero_vector(seed)) throw InvalidInput("seed vector must be nonzero");

  std::vector<QVector> seeds{seed};
  for (std::size_t e = 0; e < mod.m; ++e) {
    QVector unit(mod.m);
    unit[e] = Quat(1);
    if (unit != seed) seeds.push_back(std::move(unit));
  }
  EigenOutcome out;
  bool any_no_root = false;
  for (const auto& s : seeds) {
    EigenOutcome attempt;
    auto res = detail::eigen_from_seed(mod, s, attempt);
    if (res == detail::SeedResult::Found) return attempt;
    if (res == detail::SeedResult::NoRoot && !any_no_root) {
      out = attempt;
      any_no_root = true;
    }
  }
  if (!any_no_root) throw InternalError("annihilator coefficients left the centralizer for every seed");
  return out;
}

struct SimplicityReport {
  enum class Kind { Simple, NonSimple, Inconclusive };
  Kind kind;
  std::optional<CommutingPoint> point;      // Simple
  std::optional<LeftIdealGens> annihilator;  // Simple: point ideal of the generator
  std::optional<EigenTuple> witness;         // NonSimple: a one-dimensional submodule
  std::optional<UPoly> unsolved;             // Inconclusive
};

/// For m = 1 the module is simple with annihilator the point ideal of its
/// entries; for m > 1 an eigen-tuple exhibits a proper one-dimensional submodule.
inline SimplicityReport verify_simple_1dim(const ModulePresentation& mod) {
  auto check = check_presentation(mod);
  if (!check.ok) throw InvalidInput(check.violation);
  if (mod.m == 1) {
    std::vector<Quat> entries;
    for (const auto& a : mod.mats) entries.push_back(a(0, 0));
    CommutingPoint pt(entries);
    SimplicityReport rep{SimplicityReport::Kind::Simple, pt, std::nullopt, std::nullopt, std::nullopt};
    if (!entries.empty()) rep.annihilator = point_ideal(pt);
    return rep;
  }
  QVector seed(mod.m);
  seed[0] = Quat(1);
  auto res = find_eigen_tuple(mod, seed);
  if (res.found()) return {SimplicityReport::Kind::NonSimple, std::nullopt, std::nullopt, res.tuple, std::nullopt};
  return {SimplicityReport::Kind::Inconclusive, std::nullopt, std::nullopt, std::nullopt, res.unsolved};
}

}  // namespace qnull
