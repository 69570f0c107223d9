#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "quat.hpp"

namespace qnull {

using QVector = std::vector<Quat>;

/// Centralizer of a subset of H_Q. Exactly one of: the whole ring, a quadratic
/// subfield Q(u) = {p + q u} for a nonzero pure quaternion u, or the center Q.
class CentralizerDesc {
 public:
  enum class Kind { FullRing, QuadraticField, Center };

  static CentralizerDesc full_ring() { return CentralizerDesc(Kind::FullRing, Quat()); }
  static CentralizerDesc center() { return CentralizerDesc(Kind::Center, Quat()); }
  static CentralizerDesc quadratic_field(const Quat& u) {
    if (!u.is_pure() || u.is_zero())
      throw InvalidInput("quadratic field generator must be a nonzero pure quaternion");
    return CentralizerDesc(Kind::QuadraticField, u);
  }

  Kind kind() const { return kind_; }
  /// Generator of the quadratic field; zero for the other kinds.
  const Quat& generator() const { return u_; }

  /// Q-basis: {1}, {1, u} or {1, i, j, k}.
  std::vector<Quat> basis() const {
    switch (kind_) {
      case Kind::FullRing: return {Quat(1), Quat::i(), Quat::j(), Quat::k()};
      case Kind::QuadraticField: return {Quat(1), u_};
      case Kind::Center: break;
    }
    return {Quat(1)};
  }
  std::size_t dim() const { return basis().size(); }

  /// Coordinates of q in basis(), or nullopt when q lies outside.
  std::optional<std::vector<Rat>> coords(const Quat& q) const {
    switch (kind_) {
      case Kind::FullRing: {
        auto c = q.coords();
        return std::vector<Rat>(c.begin(), c.end());
      }
      case Kind::Center:
        if (!q.is_real()) return std::nullopt;
        return std::vector<Rat>{q.w()};
      case Kind::QuadraticField: {
        Rat lambda;
        for (int idx = 1; idx < 4; ++idx)
          if (!u_[idx].is_zero()) {
            lambda = q[idx] / u_[idx];
            break;
          }
        if (q.im() != lambda * u_) return std::nullopt;
        return std::vector<Rat>{q.w(), lambda};
      }
    }
    return std::nullopt;
  }
  bool contains(const Quat& q) const { return coords(q).has_value(); }

  /// Element with the given coordinates in basis().
  Quat element(std::span<const Rat> c) const {
    auto b = basis();
    if (c.size() != b.size()) throw InvalidInput("coordinate count does not match centralizer dimension");
    Quat out;
    for (std::size_t t = 0; t < b.size(); ++t) out += c[t] * b[t];
    return out;
  }

  std::string str() const {
    switch (kind_) {
      case Kind::FullRing: return "H";
      case Kind::Center: return "Q";
      case Kind::QuadraticField: return "Q(" + u_.str() + ")";
    }
    return "?";
  }

  friend bool operator==(const CentralizerDesc& a, const CentralizerDesc& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::QuadraticField) return true;
    // Same field iff the generators are parallel.
    return a.contains(b.u_);
  }

 private:
  CentralizerDesc(Kind kind, Quat u) : kind_(kind), u_(std::move(u)) {}

  Kind kind_;
  Quat u_;
};

/// C(S) = {q : qs = sq for all s in S}.
inline CentralizerDesc centralizer_of_set(std::span<const Quat> set) {
  const Quat* first = nullptr;
  for (const auto& s : set)
    if (!s.is_real()) {
      first = &s;
      break;
    }
  if (!first) return CentralizerDesc::full_ring();
  auto field = CentralizerDesc::quadratic_field(first->im());
  for (const auto& s : set)
    if (!field.contains(s)) return CentralizerDesc::center();
  return field;
}

inline CentralizerDesc centralizer_of(const Quat& a) {
  return centralizer_of_set(std::span<const Quat>(&a, 1));
}

namespace detail {

inline void put_coords(RatMatrix& m, std::size_t row0, std::size_t col, const Quat& q) {
  for (int t = 0; t < 4; ++t) m(row0 + t, col) = q[t];
}

/// Q-matrix whose column (i, t) holds the coordinates of e_t * v_i (left) or
/// v_i * e_t (right), with e_t running over the basis of `over`.
inline RatMatrix span_matrix(std::span<const QVector> vectors, std::size_t len,
                             const CentralizerDesc& over, bool left) {
  auto basis = over.basis();
  RatMatrix m(4 * len, vectors.size() * basis.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != len) throw InvalidInput("vectors of unequal length");
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (std::size_t e = 0; e < len; ++e)
        put_coords(m, 4 * e, i * basis.size() + t,
                   left ? basis[t] * vectors[i][e] : vectors[i][e] * basis[t]);
  }
  return m;
}

inline std::optional<QVector> linear_solve_over(std::span<const QVector> vectors, const QVector& target,
                                                const CentralizerDesc& over, bool left) {
  const std::size_t len = target.size();
  RatMatrix m = span_matrix(vectors, len, over, left);
  RatVector rhs(4 * len);
  for (std::size_t e = 0; e < len; ++e)
    for (int t = 0; t < 4; ++t) rhs[4 * e + t] = target[e][t];
  auto sol = linear_solve_rat(m, rhs);
  if (!sol.particular) return std::nullopt;
  const std::size_t d = over.dim();
  QVector coeffs;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    coeffs.push_back(over.element(std::span<const Rat>(sol.particular->data() + i * d, d)));
  return coeffs;
}

}  // namespace detail

/// Coefficients c_i in `over` with sum c_i v_i = target, vectors being rows of quaternions.
inline std::optional<QVector> left_linear_solve_over_C(std::span<const QVector> vectors, const QVector& target,
                                                       const CentralizerDesc& over) {
  return detail::linear_solve_over(vectors, target, over, true);
}

/// Coefficients c_i in `over` with sum v_i c_i = target.
inline std::optional<QVector> right_linear_solve_over_C(std::span<const QVector> vectors, const QVector& target,
                                                        const CentralizerDesc& over) {
  return detail::linear_solve_over(vectors, target, over, false);
}

inline std::optional<QVector> left_linear_solve_over_C(std::span<const Quat> vectors, const Quat& target,
                                                       const CentralizerDesc& over) {
  std::vector<QVector> rows;
  for (const auto& v : vectors) rows.push_back({v});
  return detail::linear_solve_over(rows, {target}, over, true);
}

inline std::optional<QVector> right_linear_solve_over_C(std::span<const Quat> vectors, const Quat& target,
                                                        const CentralizerDesc& over) {
  std::vector<QVector> rows;
  for (const auto& v : vectors) rows.push_back({v});
  return detail::linear_solve_over(rows, {target}, over, false);
}

/// Whether the quaternions are left linearly independent over `over`.
inline bool left_independent_over(std::span<const Quat> vectors, const CentralizerDesc& over) {
  std::vector<QVector> rows;
  for (const auto& v : vectors) rows.push_back({v});
  RatMatrix m = detail::span_matrix(rows, 1, over, true);
  return rank(m) == vectors.size() * over.dim();
}

/// Nonzero r with r a r^-1 = b, or nullopt when a and b are not conjugate.
inline std::optional<Quat> find_conjugator(const Quat& a, const Quat& b) {
  if (a.re() != b.re() || a.im().norm() != b.im().norm()) return std::nullopt;
  // Columns: image of each basis element under r -> r a - b r.
  RatMatrix m(4, 4);
  for (int t = 0; t < 4; ++t) {
    Quat e = Quat::unit(t);
    detail::put_coords(m, 0, t, e * a - b * e);
  }
  auto ns = nullspace(m);
  if (ns.empty()) return std::nullopt;
  const auto& v = ns.front();
  return Quat(v[0], v[1], v[2], v[3]);
}

}  // namespace qnull
