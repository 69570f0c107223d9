#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "centralizer.hpp"
#include "roots.hpp"

namespace qnull {

struct RatNode;

/// Rational expression over the prime field in variables x_0, x_1, ...
///
/// Nodes are immutable and shared, so recursive constructions such as L_n stay
/// polynomial in size.
class RatExpr {
 public:
  struct Var { std::size_t index; };
  struct Const { Rat value; };
  struct Add;
  struct Sub;
  struct Mul;
  struct Inv;

  static RatExpr var(std::size_t index);
  static RatExpr constant(Rat value);
  friend RatExpr operator+(const RatExpr& l, const RatExpr& r);
  friend RatExpr operator-(const RatExpr& l, const RatExpr& r);
  friend RatExpr operator*(const RatExpr& l, const RatExpr& r);
  RatExpr inv() const;

  const RatNode& node() const { return *node_; }
  const void* id() const { return node_.get(); }

  /// Parenthesized prefix form, e.g. `(- (* x0 x1) (* x1 x0))`.
  std::string str() const;

 private:
  explicit RatExpr(std::shared_ptr<const RatNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const RatNode> node_;
};

struct RatExpr::Add { RatExpr l, r; };
struct RatExpr::Sub { RatExpr l, r; };
struct RatExpr::Mul { RatExpr l, r; };
struct RatExpr::Inv { RatExpr e; };

struct RatNode {
  std::variant<RatExpr::Var, RatExpr::Const, RatExpr::Add, RatExpr::Sub, RatExpr::Mul, RatExpr::Inv> v;
};

inline RatExpr RatExpr::var(std::size_t index) { return RatExpr(std::make_shared<const RatNode>(RatNode{Var{index}})); }
inline RatExpr RatExpr::constant(Rat value) {
  return RatExpr(std::make_shared<const RatNode>(RatNode{Const{std::move(value)}}));
}
inline RatExpr operator+(const RatExpr& l, const RatExpr& r) {
  return RatExpr(std::make_shared<const RatNode>(RatNode{RatExpr::Add{l, r}}));
}
inline RatExpr operator-(const RatExpr& l, const RatExpr& r) {
  return RatExpr(std::make_shared<const RatNode>(RatNode{RatExpr::Sub{l, r}}));
}
inline RatExpr operator*(const RatExpr& l, const RatExpr& r) {
  return RatExpr(std::make_shared<const RatNode>(RatNode{RatExpr::Mul{l, r}}));
}
inline RatExpr RatExpr::inv() const { return RatExpr(std::make_shared<const RatNode>(RatNode{Inv{*this}})); }

inline std::string RatExpr::str() const {
  struct Printer {
    std::string operator()(const Var& v) const { return "x" + std::to_string(v.index); }
    std::string operator()(const Const& c) const { return c.value.str(); }
    std::string operator()(const Add& n) const { return "(+ " + n.l.str() + " " + n.r.str() + ")"; }
    std::string operator()(const Sub& n) const { return "(- " + n.l.str() + " " + n.r.str() + ")"; }
    std::string operator()(const Mul& n) const { return "(* " + n.l.str() + " " + n.r.str() + ")"; }
    std::string operator()(const Inv& n) const { return "(inv " + n.e.str() + ")"; }
  };
  return std::visit(Printer{}, node().v);
}

/// [a, b] = ab - ba as an expression.
inline RatExpr commutator(const RatExpr& a, const RatExpr& b) { return a * b - b * a; }

/// Outcome of strict evaluation: undefined as soon as any inverse meets zero.
struct EvalOutcome {
  std::optional<Quat> value;

  static EvalOutcome undefined() { return {}; }
  static EvalOutcome defined(Quat q) { return {std::move(q)}; }
  bool is_defined() const { return value.has_value(); }
  bool is_defined_zero() const { return value && value->is_zero(); }
  bool is_defined_nonzero() const { return value && !value->is_zero(); }
  std::string str() const { return value ? "Defined(" + value->str() + ")" : "Undefined"; }
  friend bool operator==(const EvalOutcome&, const EvalOutcome&) = default;
};

/// Strict bottom-up evaluation; shared subexpressions are evaluated once.
inline EvalOutcome eval_ratexpr(const RatExpr& e, std::span<const Quat> assignment) {
  std::unordered_map<const void*, EvalOutcome> memo;
  auto go = [&](auto&& self, const RatExpr& x) -> EvalOutcome {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    auto binary = [&](const RatExpr& l, const RatExpr& r, auto op) -> EvalOutcome {
      EvalOutcome lv = self(self, l);
      EvalOutcome rv = self(self, r);
      if (!lv.value || !rv.value) return EvalOutcome::undefined();
      return EvalOutcome::defined(op(*lv.value, *rv.value));
    };
    EvalOutcome out = std::visit(
        [&](const auto& n) -> EvalOutcome {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, RatExpr::Var>) {
            if (n.index >= assignment.size())
              throw InvalidInput("no value assigned to x" + std::to_string(n.index));
            return EvalOutcome::defined(assignment[n.index]);
          } else if constexpr (std::is_same_v<T, RatExpr::Const>) {
            return EvalOutcome::defined(Quat(n.value));
          } else if constexpr (std::is_same_v<T, RatExpr::Add>) {
            return binary(n.l, n.r, [](const Quat& a, const Quat& b) { return a + b; });
          } else if constexpr (std::is_same_v<T, RatExpr::Sub>) {
            return binary(n.l, n.r, [](const Quat& a, const Quat& b) { return a - b; });
          } else if constexpr (std::is_same_v<T, RatExpr::Mul>) {
            return binary(n.l, n.r, [](const Quat& a, const Quat& b) { return a * b; });
          } else {
            EvalOutcome v = self(self, n.e);
            if (!v.value || v.value->is_zero()) return EvalOutcome::undefined();
            return EvalOutcome::defined(v.value->inv());
          }
        },
        x.node().v);
    memo.emplace(x.id(), out);
    return out;
  };
  return go(go, e);
}

namespace detail {

/// L_n applied to argument expressions args[0..n].
inline RatExpr apply_L(std::vector<RatExpr> args) {
  while (args.size() > 2) {
    const std::size_t n = args.size() - 1;
    RatExpr last_inv = args[n].inv();
    std::vector<RatExpr> next{args[0]};
    for (std::size_t k = 1; k < n; ++k) next.push_back(commutator(args[0], args[k] * last_inv));
    args = std::move(next);
  }
  return args[1];
}

}  // namespace detail

/// L_1(x0, x1) = x1 and
/// L_{n+1}(x0..x_{n+1}) = L_n(x0, [x0, x1 x_{n+1}^-1], ..., [x0, x_n x_{n+1}^-1]).
inline RatExpr build_L(int n) {
  if (n < 1) throw InvalidInput("L_n needs n >= 1");
  std::vector<RatExpr> args;
  for (int k = 0; k <= n; ++k) args.push_back(RatExpr::var(static_cast<std::size_t>(k)));
  return detail::apply_L(std::move(args));
}

/// F_n(x, y) = L_{n+1}(x, 1, y, ..., y^n) in variables x = x0, y = x1.
/// The extra argument makes the arity match L_{n+1}, whose vanishing says that
/// 1, y, ..., y^n are dependent while y, ..., y^n are not.
inline RatExpr build_F(int n) {
  if (n < 1) throw InvalidInput("F_n needs n >= 1");
  RatExpr x = RatExpr::var(0), y = RatExpr::var(1);
  std::vector<RatExpr> args{x, RatExpr::constant(1)};
  RatExpr power = y;
  for (int k = 1; k <= n; ++k) {
    args.push_back(power);
    power = power * y;
  }
  return detail::apply_L(std::move(args));
}

/// Left linear independence of bs over C(a) via L_n being defined and nonzero.
inline bool indep_via_L(const Quat& a, std::span<const Quat> bs) {
  if (bs.empty()) throw InvalidInput("indep_via_L needs at least one vector");
  std::vector<Quat> assignment{a};
  assignment.insert(assignment.end(), bs.begin(), bs.end());
  return eval_ratexpr(build_L(static_cast<int>(bs.size())), assignment).is_defined_nonzero();
}

/// Same question answered by a rank computation over Q.
inline bool indep_oracle(const Quat& a, std::span<const Quat> bs) {
  return left_independent_over(bs, centralizer_of(a));
}

/// Left degree of b over C(a) from the minimal left polynomial.
inline int left_degree_via_oracle(const Quat& a, const Quat& b) {
  return min_left_poly(b, centralizer_of(a)).degree();
}

/// Left degree of b over C(a) as the first n with F_n(a, b) = 0.
inline int left_degree_via_F(const Quat& a, const Quat& b) {
  // F_n(a, 0) inverts zero for every n, yet 0 has minimal polynomial x.
  if (b.is_zero()) return 1;
  const std::vector<Quat> assignment{a, b};
  for (int n = 1; n <= 4; ++n)
    if (eval_ratexpr(build_F(n), assignment).is_defined_zero()) return n;
  throw InternalError("no F_n(a, b) vanished for n <= 4");
}

inline int left_degree(const Quat& a, const Quat& b) { return left_degree_via_oracle(a, b); }

/// Right degree of a over C(b).
inline int right_degree(const Quat& b, const Quat& a) {
  return min_right_poly(a, centralizer_of(b)).degree();
}

/// (a_0, ..., a_{n-1}) with a^n + a^{n-1} a_{n-1} + ... + a a_1 + a_0 = 0 and
/// every a_i commuting with b: the lower coefficients of the minimal right
/// polynomial of a over C(b).
inline std::vector<Quat> closure_witness(const Quat& a, const Quat& b) {
  UPoly p = min_right_poly(a, centralizer_of(b));
  if (!eval_right(p, a).is_zero()) throw InternalError("closure witness identity fails");
  std::vector<Quat> w(p.coeffs().begin(), p.coeffs().end() - 1);
  for (const auto& c : w)
    if (!commutator(c, b).is_zero()) throw InternalError("closure witness leaves C(b)");
  return w;
}

}  // namespace qnull
