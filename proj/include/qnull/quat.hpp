#pragma once

#include <array>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "rat.hpp"

namespace qnull {

/// Rational quaternion w + x i + y j + z k, an element of H over Q.
///
/// Coordinates always use the ordered basis (1, i, j, k).
class Quat {
 public:
  Quat() = default;
  Quat(Rat w) : w_(std::move(w)) {}  // NOLINT(google-explicit-constructor)
  Quat(long w) : w_(w) {}             // NOLINT(google-explicit-constructor)
  Quat(int w) : w_(w) {}              // NOLINT(google-explicit-constructor)
  Quat(Rat w, Rat x, Rat y, Rat z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static Quat i() { return {0, 1, 0, 0}; }
  static Quat j() { return {0, 0, 1, 0}; }
  static Quat k() { return {0, 0, 0, 1}; }
  /// Basis element by index 0..3 = 1, i, j, k.
  static Quat unit(int idx) {
    std::array<Rat, 4> c{0, 0, 0, 0};
    c.at(idx) = 1;
    return {c[0], c[1], c[2], c[3]};
  }
  static Quat from_coords(const std::array<Rat, 4>& c) { return {c[0], c[1], c[2], c[3]}; }

  const Rat& w() const { return w_; }
  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }
  const Rat& z() const { return z_; }
  std::array<Rat, 4> coords() const { return {w_, x_, y_, z_}; }
  const Rat& operator[](int idx) const {
    switch (idx) {
      case 0: return w_;
      case 1: return x_;
      case 2: return y_;
      default: return z_;
    }
  }

  bool is_zero() const { return w_.is_zero() && x_.is_zero() && y_.is_zero() && z_.is_zero(); }
  /// Central in H_Q, i.e. rational.
  bool is_real() const { return x_.is_zero() && y_.is_zero() && z_.is_zero(); }
  bool is_pure() const { return w_.is_zero(); }

  Rat re() const { return w_; }
  Quat im() const { return {0, x_, y_, z_}; }
  Quat conj() const { return {w_, -x_, -y_, -z_}; }
  Rat norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }

  Quat inv() const {
    if (is_zero()) throw DivisionByZero("inverse of quaternion zero");
    Rat n = norm().inverse();
    return {w_ * n, -x_ * n, -y_ * n, -z_ * n};
  }

  Quat& operator+=(const Quat& o) {
    w_ += o.w_; x_ += o.x_; y_ += o.y_; z_ += o.z_;
    return *this;
  }
  Quat& operator-=(const Quat& o) {
    w_ -= o.w_; x_ -= o.x_; y_ -= o.y_; z_ -= o.z_;
    return *this;
  }
  Quat& operator*=(const Quat& o) { return *this = *this * o; }

  friend Quat operator+(Quat a, const Quat& b) { return a += b; }
  friend Quat operator-(Quat a, const Quat& b) { return a -= b; }
  friend Quat operator-(const Quat& a) { return {-a.w_, -a.x_, -a.y_, -a.z_}; }
  friend Quat operator*(const Quat& a, const Quat& b) {
    return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
            a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
            a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
            a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
  }
  friend Quat operator*(const Rat& s, const Quat& q) {
    return {s * q.w_, s * q.x_, s * q.y_, s * q.z_};
  }
  friend bool operator==(const Quat& a, const Quat& b) {
    return a.w_ == b.w_ && a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

  /// Text form using the literal grammar, e.g. `1 - 2/3i + j - k`.
  std::string str() const {
    static constexpr const char* kUnits[] = {"", "i", "j", "k"};
    std::string out;
    for (int idx = 0; idx < 4; ++idx) {
      const Rat& c = (*this)[idx];
      if (c.is_zero()) continue;
      Rat mag = c.sign() < 0 ? -c : c;
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (idx == 0 || mag != Rat(1)) out += mag.str();
      out += kUnits[idx];
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << q.str(); }

 private:
  Rat w_, x_, y_, z_;
};

/// ab - ba.
inline Quat commutator(const Quat& a, const Quat& b) { return a * b - b * a; }

inline Quat pow(const Quat& a, unsigned e) {
  Quat r(1), base = a;
  while (e) {
    if (e & 1U) r = r * base;
    base = base * base;
    e >>= 1U;
  }
  return r;
}

}  // namespace qnull
