#pragma once

// Torus-knot parameter model and the exact integer helpers shared by the
// rest of the library.  Everything here is a value type; all operations are
// pure and safe to call concurrently.

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torusknot {

struct NonPositiveError : std::invalid_argument {
  NonPositiveError(long long p, long long q)
      : std::invalid_argument("torus knot parameters must be positive, got (" +
                              std::to_string(p) + ", " + std::to_string(q) + ")") {}
};

struct NonCoprimeError : std::invalid_argument {
  NonCoprimeError(long long p, long long q)
      : std::invalid_argument("torus knot parameters must be coprime, got (" +
                              std::to_string(p) + ", " + std::to_string(q) +
                              ") with gcd " + std::to_string(std::gcd(p, q))) {}
};

// T(p,q) for coprime p,q >= 1, stored with p <= q.  T(p,q) = T(q,p), so the
// constructor normalizes the order; p == 1 marks the unknot.
class TorusKnot {
 public:
  TorusKnot(long long p, long long q) : p_(p), q_(q) {
    if (p_ < 1 || q_ < 1) throw NonPositiveError(p, q);
    if (std::gcd(p_, q_) != 1) throw NonCoprimeError(p, q);
    if (p_ > q_) std::swap(p_, q_);
  }

  long long p() const noexcept { return p_; }
  long long q() const noexcept { return q_; }
  bool is_unknot() const noexcept { return p_ == 1; }

  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

 private:
  long long p_;
  long long q_;
};

inline std::string to_string(const TorusKnot& k) {
  return "T(" + std::to_string(k.p()) + "," + std::to_string(k.q()) + ")";
}

// Floor division: rounds toward negative infinity, e.g. floor_div(-2, 12) == -1.
inline long long floor_div(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("floor_div requires a positive divisor");
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Exact rational with positive denominator, always reduced.  The invariants
// in this library only ever produce integers or half-integers, but the type
// does not depend on that.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    reduce();
  }

  long long numerator() const noexcept { return num_; }
  long long denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  long long to_integer() const {
    if (!is_integer())
      throw std::logic_error("rational " + to_string(*this) + " is not an integer");
    return num_;
  }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::string to_string(const Rational& r) {
    return r.den_ == 1 ? std::to_string(r.num_)
                       : std::to_string(r.num_) + "/" + std::to_string(r.den_);
  }

 private:
  void reduce() {
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace torusknot
