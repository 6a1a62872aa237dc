#ifndef SYMPAIR_SCALAR_HPP
#define SYMPAIR_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <iosfwd>
#include <string>

namespace sympair {

using Rational = mpq_class;

/// Exact element of a real quadratic extension Q(sqrt(d)), stored as
/// a + b*sqrt(d) with rational a, b and a fixed non-negative integer
/// radicand d.  Purely rational values carry d = 0, so values from
/// different extensions mix freely as long as at most one irrational
/// radicand is involved.  All arithmetic is exact; equality and sign
/// are decidable.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}          // NOLINT: implicit by design
  Scalar(long v) : a_(v), b_(0), d_(0) {}         // NOLINT
  Scalar(const Rational& v) : a_(v), b_(0), d_(0) {}  // NOLINT
  Scalar(Rational rational_part, Rational radical_part, unsigned long radicand);

  /// sqrt(x) for a non-negative rational x, with the square part of the
  /// radicand folded into the rational coefficient.
  static Scalar sqrt_rational(const Rational& x);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  unsigned long radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// -1, 0 or +1.  Decides the sign of a + b*sqrt(d) by comparing
  /// a^2 against d*b^2 when a and b disagree in sign.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

  friend bool operator==(const Scalar& l, const Scalar& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && (l.b_ == 0 || l.d_ == r.d_);
  }
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
  friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
  friend bool operator>(const Scalar& l, const Scalar& r) { return (l - r).sign() > 0; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return (l - r).sign() <= 0; }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return (l - r).sign() >= 0; }

  /// Canonical text form, e.g. "3/2", "-1", "1/2*sqrt(5)", "1+2*sqrt(3)".
  std::string str() const;
  /// Inverse of str(); also accepts plain integer and "p/q" literals.
  static Scalar parse(const std::string& text);

 private:
  void normalize();

  Rational a_, b_;
  unsigned long d_;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);

}  // namespace sympair

namespace Eigen {

template <>
struct NumTraits<sympair::Scalar> : GenericNumTraits<sympair::Scalar> {
  typedef sympair::Scalar Real;
  typedef sympair::Scalar NonInteger;
  typedef sympair::Scalar Nested;
  typedef sympair::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SYMPAIR_SCALAR_HPP
