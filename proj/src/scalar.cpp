#include "sympair/scalar.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace sympair {

namespace {

// Splits n = s^2 * r with r as small as trial division up to 10^4 can
// make it.  A remaining perfect-square cofactor is still extracted via
// mpz_perfect_square_p, so the returned r is never a perfect square > 1.
void extract_square_part(const mpz_class& n, mpz_class& s, mpz_class& r) {
  s = 1;
  r = n;
  for (unsigned long p = 2; p <= 10000 && mpz_cmp_ui(r.get_mpz_t(), 1) > 0; ++p) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), p, 2);
    if (p2 > r) break;
    while (mpz_divisible_p(r.get_mpz_t(), p2.get_mpz_t())) {
      r /= p2;
      s *= p;
    }
  }
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
    s *= root;
    r = 1;
  }
}

}  // namespace

Scalar::Scalar(Rational rational_part, Rational radical_part, unsigned long radicand)
    : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(radicand) {
  normalize();
}

void Scalar::normalize() {
  if (b_ == 0) {
    d_ = 0;
    return;
  }
  if (d_ == 0) {
    b_ = 0;
    return;
  }
  mpz_class s, r;
  extract_square_part(mpz_class(d_), s, r);
  if (r == 1) {
    a_ += b_ * s;
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= s;
  d_ = r.get_ui();
}

Scalar Scalar::sqrt_rational(const Rational& x) {
  if (x < 0) throw std::domain_error("sqrt_rational: negative argument");
  if (x == 0) return Scalar(0);
  // sqrt(p/q) = sqrt(p*q)/q with p*q = s^2 * r.
  mpz_class pq = x.get_num() * x.get_den();
  mpz_class s, r;
  extract_square_part(pq, s, r);
  Rational coeff(s, x.get_den());
  coeff.canonicalize();
  if (r == 1) return Scalar(coeff);
  if (!r.fits_ulong_p()) throw std::domain_error("sqrt_rational: radicand too large");
  return Scalar(Rational(0), coeff, r.get_ui());
}

namespace {

unsigned long common_radicand(const Scalar& l, const Scalar& r) {
  if (l.radical_part() == 0) return r.radicand();
  if (r.radical_part() == 0) return l.radicand();
  if (l.radicand() != r.radicand())
    throw std::domain_error("Scalar: mixing distinct quadratic extensions");
  return l.radicand();
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  unsigned long d = common_radicand(*this, o);
  Rational a = a_ * o.a_ + b_ * o.b_ * static_cast<long>(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  unsigned long d = common_radicand(*this, o);
  // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - d*b^2); the norm is
  // nonzero because d is not a perfect square.
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * static_cast<long>(o.radicand());
  Rational a = (a_ * o.a_ - b_ * o.b_ * static_cast<long>(d)) / norm;
  Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b disagree: compare a^2 with d*b^2.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * static_cast<long>(d_);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // unreachable for square-free d>1, kept for safety
  return c > 0 ? sa : sb;
}

std::string rational_str(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string Scalar::str() const {
  if (b_ == 0) return rational_str(a_);
  std::string radical = rational_str(b_) + "*sqrt(" + std::to_string(d_) + ")";
  if (a_ == 0) return radical;
  if (b_ > 0) return rational_str(a_) + "+" + radical;
  return rational_str(a_) + radical;  // sign carried by b_
}

Scalar Scalar::parse(const std::string& text) {
  auto sqrt_pos = text.find("sqrt(");
  if (sqrt_pos == std::string::npos) return Scalar(parse_rational(text));
  auto close = text.find(')', sqrt_pos);
  if (close == std::string::npos) throw std::invalid_argument("bad scalar literal: " + text);
  unsigned long d = std::stoul(text.substr(sqrt_pos + 5, close - sqrt_pos - 5));

  // Everything before the radical is "<a>+<b>*" / "<b>*" with the sign of
  // b attached to its literal.
  std::string head = text.substr(0, sqrt_pos);
  if (head.empty() || head.back() != '*')
    throw std::invalid_argument("bad scalar literal: " + text);
  head.pop_back();
  // Split off the b literal: scan back to a '+' or '-' that is not a
  // leading sign of the whole string and not an exponent-ish character.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      if (head[i - 1] == '/' || head[i - 1] == '+' || head[i - 1] == '-') continue;
      split = i;
      break;
    }
  }
  Rational a(0), b;
  if (split == std::string::npos) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, split));
    std::string btext = head.substr(split);
    if (btext == "+") btext = "1";
    else if (btext == "-") btext = "-1";
    else if (btext[0] == '+') btext = btext.substr(1);
    b = parse_rational(btext);
  }
  return Scalar(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.str();
}

}  // namespace sympair
