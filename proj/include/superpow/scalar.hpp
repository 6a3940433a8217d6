#pragma once
// Exact scalars: Q, or Q(i) with i^2 = -1.

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sp {

enum class Field { Rational, Gaussian };

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(int v) : re_(v) {}
  Scalar(const mpq_class& re) : re_(re) { re_.canonicalize(); }
  Scalar(long num, long den);
  Scalar(const mpq_class& re, const mpq_class& im);  // always Gaussian

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
  // "p/q", "p", or "a+bi"-style is not accepted here; see json_io for Gaussian.
  static Scalar parse(const std::string& s);

  Field field() const { return field_; }
  bool gaussian() const { return field_ == Field::Gaussian; }
  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar promoted() const;  // same value, Gaussian tag
  Scalar conj() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // value equality; the tag only records where a value came from
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;  // "p/q" or "a+bi" (text form)

 private:
  Field field_ = Field::Rational;
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(Scalar base, int e);
inline Scalar signed_one(int s) { return Scalar(s < 0 ? -1 : 1); }

}  // namespace sp
