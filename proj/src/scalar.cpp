#include "superpow/scalar.hpp"

#include <ostream>

namespace sp {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(const mpq_class& re, const mpq_class& im)
    : field_(Field::Gaussian), re_(re), im_(im) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::promoted() const {
  Scalar r = *this;
  r.field_ = Field::Gaussian;
  return r;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (o.gaussian()) {
    im_ += o.im_;
    field_ = Field::Gaussian;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (o.gaussian()) {
    im_ -= o.im_;
    field_ = Field::Gaussian;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!gaussian() && !o.gaussian()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  field_ = Field::Gaussian;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (!gaussian() && !o.gaussian()) {
    re_ /= o.re_;
    return *this;
  }
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  field_ = Field::Gaussian;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

std::string Scalar::str() const {
  if (!gaussian() || sgn(im_) == 0) return re_.get_str();
  std::string s;
  if (sgn(re_) != 0) s = re_.get_str() + (sgn(im_) > 0 ? "+" : "");
  if (im_ == 1) return s + "i";
  if (im_ == -1) return s + "-i";
  return s + im_.get_str() + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(Scalar base, int e) {
  if (e < 0) {
    base = Scalar(1) / base;
    e = -e;
  }
  Scalar r(1);
  if (base.gaussian()) r = r.promoted();
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace sp
