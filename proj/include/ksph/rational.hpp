#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace ksph {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Element of Q(i). All eigenvalues met in this project are Gaussian
// rational (torus eigenvalues are half-integer multiples of i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("GaussianRational: division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    os << z.re;
    if (sgn(z.im) != 0) os << (sgn(z.im) > 0 ? "+" : "") << z.im << "i";
    return os;
  }
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

// Scalar traits used by the generic linear algebra.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational inverse(const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("Rational: division by zero");
    return Rational(1) / q;
  }
};

template <>
struct scalar_traits<GaussianRational> {
  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational inverse(const GaussianRational& z) {
    GaussianRational r(1);
    r /= z;
    return r;
  }
};

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace ksph
