#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilrigid {

// Arbitrary-precision integers and rationals. gmpxx keeps every mpq_class
// produced by arithmetic canonical (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a computation hits its configured budget before reaching an
/// answer. Never converted into a verdict.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& q);

/// Parses "p", "-p", "p/q". Rejects zero denominators and junk.
Rat parse_rat(std::string_view text);

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }

/// Element of Q(i): re + im*i.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rat n = o.norm();
    if (sgn(n) == 0) throw Error("GaussRat: division by zero");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

// Uniform zero test used by the templated linear algebra.
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussRat& z) { return z.is_zero(); }

}  // namespace nilrigid
