#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sldg {

// Exact rational arithmetic on 64-bit numerator/denominator. Intermediate
// products are taken in 128-bit; overflow of the reduced result throws.
// This is used for constructing the shift-table polynomials and as the
// exact-integration oracle in the tests; it never appears in hot loops.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double to_double() const { return double(num_) / double(den_); }
  bool is_zero() const { return num_ == 0; }
  std::string str() const;

private:
  static Rational make(__int128 n, __int128 d);
  long long num_ = 0;
  long long den_ = 1;
};

// Dense polynomial with rational coefficients, lowest power first.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(Rational r) { return RatPoly({r}); }

  int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
  Rational coeff(int k) const { return k < int(c_.size()) ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly scaled(const Rational& s) const;

  // Antiderivative with zero constant term.
  RatPoly antiderivative() const;
  // Exact evaluation at a rational point.
  Rational eval(const Rational& x) const;
  // Composition p(a + b*x); a, b rational.
  RatPoly compose_affine(const Rational& a, const Rational& b) const;

  std::vector<double> to_doubles() const;
  std::string str(const std::string& var) const;

private:
  void trim();
  std::vector<Rational> c_;
};

// Legendre polynomial p_l with the standard normalization, as exact
// monomial coefficients.
RatPoly legendre_ratpoly(int l);

}  // namespace sldg
