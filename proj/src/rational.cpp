#include "sldg/rational.hpp"

#include <limits>
#include <numeric>
#include <sstream>

namespace sldg {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::make(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lim = std::numeric_limits<long long>::max();
  if (n > lim || n < -lim || d > lim)
    throw std::overflow_error("rational: 64-bit overflow after reduction");
  Rational r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  return r;
}

Rational::Rational(long long n, long long d) { *this = make(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::make((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("rational: division by zero");
  return Rational::make((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << '/' << den_;
  return os.str();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(int(k)) + o.coeff(int(k));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < r.size(); ++k) r[k] = coeff(int(k)) - o.coeff(int(k));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (c_.empty() || o.c_.empty()) return RatPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::scaled(const Rational& s) const {
  std::vector<Rational> r(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k] * s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::antiderivative() const {
  std::vector<Rational> r(c_.size() + 1, Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / Rational(1 + (long long)k);
  return RatPoly(std::move(r));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

RatPoly RatPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the affine argument: result = sum c_k (a + b x)^k.
  RatPoly arg({a, b});
  RatPoly acc;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * arg + RatPoly::constant(c_[k]);
  return acc;
}

std::vector<double> RatPoly::to_doubles() const {
  std::vector<double> r(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) r[k] = c_[k].to_double();
  if (r.empty()) r.push_back(0.0);
  return r;
}

std::string RatPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Rational a = c_[k];
    if (first) {
      if (a.num() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.num() < 0 ? " - " : " + ");
      if (a.num() < 0) a = -a;
    }
    bool unit = (a.num() == 1 && a.den() == 1);
    if (k == 0 || !unit) os << a.str();
    if (k > 0) {
      if (!unit) os << " ";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

RatPoly legendre_ratpoly(int l) {
  RatPoly pm1 = RatPoly::constant(Rational(1));
  if (l == 0) return pm1;
  RatPoly p({Rational(0), Rational(1)});
  for (int n = 1; n < l; ++n) {
    // (n+1) p_{n+1} = (2n+1) x p_n - n p_{n-1}
    RatPoly xp = p * RatPoly({Rational(0), Rational(1)});
    RatPoly next =
        (xp.scaled(Rational(2 * n + 1)) - pm1.scaled(Rational(n))).scaled(Rational(1, n + 1));
    pm1 = p;
    p = next;
  }
  return p;
}

}  // namespace sldg
