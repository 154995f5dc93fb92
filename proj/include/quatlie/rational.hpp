#pragma once
// Exact rationals: int64 numerator/denominator with promotion to GMP on overflow.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quatlie {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : num_(n) {}
  Rational(long n) : num_(n) {}
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (n == kMin || d == kMin) {
      mpq_class q;
      mpz_set_si(q.get_num_mpz_t(), static_cast<long>(n));
      mpz_set_si(q.get_den_mpz_t(), static_cast<long>(d));
      assign(q);
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
  }
  explicit Rational(const mpq_class& q) { assign(q); }

  // Accepts "p", "p/q" and finite decimals such as "-0.125" or "1e-3".
  static Rational parse(const std::string& s);
  // Exact value of a finite double (dyadic rational).
  static Rational from_double(double x);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), static_cast<long>(num_));
    mpz_set_si(q.get_den_mpz_t(), static_cast<long>(den_));
    return q;
  }
  double to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const {
    if (big_) return big_->get_str();
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  Rational operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      if (x.num_ == 0) return y;
      if (y.num_ == 0) return x;
      std::int64_t n, d;
      if (x.den_ == 1 && y.den_ == 1) {
        if (!__builtin_add_overflow(x.num_, y.num_, &n) && n != kMin) return small(n, 1);
      } else if (add_small(x.num_, x.den_, y.num_, y.den_, n, d)) {
        return small(n, d);
      }
    }
    return Rational(mpq_class(x.to_mpq() + y.to_mpq()));
  }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      if (x.num_ == 0 || y.num_ == 0) return Rational();
      std::int64_t n, d;
      if (x.den_ == 1 && y.den_ == 1) {
        if (!__builtin_mul_overflow(x.num_, y.num_, &n) && n != kMin) return small(n, 1);
      } else {
        std::int64_t g1 = std::gcd(x.num_, y.den_), g2 = std::gcd(y.num_, x.den_);
        if (!__builtin_mul_overflow(x.num_ / g1, y.num_ / g2, &n) &&
            !__builtin_mul_overflow(x.den_ / g2, y.den_ / g1, &d) && n != kMin) {
          return small(n, d);
        }
      }
    }
    return Rational(mpq_class(x.to_mpq() * y.to_mpq()));
  }
  friend Rational operator/(const Rational& x, const Rational& y) { return x * y.inv(); }
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) return x.num_ == y.num_ && x.den_ == y.den_;
    if (x.big_ && y.big_) return *x.big_ == *y.big_;
    return false;  // canonical form: big values never fit the small representation
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    if (!x.big_ && !y.big_) {
      return static_cast<__int128>(x.num_) * y.den_ < static_cast<__int128>(y.num_) * x.den_;
    }
    return x.to_mpq() < y.to_mpq();
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  static Rational small(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }

  // Knuth's addition with the gcd of denominators pulled out first.
  static bool add_small(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                        std::int64_t& rn, std::int64_t& rd) {
    std::int64_t g = std::gcd(b, d);
    std::int64_t t1, t2, n, den;
    if (__builtin_mul_overflow(a, d / g, &t1) || __builtin_mul_overflow(c, b / g, &t2) ||
        __builtin_add_overflow(t1, t2, &n) || __builtin_mul_overflow(b, d / g, &den) || n == kMin) {
      return false;
    }
    if (n == 0) {
      rn = 0;
      rd = 1;
      return true;
    }
    std::int64_t g2 = std::gcd(n, g);
    rn = n / g2;
    rd = den / g2;
    return true;
  }

  void assign(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && mpz_cmp_si(n.get_mpz_t(), static_cast<long>(kMin)) != 0) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const mpq_class>(std::move(q));
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

inline Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(q);
  }
  std::string mant = s;
  long exp10 = 0;
  auto e = s.find_first_of("eE");
  if (e != std::string::npos) {
    mant = s.substr(0, e);
    exp10 = std::stol(s.substr(e + 1));
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  if (!mant.empty() && mant[0] == '+') mant.erase(0, 1);
  mpz_class num(mant, 10);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * pow10) : mpq_class(num, pow10);
  return Rational(q);
}

inline Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(x));
}

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace quatlie
