#pragma once

// Exact rational arithmetic. Thin value type over GMP's mpq_class that keeps
// the canonical reduced form and adds exact decimal / "p/q" parsing.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypermat {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT
  Rational(unsigned long v) : q_(v) {}  // NOLINT
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Parses "7", "-3", "5/2" or "0.125". Decimals are converted exactly
  /// (0.1 -> 1/10); exponent notation is rejected.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  mpz_class ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  /// "p/q", or just "p" for integers.
  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  std::size_t hash() const {
    return std::hash<std::string>{}(str());
  }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  };
  if (text.empty()) return fail();

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return fail();

  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class d{std::string(den)};
    if (d == 0) return fail();
    q = mpq_class(mpz_class(std::string(num)), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(digits.empty() ? "0" : digits), den);
  } else {
    if (!all_digits(body)) return fail();
    q = mpq_class(mpz_class(std::string(body)));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace hypermat

template <>
struct std::hash<hypermat::Rational> {
  std::size_t operator()(const hypermat::Rational& r) const { return r.hash(); }
};
