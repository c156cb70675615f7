#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace twistcoh {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// stored inline and use 128-bit intermediate arithmetic; anything larger
/// is promoted to a heap-allocated GMP rational. The representation is
/// canonical: a value is "big" exactly when it does not fit the small form,
/// so equality and encoding never have to compare across the two forms.
class Rational {
 public:
  Rational() noexcept : num_(0), den_(1) {}
  Rational(int v) noexcept : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : Rational(static_cast<long long>(v)) {}  // NOLINT
  Rational(long long v) {  // NOLINT(google-explicit-constructor)
    if (v == kMinInt64) {
      set_big(mpq_class(mpz_class(std::to_string(v))));
    } else {
      num_ = v;
      den_ = 1;
    }
  }
  Rational(long long n, long long d) { assign(static_cast<i128>(n), static_cast<i128>(d)); }
  explicit Rational(const BigInt& v) { assign_mpq(mpq_class(v)); }
  explicit Rational(const mpq_class& v) { assign_mpq(v); }

  Rational(const Rational& o) : den_(o.den_) {
    if (o.is_big()) {
      big_ = new __mpq_struct;
      mpq_init(big_);
      mpq_set(big_, o.big_);
    } else {
      num_ = o.num_;
    }
  }
  Rational(Rational&& o) noexcept : den_(o.den_) {
    if (o.is_big()) {
      big_ = o.big_;
      o.num_ = 0;
      o.den_ = 1;
    } else {
      num_ = o.num_;
    }
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      Rational tmp(o);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    swap(o);
    return *this;
  }
  ~Rational() { release(); }

  void swap(Rational& o) noexcept {
    std::swap(den_, o.den_);
    std::swap(raw_, o.raw_);
  }

  bool is_big() const noexcept { return den_ == 0; }
  bool is_zero() const noexcept { return !is_big() && num_ == 0; }
  bool is_one() const noexcept { return !is_big() && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept {
    return is_big() ? mpz_cmp_ui(mpq_denref(big_), 1) == 0 : den_ == 1;
  }
  int sign() const noexcept {
    if (is_big()) return mpq_sgn(big_);
    return (num_ > 0) - (num_ < 0);
  }

  BigInt numerator() const {
    if (is_big()) return BigInt(mpq_numref(big_));
    return small_to_mpz(num_);
  }
  BigInt denominator() const {
    if (is_big()) return BigInt(mpq_denref(big_));
    return small_to_mpz(den_);
  }
  mpq_class to_mpq() const {
    if (is_big()) return mpq_class(big_);
    mpq_class q;
    mpz_set(q.get_num_mpz_t(), small_to_mpz(num_).get_mpz_t());
    mpz_set(q.get_den_mpz_t(), small_to_mpz(den_).get_mpz_t());
    return q;
  }

  std::string to_string() const {
    if (is_big()) return to_mpq().get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Prefix-free canonical byte encoding; equal values encode identically.
  void append_encoding(std::string& out) const {
    if (!is_big()) {
      out.push_back('\0');
      append_varint(out, zigzag(num_));
      append_varint(out, static_cast<std::uint64_t>(den_));
      return;
    }
    const std::string s = to_mpq().get_str();
    out.push_back('\1');
    append_varint(out, s.size());
    out.append(s);
  }

  std::size_t hash() const noexcept {
    if (is_big()) return std::hash<std::string>{}(to_mpq().get_str());
    std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

  Rational operator-() const {
    if (!is_big()) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    mpq_class q = to_mpq();
    return Rational(mpq_class(-q));
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!is_big()) {
      Rational r;
      r.num_ = num_ < 0 ? -den_ : den_;
      r.den_ = num_ < 0 ? -num_ : num_;
      return r;
    }
    mpq_class q = to_mpq();
    mpq_inv(q.get_mpq_t(), q.get_mpq_t());
    return Rational(q);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_big() || b.is_big()) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Rational r;
    if (a.den_ == b.den_) {
      const i128 n = static_cast<i128>(a.num_) + b.num_;
      if (a.den_ == 1) {
        r.assign_reduced(n, 1);
      } else {
        const std::int64_t g = gcd_mod(n, a.den_);
        r.assign_reduced(n / g, a.den_ / g);
      }
      return r;
    }
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const i128 t = static_cast<i128>(a.num_) * (b.den_ / g) + static_cast<i128>(b.num_) * (a.den_ / g);
    if (t == 0) return r;
    const std::int64_t g2 = g == 1 ? 1 : gcd_mod(t, g);
    r.assign_reduced(t / g2, static_cast<i128>(a.den_ / g) * (b.den_ / g2));
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_big() || b.is_big()) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    Rational r;
    if (a.den_ == 1 && b.den_ == 1) {
      r.assign_reduced(static_cast<i128>(a.num_) * b.num_, 1);
      return r;
    }
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    r.assign_reduced(static_cast<i128>(a.num_ / g1) * (b.num_ / g2),
                     static_cast<i128>(a.den_ / g2) * (b.den_ / g1));
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (a.is_big() != b.is_big()) return false;
    if (a.is_big()) return mpq_equal(a.big_, b.big_) != 0;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.is_big() && !b.is_big()) {
      const i128 l = static_cast<i128>(a.num_) * b.den_;
      const i128 r = static_cast<i128>(b.num_) * a.den_;
      return l <=> r;
    }
    const int c = mpq_cmp(a.to_mpq().get_mpq_t(), b.to_mpq().get_mpq_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

 private:
  using i128 = __int128;
  static constexpr std::int64_t kMinInt64 = INT64_MIN;
  static constexpr std::int64_t kMaxInt64 = INT64_MAX;

  static std::uint64_t zigzag(std::int64_t v) {
    return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
  }
  static void append_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
      out.push_back(static_cast<char>((v & 0x7F) | 0x80));
      v >>= 7;
    }
    out.push_back(static_cast<char>(v));
  }

  static BigInt small_to_mpz(std::int64_t v) {
    BigInt z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return z;
  }

  static BigInt i128_to_mpz(i128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
    BigInt z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
    if (neg) z = -z;
    return z;
  }

  // gcd(|n|, d) for d > 0, without 128-bit division loops.
  static std::int64_t gcd_mod(i128 n, std::int64_t d) {
    i128 m = n % d;
    if (m < 0) m = -m;
    return std::gcd(static_cast<std::int64_t>(m), d);
  }

  static bool fits(i128 v) { return v > kMinInt64 && v <= kMaxInt64; }

  // n/d already in lowest terms, d > 0.
  void assign_reduced(i128 n, i128 d) {
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return;
    }
    mpq_class q;
    mpz_set(q.get_num_mpz_t(), i128_to_mpz(n).get_mpz_t());
    mpz_set(q.get_den_mpz_t(), i128_to_mpz(d).get_mpz_t());
    set_big(q);
  }

  void assign(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    mpq_class q;
    mpz_set(q.get_num_mpz_t(), i128_to_mpz(n).get_mpz_t());
    mpz_set(q.get_den_mpz_t(), i128_to_mpz(d).get_mpz_t());
    q.canonicalize();
    assign_mpq(q);
  }

  void assign_mpq(const mpq_class& q) {
    const mpz_srcptr n = q.get_num_mpz_t();
    const mpz_srcptr d = q.get_den_mpz_t();
    if (mpz_fits_slong_p(n) && mpz_fits_slong_p(d) && mpz_get_si(n) != kMinInt64) {
      num_ = mpz_get_si(n);
      den_ = mpz_get_si(d);
      return;
    }
    set_big(q);
  }

  void set_big(const mpq_class& q) {
    big_ = new __mpq_struct;
    mpq_init(big_);
    mpq_set(big_, q.get_mpq_t());
    den_ = 0;
  }

  void release() noexcept {
    if (is_big()) {
      mpq_clear(big_);
      delete big_;
      num_ = 0;
      den_ = 1;
    }
  }

  // den_ == 0 marks the big form; otherwise num_/den_ is the value.
  union {
    std::int64_t num_;
    mpq_ptr big_;
    std::uint64_t raw_;
  };
  std::int64_t den_;
};

inline Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace twistcoh

template <>
struct std::hash<twistcoh::Rational> {
  std::size_t operator()(const twistcoh::Rational& q) const noexcept { return q.hash(); }
};
