#ifndef BGG_FIELD_HPP
#define BGG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bgg {

/// Exact rational scalar used for characteristic-zero computations.
using Rational = boost::multiprecision::cpp_rational;

inline std::string field_to_string(const Rational& x) { return x.str(); }

inline long long field_to_ll(const Rational& x) {
  if (boost::multiprecision::denominator(x) != 1)
    throw std::logic_error("field_to_ll: rational is not an integer");
  return static_cast<long long>(boost::multiprecision::numerator(x));
}

/// Element of a prime field F_p.
///
/// The modulus travels with the value, so containers of elements need no
/// side channel. A modulus of 0 marks a scalar constant (produced by
/// `Fp(k)`) that has not yet met a bound element; binary operations bind
/// it to the other operand's modulus. Bound values are kept reduced to
/// [0, p).
class Fp {
 public:
  Fp() : value_(0), mod_(0) {}
  Fp(long long v) : value_(v), mod_(0) {}
  Fp(long long v, std::int64_t p) : value_(v), mod_(p) { reduce(); }

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return mod_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    return Fp(a.value_ + b.value_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    return Fp(a.value_ - b.value_, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    return Fp(a.value_ * b.value_, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-value_, mod_); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp inverse() const {
    if (mod_ == 0) {
      if (value_ == 1 || value_ == -1) return *this;
      throw std::logic_error("Fp: inverse of unbound scalar");
    }
    if (value_ == 0) throw std::logic_error("Fp: division by zero");
    std::int64_t t = 0, new_t = 1, r = mod_, new_r = value_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (r != 1) throw std::logic_error("Fp: modulus is not prime");
    return Fp(t, mod_);
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::int64_t p = join(a, b);
    if (p == 0) return a.value_ == b.value_;
    return Fp(a.value_, p).value_ == Fp(b.value_, p).value_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  // Common modulus of two operands; mixing two distinct bound moduli is a
  // programming error, not an input condition.
  static std::int64_t join(const Fp& a, const Fp& b) {
    if (a.mod_ != 0 && b.mod_ != 0 && a.mod_ != b.mod_)
      throw std::logic_error("Fp: mixed moduli");
    return a.mod_ != 0 ? a.mod_ : b.mod_;
  }
  void reduce() {
    if (mod_ != 0) {
      value_ %= mod_;
      if (value_ < 0) value_ += mod_;
    }
  }
  std::int64_t value_;
  std::int64_t mod_;
};

inline std::string field_to_string(const Fp& x) {
  return std::to_string(x.value());
}

inline long long field_to_ll(const Fp& x) { return x.value(); }

inline bool is_prime_modulus(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace bgg

#endif
