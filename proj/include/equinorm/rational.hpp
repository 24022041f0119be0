#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equinorm {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored reduced with a positive denominator, so two Rationals are
/// equal iff their numerators and denominators are equal. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(long long value) : num_(value), den_(1) {}           // NOLINT
  Rational(int value) : num_(value), den_(1) {}                 // NOLINT
  /// Reduces on construction. Throws UsageError when `den` is zero.
  Rational(Integer num, Integer den);

  const Integer& numerator() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  /// `p` when the denominator is 1, `p/q` otherwise.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Reduced {};
  Rational(Integer num, Integer den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Parses `[+-]?digits(/digits)?`.
Rational parse_rational(std::string_view text);

Rational abs(const Rational& r);

/// Ordered tuple of Rationals with fixed dimension >= 2.
class RationalVector {
 public:
  explicit RationalVector(std::vector<Rational> components);
  RationalVector(std::initializer_list<Rational> components);
  /// Zero vector of the given dimension.
  static RationalVector zeros(std::size_t dimension);

  std::size_t size() const noexcept { return components_.size(); }
  const Rational& operator[](std::size_t i) const { return components_[i]; }
  Rational& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Rational>& components() const noexcept { return components_; }

  auto begin() const noexcept { return components_.begin(); }
  auto end() const noexcept { return components_.end(); }

  bool is_zero() const;

  RationalVector operator-() const;
  RationalVector& operator+=(const RationalVector& rhs);
  RationalVector& operator-=(const RationalVector& rhs);
  RationalVector& operator*=(const Rational& scale);

  friend RationalVector operator+(RationalVector lhs, const RationalVector& rhs) { return lhs += rhs; }
  friend RationalVector operator-(RationalVector lhs, const RationalVector& rhs) { return lhs -= rhs; }
  friend RationalVector operator*(RationalVector v, const Rational& scale) { return v *= scale; }
  friend RationalVector operator*(const Rational& scale, RationalVector v) { return v *= scale; }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> components_;
};

/// Ordered tuple of Integers with fixed dimension >= 1.
class IntegerVector {
 public:
  explicit IntegerVector(std::vector<Integer> components);
  IntegerVector(std::initializer_list<Integer> components);

  std::size_t size() const noexcept { return components_.size(); }
  const Integer& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Integer>& components() const noexcept { return components_; }

  auto begin() const noexcept { return components_.begin(); }
  auto end() const noexcept { return components_.end(); }

  bool is_zero() const;
  RationalVector to_rational() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
  friend bool operator<(const IntegerVector& a, const IntegerVector& b) {
    return a.components_ < b.components_;
  }

 private:
  std::vector<Integer> components_;
};

/// Scalar product. Throws DimensionMismatch.
Rational dot(const RationalVector& a, const RationalVector& b);

Rational norm_sq(const RationalVector& a);

struct ClearedVector {
  IntegerVector values;
  /// Least positive rational with values = scale * v.
  Rational scale;
};

/// Multiplies by the LCM of the denominators.
ClearedVector clear_denominators(const RationalVector& v);

/// Divides by the gcd of all components and flips the global sign so that
/// the first nonzero component is positive. Throws DomainError on the
/// all-zero vector.
IntegerVector primitive_normalize(const IntegerVector& w);

/// Comma-separated rationals, e.g. `3/4,1,-2`. Any length >= 1.
std::vector<Rational> parse_rationals(std::string_view text);
std::string format_rationals(const std::vector<Rational>& values);

}  // namespace equinorm
