#include "equinorm/rational.hpp"

#include "equinorm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace equinorm {

namespace mp = boost::multiprecision;

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw UsageError("zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = mp::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const { return Rational(-num_, den_, Reduced{}); }

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string token(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw ParseError("malformed rational '" + token + "'");
  }
  Integer num{std::string(num_text)};
  Integer den{std::string(den_text)};
  if (den.is_zero()) throw ParseError("zero denominator in '" + token + "'");
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

RationalVector::RationalVector(std::vector<Rational> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw DimensionMismatch("vector dimension must be at least 2");
}

RationalVector::RationalVector(std::initializer_list<Rational> components)
    : RationalVector(std::vector<Rational>(components)) {}

RationalVector RationalVector::zeros(std::size_t dimension) {
  return RationalVector(std::vector<Rational>(dimension));
}

bool RationalVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalVector RationalVector::operator-() const {
  RationalVector out = *this;
  for (auto& c : out.components_) c = -c;
  return out;
}

static void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

RationalVector& RationalVector::operator+=(const RationalVector& rhs) {
  require_same_size(size(), rhs.size());
  for (std::size_t i = 0; i < size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& rhs) {
  require_same_size(size(), rhs.size());
  for (std::size_t i = 0; i < size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (auto& c : components_) c *= scale;
  return *this;
}

IntegerVector::IntegerVector(std::vector<Integer> components) : components_(std::move(components)) {
  if (components_.empty()) throw DimensionMismatch("integer vector must be nonempty");
}

IntegerVector::IntegerVector(std::initializer_list<Integer> components)
    : IntegerVector(std::vector<Integer>(components)) {}

bool IntegerVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Integer& i) { return i.is_zero(); });
}

RationalVector IntegerVector::to_rational() const {
  std::vector<Rational> out;
  out.reserve(size());
  for (const auto& c : components_) out.emplace_back(c);
  return RationalVector(std::move(out));
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_size(a.size(), b.size());
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational norm_sq(const RationalVector& a) { return dot(a, a); }

ClearedVector clear_denominators(const RationalVector& v) {
  Integer lcm = 1;
  for (const auto& c : v) lcm = mp::lcm(lcm, c.denominator());
  std::vector<Integer> values;
  values.reserve(v.size());
  for (const auto& c : v) values.push_back(c.numerator() * (lcm / c.denominator()));
  return {IntegerVector(std::move(values)), Rational(lcm)};
}

IntegerVector primitive_normalize(const IntegerVector& w) {
  if (w.is_zero()) throw DomainError("cannot normalize the zero vector");
  Integer g = 0;
  for (const auto& c : w) g = mp::gcd(g, mp::abs(c));
  const auto first = std::find_if(w.begin(), w.end(), [](const Integer& c) { return !c.is_zero(); });
  if (first->sign() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(w.size());
  for (const auto& c : w) out.push_back(c / g);
  return IntegerVector(std::move(out));
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].to_string();
  }
  return out;
}

}  // namespace equinorm
