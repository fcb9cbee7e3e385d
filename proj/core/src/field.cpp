#include "bihom/field.hpp"

#include <cctype>
#include <limits>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

// Moduli stay below 2^32, so the product fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1U;
  }
  return result;
}

bool valid_integer_literal(std::string_view s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32U) || !is_prime(p)) {
    throw precondition_error("field modulus must be a prime below 2^32, got " +
                             std::to_string(p));
  }
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

FieldElement::FieldElement() : value_(mpq_class(0)) {}

FieldElement::FieldElement(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

FieldElement FieldElement::residue_of(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return FieldElement(Residue{r.get_ui(), p});
}

FieldElement FieldElement::integer(long value, Field field) {
  if (field.is_rational()) return FieldElement(mpq_class(value));
  return residue_of(mpz_class(value), field.characteristic());
}

FieldElement FieldElement::ratio(long num, long den, Field field) {
  if (den == 0) throw precondition_error("zero denominator");
  return FieldElement(mpq_class(num, den)).to_field(field);
}

FieldElement FieldElement::parse(std::string_view text, Field field) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_literal(num) || !valid_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw parse_error("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  FieldElement value(q);
  if (field.is_rational()) return value;
  if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(field.characteristic()))) {
    throw parse_error("denominator of '" + std::string(text) + "' vanishes in " +
                      field.to_string());
  }
  return value.reduce_mod(field.characteristic());
}

Field FieldElement::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field{r->modulus};
  return Field::rational();
}

bool FieldElement::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void FieldElement::require_same_field(const FieldElement& other) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&other.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw field_mismatch_error("operands from " + field().to_string() + " and " +
                               other.field().to_string());
  }
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldElement(mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = r->value + std::get<Residue>(rhs.value_).value;
    r->value = s >= r->modulus ? s - r->modulus : s;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t b = std::get<Residue>(rhs.value_).value;
    r->value = r->value >= b ? r->value - b : r->value + r->modulus - b;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<FieldElement::Residue>(&a.value_)) {
    return r->value == std::get<FieldElement::Residue>(b.value_).value;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw singular_matrix_error("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    return FieldElement(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
  }
  return FieldElement(mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement FieldElement::pow(long long exponent) const {
  FieldElement base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                                      : static_cast<unsigned long long>(exponent);
  FieldElement result = one(field());
  while (e > 0) {
    if (e & 1ULL) result *= base;
    e >>= 1ULL;
    if (e > 0) base *= base;
  }
  return result;
}

const mpq_class& FieldElement::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw field_mismatch_error("rational value requested from " + field().to_string());
}

std::uint64_t FieldElement::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw field_mismatch_error("residue requested from a rational");
}

std::optional<long long> FieldElement::to_integer() const {
  const auto* q = std::get_if<mpq_class>(&value_);
  if (q == nullptr || q->get_den() != 1 || !q->get_num().fits_slong_p()) return std::nullopt;
  return q->get_num().get_si();
}

std::strong_ordering FieldElement::compare(const FieldElement& other) const {
  const int c = cmp(rational_value(), other.rational_value());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

FieldElement FieldElement::reduce_mod(std::uint64_t p) const {
  const mpq_class& q = rational_value();
  Field::prime(p);
  FieldElement den = residue_of(q.get_den(), p);
  if (den.is_zero()) {
    throw unsupported_field_error("denominator of " + to_string() + " vanishes mod " +
                                  std::to_string(p));
  }
  return residue_of(q.get_num(), p) / den;
}

FieldElement FieldElement::to_field(Field target) const {
  Field own = field();
  if (own == target) return *this;
  if (own.is_rational()) return reduce_mod(target.characteristic());
  throw field_mismatch_error("cannot map " + own.to_string() + " into " + target.to_string());
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace bihom
