#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace bihom {

/// Descriptor of the base field: exact rationals, or F_p for a prime p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field{}; }
  /// Throws precondition_error unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr std::uint64_t characteristic() const { return modulus_; }
  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class FieldElement;
  explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

class FieldElement {
 public:
  /// Rational zero.
  FieldElement();
  explicit FieldElement(mpq_class value);

  static FieldElement integer(long value, Field field = Field::rational());
  static FieldElement ratio(long num, long den, Field field = Field::rational());
  static FieldElement zero(Field field) { return integer(0, field); }
  static FieldElement one(Field field) { return integer(1, field); }
  /// Accepts "n" or "n/d"; over F_p a rational is reduced modulo p.
  static FieldElement parse(std::string_view text, Field field = Field::rational());

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws field_mismatch_error when the operands live in different fields.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  /// Negative exponents invert first; zero to a negative power throws.
  FieldElement pow(long long exponent) const;

  /// Exact value of a rational element; throws for residues.
  const mpq_class& rational_value() const;
  /// Residue in [0, p); throws for rationals.
  std::uint64_t residue() const;
  /// Integer value if this is a rational with denominator one.
  std::optional<long long> to_integer() const;
  /// Ordering is only defined for rationals.
  std::strong_ordering compare(const FieldElement& other) const;

  /// Image of a rational in F_p; throws if p divides the denominator.
  FieldElement reduce_mod(std::uint64_t p) const;
  /// Image in `target`: identity when the fields agree, reduction when a
  /// rational is sent to F_p. Any other combination throws.
  FieldElement to_field(Field target) const;

  /// "n" or "n/d" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit FieldElement(Residue r) : value_(r) {}
  static FieldElement residue_of(const mpz_class& v, std::uint64_t p);
  void require_same_field(const FieldElement& other) const;

  std::variant<mpq_class, Residue> value_;
};

}  // namespace bihom
