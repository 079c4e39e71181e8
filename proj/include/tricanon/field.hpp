#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tricanon {

class FieldElement;

/// The scalar field: the rationals, or GF(p) for an odd prime p.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws CharacteristicTwo for p = 2 and InvalidField for non-primes.
  static Field prime(std::int64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  /// 0 for the rationals.
  std::int64_t characteristic() const noexcept { return p_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_mpz(const mpz_class& v) const;
  /// Rationals only, or GF(p) when den is invertible mod p.
  FieldElement from_fraction(const mpz_class& num, const mpz_class& den) const;
  FieldElement from_fraction(long num, long den) const;

  /// All elements 0, 1, ..., p-1 of a prime field.
  std::vector<FieldElement> elements() const;
  /// Smallest positive quadratic non-residue of a prime field.
  FieldElement smallest_nonresidue() const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) noexcept : p_(p) {}
  std::int64_t p_;
};

/// Exact scalar. Rationals are kept in lowest terms (mpq canonical form),
/// residues in [0, p).
class FieldElement {
 public:
  /// Rational zero.
  FieldElement() : value_(mpq_class(0)) {}

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p); prime fields only.
  std::int64_t residue() const;
  /// Rational value; rationals only.
  const mpq_class& rational() const;

  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Elements of different fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// "num/den" (or "num" when the denominator is 1) for rationals,
  /// the residue for prime fields.
  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(Field f, std::int64_t r) : field_(f), value_(r) {}
  FieldElement(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}

  void require_same_field(const FieldElement& b) const;

  Field field_ = Field::rationals();
  std::variant<std::int64_t, mpq_class> value_;
};

/// Some z with z*z == a, if one exists.
std::optional<FieldElement> is_square(const FieldElement& a);

struct SquareClass {
  FieldElement rep;
  FieldElement z;  // a == rep * z * z, z != 0
};

/// Default bound on |num * den| for rational square-class factorization.
mpz_class default_factor_bound();

/// Canonical representative of the multiplicative square class of a:
/// 0 for a = 0; 1 or the smallest non-residue over GF(p); the signed
/// squarefree integer over the rationals. Throws FactorizationOverflow
/// when the rational integer to factor exceeds the bound.
SquareClass square_class_rep(const FieldElement& a,
                             const mpz_class& factor_bound = default_factor_bound());

/// Signed squarefree part of a nonzero integer: trial division by small
/// primes, then Pollard rho on the cofactor.
mpz_class squarefree_part(const mpz_class& n,
                          const mpz_class& factor_bound = default_factor_bound());

bool is_prime(std::int64_t n) noexcept;

}  // namespace tricanon
