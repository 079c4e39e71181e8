#include "tricanon/field.hpp"

#include "tricanon/error.hpp"

#include <algorithm>
#include <map>

namespace tricanon {

namespace {

constexpr std::int64_t kMaxPrime = (std::int64_t{1} << 31) - 1;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t quot = r0 / r1;
    std::int64_t t = r0 - quot * r1;
    r0 = r1;
    r1 = t;
    t = s0 - quot * s1;
    s0 = s1;
    s1 = t;
  }
  return ((s0 % p) + p) % p;
}

std::int64_t reduce(const mpz_class& v, std::int64_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

bool euler_square(std::int64_t a, std::int64_t p) {
  return a == 0 || mod_pow(a, (p - 1) / 2, p) == 1;
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p == 2) throw CharacteristicTwo("GF(2) has characteristic two");
  if (!is_prime(p)) throw InvalidField("GF(" + std::to_string(p) + "): modulus is not prime");
  if (p > kMaxPrime) throw InvalidField("GF(" + std::to_string(p) + "): modulus too large");
  return Field(p);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (is_rational()) return FieldElement(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % p_;
  if (r < 0) r += p_;
  return FieldElement(*this, r);
}

FieldElement Field::from_mpz(const mpz_class& v) const {
  if (is_rational()) return FieldElement(*this, mpq_class(v));
  return FieldElement(*this, reduce(v, p_));
}

FieldElement Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(*this, std::move(q));
  }
  std::int64_t d = reduce(den, p_);
  if (d == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p_));
  return FieldElement(*this, reduce(num, p_) * mod_inverse(d, p_) % p_);
}

FieldElement Field::from_fraction(long num, long den) const {
  return from_fraction(mpz_class(num), mpz_class(den));
}

std::vector<FieldElement> Field::elements() const {
  if (is_rational()) throw UnsupportedField("the rationals cannot be enumerated");
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(p_));
  for (std::int64_t r = 0; r < p_; ++r) out.push_back(FieldElement(*this, r));
  return out;
}

FieldElement Field::smallest_nonresidue() const {
  if (is_rational()) throw UnsupportedField("non-residues are defined for prime fields only");
  std::int64_t a = 2;
  while (euler_square(a, p_)) ++a;
  return FieldElement(*this, a);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

bool FieldElement::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::int64_t FieldElement::residue() const {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return *r;
  throw FieldMismatch("residue() requested from a rational element");
}

const mpq_class& FieldElement::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational() requested from a prime-field element");
}

void FieldElement::require_same_field(const FieldElement& b) const {
  if (!(field_ == b.field_))
    throw FieldMismatch("operands from " + field_.name() + " and " + b.field_.name());
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<std::int64_t>(&value_))
    return FieldElement(field_, mod_inverse(*r, field_.characteristic()));
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return FieldElement(field_, std::move(q));
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<std::int64_t>(&value_))
    return FieldElement(field_, *r == 0 ? 0 : field_.characteristic() - *r);
  mpq_class q = -std::get<mpq_class>(value_);
  return FieldElement(field_, std::move(q));
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  require_same_field(b);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r += std::get<std::int64_t>(b.value_);
    if (*r >= field_.characteristic()) *r -= field_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  require_same_field(b);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r -= std::get<std::int64_t>(b.value_);
    if (*r < 0) *r += field_.characteristic();
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  require_same_field(b);
  if (auto* r = std::get_if<std::int64_t>(&value_)) {
    *r = *r * std::get<std::int64_t>(b.value_) % field_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  require_same_field(b);
  return *this *= b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (const auto* r = std::get_if<std::int64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

std::optional<FieldElement> is_square(const FieldElement& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (f.is_prime_field()) {
    const std::int64_t p = f.characteristic();
    const std::int64_t r = a.residue();
    if (!euler_square(r, p)) return std::nullopt;
    for (std::int64_t z = 1; z < p; ++z)
      if (z * z % p == r) return f.from_int(z);
    throw InternalInvariantViolation("Euler criterion disagrees with exhaustive search");
  }
  const mpq_class& q = a.rational();
  if (q < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn = sqrt(num), sd = sqrt(den);
  return f.from_fraction(sn, sd);
}

mpz_class default_factor_bound() {
  mpz_class bound(1);
  bound <<= 192;
  return bound;
}

namespace {

constexpr unsigned long kTrialLimit = 1000;
constexpr unsigned long kRhoIterations = 1ul << 22;

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
mpz_class pollard_brent(const mpz_class& n, unsigned long c) {
  mpz_class y = 2, x, g = 1, q = 1, ys;
  const unsigned long m = 128;
  unsigned long r = 1, steps = 0;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    for (unsigned long k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        q = q * abs(x - y) % n;
      }
      g = gcd(q, n);
      steps += m;
    }
    r *= 2;
    if (steps > kRhoIterations) return 0;
  }
  if (g == n) {
    do {
      step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

// Adds the prime factorization of r (no prime factor below kTrialLimit) to
// exponents, with the given multiplicity.
void factor_into(const mpz_class& r, unsigned long multiplicity,
                 std::map<mpz_class, unsigned long>& exponents) {
  if (r == 1) return;
  if (mpz_probab_prime_p(r.get_mpz_t(), 30) > 0) {
    exponents[r] += multiplicity;
    return;
  }
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    factor_into(sqrt(r), 2 * multiplicity, exponents);
    return;
  }
  for (unsigned long c = 1; c <= 16; ++c) {
    const mpz_class f = pollard_brent(r, c);
    if (f != 0) {
      factor_into(f, multiplicity, exponents);
      factor_into(r / f, multiplicity, exponents);
      return;
    }
  }
  throw FactorizationOverflow("could not split the composite " + r.get_str());
}

}  // namespace

mpz_class squarefree_part(const mpz_class& n, const mpz_class& factor_bound) {
  if (n == 0) throw DivisionByZero("squarefree part of zero");
  mpz_class rest = abs(n);
  if (rest > factor_bound)
    throw FactorizationOverflow("integer " + n.get_str() + " exceeds the factorization bound " +
                                factor_bound.get_str());
  mpz_class part(sgn(n));
  for (unsigned long d = 2; d < kTrialLimit && d * d <= rest; d += (d == 2 ? 1 : 2)) {
    bool odd = false;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      rest /= d;
      odd = !odd;
    }
    if (odd) part *= d;
  }
  if (rest < kTrialLimit * kTrialLimit) {
    // rest is 1 or a prime
    return part * rest;
  }
  std::map<mpz_class, unsigned long> exponents;
  factor_into(rest, 1, exponents);
  for (const auto& [prime, e] : exponents)
    if (e % 2 == 1) part *= prime;
  return part;
}

SquareClass square_class_rep(const FieldElement& a, const mpz_class& factor_bound) {
  const Field& f = a.field();
  if (a.is_zero()) return {f.zero(), f.one()};
  if (f.is_prime_field()) {
    FieldElement rep = is_square(a) ? f.one() : f.smallest_nonresidue();
    auto z = is_square(a / rep);
    if (!z) throw InternalInvariantViolation("square-class quotient is not a square");
    return {rep, *z};
  }
  const mpq_class& q = a.rational();
  const mpz_class whole = q.get_num() * q.get_den();
  const mpz_class rep = squarefree_part(whole, factor_bound);
  const mpz_class cofactor = whole / rep;
  if (!mpz_perfect_square_p(cofactor.get_mpz_t()))
    throw InternalInvariantViolation("squarefree cofactor is not a perfect square");
  return {f.from_mpz(rep), f.from_fraction(sqrt(cofactor), q.get_den())};
}

}  // namespace tricanon
