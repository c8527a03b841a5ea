#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "coquasi/error.hpp"

namespace coquasi {

enum class FieldKind { Rationals, PrimeField };

/// Descriptor of the coefficient field: the rationals, or F_p for a prime
/// modulus p (trial-division checked, p < 10^6).
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // PrimeField only

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const;  // "Q" or "Fp 7"
};

/// Exact field element in canonical form: a gcd-reduced fraction with
/// positive denominator over Q, or a residue in [0, p) over F_p. Values are
/// immutable; every operation returns a fresh canonical Scalar, so equality
/// is plain structural comparison.
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rationals()) {}  // zero over Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long v);
  static Scalar fraction(long long num, long long den);  // over Q; den != 0

  /// Parses a scalar literal: `-?[0-9]+` or `a/b` with b > 0 over Q;
  /// integers reduced mod p over F_p (fractions are rejected there).
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long long e) const;  // negative exponents invert

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for deterministic container layout.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  mpq_class rat_;           // Rationals payload, always canonical
  std::uint64_t res_ = 0;   // PrimeField payload, in [0, p)

  void require_same_field(const Scalar& o) const;
};

}  // namespace coquasi
