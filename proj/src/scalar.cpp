#include "coquasi/scalar.hpp"

#include <cstdlib>
#include <utility>

namespace coquasi {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Residue inverse by extended Euclid; m prime, 0 < a < m.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= 1000000)
    throw Error("prime modulus " + std::to_string(p) + " exceeds the supported bound 10^6");
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::Rationals ? "Q" : "Fp " + std::to_string(modulus);
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldKind::Rationals) {
    s.rat_ = mpq_class(static_cast<long>(v));
  } else {
    long long p = static_cast<long long>(f.modulus);
    s.res_ = static_cast<std::uint64_t>(((v % p) + p) % p);
  }
  return s;
}

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw DivisionByZero();
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.rat_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  auto is_integer = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string str(text);
  auto slash = str.find('/');
  if (slash == std::string::npos) {
    if (!is_integer(str)) throw Error("bad scalar literal '" + str + "'");
    mpz_class z(str, 10);
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rationals) {
      s.rat_ = mpq_class(z);
    } else {
      mpz_class m(static_cast<unsigned long>(f.modulus));
      mpz_class r = ((z % m) + m) % m;
      s.res_ = r.get_ui();
    }
    return s;
  }
  if (f.kind == FieldKind::PrimeField)
    throw Error("fraction literal '" + str + "' is not valid over " + f.to_string() +
                "; write the residue instead");
  std::string num = str.substr(0, slash), den = str.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-')
    throw Error("bad scalar literal '" + str + "' (expected a/b with b > 0)");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error("bad scalar literal '" + str + "' (zero denominator)");
  Scalar s;
  s.field_ = f;
  s.rat_ = mpq_class(n, d);
  s.rat_.canonicalize();
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw Error("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.modulus;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = (res_ + field_.modulus - o.res_) % field_.modulus;
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = (res_ * o.res_) % field_.modulus;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.modulus - res_;
  return s;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldKind::Rationals)
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.modulus);
  return s;
}

Scalar Scalar::pow(long long e) const {
  Scalar base = *this;
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  Scalar acc = Scalar::one(field_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.kind == FieldKind::Rationals ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.field_.kind != b.field_.kind) return a.field_.kind < b.field_.kind;
  if (a.field_.kind == FieldKind::Rationals) return a.rat_ < b.rat_;
  if (a.field_.modulus != b.field_.modulus) return a.field_.modulus < b.field_.modulus;
  return a.res_ < b.res_;
}

std::string Scalar::to_string() const {
  return field_.kind == FieldKind::Rationals ? rat_.get_str() : std::to_string(res_);
}

}  // namespace coquasi
