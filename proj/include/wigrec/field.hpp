#ifndef WIGREC_FIELD_HPP
#define WIGREC_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "wigrec/errors.hpp"

namespace wigrec {

/// Coefficient field: the rationals (characteristic 0) or a prime field GF(p).
class FieldSpec {
public:
  FieldSpec() : char_(0) {}

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec gf(uint32_t p); // p must be prime

  // Parses characteristic as given in JSON ({"char": c}); 0 means rationals.
  static FieldSpec from_characteristic(uint32_t c);

  uint32_t characteristic() const { return char_; }
  bool finite() const { return char_ != 0; }

  bool operator==(const FieldSpec&) const = default;

private:
  explicit FieldSpec(uint32_t c) : char_(c) {}
  uint32_t char_;
};

bool is_prime(uint32_t m);

/// Exact field element: residue in [0, p) over GF(p), or an
/// arbitrary-precision rational in lowest terms with positive denominator.
class Scalar {
public:
  Scalar() : field_(), v_(mpq_class(0)) {}

  static Scalar zero(FieldSpec f);
  static Scalar one(FieldSpec f);
  static Scalar from_integer(FieldSpec f, long v);
  static Scalar gf(uint32_t p, long v);
  static Scalar rational(long num, long den = 1);
  static Scalar rational(mpq_class q);

  FieldSpec field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // DivisionByZero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const; // DivisionByZero on 0

  // Smaller-residue root over GF(p); nonnegative root over the rationals.
  std::optional<Scalar> sqrt() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order used for canonical sorting (residue order / rational order).
  int cmp(const Scalar& o) const; // FieldMismatch across fields

  // "r" decimal residue for GF(p); "a" or "a/b" (lowest terms) for rationals.
  std::string str() const;
  static Scalar parse(FieldSpec f, const std::string& s); // ParseError

  int64_t residue() const; // finite fields only
  const mpq_class& rat() const; // rationals only

private:
  Scalar(FieldSpec f, int64_t r) : field_(f), v_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<int64_t, mpq_class> v_;
};

// Residue kernels shared by the dense linear algebra paths. p < 2^31 keeps
// products inside int64.
namespace gfk {
inline int64_t norm(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}
inline int64_t add(int64_t a, int64_t b, int64_t p) {
  int64_t s = a + b;
  return s >= p ? s - p : s;
}
inline int64_t sub(int64_t a, int64_t b, int64_t p) {
  int64_t s = a - b;
  return s < 0 ? s + p : s;
}
inline int64_t mul(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }
inline int64_t neg(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }
int64_t inv(int64_t a, int64_t p); // DivisionByZero on 0
} // namespace gfk

} // namespace wigrec

#endif
