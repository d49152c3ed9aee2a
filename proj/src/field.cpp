#include "wigrec/field.hpp"

#include <cerrno>
#include <cstdlib>

namespace wigrec {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::CharTwo: return "CharTwo";
    case Errc::DomainGap: return "DomainGap";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::NotInnerForm: return "NotInnerForm";
    case Errc::SingularCandidate: return "SingularCandidate";
    case Errc::NotAPreserver: return "NotAPreserver";
    case Errc::NoSquareRoot: return "NoSquareRoot";
    case Errc::NotOrthogonalForm: return "NotOrthogonalForm";
    case Errc::NotASymmetry: return "NotASymmetry";
    case Errc::AmbiguousPhase: return "AmbiguousPhase";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool is_prime(uint32_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (uint64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::gf(uint32_t p) {
  if (!is_prime(p))
    throw Error(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::from_characteristic(uint32_t c) {
  return c == 0 ? rationals() : gf(c);
}

namespace gfk {
int64_t inv(int64_t a, int64_t p) {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p) + ")");
  // extended Euclid
  int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return norm(t, p);
}
} // namespace gfk

Scalar Scalar::zero(FieldSpec f) {
  if (f.finite()) return Scalar(f, int64_t{0});
  return Scalar(f, mpq_class(0));
}

Scalar Scalar::one(FieldSpec f) {
  if (f.finite()) return Scalar(f, int64_t{1});
  return Scalar(f, mpq_class(1));
}

Scalar Scalar::from_integer(FieldSpec f, long v) {
  if (f.finite()) return Scalar(f, gfk::norm(v, f.characteristic()));
  return Scalar(f, mpq_class(v));
}

Scalar Scalar::gf(uint32_t p, long v) { return from_integer(FieldSpec::gf(p), v); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q));
}

Scalar Scalar::rational(mpq_class q) {
  if (q.get_den() == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return Scalar(FieldSpec::rationals(), std::move(q));
}

bool Scalar::is_zero() const {
  if (field_.finite()) return std::get<int64_t>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.finite()) return std::get<int64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(Errc::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator-() const {
  if (field_.finite())
    return Scalar(field_, gfk::neg(std::get<int64_t>(v_), field_.characteristic()));
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.finite())
    return Scalar(field_, gfk::add(std::get<int64_t>(v_), std::get<int64_t>(o.v_),
                                   field_.characteristic()));
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.finite())
    return Scalar(field_, gfk::sub(std::get<int64_t>(v_), std::get<int64_t>(o.v_),
                                   field_.characteristic()));
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.finite())
    return Scalar(field_, gfk::mul(std::get<int64_t>(v_), std::get<int64_t>(o.v_),
                                   field_.characteristic()));
  return Scalar(field_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (field_.finite())
    return Scalar(field_, gfk::inv(std::get<int64_t>(v_), field_.characteristic()));
  const auto& q = std::get<mpq_class>(v_);
  if (q == 0) throw Error(Errc::DivisionByZero, "inverse of rational 0");
  return Scalar(field_, mpq_class(1 / q));
}

std::optional<Scalar> Scalar::sqrt() const {
  if (field_.finite()) {
    int64_t p = field_.characteristic();
    int64_t a = std::get<int64_t>(v_);
    for (int64_t r = 0; 2 * r <= p; ++r)
      if (gfk::mul(r, r, p) == a) return Scalar(field_, r);
    return std::nullopt;
  }
  const auto& q = std::get<mpq_class>(v_);
  if (q < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar(field_, mpq_class(rn, rd));
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.finite()) return std::get<int64_t>(v_) == std::get<int64_t>(o.v_);
  return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
}

int Scalar::cmp(const Scalar& o) const {
  check_same_field(o);
  if (field_.finite()) {
    int64_t a = std::get<int64_t>(v_), b = std::get<int64_t>(o.v_);
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  return ::cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
}

std::string Scalar::str() const {
  if (field_.finite()) return std::to_string(std::get<int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

Scalar Scalar::parse(FieldSpec f, const std::string& s) {
  if (s.empty()) throw Error(Errc::ParseError, "empty scalar literal");
  if (f.finite()) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
      throw Error(Errc::ParseError, "bad residue literal '" + s + "'");
    return Scalar(f, gfk::norm(v, f.characteristic()));
  }
  auto slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::ParseError, "bad rational literal '" + s + "'");
  }
}

int64_t Scalar::residue() const {
  if (!field_.finite()) throw Error(Errc::FieldMismatch, "residue() on a rational scalar");
  return std::get<int64_t>(v_);
}

const mpq_class& Scalar::rat() const {
  if (field_.finite()) throw Error(Errc::FieldMismatch, "rat() on a finite-field scalar");
  return std::get<mpq_class>(v_);
}

} // namespace wigrec
