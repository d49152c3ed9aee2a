#include "wigrec/idempotent.hpp"

namespace wigrec {

RankOneIdempotent RankOneIdempotent::make(Vector x, Covector f, bool rescale) {
  if (!(x.field() == f.field()))
    throw Error(Errc::FieldMismatch, "x and f over different fields");
  if (x.dim() != f.dim()) throw Error(Errc::DimensionMismatch, "x and f dimensions differ");
  if (x.is_zero() || f.is_zero()) throw Error(Errc::ZeroInput, "x and f must be nonzero");

  Scalar fx = f(x);
  if (fx.is_zero())
    throw Error(Errc::NotIdempotent, "f(x) = 0, dyad is nilpotent");
  if (!fx.is_one()) {
    if (!rescale)
      throw Error(Errc::NotNormalized, "f(x) = " + fx.str() + ", expected 1");
    f = f.scaled(fx.inverse());
  }

  // canonical gauge: first nonzero entry of x becomes 1
  size_t lead = 0;
  while (x[lead].is_zero()) ++lead;
  if (!x[lead].is_one()) {
    Scalar c = x[lead];
    x = x.scaled(c.inverse());
    f = f.scaled(c);
  }
  return RankOneIdempotent(std::move(x), std::move(f));
}

bool RankOneIdempotent::is_symmetric() const {
  // x (x) f symmetric  <=>  x_i f_j = x_j f_i for all i < j
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = i + 1; j < dim(); ++j)
      if (x_[i] * f_[j] != x_[j] * f_[i]) return false;
  return true;
}

int RankOneIdempotent::cmp(const RankOneIdempotent& o) const {
  if (int c = x_.cmp(o.x_); c != 0) return c;
  return f_.cmp(o.f_);
}

RankOneIdempotent RankOneIdempotent::diagonal_unit(FieldSpec f, size_t n, size_t i) {
  return make(Vector::unit(f, n, i), Covector::unit(f, n, i));
}

RankOneIdempotent RankOneIdempotent::unit_pair(FieldSpec f, size_t n, size_t i, size_t j) {
  if (i == j) return diagonal_unit(f, n, i);
  Covector cov = Covector::unit(f, n, i) + Covector::unit(f, n, j);
  return make(Vector::unit(f, n, i), cov);
}

RankOneIdempotent RankOneIdempotent::symmetric_pair(FieldSpec fs, size_t n, size_t i, size_t j) {
  if (fs.characteristic() == 2)
    throw Error(Errc::CharTwo, "symmetric probes need characteristic != 2");
  if (i == j) return diagonal_unit(fs, n, i);
  Vector x = Vector::unit(fs, n, i) + Vector::unit(fs, n, j);
  Covector f = Covector::unit(fs, n, i) + Covector::unit(fs, n, j);
  Scalar half = Scalar::from_integer(fs, 2).inverse();
  return make(x, f.scaled(half));
}

SymmetricIdempotent SymmetricIdempotent::make(RankOneIdempotent p) {
  if (!p.is_symmetric())
    throw Error(Errc::NotIdempotent, "idempotent matrix is not symmetric");
  return SymmetricIdempotent{std::move(p)};
}

Scalar trace_pairing(const RankOneIdempotent& p, const RankOneIdempotent& q) {
  if (!(p.field() == q.field()))
    throw Error(Errc::FieldMismatch, "pairing operands over different fields");
  if (p.dim() != q.dim()) throw Error(Errc::DimensionMismatch, "pairing dimensions differ");
  // tr (x_p (x) f_p)(x_q (x) f_q) = f_p(x_q) f_q(x_p)
  return p.f()(q.x()) * q.f()(p.x());
}

void FiniteRankRep::add_term(Vector x, Covector f) {
  if (!(x.field() == field_) || !(f.field() == field_))
    throw Error(Errc::FieldMismatch, "term over a different field");
  if (x.dim() != n_ || f.dim() != n_)
    throw Error(Errc::DimensionMismatch, "term dimension differs");
  terms_.emplace_back(std::move(x), std::move(f));
}

Matrix FiniteRankRep::induced_matrix() const {
  Matrix m(field_, n_);
  for (const auto& [x, f] : terms_) m = m + Matrix::outer(x, f);
  return m;
}

Scalar finite_rank_trace(const FiniteRankRep& rep) {
  Scalar acc = Scalar::zero(rep.field());
  for (const auto& [x, f] : rep.terms()) acc += f(x);
  return acc;
}

namespace {
// Advances a residue tuple in lexicographic order; returns false after the
// last tuple.
bool next_tuple(std::vector<int64_t>& t, int64_t q) {
  for (size_t i = t.size(); i-- > 0;) {
    if (++t[i] < q) return true;
    t[i] = 0;
  }
  return false;
}

Vector to_vector(FieldSpec f, const std::vector<int64_t>& t) {
  Vector v(f, t.size());
  for (size_t i = 0; i < t.size(); ++i) v.set(i, Scalar::from_integer(f, t[i]));
  return v;
}

Covector to_covector(FieldSpec f, const std::vector<int64_t>& t) {
  Covector v(f, t.size());
  for (size_t i = 0; i < t.size(); ++i) v.set(i, Scalar::from_integer(f, t[i]));
  return v;
}

bool is_canonical_direction(const std::vector<int64_t>& t) {
  for (int64_t e : t) {
    if (e != 0) return e == 1;
  }
  return false; // zero tuple
}
} // namespace

std::vector<RankOneIdempotent> enumerate_idempotents(size_t n, FieldSpec field) {
  if (!field.finite())
    throw Error(Errc::InfiniteField, "enumeration needs a finite field");
  const int64_t q = field.characteristic();
  std::vector<RankOneIdempotent> out;
  std::vector<int64_t> xt(n, 0);
  do {
    if (!is_canonical_direction(xt)) continue;
    Vector x = to_vector(field, xt);
    std::vector<int64_t> ft(n, 0);
    do {
      // f(x) over residues
      int64_t dot = 0;
      for (size_t i = 0; i < n; ++i) dot = (dot + ft[i] * xt[i]) % q;
      if (dot != 1) continue;
      out.push_back(RankOneIdempotent::make(x, to_covector(field, ft)));
    } while (next_tuple(ft, q));
  } while (next_tuple(xt, q));
  return out;
}

SymmetricEnumeration enumerate_symmetric_idempotents(size_t n, FieldSpec field) {
  if (!field.finite())
    throw Error(Errc::InfiniteField, "enumeration needs a finite field");
  if (field.characteristic() == 2)
    throw Error(Errc::CharTwo, "symmetric idempotents need characteristic != 2");
  const int64_t q = field.characteristic();
  SymmetricEnumeration out;
  std::vector<int64_t> xt(n, 0);
  do {
    if (!is_canonical_direction(xt)) continue;
    int64_t norm = 0;
    for (size_t i = 0; i < n; ++i) norm = (norm + xt[i] * xt[i]) % q;
    if (norm == 0) {
      ++out.excluded_isotropic;
      continue;
    }
    Vector x = to_vector(field, xt);
    // f = x^t / (x^t x), so the matrix is x x^t/(x^t x)
    Covector f(field, n);
    Scalar inv_norm = Scalar::from_integer(field, norm).inverse();
    for (size_t i = 0; i < n; ++i) f.set(i, x[i] * inv_norm);
    out.items.push_back(SymmetricIdempotent::make(RankOneIdempotent::make(x, f)));
  } while (next_tuple(xt, q));
  return out;
}

uintmax_t rank_one_idempotent_count(size_t n, uint32_t q) {
  uintmax_t qn = 1;
  for (size_t i = 0; i < n; ++i) qn *= q;
  uintmax_t qn1 = 1;
  for (size_t i = 0; i + 1 < n; ++i) qn1 *= q;
  return qn1 * ((qn - 1) / (q - 1));
}

} // namespace wigrec
