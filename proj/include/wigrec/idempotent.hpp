#ifndef WIGREC_IDEMPOTENT_HPP
#define WIGREC_IDEMPOTENT_HPP

#include <utility>
#include <vector>

#include "wigrec/matrix.hpp"

namespace wigrec {

/// Rank-one idempotent P = x (x) f with f(x) = 1, kept in canonical form:
/// the first nonzero entry of x equals 1.
class RankOneIdempotent {
public:
  // Strict by default: f(x) must equal 1. With rescale, any invertible f(x)
  // is accepted and f is divided by it.
  static RankOneIdempotent make(Vector x, Covector f, bool rescale = false);

  const Vector& x() const { return x_; }
  const Covector& f() const { return f_; }
  size_t dim() const { return x_.dim(); }
  FieldSpec field() const { return x_.field(); }

  Matrix matrix() const { return Matrix::outer(x_, f_); }
  bool is_symmetric() const;

  bool operator==(const RankOneIdempotent& o) const { return x_ == o.x_ && f_ == o.f_; }
  bool operator!=(const RankOneIdempotent& o) const { return !(*this == o); }
  int cmp(const RankOneIdempotent& o) const; // lexicographic on (x, f)
  bool operator<(const RankOneIdempotent& o) const { return cmp(o) < 0; }

  // Probe idempotents used by the primed-basis constructions.
  static RankOneIdempotent diagonal_unit(FieldSpec f, size_t n, size_t i); // E_ii
  static RankOneIdempotent unit_pair(FieldSpec f, size_t n, size_t i, size_t j); // E_ii+E_ij
  // (E_ii + E_jj + E_ij + E_ji)/2, the symmetric probe; CharTwo for char 2.
  static RankOneIdempotent symmetric_pair(FieldSpec f, size_t n, size_t i, size_t j);

private:
  RankOneIdempotent(Vector x, Covector f) : x_(std::move(x)), f_(std::move(f)) {}
  Vector x_;
  Covector f_;
};

/// Rank-one idempotent whose matrix equals its own transpose.
struct SymmetricIdempotent {
  RankOneIdempotent p;
  static SymmetricIdempotent make(RankOneIdempotent p); // NotIdempotent if not symmetric
};

Scalar trace_pairing(const RankOneIdempotent& p, const RankOneIdempotent& q);

/// Finite-rank operator presented as a sum of dyads x_i (x) f_i.
class FiniteRankRep {
public:
  FiniteRankRep(FieldSpec f, size_t n) : field_(f), n_(n) {}

  void add_term(Vector x, Covector f);
  const std::vector<std::pair<Vector, Covector>>& terms() const { return terms_; }
  size_t dim() const { return n_; }
  FieldSpec field() const { return field_; }

  Matrix induced_matrix() const;

private:
  FieldSpec field_;
  size_t n_;
  std::vector<std::pair<Vector, Covector>> terms_;
};

Scalar finite_rank_trace(const FiniteRankRep& rep);

/// All rank-one idempotents of M_n over a finite field, canonical form,
/// lexicographic on (x, f). InfiniteField over the rationals.
std::vector<RankOneIdempotent> enumerate_idempotents(size_t n, FieldSpec field);

struct SymmetricEnumeration {
  std::vector<SymmetricIdempotent> items;
  size_t excluded_isotropic = 0; // projective directions with x^t x = 0
};

/// All symmetric rank-one idempotents x x^t/(x^t x) over a finite field of
/// characteristic != 2, ordered lexicographically on x.
SymmetricEnumeration enumerate_symmetric_idempotents(size_t n, FieldSpec field);

/// q^{n-1} (q^n - 1)/(q - 1)
uintmax_t rank_one_idempotent_count(size_t n, uint32_t q);

} // namespace wigrec

#endif
