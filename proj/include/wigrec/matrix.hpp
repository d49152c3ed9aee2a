#ifndef WIGREC_MATRIX_HPP
#define WIGREC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "wigrec/field.hpp"

namespace wigrec {

class Covector;
class Matrix;

/// Column vector with exact entries.
class Vector {
public:
  Vector(FieldSpec f, size_t n) : field_(f), e_(n, Scalar::zero(f)) {}
  static Vector unit(FieldSpec f, size_t n, size_t i);

  size_t dim() const { return e_.size(); }
  FieldSpec field() const { return field_; }

  const Scalar& operator[](size_t i) const { return e_[i]; }
  void set(size_t i, const Scalar& v);

  bool is_zero() const;
  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector scaled(const Scalar& c) const;

  bool operator==(const Vector& o) const { return field_ == o.field_ && e_ == o.e_; }
  bool operator!=(const Vector& o) const { return !(*this == o); }
  int cmp(const Vector& o) const; // lexicographic

private:
  FieldSpec field_;
  std::vector<Scalar> e_;
};

/// Row functional; acts on Vector by the dot pairing f(y).
class Covector {
public:
  Covector(FieldSpec f, size_t n) : field_(f), e_(n, Scalar::zero(f)) {}
  static Covector unit(FieldSpec f, size_t n, size_t i);

  size_t dim() const { return e_.size(); }
  FieldSpec field() const { return field_; }

  const Scalar& operator[](size_t i) const { return e_[i]; }
  void set(size_t i, const Scalar& v);

  Scalar operator()(const Vector& y) const; // f(y)

  bool is_zero() const;
  Covector operator+(const Covector& o) const;
  Covector operator-(const Covector& o) const;
  Covector scaled(const Scalar& c) const;

  bool operator==(const Covector& o) const { return field_ == o.field_ && e_ == o.e_; }
  bool operator!=(const Covector& o) const { return !(*this == o); }
  int cmp(const Covector& o) const;

private:
  FieldSpec field_;
  std::vector<Scalar> e_;
};

/// Dense square matrix over one exact field, row-major.
class Matrix {
public:
  Matrix(FieldSpec f, size_t n) : field_(f), n_(n), e_(n * n, Scalar::zero(f)) {}
  static Matrix identity(FieldSpec f, size_t n);
  static Matrix unit(FieldSpec f, size_t n, size_t i, size_t j); // E_ij
  static Matrix outer(const Vector& x, const Covector& f);       // x (x) f

  size_t dim() const { return n_; }
  FieldSpec field() const { return field_; }

  const Scalar& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  void set(size_t i, size_t j, const Scalar& v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Vector operator*(const Vector& x) const;

  Matrix transpose() const;
  Scalar trace() const;
  size_t rank() const;
  Matrix inverse() const; // Singular
  bool is_zero() const;
  bool is_identity() const;

  Vector column(size_t j) const;
  Covector row(size_t i) const;

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && n_ == o.n_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
  void check_compatible(const Matrix& o) const;

  FieldSpec field_;
  size_t n_;
  std::vector<Scalar> e_;
};

Covector operator*(const Covector& f, const Matrix& A); // row * matrix

Covector transposed(const Vector& x);
Vector transposed(const Covector& f);

/// Solves A x = b for nonsingular A; throws Singular otherwise.
Vector solve_linear(const Matrix& A, const Vector& b);

/// Exact rank of a rectangular row family (used for independence checks).
size_t rank_of_rows(std::vector<std::vector<Scalar>> rows);

} // namespace wigrec

#endif
