#include "wigrec/matrix.hpp"

namespace wigrec {

namespace {
void check_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error(Errc::FieldMismatch, "operands over different fields");
}
void check_dim(size_t a, size_t b) {
  if (a != b) throw Error(Errc::DimensionMismatch, "operand dimensions differ");
}
} // namespace

Vector Vector::unit(FieldSpec f, size_t n, size_t i) {
  Vector v(f, n);
  v.set(i, Scalar::one(f));
  return v;
}

void Vector::set(size_t i, const Scalar& v) {
  check_field(field_, v.field());
  e_[i] = v;
}

bool Vector::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Vector Vector::operator+(const Vector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  Vector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  Vector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Vector Vector::scaled(const Scalar& c) const {
  check_field(field_, c.field());
  Vector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

int Vector::cmp(const Vector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  for (size_t i = 0; i < dim(); ++i)
    if (int c = e_[i].cmp(o.e_[i]); c != 0) return c;
  return 0;
}

Covector Covector::unit(FieldSpec f, size_t n, size_t i) {
  Covector v(f, n);
  v.set(i, Scalar::one(f));
  return v;
}

void Covector::set(size_t i, const Scalar& v) {
  check_field(field_, v.field());
  e_[i] = v;
}

Scalar Covector::operator()(const Vector& y) const {
  check_field(field_, y.field());
  check_dim(dim(), y.dim());
  Scalar acc = Scalar::zero(field_);
  for (size_t i = 0; i < dim(); ++i) acc += e_[i] * y[i];
  return acc;
}

bool Covector::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Covector Covector::operator+(const Covector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  Covector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Covector Covector::operator-(const Covector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  Covector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Covector Covector::scaled(const Scalar& c) const {
  check_field(field_, c.field());
  Covector r(field_, dim());
  for (size_t i = 0; i < dim(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

int Covector::cmp(const Covector& o) const {
  check_field(field_, o.field_);
  check_dim(dim(), o.dim());
  for (size_t i = 0; i < dim(); ++i)
    if (int c = e_[i].cmp(o.e_[i]); c != 0) return c;
  return 0;
}

Matrix Matrix::identity(FieldSpec f, size_t n) {
  Matrix m(f, n);
  for (size_t i = 0; i < n; ++i) m.e_[i * n + i] = Scalar::one(f);
  return m;
}

Matrix Matrix::unit(FieldSpec f, size_t n, size_t i, size_t j) {
  Matrix m(f, n);
  m.e_[i * n + j] = Scalar::one(f);
  return m;
}

Matrix Matrix::outer(const Vector& x, const Covector& f) {
  check_field(x.field(), f.field());
  check_dim(x.dim(), f.dim());
  size_t n = x.dim();
  Matrix m(x.field(), n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.e_[i * n + j] = x[i] * f[j];
  return m;
}

void Matrix::set(size_t i, size_t j, const Scalar& v) {
  check_field(field_, v.field());
  e_[i * n_ + j] = v;
}

void Matrix::check_compatible(const Matrix& o) const {
  check_field(field_, o.field_);
  check_dim(n_, o.n_);
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  Matrix r(field_, n_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  Matrix r(field_, n_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(field_, n_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o);
  Matrix r(field_, n_);
  if (field_.finite()) {
    // residue fast path; per-product reduction keeps the accumulator in range
    const int64_t p = field_.characteristic();
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j) {
        int64_t acc = 0;
        for (size_t k = 0; k < n_; ++k)
          acc += (e_[i * n_ + k].residue() * o.e_[k * n_ + j].residue()) % p;
        r.e_[i * n_ + j] = Scalar::from_integer(field_, acc % p);
      }
    return r;
  }
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      Scalar acc = Scalar::zero(field_);
      for (size_t k = 0; k < n_; ++k) acc += e_[i * n_ + k] * o.e_[k * n_ + j];
      r.e_[i * n_ + j] = acc;
    }
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  check_field(field_, c.field());
  Matrix r(field_, n_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
  return r;
}

Vector Matrix::operator*(const Vector& x) const {
  check_field(field_, x.field());
  check_dim(n_, x.dim());
  Vector r(field_, n_);
  for (size_t i = 0; i < n_; ++i) {
    Scalar acc = Scalar::zero(field_);
    for (size_t k = 0; k < n_; ++k) acc += e_[i * n_ + k] * x[k];
    r.set(i, acc);
  }
  return r;
}

Covector operator*(const Covector& f, const Matrix& A) {
  if (!(f.field() == A.field()))
    throw Error(Errc::FieldMismatch, "operands over different fields");
  if (f.dim() != A.dim()) throw Error(Errc::DimensionMismatch, "covector/matrix dimensions");
  Covector r(f.field(), f.dim());
  for (size_t j = 0; j < A.dim(); ++j) {
    Scalar acc = Scalar::zero(f.field());
    for (size_t k = 0; k < A.dim(); ++k) acc += f[k] * A.at(k, j);
    r.set(j, acc);
  }
  return r;
}

Covector transposed(const Vector& x) {
  Covector f(x.field(), x.dim());
  for (size_t i = 0; i < x.dim(); ++i) f.set(i, x[i]);
  return f;
}

Vector transposed(const Covector& f) {
  Vector x(f.field(), f.dim());
  for (size_t i = 0; i < f.dim(); ++i) x.set(i, f[i]);
  return x;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r.e_[j * n_ + i] = e_[i * n_ + j];
  return r;
}

Scalar Matrix::trace() const {
  Scalar acc = Scalar::zero(field_);
  for (size_t i = 0; i < n_; ++i) acc += e_[i * n_ + i];
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const { return *this == identity(field_, n_); }

Vector Matrix::column(size_t j) const {
  Vector v(field_, n_);
  for (size_t i = 0; i < n_; ++i) v.set(i, e_[i * n_ + j]);
  return v;
}

Covector Matrix::row(size_t i) const {
  Covector f(field_, n_);
  for (size_t j = 0; j < n_; ++j) f.set(j, e_[i * n_ + j]);
  return f;
}

// Gaussian elimination with first-nonzero pivoting; arithmetic is exact so
// no magnitude pivoting is needed and the pivot order is deterministic.
size_t rank_of_rows(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inverse();
    for (size_t j = col; j < ncols; ++j) rows[rank][j] *= inv;
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (size_t j = col; j < ncols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

size_t Matrix::rank() const {
  std::vector<std::vector<Scalar>> rows(n_);
  for (size_t i = 0; i < n_; ++i)
    rows[i] = std::vector<Scalar>(e_.begin() + i * n_, e_.begin() + (i + 1) * n_);
  return rank_of_rows(std::move(rows));
}

Matrix Matrix::inverse() const {
  // Gauss-Jordan on [A | I]
  size_t n = n_;
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(2 * n, Scalar::zero(field_)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = e_[i * n + j];
    aug[i][n + i] = Scalar::one(field_);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "matrix is singular");
    std::swap(aug[col], aug[pivot]);
    Scalar inv = aug[col][col].inverse();
    for (size_t j = 0; j < 2 * n; ++j) aug[col][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Scalar factor = aug[r][col];
      for (size_t j = 0; j < 2 * n; ++j) aug[r][j] -= factor * aug[col][j];
    }
  }
  Matrix result(field_, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) result.set(i, j, aug[i][n + j]);
  return result;
}

Vector solve_linear(const Matrix& A, const Vector& b) {
  if (!(A.field() == b.field()))
    throw Error(Errc::FieldMismatch, "matrix and vector over different fields");
  if (A.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "solve dimensions");
  size_t n = A.dim();
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(n + 1, Scalar::zero(A.field())));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = A.at(i, j);
    aug[i][n] = b[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(Errc::Singular, "singular system");
    std::swap(aug[col], aug[pivot]);
    Scalar inv = aug[col][col].inverse();
    for (size_t j = col; j <= n; ++j) aug[col][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      Scalar factor = aug[r][col];
      for (size_t j = col; j <= n; ++j) aug[r][j] -= factor * aug[col][j];
    }
  }
  Vector x(A.field(), n);
  for (size_t i = 0; i < n; ++i) x.set(i, aug[i][n]);
  return x;
}

} // namespace wigrec
