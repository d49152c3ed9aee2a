#include "wigrec/preserver.hpp"

namespace wigrec {

const char* branch_name(Branch b) {
  return b == Branch::Identity ? "identity" : "transpose";
}

Matrix normalize_scalar_gauge(Matrix a) {
  const size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!a.at(i, j).is_zero()) {
        if (a.at(i, j).is_one()) return a;
        return a.scaled(a.at(i, j).inverse());
      }
  return a; // zero matrix, nothing to normalize
}

bool forms_equal_up_to_scalar(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
  const size_t n = a.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!a.at(i, j).is_zero()) {
        if (b.at(i, j).is_zero()) return false;
        Scalar c = b.at(i, j) / a.at(i, j);
        return b == a.scaled(c);
      }
  return b.is_zero(); // a == 0
}

ConjugationResult recover_conjugation(const LinearExtension& ext) {
  if (ext.mode() != MapMode::Full)
    throw Error(Errc::InvalidArgument, "conjugation recovery needs a Full-mode extension");
  const size_t n = ext.n();
  const FieldSpec field = ext.field();

  // u = any nonzero column of Phi(E_11)
  const Matrix& s = ext.image(0, 0);
  std::optional<Vector> u;
  for (size_t j = 0; j < n && !u; ++j) {
    Vector col = s.column(j);
    if (!col.is_zero()) u = std::move(col);
  }
  if (!u) return {std::nullopt, ConjFailure::NotInnerForm};

  Matrix a(field, n);
  for (size_t i = 0; i < n; ++i) {
    Vector ai = ext.image(i, 0) * *u;
    for (size_t r = 0; r < n; ++r) a.set(r, i, ai[r]);
  }

  Matrix a_inv(field, n);
  try {
    a_inv = a.inverse();
  } catch (const Error& e) {
    if (e.code() == Errc::Singular) return {std::nullopt, ConjFailure::SingularCandidate};
    throw;
  }

  // verify Phi(E_ij) = A E_ij A^{-1} = col_i(A) (x) row_j(A^{-1}) for all i, j
  for (size_t i = 0; i < n; ++i) {
    Vector ai = a.column(i);
    for (size_t j = 0; j < n; ++j)
      if (ext.image(i, j) != Matrix::outer(ai, a_inv.row(j)))
        return {std::nullopt, ConjFailure::NotInnerForm};
  }
  return {normalize_scalar_gauge(std::move(a)), ConjFailure::None};
}

PreserverForm decompose(const LinearExtension& ext) {
  if (ext.mode() != MapMode::Full)
    throw Error(Errc::InvalidArgument, "decompose needs a Full-mode extension");
  if (ext.field().characteristic() == 2)
    throw Error(Errc::CharTwo, "decomposition requires characteristic different from 2");
  const size_t n = ext.n();

  ConjugationResult direct = recover_conjugation(ext);
  if (direct.A) return {std::move(*direct.A), Branch::Identity};

  // retry on Psi(X) = Phi(X^t), i.e. Psi(E_ij) = Phi(E_ji)
  std::vector<Matrix> flipped;
  flipped.reserve(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) flipped.push_back(ext.image(j, i));
  LinearExtension transposed(MapMode::Full, n, ext.field(), std::move(flipped));

  ConjugationResult via_transpose = recover_conjugation(transposed);
  if (via_transpose.A) return {std::move(*via_transpose.A), Branch::Transpose};

  throw Error(Errc::NotAPreserver, "neither branch reproduces the extension");
}

namespace {
// Sign convention for +-U: first nonzero entry of column 1 must be > 0 over
// the rationals, in {1..(p-1)/2} over GF(p).
bool sign_positive(const Scalar& s) {
  if (s.field().finite()) {
    int64_t p = s.field().characteristic();
    return s.residue() >= 1 && 2 * s.residue() <= p - 1;
  }
  return s.rat() > 0;
}
} // namespace

OrthogonalForm recover_orthogonal(const LinearExtension& ext) {
  if (ext.mode() != MapMode::Symmetric)
    throw Error(Errc::InvalidArgument, "orthogonal recovery needs a Symmetric-mode extension");
  const FieldSpec field = ext.field();
  if (field.characteristic() == 2)
    throw Error(Errc::CharTwo, "decomposition requires characteristic different from 2");
  const size_t n = ext.n();

  // extract u_i up to sign from Phi(E_ii) = u_i u_i^t
  std::vector<Vector> cols;
  cols.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Matrix& s = ext.image(i, i);
    std::optional<size_t> k;
    for (size_t d = 0; d < n && !k; ++d)
      if (!s.at(d, d).is_zero()) k = d;
    if (!k)
      throw Error(Errc::NotOrthogonalForm, "diagonal image has no nonzero diagonal entry");
    std::optional<Scalar> root = s.at(*k, *k).sqrt();
    if (!root)
      throw Error(Errc::NoSquareRoot,
                  "no square root of " + s.at(*k, *k).str() + " in the field");
    Scalar inv = root->inverse();
    Vector u(field, n);
    for (size_t r = 0; r < n; ++r) u.set(r, s.at(r, *k) * inv);
    cols.push_back(std::move(u));
  }

  // fix relative signs against the symmetric pair probes
  Scalar half = Scalar::from_integer(field, 2).inverse();
  for (size_t j = 1; j < n; ++j) {
    Matrix probe_image =
        ext.apply(RankOneIdempotent::symmetric_pair(field, n, 0, j).matrix());
    Vector plus = cols[0] + cols[j];
    if (probe_image == Matrix::outer(plus, transposed(plus)).scaled(half)) continue;
    Vector minus = cols[0] - cols[j];
    if (probe_image == Matrix::outer(minus, transposed(minus)).scaled(half)) {
      cols[j] = Vector(field, n) - cols[j];
      continue;
    }
    throw Error(Errc::NotOrthogonalForm, "pair probe matches neither sign");
  }

  Matrix u(field, n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) u.set(i, j, cols[j][i]);

  // global sign
  for (size_t i = 0; i < n; ++i)
    if (!u.at(i, 0).is_zero()) {
      if (!sign_positive(u.at(i, 0))) u = -u;
      break;
    }

  if (u.transpose() * u != Matrix::identity(field, n))
    throw Error(Errc::NotOrthogonalForm, "candidate is not orthogonal");

  // verify the full S_n basis
  for (size_t i = 0; i < n; ++i) {
    Vector ci = u.column(i);
    for (size_t j = i; j < n; ++j) {
      Vector cj = u.column(j);
      Matrix expected = i == j ? Matrix::outer(ci, transposed(ci))
                               : Matrix::outer(ci, transposed(cj)) +
                                     Matrix::outer(cj, transposed(ci));
      if (ext.image(i, j) != expected)
        throw Error(Errc::NotOrthogonalForm, "basis image mismatch");
    }
  }
  return {std::move(u)};
}

RankOneIdempotent apply_form(const PreserverForm& form, const RankOneIdempotent& p) {
  const Matrix& a = form.A;
  Matrix a_inv = a.inverse();
  if (form.branch == Branch::Identity) {
    // A (x (x) f) A^{-1} = (A x) (x) (f A^{-1})
    return RankOneIdempotent::make(a * p.x(), p.f() * a_inv);
  }
  // A (x (x) f)^t A^{-1} = (A f^t) (x) (x^t A^{-1})
  Vector ft(a.field(), p.dim());
  for (size_t i = 0; i < p.dim(); ++i) ft.set(i, p.f()[i]);
  Covector xt(a.field(), p.dim());
  for (size_t i = 0; i < p.dim(); ++i) xt.set(i, p.x()[i]);
  return RankOneIdempotent::make(a * ft, xt * a_inv);
}

RankOneIdempotent apply_form(const OrthogonalForm& form, const RankOneIdempotent& p) {
  const Matrix& u = form.U;
  Matrix ut = u.transpose();
  return RankOneIdempotent::make(u * p.x(), p.f() * ut);
}

SymmetryMap induced_map(const PreserverForm& form, size_t n) {
  SymmetryMap map(MapMode::Full, n, form.A.field());
  Matrix a = form.A;
  Matrix a_inv = a.inverse();
  Branch branch = form.branch;
  map.set_oracle([a, a_inv, branch, n](const RankOneIdempotent& p) {
    if (branch == Branch::Identity)
      return RankOneIdempotent::make(a * p.x(), p.f() * a_inv);
    Vector ft(a.field(), n);
    for (size_t i = 0; i < n; ++i) ft.set(i, p.f()[i]);
    Covector xt(a.field(), n);
    for (size_t i = 0; i < n; ++i) xt.set(i, p.x()[i]);
    return RankOneIdempotent::make(a * ft, xt * a_inv);
  });
  return map;
}

SymmetryMap induced_map(const OrthogonalForm& form, size_t n) {
  SymmetryMap map(MapMode::Symmetric, n, form.U.field());
  Matrix u = form.U;
  Matrix ut = u.transpose();
  map.set_oracle([u, ut](const RankOneIdempotent& p) {
    return RankOneIdempotent::make(u * p.x(), p.f() * ut);
  });
  return map;
}

} // namespace wigrec
