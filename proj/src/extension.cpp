#include "wigrec/extension.hpp"

namespace wigrec {

TracePreservationReport check_trace_preservation(
    const SymmetryMap& phi,
    std::span<const std::pair<RankOneIdempotent, RankOneIdempotent>> pairs) {
  TracePreservationReport report;
  for (const auto& [p, q] : pairs) {
    Scalar expected = trace_pairing(p, q);
    Scalar got = trace_pairing(phi.apply(p), phi.apply(q));
    ++report.pairs_checked;
    if (got != expected) report.violations.push_back({p, q, expected, got});
  }
  return report;
}

TracePreservationReport check_trace_preservation(
    const SymmetryMap& phi, const std::vector<RankOneIdempotent>& domain) {
  std::vector<std::pair<RankOneIdempotent, RankOneIdempotent>> pairs;
  pairs.reserve(domain.size() * domain.size());
  for (const auto& p : domain)
    for (const auto& q : domain) pairs.emplace_back(p, q);
  return check_trace_preservation(phi, pairs);
}

PrimedBasis::PrimedBasis(MapMode mode, size_t n, FieldSpec field)
    : mode_(mode), n_(n), field_(field) {
  size_t count = mode == MapMode::Full ? n * n : n * (n + 1) / 2;
  mats_.assign(count, Matrix(field, n));
}

size_t PrimedBasis::index(size_t i, size_t j) const {
  if (mode_ == MapMode::Full) return i * n_ + j;
  if (i > j) std::swap(i, j);
  // row-major over the upper triangle
  return i * n_ - i * (i + 1) / 2 + j;
}

PrimedBasis build_primed_basis(const SymmetryMap& phi) {
  if (phi.mode() != MapMode::Full)
    throw Error(Errc::InvalidArgument, "primed basis needs a Full-mode map");
  const size_t n = phi.n();
  const FieldSpec field = phi.field();
  PrimedBasis basis(MapMode::Full, n, field);

  std::vector<Matrix> diag_images;
  diag_images.reserve(n);
  for (size_t i = 0; i < n; ++i)
    diag_images.push_back(phi.apply(RankOneIdempotent::diagonal_unit(field, n, i)).matrix());

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        basis.assign(i, j, diag_images[i]);
      } else {
        Matrix img = phi.apply(RankOneIdempotent::unit_pair(field, n, i, j)).matrix();
        basis.assign(i, j, img - diag_images[i]);
      }
    }
  return basis;
}

PrimedBasis build_symmetric_primed_basis(const SymmetryMap& phi) {
  if (phi.mode() != MapMode::Symmetric)
    throw Error(Errc::InvalidArgument, "symmetric primed basis needs a Symmetric-mode map");
  const FieldSpec field = phi.field();
  if (field.characteristic() == 2)
    throw Error(Errc::CharTwo, "decomposition requires characteristic different from 2");
  const size_t n = phi.n();
  PrimedBasis basis(MapMode::Symmetric, n, field);

  std::vector<Matrix> diag_images;
  diag_images.reserve(n);
  for (size_t i = 0; i < n; ++i)
    diag_images.push_back(phi.apply(RankOneIdempotent::diagonal_unit(field, n, i)).matrix());

  Scalar two = Scalar::from_integer(field, 2);
  for (size_t i = 0; i < n; ++i) {
    basis.assign(i, i, diag_images[i]);
    for (size_t j = i + 1; j < n; ++j) {
      Matrix img = phi.apply(RankOneIdempotent::symmetric_pair(field, n, i, j)).matrix();
      basis.assign(i, j, img.scaled(two) - diag_images[i] - diag_images[j]);
    }
  }
  return basis;
}

IndependenceResult check_independence(const PrimedBasis& family) {
  const size_t n = family.n();
  const size_t m = family.size();
  const FieldSpec field = family.field();

  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m);
  for (const Matrix& mat : family.matrices()) {
    std::vector<Scalar> row;
    row.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) row.push_back(mat.at(i, j));
    rows.push_back(std::move(row));
  }

  IndependenceResult result{rank_of_rows(rows) == m, Matrix(field, m)};
  const auto& mats = family.matrices();
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) {
      // tr(AB) without forming the product
      Scalar acc = Scalar::zero(field);
      for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) acc += mats[a].at(i, k) * mats[b].at(k, i);
      result.gram.set(a, b, acc);
    }
  return result;
}

LinearExtension::LinearExtension(MapMode mode, size_t n, FieldSpec field,
                                 std::vector<Matrix> images)
    : mode_(mode), n_(n), field_(field), images_(std::move(images)) {
  size_t expected = mode == MapMode::Full ? n * n : n * (n + 1) / 2;
  if (images_.size() != expected)
    throw Error(Errc::DimensionMismatch, "wrong number of basis images");
  for (const Matrix& m : images_)
    if (m.dim() != n || !(m.field() == field))
      throw Error(Errc::DimensionMismatch, "basis image shape mismatch");
}

size_t LinearExtension::index(size_t i, size_t j) const {
  if (mode_ == MapMode::Full) return i * n_ + j;
  if (i > j) std::swap(i, j);
  return i * n_ - i * (i + 1) / 2 + j;
}

Matrix LinearExtension::apply(const Matrix& x) const {
  if (!(x.field() == field_)) throw Error(Errc::FieldMismatch, "argument over a different field");
  if (x.dim() != n_) throw Error(Errc::DimensionMismatch, "argument dimension differs");
  Matrix out(field_, n_);
  if (mode_ == MapMode::Full) {
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        if (!x.at(i, j).is_zero()) out = out + image(i, j).scaled(x.at(i, j));
    return out;
  }
  if (x != x.transpose())
    throw Error(Errc::InvalidArgument, "symmetric-mode extension applied to a non-symmetric matrix");
  for (size_t i = 0; i < n_; ++i) {
    if (!x.at(i, i).is_zero()) out = out + image(i, i).scaled(x.at(i, i));
    for (size_t j = i + 1; j < n_; ++j)
      if (!x.at(i, j).is_zero()) out = out + image(i, j).scaled(x.at(i, j));
  }
  return out;
}

LinearExtension extend_map(const SymmetryMap& phi) {
  PrimedBasis basis = phi.mode() == MapMode::Full ? build_primed_basis(phi)
                                                  : build_symmetric_primed_basis(phi);
  IndependenceResult indep = check_independence(basis);
  if (!indep.independent)
    throw Error(Errc::DependentBasis,
                "primed basis is linearly dependent; the map is not trace-preserving");
  return LinearExtension(phi.mode(), phi.n(), phi.field(), basis.matrices());
}

ConsistencyReport verify_consistency(const LinearExtension& ext, const SymmetryMap& phi,
                                     const std::vector<RankOneIdempotent>& probes) {
  ConsistencyReport report;
  for (const auto& p : probes) {
    Matrix through_ext = ext.apply(p.matrix());
    Matrix through_phi = phi.apply(p).matrix();
    ++report.probes_checked;
    if (through_ext != through_phi)
      report.mismatches.push_back({p, through_ext, through_phi});
  }
  return report;
}

} // namespace wigrec
