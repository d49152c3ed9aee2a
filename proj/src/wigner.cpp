#include "wigrec/wigner.hpp"

namespace wigrec {

double max_entry_norm(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

PureState PureState::from_vector(CVector v, double tol) {
  double norm = v.norm();
  if (norm <= tol) throw Error(Errc::ZeroInput, "cannot normalize a (near) zero vector");
  v /= norm;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > tol) {
      v *= std::conj(v[i]) / std::abs(v[i]);
      break;
    }
  }
  return PureState(std::move(v));
}

PureState PureState::basis(Eigen::Index n, Eigen::Index i) {
  CVector v = CVector::Zero(n);
  v[i] = 1.0;
  return PureState(std::move(v));
}

PureState PureState::real_superposition(Eigen::Index n, Eigen::Index j) {
  CVector v = CVector::Zero(n);
  const double inv_sqrt2 = 0.70710678118654752440;
  v[0] = inv_sqrt2;
  v[j] = inv_sqrt2;
  return PureState(std::move(v));
}

PureState PureState::imag_superposition(Eigen::Index n, Eigen::Index j) {
  CVector v = CVector::Zero(n);
  const double inv_sqrt2 = 0.70710678118654752440;
  v[0] = inv_sqrt2;
  v[j] = std::complex<double>(0.0, inv_sqrt2);
  return PureState(std::move(v));
}

double transition_probability(const PureState& p, const PureState& q) {
  if (p.dim() != q.dim()) throw Error(Errc::DimensionMismatch, "state dimensions differ");
  std::complex<double> overlap = p.vector().dot(q.vector());
  return std::norm(overlap);
}

namespace {
PureState superpose(const CVector& a, const CVector& b, std::complex<double> coeff_b) {
  return PureState::from_vector(a + coeff_b * b);
}
} // namespace

UnitaryForm reconstruct_symmetry(const StateOracle& phi, Eigen::Index n, Tolerance tol) {
  if (n < 1) throw Error(Errc::InvalidArgument, "dimension must be positive");
  const double floor = 1e-6; // probe overlaps are 1/sqrt(2) for genuine symmetries

  std::vector<CVector> cols;
  cols.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) cols.push_back(phi(PureState::basis(n, i)).vector());

  // relative phases from the real superposition probes
  for (Eigen::Index j = 1; j < n; ++j) {
    CVector r = phi(PureState::real_superposition(n, j)).vector();
    std::complex<double> w_first = cols[0].dot(r);
    std::complex<double> w_j = cols[j].dot(r);
    if (std::abs(w_first) < floor || std::abs(w_j) < floor)
      throw Error(Errc::NotASymmetry, "real probe image is not a balanced superposition");
    std::complex<double> phase = (w_j / w_first);
    phase /= std::abs(phase);
    cols[j] *= phase;
  }

  UnitaryForm form;
  form.U.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) form.U.col(j) = cols[j];

  // branch detection from the imaginary probes
  int antiunitary_votes = 0;
  for (Eigen::Index j = 1; j < n; ++j) {
    CMatrix probe_image = phi(PureState::imag_superposition(n, j)).projection();
    if ((cols[0] + std::complex<double>(0, 1) * cols[j]).norm() < floor ||
        (cols[0] - std::complex<double>(0, 1) * cols[j]).norm() < floor)
      throw Error(Errc::NotASymmetry, "degenerate column pair");
    CMatrix plus = superpose(cols[0], cols[j], {0.0, 1.0}).projection();
    CMatrix minus = superpose(cols[0], cols[j], {0.0, -1.0}).projection();
    bool matches_plus = max_entry_norm(probe_image - plus) <= tol.tol;
    bool matches_minus = max_entry_norm(probe_image - minus) <= tol.tol;
    if (matches_plus == matches_minus)
      throw Error(Errc::AmbiguousPhase, "imaginary probe matches neither branch");
    antiunitary_votes += matches_minus ? 1 : 0;
  }
  if (n > 1 && antiunitary_votes != 0 && antiunitary_votes != n - 1)
    throw Error(Errc::AmbiguousPhase, "imaginary probes disagree on the branch");
  form.antiunitary = n > 1 && antiunitary_votes == n - 1;

  double residual = probe_residual(phi, form);
  if (residual > tol.tol)
    throw Error(Errc::NotASymmetry,
                "probe residual " + std::to_string(residual) + " exceeds tolerance");
  return form;
}

double probe_residual(const StateOracle& phi, const UnitaryForm& form) {
  const Eigen::Index n = form.U.rows();
  auto apply = [&](const PureState& p) {
    CMatrix m = p.projection();
    if (form.antiunitary) m = m.conjugate();
    return CMatrix(form.U * m * form.U.adjoint());
  };
  double worst = 0.0;
  auto visit = [&](const PureState& p) {
    worst = std::max(worst, max_entry_norm(phi(p).projection() - apply(p)));
  };
  for (Eigen::Index i = 0; i < n; ++i) visit(PureState::basis(n, i));
  for (Eigen::Index j = 1; j < n; ++j) {
    visit(PureState::real_superposition(n, j));
    visit(PureState::imag_superposition(n, j));
  }
  return worst;
}

CMatrix ComplexLinearMap::apply(const CMatrix& x) const {
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out += x(i, j) * unit_images[i * n + j];
  return out;
}

ComplexLinearMap ComplexLinearMap::induced(const UnitaryForm& form) {
  const Eigen::Index n = form.U.rows();
  ComplexLinearMap map;
  map.n = n;
  map.unit_images.reserve(n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      // unit images of X -> U X U*; the antiunitary branch linearizes to
      // X -> U X^t U*, i.e. E_ij -> U E_ji U*
      CMatrix e = CMatrix::Zero(n, n);
      if (form.antiunitary)
        e(j, i) = 1.0;
      else
        e(i, j) = 1.0;
      map.unit_images.push_back(form.U * e * form.U.adjoint());
    }
  return map;
}

namespace {
CMatrix random_complex_matrix(Eigen::Index n, Rng& rng) {
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
  return m;
}
} // namespace

JordanReport verify_jordan(const ComplexLinearMap& map, int samples, Tolerance, uint64_t seed) {
  Rng rng(seed);
  JordanReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    CMatrix a = random_complex_matrix(map.n, rng);
    CMatrix fa = map.apply(a);
    report.max_square_residual =
        std::max(report.max_square_residual, max_entry_norm(map.apply(CMatrix(a * a)) - fa * fa));
    report.max_star_residual = std::max(
        report.max_star_residual, max_entry_norm(map.apply(CMatrix(a.adjoint())) - fa.adjoint()));
  }
  return report;
}

MorphismKind classify_morphism(const ComplexLinearMap& map, int samples, Tolerance tol,
                               uint64_t seed) {
  Rng rng(seed);
  double worst_auto = 0.0, worst_anti = 0.0;
  for (int s = 0; s < samples; ++s) {
    CMatrix a = random_complex_matrix(map.n, rng);
    CMatrix b = random_complex_matrix(map.n, rng);
    CMatrix fab = map.apply(CMatrix(a * b));
    CMatrix fa = map.apply(a);
    CMatrix fb = map.apply(b);
    worst_auto = std::max(worst_auto, max_entry_norm(fab - fa * fb));
    worst_anti = std::max(worst_anti, max_entry_norm(fab - fb * fa));
  }
  if (worst_auto <= tol.tol) return MorphismKind::Automorphism;
  if (worst_anti <= tol.tol) return MorphismKind::Antiautomorphism;
  return MorphismKind::Neither;
}

const char* morphism_kind_name(MorphismKind k) {
  switch (k) {
    case MorphismKind::Automorphism: return "automorphism";
    case MorphismKind::Antiautomorphism: return "antiautomorphism";
    case MorphismKind::Neither: return "neither";
  }
  return "unknown";
}

std::pair<bool, bool> orthogonality_equivalence(const PureState& p, const PureState& q,
                                                Tolerance tol) {
  if (p.dim() != q.dim()) throw Error(Errc::DimensionMismatch, "state dimensions differ");
  CMatrix mp = p.projection();
  CMatrix mq = q.projection();
  double tr = std::abs((mp * mq).trace());
  bool trace_zero = tr <= tol.tol;
  bool products_zero = max_entry_norm(mp * mq) <= tol.tol && max_entry_norm(mq * mp) <= tol.tol;
  return {trace_zero, products_zero};
}

CMatrix random_unitary(Eigen::Index n, Rng& rng) {
  CMatrix g = random_complex_matrix(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < n; ++i) {
    std::complex<double> d = r(i, i);
    q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
  }
  return q;
}

} // namespace wigrec
