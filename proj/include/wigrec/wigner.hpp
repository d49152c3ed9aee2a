#ifndef WIGREC_WIGNER_HPP
#define WIGREC_WIGNER_HPP

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wigrec/errors.hpp"
#include "wigrec/rng.hpp"

namespace wigrec {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct Tolerance {
  double tol = 1e-9;
};

/// Unit vector with the global phase fixed: the first component of modulus
/// above tol is real and positive.
class PureState {
public:
  static PureState from_vector(CVector v, double tol = 1e-12); // ZeroInput

  const CVector& vector() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  CMatrix projection() const { return v_ * v_.adjoint(); }

  static PureState basis(Eigen::Index n, Eigen::Index i);
  // (e_1 + e_j)/sqrt(2) and (e_1 + i e_j)/sqrt(2)
  static PureState real_superposition(Eigen::Index n, Eigen::Index j);
  static PureState imag_superposition(Eigen::Index n, Eigen::Index j);

private:
  explicit PureState(CVector v) : v_(std::move(v)) {}
  CVector v_;
};

/// |<v_P, v_Q>|^2; equals tr(M_P M_Q) of the projections.
double transition_probability(const PureState& p, const PureState& q);

struct UnitaryForm {
  CMatrix U;
  bool antiunitary = false;
};

using StateOracle = std::function<PureState(const PureState&)>;

/// Rebuilds the implementing operator from probe states: columns from the
/// images of basis states, relative phases from the real superpositions, the
/// antiunitary flag from the imaginary ones. Verified over all probes.
/// NotASymmetry when the residual exceeds tol, AmbiguousPhase when an
/// imaginary probe matches neither branch consistently.
UnitaryForm reconstruct_symmetry(const StateOracle& phi, Eigen::Index n, Tolerance tol = {});

/// max-entry norm of phi(P) - U P U* (P conjugated entrywise first when
/// antiunitary), maximized over the reconstruction probe set.
double probe_residual(const StateOracle& phi, const UnitaryForm& form);

/// Linear map on n x n complex matrices stored by its images of the matrix
/// units E_ij, row-major.
struct ComplexLinearMap {
  Eigen::Index n = 0;
  std::vector<CMatrix> unit_images;

  CMatrix apply(const CMatrix& x) const;
  const CMatrix& image(Eigen::Index i, Eigen::Index j) const { return unit_images[i * n + j]; }

  /// X -> U X U* (unitary) or X -> U X^t U* (antiunitary).
  static ComplexLinearMap induced(const UnitaryForm& form);
};

struct JordanReport {
  double max_square_residual = 0.0; // Phi(A^2) vs Phi(A)^2
  double max_star_residual = 0.0;   // Phi(A*) vs Phi(A)*
  int samples = 0;
  bool ok(double tol) const { return max_square_residual <= tol && max_star_residual <= tol; }
};

JordanReport verify_jordan(const ComplexLinearMap& map, int samples, Tolerance tol = {},
                           uint64_t seed = 1);

enum class MorphismKind { Automorphism, Antiautomorphism, Neither };

const char* morphism_kind_name(MorphismKind k);

/// Tests Phi(AB) = Phi(A)Phi(B) against Phi(AB) = Phi(B)Phi(A) on random
/// pairs, at tolerance tol on the max-entry norm.
MorphismKind classify_morphism(const ComplexLinearMap& map, int samples, Tolerance tol = {},
                               uint64_t seed = 1);

/// (tr PQ ~ 0, PQ ~ 0 and QP ~ 0); the booleans agree for genuine states.
std::pair<bool, bool> orthogonality_equivalence(const PureState& p, const PureState& q,
                                                Tolerance tol = {});

/// Haar-ish random unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases absorbed.
CMatrix random_unitary(Eigen::Index n, Rng& rng);

double max_entry_norm(const CMatrix& m);

} // namespace wigrec

#endif
