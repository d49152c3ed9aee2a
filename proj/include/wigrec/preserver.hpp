#ifndef WIGREC_PRESERVER_HPP
#define WIGREC_PRESERVER_HPP

#include <optional>

#include "wigrec/extension.hpp"

namespace wigrec {

enum class Branch { Identity, Transpose };

const char* branch_name(Branch b);

/// Reconstructed answer for a Full-mode preserver: phi(P) = A P A^{-1} or
/// phi(P) = A P^t A^{-1}, with A scalar-normalized (first nonzero entry 1).
struct PreserverForm {
  Matrix A;
  Branch branch;
};

/// Reconstructed answer on S_n: phi(P) = U P U^t with U^t U = I, sign-fixed
/// so the first nonzero entry of column 1 is "positive" (in {1..(p-1)/2} over
/// GF(p), > 0 over the rationals).
struct OrthogonalForm {
  Matrix U;
};

/// Divides by the first nonzero entry in row-major order.
Matrix normalize_scalar_gauge(Matrix a);

bool forms_equal_up_to_scalar(const Matrix& a, const Matrix& b);

enum class ConjFailure { None, NotInnerForm, SingularCandidate };

struct ConjugationResult {
  std::optional<Matrix> A; // normalized when present
  ConjFailure failure = ConjFailure::None;
};

/// Tries to express Phi as X -> A X A^{-1}; candidate assembled from the
/// images of E_11 and E_i1, then verified on all n^2 units.
ConjugationResult recover_conjugation(const LinearExtension& ext);

/// Identity branch first, then the transpose branch on Psi(X) = Phi(X^t).
/// NotAPreserver when both fail.
PreserverForm decompose(const LinearExtension& ext);

/// Extracts U column by column from Phi(E_ii) = u_i u_i^t (square roots in
/// the field), fixes relative signs with the symmetric pair probes, then
/// verifies U^t U = I and all basis images. NoSquareRoot / NotOrthogonalForm.
OrthogonalForm recover_orthogonal(const LinearExtension& ext);

RankOneIdempotent apply_form(const PreserverForm& form, const RankOneIdempotent& p);
RankOneIdempotent apply_form(const OrthogonalForm& form, const RankOneIdempotent& p);

/// Oracle-backed maps realizing the classified forms (the forward model).
SymmetryMap induced_map(const PreserverForm& form, size_t n);
SymmetryMap induced_map(const OrthogonalForm& form, size_t n);

} // namespace wigrec

#endif
