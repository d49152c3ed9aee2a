#ifndef WIGREC_EXTENSION_HPP
#define WIGREC_EXTENSION_HPP

#include <span>

#include "wigrec/symmetry_map.hpp"

namespace wigrec {

struct TracePreservationReport {
  struct Violation {
    RankOneIdempotent p, q;
    Scalar expected; // tr PQ
    Scalar got;      // tr phi(P) phi(Q)
  };
  std::vector<Violation> violations;
  size_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

/// Checks tr phi(P) phi(Q) = tr PQ over the given pairs.
TracePreservationReport check_trace_preservation(
    const SymmetryMap& phi,
    std::span<const std::pair<RankOneIdempotent, RankOneIdempotent>> pairs);

/// Convenience: all ordered pairs drawn from one idempotent list.
TracePreservationReport check_trace_preservation(
    const SymmetryMap& phi, const std::vector<RankOneIdempotent>& domain);

/// The primed family E'_ij. Full mode holds n^2 matrices indexed row-major;
/// Symmetric mode holds the n(n+1)/2 images of the S_n basis
/// {E_ii} u {E_ij + E_ji : i < j}, indexed by (i, j) with i <= j.
class PrimedBasis {
public:
  PrimedBasis(MapMode mode, size_t n, FieldSpec field);

  MapMode mode() const { return mode_; }
  size_t n() const { return n_; }
  FieldSpec field() const { return field_; }
  size_t size() const { return mats_.size(); }

  size_t index(size_t i, size_t j) const;
  const Matrix& at(size_t i, size_t j) const { return mats_[index(i, j)]; }
  const std::vector<Matrix>& matrices() const { return mats_; }
  void assign(size_t i, size_t j, Matrix m) { mats_[index(i, j)] = std::move(m); }

private:
  MapMode mode_;
  size_t n_;
  FieldSpec field_;
  std::vector<Matrix> mats_;
};

/// E'_ij = phi(E_ii + E_ij) - phi(E_ii) off the diagonal, phi(E_ii) on it.
PrimedBasis build_primed_basis(const SymmetryMap& phi); // Full mode, DomainGap

/// E'_ij = 2 phi((E_ii+E_jj+E_ij+E_ji)/2) - phi(E_ii) - phi(E_jj) for i < j.
PrimedBasis build_symmetric_primed_basis(const SymmetryMap& phi); // CharTwo, DomainGap

struct IndependenceResult {
  bool independent = false;
  Matrix gram; // G[(ij),(kl)] = tr(E'_ij E'_kl), basis order
};

IndependenceResult check_independence(const PrimedBasis& family);

/// The linear map Phi on M_n (or S_n) stored through its basis images.
class LinearExtension {
public:
  LinearExtension(MapMode mode, size_t n, FieldSpec field, std::vector<Matrix> images);

  MapMode mode() const { return mode_; }
  size_t n() const { return n_; }
  FieldSpec field() const { return field_; }

  size_t index(size_t i, size_t j) const;
  const Matrix& image(size_t i, size_t j) const { return images_[index(i, j)]; }
  const std::vector<Matrix>& images() const { return images_; }

  /// Expands X in the stored basis and combines images. In Symmetric mode X
  /// must be symmetric.
  Matrix apply(const Matrix& x) const;

private:
  MapMode mode_;
  size_t n_;
  FieldSpec field_;
  std::vector<Matrix> images_;
};

/// Builds the linear extension from the primed basis; DependentBasis when the
/// independence check fails (phi cannot be trace-preserving).
LinearExtension extend_map(const SymmetryMap& phi);

struct ConsistencyReport {
  struct Mismatch {
    RankOneIdempotent probe;
    Matrix extension_image;
    Matrix phi_image;
  };
  std::vector<Mismatch> mismatches;
  size_t probes_checked = 0;
  bool ok() const { return mismatches.empty(); }
};

/// Checks Phi(M_P) = M_{phi(P)} on every probe.
ConsistencyReport verify_consistency(const LinearExtension& ext, const SymmetryMap& phi,
                                     const std::vector<RankOneIdempotent>& probes);

} // namespace wigrec

#endif
