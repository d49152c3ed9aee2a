#ifndef WIGREC_CENSUS_HPP
#define WIGREC_CENSUS_HPP

#include <limits>

#include "wigrec/preserver.hpp"

namespace wigrec {

inline constexpr uint64_t kNoBudget = std::numeric_limits<uint64_t>::max();

struct CensusTask {
  size_t n = 2;
  uint32_t q = 3;
  MapMode mode = MapMode::Full;
  bool bijective_only = false;
  uint64_t node_budget = kNoBudget; // cumulative candidate tests
  unsigned jobs = 1;                // parallel first-assignment branches
};

/// Image index per domain index, domain in canonical enumeration order.
using MapTable = std::vector<uint32_t>;

/// Finite idempotent domain with its precomputed pairing table.
class CensusDomain {
public:
  static CensusDomain build(size_t n, uint32_t q, MapMode mode); // CharTwo for q = 2

  size_t size() const { return idems_.size(); }
  size_t n() const { return n_; }
  FieldSpec field() const { return field_; }
  MapMode mode() const { return mode_; }
  size_t excluded_isotropic() const { return excluded_isotropic_; }

  const std::vector<RankOneIdempotent>& idempotents() const { return idems_; }
  const RankOneIdempotent& idem(size_t i) const { return idems_[i]; }

  int64_t pairing(size_t i, size_t j) const { return pairing_[i * idems_.size() + j]; }
  // Idempotents with the same multiset of pairing values share a profile id.
  uint32_t profile_id(size_t i) const { return profile_id_[i]; }
  // Assignment order used by the search: a partition-refinement order that
  // front-loads discriminating elements, derived deterministically from the
  // pairing table. Solutions are emitted in canonical table order regardless.
  const std::vector<uint32_t>& search_order() const { return search_order_; }

  size_t index_of(const RankOneIdempotent& p) const; // DomainGap when absent

  SymmetryMap as_symmetry_map(const MapTable& table) const;
  MapTable table_of(const SymmetryMap& map) const; // DomainGap on gaps

private:
  size_t n_ = 0;
  FieldSpec field_;
  MapMode mode_ = MapMode::Full;
  size_t excluded_isotropic_ = 0;
  std::vector<RankOneIdempotent> idems_;
  std::vector<int64_t> pairing_;
  std::vector<uint32_t> profile_id_;
  std::vector<uint32_t> search_order_;
  std::map<RankOneIdempotent, size_t, SymmetryMap::IdemLess> index_;
};

/// Search frontier of the backtracking census, sufficient to resume.
struct CensusCheckpoint {
  CensusTask task;
  uint64_t nodes_used = 0;
  std::vector<uint32_t> assigned; // img[0..depth-1]
  std::vector<uint32_t> next;     // next candidate per depth, size depth+1
  std::vector<MapTable> found;    // solutions discovered so far
};

class BudgetExceededError : public Error {
public:
  explicit BudgetExceededError(CensusCheckpoint ckpt)
      : Error(Errc::BudgetExceeded, "census node budget exhausted"),
        checkpoint(std::move(ckpt)) {}
  CensusCheckpoint checkpoint;
};

struct CensusResult {
  std::vector<MapTable> maps; // lexicographic table order
  uint64_t nodes_used = 0;
};

/// All maps phi with tr phi(P) phi(Q) = tr PQ on every pair, by canonical
/// backtracking with pairing-consistency pruning and the profile pre-filter.
/// Throws BudgetExceededError (with checkpoint) when the budget runs out.
CensusResult enumerate_preserving_maps(const CensusDomain& domain, const CensusTask& task);

/// Continues a checkpointed search under a (possibly raised) budget.
CensusResult resume_preserving_maps(const CensusDomain& domain, const CensusCheckpoint& ckpt,
                                    uint64_t new_budget = kNoBudget);

struct MapCertificate {
  size_t map_id = 0;
  bool verified = false;
  bool injective = false;
  std::optional<PreserverForm> form;        // Full mode
  std::optional<OrthogonalForm> orthogonal; // Symmetric mode
  std::string failure;                      // nonempty when classification failed
};

struct CensusReport {
  CensusTask task;
  size_t domain_size = 0;
  size_t excluded_isotropic = 0;
  size_t total_maps = 0;
  std::vector<MapCertificate> certificates;
  size_t identity_branch = 0;
  size_t transpose_branch = 0;
  size_t orthogonal_induced = 0; // Symmetric mode
  size_t failures = 0;
  size_t injective_count = 0;
  uintmax_t pgl_order = 0;
  // Full-mode cross-check: identity-branch solutions of a complete census
  // biject with PGL_n(q).
  bool group_order_match = false;
};

/// Runs extend + decompose (or recover_orthogonal) on every found map and
/// verifies each certificate on the whole domain. Failures are recorded, not
/// thrown.
CensusReport classify_all(const CensusDomain& domain, const std::vector<MapTable>& maps,
                          const CensusTask& task);

/// |PGL_n(F_q)| = (prod_{k<n} (q^n - q^k)) / (q - 1)
uintmax_t group_order(size_t n, uint32_t q);

} // namespace wigrec

#endif
