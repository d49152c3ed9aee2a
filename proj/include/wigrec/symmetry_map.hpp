#ifndef WIGREC_SYMMETRY_MAP_HPP
#define WIGREC_SYMMETRY_MAP_HPP

#include <functional>
#include <map>
#include <optional>

#include "wigrec/idempotent.hpp"

namespace wigrec {

enum class MapMode { Full, Symmetric };

/// A map P -> phi(P) on rank-one idempotents, given as a finite table, a
/// callable oracle, or both (table entries win). Images are validated to be
/// rank-one idempotents, symmetric ones in Symmetric mode.
class SymmetryMap {
public:
  struct IdemLess {
    bool operator()(const RankOneIdempotent& a, const RankOneIdempotent& b) const {
      return a.cmp(b) < 0;
    }
  };
  using Table = std::map<RankOneIdempotent, RankOneIdempotent, IdemLess>;
  using Oracle = std::function<RankOneIdempotent(const RankOneIdempotent&)>;

  SymmetryMap(MapMode mode, size_t n, FieldSpec field)
      : mode_(mode), n_(n), field_(field) {}

  MapMode mode() const { return mode_; }
  size_t n() const { return n_; }
  FieldSpec field() const { return field_; }

  void define(const RankOneIdempotent& p, const RankOneIdempotent& image);
  void set_oracle(Oracle oracle) { oracle_ = std::move(oracle); }

  bool defined(const RankOneIdempotent& p) const;
  RankOneIdempotent apply(const RankOneIdempotent& p) const; // DomainGap

  const Table& table() const { return table_; }

private:
  void validate_entry(const RankOneIdempotent& p, const RankOneIdempotent& image) const;

  MapMode mode_;
  size_t n_;
  FieldSpec field_;
  Table table_;
  Oracle oracle_;
};

} // namespace wigrec

#endif
