#include "wigrec/symmetry_map.hpp"

namespace wigrec {

void SymmetryMap::validate_entry(const RankOneIdempotent& p,
                                 const RankOneIdempotent& image) const {
  if (!(p.field() == field_) || !(image.field() == field_))
    throw Error(Errc::FieldMismatch, "map entry over a different field");
  if (p.dim() != n_ || image.dim() != n_)
    throw Error(Errc::DimensionMismatch, "map entry dimension differs");
  if (mode_ == MapMode::Symmetric && (!p.is_symmetric() || !image.is_symmetric()))
    throw Error(Errc::NotIdempotent, "symmetric mode requires symmetric idempotents");
}

void SymmetryMap::define(const RankOneIdempotent& p, const RankOneIdempotent& image) {
  validate_entry(p, image);
  table_.insert_or_assign(p, image);
}

bool SymmetryMap::defined(const RankOneIdempotent& p) const {
  return table_.count(p) > 0 || static_cast<bool>(oracle_);
}

RankOneIdempotent SymmetryMap::apply(const RankOneIdempotent& p) const {
  if (auto it = table_.find(p); it != table_.end()) return it->second;
  if (oracle_) {
    RankOneIdempotent image = oracle_(p);
    validate_entry(p, image);
    return image;
  }
  throw Error(Errc::DomainGap, "map undefined on requested idempotent");
}

} // namespace wigrec
