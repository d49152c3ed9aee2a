#ifndef WIGREC_JSON_IO_HPP
#define WIGREC_JSON_IO_HPP

#include <json.hpp>

#include "wigrec/census.hpp"
#include "wigrec/wigner.hpp"

namespace wigrec {

using Json = nlohmann::json;

// Scalars travel as strings: "r" over GF(p), "a" or "a/b" over the rationals.
Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j); // ParseError

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json idempotent_to_json(const RankOneIdempotent& p);
RankOneIdempotent idempotent_from_json(const Json& j, FieldSpec field);

Json idempotent_list_to_json(const std::vector<RankOneIdempotent>& list);

Json symmetry_map_to_json(const SymmetryMap& map);
SymmetryMap symmetry_map_from_json(const Json& j);

Json extension_to_json(const LinearExtension& ext);
LinearExtension extension_from_json(const Json& j);

Json preserver_form_to_json(const PreserverForm& form);
PreserverForm preserver_form_from_json(const Json& j);

Json orthogonal_form_to_json(const OrthogonalForm& form);
OrthogonalForm orthogonal_form_from_json(const Json& j);

Json cmatrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);

Json unitary_form_to_json(const UnitaryForm& form);
UnitaryForm unitary_form_from_json(const Json& j);

Json census_task_to_json(const CensusTask& task);
CensusTask census_task_from_json(const Json& j);

Json census_checkpoint_to_json(const CensusCheckpoint& ckpt);
CensusCheckpoint census_checkpoint_from_json(const Json& j);

Json census_report_to_json(const CensusReport& report);
std::string census_report_to_csv(const CensusReport& report);

} // namespace wigrec

#endif
