#include "wigrec/json_io.hpp"

#include <sstream>

namespace wigrec {

namespace {
const Json& expect(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string compact_matrix_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ";[" : "[");
    for (size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << m.at(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}
} // namespace

Json field_to_json(const FieldSpec& f) { return Json{{"char", f.characteristic()}}; }

FieldSpec field_from_json(const Json& j) {
  const Json& c = expect(j, "char");
  if (!c.is_number_unsigned() && !c.is_number_integer())
    throw Error(Errc::ParseError, "field characteristic must be an integer");
  int64_t v = c.get<int64_t>();
  if (v < 0) throw Error(Errc::ParseError, "field characteristic must be nonnegative");
  try {
    return FieldSpec::from_characteristic(static_cast<uint32_t>(v));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"field", field_to_json(m.field())}, {"n", m.dim()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  FieldSpec field = field_from_json(expect(j, "field"));
  size_t n = expect(j, "n").get<size_t>();
  const Json& rows = expect(j, "entries");
  if (!rows.is_array() || rows.size() != n)
    throw Error(Errc::ParseError, "entries must be an n-row array");
  Matrix m(field, n);
  for (size_t i = 0; i < n; ++i) {
    const Json& row = rows.at(i);
    if (!row.is_array() || row.size() != n)
      throw Error(Errc::ParseError, "entries rows must have n columns");
    for (size_t k = 0; k < n; ++k) {
      if (!row.at(k).is_string())
        throw Error(Errc::ParseError, "matrix entries must be strings");
      m.set(i, k, Scalar::parse(field, row.at(k).get<std::string>()));
    }
  }
  return m;
}

Json idempotent_to_json(const RankOneIdempotent& p) {
  Json x = Json::array(), f = Json::array();
  for (size_t i = 0; i < p.dim(); ++i) {
    x.push_back(p.x()[i].str());
    f.push_back(p.f()[i].str());
  }
  return Json{{"x", x}, {"f", f}};
}

RankOneIdempotent idempotent_from_json(const Json& j, FieldSpec field) {
  const Json& xj = expect(j, "x");
  const Json& fj = expect(j, "f");
  if (!xj.is_array() || !fj.is_array() || xj.size() != fj.size() || xj.empty())
    throw Error(Errc::ParseError, "idempotent needs equal-length x and f arrays");
  size_t n = xj.size();
  Vector x(field, n);
  Covector f(field, n);
  for (size_t i = 0; i < n; ++i) {
    x.set(i, Scalar::parse(field, xj.at(i).get<std::string>()));
    f.set(i, Scalar::parse(field, fj.at(i).get<std::string>()));
  }
  return RankOneIdempotent::make(std::move(x), std::move(f));
}

Json idempotent_list_to_json(const std::vector<RankOneIdempotent>& list) {
  Json arr = Json::array();
  for (const auto& p : list) arr.push_back(idempotent_to_json(p));
  return arr;
}

Json symmetry_map_to_json(const SymmetryMap& map) {
  Json pairs = Json::array();
  for (const auto& [p, image] : map.table())
    pairs.push_back(Json::array({idempotent_to_json(p), idempotent_to_json(image)}));
  return Json{{"mode", map.mode() == MapMode::Full ? "full" : "symmetric"},
              {"n", map.n()},
              {"field", field_to_json(map.field())},
              {"pairs", pairs}};
}

SymmetryMap symmetry_map_from_json(const Json& j) {
  std::string mode_str = expect(j, "mode").get<std::string>();
  MapMode mode;
  if (mode_str == "full")
    mode = MapMode::Full;
  else if (mode_str == "symmetric")
    mode = MapMode::Symmetric;
  else
    throw Error(Errc::ParseError, "mode must be 'full' or 'symmetric'");
  size_t n = expect(j, "n").get<size_t>();
  FieldSpec field = field_from_json(expect(j, "field"));
  SymmetryMap map(mode, n, field);
  for (const Json& pair : expect(j, "pairs")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error(Errc::ParseError, "pairs entries must be [P, image] arrays");
    map.define(idempotent_from_json(pair.at(0), field), idempotent_from_json(pair.at(1), field));
  }
  return map;
}

Json extension_to_json(const LinearExtension& ext) {
  Json arr = Json::array();
  for (const Matrix& m : ext.images()) arr.push_back(matrix_to_json(m));
  return arr;
}

LinearExtension extension_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(Errc::ParseError, "extension must be a nonempty array of matrices");
  std::vector<Matrix> images;
  images.reserve(j.size());
  for (const Json& m : j) images.push_back(matrix_from_json(m));
  size_t n = images.front().dim();
  FieldSpec field = images.front().field();
  MapMode mode;
  if (j.size() == n * n)
    mode = MapMode::Full;
  else if (j.size() == n * (n + 1) / 2)
    mode = MapMode::Symmetric;
  else
    throw Error(Errc::ParseError, "image count matches neither basis size");
  return LinearExtension(mode, n, field, std::move(images));
}

Json preserver_form_to_json(const PreserverForm& form) {
  return Json{{"branch", branch_name(form.branch)}, {"A", matrix_to_json(form.A)}};
}

PreserverForm preserver_form_from_json(const Json& j) {
  std::string b = expect(j, "branch").get<std::string>();
  if (b != "identity" && b != "transpose")
    throw Error(Errc::ParseError, "branch must be 'identity' or 'transpose'");
  return {matrix_from_json(expect(j, "A")),
          b == "identity" ? Branch::Identity : Branch::Transpose};
}

Json orthogonal_form_to_json(const OrthogonalForm& form) {
  return Json{{"U", matrix_to_json(form.U)}};
}

OrthogonalForm orthogonal_form_from_json(const Json& j) {
  return {matrix_from_json(expect(j, "U"))};
}

Json cmatrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix cmatrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw Error(Errc::ParseError, "complex matrix must be a nonempty array of rows");
  size_t rows = j.size();
  size_t cols = j.at(0).is_array() ? j.at(0).size() : 0;
  if (cols == 0) throw Error(Errc::ParseError, "complex matrix rows must be nonempty arrays");
  CMatrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || row.size() != cols)
      throw Error(Errc::ParseError, "ragged complex matrix");
    for (size_t c = 0; c < cols; ++c) {
      const Json& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw Error(Errc::ParseError, "complex entries must be [re, im] pairs");
      m(r, c) = std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

Json unitary_form_to_json(const UnitaryForm& form) {
  return Json{{"U", cmatrix_to_json(form.U)}, {"antiunitary", form.antiunitary}};
}

UnitaryForm unitary_form_from_json(const Json& j) {
  return {cmatrix_from_json(expect(j, "U")), expect(j, "antiunitary").get<bool>()};
}

Json census_task_to_json(const CensusTask& task) {
  return Json{{"n", task.n},
              {"q", task.q},
              {"mode", task.mode == MapMode::Full ? "full" : "symmetric"},
              {"bijective_only", task.bijective_only},
              {"node_budget", task.node_budget},
              {"jobs", task.jobs}};
}

CensusTask census_task_from_json(const Json& j) {
  CensusTask task;
  task.n = expect(j, "n").get<size_t>();
  task.q = expect(j, "q").get<uint32_t>();
  std::string mode = expect(j, "mode").get<std::string>();
  if (mode != "full" && mode != "symmetric")
    throw Error(Errc::ParseError, "mode must be 'full' or 'symmetric'");
  task.mode = mode == "full" ? MapMode::Full : MapMode::Symmetric;
  task.bijective_only = expect(j, "bijective_only").get<bool>();
  task.node_budget = expect(j, "node_budget").get<uint64_t>();
  task.jobs = expect(j, "jobs").get<unsigned>();
  return task;
}

Json census_checkpoint_to_json(const CensusCheckpoint& ckpt) {
  return Json{{"task", census_task_to_json(ckpt.task)},
              {"nodes_used", ckpt.nodes_used},
              {"assigned", ckpt.assigned},
              {"next", ckpt.next},
              {"found", ckpt.found}};
}

CensusCheckpoint census_checkpoint_from_json(const Json& j) {
  CensusCheckpoint ckpt;
  ckpt.task = census_task_from_json(expect(j, "task"));
  ckpt.nodes_used = expect(j, "nodes_used").get<uint64_t>();
  ckpt.assigned = expect(j, "assigned").get<std::vector<uint32_t>>();
  ckpt.next = expect(j, "next").get<std::vector<uint32_t>>();
  ckpt.found = expect(j, "found").get<std::vector<MapTable>>();
  return ckpt;
}

Json census_report_to_json(const CensusReport& report) {
  Json certs = Json::array();
  for (const auto& c : report.certificates) {
    Json e{{"id", c.map_id},
           {"verified", c.verified},
           {"injective", c.injective}};
    if (c.form) {
      e["branch"] = branch_name(c.form->branch);
      e["A"] = matrix_to_json(c.form->A);
    } else if (c.orthogonal) {
      e["branch"] = "orthogonal";
      e["U"] = matrix_to_json(c.orthogonal->U);
    } else {
      e["branch"] = "none";
    }
    if (!c.failure.empty()) e["failure"] = c.failure;
    certs.push_back(std::move(e));
  }
  // jobs and budget steer execution, not the task identity; keeping them out
  // makes report bytes independent of the worker count
  Json task_json = census_task_to_json(report.task);
  task_json.erase("jobs");
  task_json.erase("node_budget");
  Json j{{"task", task_json},
         {"domain_size", report.domain_size},
         {"total_maps", report.total_maps},
         {"identity_branch", report.identity_branch},
         {"transpose_branch", report.transpose_branch},
         {"failures", report.failures},
         {"injective_count", report.injective_count},
         {"pgl_order", report.pgl_order},
         {"group_order_match", report.group_order_match},
         {"certificates", certs}};
  if (report.task.mode == MapMode::Symmetric) {
    j["orthogonal_induced"] = report.orthogonal_induced;
    j["excluded_isotropic"] = report.excluded_isotropic;
  }
  return j;
}

std::string census_report_to_csv(const CensusReport& report) {
  std::ostringstream os;
  os << "map-id,branch,A,verified,injective\n";
  for (const auto& c : report.certificates) {
    os << c.map_id << ",";
    if (c.form)
      os << branch_name(c.form->branch) << "," << compact_matrix_string(c.form->A);
    else if (c.orthogonal)
      os << "orthogonal," << compact_matrix_string(c.orthogonal->U);
    else
      os << "none,";
    os << "," << (c.verified ? "true" : "false") << ","
       << (c.injective ? "true" : "false") << "\n";
  }
  return os.str();
}

} // namespace wigrec
