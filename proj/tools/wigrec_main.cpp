// wigrec: reconstruct matrix symmetries from trace pairings.
//
// Subcommands: enumerate, reconstruct, census, wigner-demo. All randomness
// comes from --seed through a pinned generator (xoshiro256** seeded by
// splitmix64), so equal invocations produce byte-identical outputs.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wigrec/json_io.hpp"

using namespace wigrec;

namespace {

// write-to-temp, rename-on-success; failed commands leave no partial files
void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::InvalidArgument, "cannot open " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, target);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

uint32_t resolve_q(uint32_t q, const std::string& field_flag) {
  if (field_flag.empty()) return q;
  if (field_flag == "rational")
    throw Error(Errc::InfiniteField, "this command needs a finite field");
  if (field_flag.rfind("gf:", 0) == 0) {
    return static_cast<uint32_t>(std::stoul(field_flag.substr(3)));
  }
  throw Error(Errc::ParseError, "--field expects 'rational' or 'gf:<p>'");
}

int run_enumerate(size_t n, uint32_t q, bool symmetric, const std::string& mode,
                  const std::string& field_flag, const std::string& out) {
  q = resolve_q(q, field_flag);
  FieldSpec field = FieldSpec::gf(q);
  bool sym = symmetric || mode == "symmetric";

  std::vector<RankOneIdempotent> list;
  size_t excluded = 0;
  if (sym) {
    auto e = enumerate_symmetric_idempotents(n, field);
    excluded = e.excluded_isotropic;
    for (auto& s : e.items) list.push_back(std::move(s.p));
  } else {
    list = enumerate_idempotents(n, field);
  }

  std::string body = idempotent_list_to_json(list).dump(2) + "\n";
  if (out.empty())
    std::cout << body;
  else
    write_file_atomic(out, body);

  std::cout << "count " << list.size() << "\n";
  if (sym) std::cout << "excluded_isotropic " << excluded << "\n";
  return 0;
}

int run_reconstruct(const std::string& in_path, const std::string& out) {
  SymmetryMap map = symmetry_map_from_json(read_json_file(in_path));

  LinearExtension ext = extend_map(map); // DomainGap -> 3, DependentBasis -> 2

  Json form_json;
  std::string summary;
  if (map.mode() == MapMode::Full) {
    PreserverForm form = decompose(ext);
    // total verification on every supplied domain entry
    for (const auto& [p, image] : map.table()) {
      if (apply_form(form, p) != image) {
        std::cout << "violating probe: " << idempotent_to_json(p).dump() << "\n";
        throw Error(Errc::NotAPreserver, "certificate fails on a supplied domain entry");
      }
    }
    form_json = preserver_form_to_json(form);
    summary = std::string("branch ") + branch_name(form.branch);
  } else {
    OrthogonalForm form = recover_orthogonal(ext);
    for (const auto& [p, image] : map.table()) {
      if (apply_form(form, p) != image) {
        std::cout << "violating probe: " << idempotent_to_json(p).dump() << "\n";
        throw Error(Errc::NotAPreserver, "certificate fails on a supplied domain entry");
      }
    }
    form_json = orthogonal_form_to_json(form);
    summary = "orthogonal";
  }

  ConsistencyReport consistency = verify_consistency(ext, map, [&] {
    std::vector<RankOneIdempotent> probes;
    for (const auto& [p, image] : map.table()) probes.push_back(p);
    return probes;
  }());

  std::string body = form_json.dump(2) + "\n";
  if (out.empty())
    std::cout << body;
  else
    write_file_atomic(out, body);
  std::cout << "form " << summary << "\n";
  std::cout << "verified " << map.table().size() << " domain entries, "
            << consistency.probes_checked << " consistency probes\n";
  return 0;
}

int run_census(size_t n, uint32_t q, const std::string& mode, const std::string& field_flag,
               bool bijective_only, uint64_t budget, unsigned jobs, const std::string& out,
               const std::string& resume_path) {
  q = resolve_q(q, field_flag);
  MapMode m = mode == "symmetric" ? MapMode::Symmetric : MapMode::Full;
  CensusTask task{n, q, m, bijective_only, budget == 0 ? kNoBudget : budget, jobs};
  std::string prefix = out.empty() ? "census_report" : out;

  CensusDomain domain = CensusDomain::build(n, q, m);
  CensusResult result;
  try {
    if (resume_path.empty()) {
      result = enumerate_preserving_maps(domain, task);
    } else {
      CensusCheckpoint ckpt = census_checkpoint_from_json(read_json_file(resume_path));
      result = resume_preserving_maps(domain, ckpt, task.node_budget);
    }
  } catch (const BudgetExceededError& e) {
    std::string ckpt_path = prefix + ".checkpoint.json";
    write_file_atomic(ckpt_path, census_checkpoint_to_json(e.checkpoint).dump(2) + "\n");
    std::cout << "budget exceeded after " << e.checkpoint.nodes_used
              << " nodes; checkpoint written to " << ckpt_path << "\n";
    return 5;
  }

  CensusReport report = classify_all(domain, result.maps, task);
  write_file_atomic(prefix + ".json", census_report_to_json(report).dump(2) + "\n");
  write_file_atomic(prefix + ".csv", census_report_to_csv(report));

  std::cout << "domain " << report.domain_size << " maps " << report.total_maps
            << " failures " << report.failures << " injective " << report.injective_count
            << "\n";
  if (m == MapMode::Full)
    std::cout << "identity " << report.identity_branch << " transpose "
              << report.transpose_branch << " pgl " << report.pgl_order << " match "
              << (report.group_order_match ? "yes" : "no") << "\n";
  else
    std::cout << "orthogonal " << report.orthogonal_induced << " excluded_isotropic "
              << report.excluded_isotropic << "\n";
  return 0;
}

int run_wigner_demo(int n, uint64_t seed, bool antiunitary, double tol,
                    const std::string& out) {
  if (n < 2 || n > 16) {
    std::cerr << "wigner-demo needs 2 <= n <= 16\n";
    return 1;
  }
  Rng rng(seed);
  CMatrix v = random_unitary(n, rng);
  StateOracle phi = [&v, antiunitary](const PureState& p) {
    CVector w = antiunitary ? CVector(v * p.vector().conjugate()) : CVector(v * p.vector());
    return PureState::from_vector(std::move(w));
  };

  UnitaryForm form = reconstruct_symmetry(phi, n, Tolerance{tol});
  double residual = probe_residual(phi, form);

  char line[128];
  std::snprintf(line, sizeof(line), "residual %.12e\n", residual);
  std::cout << line;
  std::cout << "antiunitary " << (form.antiunitary ? "true" : "false") << "\n";

  if (!out.empty()) write_file_atomic(out, unitary_form_to_json(form).dump(2) + "\n");

  bool ok = residual <= tol && form.antiunitary == antiunitary;
  std::cout << (ok ? "ok" : "mismatch") << "\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace-pairing symmetry reconstruction toolkit"};
  app.require_subcommand(1);

  size_t n = 2;
  uint32_t q = 3;
  std::string mode = "full";
  std::string field_flag;
  std::string out;
  std::string in_path;
  std::string resume_path;
  bool symmetric = false;
  bool bijective_only = false;
  bool antiunitary = false;
  uint64_t budget = 0; // 0 = unlimited
  unsigned jobs = 1;
  uint64_t seed = 0;
  double tol = 1e-9;
  int wn = 4;

  auto* enumerate = app.add_subcommand("enumerate", "list rank-one idempotents");
  enumerate->add_option("--n", n, "matrix dimension")->required();
  enumerate->add_option("--q", q, "field characteristic (prime)");
  enumerate->add_option("--field", field_flag, "rational|gf:<p>");
  enumerate->add_option("--mode", mode, "full|symmetric");
  enumerate->add_flag("--symmetric", symmetric, "symmetric idempotents only");
  enumerate->add_option("--out", out, "output JSON path");

  auto* reconstruct = app.add_subcommand("reconstruct", "recover the implementing form");
  reconstruct->add_option("map", in_path, "symmetry map JSON file")->required();
  reconstruct->add_option("--out", out, "output form JSON path");

  auto* census = app.add_subcommand("census", "enumerate all pairing-preserving maps");
  census->add_option("--n", n, "matrix dimension")->required();
  census->add_option("--q", q, "field characteristic (prime)");
  census->add_option("--field", field_flag, "rational|gf:<p>");
  census->add_option("--mode", mode, "full|symmetric");
  census->add_flag("--bijective-only", bijective_only, "restrict the search to bijections");
  census->add_option("--budget", budget, "node budget (0 = unlimited)");
  census->add_option("--jobs", jobs, "parallel branches (unbudgeted runs)");
  census->add_option("--out", out, "report path prefix");
  census->add_option("--resume", resume_path, "checkpoint JSON to resume from");

  auto* demo = app.add_subcommand("wigner-demo", "numeric unitary/antiunitary round-trip");
  demo->add_option("--n", wn, "Hilbert space dimension (2..16)")->required();
  demo->add_option("--seed", seed, "random seed");
  demo->add_flag("--antiunitary", antiunitary, "compose the oracle with conjugation");
  demo->add_option("--tol", tol, "acceptance tolerance");
  demo->add_option("--out", out, "output form JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return run_enumerate(n, q, symmetric, mode, field_flag, out);
    if (*reconstruct) return run_reconstruct(in_path, out);
    if (*census)
      return run_census(n, q, mode, field_flag, bijective_only, budget, jobs, out,
                        resume_path);
    if (*demo) return run_wigner_demo(wn, seed, antiunitary, tol, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError: return 4;
      case Errc::DomainGap: return 3;
      case Errc::NotAPreserver:
      case Errc::DependentBasis:
      case Errc::NotInnerForm:
      case Errc::SingularCandidate:
      case Errc::NoSquareRoot:
      case Errc::NotOrthogonalForm: return 2;
      case Errc::BudgetExceeded: return 5;
      default: return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
