#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wigrec/json_io.hpp"

using namespace wigrec;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WIGREC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "wigrec_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json map_json_from(const SymmetryMap& map) { return symmetry_map_to_json(map); }

} // namespace

TEST_CASE("enumerate") {
  auto r = run("enumerate --n 2 --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 12") != std::string::npos);

  auto r1 = run("enumerate --n 1 --q 5");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.find("count 1") != std::string::npos);

  auto rs = run("enumerate --n 2 --q 3 --symmetric");
  CHECK(rs.exit_code == 0);
  CHECK(rs.out.find("count 4") != std::string::npos);

  auto bad = run("enumerate --n 2 --q 6");
  CHECK(bad.exit_code != 0);

  SUBCASE("--out writes the canonical JSON array") {
    fs::path out = temp_dir() / "enum.json";
    fs::remove(out);
    auto ro = run("enumerate --n 2 --q 3 --out " + out.string());
    CHECK(ro.exit_code == 0);
    Json arr = Json::parse(slurp(out));
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 12);
    auto direct = enumerate_idempotents(2, FieldSpec::gf(3));
    for (size_t i = 0; i < direct.size(); ++i)
      CHECK(idempotent_from_json(arr.at(i), FieldSpec::gf(3)) == direct[i]);
  }

  SUBCASE("stdout JSON equals the file bytes and is byte-stable") {
    auto a = run("enumerate --n 2 --q 5");
    auto b = run("enumerate --n 2 --q 5");
    CHECK(a.out == b.out);
  }
}

TEST_CASE("reconstruct") {
  fs::path dir = temp_dir();
  FieldSpec f = FieldSpec::gf(3);
  auto domain = enumerate_idempotents(2, f);

  SUBCASE("identity table round-trips with exit 0") {
    SymmetryMap map(MapMode::Full, 2, f);
    for (const auto& p : domain) map.define(p, p);
    fs::path in = dir / "identity_map.json";
    std::ofstream(in) << map_json_from(map).dump();
    fs::path out = dir / "identity_form.json";
    fs::remove(out);

    auto r = run("reconstruct " + in.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("branch identity") != std::string::npos);
    PreserverForm form = preserver_form_from_json(Json::parse(slurp(out)));
    CHECK(form.A == Matrix::identity(f, 2));
  }

  SUBCASE("conjugation table recovers A up to scalar") {
    Matrix a = Matrix::identity(f, 2);
    a.set(0, 1, Scalar::one(f));
    SymmetryMap oracle = induced_map(PreserverForm{a, Branch::Identity}, 2);
    SymmetryMap map(MapMode::Full, 2, f);
    for (const auto& p : domain) map.define(p, oracle.apply(p));
    fs::path in = dir / "conj_map.json";
    std::ofstream(in) << map_json_from(map).dump();
    fs::path out = dir / "conj_form.json";

    auto r = run("reconstruct " + in.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    PreserverForm form = preserver_form_from_json(Json::parse(slurp(out)));
    CHECK(form.branch == Branch::Identity);
    CHECK(forms_equal_up_to_scalar(a, form.A));
  }

  SUBCASE("a corrupted image exits 2 and names the violating probe") {
    SymmetryMap map(MapMode::Full, 2, f);
    for (const auto& p : domain) map.define(p, p);
    // corrupt one non-probe entry: last domain element -> first
    map.define(domain.back(), domain.front());
    fs::path in = dir / "corrupt_map.json";
    std::ofstream(in) << map_json_from(map).dump();
    fs::path out = dir / "corrupt_form.json";
    fs::remove(out);

    auto r = run("reconstruct " + in.string() + " --out " + out.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("violating probe") != std::string::npos);
    CHECK(r.out.find(idempotent_to_json(domain.back()).dump()) != std::string::npos);
    CHECK(!fs::exists(out)); // no partial output on failure
  }

  SUBCASE("missing probes exit 3") {
    SymmetryMap map(MapMode::Full, 2, f);
    map.define(domain.front(), domain.front());
    fs::path in = dir / "gap_map.json";
    std::ofstream(in) << map_json_from(map).dump();
    auto r = run("reconstruct " + in.string());
    CHECK(r.exit_code == 3);
  }

  SUBCASE("unparseable input exits 4") {
    fs::path in = dir / "broken.json";
    std::ofstream(in) << "{not json";
    auto r = run("reconstruct " + in.string());
    CHECK(r.exit_code == 4);
    auto r2 = run("reconstruct " + (dir / "no_such_file.json").string());
    CHECK(r2.exit_code == 4);
  }

  SUBCASE("symmetric tables go through orthogonal recovery") {
    auto sym = enumerate_symmetric_idempotents(2, f);
    SymmetryMap map(MapMode::Symmetric, 2, f);
    for (const auto& s : sym.items) map.define(s.p, s.p);
    fs::path in = dir / "sym_map.json";
    std::ofstream(in) << map_json_from(map).dump();
    fs::path out = dir / "sym_form.json";
    auto r = run("reconstruct " + in.string() + " --out " + out.string());
    CHECK(r.exit_code == 0);
    OrthogonalForm form = orthogonal_form_from_json(Json::parse(slurp(out)));
    CHECK(form.U == Matrix::identity(f, 2));
  }
}

TEST_CASE("census") {
  fs::path dir = temp_dir();
  fs::path prefix = dir / "census23";

  auto r = run("census --n 2 --q 3 --out " + prefix.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("maps 48") != std::string::npos);
  CHECK(r.out.find("failures 0") != std::string::npos);
  Json report = Json::parse(slurp(prefix.string() + ".json"));
  CHECK(report["total_maps"] == 48);
  CHECK(report["group_order_match"] == true);
  std::string csv = slurp(prefix.string() + ".csv");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 49);

  SUBCASE("n = 1 census finds one map") {
    auto r1 = run("census --n 1 --q 3 --out " + (dir / "census13").string());
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("maps 1") != std::string::npos);
  }

  SUBCASE("bijective-only output is a subset (equal here)") {
    auto rb = run("census --n 2 --q 3 --bijective-only --out " + (dir / "censusb").string());
    CHECK(rb.exit_code == 0);
    Json bij = Json::parse(slurp((dir / "censusb").string() + ".json"));
    CHECK(bij["total_maps"].get<size_t>() <= report["total_maps"].get<size_t>());
    CHECK(bij["total_maps"] == 48);
  }

  SUBCASE("deterministic bytes for fixed inputs, independent of --jobs") {
    fs::path p1 = dir / "det1";
    fs::path p2 = dir / "det2";
    run("census --n 2 --q 3 --jobs 1 --out " + p1.string());
    run("census --n 2 --q 3 --jobs 4 --out " + p2.string());
    CHECK(slurp(p1.string() + ".json") == slurp(p2.string() + ".json"));
    CHECK(slurp(p1.string() + ".csv") == slurp(p2.string() + ".csv"));
  }

  SUBCASE("tiny budgets exit 5 with a checkpoint, and --resume completes") {
    fs::path bp = dir / "budgeted";
    fs::remove(fs::path(bp.string() + ".json"));
    auto rb = run("census --n 2 --q 3 --budget 100 --out " + bp.string());
    CHECK(rb.exit_code == 5);
    fs::path ckpt = bp.string() + ".checkpoint.json";
    CHECK(fs::exists(ckpt));
    CHECK(!fs::exists(fs::path(bp.string() + ".json"))); // no report written

    auto rr = run("census --n 2 --q 3 --resume " + ckpt.string() + " --out " + bp.string());
    CHECK(rr.exit_code == 0);
    Json resumed = Json::parse(slurp(bp.string() + ".json"));
    CHECK(resumed["total_maps"] == 48);
    CHECK(resumed["certificates"] == report["certificates"]);
  }

  SUBCASE("symmetric census reports findings") {
    fs::path sp = dir / "census_sym";
    auto rs = run("census --n 2 --q 3 --mode symmetric --out " + sp.string());
    CHECK(rs.exit_code == 0);
    Json sym = Json::parse(slurp(sp.string() + ".json"));
    CHECK(sym["total_maps"] == 8);
    CHECK(sym["orthogonal_induced"] == 4);
    CHECK(sym["failures"] == 4);
  }
}

TEST_CASE("wigner-demo") {
  auto r = run("wigner-demo --n 4 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("antiunitary false") != std::string::npos);
  CHECK(r.out.find("ok") != std::string::npos);

  auto ra = run("wigner-demo --n 4 --seed 7 --antiunitary");
  CHECK(ra.exit_code == 0);
  CHECK(ra.out.find("antiunitary true") != std::string::npos);

  auto small = run("wigner-demo --n 1 --seed 0");
  CHECK(small.exit_code != 0);

  SUBCASE("byte-reproducible output for a fixed config") {
    auto a = run("wigner-demo --n 5 --seed 123");
    auto b = run("wigner-demo --n 5 --seed 123");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);
  }

  SUBCASE("written form file holds a unitary") {
    fs::path out = temp_dir() / "wigner_form.json";
    auto r2 = run("wigner-demo --n 3 --seed 5 --out " + out.string());
    CHECK(r2.exit_code == 0);
    UnitaryForm form = unitary_form_from_json(Json::parse(slurp(out)));
    CHECK(form.U.rows() == 3);
    CHECK(max_entry_norm(CMatrix(form.U.adjoint() * form.U) - CMatrix::Identity(3, 3)) <
          1e-9);
  }
}
