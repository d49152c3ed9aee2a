// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Everything randomized is seeded; exact-arithmetic checks use equality, the
// numeric module uses the stated tolerances.
#include <chrono>
#include <cstdio>
#include <future>
#include <iostream>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "test_support.hpp"
#include "wigrec/json_io.hpp"

using namespace wigrec;
using namespace testsup;

namespace {

int failed_criteria = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!pass) ++failed_criteria;
}

struct CellSpec {
  uint32_t q;
  size_t n;
  int trials;
};

struct RoundTripStats {
  int trials = 0;
  int round_trip_failures = 0; // branch/scalar mismatch or action mismatch
  int gram_failures = 0;
};

// One (q, n) cell of decomposition round-trips; used by criteria 1 and 2.
RoundTripStats run_cell(const CellSpec& cell) {
  RoundTripStats stats;
  FieldSpec field = FieldSpec::gf(cell.q);
  auto domain = enumerate_idempotents(cell.n, field);
  Rng rng(Rng::derive(0xACCE97, cell.q * 100 + cell.n));

  for (int t = 0; t < cell.trials; ++t) {
    Matrix a = random_nonsingular(field, cell.n, rng);
    Branch branch = rng.below(2) ? Branch::Transpose : Branch::Identity;
    SymmetryMap phi = induced_map(PreserverForm{a, branch}, cell.n);
    ++stats.trials;

    PrimedBasis basis = build_primed_basis(phi);
    IndependenceResult indep = check_independence(basis);

    // criterion 2: Gram of the primed family is exactly the unit-basis Gram
    bool gram_ok = indep.independent;
    for (size_t i = 0; i < cell.n && gram_ok; ++i)
      for (size_t j = 0; j < cell.n && gram_ok; ++j)
        for (size_t k = 0; k < cell.n && gram_ok; ++k)
          for (size_t l = 0; l < cell.n && gram_ok; ++l) {
            Scalar expected =
                (j == k && i == l) ? Scalar::one(field) : Scalar::zero(field);
            gram_ok = indep.gram.at(basis.index(i, j), basis.index(k, l)) == expected;
          }
    if (!gram_ok) ++stats.gram_failures;

    bool ok = true;
    try {
      LinearExtension ext(MapMode::Full, cell.n, field, basis.matrices());
      PreserverForm recovered = decompose(ext);
      ok = recovered.branch == branch && forms_equal_up_to_scalar(a, recovered.A);
      if (ok) {
        SymmetryMap recovered_phi = induced_map(recovered, cell.n);
        for (const auto& p : domain)
          if (recovered_phi.apply(p) != phi.apply(p)) {
            ok = false;
            break;
          }
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) ++stats.round_trip_failures;
  }
  return stats;
}

void criteria_1_and_2() {
  std::vector<CellSpec> cells{
      {3, 2, 200}, {5, 2, 150}, {7, 2, 120}, {3, 3, 150}, {5, 3, 100},
      {7, 3, 60},  {3, 4, 90},  {5, 4, 70},  {7, 4, 60},
  };
  auto start = std::chrono::steady_clock::now();
  std::vector<std::future<RoundTripStats>> futures;
  for (const auto& cell : cells)
    futures.push_back(std::async(std::launch::async, run_cell, cell));

  RoundTripStats total;
  for (auto& f : futures) {
    RoundTripStats s = f.get();
    total.trials += s.trials;
    total.round_trip_failures += s.round_trip_failures;
    total.gram_failures += s.gram_failures;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  char buf[160];
  std::snprintf(buf, sizeof(buf), "%d/%d exact round-trips, %.1fs",
                total.trials - total.round_trip_failures, total.trials, secs);
  report(1, "conjugation/transpose decomposition round-trip over GF(3,5,7), n=2..4", total.round_trip_failures == 0,
         buf);
  std::snprintf(buf, sizeof(buf), "%d/%d trials with exact unit Gram",
                total.trials - total.gram_failures, total.trials);
  report(2, "Gram identity tr(E'_ij E'_kl) = d_jk d_il", total.gram_failures == 0, buf);
}

void criterion_3() {
  bool pass = true;
  std::string detail;
  for (uint32_t q : {3u, 5u}) {
    CensusDomain domain = CensusDomain::build(2, q, MapMode::Full);
    CensusTask task{2, q, MapMode::Full, false, kNoBudget, 2};
    CensusResult result = enumerate_preserving_maps(domain, task);

    std::set<MapTable> found(result.maps.begin(), result.maps.end());
    std::set<MapTable> oracle = oracles::forward_oracle_tables(domain, q);
    CensusReport rep = classify_all(domain, result.maps, task);

    bool cell_ok = found == oracle && rep.failures == 0 &&
                   rep.injective_count == rep.total_maps && rep.group_order_match;
    pass = pass && cell_ok;
    detail += "q=" + std::to_string(q) + ": " + std::to_string(result.maps.size()) +
              " maps, oracle " + std::to_string(oracle.size()) +
              (found == oracle ? " equal" : " DIFFER") + ", failures " +
              std::to_string(rep.failures) + "; ";
  }
  report(3, "exhaustive census (2,3) and (2,5) equals the forward oracle", pass, detail);
}

Matrix embedded_rotation(FieldSpec f, size_t n, size_t i, size_t j, long a, long b, long c,
                         bool flip) {
  // plane rotation by a Pythagorean triple (a, b, c), embedded at rows i < j
  Matrix u = Matrix::identity(f, n);
  u.set(i, i, Scalar::rational(a, c));
  u.set(i, j, Scalar::rational(b, c));
  u.set(j, i, Scalar::rational(-b, c));
  u.set(j, j, Scalar::rational(a, c));
  if (flip && n > 2) {
    size_t k = 3 - i - j; // the untouched coordinate for n = 3
    u.set(k, k, Scalar::rational(-1));
  }
  return u;
}

void criterion_4() {
  int trials = 0, failures = 0;

  // signed permutations over GF(p)
  for (uint32_t q : {3u, 5u, 7u}) {
    FieldSpec f = FieldSpec::gf(q);
    Rng rng(Rng::derive(0x0427, q));
    for (size_t n : {2ul, 3ul}) {
      for (int t = 0; t < 25; ++t) {
        Matrix u = random_signed_permutation(f, n, rng);
        ++trials;
        try {
          OrthogonalForm rec =
              recover_orthogonal(extend_map(induced_map(OrthogonalForm{u}, n)));
          bool ok = (rec.U == u || rec.U == -u) &&
                    rec.U.transpose() * rec.U == Matrix::identity(f, n);
          if (!ok) ++failures;
        } catch (const Error&) {
          ++failures;
        }
      }
    }
  }

  // rational rotations from Pythagorean triples
  FieldSpec fq = FieldSpec::rationals();
  const long triples[4][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}};
  Rng rng(0x0428);
  for (int t = 0; t < 56; ++t) {
    const long* tri = triples[t % 4];
    size_t n = (t % 2) ? 3 : 2;
    size_t i = 0, j = 1;
    if (n == 3) {
      i = t % 3;
      j = (i + 1 + t % 2) % 3;
      if (i > j) std::swap(i, j);
    }
    Matrix u = embedded_rotation(fq, n, i, j, tri[0], tri[1], tri[2], t % 4 == 1);
    if (n == 3 && t % 3 == 0) {
      const long* tri2 = triples[(t + 1) % 4];
      size_t k = (j + 1) % 3, l = (k == i) ? (i + 1) % 3 : k;
      size_t lo = std::min(k, l) == std::min(i, j) ? 1 : std::min(k, l);
      (void)lo;
      Matrix u2 = embedded_rotation(fq, 3, 0, 2, tri2[0], tri2[1], tri2[2], false);
      u = u * u2;
    }
    if (u.transpose() * u != Matrix::identity(fq, n)) {
      ++failures; // construction bug would show up here
      ++trials;
      continue;
    }
    ++trials;
    try {
      OrthogonalForm rec = recover_orthogonal(extend_map(induced_map(OrthogonalForm{u}, n)));
      bool ok = (rec.U == u || rec.U == -u) &&
                rec.U.transpose() * rec.U == Matrix::identity(fq, n);
      if (!ok) ++failures;
    } catch (const Error&) {
      ++failures;
    }
  }

  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d/%d recovered up to sign, U^t U = I exact",
                trials - failures, trials);
  report(4, "orthogonal decomposition round-trip", failures == 0 && trials >= 200, buf);
}

std::vector<UnitaryForm> reconstructed_forms;
std::vector<bool> reconstructed_antiunitary;

void criterion_5() {
  int trials = 0, failures = 0;
  double worst = 0.0;
  for (int t = 0; t < 208; ++t) {
    Eigen::Index n = 2 + (t % 7);
    bool anti = t % 2 == 1;
    Rng rng(Rng::derive(0x0519, t));
    CMatrix v = random_unitary(n, rng);
    StateOracle phi = [&v, anti](const PureState& p) {
      CVector w = anti ? CVector(v * p.vector().conjugate()) : CVector(v * p.vector());
      return PureState::from_vector(std::move(w));
    };
    ++trials;
    try {
      UnitaryForm form = reconstruct_symmetry(phi, n);
      double residual = probe_residual(phi, form);
      worst = std::max(worst, residual);
      if (residual > 1e-8 || form.antiunitary != anti) {
        ++failures;
      } else {
        reconstructed_forms.push_back(form);
        reconstructed_antiunitary.push_back(anti);
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d/%d trials, worst residual %.2e", trials - failures,
                trials, worst);
  report(5, "Wigner numeric round-trip, n=2..8", failures == 0, buf);
}

void criterion_6() {
  int jordan_failures = 0, classify_failures = 0;
  double worst_jordan = 0.0;
  for (size_t k = 0; k < reconstructed_forms.size(); ++k) {
    ComplexLinearMap map = ComplexLinearMap::induced(reconstructed_forms[k]);
    JordanReport jr = verify_jordan(map, 12, {}, Rng::derive(0x0613, k));
    worst_jordan =
        std::max({worst_jordan, jr.max_square_residual, jr.max_star_residual});
    if (!jr.ok(1e-8)) ++jordan_failures;

    MorphismKind kind = classify_morphism(map, 12, {}, Rng::derive(0x0617, k));
    MorphismKind expected = reconstructed_antiunitary[k] ? MorphismKind::Antiautomorphism
                                                         : MorphismKind::Automorphism;
    if (kind != expected) ++classify_failures;
  }

  int orth_disagreements = 0;
  Rng rng(0x0619);
  for (int t = 0; t < 1000; ++t) {
    CVector a(5), b(5);
    for (int i = 0; i < 5; ++i) {
      a[i] = rng.complex_normal();
      b[i] = rng.complex_normal();
    }
    auto [tz, pz] =
        orthogonality_equivalence(PureState::from_vector(a), PureState::from_vector(b));
    if (tz != pz) ++orth_disagreements;
  }
  // include exactly-orthogonal pairs
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      auto [tz, pz] =
          orthogonality_equivalence(PureState::basis(5, i), PureState::basis(5, j));
      if (tz != pz || tz != (i != j)) ++orth_disagreements;
    }

  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "%zu forms, worst Jordan residual %.2e, %d classify errors, %d "
                "orthogonality disagreements",
                reconstructed_forms.size(), worst_jordan, classify_failures,
                orth_disagreements);
  report(6, "Jordan + Herstein + orthogonality equivalences",
         jordan_failures == 0 && classify_failures == 0 && orth_disagreements == 0 &&
             !reconstructed_forms.empty(),
         buf);
}

void criterion_7() {
  int rep_failures = 0;
  Rng rng(0x0701);
  FieldSpec fq = FieldSpec::rationals();
  for (int t = 0; t < 100; ++t) {
    size_t n = 2 + t % 3;
    Matrix target = random_matrix(fq, n, rng);
    FiniteRankRep base(fq, n);
    for (size_t i = 0; i < n; ++i) base.add_term(Vector::unit(fq, n, i), target.row(i));
    Scalar expected = target.trace();
    if (finite_rank_trace(base) != expected) ++rep_failures;

    FiniteRankRep padded(fq, n);
    for (size_t i = 0; i < n; ++i) padded.add_term(Vector::unit(fq, n, i), target.row(i));
    for (int extra = 0; extra < 3; ++extra) {
      Vector x = random_vector(fq, n, rng);
      Covector g = random_covector(fq, n, rng);
      padded.add_term(x, g);
      padded.add_term(Vector(fq, n) - x, g);
    }
    if (padded.induced_matrix() != target || finite_rank_trace(padded) != expected)
      ++rep_failures;
  }

  int trace_failures = 0;
  for (int t = 0; t < 100; ++t) {
    FieldSpec f = t % 2 ? FieldSpec::gf(7) : fq;
    Matrix a = random_matrix(f, 3, rng);
    Matrix tm = random_matrix(f, 3, rng);
    if ((tm * a).trace() != (a * tm).trace()) ++trace_failures;
  }

  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d representation failures, %d trace-identity failures",
                rep_failures, trace_failures);
  report(7, "finite-rank trace functional", rep_failures == 0 && trace_failures == 0, buf);
}

void criterion_8() {
  FieldSpec f = FieldSpec::gf(3);
  auto domain = enumerate_idempotents(2, f);
  int rejected = 0, crafted = 0;
  std::string detail;

  // (a) swap E_11 <-> E_11+E_12: a violating pair must be named
  {
    ++crafted;
    auto e11 = RankOneIdempotent::diagonal_unit(f, 2, 0);
    auto mixed = RankOneIdempotent::unit_pair(f, 2, 0, 1);
    SymmetryMap phi(MapMode::Full, 2, f);
    for (const auto& p : domain)
      phi.define(p, p == e11 ? mixed : (p == mixed ? e11 : p));
    auto rep = check_trace_preservation(phi, domain);
    if (!rep.ok()) {
      ++rejected;
      detail += "swap: " + std::to_string(rep.violations.size()) + " pairs named; ";
    }
  }

  // (b) scaled off-diagonal image: decompose must refuse with NotAPreserver
  {
    ++crafted;
    std::vector<Matrix> images{
        Matrix::unit(f, 2, 0, 0), Matrix::unit(f, 2, 0, 1),
        Matrix::unit(f, 2, 1, 0).scaled(Scalar::gf(3, 2)), Matrix::unit(f, 2, 1, 1)};
    try {
      decompose(LinearExtension(MapMode::Full, 2, f, std::move(images)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotAPreserver) {
        ++rejected;
        detail += "scaled-unit: NotAPreserver; ";
      }
    }
  }

  // (c) constant map: the primed family degenerates
  {
    ++crafted;
    SymmetryMap constant(MapMode::Full, 2, f);
    auto e11 = RankOneIdempotent::diagonal_unit(f, 2, 0);
    constant.set_oracle([e11](const RankOneIdempotent&) { return e11; });
    try {
      extend_map(constant);
    } catch (const Error& e) {
      if (e.code() == Errc::DependentBasis) {
        ++rejected;
        detail += "constant: DependentBasis; ";
      }
    }
  }

  // (d) non-idempotent diagonal image 2 E_22
  {
    ++crafted;
    std::vector<Matrix> images{
        Matrix::unit(f, 2, 0, 0), Matrix::unit(f, 2, 0, 1), Matrix::unit(f, 2, 1, 0),
        Matrix::unit(f, 2, 1, 1).scaled(Scalar::gf(3, 2))};
    try {
      decompose(LinearExtension(MapMode::Full, 2, f, std::move(images)));
    } catch (const Error& e) {
      if (e.code() == Errc::NotAPreserver) {
        ++rejected;
        detail += "scaled-diagonal: NotAPreserver; ";
      }
    }
  }

  report(8, "negative-path rejection of non-preserving maps",
         rejected == crafted && rejected >= 3, detail + std::to_string(rejected) + " of " +
             std::to_string(crafted) + " rejected");
}

} // namespace

int main() {
  std::printf("acceptance suite\n");
  auto start = std::chrono::steady_clock::now();
  criteria_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d criteria failed, %.1fs total\n", failed_criteria, secs);
  return failed_criteria == 0 ? 0 : 1;
}
