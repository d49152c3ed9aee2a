#include "wigrec/census.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace wigrec {

CensusDomain CensusDomain::build(size_t n, uint32_t q, MapMode mode) {
  if (q == 2) throw Error(Errc::CharTwo, "census runs need characteristic != 2");
  CensusDomain d;
  d.n_ = n;
  d.field_ = FieldSpec::gf(q);
  d.mode_ = mode;
  if (mode == MapMode::Full) {
    d.idems_ = enumerate_idempotents(n, d.field_);
  } else {
    SymmetricEnumeration sym = enumerate_symmetric_idempotents(n, d.field_);
    d.excluded_isotropic_ = sym.excluded_isotropic;
    for (auto& s : sym.items) d.idems_.push_back(std::move(s.p));
  }
  const size_t m = d.idems_.size();
  for (size_t i = 0; i < m; ++i) d.index_.emplace(d.idems_[i], i);

  d.pairing_.resize(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      d.pairing_[i * m + j] = trace_pairing(d.idems_[i], d.idems_[j]).residue();

  // profile = sorted multiset of pairing values against the whole domain
  std::vector<std::vector<int64_t>> profiles(m);
  for (size_t i = 0; i < m; ++i) {
    profiles[i].assign(d.pairing_.begin() + i * m, d.pairing_.begin() + (i + 1) * m);
    std::sort(profiles[i].begin(), profiles[i].end());
  }
  std::vector<std::vector<int64_t>> distinct;
  d.profile_id_.resize(m);
  for (size_t i = 0; i < m; ++i) {
    auto it = std::find(distinct.begin(), distinct.end(), profiles[i]);
    if (it == distinct.end()) {
      distinct.push_back(profiles[i]);
      it = std::prev(distinct.end());
    }
    d.profile_id_[i] = static_cast<uint32_t>(it - distinct.begin());
  }

  // Greedy refinement order: repeatedly pick the element whose pairing row
  // splits the current signature classes the most (ties to the smallest
  // index). Once classes are singletons the remaining images are forced and
  // the rest of the order does not matter.
  if (m > 0) {
    std::vector<char> chosen(m, 0);
    std::vector<uint32_t> klass(m, 0);
    size_t num_classes = 1;
    auto refine_by = [&](uint32_t pivot) {
      std::map<std::pair<uint32_t, int64_t>, uint32_t> remap;
      for (size_t e = 0; e < m; ++e) {
        auto key = std::make_pair(klass[e], d.pairing(e, pivot));
        auto [it, inserted] = remap.emplace(key, static_cast<uint32_t>(remap.size()));
        klass[e] = it->second;
      }
      num_classes = remap.size();
    };
    d.search_order_.push_back(0);
    chosen[0] = 1;
    refine_by(0);
    while (d.search_order_.size() < m && num_classes < m) {
      uint32_t best = 0;
      size_t best_classes = 0;
      for (uint32_t i = 0; i < m; ++i) {
        if (chosen[i]) continue;
        std::set<std::pair<uint32_t, int64_t>> split;
        for (size_t e = 0; e < m; ++e) split.emplace(klass[e], d.pairing(e, i));
        if (split.size() > best_classes) {
          best_classes = split.size();
          best = i;
        }
      }
      d.search_order_.push_back(best);
      chosen[best] = 1;
      refine_by(best);
    }
    for (uint32_t i = 0; i < m; ++i)
      if (!chosen[i]) d.search_order_.push_back(i);
  }
  return d;
}

size_t CensusDomain::index_of(const RankOneIdempotent& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(Errc::DomainGap, "idempotent is not in the census domain");
  return it->second;
}

SymmetryMap CensusDomain::as_symmetry_map(const MapTable& table) const {
  SymmetryMap map(mode_, n_, field_);
  for (size_t i = 0; i < table.size(); ++i) map.define(idems_[i], idems_[table[i]]);
  return map;
}

MapTable CensusDomain::table_of(const SymmetryMap& map) const {
  MapTable t(size());
  for (size_t i = 0; i < size(); ++i)
    t[i] = static_cast<uint32_t>(index_of(map.apply(idems_[i])));
  return t;
}

namespace {

struct SearchState {
  std::vector<uint32_t> img;  // assignments for depths < depth
  std::vector<uint32_t> next; // next candidate to try per depth, size depth+1
  size_t depth = 0;
};

struct SearchOutcome {
  std::vector<MapTable> found;
  uint64_t nodes = 0;
  bool exhausted = true;
  SearchState stopped; // valid when !exhausted
};

// Iterative DFS over image assignments. Depth d assigns the image of domain
// position search_order()[d]; candidates are tried in canonical order, so the
// walk is deterministic and checkpointable. depth0_end bounds the candidate
// range at depth 0 so branches can run independently.
SearchOutcome run_dfs(const CensusDomain& domain, bool bijective_only, SearchState state,
                      uint32_t depth0_end, uint64_t node_start, uint64_t node_budget) {
  const size_t m = domain.size();
  const std::vector<uint32_t>& order = domain.search_order();
  SearchOutcome out;
  out.nodes = node_start;

  std::vector<char> used(m, 0);
  for (size_t i = 0; i < state.depth; ++i) used[state.img[i]] = 1;
  state.img.resize(m, 0);
  state.next.resize(m + 1, 0);

  size_t d = state.depth;
  while (true) {
    if (d == m) {
      MapTable table(m);
      for (size_t i = 0; i < m; ++i) table[order[i]] = state.img[i];
      out.found.push_back(std::move(table));
      if (d == 0) break;
      --d;
      used[state.img[d]] = 0;
      continue;
    }
    const uint32_t pos = order[d];
    const uint32_t end = d == 0 ? depth0_end : static_cast<uint32_t>(m);
    uint32_t c = state.next[d];
    bool descended = false;
    for (; c < end; ++c) {
      if (out.nodes >= node_budget) {
        out.exhausted = false;
        state.next[d] = c;
        out.stopped.depth = d;
        out.stopped.img.assign(state.img.begin(), state.img.begin() + d);
        out.stopped.next.assign(state.next.begin(), state.next.begin() + d + 1);
        return out;
      }
      ++out.nodes;
      if (domain.profile_id(c) != domain.profile_id(pos)) continue;
      if (bijective_only && used[c]) continue;
      bool consistent = true;
      for (size_t i = 0; i < d && consistent; ++i)
        consistent = domain.pairing(state.img[i], c) == domain.pairing(order[i], pos);
      if (!consistent) continue;
      state.img[d] = c;
      used[c] = 1;
      state.next[d] = c + 1;
      state.next[d + 1] = 0;
      ++d;
      descended = true;
      break;
    }
    if (descended) continue;
    state.next[d] = 0;
    if (d == 0) break;
    --d;
    used[state.img[d]] = 0;
  }
  return out;
}

CensusResult search(const CensusDomain& domain, const CensusTask& task, SearchState start,
                    uint64_t node_start) {
  const size_t m = domain.size();
  const bool budgeted = task.node_budget != kNoBudget;
  // budgeted runs stay serial so the checkpoint is deterministic
  const unsigned jobs = budgeted ? 1 : std::max(1u, task.jobs);

  if (jobs == 1 || start.depth > 0 || m < 2) {
    SearchOutcome out = run_dfs(domain, task.bijective_only, std::move(start),
                                static_cast<uint32_t>(m), node_start, task.node_budget);
    if (!out.exhausted) {
      CensusCheckpoint ckpt;
      ckpt.task = task;
      ckpt.nodes_used = out.nodes;
      ckpt.assigned = out.stopped.img;
      ckpt.next = out.stopped.next;
      ckpt.found = std::move(out.found);
      throw BudgetExceededError(std::move(ckpt));
    }
    std::sort(out.found.begin(), out.found.end());
    return {std::move(out.found), out.nodes};
  }

  // one independent branch per first assignment, merged in candidate order
  std::vector<SearchOutcome> branch(m);
  std::atomic<uint32_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      uint32_t c = cursor.fetch_add(1);
      if (c >= m) return;
      SearchState s;
      s.depth = 0;
      s.next.assign(1, c);
      branch[c] = run_dfs(domain, task.bijective_only, std::move(s), c + 1, 0, kNoBudget);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  CensusResult result;
  result.nodes_used = node_start;
  for (uint32_t c = 0; c < m; ++c) {
    result.nodes_used += branch[c].nodes;
    for (auto& f : branch[c].found) result.maps.push_back(std::move(f));
  }
  std::sort(result.maps.begin(), result.maps.end());
  return result;
}

} // namespace

CensusResult enumerate_preserving_maps(const CensusDomain& domain, const CensusTask& task) {
  if (domain.mode() != task.mode || domain.n() != task.n ||
      domain.field().characteristic() != task.q)
    throw Error(Errc::InvalidArgument, "census domain does not match the task");
  SearchState start;
  return search(domain, task, std::move(start), 0);
}

CensusResult resume_preserving_maps(const CensusDomain& domain, const CensusCheckpoint& ckpt,
                                    uint64_t new_budget) {
  CensusTask task = ckpt.task;
  task.node_budget = new_budget;
  SearchState state;
  state.depth = ckpt.assigned.size();
  state.img = ckpt.assigned;
  state.next = ckpt.next;

  try {
    CensusResult rest = search(domain, task, std::move(state), ckpt.nodes_used);
    CensusResult merged;
    merged.nodes_used = rest.nodes_used;
    merged.maps = ckpt.found;
    for (auto& t : rest.maps) merged.maps.push_back(std::move(t));
    std::sort(merged.maps.begin(), merged.maps.end());
    return merged;
  } catch (BudgetExceededError& e) {
    // chained checkpoints keep the solutions found by earlier segments
    std::vector<MapTable> all = ckpt.found;
    for (auto& t : e.checkpoint.found) all.push_back(std::move(t));
    e.checkpoint.found = std::move(all);
    throw;
  }
}

uintmax_t group_order(size_t n, uint32_t q) {
  uintmax_t qn = 1;
  for (size_t i = 0; i < n; ++i) qn *= q;
  uintmax_t order = 1;
  uintmax_t qk = 1;
  for (size_t k = 0; k < n; ++k) {
    order *= qn - qk;
    qk *= q;
  }
  return order / (q - 1);
}

CensusReport classify_all(const CensusDomain& domain, const std::vector<MapTable>& maps,
                          const CensusTask& task) {
  CensusReport report;
  report.task = task;
  report.domain_size = domain.size();
  report.excluded_isotropic = domain.excluded_isotropic();
  report.total_maps = maps.size();
  report.pgl_order = group_order(task.n, task.q);

  for (size_t id = 0; id < maps.size(); ++id) {
    const MapTable& table = maps[id];
    MapCertificate cert;
    cert.map_id = id;

    std::vector<char> seen(domain.size(), 0);
    cert.injective = true;
    for (uint32_t img : table) {
      if (seen[img]) cert.injective = false;
      seen[img] = 1;
    }
    if (cert.injective) ++report.injective_count;

    try {
      SymmetryMap phi = domain.as_symmetry_map(table);
      LinearExtension ext = extend_map(phi);
      if (task.mode == MapMode::Full) {
        PreserverForm form = decompose(ext);
        bool ok = true;
        for (size_t i = 0; i < domain.size() && ok; ++i)
          ok = apply_form(form, domain.idem(i)) == domain.idem(table[i]);
        cert.verified = ok;
        if (!ok) {
          cert.failure = "certificate does not reproduce the map";
        } else if (form.branch == Branch::Identity) {
          ++report.identity_branch;
        } else {
          ++report.transpose_branch;
        }
        cert.form = std::move(form);
      } else {
        OrthogonalForm form = recover_orthogonal(ext);
        bool ok = true;
        for (size_t i = 0; i < domain.size() && ok; ++i)
          ok = apply_form(form, domain.idem(i)) == domain.idem(table[i]);
        cert.verified = ok;
        if (!ok)
          cert.failure = "certificate does not reproduce the map";
        else
          ++report.orthogonal_induced;
        cert.orthogonal = std::move(form);
      }
    } catch (const Error& e) {
      cert.failure = e.what();
    }
    if (!cert.verified) ++report.failures;
    report.certificates.push_back(std::move(cert));
  }

  report.group_order_match =
      task.mode == MapMode::Full && report.identity_branch == report.pgl_order;
  return report;
}

} // namespace wigrec
