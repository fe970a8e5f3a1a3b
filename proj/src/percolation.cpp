#include "cpm/percolation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>

#include "cpm/errors.hpp"

namespace cpm {

const char* to_string(Mode mode) { return mode == Mode::cpm ? "cpm" : "cpmz"; }

namespace {

void check_clique(CliqueView clique, unsigned k) {
  if (clique.size() != k) {
    throw std::invalid_argument("expected a clique of size " + std::to_string(k) + ", got " +
                                std::to_string(clique.size()));
  }
  if (!is_canonical(clique)) {
    throw std::invalid_argument("clique ids must be strictly increasing");
  }
}

void check_memory(const PercResult& result, const PercolationOptions& options) {
  if (options.memory_limit_bytes && result.key_storage_bytes() > *options.memory_limit_bytes) {
    throw ResourceLimitError("key storage estimate " + std::to_string(result.key_storage_bytes()) +
                             " bytes exceeds limit of " +
                             std::to_string(*options.memory_limit_bytes) + " bytes");
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Index tuples of all r-subsets of positions 0..n-1, lexicographic.
std::vector<std::vector<VertexId>> position_subsets(unsigned n, unsigned r) {
  std::vector<VertexId> positions(n);
  for (unsigned i = 0; i < n; ++i) positions[i] = i;
  std::vector<std::vector<VertexId>> subsets;
  enumerate_subcliques(CliqueView(positions), r,
                       [&](CliqueView sub) { subsets.emplace_back(sub.begin(), sub.end()); });
  return subsets;
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact

CpmRunner::CpmRunner(unsigned k, PercolationOptions options)
    : options_(options), start_(std::chrono::steady_clock::now()) {
  if (k < 2) throw std::invalid_argument("clique size must be at least 2");
  result_.mode = Mode::cpm;
  result_.k = k;
  result_.keys = CliqueIndex(k - 1);
  roots_.reserve(k);
}

void CpmRunner::add(CliqueView clique) {
  check_clique(clique, result_.k);
  auto& stats = result_.stats;
  ++stats.n_k;
  roots_.clear();
  enumerate_subcliques(clique, result_.k - 1, [&](CliqueView sub) {
    const auto [slot, inserted] = result_.keys.insert(sub);
    if (inserted) {
      const UfNode p = result_.uf.make_set();
      ++stats.makesets;
      result_.dict.push_back(p);
      roots_.push_back(p);
    } else {
      ++stats.finds;
      roots_.push_back(result_.uf.find(result_.dict[slot]));
    }
  });
  std::sort(roots_.begin(), roots_.end());
  roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
  last_ = result_.uf.unite(roots_);
  ++stats.unions;
  stats.peak_keys = std::max<std::uint64_t>(stats.peak_keys, result_.keys.size());
  check_memory(result_, options_);
}

PercResult CpmRunner::finish() && {
  result_.stats.wall_time = seconds_since(start_);
  return std::move(result_);
}

// ---------------------------------------------------------------------------
// Relaxed

namespace {

// Per-clique-size tables shared by every clique of a run: the z-subsets of
// a k-clique (as positions), and for each (k-1)-subset the indices of its
// own z-subsets within that list.
struct SubsetTables {
  std::vector<std::vector<VertexId>> zsubs;
  std::vector<std::vector<std::size_t>> faces;
};

SubsetTables make_tables(unsigned k, unsigned z) {
  SubsetTables tables;
  tables.zsubs = position_subsets(k, z);
  std::map<std::vector<VertexId>, std::size_t> lookup;
  for (std::size_t i = 0; i < tables.zsubs.size(); ++i) lookup.emplace(tables.zsubs[i], i);
  for (const auto& face : position_subsets(k, k - 1)) {
    std::vector<std::size_t> members;
    enumerate_subcliques(CliqueView(face), z, [&](CliqueView sub) {
      members.push_back(lookup.at(std::vector<VertexId>(sub.begin(), sub.end())));
    });
    tables.faces.push_back(std::move(members));
  }
  return tables;
}

}  // namespace

CpmzRunner::CpmzRunner(unsigned k, unsigned z, PercolationOptions options)
    : options_(options), start_(std::chrono::steady_clock::now()) {
  if (k < 4 || z < 2 || z > k - 2) {
    throw std::invalid_argument("cpmz requires 2 <= z <= k-2 (got k=" + std::to_string(k) +
                                ", z=" + std::to_string(z) + ")");
  }
  result_.mode = Mode::cpmz;
  result_.k = k;
  result_.z = z;
  result_.keys = CliqueIndex(z);
  auto tables = make_tables(k, z);
  zsubs_ = std::move(tables.zsubs);
  faces_ = std::move(tables.faces);
  zkey_.resize(z);
  slots_.resize(zsubs_.size());
}

const NodeSet& CpmzRunner::reduce(Slot slot) {
  auto& stats = result_.stats;
  NodeSet& nodes = result_.setz[slot];
  ++stats.reductions;
  stats.setz_sum += nodes.size();
  stats.setz_max = std::max<std::uint64_t>(stats.setz_max, nodes.size());
  stats.finds += nodes.size();
  for (auto& p : nodes) p = result_.uf.find(p);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
#ifndef NDEBUG
  for (const UfNode p : nodes) assert(result_.uf.is_root(p));
#endif
  return nodes;
}

void CpmzRunner::add_node(CliqueView zclique, UfNode q) {
  const auto [slot, inserted] = result_.keys.insert(zclique);
  if (inserted) result_.setz.emplace_back();
  NodeSet& nodes = result_.setz[slot];
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), q);
  if (it == nodes.end() || *it != q) nodes.insert(it, q);
}

void CpmzRunner::add(CliqueView clique) {
  check_clique(clique, result_.k);
  auto& stats = result_.stats;
  ++stats.n_k;

  auto key_of = [&](std::size_t i) {
    const auto& positions = zsubs_[i];
    for (std::size_t j = 0; j < positions.size(); ++j) zkey_[j] = clique[positions[j]];
    return CliqueView(zkey_);
  };

  for (std::size_t i = 0; i < zsubs_.size(); ++i) slots_[i] = result_.keys.find(key_of(i));

  merge_.clear();
  for (const auto& face : faces_) {
    bool first = true;
    running_.clear();
    for (const std::size_t i : face) {
      if (!first && running_.empty() && !options_.strict_reduce) break;
      const NodeSet* nodes = nullptr;
      if (slots_[i]) {
        nodes = &reduce(*slots_[i]);
      } else {
        // An unseen z-clique has an empty node set.
        ++stats.reductions;
      }
      if (first) {
        if (nodes) running_.assign(nodes->begin(), nodes->end());
        first = false;
      } else if (!running_.empty()) {
        scratch_.clear();
        if (nodes) {
          std::set_intersection(running_.begin(), running_.end(), nodes->begin(), nodes->end(),
                                std::back_inserter(scratch_));
        }
        running_.swap(scratch_);
      }
    }
    merge_.insert(merge_.end(), running_.begin(), running_.end());
  }

  UfNode q;
  if (merge_.empty()) {
    q = result_.uf.make_set();
    ++stats.makesets;
  } else {
    std::sort(merge_.begin(), merge_.end());
    merge_.erase(std::unique(merge_.begin(), merge_.end()), merge_.end());
    q = result_.uf.unite(merge_);
    ++stats.unions;
  }
  for (std::size_t i = 0; i < zsubs_.size(); ++i) add_node(key_of(i), q);
  last_ = q;
  stats.peak_keys = std::max<std::uint64_t>(stats.peak_keys, result_.keys.size());
  check_memory(result_, options_);
}

PercResult CpmzRunner::finish() && {
  result_.stats.wall_time = seconds_since(start_);
  return std::move(result_);
}

// ---------------------------------------------------------------------------

PercResult run_cpm(const Dag& dag, unsigned k, PercolationOptions options) {
  CpmRunner runner(k, options);
  enumerate_kcliques(dag, k, [&](CliqueView c) { runner.add(c); });
  return std::move(runner).finish();
}

PercResult run_cpm(std::span<const CliqueKey> cliques, unsigned k, PercolationOptions options) {
  CpmRunner runner(k, options);
  for (const auto& c : cliques) runner.add(c);
  return std::move(runner).finish();
}

PercResult run_cpmz(const Dag& dag, unsigned k, unsigned z, PercolationOptions options) {
  CpmzRunner runner(k, z, options);
  enumerate_kcliques(dag, k, [&](CliqueView c) { runner.add(c); });
  return std::move(runner).finish();
}

PercResult run_cpmz(std::span<const CliqueKey> cliques, unsigned k, unsigned z,
                    PercolationOptions options) {
  CpmzRunner runner(k, z, options);
  for (const auto& c : cliques) runner.add(c);
  return std::move(runner).finish();
}

}  // namespace cpm
