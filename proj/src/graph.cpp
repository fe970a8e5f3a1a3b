#include "cpm/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include "cpm/errors.hpp"

namespace cpm {

Graph Graph::from_edges(std::span<const std::pair<ExternalId, ExternalId>> edges) {
  Graph g;
  auto intern = [&g](ExternalId ext) {
    auto [it, inserted] =
        g.internal_ids_.try_emplace(ext, static_cast<VertexId>(g.external_ids_.size()));
    if (inserted) {
      if (g.external_ids_.size() >= std::numeric_limits<VertexId>::max()) {
        throw std::length_error("too many vertices");
      }
      g.external_ids_.push_back(ext);
    }
    return it->second;
  };

  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    const VertexId u = intern(a);
    const VertexId v = intern(b);
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  const std::size_t n = g.external_ids_.size();
  g.offsets_.assign(n + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.reserve(arcs.size());
  for (const auto& arc : arcs) g.neighbors_.push_back(arc.second);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<VertexId> Graph::internal_id(ExternalId ext) const {
  const auto it = internal_ids_.find(ext);
  if (it == internal_ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

ExternalId parse_id(std::string_view token, std::size_t line_no) {
  ExternalId value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid vertex id '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

Graph load_edgelist(std::istream& in) {
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.front().front() == '#' || tokens.front().front() == '%') continue;
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()) +
                           " tokens",
                       line_no);
    }
    edges.emplace_back(parse_id(tokens[0], line_no), parse_id(tokens[1], line_no));
  }
  if (in.bad()) throw ParseError("read error", line_no);
  return Graph::from_edges(edges);
}

void write_edgelist(const Graph& g, std::ostream& out) {
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (const VertexId v : g.neighbors(u)) {
      if (u < v) out << g.external_id(u) << ' ' << g.external_id(v) << '\n';
    }
  }
}

CoreOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CoreOrdering result;
  result.order.reserve(n);
  result.rank.assign(n, 0);

  std::vector<std::size_t> remaining(n);
  std::set<std::pair<std::size_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = g.degree(v);
    queue.emplace(remaining[v], v);
  }
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    const auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.rank[v] = static_cast<std::uint32_t>(result.order.size());
    result.order.push_back(v);
    result.core = std::max(result.core, static_cast<std::uint32_t>(deg));
    for (const VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({remaining[w], w});
      --remaining[w];
      queue.emplace(remaining[w], w);
    }
  }
  return result;
}

Dag::Dag(const Graph& g, const CoreOrdering& ordering)
    : rank_(ordering.rank), order_(ordering.order), core_(ordering.core) {
  const std::size_t n = g.num_vertices();
  offsets_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    std::size_t out_degree = 0;
    for (const VertexId v : g.neighbors(u)) {
      if (rank_[v] > rank_[u]) ++out_degree;
    }
    offsets_[u + 1] = offsets_[u] + out_degree;
  }
  out_.resize(offsets_[n]);
  for (VertexId u = 0; u < n; ++u) {
    auto* cursor = out_.data() + offsets_[u];
    for (const VertexId v : g.neighbors(u)) {
      if (rank_[v] > rank_[u]) *cursor++ = v;
    }
    std::sort(out_.data() + offsets_[u], cursor,
              [this](VertexId a, VertexId b) { return rank_[a] < rank_[b]; });
  }
}

}  // namespace cpm
