#include "cpm/cover.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "cpm/errors.hpp"

namespace cpm {

Cover::Cover(std::vector<Community> communities) {
  for (auto& c : communities) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::erase_if(communities, [](const Community& c) { return c.empty(); });
  std::sort(communities.begin(), communities.end(), [](const Community& a, const Community& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  communities.erase(std::unique(communities.begin(), communities.end()), communities.end());
  communities_ = std::move(communities);
}

Cover extract(PercResult& result, std::span<const ExternalId> external_ids) {
  std::map<UfNode, std::vector<VertexId>> by_root;
  auto add = [&](UfNode root, CliqueView members) {
    auto& community = by_root[root];
    community.insert(community.end(), members.begin(), members.end());
  };
  for (Slot slot = 0; slot < result.keys.size(); ++slot) {
    const auto members = result.keys.key(slot);
    if (result.mode == Mode::cpm) {
      add(result.uf.find(result.dict[slot]), members);
    } else {
      NodeSet roots;
      for (const UfNode p : result.setz[slot]) roots.push_back(result.uf.find(p));
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (const UfNode r : roots) add(r, members);
    }
  }

  std::vector<Community> communities;
  communities.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    Community community;
    community.reserve(members.size());
    for (const VertexId v : members) {
      community.push_back(external_ids.empty() ? ExternalId{v} : external_ids[v]);
    }
    communities.push_back(std::move(community));
  }
  return Cover(std::move(communities));
}

void write_cover(const Cover& cover, std::ostream& out) {
  for (const auto& community : cover.communities()) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i) out << ' ';
      out << community[i];
    }
    out << '\n';
  }
}

Cover read_cover(std::istream& in) {
  std::vector<Community> communities;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    Community community;
    while (tokens >> token) {
      ExternalId id = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("invalid node id '" + token + "'", line_no);
      }
      community.push_back(id);
    }
    if (!community.empty()) communities.push_back(std::move(community));
  }
  if (in.bad()) throw ParseError("read error", line_no);
  return Cover(std::move(communities));
}

void write_cover(const Cover& cover, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_cover(cover, out);
  if (!out) throw IoError("failed writing " + path.string());
}

Cover read_cover(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_cover(in);
}

}  // namespace cpm
