#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "cpm/graph.hpp"
#include "cpm/percolation.hpp"

namespace cpm {

using Community = std::vector<ExternalId>;

// A set of possibly overlapping communities. Kept normalized: members
// ascending, no empty or repeated community, communities ordered by size
// (largest first) and then lexicographically.
class Cover {
 public:
  Cover() = default;
  explicit Cover(std::vector<Community> communities);

  const std::vector<Community>& communities() const { return communities_; }
  std::size_t size() const { return communities_.size(); }
  bool empty() const { return communities_.empty(); }

  friend bool operator==(const Cover&, const Cover&) = default;

 private:
  std::vector<Community> communities_;
};

// Node-level communities of a finished run. `external_ids` maps internal
// vertex ids to output ids; when empty, internal ids are used as-is.
Cover extract(PercResult& result, std::span<const ExternalId> external_ids = {});

// One community per line, space-separated ids.
void write_cover(const Cover& cover, std::ostream& out);
Cover read_cover(std::istream& in);

void write_cover(const Cover& cover, const std::filesystem::path& path);
Cover read_cover(const std::filesystem::path& path);

}  // namespace cpm
