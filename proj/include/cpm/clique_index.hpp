#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cpm/kclique.hpp"

namespace cpm {

using Slot = std::uint32_t;

// Open-addressing hash index over fixed-width clique keys. Each distinct key
// gets a dense slot number 0, 1, 2, ... in insertion order; keys are stored
// back to back, so a key costs `width` ids plus one table entry.
class CliqueIndex {
 public:
  explicit CliqueIndex(unsigned width);

  std::pair<Slot, bool> insert(CliqueView key);
  std::optional<Slot> find(CliqueView key) const;

  std::size_t size() const { return keys_.size() / width_; }
  unsigned width() const { return width_; }
  CliqueView key(Slot slot) const { return {keys_.data() + std::size_t{slot} * width_, width_}; }

  // Bytes held by key storage and the probe table.
  std::size_t memory_bytes() const {
    return keys_.capacity() * sizeof(VertexId) + table_.capacity() * sizeof(Slot);
  }

 private:
  std::uint64_t hash(CliqueView key) const;
  bool equals(Slot slot, CliqueView key) const;
  void grow();

  unsigned width_;
  std::vector<VertexId> keys_;
  std::vector<Slot> table_;  // slot + 1; 0 marks an empty bucket
  std::size_t mask_ = 0;
};

}  // namespace cpm
