#include "cpm/clique_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cpm {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr std::size_t kInitialBuckets = 16;

}  // namespace

CliqueIndex::CliqueIndex(unsigned width) : width_(width) {
  if (width == 0) throw std::invalid_argument("clique key width must be positive");
  table_.assign(kInitialBuckets, 0);
  mask_ = kInitialBuckets - 1;
}

std::uint64_t CliqueIndex::hash(CliqueView key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (const VertexId v : key) h = mix(h ^ v);
  return h;
}

bool CliqueIndex::equals(Slot slot, CliqueView key) const {
  const auto stored = this->key(slot);
  return std::equal(stored.begin(), stored.end(), key.begin());
}

std::optional<Slot> CliqueIndex::find(CliqueView key) const {
  if (key.size() != width_) throw std::invalid_argument("clique key has wrong width");
  for (std::size_t b = hash(key) & mask_;; b = (b + 1) & mask_) {
    const Slot entry = table_[b];
    if (entry == 0) return std::nullopt;
    if (equals(entry - 1, key)) return entry - 1;
  }
}

std::pair<Slot, bool> CliqueIndex::insert(CliqueView key) {
  if (key.size() != width_) throw std::invalid_argument("clique key has wrong width");
  std::size_t b = hash(key) & mask_;
  for (;; b = (b + 1) & mask_) {
    const Slot entry = table_[b];
    if (entry == 0) break;
    if (equals(entry - 1, key)) return {entry - 1, false};
  }
  const std::size_t slot = size();
  if (slot + 1 >= std::numeric_limits<Slot>::max()) {
    throw std::length_error("clique index is full");
  }
  keys_.insert(keys_.end(), key.begin(), key.end());
  table_[b] = static_cast<Slot>(slot + 1);
  // Keep the load factor under 0.7.
  if ((slot + 1) * 10 > table_.size() * 7) grow();
  return {static_cast<Slot>(slot), true};
}

void CliqueIndex::grow() {
  std::vector<Slot> table(table_.size() * 2, 0);
  const std::size_t mask = table.size() - 1;
  for (Slot slot = 0; slot < size(); ++slot) {
    std::size_t b = hash(key(slot)) & mask;
    while (table[b] != 0) b = (b + 1) & mask;
    table[b] = slot + 1;
  }
  table_ = std::move(table);
  mask_ = mask;
}

}  // namespace cpm
