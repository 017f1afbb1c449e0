#include "polyred/groupkit/store.hpp"

#include <cstring>

namespace polyred {

ElementStore::ElementStore(std::size_t width) : width_(width) { rehash(1024); }

std::uint64_t ElementStore::hash(const std::uint8_t* key) const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (std::size_t i = 0; i < width_; ++i) {
    h ^= key[i];
    h *= 1099511628211ull;
  }
  return h ^ (h >> 29);
}

void ElementStore::rehash(std::size_t capacity) {
  slots_.assign(capacity, 0);
  const std::size_t mask = capacity - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash(at(i)) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

void ElementStore::reserve(std::size_t n) {
  data_.reserve(n * width_);
  std::size_t cap = slots_.size();
  while (cap < 2 * n) cap *= 2;
  if (cap != slots_.size()) rehash(cap);
}

std::optional<std::uint32_t> ElementStore::find(const std::uint8_t* key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(key) & mask;
  while (slots_[s] != 0) {
    std::uint32_t idx = slots_[s] - 1;
    if (std::memcmp(at(idx), key, width_) == 0) return idx;
    s = (s + 1) & mask;
  }
  return std::nullopt;
}

std::pair<std::uint32_t, bool> ElementStore::insert(const std::uint8_t* key) {
  if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(key) & mask;
  while (slots_[s] != 0) {
    std::uint32_t idx = slots_[s] - 1;
    if (std::memcmp(at(idx), key, width_) == 0) return {idx, false};
    s = (s + 1) & mask;
  }
  auto idx = static_cast<std::uint32_t>(count_++);
  if (key >= data_.data() && key < data_.data() + data_.size()) {
    std::vector<std::uint8_t> copy(key, key + width_);
    data_.insert(data_.end(), copy.begin(), copy.end());
  } else {
    data_.insert(data_.end(), key, key + width_);
  }
  slots_[s] = idx + 1;
  return {idx, true};
}

}  // namespace polyred
