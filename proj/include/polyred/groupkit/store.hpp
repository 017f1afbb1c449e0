#pragma once

// Packed set of fixed-width byte strings with insertion-ordered indices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polyred {

class ElementStore {
 public:
  explicit ElementStore(std::size_t width = 0);

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }
  const std::uint8_t* at(std::size_t idx) const { return data_.data() + idx * width_; }

  std::optional<std::uint32_t> find(const std::uint8_t* key) const;
  bool contains(const std::uint8_t* key) const { return find(key).has_value(); }
  /// Returns (index, inserted).
  std::pair<std::uint32_t, bool> insert(const std::uint8_t* key);
  void reserve(std::size_t n);

 private:
  std::uint64_t hash(const std::uint8_t* key) const;
  void rehash(std::size_t capacity);

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> slots_;  // index + 1; 0 = empty
};

}  // namespace polyred
