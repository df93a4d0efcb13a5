#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace expsr {

/// Elements of a finite carrier are the indices 0..n-1.
using Index = std::size_t;

/// A subset of a finite carrier, stored as a membership vector sized to the
/// carrier. Ideals, subsemimodules and distinguished element sets are all
/// materialized as Subsets.
class Subset {
public:
  Subset() = default;
  explicit Subset(std::size_t carrier_size) : bits_(carrier_size, false) {}
  Subset(std::size_t carrier_size, std::initializer_list<Index> members);

  static Subset full(std::size_t carrier_size);
  static Subset from_members(std::size_t carrier_size, const std::vector<Index>& members);
  static Subset from_mask(std::size_t carrier_size, unsigned long long mask);

  std::size_t carrier_size() const noexcept { return bits_.size(); }
  bool contains(Index x) const { return x < bits_.size() && bits_[x]; }
  void insert(Index x) { bits_.at(x) = true; }
  void erase(Index x) { bits_.at(x) = false; }

  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool is_full() const noexcept { return count() == bits_.size(); }
  std::vector<Index> members() const;

  bool subset_of(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  /// Carrier minus this set.
  Subset complement() const;

  bool operator==(const Subset&) const = default;

  /// Size first, then lexicographic on sorted members; gives the
  /// "sorted by size" order used by ideal enumeration.
  std::strong_ordering operator<=>(const Subset& other) const;

private:
  std::vector<bool> bits_;
};

}  // namespace expsr
