#include "expsr/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace expsr {

Subset::Subset(std::size_t carrier_size, std::initializer_list<Index> members)
    : bits_(carrier_size, false) {
  for (Index x : members) insert(x);
}

Subset Subset::full(std::size_t carrier_size) {
  Subset s(carrier_size);
  s.bits_.assign(carrier_size, true);
  return s;
}

Subset Subset::from_members(std::size_t carrier_size, const std::vector<Index>& members) {
  Subset s(carrier_size);
  for (Index x : members) s.insert(x);
  return s;
}

Subset Subset::from_mask(std::size_t carrier_size, unsigned long long mask) {
  if (carrier_size > 64) throw std::out_of_range("mask subsets are limited to 64 elements");
  Subset s(carrier_size);
  for (Index i = 0; i < carrier_size; ++i)
    if ((mask >> i) & 1ULL) s.bits_[i] = true;
  return s;
}

std::size_t Subset::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<Index> Subset::members() const {
  std::vector<Index> out;
  for (Index i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool Subset::subset_of(const Subset& other) const {
  for (Index i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(i)) return false;
  return true;
}

Subset Subset::operator|(const Subset& other) const {
  if (other.carrier_size() != carrier_size()) throw std::invalid_argument("carrier mismatch");
  Subset out(*this);
  for (Index i = 0; i < bits_.size(); ++i)
    if (other.bits_[i]) out.bits_[i] = true;
  return out;
}

Subset Subset::operator&(const Subset& other) const {
  if (other.carrier_size() != carrier_size()) throw std::invalid_argument("carrier mismatch");
  Subset out(carrier_size());
  for (Index i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && other.bits_[i];
  return out;
}

Subset Subset::complement() const {
  Subset out(carrier_size());
  for (Index i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
  return out;
}

std::strong_ordering Subset::operator<=>(const Subset& other) const {
  if (auto c = count() <=> other.count(); c != 0) return c;
  if (auto c = carrier_size() <=> other.carrier_size(); c != 0) return c;
  auto a = members();
  auto b = other.members();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace expsr
