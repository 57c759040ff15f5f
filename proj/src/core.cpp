#include "gencomp/core.hpp"

#include <algorithm>

namespace gencomp {

WeightVector::WeightVector(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw EmptyVector();
  weights_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) throw NegativeWeight(i, raw[i]);
    weights_.push_back(static_cast<std::uint64_t>(raw[i]));
  }
}

bool WeightVector::all_ones() const noexcept {
  return std::ranges::all_of(weights_, [](std::uint64_t w) { return w == 1; });
}

WeightVector make_weight_vector(std::span<const std::int64_t> raw) { return WeightVector(raw); }

WeightVector ones(std::size_t r) {
  std::vector<std::int64_t> raw(r, 1);
  return WeightVector(raw);
}

WeightVector trim_trailing_zeros(const WeightVector& b) {
  auto w = b.weights();
  std::size_t len = w.size();
  while (len > 1 && w[len - 1] == 0) --len;
  std::vector<std::int64_t> raw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
  return WeightVector(raw);
}

GeneralizedComposition::GeneralizedComposition(const WeightVector& b, std::vector<TypedPart> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (const auto& p : parts_) {
    if (p.value < 1 || p.value > b.size())
      throw std::invalid_argument("part value " + std::to_string(p.value) + " outside 1.." +
                                  std::to_string(b.size()));
    if (p.type_index < 1 || p.type_index > b.weight(p.value))
      throw std::invalid_argument("type index " + std::to_string(p.type_index) +
                                  " unavailable for part value " + std::to_string(p.value));
    total_ += p.value;
  }
}

std::string GeneralizedComposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i].value);
    out += '.';
    out += std::to_string(parts_[i].type_index);
  }
  return out;
}

std::strong_ordering compare(const GeneralizedComposition& a, const GeneralizedComposition& c) {
  auto by_value = std::lexicographical_compare_three_way(
      a.parts_.begin(), a.parts_.end(), c.parts_.begin(), c.parts_.end(),
      [](const TypedPart& x, const TypedPart& y) { return x.value <=> y.value; });
  if (by_value != 0) return by_value;
  return std::lexicographical_compare_three_way(
      a.parts_.begin(), a.parts_.end(), c.parts_.begin(), c.parts_.end(),
      [](const TypedPart& x, const TypedPart& y) { return x.type_index <=> y.type_index; });
}

}  // namespace gencomp
