#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gencomp/count.hpp"

namespace gencomp {

class EmptyVector : public std::invalid_argument {
 public:
  EmptyVector() : std::invalid_argument("weight vector must have at least one entry") {}
};

class NegativeWeight : public std::invalid_argument {
 public:
  NegativeWeight(std::size_t position, std::int64_t value)
      : std::invalid_argument("weight b_" + std::to_string(position + 1) + " is negative (" +
                              std::to_string(value) + ")") {}
};

/// The type multiplicities b = (b_1, ..., b_r): part value i comes in b_i
/// distinguishable types, and values above r are unavailable.
///
/// Trailing zeros are kept. They change r, and with it the lower summation
/// bound ceil(n / r) of the coefficient-sum formula for totals.
class WeightVector {
 public:
  /// Throws EmptyVector or NegativeWeight.
  explicit WeightVector(std::span<const std::int64_t> raw);
  WeightVector(std::initializer_list<std::int64_t> raw)
      : WeightVector(std::span<const std::int64_t>(raw.begin(), raw.size())) {}

  /// r, the largest part value.
  std::size_t size() const noexcept { return weights_.size(); }

  /// b_value for 1 <= value <= r; 0 outside that range.
  std::uint64_t weight(std::size_t value) const noexcept {
    return value >= 1 && value <= weights_.size() ? weights_[value - 1] : 0;
  }

  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  bool all_ones() const noexcept;
  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<std::uint64_t> weights_;
};

WeightVector make_weight_vector(std::span<const std::int64_t> raw);

/// (1, 1, ..., 1) of length r.
WeightVector ones(std::size_t r);

/// Copy with trailing zero weights removed (at least one entry is kept).
/// Never applied implicitly.
WeightVector trim_trailing_zeros(const WeightVector& b);

/// Part value together with which of its b_value types was chosen.
struct TypedPart {
  std::size_t value = 0;       // 1..r
  std::uint64_t type_index = 0;  // 1..b_value

  auto operator<=>(const TypedPart&) const = default;
};

/// Ordered, nonempty sequence of typed parts summing to total().
class GeneralizedComposition {
 public:
  /// Checks every part against b; throws std::invalid_argument otherwise.
  GeneralizedComposition(const WeightVector& b, std::vector<TypedPart> parts);

  std::span<const TypedPart> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t total() const noexcept { return total_; }

  /// `value.type` tokens joined by `+`, e.g. "1.2+2.1".
  std::string to_string() const;

  bool operator==(const GeneralizedComposition&) const = default;

  /// Value sequence first, then type indices position by position.
  friend std::strong_ordering compare(const GeneralizedComposition& a,
                                      const GeneralizedComposition& c);

 private:
  std::vector<TypedPart> parts_;
  std::size_t total_ = 0;
};

}  // namespace gencomp
