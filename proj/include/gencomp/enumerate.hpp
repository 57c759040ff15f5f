#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gencomp/core.hpp"
#include "gencomp/count.hpp"

namespace gencomp {

/// Lazy stream of the generalized compositions of a total, optionally with a
/// fixed number of parts.
///
/// Order: lexicographic in the sequence of part values, then in the type
/// indices position by position. Untyped compositions are produced by
/// depth-first descent; each one is then expanded over all type choices with
/// the last position varying fastest. Memory is proportional to the length of
/// one composition.
class CompositionCursor {
 public:
  CompositionCursor(WeightVector b, std::size_t total, std::optional<std::size_t> parts = {});

  /// The next composition, or nullopt once the stream is exhausted.
  std::optional<GeneralizedComposition> next();

 private:
  bool completable(std::size_t remaining, std::size_t depth) const;
  bool fill_from(std::size_t depth, std::size_t remaining);
  bool advance_values();
  bool advance_types();

  WeightVector b_;
  std::size_t total_;
  std::optional<std::size_t> parts_;
  // reachable_[j][s]: s splits into exactly j allowed parts (fixed part
  // count) or reachable_[0][s]: into any number of them.
  std::vector<std::vector<bool>> reachable_;
  std::vector<std::size_t> values_;
  std::vector<std::uint64_t> types_;
  bool started_ = false;
  bool done_ = false;
};

CompositionCursor enumerate_compositions(const WeightVector& b, std::size_t total,
                                         std::optional<std::size_t> parts = {});

/// At most `limit` items from the front of the stream.
std::vector<GeneralizedComposition> enumerate_compositions(const WeightVector& b,
                                                           std::size_t total,
                                                           std::optional<std::size_t> parts,
                                                           std::size_t limit);

/// Number of items the stream yields, counted one by one.
Count count_by_enumeration(const WeightVector& b, std::size_t total,
                           std::optional<std::size_t> parts = {});

}  // namespace gencomp
