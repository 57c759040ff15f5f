#include "gencomp/enumerate.hpp"

#include <stdexcept>

namespace gencomp {

CompositionCursor::CompositionCursor(WeightVector b, std::size_t total,
                                     std::optional<std::size_t> parts)
    : b_(std::move(b)), total_(total), parts_(parts) {
  if (total_ == 0) throw std::domain_error("enumeration needs a positive total");
  if (parts_ && *parts_ == 0) throw std::domain_error("enumeration needs a positive part count");

  // Boolean reachability only; no counting happens here.
  const std::size_t rows = parts_ ? *parts_ + 1 : 1;
  reachable_.assign(rows, std::vector<bool>(total_ + 1, false));
  reachable_[0][0] = true;
  for (std::size_t j = parts_ ? 1 : 0; j < rows; ++j) {
    auto& row = reachable_[j];
    const auto& from = parts_ ? reachable_[j - 1] : reachable_[0];
    for (std::size_t s = 1; s <= total_; ++s)
      for (std::size_t v = 1; v <= std::min(s, b_.size()) && !row[s]; ++v)
        if (b_.weight(v) > 0 && from[s - v]) row[s] = true;
  }
}

bool CompositionCursor::completable(std::size_t remaining, std::size_t depth) const {
  if (!parts_) return reachable_[0][remaining];
  return depth <= *parts_ && reachable_[*parts_ - depth][remaining];
}

// Smallest completion of values_[0..depth) that sums to total_.
bool CompositionCursor::fill_from(std::size_t depth, std::size_t remaining) {
  if (!completable(remaining, depth)) return false;
  values_.resize(depth);
  while (parts_ ? values_.size() < *parts_ : remaining > 0) {
    for (std::size_t v = 1; v <= std::min(remaining, b_.size()); ++v) {
      if (b_.weight(v) > 0 && completable(remaining - v, values_.size() + 1)) {
        values_.push_back(v);
        remaining -= v;
        break;
      }
    }
  }
  return true;
}

bool CompositionCursor::advance_values() {
  std::size_t suffix = 0;  // sum of values_[pos..]
  for (std::size_t pos = values_.size(); pos-- > 0;) {
    suffix += values_[pos];
    for (std::size_t v = values_[pos] + 1; v <= std::min(suffix, b_.size()); ++v) {
      if (b_.weight(v) > 0 && completable(suffix - v, pos + 1)) {
        values_[pos] = v;
        fill_from(pos + 1, suffix - v);
        return true;
      }
    }
  }
  return false;
}

bool CompositionCursor::advance_types() {
  for (std::size_t pos = types_.size(); pos-- > 0;) {
    if (types_[pos] < b_.weight(values_[pos])) {
      ++types_[pos];
      for (std::size_t q = pos + 1; q < types_.size(); ++q) types_[q] = 1;
      return true;
    }
  }
  return false;
}

std::optional<GeneralizedComposition> CompositionCursor::next() {
  if (done_) return std::nullopt;
  if (!started_ || !advance_types()) {
    const bool more = started_ ? advance_values() : fill_from(0, total_);
    started_ = true;
    if (!more) {
      done_ = true;
      return std::nullopt;
    }
    types_.assign(values_.size(), 1);
  }
  std::vector<TypedPart> parts;
  parts.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) parts.push_back({values_[i], types_[i]});
  return GeneralizedComposition(b_, std::move(parts));
}

CompositionCursor enumerate_compositions(const WeightVector& b, std::size_t total,
                                         std::optional<std::size_t> parts) {
  return CompositionCursor(b, total, parts);
}

std::vector<GeneralizedComposition> enumerate_compositions(const WeightVector& b,
                                                           std::size_t total,
                                                           std::optional<std::size_t> parts,
                                                           std::size_t limit) {
  std::vector<GeneralizedComposition> out;
  auto cursor = enumerate_compositions(b, total, parts);
  while (out.size() < limit) {
    auto c = cursor.next();
    if (!c) break;
    out.push_back(std::move(*c));
  }
  return out;
}

Count count_by_enumeration(const WeightVector& b, std::size_t total,
                           std::optional<std::size_t> parts) {
  Count n = 0;
  auto cursor = enumerate_compositions(b, total, parts);
  while (cursor.next()) ++n;
  return n;
}

}  // namespace gencomp
