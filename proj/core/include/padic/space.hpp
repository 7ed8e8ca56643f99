#pragma once

#include <cstdint>
#include <string>

#include "padic/errors.hpp"
#include "padic/numeric.hpp"

namespace padic {

/// The spaces functions live on: a finite discrete set of n points, or Z_p
/// resolved at level k (its p^k cosets a + p^k Z_p, represented by 0..p^k-1).
class CompactSpace {
 public:
  enum class Kind { Finite, ZpLevel };

  static CompactSpace finite(std::int64_t n);
  static CompactSpace zp_level(std::int64_t p, std::int64_t k);

  Kind kind() const { return kind_; }
  std::int64_t point_count() const { return count_; }
  /// Level k (ZpLevel only).
  std::int64_t level() const;
  /// The prime resolving the cosets (ZpLevel only).
  std::int64_t prime() const;

  friend bool operator==(const CompactSpace& a, const CompactSpace& b) = default;

  /// "finite:<n>" or "zp:<k>"; matches the function-file header field.
  std::string str() const;
  static CompactSpace parse(std::string_view text, std::int64_t p);

 private:
  CompactSpace(Kind k, std::int64_t count, std::int64_t level, std::int64_t p)
      : kind_(k), count_(count), level_(level), prime_(p) {}

  Kind kind_;
  std::int64_t count_;
  std::int64_t level_;
  std::int64_t prime_;
};

/// A point of the maximal spectrum in the finite model: an evaluation index.
struct SpectrumPoint {
  std::int64_t index = 0;
  friend bool operator==(const SpectrumPoint&, const SpectrumPoint&) = default;
};

}  // namespace padic
