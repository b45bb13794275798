#ifndef DICHROMA_GROWTH_HPP
#define DICHROMA_GROWTH_HPP

#include <vector>

#include "dichroma/errors.hpp"

namespace dichroma {

/// Finitely represented non-decreasing map from naturals to naturals.
/// Queries past the explicit list repeat the last value (tail convention).
/// Values may be zero when the function is used as a lower-bound profile;
/// level widths for the product construction must be at least 1, which
/// normalize_nondecreasing and derive_g_from_f guarantee.
class GrowthFunction {
 public:
  explicit GrowthFunction(std::vector<int> values);

  int at(int k) const;
  int explicit_size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }

  /// Extensional equality: equal at every argument (tails included).
  bool operator==(const GrowthFunction& other) const;

 private:
  std::vector<int> values_;
};

/// Running maximum of the input, each entry then raised to at least 1.
GrowthFunction normalize_nondecreasing(const std::vector<int>& raw);

/// Level widths sufficient for a target lower-bound profile f:
/// g(m) = f(2^(m+1) - 2). A truncation built from this g satisfies
/// "every subgraph with dichromatic number n+2 has at least f(n) vertices"
/// whenever it satisfies "fewer than g(m) vertices force dichromatic
/// number at most 2^m" for every m below the depth.
GrowthFunction derive_g_from_f(const GrowthFunction& f, int depth);

}  // namespace dichroma

#endif
