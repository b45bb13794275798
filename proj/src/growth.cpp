#include "dichroma/growth.hpp"

#include <algorithm>

namespace dichroma {

GrowthFunction::GrowthFunction(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw EmptyInput();
  for (size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw Error("growth-function values must be non-negative");
    if (i > 0 && values_[i] < values_[i - 1]) throw Error("growth function must be non-decreasing");
  }
}

int GrowthFunction::at(int k) const {
  if (k < 0) throw Error("growth function queried at a negative argument");
  if (k < explicit_size()) return values_[static_cast<size_t>(k)];
  return values_.back();
}

bool GrowthFunction::operator==(const GrowthFunction& other) const {
  int span = std::max(explicit_size(), other.explicit_size());
  for (int k = 0; k < span; ++k)
    if (at(k) != other.at(k)) return false;
  return true;
}

GrowthFunction normalize_nondecreasing(const std::vector<int>& raw) {
  if (raw.empty()) throw EmptyInput();
  std::vector<int> values(raw.size());
  int running = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) throw Error("growth-function values must be non-negative");
    running = std::max(running, raw[i]);
    values[i] = std::max(running, 1);
  }
  return GrowthFunction(std::move(values));
}

GrowthFunction derive_g_from_f(const GrowthFunction& f, int depth) {
  if (depth < 1) throw EmptyInput();
  if (f.at(0) < 1) throw Error("f must be normalized to positive values first");
  std::vector<int> values(static_cast<size_t>(depth));
  long long arg = 0;  // 2^(m+1) - 2, stepped as arg -> 2*arg + 2
  for (int m = 0; m < depth; ++m) {
    int capped = static_cast<int>(std::min<long long>(arg, f.explicit_size() - 1));
    values[static_cast<size_t>(m)] = f.at(capped);
    arg = 2 * arg + 2;
  }
  return GrowthFunction(std::move(values));
}

}  // namespace dichroma
