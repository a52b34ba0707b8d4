#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "mbt/casebase.hpp"

namespace mbt {

/// Per-feature information gain, in bits.
struct FeatureWeights {
  std::vector<double> gains;

  std::size_t size() const noexcept { return gains.size(); }
  static FeatureWeights uniform(std::size_t arity, double value = 1.0) {
    return FeatureWeights{std::vector<double>(arity, value)};
  }
  bool operator==(const FeatureWeights&) const = default;
};

/// Shannon entropy (log base 2) of the target distribution.
double class_entropy(const CaseBase& base);

/// H(C) minus the value-weighted conditional entropy of the class given
/// feature `feature_index`. Clamped at zero against rounding.
double information_gain(const CaseBase& base, std::size_t feature_index);

FeatureWeights information_gains(const CaseBase& base);

/// Number of positions where the vectors differ.
std::size_t distance_overlap(std::span<const Symbol> x, std::span<const Symbol> y);

/// Sum of the weights of the positions where the vectors differ.
double distance_weighted(std::span<const Symbol> x, std::span<const Symbol> y, const FeatureWeights& w);

/// "feature_index\tgain" rows with a header line.
void write_gains_tsv(std::ostream& out, const FeatureWeights& w);

}  // namespace mbt
