#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mbt/casebase.hpp"
#include "mbt/metrics.hpp"

namespace mbt {

/// All stored patterns at the minimal distance from a query.
struct NearestSet {
  double distance = 0.0;
  std::vector<std::size_t> members;  // pattern indices into the case base

  ClassDistribution pooled(const CaseBase& base) const;
};

/// Exhaustive O(N*F) scan with unweighted overlap distance.
NearestSet nearest_overlap(const CaseBase& base, std::span<const Symbol> query);

/// Exhaustive scan with gain-weighted overlap distance. Distances within a
/// relative 1e-12 of the running minimum count as ties.
NearestSet nearest_weighted(const CaseBase& base, const FeatureWeights& weights, std::span<const Symbol> query);

/// IB1: majority class of the pooled distributions of the nearest set.
Symbol classify_ib1(const CaseBase& base, const SymbolTable& symbols, std::span<const Symbol> query);

/// IB1-IG: as IB1 but with information-gain weighted distance.
Symbol classify_ib1ig(const CaseBase& base, const FeatureWeights& weights, const SymbolTable& symbols,
                      std::span<const Symbol> query);

}  // namespace mbt
