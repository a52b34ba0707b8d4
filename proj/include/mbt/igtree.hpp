#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mbt/binary_io.hpp"
#include "mbt/casebase.hpp"
#include "mbt/metrics.hpp"

namespace mbt {

/// Feature indices by descending gain; equal gains keep ascending index.
std::vector<std::size_t> gain_order(const FeatureWeights& weights);

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t arcs = 0;
  std::vector<std::size_t> nodes_per_level;  // index = depth, root at 0
  std::uint64_t memory_bytes = 0;            // live node and arc arrays
  std::uint64_t serialized_bytes = 0;
  std::uint64_t expanded_bytes = 0;          // trained cases stored flat, 4 bytes per symbol
  double compression_ratio = 0.0;            // serialized / expanded

  std::size_t depth() const noexcept { return nodes_per_level.empty() ? 0 : nodes_per_level.size() - 1; }
};

void write_stats_tsv(std::ostream& out, const TreeStats& stats);

struct TraceStep {
  std::size_t level = 0;
  std::size_t feature = 0;  // original feature index tested at this level
  Symbol value;             // query value
  bool matched = false;
  Symbol node_default;
};

struct Trace {
  std::vector<TraceStep> steps;
  Symbol result;
  bool ended_at_leaf = false;
  std::size_t nodes_visited = 0;
};

/// Oblivious decision trie over a case base: level i tests feature
/// feature_order()[i], every node carries the default (majority) class of
/// the training subset that reaches it, and paths stop as soon as the
/// subset is unambiguous.
class IGTree {
 public:
  static IGTree build(const CaseBase& base, const FeatureWeights& weights, const SymbolTable& symbols);

  /// Removes every leaf child whose class equals its parent's default,
  /// bottom-up, so parents emptied this way are considered in turn.
  IGTree pruned() const;

  Symbol classify(std::span<const Symbol> query) const;
  Trace trace(std::span<const Symbol> query) const;
  TreeStats stats() const;

  std::size_t arity() const noexcept { return feature_order_.size(); }
  const std::vector<std::size_t>& feature_order() const noexcept { return feature_order_; }
  std::uint64_t trained_cases() const noexcept { return trained_cases_; }

  std::size_t node_count() const noexcept { return nodes_.size(); }
  Symbol node_default(std::size_t node) const { return nodes_[node].default_class; }
  std::span<const Symbol> arc_values(std::size_t node) const {
    return {arc_values_.data() + nodes_[node].first_arc, nodes_[node].arc_count};
  }
  std::span<const std::uint32_t> arc_children(std::size_t node) const {
    return {arc_children_.data() + nodes_[node].first_arc, nodes_[node].arc_count};
  }

  void write(BinaryWriter& out) const;
  static IGTree read(BinaryReader& in);

  /// Indented text rendering, one node per line.
  void dump(std::ostream& out, const SymbolTable& symbols) const;

  bool operator==(const IGTree&) const = default;

 private:
  friend class IGTreeBuilder;

  struct Node {
    Symbol default_class;
    std::uint32_t first_arc = 0;
    std::uint32_t arc_count = 0;
    bool operator==(const Node&) const = default;
  };

  std::vector<std::size_t> feature_order_;
  std::uint64_t trained_cases_ = 0;
  std::vector<Node> nodes_;  // preorder, root at 0; each node's arcs are contiguous
  std::vector<Symbol> arc_values_;  // sorted by id within a node
  std::vector<std::uint32_t> arc_children_;
};

}  // namespace mbt
