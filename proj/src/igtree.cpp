#include "mbt/igtree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "mbt/error.hpp"

namespace mbt {

std::vector<std::size_t> gain_order(const FeatureWeights& weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return weights.gains[a] > weights.gains[b]; });
  return order;
}

class IGTreeBuilder {
 public:
  IGTreeBuilder(const CaseBase& base, const SymbolTable& symbols, IGTree& tree)
      : base_(base), symbols_(symbols), tree_(tree), counts_(symbols.size(), 0) {}

  void run() {
    std::vector<std::uint32_t> subset(base_.size());
    std::iota(subset.begin(), subset.end(), std::uint32_t{0});
    build(subset, 0);
  }

 private:
  struct Summary {
    Symbol majority;
    bool ambiguous = false;
  };

  Summary summarize(std::span<const std::uint32_t> subset) {
    touched_.clear();
    for (auto p : subset) {
      for (const auto& [cls, n] : base_.distribution(p).entries()) {
        if (counts_[cls.id] == 0) touched_.push_back(cls);
        counts_[cls.id] += n;
      }
    }
    Summary s;
    s.majority = touched_.front();
    for (auto cls : touched_) {
      if (tie_rule_before(symbols_, cls, counts_[cls.id], s.majority, counts_[s.majority.id])) s.majority = cls;
    }
    s.ambiguous = touched_.size() > 1;
    for (auto cls : touched_) counts_[cls.id] = 0;
    return s;
  }

  std::uint32_t build(std::span<std::uint32_t> subset, std::size_t level) {
    const auto summary = summarize(subset);
    const auto node = static_cast<std::uint32_t>(tree_.nodes_.size());
    tree_.nodes_.push_back({summary.majority, 0, 0});
    if (!summary.ambiguous || level == tree_.arity()) return node;

    const std::size_t feature = tree_.feature_order_[level];
    const std::size_t arity = base_.arity();
    const Symbol* flat = base_.flat().data();
    auto value_of = [&](std::uint32_t p) { return flat[p * arity + feature]; };
    std::stable_sort(subset.begin(), subset.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return value_of(a) < value_of(b); });

    std::vector<std::size_t> bounds{0};
    for (std::size_t i = 1; i < subset.size(); ++i) {
      if (value_of(subset[i]) != value_of(subset[i - 1])) bounds.push_back(i);
    }
    bounds.push_back(subset.size());
    const std::size_t groups = bounds.size() - 1;

    const auto first_arc = static_cast<std::uint32_t>(tree_.arc_values_.size());
    tree_.nodes_[node].first_arc = first_arc;
    tree_.nodes_[node].arc_count = static_cast<std::uint32_t>(groups);
    tree_.arc_values_.resize(first_arc + groups);
    tree_.arc_children_.resize(first_arc + groups);
    for (std::size_t g = 0; g < groups; ++g) {
      auto part = subset.subspan(bounds[g], bounds[g + 1] - bounds[g]);
      tree_.arc_values_[first_arc + g] = value_of(part.front());
      auto child = build(part, level + 1);
      tree_.arc_children_[first_arc + g] = child;
    }
    return node;
  }

  const CaseBase& base_;
  const SymbolTable& symbols_;
  IGTree& tree_;
  std::vector<std::uint64_t> counts_;
  std::vector<Symbol> touched_;
};

IGTree IGTree::build(const CaseBase& base, const FeatureWeights& weights, const SymbolTable& symbols) {
  if (base.empty()) throw StructuralError("cannot build a tree from an empty case base");
  if (weights.size() != base.arity()) throw StructuralError("weight vector length does not match arity");
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (const auto& e : base.distribution(i).entries())
      if (e.first.id >= symbols.size()) throw StructuralError("class symbol not in symbol table");
  }
  IGTree tree;
  tree.feature_order_ = gain_order(weights);
  tree.trained_cases_ = base.total_cases();
  IGTreeBuilder(base, symbols, tree).run();
  return tree;
}

IGTree IGTree::pruned() const {
  // Pass 1: which nodes end up as leaves once their prunable children go.
  // Preorder guarantees children have larger indices than their parent.
  std::vector<char> leaf_after(nodes_.size(), 0);
  for (std::size_t n = nodes_.size(); n-- > 0;) {
    bool all_removed = true;
    for (std::size_t a = 0; a < nodes_[n].arc_count; ++a) {
      auto child = arc_children_[nodes_[n].first_arc + a];
      if (!(leaf_after[child] && nodes_[child].default_class == nodes_[n].default_class)) {
        all_removed = false;
        break;
      }
    }
    leaf_after[n] = all_removed;
  }

  // Pass 2: preorder copy without the removed children.
  IGTree out;
  out.feature_order_ = feature_order_;
  out.trained_cases_ = trained_cases_;
  auto copy = [&](auto&& self, std::uint32_t n) -> std::uint32_t {
    const auto idx = static_cast<std::uint32_t>(out.nodes_.size());
    out.nodes_.push_back({nodes_[n].default_class, 0, 0});
    std::vector<std::uint32_t> kept;
    for (std::size_t a = 0; a < nodes_[n].arc_count; ++a) {
      auto arc = nodes_[n].first_arc + static_cast<std::uint32_t>(a);
      auto child = arc_children_[arc];
      if (leaf_after[child] && nodes_[child].default_class == nodes_[n].default_class) continue;
      kept.push_back(arc);
    }
    const auto first = static_cast<std::uint32_t>(out.arc_values_.size());
    out.nodes_[idx].first_arc = first;
    out.nodes_[idx].arc_count = static_cast<std::uint32_t>(kept.size());
    out.arc_values_.resize(first + kept.size());
    out.arc_children_.resize(first + kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
      out.arc_values_[first + k] = arc_values_[kept[k]];
      auto child = self(self, arc_children_[kept[k]]);
      out.arc_children_[first + k] = child;
    }
    return idx;
  };
  copy(copy, 0);
  return out;
}

Symbol IGTree::classify(std::span<const Symbol> query) const {
  if (query.size() != arity()) throw StructuralError("query arity does not match tree arity");
  std::uint32_t n = 0;
  for (std::size_t level = 0;; ++level) {
    const Node& node = nodes_[n];
    if (node.arc_count == 0) return node.default_class;
    const Symbol value = query[feature_order_[level]];
    const Symbol* first = arc_values_.data() + node.first_arc;
    const Symbol* last = first + node.arc_count;
    const Symbol* hit = std::lower_bound(first, last, value);
    if (hit == last || *hit != value) return node.default_class;
    n = arc_children_[node.first_arc + static_cast<std::uint32_t>(hit - first)];
  }
}

Trace IGTree::trace(std::span<const Symbol> query) const {
  if (query.size() != arity()) throw StructuralError("query arity does not match tree arity");
  Trace t;
  std::uint32_t n = 0;
  for (std::size_t level = 0;; ++level) {
    const Node& node = nodes_[n];
    ++t.nodes_visited;
    if (node.arc_count == 0) {
      t.result = node.default_class;
      t.ended_at_leaf = true;
      return t;
    }
    TraceStep step;
    step.level = level;
    step.feature = feature_order_[level];
    step.value = query[step.feature];
    step.node_default = node.default_class;
    auto values = arc_values(n);
    auto hit = std::lower_bound(values.begin(), values.end(), step.value);
    step.matched = hit != values.end() && *hit == step.value;
    t.steps.push_back(step);
    if (!step.matched) {
      t.result = node.default_class;
      return t;
    }
    n = arc_children(n)[static_cast<std::size_t>(hit - values.begin())];
  }
}

TreeStats IGTree::stats() const {
  TreeStats s;
  s.nodes = nodes_.size();
  s.arcs = arc_values_.size();
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0u, 0}};
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    if (s.nodes_per_level.size() <= depth) s.nodes_per_level.resize(depth + 1, 0);
    ++s.nodes_per_level[depth];
    if (nodes_[n].arc_count == 0) ++s.leaves;
    for (auto c : arc_children(n)) stack.emplace_back(c, depth + 1);
  }
  s.memory_bytes = nodes_.size() * sizeof(Node) + arc_values_.size() * (sizeof(Symbol) + sizeof(std::uint32_t)) +
                   feature_order_.size() * sizeof(std::size_t);
  BinaryWriter w;
  write(w);
  s.serialized_bytes = w.bytes().size();
  s.expanded_bytes = trained_cases_ * (arity() + 1) * sizeof(std::uint32_t);
  s.compression_ratio =
      s.expanded_bytes ? static_cast<double>(s.serialized_bytes) / static_cast<double>(s.expanded_bytes) : 0.0;
  return s;
}

void write_stats_tsv(std::ostream& out, const TreeStats& s) {
  out << "nodes\tleaves\tarcs\tdepth\tserialized_bytes\texpanded_bytes\tcompression_ratio\n";
  out << s.nodes << '\t' << s.leaves << '\t' << s.arcs << '\t' << s.depth() << '\t' << s.serialized_bytes << '\t'
      << s.expanded_bytes << '\t' << s.compression_ratio << '\n';
}

void IGTree::write(BinaryWriter& out) const {
  out.u32(static_cast<std::uint32_t>(feature_order_.size()));
  for (auto f : feature_order_) out.u32(static_cast<std::uint32_t>(f));
  out.u64(trained_cases_);
  out.u32(static_cast<std::uint32_t>(nodes_.size()));
  for (const auto& n : nodes_) {
    out.u32(n.default_class.id);
    out.u32(n.arc_count);
  }
  for (std::size_t a = 0; a < arc_values_.size(); ++a) {
    out.u32(arc_values_[a].id);
    out.u32(arc_children_[a]);
  }
}

IGTree IGTree::read(BinaryReader& in) {
  IGTree t;
  const auto arity = in.u32();
  if (arity == 0) throw ModelFormatError("tree with zero arity");
  std::vector<char> seen(arity, 0);
  for (std::uint32_t i = 0; i < arity; ++i) {
    auto f = in.u32();
    if (f >= arity || seen[f]) throw ModelFormatError("tree feature order is not a permutation");
    seen[f] = 1;
    t.feature_order_.push_back(f);
  }
  t.trained_cases_ = in.u64();
  const auto node_count = in.u32();
  if (node_count == 0) throw ModelFormatError("tree without nodes");
  if (static_cast<std::uint64_t>(node_count) * 8 > in.remaining()) throw ModelFormatError("tree node table truncated");
  t.nodes_.resize(node_count);
  std::uint64_t arcs = 0;
  for (auto& n : t.nodes_) {
    n.default_class = Symbol{in.u32()};
    n.arc_count = in.u32();
    n.first_arc = static_cast<std::uint32_t>(arcs);
    arcs += n.arc_count;
  }
  if (arcs * 8 != in.remaining()) throw ModelFormatError("tree arc table has the wrong size");
  t.arc_values_.resize(arcs);
  t.arc_children_.resize(arcs);
  for (std::uint64_t a = 0; a < arcs; ++a) {
    t.arc_values_[a] = Symbol{in.u32()};
    t.arc_children_[a] = in.u32();
  }
  // Every non-root node has exactly one parent, one level below it, and no
  // node sits deeper than the arity.
  std::vector<std::uint32_t> level(node_count, 0);
  std::vector<char> has_parent(node_count, 0);
  for (std::uint32_t n = 0; n < node_count; ++n) {
    if (n > 0 && !has_parent[n]) throw ModelFormatError("tree node without parent");
    auto values = t.arc_values(n);
    auto children = t.arc_children(n);
    if (!values.empty() && level[n] >= arity) throw ModelFormatError("tree deeper than its arity");
    for (std::size_t a = 0; a < values.size(); ++a) {
      const auto c = children[a];
      if (c <= n || c >= node_count || has_parent[c]) throw ModelFormatError("malformed tree arc");
      if (a > 0 && !(values[a - 1] < values[a])) throw ModelFormatError("tree arcs are not sorted");
      has_parent[c] = 1;
      level[c] = level[n] + 1;
    }
  }
  return t;
}

void IGTree::dump(std::ostream& out, const SymbolTable& symbols) const {
  auto rec = [&](auto&& self, std::uint32_t n, std::size_t level, std::string indent) -> void {
    out << indent << "default=" << symbols.text(nodes_[n].default_class);
    if (nodes_[n].arc_count > 0) out << " test=f" << feature_order_[level];
    out << '\n';
    auto values = arc_values(n);
    auto children = arc_children(n);
    for (std::size_t a = 0; a < values.size(); ++a) {
      out << indent << "  [" << symbols.text(values[a]) << "]\n";
      self(self, children[a], level + 1, indent + "    ");
    }
  };
  rec(rec, 0, 0, "");
}

}  // namespace mbt
