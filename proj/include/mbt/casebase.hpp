#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mbt {

/// Interned identifier for a feature value, tag or word form.
struct Symbol {
  static constexpr std::uint32_t kNoneId = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t id = kNoneId;

  /// A symbol that is never interned; used for query values the model has
  /// not seen, so they match no stored value.
  static constexpr Symbol none() noexcept { return Symbol{}; }
  constexpr bool is_none() const noexcept { return id == kNoneId; }

  auto operator<=>(const Symbol&) const = default;
};

/// Bijective string <-> Symbol mapping. Ids are dense and assigned in
/// first-intern order.
class SymbolTable {
 public:
  Symbol intern(std::string_view text);
  /// Symbol::none() when `text` was never interned.
  Symbol find(std::string_view text) const;
  std::string_view text(Symbol s) const;
  std::size_t size() const noexcept { return texts_.size(); }

  bool operator==(const SymbolTable& other) const { return texts_ == other.texts_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
  };
  std::vector<std::string> texts_;
  std::unordered_map<std::string, std::uint32_t, Hash, std::equal_to<>> ids_;
};

/// Orders classes by the global tie rule: higher count first, then
/// ascending class text.
bool tie_rule_before(const SymbolTable& symbols, Symbol a, std::uint64_t count_a, Symbol b,
                     std::uint64_t count_b);

/// Class frequency counts, kept sorted by symbol id.
class ClassDistribution {
 public:
  using Entry = std::pair<Symbol, std::uint64_t>;

  void add(Symbol cls, std::uint64_t count = 1);
  void merge(const ClassDistribution& other);

  std::uint64_t count(Symbol cls) const noexcept;
  std::uint64_t total() const noexcept { return total_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Most frequent class under the global tie rule. Throws StructuralError
  /// when empty.
  Symbol majority(const SymbolTable& symbols) const;

  bool operator==(const ClassDistribution&) const = default;

 private:
  std::vector<Entry> entries_;
  std::uint64_t total_ = 0;
};

struct Case {
  std::vector<Symbol> features;
  Symbol target;

  bool operator==(const Case&) const = default;
};

/// Deduplicated store of fixed-arity patterns with per-pattern class
/// distributions. Patterns are indexed in order of first occurrence.
class CaseBase {
 public:
  explicit CaseBase(std::size_t arity);

  void add(std::span<const Symbol> features, Symbol target, std::uint64_t count = 1);
  void add(const Case& c) { add(c.features, c.target); }

  std::size_t arity() const noexcept { return arity_; }
  /// Number of distinct patterns.
  std::size_t size() const noexcept { return dists_.size(); }
  bool empty() const noexcept { return dists_.empty(); }
  std::uint64_t total_cases() const noexcept { return total_cases_; }

  std::span<const Symbol> pattern(std::size_t i) const {
    return {flat_.data() + i * arity_, arity_};
  }
  const ClassDistribution& distribution(std::size_t i) const { return dists_[i]; }
  /// Flat row-major storage of all distinct patterns.
  std::span<const Symbol> flat() const noexcept { return flat_; }

  /// Index of a stored pattern, or size() when absent.
  std::size_t find(std::span<const Symbol> features) const;

  /// Distribution summed over every stored pattern.
  ClassDistribution class_totals() const;

  void reserve(std::size_t patterns);

 private:
  std::uint64_t hash(std::span<const Symbol> features) const noexcept;

  std::size_t arity_;
  std::vector<Symbol> flat_;
  std::vector<ClassDistribution> dists_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  std::uint64_t total_cases_ = 0;
};

}  // namespace mbt
