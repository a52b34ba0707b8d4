#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbt/cases.hpp"
#include "mbt/casebase.hpp"
#include "mbt/corpus.hpp"
#include "mbt/igtree.hpp"
#include "mbt/lexicon.hpp"
#include "mbt/metrics.hpp"

namespace mbt {

inline constexpr std::string_view kModelMagic = "MBT1";
inline constexpr std::uint16_t kModelVersion = 1;

struct TaggerConfig {
  /// Minimum share of a word's tokens a tag needs to enter the lexicon.
  double threshold = 0.10;
  /// Closed-class tags; derived from the training tag set when unset.
  std::optional<std::vector<std::string>> closed_class;
  /// Route numbers to the unknown-word tree even when they are in the
  /// lexicon.
  bool numbers_to_unknown = true;
};

enum class Route : std::uint8_t { Known, Unknown };

struct TaggedWord {
  Symbol tag;
  Route route;
};

struct ExplanationStep {
  std::string slot;        // template slot name, e.g. "f" or "s-1"
  std::string value;       // query value, "<unseen>" when not in the model
  bool matched = false;    // false: traversal stopped here with the default
  std::string node_default;
};

struct Explanation {
  std::string word;
  Route route = Route::Known;
  std::vector<ExplanationStep> steps;
  bool ended_at_leaf = false;
  std::string tag;
};

/// A generated tagger: lexicon, known-word and unknown-word IGTrees with
/// their gains, and the configuration used to build them. Immutable after
/// train() or deserialize(); all tagging calls are reentrant.
class TaggerModel {
 public:
  static TaggerModel train(const Corpus& corpus, const TaggerConfig& config = {});

  /// Greedy left-to-right tagging; left context comes from earlier outputs.
  std::vector<Symbol> tag_sentence(std::span<const std::string> words) const;
  std::vector<std::string> tag_words(std::span<const std::string> words) const;

  /// As tag_sentence, also reporting the route of every word. When
  /// `gold_left` is non-empty it supplies the left-context tags instead of
  /// the tagger's own decisions.
  std::vector<TaggedWord> annotate(std::span<const std::string> words,
                                   std::span<const std::string> gold_left = {}) const;

  Route route(std::string_view word) const;

  /// The IGTree path taken for the word at `position`.
  Explanation explain(std::span<const std::string> words, std::size_t position) const;

  std::string serialize() const;
  static TaggerModel deserialize(std::string_view bytes);
  void save(const std::string& path) const;
  static TaggerModel load(const std::string& path);

  const SymbolTable& symbols() const noexcept { return symbols_; }
  const Lexicon& lexicon() const noexcept { return lexicon_; }
  const IGTree& known_tree() const noexcept { return known_tree_; }
  const IGTree& unknown_tree() const noexcept { return unknown_tree_; }
  const FeatureWeights& known_weights() const noexcept { return known_weights_; }
  const FeatureWeights& unknown_weights() const noexcept { return unknown_weights_; }
  double threshold() const noexcept { return threshold_; }
  const std::vector<std::string>& closed_class() const noexcept { return closed_class_; }
  bool numbers_to_unknown() const noexcept { return numbers_to_unknown_; }

  bool operator==(const TaggerModel&) const = default;

 private:
  struct Prepared;
  Prepared prepare(std::span<const std::string> words) const;
  void features_at(const Prepared& p, std::span<const Symbol> assigned, std::size_t i, Symbol* out) const;

  SymbolTable symbols_;
  Lexicon lexicon_;
  FeatureWeights known_weights_;
  FeatureWeights unknown_weights_;
  IGTree known_tree_;
  IGTree unknown_tree_;
  double threshold_ = 0.10;
  std::vector<std::string> closed_class_;
  bool numbers_to_unknown_ = true;
  Symbol boundary_;
  Symbol unknown_ambiguous_;
};

}  // namespace mbt
