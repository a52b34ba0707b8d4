#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbt/casebase.hpp"
#include "mbt/corpus.hpp"
#include "mbt/lexicon.hpp"

namespace mbt {

/// Fills boundary slots and missing letters.
inline constexpr std::string_view kBoundary = "=";
/// Right-context value for a neighbour that is not in the lexicon.
inline constexpr std::string_view kUnknownAmbiguous = "UNK-A";

enum class SlotKind {
  LeftDisambiguated,  // d: tag already assigned to a left neighbour
  FocusAmbiguous,     // f: lexicon tag of the focus word
  RightAmbiguous,     // a: lexicon tag of a right neighbour
  PrefixLetter,       // p: first letter of the focus word
  SuffixLetter,       // s: letter counted from the end of the focus word
};

struct Slot {
  SlotKind kind;
  int offset;  // word offset for d/f/a; 1-based distance from the end for s
  std::string name;
};

struct CaseTemplate {
  std::vector<Slot> slots;
  std::size_t arity() const noexcept { return slots.size(); }
};

/// d d f a: two assigned left tags, focus and right lexicon tags.
const CaseTemplate& known_template();
/// p d a s s s: first letter, one assigned left tag, one right lexicon tag,
/// last three letters.
const CaseTemplate& unknown_template();

/// Optional sign, digits (plain or in comma-separated groups of three), and
/// an optional decimal fraction: "61", "-3", "12,345.6".
bool is_number(std::string_view word);

/// The `k`-th code point from the end of a UTF-8 word (k >= 1), or empty
/// when the word is shorter.
std::string_view letter_from_end(std::string_view word, std::size_t k);
std::string_view first_letter(std::string_view word);

/// Tags treated as closed-class when no list is configured: tags made only
/// of punctuation plus the determiner, pronoun, preposition, conjunction,
/// particle, modal and similar function-word tags (case-insensitive).
std::vector<std::string> default_closed_class(const std::set<std::string>& tagset);

/// A sentence seen through one case template. `ambiguous` holds the
/// lexicon tag (or UNK-A) for every position; `assigned` holds the tags
/// already decided, and only positions left of the focus are read.
struct Window {
  std::span<const std::string> words;
  std::span<const Symbol> ambiguous;
  std::span<const Symbol> assigned;
  Symbol boundary;
};

/// Writes template.arity() feature symbols for `focus` to `out`. `letter`
/// maps a letter (or the boundary text for a missing one) to a Symbol.
template <class LetterFn>
void fill_features(const CaseTemplate& tmpl, const Window& w, std::size_t focus, LetterFn&& letter, Symbol* out) {
  const auto n = static_cast<long>(w.words.size());
  for (std::size_t i = 0; i < tmpl.slots.size(); ++i) {
    const Slot& slot = tmpl.slots[i];
    const long pos = static_cast<long>(focus) + slot.offset;
    switch (slot.kind) {
      case SlotKind::LeftDisambiguated:
        out[i] = pos >= 0 ? w.assigned[static_cast<std::size_t>(pos)] : w.boundary;
        break;
      case SlotKind::FocusAmbiguous:
      case SlotKind::RightAmbiguous:
        out[i] = (pos >= 0 && pos < n) ? w.ambiguous[static_cast<std::size_t>(pos)] : w.boundary;
        break;
      case SlotKind::PrefixLetter: {
        auto l = first_letter(w.words[focus]);
        out[i] = letter(l.empty() ? kBoundary : l);
        break;
      }
      case SlotKind::SuffixLetter: {
        auto l = letter_from_end(w.words[focus], static_cast<std::size_t>(slot.offset));
        out[i] = letter(l.empty() ? kBoundary : l);
        break;
      }
    }
  }
}

struct ExtractionOptions {
  /// Numbers go to the unknown-word case base only.
  bool numbers_to_unknown = true;
  std::vector<std::string> closed_class;
};

/// Known-word cases of one sentence in token order, built from gold left
/// context. Interns whatever it needs.
std::vector<Case> known_cases(const Sentence& sentence, const Lexicon& lexicon, SymbolTable& symbols,
                              const ExtractionOptions& options);
/// Unknown-word cases of one sentence in token order (open-class gold tags
/// only).
std::vector<Case> unknown_cases(const Sentence& sentence, const Lexicon& lexicon, SymbolTable& symbols,
                                const ExtractionOptions& options);

CaseBase extract_known_cases(const Corpus& corpus, const Lexicon& lexicon, SymbolTable& symbols,
                             const ExtractionOptions& options);
CaseBase extract_unknown_cases(const Corpus& corpus, const Lexicon& lexicon, SymbolTable& symbols,
                               const ExtractionOptions& options);

}  // namespace mbt
