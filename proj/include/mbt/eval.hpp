#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mbt/corpus.hpp"
#include "mbt/tagger.hpp"

namespace mbt {

struct EvalOptions {
  /// Feed gold tags as left context instead of the tagger's own decisions.
  bool gold_left_context = false;
};

struct EvalReport {
  std::uint64_t known_tokens = 0;
  std::uint64_t known_correct = 0;
  std::uint64_t unknown_tokens = 0;
  std::uint64_t unknown_correct = 0;
  double seconds = 0.0;
  std::uint64_t model_bytes = 0;

  std::uint64_t tokens() const noexcept { return known_tokens + unknown_tokens; }
  std::uint64_t correct() const noexcept { return known_correct + unknown_correct; }
  double accuracy_total() const noexcept;
  double accuracy_known() const noexcept;
  double accuracy_unknown() const noexcept;
  double unknown_fraction() const noexcept;
  double words_per_second() const noexcept;
};

/// Tags every test sentence and compares with the gold tags; the
/// known/unknown split follows the model's own routing.
EvalReport evaluate(const TaggerModel& model, const Corpus& test, const EvalOptions& options = {});

/// Known / Unknown / Total rows: accuracy and share of tokens, in percent.
void write_report(std::ostream& out, const EvalReport& report);

struct CvResult {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation over folds
  std::vector<EvalReport> folds;
};

struct CvOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 0;
  TaggerConfig config;
  EvalOptions eval;
  unsigned jobs = 1;
};

/// Trains one model per fold and evaluates it on the held-out sentences.
/// Accuracy is the total accuracy of each fold.
CvResult cross_validate(const Corpus& corpus, const CvOptions& options = {});

struct LearningCurvePoint {
  std::size_t train_size = 0;  // tokens in the cross-validated prefix
  double mean_accuracy = 0.0;
  double stddev = 0.0;
};

/// One cross-validation run per size over the shortest corpus prefix holding
/// at least that many tokens.
std::vector<LearningCurvePoint> learning_curve(const Corpus& corpus, const std::vector<std::size_t>& sizes,
                                               const CvOptions& options = {});

void write_curve_tsv(std::ostream& out, const std::vector<LearningCurvePoint>& points);

enum class Algorithm { IB1, IB1IG, IGTree };

Algorithm parse_algorithm(std::string_view id);
std::string_view algorithm_name(Algorithm a);

struct BenchRow {
  Algorithm algorithm = Algorithm::IGTree;
  double accuracy = 0.0;
  double train_seconds = 0.0;
  double words_per_second = 0.0;
  std::uint64_t memory_bytes = 0;
  std::uint64_t test_cases = 0;
  std::uint64_t correct = 0;
};

/// Known-word classification on the known-word template: every algorithm
/// trains on the cases of `train` and classifies the known-word cases of
/// `test` (gold left context, lexicon of `train`). IB memory is the
/// expanded case storage; IGTree memory is its serialized size.
std::vector<BenchRow> compare_algorithms(const Corpus& train, const Corpus& test,
                                         const std::vector<Algorithm>& algorithms, const TaggerConfig& config = {});

/// compare_algorithms on a seeded 90/10 split.
std::vector<BenchRow> bench(const Corpus& corpus, const std::vector<Algorithm>& algorithms, std::uint64_t seed,
                            const TaggerConfig& config = {});

void write_bench_tsv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mbt
