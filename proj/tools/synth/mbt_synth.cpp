// mbt-synth: write a synthetic English-like tagged corpus in slash format.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "synth_corpus.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic Zipfian tagged corpus"};
  mbt::synth::ZipfCorpusOptions o;
  std::string output;
  app.add_option("--tokens", o.tokens, "Minimum number of tokens")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--zipf", o.zipf_exponent, "Zipf exponent of the lemma pools")->capture_default_str();
  app.add_option("--output", output, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  const auto corpus = mbt::synth::zipf_corpus(o);
  if (output.empty()) {
    mbt::write_corpus(std::cout, corpus);
    return 0;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "mbt-synth: cannot write " << output << '\n';
    return 4;
  }
  mbt::write_corpus(out, corpus);
  return out ? 0 : 4;
}
