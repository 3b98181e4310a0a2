#ifndef LEXTOPIC_SYNTHETIC_H_
#define LEXTOPIC_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "lextopic/corpus.h"

namespace lextopic {

struct SynthConfig {
  int num_docs = 200;
  int num_topics = 3;
  int vocab_size = 30;
  int doc_length = 50;
  double alpha = 0.5;
  double beta = 0.1;
  std::vector<int> years = {2016, 2017, 2018, 2019, 2020, 2021, 2022, 2023};
  std::uint64_t seed = 1;
  LawType law_type = LawType::kRegulation;
};

struct GroundTruth {
  std::vector<std::vector<double>> theta;  // num_docs x num_topics
  std::vector<std::vector<double>> phi;    // num_topics x vocab_size
  std::vector<std::vector<int>> words;     // term ids per document
};

struct SyntheticCorpus {
  Corpus corpus;
  GroundTruth truth;
};

// Rendered form of term id `term`: "w0007". Survives preprocessing intact.
std::string synthetic_word(int term);

// Samples documents from the LDA generative process:
//   phi_k ~ Dir(beta), theta_d ~ Dir(alpha), z ~ Cat(theta_d), w ~ Cat(phi_z).
// Each record's title is its first word and its content the remaining
// words, so title + " " + content is exactly the sampled token sequence.
// Years are drawn uniformly from `years`. Throws Error(InvalidConfig).
SyntheticCorpus generate_synthetic_corpus(const SynthConfig& config);

struct TypeYearCount {
  LawType type;
  int gregorian_year;
  int count;
};

// Records with exactly the requested (type, year) counts, in seeded random
// order and with short filler text. Used to reproduce corpus-level counts.
Corpus generate_typed_corpus(const std::vector<TypeYearCount>& cells,
                             std::uint64_t seed);

}  // namespace lextopic

#endif  // LEXTOPIC_SYNTHETIC_H_
