#ifndef LEXTOPIC_RUN_CONFIG_H_
#define LEXTOPIC_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lextopic/lda.h"
#include "lextopic/preprocess.h"

namespace lextopic {

// Declarative description of one pipeline run. Loaded from a JSON file,
// then overridden by command-line flags.
struct RunConfig {
  std::string corpus;
  std::string format = "jsonl";
  std::string filter_type = "Regulation";  // or "all"

  struct Preprocess {
    std::string stopwords;
    std::string lemma_rules;
    int min_token_length = 2;
  } preprocess;

  struct Vectorize {
    int min_df = 2;
    double max_df_ratio = 0.95;
    std::string norm = "l2";
    double pseudo_scale = 10.0;
  } vectorize;

  struct Lda {
    int topics = 10;
    std::optional<double> alpha;  // 50 / topics when unset
    double beta = 0.01;
    int sweeps = 1000;
    int burn_in = 500;
    std::uint64_t seed = 42;
    std::string mode = "counts";
    int chains = 1;
  } lda;

  struct Analyze {
    int top_m = 10;
    int top_words = 20;
    std::string normalization = "per_topic";
    std::string labels;
  } analyze;

  std::vector<int> k_list = {5, 10, 15, 20};
  std::string out = "out";

  // Unknown keys are rejected so typos do not silently fall back to defaults.
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  LdaConfig lda_config() const;
  LdaConfig lda_config(int topics) const;
  // Loads the stopword and lemma rule files named here.
  PreprocessConfig preprocess_config() const;
};

RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace lextopic

#endif  // LEXTOPIC_RUN_CONFIG_H_
