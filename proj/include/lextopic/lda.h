#ifndef LEXTOPIC_LDA_H_
#define LEXTOPIC_LDA_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lextopic/vectorize.h"

namespace lextopic {

// How the sampler's token multiplicities were produced: raw counts, or
// rounded and scaled TF-IDF weights (to_pseudo_counts).
enum class InputMode { kCounts, kTfidfPseudo };

InputMode parse_input_mode(std::string_view text);
std::string_view input_mode_name(InputMode mode);

struct LdaConfig {
  int num_topics = 10;
  double alpha = 5.0;  // 50 / num_topics
  double beta = 0.01;
  int sweeps = 1000;
  int burn_in = 500;
  std::uint64_t seed = 42;
  InputMode input_mode = InputMode::kCounts;

  // Defaults with alpha = 50 / num_topics.
  static LdaConfig with_topics(int num_topics);

  // Throws Error(InvalidConfig).
  void validate() const;
};

// Collapsed Gibbs state. Token slots are laid out document by document; a
// document's slots list its terms in ascending term order, each repeated
// `count` times. n_dk, n_kw, n_k and n_d are exact tallies of z.
class SamplerState {
 public:
  std::size_t num_docs() const { return doc_offset.size() - 1; }
  std::size_t num_slots() const { return slot_term.size(); }

  int& doc_topic(std::size_t d, int k) { return n_dk[d * num_topics + k]; }
  int doc_topic(std::size_t d, int k) const { return n_dk[d * num_topics + k]; }
  int& topic_term(int k, std::size_t w) { return n_kw[k * num_terms + w]; }
  int topic_term(int k, std::size_t w) const { return n_kw[k * num_terms + w]; }

  // True when a full recount of z reproduces every table.
  bool consistent() const;

  int num_topics = 0;
  std::size_t num_terms = 0;
  std::vector<std::size_t> doc_offset;  // num_docs + 1 entries
  std::vector<int> slot_term;
  std::vector<int> z;
  std::vector<int> n_dk;
  std::vector<int> n_kw;
  std::vector<int> n_k;
  std::vector<int> n_d;
  std::mt19937_64 rng;
};

// Uniform random topics from the seeded generator.
SamplerState init_assignments(const DocTermMatrix& matrix, const LdaConfig& config);

// Normalized conditional over topics for the token at `slot` (a global
// slot index inside document `doc`, holding term `term`), with that token's
// own assignment excluded:
//   p(k) ∝ (n_dk + alpha) (n_kw + beta) / (n_k + V beta).
std::vector<double> gibbs_conditional(const SamplerState& state, std::size_t doc,
                                      std::size_t slot, int term,
                                      const LdaConfig& config);

// Resamples every slot once, in slot order.
void gibbs_sweep(SamplerState& state, const LdaConfig& config);

// sum_d sum_slots ln sum_k theta_dk phi_kw under the smoothed point
// estimates of the current state.
double point_log_likelihood(const SamplerState& state, const LdaConfig& config);

struct LdaModel {
  LdaConfig config;
  std::size_t num_docs = 0;
  std::size_t num_topics = 0;
  std::size_t num_terms = 0;
  std::vector<double> theta;  // num_docs x num_topics, row-major
  std::vector<double> phi;    // num_topics x num_terms, row-major
  Vocabulary vocab;
  std::vector<std::string> doc_ids;
  std::vector<double> log_likelihood;  // one entry per sweep
  // Free-form pipeline settings recorded alongside the fit.
  std::map<std::string, std::string> metadata;

  std::span<const double> theta_row(std::size_t d) const {
    return {theta.data() + d * num_topics, num_topics};
  }
  std::span<const double> phi_row(std::size_t k) const {
    return {phi.data() + k * num_terms, num_terms};
  }
};

// Runs burn_in sweeps, then averages
//   theta_dk = (n_dk + alpha) / (n_d + K alpha)
//   phi_kw   = (n_kw + beta)  / (n_k + V beta)
// over the remaining sweeps. Throws Error(InvalidConfig), Error(EmptyMatrix)
// or Error(VocabularyMismatch) when vocab and matrix widths differ.
LdaModel fit(const DocTermMatrix& matrix, const Vocabulary& vocab,
             const LdaConfig& config);

// Independent chains with seeds seed, seed + 1, ..., run concurrently.
// Results are per chain; topic labels are not comparable across chains.
std::vector<LdaModel> fit_chains(const DocTermMatrix& matrix, const Vocabulary& vocab,
                                 const LdaConfig& config, int num_chains);

// exp(-sum counts * ln sum_k theta_dk phi_kw / total tokens). The matrix
// must have the model's documents and vocabulary width, otherwise
// Error(VocabularyMismatch).
double perplexity(const LdaModel& model, const DocTermMatrix& matrix);

// Term indices of the n most probable terms of a topic, ties broken by
// lexicographic term order.
std::vector<int> top_terms(const LdaModel& model, std::size_t topic, std::size_t n);

// UMass coherence per topic over the top_m terms w_1..w_m:
//   sum_{i<j} ln((codoc(w_i, w_j) + 1) / codoc(w_j)).
std::vector<double> coherence_umass(const LdaModel& model, const DocTermMatrix& matrix,
                                    int top_m);

inline constexpr int kModelFormatVersion = 1;

void save_model(const LdaModel& model, std::ostream& out);
void save_model(const LdaModel& model, const std::filesystem::path& path);
LdaModel load_model(std::istream& in);
LdaModel load_model(const std::filesystem::path& path);

}  // namespace lextopic

#endif  // LEXTOPIC_LDA_H_
