#include <future>

#include "lextopic/error.h"
#include "lextopic/lda.h"

namespace lextopic {

LdaModel fit(const DocTermMatrix& matrix, const Vocabulary& vocab,
             const LdaConfig& config) {
  config.validate();
  if (matrix.num_docs() == 0 || matrix.total() == 0) {
    throw Error(ErrorCode::kEmptyMatrix, "lda", "no tokens to model");
  }
  if (vocab.size() != matrix.num_terms) {
    throw Error(ErrorCode::kVocabularyMismatch, "lda",
                "vocabulary has " + std::to_string(vocab.size()) + " terms, matrix " +
                    std::to_string(matrix.num_terms));
  }

  SamplerState state = init_assignments(matrix, config);
  const std::size_t docs = matrix.num_docs();
  const std::size_t topics = static_cast<std::size_t>(config.num_topics);
  const std::size_t terms = matrix.num_terms;
  const double k_alpha = static_cast<double>(topics) * config.alpha;
  const double v_beta = static_cast<double>(terms) * config.beta;

  LdaModel model;
  model.config = config;
  model.num_docs = docs;
  model.num_topics = topics;
  model.num_terms = terms;
  model.theta.assign(docs * topics, 0.0);
  model.phi.assign(topics * terms, 0.0);
  model.vocab = vocab;
  model.doc_ids = matrix.doc_ids;
  model.log_likelihood.reserve(config.sweeps);

  for (int sweep = 1; sweep <= config.sweeps; ++sweep) {
    gibbs_sweep(state, config);
    model.log_likelihood.push_back(point_log_likelihood(state, config));
    if (sweep <= config.burn_in) continue;
    for (std::size_t d = 0; d < docs; ++d) {
      const double denom = state.n_d[d] + k_alpha;
      for (std::size_t k = 0; k < topics; ++k) {
        model.theta[d * topics + k] += (state.n_dk[d * topics + k] + config.alpha) / denom;
      }
    }
    for (std::size_t k = 0; k < topics; ++k) {
      const double denom = state.n_k[k] + v_beta;
      for (std::size_t w = 0; w < terms; ++w) {
        model.phi[k * terms + w] += (state.n_kw[k * terms + w] + config.beta) / denom;
      }
    }
  }

  const double samples = static_cast<double>(config.sweeps - config.burn_in);
  for (double& x : model.theta) x /= samples;
  for (double& x : model.phi) x /= samples;
  return model;
}

std::vector<LdaModel> fit_chains(const DocTermMatrix& matrix, const Vocabulary& vocab,
                                 const LdaConfig& config, int num_chains) {
  if (num_chains < 1) {
    throw Error(ErrorCode::kInvalidConfig, "lda", "chains must be >= 1");
  }
  std::vector<std::future<LdaModel>> running;
  for (int c = 0; c < num_chains; ++c) {
    LdaConfig chain = config;
    chain.seed = config.seed + static_cast<std::uint64_t>(c);
    running.push_back(std::async(std::launch::async, [&matrix, &vocab, chain] {
      return fit(matrix, vocab, chain);
    }));
  }
  std::vector<LdaModel> models;
  for (auto& f : running) models.push_back(f.get());
  return models;
}

}  // namespace lextopic
