#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "lextopic/error.h"
#include "lextopic/lda.h"

namespace lextopic {

double perplexity(const LdaModel& model, const DocTermMatrix& matrix) {
  if (matrix.num_terms != model.num_terms || matrix.num_docs() != model.num_docs) {
    throw Error(ErrorCode::kVocabularyMismatch, "lda",
                "matrix is " + std::to_string(matrix.num_docs()) + "x" +
                    std::to_string(matrix.num_terms) + ", model " +
                    std::to_string(model.num_docs) + "x" + std::to_string(model.num_terms));
  }
  double log_likelihood = 0.0;
  std::int64_t tokens = 0;
  for (std::size_t d = 0; d < matrix.num_docs(); ++d) {
    const auto theta = model.theta_row(d);
    for (const TermCount& tc : matrix.rows[d]) {
      double p = 0.0;
      for (std::size_t k = 0; k < model.num_topics; ++k) {
        p += theta[k] * model.phi[k * model.num_terms + tc.term];
      }
      log_likelihood += tc.count * std::log(p);
      tokens += tc.count;
    }
  }
  if (tokens == 0) throw Error(ErrorCode::kEmptyMatrix, "lda", "no tokens to score");
  return std::exp(-log_likelihood / static_cast<double>(tokens));
}

std::vector<int> top_terms(const LdaModel& model, std::size_t topic, std::size_t n) {
  const auto phi = model.phi_row(topic);
  std::vector<int> order(model.num_terms);
  std::iota(order.begin(), order.end(), 0);
  n = std::min(n, order.size());
  std::partial_sort(order.begin(), order.begin() + n, order.end(), [&](int a, int b) {
    if (phi[a] != phi[b]) return phi[a] > phi[b];
    return model.vocab.term(a) < model.vocab.term(b);
  });
  order.resize(n);
  return order;
}

std::vector<double> coherence_umass(const LdaModel& model, const DocTermMatrix& matrix,
                                    int top_m) {
  if (top_m < 2) {
    throw Error(ErrorCode::kInvalidConfig, "lda", "coherence needs top_m >= 2");
  }
  if (matrix.num_terms != model.num_terms) {
    throw Error(ErrorCode::kVocabularyMismatch, "lda", "coherence matrix width differs");
  }
  std::vector<double> scores;
  scores.reserve(model.num_topics);
  for (std::size_t k = 0; k < model.num_topics; ++k) {
    const std::vector<int> top = top_terms(model, k, static_cast<std::size_t>(top_m));
    const std::size_t m = top.size();
    std::unordered_map<int, std::size_t> rank;
    for (std::size_t i = 0; i < m; ++i) rank[top[i]] = i;

    std::vector<int> df(m, 0);
    std::vector<int> codoc(m * m, 0);
    std::vector<std::size_t> present;
    for (const auto& row : matrix.rows) {
      present.clear();
      for (const TermCount& tc : row) {
        if (const auto it = rank.find(tc.term); it != rank.end()) present.push_back(it->second);
      }
      for (std::size_t a : present) {
        ++df[a];
        for (std::size_t b : present) {
          if (a != b) ++codoc[a * m + b];
        }
      }
    }

    double score = 0.0;
    for (std::size_t j = 1; j < m; ++j) {
      if (df[j] == 0) continue;  // outside the documented precondition
      for (std::size_t i = 0; i < j; ++i) {
        score += std::log((codoc[i * m + j] + 1.0) / df[j]);
      }
    }
    scores.push_back(score);
  }
  return scores;
}

}  // namespace lextopic
