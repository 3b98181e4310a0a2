#include "lextopic/exact_posterior.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lextopic/error.h"

namespace lextopic {
namespace {

struct Tokens {
  std::vector<std::size_t> doc;
  std::vector<int> term;
};

Tokens flatten(const DocTermMatrix& matrix) {
  Tokens t;
  for (std::size_t d = 0; d < matrix.num_docs(); ++d) {
    for (const TermCount& tc : matrix.rows[d]) {
      for (int c = 0; c < tc.count; ++c) {
        t.doc.push_back(d);
        t.term.push_back(tc.term);
      }
    }
  }
  return t;
}

struct Tallies {
  std::vector<int> dk, kw, k, d;
};

void tally(const Tokens& tokens, std::span<const int> z, std::size_t docs, int topics,
           std::size_t terms, Tallies& out) {
  out.dk.assign(docs * topics, 0);
  out.kw.assign(topics * terms, 0);
  out.k.assign(topics, 0);
  out.d.assign(docs, 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    ++out.dk[tokens.doc[i] * topics + z[i]];
    ++out.kw[z[i] * terms + tokens.term[i]];
    ++out.k[z[i]];
    ++out.d[tokens.doc[i]];
  }
}

double log_joint(const Tallies& t, std::size_t docs, int topics, std::size_t terms,
                 const LdaConfig& config) {
  const double a = config.alpha;
  const double b = config.beta;
  double total = 0.0;
  for (std::size_t d = 0; d < docs; ++d) {
    total += std::lgamma(topics * a) - std::lgamma(t.d[d] + topics * a);
    for (int k = 0; k < topics; ++k) {
      total += std::lgamma(t.dk[d * topics + k] + a) - std::lgamma(a);
    }
  }
  for (int k = 0; k < topics; ++k) {
    total += std::lgamma(terms * b) - std::lgamma(t.k[k] + terms * b);
    for (std::size_t w = 0; w < terms; ++w) {
      total += std::lgamma(t.kw[k * terms + w] + b) - std::lgamma(b);
    }
  }
  return total;
}

// Advances z as a base-`topics` counter. False after the last assignment.
bool next_assignment(std::vector<int>& z, int topics) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (++z[i] < topics) return true;
    z[i] = 0;
  }
  return false;
}

}  // namespace

double collapsed_log_joint(const DocTermMatrix& matrix, std::span<const int> z,
                           const LdaConfig& config) {
  const Tokens tokens = flatten(matrix);
  if (z.size() != tokens.term.size()) {
    throw Error(ErrorCode::kInvalidConfig, "lda", "assignment length differs from tokens");
  }
  Tallies t;
  tally(tokens, z, matrix.num_docs(), config.num_topics, matrix.num_terms, t);
  return log_joint(t, matrix.num_docs(), config.num_topics, matrix.num_terms, config);
}

ExactPosterior exact_posterior(const DocTermMatrix& matrix, const LdaConfig& config,
                               std::uint64_t max_assignments) {
  config.validate();
  const Tokens tokens = flatten(matrix);
  const std::size_t n = tokens.term.size();
  const int topics = config.num_topics;
  if (n == 0) throw Error(ErrorCode::kEmptyMatrix, "lda", "no tokens to enumerate");

  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (count > max_assignments / static_cast<std::uint64_t>(topics)) {
      throw Error(ErrorCode::kTooLarge, "lda",
                  std::to_string(topics) + "^" + std::to_string(n) + " assignments");
    }
    count *= static_cast<std::uint64_t>(topics);
  }

  const std::size_t docs = matrix.num_docs();
  const std::size_t terms = matrix.num_terms;
  Tallies t;

  // Pass 1: log weights.
  std::vector<double> log_weight;
  log_weight.reserve(count);
  std::vector<int> z(n, 0);
  do {
    tally(tokens, z, docs, topics, terms, t);
    log_weight.push_back(log_joint(t, docs, topics, terms, config));
  } while (next_assignment(z, topics));

  const double peak = *std::max_element(log_weight.begin(), log_weight.end());
  double scaled_sum = 0.0;
  for (double lw : log_weight) scaled_sum += std::exp(lw - peak);
  const double log_evidence = peak + std::log(scaled_sum);

  // Pass 2: weighted estimator averages.
  ExactPosterior out;
  out.num_docs = docs;
  out.num_topics = topics;
  out.num_terms = terms;
  out.theta.assign(docs * topics, 0.0);
  out.phi.assign(topics * terms, 0.0);
  out.log_evidence = log_evidence;
  out.assignments = count;
  std::fill(z.begin(), z.end(), 0);
  std::size_t index = 0;
  do {
    tally(tokens, z, docs, topics, terms, t);
    const double weight = std::exp(log_weight[index++] - log_evidence);
    out.normalized_weight_sum += weight;
    for (std::size_t d = 0; d < docs; ++d) {
      for (int k = 0; k < topics; ++k) {
        out.theta[d * topics + k] +=
            weight * (t.dk[d * topics + k] + config.alpha) / (t.d[d] + topics * config.alpha);
      }
    }
    for (int k = 0; k < topics; ++k) {
      for (std::size_t w = 0; w < terms; ++w) {
        out.phi[k * terms + w] +=
            weight * (t.kw[k * terms + w] + config.beta) / (t.k[k] + terms * config.beta);
      }
    }
  } while (next_assignment(z, topics));
  return out;
}

}  // namespace lextopic
