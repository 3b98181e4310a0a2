#ifndef LEXTOPIC_EXACT_POSTERIOR_H_
#define LEXTOPIC_EXACT_POSTERIOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "lextopic/lda.h"

namespace lextopic {

// Posterior means of the smoothed count estimators, obtained by enumerating
// every topic assignment of a tiny corpus. Test oracle for the sampler.
struct ExactPosterior {
  std::size_t num_docs = 0;
  std::size_t num_topics = 0;
  std::size_t num_terms = 0;
  std::vector<double> theta;  // num_docs x num_topics
  std::vector<double> phi;    // num_topics x num_terms
  double log_evidence = 0.0;  // ln sum_z p(w, z)
  double normalized_weight_sum = 0.0;
  std::uint64_t assignments = 0;
};

// ln p(w, z) with theta and phi integrated out. `z` follows the sampler's
// slot layout (documents in order, terms ascending, repeated by count).
double collapsed_log_joint(const DocTermMatrix& matrix, std::span<const int> z,
                           const LdaConfig& config);

// Throws Error(TooLarge) when K^N exceeds max_assignments.
ExactPosterior exact_posterior(const DocTermMatrix& matrix, const LdaConfig& config,
                               std::uint64_t max_assignments = 1'000'000);

}  // namespace lextopic

#endif  // LEXTOPIC_EXACT_POSTERIOR_H_
