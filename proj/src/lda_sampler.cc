#include <cmath>

#include "lextopic/error.h"
#include "lextopic/lda.h"

namespace lextopic {
namespace {

constexpr std::string_view kModule = "lda";

}  // namespace

InputMode parse_input_mode(std::string_view text) {
  if (text == "counts") return InputMode::kCounts;
  if (text == "tfidf-pseudo") return InputMode::kTfidfPseudo;
  throw Error(ErrorCode::kInvalidConfig, std::string(kModule),
              "unknown input mode " + std::string(text));
}

std::string_view input_mode_name(InputMode mode) {
  return mode == InputMode::kCounts ? "counts" : "tfidf-pseudo";
}

LdaConfig LdaConfig::with_topics(int num_topics) {
  LdaConfig config;
  config.num_topics = num_topics;
  config.alpha = num_topics > 0 ? 50.0 / num_topics : 0.0;
  return config;
}

void LdaConfig::validate() const {
  const auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, std::string(kModule), what);
  };
  if (num_topics < 1) fail("topics must be >= 1");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) fail("alpha must be > 0");
  if (!(beta > 0.0) || !std::isfinite(beta)) fail("beta must be > 0");
  if (sweeps < 1) fail("sweeps must be >= 1");
  if (burn_in < 0 || burn_in >= sweeps) fail("burn_in must be in [0, sweeps)");
}

bool SamplerState::consistent() const {
  const std::size_t docs = num_docs();
  std::vector<int> dk(docs * num_topics, 0), kw(num_topics * num_terms, 0);
  std::vector<int> k_tot(num_topics, 0), d_tot(docs, 0);
  for (std::size_t d = 0; d < docs; ++d) {
    for (std::size_t i = doc_offset[d]; i < doc_offset[d + 1]; ++i) {
      const int k = z[i];
      if (k < 0 || k >= num_topics) return false;
      ++dk[d * num_topics + k];
      ++kw[k * num_terms + slot_term[i]];
      ++k_tot[k];
      ++d_tot[d];
    }
  }
  return dk == n_dk && kw == n_kw && k_tot == n_k && d_tot == n_d;
}

SamplerState init_assignments(const DocTermMatrix& matrix, const LdaConfig& config) {
  SamplerState s;
  s.num_topics = config.num_topics;
  s.num_terms = matrix.num_terms;
  s.rng.seed(config.seed);
  const std::size_t docs = matrix.num_docs();
  s.doc_offset.reserve(docs + 1);
  s.doc_offset.push_back(0);
  for (const auto& row : matrix.rows) {
    for (const TermCount& tc : row) s.slot_term.insert(s.slot_term.end(), tc.count, tc.term);
    s.doc_offset.push_back(s.slot_term.size());
  }
  s.n_dk.assign(docs * s.num_topics, 0);
  s.n_kw.assign(s.num_topics * s.num_terms, 0);
  s.n_k.assign(s.num_topics, 0);
  s.n_d.assign(docs, 0);
  s.z.resize(s.slot_term.size());

  std::uniform_int_distribution<int> topic(0, s.num_topics - 1);
  for (std::size_t d = 0; d < docs; ++d) {
    for (std::size_t i = s.doc_offset[d]; i < s.doc_offset[d + 1]; ++i) {
      const int k = topic(s.rng);
      s.z[i] = k;
      ++s.doc_topic(d, k);
      ++s.topic_term(k, s.slot_term[i]);
      ++s.n_k[k];
      ++s.n_d[d];
    }
  }
  return s;
}

std::vector<double> gibbs_conditional(const SamplerState& state, std::size_t doc,
                                      std::size_t slot, int term,
                                      const LdaConfig& config) {
  const int current = state.z[slot];
  const double v_beta = static_cast<double>(state.num_terms) * config.beta;
  std::vector<double> p(state.num_topics);
  double total = 0.0;
  for (int k = 0; k < state.num_topics; ++k) {
    const int own = k == current ? 1 : 0;
    p[k] = (state.doc_topic(doc, k) - own + config.alpha) *
           (state.topic_term(k, term) - own + config.beta) /
           (state.n_k[k] - own + v_beta);
    total += p[k];
  }
  for (double& x : p) x /= total;
  return p;
}

void gibbs_sweep(SamplerState& s, const LdaConfig& config) {
  const double v_beta = static_cast<double>(s.num_terms) * config.beta;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cumulative(s.num_topics);
  for (std::size_t d = 0; d < s.num_docs(); ++d) {
    for (std::size_t i = s.doc_offset[d]; i < s.doc_offset[d + 1]; ++i) {
      const int w = s.slot_term[i];
      int k = s.z[i];
      --s.doc_topic(d, k);
      --s.topic_term(k, w);
      --s.n_k[k];

      double total = 0.0;
      for (int t = 0; t < s.num_topics; ++t) {
        total += (s.doc_topic(d, t) + config.alpha) * (s.topic_term(t, w) + config.beta) /
                 (s.n_k[t] + v_beta);
        cumulative[t] = total;
      }
      const double u = unit(s.rng) * total;
      k = s.num_topics - 1;
      for (int t = 0; t < s.num_topics; ++t) {
        if (u < cumulative[t]) {
          k = t;
          break;
        }
      }

      s.z[i] = k;
      ++s.doc_topic(d, k);
      ++s.topic_term(k, w);
      ++s.n_k[k];
    }
  }
}

double point_log_likelihood(const SamplerState& s, const LdaConfig& config) {
  const int topics = s.num_topics;
  const double k_alpha = topics * config.alpha;
  const double v_beta = static_cast<double>(s.num_terms) * config.beta;
  std::vector<double> phi_denominator(topics);
  for (int k = 0; k < topics; ++k) phi_denominator[k] = s.n_k[k] + v_beta;
  std::vector<double> theta(topics);
  double total = 0.0;
  for (std::size_t d = 0; d < s.num_docs(); ++d) {
    for (int k = 0; k < topics; ++k) {
      theta[k] = (s.doc_topic(d, k) + config.alpha) / (s.n_d[d] + k_alpha);
    }
    for (std::size_t i = s.doc_offset[d]; i < s.doc_offset[d + 1]; ++i) {
      const int w = s.slot_term[i];
      double p = 0.0;
      for (int k = 0; k < topics; ++k) {
        p += theta[k] * (s.topic_term(k, w) + config.beta) / phi_denominator[k];
      }
      total += std::log(p);
    }
  }
  return total;
}

}  // namespace lextopic
