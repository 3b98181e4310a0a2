#include "lextopic/synthetic.h"

#include <algorithm>
#include <cstdio>
#include <random>

#include "lextopic/error.h"

namespace lextopic {
namespace {

std::vector<double> sample_dirichlet(double concentration, int size,
                                     std::mt19937_64& rng) {
  std::gamma_distribution<double> gamma(concentration, 1.0);
  std::vector<double> out(size);
  double sum = 0.0;
  for (double& x : out) {
    x = gamma(rng);
    sum += x;
  }
  if (sum <= 0.0) {
    // Every draw underflowed; fall back to a point mass.
    std::uniform_int_distribution<int> pick(0, size - 1);
    std::fill(out.begin(), out.end(), 0.0);
    out[pick(rng)] = 1.0;
    return out;
  }
  for (double& x : out) x /= sum;
  return out;
}

int sample_categorical(const std::vector<double>& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return static_cast<int>(i);
  }
  // Rounding left u beyond the last cumulative sum: take the last nonzero.
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] > 0.0) return static_cast<int>(i);
  }
  return 0;
}

// A Jalali date that falls inside the given Gregorian year.
RecordDate date_in_year(int gregorian_year, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> month(1, 12);
  std::uniform_int_distribution<int> day(1, 28);
  return make_record_date(
      calendar::gregorian_to_jalali({gregorian_year, month(rng), day(rng)}));
}

std::string record_id(std::string_view prefix, std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu", index);
  return std::string(prefix) + buf;
}

}  // namespace

std::string synthetic_word(int term) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "w%04d", term);
  return buf;
}

SyntheticCorpus generate_synthetic_corpus(const SynthConfig& config) {
  const auto invalid = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidConfig, "corpus", what);
  };
  if (config.num_docs < 1) invalid("num_docs must be >= 1");
  if (config.num_topics < 1) invalid("num_topics must be >= 1");
  if (config.vocab_size < 1) invalid("vocab_size must be >= 1");
  if (config.doc_length < 1) invalid("doc_length must be >= 1");
  if (!(config.alpha > 0.0)) invalid("alpha must be > 0");
  if (!(config.beta > 0.0)) invalid("beta must be > 0");
  if (config.years.empty()) invalid("years must be non-empty");

  std::mt19937_64 rng(config.seed);
  GroundTruth truth;
  for (int k = 0; k < config.num_topics; ++k) {
    truth.phi.push_back(sample_dirichlet(config.beta, config.vocab_size, rng));
  }

  std::uniform_int_distribution<std::size_t> pick_year(0, config.years.size() - 1);
  std::vector<LawRecord> records;
  records.reserve(config.num_docs);
  for (int d = 0; d < config.num_docs; ++d) {
    std::vector<double> theta =
        config.num_topics == 1 ? std::vector<double>{1.0}
                               : sample_dirichlet(config.alpha, config.num_topics, rng);
    std::vector<int> words;
    words.reserve(config.doc_length);
    for (int n = 0; n < config.doc_length; ++n) {
      const int z = sample_categorical(theta, rng);
      words.push_back(sample_categorical(truth.phi[z], rng));
    }

    LawRecord r;
    r.id = record_id("syn-", d + 1);
    r.title = synthetic_word(words[0]);
    for (std::size_t n = 1; n < words.size(); ++n) {
      if (n > 1) r.content.push_back(' ');
      r.content += synthetic_word(words[n]);
    }
    r.law_type = config.law_type;
    r.category = "Synthetic";
    r.date = date_in_year(config.years[pick_year(rng)], rng);
    records.push_back(std::move(r));

    truth.theta.push_back(std::move(theta));
    truth.words.push_back(std::move(words));
  }
  return {Corpus(std::move(records), "synthetic"), std::move(truth)};
}

Corpus generate_typed_corpus(const std::vector<TypeYearCount>& cells,
                             std::uint64_t seed) {
  static constexpr std::string_view kFiller[] = {
      "budget", "customs", "tariff", "insurance", "housing", "agriculture",
      "court", "ministry", "council", "article", "clause", "approval",
      "executive", "regulation", "development", "education", "health", "water"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> word(0, std::size(kFiller) - 1);
  std::uniform_int_distribution<int> content_length(20, 80);

  std::vector<std::pair<LawType, int>> slots;
  for (const TypeYearCount& cell : cells) {
    for (int i = 0; i < cell.count; ++i) slots.emplace_back(cell.type, cell.gregorian_year);
  }
  std::shuffle(slots.begin(), slots.end(), rng);

  std::vector<LawRecord> records;
  records.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    LawRecord r;
    r.id = record_id("doc-", i + 1);
    r.law_type = slots[i].first;
    r.title = std::string(law_type_name(r.law_type)) + " on " +
              std::string(kFiller[word(rng)]);
    const int n = content_length(rng);
    for (int k = 0; k < n; ++k) {
      if (k) r.content.push_back(' ');
      r.content += kFiller[word(rng)];
    }
    r.category = "Synthetic";
    r.date = date_in_year(slots[i].second, rng);
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records), "synthetic-typed");
}

}  // namespace lextopic
