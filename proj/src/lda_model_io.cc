#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "lextopic/error.h"
#include "lextopic/lda.h"

namespace lextopic {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kFormat = "lextopic-lda-model";

[[noreturn]] void bad_model(const std::string& what) {
  throw Error(ErrorCode::kIo, "lda", "model file: " + what);
}

}  // namespace

void save_model(const LdaModel& model, std::ostream& out) {
  ordered_json j;
  j["format"] = kFormat;
  j["version"] = kModelFormatVersion;
  j["config"] = {
      {"topics", model.config.num_topics},
      {"alpha", model.config.alpha},
      {"beta", model.config.beta},
      {"sweeps", model.config.sweeps},
      {"burn_in", model.config.burn_in},
      {"seed", model.config.seed},
      {"mode", input_mode_name(model.config.input_mode)},
  };
  j["metadata"] = ordered_json::object();
  for (const auto& [key, value] : model.metadata) j["metadata"][key] = value;
  j["vocabulary_hash"] = model.vocab.hash();
  j["vocabulary"] = {{"terms", model.vocab.terms()}, {"df", model.vocab.df()}};
  j["num_docs"] = model.num_docs;
  j["num_topics"] = model.num_topics;
  j["num_terms"] = model.num_terms;
  j["doc_ids"] = model.doc_ids;
  j["theta"] = model.theta;
  j["phi"] = model.phi;
  j["log_likelihood"] = model.log_likelihood;
  out << j.dump(1, ' ', false, ordered_json::error_handler_t::replace) << '\n';
}

void save_model(const LdaModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "lda", "cannot write " + path.string());
  save_model(model, out);
}

LdaModel load_model(std::istream& in) {
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    bad_model(e.what());
  }
  if (j.value("format", "") != kFormat) bad_model("unrecognized format");
  if (j.value("version", 0) != kModelFormatVersion) bad_model("unsupported version");

  LdaModel m;
  try {
    const auto& c = j.at("config");
    m.config.num_topics = c.at("topics").get<int>();
    m.config.alpha = c.at("alpha").get<double>();
    m.config.beta = c.at("beta").get<double>();
    m.config.sweeps = c.at("sweeps").get<int>();
    m.config.burn_in = c.at("burn_in").get<int>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    m.config.input_mode = parse_input_mode(c.at("mode").get<std::string>());
    for (const auto& [key, value] : j.at("metadata").items()) {
      m.metadata[key] = value.get<std::string>();
    }
    m.vocab = Vocabulary(j.at("vocabulary").at("terms").get<std::vector<std::string>>(),
                         j.at("vocabulary").at("df").get<std::vector<int>>());
    m.num_docs = j.at("num_docs").get<std::size_t>();
    m.num_topics = j.at("num_topics").get<std::size_t>();
    m.num_terms = j.at("num_terms").get<std::size_t>();
    m.doc_ids = j.at("doc_ids").get<std::vector<std::string>>();
    m.theta = j.at("theta").get<std::vector<double>>();
    m.phi = j.at("phi").get<std::vector<double>>();
    m.log_likelihood = j.at("log_likelihood").get<std::vector<double>>();
  } catch (const ordered_json::exception& e) {
    bad_model(e.what());
  }
  if (m.vocab.hash() != j.value("vocabulary_hash", "")) bad_model("vocabulary hash mismatch");
  if (m.theta.size() != m.num_docs * m.num_topics || m.phi.size() != m.num_topics * m.num_terms ||
      m.doc_ids.size() != m.num_docs || m.vocab.size() != m.num_terms) {
    bad_model("inconsistent dimensions");
  }
  return m;
}

LdaModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "lda", "cannot open " + path.string());
  return load_model(in);
}

}  // namespace lextopic
