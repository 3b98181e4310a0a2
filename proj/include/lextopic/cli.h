#ifndef LEXTOPIC_CLI_H_
#define LEXTOPIC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "lextopic/run_config.h"
#include "lextopic/synthetic.h"

namespace lextopic::cli {

// Each command writes its files under config.out and progress to `log`.
// Failures surface as lextopic::Error.

// stats.csv (law type x year), ratios.csv (title/content length ratios)
// and corpus.jsonl (canonical re-serialization).
void cmd_ingest(const RunConfig& config, std::ostream& log);

// config.json, model.json (plus model_chain<c>.json for extra chains),
// loglik.csv, vocabulary.csv, counts.csv.
void cmd_fit(const RunConfig& config, std::ostream& log);

// topics.json, shares.csv, trends.csv, wordcloud_<k>.csv for the model at
// `model_path`.
void cmd_analyze(const RunConfig& config, const std::string& model_path,
                 std::ostream& log);

// sweep.csv: K, mean UMass coherence, training perplexity.
void cmd_sweep(const RunConfig& config, std::ostream& log);

// Writes a synthetic corpus file.
void cmd_synth(const SynthConfig& config, const std::string& path,
               const std::string& format, std::ostream& log);

// Full command line front end. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lextopic::cli

#endif  // LEXTOPIC_CLI_H_
