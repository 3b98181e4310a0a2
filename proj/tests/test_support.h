#ifndef LEXTOPIC_TESTS_TEST_SUPPORT_H_
#define LEXTOPIC_TESTS_TEST_SUPPORT_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lextopic/error.h"
#include "lextopic/vectorize.h"

namespace lextopic::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(LEXTOPIC_TEST_DATA_DIR) / name;
}

inline std::filesystem::path resource_path(const std::string& name) {
  return std::filesystem::path(LEXTOPIC_DATA_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("lextopic_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Each inner vector lists the term ids of one document, repeats allowed.
inline DocTermMatrix matrix_from_terms(const std::vector<std::vector<int>>& docs,
                                       std::size_t num_terms) {
  DocTermMatrix m;
  m.num_terms = num_terms;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    std::map<int, int> counts;
    for (int t : docs[d]) ++counts[t];
    std::vector<TermCount> row;
    for (auto [t, c] : counts) row.push_back({t, c});
    m.rows.push_back(row);
    m.doc_ids.push_back("d" + std::to_string(d));
  }
  return m;
}

inline Vocabulary numbered_vocabulary(std::size_t num_terms) {
  std::vector<std::string> terms;
  std::vector<int> df;
  for (std::size_t i = 0; i < num_terms; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "t%02zu", i);
    terms.emplace_back(buf);
    df.push_back(1);
  }
  return Vocabulary(terms, df);
}

}  // namespace lextopic::testing

// Runs `stmt`, which must throw lextopic::Error with the given code.
#define EXPECT_LEXTOPIC_ERROR(stmt, expected_code)                        \
  do {                                                                    \
    bool lextopic_thrown = false;                                         \
    try {                                                                 \
      stmt;                                                               \
    } catch (const ::lextopic::Error& e) {                                \
      lextopic_thrown = true;                                             \
      EXPECT_EQ(e.code(), expected_code) << e.what();                     \
    }                                                                     \
    EXPECT_TRUE(lextopic_thrown) << "no lextopic::Error from " #stmt;     \
  } while (0)

#endif  // LEXTOPIC_TESTS_TEST_SUPPORT_H_
