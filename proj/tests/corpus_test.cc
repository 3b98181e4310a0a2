#include "lextopic/corpus.h"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "fixture_tables.h"
#include "lextopic/synthetic.h"
#include "test_support.h"

namespace lextopic {
namespace {

using testing::data_path;

LawRecord make_record(std::string id, LawType type, int jalali_year, int month = 6,
                      int day = 1) {
  LawRecord r;
  r.id = std::move(id);
  r.title = "title " + r.id;
  r.content = "content of " + r.id;
  r.law_type = type;
  r.category = "Cabinet";
  r.date = make_record_date({jalali_year, month, day});
  return r;
}

TEST(LoadCorpus, ThreeRowFixtureInFileOrder) {
  const Corpus c = load_corpus(data_path("three_records.jsonl"), CorpusFormat::kJsonl);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].id, "r1");
  EXPECT_EQ(c[0].law_type, LawType::kRegulation);
  EXPECT_EQ(c[1].law_type, LawType::kBill);
  EXPECT_EQ(c[2].law_type, LawType::kOpinion);
  EXPECT_EQ(c[0].category, "The Council of Ministers");
  EXPECT_EQ(c[0].tags, (std::vector<std::string>{"Budget", "1402 budget"}));
  EXPECT_EQ(c[0].date.raw, "Sunday, July 11, 1402");
  EXPECT_EQ(c[0].date.jalali(), (calendar::JalaliDate{1402, 4, 11}));
  EXPECT_EQ(c[0].date.gregorian_year, 2023);
  ASSERT_NE(c.find("r2"), nullptr);
  EXPECT_EQ(c.find("r2")->title, "Seventh five-year development plan bill (1402-1406).");
  EXPECT_EQ(c.find("r9"), nullptr);
}

TEST(LoadCorpus, DuplicateIdNamesTheId) {
  try {
    load_corpus(data_path("duplicate_id.jsonl"), CorpusFormat::kJsonl);
    FAIL() << "expected DuplicateId";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateId);
    EXPECT_EQ(e.detail().rfind("r1", 0), 0u) << e.detail();
    EXPECT_NE(e.detail().find("row 2"), std::string::npos);
  }
}

TEST(LoadCorpus, UnknownLawType) {
  try {
    load_corpus(data_path("unknown_type.jsonl"), CorpusFormat::kJsonl);
    FAIL() << "expected UnknownLawType";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLawType);
    EXPECT_NE(e.detail().find("Treaty"), std::string::npos);
    EXPECT_NE(e.detail().find("row 1"), std::string::npos);
  }
}

TEST(LoadCorpus, MissingFieldAndBadDateCarryRow) {
  std::istringstream missing(
      R"({"id":"a","title":"t","content":"c","law_type":"Law","category":"x","date":"1401/01/01"})"
      "\n"
      R"({"id":"b","content":"c","law_type":"Law","category":"x","date":"1401/01/01"})"
      "\n");
  EXPECT_LEXTOPIC_ERROR(read_jsonl(missing), ErrorCode::kMissingField);

  std::istringstream blank_title(
      R"({"id":"a","title":"   ","content":"c","law_type":"Law","category":"x","date":"1401/01/01"})");
  EXPECT_LEXTOPIC_ERROR(read_jsonl(blank_title), ErrorCode::kMissingField);

  std::istringstream bad_date(
      R"({"id":"a","title":"t","content":"c","law_type":"Law","category":"x","date":"1401/07/31"})");
  EXPECT_LEXTOPIC_ERROR(read_jsonl(bad_date), ErrorCode::kMalformedDate);

  EXPECT_LEXTOPIC_ERROR(load_corpus(data_path("no_such_file.jsonl"), CorpusFormat::kJsonl),
                        ErrorCode::kIo);
}

TEST(LoadCorpus, AcceptsTableHeaderAliases) {
  std::istringstream in(
      R"({"id":"a","title":"t","content":"c","type":"Parliament deliberations","categories":"Islamic council","date":"Saturday, July 10, 1402"})");
  const Corpus c = read_jsonl(in);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].law_type, LawType::kParliamentDeliberation);
  EXPECT_EQ(c[0].category, "Islamic council");
  EXPECT_TRUE(c[0].lead.empty());
}

TEST(CorpusRoundTrip, JsonlAndCsvReproduceEveryField) {
  const Corpus original = load_corpus(data_path("three_records.jsonl"), CorpusFormat::kJsonl);
  for (CorpusFormat format : {CorpusFormat::kJsonl, CorpusFormat::kCsv}) {
    std::ostringstream out;
    if (format == CorpusFormat::kJsonl) {
      write_jsonl(original, out);
    } else {
      write_csv(original, out);
    }
    std::istringstream in(out.str());
    const Corpus back = format == CorpusFormat::kJsonl ? read_jsonl(in) : read_csv(in);
    ASSERT_EQ(back.size(), original.size());
    for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], original[i]);

    std::ostringstream again;
    if (format == CorpusFormat::kJsonl) {
      write_jsonl(back, again);
    } else {
      write_csv(back, again);
    }
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(CorpusRoundTrip, CanonicalFieldOrder) {
  const Corpus c = load_corpus(data_path("three_records.jsonl"), CorpusFormat::kJsonl);
  const std::string line = to_jsonl_line(c[0]);
  const char* order[] = {"\"id\"", "\"title\"", "\"content\"", "\"lead\"", "\"tags\"",
                         "\"classes\"", "\"law_type\"", "\"category\"", "\"date\""};
  std::size_t last = 0;
  for (const char* key : order) {
    const std::size_t at = line.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GE(at, last) << key;
    last = at;
  }
}

TEST(CorpusRoundTrip, CsvQuotingSurvivesCommasQuotesAndNewlines) {
  LawRecord r = make_record("q1", LawType::kLaw, 1401);
  r.title = "A \"quoted\", title";
  r.content = "line one\nline two, with comma";
  r.tags = {"x", "y z"};
  const Corpus c({r});
  std::ostringstream out;
  write_csv(c, out);
  std::istringstream in(out.str());
  const Corpus back = read_csv(in);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], r);
}

TEST(FilterByType, KeepsMatchingRecordsInOrder) {
  const Corpus c({make_record("a", LawType::kRegulation, 1400),
                  make_record("b", LawType::kBill, 1400),
                  make_record("c", LawType::kRegulation, 1401),
                  make_record("d", LawType::kNews, 1401),
                  make_record("e", LawType::kOpinion, 1402)});
  const Corpus regs = filter_by_type(c, LawType::kRegulation);
  ASSERT_EQ(regs.size(), 2u);
  EXPECT_EQ(regs[0].id, "a");
  EXPECT_EQ(regs[1].id, "c");
  EXPECT_EQ(filter_by_type(Corpus{}, LawType::kRegulation).size(), 0u);
}

TEST(FilterByType, NineTypesPartitionTheCorpus) {
  const Corpus c = generate_typed_corpus(testing::collection_cells(), 7);
  std::size_t sum = 0;
  for (LawType t : kAllLawTypes) sum += filter_by_type(c, t).size();
  EXPECT_EQ(sum, c.size());
}

TEST(FilterByType, CollectionFixtureHasExpectedRegulationCount) {
  const Corpus c = generate_typed_corpus(testing::collection_cells(), 7);
  EXPECT_EQ(c.size(), 11760u);
  EXPECT_EQ(filter_by_type(c, LawType::kRegulation).size(), 6599u);
}

TEST(TypeCountsByYear, SmallExample) {
  const Corpus c({make_record("a", LawType::kRegulation, 1400),
                  make_record("b", LawType::kRegulation, 1400),
                  make_record("c", LawType::kRegulation, 1400),
                  make_record("d", LawType::kBill, 1400)});
  const TrendTable t = type_counts_by_year(c);
  EXPECT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.cols(), 1u);
  EXPECT_EQ(t.count("Regulation", 2021), 3);
  EXPECT_EQ(t.count("Bill", 2021), 1);
  EXPECT_EQ(t.count("News", 2021), 0);
  EXPECT_EQ(t.total(), 4);
  EXPECT_TRUE(type_counts_by_year(Corpus{}).empty());
}

TEST(TypeCountsByYear, MatchesIndependentTallyOfFixture) {
  const auto cells = testing::collection_cells();
  std::map<std::pair<std::string, int>, int> tally;
  for (const auto& cell : cells) {
    tally[{std::string(law_type_name(cell.type)), cell.gregorian_year}] += cell.count;
  }
  const Corpus c = generate_typed_corpus(cells, 99);
  const TrendTable t = type_counts_by_year(c);
  EXPECT_EQ(t.cols(), 8u);
  EXPECT_EQ(t.rows(), 9u);
  for (const auto& [key, n] : tally) EXPECT_EQ(t.count(key.first, key.second), n);
  EXPECT_EQ(t.total(), static_cast<std::int64_t>(c.size()));
  double sum = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t col = 0; col < t.cols(); ++col) sum += t.percent(r, col);
  }
  EXPECT_NEAR(sum, 100.0, 1e-9);
}

TEST(LengthRatio, Examples) {
  LawRecord r = make_record("x", LawType::kNews, 1401);
  r.title = "ab";
  r.content = "abcd";
  EXPECT_DOUBLE_EQ(length_ratio(r), 0.5);
  r.content = "ab";
  EXPECT_DOUBLE_EQ(length_ratio(r), 1.0);
  r.title = std::string(120, 't');
  r.content = "  \t ";
  EXPECT_LEXTOPIC_ERROR(length_ratio(r), ErrorCode::kEmptyContent);
  // Characters, not bytes.
  r.title = "قانون";
  r.content = "  بودجه سال  ";
  EXPECT_DOUBLE_EQ(length_ratio(r), 5.0 / 9.0);
}

TEST(LawType, ParsesCanonicalAndDisplayForms) {
  EXPECT_EQ(parse_law_type("Regulation"), LawType::kRegulation);
  EXPECT_EQ(parse_law_type("regulations"), LawType::kRegulation);
  EXPECT_EQ(parse_law_type("Parliament deliberations"), LawType::kParliamentDeliberation);
  EXPECT_EQ(parse_law_type("News"), LawType::kNews);
  for (LawType t : kAllLawTypes) EXPECT_EQ(parse_law_type(law_type_name(t)), t);
  EXPECT_LEXTOPIC_ERROR(parse_law_type("Treaty"), ErrorCode::kUnknownLawType);
  EXPECT_LEXTOPIC_ERROR(parse_law_type(""), ErrorCode::kUnknownLawType);
}

TEST(RecordDate, PublishedShapes) {
  const RecordDate a = parse_record_date("Saturday, July 10, 1402");
  EXPECT_EQ(a.jalali(), (calendar::JalaliDate{1402, 4, 10}));
  EXPECT_EQ(a.gregorian_year, 2023);
  EXPECT_EQ(a.raw, "Saturday, July 10, 1402");

  EXPECT_EQ(parse_record_date("Monday, June 29, 1402").jalali(),
            (calendar::JalaliDate{1402, 3, 29}));
  EXPECT_EQ(parse_record_date("1402/04/10").jalali(), (calendar::JalaliDate{1402, 4, 10}));
  EXPECT_EQ(parse_record_date("1402-04-10").jalali(), (calendar::JalaliDate{1402, 4, 10}));
  EXPECT_EQ(parse_record_date("03/28/1402").jalali(), (calendar::JalaliDate{1402, 3, 28}));
  EXPECT_EQ(parse_record_date("10 Tir 1402").jalali(), (calendar::JalaliDate{1402, 4, 10}));
  EXPECT_EQ(parse_record_date("۱۰ تیر ۱۴۰۲").jalali(), (calendar::JalaliDate{1402, 4, 10}));
  EXPECT_EQ(parse_record_date("۱۴۰۲/۱۰/۱۵").gregorian_year, 2024);
}

TEST(RecordDate, Rejects) {
  for (const char* bad : {"", "yesterday", "1402", "1402/13/01", "1402/07/31",
                          "Smarch 3, 1402", "1402/12/30"}) {
    EXPECT_LEXTOPIC_ERROR(parse_record_date(bad), ErrorCode::kMalformedDate);
  }
}

TEST(RecordDate, CanonicalForm) {
  const RecordDate d = make_record_date({1399, 12, 30});
  EXPECT_EQ(d.raw, "1399/12/30");
  EXPECT_EQ(d.gregorian_year, 2021);
  EXPECT_EQ(parse_record_date(d.raw), d);
}

}  // namespace
}  // namespace lextopic
