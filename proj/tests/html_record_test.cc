#include "lextopic/html_record.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace lextopic {
namespace {

using testing::data_path;
using testing::read_file;

TEST(HtmlRecord, RegulationPage) {
  const LawRecord r = parse_html_record(read_file(data_path("regulation_page.html")));
  EXPECT_EQ(r.id, "reg-1402-0411");
  EXPECT_EQ(r.law_type, LawType::kRegulation);
  EXPECT_EQ(r.category, "The Council of Ministers");
  EXPECT_EQ(r.title,
            "The Executive Regulations of Clause A, Note 6 of Article One of the Budget Law "
            "of 1402 for the whole country.");
  EXPECT_EQ(r.content.rfind("The approval letter of the Council of Ministers meeting", 0), 0u);
  EXPECT_NE(r.content.find("single article of the budget law"), std::string::npos);
  EXPECT_NE(r.content.find("\"executive regulation"), std::string::npos);
  EXPECT_EQ(r.content.find("not content"), std::string::npos);
  EXPECT_EQ(r.tags.size(), 5u);
  EXPECT_EQ(r.tags.back(), "Unauthorized villa garden");
  EXPECT_EQ(r.classes.front(), "Regulations news");
  EXPECT_TRUE(r.lead.empty());
  EXPECT_EQ(r.date.jalali(), (calendar::JalaliDate{1402, 4, 11}));
  EXPECT_EQ(r.date.gregorian_year, 2023);
}

TEST(HtmlRecord, ParagraphsJoinWithSingleSpace) {
  const std::string page =
      "<article data-record-id=\"p1\"><h1 class=\"law-title\">T</h1>"
      "<div class=\"law-content\"><p>x</p><p>y</p></div>"
      "<ul class=\"law-tags\"></ul><ul class=\"law-classes\"></ul>"
      "<span class=\"law-type\">Law</span><span class=\"law-category\">C</span>"
      "<span class=\"law-date\">1401/01/01</span></article>";
  const LawRecord r = parse_html_record(page);
  EXPECT_EQ(r.content, "x y");
  EXPECT_TRUE(r.tags.empty());
}

TEST(HtmlRecord, MissingDateRegion) {
  try {
    parse_html_record(read_file(data_path("page_without_date.html")));
    FAIL() << "expected StructureMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStructureMismatch);
    EXPECT_EQ(e.detail(), "date");
  }
}

TEST(HtmlRecord, StripMarkup) {
  EXPECT_EQ(strip_markup("<p>a &amp; b</p>\n\n<br/><b>c</b>"), "a & b c");
  EXPECT_EQ(strip_markup("x<script>var s = '<p>';</script>y"), "x y");
  EXPECT_EQ(strip_markup("&#1602;&#x627;&lt;"), "قا<");
  EXPECT_EQ(strip_markup(""), "");
}

TEST(HtmlRecord, FindByClassHandlesNesting) {
  const std::string html =
      "<div class=\"outer law-content\"><div>inner</div> tail</div><div class=\"law-content\">2</div>";
  const auto found = find_by_class(html, "law-content");
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(*found, "<div>inner</div> tail");
  EXPECT_FALSE(find_by_class(html, "law").has_value());
}

}  // namespace
}  // namespace lextopic
