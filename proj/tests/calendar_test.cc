#include "lextopic/calendar.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace lextopic::calendar {
namespace {

struct DatePair {
  JalaliDate jalali;
  GregorianDate gregorian;
};

// Cross-checked with two independent converters.
const DatePair kKnownDates[] = {
    {{1395, 1, 1}, {2016, 3, 20}},   {{1395, 4, 15}, {2016, 7, 5}},
    {{1395, 10, 10}, {2016, 12, 30}}, {{1395, 10, 12}, {2017, 1, 1}},
    {{1395, 12, 30}, {2017, 3, 20}}, {{1396, 1, 1}, {2017, 3, 21}},
    {{1396, 10, 11}, {2018, 1, 1}},  {{1397, 6, 31}, {2018, 9, 22}},
    {{1397, 10, 10}, {2018, 12, 31}}, {{1398, 1, 1}, {2019, 3, 21}},
    {{1398, 10, 11}, {2020, 1, 1}},  {{1399, 12, 30}, {2021, 3, 20}},
    {{1400, 1, 1}, {2021, 3, 21}},   {{1400, 10, 11}, {2022, 1, 1}},
    {{1401, 7, 1}, {2022, 9, 23}},   {{1401, 10, 10}, {2022, 12, 31}},
    {{1402, 1, 1}, {2023, 3, 21}},   {{1402, 4, 10}, {2023, 7, 1}},
    {{1402, 10, 11}, {2024, 1, 1}},  {{1402, 10, 15}, {2024, 1, 5}},
    {{1402, 12, 29}, {2024, 3, 19}}, {{1403, 12, 30}, {2025, 3, 20}},
    {{1380, 10, 11}, {2002, 1, 1}},  {{1367, 5, 20}, {1988, 8, 11}},
};

TEST(Calendar, KnownConversionsBothWays) {
  for (const auto& [j, g] : kKnownDates) {
    EXPECT_EQ(jalali_to_gregorian(j), g) << j.year << "/" << j.month << "/" << j.day;
    EXPECT_EQ(gregorian_to_jalali(g), j) << g.year << "-" << g.month << "-" << g.day;
    EXPECT_EQ(jalali_to_gregorian_year(j.year, j.month, j.day), g.year);
  }
}

TEST(Calendar, GregorianYearExamples) {
  EXPECT_EQ(jalali_to_gregorian_year(1402, 1, 1), 2023);
  EXPECT_EQ(jalali_to_gregorian_year(1402, 10, 15), 2024);
  EXPECT_EQ(jalali_to_gregorian_year(1395, 4, 15), 2016);
}

TEST(Calendar, LeapYears) {
  for (int y : {1395, 1399, 1403, 1408}) EXPECT_TRUE(is_jalali_leap_year(y)) << y;
  for (int y : {1396, 1400, 1401, 1402, 1404}) EXPECT_FALSE(is_jalali_leap_year(y)) << y;
  EXPECT_EQ(jalali_month_length(1402, 1), 31);
  EXPECT_EQ(jalali_month_length(1402, 7), 30);
  EXPECT_EQ(jalali_month_length(1402, 12), 29);
  EXPECT_EQ(jalali_month_length(1403, 12), 30);
}

TEST(Calendar, RejectsImpossibleDays) {
  EXPECT_LEXTOPIC_ERROR(validate_jalali({1402, 13, 1}), ErrorCode::kMalformedDate);
  EXPECT_LEXTOPIC_ERROR(validate_jalali({1402, 0, 1}), ErrorCode::kMalformedDate);
  EXPECT_LEXTOPIC_ERROR(validate_jalali({1402, 7, 31}), ErrorCode::kMalformedDate);
  EXPECT_LEXTOPIC_ERROR(validate_jalali({1402, 12, 30}), ErrorCode::kMalformedDate);
  EXPECT_LEXTOPIC_ERROR(validate_jalali({1402, 1, 0}), ErrorCode::kMalformedDate);
  EXPECT_LEXTOPIC_ERROR(jalali_to_gregorian_year(1402, 11, 31), ErrorCode::kMalformedDate);
  EXPECT_NO_THROW(validate_jalali({1403, 12, 30}));
}

TEST(Calendar, ConsecutiveDaysAdvanceByOneAndYearIsMonotone) {
  JalaliDate d{1390, 1, 1};
  std::int64_t jdn = jalali_to_day_number(d);
  int previous_year = jalali_to_gregorian_year(d.year, d.month, d.day);
  while (d.year < 1410) {
    const JalaliDate next = day_number_to_jalali(jdn + 1);
    ASSERT_GT(next, d);
    ASSERT_EQ(jalali_to_day_number(next), jdn + 1);
    const int year = jalali_to_gregorian_year(next.year, next.month, next.day);
    ASSERT_GE(year, previous_year);
    ASSERT_TRUE(year == next.year + 621 || year == next.year + 622);
    previous_year = year;
    d = next;
    ++jdn;
  }
}

TEST(Calendar, GregorianDayNumbersRoundTrip) {
  for (std::int64_t jdn = 2440000; jdn < 2470000; jdn += 37) {
    EXPECT_EQ(gregorian_to_day_number(day_number_to_gregorian(jdn)), jdn);
  }
  // 1 January 2000 is JDN 2451545.
  EXPECT_EQ(gregorian_to_day_number({2000, 1, 1}), 2451545);
}

}  // namespace
}  // namespace lextopic::calendar
