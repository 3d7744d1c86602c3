#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bures/coefficients.hpp"

using namespace bures;

TEST(Coefficients, TablesLoadWithExpectedShape) {
  EXPECT_EQ(coefficient_table(TableId::IA).entries.size(), 8u);
  EXPECT_EQ(coefficient_table(TableId::IBC).entries.size(), 12u);
  EXPECT_EQ(coefficient_table(TableId::ID).entries.size(), 7u);
}

TEST(Coefficients, EmbeddedTextMatchesDataFile) {
  std::ifstream f(std::string(BURES_DATA_DIR) + "/coefficients.txt", std::ios::binary);
  ASSERT_TRUE(f) << "data file missing";
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str(), std::string(detail::kCoefficientText));
}

TEST(Coefficients, FrozenEntries) {
  const auto& id = coefficient_table(TableId::ID);
  EXPECT_EQ(eval_coefficient_exact(id, "d5", 1, rational(0)), rational(-72));
  EXPECT_EQ(eval_coefficient_exact(id, "d6", 1, rational(-1, 2)), rational(192));
  EXPECT_DOUBLE_EQ(eval_coefficient<double>(id, "d5", 1, 0.0), -72.0);
  EXPECT_DOUBLE_EQ(eval_coefficient<double>(id, "d6", 1, -0.5), 192.0);
}

TEST(Coefficients, ExactAndFloatingPathsAgree) {
  for (const TableId t : {TableId::IA, TableId::IBC, TableId::ID}) {
    const auto& tab = coefficient_table(t);
    for (const auto& [name, monos] : tab.entries) {
      for (int m = 1; m <= 10; ++m) {
        for (double a : {-0.5, 0.25, 1.5, 2.75}) {
          const long double exact = eval_coefficient<long double>(tab, name, m, a);
          const long double flt = eval_coefficient_as<long double>(tab, name, m, static_cast<long double>(a));
          EXPECT_LE(std::fabs(static_cast<double>(exact - flt)), 1e-12 * std::max(1.0L, std::fabs(exact)))
              << to_string(t) << " " << name << " m=" << m << " a=" << a;
        }
      }
    }
  }
}

TEST(Coefficients, DyadicDetection) {
  EXPECT_EQ(*detail::dyadic(2.75), rational(11, 4));
  EXPECT_EQ(*detail::dyadic(-0.5), rational(-1, 2));
  EXPECT_FALSE(detail::dyadic(0.1).has_value());
}

TEST(Coefficients, UnknownEntryThrows) {
  EXPECT_THROW(eval_coefficient<double>(coefficient_table(TableId::IA), "a8", 2, 0.5), lookup_error);
  EXPECT_THROW(eval_coefficient<double>(coefficient_table(TableId::ID), "bc0", 2, 0.5), lookup_error);
}

TEST(Coefficients, CorruptedTextIsRejected) {
  std::string text(detail::kCoefficientText);
  const auto pos = text.find("-576");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 4, "-575");
  EXPECT_THROW(detail::parse_coefficient_text(text), data_error);
  EXPECT_THROW(detail::parse_coefficient_text("IA a0 1 1 1\n"), data_error);
  EXPECT_THROW(detail::parse_coefficient_text("IA a0 x\nchecksum fnv1a64 0\n"), data_error);
}
