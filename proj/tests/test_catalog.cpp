#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace avgord;

TEST(Catalog, ShippedCountsMatchClassification) {
  const std::vector<std::size_t> classical = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1,
                                              14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4};
  std::vector<std::size_t> counts(31, 0);
  for (const auto& e : shipped_catalog()) {
    ASSERT_LE(e.order, 30u);
    ++counts[e.order];
  }
  for (std::size_t n = 1; n <= 30; ++n) EXPECT_EQ(counts[n], classical[n - 1]) << "order " << n;
  EXPECT_EQ(shipped_catalog().size(), 92u);
}

TEST(Catalog, ShippedEntriesAreOrderedAndIndexed) {
  const auto& cat = shipped_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_TRUE(cat[i].expected.has_value()) << cat[i].label();
    if (i == 0 || cat[i - 1].order != cat[i].order) {
      EXPECT_EQ(cat[i].index, 1u) << cat[i].label();
    } else {
      EXPECT_EQ(cat[i].index, cat[i - 1].index + 1) << cat[i].label();
    }
  }
}

TEST(Catalog, EmptyTextIsAnEmptyCatalog) {
  EXPECT_TRUE(parse_catalog("").empty());
  EXPECT_TRUE(parse_catalog("# only a comment\n\n").empty());
  EXPECT_NO_THROW(validate_catalog({}));
}

TEST(Catalog, ParsesFullBlock) {
  auto entries = parse_catalog(
      "# header comment\n"
      "12/3/A4/4\n"
      "(0 1 2)\n"
      "(0 1)(2 3)\n"
      "expect spectrum=1:1,2:3,3:8 abelian=0 supersolvable=0\n"
      "\n"
      "\n"
      "1/1/C1/1\r\n"
      "()\r\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].name, "A4");
  EXPECT_EQ(entries[0].degree, 4u);
  EXPECT_EQ(entries[0].generators.size(), 2u);
  EXPECT_EQ(entries[0].line, 2u);
  ASSERT_TRUE(entries[0].expected.has_value());
  EXPECT_EQ(entries[0].expected->spectrum->count(3), 8u);
  EXPECT_EQ(entries[0].expected->supersolvable, false);
  EXPECT_FALSE(entries[1].expected.has_value());
  EXPECT_NO_THROW(validate_catalog(entries));
}

TEST(Catalog, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_catalog(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("12/3/A4\n(0 1 2)\n"), 1u);
  EXPECT_EQ(line_of("6/1/S3/3\n(0 1 2)\n(0 9)\n"), 3u);
  EXPECT_EQ(line_of("6/1/S3/3\n(0 1 2)\nbogus\n"), 3u);
  EXPECT_EQ(line_of("6/1/S3/3\n\n"), 2u);
  EXPECT_EQ(line_of("6/1/S3/3\n(0 1 2)\nexpect abelian=2\n"), 3u);
  EXPECT_EQ(line_of("6/1/S3/3\n(0 1 2)\nexpect colour=1\n"), 3u);
  EXPECT_EQ(line_of("6/1/S3/3\n(0 1 2)\nexpect abelian=0\n(0 1)\n"), 4u);
  EXPECT_EQ(line_of("x/1/S3/3\n(0 1 2)\n"), 1u);
  EXPECT_EQ(line_of("0/1/T/3\n(0 1 2)\n"), 1u);
}

TEST(Catalog, OrderMismatchNamesEntry) {
  auto entries = parse_catalog("12/1/Fake/3\n(0 1 2)\n(0 1)\n");
  try {
    validate_catalog(entries);
    FAIL() << "expected CatalogError";
  } catch (const CatalogError& e) {
    EXPECT_NE(std::string(e.what()).find("12/1 (Fake)"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("order 6"), std::string::npos) << e.what();
  }
}

TEST(Catalog, IsomorphicDuplicateNamesBoth) {
  auto entries = parse_catalog("6/1/S3/3\n(0 1 2)\n(0 1)\n\n6/2/D6/6\n(0 1 2)(3 4 5)\n(0 3)(1 5)(2 4)\n");
  try {
    validate_catalog(entries);
    FAIL() << "expected CatalogError";
  } catch (const CatalogError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("6/1 (S3)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("6/2 (D6)"), std::string::npos) << msg;
  }
}

TEST(Catalog, DuplicateIdsAndFailedExpectations) {
  EXPECT_THROW(validate_catalog(parse_catalog("2/1/C2/2\n(0 1)\n\n2/1/C2b/2\n(0 1)\n")), CatalogError);
  EXPECT_THROW(validate_catalog(parse_catalog("3/1/C3/3\n(0 1 2)\nexpect abelian=0\n")), CatalogError);
  EXPECT_THROW(validate_catalog(parse_catalog("3/1/C3/3\n(0 1 2)\nexpect spectrum=1:1,3:1\n")), CatalogError);
  EXPECT_THROW(validate_catalog(parse_catalog("3/1/C3/3\n(0 1 2)\nexpect supersolvable=0\n")), CatalogError);
}

TEST(Catalog, MissingFile) { EXPECT_THROW(load_catalog("/nonexistent/catalog.txt"), Error); }
