#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "subsetfactor/error.hpp"
#include "subsetfactor/notation.hpp"

namespace {

namespace sf = subsetfactor;

sf::Group make(const char* spec) { return sf::build_group(sf::parse_group_spec(spec)); }

TEST(GroupSpecGrammar, RoundTripsCanonicalText) {
  const std::pair<const char*, const char*> cases[] = {
      {"C4", "C4"},
      {"c2xc2", "C2xC2"},
      {"C2 x C3 x C4", "C2xC3xC4"},
      {"C2x(C3xC4)", "C2x(C3xC4)"},
      {"d4", "D4"},
      {"q8", "Q8"},
      {"HEIS3", "Heis3"},
      {"sd(7, 3, 2)", "sd(7,3,2)"},
      {"perm:[(1,2,3);(1,2)]", "perm:[(1,2,3);(1,2)]"},
      {"A4", "A4"},
      {"S3xC2", "S3xC2"},
  };
  for (const auto& [text, canonical] : cases) {
    const sf::GroupSpec spec = sf::parse_group_spec(text);
    EXPECT_EQ(spec.to_string(), canonical) << text;
    EXPECT_EQ(sf::parse_group_spec(spec.to_string()), spec);
  }
}

TEST(GroupSpecGrammar, ErrorsCarryPositions) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"", 0}, {"Z5", 0}, {"C2xZ", 3}, {"C2x", 3}, {"sd(7,3", 6}, {"C2)", 2},
  };
  for (const auto& [text, position] : cases) {
    try {
      sf::parse_group_spec(text);
      ADD_FAILURE() << "accepted '" << text << "'";
    } catch (const sf::ParseError& e) {
      EXPECT_EQ(e.position(), position) << text << ": " << e.what();
    }
  }
  EXPECT_THROW(sf::parse_group_spec("C0"), sf::ParseError);
  EXPECT_THROW(sf::parse_group_spec("Heis4"), sf::ParseError);
  EXPECT_THROW(sf::parse_group_spec("sd(7,3,3)"), sf::ParseError);
}

TEST(Words, ParsesFactorsAndExponents) {
  const auto w = sf::parse_word("a^2*b^-1*c");
  ASSERT_EQ(w.size(), 3U);
  EXPECT_EQ(w[0].name, "a");
  EXPECT_EQ(w[0].exponent, 2);
  EXPECT_EQ(w[1].exponent, -1);
  EXPECT_EQ(w[2].exponent, 1);
  const auto one = sf::parse_word("1");
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].name, "1");
  for (const char* bad : {"", "a^0", "a^", "*a", "a**b", "2a", "a*", "a^-"}) {
    EXPECT_THROW(sf::parse_word(bad), sf::ParseError) << bad;
  }
}

TEST(Words, EvaluatesInTheGroup) {
  const sf::Group g = make("D4");
  const auto a = *g.symbol("a");
  const auto b = *g.symbol("b");
  EXPECT_EQ(sf::parse_element_word(g, "a^2*b"), g.mul(g.pow(a, 2), b));
  EXPECT_EQ(sf::parse_element_word(g, "b*a"), sf::parse_element_word(g, "a^-1*b"));
  EXPECT_EQ(sf::parse_element_word(g, "1"), g.identity());
  EXPECT_THROW(sf::parse_element_word(g, "z"), sf::ParseError);
  const sf::Group s3 = make("S3");
  EXPECT_EQ(sf::parse_element_word(s3, "(1,3)"), *s3.find_element("(1,3)"));
  const sf::Group q = make("Q8");
  EXPECT_EQ(sf::parse_element_word(q, "i*j"), *q.find_element("k"));
  EXPECT_EQ(sf::parse_element_word(q, "i^2"), *q.find_element("-1"));
}

TEST(Subsets, ParseAndFormat) {
  const sf::Group g = make("C4");
  const sf::Subset a = sf::parse_subset(g, "{1, a^2}");
  EXPECT_EQ(a.size(), 2U);
  EXPECT_EQ(sf::format_subset(g, a), "{1, a^2}");
  EXPECT_EQ(sf::format_subset(g, sf::Subset(4)), "{}");
  EXPECT_EQ(sf::parse_subset(g, std::vector<std::string>{"a", "a^-1"}), sf::parse_subset(g, "a^3,a"));
  const sf::Group s3 = make("S3");
  EXPECT_EQ(sf::split_word_list("(),(1,2,3), (1,2)"), (std::vector<std::string>{"()", "(1,2,3)", "(1,2)"}));
  EXPECT_EQ(sf::parse_subset(s3, "(),(1,2,3)").size(), 2U);
  EXPECT_THROW(sf::parse_subset(g, "1,,a"), sf::ParseError);
}

TEST(Files, SubsetFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "subsetfactor_notation_test.json";
  {
    std::ofstream out(path);
    out << sf::to_json(sf::SubsetFile{"D4", {"1", "a", "b", "a^2*b"}}).dump();
  }
  const sf::SubsetFile file = sf::load_subset_file(path.string());
  EXPECT_EQ(file.group, "D4");
  EXPECT_EQ(file.elements.size(), 4U);
  std::filesystem::remove(path);
  EXPECT_THROW(sf::load_subset_file("/nonexistent/subset.json"), sf::Error);
}

TEST(Files, GroupFileRoundTrip) {
  const sf::Group g = make("S3");
  const auto path = std::filesystem::temp_directory_path() / "subsetfactor_group_test.json";
  {
    std::ofstream out(path);
    out << sf::group_to_json(g).dump();
  }
  const sf::Group back = sf::build_group(sf::parse_group_spec("file:" + path.string()));
  EXPECT_EQ(back.order(), 6U);
  for (sf::Element x = 0; x < 6; ++x) {
    for (sf::Element y = 0; y < 6; ++y) EXPECT_EQ(back.mul(x, y), g.mul(x, y));
  }
  EXPECT_EQ(back.element_name(1), g.element_name(1));
  std::filesystem::remove(path);
}

TEST(Envelope, SerializesFixedKeys) {
  sf::ReportEnvelope env;
  env.command = "factor";
  env.group = "C4";
  env.group_order = 4;
  env.verdict = "two_sided";
  env.complement = std::vector<std::string>{"1", "a^2"};
  env.counters["search_nodes"] = 3;
  const auto j = sf::to_json(env);
  EXPECT_EQ(j.at("order"), 4);
  EXPECT_EQ(j.at("complement").size(), 2U);
  EXPECT_FALSE(j.contains("witness"));
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

}  // namespace
