#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "subsetfactor/algebra.hpp"
#include "subsetfactor/error.hpp"
#include "subsetfactor/group.hpp"
#include "subsetfactor/notation.hpp"

namespace {

namespace sf = subsetfactor;
using sf::Element;

sf::Group make(const char* spec) { return sf::build_group(sf::parse_group_spec(spec)); }

std::map<std::size_t, std::size_t> order_histogram(const sf::Group& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

using Histogram = std::map<std::size_t, std::size_t>;

struct FamilyCase {
  const char* spec;
  std::size_t order;
  Histogram orders;  // element-order counts, an isomorphism invariant
  bool abelian;
};

class Families : public ::testing::TestWithParam<FamilyCase> {};

TEST_P(Families, OrderAndElementOrders) {
  const auto& c = GetParam();
  const sf::Group g = make(c.spec);
  EXPECT_EQ(g.order(), c.order);
  EXPECT_EQ(order_histogram(g), c.orders);
  EXPECT_EQ(g.is_abelian(), c.abelian);
  EXPECT_FALSE(sf::check_table(g.order(), g.table()).has_value());
}

INSTANTIATE_TEST_SUITE_P(
    Catalog, Families,
    ::testing::Values(FamilyCase{"C1", 1, {{1, 1}}, true}, FamilyCase{"C6", 6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, true},
                      FamilyCase{"C4xC2", 8, {{1, 1}, {2, 3}, {4, 4}}, true},
                      FamilyCase{"D4", 8, {{1, 1}, {2, 5}, {4, 2}}, false},
                      FamilyCase{"Q8", 8, {{1, 1}, {2, 1}, {4, 6}}, false},
                      FamilyCase{"S3", 6, {{1, 1}, {2, 3}, {3, 2}}, false},
                      FamilyCase{"A4", 12, {{1, 1}, {2, 3}, {3, 8}}, false},
                      FamilyCase{"S4", 24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, false},
                      FamilyCase{"A5", 60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, false},
                      FamilyCase{"sd(3,4,2)", 12, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, false},
                      FamilyCase{"sd(7,3,2)", 21, {{1, 1}, {3, 14}, {7, 6}}, false},
                      FamilyCase{"Heis3", 27, {{1, 1}, {3, 26}}, false},
                      FamilyCase{"D7", 14, {{1, 1}, {2, 7}, {7, 6}}, false},
                      FamilyCase{"C3xC3xC3", 27, {{1, 1}, {3, 26}}, true}),
    [](const auto& info) {
      std::string s = info.param.spec;
      for (char& ch : s) {
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      }
      return s;
    });

TEST(Semidirect, ConjugationByBRaisesToPowerT) {
  for (auto [m, k, t] : {std::tuple{7U, 3U, 2U}, {13U, 3U, 3U}, {11U, 5U, 4U}, {5U, 4U, 2U}, {4U, 4U, 3U}}) {
    sf::GroupSpec spec{sf::spec::SemidirectCyclic{m, k, t}};
    const sf::Group g = sf::build_group(spec);
    const Element a = *g.symbol("a");
    const Element b = *g.symbol("b");
    EXPECT_EQ(g.mul(g.mul(b, a), g.inv(b)), g.pow(a, t)) << spec.to_string();
    EXPECT_EQ(g.element_order(a), m);
    EXPECT_EQ(g.element_order(b), k);
  }
}

TEST(Semidirect, RejectsInvalidParameters) {
  EXPECT_THROW(sf::validate_spec(sf::GroupSpec{sf::spec::SemidirectCyclic{7, 3, 3}}), sf::InvalidGroup);
  EXPECT_THROW(sf::validate_spec(sf::GroupSpec{sf::spec::SemidirectCyclic{6, 2, 2}}), sf::InvalidGroup);
}

TEST(Heisenberg, CommutatorIsCentral) {
  const sf::Group g = make("Heis5");
  EXPECT_EQ(g.order(), 125U);
  const Element a = *g.symbol("a");
  const Element b = *g.symbol("b");
  const Element c = *g.symbol("c");
  const Element comm = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
  EXPECT_EQ(comm, c);
  for (Element x = 0; x < g.order(); ++x) EXPECT_EQ(g.mul(c, x), g.mul(x, c));
  EXPECT_THROW(make("Heis4"), sf::Error);
}

TEST(Permutations, ProductsActOnTheRight) {
  const sf::Group g = make("S3");
  const Element t = *g.find_element("(1,2)");
  const Element r = *g.find_element("(1,2,3)");
  // apply (1,2) first, then (1,2,3): 1->2->3, 3->3->1
  EXPECT_EQ(g.element_name(g.mul(t, r)), "(1,3)");
  EXPECT_EQ(g.element_name(g.identity()), "()");
  EXPECT_EQ(sf::permutation_from_cycles({{1, 2, 3}, {4, 5}}, 5).cycle_string(), "(1,2,3)(4,5)");
}

TEST(Permutations, ClosureRespectsCap) {
  const auto gens = std::vector<sf::Permutation>{sf::permutation_from_cycles({{1, 2, 3, 4, 5, 6}}, 6),
                                                 sf::permutation_from_cycles({{1, 2}}, 6)};
  EXPECT_EQ(sf::close_permutations(gens).order(), 720U);
  EXPECT_THROW(sf::close_permutations(gens, 100), sf::CapExceeded);
}

TEST(DirectProduct, LeftFactorVariesFastestAndSymbolsAreRenamed) {
  const sf::Group g = make("C2xC2");
  const std::vector<std::string> names(g.element_names().begin(), g.element_names().end());
  EXPECT_EQ(names, (std::vector<std::string>{"1", "a", "b", "a*b"}));
  const sf::Group h = make("C2xC2xC2xC2");
  EXPECT_TRUE(h.symbol("d").has_value());
  EXPECT_EQ(h.generators().size(), 4U);
}

TEST(TableChecks, ReportsFirstViolatedAxiom) {
  using Kind = sf::TableViolation::Kind;
  auto kind_of = [](std::vector<Element> flat, std::size_t n) { return sf::check_table(n, flat)->kind; };
  EXPECT_EQ(kind_of({0, 1, 2}, 2), Kind::shape);
  EXPECT_EQ(kind_of({0, 1, 1, 7}, 2), Kind::range);
  EXPECT_EQ(kind_of({0, 1, 1, 1}, 2), Kind::latin_row);
  EXPECT_EQ(kind_of({0, 1, 0, 1}, 2), Kind::latin_column);
  // x*y = x - y mod 3 is a quasigroup without identity
  EXPECT_EQ(kind_of({0, 2, 1, 1, 0, 2, 2, 1, 0}, 3), Kind::no_identity);
  // smallest non-associative loop
  const std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  const auto v = sf::check_table(5, loop);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, Kind::associativity);
  ASSERT_EQ(v->where.size(), 3U);
  const auto [x, y, z] = std::tuple{v->where[0], v->where[1], v->where[2]};
  EXPECT_NE(loop[loop[x * 5 + y] * 5 + z], loop[x * 5 + loop[y * 5 + z]]);
  EXPECT_THROW(sf::validate_table({{0, 1}, {1, 1}}), sf::InvalidGroup);
}

TEST(TableChecks, AcceptsValidatedTables) {
  const sf::Group g = sf::validate_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  EXPECT_EQ(g.identity(), 2U);
  EXPECT_EQ(g.inv(0), 1U);
  EXPECT_EQ(g.element_name(0), "e0");
}

TEST(Automorphisms, CountsMatchBruteForce) {
  // counts computed by an independent brute-force search over generator images
  const std::pair<const char*, std::size_t> cases[] = {{"C2xC2", 6},  {"C2xC2xC2", 168}, {"C3xC3", 48}, {"Q8", 24},
                                                       {"D4", 8},     {"S3", 6},         {"C8", 4},     {"C6", 2},
                                                       {"C4xC2", 8}, {"A4", 24}};
  for (const auto& [spec, count] : cases) {
    const sf::Group g = make(spec);
    const auto autos = sf::automorphisms(g);
    EXPECT_EQ(autos.size(), count) << spec;
    for (const auto& phi : autos) {
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) ASSERT_EQ(phi[g.mul(x, y)], g.mul(phi[x], phi[y]));
      }
    }
  }
}

TEST(Subgroups, GeneratedSubgroupMatchesNaiveClosure) {
  const sf::Group g = make("S4");
  const auto t = oracle::table_of(g);
  for (Element x = 0; x < g.order(); x += 5) {
    for (Element y = 0; y < g.order(); y += 7) {
      const auto h = sf::generated_subgroup(g, sf::Subset(g.order(), {x, y}));
      EXPECT_EQ(h.elements.members(), oracle::closure(t, {x, y}));
      EXPECT_TRUE(sf::is_subgroup(g, h.elements));
    }
  }
}

TEST(Subgroups, TransversalsGiveDirectFactorizations) {
  const sf::Group g = make("A4");
  const auto h = sf::generated_subgroup(g, sf::Subset(g.order(), {*g.find_element("(1,2,3)")}));
  const auto right = sf::right_transversal(g, h);
  const auto left = sf::left_transversal(g, h);
  EXPECT_TRUE(sf::verify_direct_factorization(g, h.elements, right.reps));
  EXPECT_TRUE(sf::verify_direct_factorization(g, left.reps, h.elements));
  EXPECT_EQ(right.reps.size(), 4U);
}

TEST(Subgroups, ViewReindexesWithIdentityFirst) {
  const sf::Group g = make("D4");
  const auto h = sf::generated_subgroup(g, sf::Subset(g.order(), {*g.symbol("a")}));
  const auto view = sf::subgroup_as_group(g, h);
  EXPECT_EQ(view.group.order(), 4U);
  EXPECT_EQ(view.group.identity(), 0U);
  EXPECT_TRUE(view.group.is_abelian());
  EXPECT_EQ(view.to_parent(view.to_local(h.elements), g.order()), h.elements);
}

TEST(Homomorphisms, ExtendsOnlyConsistentImages) {
  const sf::Group c4 = make("C4");
  const sf::Group c8 = make("C8");
  const Element a = *c8.symbol("a");
  const std::vector<Element> good{c8.pow(a, 2)};
  const std::vector<Element> bad{a};
  const auto phi = sf::extend_homomorphism(c4, c8, good);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ((*phi)[c4.pow(*c4.symbol("a"), 3)], c8.pow(a, 6));
  EXPECT_FALSE(sf::extend_homomorphism(c4, c8, bad).has_value());
}

TEST(Groups, PowersAndNames) {
  const sf::Group g = make("C12");
  const Element a = *g.symbol("a");
  EXPECT_EQ(g.pow(a, -1), g.inv(a));
  EXPECT_EQ(g.pow(a, 12), g.identity());
  EXPECT_EQ(g.element_name(g.pow(a, 5)), "a^5");
  EXPECT_EQ(g.find_element("a^5"), g.pow(a, 5));
  EXPECT_FALSE(g.find_element("zz").has_value());
}

}  // namespace
