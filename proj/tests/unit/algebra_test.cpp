#include <gtest/gtest.h>

#include <random>

#include "subsetfactor/algebra.hpp"
#include "subsetfactor/error.hpp"
#include "subsetfactor/notation.hpp"

namespace {

namespace sf = subsetfactor;
using sf::Element;
using sf::Subset;

sf::Group make(const char* spec) { return sf::build_group(sf::parse_group_spec(spec)); }

TEST(Product, ReportsFirstCollisionInPairOrder) {
  const sf::Group g = make("C4");
  const Subset a = sf::parse_subset(g, "1,a");
  const auto r = sf::product(g, a, a);
  EXPECT_FALSE(r.direct);
  ASSERT_TRUE(r.collision.has_value());
  EXPECT_EQ(r.collision->x, *g.symbol("a"));
  EXPECT_EQ(r.collision->a, g.identity());
  EXPECT_EQ(r.collision->a2, *g.symbol("a"));
  EXPECT_EQ(r.product, sf::parse_subset(g, "1,a,a^2"));
}

TEST(Product, DirectFactorizationCheck) {
  const sf::Group g = make("C4");
  EXPECT_TRUE(sf::verify_direct_factorization(g, sf::parse_subset(g, "1,a"), sf::parse_subset(g, "1,a^2")));
  EXPECT_TRUE(sf::verify_direct_factorization(g, sf::parse_subset(g, "1,a^3"), sf::parse_subset(g, "1,a^2")));
  EXPECT_FALSE(sf::verify_direct_factorization(g, sf::parse_subset(g, "1,a^2"), sf::parse_subset(g, "1,a^2")));
  EXPECT_FALSE(sf::verify_direct_factorization(g, sf::parse_subset(g, "1,a"), sf::parse_subset(g, "1")));
  const sf::Group h = make("C5");
  EXPECT_THROW(sf::product(g, sf::Subset(5), sf::Subset(4)), sf::PreconditionError);
  (void)h;
}

TEST(Translate, SidesAndInversion) {
  const sf::Group g = make("S3");
  const Subset a = sf::parse_subset(g, "(),(1,2)");
  const Element r = *g.find_element("(1,2,3)");
  Subset left(6);
  Subset right(6);
  a.for_each([&](Element x) {
    left.insert(g.mul(r, x));
    right.insert(g.mul(x, r));
  });
  EXPECT_EQ(sf::translate(g, a, r, sf::Side::left), left);
  EXPECT_EQ(sf::translate(g, a, r, sf::Side::right), right);
  EXPECT_NE(left, right);
  const Subset b = sf::parse_subset(g, "(1,2,3),(1,2)");
  EXPECT_EQ(sf::invert_set(g, b), sf::parse_subset(g, "(1,3,2),(1,2)"));
}

TEST(Lagrange, DividesOrder) {
  const sf::Group g = make("C6");
  EXPECT_TRUE(sf::is_lagrange(g, sf::parse_subset(g, "1,a,a^2")));
  EXPECT_FALSE(sf::is_lagrange(g, sf::parse_subset(g, "1,a,a^2,a^3")));
  EXPECT_THROW(sf::is_lagrange(g, Subset(6)), sf::PreconditionError);
}

TEST(CanonLevel, ParsesNames) {
  EXPECT_EQ(sf::canon_level_from_string("L2"), sf::CanonLevel::L2);
  EXPECT_EQ(sf::canon_level_from_string("none"), sf::CanonLevel::none);
  EXPECT_FALSE(sf::canon_level_from_string("L4").has_value());
  EXPECT_EQ(sf::to_string(sf::CanonLevel::L3), "L3");
}

class CanonicalForms : public ::testing::TestWithParam<const char*> {};

// The canonical form is constant on orbits, idempotent, contains 1, and
// is_canonical agrees with it.
TEST_P(CanonicalForms, AreOrbitInvariants) {
  const sf::Group g = make(GetParam());
  const std::size_t n = g.order();
  const auto autos = sf::automorphisms(g);
  std::mt19937 rng(0x5eed);
  for (int trial = 0; trial < 60; ++trial) {
    Subset a(n);
    a.insert(g.identity());
    while (a.size() < 1 + rng() % (n - 1)) a.insert(static_cast<Element>(rng() % n));
    const Element x = static_cast<Element>(rng() % n);
    const Element y = static_cast<Element>(rng() % n);
    const Element phi_pick = static_cast<Element>(rng() % autos.size());
    for (auto level : {sf::CanonLevel::L1, sf::CanonLevel::L2, sf::CanonLevel::L3}) {
      const Subset c = sf::canonical_form(g, a, level, &autos);
      EXPECT_TRUE(c.contains(g.identity()));
      EXPECT_EQ(sf::canonical_form(g, c, level, &autos), c);
      EXPECT_TRUE(sf::is_canonical(g, c, level, &autos));
      EXPECT_EQ(sf::is_canonical(g, a, level, &autos), c == a);
      EXPECT_LE(c, a);
      // a^-1 A lies in every level's orbit
      const Subset shifted = sf::translate(g, a, g.inv(a.members().back()), sf::Side::left);
      EXPECT_EQ(sf::canonical_form(g, shifted, level, &autos), c);
      if (level == sf::CanonLevel::L1) continue;
      const Subset moved = sf::translate(g, sf::translate(g, sf::invert_set(g, a), x, sf::Side::left), y,
                                         sf::Side::right);
      EXPECT_EQ(sf::canonical_form(g, moved, level, &autos), c);
      if (level == sf::CanonLevel::L3) {
        Subset image(n);
        a.for_each([&](Element z) { image.insert(autos[phi_pick][z]); });
        EXPECT_EQ(sf::canonical_form(g, image, level, &autos), c);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, CanonicalForms, ::testing::Values("C8", "D4", "Q8", "A4", "C3xC3", "sd(3,4,2)"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return s;
                         });

TEST(CanonicalForms, NoneLevelOnlyShiftsToContainIdentity) {
  const sf::Group g = make("C6");
  const Subset a = sf::parse_subset(g, "a,a^3");
  EXPECT_EQ(sf::canonical_form(g, a, sf::CanonLevel::none), sf::parse_subset(g, "1,a^2"));
  EXPECT_FALSE(sf::is_canonical(g, a, sf::CanonLevel::none));
  EXPECT_THROW(sf::canonical_form(g, Subset(6), sf::CanonLevel::L1), sf::PreconditionError);
}

}  // namespace
