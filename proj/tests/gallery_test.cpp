#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "stringy/errors.hpp"
#include "stringy/gallery.hpp"
#include "stringy/hodge.hpp"
#include "stringy/invariants.hpp"

using namespace stringy;

namespace {

// Every invariant the golden suite knows how to recompute.
std::map<std::string, Rat> recompute(const GalleryEntry& g) {
  const StringyFunction f = stringy_function(g.data);
  std::map<std::string, Rat> out{
      {"e_st", stringy_euler(g.data)},
      {"c_st_1_n1", c_st_1_n1(g.data)},
      {"d1_at_one", derivative_at_one(f, 1)},
      {"d2_at_one", derivative_at_one(f, 2)},
  };
  if (g.data.divisor_count() == 0) {
    const BiPoly& e = g.data.stratum(0).e;
    const int n = g.data.dimension();
    out["euler"] = Rat(euler_number(e));
    out["c1_cn1"] = inferred_c1_cn1(e, n);
  }
  return out;
}

bool same_data(const ResolutionData& a, const ResolutionData& b) {
  if (a.dimension() != b.dimension() || a.divisor_count() != b.divisor_count()) return false;
  for (std::size_t i = 0; i < a.divisor_count(); ++i) {
    if (a.divisors()[i].id != b.divisors()[i].id ||
        a.divisors()[i].discrepancy != b.divisors()[i].discrepancy) {
      return false;
    }
  }
  for (Subset j = 0; j < a.subset_count(); ++j) {
    const StratumData& x = a.stratum(j);
    const StratumData& y = b.stratum(j);
    if (!(x.e == y.e) || x.euler != y.euler || x.c1_cd1 != y.c1_cd1 ||
        x.pullback_c1_cd1 != y.pullback_c1_cd1 || x.normal_restrictions != y.normal_restrictions) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST(Gallery, ElevenNamedEntries) {
  const auto& names = builtin_names();
  EXPECT_EQ(names.size(), 11U);
  for (const auto& n : names) EXPECT_EQ(builtin(n).name, n);
  EXPECT_THROW(builtin("nosuch"), DomainError);
}

TEST(Gallery, GoldenValues) {
  for (const auto& name : builtin_names()) {
    const GalleryEntry g = builtin(name);
    ASSERT_TRUE(validate(g.data).empty()) << name;
    const auto computed = recompute(g);
    for (const char* key : {"e_st", "c_st_1_n1", "d1_at_one", "d2_at_one"}) {
      EXPECT_TRUE(g.expected.count(key)) << name << " lacks " << key;
    }
    for (const auto& [key, expected] : g.expected) {
      ASSERT_TRUE(computed.count(key)) << name << ": " << key;
      EXPECT_EQ(computed.at(key), expected.value) << name << ": " << key;
      EXPECT_FALSE(expected.provenance.empty()) << name << ": " << key;
    }
  }
}

TEST(Gallery, GoldenStringyHodgeNumbers) {
  for (const auto& name : builtin_names()) {
    const GalleryEntry g = builtin(name);
    if (!g.data.gorenstein_canonical()) {
      EXPECT_FALSE(g.expected_hodge.has_value()) << name;
      EXPECT_THROW(stringy_hodge_numbers(g.data), NotApplicableError) << name;
      continue;
    }
    ASSERT_TRUE(g.expected_hodge.has_value()) << name;
    const StringyHodgeResult h = stringy_hodge_numbers(g.data);
    ASSERT_TRUE(h.exists()) << name;
    EXPECT_EQ(*h.table, *g.expected_hodge) << name;
    EXPECT_TRUE(h.property_violations.empty()) << name;
    EXPECT_FALSE(g.hodge_provenance.empty()) << name;
  }
}

TEST(Gallery, SpotValues) {
  EXPECT_EQ(builtin("wp112").expected.at("e_st").value, Rat(4));
  EXPECT_EQ(builtin("wp112").expected.at("c_st_1_n1").value, Rat(8));
  EXPECT_EQ(builtin("k3").expected.at("e_st").value, Rat(24));
  EXPECT_EQ(builtin("blowup_p2_point").expected.at("e_st").value,
            builtin("p2").expected.at("e_st").value);
  EXPECT_EQ(builtin("quintic").expected.at("euler").value, Rat(-200));
  EXPECT_EQ(builtin("sextic_cy4").expected.at("euler").value, Rat(2610));
}

TEST(Gallery, SmoothEntriesSatisfyTheSmoothIdentity) {
  for (const auto& name : builtin_names()) {
    const GalleryEntry g = builtin(name);
    if (g.data.divisor_count() != 0) continue;
    const BiPoly& e = g.data.stratum(0).e;
    const ChernData chern{euler_number(e), g.expected.at("c1_cn1").value};
    EXPECT_TRUE(libgober_wood_check(e, g.data.dimension(), chern).passed()) << name;
    if (g.calabi_yau) EXPECT_TRUE(cy_relation_check(e, g.data.dimension()).passed()) << name;
  }
}

TEST(Generator, DeterministicPerSeed) {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 9001ULL}) {
    EXPECT_TRUE(same_data(random_consistent(seed, 3, 3, 6), random_consistent(seed, 3, 3, 6)));
  }
  EXPECT_FALSE(same_data(random_consistent(1, 3, 3, 6), random_consistent(2, 3, 3, 6)));
}

TEST(Generator, SeedOneSurfaceWithOneDivisor) {
  const ResolutionData d = random_consistent(1, 2, 1, 6);
  EXPECT_TRUE(validate(d).empty());
  EXPECT_TRUE(check_euler_limit(d).passed());
  EXPECT_TRUE(check_first_derivative_identity(d).passed());
  EXPECT_TRUE(check_main_identity(d).passed());
  EXPECT_TRUE(check_relat_div(d).passed());
  EXPECT_TRUE(check_adjunction_recursion(d).passed());
}

TEST(Generator, NoDivisorsGivesSmoothCase) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ResolutionData d = random_consistent(seed, 1 + static_cast<int>(seed % 4), 0, 6);
    EXPECT_EQ(stringy_euler(d), Rat(d.stratum(0).e.value_at_one()));
  }
}

TEST(Generator, DiscrepanciesInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ResolutionData d = random_consistent(seed, 2, 3, 6);
    for (const auto& div : d.divisors()) {
      EXPECT_GT(div.discrepancy, Rat(-1));
      EXPECT_LE(div.discrepancy, Rat(3));
      EXPECT_LE(div.discrepancy.denominator(), 6);
    }
  }
}

TEST(Generator, RejectsBadArguments) {
  EXPECT_THROW(random_consistent(0, 0, 1, 6), DomainError);
  EXPECT_THROW(random_consistent(0, 2, -1, 6), DomainError);
  EXPECT_THROW(random_consistent(0, 2, 1, 0), DomainError);
}

TEST(Generator, FiveHundredData) {
  int index = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int r = 0; r <= 3; ++r) {
      for (int k = 0; k < 32 && index < 500; ++k, ++index) {
        const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(index);
        const ResolutionData d = random_consistent(seed, n, r, 6);
        ASSERT_TRUE(validate(d).empty()) << "seed " << seed;
        EXPECT_TRUE(check_first_derivative_identity(d).passed()) << "seed " << seed;
        EXPECT_TRUE(check_main_identity(d).passed()) << "seed " << seed;

        std::vector<std::size_t> order(static_cast<std::size_t>(r));
        std::iota(order.begin(), order.end(), 0);
        std::reverse(order.begin(), order.end());
        EXPECT_EQ(stringy_euler(d), stringy_euler(d.relabeled(order))) << "seed " << seed;
      }
    }
  }
  EXPECT_EQ(index, 500);
}
