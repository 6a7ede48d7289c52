#include <gtest/gtest.h>

#include "pncalc/error.hpp"
#include "pncalc/fixtures.hpp"
#include "pncalc/report.hpp"

namespace pncalc {
namespace {

TEST(Fixtures, ReproduceExpectedSuiteStatuses) {
  for (const auto& name : fixture_names()) {
    const Fixture f = load_fixture(name);
    const CheckReport r = run_checks(f.structure, RunOptions{});
    for (const Suite suite : all_suites())
      EXPECT_EQ(to_string(r.suite_status(suite)), f.expected.at(to_string(suite))) << name << " " << to_string(suite);
    EXPECT_FALSE(r.unverified());
  }
}

TEST(Fixtures, Lookup) {
  EXPECT_EQ(fixture_names().size(), 4U);
  EXPECT_THROW(load_fixture("FIX-Z"), UnknownFixture);
  EXPECT_EQ(load_fixture("FIX-A").structure.name, "FIX-A");
}

TEST(Generators, Deterministic) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(random_compatible(seed, GeneratorKind::dim2_general), random_compatible(seed, GeneratorKind::dim2_general));
    EXPECT_EQ(random_compatible(seed, GeneratorKind::dim4_blockdiag),
              random_compatible(seed, GeneratorKind::dim4_blockdiag));
    EXPECT_EQ(random_admissible_incompatible(seed), random_admissible_incompatible(seed));
  }
  EXPECT_NE(random_compatible(0, GeneratorKind::dim4_blockdiag), random_compatible(1, GeneratorKind::dim4_blockdiag));
}

class GeneratedPairs : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(GeneratedPairs, CompatibleHierarchyIsPoisson) {
  for (const GeneratorKind kind : {GeneratorKind::dim2_general, GeneratorKind::dim4_blockdiag}) {
    const Structure s = materialize(random_compatible(GetParam(), kind));
    EXPECT_TRUE(is_compatible(s.p, s.n));
    for (const Multivector& pk : bivector_hierarchy(s.p, s.n, 3)) EXPECT_TRUE(is_poisson(pk));
  }
}

TEST_P(GeneratedPairs, IncompatibleProfile) {
  const Structure s = materialize(random_admissible_incompatible(GetParam()));
  EXPECT_TRUE(is_admissible(s.p, s.n));
  EXPECT_TRUE(is_poisson(s.p));
  EXPECT_TRUE(is_nijenhuis(s.n));
  EXPECT_FALSE(is_compatible(s.p, s.n));
}

INSTANTIATE_TEST_SUITE_P(Seeds, GeneratedPairs, ::testing::Range<std::uint64_t>(0, 6));

TEST(Generators, KindNames) {
  EXPECT_EQ(parse_generator_kind("dim2-general"), GeneratorKind::dim2_general);
  EXPECT_EQ(to_string(GeneratorKind::dim4_blockdiag), "dim4-blockdiag");
  EXPECT_THROW(parse_generator_kind("dim3"), ValidationError);
}

}  // namespace
}  // namespace pncalc
