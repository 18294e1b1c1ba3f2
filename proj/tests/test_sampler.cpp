#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "vbs/doktorov.hpp"
#include "vbs/error.hpp"
#include "vbs/sampler.hpp"

namespace vbs {
namespace {

using namespace vbs::testing;

TruncatedDistribution two_state(double p0) {
  TruncatedDistribution d;
  d.states = {FockState{0}, FockState{1}};
  d.probabilities = {p0, 1.0 - p0};
  d.cumulative = {p0, 1.0};
  d.captured_mass = 1.0;
  d.target_reached = true;
  return d;
}

void expect_valid(const TruncatedDistribution& d) {
  ASSERT_EQ(d.states.size(), d.probabilities.size());
  ASSERT_EQ(d.states.size(), d.cumulative.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < d.probabilities.size(); ++i) {
    EXPECT_GE(d.probabilities[i], 0.0);
    if (i > 0) {
      EXPECT_GE(d.cumulative[i], d.cumulative[i - 1]);
    }
    sum += d.probabilities[i];
  }
  EXPECT_NEAR(sum, d.captured_mass, 1e-12);
  EXPECT_EQ(d.cumulative.back(), d.captured_mass);
}

TEST(BuildDistribution, IdentityIsSingleState) {
  const TruncatedDistribution d = build_distribution(build_doktorov(identity_model(3)), 10, 1e-6);
  ASSERT_EQ(d.states.size(), 1u);
  EXPECT_NEAR(d.captured_mass, 1.0, 1e-15);
  EXPECT_TRUE(d.target_reached);
  expect_valid(d);
}

TEST(BuildDistribution, FormicReachesTarget) {
  const TruncatedDistribution d = build_distribution(build_doktorov(formic_acid()), 10, 0.05);
  EXPECT_GE(d.captured_mass, 0.95);
  EXPECT_TRUE(d.target_reached);
  expect_valid(d);
}

TEST(BuildDistribution, CutoffZeroFlagsTruncation) {
  const TruncatedDistribution d = build_distribution(build_doktorov(formic_acid()), 0, 0.05);
  ASSERT_EQ(d.states.size(), 1u);
  EXPECT_NEAR(d.captured_mass, 0.2152, 0.002);
  EXPECT_FALSE(d.target_reached);
}

TEST(BuildDistribution, ArgumentChecks) {
  const DoktorovParameters p = build_doktorov(identity_model(1));
  EXPECT_THROW(build_distribution(p, 4, 0.0), Error);
  EXPECT_THROW(build_distribution(p, 4, 0.5), Error);
  EXPECT_THROW(build_distribution(p, -1, 0.1), Error);
  EXPECT_THROW(build_distribution(p, 17, 0.1), Error);
}

TEST(DrawSamples, SingleStateRepeats) {
  const TruncatedDistribution d = build_distribution(build_doktorov(identity_model(2)), 4, 1e-6);
  const SampleRun run = draw_samples(d, 1000, 5);
  ASSERT_EQ(run.samples.size(), 1000u);
  EXPECT_EQ(run.n_samples, 1000u);
  for (const auto& s : run.samples) EXPECT_EQ(s, FockState::vacuum(2));
}

TEST(DrawSamples, EvenSplit) {
  const SampleRun run = draw_samples(two_state(0.5), 100000, 42);
  std::size_t zeros = 0;
  for (std::size_t idx : run.state_indices) zeros += idx == 0;
  EXPECT_GE(zeros, 49000u);
  EXPECT_LE(zeros, 51000u);
}

TEST(DrawSamples, ZeroProbabilityTailNeverDrawn) {
  TruncatedDistribution d = two_state(1.0);
  d.probabilities[1] = 0.0;
  const SampleRun run = draw_samples(d, 20000, 3);
  for (std::size_t idx : run.state_indices) EXPECT_EQ(idx, 0u);
}

TEST(DrawSamples, Errors) {
  EXPECT_THROW(draw_samples(TruncatedDistribution{}, 10, 1), Error);
  EXPECT_THROW(draw_samples(two_state(0.5), 0, 1), Error);
}

TEST(DrawSamples, DeterministicAcrossThreads) {
  const TruncatedDistribution d = build_distribution(build_doktorov(formic_acid()), 10, 1e-4);
  const SampleRun a = draw_samples(d, 20000, 1234, 1);
  const SampleRun b = draw_samples(d, 20000, 1234, 4);
  const SampleRun c = draw_samples(d, 20000, 1234, 3);
  EXPECT_EQ(a.state_indices, b.state_indices);
  EXPECT_EQ(a.state_indices, c.state_indices);
  EXPECT_NE(a.state_indices, draw_samples(d, 20000, 1235, 1).state_indices);
  // A shorter run is a prefix of a longer one.
  const SampleRun head = draw_samples(d, 5000, 1234, 2);
  EXPECT_TRUE(std::equal(head.state_indices.begin(), head.state_indices.end(), a.state_indices.begin()));
}

TEST(EstimateFcp, VacuumOnly) {
  SampleRun run;
  run.samples.assign(40, FockState::vacuum(2));
  run.n_samples = 40;
  const Vector wf = Vector::Constant(2, 1000.0);
  const BinnedSpectrum freq = estimate_fcp(run, wf, 200.0);
  ASSERT_EQ(freq.values.size(), 1u);
  EXPECT_EQ(freq.values[0], 1.0);
  EXPECT_EQ(estimate_fcp(run, wf, 200.0, true).values[0], 40.0);
}

TEST(EstimateFcp, FundamentalLandsInItsBin) {
  SampleRun run;
  run.samples = {FockState::excitation(7, 2)};
  run.n_samples = 1;
  const BinnedSpectrum b = estimate_fcp(run, formic_acid().omega_final(), 200.0);
  ASSERT_EQ(b.values.size(), 8u);
  EXPECT_EQ(b.values[7], 1.0);
  EXPECT_LE(b.bin_left(7), 1566.4602);
  EXPECT_GT(b.bin_left(8), 1566.4602);
}

TEST(EstimateFcp, SumsToOneOrN) {
  const TruncatedDistribution d = build_distribution(build_doktorov(formic_acid()), 10, 1e-4);
  const SampleRun run = draw_samples(d, 777, 8);
  const Vector wf = formic_acid().omega_final();
  EXPECT_NEAR(estimate_fcp(run, wf, 200.0).total(), 1.0, 1e-12);
  EXPECT_EQ(estimate_fcp(run, wf, 200.0, true).total(), 777.0);
}

TEST(EstimateFcp, ConvergesAtLargeN) {
  const MolecularModel model = formic_acid();
  const TruncatedDistribution d = build_distribution(build_doktorov(model), 10, 1e-4);
  const SampleRun run = draw_samples(d, 100000, 42, 2);
  const BinnedSpectrum est = estimate_fcp(run, model.omega_final(), 200.0);
  const BinnedSpectrum exact = bin_sticks(distribution_sticks(d, model.omega_final()), 200.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.values.size(); ++i) {
    const double e = i < est.values.size() ? est.values[i] : 0.0;
    worst = std::max(worst, std::abs(e - exact.values[i]));
  }
  EXPECT_LE(worst, 0.01);
}

TEST(RequiredSamples, VarianceBound) {
  EXPECT_EQ(required_samples(0.1), 100u);
  EXPECT_EQ(required_samples(0.05), 400u);
  EXPECT_EQ(required_samples(1.0), 1u);
  EXPECT_EQ(required_samples(0.3), 12u);
  EXPECT_THROW(required_samples(0.0), Error);
}

TEST(Splitmix, KnownSequence) {
  // Reference outputs of the published splitmix64 generator started from 0.
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(splitmix64(0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
}

}  // namespace
}  // namespace vbs
