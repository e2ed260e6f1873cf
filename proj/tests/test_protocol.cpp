#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "gloves/protocol.hpp"
#include "gloves/rotate.hpp"
#include "gloves/twirl.hpp"

using namespace gloves;

namespace {

const EulerAngles kGenericAngles{0.37, 1.12, 2.45};

std::vector<ChannelConfig> all_configs() {
  std::vector<ChannelConfig> configs;
  for (bool opposite : {false, true}) {
    ChannelConfig none;
    none.bob_opposite_chirality = opposite;
    configs.push_back(none);

    ChannelConfig random;
    random.random_rotation = true;
    random.bob_opposite_chirality = opposite;
    configs.push_back(random);

    ChannelConfig fixed;
    fixed.fixed_rotation = kGenericAngles;
    fixed.bob_opposite_chirality = opposite;
    configs.push_back(fixed);
  }
  return configs;
}

}  // namespace

TEST_CASE("four-particle gloves succeed in every trial") {
  const CatalogEntry entry = find_entry("four_particle");

  ChannelConfig random;
  random.random_rotation = true;
  const SimReport same = simulate_exchange(entry, random, 10000, 7);
  CHECK(same.successes == 10000);
  CHECK(same.frequency == 1.0);
  CHECK(same.standard_error == 0.0);

  random.bob_opposite_chirality = true;
  const SimReport opposite = simulate_exchange(entry, random, 10000, 7);
  CHECK(opposite.successes == 10000);  // inferred "opposite" every time
  CHECK(opposite.frequency == 1.0);
}

TEST_CASE("perfect entries succeed in every trial under every channel") {
  for (const CatalogEntry& entry : catalog()) {
    if (!entry.perfect) continue;
    for (const ChannelConfig& config : all_configs()) {
      CAPTURE(entry.id);
      CAPTURE(config.to_string());
      const SimReport report = simulate_exchange(entry, config, 400, 11);
      CHECK(report.successes == 400);
      CHECK(report.frequency == 1.0);
    }
  }
}

TEST_CASE("approximate pair matches the rotation-averaged ceiling") {
  const CatalogEntry entry = find_entry("two_particle_approx");
  const TwirlReport oracle = twirl_report(entry);
  ChannelConfig random;
  random.random_rotation = true;

  const SimReport helstrom = simulate_exchange(entry, random, 10000, 21,
                                               MeasurementMode::Helstrom);
  const double sigma =
      std::sqrt(oracle.helstrom_after * (1.0 - oracle.helstrom_after) / 10000);
  CHECK(std::abs(helstrom.frequency - oracle.helstrom_after) <= 4.0 * sigma);
  CHECK(std::abs(helstrom.frequency - 0.5) <= 4.0 * sigma);

  // The fixed glove-basis measurement cannot beat the ceiling; on this pair
  // its per-trial success probability averages to 1/3.
  const SimReport basis = simulate_exchange(entry, random, 10000, 21);
  CHECK(basis.frequency <=
        oracle.helstrom_after + 4.0 * basis.standard_error);
  const double third_sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / 10000);
  CHECK(std::abs(basis.frequency - 1.0 / 3) <= 4.0 * third_sigma);
  CHECK(basis.standard_error ==
        doctest::Approx(std::sqrt(basis.frequency * (1.0 - basis.frequency) /
                                  10000))
            .epsilon(1e-12));
}

TEST_CASE("per-trial outcome weights sum to one") {
  for (const char* id :
       {"four_particle", "three_particle_projector", "two_particle_approx",
        "spin_orbital_doublet"}) {
    const CatalogEntry entry = find_entry(id);
    HaarSampler sampler(99);
    StateVector state = normalized(entry.pair.representative_plus());
    for (int i = 0; i < 20; ++i) {
      const StateVector received = apply_rotation(state, sampler.next());
      const OutcomeProbabilities probs =
          glove_basis_probabilities(entry.pair, received);
      CAPTURE(id);
      CHECK(probs.plus >= 0.0);
      CHECK(probs.minus >= 0.0);
      CHECK(probs.rest >= 0.0);
      CHECK(std::abs(probs.plus + probs.minus + probs.rest - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("reports are bit-reproducible under a fixed seed") {
  const CatalogEntry entry = find_entry("two_particle_approx");
  ChannelConfig random;
  random.random_rotation = true;
  const SimReport a = simulate_exchange(entry, random, 3000, 5);
  const SimReport b = simulate_exchange(entry, random, 3000, 5);
  CHECK(a.successes == b.successes);
  CHECK(a.frequency == b.frequency);
  CHECK(a.seed == 5);
  CHECK(a.entry_id == "two_particle_approx");
  CHECK(a.trials == 3000);

  const SimReport c = simulate_exchange(entry, random, 3000, 6);
  CHECK(c.successes != a.successes);  // different stream, different counts
}

TEST_CASE("channel validation") {
  const CatalogEntry entry = find_entry("four_particle");
  ChannelConfig conflicted;
  conflicted.random_rotation = true;
  conflicted.fixed_rotation = kGenericAngles;
  CHECK_THROWS_AS(simulate_exchange(entry, conflicted, 10, 0), DomainError);
  CHECK_THROWS_AS(simulate_exchange(entry, ChannelConfig{}, 0, 0),
                  DomainError);

  CHECK(ChannelConfig{}.to_string() == "none");
  ChannelConfig random;
  random.random_rotation = true;
  random.bob_opposite_chirality = true;
  CHECK(random.to_string() == "random+opposite");
  ChannelConfig fixed;
  fixed.fixed_rotation = EulerAngles{0.5, 0.25, 0.125};
  CHECK(fixed.to_string() == "fixed(0.5;0.25;0.125)");
}

TEST_CASE("frame information leakage") {
  const double pi = std::numbers::pi;

  // Rotation-invariant carriers leak nothing, whatever the angles.
  const CatalogEntry four = find_entry("four_particle");
  CHECK(fixed_frame_information_check(four, kGenericAngles) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fixed_frame_information_check(four, EulerAngles{pi, pi / 3, 0.2}) ==
        doctest::Approx(0.5).epsilon(1e-12));

  // Identity rotation is undetectable for every entry.
  for (const CatalogEntry& entry : catalog()) {
    CAPTURE(entry.id);
    CHECK(fixed_frame_information_check(entry, EulerAngles{}) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }

  // The L = 1 carrier exposes a half turn about y with the d^1 overlap
  // (1 + cos(beta)) / 2 = 1/2, so Helstrom reaches 1/2 + sqrt(3)/4.
  const CatalogEntry three = find_entry("three_particle_projector");
  const double leak =
      fixed_frame_information_check(three, EulerAngles{0.0, pi / 2, 0.0});
  CHECK(leak == doctest::Approx(0.5 + std::sqrt(3.0) / 4).epsilon(1e-10));
  CHECK(leak > 0.5);

  // The approximate pair is not rotation invariant either.
  const CatalogEntry approx = find_entry("two_particle_approx");
  CHECK(fixed_frame_information_check(approx, kGenericAngles) > 0.5);

  // Forged projector pair with L = 0 is outside the supported kinds.
  CatalogEntry forged = three;
  forged.pair.two_L = 0;
  CHECK_THROWS_AS(fixed_frame_information_check(forged, kGenericAngles),
                  DomainError);
}

TEST_CASE("resource accounting") {
  const ResourceReport four = resource_report(find_entry("four_particle"));
  CHECK(four.particle_count == 4);
  CHECK(four.qubits == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(four.lmax == std::vector<int>{1, 1, 1});
  CHECK(four.factor_kinds ==
        std::vector<std::string>{"orbital", "orbital", "orbital"});
  CHECK(four.perfect);

  const ResourceReport three =
      resource_report(find_entry("three_particle_projector"));
  CHECK(three.particle_count == 3);
  CHECK(three.qubits == doctest::Approx(1.0 + std::log2(3.0)).epsilon(1e-9));
  CHECK(three.lmax == std::vector<int>{1, 1});
  CHECK(three.perfect);

  const ResourceReport doublet =
      resource_report(find_entry("spin_orbital_doublet"));
  CHECK(doublet.particle_count == 2);
  CHECK(doublet.qubits == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(doublet.factor_kinds == std::vector<std::string>{"spin", "orbital"});
  CHECK(doublet.lmax == std::vector<int>{1});

  const ResourceReport approx =
      resource_report(find_entry("two_particle_approx"));
  CHECK(approx.particle_count == 2);
  CHECK_FALSE(approx.perfect);
  CHECK(approx.lmax == std::vector<int>{1});
  // Equal mixture of the twirled hands is diag(1/2, 1/6, 1/6, 1/6).
  CHECK(approx.qubits ==
        doctest::Approx(0.5 + 0.5 * std::log2(6.0)).epsilon(1e-9));
  CHECK(approx.entry_id == "two_particle_approx");
}
