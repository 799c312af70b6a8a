#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "posmap/channels.hpp"
#include "posmap/states.hpp"

using namespace posmap;
using testutil::max_abs_diff;

TEST_CASE("depolarizing channel action") {
  std::mt19937_64 rng(51);
  const Mat rho = testutil::random_density(rng, 3);
  CHECK(max_abs_diff(Channel::depolarizing(3, 1.0).apply(rho), rho) <= 1e-15);
  CHECK(max_abs_diff(Channel::depolarizing(3, 0.0).apply(rho),
                     Mat(Mat::Identity(3, 3) / 3.0)) <= 1e-14);
}

TEST_CASE("dephasing channel action") {
  std::mt19937_64 rng(52);
  const Mat rho = testutil::random_density(rng, 3);
  const Mat dephased = Channel::dephasing(3, 0.0).apply(rho);
  Mat diag = Mat::Zero(3, 3);
  diag.diagonal() = rho.diagonal();
  CHECK(max_abs_diff(dephased, diag) <= 1e-15);
  CHECK(max_abs_diff(Channel::dephasing(3, 1.0).apply(rho), rho) <= 1e-15);
}

TEST_CASE("channel parameter validation") {
  CHECK_THROWS_AS(Channel::depolarizing(3, 1.5), ParameterOutOfRange);
  CHECK_THROWS_AS(Channel::dephasing(3, -0.1), ParameterOutOfRange);
  CHECK_THROWS_AS(Channel::depolarizing(1, 0.5), ParameterOutOfRange);
}

TEST_CASE("choi states of the noise families") {
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(max_abs_diff(Channel::depolarizing(3, p).choi(), isotropic(3, p)) <=
          1e-12);
    CHECK(max_abs_diff(Channel::dephasing(3, p).choi(), dephased_mes(3, p)) <=
          1e-12);
  }
  const Channel identity = Channel::from_kraus({Mat::Identity(3, 3)});
  CHECK(max_abs_diff(identity.choi(), max_entangled(3)) <= 1e-15);
}

TEST_CASE("kraus realizations reproduce the closed-form actions") {
  std::mt19937_64 rng(53);
  for (double x : {0.0, 0.35, 0.8, 1.0}) {
    for (const Channel& named :
         {Channel::depolarizing(3, x), Channel::dephasing(3, x)}) {
      const Channel via_kraus = Channel::from_kraus(named.kraus_operators());
      for (int trial = 0; trial < 5; ++trial) {
        const Mat rho = testutil::random_density(rng, 3);
        CHECK(max_abs_diff(named.apply(rho), via_kraus.apply(rho)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("channels map states to states") {
  std::mt19937_64 rng(54);
  for (const Channel& channel :
       {Channel::depolarizing(3, 0.4), Channel::dephasing(3, 0.6)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Mat rho = testutil::random_density(rng, 3);
      const Mat out = channel.apply(rho);
      CHECK(out.trace().real() == Catch::Approx(1.0).margin(1e-12));
      CHECK(hermitian_eigenvalues(out)(0) >= -1e-10);
    }
  }
}

TEST_CASE("incomplete kraus lists are rejected") {
  Mat half = Mat::Zero(2, 2);
  half(0, 0) = 1.0;
  CHECK_THROWS_AS(Channel::from_kraus({half}), InvalidChannel);
  CHECK_THROWS_AS(Channel::from_kraus({}), InvalidChannel);
}

TEST_CASE("channel moments on closed-form cases") {
  const ChannelMomentVector at_zero =
      channel_moments(Channel::depolarizing(3, 0.0), 1, 5);
  CHECK(at_zero.moments.s(2) * at_zero.moments.s(2) <=
        at_zero.moments.s(3) + 1e-10);

  const ChannelMomentVector at_one =
      channel_moments(Channel::depolarizing(3, 1.0), 2, 5);
  CHECK(at_one.moments.s(2) == Catch::Approx(11.0 / 75.0).margin(1e-12));
  CHECK(at_one.moments.s(3) == Catch::Approx(7.0 / 375.0).margin(1e-12));

  const ChannelMomentVector dephased_identity =
      channel_moments(Channel::dephasing(3, 1.0), 2, 5);
  CHECK(dephased_identity.moments.s(2) ==
        Catch::Approx(11.0 / 75.0).margin(1e-12));
  CHECK(dephased_identity.moments.s(3) ==
        Catch::Approx(7.0 / 375.0).margin(1e-12));
}

TEST_CASE("channel moments equal the state moments of the Choi state") {
  for (double p : {0.2, 0.5, 0.9}) {
    const Channel channel = Channel::depolarizing(3, p);
    const ChannelMomentVector e = channel_moments(channel, 2, 5);
    const MomentVector s = map_moments(PositiveMap::reduction(0.5, 3),
                                       channel.choi(), 3, 3, 5);
    for (int n = 1; n <= 5; ++n) {
      CHECK(e.moments.s(n) == Catch::Approx(s.s(n)).margin(1e-12));
    }
  }
}

TEST_CASE("theorem 4 detects non-breaking channels") {
  CHECK(theorem4_check(channel_moments(Channel::depolarizing(3, 0.5), 1, 5))
            .detected);
  CHECK(theorem4_check(channel_moments(Channel::depolarizing(3, 0.7), 2, 5))
            .detected);
  CHECK_FALSE(
      theorem4_check(channel_moments(Channel::depolarizing(3, 0.2), 1, 5))
          .detected);
}

TEST_CASE("theorem 5 detects the dephasing channel past one half") {
  const ChannelMomentVector e =
      channel_moments(Channel::dephasing(3, 0.75), 2, 5);
  CHECK(theorem5_check(e, 2).detected);
  CHECK_FALSE(theorem4_check(channel_moments(Channel::dephasing(3, 0.52), 2, 5))
                  .detected);
  CHECK(theorem5_check(channel_moments(Channel::dephasing(3, 0.52), 2, 5), 2)
            .detected);
}

TEST_CASE("snbc thresholds") {
  CHECK(snbc_threshold(NoiseFamily::Depolarizing, 3, 1) == Catch::Approx(0.25));
  CHECK(snbc_threshold(NoiseFamily::Depolarizing, 3, 2) == Catch::Approx(0.625));
  CHECK(snbc_threshold(NoiseFamily::Dephasing, 3, 2) == Catch::Approx(0.5));
  CHECK(snbc_threshold(NoiseFamily::Dephasing, 3, 1) == Catch::Approx(0.0));
  CHECK_THROWS_AS(snbc_threshold(NoiseFamily::Dephasing, 3, 3),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(snbc_threshold(NoiseFamily::Depolarizing, 3, 0),
                  ParameterOutOfRange);
}

TEST_CASE("detectors stay silent below the breaking thresholds") {
  struct Case {
    NoiseFamily family;
    int r;
  };
  for (const Case& c : {Case{NoiseFamily::Depolarizing, 1},
                        Case{NoiseFamily::Depolarizing, 2},
                        Case{NoiseFamily::Dephasing, 2}}) {
    const double threshold = snbc_threshold(c.family, 3, c.r);
    for (double x = 0.0; x <= threshold + 1e-12; x += 1e-3) {
      const Channel channel = c.family == NoiseFamily::Depolarizing
                                  ? Channel::depolarizing(3, x)
                                  : Channel::dephasing(3, x);
      const ChannelMomentVector e = channel_moments(channel, c.r, 5);
      INFO((c.family == NoiseFamily::Depolarizing ? "depolarizing" : "dephasing")
           << " r=" << c.r << " x=" << x);
      CHECK_FALSE(theorem4_check(e).detected);
      CHECK_FALSE(theorem5_check(e, 1).detected);
      CHECK_FALSE(theorem5_check(e, 2).detected);
    }
  }
}

TEST_CASE("non-square channels are rejected by the moment detectors") {
  // A valid isometry V: C^2 -> C^3 gives a 2 -> 3 channel.
  Mat v = Mat::Zero(3, 2);
  v(0, 0) = 1.0;
  v(1, 1) = 1.0;
  const Channel channel = Channel::from_kraus({v});
  CHECK(channel.input_dim() == 2);
  CHECK(channel.output_dim() == 3);
  CHECK_THROWS_AS(channel_moments(channel, 1, 5), DimensionMismatch);
}

TEST_CASE("channel moment parameter validation") {
  CHECK_THROWS_AS(channel_moments(Channel::depolarizing(3, 0.5), 3, 5),
                  ParameterOutOfRange);
  CHECK_THROWS_AS(channel_moments(Channel::depolarizing(3, 0.5), 0, 5),
                  ParameterOutOfRange);
}
