#include <doctest.h>

#include "commonpair/expansion.hpp"
#include "helpers.hpp"

using namespace commonpair;

namespace {

ColourSystem shifted_pair(const Graph& h1, const Graph& h2, const Rational& p1,
                          const StepKernel& u) {
  return make_colour_system(
      {{h1, p1, affine_shift(u, p1)},
       {h2, Rational(1) - p1, affine_shift(scale_values(u, Rational(-1)),
                                           Rational(1) - p1)}});
}

const StepKernel kW1 = two_block_identity_graphon();

ColourSystem c4c5_witness_system(const Rational& p) {
  return make_colour_system(
      {{cycle_graph(4), p, kW1},
       {cycle_graph(5), Rational(1) - p, complement_graphon(kW1)}});
}

}  // namespace

TEST_CASE("colour system validation") {
  CHECK_THROWS_AS(make_colour_system({}), DomainError);
  CHECK_THROWS_AS(
      make_colour_system({{empty_graph(3), Rational(1, 2), kW1},
                          {cycle_graph(4), Rational(1, 2),
                           complement_graphon(kW1)}}),
      DomainError);  // empty graph
  CHECK_THROWS_AS(
      make_colour_system({{cycle_graph(4), Rational(1, 2), kW1},
                          {cycle_graph(5), Rational(1, 3),
                           complement_graphon(kW1)}}),
      DomainError);  // probabilities do not sum to 1
  CHECK_THROWS_AS(
      make_colour_system({{cycle_graph(4), Rational(1, 2), kW1},
                          {cycle_graph(5), Rational(1, 2), kW1}}),
      DomainError);  // kernels do not sum to 1
}

TEST_CASE("colour systems align mismatched block structures") {
  const ColourSystem sys = make_colour_system(
      {{cycle_graph(4), Rational(1, 2), kW1},
       {cycle_graph(5), Rational(1, 2), complement_graphon(kW1)},
       });
  CHECK(sys.entries[0].w.block_count() == 2);
  const ColourSystem mixed = make_colour_system(
      {{cycle_graph(4), Rational(1, 3), constant_kernel(Rational(1, 3))},
       {cycle_graph(5), Rational(2, 3),
        complement_graphon(constant_kernel(Rational(1, 3)))}});
  CHECK(commonality_gap(mixed) == 0);
}

TEST_CASE("commonality gap examples") {
  // random colouring meets the bound with equality
  const ColourSystem equal = make_colour_system(
      {{cycle_graph(4), Rational(1, 2), constant_kernel(Rational(1, 2))},
       {cycle_graph(4), Rational(1, 2), constant_kernel(Rational(1, 2))}});
  CHECK(commonality_gap(equal) == 0);

  CHECK(commonality_gap(c4c5_witness_system(Rational(13, 25))) ==
        Rational(-32963, 8788000));
  CHECK(commonality_gap(c4c5_witness_system(Rational(1, 2))) ==
        Rational(1, 40));
}

TEST_CASE("expansion functional matches the shifted gap") {
  const Graph c3 = complete_graph(3);
  CHECK(expansion_functional(c3, c3, Rational(1, 2),
                             make_step_kernel({Rational(1)}, {{Rational(0)}})) ==
        0);
  testutil::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational p1 = testutil::random_probability(rng, 8);
    const StepKernel u =
        testutil::random_kernel(rng, -p1, Rational(1) - p1, 2, 6);
    const Graph h1 = testutil::random_nonempty_graph(rng, 2, 4);
    const Graph h2 = testutil::random_nonempty_graph(rng, 2, 4);
    CHECK(expansion_functional(h1, h2, p1, u) ==
          commonality_gap(shifted_pair(h1, h2, p1, u)));
  }
}

TEST_CASE("expansion functional rejects inadmissible kernels") {
  CHECK_THROWS_AS(expansion_functional(complete_graph(3), complete_graph(3),
                                       Rational(1, 2), kernel_B()),
                  DomainError);
  CHECK_THROWS_AS(expansion_functional(empty_graph(3), complete_graph(3),
                                       Rational(1, 2),
                                       constant_kernel(Rational(0))),
                  DomainError);
}

TEST_CASE("expansion functional at the girth kernel") {
  // h1 = h2 = C3 at p1 = 2/5 with u = (2/5) B^(1/4): only the full edge set
  // survives, giving (p^3 d^3 / 3)(1/p2^2 - 1/p1^2).
  const Rational p1(2, 5);
  const StepKernel u =
      scale_values(scale_down(kernel_B(), Rational(1, 4)), Rational(2, 5));
  const Rational value =
      expansion_functional(complete_graph(3), complete_graph(3), p1, u);
  CHECK(value == Rational(-1, 864));
  CHECK(value < 0);
}

TEST_CASE("expansion identity") {
  const StepKernel zero = make_step_kernel({Rational(1)}, {{Rational(0)}});
  auto [lhs0, rhs0] =
      expansion_identity_check(complete_graph(3), Rational(1, 2), zero);
  CHECK(lhs0 == Rational(1, 8));
  CHECK(rhs0 == Rational(1, 8));

  const auto [lhs1, rhs1] = expansion_identity_check(
      cycle_graph(4), Rational(1, 2), scale_values(kernel_B(), Rational(1, 2)));
  CHECK(lhs1 == rhs1);
  CHECK(lhs1 == Rational(1, 8));

  testutil::Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational p = testutil::random_probability(rng, 8);
    const StepKernel u = testutil::random_kernel(rng, -p, Rational(1) - p, 3, 6);
    const Graph h = testutil::random_nonempty_graph(rng, 2, 4);
    const auto [lhs, rhs] = expansion_identity_check(h, p, u);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(
      expansion_identity_check(complete_graph(6), Rational(1, 2), zero),
      DomainError);  // 15 edges > subset cap
}

TEST_CASE("candidate_p") {
  const auto same = candidate_p(complete_graph(3), complete_graph(3));
  REQUIRE(same.has_value());
  CHECK(same->p_exact == Rational(1, 2));
  CHECK(same->alpha_power == 1);

  const auto doubled = candidate_p(complete_graph(3), parse_graph_name("2*C3"));
  REQUIRE(doubled.has_value());
  CHECK(doubled->alpha_power == 1);
  CHECK(doubled->p_exact == Rational(1, 2));

  const auto k4 = candidate_p(complete_graph(3), complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(k4->alpha_power == 2);
  CHECK_FALSE(k4->p_exact.has_value());
  CHECK(k4->p_float == doctest::Approx(0.41421356).epsilon(1e-6));

  // girths differ: no candidate
  CHECK_FALSE(candidate_p(complete_graph(3), cycle_graph(5)).has_value());
  // even or infinite girth is an error
  CHECK_THROWS_AS(candidate_p(cycle_graph(4), complete_graph(3)), DomainError);
  CHECK_THROWS_AS(candidate_p(path_graph(4), complete_graph(3)), DomainError);
}

TEST_CASE("candidate_p symmetry") {
  testutil::Rng rng(23);
  int checked = 0;
  while (checked < 10) {
    const Graph h1 = testutil::random_nonempty_graph(rng, 3, 5);
    const Graph h2 = testutil::random_nonempty_graph(rng, 3, 5);
    const auto g1 = girth(h1);
    const auto g2 = girth(h2);
    if (!g1 || !g2 || *g1 % 2 == 0 || *g2 % 2 == 0 || *g1 != *g2) continue;
    const auto fwd = candidate_p(h1, h2);
    const auto rev = candidate_p(h2, h1);
    REQUIRE(fwd.has_value());
    REQUIRE(rev.has_value());
    if (fwd->p_exact) {
      REQUIRE(rev->p_exact.has_value());
      CHECK(*fwd->p_exact + *rev->p_exact == 1);
    }
    CHECK(fwd->p_float + rev->p_float == doctest::Approx(1.0).epsilon(1e-9));
    ++checked;
  }
}

TEST_CASE("girth witness") {
  const WitnessReport report =
      girth_witness(complete_graph(3), complete_graph(3), Rational(2, 5));
  CHECK(report.negative);
  CHECK(report.delta == Rational(1, 2));
  CHECK(report.value == Rational(-1, 108));
  CHECK(report.scale == Rational(2, 5));

  // equality case of the cycle-ratio condition is a precondition error
  CHECK_THROWS_AS(
      girth_witness(complete_graph(3), complete_graph(3), Rational(1, 2)),
      DomainError);
  // wrong girth order
  CHECK_THROWS_AS(girth_witness(cycle_graph(5), complete_graph(3), Rational(1, 3)),
                  DomainError);
  // even girth
  CHECK_THROWS_AS(girth_witness(cycle_graph(4), cycle_graph(4), Rational(1, 3)),
                  DomainError);

  const WitnessReport c5 =
      girth_witness(cycle_graph(5), cycle_graph(5), Rational(1, 3));
  CHECK(c5.negative);
}

TEST_CASE("girth witness soundness against the gap") {
  const Graph c3 = complete_graph(3);
  const WitnessReport report = girth_witness(c3, c3, Rational(2, 5));
  REQUIRE(report.negative);
  const StepKernel u = scale_values(scale_down(kernel_B(), *report.delta),
                                    report.scale);
  CHECK(commonality_gap(shifted_pair(c3, c3, Rational(2, 5), u)) ==
        report.value);
}

TEST_CASE("k4 witness") {
  const WitnessReport kk =
      k4_witness(complete_graph(4), complete_graph(4), Rational(1, 2));
  CHECK(kk.negative);
  CHECK(kk.delta == Rational(1, 2));
  CHECK(kk.tensor_k == 2);
  CHECK(kk.value == Rational(-19, 786432));
  CHECK(kk.tallies.at("n1") == 1);
  CHECK(kk.tallies.at("s1") == 56);
  CHECK(kk.tallies.at("b1") == 0);

  const WitnessReport kc =
      k4_witness(complete_graph(4), cycle_graph(4), Rational(1, 3));
  CHECK(kc.negative);
  CHECK(kc.tallies.at("n2") == 0);
  CHECK(kc.tallies.at("s2") == 11);

  CHECK_THROWS_AS(k4_witness(cycle_graph(5), cycle_graph(4), Rational(1, 2)),
                  DomainError);
}

TEST_CASE("k4 closed form agrees with a materialized kernel at power 1") {
  // 2k+1 = 1 keeps the tensor power materializable: u = p K^delta.
  const Graph k4 = complete_graph(4);
  const Graph c4 = cycle_graph(4);
  const Rational p1(1, 3);
  const Rational delta(1, 2);
  const WitnessReport closed =
      k4_witness(k4, c4, p1, {delta}, std::vector<int>{0});
  const StepKernel u =
      scale_values(scale_down(kernel_K(), delta), Rational(1, 3));
  CHECK(closed.sweep.size() == 1);
  CHECK(closed.sweep[0].value == expansion_functional(k4, c4, p1, u));
  CHECK(closed.sweep[0].value ==
        commonality_gap(shifted_pair(k4, c4, p1, u)));
}

TEST_CASE("multicolour girth witness") {
  const Graph c3 = complete_graph(3);
  const WitnessReport report = multicolour_girth_witness(
      c3, c3, c3, Rational(1, 3), Rational(1, 3), Rational(1, 3));
  CHECK(report.negative);
  CHECK(report.delta == Rational(1, 2));
  CHECK(report.value == Rational(-1, 96));
  CHECK(report.scale == Rational(1, 6));

  const Graph c5 = cycle_graph(5);
  const WitnessReport odd5 = multicolour_girth_witness(
      c5, c5, c5, Rational(1, 3), Rational(1, 3), Rational(1, 3));
  CHECK(odd5.negative);

  const Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(
      multicolour_girth_witness(c4, c4, c4, Rational(1, 3), Rational(1, 3),
                                Rational(1, 3)),
      DomainError);
}

TEST_CASE("multicolour witness soundness against the 3-colour gap") {
  const Graph c3 = complete_graph(3);
  const Rational third(1, 3);
  const WitnessReport report =
      multicolour_girth_witness(c3, c3, c3, third, third, third);
  REQUIRE(report.negative);
  const StepKernel shrunk = scale_down(kernel_B(), *report.delta);
  const StepKernel u1 = scale_values(shrunk, 2 * report.scale);
  const StepKernel u2 = scale_values(shrunk, -report.scale);
  const ColourSystem sys = make_colour_system({
      {c3, third, affine_shift(u1, third)},
      {c3, third, affine_shift(u2, third)},
      {c3, third, affine_shift(u2, third)},
  });
  CHECK(commonality_gap(sys) == report.value);
}

TEST_CASE("extend_witness_colour") {
  const ColourSystem base = c4c5_witness_system(Rational(13, 25));
  const Rational base_gap = commonality_gap(base);
  REQUIRE(base_gap < 0);
  const ColourSystem extended =
      extend_witness_colour(base, cycle_graph(4), Rational(1, 10));
  CHECK(extended.entries.size() == 3);
  CHECK(extended.entries[0].p == Rational(13, 25) * Rational(9, 10));
  const Rational extended_gap = commonality_gap(extended);
  CHECK(extended_gap < 0);
  // the constant colour contributes zero, so the gap scales by 1 - q
  CHECK(extended_gap == base_gap * Rational(9, 10));

  // an exact-equality system stays exactly tight
  const ColourSystem equal = make_colour_system(
      {{cycle_graph(4), Rational(1, 2), constant_kernel(Rational(1, 2))},
       {cycle_graph(5), Rational(1, 2), constant_kernel(Rational(1, 2))}});
  REQUIRE(commonality_gap(equal) == 0);
  CHECK(commonality_gap(extend_witness_colour(equal, complete_graph(3),
                                              Rational(1, 4))) == 0);

  CHECK_THROWS_AS(extend_witness_colour(base, cycle_graph(4), Rational(0)),
                  DomainError);
  CHECK_THROWS_AS(extend_witness_colour(base, cycle_graph(4), Rational(1)),
                  DomainError);
}

TEST_CASE("sidorenko pairs stay nonnegative on random instances") {
  const std::vector<Graph> sidorenko = {complete_graph(2), path_graph(3),
                                        path_graph(4), cycle_graph(4),
                                        star_graph(3)};
  testutil::Rng rng(2468);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph& h1 = sidorenko[testutil::random_int(rng, 0, 4)];
    const Graph& h2 = sidorenko[testutil::random_int(rng, 0, 4)];
    const Rational p = testutil::random_probability(rng, 12);
    const StepKernel w = testutil::random_graphon(rng, 2);
    const ColourSystem sys = make_colour_system(
        {{h1, p, w}, {h2, Rational(1) - p, complement_graphon(w)}});
    CHECK(commonality_gap(sys) >= 0);
  }
}
