// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0
//
// Simulator tests: the statevector path against an independent dense
// reference, the density-matrix path with each noise channel against
// hand-computed probabilities, and the sampling layer.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cutmit/circuit.hpp"
#include "cutmit/density_matrix.hpp"
#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/execute.hpp"
#include "cutmit/noise.hpp"
#include "cutmit/rng.hpp"
#include "cutmit/statevector.hpp"
#include "support/oracle_dense.hpp"

using namespace cutmit;

namespace {

Circuit random_circuit(Rng& rng, int max_qubits = 3) {
  const int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_qubits)));
  Circuit c(n);
  const int n_gates = 1 + static_cast<int>(rng.next_below(12));
  for (int i = 0; i < n_gates; ++i) {
    const int pick = static_cast<int>(rng.next_below(n >= 2 ? 10 : 8));
    const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    const double angle = 2.0 * M_PI * rng.next_double() - M_PI;
    switch (pick) {
      case 0: c.add(Gate(GateKind::H, {a})); break;
      case 1: c.add(Gate(GateKind::X, {a})); break;
      case 2: c.add(Gate(GateKind::Y, {a})); break;
      case 3: c.add(Gate(GateKind::Z, {a})); break;
      case 4: c.add(Gate(GateKind::S, {a})); break;
      case 5: c.add(Gate(GateKind::RX, {a}, {angle})); break;
      case 6: c.add(Gate(GateKind::RY, {a}, {angle})); break;
      case 7: c.add(Gate(GateKind::RZ, {a}, {angle})); break;
      default: {
        int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (b == a) b = (a + 1) % n;
        c.add(Gate(pick == 8 ? GateKind::CZ : GateKind::CX, {a, b}));
        break;
      }
    }
  }
  c.measure_all();
  return c;
}

std::map<std::string, double> as_map(const Distribution& d) {
  return std::map<std::string, double>(d.table.begin(), d.table.end());
}

}  // namespace

TEST_CASE("statevector output matches the dense reference on random circuits") {
  Rng rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    Circuit c = random_circuit(rng);
    Distribution d = exact_distribution_pure(c);
    double tv = oracle::tv_distance(as_map(d), oracle::distribution(c));
    INFO("trial " << trial << "\n" << serialize_circuit(c));
    REQUIRE(tv < 1e-12);
  }
}

TEST_CASE("prepared eigenstates enter the statevector correctly") {
  Circuit c(2);
  c.prepare(0, PrepState::Plus);
  c.prepare(1, PrepState::MinusI);
  c.add(Gate(GateKind::CZ, {0, 1}));
  c.measure_all();
  double tv = oracle::tv_distance(as_map(exact_distribution_pure(c)), oracle::distribution(c));
  CHECK(tv < 1e-14);
}

TEST_CASE("density path equals pure path when noise is trivial") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = random_circuit(rng);
    double tv = tv_distance(exact_distribution(c, NoiseModel{}), exact_distribution_pure(c));
    REQUIRE(tv < 1e-12);
  }
}

TEST_CASE("single-qubit depolarizing flips with probability 2p/3") {
  // X and Y components each fire with p/3 and flip the computational bit.
  Circuit c(1);
  c.add(Gate(GateKind::Z, {0}));  // channel attaches to a gate
  c.measure_all();
  NoiseModel noise;
  noise.depolarizing_1q = 0.3;
  Distribution d = exact_distribution(c, noise);
  CHECK(d.weight("1") == Catch::Approx(0.2).margin(1e-12));
  CHECK(d.weight("0") == Catch::Approx(0.8).margin(1e-12));
}

TEST_CASE("two-qubit depolarizing spreads 4p/15 onto each flipped pattern") {
  // Of the 15 non-identity Pauli pairs, four flip any given bit pattern.
  Circuit c(2);
  c.add(Gate(GateKind::CZ, {0, 1}));
  c.measure_all();
  NoiseModel noise;
  noise.depolarizing_2q = 0.15;
  Distribution d = exact_distribution(c, noise);
  CHECK(d.weight("00") == Catch::Approx(0.88).margin(1e-12));
  CHECK(d.weight("01") == Catch::Approx(0.04).margin(1e-12));
  CHECK(d.weight("10") == Catch::Approx(0.04).margin(1e-12));
  CHECK(d.weight("11") == Catch::Approx(0.04).margin(1e-12));
}

TEST_CASE("per-qubit pauli noise fires once per touching gate") {
  // Two gates on the same wire with an X rate of 0.1: net flip probability
  // 2 * 0.1 * 0.9 = 0.18.
  Circuit c(1);
  c.add(Gate(GateKind::RZ, {0}, {0.3}));
  c.add(Gate(GateKind::RZ, {0}, {0.4}));
  c.measure_all();
  NoiseModel noise;
  noise.per_qubit_pauli[0] = PauliRates{0.1, 0.0, 0.0};
  Distribution d = exact_distribution(c, noise);
  CHECK(d.weight("1") == Catch::Approx(0.18).margin(1e-12));
}

TEST_CASE("pure-Z pauli noise leaves computational probabilities alone") {
  Circuit c(1);
  c.add(Gate(GateKind::RY, {0}, {0.7}));
  c.measure_all();
  NoiseModel noise;
  noise.per_qubit_pauli[0] = PauliRates{0.0, 0.0, 0.4};
  double tv = tv_distance(exact_distribution(c, noise), exact_distribution_pure(c));
  CHECK(tv < 1e-12);
}

TEST_CASE("readout flips act on measured bits only") {
  Circuit c(2);
  c.add(Gate(GateKind::X, {1}));
  c.measure_all();
  NoiseModel noise;
  noise.readout_flip[0] = 0.1;
  Distribution d = exact_distribution(c, noise);
  CHECK(d.weight("01") == Catch::Approx(0.9).margin(1e-12));
  CHECK(d.weight("11") == Catch::Approx(0.1).margin(1e-12));

  // The same flip rate on an unmeasured qubit does nothing.
  Circuit partial(2);
  partial.add(Gate(GateKind::X, {1}));
  partial.measure({1});
  NoiseModel unused;
  unused.readout_flip[0] = 0.5;
  CHECK(exact_distribution(partial, unused).weight("1") == Catch::Approx(1.0));
}

TEST_CASE("preparation flip precedes the first gate") {
  // A spam flip of 0.2 turns |0> into |1> before the X, so the X maps it
  // back to |0> with that probability.
  Circuit c(1);
  c.add(Gate(GateKind::X, {0}));
  c.measure_all();
  NoiseModel noise;
  noise.spam_flip = 0.2;
  Distribution d = exact_distribution(c, noise);
  CHECK(d.weight("0") == Catch::Approx(0.2).margin(1e-12));
  CHECK(d.weight("1") == Catch::Approx(0.8).margin(1e-12));
}

TEST_CASE("noisy evolution preserves trace and positivity of outcomes") {
  Rng rng(99);
  NoiseModel noise;
  noise.depolarizing_1q = 0.02;
  noise.depolarizing_2q = 0.05;
  noise.per_qubit_pauli[0] = PauliRates{0.03, 0.01, 0.02};
  noise.readout_flip[1] = 0.04;
  noise.spam_flip = 0.01;
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = random_circuit(rng);
    Distribution d = exact_distribution(c, noise);
    REQUIRE(d.is_probability(1e-9));
  }
}

TEST_CASE("sampling converges to the exact distribution and is seed-stable") {
  Circuit c(2);
  c.add(Gate(GateKind::H, {0}));
  c.add(Gate(GateKind::CX, {0, 1}));
  c.measure_all();
  NoiseModel noise;
  noise.depolarizing_2q = 0.05;

  Rng r1(123), r2(123), r3(321);
  Distribution a = sample_distribution(c, noise, 20000, r1);
  Distribution b = sample_distribution(c, noise, 20000, r2);
  Distribution other = sample_distribution(c, noise, 20000, r3);
  CHECK(a.table == b.table);
  CHECK(a.shots == 20000);
  CHECK(a.kind == DistributionKind::Sampled);
  CHECK(a.table != other.table);
  CHECK(a.is_probability(1e-9));
  // 20000 shots puts the empirical TV within a few percent with huge margin.
  CHECK(tv_distance(a, exact_distribution(c, noise)) < 0.05);
}

TEST_CASE("dense simulators refuse oversized registers") {
  Circuit big(17);
  big.add(Gate(GateKind::H, {0}));
  big.measure_all();
  CHECK_THROWS_AS(exact_distribution_pure(big), UnsupportedSizeError);
  Circuit mid(13);
  mid.add(Gate(GateKind::H, {0}));
  mid.measure_all();
  CHECK_THROWS_AS(exact_distribution(mid, NoiseModel{}), UnsupportedSizeError);
}

TEST_CASE("noise model JSON round-trips and validates") {
  NoiseModel noise;
  noise.depolarizing_1q = 0.001;
  noise.depolarizing_2q = 0.01;
  noise.per_qubit_pauli[2] = PauliRates{0.05, 0.0, 0.01};
  noise.readout_flip[0] = 0.02;
  noise.spam_flip = 0.005;
  NoiseModel back = noise_model_from_json(noise_model_to_json(noise));
  CHECK(back.depolarizing_1q == noise.depolarizing_1q);
  CHECK(back.depolarizing_2q == noise.depolarizing_2q);
  CHECK(back.per_qubit_pauli.at(2).px == 0.05);
  CHECK(back.per_qubit_pauli.at(2).pz == 0.01);
  CHECK(back.readout_flip.at(0) == 0.02);
  CHECK(back.spam_flip == 0.005);

  NoiseModel bad;
  bad.depolarizing_1q = 1.5;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  NoiseModel sums;
  sums.per_qubit_pauli[0] = PauliRates{0.5, 0.4, 0.3};
  CHECK_THROWS_AS(sums.validate(), ValidationError);
}

TEST_CASE("per-qubit noise remapping follows the wire map") {
  NoiseModel noise;
  noise.per_qubit_pauli[3] = PauliRates{0.1, 0.0, 0.0};
  noise.readout_flip[3] = 0.2;
  noise.depolarizing_1q = 0.01;
  NoiseModel local = noise.remapped({3, 1});
  CHECK(local.per_qubit_pauli.count(0) == 1);
  CHECK(local.per_qubit_pauli.at(0).px == 0.1);
  CHECK(local.per_qubit_pauli.count(1) == 0);
  CHECK(local.readout_flip.at(0) == 0.2);
  CHECK(local.depolarizing_1q == 0.01);
}
