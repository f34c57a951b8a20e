// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cutmit/distribution.hpp"
#include "cutmit/errors.hpp"
#include "cutmit/measurement.hpp"
#include "cutmit/pauli.hpp"

namespace cutmit {

struct EnergyReport {
  std::string method;
  double energy = 0.0;
  std::map<std::string, double> per_term;  // Pauli word letters -> expectation
  std::uint64_t shots = 0;                 // per measurement group; 0 = exact
};

/// Expectation of a Pauli word from a measured distribution whose key
/// position i is qubit i, after the group's basis change (so every
/// non-identity letter reduces to a Z-parity over its support).
inline double term_expectation(const Distribution& d, const PauliString& word) {
  if (word.num_qubits() != d.num_bits)
    throw ValidationError("Pauli word width does not match the distribution");
  if (word.is_identity()) return 1.0;
  return parity_expectation(d, word.support());
}

/// Energy from one distribution per measurement group, plus the identity
/// offset. The energy is exactly the coefficient-weighted sum of per_term.
inline EnergyReport energy_from_distributions(const Hamiltonian& h,
                                              const std::vector<MeasurementGroup>& groups,
                                              const std::vector<Distribution>& distributions,
                                              std::string method, std::uint64_t shots) {
  h.validate();
  if (groups.size() != distributions.size())
    throw ValidationError("need exactly one distribution per measurement group");
  EnergyReport r;
  r.method = std::move(method);
  r.shots = shots;
  for (const PauliTerm& t : h.terms)
    if (t.word.is_identity()) {
      r.per_term[t.word.letters] = 1.0;
      r.energy += t.coefficient;
    }
  for (size_t gi = 0; gi < groups.size(); ++gi)
    for (size_t ti : groups[gi].term_indices) {
      const PauliTerm& t = h.terms[ti];
      double e = term_expectation(distributions[gi], t.word);
      r.per_term[t.word.letters] = e;
      r.energy += t.coefficient * e;
    }
  return r;
}

}  // namespace cutmit
