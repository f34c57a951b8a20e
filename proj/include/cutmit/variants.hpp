// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/cutting.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// Cut-channel basis element. The identity is expanded over computational
/// eigenstates; X/Y/Z over their own eigenstates.
enum class CutBasis { I, X, Y, Z };

inline char cut_basis_letter(CutBasis b) {
  switch (b) {
    case CutBasis::I: return 'I';
    case CutBasis::X: return 'X';
    case CutBasis::Y: return 'Y';
    case CutBasis::Z: return 'Z';
  }
  return '?';
}

/// One cut's slice of a variant: basis element and eigenstate sign
/// (0 = +, 1 = -).
struct CutSetting {
  CutBasis basis = CutBasis::I;
  int sign = 0;

  /// Eigenstate the prepare side receives.
  PrepState prep_state() const {
    switch (basis) {
      case CutBasis::I: return sign == 0 ? PrepState::Zero : PrepState::One;
      case CutBasis::X: return sign == 0 ? PrepState::Plus : PrepState::Minus;
      case CutBasis::Y: return sign == 0 ? PrepState::PlusI : PrepState::MinusI;
      case CutBasis::Z: return sign == 0 ? PrepState::Zero : PrepState::One;
    }
    return PrepState::Zero;
  }

  /// Measurement setting executed on the measure side; identity reuses Z.
  CutBasis measured_setting() const { return basis == CutBasis::I ? CutBasis::Z : basis; }

  /// Eigenvalue of measurement outcome bit t under this basis element. The
  /// identity weights both outcomes +1.
  double outcome_eigenvalue(char t) const {
    if (basis == CutBasis::I) return 1.0;
    return t == '0' ? 1.0 : -1.0;
  }

  /// Half the prepared eigenstate's eigenvalue: the 1/2 tr[M M] = 2
  /// normalization times the sign carried by the prepared projector.
  double weight_factor() const {
    if (basis == CutBasis::I) return 0.5;
    return sign == 0 ? 0.5 : -0.5;
  }
};

/// Basis/sign choice for every cut plus the product weight.
struct VariantAssignment {
  std::vector<CutSetting> settings;
  double weight = 1.0;

  std::string label() const {
    std::string s;
    for (const CutSetting& cs : settings) {
      s.push_back(cut_basis_letter(cs.basis));
      s.push_back(cs.sign == 0 ? '+' : '-');
    }
    return s;
  }
};

constexpr int kDefaultCutCap = 4;

/// All 8^c basis/sign assignments in lexicographic order: cut index major,
/// then basis I < X < Y < Z, then sign + < -.
inline std::vector<VariantAssignment> enumerate_variants(const FragmentSet& f,
                                                         int max_cuts = kDefaultCutCap) {
  const int c = static_cast<int>(f.cuts.size());
  if (c > max_cuts)
    throw CombinatorialBudgetError(
        std::to_string(c) + " cuts exceed the cap of " + std::to_string(max_cuts) + " (" +
        std::to_string(static_cast<long long>(1) << (3 * c)) + " variants)");
  const CutBasis bases[4] = {CutBasis::I, CutBasis::X, CutBasis::Y, CutBasis::Z};
  std::vector<VariantAssignment> out;
  const long long total = 1ll << (3 * c);
  out.reserve(static_cast<size_t>(total));
  for (long long code = 0; code < total; ++code) {
    VariantAssignment v;
    v.settings.resize(static_cast<size_t>(c));
    long long rem = code;
    for (int ci = c - 1; ci >= 0; --ci) {
      int slot = static_cast<int>(rem & 7);
      rem >>= 3;
      CutSetting cs{bases[slot >> 1], slot & 1};
      v.weight *= cs.weight_factor();
      v.settings[static_cast<size_t>(ci)] = cs;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cutmit
