// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cutmit/circuit_io.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// Pauli word over n qubits. letters[k] is the factor acting on qubit k and
/// is one of 'I', 'X', 'Y', 'Z'.
struct PauliString {
  std::string letters;

  PauliString() = default;
  explicit PauliString(std::string s) : letters(std::move(s)) { validate(); }

  static PauliString identity(int n) { return PauliString(std::string(static_cast<size_t>(n), 'I')); }

  /// Single non-identity letter at qubit k.
  static PauliString single(int n, int k, char letter) {
    PauliString p = identity(n);
    if (k < 0 || k >= n) throw ValidationError("Pauli qubit index out of range");
    p.letters[static_cast<size_t>(k)] = letter;
    p.validate();
    return p;
  }

  int num_qubits() const { return static_cast<int>(letters.size()); }

  char at(int k) const { return letters.at(static_cast<size_t>(k)); }

  bool is_identity() const {
    return letters.find_first_not_of('I') == std::string::npos;
  }

  int weight() const {
    int w = 0;
    for (char c : letters)
      if (c != 'I') ++w;
    return w;
  }

  std::vector<int> support() const {
    std::vector<int> qs;
    for (size_t k = 0; k < letters.size(); ++k)
      if (letters[k] != 'I') qs.push_back(static_cast<int>(k));
    return qs;
  }

  void validate() const {
    if (letters.empty()) throw ValidationError("empty Pauli word");
    for (char c : letters)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        throw ValidationError(std::string("invalid Pauli letter '") + c + "'");
  }

  /// Two words are qubit-wise compatible when they agree on every qubit where
  /// both are non-identity. Such words can share one measurement basis.
  bool qubit_wise_compatible(const PauliString& o) const {
    if (letters.size() != o.letters.size())
      throw ValidationError("Pauli length mismatch");
    for (size_t k = 0; k < letters.size(); ++k)
      if (letters[k] != 'I' && o.letters[k] != 'I' && letters[k] != o.letters[k])
        return false;
    return true;
  }

  auto operator<=>(const PauliString&) const = default;
};

struct PauliTerm {
  double coefficient = 0.0;
  PauliString word;
};

/// Real linear combination of Pauli words on a fixed qubit count.
struct Hamiltonian {
  int num_qubits = 0;
  std::vector<PauliTerm> terms;

  void validate() const {
    if (num_qubits <= 0) throw ValidationError("Hamiltonian needs a positive qubit count");
    for (const PauliTerm& t : terms) {
      t.word.validate();
      if (t.word.num_qubits() != num_qubits)
        throw ValidationError("Pauli word length does not match qubit count");
      if (!std::isfinite(t.coefficient))
        throw ValidationError("non-finite Hamiltonian coefficient");
    }
  }

  /// Sums coefficients of repeated words and drops exact zeros. Keeps first
  /// appearance order.
  Hamiltonian merged() const {
    Hamiltonian out;
    out.num_qubits = num_qubits;
    std::map<PauliString, size_t> index;
    for (const PauliTerm& t : terms) {
      auto it = index.find(t.word);
      if (it == index.end()) {
        index.emplace(t.word, out.terms.size());
        out.terms.push_back(t);
      } else {
        out.terms[it->second].coefficient += t.coefficient;
      }
    }
    std::vector<PauliTerm> kept;
    for (const PauliTerm& t : out.terms)
      if (t.coefficient != 0.0) kept.push_back(t);
    out.terms = std::move(kept);
    return out;
  }

  double identity_offset() const {
    double c = 0.0;
    for (const PauliTerm& t : terms)
      if (t.word.is_identity()) c += t.coefficient;
    return c;
  }
};

/// Parses lines of "<coefficient> <letters>"; '#' starts a comment. All words
/// must have equal length, which fixes the qubit count.
inline Hamiltonian parse_hamiltonian(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  Hamiltonian h;
  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = detail::strip(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string coeff_tok, word_tok, extra;
    if (!(ls >> coeff_tok >> word_tok))
      throw ParseError("expected '<coefficient> <letters>'", line_no);
    if (ls >> extra) throw ParseError("unexpected token '" + extra + "'", line_no);
    PauliTerm t;
    t.coefficient = detail::parse_number(coeff_tok, line_no);
    try {
      t.word = PauliString(word_tok);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (h.num_qubits == 0) {
      h.num_qubits = t.word.num_qubits();
    } else if (t.word.num_qubits() != h.num_qubits) {
      throw ParseError("Pauli word length " + std::to_string(t.word.num_qubits()) +
                       " does not match earlier length " + std::to_string(h.num_qubits),
                       line_no);
    }
    h.terms.push_back(std::move(t));
  }
  if (h.terms.empty()) throw ParseError("empty Hamiltonian text", 0);
  h.validate();
  return h;
}

inline std::string serialize_hamiltonian(const Hamiltonian& h) {
  h.validate();
  std::ostringstream out;
  for (const PauliTerm& t : h.terms)
    out << format_double(t.coefficient) << " " << t.word.letters << "\n";
  return out.str();
}

}  // namespace cutmit
