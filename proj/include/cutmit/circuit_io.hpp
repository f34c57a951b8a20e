// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// Shortest decimal form that round-trips an IEEE double exactly.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer shorter forms when they parse back to the same value.
  for (int prec = 1; prec < 17; ++prec) {
    char probe[64];
    std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
    if (std::strtod(probe, nullptr) == v) return probe;
  }
  return buf;
}

namespace detail {

inline std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(strip(cur));
  return out;
}

inline int parse_qubit_token(const std::string& tok, int line) {
  if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'Q'))
    throw ParseError("expected qubit token like 'q0', got '" + tok + "'", line);
  for (size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("malformed qubit token '" + tok + "'", line);
  return std::stoi(tok.substr(1));
}

inline double parse_number(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + tok + "'", line);
  }
}

}  // namespace detail

/// Parses the line-oriented circuit format.
///
///   qubits N
///   H q0
///   RX(0.5) q1
///   CZ q0,q1
///   prep q2 +
///   measure all | measure q0,q2
///
/// '#' starts a comment; blank lines are ignored. The qubits line must come
/// first; at most one measure line, which must come last.
inline Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  bool have_measure = false;
  Circuit c;

  while (std::getline(in, raw)) {
    ++line_no;
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = detail::strip(raw);
    if (line.empty()) continue;
    if (have_measure)
      throw ParseError("no statements allowed after 'measure'", line_no);

    std::istringstream ls(line);
    std::string head;
    ls >> head;

    if (head == "qubits") {
      if (have_header) throw ParseError("duplicate 'qubits' line", line_no);
      std::string n_tok;
      if (!(ls >> n_tok)) throw ParseError("'qubits' needs a count", line_no);
      int n;
      try {
        n = std::stoi(n_tok);
      } catch (const std::exception&) {
        throw ParseError("malformed qubit count '" + n_tok + "'", line_no);
      }
      if (n <= 0) throw ParseError("qubit count must be positive", line_no);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected token '" + extra + "'", line_no);
      c = Circuit(n);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError("first statement must be 'qubits N'", line_no);

    if (head == "measure") {
      std::string rest;
      std::getline(ls, rest);
      rest = detail::strip(rest);
      if (rest.empty()) throw ParseError("'measure' needs 'all' or a qubit list", line_no);
      if (rest == "all") {
        c.measure_all();
      } else {
        std::vector<int> qs;
        for (const std::string& tok : detail::split(rest, ','))
          qs.push_back(detail::parse_qubit_token(tok, line_no));
        try {
          c.measure(std::move(qs));
        } catch (const ValidationError& e) {
          throw ParseError(e.what(), line_no);
        }
      }
      have_measure = true;
      continue;
    }

    if (head == "prep") {
      std::string q_tok, label, extra;
      if (!(ls >> q_tok >> label))
        throw ParseError("'prep' needs a qubit and a state label", line_no);
      if (ls >> extra) throw ParseError("unexpected token '" + extra + "'", line_no);
      auto st = prep_from_label(label);
      if (!st)
        throw ParseError("unknown preparation label '" + label +
                         "' (expected 0, 1, +, -, +i, -i)", line_no);
      try {
        c.prepare(detail::parse_qubit_token(q_tok, line_no), *st);
      } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }

    // Gate statement: NAME or NAME(params), then comma-separated qubits.
    std::string name = head;
    std::vector<double> params;
    size_t open = head.find('(');
    if (open != std::string::npos) {
      if (head.back() != ')')
        throw ParseError("unbalanced parentheses in '" + head + "'", line_no);
      name = head.substr(0, open);
      std::string inner = head.substr(open + 1, head.size() - open - 2);
      if (detail::strip(inner).empty())
        throw ParseError("empty parameter list in '" + head + "'", line_no);
      for (const std::string& tok : detail::split(inner, ','))
        params.push_back(detail::parse_number(tok, line_no));
    }
    auto kind = gate_kind_from_name(name);
    if (!kind) throw ParseError("unknown gate '" + name + "'", line_no);

    std::string rest;
    std::getline(ls, rest);
    rest = detail::strip(rest);
    if (rest.empty()) throw ParseError("gate '" + name + "' needs qubit operands", line_no);
    std::vector<int> qs;
    for (const std::string& tok : detail::split(rest, ','))
      qs.push_back(detail::parse_qubit_token(tok, line_no));

    try {
      c.add(Gate{*kind, std::move(qs), std::move(params)});
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
  }

  if (!have_header) throw ParseError("empty circuit text; expected 'qubits N'", 0);
  return c;
}

/// One gate in the text grammar, e.g. "RZ(0.5) q1" or "CZ q0,q1".
inline std::string serialize_gate(const Gate& g) {
  std::ostringstream out;
  out << gate_name(g.kind);
  if (!g.params.empty()) {
    out << "(";
    for (size_t i = 0; i < g.params.size(); ++i) {
      if (i) out << ",";
      out << format_double(g.params[i]);
    }
    out << ")";
  }
  for (size_t i = 0; i < g.qubits.size(); ++i)
    out << (i ? ",q" : " q") << g.qubits[i];
  return out.str();
}

/// Serializes a circuit to the text form parse_circuit accepts. Parameters
/// are written with round-trip precision so parse(serialize(c)) == c.
inline std::string serialize_circuit(const Circuit& c) {
  c.validate();
  std::ostringstream out;
  out << "qubits " << c.num_qubits << "\n";
  if (!c.initial_preparations.empty())
    for (int q = 0; q < c.num_qubits; ++q)
      if (c.initial_preparations[static_cast<size_t>(q)] != PrepState::Zero)
        out << "prep q" << q << " "
            << prep_label(c.initial_preparations[static_cast<size_t>(q)]) << "\n";
  for (const Gate& g : c.gates) out << serialize_gate(g) << "\n";
  if (!c.measured_qubits.empty()) {
    bool all = static_cast<int>(c.measured_qubits.size()) == c.num_qubits;
    if (all)
      for (int q = 0; q < c.num_qubits; ++q)
        if (c.measured_qubits[static_cast<size_t>(q)] != q) { all = false; break; }
    if (all) {
      out << "measure all\n";
    } else {
      out << "measure ";
      for (size_t i = 0; i < c.measured_qubits.size(); ++i)
        out << (i ? ",q" : "q") << c.measured_qubits[i];
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace cutmit
