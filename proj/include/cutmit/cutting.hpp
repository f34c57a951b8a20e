// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cutmit/circuit.hpp"
#include "cutmit/errors.hpp"

namespace cutmit {

/// A wire severed at a gate boundary: the cut lies after gate position-1 and
/// before gate position, so position ranges over [0, gate count].
struct CutPoint {
  int qubit = 0;
  int position = 0;

  auto operator<=>(const CutPoint&) const = default;
};

enum class BackendTag { NoiselessExact, HardwareEmulated };

inline std::string backend_tag_label(BackendTag t) {
  return t == BackendTag::NoiselessExact ? "noiseless" : "hardware-emulated";
}

/// Maximal uncut stretch of one original wire, as a half-open gate-boundary
/// interval [start, end). begin_cut / end_cut name the severing cut, -1 at
/// the circuit boundary.
struct WireRun {
  int original_qubit = 0;
  int start = 0;
  int end = 0;
  int begin_cut = -1;
  int end_cut = -1;
};

/// One executable piece of the cut circuit. Local wire l realizes the run
/// wires[l]; prepare-terminal wires receive variant eigenstates at execution
/// time, measure-terminal wires get basis-change suffixes and are measured
/// after the fragment's own output bits.
struct Fragment {
  Circuit circuit;
  std::vector<WireRun> wires;
  std::vector<int> gate_origin;           // original gate index per local gate
  std::vector<int> output_slots;          // original measured slots read here, ascending
  std::vector<int> measure_terminal_cuts; // cut indices measured here, ascending
  std::vector<int> prepare_terminal_cuts; // cut indices prepared here, ascending

  bool empty() const { return wires.empty(); }

  std::vector<int> local_to_original() const {
    std::vector<int> m;
    m.reserve(wires.size());
    for (const WireRun& w : wires) m.push_back(w.original_qubit);
    return m;
  }
};

struct TerminalRef {
  int fragment = -1;
  int local_wire = -1;
  int key_position = -1;  // position in the fragment's measured key; -1 for prepare side
};

/// Two-fragment decomposition: fragment 0 holds the measure side of the first
/// cut ("upstream"); fragment 1 is the complement. With zero cuts the whole
/// circuit is fragment 0 and fragment 1 is empty.
struct FragmentSet {
  Circuit original;
  std::vector<CutPoint> cuts;
  std::array<Fragment, 2> fragments;
  std::vector<TerminalRef> measure_terminal;     // per cut
  std::vector<TerminalRef> prepare_terminal;     // per cut
  std::vector<std::pair<int, int>> output_map;   // original slot -> (fragment, key position)
  std::array<BackendTag, 2> backend_tags = {BackendTag::NoiselessExact,
                                            BackendTag::NoiselessExact};
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace detail

/// Rebuilds the original gate sequence from the fragments and compares. Used
/// as a structural self-check after cutting.
inline bool verify_recomposition(const FragmentSet& f) {
  const size_t n_gates = f.original.gates.size();
  std::vector<std::pair<int, int>> where(n_gates, {-1, -1});  // (fragment, local index)
  for (int fi = 0; fi < 2; ++fi) {
    const Fragment& frag = f.fragments[static_cast<size_t>(fi)];
    for (size_t li = 0; li < frag.gate_origin.size(); ++li) {
      int orig = frag.gate_origin[li];
      if (orig < 0 || orig >= static_cast<int>(n_gates)) return false;
      if (where[static_cast<size_t>(orig)].first != -1) return false;
      where[static_cast<size_t>(orig)] = {fi, static_cast<int>(li)};
    }
  }
  for (size_t gi = 0; gi < n_gates; ++gi) {
    auto [fi, li] = where[gi];
    if (fi == -1) return false;
    const Fragment& frag = f.fragments[static_cast<size_t>(fi)];
    const Gate& local = frag.circuit.gates[static_cast<size_t>(li)];
    const Gate& orig = f.original.gates[gi];
    if (local.kind != orig.kind || local.params != orig.params) return false;
    if (local.qubits.size() != orig.qubits.size()) return false;
    for (size_t k = 0; k < local.qubits.size(); ++k) {
      const WireRun& w = frag.wires[static_cast<size_t>(local.qubits[k])];
      if (w.original_qubit != orig.qubits[k]) return false;
      if (static_cast<int>(gi) < w.start || static_cast<int>(gi) >= w.end) return false;
    }
  }
  return true;
}

/// Severs the circuit at the given cut points and two-colors the induced run
/// graph into fragments. Components not forced by any cut join
/// fragments[unanchored_fragment].
inline FragmentSet cut_wires(const Circuit& c, const std::vector<CutPoint>& cuts,
                             int unanchored_fragment = 0) {
  c.validate();
  if (unanchored_fragment != 0 && unanchored_fragment != 1)
    throw ValidationError("unanchored fragment must be 0 or 1");
  const int n = c.num_qubits;
  const int n_gates = static_cast<int>(c.gates.size());
  std::set<std::pair<int, int>> seen;
  for (const CutPoint& cp : cuts) {
    if (cp.qubit < 0 || cp.qubit >= n)
      throw ValidationError("cut qubit q" + std::to_string(cp.qubit) + " out of range");
    if (cp.position < 0 || cp.position > n_gates)
      throw ValidationError("cut position " + std::to_string(cp.position) +
                            " outside [0, " + std::to_string(n_gates) + "]");
    if (!seen.insert({cp.qubit, cp.position}).second)
      throw ValidationError("duplicate cut at q" + std::to_string(cp.qubit) + "@" +
                            std::to_string(cp.position));
  }

  // Runs per qubit, split at this qubit's cut positions.
  std::vector<std::vector<WireRun>> runs(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    std::vector<std::pair<int, int>> qcuts;  // (position, cut index)
    for (size_t ci = 0; ci < cuts.size(); ++ci)
      if (cuts[ci].qubit == q) qcuts.emplace_back(cuts[ci].position, static_cast<int>(ci));
    std::sort(qcuts.begin(), qcuts.end());
    int start = 0, begin_cut = -1;
    for (auto [pos, ci] : qcuts) {
      runs[static_cast<size_t>(q)].push_back({q, start, pos, begin_cut, ci});
      start = pos;
      begin_cut = ci;
    }
    runs[static_cast<size_t>(q)].push_back({q, start, n_gates, begin_cut, -1});
  }

  std::vector<int> run_offset(static_cast<size_t>(n) + 1, 0);
  for (int q = 0; q < n; ++q)
    run_offset[static_cast<size_t>(q) + 1] =
        run_offset[static_cast<size_t>(q)] + static_cast<int>(runs[static_cast<size_t>(q)].size());
  const int total_runs = run_offset[static_cast<size_t>(n)];

  // Run of qubit q active at gate index g.
  auto run_at = [&](int q, int g) {
    const auto& qr = runs[static_cast<size_t>(q)];
    for (size_t r = 0; r < qr.size(); ++r)
      if (g >= qr[r].start && g < qr[r].end) return run_offset[static_cast<size_t>(q)] + static_cast<int>(r);
    throw ExecutionError("internal: gate index outside every run");
  };

  detail::UnionFind uf(total_runs);
  for (int g = 0; g < n_gates; ++g) {
    const Gate& gate = c.gates[static_cast<size_t>(g)];
    for (size_t k = 1; k < gate.qubits.size(); ++k)
      uf.unite(run_at(gate.qubits[0], g), run_at(gate.qubits[k], g));
  }

  // Components in deterministic order of their lowest run id.
  std::vector<int> comp_of(static_cast<size_t>(total_runs), -1);
  int n_comps = 0;
  for (int r = 0; r < total_runs; ++r) {
    int root = uf.find(r);
    if (comp_of[static_cast<size_t>(root)] == -1) comp_of[static_cast<size_t>(root)] = n_comps++;
    comp_of[static_cast<size_t>(r)] = comp_of[static_cast<size_t>(root)];
  }

  // Each cut is an unequal-color constraint between the run ending at it and
  // the run starting at it.
  auto run_ending_at = [&](int q, int pos) {
    const auto& qr = runs[static_cast<size_t>(q)];
    for (size_t r = 0; r < qr.size(); ++r)
      if (qr[r].end == pos && qr[r].end_cut != -1)
        return run_offset[static_cast<size_t>(q)] + static_cast<int>(r);
    throw ExecutionError("internal: no run ends at cut");
  };
  std::vector<std::pair<int, int>> cut_edges;  // (measure-side comp, prepare-side comp)
  cut_edges.reserve(cuts.size());
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    const CutPoint& cp = cuts[ci];
    const auto& qr = runs[static_cast<size_t>(cp.qubit)];
    int before = -1, after = -1;
    for (size_t r = 0; r < qr.size(); ++r) {
      if (qr[r].end == cp.position && qr[r].end_cut == static_cast<int>(ci))
        before = run_offset[static_cast<size_t>(cp.qubit)] + static_cast<int>(r);
      if (qr[r].start == cp.position && qr[r].begin_cut == static_cast<int>(ci))
        after = run_offset[static_cast<size_t>(cp.qubit)] + static_cast<int>(r);
    }
    cut_edges.emplace_back(comp_of[static_cast<size_t>(before)], comp_of[static_cast<size_t>(after)]);
  }

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n_comps));
  for (size_t ci = 0; ci < cut_edges.size(); ++ci) {
    auto [a, b] = cut_edges[ci];
    if (a == b)
      throw InfeasibleCutError("cut " + std::to_string(ci) + " (q" +
                               std::to_string(cuts[ci].qubit) + "@" +
                               std::to_string(cuts[ci].position) +
                               ") has gates connecting both sides; a gate would land in "
                               "both fragments");
    adj[static_cast<size_t>(a)].push_back({b, static_cast<int>(ci)});
    adj[static_cast<size_t>(b)].push_back({a, static_cast<int>(ci)});
  }

  std::vector<int> color(static_cast<size_t>(n_comps), -1);
  for (size_t ci = 0; ci < cut_edges.size(); ++ci) {
    int anchor = cut_edges[ci].first;
    if (color[static_cast<size_t>(anchor)] != -1) continue;
    color[static_cast<size_t>(anchor)] = 0;
    std::vector<int> stack = {anchor};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, edge_cut] : adj[static_cast<size_t>(u)]) {
        int want = 1 - color[static_cast<size_t>(u)];
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = want;
          stack.push_back(v);
        } else if (color[static_cast<size_t>(v)] != want) {
          throw InfeasibleCutError("cut " + std::to_string(edge_cut) + " (q" +
                                   std::to_string(cuts[static_cast<size_t>(edge_cut)].qubit) +
                                   "@" +
                                   std::to_string(cuts[static_cast<size_t>(edge_cut)].position) +
                                   ") cannot separate the circuit into two fragments");
        }
      }
    }
  }
  for (int cmp = 0; cmp < n_comps; ++cmp)
    if (color[static_cast<size_t>(cmp)] == -1) color[static_cast<size_t>(cmp)] = unanchored_fragment;

  FragmentSet out;
  out.original = c;
  out.cuts = cuts;

  // Local wires per fragment, ordered by (original qubit, run start).
  std::vector<int> wire_fragment(static_cast<size_t>(total_runs));
  std::vector<int> wire_local(static_cast<size_t>(total_runs));
  std::array<std::vector<int>, 2> frag_runs;
  for (int r = 0; r < total_runs; ++r) {
    int fi = color[static_cast<size_t>(comp_of[static_cast<size_t>(r)])];
    wire_fragment[static_cast<size_t>(r)] = fi;
    wire_local[static_cast<size_t>(r)] = static_cast<int>(frag_runs[static_cast<size_t>(fi)].size());
    frag_runs[static_cast<size_t>(fi)].push_back(r);
  }
  auto run_by_id = [&](int rid) -> const WireRun& {
    int q = static_cast<int>(std::upper_bound(run_offset.begin(), run_offset.end(), rid) -
                             run_offset.begin()) - 1;
    return runs[static_cast<size_t>(q)][static_cast<size_t>(rid - run_offset[static_cast<size_t>(q)])];
  };

  for (int fi = 0; fi < 2; ++fi) {
    Fragment& frag = out.fragments[static_cast<size_t>(fi)];
    for (int rid : frag_runs[static_cast<size_t>(fi)]) frag.wires.push_back(run_by_id(rid));
    if (frag.wires.empty()) continue;
    frag.circuit = Circuit(static_cast<int>(frag.wires.size()));
    for (size_t l = 0; l < frag.wires.size(); ++l) {
      const WireRun& w = frag.wires[l];
      if (w.begin_cut == -1 && c.preparation(w.original_qubit) != PrepState::Zero)
        frag.circuit.prepare(static_cast<int>(l), c.preparation(w.original_qubit));
    }
  }

  for (int g = 0; g < n_gates; ++g) {
    const Gate& gate = c.gates[static_cast<size_t>(g)];
    int rid0 = run_at(gate.qubits[0], g);
    int fi = wire_fragment[static_cast<size_t>(rid0)];
    Gate local = gate;
    for (size_t k = 0; k < gate.qubits.size(); ++k) {
      int rid = run_at(gate.qubits[k], g);
      if (wire_fragment[static_cast<size_t>(rid)] != fi)
        throw ExecutionError("internal: gate operands straddle fragments after coloring");
      local.qubits[k] = wire_local[static_cast<size_t>(rid)];
    }
    out.fragments[static_cast<size_t>(fi)].circuit.add(std::move(local));
    out.fragments[static_cast<size_t>(fi)].gate_origin.push_back(g);
  }

  // Outputs: original measured slot i reads the last run of its qubit.
  out.output_map.assign(c.measured_qubits.size(), {-1, -1});
  std::array<std::vector<std::pair<int, int>>, 2> frag_outputs;  // (slot, local wire)
  for (size_t slot = 0; slot < c.measured_qubits.size(); ++slot) {
    int q = c.measured_qubits[slot];
    int rid = run_offset[static_cast<size_t>(q)] +
              static_cast<int>(runs[static_cast<size_t>(q)].size()) - 1;
    int fi = wire_fragment[static_cast<size_t>(rid)];
    frag_outputs[static_cast<size_t>(fi)].emplace_back(static_cast<int>(slot),
                                                       wire_local[static_cast<size_t>(rid)]);
  }
  out.measure_terminal.assign(cuts.size(), {});
  out.prepare_terminal.assign(cuts.size(), {});
  std::array<std::vector<std::pair<int, int>>, 2> frag_mterms;  // (cut index, local wire)
  for (size_t ci = 0; ci < cuts.size(); ++ci) {
    int rid_before = run_ending_at(cuts[ci].qubit, cuts[ci].position);
    int fi = wire_fragment[static_cast<size_t>(rid_before)];
    frag_mterms[static_cast<size_t>(fi)].emplace_back(static_cast<int>(ci),
                                                      wire_local[static_cast<size_t>(rid_before)]);
    // Prepare side: the run beginning at this cut.
    const auto& qr = runs[static_cast<size_t>(cuts[ci].qubit)];
    for (size_t r = 0; r < qr.size(); ++r)
      if (qr[r].begin_cut == static_cast<int>(ci)) {
        int rid_after = run_offset[static_cast<size_t>(cuts[ci].qubit)] + static_cast<int>(r);
        int fj = wire_fragment[static_cast<size_t>(rid_after)];
        out.prepare_terminal[ci] = {fj, wire_local[static_cast<size_t>(rid_after)], -1};
        out.fragments[static_cast<size_t>(fj)].prepare_terminal_cuts.push_back(
            static_cast<int>(ci));
      }
  }
  for (int fi = 0; fi < 2; ++fi) {
    Fragment& frag = out.fragments[static_cast<size_t>(fi)];
    std::vector<int> measured;
    for (auto [slot, wire] : frag_outputs[static_cast<size_t>(fi)]) {
      out.output_map[static_cast<size_t>(slot)] = {fi, static_cast<int>(measured.size())};
      frag.output_slots.push_back(slot);
      measured.push_back(wire);
    }
    for (auto [ci, wire] : frag_mterms[static_cast<size_t>(fi)]) {
      out.measure_terminal[static_cast<size_t>(ci)] = {fi, wire,
                                                       static_cast<int>(measured.size())};
      frag.measure_terminal_cuts.push_back(ci);
      measured.push_back(wire);
    }
    std::sort(frag.prepare_terminal_cuts.begin(), frag.prepare_terminal_cuts.end());
    if (!frag.empty() && !measured.empty()) frag.circuit.measure(std::move(measured));
  }

  if (!verify_recomposition(out))
    throw ExecutionError("internal: fragment recomposition check failed");
  return out;
}

}  // namespace cutmit
