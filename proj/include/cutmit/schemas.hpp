// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

namespace cutmit::schemas {

// Embedded copies of the schema files shipped under schemas/. The test
// suite asserts byte equality between each embedded document and its file,
// so the two cannot drift apart.

inline constexpr const char* kDistribution = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/distribution.schema.json",
  "title": "cutmit.distribution/v1",
  "type": "object",
  "required": ["format", "num_bits", "kind", "table"],
  "properties": {
    "format": {"const": "cutmit.distribution/v1"},
    "num_bits": {"type": "integer", "minimum": 0},
    "kind": {"enum": ["exact", "sampled", "reconstructed", "mitigated", "recombined"]},
    "shots": {"type": "integer", "minimum": 0},
    "clipped_mass": {"type": "number", "minimum": 0},
    "table": {"type": "object", "additionalProperties": {"type": "number"}}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kNoise = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/noise.schema.json",
  "title": "cutmit.noise/v1",
  "type": "object",
  "required": ["format"],
  "properties": {
    "format": {"const": "cutmit.noise/v1"},
    "one_qubit_depolarizing": {"type": "number", "minimum": 0},
    "two_qubit_depolarizing": {"type": "number", "minimum": 0},
    "spam_flip": {"type": "number", "minimum": 0},
    "per_qubit_pauli": {
      "type": "object",
      "additionalProperties": {
        "type": "object",
        "properties": {
          "px": {"type": "number", "minimum": 0},
          "py": {"type": "number", "minimum": 0},
          "pz": {"type": "number", "minimum": 0}
        },
        "additionalProperties": false
      }
    },
    "readout_flip": {"type": "object", "additionalProperties": {"type": "number", "minimum": 0}}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kReconstruction = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/reconstruction.schema.json",
  "title": "cutmit.reconstruction/v1",
  "type": "object",
  "required": ["format", "joint", "terms_executed", "negativity", "executed_configurations"],
  "properties": {
    "format": {"const": "cutmit.reconstruction/v1"},
    "joint": {"type": "object", "required": ["format", "num_bits", "kind", "table"]},
    "terms_executed": {"type": "integer", "minimum": 0},
    "negativity": {"type": "number", "minimum": 0},
    "executed_configurations": {"type": "integer", "minimum": 0}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kPostselection = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/postselection.schema.json",
  "title": "cutmit.postselection/v1",
  "type": "object",
  "required": ["format", "distribution", "retained_fraction", "clipped_mass"],
  "properties": {
    "format": {"const": "cutmit.postselection/v1"},
    "distribution": {"type": "object", "required": ["format", "num_bits", "kind", "table"]},
    "retained_fraction": {"type": "number", "minimum": 0, "maximum": 1},
    "clipped_mass": {"type": "number", "minimum": 0}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kRecombination = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/recombination.schema.json",
  "title": "cutmit.recombination/v1",
  "type": "object",
  "required": ["format", "distribution", "converged", "iterations", "final_step", "achieved_delta"],
  "properties": {
    "format": {"const": "cutmit.recombination/v1"},
    "distribution": {"type": "object", "required": ["format", "num_bits", "kind", "table"]},
    "converged": {"type": "boolean"},
    "iterations": {"type": "integer", "minimum": 0},
    "final_step": {"type": "number", "minimum": 0},
    "achieved_delta": {"type": "number", "minimum": 0}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kCampaign = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/campaign.schema.json",
  "title": "cutmit.campaign/v1",
  "type": "object",
  "required": ["format", "status", "unmitigated", "mitigated", "retained_fraction",
               "clipped_mass", "negativity", "executed_configurations", "seed"],
  "properties": {
    "format": {"const": "cutmit.campaign/v1"},
    "status": {"enum": ["complete", "partial"]},
    "unmitigated": {"type": "string"},
    "mitigated": {"type": "object", "additionalProperties": {"type": "string"}},
    "retained_fraction": {"type": "object", "additionalProperties": {"type": "number"}},
    "clipped_mass": {"type": "object", "additionalProperties": {"type": "number"}},
    "negativity": {"type": "object", "additionalProperties": {"type": "number"}},
    "executed_configurations": {"type": "integer", "minimum": 0},
    "seed": {"type": "integer", "minimum": 0},
    "failed_qubit": {"type": "integer", "minimum": 0},
    "error": {"type": "string"}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kEnergyReport = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/energy_report.schema.json",
  "title": "cutmit.energy_report/v1",
  "type": "object",
  "required": ["format", "method", "energy", "shots", "per_term"],
  "properties": {
    "format": {"const": "cutmit.energy_report/v1"},
    "method": {"type": "string"},
    "energy": {"type": "number"},
    "shots": {"type": "integer", "minimum": 0},
    "per_term": {"type": "object", "additionalProperties": {"type": "number"}},
    "stderr": {"type": "number", "minimum": 0},
    "num_seeds": {"type": "integer", "minimum": 1},
    "per_qubit_energy": {"type": "object", "additionalProperties": {"type": "number"}}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kComparison = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/comparison.schema.json",
  "title": "cutmit.comparison/v1",
  "type": "object",
  "required": ["format", "num_seeds", "shots", "root_seed", "per_seed", "summary"],
  "properties": {
    "format": {"const": "cutmit.comparison/v1"},
    "num_seeds": {"type": "integer", "minimum": 1},
    "shots": {"type": "integer", "minimum": 0},
    "root_seed": {"type": "integer", "minimum": 0},
    "per_seed": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["seed", "energies", "recombination", "executed_configurations"],
        "properties": {
          "seed": {"type": "integer", "minimum": 0},
          "energies": {"type": "object", "additionalProperties": {"type": "number"}},
          "recombination": {
            "type": "object",
            "required": ["converged", "iterations", "achieved_delta"]
          },
          "executed_configurations": {"type": "integer", "minimum": 0}
        },
        "additionalProperties": false
      }
    },
    "summary": {
      "type": "object",
      "additionalProperties": {
        "type": "object",
        "required": ["mean", "stderr"],
        "properties": {
          "mean": {"type": "number"},
          "stderr": {"type": "number", "minimum": 0}
        },
        "additionalProperties": false
      }
    }
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kRunManifest = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/run_manifest.schema.json",
  "title": "cutmit.run_manifest/v1",
  "type": "object",
  "required": ["format", "tool", "version", "command", "config", "seeds", "inputs",
               "outputs", "wall_clock_seconds"],
  "properties": {
    "format": {"const": "cutmit.run_manifest/v1"},
    "tool": {"const": "cutmit"},
    "version": {"type": "string"},
    "command": {"type": "string"},
    "config": {"type": "object"},
    "seeds": {
      "type": "object",
      "required": ["root"],
      "properties": {"root": {"type": "integer", "minimum": 0}},
      "additionalProperties": false
    },
    "inputs": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["name", "path", "digest"],
        "properties": {
          "name": {"type": "string"},
          "path": {"type": "string"},
          "digest": {"type": "string"}
        },
        "additionalProperties": false
      }
    },
    "outputs": {"type": "array", "items": {"type": "string"}},
    "wall_clock_seconds": {"type": "number", "minimum": 0}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kAnsatz = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/ansatz.schema.json",
  "title": "cutmit.ansatz/v1",
  "type": "object",
  "required": ["format", "num_qubits"],
  "properties": {
    "format": {"const": "cutmit.ansatz/v1"},
    "num_qubits": {"type": "integer", "minimum": 1},
    "rotations": {"type": "array", "items": {"enum": ["RX", "RY", "RZ"]}},
    "occupation": {"type": "string"}
  },
  "additionalProperties": false
}
)";

inline constexpr const char* kParams = R"({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "https://cutmit.dev/schemas/params.schema.json",
  "title": "cutmit.params/v1",
  "type": "object",
  "required": ["format", "values"],
  "properties": {
    "format": {"const": "cutmit.params/v1"},
    "values": {"type": "array", "items": {"type": "number"}}
  },
  "additionalProperties": false
}
)";

inline const std::map<std::string, const char*>& registry() {
  static const std::map<std::string, const char*> r = {
      {"ansatz", kAnsatz},
      {"campaign", kCampaign},
      {"comparison", kComparison},
      {"distribution", kDistribution},
      {"energy_report", kEnergyReport},
      {"noise", kNoise},
      {"params", kParams},
      {"postselection", kPostselection},
      {"recombination", kRecombination},
      {"reconstruction", kReconstruction},
      {"run_manifest", kRunManifest},
  };
  return r;
}

inline std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : registry()) out.push_back(name);
  return out;
}

}  // namespace cutmit::schemas
