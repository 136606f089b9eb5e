// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0
//
// The full knob bundle of the library, with JSON overrides. A config file
// (or inline JSON) may set any subset of
//   {"solver": {...}, "ransac": {...}, "scene": {...},
//    "correct_threshold": x}
// using the field names of the corresponding structs; unknown keys are
// rejected so typos fail loudly.

#pragma once

#include <string>

#include "core/ransac.hpp"
#include "core/synth.hpp"

namespace essmat {

struct Options {
  SolverConfig solver;
  RansacConfig ransac;
  SceneConfig scene;
  double correct_threshold = 0.002;

  void validate() const;
};

// Throws std::runtime_error on malformed JSON or unknown keys.
void apply_json_overrides(Options& opts, const std::string& json_text);
void apply_json_file(Options& opts, const std::string& path);

}  // namespace essmat
