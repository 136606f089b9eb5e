// Copyright 2026 The essmat authors
// SPDX-License-Identifier: Apache-2.0

#include "core/options.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace essmat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("config: " + what);
}

template <typename T>
void take(const json& obj, const char* key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void check_keys(const json& obj, std::initializer_list<const char*> known,
                const char* where) {
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok |= item.key() == k;
    if (!ok) fail(std::string("unknown key '") + item.key() + "' in " + where);
  }
}

void parse_solver(const json& obj, SolverConfig& cfg) {
  check_keys(obj,
             {"gn_max_iters", "lm_max_iters", "lm_lambda_init", "converge_rms",
              "robust_set_size", "robust_scale", "robust_max_iters",
              "fivepoint_accept_tol", "fivepoint_z_max"},
             "solver");
  take(obj, "gn_max_iters", cfg.gn_max_iters);
  take(obj, "lm_max_iters", cfg.lm_max_iters);
  take(obj, "lm_lambda_init", cfg.lm_lambda_init);
  take(obj, "converge_rms", cfg.converge_rms);
  take(obj, "robust_set_size", cfg.robust_set_size);
  take(obj, "robust_scale", cfg.robust_scale);
  take(obj, "robust_max_iters", cfg.robust_max_iters);
  take(obj, "fivepoint_accept_tol", cfg.fivepoint_accept_tol);
  take(obj, "fivepoint_z_max", cfg.fivepoint_z_max);
}

void parse_ransac(const json& obj, RansacConfig& cfg) {
  check_keys(obj,
             {"num_hypotheses", "block_size", "inlier_threshold", "generator",
              "refine", "seed"},
             "ransac");
  take(obj, "num_hypotheses", cfg.num_hypotheses);
  take(obj, "block_size", cfg.block_size);
  take(obj, "inlier_threshold", cfg.inlier_threshold);
  take(obj, "refine", cfg.refine);
  take(obj, "seed", cfg.seed);
  if (obj.contains("generator")) {
    const std::string name = obj.at("generator").get<std::string>();
    const auto g = generator_from_name(name);
    if (!g) fail("unknown generator '" + name + "'");
    cfg.generator = *g;
  }
}

void parse_scene(const json& obj, SceneConfig& cfg) {
  check_keys(obj,
             {"fov_degrees", "max_translation", "max_rotation_degrees",
              "noise_sigma", "num_inliers", "num_outliers", "min_depth"},
             "scene");
  take(obj, "fov_degrees", cfg.fov_degrees);
  take(obj, "max_translation", cfg.max_translation);
  take(obj, "max_rotation_degrees", cfg.max_rotation_degrees);
  take(obj, "noise_sigma", cfg.noise_sigma);
  take(obj, "num_inliers", cfg.num_inliers);
  take(obj, "num_outliers", cfg.num_outliers);
  take(obj, "min_depth", cfg.min_depth);
}

}  // namespace

void Options::validate() const {
  solver.validate();
  ransac.validate();
  scene.validate();
  if (!(correct_threshold > 0.0)) {
    throw std::invalid_argument("correct_threshold must be > 0");
  }
}

void apply_json_overrides(Options& opts, const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root, {"solver", "ransac", "scene", "correct_threshold"},
             "config");
  try {
    if (root.contains("solver")) parse_solver(root.at("solver"), opts.solver);
    if (root.contains("ransac")) parse_ransac(root.at("ransac"), opts.ransac);
    if (root.contains("scene")) parse_scene(root.at("scene"), opts.scene);
    take(root, "correct_threshold", opts.correct_threshold);
  } catch (const json::exception& e) {
    fail(e.what());
  }
  opts.validate();
}

void apply_json_file(Options& opts, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  apply_json_overrides(opts, text);
}

}  // namespace essmat
