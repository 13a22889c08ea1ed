/**
 * Copyright 2026 The SPIN Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// spin: command-line front end. One config file drives each run.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spin/spin.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sky-image and satellite preprocessing, baselines and metrics"};
  app.require_subcommand(1);

  std::string config_path, output_override, predictions;
  const std::pair<const char*, const char*> subs[] = {
      {"transform", "apply the configured image transformation to every frame"},
      {"augment", "write augmented training sequences and their manifest"},
      {"baseline", "score persistence and smart persistence on the test split"},
      {"evaluate", "score a predictions CSV against smart persistence"},
      {"cloudindex", "rolling background and per-pixel cloud index maps"},
      {"split", "build the sample index and its train/val/test split"},
      {"synth", "render a synthetic sky-image tree with irradiance"},
  };
  for (const auto& [name, help] : subs) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-c,--config", config_path, "JSON run configuration")->required();
    sub->add_option("-o,--output", output_override, "override output_dir");
    if (std::string(name) == "evaluate") {
      sub->add_option("-p,--predictions", predictions, "CSV issued_at_utc,horizon_s,predicted_wm2")->required();
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : spin::cli::kExitConfig;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  return spin::cli::run_guarded(
      [&] {
        spin::RunConfig cfg = spin::load_config(config_path);
        if (!output_override.empty()) cfg.output_dir = output_override;
        std::filesystem::create_directories(cfg.output_dir);
        namespace c = spin::cli;
        if (cmd == "transform") return c::cmd_transform(cfg);
        if (cmd == "augment") return c::cmd_augment(cfg);
        if (cmd == "baseline") return c::cmd_baseline(cfg);
        if (cmd == "evaluate") return c::cmd_evaluate(cfg, predictions);
        if (cmd == "cloudindex") return c::cmd_cloudindex(cfg);
        if (cmd == "split") return c::cmd_split(cfg);
        return c::cmd_synth(cfg);
      },
      std::cerr);
}
