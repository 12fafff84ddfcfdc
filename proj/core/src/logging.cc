// Copyright 2026 The MSR Ranking Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msr/logging.h"

#include <cstdlib>
#include <memory>
#include <string>

#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

namespace msr::log {
namespace {

spdlog::level::level_enum LevelFromEnv() {
  const char* env = std::getenv("MSR_LOG");
  if (env == nullptr) return spdlog::level::warn;
  const std::string value(env);
  if (value == "error") return spdlog::level::err;
  if (value == "info") return spdlog::level::info;
  if (value == "debug") return spdlog::level::debug;
  return spdlog::level::warn;
}

spdlog::logger& Logger() {
  static const std::shared_ptr<spdlog::logger> logger = [] {
    auto l = spdlog::stderr_color_mt("msr");
    l->set_pattern("[%l] %v");
    l->set_level(LevelFromEnv());
    return l;
  }();
  return *logger;
}

}  // namespace

void Error(std::string_view message) { Logger().error("{}", message); }
void Warning(std::string_view message) { Logger().warn("{}", message); }
void Info(std::string_view message) { Logger().info("{}", message); }
void Debug(std::string_view message) { Logger().debug("{}", message); }

}  // namespace msr::log
