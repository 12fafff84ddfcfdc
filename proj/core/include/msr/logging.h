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

#ifndef MSR_LOGGING_H_
#define MSR_LOGGING_H_

#include <string_view>

namespace msr::log {

// Messages go to stderr. The threshold comes from the MSR_LOG environment
// variable (error, info or debug); warnings are shown unless MSR_LOG=error.
void Error(std::string_view message);
void Warning(std::string_view message);
void Info(std::string_view message);
void Debug(std::string_view message);

}  // namespace msr::log

#endif  // MSR_LOGGING_H_
