/*
 * Copyright 2026 The probex Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PROBEX_CLI_H_
#define PROBEX_CLI_H_

#include <iosfwd>

namespace probex {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flags or unloadable artifacts
inline constexpr int kExitUnsatisfiable = 3;
inline constexpr int kExitFailure = 4;

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace probex

#endif  // PROBEX_CLI_H_
