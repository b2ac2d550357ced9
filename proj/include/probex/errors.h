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

#ifndef PROBEX_ERRORS_H_
#define PROBEX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace probex {

enum class ErrorCode {
  kInvalidInput,
  kDomainTooLarge,
  kUndefinedConditional,
  kBackendMismatch,
  kUnsatisfiable,
  kCapExceeded,
  kRequiresPreprocessing,
  kLoadError,
};

const char* ErrorCodeName(ErrorCode code);

// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace probex

#endif  // PROBEX_ERRORS_H_
