// Copyright 2026 The privstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVSTATE_ERROR_HPP_
#define PRIVSTATE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace privstate {

enum class ErrorCode {
    kInvalidArgument,
    kDuplicateLabel,
    kBudgetExceeded,
    kUnknownLabel,
    kLabelClash,
    kLayoutMismatch,
    kNotDensity,
    kNotUnitary,
    kInvalidSpec,
    kNotOrthogonal,
    kNotNormal,
    kNotUnitTraceNorm,
    kPowerNotPsd,
    kNoKeyParts,
    kMissingRoles,
    kUnsupportedFamily,
    kNotKeyCorrelated,
    kInvalidPovm,
    kBadLabels,
    kMixtureMismatch,
    kUnknownName,
    kIo,
    kUsage,
};

const char *to_string(ErrorCode code);

/// Every failure raised by the library. The code identifies which
/// precondition was violated; the message carries the details.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace privstate

#endif  // PRIVSTATE_ERROR_HPP_
