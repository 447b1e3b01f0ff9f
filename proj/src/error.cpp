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

#include "privstate/error.hpp"

namespace privstate {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "invalid argument";
        case ErrorCode::kDuplicateLabel: return "duplicate label";
        case ErrorCode::kBudgetExceeded: return "dimension budget exceeded";
        case ErrorCode::kUnknownLabel: return "unknown label";
        case ErrorCode::kLabelClash: return "label clash";
        case ErrorCode::kLayoutMismatch: return "layout mismatch";
        case ErrorCode::kNotDensity: return "not a density matrix";
        case ErrorCode::kNotUnitary: return "not unitary";
        case ErrorCode::kInvalidSpec: return "invalid spec";
        case ErrorCode::kNotOrthogonal: return "supports not orthogonal";
        case ErrorCode::kNotNormal: return "matrix not normal";
        case ErrorCode::kNotUnitTraceNorm: return "trace norm not one";
        case ErrorCode::kPowerNotPsd: return "matrix power not positive";
        case ErrorCode::kNoKeyParts: return "no key parts";
        case ErrorCode::kMissingRoles: return "missing key or shield parts";
        case ErrorCode::kUnsupportedFamily: return "unsupported family";
        case ErrorCode::kNotKeyCorrelated: return "not key correlated";
        case ErrorCode::kInvalidPovm: return "invalid POVM";
        case ErrorCode::kBadLabels: return "bad labels";
        case ErrorCode::kMixtureMismatch: return "mixture mismatch";
        case ErrorCode::kUnknownName: return "unknown name";
        case ErrorCode::kIo: return "I/O failure";
        case ErrorCode::kUsage: return "usage error";
    }
    return "unknown error";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace privstate
