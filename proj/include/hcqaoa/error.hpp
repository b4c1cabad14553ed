// Copyright 2026 The hcqaoa Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcqaoa {

enum class ErrorKind {
    MalformedInput,
    InvalidOrder,
    EndpointOutOfRange,
    IndexOutOfRange,
    LengthMismatch,
    NonPositiveWeight,
    UnmappedVariable,
    WeightMissing,
    TooManyQubits,
    EmptyModel,
    ArityMismatch,
    UnboundParameter,
    DimensionMismatch,
    InvalidArgument,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedInput:
        return "MalformedInput";
    case ErrorKind::InvalidOrder:
        return "InvalidOrder";
    case ErrorKind::EndpointOutOfRange:
        return "EndpointOutOfRange";
    case ErrorKind::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorKind::LengthMismatch:
        return "LengthMismatch";
    case ErrorKind::NonPositiveWeight:
        return "NonPositiveWeight";
    case ErrorKind::UnmappedVariable:
        return "UnmappedVariable";
    case ErrorKind::WeightMissing:
        return "WeightMissing";
    case ErrorKind::TooManyQubits:
        return "TooManyQubits";
    case ErrorKind::EmptyModel:
        return "EmptyModel";
    case ErrorKind::ArityMismatch:
        return "ArityMismatch";
    case ErrorKind::UnboundParameter:
        return "UnboundParameter";
    case ErrorKind::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

} // namespace hcqaoa
