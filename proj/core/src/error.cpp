/*
 * Copyright (c) 2026, The cgrain Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cgrain/error.hpp"

namespace cgrain {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::ZeroTotal: return "ZeroTotal";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualIndices: return "EqualIndices";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ZeroProbabilityWithZeroAlpha: return "ZeroProbabilityWithZeroAlpha";
    case ErrorCode::RaggedConditionals: return "RaggedConditionals";
    case ErrorCode::UnknownEntropy: return "UnknownEntropy";
    case ErrorCode::UnknownParam: return "UnknownParam";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::ParamOutOfDomain: return "ParamOutOfDomain";
    case ErrorCode::ZeroUnsupported: return "ZeroUnsupported";
    case ErrorCode::DeltaExceedsBound: return "DeltaExceedsBound";
    case ErrorCode::DimensionRequired: return "DimensionRequired";
    case ErrorCode::NoPhiDecomposition: return "NoPhiDecomposition";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::NoDerivative: return "NoDerivative";
    case ErrorCode::BreakpointHit: return "BreakpointHit";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonPositiveShape: return "NonPositiveShape";
    case ErrorCode::CoefficientConditionViolated: return "CoefficientConditionViolated";
    case ErrorCode::TruncationCapHit: return "TruncationCapHit";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::DegenerateHead: return "DegenerateHead";
    case ErrorCode::ZeroMarginal: return "ZeroMarginal";
    case ErrorCode::ZeroTail: return "ZeroTail";
    case ErrorCode::BadInverse: return "BadInverse";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace cgrain
