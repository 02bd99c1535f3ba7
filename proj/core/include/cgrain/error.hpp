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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgrain {

/// Every failure the library reports carries one of these codes so callers
/// (and tests) can branch on the kind of error rather than on message text.
enum class ErrorCode {
  EmptyInput,
  NegativeWeight,
  ZeroTotal,
  InvalidProbability,
  InvalidPartition,
  DimensionMismatch,
  IndexOutOfRange,
  EqualIndices,
  TooLarge,
  TooSmall,
  ZeroProbabilityWithZeroAlpha,
  RaggedConditionals,
  UnknownEntropy,
  UnknownParam,
  MissingParam,
  ParamOutOfDomain,
  ZeroUnsupported,
  DeltaExceedsBound,
  DimensionRequired,
  NoPhiDecomposition,
  NoDecomposition,
  NoDerivative,
  BreakpointHit,
  DomainViolation,
  NonPositiveShape,
  CoefficientConditionViolated,
  TruncationCapHit,
  UnsupportedPair,
  DegenerateHead,
  ZeroMarginal,
  ZeroTail,
  BadInverse,
  UnsupportedFormat,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cgrain
