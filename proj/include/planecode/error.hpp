// Copyright 2026 The Planecode Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace planecode {

/// Every failure the library reports. Names are stable: the CLI prints them
/// verbatim as diagnostics.
enum class Errc {
  // geometry
  DegenerateTriangle,
  NotUnitVector,
  NotConvex,
  NotClosed,
  UnboundedRegion,
  EmptyRegion,
  IllConditioned,
  NotARotation,
  NonManifold,
  InconsistentOrientation,
  NonSimpleBoundary,
  BoundaryNotCuttable,
  PartUndecodable,
  WeldMismatch,
  OverSimplified,
  // mesh files
  ParseError,
  UnsupportedFeature,
  // .plnc files
  BadMagic,
  UnsupportedVersion,
  TruncatedPayload,
  AngleOutOfRange,
  NonFiniteValue,
  InvalidKind,
  TrailingData,
  EmptyCode,
};

enum class ErrorCategory { Geometry, Parse, Format };

const char* to_string(Errc code);
ErrorCategory category(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace planecode
