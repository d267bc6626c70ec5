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

#include "planecode/error.hpp"

namespace planecode {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::DegenerateTriangle:
      return "DegenerateTriangle";
    case Errc::NotUnitVector:
      return "NotUnitVector";
    case Errc::NotConvex:
      return "NotConvex";
    case Errc::NotClosed:
      return "NotClosed";
    case Errc::UnboundedRegion:
      return "UnboundedRegion";
    case Errc::EmptyRegion:
      return "EmptyRegion";
    case Errc::IllConditioned:
      return "IllConditioned";
    case Errc::NotARotation:
      return "NotARotation";
    case Errc::NonManifold:
      return "NonManifold";
    case Errc::InconsistentOrientation:
      return "InconsistentOrientation";
    case Errc::NonSimpleBoundary:
      return "NonSimpleBoundary";
    case Errc::BoundaryNotCuttable:
      return "BoundaryNotCuttable";
    case Errc::PartUndecodable:
      return "PartUndecodable";
    case Errc::WeldMismatch:
      return "WeldMismatch";
    case Errc::OverSimplified:
      return "OverSimplified";
    case Errc::ParseError:
      return "ParseError";
    case Errc::UnsupportedFeature:
      return "UnsupportedFeature";
    case Errc::BadMagic:
      return "BadMagic";
    case Errc::UnsupportedVersion:
      return "UnsupportedVersion";
    case Errc::TruncatedPayload:
      return "TruncatedPayload";
    case Errc::AngleOutOfRange:
      return "AngleOutOfRange";
    case Errc::NonFiniteValue:
      return "NonFiniteValue";
    case Errc::InvalidKind:
      return "InvalidKind";
    case Errc::TrailingData:
      return "TrailingData";
    case Errc::EmptyCode:
      return "EmptyCode";
  }
  return "Unknown";
}

ErrorCategory category(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::UnsupportedFeature:
      return ErrorCategory::Parse;
    case Errc::BadMagic:
    case Errc::UnsupportedVersion:
    case Errc::TruncatedPayload:
    case Errc::AngleOutOfRange:
    case Errc::NonFiniteValue:
    case Errc::InvalidKind:
    case Errc::TrailingData:
    case Errc::EmptyCode:
      return ErrorCategory::Format;
    default:
      return ErrorCategory::Geometry;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)), code_(code) {}

}  // namespace planecode
