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

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "planecode/convex_codec.hpp"
#include "planecode/polygonize.hpp"

namespace planecode {

/// Contents of a .plnc file.
using Code = std::variant<PlaneSet, SegmentedCode>;
using Bytes = std::vector<std::uint8_t>;

inline constexpr std::uint8_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderSize = 6;
inline constexpr std::size_t kRecordSize = 12;

/// Serializes to the .plnc layout: "PLNC", version, kind, counts and
/// little-endian float32 (nu, phi, h) records. Throws Errc::EmptyCode for
/// codes without planes and Errc::NonFiniteValue for NaN or infinite values.
Bytes write_code(const PlaneSet& code);
Bytes write_code(const SegmentedCode& code);
Bytes write_code(const Code& code);

/// Strict inverse of write_code. Arbitrary input yields either a code or a
/// planecode::Error with a format error code; it never reads out of bounds.
Code read_code(std::span<const std::uint8_t> bytes);

}  // namespace planecode
