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

#include "planecode/codec_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "planecode/error.hpp"

namespace planecode {

namespace {

constexpr std::uint8_t kMagic[4] = {'P', 'L', 'N', 'C'};
constexpr std::uint8_t kConvexKind = 0;
constexpr std::uint8_t kSegmentedKind = 1;

class Writer {
 public:
  explicit Writer(std::uint8_t kind) {
    out_.assign(std::begin(kMagic), std::end(kMagic));
    out_.push_back(kFormatVersion);
    out_.push_back(kind);
  }

  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v == 0.0f ? 0.0f : v)); }  // no negative zero

  void count(std::size_t n) {
    if (n > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(Errc::TruncatedPayload, "count " + std::to_string(n) + " does not fit in 32 bits");
    }
    u32(static_cast<std::uint32_t>(n));
  }

  void plane(const OrientedPlaned& p) {
    if (!std::isfinite(p.direction.nu) || !std::isfinite(p.direction.phi) || !std::isfinite(p.h)) {
      throw Error(Errc::NonFiniteValue, "plane has a non-finite component");
    }
    // Keep the stored angles inside their ranges after rounding to float.
    const float pi_f = static_cast<float>(std::numbers::pi);
    const float max_nu = static_cast<double>(pi_f) > std::numbers::pi ? std::nextafter(pi_f, 0.0f) : pi_f;
    const float nu = std::clamp(static_cast<float>(p.direction.nu), 0.0f, max_nu);
    float phi = static_cast<float>(p.direction.phi);
    if (!(phi >= 0.0f) || static_cast<double>(phi) >= 2 * std::numbers::pi) phi = 0.0f;
    const float h = static_cast<float>(p.h);
    if (!std::isfinite(h)) throw Error(Errc::NonFiniteValue, "offset overflows float32");
    f32(nu);
    f32(phi);
    f32(h);
  }

  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> b) : b_(b) {}

  std::size_t remaining() const { return b_.size() - at_; }
  std::size_t offset() const { return at_; }

  void need(std::uint64_t n, const char* what) const {
    if (n > remaining()) {
      throw Error(Errc::TruncatedPayload, std::string(what) + " needs " + std::to_string(n) +
                                              " bytes at offset " + std::to_string(at_) + ", " +
                                              std::to_string(remaining()) + " remain");
    }
  }

  std::uint8_t u8(const char* what) {
    need(1, what);
    return b_[at_++];
  }

  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(b_[at_ + static_cast<std::size_t>(i)]) << (8 * i);
    at_ += 4;
    return v;
  }

  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }

  OrientedPlaned plane() {
    const std::size_t start = at_;
    const float nu = f32("plane record");
    const float phi = f32("plane record");
    const float h = f32("plane record");
    if (!std::isfinite(nu) || !std::isfinite(phi) || !std::isfinite(h)) {
      throw Error(Errc::NonFiniteValue, "plane record at offset " + std::to_string(start));
    }
    const double dnu = nu, dphi = phi;
    if (dnu < 0.0 || dnu > std::numbers::pi || dphi < 0.0 || dphi >= 2 * std::numbers::pi) {
      throw Error(Errc::AngleOutOfRange, "plane record at offset " + std::to_string(start) + " has nu=" +
                                             std::to_string(dnu) + ", phi=" + std::to_string(dphi));
    }
    return OrientedPlaned{{dnu, dphi}, static_cast<double>(h)};
  }

  PlaneSet planes(std::uint32_t n) {
    PlaneSet s;
    s.planes.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) s.planes.push_back(plane());
    return s;
  }

 private:
  std::span<const std::uint8_t> b_;
  std::size_t at_ = 0;
};

PlaneSet read_convex(Reader& r) {
  const std::uint32_t n = r.u32("plane count");
  if (n == 0) throw Error(Errc::EmptyCode, "convex code with no planes");
  r.need(std::uint64_t{n} * kRecordSize, "plane records");
  return r.planes(n);
}

SegmentedCode read_segmented(Reader& r) {
  const std::uint32_t parts = r.u32("part count");
  if (parts == 0) throw Error(Errc::EmptyCode, "segmented code with no parts");
  r.need(std::uint64_t{parts} * 9, "part headers");
  SegmentedCode code;
  code.parts.reserve(parts);
  for (std::uint32_t k = 0; k < parts; ++k) {
    PartCode part;
    const std::uint8_t kind = r.u8("part kind");
    if (kind > 1) {
      throw Error(Errc::InvalidKind, "part " + std::to_string(k) + " has kind byte " + std::to_string(kind));
    }
    part.kind = static_cast<PartKind>(kind);
    const std::uint32_t faces = r.u32("face count");
    const std::uint32_t boundary = r.u32("boundary count");
    if (faces == 0) throw Error(Errc::EmptyCode, "part " + std::to_string(k) + " has no face planes");
    r.need((std::uint64_t{faces} + boundary) * kRecordSize, "part records");
    part.face_planes = r.planes(faces);
    part.boundary_planes = r.planes(boundary);
    code.parts.push_back(std::move(part));
  }
  return code;
}

}  // namespace

Bytes write_code(const PlaneSet& code) {
  if (code.empty()) throw Error(Errc::EmptyCode, "convex code with no planes");
  Writer w(kConvexKind);
  w.count(code.size());
  for (const OrientedPlaned& p : code) w.plane(p);
  return w.take();
}

Bytes write_code(const SegmentedCode& code) {
  if (code.parts.empty()) throw Error(Errc::EmptyCode, "segmented code with no parts");
  Writer w(kSegmentedKind);
  w.count(code.parts.size());
  for (std::size_t k = 0; k < code.parts.size(); ++k) {
    const PartCode& part = code.parts[k];
    if (part.face_planes.empty())
      throw Error(Errc::EmptyCode, "part " + std::to_string(k) + " has no face planes");
    w.u8(static_cast<std::uint8_t>(part.kind));
    w.count(part.face_planes.size());
    w.count(part.boundary_planes.size());
    for (const OrientedPlaned& p : part.face_planes) w.plane(p);
    for (const OrientedPlaned& p : part.boundary_planes) w.plane(p);
  }
  return w.take();
}

Bytes write_code(const Code& code) {
  return std::visit([](const auto& c) { return write_code(c); }, code);
}

Code read_code(std::span<const std::uint8_t> bytes) {
  const std::size_t prefix = std::min<std::size_t>(bytes.size(), 4);
  if (!std::equal(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(prefix), std::begin(kMagic)) ||
      bytes.empty()) {
    throw Error(Errc::BadMagic, "file does not start with PLNC");
  }
  Reader r(bytes);
  for (int i = 0; i < 4; ++i) r.u8("magic");
  const std::uint8_t version = r.u8("version");
  if (version != kFormatVersion) {
    throw Error(Errc::UnsupportedVersion,
                "version " + std::to_string(version) + ", expected " + std::to_string(kFormatVersion));
  }
  const std::uint8_t kind = r.u8("kind");
  Code code;
  if (kind == kConvexKind) {
    code = read_convex(r);
  } else if (kind == kSegmentedKind) {
    code = read_segmented(r);
  } else {
    throw Error(Errc::InvalidKind, "code kind byte " + std::to_string(kind));
  }
  if (r.remaining() != 0) {
    throw Error(Errc::TrailingData, std::to_string(r.remaining()) +
                                        " bytes after the last record at offset " +
                                        std::to_string(r.offset()));
  }
  return code;
}

}  // namespace planecode
