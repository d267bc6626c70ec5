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

#include "planecode/mesh_io.hpp"

#include <array>
#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <tuple>

#include "planecode/error.hpp"
#include "surface_patch.hpp"

namespace planecode {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<long long> to_int(std::string_view s) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_curve_keyword(std::string_view k) {
  static const std::set<std::string_view> curves{"cstype", "deg",  "bmat",  "step",  "curv", "curv2",
                                                 "surf",   "parm", "trim",  "hole",  "scrv", "sp",
                                                 "end",    "con",  "ctech", "stech", "l",    "p"};
  return curves.count(k) > 0;
}

TriangleMesh load_obj(std::string_view text) {
  std::vector<Vec3> verts;
  std::vector<Triangle> tris;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string_view key = tok[0];
    if (key == "v") {
      if (tok.size() < 4 || tok.size() > 5) parse_fail(line_no, "vertex needs 3 coordinates");
      Vec3 p;
      for (int k = 0; k < 3; ++k) {
        const auto v = to_double(tok[static_cast<std::size_t>(k) + 1]);
        if (!v)
          parse_fail(line_no, "bad coordinate '" + std::string(tok[static_cast<std::size_t>(k) + 1]) + "'");
        p[k] = *v;
      }
      verts.push_back(p);
    } else if (key == "f") {
      if (tok.size() < 4) parse_fail(line_no, "face needs at least 3 corners");
      std::vector<int> corners;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        const std::string_view field = tok[k].substr(0, tok[k].find('/'));
        const auto idx = to_int(field);
        if (!idx || *idx == 0) parse_fail(line_no, "bad vertex index '" + std::string(tok[k]) + "'");
        const long long n = static_cast<long long>(verts.size());
        const long long resolved = *idx > 0 ? *idx - 1 : n + *idx;
        if (resolved < 0 || resolved >= n) parse_fail(line_no, "vertex index out of range");
        corners.push_back(static_cast<int>(resolved));
      }
      for (std::size_t k = 1; k + 1 < corners.size(); ++k)
        tris.push_back({corners[0], corners[k], corners[k + 1]});
    } else if (is_curve_keyword(key)) {
      throw Error(Errc::UnsupportedFeature, "line " + std::to_string(line_no) + ": '" + std::string(key) +
                                                "' records are not supported");
    }
    // Anything else (vt, vn, g, o, s, usemtl, ...) carries no geometry we use.
  }
  return TriangleMesh(std::move(verts), std::move(tris));
}

class CornerWelder {
 public:
  int add(const Vec3& p) {
    const auto [it, fresh] =
        index_.try_emplace(std::make_tuple(p.x(), p.y(), p.z()), static_cast<int>(verts_.size()));
    if (fresh) verts_.push_back(p);
    return it->second;
  }
  std::vector<Vec3> take() { return std::move(verts_); }

 private:
  std::map<std::tuple<double, double, double>, int> index_;
  std::vector<Vec3> verts_;
};

TriangleMesh load_stl_ascii(std::string_view text) {
  // Token stream with line numbers.
  struct Token {
    std::string_view text;
    std::size_t line;
  };
  std::vector<Token> toks;
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] == '\n') {
      ++line;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back({text.substr(start, i - start), line});
    }
  }
  std::size_t k = 0;
  auto at_line = [&] { return k < toks.size() ? toks[k].line : line; };
  auto expect = [&](std::string_view word) {
    if (k >= toks.size() || toks[k].text != word) {
      parse_fail(at_line(), "expected '" + std::string(word) + "'");
    }
    ++k;
  };
  auto number = [&] {
    if (k >= toks.size()) parse_fail(at_line(), "unexpected end of file");
    const auto v = to_double(toks[k].text);
    if (!v) parse_fail(at_line(), "bad number '" + std::string(toks[k].text) + "'");
    ++k;
    return *v;
  };

  expect("solid");
  // The solid name runs to the end of its line.
  const std::size_t name_line = toks[k - 1].line;
  while (k < toks.size() && toks[k].line == name_line) ++k;

  CornerWelder welder;
  std::vector<Triangle> tris;
  while (k < toks.size() && toks[k].text == "facet") {
    ++k;
    expect("normal");
    for (int i = 0; i < 3; ++i) number();
    expect("outer");
    expect("loop");
    Triangle t{};
    for (int& c : t) {
      expect("vertex");
      const double x = number(), y = number(), z = number();
      c = welder.add(Vec3(x, y, z));
    }
    expect("endloop");
    expect("endfacet");
    tris.push_back(t);
  }
  expect("endsolid");
  return TriangleMesh(welder.take(), std::move(tris));
}

std::uint32_t read_u32(std::string_view b, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

float read_f32(std::string_view b, std::size_t at) { return std::bit_cast<float>(read_u32(b, at)); }

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_f32(std::string& out, float v) { put_u32(out, std::bit_cast<std::uint32_t>(v)); }

TriangleMesh load_stl_binary(std::string_view b) {
  if (b.size() < 84) {
    throw Error(Errc::ParseError,
                "offset " + std::to_string(b.size()) + ": binary STL shorter than its header");
  }
  const std::uint64_t count = read_u32(b, 80);
  const std::uint64_t need = 84 + 50 * count;
  if (b.size() < need) {
    throw Error(Errc::ParseError, "offset " + std::to_string(b.size()) + ": header declares " +
                                      std::to_string(count) + " facets but data ends early");
  }
  CornerWelder welder;
  std::vector<Triangle> tris;
  tris.reserve(count);
  for (std::uint64_t f = 0; f < count; ++f) {
    const std::size_t base = 84 + 50 * f + 12;
    Triangle t{};
    for (int c = 0; c < 3; ++c) {
      const std::size_t at = base + 12 * static_cast<std::size_t>(c);
      const Vec3 p(read_f32(b, at), read_f32(b, at + 4), read_f32(b, at + 8));
      if (!p.allFinite()) {
        throw Error(Errc::ParseError, "offset " + std::to_string(at) + ": non-finite coordinate");
      }
      t[static_cast<std::size_t>(c)] = welder.add(p);
    }
    tris.push_back(t);
  }
  return TriangleMesh(welder.take(), std::move(tris));
}

void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

Vec3 facet_normal(const TriangleMesh& mesh, const Triangle& t) {
  const Vec3 n = (mesh.vertex(t[1]) - mesh.vertex(t[0])).cross(mesh.vertex(t[2]) - mesh.vertex(t[0]));
  const double len = n.norm();
  return len > 0.0 ? Vec3(n / len) : Vec3::Zero();
}

}  // namespace

TriangleMesh load_mesh(std::string_view bytes, MeshFormat format) {
  switch (format) {
    case MeshFormat::Obj:
      return load_obj(bytes);
    case MeshFormat::StlAscii:
      return load_stl_ascii(bytes);
    case MeshFormat::StlBinary:
      return load_stl_binary(bytes);
  }
  throw Error(Errc::UnsupportedFeature, "unknown mesh format");
}

MeshFormat detect_stl_format(std::string_view bytes) {
  if (bytes.size() >= 84 && bytes.size() == 84 + 50 * static_cast<std::uint64_t>(read_u32(bytes, 80))) {
    return MeshFormat::StlBinary;
  }
  std::size_t i = 0;
  while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i]))) ++i;
  return bytes.substr(i, 5) == "solid" ? MeshFormat::StlAscii : MeshFormat::StlBinary;
}

std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (ext == ".obj") return MeshFormat::Obj;
  if (ext == ".stl") return MeshFormat::StlBinary;
  return std::nullopt;
}

std::string write_obj(const TriangleMesh& mesh) {
  std::string out;
  for (const Vec3& p : mesh.vertices()) {
    out += "v";
    for (int k = 0; k < 3; ++k) {
      out += ' ';
      append_number(out, p[k]);
    }
    out += '\n';
  }
  for (const Triangle& t : mesh.triangles()) {
    out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' + std::to_string(t[2] + 1) +
           '\n';
  }
  return out;
}

std::string write_stl_ascii(const TriangleMesh& mesh) {
  std::string out = "solid planecode\n";
  for (const Triangle& t : mesh.triangles()) {
    const Vec3 n = facet_normal(mesh, t);
    out += "  facet normal";
    for (int k = 0; k < 3; ++k) {
      out += ' ';
      append_number(out, n[k]);
    }
    out += "\n    outer loop\n";
    for (int c : t) {
      out += "      vertex";
      for (int k = 0; k < 3; ++k) {
        out += ' ';
        append_number(out, mesh.vertex(c)[k]);
      }
      out += '\n';
    }
    out += "    endloop\n  endfacet\n";
  }
  out += "endsolid planecode\n";
  return out;
}

std::string write_stl_binary(const TriangleMesh& mesh) {
  std::string out(80, '\0');
  const std::string_view tag = "planecode binary STL";
  std::copy(tag.begin(), tag.end(), out.begin());
  put_u32(out, static_cast<std::uint32_t>(mesh.num_triangles()));
  for (const Triangle& t : mesh.triangles()) {
    const Vec3 n = facet_normal(mesh, t);
    for (int k = 0; k < 3; ++k) put_f32(out, static_cast<float>(n[k]));
    for (int c : t) {
      for (int k = 0; k < 3; ++k) put_f32(out, static_cast<float>(mesh.vertex(c)[k]));
    }
    out.push_back('\0');
    out.push_back('\0');
  }
  return out;
}

std::string write_mesh(const TriangleMesh& mesh, MeshFormat format) {
  switch (format) {
    case MeshFormat::Obj:
      return write_obj(mesh);
    case MeshFormat::StlAscii:
      return write_stl_ascii(mesh);
    case MeshFormat::StlBinary:
      return write_stl_binary(mesh);
  }
  return {};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

TriangleMesh load_mesh_file(const std::filesystem::path& path) {
  const auto format = format_from_extension(path);
  if (!format) {
    throw Error(Errc::UnsupportedFeature, "unrecognized mesh extension '" + path.extension().string() + "'");
  }
  const std::string bytes = read_file(path);
  return load_mesh(bytes, *format == MeshFormat::Obj ? MeshFormat::Obj : detect_stl_format(bytes));
}

std::size_t planar_polygon_count(const TriangleMesh& mesh, double eps) {
  if (mesh.empty()) return 0;
  std::vector<int> all(mesh.num_triangles());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return detail::coplanar_classes(mesh, detail::TrianglePlanes(mesh), all, eps).size();
}

namespace {

StorageReport finish_report(const TriangleMesh& mesh, std::uint64_t faces, std::uint64_t boundary,
                            AccountingMode mode) {
  StorageReport r;
  r.mode = mode;
  r.faces = faces;
  r.boundary_planes = boundary;
  r.planes = faces + boundary;
  r.vertices = mesh.num_vertices();
  r.triangles = mesh.num_triangles();
  r.polygons = planar_polygon_count(mesh, default_tolerance(mesh));
  r.plane_bytes = 12 * r.planes;
  r.vertex_bytes = 12 * r.vertices;
  r.index_bytes = mode == AccountingMode::Triangles ? 12 * r.triangles : 48 * r.polygons;
  r.indexed_bytes = r.vertex_bytes + r.index_bytes;
  r.ratio =
      r.plane_bytes == 0 ? 0.0 : static_cast<double>(r.indexed_bytes) / static_cast<double>(r.plane_bytes);
  return r;
}

}  // namespace

StorageReport storage_report(const TriangleMesh& mesh, const PlaneSet& code, AccountingMode mode) {
  return finish_report(mesh, code.size(), 0, mode);
}

StorageReport storage_report(const TriangleMesh& mesh, const SegmentedCode& code, AccountingMode mode) {
  std::uint64_t faces = 0, boundary = 0;
  for (const PartCode& p : code.parts) {
    faces += p.face_planes.size();
    boundary += p.boundary_planes.size();
  }
  return finish_report(mesh, faces, boundary, mode);
}

}  // namespace planecode
