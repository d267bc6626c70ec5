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

#include "planecode/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include "planecode/codec_io.hpp"
#include "planecode/error.hpp"
#include "planecode/mesh_io.hpp"
#include "planecode/simplify.hpp"

namespace planecode {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;
  std::string output;
  std::string code_path;
  std::optional<double> eps;
  double delta = 0.0;
  double tau_degrees = 0.0;
  bool degrees = false;
  bool quads = false;
  bool machine = false;
  bool planes = false;
  std::string format;
};

Code load_code(const std::string& path) {
  const std::string raw = read_file(path);
  const auto* data = reinterpret_cast<const std::uint8_t*>(raw.data());
  return read_code(std::span<const std::uint8_t>(data, raw.size()));
}

void save_code(const std::string& path, const Code& code) {
  const Bytes bytes = write_code(code);
  write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

bool is_convex(const TriangleMesh& mesh, double eps) {
  return mesh.closed() && mesh.consistently_oriented() && !find_convexity_violation(mesh, eps);
}

void print_planes(std::ostream& out, const PlaneSet& planes, bool degrees, const std::string& indent = "") {
  for (const OrientedPlaned& p : planes) {
    double nu = p.direction.nu, phi = p.direction.phi;
    if (degrees) {
      nu = radians_to_degrees(nu);
      phi = radians_to_degrees(phi);
    }
    out << indent << "(" << nu << ", " << phi << ", " << p.h << ")\n";
  }
}

void print_code(std::ostream& out, const Code& code, bool degrees) {
  if (const auto* convex = std::get_if<PlaneSet>(&code)) {
    print_planes(out, *convex, degrees);
    return;
  }
  const auto& seg = std::get<SegmentedCode>(code);
  for (std::size_t k = 0; k < seg.parts.size(); ++k) {
    out << "part " << k << " " << to_string(seg.parts[k].kind) << "\n  faces:\n";
    print_planes(out, seg.parts[k].face_planes, degrees, "    ");
    out << "  boundary:\n";
    print_planes(out, seg.parts[k].boundary_planes, degrees, "    ");
  }
}

std::size_t code_planes(const Code& code) {
  if (const auto* convex = std::get_if<PlaneSet>(&code)) return convex->size();
  return plane_count(std::get<SegmentedCode>(code));
}

Code encode_auto(const TriangleMesh& mesh, const Options& o) {
  const double eps = o.eps.value_or(default_tolerance(mesh));
  if (is_convex(mesh, eps)) return encode_convex(mesh, eps);
  return encode_segmented(mesh, eps);
}

int cmd_encode(const Options& o, std::ostream& out) {
  const TriangleMesh mesh = load_mesh_file(o.input);
  const Code code = encode_auto(mesh, o);
  save_code(o.output, code);
  const bool convex = std::holds_alternative<PlaneSet>(code);
  out << "kind: " << (convex ? "convex" : "segmented") << "\n";
  if (!convex) out << "parts: " << std::get<SegmentedCode>(code).parts.size() << "\n";
  out << "planes: " << code_planes(code) << "\n";
  if (o.planes) print_code(out, code, o.degrees);
  return kExitOk;
}

int cmd_decode(const Options& o, std::ostream& out, std::ostream& err) {
  const Code code = load_code(o.input);
  TriangleMesh mesh;
  if (const auto* convex = std::get_if<PlaneSet>(&code)) {
    const ConvexPolyhedron poly = o.eps ? decode_convex(*convex, *o.eps) : decode_convex(*convex);
    for (int i : poly.redundant_planes) err << "warning: plane " << i << " bounds no face\n";
    mesh = to_triangle_mesh(poly);
  } else {
    const auto& seg = std::get<SegmentedCode>(code);
    mesh = o.eps ? decode_segmented(seg, *o.eps) : decode_segmented(seg);
  }
  MeshFormat format = MeshFormat::Obj;
  if (o.format == "stl") {
    format = MeshFormat::StlBinary;
  } else if (o.format == "stl-ascii") {
    format = MeshFormat::StlAscii;
  } else if (o.format.empty()) {
    format = format_from_extension(o.output).value_or(MeshFormat::Obj);
  }
  write_file(o.output, write_mesh(mesh, format));
  out << "vertices: " << mesh.num_vertices() << "\ntriangles: " << mesh.num_triangles() << "\n";
  return kExitOk;
}

int cmd_segment(const Options& o, std::ostream& out) {
  const TriangleMesh mesh = load_mesh_file(o.input);
  const double eps = o.eps.value_or(default_tolerance(mesh));
  const std::vector<MeshPart> parts = segment_mesh(mesh, eps);
  if (o.machine) {
    out << "parts=" << parts.size() << "\n";
  } else {
    out << std::left << std::setw(6) << "part" << std::setw(16) << "kind" << std::setw(11) << "triangles"
        << std::setw(13) << "face_planes" << "boundary_planes\n";
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const MeshPart& part = parts[k];
    const std::size_t faces = polygonize_part(mesh, part, eps).size();
    std::string boundary;
    try {
      boundary = std::to_string(boundary_planes_for_part(mesh, part, eps).size());
    } catch (const Error& e) {
      if (e.code() != Errc::BoundaryNotCuttable) throw;
      boundary = "uncuttable";  // encode splits such a part into its polygons
    }
    if (o.machine) {
      const std::string key = "part" + std::to_string(k) + ".";
      out << key << "kind=" << to_string(part.kind) << "\n"
          << key << "triangles=" << part.triangles.size() << "\n"
          << key << "face_planes=" << faces << "\n"
          << key << "boundary_planes=" << boundary << "\n";
    } else {
      out << std::setw(6) << k << std::setw(16) << to_string(part.kind) << std::setw(11)
          << part.triangles.size() << std::setw(13) << faces << boundary << "\n";
    }
  }
  return kExitOk;
}

int cmd_simplify(const Options& o, std::ostream& out) {
  SimplifyParams params{o.delta, degrees_to_radians(o.tau_degrees)};
  validate(params);
  const Code code = load_code(o.input);
  Code result = std::visit([&](const auto& c) -> Code { return simplify(c, params); }, code);
  save_code(o.output, result);
  out << "planes: " << code_planes(code) << " -> " << code_planes(result) << "\n";
  if (o.planes) print_code(out, result, o.degrees);
  return kExitOk;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const TriangleMesh mesh = load_mesh_file(o.input);
  const Code code = o.code_path.empty() ? encode_auto(mesh, o) : load_code(o.code_path);
  const AccountingMode mode = o.quads ? AccountingMode::Quads : AccountingMode::Triangles;
  const StorageReport r = std::visit([&](const auto& c) { return storage_report(mesh, c, mode); }, code);
  const std::pair<const char*, std::uint64_t> rows[] = {
      {"faces", r.faces},
      {"boundary_planes", r.boundary_planes},
      {"planes", r.planes},
      {"vertices", r.vertices},
      {"triangles", r.triangles},
      {"polygons", r.polygons},
      {"plane_bytes", r.plane_bytes},
      {"vertex_bytes", r.vertex_bytes},
      {"index_bytes", r.index_bytes},
      {"indexed_bytes", r.indexed_bytes},
  };
  const char* mode_name = o.quads ? "quads" : "triangles";
  std::ostringstream ratio;
  ratio << std::setprecision(17) << r.ratio;
  if (o.machine) {
    out << "kind=" << (std::holds_alternative<PlaneSet>(code) ? "convex" : "segmented") << "\n";
    out << "mode=" << mode_name << "\n";
    for (const auto& [key, value] : rows) out << key << "=" << value << "\n";
    out << "ratio=" << ratio.str() << "\n";
  } else {
    out << "accounting: " << mode_name << "\n";
    for (const auto& [key, value] : rows) out << std::left << std::setw(16) << key << value << "\n";
    out << std::left << std::setw(16) << "ratio" << std::setprecision(6) << r.ratio << "\n";
  }
  return kExitOk;
}

int status_for(const Error& e) {
  switch (category(e.code())) {
    case ErrorCategory::Geometry:
      return kExitGeometry;
    case ErrorCategory::Parse:
      return kExitParse;
    case ErrorCategory::Format:
      return kExitFormat;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encode meshes as sets of oriented planes and back.", "planecode"};
  app.require_subcommand(1);
  Options o;

  auto eps_flag = [&](CLI::App* cmd) {
    cmd->add_option("--eps", o.eps, "Geometric tolerance (default scales with the model)")
        ->check(CLI::PositiveNumber);
  };

  auto* encode = app.add_subcommand("encode", "Mesh file to .plnc");
  encode->add_option("input", o.input, "OBJ or STL mesh")->required();
  encode->add_option("output", o.output, ".plnc file")->required();
  encode->add_flag("--planes", o.planes, "Print the planes");
  encode->add_flag("--degrees", o.degrees, "Print angles in degrees");
  eps_flag(encode);

  auto* decode = app.add_subcommand("decode", ".plnc to mesh file");
  decode->add_option("input", o.input, ".plnc file")->required();
  decode->add_option("output", o.output, "Mesh file")->required();
  decode->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"obj", "stl", "stl-ascii"}));
  eps_flag(decode);

  auto* segment = app.add_subcommand("segment", "Print the part table of a mesh");
  segment->add_option("input", o.input, "OBJ or STL mesh")->required();
  segment->add_flag("--machine", o.machine, "key=value output");
  eps_flag(segment);

  auto* simplify_cmd = app.add_subcommand("simplify", "Lossy plane reduction");
  simplify_cmd->add_option("input", o.input, ".plnc file")->required();
  simplify_cmd->add_option("output", o.output, ".plnc file")->required();
  simplify_cmd->add_option("--delta", o.delta, "Drop faces with smaller area")->check(CLI::NonNegativeNumber);
  simplify_cmd->add_option("--tau", o.tau_degrees, "Merge adjacent planes closer than this angle, degrees")
      ->check(CLI::Range(0.0, 90.0));
  simplify_cmd->add_flag("--planes", o.planes, "Print the resulting planes");
  simplify_cmd->add_flag("--degrees", o.degrees, "Print angles in degrees");

  auto* stats = app.add_subcommand("stats", "Storage accounting for a mesh and its code");
  stats->add_option("mesh", o.input, "OBJ or STL mesh")->required();
  stats->add_option("code", o.code_path, ".plnc file (encoded on the fly when omitted)");
  stats->add_flag("--quad-accounting", o.quads,
                  "Charge 48 bytes per planar polygon instead of 12 per triangle");
  stats->add_flag("--machine", o.machine, "key=value output");
  eps_flag(stats);

  std::vector<std::string> argv_store{"planecode"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(o, out);
    if (*decode) return cmd_decode(o, out, err);
    if (*segment) return cmd_segment(o, out);
    if (*simplify_cmd) {
      if (o.tau_degrees >= 90.0) throw std::invalid_argument("--tau must be below 90 degrees");
      return cmd_simplify(o, out);
    }
    if (*stats) return cmd_stats(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return status_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace planecode
