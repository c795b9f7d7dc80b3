#include "hessrec/mesh/mesh_io.hpp"

#include "hessrec/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace hessrec {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      if (j > i)
        line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
    if (end == text.size())
      break;
    pos = end + 1;
  }
  return lines;
}

long parse_int(std::string_view tok, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

double parse_real(std::string_view tok, int line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

} // namespace

Triangulation import_mesh(std::string_view node_text, std::string_view element_text) {
  const auto node_lines = tokenize(node_text);
  if (node_lines.empty())
    throw ParseError(1, "node file is empty");
  const Line& head = node_lines.front();
  if (head.tokens.size() != 4)
    throw ParseError(head.number, "node header must be 'N 2 nattr nmarker'");
  const long n = parse_int(head.tokens[0], head.number);
  const long dim = parse_int(head.tokens[1], head.number);
  const long nattr = parse_int(head.tokens[2], head.number);
  const long nmark = parse_int(head.tokens[3], head.number);
  if (n < 3 || dim != 2 || nattr < 0 || nmark < 0 || nmark > 1)
    throw ParseError(head.number, "unsupported node header");
  if (static_cast<long>(node_lines.size()) - 1 != n)
    throw ParseError(node_lines.back().number,
                     "expected " + std::to_string(n) + " node lines, found " +
                         std::to_string(node_lines.size() - 1));

  std::vector<Point2> nodes(static_cast<std::size_t>(n));
  std::vector<bool> boundary(static_cast<std::size_t>(n), false);
  const std::size_t fields = 3 + static_cast<std::size_t>(nattr + nmark);
  for (long i = 0; i < n; ++i) {
    const Line& line = node_lines[static_cast<std::size_t>(i) + 1];
    if (line.tokens.size() != fields)
      throw ParseError(line.number, "expected " + std::to_string(fields) + " fields");
    if (parse_int(line.tokens[0], line.number) != i + 1)
      throw ParseError(line.number, "node indices must run 1..N in order");
    nodes[static_cast<std::size_t>(i)] = {parse_real(line.tokens[1], line.number),
                                          parse_real(line.tokens[2], line.number)};
    if (nmark == 1) {
      const long marker = parse_int(line.tokens[fields - 1], line.number);
      if (marker != 0 && marker != 1)
        throw ParseError(line.number, "boundary marker must be 0 or 1");
      boundary[static_cast<std::size_t>(i)] = marker == 1;
    }
  }

  const auto ele_lines = tokenize(element_text);
  if (ele_lines.empty())
    throw ParseError(1, "element file is empty");
  const Line& ehead = ele_lines.front();
  if (ehead.tokens.size() != 3)
    throw ParseError(ehead.number, "element header must be 'T 3 nattr'");
  const long t = parse_int(ehead.tokens[0], ehead.number);
  const long per = parse_int(ehead.tokens[1], ehead.number);
  const long eattr = parse_int(ehead.tokens[2], ehead.number);
  if (t < 1 || per != 3 || eattr < 0)
    throw ParseError(ehead.number, "unsupported element header");
  if (static_cast<long>(ele_lines.size()) - 1 != t)
    throw ParseError(ele_lines.back().number,
                     "expected " + std::to_string(t) + " element lines, found " +
                         std::to_string(ele_lines.size() - 1));

  std::vector<Triangle> tris(static_cast<std::size_t>(t));
  for (long i = 0; i < t; ++i) {
    const Line& line = ele_lines[static_cast<std::size_t>(i) + 1];
    if (line.tokens.size() != 4 + static_cast<std::size_t>(eattr))
      throw ParseError(line.number, "expected 'index v1 v2 v3'");
    if (parse_int(line.tokens[0], line.number) != i + 1)
      throw ParseError(line.number, "element indices must run 1..T in order");
    Triangle tri{};
    for (std::size_t k = 0; k < 3; ++k) {
      const long v = parse_int(line.tokens[k + 1], line.number);
      if (v < 1 || v > n)
        throw ParseError(line.number, "node index " + std::to_string(v) + " out of range");
      tri[k] = static_cast<int>(v - 1);
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw ParseError(line.number, "degenerate element");
    const double a2 = signed_area2(nodes[static_cast<std::size_t>(tri[0])],
                                   nodes[static_cast<std::size_t>(tri[1])],
                                   nodes[static_cast<std::size_t>(tri[2])]);
    if (!(a2 > 0.0))
      throw ParseError(line.number, a2 == 0.0 ? "degenerate element"
                                              : "negative-area element (clockwise)");
    tris[static_cast<std::size_t>(i)] = tri;
  }

  return Triangulation(std::move(nodes), std::move(tris), std::move(boundary),
                       Pattern::imported);
}

Triangulation read_mesh_files(const std::string& prefix) {
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path);
    if (!in)
      throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  return import_mesh(slurp(prefix + ".node"), slurp(prefix + ".ele"));
}

std::string node_text(const Triangulation& mesh) {
  std::string out = std::to_string(mesh.node_count()) + " 2 0 1\n";
  char buf[96];
  for (std::size_t i = 0; i < mesh.node_count(); ++i) {
    const Point2 p = mesh.nodes()[i];
    std::snprintf(buf, sizeof buf, "%zu %.17g %.17g %d\n", i + 1, p.x, p.y,
                  mesh.boundary_flags()[i] ? 1 : 0);
    out += buf;
  }
  return out;
}

std::string element_text(const Triangulation& mesh) {
  std::string out = std::to_string(mesh.triangle_count()) + " 3 0\n";
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const Triangle& tri = mesh.triangles()[t];
    out += std::to_string(t + 1) + ' ' + std::to_string(tri[0] + 1) + ' ' +
           std::to_string(tri[1] + 1) + ' ' + std::to_string(tri[2] + 1) + '\n';
  }
  return out;
}

void write_mesh_files(const Triangulation& mesh, const std::string& prefix) {
  const auto dump = [](const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
      throw Error("cannot write " + path);
    out << text;
    if (!out)
      throw Error("write failed for " + path);
  };
  dump(prefix + ".node", node_text(mesh));
  dump(prefix + ".ele", element_text(mesh));
}

} // namespace hessrec
