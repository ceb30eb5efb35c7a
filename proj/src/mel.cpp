#include "treepack/mel.hpp"

#include <cctype>
#include <sstream>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

struct Line {
  int number;  // 1-based position in the input
  std::string text;
};

input_error at_line(int number, const std::string& message) {
  return input_error("line " + std::to_string(number) + ": " + message);
}

bool blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Whole-line token scan: exactly `count` nonnegative integers.
std::vector<long long> parse_ints(const Line& line, size_t count,
                                  const std::string& what) {
  std::istringstream in(line.text);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw at_line(line.number, what + ": bad integer '" + token + "'");
    }
    if (pos != token.size() || v < 0)
      throw at_line(line.number, what + ": bad integer '" + token + "'");
    values.push_back(v);
  }
  if (values.size() != count)
    throw at_line(line.number,
                  what + ": expected " + std::to_string(count) + " integers");
  return values;
}

}  // namespace

MultiGraph parse_mel(const std::string& text) {
  std::vector<Line> lines;
  {
    int number = 0;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current)) {
      ++number;
      if (!current.empty() && current.back() == '\r') current.pop_back();
      if (!blank_or_comment(current)) lines.push_back({number, current});
    }
  }
  if (lines.empty()) throw input_error("line 1: missing 'mel <n> <m>' header");

  const Line& header = lines[0];
  {
    std::istringstream in(header.text);
    std::string tag;
    in >> tag;
    if (tag != "mel")
      throw at_line(header.number, "expected 'mel <n> <m>' header");
  }
  std::vector<long long> head;
  {
    std::istringstream in(header.text);
    std::string tag;
    in >> tag;
    std::string rest;
    std::getline(in, rest);
    head = parse_ints({header.number, rest}, 2, "header");
  }
  long long n = head[0], m = head[1];
  if (n > 1'000'000 || m > 10'000'000)
    throw at_line(header.number, "header: size too large");

  if (static_cast<long long>(lines.size()) - 1 != m) {
    if (static_cast<long long>(lines.size()) - 1 < m)
      throw input_error("unexpected end of input: expected " +
                        std::to_string(m) + " edge lines, found " +
                        std::to_string(lines.size() - 1));
    throw at_line(lines[1 + m].number, "unexpected extra edge line");
  }

  std::vector<std::pair<int, int>> endpoints;
  endpoints.reserve(m);
  for (long long i = 0; i < m; ++i) {
    const Line& line = lines[1 + i];
    auto uv = parse_ints(line, 2, "edge");
    if (uv[0] >= n || uv[1] >= n)
      throw at_line(line.number, "edge endpoint out of range");
    if (uv[0] == uv[1]) throw at_line(line.number, "loops forbidden");
    endpoints.push_back({static_cast<int>(uv[0]), static_cast<int>(uv[1])});
  }
  return build_graph(static_cast<int>(n), endpoints);
}

std::string emit_mel(const MultiGraph& g) {
  std::string out = "mel " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace treepack
