#include "shortcut_forge/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace shortcut_forge {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& line, std::size_t lineno) {
  std::istringstream fields(line);
  long long a = -1;
  long long b = -1;
  std::string rest;
  if (!(fields >> a >> b) || (fields >> rest) || a < 0 || b < 0) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(lineno) + ": expected two non-negative integers");
  }
  return {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)};
}

// Slurps the stream and rejects a final line lacking its newline.
std::istringstream checked(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  if (!text.empty() && text.back() != '\n') throw Error(ErrorCode::Parse, "missing trailing newline");
  return std::istringstream(std::move(text));
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return in;
}

}  // namespace

DiGraph read_graph(std::istream& raw) {
  auto in = checked(raw);
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  EdgeList edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    const auto [a, b] = parse_pair(line, lineno);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(lineno) + ": vertex out of range");
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing `n m` header");
  if (edges.size() != m) {
    throw Error(ErrorCode::Parse, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return DiGraph(n, edges);
}

DiGraph read_graph_file(const std::string& path) {
  auto in = open(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const DiGraph& g) {
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  write_edges(out, g.edges());
}

EdgeList read_edges(std::istream& raw) {
  auto in = checked(raw);
  std::string line;
  std::size_t lineno = 0;
  EdgeList edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    const auto [a, b] = parse_pair(line, lineno);
    edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return edges;
}

EdgeList read_edges_file(const std::string& path) {
  auto in = open(path);
  return read_edges(in);
}

void write_edges(std::ostream& out, const EdgeList& edges) {
  for (const Edge& e : edges) out << e.from << " " << e.to << "\n";
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) out << i << " " << names[i] << "\n";
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << contents;
}

}  // namespace shortcut_forge
