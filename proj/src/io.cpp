#include "anticonc/io.hpp"

#include <fstream>
#include <sstream>

namespace anticonc {

namespace {

// Reads one meaningful line (skips blanks / '#' comments), tracking line numbers.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

BigInt parse_bigint(const std::string& token, const std::string& filename, int lineno) {
  try {
    return BigInt(token);
  } catch (const std::exception&) {
    throw ParseError(filename, lineno, "not an integer: '" + token + "'");
  }
}

}  // namespace

GroundSet read_ground_set(std::istream& in, const std::string& filename) {
  int lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno))
    throw ParseError(filename, lineno + 1, "missing header line 'k n'");
  std::istringstream header(line);
  long long k = 0, n = 0;
  if (!(header >> k >> n))
    throw ParseError(filename, lineno, "header must be 'k n'");
  if (k < 0) throw ParseError(filename, lineno, "modulus k must be >= 0");
  if (k == 1) throw ParseError(filename, lineno, "modulus k must be 0 (integers) or >= 2");
  if (n < 1) throw ParseError(filename, lineno, "element count n must be >= 1");

  CyclicContext ctx = (k == 0) ? CyclicContext::integers() : CyclicContext::cyclic(k);
  std::vector<BigInt> elems;
  elems.reserve(static_cast<std::size_t>(n));
  while (elems.size() < static_cast<std::size_t>(n)) {
    if (!next_line(in, line, lineno))
      throw ParseError(filename, lineno + 1,
                       "expected " + std::to_string(n) + " values, got " +
                           std::to_string(elems.size()));
    std::istringstream values(line);
    std::string token;
    while (values >> token && elems.size() < static_cast<std::size_t>(n))
      elems.push_back(parse_bigint(token, filename, lineno));
  }
  try {
    return GroundSet(ctx, std::move(elems));
  } catch (const std::invalid_argument& e) {
    throw ParseError(filename, lineno, e.what());
  }
}

GroundSet read_ground_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_ground_set(in, path);
}

void write_ground_set(std::ostream& out, const GroundSet& set) {
  out << (set.context().is_cyclic() ? set.context().modulus() : 0) << ' ' << set.size() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i)
    out << set[i] << (i + 1 < set.size() ? ' ' : '\n');
}

ConstraintGraph read_graph(std::istream& in, const std::string& filename) {
  int lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno))
    throw ParseError(filename, lineno + 1, "missing header line 'n m'");
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m))
    throw ParseError(filename, lineno, "header must be 'n m'");
  if (n < 1) throw ParseError(filename, lineno, "vertex count n must be >= 1");
  if (m < 0) throw ParseError(filename, lineno, "edge count m must be >= 0");

  ConstraintGraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_line(in, line, lineno))
      throw ParseError(filename, lineno + 1,
                       "expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    std::istringstream edge(line);
    int i = 0, j = 0;
    if (!(edge >> i >> j))
      throw ParseError(filename, lineno, "edge line must be 'i j'");
    try {
      g.add_edge(i, j);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(filename, lineno, ex.what());
    }
  }
  return g;
}

ConstraintGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const ConstraintGraph& graph) {
  out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  for (const auto& [i, j] : graph.edges()) out << i << ' ' << j << '\n';
}

}  // namespace anticonc
