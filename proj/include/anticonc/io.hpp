#pragma once

#include "anticonc/graph.hpp"
#include "anticonc/ground_set.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace anticonc {

/// Input-file error carrying the 1-based line it was detected on.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string filename, int line, const std::string& what)
      : std::runtime_error(filename + ":" + std::to_string(line) + ": " + what),
        filename_(std::move(filename)),
        line_(line) {}
  const std::string& filename() const { return filename_; }
  int line() const { return line_; }

 private:
  std::string filename_;
  int line_;
};

// Ground set file: first line "k n" (k=0 means the integers), then n
// whitespace-separated values.
GroundSet read_ground_set(std::istream& in, const std::string& filename = "<stream>");
GroundSet read_ground_set_file(const std::string& path);
void write_ground_set(std::ostream& out, const GroundSet& set);

// Graph file: first line "n m", then m lines "i j" with 1-based endpoints.
ConstraintGraph read_graph(std::istream& in, const std::string& filename = "<stream>");
ConstraintGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const ConstraintGraph& graph);

}  // namespace anticonc
