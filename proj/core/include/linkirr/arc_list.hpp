#pragma once

// Plain-text graph files.
//
//   .dg  first data line "n m", then m lines "u v" (arc u -> v)
//   .ug  same layout, "u v" is an undirected edge
//   .lg  first data line "n m L" (L = max label), then m lines "u v label"
//
// Vertices are 0-based. Lines whose first non-blank character is '#' and
// blank lines are ignored. The trailing newline is optional.

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linkirr/graph.hpp"

namespace linkirr {

/// Malformed document. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Digraph parse_digraph(std::string_view text);
UndirectedGraph parse_undirected(std::string_view text);
LabeledGraph parse_labeled(std::string_view text);

/// Comment lines are emitted first, each prefixed with "# ".
std::string format_digraph(const Digraph& d, const std::vector<std::string>& comments = {});
std::string format_undirected(const UndirectedGraph& g,
                              const std::vector<std::string>& comments = {});
std::string format_labeled(const LabeledGraph& g, const std::vector<std::string>& comments = {});

/// Whole-file helpers. Throw std::runtime_error on I/O failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

Digraph load_digraph(const std::filesystem::path& path);
UndirectedGraph load_undirected(const std::filesystem::path& path);
LabeledGraph load_labeled(const std::filesystem::path& path);

}  // namespace linkirr
