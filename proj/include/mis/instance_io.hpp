#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mis/graph.hpp"

namespace mis::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

enum class Format {
  Dimacs,     ///< "p edge n m" header, "e u v" lines, 1-based ids
  Adjacency,  ///< "u: v w x" lines, 1-based ids
};

/// Guesses the format: a "p" header means DIMACS, otherwise adjacency lists.
Format detect_format(std::string_view text);

/// Vertex i of the file becomes id i-1. Duplicate edges are collapsed;
/// self-loops, bad ids and malformed lines raise ParseError.
Graph parse_instance(std::string_view text, std::optional<Format> format = std::nullopt);

/// Reads a file; std::runtime_error if it cannot be opened.
Graph read_instance(const std::filesystem::path& path);

/// Live vertices are renumbered 1..n in ascending id order.
std::string write_dimacs(const Graph& g, std::string_view comment = {});
std::string write_adjacency(const Graph& g);

}  // namespace mis::io
