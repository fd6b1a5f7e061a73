#pragma once

// Text formats.
//
// Instance:   c <comment>
//             p msvc <n> <m> <k> <w>
//             e <u> <v>            (m lines, 1-indexed endpoints)
// Ordering:   n whitespace-separated 1-indexed vertex ids, in position order.
//
// Writers emit the canonical form (comments, header, edges sorted with u < v,
// single spaces, trailing newline), which the readers reproduce byte for byte.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

struct ParsedInstance {
  Instance instance;
  std::vector<std::string> comments;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InvalidInput("line " + std::to_string(line_no) + ": bad " + what + " '" +
                       std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

inline ParsedInstance read_instance(std::istream& in) {
  ParsedInstance out;
  bool have_header = false;
  std::size_t n = 0, m = 0, k = 0;
  Cost w = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.starts_with("c")) {
      if (line.size() == 1) {
        out.comments.emplace_back();
        continue;
      }
      if (line[1] == ' ') {
        out.comments.push_back(line.substr(2));
        continue;
      }
    }
    auto tok = detail::split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (have_header) throw InvalidInput("line " + std::to_string(line_no) + ": second header");
      if (tok.size() != 6 || tok[1] != "msvc") {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'p msvc <n> <m> <k> <w>'");
      }
      n = detail::parse_number<std::size_t>(tok[2], line_no, "vertex count");
      m = detail::parse_number<std::size_t>(tok[3], line_no, "edge count");
      k = detail::parse_number<std::size_t>(tok[4], line_no, "parameter k");
      w = detail::parse_number<Cost>(tok[5], line_no, "budget w");
      if (w < 0) throw InvalidInput("line " + std::to_string(line_no) + ": negative budget");
      have_header = true;
      edges.reserve(m);
    } else if (tok[0] == "e") {
      if (!have_header) throw InvalidInput("line " + std::to_string(line_no) + ": edge before header");
      if (tok.size() != 3) throw InvalidInput("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      auto u = detail::parse_number<std::size_t>(tok[1], line_no, "endpoint");
      auto v = detail::parse_number<std::size_t>(tok[2], line_no, "endpoint");
      if (u < 1 || v < 1 || u > n || v > n) {
        throw InvalidInput("line " + std::to_string(line_no) + ": endpoint out of range 1.." + std::to_string(n));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      throw InvalidInput("line " + std::to_string(line_no) + ": unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (!have_header) throw InvalidInput("missing 'p msvc' header");
  if (edges.size() != m) {
    throw InvalidInput("header declares " + std::to_string(m) + " edges, file has " + std::to_string(edges.size()));
  }
  out.instance = Instance(Graph::from_edges(n, edges), k, w);
  return out;
}

inline void write_instance(std::ostream& os, const Instance& inst,
                           const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) {
    if (c.empty()) os << "c\n";
    else os << "c " << c << '\n';
  }
  const Graph& g = inst.graph();
  os << "p msvc " << g.n() << ' ' << g.m() << ' ' << inst.k() << ' ' << inst.w() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

inline Ordering read_ordering(std::istream& in, std::size_t n) {
  std::vector<Vertex> seq;
  seq.reserve(n);
  std::vector<char> seen(n, 0);
  std::string tok;
  std::size_t index = 0;
  while (in >> tok) {
    ++index;
    auto id = detail::parse_number<std::size_t>(tok, index, "vertex id (token)");
    if (id < 1 || id > n) {
      throw InvalidInput("ordering entry " + std::to_string(index) + ": vertex " + tok + " outside 1.." + std::to_string(n));
    }
    if (seen[id - 1]) throw InvalidInput("ordering entry " + std::to_string(index) + ": vertex " + tok + " repeated");
    seen[id - 1] = 1;
    seq.push_back(static_cast<Vertex>(id - 1));
  }
  if (seq.size() != n) {
    throw InvalidInput("ordering lists " + std::to_string(seq.size()) + " vertices, expected " + std::to_string(n));
  }
  return Ordering::from_sequence(std::move(seq));
}

inline void write_ordering(std::ostream& os, const Ordering& ord) {
  auto seq = ord.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) os << ' ';
    os << seq[i] + 1;
  }
  os << '\n';
}

inline ParsedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path + "'");
  return read_instance(in);
}

inline Ordering read_ordering_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open ordering file '" + path + "'");
  return read_ordering(in, n);
}

inline std::string to_string(const Instance& inst, const std::vector<std::string>& comments = {}) {
  std::ostringstream os;
  write_instance(os, inst, comments);
  return os.str();
}

}  // namespace msvc
