#include "irrforge/text_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace irrforge {

Tree parse_edge_list(std::istream& in) {
  long n = 0;
  if (!(in >> n) || n < 1) throw Error(ErrorKind::ParseError, "edge list must start with a vertex count >= 1");
  std::vector<Edge> edges;
  long u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw Error(ErrorKind::ParseError, "dangling endpoint in edge list");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!in.eof()) throw Error(ErrorKind::ParseError, "non-numeric token in edge list");
  return make_tree(static_cast<int>(n), std::move(edges));
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string format_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.order() << '\n';
  for (const auto& [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t first = token.find_first_not_of(" \t");
    std::size_t last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorKind::ParseError, "empty entry in '" + text + "'");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || used == 0)
      throw Error(ErrorKind::ParseError, "not an integer: '" + token + "'");
    out.push_back(static_cast<int>(value));
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty list");
  return out;
}

DegreeSequence parse_degree_sequence(const std::string& text) {
  return DegreeSequence(parse_int_list(text));
}

}  // namespace irrforge
