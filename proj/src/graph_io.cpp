#include "lineopt/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace lineopt {

namespace {

[[noreturn]] void parse_fail(const std::string& why) { throw Error(ErrorCode::ParseError, why); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sixbits(char c) {
  if (c < 63 || c > 126) parse_fail(std::string("graph6 character out of range: '") + c + "'");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) parse_fail("empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(sixbits(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) parse_fail("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text[i]));
    if (n < 63) parse_fail("non-minimal graph6 size field");
    pos = 4;
  } else {
    parse_fail("graph6 orders beyond 258047 are not supported");
  }

  const std::size_t bits = n * (n - (n > 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    parse_fail("graph6 body has " + std::to_string(text.size() - pos) + " characters, expected " +
               std::to_string(chars));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int word = sixbits(text[pos + k / 6]);
      if (word & (1 << (5 - static_cast<int>(k % 6)))) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int word = sixbits(text[pos + k / 6]);
    if (word & ((1 << (6 - static_cast<int>(k % 6))) - 1)) parse_fail("nonzero graph6 padding bits");
  }
  return Graph::build(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw Error(ErrorCode::InvalidParameter, "graph6 orders beyond 258047 are not supported");
  }
  int word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + word));
        word = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (word << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, line)) {
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    if (!n) {
      std::string tag;
      long long count = -1;
      if (!(fields >> tag >> count) || tag != "n" || count < 0) parse_fail("expected header 'n <count>'");
      n = static_cast<std::size_t>(count);
      continue;
    }
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || u < 0 || v < 0 || (fields >> rest)) parse_fail("bad edge line: " + line);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) parse_fail("missing 'n <count>' header");
  return Graph::build(*n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_any(std::string_view text) {
  auto body = trim(text);
  if (body.empty()) parse_fail("empty input");
  if (body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      parse_fail(e.what());
    }
    if (!j.contains("graph6") || !j["graph6"].is_string()) parse_fail("JSON input lacks a graph6 field");
    return parse_graph6(j["graph6"].get<std::string>());
  }
  const bool edge_header =
      body.front() == '#' ||
      (body.size() > 1 && body[0] == 'n' && std::isspace(static_cast<unsigned char>(body[1])));
  if (edge_header) return parse_edge_list(body);
  return parse_graph6(body);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json adj = nlohmann::json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    adj.push_back(std::vector<Vertex>(nb.begin(), nb.end()));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}, {"adjacency", adj}, {"graph6", to_graph6(g)}};
}

}  // namespace lineopt
