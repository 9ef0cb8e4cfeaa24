#include "chib/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "chib/errors.hpp"

namespace chib::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int sextet(char ch, std::size_t pos) {
  auto c = static_cast<unsigned char>(ch);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) + " at offset " + std::to_string(pos) +
                     " outside 63..126");
  }
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  if (text.front() == ':' || text.front() == '&') throw ParseError("graph6: sparse6/digraph6 input is not graph6");

  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated size field");
      v = (v << 6) | sextet(text[pos], pos);
      ++pos;
    }
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > (1 << 20)) throw ParseError("graph6: vertex count " + std::to_string(n) + " too large");

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes for n=" + std::to_string(n) +
                     ", found " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + k / 6], pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    int last = sextet(text[pos + bytes - 1], pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(order, edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("dimacs: second problem line", lineno);
      std::string kind;
      if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0) {
        throw ParseError("dimacs: expected 'p edge N M'", lineno);
      }
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError("dimacs: edge before problem line", lineno);
      long long u = 0, v = 0;
      std::string extra;
      if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("dimacs: expected 'e U V'", lineno);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError("dimacs: vertex out of range 1.." + std::to_string(n), lineno);
      }
      if (u == v) throw ParseError("dimacs: loop at vertex " + std::to_string(u), lineno);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      continue;
    }
    throw ParseError("dimacs: unknown line type '" + tag + "'", lineno);
  }
  if (n < 0) throw ParseError("dimacs: missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("dimacs: problem line declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(std::string("dimacs: ") + e.what());
  }
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".g6" || ext == ".graph6") return GraphFormat::graph6;
  if (ext == ".col" || ext == ".dimacs" || ext == ".clq") return GraphFormat::dimacs;
  return GraphFormat::automatic;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    bool dimacs = i != std::string_view::npos && (text[i] == 'c' || text[i] == 'p') && i + 1 < text.size() &&
                  (text[i + 1] == ' ' || text[i + 1] == '\t' || text[i + 1] == '\n');
    format = dimacs ? GraphFormat::dimacs : GraphFormat::graph6;
  }
  return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_graph6(text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
  if (format == GraphFormat::automatic) format = format_from_path(path);
  return parse_graph(read_text_file(path), format);
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::automatic) format = format_from_path(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  if (format == GraphFormat::dimacs) {
    out << to_dimacs(g);
  } else {
    out << to_graph6(g) << '\n';
  }
}

}  // namespace chib::io
