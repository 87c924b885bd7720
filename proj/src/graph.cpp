#include "percolab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace percolab {

SimplifyReport simplify(Graph& g) {
  SimplifyReport report;
  // First strip self-loops (each loop stores its endpoint twice).
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    auto& adj = g.adjacency[u];
    const auto before = adj.size();
    adj.erase(std::remove(adj.begin(), adj.end(), u), adj.end());
    report.self_loops += (before - adj.size()) / 2;
  }
  // Then dedupe parallel edges; every surplus copy shows up in two lists.
  std::size_t surplus_entries = 0;
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    auto& adj = g.adjacency[u];
    std::sort(adj.begin(), adj.end());
    const auto before = adj.size();
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    surplus_entries += before - adj.size();
  }
  report.parallel_edges = surplus_entries / 2;
  return report;
}

bool well_formed(const Graph& g, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (g.adjacency.size() != g.num_nodes) return fail("adjacency size != num_nodes");
  if (g.dim > 0 && g.positions.size() != g.num_nodes * std::size_t(g.dim))
    return fail("positions size != num_nodes * dim");
  if (g.dim == 0 && !g.positions.empty()) return fail("positions present but dim == 0");
  if (!g.weights.empty() && g.weights.size() != g.num_nodes)
    return fail("weights size != num_nodes");
  for (double w : g.weights)
    if (!(w > 0)) return fail("non-positive weight");

  // Symmetry: multiset equality of (u,v) vs (v,u) occurrences.
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    for (NodeId v : g.adjacency[u]) {
      if (v >= g.num_nodes) return fail("node id out of range");
      arcs.emplace_back(u, v);
    }
  }
  auto flipped = arcs;
  for (auto& a : flipped) std::swap(a.first, a.second);
  std::sort(arcs.begin(), arcs.end());
  std::sort(flipped.begin(), flipped.end());
  if (arcs != flipped) return fail("adjacency not symmetric");
  return true;
}

namespace {

void append_double(std::string& out, double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.append(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double x = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), x);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    throw std::runtime_error("edge list: bad number '" + token + "'");
  return x;
}

}  // namespace

void write_edge_list(const Graph& g, std::ostream& os) {
  std::string out;
  out += "# nodes=" + std::to_string(g.num_nodes) + " d=" + std::to_string(g.dim) + "\n";
  std::vector<NodeId> row;
  for (NodeId u = 0; u < g.num_nodes; ++u) {
    row.clear();
    for (NodeId v : g.adjacency[u])
      if (v >= u) row.push_back(v);
    std::sort(row.begin(), row.end());
    std::size_t i = 0;
    while (i < row.size()) {
      if (row[i] == u) {
        // self-loop entries come in pairs; one line per loop
        out += std::to_string(u) + " " + std::to_string(u) + "\n";
        i += 2;
      } else {
        out += std::to_string(u) + " " + std::to_string(row[i]) + "\n";
        i += 1;
      }
    }
  }
  if (g.dim > 0) {
    out += "# pos\n";
    for (NodeId v = 0; v < g.num_nodes; ++v) {
      for (int k = 0; k < g.dim; ++k) {
        if (k) out += ' ';
        append_double(out, g.positions[std::size_t(v) * g.dim + k]);
      }
      out += '\n';
    }
  }
  if (!g.weights.empty()) {
    out += "# weight\n";
    for (NodeId v = 0; v < g.num_nodes; ++v) {
      append_double(out, g.weights[v]);
      out += '\n';
    }
  }
  os.write(out.data(), std::streamsize(out.size()));
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    write_edge_list(g, os);
    if (!os) {
      os.close();
      std::remove(tmp.c_str());
      throw std::runtime_error("failed while writing '" + tmp + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

Graph read_edge_list(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("edge list: empty input");
  std::size_t n = 0;
  int d = 0;
  if (std::sscanf(line.c_str(), "# nodes=%zu d=%d", &n, &d) != 2)
    throw std::runtime_error("edge list: bad header '" + line + "'");
  Graph g(n);
  g.dim = 0;

  enum class Section { edges, pos, weight } section = Section::edges;
  std::size_t pos_row = 0, weight_row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "# pos") {
      section = Section::pos;
      g.dim = d;
      g.positions.assign(n * std::size_t(d), 0.0);
      continue;
    }
    if (line == "# weight") {
      section = Section::weight;
      g.weights.assign(n, 0.0);
      continue;
    }
    std::istringstream ss(line);
    if (section == Section::edges) {
      std::uint64_t u, v;
      if (!(ss >> u >> v) || u >= n || v >= n)
        throw std::runtime_error("edge list: bad edge line '" + line + "'");
      g.add_edge(NodeId(u), NodeId(v));
    } else if (section == Section::pos) {
      if (pos_row >= n) throw std::runtime_error("edge list: too many position rows");
      std::string tok;
      for (int k = 0; k < d; ++k) {
        if (!(ss >> tok)) throw std::runtime_error("edge list: short position row");
        g.positions[pos_row * std::size_t(d) + k] = parse_double(tok);
      }
      ++pos_row;
    } else {
      if (weight_row >= n) throw std::runtime_error("edge list: too many weight rows");
      std::string tok;
      if (!(ss >> tok)) throw std::runtime_error("edge list: bad weight row");
      g.weights[weight_row++] = parse_double(tok);
    }
  }
  if (g.dim > 0 && pos_row != n) throw std::runtime_error("edge list: missing position rows");
  if (!g.weights.empty() && weight_row != n)
    throw std::runtime_error("edge list: missing weight rows");
  std::string why;
  if (!well_formed(g, &why)) throw std::runtime_error("edge list: " + why);
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(is);
}

}  // namespace percolab
