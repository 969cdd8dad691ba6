#include "evc/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace evc {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw GraphError("vertex index " + std::to_string(v) + " outside universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto theirs = w < other.words_.size() ? other.words_[w] : 0;
    if (words_[w] & ~theirs) return false;
  }
  return true;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r(std::max(universe_, o.universe_));
  for (std::size_t w = 0; w < r.words_.size(); ++w)
    r.words_[w] = (w < words_.size() ? words_[w] : 0) | (w < o.words_.size() ? o.words_[w] : 0);
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r(std::max(universe_, o.universe_));
  for (std::size_t w = 0; w < r.words_.size(); ++w)
    r.words_[w] = (w < words_.size() ? words_[w] : 0) & (w < o.words_.size() ? o.words_[w] : 0);
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  VertexSet r = *this;
  for (std::size_t w = 0; w < r.words_.size() && w < o.words_.size(); ++w) r.words_[w] &= ~o.words_[w];
  return r;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

Graph::Graph(std::vector<std::string> ids, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end())
    throw GraphError("duplicate vertex id '" + *dup + "'");
  for (const auto& id : ids)
    if (id.empty() || id.find_first_of(" \t\r\n") != std::string::npos)
      throw GraphError("invalid vertex id '" + id + "'");
  ids_ = std::move(ids);
  std::vector<Edge> index_edges;
  index_edges.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto u = find(a);
    auto v = find(b);
    if (!u) throw GraphError("unknown vertex id '" + a + "' in edge");
    if (!v) throw GraphError("unknown vertex id '" + b + "' in edge");
    if (*u == *v) throw GraphError("self-loop on '" + a + "'");
    index_edges.push_back(make_edge(*u, *v));
  }
  finish(std::move(index_edges));
}

Graph Graph::from_positions(std::vector<std::string> ids,
                            const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges.size());
  for (auto [a, b] : edges) named.emplace_back(ids.at(a), ids.at(b));
  return Graph(std::move(ids), named);
}

Graph Graph::with_default_ids(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  return from_positions(std::move(ids), edges);
}

void Graph::finish(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw GraphError("duplicate edge '" + ids_[dup->first] + " " + ids_[dup->second] + "'");
  edges_ = std::move(edges);
  adjacency_.assign(ids_.size(), {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  closed_rows_.clear();
  for (Vertex v = 0; v < ids_.size(); ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    VertexSet row(ids_.size(), adjacency_[v]);
    row.insert(v);
    closed_rows_.push_back(std::move(row));
  }
}

std::optional<Vertex> Graph::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

Vertex Graph::at(std::string_view id) const {
  auto v = find(id);
  if (!v) throw GraphError("unknown vertex id '" + std::string(id) + "'");
  return *v;
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  auto e = make_edge(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  return u != v && u < size() && v < size() && closed_rows_[u].contains(v);
}

VertexSet Graph::full_set() const {
  VertexSet s(size());
  for (Vertex v = 0; v < size(); ++v) s.insert(v);
  return s;
}

VertexSet Graph::set_of(std::initializer_list<std::string_view> ids) const {
  VertexSet s(size());
  for (auto id : ids) s.insert(at(id));
  return s;
}

std::string Graph::format_set(const VertexSet& s, std::string_view sep) const {
  std::string out;
  for (Vertex v : s.members()) {
    if (!out.empty()) out += sep;
    out += ids_.at(v);
  }
  return out;
}

std::string Graph::format_edge(Edge e, std::string_view sep) const {
  return ids_.at(e.first) + std::string(sep) + ids_.at(e.second);
}

Graph Graph::complement() const {
  std::vector<std::pair<std::string, std::string>> edges;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v = u + 1; v < size(); ++v)
      if (!has_edge(u, v)) edges.emplace_back(ids_[u], ids_[v]);
  return Graph(ids_, edges);
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::string> ids;
  for (Vertex v : keep.members()) ids.push_back(ids_.at(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : edges_)
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(ids_[u], ids_[v]);
  return Graph(std::move(ids), edges);
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<std::size_t> declared;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> edges;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw GraphError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!declared) {
      if (tok.size() != 2 || tok[0] != "graph") fail("expected header 'graph <n>'");
      try {
        std::size_t used = 0;
        long long n = std::stoll(tok[1], &used);
        if (used != tok[1].size() || n < 0) fail("bad vertex count '" + tok[1] + "'");
        declared = static_cast<std::size_t>(n);
      } catch (const std::logic_error&) {
        fail("bad vertex count '" + tok[1] + "'");
      }
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 2) fail("expected 'v <id>'");
      if (!edges.empty()) fail("vertex line after edge lines");
      ids.push_back(tok[1]);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) fail("expected 'e <id> <id>'");
      edges.emplace_back(tok[1], tok[2]);
    } else {
      fail("unknown record '" + tok[0] + "'");
    }
  }
  if (!declared) throw GraphError("missing header 'graph <n>'");
  if (ids.empty()) {
    // no vertex lines: edge endpoints in order of appearance, then v0, v1, ... up to n
    std::set<std::string> seen;
    for (const auto& [a, b] : edges)
      for (const auto* id : {&a, &b})
        if (seen.insert(*id).second) ids.push_back(*id);
    if (ids.size() > *declared)
      throw GraphError("header declares " + std::to_string(*declared) + " vertices but edges name " +
                       std::to_string(ids.size()));
    for (std::size_t i = 0; ids.size() < *declared; ++i)
      if (seen.insert("v" + std::to_string(i)).second) ids.push_back("v" + std::to_string(i));
  } else if (ids.size() != *declared) {
    throw GraphError("header declares " + std::to_string(*declared) + " vertices but " +
                     std::to_string(ids.size()) + " were listed");
  }
  return Graph(std::move(ids), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.size() << '\n';
  for (const auto& id : g.ids()) out << "v " << id << '\n';
  // indices follow id order, so index order is id order
  for (auto [u, v] : g.edges()) out << "e " << g.id(u) << ' ' << g.id(v) << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace evc
