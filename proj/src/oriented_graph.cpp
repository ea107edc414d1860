#include "biasgraph/oriented_graph.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

#include "biasgraph/kernels.hpp"

namespace biasgraph {

const char* to_string(GraphErrorKind kind) noexcept {
  switch (kind) {
    case GraphErrorKind::kMalformed: return "malformed input";
    case GraphErrorKind::kLoop: return "loop";
    case GraphErrorKind::kDigon: return "digon";
    case GraphErrorKind::kDuplicateArc: return "duplicate arc";
    case GraphErrorKind::kVertexOutOfRange: return "vertex out of range";
    case GraphErrorKind::kCountMismatch: return "count mismatch";
  }
  return "unknown";
}

OrientedGraph OrientedGraph::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 0) throw GraphError(GraphErrorKind::kMalformed, "negative vertex count");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange,
                       std::to_string(a.tail) + " " + std::to_string(a.head) + " with n=" + std::to_string(n));
    }
    if (a.tail == a.head) throw GraphError(GraphErrorKind::kLoop, "at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 1; i < arcs.size(); ++i) {
    if (arcs[i] == arcs[i - 1]) {
      throw GraphError(GraphErrorKind::kDuplicateArc,
                       std::to_string(arcs[i].tail) + " " + std::to_string(arcs[i].head));
    }
  }
  for (const Arc& a : arcs) {
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{a.head, a.tail})) {
      throw GraphError(GraphErrorKind::kDigon,
                       std::to_string(a.tail) + " " + std::to_string(a.head) + " and reverse");
    }
  }

  OrientedGraph g;
  g.n_ = n;
  g.words_ = VertexSet::word_count(n);
  g.arcs_ = std::move(arcs);
  const auto un = static_cast<std::size_t>(n);
  g.out_offset_.assign(un + 1, 0);
  g.in_offset_.assign(un + 1, 0);
  for (const Arc& a : g.arcs_) {
    ++g.out_offset_[static_cast<std::size_t>(a.tail) + 1];
    ++g.in_offset_[static_cast<std::size_t>(a.head) + 1];
  }
  for (std::size_t v = 0; v < un; ++v) {
    g.out_offset_[v + 1] += g.out_offset_[v];
    g.in_offset_[v + 1] += g.in_offset_[v];
  }
  g.out_adj_.resize(g.arcs_.size());
  g.in_adj_.resize(g.arcs_.size());
  std::vector<int> out_fill(g.out_offset_.begin(), g.out_offset_.end() - 1);
  std::vector<int> in_fill(g.in_offset_.begin(), g.in_offset_.end() - 1);
  g.out_rows_.assign(un * g.words_, 0);
  g.in_rows_.assign(un * g.words_, 0);
  // Arcs are sorted by tail, so out lists come out sorted; in lists are
  // filled in tail order, which is also sorted.
  for (const Arc& a : g.arcs_) {
    g.out_adj_[static_cast<std::size_t>(out_fill[static_cast<std::size_t>(a.tail)]++)] = a.head;
    g.in_adj_[static_cast<std::size_t>(in_fill[static_cast<std::size_t>(a.head)]++)] = a.tail;
    g.out_rows_[g.row_index(a.tail) + (static_cast<std::size_t>(a.head) >> 6)] |= std::uint64_t{1} << (a.head & 63);
    g.in_rows_[g.row_index(a.head) + (static_cast<std::size_t>(a.tail) >> 6)] |= std::uint64_t{1} << (a.tail & 63);
  }
  return g;
}

namespace {

// Splits into lines, dropping comment and blank lines, keeping 1-based line
// numbers for diagnostics.
std::vector<std::pair<int, std::string_view>> data_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line_no, line);
  }
  return out;
}

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto sp = line.find(' ', start);
    out.push_back(line.substr(start, sp == std::string_view::npos ? std::string_view::npos : sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

long long parse_uint(std::string_view s, int line_no) {
  if (s.empty() || s.size() > 12) {
    throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": expected a number");
  }
  long long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw GraphError(GraphErrorKind::kMalformed,
                       "line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

struct Header {
  int n;
  long long m;
};

Header parse_header(const std::vector<std::pair<int, std::string_view>>& lines) {
  if (lines.empty()) throw GraphError(GraphErrorKind::kMalformed, "missing header line");
  const auto [line_no, line] = lines.front();
  const auto f = fields(line);
  if (f.size() != 2) {
    throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": header must be 'n m'");
  }
  const long long n = parse_uint(f[0], line_no);
  const long long m = parse_uint(f[1], line_no);
  if (n > 1'000'000) throw GraphError(GraphErrorKind::kMalformed, "vertex count too large");
  const auto body = static_cast<long long>(lines.size()) - 1;
  if (body != m) {
    throw GraphError(GraphErrorKind::kCountMismatch,
                     "header declares " + std::to_string(m) + " lines, found " + std::to_string(body));
  }
  return {static_cast<int>(n), m};
}

int checked_vertex(long long v, int n, int line_no) {
  if (v >= n) {
    throw GraphError(GraphErrorKind::kVertexOutOfRange,
                     "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                         " with n=" + std::to_string(n));
  }
  return static_cast<int>(v);
}

}  // namespace

OrientedGraph parse_digraph(std::string_view text) {
  const auto lines = data_lines(text);
  const Header h = parse_header(lines);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(h.m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto f = fields(line);
    if (f.size() != 2) {
      throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": expected 'tail head'");
    }
    const int u = checked_vertex(parse_uint(f[0], line_no), h.n, line_no);
    const int v = checked_vertex(parse_uint(f[1], line_no), h.n, line_no);
    arcs.push_back({u, v});
  }
  return OrientedGraph::from_arcs(h.n, std::move(arcs));
}

OrientedGraph read_digraph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_digraph(text);
}

std::string serialize(const OrientedGraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::uint64_t arc_count_between(const OrientedGraph& d, const VertexSet& a, const VertexSet& b) {
  const auto& k = kernels::active();
  const auto bw = b.words();
  std::uint64_t total = 0;
  for (int x : a.members()) total += k.and_popcount(d.out_row(x).data(), bw.data(), d.words_per_row());
  return total;
}

DegreeProfile degree_profile(const OrientedGraph& d) {
  DegreeProfile p;
  p.out.resize(static_cast<std::size_t>(d.order()));
  p.in.resize(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) {
    p.out[static_cast<std::size_t>(v)] = d.out_degree(v);
    p.in[static_cast<std::size_t>(v)] = d.in_degree(v);
    p.max_out = std::max(p.max_out, d.out_degree(v));
    p.max_in = std::max(p.max_in, d.in_degree(v));
  }
  return p;
}

JointDegrees joint_degrees(const OrientedGraph& d, int x, int u) {
  const auto& k = kernels::active();
  const std::size_t w = d.words_per_row();
  auto count = [&](std::span<const std::uint64_t> r, std::span<const std::uint64_t> s) {
    return static_cast<int>(k.and_popcount(r.data(), s.data(), w));
  };
  return {count(d.out_row(x), d.out_row(u)), count(d.out_row(x), d.in_row(u)),
          count(d.in_row(x), d.out_row(u)), count(d.in_row(x), d.in_row(u))};
}

OrientedGraph reverse(const OrientedGraph& d) {
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
  return OrientedGraph::from_arcs(d.order(), std::move(arcs));
}

VertexSet b_set(const OrientedGraph& d, const VertexSet& a) {
  const auto n = static_cast<std::size_t>(d.order());
  std::vector<std::uint32_t> into_a(n);
  kernels::active().masked_popcounts(d.out_rows().data(), n, d.words_per_row(), a.words().data(),
                                     into_a.data());
  VertexSet b(d.order());
  for (std::size_t v = 0; v < n; ++v) {
    if (into_a[v] == 0) b.insert(static_cast<int>(v));
  }
  return b;
}

int regular_degree(const OrientedGraph& d) {
  if (d.order() == 0) return -1;
  const int deg = d.out_degree(0);
  for (int v = 0; v < d.order(); ++v) {
    if (d.out_degree(v) != deg || d.in_degree(v) != deg) return -1;
  }
  return deg;
}

PartiallyOrientedGraph PartiallyOrientedGraph::from(int k, std::vector<Arc> arcs,
                                                    std::vector<std::pair<int, int>> edges) {
  if (k < 0) throw GraphError(GraphErrorKind::kMalformed, "negative pattern order");
  std::set<std::pair<int, int>> seen;
  auto claim = [&](int u, int v, bool directed) {
    if (u < 0 || u >= k || v < 0 || v >= k) {
      throw GraphError(GraphErrorKind::kVertexOutOfRange, std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw GraphError(GraphErrorKind::kLoop, "at pattern vertex " + std::to_string(u));
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw GraphError(directed ? GraphErrorKind::kDigon : GraphErrorKind::kDuplicateArc,
                       "pair " + std::to_string(key.first) + " " + std::to_string(key.second) + " used twice");
    }
  };
  for (const Arc& a : arcs) claim(a.tail, a.head, true);
  for (auto& e : edges) {
    claim(e.first, e.second, false);
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(arcs.begin(), arcs.end());
  std::sort(edges.begin(), edges.end());
  PartiallyOrientedGraph h;
  h.k_ = k;
  h.arcs_ = std::move(arcs);
  h.edges_ = std::move(edges);
  return h;
}

PartiallyOrientedGraph PartiallyOrientedGraph::underlying() const {
  std::vector<std::pair<int, int>> all(edges_.begin(), edges_.end());
  for (const Arc& a : arcs_) all.emplace_back(a.tail, a.head);
  return from(k_, {}, std::move(all));
}

PartiallyOrientedGraph PartiallyOrientedGraph::from_oriented(const OrientedGraph& d) {
  return from(d.order(), {d.arcs().begin(), d.arcs().end()}, {});
}

PartiallyOrientedGraph parse_pattern(std::string_view text) {
  const auto lines = data_lines(text);
  const Header h = parse_header(lines);
  std::vector<Arc> arcs;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto f = fields(line);
    if (f.size() != 3 || (f[2] != ">" && f[2] != "-")) {
      throw GraphError(GraphErrorKind::kMalformed, "line " + std::to_string(line_no) + ": expected 'u v >' or 'u v -'");
    }
    const int u = checked_vertex(parse_uint(f[0], line_no), h.n, line_no);
    const int v = checked_vertex(parse_uint(f[1], line_no), h.n, line_no);
    if (f[2] == ">") {
      arcs.push_back({u, v});
    } else {
      edges.emplace_back(u, v);
    }
  }
  return PartiallyOrientedGraph::from(h.n, std::move(arcs), std::move(edges));
}

std::string serialize(const PartiallyOrientedGraph& h) {
  std::ostringstream out;
  out << h.order() << ' ' << h.edge_total() << '\n';
  for (const Arc& a : h.arcs()) out << a.tail << ' ' << a.head << " >\n";
  for (const auto& [u, v] : h.edges()) out << u << ' ' << v << " -\n";
  return out.str();
}

}  // namespace biasgraph
