#include "coxstar/coxeter_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "coxstar/errors.hpp"

namespace coxstar {

std::string label_to_string(Label m) { return m == kInfinity ? "inf" : std::to_string(m); }

CoxeterGraph::CoxeterGraph() : data_(std::make_shared<Data>()) {}

CoxeterGraph CoxeterGraph::from_edges(int rank, const std::vector<Edge>& edges) {
  if (rank < 0) throw DomainError("negative rank");
  auto data = std::make_shared<Data>();
  data->rank = rank;
  const auto n = static_cast<std::size_t>(rank);
  data->matrix.assign(n * n, 2);
  for (std::size_t i = 0; i < n; ++i) data->matrix[i * n + i] = 1;
  std::map<std::pair<Generator, Generator>, Label> seen;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.i >= rank || e.j < 0 || e.j >= rank) {
      throw DomainError("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") out of range for rank " +
                        std::to_string(rank));
    }
    if (e.i == e.j) throw DomainError("self bond on generator " + std::to_string(e.i));
    if (e.label < 2) throw DomainError("bond label must be >= 2");
    auto key = std::minmax(e.i, e.j);
    auto [it, inserted] = seen.emplace(key, e.label);
    if (!inserted && it->second != e.label) {
      throw DomainError("conflicting labels for pair (" + std::to_string(key.first) + ", " +
                        std::to_string(key.second) + ")");
    }
  }
  data->adjacency.resize(n);
  for (const auto& [key, m] : seen) {
    if (m == 2) continue;
    const auto [i, j] = key;
    data->matrix[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = m;
    data->matrix[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = m;
    data->bonds.push_back({i, j, m});
    data->adjacency[static_cast<std::size_t>(i)].push_back(j);
    data->adjacency[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& adj : data->adjacency) std::sort(adj.begin(), adj.end());
  return CoxeterGraph(std::move(data));
}

CoxeterGraph graph_from_edges(int rank, const std::vector<Edge>& edges) {
  return CoxeterGraph::from_edges(rank, edges);
}

Label CoxeterGraph::label(Generator s, Generator t) const {
  const auto n = static_cast<std::size_t>(data_->rank);
  return data_->matrix[static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t)];
}

bool CoxeterGraph::simply_laced() const {
  return std::all_of(bonds().begin(), bonds().end(), [](const Edge& e) { return e.label == 3; });
}

std::string CoxeterGraph::fingerprint() const {
  std::ostringstream canon;
  canon << "rank=" << rank();
  for (const Edge& e : bonds()) canon << ';' << e.i << ',' << e.j << ',' << label_to_string(e.label);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->rank == b.data_->rank && a.data_->matrix == b.data_->matrix;
}

// ---------------------------------------------------------------------------
// Families

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::H: return "H";
    case Family::I2: return "I2";
    case Family::Atilde: return "Atilde";
    case Family::Ctilde: return "Ctilde";
    case Family::Etilde6: return "Etilde";
    case Family::Ftilde5: return "Ftilde";
    case Family::CompleteK: return "K";
  }
  return "?";
}

int FamilySpec::display_index() const {
  switch (family) {
    case Family::Atilde:
    case Family::Ctilde:
    case Family::Etilde6:
    case Family::Ftilde5: return n - 1;
    default: return n;
  }
}

std::string FamilySpec::to_string() const {
  std::string out = family_name(family);
  if (family == Family::I2) return out + "(" + label_to_string(labels.empty() ? 3 : labels.front()) + ")";
  out += std::to_string(display_index());
  if (family == Family::CompleteK) {
    out += "(";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ",";
      out += label_to_string(labels[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

Label parse_label(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "infinity") return kInfinity;
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad bond label '" + text + "'");
  }
  if (used != text.size() || value < 2) throw DomainError("bad bond label '" + text + "'");
  return static_cast<Label>(value);
}

std::vector<Label> parse_label_list(const std::string& inner) {
  std::vector<Label> out;
  std::stringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(parse_label(item));
  }
  return out;
}

int parse_index(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit)) {
    throw DomainError("bad family string '" + whole + "'");
  }
  return std::stoi(text);
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  static const std::vector<std::pair<std::string, Family>> kPrefixes = {
      {"Atilde", Family::Atilde}, {"Ctilde", Family::Ctilde}, {"Etilde", Family::Etilde6},
      {"Ftilde", Family::Ftilde5}, {"I2", Family::I2}, {"A", Family::A},
      {"B", Family::B}, {"D", Family::D}, {"E", Family::E},
      {"F", Family::F}, {"H", Family::H}, {"K", Family::CompleteK}};
  for (const auto& [prefix, fam] : kPrefixes) {
    if (text.rfind(prefix, 0) != 0) continue;
    std::string rest = text.substr(prefix.size());
    FamilySpec spec;
    spec.family = fam;
    if (fam == Family::I2) {
      if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
        throw DomainError("bad family string '" + text + "'");
      }
      spec.n = 2;
      spec.labels = parse_label_list(rest.substr(1, rest.size() - 2));
      if (spec.labels.size() != 1) throw DomainError("I2 takes one label");
      return spec;
    }
    std::string index = rest;
    if (fam == Family::CompleteK) {
      auto open = rest.find('(');
      if (open == std::string::npos || rest.back() != ')') throw DomainError("bad family string '" + text + "'");
      index = rest.substr(0, open);
      spec.labels = parse_label_list(rest.substr(open + 1, rest.size() - open - 2));
    }
    const int k = parse_index(index, text);
    switch (fam) {
      case Family::Atilde:
      case Family::Ctilde:
      case Family::Etilde6:
      case Family::Ftilde5: spec.n = k + 1; break;
      default: spec.n = k;
    }
    if (fam == Family::Etilde6 && k != 6) throw DomainError("only Etilde6 is supported");
    if (fam == Family::Ftilde5 && k != 5) throw DomainError("only Ftilde5 is supported");
    return spec;
  }
  throw DomainError("unknown family '" + text + "'");
}

namespace {

std::vector<Edge> path_edges(int n, const std::vector<Label>& labels) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, labels[static_cast<std::size_t>(i)]});
  return edges;
}

void require(bool ok, const FamilySpec& spec) {
  if (!ok) throw DomainError("parameter out of range for family " + family_name(spec.family) + " with n = " +
                             std::to_string(spec.n));
}

}  // namespace

CoxeterGraph family_graph(const FamilySpec& spec) {
  const int n = spec.n;
  auto simple = [&](int nodes) { return std::vector<Label>(static_cast<std::size_t>(std::max(nodes - 1, 0)), 3); };
  switch (spec.family) {
    case Family::A: {
      require(n >= 1, spec);
      return graph_from_edges(n, path_edges(n, simple(n)));
    }
    case Family::B: {
      require(n >= 2, spec);
      auto labels = simple(n);
      labels.front() = 4;
      return graph_from_edges(n, path_edges(n, labels));
    }
    case Family::H: {
      require(n >= 2, spec);
      auto labels = simple(n);
      labels.front() = 5;
      return graph_from_edges(n, path_edges(n, labels));
    }
    case Family::F: {
      require(n >= 4, spec);
      auto labels = simple(n);
      labels[1] = 4;
      return graph_from_edges(n, path_edges(n, labels));
    }
    case Family::D: {
      require(n >= 4, spec);
      // 0 and 1 both hang off the branch node 2, then a path 2 - 3 - ... - (n-1).
      std::vector<Edge> edges = {{0, 2, 3}, {1, 2, 3}};
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1, 3});
      return graph_from_edges(n, edges);
    }
    case Family::E: {
      require(n >= 6, spec);
      // Path 0 - ... - (n-2) with node n-1 attached to node 2.
      auto edges = path_edges(n - 1, simple(n - 1));
      edges.push_back({2, n - 1, 3});
      return graph_from_edges(n, edges);
    }
    case Family::I2: {
      require(spec.labels.size() == 1 && spec.labels.front() >= 3, spec);
      return graph_from_edges(2, {{0, 1, spec.labels.front()}});
    }
    case Family::Atilde: {
      require(n >= 3 && n % 2 == 1, spec);
      auto edges = path_edges(n, simple(n));
      edges.push_back({0, n - 1, 3});
      return graph_from_edges(n, edges);
    }
    case Family::Ctilde: {
      require(n >= 4 && n % 2 == 0, spec);
      auto labels = simple(n);
      labels.front() = 4;
      labels.back() = 4;
      return graph_from_edges(n, path_edges(n, labels));
    }
    case Family::Etilde6: {
      require(n == 7, spec);
      // Path 0 - 1 - 2 - 3 - 4, third arm 2 - 5 - 6.
      auto edges = path_edges(5, simple(5));
      edges.push_back({2, 5, 3});
      edges.push_back({5, 6, 3});
      return graph_from_edges(7, edges);
    }
    case Family::Ftilde5: {
      require(n == 6, spec);
      return graph_from_edges(6, path_edges(6, {3, 3, 4, 3, 3}));
    }
    case Family::CompleteK: {
      require(n >= 1, spec);
      const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
      require(spec.labels.size() == pairs || (spec.labels.size() == 1 && pairs >= 1) || pairs == 0, spec);
      std::vector<Edge> edges;
      std::size_t k = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const Label m = spec.labels.size() == 1 ? spec.labels.front() : spec.labels[k++];
          require(m >= 3, spec);
          edges.push_back({i, j, m});
        }
      }
      return graph_from_edges(n, edges);
    }
  }
  throw DomainError("unknown family");
}

CoxeterGraph family_graph(const std::string& text) { return family_graph(FamilySpec::parse(text)); }

// ---------------------------------------------------------------------------
// Surgery

InducedSubgraph induced_subgraph(const CoxeterGraph& g, const std::vector<Generator>& subset) {
  InducedSubgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.rank()), -1);
  for (Generator v : subset) {
    if (!g.valid(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    if (out.from_parent[static_cast<std::size_t>(v)] != -1) throw DomainError("duplicate vertex in subset");
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Generator>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < out.to_parent.size(); ++a) {
    for (std::size_t b = a + 1; b < out.to_parent.size(); ++b) {
      const Label m = g.label(out.to_parent[a], out.to_parent[b]);
      if (m >= 3) edges.push_back({static_cast<Generator>(a), static_cast<Generator>(b), m});
    }
  }
  out.graph = graph_from_edges(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

std::vector<Component> connected_components(const CoxeterGraph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.rank()), -1);
  std::vector<Component> out;
  for (Generator start = 0; start < g.rank(); ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Generator> stack = {start}, members;
    comp[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      Generator v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Generator w : g.neighbours(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    auto sub = induced_subgraph(g, members);
    out.push_back({members, sub.graph});
  }
  return out;
}

CoxeterGraph upsilon(const CoxeterGraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.bonds()) edges.push_back({e.i, e.j, 3});
  return graph_from_edges(g.rank(), edges);
}

bool is_complete_graph(const CoxeterGraph& g) {
  const auto n = static_cast<std::size_t>(g.rank());
  return g.bonds().size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// Vertex order along a path graph, starting from the smaller endpoint.
std::vector<Generator> path_order(const CoxeterGraph& g) {
  Generator start = -1;
  for (Generator v = 0; v < g.rank(); ++v) {
    if (g.neighbours(v).size() <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Generator> order = {start};
  Generator prev = -1, cur = start;
  while (true) {
    Generator next = -1;
    for (Generator w : g.neighbours(cur)) {
      if (w != prev) next = w;
    }
    if (next == -1) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::optional<FamilySpec> match_path(const std::vector<Label>& e) {
  const int n = static_cast<int>(e.size()) + 1;
  std::vector<int> odd;
  for (int i = 0; i < n - 1; ++i) {
    if (e[static_cast<std::size_t>(i)] != 3) odd.push_back(i);
  }
  const int last = n - 2;
  if (odd.empty()) return FamilySpec{Family::A, n, {}};
  if (odd.size() == 1) {
    const int p = odd.front();
    const Label m = e[static_cast<std::size_t>(p)];
    const bool extremal = p == 0 || p == last;
    if (m == 4 && extremal) return FamilySpec{Family::B, n, {}};
    if (m == 5 && extremal) return FamilySpec{Family::H, n, {}};
    if (m == 4 && n >= 4 && (p == 1 || p == last - 1)) return FamilySpec{Family::F, n, {}};
    if (m == 4 && n == 6 && p == 2) return FamilySpec{Family::Ftilde5, 6, {}};
    return std::nullopt;
  }
  if (odd.size() == 2 && odd[0] == 0 && odd[1] == last && e.front() == 4 && e.back() == 4 && n % 2 == 0) {
    return FamilySpec{Family::Ctilde, n, {}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilySpec> match_family(const CoxeterGraph& g) {
  const int n = g.rank();
  if (n == 0) return std::nullopt;
  if (n == 1) return FamilySpec{Family::A, 1, {}};
  if (n == 2) {
    const Label m = g.label(0, 1);
    if (m == 2) return std::nullopt;
    if (m == 3) return FamilySpec{Family::A, 2, {}};
    if (m == 4) return FamilySpec{Family::B, 2, {}};
    if (m == 5) return FamilySpec{Family::H, 2, {}};
    return FamilySpec{Family::I2, 2, {m}};
  }
  const std::size_t edges = g.bonds().size();
  std::vector<std::size_t> degree(static_cast<std::size_t>(n));
  for (Generator v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.neighbours(v).size();
  const std::size_t max_degree = *std::max_element(degree.begin(), degree.end());

  if (edges == static_cast<std::size_t>(n) && max_degree == 2) {
    // Connected 2-regular: a cycle.
    if (g.simply_laced() && n % 2 == 1) return FamilySpec{Family::Atilde, n, {}};
  }
  if (is_complete_graph(g)) {
    FamilySpec spec{Family::CompleteK, n, {}};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) spec.labels.push_back(g.label(i, j));
    }
    return spec;
  }
  if (edges != static_cast<std::size_t>(n - 1)) return std::nullopt;  // not a tree
  if (max_degree <= 2) {
    const auto order = path_order(g);
    std::vector<Label> labels;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) labels.push_back(g.label(order[i], order[i + 1]));
    return match_path(labels);
  }
  if (max_degree != 3 || !g.simply_laced()) return std::nullopt;
  if (std::count(degree.begin(), degree.end(), 3) != 1) return std::nullopt;
  const auto branch = static_cast<Generator>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<int> arms;
  for (Generator first : g.neighbours(branch)) {
    int len = 1;
    Generator prev = branch, cur = first;
    while (degree[static_cast<std::size_t>(cur)] == 2) {
      Generator next = g.neighbours(cur)[0] == prev ? g.neighbours(cur)[1] : g.neighbours(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return FamilySpec{Family::D, n, {}};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2) return FamilySpec{Family::E, n, {}};
  if (arms[0] == 2 && arms[1] == 2 && arms[2] == 2) return FamilySpec{Family::Etilde6, 7, {}};
  return std::nullopt;
}

ClassificationVerdict classify_star_reducible(const CoxeterGraph& g) {
  ClassificationVerdict verdict;
  for (const Component& c : connected_components(g)) {
    ComponentVerdict cv;
    cv.vertices = c.vertices;
    cv.family = match_family(c.graph);
    cv.star_reducible = cv.family.has_value();
    verdict.star_reducible = verdict.star_reducible && cv.star_reducible;
    verdict.components.push_back(std::move(cv));
  }
  return verdict;
}

}  // namespace coxstar
