#ifndef COXSTAR_COXETER_GRAPH_HPP_
#define COXSTAR_COXETER_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxstar {

using Generator = int;
using Word = std::vector<Generator>;

/// Bond label m(s, t). 2 means the generators commute.
using Label = unsigned;
inline constexpr Label kInfinity = std::numeric_limits<Label>::max();

std::string label_to_string(Label m);

struct Edge {
  Generator i = 0;
  Generator j = 0;
  Label label = 3;
};

/// A Coxeter graph on generators 0..rank-1.
///
/// Immutable; copies share the underlying label matrix. Only labels >= 3 are
/// stored as bonds, every other pair of distinct generators commutes.
class CoxeterGraph {
 public:
  CoxeterGraph();

  /// Throws DomainError on out-of-range indices, self bonds, labels < 2, or two
  /// edges for the same pair with different labels. Label-2 edges are dropped.
  static CoxeterGraph from_edges(int rank, const std::vector<Edge>& edges);

  int rank() const { return data_->rank; }
  /// m(s, t); m(s, s) = 1.
  Label label(Generator s, Generator t) const;
  bool commute(Generator s, Generator t) const { return s != t && label(s, t) == 2; }
  bool bonded(Generator s, Generator t) const { return s != t && label(s, t) >= 3; }
  bool valid(Generator s) const { return s >= 0 && s < rank(); }

  /// Bonds with i < j, sorted.
  const std::vector<Edge>& bonds() const { return data_->bonds; }
  const std::vector<Generator>& neighbours(Generator s) const { return data_->adjacency[static_cast<std::size_t>(s)]; }
  bool simply_laced() const;

  /// Stable 64-bit hash of the bond map, hex encoded.
  std::string fingerprint() const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b);
  friend bool operator!=(const CoxeterGraph& a, const CoxeterGraph& b) { return !(a == b); }

 private:
  struct Data {
    int rank = 0;
    std::vector<Label> matrix;
    std::vector<Edge> bonds;
    std::vector<std::vector<Generator>> adjacency;
  };
  explicit CoxeterGraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

CoxeterGraph graph_from_edges(int rank, const std::vector<Edge>& edges);

enum class Family { A, B, D, E, F, H, I2, Atilde, Ctilde, Etilde6, Ftilde5, CompleteK };

std::string family_name(Family f);

/// A named graph. `n` is the number of nodes; for I2 it is 2 and `labels`
/// holds the single bond; for CompleteK `labels` lists m(i, j) for i < j in
/// lexicographic order (or a single label used for every pair).
struct FamilySpec {
  Family family = Family::A;
  int n = 1;
  std::vector<Label> labels;

  /// The index shown in the usual notation: A_n, ..., Atilde_{n-1}.
  int display_index() const;
  std::string to_string() const;

  /// Parses "A4", "I2(7)", "Atilde4", "Ctilde3", "K3(3,4,5)", "K4(inf)", ...
  static FamilySpec parse(const std::string& text);

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws DomainError when parameters are out of range for the family.
CoxeterGraph family_graph(const FamilySpec& spec);
CoxeterGraph family_graph(const std::string& text);

struct InducedSubgraph {
  CoxeterGraph graph;
  /// new index -> old index
  std::vector<Generator> to_parent;
  /// old index -> new index, or -1
  std::vector<Generator> from_parent;
};

InducedSubgraph induced_subgraph(const CoxeterGraph& g, const std::vector<Generator>& subset);

struct Component {
  std::vector<Generator> vertices;  // sorted
  CoxeterGraph graph;               // induced, re-indexed in vertex order
};

std::vector<Component> connected_components(const CoxeterGraph& g);

/// Replaces every label > 3 (including infinity) by 3.
CoxeterGraph upsilon(const CoxeterGraph& g);

struct ComponentVerdict {
  std::vector<Generator> vertices;
  std::optional<FamilySpec> family;  // empty: unmatched
  bool star_reducible = false;
};

struct ClassificationVerdict {
  bool star_reducible = true;
  std::vector<ComponentVerdict> components;
};

/// Star reducibility read off the graph shape: every component must be a
/// complete graph with labels >= 3 or one of the families A B D E F H I2,
/// Atilde (odd cycles), Ctilde (even paths with both end bonds 4), Etilde6,
/// Ftilde5.
ClassificationVerdict classify_star_reducible(const CoxeterGraph& g);

/// Shape recognition for a connected graph; nothing if it is in no family.
std::optional<FamilySpec> match_family(const CoxeterGraph& connected);

bool is_complete_graph(const CoxeterGraph& g);

}  // namespace coxstar

#endif  // COXSTAR_COXETER_GRAPH_HPP_
