#ifndef COXSTAR_ELEMENTS_HPP_
#define COXSTAR_ELEMENTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxstar/coxeter_graph.hpp"
#include "coxstar/trace_monoid.hpp"

namespace coxstar {

enum class Side { Left, Right };

/// True iff w is a reduced expression of a fully commutative element: its
/// heap has no convex ss chain and, for each bond with finite m >= 3, no
/// convex alternating chain of m letters. Bonds labelled infinity never
/// produce a braid.
bool is_reduced_fc(const CoxeterGraph& g, const Word& w);
bool is_reduced_fc(const Trace& t);

/// A fully commutative element, identified with its Cartier-Foata trace.
class FcElement {
 public:
  FcElement() = default;

  /// DomainError unless w is reduced and fully commutative.
  static FcElement from_word(const CoxeterGraph& g, const Word& w);
  static FcElement from_trace(const Trace& t);
  static FcElement identity(const CoxeterGraph& g) { return FcElement(Trace(g)); }
  static FcElement generator(const CoxeterGraph& g, Generator s);

  const Trace& trace() const { return trace_; }
  const CoxeterGraph& graph() const { return trace_.graph(); }
  std::size_t length() const { return trace_.length(); }
  Word word() const { return trace_.linearize(); }

  friend bool operator==(const FcElement& a, const FcElement& b) { return a.trace_ == b.trace_; }
  friend bool operator!=(const FcElement& a, const FcElement& b) { return !(a == b); }
  /// By length, then lexicographically by blocks.
  friend bool operator<(const FcElement& a, const FcElement& b) { return a.trace_ < b.trace_; }

  // Skips the fully commutative check; the caller vouches for it.
  static FcElement unchecked(Trace t) { return FcElement(std::move(t)); }

 private:
  explicit FcElement(Trace t) : trace_(std::move(t)) {}
  Trace trace_;
};

struct FcElementHash {
  std::size_t operator()(const FcElement& w) const { return TraceHash{}(w.trace()); }
};

Block left_descents(const FcElement& w);
Block right_descents(const FcElement& w);

/// Whether w s is again reduced and fully commutative. Only chains ending at
/// the new letter are examined.
bool fc_extends_right(const FcElement& w, Generator s);

struct FcEnumeration {
  std::vector<FcElement> elements;  // sorted by (length, trace)
  bool exhaustive = false;          // every fully commutative element is listed
  std::size_t max_length_found = 0;
};

/// Breadth first search by length from the identity, extending on the right.
/// `jobs` > 1 splits each frontier across threads; the output does not
/// depend on it.
FcEnumeration enumerate_fc(const CoxeterGraph& g, int max_len, int jobs = 1);

struct CosetDecomposition {
  /// Left: w = alternating * rest. Right: w = rest * alternating.
  Word alternating;
  FcElement rest;
};

/// Maximal alternating {s, t} prefix (left) or suffix (right), found by greedy
/// stripping. DomainError if s and t commute.
CosetDecomposition coset_decompose(const FcElement& w, Generator s, Generator t, Side side);

// ---------------------------------------------------------------------------
// General elements through the word problem.

enum class Reducedness { Reduced, NotReduced, Unknown };

inline constexpr std::size_t kDefaultTitsCap = 500000;

/// Explores the closure of w under commutations and braid moves; w fails to
/// be reduced iff some word in the closure contains a square ss. Unknown if
/// the closure exceeds `cap` traces.
Reducedness tits_is_reduced(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultTitsCap);

/// A group element, represented by every commutation class of its reduced
/// expressions.
class GroupElement {
 public:
  /// DomainError if w is not reduced, CapExceeded if undecided.
  static GroupElement from_word(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultTitsCap);

  const std::vector<Trace>& reduced_traces() const { return traces_; }
  /// Smallest trace in the closure; identifies the element.
  const Trace& canonical() const { return traces_.front(); }
  std::size_t length() const { return traces_.front().length(); }
  Word word() const { return canonical().linearize(); }
  bool fully_commutative() const { return traces_.size() == 1 && is_reduced_fc(traces_.front()); }
  Block left_descents() const;
  Block right_descents() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.canonical() == b.canonical(); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.canonical() < b.canonical(); }

 private:
  friend std::vector<GroupElement> enumerate_group(const CoxeterGraph&, int, std::size_t);
  std::vector<Trace> traces_;
};

/// Every element of length <= max_len, by length. Oracle for the small
/// regimes only; CapExceeded if a closure grows beyond `cap`.
std::vector<GroupElement> enumerate_group(const CoxeterGraph& g, int max_len, std::size_t cap = kDefaultTitsCap);

/// For reduced w: complex means not fully commutative.
bool is_complex_word(const CoxeterGraph& g, const Word& w);

/// Complex, and some left descent s has s w fully commutative.
bool is_weakly_complex(const CoxeterGraph& g, const Word& w);
bool is_weakly_complex(const GroupElement& w);

enum class ShapeCase { CommutingProduct, BeginsST, EndsTS, BeginsSUT };

std::string shape_case_name(ShapeCase c);

struct NormalShape {
  ShapeCase which = ShapeCase::CommutingProduct;
  Word witness;  // a reduced expression of w exhibiting the case
};

/// First applicable of: (i) product of commuting generators; (ii) a reduced
/// expression beginning st with s, t bonded; (iii) one ending ts; (iv) one
/// beginning sut with s-t and t-u bonded and s, u commuting.
/// VerificationError if none applies.
NormalShape normal_shape_case(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultTitsCap);
NormalShape normal_shape_case(const GroupElement& w);

/// The induced subgraphs on consecutive pairs of normal-form blocks.
std::vector<InducedSubgraph> cf_block_subgraphs(const FcElement& w);

}  // namespace coxstar

#endif  // COXSTAR_ELEMENTS_HPP_
