#ifndef COXSTAR_TRACE_MONOID_HPP_
#define COXSTAR_TRACE_MONOID_HPP_

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "coxstar/coxeter_graph.hpp"

namespace coxstar {

using Block = std::vector<Generator>;

/// An element of the commutation monoid, held in Cartier-Foata normal form.
///
/// Blocks are sorted and duplicate free, every block is a set of pairwise
/// commuting generators, and every generator of block j+1 fails to commute
/// with some generator of block j. Equality and ordering look only at the
/// blocks (ordering is by length first).
class Trace {
 public:
  Trace() = default;
  explicit Trace(CoxeterGraph graph) : graph_(std::move(graph)) {}

  /// Builds a trace from blocks already in normal form. Checks the invariants.
  static Trace from_blocks(const CoxeterGraph& graph, std::vector<Block> blocks);

  const CoxeterGraph& graph() const { return graph_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t length() const { return length_; }
  bool empty() const { return blocks_.empty(); }

  /// Concatenation of the blocks: the canonical linearization.
  Word linearize() const;

  friend bool operator==(const Trace& a, const Trace& b) { return a.blocks_ == b.blocks_; }
  friend bool operator!=(const Trace& a, const Trace& b) { return !(a == b); }
  friend bool operator<(const Trace& a, const Trace& b) {
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.blocks_ < b.blocks_;
  }

 private:
  friend Trace cartier_foata(const CoxeterGraph& g, const Word& w);

  CoxeterGraph graph_;
  std::vector<Block> blocks_;
  std::size_t length_ = 0;
};

struct TraceHash {
  std::size_t operator()(const Trace& t) const;
};

/// Throws DomainError if a letter is out of range.
void check_word(const CoxeterGraph& g, const Word& w);

/// Normal form of the commutation class of w. Letters are sorted into levels:
/// the first block is the set of letters that can be moved to the front, the
/// remainder is normalised recursively.
Trace cartier_foata(const CoxeterGraph& g, const Word& w);

/// Throws DomainError when the traces live over different graphs.
Trace trace_concat(const Trace& a, const Trace& b);

Trace reversed(const Trace& t);

/// Possible first letters.
Block left_block(const Trace& t);
/// Possible last letters (the first block of the reversed trace).
Block right_block(const Trace& t);

/// The unique t' with s t' = t; DomainError if s is not a possible first letter.
Trace strip_left(const Trace& t, Generator s);
/// The unique t' with t' s = t.
Trace strip_right(const Trace& t, Generator s);

Trace prepend(Generator s, const Trace& t);
Trace append(const Trace& t, Generator s);

/// Dependence order on the letter occurrences of a word: i < j when an
/// earlier occurrence reaches a later one through a chain of equal or
/// non-commuting letters.
class Heap {
 public:
  Heap(const CoxeterGraph& g, Word letters);
  explicit Heap(const Trace& t) : Heap(t.graph(), t.linearize()) {}

  const CoxeterGraph& graph() const { return graph_; }
  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool less(std::size_t i, std::size_t j) const { return below_[j].test(i); }

  /// True when no occurrence outside `chain` lies strictly between its first
  /// and last member. `chain` must be sorted.
  bool convex(const std::vector<std::size_t>& chain) const;

  /// A linearization in which the (convex, totally ordered) chain appears as
  /// a consecutive factor; returns the word and the index where it starts.
  std::pair<Word, std::size_t> linearize_with_factor(const std::vector<std::size_t>& chain) const;

  /// Replaces the convex chain by `replacement` and renormalises.
  Trace replace_factor(const std::vector<std::size_t>& chain, const Word& replacement) const;

  /// Occurrence positions of the letters in `which`, in order.
  std::vector<std::size_t> occurrences(Generator a, Generator b) const;

 private:
  CoxeterGraph graph_;
  Word letters_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<boost::dynamic_bitset<>> above_;
};

/// Positions refer to Heap::letters() (the canonical linearization when the
/// heap was built from a trace).
struct SquareFactor {
  Generator letter = 0;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct BraidFactor {
  Generator first_letter = 0;
  Generator second_letter = 0;
  std::vector<std::size_t> chain;
};

std::vector<SquareFactor> all_square_factors(const Heap& heap);
std::optional<SquareFactor> find_square_factor(const Heap& heap);
std::optional<SquareFactor> find_square_factor(const Trace& t);

/// Alternating {s, u} factors of exactly `len` letters (either starting
/// letter). DomainError if s and u commute or len < 3.
std::vector<BraidFactor> all_braid_factors(const Heap& heap, Generator s, Generator u, int len);
std::optional<BraidFactor> find_braid_factor(const Heap& heap, Generator s, Generator u, int len);
std::optional<BraidFactor> find_braid_factor(const Trace& t, Generator s, Generator u, int len);

/// Alternating word of `len` letters starting with `first`.
Word alternating_word(Generator first, Generator second, int len);

inline constexpr std::size_t kDefaultCommutationCap = 200000;

/// Every word reachable from w by swapping adjacent commuting letters.
/// Throws CapExceeded when the class is larger than `cap`. Test oracle only.
std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap = kDefaultCommutationCap);

}  // namespace coxstar

#endif  // COXSTAR_TRACE_MONOID_HPP_
