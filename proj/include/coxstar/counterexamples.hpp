#ifndef COXSTAR_COUNTEREXAMPLES_HPP_
#define COXSTAR_COUNTEREXAMPLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "coxstar/coxeter_graph.hpp"

namespace coxstar {

/// A fully commutative element that is neither a commuting product nor star
/// reducible, built from one of the known obstruction shapes.
struct Counterexample {
  std::string shape;
  std::vector<Generator> vertices;  // the induced subgraph, in pattern order
  Word word;
};

/// Names of the obstruction shapes, in search order.
const std::vector<std::string>& counterexample_shapes();

/// Searches induced subgraphs by increasing size for an obstruction shape and
/// returns its word, checked before it is handed out. DomainError if g is
/// star reducible.
std::optional<Counterexample> find_counterexample(const CoxeterGraph& g);
std::optional<Word> counterexample_word(const CoxeterGraph& g);

}  // namespace coxstar

#endif  // COXSTAR_COUNTEREXAMPLES_HPP_
