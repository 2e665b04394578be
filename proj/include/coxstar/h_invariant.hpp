#ifndef COXSTAR_H_INVARIANT_HPP_
#define COXSTAR_H_INVARIANT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "coxstar/trace_monoid.hpp"

namespace coxstar {

struct HMove {
  enum class Kind { Square, Triple } kind = Kind::Square;
  std::vector<Generator> pair;  // [s] for ss -> s, [s, t] for sts -> s
  std::size_t position = 0;     // index of the first letter in the current normal form
};

std::string move_kind_name(HMove::Kind k);

struct HResult {
  unsigned h = 0;  // number of ss -> s moves
  std::vector<HMove> log;
  Trace terminal;
};

/// Rewrites w with ss -> s and sts -> s (s, t not commuting) until no move
/// applies, picking moves pseudo-randomly from `seed`. The end result must be
/// reduced and fully commutative. DomainError on graphs that are not star
/// reducible, where the count need not be well defined.
HResult h_value(const CoxeterGraph& g, const Word& w, std::uint64_t seed = 0);

bool is_acyclic(const CoxeterGraph& g, const Word& w);

}  // namespace coxstar

#endif  // COXSTAR_H_INVARIANT_HPP_
