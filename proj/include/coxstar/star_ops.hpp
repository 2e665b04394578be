#ifndef COXSTAR_STAR_OPS_HPP_
#define COXSTAR_STAR_OPS_HPP_

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxstar/elements.hpp"

namespace coxstar {

/// Where w sits on its {s, t}-string: w = w_I w^I (left) or w = w^I w_I
/// (right) with w_I alternating of length k.
struct StringPosition {
  Generator s = 0;
  Generator t = 0;
  Side side = Side::Left;
  Label m = 3;
  std::size_t k = 0;
  Word alternating;  // w_I, in reading order
  FcElement rest;

  std::optional<Generator> first_letter() const;
  std::optional<Generator> last_letter() const;
};

/// DomainError if s and t commute.
StringPosition string_position(const FcElement& w, Generator s, Generator t, Side side);

/// ^*w (left) or w^* (right). Defined for 1 <= k <= m-2, or k >= 1 when m is
/// infinite.
std::optional<FcElement> star_up(const FcElement& w, Generator s, Generator t, Side side);

/// _*w (left) or w_* (right). Defined for 2 <= k <= m-1.
std::optional<FcElement> star_down(const FcElement& w, Generator s, Generator t, Side side);

bool is_commuting_product(const FcElement& w);

struct StarStep {
  Generator s = 0;  // s < t
  Generator t = 0;
  Side side = Side::Left;
  FcElement result;
};

using StarPath = std::vector<StarStep>;

/// Depth-first search for a chain of star_down moves to a commuting product.
/// Pairs are tried by index, left before right. Verdicts are memoized on the
/// trace, so one reducer can serve many queries (and several threads).
class StarReducer {
 public:
  std::optional<StarPath> path(const FcElement& w);
  bool reducible(const FcElement& w) { return solve(w); }
  std::size_t memo_size() const;

 private:
  struct Entry {
    bool ok = false;
    std::optional<StarStep> next;  // empty when w is already a commuting product
  };
  bool solve(const FcElement& w);
  std::optional<Entry> lookup(const Trace& t) const;

  mutable std::mutex mutex_;
  std::unordered_map<Trace, Entry, TraceHash> memo_;
};

std::optional<StarPath> star_reduce_path(const FcElement& w);

struct AuditResult {
  std::vector<FcElement> witnesses;  // fully commutative, not star reducible
  bool exhaustive = false;
  std::size_t checked = 0;
};

AuditResult audit_graph(const CoxeterGraph& g, int max_len, int jobs = 1);

}  // namespace coxstar

#endif  // COXSTAR_STAR_OPS_HPP_
