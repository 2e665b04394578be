#include "coxstar/elements.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "coxstar/errors.hpp"

namespace coxstar {

namespace {

bool contains(const Block& b, Generator s) { return std::binary_search(b.begin(), b.end(), s); }

void sort_unique(Block& b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
}

bool heap_is_reduced_fc(const Heap& h) {
  if (find_square_factor(h)) return false;
  for (const Edge& e : h.graph().bonds()) {
    if (e.label == kInfinity) continue;
    if (find_braid_factor(h, e.i, e.j, static_cast<int>(e.label))) return false;
  }
  return true;
}

struct Closure {
  std::vector<Trace> traces;
  bool square = false;
  bool capped = false;
};

// Every commutation class reachable from `start` by braid moves. Stops early
// once a square shows up (the word was not reduced).
Closure braid_closure(const Trace& start, std::size_t cap) {
  Closure out;
  const CoxeterGraph& g = start.graph();
  std::unordered_set<Trace, TraceHash> seen{start};
  std::deque<Trace> queue{start};
  while (!queue.empty()) {
    Trace cur = std::move(queue.front());
    queue.pop_front();
    Heap h(cur);
    if (find_square_factor(h)) {
      out.square = true;
      return out;
    }
    for (const Edge& e : g.bonds()) {
      if (e.label == kInfinity) continue;
      const int m = static_cast<int>(e.label);
      for (const BraidFactor& f : all_braid_factors(h, e.i, e.j, m)) {
        Trace next = h.replace_factor(f.chain, alternating_word(f.second_letter, f.first_letter, m));
        if (seen.insert(next).second) {
          if (seen.size() > cap) {
            out.capped = true;
            return out;
          }
          queue.push_back(std::move(next));
        }
      }
    }
    out.traces.push_back(std::move(cur));
  }
  std::sort(out.traces.begin(), out.traces.end());
  return out;
}

}  // namespace

bool is_reduced_fc(const CoxeterGraph& g, const Word& w) {
  check_word(g, w);
  return heap_is_reduced_fc(Heap(g, w));
}

bool is_reduced_fc(const Trace& t) { return heap_is_reduced_fc(Heap(t)); }

FcElement FcElement::from_word(const CoxeterGraph& g, const Word& w) {
  if (!is_reduced_fc(g, w)) throw DomainError("word is not a reduced expression of a fully commutative element");
  return FcElement(cartier_foata(g, w));
}

FcElement FcElement::from_trace(const Trace& t) {
  if (!is_reduced_fc(t)) throw DomainError("trace is not reduced and fully commutative");
  return FcElement(t);
}

FcElement FcElement::generator(const CoxeterGraph& g, Generator s) {
  return FcElement(cartier_foata(g, Word{s}));
}

Block left_descents(const FcElement& w) { return left_block(w.trace()); }
Block right_descents(const FcElement& w) { return right_block(w.trace()); }

bool fc_extends_right(const FcElement& w, Generator s) {
  const CoxeterGraph& g = w.graph();
  if (!g.valid(s)) throw DomainError("generator out of range");
  Word letters = w.word();
  letters.push_back(s);
  const std::size_t last = letters.size() - 1;
  Heap h(g, std::move(letters));

  for (std::size_t i = last; i-- > 0;) {
    if (h.letters()[i] != s) continue;
    if (h.convex({i, last})) return false;
    break;
  }
  for (Generator t : g.neighbours(s)) {
    const Label m = g.label(s, t);
    if (m == kInfinity) continue;
    std::vector<std::size_t> occ = h.occurrences(s, t);
    if (occ.size() < m) continue;
    std::vector<std::size_t> chain(occ.end() - m, occ.end());
    bool alternating = true;
    for (std::size_t k = 1; k < chain.size(); ++k)
      if (h.letters()[chain[k]] == h.letters()[chain[k - 1]]) alternating = false;
    if (alternating && h.convex(chain)) return false;
  }
  return true;
}

namespace {

std::vector<Trace> extend_slice(const std::vector<FcElement>& frontier, std::size_t lo, std::size_t hi) {
  std::vector<Trace> out;
  for (std::size_t i = lo; i < hi; ++i) {
    const FcElement& w = frontier[i];
    for (Generator s = 0; s < w.graph().rank(); ++s)
      if (fc_extends_right(w, s)) out.push_back(append(w.trace(), s));
  }
  return out;
}

std::vector<FcElement> next_stratum(const std::vector<FcElement>& frontier, int jobs) {
  std::vector<Trace> found;
  const std::size_t n = frontier.size();
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    found = extend_slice(frontier, 0, n);
  } else {
    std::vector<std::vector<Trace>> parts(workers);
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < workers; ++k) {
      const std::size_t lo = n * k / workers, hi = n * (k + 1) / workers;
      threads.emplace_back([&, k, lo, hi] { parts[k] = extend_slice(frontier, lo, hi); });
    }
    for (auto& th : threads) th.join();
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(found));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<FcElement> out;
  out.reserve(found.size());
  for (Trace& t : found) out.push_back(FcElement::unchecked(std::move(t)));
  return out;
}

}  // namespace

FcEnumeration enumerate_fc(const CoxeterGraph& g, int max_len, int jobs) {
  if (max_len < 0) throw DomainError("max_len must be non-negative");
  FcEnumeration out;
  std::vector<FcElement> frontier{FcElement::identity(g)};
  out.elements = frontier;
  for (int len = 1;; ++len) {
    std::vector<FcElement> next = next_stratum(frontier, jobs);
    if (next.empty()) {
      out.exhaustive = true;
      break;
    }
    if (len > max_len) break;
    out.max_length_found = static_cast<std::size_t>(len);
    out.elements.insert(out.elements.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

CosetDecomposition coset_decompose(const FcElement& w, Generator s, Generator t, Side side) {
  const CoxeterGraph& g = w.graph();
  if (!g.valid(s) || !g.valid(t) || !g.bonded(s, t)) throw DomainError("coset decomposition needs a bonded pair");
  Trace cur = w.trace();
  Word letters;
  auto descents = [&](const Trace& x) { return side == Side::Left ? left_block(x) : right_block(x); };
  Block d = descents(cur);
  Generator next = contains(d, s) ? s : (contains(d, t) ? t : -1);
  while (next >= 0 && contains(descents(cur), next)) {
    letters.push_back(next);
    cur = side == Side::Left ? strip_left(cur, next) : strip_right(cur, next);
    next = next == s ? t : s;
  }
  if (side == Side::Right) std::reverse(letters.begin(), letters.end());
  return {std::move(letters), FcElement::unchecked(std::move(cur))};
}

// ---------------------------------------------------------------------------

Reducedness tits_is_reduced(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  Closure c = braid_closure(cartier_foata(g, w), cap);
  if (c.square) return Reducedness::NotReduced;
  if (c.capped) return Reducedness::Unknown;
  return Reducedness::Reduced;
}

GroupElement GroupElement::from_word(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  Closure c = braid_closure(cartier_foata(g, w), cap);
  if (c.square) throw DomainError("word is not reduced");
  if (c.capped) throw CapExceeded("reduced-expression closure exceeds the cap");
  GroupElement e;
  e.traces_ = std::move(c.traces);
  return e;
}

Block GroupElement::left_descents() const {
  Block out;
  for (const Trace& t : traces_) {
    Block b = left_block(t);
    out.insert(out.end(), b.begin(), b.end());
  }
  sort_unique(out);
  return out;
}

Block GroupElement::right_descents() const {
  Block out;
  for (const Trace& t : traces_) {
    Block b = right_block(t);
    out.insert(out.end(), b.begin(), b.end());
  }
  sort_unique(out);
  return out;
}

std::vector<GroupElement> enumerate_group(const CoxeterGraph& g, int max_len, std::size_t cap) {
  if (max_len < 0) throw DomainError("max_len must be non-negative");
  std::vector<GroupElement> all;
  std::unordered_map<Trace, std::size_t, TraceHash> index;
  GroupElement id;
  id.traces_ = {Trace(g)};
  index.emplace(Trace(g), 0);
  all.push_back(std::move(id));
  std::size_t lo = 0, hi = 1;
  for (int len = 1; len <= max_len && lo < hi; ++len) {
    std::vector<GroupElement> level;
    for (std::size_t i = lo; i < hi; ++i) {
      const Block r = all[i].right_descents();
      for (Generator s = 0; s < g.rank(); ++s) {
        if (contains(r, s)) continue;
        Trace t = append(all[i].canonical(), s);
        if (index.count(t)) continue;
        Closure c = braid_closure(t, cap);
        if (c.capped) throw CapExceeded("reduced-expression closure exceeds the cap");
        if (c.square) throw VerificationError("extension by a non-descent was not reduced");
        GroupElement e;
        e.traces_ = std::move(c.traces);
        for (const Trace& x : e.traces_) index.emplace(x, all.size() + level.size());
        level.push_back(std::move(e));
      }
    }
    std::sort(level.begin(), level.end());
    for (std::size_t k = 0; k < level.size(); ++k)
      for (const Trace& x : level[k].traces_) index[x] = hi + k;
    lo = hi;
    std::move(level.begin(), level.end(), std::back_inserter(all));
    hi = all.size();
  }
  return all;
}

bool is_complex_word(const CoxeterGraph& g, const Word& w) {
  if (tits_is_reduced(g, w) != Reducedness::Reduced) throw DomainError("word is not known to be reduced");
  return !is_reduced_fc(g, w);
}

bool is_weakly_complex(const GroupElement& w) {
  if (w.fully_commutative()) return false;
  for (Generator s : w.left_descents()) {
    for (const Trace& t : w.reduced_traces()) {
      if (!contains(left_block(t), s)) continue;
      if (is_reduced_fc(strip_left(t, s))) return true;
      break;
    }
  }
  return false;
}

bool is_weakly_complex(const CoxeterGraph& g, const Word& w) { return is_weakly_complex(GroupElement::from_word(g, w)); }

std::string shape_case_name(ShapeCase c) {
  switch (c) {
    case ShapeCase::CommutingProduct: return "i";
    case ShapeCase::BeginsST: return "ii";
    case ShapeCase::EndsTS: return "iii";
    case ShapeCase::BeginsSUT: return "iv";
  }
  return "?";
}

namespace {

std::optional<NormalShape> find_shape(const GroupElement& w) {
  const auto& traces = w.reduced_traces();
  const CoxeterGraph& g = traces.front().graph();
  if (traces.size() == 1 && traces.front().blocks().size() <= 1)
    return NormalShape{ShapeCase::CommutingProduct, traces.front().linearize()};

  for (const Trace& x : traces)
    for (Generator s : left_block(x)) {
      Trace rest = strip_left(x, s);
      for (Generator t : left_block(rest))
        if (g.bonded(s, t)) {
          Word word{s, t};
          Word tail = strip_left(rest, t).linearize();
          word.insert(word.end(), tail.begin(), tail.end());
          return NormalShape{ShapeCase::BeginsST, word};
        }
    }
  for (const Trace& x : traces)
    for (Generator s : right_block(x)) {
      Trace rest = strip_right(x, s);
      for (Generator t : right_block(rest))
        if (g.bonded(s, t)) {
          Word word = strip_right(rest, t).linearize();
          word.push_back(t);
          word.push_back(s);
          return NormalShape{ShapeCase::EndsTS, word};
        }
    }
  for (const Trace& x : traces)
    for (Generator s : left_block(x)) {
      Trace r1 = strip_left(x, s);
      for (Generator u : left_block(r1)) {
        if (!g.commute(s, u)) continue;
        Trace r2 = strip_left(r1, u);
        for (Generator t : left_block(r2))
          if (g.bonded(s, t) && g.bonded(t, u)) {
            Word word{s, u, t};
            Word tail = strip_left(r2, t).linearize();
            word.insert(word.end(), tail.begin(), tail.end());
            return NormalShape{ShapeCase::BeginsSUT, word};
          }
      }
    }
  return std::nullopt;
}

}  // namespace

NormalShape normal_shape_case(const GroupElement& w) {
  auto shape = find_shape(w);
  if (!shape) throw VerificationError("no normal shape applies");
  const Trace witness = cartier_foata(w.canonical().graph(), shape->witness);
  if (!std::binary_search(w.reduced_traces().begin(), w.reduced_traces().end(), witness))
    throw VerificationError("normal shape witness is not a reduced expression of the element");
  return *shape;
}

NormalShape normal_shape_case(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  return normal_shape_case(GroupElement::from_word(g, w, cap));
}

std::vector<InducedSubgraph> cf_block_subgraphs(const FcElement& w) {
  std::vector<InducedSubgraph> out;
  const auto& blocks = w.trace().blocks();
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    Block u = blocks[i];
    u.insert(u.end(), blocks[i + 1].begin(), blocks[i + 1].end());
    sort_unique(u);
    out.push_back(induced_subgraph(w.graph(), u));
  }
  return out;
}

}  // namespace coxstar
