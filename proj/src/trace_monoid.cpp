#include "coxstar/trace_monoid.hpp"

#include <algorithm>
#include <deque>

#include "coxstar/errors.hpp"

namespace coxstar {

std::size_t TraceHash::operator()(const Trace& t) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const Block& b : t.blocks()) {
    for (Generator s : b) h = (h ^ static_cast<std::size_t>(s + 1)) * 0x100000001b3ULL;
    h = (h ^ 0xffULL) * 0x100000001b3ULL;
  }
  return h;
}

void check_word(const CoxeterGraph& g, const Word& w) {
  for (Generator s : w) {
    if (!g.valid(s)) throw DomainError("generator " + std::to_string(s) + " out of range for rank " + std::to_string(g.rank()));
  }
}

Word Trace::linearize() const {
  Word out;
  out.reserve(length_);
  for (const Block& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Trace Trace::from_blocks(const CoxeterGraph& graph, std::vector<Block> blocks) {
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const Block& b = blocks[j];
    if (b.empty()) throw DomainError("empty block in trace");
    check_word(graph, b);
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end()) {
      throw DomainError("trace block not sorted and duplicate free");
    }
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = x + 1; y < b.size(); ++y) {
        if (!graph.commute(b[x], b[y])) throw DomainError("trace block contains non-commuting generators");
      }
    }
    if (j == 0) continue;
    for (Generator t : b) {
      const Block& prev = blocks[j - 1];
      bool blocked = std::any_of(prev.begin(), prev.end(), [&](Generator s) { return !graph.commute(s, t); });
      if (!blocked) throw DomainError("trace blocks violate the Cartier-Foata condition");
    }
  }
  Trace t(graph);
  for (const Block& b : blocks) t.length_ += b.size();
  t.blocks_ = std::move(blocks);
  return t;
}

Trace cartier_foata(const CoxeterGraph& g, const Word& w) {
  check_word(g, w);
  // The level of an occurrence is one more than the highest level among the
  // earlier occurrences it cannot be commuted past; level 0 letters are
  // exactly the possible first letters, and so on recursively.
  std::vector<int> last_level(static_cast<std::size_t>(g.rank()), -1);
  std::vector<int> level(w.size());
  int top = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Generator s = w[i];
    int lv = last_level[static_cast<std::size_t>(s)];
    for (Generator t : g.neighbours(s)) lv = std::max(lv, last_level[static_cast<std::size_t>(t)]);
    level[i] = lv + 1;
    last_level[static_cast<std::size_t>(s)] = level[i];
    top = std::max(top, level[i]);
  }
  Trace t(g);
  t.blocks_.assign(static_cast<std::size_t>(top + 1), {});
  for (std::size_t i = 0; i < w.size(); ++i) t.blocks_[static_cast<std::size_t>(level[i])].push_back(w[i]);
  for (Block& b : t.blocks_) std::sort(b.begin(), b.end());
  t.length_ = w.size();
  return t;
}

Trace trace_concat(const Trace& a, const Trace& b) {
  if (a.graph() != b.graph()) throw DomainError("trace_concat: traces over different graphs");
  Word w = a.linearize();
  Word tail = b.linearize();
  w.insert(w.end(), tail.begin(), tail.end());
  return cartier_foata(a.graph(), w);
}

Trace reversed(const Trace& t) {
  Word w = t.linearize();
  std::reverse(w.begin(), w.end());
  return cartier_foata(t.graph(), w);
}

Block left_block(const Trace& t) { return t.empty() ? Block{} : t.blocks().front(); }

Block right_block(const Trace& t) { return left_block(reversed(t)); }

Trace strip_left(const Trace& t, Generator s) {
  const Block first = left_block(t);
  if (!std::binary_search(first.begin(), first.end(), s)) {
    throw DomainError("strip_left: generator " + std::to_string(s) + " is not a possible first letter");
  }
  Word w = t.linearize();
  w.erase(std::find(w.begin(), w.end(), s));
  return cartier_foata(t.graph(), w);
}

Trace strip_right(const Trace& t, Generator s) {
  Word w = t.linearize();
  auto it = std::find(w.rbegin(), w.rend(), s);
  if (it == w.rend()) throw DomainError("strip_right: generator " + std::to_string(s) + " does not occur");
  // The last occurrence of s must sit above nothing that fails to commute with it.
  for (auto later = w.rbegin(); later != it; ++later) {
    if (!t.graph().commute(*later, s)) {
      throw DomainError("strip_right: generator " + std::to_string(s) + " is not a possible last letter");
    }
  }
  w.erase(std::next(it).base());
  return cartier_foata(t.graph(), w);
}

Trace prepend(Generator s, const Trace& t) {
  Word w = t.linearize();
  w.insert(w.begin(), s);
  return cartier_foata(t.graph(), w);
}

Trace append(const Trace& t, Generator s) {
  Word w = t.linearize();
  w.push_back(s);
  return cartier_foata(t.graph(), w);
}

// ---------------------------------------------------------------------------

Heap::Heap(const CoxeterGraph& g, Word letters) : graph_(g), letters_(std::move(letters)) {
  check_word(g, letters_);
  const std::size_t n = letters_.size();
  below_.assign(n, boost::dynamic_bitset<>(n));
  above_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (below_[j].test(i)) continue;
      if (!g.commute(letters_[i], letters_[j])) {
        below_[j] |= below_[i];
        below_[j].set(i);
      }
    }
    for (std::size_t i = below_[j].find_first(); i != boost::dynamic_bitset<>::npos; i = below_[j].find_next(i)) {
      above_[i].set(j);
    }
  }
}

bool Heap::convex(const std::vector<std::size_t>& chain) const {
  if (chain.size() < 2) return true;
  boost::dynamic_bitset<> between = above_[chain.front()] & below_[chain.back()];
  for (std::size_t c : chain) {
    if (c < between.size()) between.reset(c);
  }
  return between.none();
}

std::pair<Word, std::size_t> Heap::linearize_with_factor(const std::vector<std::size_t>& chain) const {
  const std::size_t n = letters_.size();
  boost::dynamic_bitset<> in_chain(n), down(n);
  for (std::size_t c : chain) {
    in_chain.set(c);
    down |= below_[c];
  }
  down -= in_chain;
  Word out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (down.test(i)) out.push_back(letters_[i]);
  }
  const std::size_t start = out.size();
  for (std::size_t c : chain) out.push_back(letters_[c]);
  for (std::size_t i = 0; i < n; ++i) {
    if (!down.test(i) && !in_chain.test(i)) out.push_back(letters_[i]);
  }
  return {out, start};
}

Trace Heap::replace_factor(const std::vector<std::size_t>& chain, const Word& replacement) const {
  auto [w, start] = linearize_with_factor(chain);
  Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(start + chain.size()), w.end());
  return cartier_foata(graph_, out);
}

std::vector<std::size_t> Heap::occurrences(Generator a, Generator b) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == a || letters_[i] == b) out.push_back(i);
  }
  return out;
}

std::vector<SquareFactor> all_square_factors(const Heap& heap) {
  std::vector<SquareFactor> out;
  const Word& w = heap.letters();
  std::vector<std::ptrdiff_t> last(static_cast<std::size_t>(heap.graph().rank()), -1);
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto s = static_cast<std::size_t>(w[j]);
    if (last[s] >= 0) {
      const auto i = static_cast<std::size_t>(last[s]);
      if (heap.convex({i, j})) out.push_back({w[j], i, j});
    }
    last[s] = static_cast<std::ptrdiff_t>(j);
  }
  std::sort(out.begin(), out.end(), [](const SquareFactor& a, const SquareFactor& b) { return a.first < b.first; });
  return out;
}

std::optional<SquareFactor> find_square_factor(const Heap& heap) {
  auto all = all_square_factors(heap);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<SquareFactor> find_square_factor(const Trace& t) { return find_square_factor(Heap(t)); }

std::vector<BraidFactor> all_braid_factors(const Heap& heap, Generator s, Generator u, int len) {
  const CoxeterGraph& g = heap.graph();
  if (!g.valid(s) || !g.valid(u) || !g.bonded(s, u)) {
    throw DomainError("braid factor requested for a commuting or invalid pair");
  }
  if (len < 3) throw DomainError("braid factor length must be at least 3");
  std::vector<BraidFactor> out;
  const auto occ = heap.occurrences(s, u);
  const Word& w = heap.letters();
  const auto L = static_cast<std::size_t>(len);
  if (occ.size() < L) return out;
  // Length of the alternating run ending at each occurrence.
  std::vector<std::size_t> run(occ.size(), 1);
  for (std::size_t k = 1; k < occ.size(); ++k) {
    if (w[occ[k]] != w[occ[k - 1]]) run[k] = run[k - 1] + 1;
  }
  for (std::size_t end = L - 1; end < occ.size(); ++end) {
    if (run[end] < L) continue;
    std::vector<std::size_t> chain(occ.begin() + static_cast<std::ptrdiff_t>(end + 1 - L),
                                   occ.begin() + static_cast<std::ptrdiff_t>(end + 1));
    if (!heap.convex(chain)) continue;
    const Generator first = w[chain.front()];
    out.push_back({first, first == s ? u : s, std::move(chain)});
  }
  return out;
}

std::optional<BraidFactor> find_braid_factor(const Heap& heap, Generator s, Generator u, int len) {
  auto all = all_braid_factors(heap, s, u, len);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<BraidFactor> find_braid_factor(const Trace& t, Generator s, Generator u, int len) {
  return find_braid_factor(Heap(t), s, u, len);
}

Word alternating_word(Generator first, Generator second, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? first : second);
  return w;
}

std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w, std::size_t cap) {
  check_word(g, w);
  std::set<Word> seen = {w};
  std::deque<Word> queue = {w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!g.commute(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw CapExceeded("commutation class exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace coxstar
