#include "coxstar/counterexamples.hpp"

#include <algorithm>
#include <functional>

#include "coxstar/elements.hpp"
#include "coxstar/errors.hpp"
#include "coxstar/star_ops.hpp"

namespace coxstar {

namespace {

using Seq = std::vector<Generator>;

// Induced paths with n vertices, as vertex sequences (both directions). With
// `cycle` the last vertex must close up with the first instead.
std::vector<Seq> induced_paths(const CoxeterGraph& g, int n, bool cycle = false) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (Generator v : g.neighbours(cur.back())) {
      if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
      bool ok = true;
      const bool closing = cycle && static_cast<int>(cur.size()) + 1 == n;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        const bool want_bond = closing && i == 0;
        if (want_bond ? !g.bonded(cur[i], v) : !g.commute(cur[i], v)) ok = false;
      }
      if (!ok) continue;
      cur.push_back(v);
      grow();
      cur.pop_back();
    }
  };
  for (Generator v = 0; v < g.rank(); ++v) {
    cur = {v};
    grow();
  }
  std::sort(out.begin(), out.end());
  return out;
}

Label lab(const CoxeterGraph& g, const Seq& v, int i, int j) { return g.label(v[i - 1], v[j - 1]); }

// 1-based pattern letters to vertices.
Word instantiate(const Seq& v, std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(v[i - 1]);
  return w;
}

void push_range(Word& w, const Seq& v, int from, int to) {
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    w.push_back(v[i - 1]);
    if (i == to) break;
  }
}

struct Candidate {
  std::string shape;
  Seq vertices;
  Word word;
};

std::vector<Candidate> path_candidates(const CoxeterGraph& g, const Seq& v) {
  std::vector<Candidate> out;
  const int n = static_cast<int>(v.size());
  if (n == 3 && lab(g, v, 2, 3) >= 6) out.push_back({"path-label-6", v, instantiate(v, {1, 3, 2, 3, 2, 1, 3})});
  if (n == 4 && lab(g, v, 2, 3) == 5) out.push_back({"path-interior-5", v, instantiate(v, {1, 3, 2, 3, 2, 4})});
  if (n >= 3 && lab(g, v, 1, 2) == 5 && lab(g, v, n - 1, n) > 3) {
    Word w = instantiate(v, {1, 3, 2, 1});
    push_range(w, v, 2, n);
    push_range(w, v, n - 1, 2);
    for (int i : {1, 2, 1, 3}) w.push_back(v[i - 1]);
    out.push_back({"path-extremal-5", v, w});
  }
  if (n >= 4 && lab(g, v, 2, 3) == 4 && lab(g, v, n - 1, n) == 4) {
    Word w = instantiate(v, {1, 3, 2});
    push_range(w, v, 3, n);
    push_range(w, v, n - 1, 3);
    for (int i : {2, 1, 3}) w.push_back(v[i - 1]);
    out.push_back({"path-inner-4", v, w});
  }
  if (n >= 3 && n % 2 == 1 && lab(g, v, 1, 2) == 4 && lab(g, v, n - 1, n) == 4) {
    Word w;
    for (int rep = 0; rep < 3; ++rep)
      for (int i = (rep == 1 ? 2 : 1); i <= n; i += 2) w.push_back(v[i - 1]);
    out.push_back({"path-end-4s-odd", v, w});
  }
  if (n == 7 && lab(g, v, 3, 4) == 4)
    out.push_back({"path-7-single-4", v,
                   instantiate(v, {3, 5, 7, 4, 6, 3, 5, 2, 4, 1, 3, 2, 4, 3, 5, 4, 6, 3, 5, 7})});
  return out;
}

// Branch vertex with two leaves and an arm whose last bond exceeds 3.
std::vector<Candidate> fork_candidates(const CoxeterGraph& g, int n) {
  std::vector<Candidate> out;
  if (n < 4) return out;
  for (const Seq& arm : induced_paths(g, n - 2)) {
    const Generator b = arm.front();
    if (g.label(arm[arm.size() - 2], arm.back()) <= 3) continue;
    for (Generator x : g.neighbours(b))
      for (Generator y : g.neighbours(b)) {
        if (x >= y || !g.commute(x, y)) continue;
        bool ok = true;
        for (std::size_t i = 1; i < arm.size(); ++i)
          if (arm[i] == x || arm[i] == y || !g.commute(arm[i], x) || !g.commute(arm[i], y)) ok = false;
        if (!ok) continue;
        Seq v{x, y};
        v.insert(v.end(), arm.begin(), arm.end());
        Word w{x, y};
        push_range(w, v, 3, n);
        push_range(w, v, n - 1, 3);
        w.push_back(x);
        w.push_back(y);
        out.push_back({"fork-far-label", v, w});
      }
  }
  return out;
}

std::vector<Candidate> cycle_candidates(const CoxeterGraph& g, int k) {
  std::vector<Candidate> out;
  if (k < 5 || k % 2 == 0) return out;
  for (const Seq& v : induced_paths(g, k, true)) {
    if (g.label(v.back(), v.front()) <= 3) continue;
    Word w = instantiate(v, {2, k, 1, k});
    push_range(w, v, k - 1, 1);
    for (int i : {k, k - 1, 1}) w.push_back(v[i - 1]);
    out.push_back({"odd-cycle-label", v, w});
  }
  return out;
}

bool verified(const CoxeterGraph& g, const Word& w) {
  if (!is_reduced_fc(g, w)) return false;
  FcElement e = FcElement::from_word(g, w);
  return !is_commuting_product(e) && !star_reduce_path(e);
}

}  // namespace

const std::vector<std::string>& counterexample_shapes() {
  static const std::vector<std::string> names{"path-label-6",    "path-interior-5", "path-extremal-5", "path-inner-4",
                                              "path-end-4s-odd", "path-7-single-4", "fork-far-label",  "odd-cycle-label"};
  return names;
}

std::optional<Counterexample> find_counterexample(const CoxeterGraph& g) {
  if (classify_star_reducible(g).star_reducible) throw DomainError("graph is star reducible; no counterexample exists");
  for (int n = 3; n <= g.rank(); ++n) {
    std::vector<Candidate> all;
    for (const Seq& v : induced_paths(g, n)) {
      auto c = path_candidates(g, v);
      all.insert(all.end(), c.begin(), c.end());
    }
    for (auto* gen : {&fork_candidates, &cycle_candidates}) {
      auto c = (*gen)(g, n);
      all.insert(all.end(), c.begin(), c.end());
    }
    for (Candidate& c : all)
      if (verified(g, c.word)) return Counterexample{c.shape, c.vertices, c.word};
  }
  return std::nullopt;
}

std::optional<Word> counterexample_word(const CoxeterGraph& g) {
  auto c = find_counterexample(g);
  if (!c) return std::nullopt;
  return c->word;
}

}  // namespace coxstar
