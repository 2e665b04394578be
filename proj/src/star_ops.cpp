#include "coxstar/star_ops.hpp"

#include <thread>

#include "coxstar/errors.hpp"

namespace coxstar {

std::optional<Generator> StringPosition::first_letter() const {
  if (alternating.empty()) return std::nullopt;
  return alternating.front();
}

std::optional<Generator> StringPosition::last_letter() const {
  if (alternating.empty()) return std::nullopt;
  return alternating.back();
}

StringPosition string_position(const FcElement& w, Generator s, Generator t, Side side) {
  CosetDecomposition d = coset_decompose(w, s, t, side);
  StringPosition p;
  p.s = s;
  p.t = t;
  p.side = side;
  p.m = w.graph().label(s, t);
  p.k = d.alternating.size();
  p.alternating = std::move(d.alternating);
  p.rest = std::move(d.rest);
  return p;
}

namespace {

FcElement checked(Trace t) {
  if (!is_reduced_fc(t)) throw VerificationError("star operation left the fully commutative elements");
  return FcElement::unchecked(std::move(t));
}

}  // namespace

std::optional<FcElement> star_up(const FcElement& w, Generator s, Generator t, Side side) {
  const StringPosition p = string_position(w, s, t, side);
  if (p.k < 1) return std::nullopt;
  if (p.m != kInfinity && p.k + 2 > p.m) return std::nullopt;
  if (side == Side::Left) {
    const Generator outer = *p.first_letter() == s ? t : s;
    return checked(prepend(outer, w.trace()));
  }
  const Generator outer = *p.last_letter() == s ? t : s;
  return checked(append(w.trace(), outer));
}

std::optional<FcElement> star_down(const FcElement& w, Generator s, Generator t, Side side) {
  const StringPosition p = string_position(w, s, t, side);
  if (p.k < 2) return std::nullopt;
  if (p.m != kInfinity && p.k + 1 > p.m) return std::nullopt;
  if (side == Side::Left) return FcElement::unchecked(strip_left(w.trace(), *p.first_letter()));
  return FcElement::unchecked(strip_right(w.trace(), *p.last_letter()));
}

bool is_commuting_product(const FcElement& w) { return w.trace().blocks().size() <= 1; }

std::optional<StarReducer::Entry> StarReducer::lookup(const Trace& t) const {
  std::lock_guard lock(mutex_);
  auto it = memo_.find(t);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

std::size_t StarReducer::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

bool StarReducer::solve(const FcElement& w) {
  if (auto hit = lookup(w.trace())) return hit->ok;
  Entry entry;
  if (is_commuting_product(w)) {
    entry.ok = true;
  } else {
    for (const Edge& e : w.graph().bonds()) {
      for (Side side : {Side::Left, Side::Right}) {
        auto down = star_down(w, e.i, e.j, side);
        if (!down || !solve(*down)) continue;
        entry.ok = true;
        entry.next = StarStep{e.i, e.j, side, std::move(*down)};
        break;
      }
      if (entry.ok) break;
    }
  }
  std::lock_guard lock(mutex_);
  // Another thread may have got here first with the same verdict.
  memo_.emplace(w.trace(), entry);
  return entry.ok;
}

std::optional<StarPath> StarReducer::path(const FcElement& w) {
  if (!solve(w)) return std::nullopt;
  StarPath out;
  Trace cur = w.trace();
  for (;;) {
    auto entry = lookup(cur);
    if (!entry || !entry->ok) throw VerificationError("star reducer memo lost an entry");
    if (!entry->next) break;
    out.push_back(*entry->next);
    cur = entry->next->result.trace();
  }
  return out;
}

std::optional<StarPath> star_reduce_path(const FcElement& w) {
  StarReducer r;
  return r.path(w);
}

AuditResult audit_graph(const CoxeterGraph& g, int max_len, int jobs) {
  FcEnumeration en = enumerate_fc(g, max_len, jobs);
  AuditResult out;
  out.exhaustive = en.exhaustive;
  out.checked = en.elements.size();
  StarReducer reducer;
  const std::size_t n = en.elements.size();
  std::vector<char> bad(n, 0);
  const std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) bad[i] = !reducer.reducible(en.elements[i]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < workers; ++k)
      threads.emplace_back([&, k] {
        for (std::size_t i = k; i < n; i += workers) bad[i] = !reducer.reducible(en.elements[i]);
      });
    for (auto& th : threads) th.join();
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bad[i]) out.witnesses.push_back(en.elements[i]);
  return out;
}

}  // namespace coxstar
