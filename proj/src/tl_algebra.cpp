#include "coxstar/tl_algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "coxstar/errors.hpp"
#include "coxstar/star_ops.hpp"

namespace coxstar {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::B: return "b";
    case Basis::TTilde: return "ttilde";
    case Basis::C: return "c";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "b") return Basis::B;
  if (s == "ttilde") return Basis::TTilde;
  if (s == "c") return Basis::C;
  throw DomainError("unknown basis '" + s + "'");
}

// --- TlElement ---------------------------------------------------------------

TlElement TlElement::basis_element(const FcElement& w, Basis basis, const LaurentInt& coeff) {
  TlElement x(w.graph(), basis);
  x.add(w, coeff);
  return x;
}

LaurentInt TlElement::coefficient(const FcElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentInt{} : it->second;
}

void TlElement::add(const FcElement& w, const LaurentInt& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void TlElement::check_compatible(const TlElement& x) const {
  if (x.basis_ != basis_) throw DomainError("TL elements are written in different bases");
  if (!x.terms_.empty() && !terms_.empty() && x.graph_ != graph_)
    throw DomainError("TL elements live over different graphs");
}

void TlElement::add_scaled(const LaurentInt& a, const TlElement& x) {
  check_compatible(x);
  if (terms_.empty() && !x.terms_.empty()) graph_ = x.graph_;
  for (const auto& [w, c] : x.terms_) add(w, a * c);
}

TlElement operator*(const LaurentInt& a, const TlElement& x) {
  TlElement out(x.graph_, x.basis_);
  if (a.is_zero()) return out;
  for (const auto& [w, c] : x.terms_) out.terms_.emplace(w, a * c);
  return out;
}

std::string TlElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")" << basis_name(basis_) << "[";
    Word word = w.word();
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
    os << "]";
  }
  return os.str();
}

// --- Chebyshev ----------------------------------------------------------------

ChebyshevRelation chebyshev_relation(int m) {
  if (m < 3) throw DomainError("Chebyshev relation needs m >= 3");
  // polynomials as coefficient vectors
  std::vector<Integer> prev{1}, cur{0, 1};  // P_0, P_1
  for (int n = 2; n <= m - 1; ++n) {
    std::vector<Integer> next(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  ChebyshevRelation r;
  r.m = m;
  r.coefficients.assign(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t j = 0; j < cur.size(); ++j) r.coefficients[j + 1] = cur[j];
  return r;
}

// --- TlAlgebra ------------------------------------------------------------------

TlAlgebra::TlAlgebra(CoxeterGraph g) : graph_(std::move(g)) {
  star_reducible_ = classify_star_reducible(graph_).star_reducible;
}

TlElement TlAlgebra::one() const { return TlElement::basis_element(FcElement::identity(graph_), Basis::B); }

TlElement TlAlgebra::b_generator(Generator s) const {
  if (!graph_.valid(s)) throw DomainError("generator out of range");
  return b(FcElement::generator(graph_, s));
}

namespace {

struct Rewrite {
  LaurentInt coeff;
  Trace result;
};

std::vector<Rewrite> relation_at_square(const Heap& h, const SquareFactor& f) {
  return {{LaurentInt::delta(), h.replace_factor({f.first, f.second}, Word{f.letter})}};
}

std::vector<Rewrite> relation_at_braid(const Heap& h, const BraidFactor& f) {
  const int m = static_cast<int>(f.chain.size());
  const ChebyshevRelation rel = chebyshev_relation(m);
  std::vector<Rewrite> out;
  for (int j = 1; j < m; ++j) {
    const Integer& c = rel.coefficients[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    out.push_back({LaurentInt(Integer(-c)),
                   h.replace_factor(f.chain, alternating_word(f.first_letter, f.second_letter, j))});
  }
  return out;
}

std::vector<BraidFactor> finite_braids(const Heap& h) {
  std::vector<BraidFactor> out;
  for (const Edge& e : h.graph().bonds()) {
    if (e.label == kInfinity) continue;
    auto f = all_braid_factors(h, e.i, e.j, static_cast<int>(e.label));
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

}  // namespace

TlElement TlAlgebra::reduce_trace(const Trace& t) {
  {
    std::lock_guard lock(mutex_);
    auto it = reduce_memo_.find(t);
    if (it != reduce_memo_.end()) return it->second;
  }
  Heap h(t);
  std::vector<Rewrite> steps;
  if (auto sq = find_square_factor(h)) {
    steps = relation_at_square(h, *sq);
  } else {
    std::vector<BraidFactor> braids = finite_braids(h);
    if (braids.empty()) return b(FcElement::unchecked(t));
    auto leftmost = std::min_element(braids.begin(), braids.end(), [](const BraidFactor& a, const BraidFactor& b) {
      return a.chain.front() < b.chain.front();
    });
    steps = relation_at_braid(h, *leftmost);
  }
  TlElement out(graph_, Basis::B);
  for (const Rewrite& r : steps) out.add_scaled(r.coeff, reduce_trace(r.result));
  std::lock_guard lock(mutex_);
  reduce_memo_.emplace(t, out);
  return out;
}

TlElement TlAlgebra::reduce_b_monomial(const Word& w) { return reduce_trace(cartier_foata(graph_, w)); }

TlElement TlAlgebra::reduce_b_monomial_randomized(const Word& w, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  TlElement out(graph_, Basis::B);
  std::vector<std::pair<LaurentInt, Trace>> work{{LaurentInt(1), cartier_foata(graph_, w)}};
  while (!work.empty()) {
    auto [coeff, t] = std::move(work.back());
    work.pop_back();
    Heap h(t);
    std::vector<SquareFactor> squares = all_square_factors(h);
    std::vector<BraidFactor> braids = finite_braids(h);
    const std::size_t n = squares.size() + braids.size();
    if (n == 0) {
      out.add(FcElement::unchecked(std::move(t)), coeff);
      continue;
    }
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    auto steps = k < squares.size() ? relation_at_square(h, squares[k]) : relation_at_braid(h, braids[k - squares.size()]);
    for (Rewrite& r : steps) work.emplace_back(coeff * r.coeff, std::move(r.result));
  }
  return out;
}

TlElement TlAlgebra::to_b(const TlElement& x) {
  if (x.basis() == Basis::B) return x;
  TlElement out(graph_, Basis::B);
  for (const auto& [w, c] : x.terms()) out.add_scaled(c, x.basis() == Basis::TTilde ? ttilde_of(w) : c_of(w));
  return out;
}

TlElement TlAlgebra::multiply(const TlElement& x, const TlElement& y) {
  if (!x.is_zero() && x.graph() != graph_) throw DomainError("TL element over a different graph");
  if (!y.is_zero() && y.graph() != graph_) throw DomainError("TL element over a different graph");
  const TlElement bx = to_b(x), by = to_b(y);
  TlElement out(graph_, Basis::B);
  for (const auto& [u, a] : bx.terms())
    for (const auto& [w, c] : by.terms()) out.add_scaled(a * c, reduce_trace(trace_concat(u.trace(), w.trace())));
  return out;
}

TlElement TlAlgebra::ttilde_of(const FcElement& w) {
  {
    std::lock_guard lock(mutex_);
    auto it = ttilde_memo_.find(w.trace());
    if (it != ttilde_memo_.end()) return it->second;
  }
  TlElement out(graph_, Basis::B);
  if (w.length() == 0) {
    out = one();
  } else {
    const Generator s = left_descents(w).front();
    const FcElement rest = FcElement::unchecked(strip_left(w.trace(), s));
    const TlElement tail = ttilde_of(rest);
    out = multiply(b_generator(s), tail);
    out.add_scaled(LaurentInt::monomial(-1, -1), tail);
  }
  std::lock_guard lock(mutex_);
  ttilde_memo_.emplace(w.trace(), out);
  return out;
}

// Triangular solve: both t~_w and c_w are b_w plus shorter terms, so the
// longest support element can always be peeled off first.
TlElement TlAlgebra::peel(TlElement rest, Basis target) {
  TlElement out(graph_, target);
  while (!rest.is_zero()) {
    const auto& [w, a] = *rest.terms().rbegin();
    const FcElement key = w;
    const LaurentInt coeff = a;
    out.add(key, coeff);
    const TlElement column = target == Basis::TTilde ? ttilde_of(key) : c_of(key);
    rest.add_scaled(-coeff, column);
    if (!rest.coefficient(key).is_zero()) throw VerificationError("basis change is not unitriangular");
  }
  return out;
}

TlElement TlAlgebra::change_basis(const TlElement& x, Basis target) {
  if (x.basis() == target) return x;
  TlElement bx = to_b(x);
  if (target == Basis::B) return bx;
  return peel(std::move(bx), target);
}

TlElement TlAlgebra::bar_element(const TlElement& x) {
  if (x.basis() == Basis::TTilde) return change_basis(bar_element(to_b(x)), Basis::TTilde);
  // b_w and c_w are both bar invariant
  TlElement out(graph_, x.basis());
  for (const auto& [w, c] : x.terms()) out.add(w, c.bar());
  return out;
}

void TlAlgebra::verify_c(const FcElement& w, const TlElement& c) {
  if (bar_element(c) != c) throw VerificationError("c_w is not bar invariant");
  TlElement diff = c;
  diff.add_scaled(-1, ttilde_of(w));
  const TlElement coords = change_basis(diff, Basis::TTilde);
  for (const auto& [y, a] : coords.terms())
    if (!a.in_vinv_A_minus()) throw VerificationError("c_w - t~_w has a t~-coordinate outside v^-1 A^-");
}

TlElement TlAlgebra::compute_c(const FcElement& w) {
  if (is_commuting_product(w)) return b(w);
  for (const Edge& e : graph_.bonds()) {
    for (Side side : {Side::Left, Side::Right}) {
      auto u = star_down(w, e.i, e.j, side);
      if (!u) continue;
      const StringPosition p = string_position(w, e.i, e.j, side);
      const Generator outer = side == Side::Left ? p.alternating.front() : p.alternating.back();
      const TlElement cu = c_of(*u);
      TlElement out = side == Side::Left ? multiply(b_generator(outer), cu) : multiply(cu, b_generator(outer));
      if (auto u2 = star_down(*u, e.i, e.j, side)) out.add_scaled(-1, c_of(*u2));
      return out;
    }
  }
  throw VerificationError("no star reduction step for a fully commutative element that is not a commuting product");
}

TlElement TlAlgebra::c_of(const FcElement& w) {
  if (!star_reducible_) throw DomainError("the c-basis recursion needs a star reducible graph");
  {
    std::lock_guard lock(mutex_);
    auto it = c_memo_.find(w.trace());
    if (it != c_memo_.end()) return it->second;
  }
  TlElement out = compute_c(w);
  verify_c(w, out);
  std::lock_guard lock(mutex_);
  c_memo_.emplace(w.trace(), out);
  return out;
}

TlElement TlAlgebra::theta_ttilde_of_word(const Word& w) {
  check_word(graph_, w);
  if (tits_is_reduced(graph_, w) != Reducedness::Reduced) throw DomainError("word is not known to be reduced");
  TlElement out = one();
  for (Generator s : w) {
    TlElement factor = b_generator(s);
    factor.add(FcElement::identity(graph_), LaurentInt::monomial(-1, -1));
    out = multiply(out, factor);
  }
  return out;
}

bool TlAlgebra::lattice_with(const TlElement& x, const std::function<bool(const FcElement&)>& strong) {
  const TlElement coords = change_basis(x, Basis::TTilde);
  for (const auto& [w, a] : coords.terms())
    if (strong(w) ? !a.in_A_minus() : !a.in_vinv_A_minus()) return false;
  return true;
}

bool TlAlgebra::in_lattice(const TlElement& x) {
  return lattice_with(x, [](const FcElement&) { return true; });
}

bool TlAlgebra::in_vinv_lattice(const TlElement& x) {
  return lattice_with(x, [](const FcElement&) { return false; });
}

std::map<FcElement, Integer> TlAlgebra::pi_project(const TlElement& x) {
  const TlElement coords = change_basis(x, Basis::TTilde);
  std::map<FcElement, Integer> out;
  for (const auto& [w, a] : coords.terms()) {
    if (!a.in_A_minus()) throw DomainError("pi is only defined on the lattice");
    Integer c = a.coefficient(0);
    if (c != 0) out.emplace(w, std::move(c));
  }
  return out;
}

namespace {

bool has(const Block& b, Generator s) { return std::binary_search(b.begin(), b.end(), s); }

}  // namespace

bool TlAlgebra::in_L_left(const TlElement& x, Generator s) {
  return lattice_with(x, [s](const FcElement& w) { return has(left_descents(w), s); });
}

bool TlAlgebra::in_L_right(const TlElement& x, Generator s) {
  return lattice_with(x, [s](const FcElement& w) { return has(right_descents(w), s); });
}

bool TlAlgebra::in_L_left_st(const TlElement& x, Generator s, Generator t) {
  if (!graph_.bonded(s, t)) throw DomainError("the st-lattice needs a noncommuting pair");
  return lattice_with(x, [s, t](const FcElement& w) {
    return has(left_descents(w), s) && has(left_block(strip_left(w.trace(), s)), t);
  });
}

bool TlAlgebra::in_L_right_st(const TlElement& x, Generator s, Generator t) {
  if (!graph_.bonded(s, t)) throw DomainError("the st-lattice needs a noncommuting pair");
  return lattice_with(x, [s, t](const FcElement& w) {
    return has(right_descents(w), s) && has(right_block(strip_right(w.trace(), s)), t);
  });
}

Terms TlAlgebra::structure_constants(const FcElement& x, const FcElement& y) {
  return change_basis(multiply(c_of(x), c_of(y)), Basis::C).terms();
}

PositivityReport TlAlgebra::positivity_report(int max_len, int jobs) {
  if (!star_reducible_) throw DomainError("positivity needs a star reducible graph");
  return positivity_report(enumerate_fc(graph_, max_len, jobs), jobs);
}

PositivityReport TlAlgebra::positivity_report(const FcEnumeration& en, int jobs) {
  if (!star_reducible_) throw DomainError("positivity needs a star reducible graph");
  const std::vector<FcElement>& all = en.elements;
  PositivityReport rep;
  rep.elements = all.size();
  rep.exhaustive = en.exhaustive;
  // warm the c table stratum by stratum so workers mostly hit the memo
  for (const FcElement& w : all) c_of(w);

  const std::size_t n = all.size();
  std::vector<std::vector<StructureRow>> rows(n);
  std::vector<std::vector<PositivityViolation>> bad(n);
  std::vector<unsigned> top(n, 0);
  auto work = [&](std::size_t i) {
    for (const FcElement& y : all) {
      const FcElement& x = all[i];
      std::optional<unsigned> power;
      for (const auto& [w, f] : structure_constants(x, y)) {
        rows[i].push_back({x, y, w, f});
        auto d = delta_power_decompose(f);
        if (!d || d->multiple <= 0) {
          bad[i].push_back({x, y, w, f, "not a positive multiple of a power of delta"});
          continue;
        }
        top[i] = std::max(top[i], d->power);
        if (power && *power != d->power) bad[i].push_back({x, y, w, f, "powers of delta differ for one pair"});
        power = d->power;
      }
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < workers; ++k)
      threads.emplace_back([&, k] {
        for (std::size_t i = k; i < n; i += workers) work(i);
      });
    for (auto& th : threads) th.join();
  }
  rep.pairs = n * n;
  for (std::size_t i = 0; i < n; ++i) {
    rep.max_delta_power = std::max(rep.max_delta_power, top[i]);
    std::move(rows[i].begin(), rows[i].end(), std::back_inserter(rep.rows));
    std::move(bad[i].begin(), bad[i].end(), std::back_inserter(rep.violations));
  }
  return rep;
}

std::size_t TlAlgebra::ttilde_memo_size() const {
  std::lock_guard lock(mutex_);
  return ttilde_memo_.size();
}

std::size_t TlAlgebra::c_memo_size() const {
  std::lock_guard lock(mutex_);
  return c_memo_.size();
}

void TlAlgebra::seed_ttilde(const FcElement& w, const TlElement& b_coords) {
  std::lock_guard lock(mutex_);
  ttilde_memo_.emplace(w.trace(), b_coords);
}

void TlAlgebra::seed_c(const FcElement& w, const TlElement& b_coords, bool verify) {
  if (verify) verify_c(w, b_coords);
  std::lock_guard lock(mutex_);
  c_memo_.emplace(w.trace(), b_coords);
}

namespace {

std::vector<std::pair<FcElement, TlElement>> sorted_table(const std::unordered_map<Trace, TlElement, TraceHash>& m) {
  std::vector<std::pair<FcElement, TlElement>> out;
  out.reserve(m.size());
  for (const auto& [t, x] : m) out.emplace_back(FcElement::unchecked(t), x);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::vector<std::pair<FcElement, TlElement>> TlAlgebra::ttilde_table() const {
  std::lock_guard lock(mutex_);
  return sorted_table(ttilde_memo_);
}

std::vector<std::pair<FcElement, TlElement>> TlAlgebra::c_table() const {
  std::lock_guard lock(mutex_);
  return sorted_table(c_memo_);
}

}  // namespace coxstar
