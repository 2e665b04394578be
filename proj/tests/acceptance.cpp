// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "coxstar/counterexamples.hpp"
#include "coxstar/h_invariant.hpp"
#include "coxstar/star_ops.hpp"
#include "coxstar/tl_algebra.hpp"
#include "oracles.hpp"

using namespace coxstar;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note << "first failure: " << what;
    ok = false;
  }
};

FcElement fc(const CoxeterGraph& g, const Word& w) { return FcElement::from_word(g, w); }
LaurentInt V(int e, long long c = 1) { return LaurentInt::monomial(e, c); }
bool has(const Block& b, Generator s) { return std::binary_search(b.begin(), b.end(), s); }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::string show(const Word& w) {
  std::string s;
  for (Generator g : w) s += (s.empty() ? "" : " ") + std::to_string(g);
  return s.empty() ? "e" : s;
}

void ac1(Outcome& o) {
  const CoxeterGraph g = family_graph("B2");
  const FcElement w = fc(g, {1, 0});
  o.require(star_down(w, 0, 1, Side::Left) == fc(g, {0}), "_*w = s");
  o.require(star_up(w, 0, 1, Side::Left) == fc(g, {0, 1, 0}), "^*w = sts");
  o.require(star_down(w, 0, 1, Side::Right) == fc(g, {1}), "w_* = t");
  o.require(star_up(w, 0, 1, Side::Right) == fc(g, {1, 0, 1}), "w^* = tst");
  const FcElement x = fc(g, {0, 1, 0});
  o.require(!star_up(x, 0, 1, Side::Left) && !star_up(x, 0, 1, Side::Right), "sts has no upward move");
  const FcElement t = fc(g, {1});
  o.require(!star_down(t, 0, 1, Side::Left) && !star_down(t, 0, 1, Side::Right), "t has no downward move");
}

void ac2(Outcome& o) {
  const CoxeterGraph g = family_graph("B3");
  o.require(g.label(0, 1) == 4 && g.label(1, 2) == 3, "B3 labels");
  const FcElement y = fc(g, {0, 1, 0, 2});
  o.require(!has(left_descents(y), 2), "s3 y > y");
  oracle::Reflection r(g);
  o.require(r.length(concat({2}, y.word())) == 5, "s3 y > y by the reflection representation");
  TlAlgebra alg(g);
  o.require(alg.reduce_b_monomial({2, 0, 1, 0, 2}) == LaurentInt::delta() * alg.b(fc(g, {0, 2})), "b_s3 b_y = delta b_z");
}

void ac3(Outcome& o) {
  for (int m = 3; m <= 6; ++m) {
    const CoxeterGraph g = family_graph("I2(" + std::to_string(m) + ")");
    TlAlgebra alg(g);
    auto b = [&](std::initializer_list<Generator> w) { return alg.b(fc(g, w)); };
    TlElement expected;
    switch (m) {
      case 3: expected = b({0}); break;
      case 4: expected = LaurentInt(2) * b({0, 1}); break;
      case 5: expected = LaurentInt(3) * b({0, 1, 0}) - b({0}); break;
      default: expected = LaurentInt(4) * b({0, 1, 0, 1}) - LaurentInt(3) * b({0, 1}); break;
    }
    o.require(alg.reduce_b_monomial(alternating_word(0, 1, m)) == expected, "alternating monomial, m = " + std::to_string(m));
  }
}

void ac4(Outcome& o) {
  for (auto [name, fc_count, order] : {std::tuple{"B2", 7, 8}, std::tuple{"A3", 14, 24}}) {
    const CoxeterGraph g = family_graph(name);
    const auto en = enumerate_fc(g, 10);
    const auto group = enumerate_group(g, 30);
    std::set<Trace> from_group, from_enum;
    for (const GroupElement& x : group)
      if (x.fully_commutative()) from_group.insert(x.canonical());
    for (const FcElement& w : en.elements) from_enum.insert(w.trace());
    o.require(en.exhaustive, std::string(name) + " enumeration exhaustive");
    o.require(static_cast<int>(en.elements.size()) == fc_count, std::string(name) + " |W_c|");
    o.require(static_cast<int>(group.size()) == order, std::string(name) + " group order");
    o.require(from_group == from_enum, std::string(name) + " FC elements agree with the group enumeration");
    o.require(oracle::Reflection(g).count_up_to(30) == static_cast<std::size_t>(order), std::string(name) + " reflection order");
  }
  o.note << "|W_c(B2)| = 7, |W_c(A3)| = 14";
}

std::vector<std::pair<std::string, CoxeterGraph>> excluded_shapes() {
  return {
      {"path-label-6", graph_from_edges(3, {{0, 1, 3}, {1, 2, 6}})},
      {"path-interior-5", graph_from_edges(4, {{0, 1, 3}, {1, 2, 5}, {2, 3, 3}})},
      {"path-extremal-5", graph_from_edges(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 4}})},
      {"path-inner-4", graph_from_edges(5, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}, {3, 4, 4}})},
      {"path-end-4s-odd", graph_from_edges(3, {{0, 1, 4}, {1, 2, 4}})},
      {"path-7-single-4", graph_from_edges(7, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}, {4, 5, 3}, {5, 6, 3}})},
      {"fork-far-label", graph_from_edges(4, {{0, 2, 3}, {1, 2, 3}, {2, 3, 4}})},
      {"odd-cycle-label", graph_from_edges(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 0, 4}})},
  };
}

void ac5(Outcome& o) {
  std::size_t checked = 0;
  for (const char* name : {"A4", "B3", "D4", "E6", "F4", "H3", "I2(5)", "Atilde4", "Ctilde3", "Ftilde5", "K3(3,4,5)"}) {
    const CoxeterGraph g = family_graph(name);
    o.require(classify_star_reducible(g).star_reducible, std::string(name) + " classified star reducible");
    const auto a = audit_graph(g, 12, 4);
    checked += a.checked;
    o.require(a.witnesses.empty(), std::string(name) + " has audit witnesses");
  }
  for (const auto& [shape, g] : excluded_shapes()) {
    o.require(!classify_star_reducible(g).star_reducible, shape + " classified not star reducible");
    const auto c = find_counterexample(g);
    if (!c) {
      o.require(false, shape + " has no counterexample");
      continue;
    }
    o.require(c->shape == shape, shape + " matched as " + c->shape);
    o.require(tits_is_reduced(g, c->word) == Reducedness::Reduced && is_reduced_fc(g, c->word), shape + " word reduced FC");
    const FcElement w = fc(g, c->word);
    o.require(!is_commuting_product(w), shape + " word is a commuting product");
    o.require(!star_reduce_path(w), shape + " word is star reducible");
  }
  o.note << checked << " elements audited, 8 shapes verified";
}

void ac6(Outcome& o) {
  std::size_t count = 0;
  for (const char* name : {"B3", "H3", "Ctilde3", "Ftilde5"}) {
    const CoxeterGraph g = family_graph(name);
    TlAlgebra alg(g);
    for (const FcElement& w : enumerate_fc(g, 8).elements) {
      ++count;
      const TlElement c = alg.c_of(w);  // throws if the defining property fails
      o.require(alg.bar_element(c) == c, "bar invariance");
      const TlElement diff = alg.change_basis(c - alg.ttilde_of(w), Basis::TTilde);
      for (const auto& [y, a] : diff.terms())
        o.require(a.in_vinv_A_minus(), "c_w - t~_w outside v^-1 L");
      for (const auto& [y, a] : c.terms()) {
        o.require(a.terms().size() == 1 && a.min_exponent() == 0, "integer b-coordinates");
        o.require(y == w || y.length() < w.length(), "unitriangular");
      }
      o.require(c.coefficient(w) == 1, "leading coefficient");
    }
  }
  const CoxeterGraph b2 = family_graph("B2");
  TlAlgebra alg(b2);
  o.require(alg.c_of(fc(b2, {0, 1, 0})) == alg.b(fc(b2, {0, 1, 0})) - alg.b(fc(b2, {0})), "c_sts = b_sts - b_s");
  o.note << count << " elements";
}

void ac7(Outcome& o) {
  for (const char* name : {"B2", "I2(5)", "A3", "B3"}) {
    TlAlgebra alg(family_graph(name));
    const auto en = enumerate_fc(alg.graph(), 64);
    const PositivityReport r = alg.positivity_report(en, 4);
    o.require(r.exhaustive && r.pairs == en.elements.size() * en.elements.size(), std::string(name) + " full table");
    o.require(r.violations.empty(), std::string(name) + " violations");
    std::map<std::pair<FcElement, FcElement>, std::set<unsigned>> powers;
    for (const StructureRow& row : r.rows) {
      const auto d = delta_power_decompose(row.coeff);
      o.require(d && d->multiple > 0, std::string(name) + " coefficient not a positive multiple of a delta power");
      if (d) powers[{row.x, row.y}].insert(d->power);
    }
    for (const auto& [pair, ks] : powers) o.require(ks.size() == 1, std::string(name) + " mixed delta powers");
    o.note << name << ": " << r.pairs << " pairs, " << r.rows.size() << " nonzero; ";
  }
}

void ac8(Outcome& o) {
  for (const char* name : {"Ctilde3", "Ftilde5"}) {
    const CoxeterGraph g = family_graph(name);
    TlAlgebra alg(g);
    std::size_t elements = 0, weak = 0;
    for (const GroupElement& x : enumerate_group(g, 8)) {
      ++elements;
      const TlElement t = alg.theta_ttilde_of_word(x.word());
      o.require(alg.in_lattice(t), std::string(name) + " image outside L: " + show(x.word()));
      if (!x.fully_commutative() && is_weakly_complex(x)) {
        ++weak;
        o.require(alg.in_vinv_lattice(t), std::string(name) + " weakly complex image outside v^-1 L: " + show(x.word()));
      }
    }
    o.note << name << ": " << elements << " elements, " << weak << " weakly complex; ";
  }
}

void ac9(Outcome& o) {
  for (const char* name : {"Ctilde3", "Etilde6"}) {
    const CoxeterGraph g = family_graph(name);
    std::size_t elements = 0;
    std::map<std::string, std::size_t> tally;
    for (const GroupElement& x : enumerate_group(g, 8)) {
      ++elements;
      const NormalShape s = normal_shape_case(x);
      ++tally[shape_case_name(s.which)];
      const auto& traces = x.reduced_traces();
      o.require(std::binary_search(traces.begin(), traces.end(), cartier_foata(g, s.witness)), "witness is not a reduced expression");
    }
    o.note << name << ": " << elements << " elements (";
    for (const auto& [k, n] : tally) o.note << k << ":" << n << " ";
    o.note << "); ";
  }
}

void ac10(Outcome& o) {
  std::mt19937 rng(2024);
  auto h = [](const CoxeterGraph& g, const Word& w, std::uint64_t seed = 0) { return h_value(g, w, seed).h; };
  for (const char* name : {"Ftilde5", "Ctilde3"}) {
    const CoxeterGraph g = family_graph(name);
    TlAlgebra alg(g);
    for (int trial = 0; trial < 200; ++trial) {
      Word w;
      for (int i = 0, len = static_cast<int>(rng() % 13); i < len; ++i)
        w.push_back(static_cast<Generator>(rng() % static_cast<unsigned>(g.rank())));
      const unsigned hw = h(g, w);
      for (std::uint64_t seed = 1; seed < 20; ++seed) o.require(h(g, w, seed) == hw, "strategy dependence: " + show(w));

      const Edge& e = g.bonds()[rng() % g.bonds().size()];
      const Generator s = rng() % 2 ? e.i : e.j, t = s == e.i ? e.j : e.i;
      o.require(h(g, concat({s, t}, w)) == h(g, concat({t}, w)), "h(st u) = h(t u): " + show(w));
      o.require(h(g, concat(w, {t, s})) == h(g, concat(w, {t})), "h(u ts) = h(u t): " + show(w));
      const Generator a = static_cast<Generator>(rng() % static_cast<unsigned>(g.rank()));
      o.require(h(g, concat({a, a}, w)) == h(g, concat({a}, w)) + 1, "h(ss u) = h(s u) + 1: " + show(w));
      if (!w.empty()) {
        Word shorter = w;
        shorter.erase(shorter.begin() + static_cast<long>(rng() % w.size()));
        const int d = static_cast<int>(hw) - static_cast<int>(h(g, shorter));
        o.require(d >= -1 && d <= 1, "deletion bound: " + show(w));
      }
      const TlElement reduced = alg.reduce_b_monomial(w);
      for (const auto& [y, c] : reduced.terms()) {
        LaurentInt q = c;
        for (unsigned k = 0; k < hw; ++k) {
          auto next = divide_by_delta(q);
          if (!next) {
            o.require(false, "coefficient not divisible by delta^h: " + show(w));
            break;
          }
          q = *next;
        }
      }
    }
  }
  o.note << "400 words";
}

// Random elements and the lattice properties of TL(X).
void ac11(Outcome& o) {
  std::mt19937 rng(77);
  auto laurent = [&](int lo, int hi) {
    LaurentInt a;
    for (int e = lo; e <= hi; ++e) a += V(e, static_cast<long long>(rng() % 5) - 2);
    return a;
  };
  std::map<std::string, std::size_t> violations;
  std::map<std::string, std::string> example;
  auto check = [&](bool cond, const std::string& property, const std::string& detail) {
    if (cond) return;
    if (violations[property]++ == 0) example[property] = detail;
  };
  for (const char* name : {"B3", "Ctilde3"}) {
    const CoxeterGraph g = family_graph(name);
    TlAlgebra alg(g);
    const auto elems = enumerate_fc(g, 5).elements;
    auto pick = [&] { return elems[rng() % elems.size()]; };
    std::vector<std::pair<Generator, Generator>> pairs;
    for (const Edge& e : g.bonds()) pairs.insert(pairs.end(), {{e.i, e.j}, {e.j, e.i}});

    for (const FcElement& w : elems)
      for (Generator s = 0; s < g.rank(); ++s) {
        const TlElement p = alg.multiply(alg.ttilde_of(fc(g, {s})), alg.ttilde_of(w));
        check(alg.in_L_left(has(left_descents(w), s) ? V(-1) * p : p, s), "t~_s t~_w by descent", name);
      }

    // basis vectors of L^t first, so that any failure is reported in its
    // smallest form
    for (const auto& [a, b] : pairs)
      for (const FcElement& y : elems) {
        const TlElement x = has(left_descents(y), b) ? alg.ttilde_of(y) : V(-1) * alg.ttilde_of(y);
        check(alg.in_L_left_st(alg.multiply(alg.ttilde_of(fc(g, {a})), x), a, b), "t~_s L^t in L^st",
              std::string(name) + ", s = " + std::to_string(a) + ", t = " + std::to_string(b) + ", x = " +
                  alg.change_basis(x, Basis::TTilde).to_string());
      }

    for (int trial = 0; trial < 500; ++trial) {
      const Generator s = static_cast<Generator>(rng() % static_cast<unsigned>(g.rank()));
      // eigenspace of b_s
      TlElement x(g, Basis::B);
      const bool inside = rng() % 2;
      for (int i = 0; i < 3; ++i) {
        FcElement y = pick();
        while (!has(left_descents(y), s)) y = pick();
        x.add(y, laurent(-1, 1));
      }
      if (!inside) {
        FcElement y = pick();
        while (has(left_descents(y), s)) y = pick();
        x.add(y, laurent(0, 0) + 1 + V(5));
      }
      if (!x.is_zero())
        check((alg.multiply(alg.b_generator(s), x) == LaurentInt::delta() * x) == inside, "b_s eigenspace", name);

      // L^s in b coordinates
      TlElement z(g, Basis::B);
      bool expected = true;
      for (int i = 0; i < 4; ++i) {
        const FcElement y = pick();
        z.add(y, laurent(-2, 1));
      }
      for (const auto& [y, a] : z.terms()) expected = expected && (has(left_descents(y), s) ? a.in_A_minus() : a.in_vinv_A_minus());
      check(alg.in_L_left(z, s) == expected, "L^s in b coordinates", name);

      // t~_s L cap L inside L^s
      TlElement l(g, Basis::B);
      for (int i = 0; i < 3; ++i) l.add(pick(), laurent(-2, 0));
      const TlElement tl = alg.multiply(alg.ttilde_of(fc(g, {s})), l);
      if (alg.in_lattice(tl)) check(alg.in_L_left(tl, s), "t~_s L cap L in L^s", name);

      const auto [a, b] = pairs[rng() % pairs.size()];  // noncommuting s', t'
      // b_s' L^t' and t~_s' L^t'
      TlElement lt(g, Basis::B);
      for (int i = 0; i < 4; ++i) {
        const FcElement y = pick();
        lt.add(y, laurent(-2, 0).shifted(has(left_descents(y), b) ? 0 : -1));
      }
      check(alg.in_L_left(alg.multiply(alg.b_generator(a), lt), a), "b_s L^t in L^s", name);
      const TlElement st = alg.multiply(alg.ttilde_of(fc(g, {a})), lt);
      check(alg.in_L_left_st(st, a, b), "t~_s L^t in L^st", name);

      // t~_u L^st for u bonded to t, u != s
      TlElement ls(g, Basis::TTilde);
      for (int i = 0; i < 4; ++i) {
        const FcElement y = pick();
        const bool strong = has(left_descents(y), a) && has(left_block(strip_left(y.trace(), a)), b);
        ls.add(y, laurent(-2, 0).shifted(strong ? 0 : -1));
      }
      for (Generator u : g.neighbours(b))
        if (u != a) check(alg.in_L_left(alg.multiply(alg.ttilde_of(fc(g, {u})), ls), u), "t~_u L^st in L^u", name);
    }
  }
  for (const auto& [property, n] : violations) {
    o.require(n == 0, property);
    o.note << "; " << property << ": " << n << " violations, e.g. x = " << example[property];
  }
  if (o.ok) o.note << "1000 random elements, all properties hold";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "star maps on B2", 1, ac1},
      {"AC2", "b_s3 b_y = delta b_z in B3", 1, ac2},
      {"AC3", "alternating monomials in I2(m)", 1, ac3},
      {"AC4", "fully commutative counts", 5, ac4},
      {"AC5", "classification against audits and counterexamples", 300, ac5},
      {"AC6", "c-basis defining property", 120, ac6},
      {"AC7", "positivity of structure constants", 600, ac7},
      {"AC8", "images of reduced words in the lattice", 600, ac8},
      {"AC9", "normal shapes of reduced words", 600, ac9},
      {"AC10", "h invariant", 300, ac10},
      {"AC11", "eigenspace and lattice properties", 600, ac11},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.budget_s, "over the time budget");
    all = all && o.ok;
    std::cout << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << ' ' << c.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s) " << o.note.str() << std::endl;
  }
  return all ? 0 : 1;
}
