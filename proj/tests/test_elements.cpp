#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxstar/elements.hpp"
#include "coxstar/errors.hpp"
#include "oracles.hpp"

using namespace coxstar;

namespace {

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::set<Trace> fc_set(const CoxeterGraph& g, int max_len) {
  std::set<Trace> out;
  for (const FcElement& w : enumerate_fc(g, max_len).elements) out.insert(w.trace());
  return out;
}

// FC elements according to the reflection oracle.
std::set<Trace> oracle_fc_set(const CoxeterGraph& g, int max_len) {
  oracle::Reflection r(g);
  std::set<Trace> out;
  for (const Word& w : r.elements_up_to(max_len))
    if (r.fully_commutative(w)) out.insert(cartier_foata(g, w));
  return out;
}

}  // namespace

TEST_CASE("is_reduced_fc examples") {
  CHECK_FALSE(is_reduced_fc(family_graph("A2"), {0, 1, 0}));
  CHECK(is_reduced_fc(family_graph("B2"), {0, 1, 0}));
  CHECK_FALSE(is_reduced_fc(family_graph("B2"), {1, 1}));
  CHECK(is_reduced_fc(family_graph("I2(inf)"), {0, 1, 0, 1, 0, 1, 0}));
  CHECK_THROWS_AS(FcElement::from_word(family_graph("A2"), {0, 1, 0}), DomainError);
}

TEST_CASE("enumeration of B2 and A3 against brute force") {
  const CoxeterGraph b2 = family_graph("B2");
  auto e = enumerate_fc(b2, 10);
  CHECK(e.elements.size() == 7);
  CHECK(e.exhaustive);
  CHECK(fc_set(b2, 10) == oracle_fc_set(b2, 10));
  oracle::Reflection rb(b2);
  CHECK(rb.count_up_to(10) == 8);

  const CoxeterGraph a3 = family_graph("A3");
  e = enumerate_fc(a3, 10);
  CHECK(e.elements.size() == 14);
  CHECK(e.exhaustive);
  // all 24 permutations, keeping the 321-avoiding ones
  std::vector<int> p{0, 1, 2, 3};
  std::set<Trace> avoiding;
  int total = 0;
  do {
    ++total;
    if (!oracle::avoids_321(p)) continue;
    // bubble sort gives a reduced word
    std::vector<int> q = p;
    Word w;
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int i = 0; i + 1 < 4; ++i)
        if (q[i] > q[i + 1]) {
          std::swap(q[i], q[i + 1]);
          w.push_back(i);
          swapped = true;
        }
    }
    std::reverse(w.begin(), w.end());
    CHECK(oracle::permutation_of(w, 4) == p);
    CHECK(static_cast<int>(w.size()) == oracle::inversions(p));
    avoiding.insert(cartier_foata(a3, w));
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(total == 24);
  CHECK(avoiding == fc_set(a3, 10));
}

TEST_CASE("enumeration of I2(5), B3 and A4 against brute force") {
  for (const char* name : {"I2(5)", "B3", "A4", "H3"}) {
    CAPTURE(name);
    const CoxeterGraph g = family_graph(name);
    CHECK(fc_set(g, 20) == oracle_fc_set(g, 20));
  }
  CHECK(enumerate_fc(family_graph("I2(5)"), 20).elements.size() == 9);
  CHECK(enumerate_fc(family_graph("B3"), 20).elements.size() == 24);
  CHECK(enumerate_fc(family_graph("A4"), 20).elements.size() == 42);
}

TEST_CASE("enumeration of infinite W_c is honest about truncation") {
  const CoxeterGraph c = family_graph("Ctilde3");
  auto e = enumerate_fc(c, 6);
  CHECK_FALSE(e.exhaustive);
  std::set<Trace> got;
  for (const auto& w : e.elements) got.insert(w.trace());
  CHECK(got == oracle_fc_set(c, 6));
  const CoxeterGraph inf = family_graph("I2(inf)");
  e = enumerate_fc(inf, 5);
  CHECK(e.elements.size() == 11);
  CHECK_FALSE(e.exhaustive);
  auto zero = enumerate_fc(family_graph("B2"), 0);
  CHECK(zero.elements.size() == 1);
  CHECK(zero.elements[0].length() == 0);
  CHECK_THROWS_AS(enumerate_fc(c, -1), DomainError);
}

TEST_CASE("enumeration output does not depend on the number of jobs") {
  for (const char* name : {"Ftilde5", "Ctilde3", "E6"}) {
    const CoxeterGraph g = family_graph(name);
    auto a = enumerate_fc(g, 7, 1), b = enumerate_fc(g, 7, 4);
    CHECK(a.elements == b.elements);
    CHECK(a.exhaustive == b.exhaustive);
    CHECK(std::is_sorted(a.elements.begin(), a.elements.end()));
  }
}

TEST_CASE("incremental extension test agrees with the full test") {
  for (const char* name : {"Ftilde5", "Ctilde3", "B3", "H3", "Atilde4", "K3(3,4,inf)"}) {
    const CoxeterGraph g = family_graph(name);
    for (const FcElement& w : enumerate_fc(g, 6).elements)
      for (Generator s = 0; s < g.rank(); ++s) {
        Word x = w.word();
        x.push_back(s);
        CHECK(fc_extends_right(w, s) == is_reduced_fc(g, x));
      }
  }
}

TEST_CASE("descents") {
  const CoxeterGraph b2 = family_graph("B2");
  const FcElement ts = FcElement::from_word(b2, {1, 0});
  CHECK(left_descents(ts) == Block{1});
  CHECK(right_descents(ts) == Block{0});
  CHECK(left_descents(FcElement::identity(b2)).empty());
  const FcElement p = FcElement::from_word(family_graph("A3"), {0, 2});
  CHECK(left_descents(p) == Block{0, 2});
  CHECK(right_descents(p) == Block{0, 2});
}

TEST_CASE("descents agree with the word problem") {
  for (const char* name : {"Ctilde3", "Ftilde5", "H3"}) {
    const CoxeterGraph g = family_graph(name);
    oracle::Reflection r(g);
    for (const FcElement& w : enumerate_fc(g, 6).elements)
      for (Generator s = 0; s < g.rank(); ++s) {
        const Word sw = concat({s}, w.word());
        const Block ld = left_descents(w);
        const bool desc = std::binary_search(ld.begin(), ld.end(), s);
        CHECK(desc == (tits_is_reduced(g, sw) == Reducedness::NotReduced));
        CHECK(desc == !r.reduced(sw));
      }
  }
}

TEST_CASE("coset decomposition examples") {
  const CoxeterGraph b2 = family_graph("B2");
  auto d = coset_decompose(FcElement::from_word(b2, {1, 0}), 0, 1, Side::Left);
  CHECK(d.alternating == Word{1, 0});
  CHECK(d.rest.length() == 0);
  const CoxeterGraph a3 = family_graph("A3");
  d = coset_decompose(FcElement::from_word(a3, {2}), 0, 1, Side::Left);
  CHECK(d.alternating.empty());
  CHECK(d.rest == FcElement::from_word(a3, {2}));
  d = coset_decompose(FcElement::from_word(a3, {1, 0, 2}), 0, 1, Side::Left);
  CHECK(d.alternating == Word{1, 0});
  CHECK(d.rest == FcElement::from_word(a3, {2}));
  CHECK_THROWS_AS(coset_decompose(FcElement::from_word(a3, {0}), 0, 2, Side::Left), DomainError);
}

TEST_CASE("coset decomposition is a reduced factorization") {
  for (const char* name : {"Ctilde3", "Ftilde5", "B3", "I2(7)"}) {
    const CoxeterGraph g = family_graph(name);
    oracle::Reflection r(g);
    for (const FcElement& w : enumerate_fc(g, 7).elements)
      for (const Edge& e : g.bonds())
        for (Side side : {Side::Left, Side::Right}) {
          auto d = coset_decompose(w, e.i, e.j, side);
          CHECK(d.alternating.size() + d.rest.length() == w.length());
          const Word whole = side == Side::Left ? concat(d.alternating, d.rest.word()) : concat(d.rest.word(), d.alternating);
          CHECK(cartier_foata(g, whole) == w.trace());
          CHECK(d.alternating.size() < e.label);
          // the rest has neither letter as a descent on that side
          const Block desc = side == Side::Left ? left_descents(d.rest) : right_descents(d.rest);
          CHECK_FALSE(std::binary_search(desc.begin(), desc.end(), e.i));
          CHECK_FALSE(std::binary_search(desc.begin(), desc.end(), e.j));
          for (std::size_t k = 1; k < d.alternating.size(); ++k) CHECK(d.alternating[k] != d.alternating[k - 1]);
          (void)r;
        }
  }
}

TEST_CASE("Tits word problem examples") {
  const CoxeterGraph b2 = family_graph("B2");
  CHECK(tits_is_reduced(b2, {0, 1, 0, 1}) == Reducedness::Reduced);
  CHECK(tits_is_reduced(b2, {0, 1, 0, 1, 0}) == Reducedness::NotReduced);
  CHECK(tits_is_reduced(b2, {}) == Reducedness::Reduced);
  CHECK(tits_is_reduced(family_graph("A5"), {0, 1, 2, 3, 4, 0, 1, 2, 3, 0, 1, 2, 0, 1, 0}, 3) == Reducedness::Unknown);
}

TEST_CASE("Tits word problem agrees with the reflection representation") {
  std::mt19937 rng(17);
  for (const char* name : {"B3", "H3", "Ctilde3", "Ftilde5", "I2(inf)", "K3(3,4,inf)", "Atilde4"}) {
    const CoxeterGraph g = family_graph(name);
    oracle::Reflection r(g);
    for (int trial = 0; trial < 150; ++trial) {
      Word w;
      const int len = static_cast<int>(rng() % 9);
      for (int i = 0; i < len; ++i) w.push_back(static_cast<Generator>(rng() % g.rank()));
      CAPTURE(name);
      CHECK((tits_is_reduced(g, w) == Reducedness::Reduced) == r.reduced(w));
    }
  }
}

TEST_CASE("FC words are reduced") {
  for (const char* name : {"Ctilde3", "Ftilde5", "H4"}) {
    const CoxeterGraph g = family_graph(name);
    for (const FcElement& w : enumerate_fc(g, 8).elements) CHECK(tits_is_reduced(g, w.word()) == Reducedness::Reduced);
  }
}

TEST_CASE("group enumeration against the reflection representation") {
  CHECK(enumerate_group(family_graph("B2"), 20).size() == 8);
  CHECK(enumerate_group(family_graph("A3"), 20).size() == 24);
  CHECK(enumerate_group(family_graph("I2(5)"), 20).size() == 10);
  CHECK(enumerate_group(family_graph("B3"), 20).size() == 48);
  for (const char* name : {"Ctilde3", "Ftilde5"}) {
    const CoxeterGraph g = family_graph(name);
    oracle::Reflection r(g);
    const auto all = enumerate_group(g, 6);
    CHECK(all.size() == r.count_up_to(6));
    for (const GroupElement& x : all) {
      // every listed trace is a reduced expression of the same element
      const auto key = r.key(x.word());
      for (const Trace& t : x.reduced_traces()) CHECK(r.key(t.linearize()) == key);
      std::set<Trace> oracle_traces;
      for (const Word& w : r.reduced_words(x.word())) oracle_traces.insert(cartier_foata(g, w));
      CHECK(std::set<Trace>(x.reduced_traces().begin(), x.reduced_traces().end()) == oracle_traces);
      for (Generator s = 0; s < g.rank(); ++s) {
        const bool left = r.length(concat({s}, x.word())) < static_cast<int>(x.length());
        const Block ld = x.left_descents();
        CHECK(left == std::binary_search(ld.begin(), ld.end(), s));
      }
    }
  }
}

TEST_CASE("complex and weakly complex") {
  const CoxeterGraph a2 = family_graph("A2");
  CHECK(is_complex_word(a2, {0, 1, 0}));
  CHECK(is_weakly_complex(a2, {0, 1, 0}));
  const CoxeterGraph b2 = family_graph("B2");
  CHECK(is_weakly_complex(b2, {0, 1, 0, 1}));
  CHECK_FALSE(is_complex_word(b2, {0, 1, 0}));
  CHECK_FALSE(is_weakly_complex(b2, {0, 1, 0}));
  CHECK_THROWS_AS(is_complex_word(b2, {0, 0}), DomainError);
  // A3 longest element: complex, but every s w is still complex
  const CoxeterGraph a3 = family_graph("A3");
  CHECK(is_complex_word(a3, {0, 1, 0, 2, 1, 0}));
  CHECK_FALSE(is_weakly_complex(a3, {0, 1, 0, 2, 1, 0}));
}

TEST_CASE("weakly complex elements against brute force") {
  for (const char* name : {"B3", "Ctilde3"}) {
    const CoxeterGraph g = family_graph(name);
    oracle::Reflection r(g);
    for (const GroupElement& x : enumerate_group(g, 6)) {
      const Word w = x.word();
      const bool complex = !r.fully_commutative(w);
      bool weak = false;
      if (complex)
        for (Generator s = 0; s < g.rank(); ++s) {
          const Word sw = concat({s}, w);
          if (r.length(sw) < static_cast<int>(w.size()) && r.fully_commutative(r.reduced_words(sw).size() ? *r.reduced_words(sw).begin() : sw))
            weak = true;
        }
      CHECK(is_complex_word(g, w) == complex);
      CHECK(is_weakly_complex(x) == weak);
    }
  }
}

TEST_CASE("weakly complex elements respect the weak orders") {
  for (const char* name : {"Ctilde3", "Ftilde5"}) {
    const CoxeterGraph g = family_graph(name);
    for (const FcElement& w : enumerate_fc(g, 7).elements)
      for (Generator s = 0; s < g.rank(); ++s) {
        const Word sw = concat({s}, w.word());
        if (tits_is_reduced(g, sw) != Reducedness::Reduced || is_reduced_fc(g, sw)) continue;
        if (!is_weakly_complex(g, sw)) continue;
        for (Side side : {Side::Left, Side::Right})
          for (Generator u : side == Side::Left ? left_descents(w) : right_descents(w)) {
            const Trace y = side == Side::Left ? strip_left(w.trace(), u) : strip_right(w.trace(), u);
            const Word sy = concat({s}, y.linearize());
            if (tits_is_reduced(g, sy) != Reducedness::Reduced) continue;  // then s y < y, fully commutative
            CHECK((is_reduced_fc(g, sy) || is_weakly_complex(g, sy)));
          }
      }
  }
}

TEST_CASE("normal shapes") {
  const CoxeterGraph a3 = family_graph("A3");
  auto c = normal_shape_case(a3, {0, 2});
  CHECK(c.which == ShapeCase::CommutingProduct);
  const CoxeterGraph b2 = family_graph("B2");
  c = normal_shape_case(b2, {0, 1, 0, 1});
  CHECK(c.which == ShapeCase::BeginsST);
  CHECK(c.witness.size() == 4);
  CHECK(shape_case_name(ShapeCase::BeginsSUT) == "iv");
  CHECK_THROWS_AS(normal_shape_case(b2, {0, 0}), DomainError);
}

TEST_CASE("block subgraphs") {
  const CoxeterGraph b2 = family_graph("B2");
  CHECK(cf_block_subgraphs(FcElement::from_word(b2, {0})).empty());
  auto subs = cf_block_subgraphs(FcElement::from_word(b2, {1, 0}));
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].graph == family_graph("I2(4)"));
  const CoxeterGraph c3 = family_graph("Ctilde3");
  subs = cf_block_subgraphs(FcElement::from_word(c3, {0, 2, 1}));
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].graph == induced_subgraph(c3, {0, 1, 2}).graph);
  CHECK(subs[0].graph.label(0, 1) == 4);
  CHECK(subs[0].to_parent == std::vector<Generator>{0, 1, 2});
}
