#include "coxstar/h_invariant.hpp"

#include <random>

#include "coxstar/elements.hpp"
#include "coxstar/errors.hpp"

namespace coxstar {

std::string move_kind_name(HMove::Kind k) { return k == HMove::Kind::Square ? "ss" : "sts"; }

namespace {

struct Candidate {
  HMove move;
  std::vector<std::size_t> chain;
  Generator keep;
};

std::vector<Candidate> applicable(const Heap& h) {
  std::vector<Candidate> out;
  for (const SquareFactor& f : all_square_factors(h))
    out.push_back({{HMove::Kind::Square, {f.letter}, f.first}, {f.first, f.second}, f.letter});
  for (const Edge& e : h.graph().bonds())
    for (const BraidFactor& f : all_braid_factors(h, e.i, e.j, 3))
      out.push_back({{HMove::Kind::Triple, {f.first_letter, f.second_letter}, f.chain.front()}, f.chain, f.first_letter});
  return out;
}

}  // namespace

HResult h_value(const CoxeterGraph& g, const Word& w, std::uint64_t seed) {
  check_word(g, w);
  if (!classify_star_reducible(g).star_reducible)
    throw DomainError("h is only well defined for star reducible graphs");
  std::mt19937_64 rng(seed);
  HResult out;
  Trace cur = cartier_foata(g, w);
  for (;;) {
    Heap heap(cur);
    std::vector<Candidate> moves = applicable(heap);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const Candidate& c = moves[pick(rng)];
    if (c.move.kind == HMove::Kind::Square) ++out.h;
    out.log.push_back(c.move);
    cur = heap.replace_factor(c.chain, Word{c.keep});
  }
  if (!is_reduced_fc(cur)) throw VerificationError("rewriting stopped at a word that is not reduced and fully commutative");
  out.terminal = std::move(cur);
  return out;
}

bool is_acyclic(const CoxeterGraph& g, const Word& w) { return h_value(g, w).h == 0; }

}  // namespace coxstar
