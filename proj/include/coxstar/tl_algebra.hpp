#ifndef COXSTAR_TL_ALGEBRA_HPP_
#define COXSTAR_TL_ALGEBRA_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxstar/elements.hpp"
#include "coxstar/laurent.hpp"

namespace coxstar {

enum class Basis { B, TTilde, C };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

using Terms = std::map<FcElement, LaurentInt>;

/// An element of TL(X) written in one of the three bases. Zero coefficients
/// are never stored.
class TlElement {
 public:
  TlElement() = default;
  TlElement(CoxeterGraph g, Basis basis) : graph_(std::move(g)), basis_(basis) {}
  static TlElement basis_element(const FcElement& w, Basis basis, const LaurentInt& coeff = 1);

  const CoxeterGraph& graph() const { return graph_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentInt coefficient(const FcElement& w) const;
  std::size_t max_length() const { return terms_.empty() ? 0 : terms_.rbegin()->first.length(); }

  void add(const FcElement& w, const LaurentInt& coeff);
  /// this += a * x, same basis required.
  void add_scaled(const LaurentInt& a, const TlElement& x);

  TlElement& operator+=(const TlElement& x) { add_scaled(1, x); return *this; }
  TlElement& operator-=(const TlElement& x) { add_scaled(-1, x); return *this; }
  friend TlElement operator+(TlElement a, const TlElement& b) { return a += b; }
  friend TlElement operator-(TlElement a, const TlElement& b) { return a -= b; }
  friend TlElement operator*(const LaurentInt& a, const TlElement& x);
  friend bool operator==(const TlElement& a, const TlElement& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const TlElement& x) const;

  CoxeterGraph graph_;
  Basis basis_ = Basis::B;
  Terms terms_;
};

/// Coefficients of x P_{m-1}(x), P_0 = 1, P_1 = x, P_n = x P_{n-1} - P_{n-2};
/// coefficients[j] multiplies x^j.
struct ChebyshevRelation {
  int m = 3;
  std::vector<Integer> coefficients;
};

ChebyshevRelation chebyshev_relation(int m);

struct PositivityViolation {
  FcElement x, y, w;
  LaurentInt coeff;
  std::string reason;
};

struct StructureRow {
  FcElement x, y, w;
  LaurentInt coeff;
};

struct PositivityReport {
  std::size_t elements = 0;
  std::size_t pairs = 0;
  unsigned max_delta_power = 0;
  bool exhaustive = false;
  std::vector<StructureRow> rows;
  std::vector<PositivityViolation> violations;
};

/// TL(X) over one graph, with memo tables for reductions and the t~ and c
/// bases (all stored in b-coordinates). Safe to share between threads.
class TlAlgebra {
 public:
  explicit TlAlgebra(CoxeterGraph g);

  const CoxeterGraph& graph() const { return graph_; }
  bool star_reducible() const { return star_reducible_; }

  TlElement one() const;
  TlElement b(const FcElement& w) const { return TlElement::basis_element(w, Basis::B); }
  TlElement b_generator(Generator s) const;

  /// b(s_1) ... b(s_r) in the b-basis: squares give a factor delta, leftmost
  /// braids of full length are lowered by the Chebyshev relation.
  TlElement reduce_b_monomial(const Word& w);
  TlElement reduce_trace(const Trace& t);
  /// Same, applying a pseudo-randomly chosen relation at each step and no memo.
  TlElement reduce_b_monomial_randomized(const Word& w, std::uint64_t seed) const;

  /// Product in b-coordinates.
  TlElement multiply(const TlElement& x, const TlElement& y);

  /// t~_w and c_w in b-coordinates.
  TlElement ttilde_of(const FcElement& w);
  TlElement c_of(const FcElement& w);

  TlElement change_basis(const TlElement& x, Basis target);
  /// Bar involution; the result is in the basis of x.
  TlElement bar_element(const TlElement& x);

  /// (b_{s_1} - v^-1) ... (b_{s_r} - v^-1) for a reduced word.
  TlElement theta_ttilde_of_word(const Word& w);

  bool in_lattice(const TlElement& x);
  bool in_vinv_lattice(const TlElement& x);
  std::map<FcElement, Integer> pi_project(const TlElement& x);

  bool in_L_left(const TlElement& x, Generator s);
  bool in_L_right(const TlElement& x, Generator s);
  /// W' = {w : w = s t u reduced}; right: {w : w = u t s reduced}.
  bool in_L_left_st(const TlElement& x, Generator s, Generator t);
  bool in_L_right_st(const TlElement& x, Generator s, Generator t);

  /// c_x c_y in c-coordinates.
  Terms structure_constants(const FcElement& x, const FcElement& y);

  PositivityReport positivity_report(int max_len, int jobs = 1);
  PositivityReport positivity_report(const FcEnumeration& en, int jobs = 1);

  std::size_t ttilde_memo_size() const;
  std::size_t c_memo_size() const;

  /// Seeding from a cache file. Entries are trusted for the defining property
  /// check only when verify is false.
  void seed_ttilde(const FcElement& w, const TlElement& b_coords);
  void seed_c(const FcElement& w, const TlElement& b_coords, bool verify = true);
  std::vector<std::pair<FcElement, TlElement>> ttilde_table() const;
  std::vector<std::pair<FcElement, TlElement>> c_table() const;

 private:
  TlElement to_b(const TlElement& x);
  TlElement peel(TlElement x_in_b, Basis target);
  bool lattice_with(const TlElement& x, const std::function<bool(const FcElement&)>& strong);
  void verify_c(const FcElement& w, const TlElement& c);
  TlElement compute_c(const FcElement& w);

  CoxeterGraph graph_;
  bool star_reducible_ = false;

  mutable std::mutex mutex_;
  std::unordered_map<Trace, TlElement, TraceHash> reduce_memo_;
  std::unordered_map<Trace, TlElement, TraceHash> ttilde_memo_;
  std::unordered_map<Trace, TlElement, TraceHash> c_memo_;
};

}  // namespace coxstar

#endif  // COXSTAR_TL_ALGEBRA_HPP_
