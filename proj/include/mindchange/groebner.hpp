#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindchange/ordinal.hpp"
#include "mindchange/runs.hpp"

namespace mindchange {

using Rational = boost::multiprecision::cpp_rational;
using Monomial = std::vector<std::uint32_t>;  // exponent vector, length nvars

std::uint64_t total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial mono_quotient(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// A term order: lex, graded lex or graded reverse lex, optionally after a
// permutation of the variables (perm[rank] = variable index; empty means
// identity).
struct MonomialOrder {
  enum class Kind { lex, grlex, grevlex };
  Kind kind = Kind::grevlex;
  std::vector<int> perm;

  static MonomialOrder lex() { return {Kind::lex, {}}; }
  static MonomialOrder grlex() { return {Kind::grlex, {}}; }
  static MonomialOrder grevlex() { return {Kind::grevlex, {}}; }

  // Positive when a comes later (is larger) in the order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

// Multivariate polynomial over the rationals, exact arithmetic throughout.
// Terms are kept in a map keyed by exponent vector; zero coefficients are
// never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial monomial(int nvars, Monomial m, Rational c);
  static Polynomial constant(int nvars, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  // this - c * x^m * rhs, the reduction step.
  Polynomial sub_scaled(const Monomial& m, const Rational& c,
                        const Polynomial& rhs) const;

  Monomial leading_monomial(const MonomialOrder& order) const;  // nonzero only
  const Rational& coeff(const Monomial& m) const;
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial& rhs) const = default;

  // Text form with terms sorted descending in the order; parse accepts
  // rational coefficients `p/q`, variables `x1..xN`, `^` powers, `*`
  // products and `+`/`-`.
  std::string str(const MonomialOrder& order = MonomialOrder::grevlex()) const;
  static Polynomial parse(std::string_view text, int nvars);

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Full normal form of p modulo the basis: repeatedly clears the order-largest
// reducible term, always against the first basis element (in canonical
// order) whose leading term divides it.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order);

// The unique reduced basis of the ideal generated by gens: S-polynomial
// completion, inter-reduction, monic normalization, sorted by leading
// monomial descending. The zero ideal yields the empty basis.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order);

// Ordinal measure of a leading-term staircase, strictly below w^n for
// nonzero ideals and exactly w^n for the zero ideal. Strictly decreases
// whenever the monomial ideal strictly grows: mind-change fuel.
//   n=1: degree of the single minimal generator.
//   n=2: w*l + m for l infinite complement lines and m leftover monomials.
//   n>=3: recursive slice rank along the last variable.
Ordinal staircase_tag(std::vector<Monomial> leading_monomials, int nvars);

// Canonical text and token for a reduced basis.
std::string basis_text(const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);
Guess basis_guess(const std::vector<Polynomial>& basis,
                  const MonomialOrder& order);

struct IdealEnumeration {
  int nvars = 1;
  std::vector<Polynomial> items;  // zeros permitted
};

// Online learner state: the current reduced basis together with its tag and
// the trace emitted so far. The run opens at the bound (the zero-ideal tag),
// either via the inclusive convention or under the successor bound.
struct GroebnerState {
  std::vector<Polynomial> basis;
  int nvars = 1;
  MonomialOrder order;
  Ordinal tag;
  TaggedRun emitted;
};

GroebnerState fresh_state(int nvars, MonomialOrder order,
                          bool bound_inclusive = true);

struct LearnerEmission {
  Ordinal tag;
  Guess guess;
  bool changed = false;
};

// Feeds one enumeration item: a member of the current ideal repeats the
// emission, anything new rebuilds the basis and strictly drops the tag.
std::pair<GroebnerState, LearnerEmission> learner_step(const GroebnerState& s,
                                                       const Polynomial& p);

// Folds learner_step over the enumeration; the final basis equals the
// offline completion of all items at once.
std::pair<TaggedRun, std::vector<Polynomial>> run_learner(
    const IdealEnumeration& e, const MonomialOrder& order,
    bool bound_inclusive = true);

// Dispatcher over the variable count taken from the enumeration itself: one
// trace under the bound w^w that opens with the empty guess and then follows
// the n-variable learner.
TaggedRun run_union_learner(const IdealEnumeration& e,
                            const MonomialOrder& order);

// Builds an enumeration forcing the learner through exactly the given
// strictly decreasing change-point tags (supported for one and two
// variables). Throws "unrealizable tag ..." when no staircase witness fits.
IdealEnumeration adversary(const std::vector<Ordinal>& targets, int nvars);

}  // namespace mindchange
