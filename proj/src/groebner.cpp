#include "mindchange/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

namespace mindchange {

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) q[i] = b[i] - a[i];
  return q;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  auto at = [&](const Monomial& m, std::size_t rank) {
    return perm.empty() ? m[rank] : m[static_cast<std::size_t>(perm[rank])];
  };
  if (kind != Kind::lex) {
    if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
  }
  if (kind == Kind::grevlex) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (at(a, i) != at(b, i)) return at(b, i) <=> at(a, i);
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (at(a, i) != at(b, i)) return at(a, i) <=> at(b, i);
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::monomial(int nvars, Monomial m, Rational c) {
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  return monomial(nvars, Monomial(static_cast<std::size_t>(nvars), 0),
                  std::move(c));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != static_cast<std::size_t>(nvars_))
    throw std::invalid_argument("exponent vector length mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::sub_scaled(const Monomial& m, const Rational& c,
                                  const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [rm, rc] : rhs.terms_) {
    Monomial shifted(rm.size());
    for (std::size_t i = 0; i < rm.size(); ++i) shifted[i] = rm[i] + m[i];
    out.add_term(shifted, -c * rc);
  }
  return out;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : terms_) {
    if (!best || order.less(*best, m)) best = &m;
  }
  return *best;
}

const Rational& Polynomial::coeff(const Monomial& m) const {
  static const Rational zero = 0;
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  const Rational lc = coeff(leading_monomial(order));
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.add_term(m, c / lc);
  return out;
}

namespace {

std::string rational_text(const Rational& c) {
  std::string s = numerator(c).str();
  if (denominator(c) != 1) s += "/" + denominator(c).str();
  return s;
}

std::string term_text(const Monomial& m, const Rational& abs_coeff) {
  std::string mono;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!mono.empty()) mono += '*';
    mono += "x" + std::to_string(i + 1);
    if (m[i] > 1) mono += "^" + std::to_string(m[i]);
  }
  if (mono.empty()) return rational_text(abs_coeff);
  if (abs_coeff == 1) return mono;
  return rational_text(abs_coeff) + "*" + mono;
}

}  // namespace

std::string Polynomial::str(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order.less(b->first, a->first); });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const bool neg = sorted[i]->second < 0;
    const Rational abs_c = neg ? Rational(-sorted[i]->second) : sorted[i]->second;
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_text(sorted[i]->first, abs_c);
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;
  int nvars;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " +
                                std::to_string(pos + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
    }
    return v;
  }

  // coefficient or variable power
  void factor(Rational& coeff, Monomial& mono) {
    skip_ws();
    if (pos >= text.size()) fail("expected a factor");
    if (text[pos] == 'x') {
      ++pos;
      const std::uint64_t idx = number();
      if (idx < 1 || idx > static_cast<std::uint64_t>(nvars))
        fail("variable index out of range");
      std::uint64_t exp = 1;
      if (!eof() && peek() == '^') {
        ++pos;
        exp = number();
      }
      mono[static_cast<std::size_t>(idx - 1)] += static_cast<std::uint32_t>(exp);
      return;
    }
    const std::uint64_t num = number();
    Rational c(num);
    if (!eof() && peek() == '/') {
      ++pos;
      const std::uint64_t den = number();
      if (den == 0) fail("zero denominator");
      c /= den;
    }
    coeff *= c;
  }

  Polynomial poly() {
    Polynomial out(nvars);
    bool first = true;
    while (true) {
      skip_ws();
      bool neg = false;
      if (first) {
        if (!eof() && peek() == '-') {
          neg = true;
          ++pos;
        }
      } else {
        if (eof()) break;
        const char c = peek();
        if (c == '+') {
          ++pos;
        } else if (c == '-') {
          neg = true;
          ++pos;
        } else {
          fail("expected '+' or '-'");
        }
      }
      Rational coeff = neg ? -1 : 1;
      Monomial mono(static_cast<std::size_t>(nvars), 0);
      factor(coeff, mono);
      while (!eof() && peek() == '*') {
        ++pos;
        factor(coeff, mono);
      }
      out.add_term(mono, coeff);
      first = false;
    }
    if (first) fail("empty polynomial");
    return out;
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  PolyParser p{text, 0, nvars};
  Polynomial out = p.poly();
  if (!p.eof()) p.fail("trailing input");
  return out;
}

namespace {

// Canonical scan order for reduction: leading monomials descending, stable.
std::vector<std::size_t> canonical_indices(const std::vector<Polynomial>& basis,
                                           const MonomialOrder& order) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_zero()) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.less(basis[b].leading_monomial(order),
                      basis[a].leading_monomial(order));
  });
  return idx;
}

}  // namespace

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis,
                  const MonomialOrder& order) {
  const auto idx = canonical_indices(basis, order);
  Polynomial r = p;
  while (!r.is_zero()) {
    // Order-largest reducible term.
    const Monomial* target = nullptr;
    const Polynomial* divisor = nullptr;
    for (const auto& [m, c] : r.terms()) {
      for (std::size_t i : idx) {
        if (divides(basis[i].leading_monomial(order), m)) {
          if (!target || order.less(*target, m)) {
            target = &m;
            divisor = &basis[i];
          }
          break;  // first basis element in canonical order wins
        }
      }
    }
    if (!target) break;
    const Monomial lt = divisor->leading_monomial(order);
    const Rational factor = r.coeff(*target) / divisor->coeff(lt);
    r = r.sub_scaled(mono_quotient(*target, lt), factor, *divisor);
  }
  return r;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const MonomialOrder& order) {
  std::vector<Polynomial> g;
  for (auto& p : gens) {
    if (!p.is_zero()) g.push_back(std::move(p));
  }
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial li = g[i].leading_monomial(order);
    const Monomial lj = g[j].leading_monomial(order);
    const Monomial l = mono_lcm(li, lj);
    if (total_degree(l) == total_degree(li) + total_degree(lj))
      continue;  // coprime leading terms reduce to zero
    Polynomial s = Polynomial(g[i].nvars())
                       .sub_scaled(mono_quotient(l, lj),
                                   Rational(1) / g[j].coeff(lj), g[j]);
    s = Polynomial(g[i].nvars())
            .sub_scaled(mono_quotient(l, li), Rational(1) / g[i].coeff(li),
                        g[i]) -
        s;
    const Polynomial r = reduce(s, g, order);
    if (!r.is_zero()) {
      for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
      g.push_back(r);
    }
  }

  // Minimal generators: no leading term divides another.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial li = g[i].leading_monomial(order);
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial lj = g[j].leading_monomial(order);
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }

  // Inter-reduce tails until stable, then normalize.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j != i) others.push_back(minimal[j]);
      }
      Polynomial r = reduce(minimal[i], others, order);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  for (auto& p : minimal) p = p.monic(order);
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return order.less(b.leading_monomial(order), a.leading_monomial(order));
  });
  return minimal;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ms.size() && !redundant; ++j) {
      if (i != j && divides(ms[j], ms[i])) redundant = true;
    }
    if (!redundant) out.push_back(ms[i]);
  }
  return out;
}

// Ordinals below w^(n+1) as coefficient vectors indexed by exponent.
using CoeffVec = std::vector<std::uint64_t>;

CoeffVec natural_add(CoeffVec a, const CoeffVec& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

// The unique g with b + g = a, for b <= a.
CoeffVec left_subtract(const CoeffVec& a, const CoeffVec& b) {
  const std::size_t n = std::max(a.size(), b.size());
  auto at = [](const CoeffVec& v, std::size_t i) {
    return i < v.size() ? v[i] : 0;
  };
  for (std::size_t e = n; e-- > 0;) {
    if (at(a, e) != at(b, e)) {
      if (at(a, e) < at(b, e))
        throw std::logic_error("ordinal subtraction underflow");
      CoeffVec g(e + 1, 0);
      g[e] = at(a, e) - at(b, e);
      for (std::size_t d = 0; d < e; ++d) g[d] = at(a, d);
      return g;
    }
  }
  return {};
}

CoeffVec shift_up(const CoeffVec& a) {
  CoeffVec out(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

Ordinal coeffs_to_ordinal(const CoeffVec& v) {
  std::vector<Ordinal::Term> terms;
  for (std::size_t e = v.size(); e-- > 0;) {
    if (v[e] > 0) terms.emplace_back(Ordinal::natural(e), v[e]);
  }
  return Ordinal::make(std::move(terms));
}

Monomial drop_last(const Monomial& m) {
  return Monomial(m.begin(), m.end() - 1);
}

// Slice rank along the last variable. `gens` minimal and nonempty.
CoeffVec slice_rank(const std::vector<Monomial>& gens, int nvars);

CoeffVec rank_or_full(const std::vector<Monomial>& gens, int nvars) {
  if (gens.empty()) {
    CoeffVec full(static_cast<std::size_t>(nvars) + 1, 0);
    full[static_cast<std::size_t>(nvars)] = 1;  // the zero ideal rank w^n
    return full;
  }
  return slice_rank(gens, nvars);
}

CoeffVec slice_rank(const std::vector<Monomial>& gens, int nvars) {
  if (nvars == 1) {
    return CoeffVec{gens.front().front()};  // single minimal generator degree
  }
  std::uint32_t max_last = 0;
  for (const auto& g : gens) max_last = std::max(max_last, g.back());
  auto slice = [&](std::uint32_t k) {
    std::vector<Monomial> s;
    for (const auto& g : gens) {
      if (g.back() <= k) s.push_back(drop_last(g));
    }
    return minimalize(std::move(s));
  };
  const std::vector<Monomial> projection = slice(max_last);
  const CoeffVec r_inf = rank_or_full(projection, nvars - 1);
  CoeffVec result = shift_up(r_inf);
  for (std::uint32_t k = 0; k < max_last; ++k) {
    const auto j = slice(k);
    if (j == projection) break;  // stabilized early
    result = natural_add(std::move(result),
                         left_subtract(rank_or_full(j, nvars - 1), r_inf));
  }
  return result;
}

}  // namespace

Ordinal staircase_tag(std::vector<Monomial> leading_monomials, int nvars) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  for (const auto& m : leading_monomials) {
    if (m.size() != static_cast<std::size_t>(nvars))
      throw std::invalid_argument("exponent vector length mismatch");
  }
  const std::vector<Monomial> gens = minimalize(std::move(leading_monomials));
  if (gens.empty()) return Ordinal::omega_pow(Ordinal::natural(static_cast<std::uint64_t>(nvars)), 1);
  if (nvars == 1) return Ordinal::natural(gens.front().front());
  if (nvars == 2) {
    std::uint32_t a = ~std::uint32_t{0}, b = ~std::uint32_t{0};
    std::uint32_t max_a = 0, max_b = 0;
    for (const auto& g : gens) {
      a = std::min(a, g[0]);
      b = std::min(b, g[1]);
      max_a = std::max(max_a, g[0]);
      max_b = std::max(max_b, g[1]);
    }
    // Complement monomials in the finite quadrant above the free lines.
    std::uint64_t m = 0;
    for (std::uint32_t i = a; i <= max_a; ++i) {
      for (std::uint32_t j = b; j <= max_b; ++j) {
        bool in_ideal = false;
        for (const auto& g : gens) {
          if (g[0] <= i && g[1] <= j) {
            in_ideal = true;
            break;
          }
        }
        if (!in_ideal) ++m;
      }
    }
    std::vector<Ordinal::Term> terms;
    if (a + b > 0) terms.emplace_back(Ordinal::natural(1), a + b);
    if (m > 0) terms.emplace_back(Ordinal::natural(0), m);
    return Ordinal::make(std::move(terms));
  }
  return coeffs_to_ordinal(slice_rank(gens, nvars));
}

std::string basis_text(const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  std::vector<const Polynomial*> sorted;
  for (const auto& p : basis) sorted.push_back(&p);
  std::stable_sort(sorted.begin(), sorted.end(), [&](auto* x, auto* y) {
    return order.less(y->leading_monomial(order), x->leading_monomial(order));
  });
  std::string out = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ", ";
    out += sorted[i]->str(order);
  }
  return out + "}";
}

Guess basis_guess(const std::vector<Polynomial>& basis,
                  const MonomialOrder& order) {
  const std::string text = basis_text(basis, order);
  Guess g;
  for (char c : text) g.payload.push_back(static_cast<std::uint64_t>(
      static_cast<unsigned char>(c)));
  return g;
}

GroebnerState fresh_state(int nvars, MonomialOrder order, bool bound_inclusive) {
  if (nvars < 1) throw std::invalid_argument("need at least one variable");
  GroebnerState s;
  s.nvars = nvars;
  s.order = std::move(order);
  s.tag = Ordinal::omega_pow(Ordinal::natural(static_cast<std::uint64_t>(nvars)), 1);
  s.emitted.bound_inclusive = bound_inclusive;
  if (bound_inclusive) {
    s.emitted.bound = s.tag;
  } else {
    // Successor-bound reading: the opening tag sits strictly below w^n + 1.
    s.emitted.bound = Ordinal::make(
        {{Ordinal::natural(static_cast<std::uint64_t>(nvars)), 1}, {Ordinal(), 1}});
  }
  s.emitted.steps.push_back({s.tag, basis_guess({}, s.order)});
  return s;
}

std::pair<GroebnerState, LearnerEmission> learner_step(const GroebnerState& s,
                                                       const Polynomial& p) {
  if (p.nvars() != s.nvars)
    throw std::invalid_argument("variable count mismatch");
  GroebnerState next = s;
  LearnerEmission em;
  const Polynomial r = reduce(p, s.basis, s.order);
  if (r.is_zero()) {
    em = {s.tag, basis_guess(s.basis, s.order), false};
  } else {
    std::vector<Polynomial> gens = s.basis;
    gens.push_back(p);
    next.basis = buchberger(std::move(gens), s.order);
    std::vector<Monomial> lms;
    for (const auto& q : next.basis) lms.push_back(q.leading_monomial(s.order));
    next.tag = staircase_tag(std::move(lms), s.nvars);
    if (!(next.tag < s.tag))
      throw std::logic_error("staircase tag failed to decrease");
    em = {next.tag, basis_guess(next.basis, s.order), true};
  }
  next.emitted.steps.push_back({em.tag, em.guess});
  return {std::move(next), std::move(em)};
}

std::pair<TaggedRun, std::vector<Polynomial>> run_learner(
    const IdealEnumeration& e, const MonomialOrder& order,
    bool bound_inclusive) {
  GroebnerState s = fresh_state(e.nvars, order, bound_inclusive);
  for (const auto& p : e.items) {
    s = learner_step(s, p).first;
  }
  return {s.emitted, s.basis};
}

TaggedRun run_union_learner(const IdealEnumeration& e,
                            const MonomialOrder& order) {
  auto [inner, basis] = run_learner(e, order, true);
  TaggedRun out;
  out.bound = Ordinal::omega_pow(Ordinal::omega(), 1);
  out.bound_inclusive = true;
  out.steps.push_back({out.bound, basis_guess({}, order)});
  out.steps.insert(out.steps.end(), inner.steps.begin(), inner.steps.end());
  return out;
}

namespace {

[[noreturn]] void unrealizable(const Ordinal& t) {
  throw std::invalid_argument("unrealizable tag " + t.str());
}

// Splits an ordinal below w^2 into (l, m) with value w*l + m.
std::pair<std::uint64_t, std::uint64_t> split_w2(const Ordinal& t) {
  std::uint64_t l = 0, m = 0;
  for (const auto& [e, c] : t.terms()) {
    if (e.is_zero()) {
      m = c;
    } else if (e.is_natural() && e.as_natural() == 1) {
      l = c;
    } else {
      unrealizable(t);
    }
  }
  return {l, m};
}

}  // namespace

IdealEnumeration adversary(const std::vector<Ordinal>& targets, int nvars) {
  if (nvars != 1 && nvars != 2)
    throw std::invalid_argument("adversary supports one or two variables");
  if (auto v = validate_strictly_decreasing(targets)) {
    throw std::invalid_argument("targets must strictly decrease at index " +
                                std::to_string(*v));
  }
  IdealEnumeration e;
  e.nvars = nvars;
  if (targets.empty()) {
    e.items.push_back(Polynomial(nvars));  // all-zero enumeration
    return e;
  }
  if (nvars == 1) {
    for (const auto& t : targets) {
      if (!t.is_natural()) unrealizable(t);
      e.items.push_back(
          Polynomial::monomial(1, {static_cast<std::uint32_t>(t.as_natural())}, 1));
    }
    return e;
  }
  // Two variables: walk the one-column staircase family. Pure powers x^l
  // carry the tags w*l; a truncated column x^l*y^m on top of x^(l+1) carries
  // w*l + m. Only moves that keep those shapes exact are realizable.
  bool column_mode = false;  // false: ideal (x^l); true: (x^(l+1), x^l y^m)
  std::uint64_t cur_l = 0, cur_m = 0;
  bool first = true;
  for (const auto& t : targets) {
    const auto [l, m] = split_w2(t);
    if (first) {
      if (m != 0) unrealizable(t);
      e.items.push_back(Polynomial::monomial(
          2, {static_cast<std::uint32_t>(l), 0}, 1));
      cur_l = l;
      first = false;
      continue;
    }
    if (m == 0 && (l < cur_l || (column_mode && l == cur_l))) {
      e.items.push_back(Polynomial::monomial(
          2, {static_cast<std::uint32_t>(l), 0}, 1));
      column_mode = false;
      cur_l = l;
    } else if (m > 0 && !column_mode && l + 1 == cur_l) {
      e.items.push_back(Polynomial::monomial(
          2, {static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(m)}, 1));
      column_mode = true;
      cur_l = l;
      cur_m = m;
    } else if (m > 0 && column_mode && l == cur_l && m < cur_m) {
      e.items.push_back(Polynomial::monomial(
          2, {static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(m)}, 1));
      cur_m = m;
    } else {
      unrealizable(t);
    }
  }
  return e;
}

}  // namespace mindchange
