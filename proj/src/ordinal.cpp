#include "mindchange/ordinal.hpp"

#include <cctype>
#include <stdexcept>

namespace mindchange {

Ordinal Ordinal::make(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].second == 0) {
      throw std::invalid_argument("zero coefficient at index " +
                                  std::to_string(i));
    }
    if (i > 0 && terms[i - 1].first <= terms[i].first) {
      throw std::invalid_argument("exponents not decreasing at index " +
                                  std::to_string(i));
    }
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

Ordinal Ordinal::natural(std::uint64_t k) {
  Ordinal o;
  if (k > 0) o.terms_.emplace_back(Ordinal(), k);
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& e, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("zero coefficient");
  Ordinal o;
  o.terms_.emplace_back(e, c);
  return o;
}

bool Ordinal::is_natural() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

std::uint64_t Ordinal::as_natural() const {
  if (!is_natural()) throw std::logic_error("ordinal is not a natural number");
  return terms_.empty() ? 0 : terms_[0].second;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const {
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].first <=> rhs.terms_[i].first; c != 0) return c;
    if (auto c = terms_[i].second <=> rhs.terms_[i].second; c != 0) return c;
  }
  // A longer normal form extends the shorter with strictly smaller terms,
  // so it denotes the strictly larger ordinal.
  return terms_.size() <=> rhs.terms_.size();
}

namespace {

void format_term(const Ordinal::Term& t, std::string& out) {
  const Ordinal& e = t.first;
  if (e.is_zero()) {
    out += std::to_string(t.second);
    return;
  }
  out += 'w';
  if (!(e.is_natural() && e.as_natural() == 1)) {
    out += '^';
    if (e.is_natural()) {
      out += std::to_string(e.as_natural());
    } else if (e == Ordinal::omega()) {
      out += 'w';
    } else {
      out += '(';
      out += e.str();
      out += ')';
    }
  }
  out += '*';
  out += std::to_string(t.second);
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("ordinal parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::uint64_t number() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos;
    }
    return v;
  }

  // natural | 'w' | '(' ordinal ')'
  Ordinal exponent_atom() {
    if (eof()) fail("expected an exponent");
    if (peek() == '(') {
      ++pos;
      Ordinal o = ordinal();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos;
      return o;
    }
    if (peek() == 'w') {
      ++pos;
      return Ordinal::omega();
    }
    return Ordinal::natural(number());
  }

  Ordinal::Term term() {
    if (eof()) fail("expected a term");
    if (peek() != 'w') {
      std::uint64_t k = number();
      if (k == 0) fail("zero is not a term");
      return {Ordinal(), k};
    }
    ++pos;
    Ordinal e = Ordinal::natural(1);
    if (!eof() && peek() == '^') {
      ++pos;
      e = exponent_atom();
    }
    std::uint64_t c = 1;
    if (!eof() && peek() == '*') {
      ++pos;
      c = number();
    }
    if (c == 0) fail("zero coefficient");
    return {e, c};
  }

  Ordinal ordinal() {
    if (!eof() && peek() == '0') {
      ++pos;
      return Ordinal();
    }
    std::vector<Ordinal::Term> terms;
    terms.push_back(term());
    while (!eof() && peek() == '+') {
      ++pos;
      terms.push_back(term());
    }
    return Ordinal::make(std::move(terms));  // enforces strict CNF order
  }
};

}  // namespace

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += '+';
    format_term(terms_[i], out);
  }
  return out;
}

Ordinal Ordinal::parse(std::string_view text) {
  Parser p{text};
  Ordinal o = p.ordinal();
  if (!p.eof()) p.fail("trailing input");
  return o;
}

void Ordinal::encode(std::vector<std::uint64_t>& out) const {
  out.push_back(terms_.size());
  for (const auto& [e, c] : terms_) {
    e.encode(out);
    out.push_back(c);
  }
}

Ordinal Ordinal::decode(const std::vector<std::uint64_t>& in,
                        std::size_t& pos) {
  if (pos >= in.size()) throw std::invalid_argument("truncated ordinal");
  const std::uint64_t n = in[pos++];
  std::vector<Term> terms;
  terms.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    Ordinal e = decode(in, pos);
    if (pos >= in.size()) throw std::invalid_argument("truncated ordinal");
    terms.emplace_back(std::move(e), in[pos++]);
  }
  return make(std::move(terms));
}

std::optional<std::size_t> validate_strictly_decreasing(
    const std::vector<Ordinal>& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i - 1] <= seq[i]) return i;
  }
  return std::nullopt;
}

}  // namespace mindchange
