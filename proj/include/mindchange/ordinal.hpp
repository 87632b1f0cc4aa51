#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mindchange {

// Ordinal below epsilon_0 in Cantor normal form:
//
//   w^e1*c1 + w^e2*c2 + ... + w^ek*ck,   e1 > e2 > ... > ek,  ci >= 1,
//
// where the exponents are themselves Ordinals and the empty sum is 0.
// Canonical form is required at construction and never repaired, so two
// equal ordinals are structurally identical and text round-trips exactly.
//
// Text grammar (str/parse):  `0`, naturals `k`, or `+`-joined terms
// `w^<atom>*<k>` where <atom> is a natural, `w`, or a parenthesized
// ordinal. `w` alone abbreviates `w^1*1`; `^1` and `*1` may be omitted on
// input. Example: `w^2*3+w*1+5`.
class Ordinal {
 public:
  using Term = std::pair<Ordinal, std::uint64_t>;  // (exponent, coefficient)

  Ordinal() = default;  // zero

  // Validating constructor. Throws std::invalid_argument when exponents are
  // not strictly decreasing or a coefficient is zero, naming the offending
  // term index. Never reorders or merges.
  static Ordinal make(std::vector<Term> terms);

  static Ordinal natural(std::uint64_t k);
  static Ordinal omega();

  // w^e * c as a single-term normal form (c >= 1).
  static Ordinal omega_pow(const Ordinal& e, std::uint64_t c);

  bool is_zero() const { return terms_.empty(); }
  bool is_natural() const;
  std::uint64_t as_natural() const;  // requires is_natural()
  const std::vector<Term>& terms() const { return terms_; }

  std::strong_ordering operator<=>(const Ordinal& rhs) const;
  bool operator==(const Ordinal& rhs) const { return (*this <=> rhs) == 0; }

  std::string str() const;
  static Ordinal parse(std::string_view text);

  // Flat self-delimiting encoding as naturals, embeddable in run payloads.
  void encode(std::vector<std::uint64_t>& out) const;
  static Ordinal decode(const std::vector<std::uint64_t>& in, std::size_t& pos);

 private:
  std::vector<Term> terms_;
};

// nullopt when seq[0] > seq[1] > ... (vacuously for < 2 elements);
// otherwise the index of the first element that fails to descend.
std::optional<std::size_t> validate_strictly_decreasing(
    const std::vector<Ordinal>& seq);

}  // namespace mindchange
