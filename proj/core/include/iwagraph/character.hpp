#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwagraph/cyclotomic.hpp"
#include "iwagraph/group.hpp"

namespace iwagraph {

// Character of a finite abelian p-group Z/n_1 x ... x Z/n_r (each n_j a power
// of the same prime p): generator_j maps to zeta_{n_j}^{k_j}.  Values live in
// Q(zeta_{p^N}) with p^N the group exponent.
class Character {
 public:
  Character(const FiniteGroup& group, std::uint32_t p, std::vector<std::uint32_t> images);

  std::uint32_t prime() const { return p_; }
  std::uint32_t level() const { return level_; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_trivial() const;

  CyclotomicNumber value(std::uint32_t element) const;
  CyclotomicNumber value_at_coords(const std::vector<std::uint32_t>& coords) const;
  Character conjugate() const;

  std::string str() const;

 private:
  const FiniteGroup* group_;
  std::uint32_t p_;
  std::uint32_t level_;                 // group exponent is p^level_
  std::vector<std::uint32_t> orders_;   // copy of the invariant factors
  std::vector<std::uint32_t> images_;   // k_j, reduced mod n_j
};

// All |G| characters, trivial character first (images all zero, enumerated in
// mixed radix).  Validates that G is abelian with p-power invariant factors.
std::vector<Character> all_characters(const FiniteGroup& group, std::uint32_t p);

}  // namespace iwagraph
