#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iwagraph {

// A finite group given by its multiplication table.  Element 0 is always the
// identity.  Abelian groups additionally carry their invariant-factor orders,
// with elements enumerated in mixed radix (last coordinate fastest), which is
// what the character machinery keys on.
class FiniteGroup {
 public:
  // Z/n1 x ... x Z/nr.
  static FiniteGroup abelian(std::vector<std::uint32_t> orders);
  // Validates the table (identity, inverses, closure, associativity).
  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<std::uint32_t>> table);
  // Quaternion group {1, -1, i, -i, j, -j, k, -k}; generators i and j.
  static FiniteGroup quaternion8();
  // Dihedral group of order 8, r^4 = s^2 = 1, s r s = r^-1;
  // elements 1, r, r2, r3, s, rs, r2s, r3s.
  static FiniteGroup dihedral8();

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const std::string& name(std::uint32_t a) const { return names_[a]; }
  int element_index(const std::string& name) const;  // -1 when absent

  bool is_abelian() const { return !abelian_orders_.empty(); }
  const std::vector<std::uint32_t>& abelian_orders() const { return abelian_orders_; }
  // Coordinates of an abelian element in the Z/n1 x ... x Z/nr presentation.
  std::vector<std::uint32_t> abelian_coords(std::uint32_t a) const;
  std::uint32_t abelian_element(const std::vector<std::uint32_t>& coords) const;

 private:
  FiniteGroup() = default;
  void build_inverses();

  std::vector<std::string> names_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> abelian_orders_;  // empty for table-only groups
};

// Subgroup generated by `gens`, as sorted element indices (used for the
// net-voltage connectivity criterion).
std::vector<std::uint32_t> generated_subgroup(const FiniteGroup& g,
                                              const std::vector<std::uint32_t>& gens);

// Direct product; names are "a|b".  Used for checking Galois product
// structure of composite covers.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace iwagraph
