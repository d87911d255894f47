#include "iwagraph/character.hpp"

#include <sstream>

#include "iwagraph/errors.hpp"

namespace iwagraph {

Character::Character(const FiniteGroup& group, std::uint32_t p,
                     std::vector<std::uint32_t> images)
    : group_(&group), p_(p), level_(0), images_(std::move(images)) {
  if (!group.is_abelian()) throw input_error("Character: group is not abelian");
  if (!is_prime(p)) throw input_error("Character: p must be prime");
  orders_ = group.abelian_orders();
  if (images_.size() != orders_.size())
    throw input_error("Character: image arity mismatch");
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::uint32_t n = orders_[j], e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (n != 1) throw input_error("Character: group order is not a power of p");
    level_ = std::max(level_, e);
    images_[j] %= orders_[j];
  }
}

bool Character::is_trivial() const {
  for (auto k : images_)
    if (k != 0) return false;
  return true;
}

CyclotomicNumber Character::value_at_coords(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != orders_.size())
    throw std::invalid_argument("Character: coordinate arity mismatch");
  // psi(sigma) = prod_j zeta_{n_j}^{k_j s_j} = zeta_{p^N}^{sum (p^N / n_j) k_j s_j}.
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < level_; ++i) modulus *= p_;
  std::uint64_t expo = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    std::uint64_t stride = modulus / orders_[j];
    expo = (expo + stride * images_[j] % modulus * coords[j]) % modulus;
  }
  return CyclotomicNumber::zeta(p_, level_).pow(static_cast<long>(expo));
}

CyclotomicNumber Character::value(std::uint32_t element) const {
  return value_at_coords(group_->abelian_coords(element));
}

Character Character::conjugate() const {
  std::vector<std::uint32_t> conj(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    conj[j] = (orders_[j] - images_[j]) % orders_[j];
  return Character(*group_, p_, conj);
}

std::string Character::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < images_.size(); ++j)
    out << (j ? "," : "") << images_[j];
  out << ")";
  return out.str();
}

std::vector<Character> all_characters(const FiniteGroup& group, std::uint32_t p) {
  if (!group.is_abelian()) throw input_error("all_characters: group is not abelian");
  const auto& orders = group.abelian_orders();
  std::vector<Character> chars;
  std::vector<std::uint32_t> images(orders.size(), 0);
  while (true) {
    chars.emplace_back(group, p, images);
    std::size_t j = orders.size();
    while (j > 0) {
      --j;
      if (++images[j] < orders[j]) break;
      images[j] = 0;
      if (j == 0) return chars;
    }
    if (orders.empty()) return chars;
  }
}

}  // namespace iwagraph
