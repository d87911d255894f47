#include "iwagraph/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "iwagraph/errors.hpp"

namespace iwagraph {

namespace {

// Quaternion units as integer 4-vectors (w, x, y, z).
using Quat = std::array<int, 4>;

Quat quat_mul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

}  // namespace

void FiniteGroup::build_inverses() {
  std::uint32_t n = size();
  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw input_error("group table: one-sided inverse");
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw input_error("group table: missing inverse");
  }
}

FiniteGroup FiniteGroup::abelian(std::vector<std::uint32_t> orders) {
  if (orders.empty()) orders.push_back(1);
  for (auto n : orders)
    if (n == 0) throw input_error("abelian group: zero order");
  std::uint32_t n = 1;
  for (auto o : orders) n *= o;
  FiniteGroup g;
  g.abelian_orders_ = orders;
  g.names_.resize(n);
  g.table_.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::uint32_t a = 0; a < n; ++a) {
    auto ca = [&] {
      std::vector<std::uint32_t> c(orders.size());
      std::uint32_t rest = a;
      for (std::size_t i = orders.size(); i-- > 0;) {
        c[i] = rest % orders[i];
        rest /= orders[i];
      }
      return c;
    }();
    std::string name;
    for (std::size_t i = 0; i < ca.size(); ++i)
      name += (i ? "," : "") + std::to_string(ca[i]);
    g.names_[a] = name;
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t rest = b, elem = 0;
      std::vector<std::uint32_t> cb(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        cb[i] = rest % orders[i];
        rest /= orders[i];
      }
      for (std::size_t i = 0; i < orders.size(); ++i)
        elem = elem * orders[i] + (ca[i] + cb[i]) % orders[i];
      g.table_[a][b] = elem;
    }
  }
  g.build_inverses();
  return g;
}

std::vector<std::uint32_t> FiniteGroup::abelian_coords(std::uint32_t a) const {
  if (!is_abelian()) throw std::logic_error("abelian_coords: table-only group");
  std::vector<std::uint32_t> c(abelian_orders_.size());
  for (std::size_t i = abelian_orders_.size(); i-- > 0;) {
    c[i] = a % abelian_orders_[i];
    a /= abelian_orders_[i];
  }
  return c;
}

std::uint32_t FiniteGroup::abelian_element(const std::vector<std::uint32_t>& coords) const {
  if (coords.size() != abelian_orders_.size())
    throw std::invalid_argument("abelian_element: arity mismatch");
  std::uint32_t a = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    a = a * abelian_orders_[i] + coords[i] % abelian_orders_[i];
  return a;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<std::uint32_t>> table) {
  std::uint32_t n = static_cast<std::uint32_t>(names.size());
  if (n == 0 || table.size() != n) throw input_error("group table: bad size");
  for (const auto& row : table) {
    if (row.size() != n) throw input_error("group table: ragged row");
    for (auto v : row)
      if (v >= n) throw input_error("group table: entry out of range");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw input_error("group table: element 0 is not the identity");
  // Full associativity check; orders here are tiny.
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw input_error("group table: not associative");
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.build_inverses();
  return g;
}

FiniteGroup FiniteGroup::quaternion8() {
  const std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  const std::vector<Quat> units{{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},
                                {0, -1, 0, 0}, {0, 0, 1, 0},  {0, 0, -1, 0},
                                {0, 0, 0, 1},  {0, 0, 0, -1}};
  auto find = [&](const Quat& q) {
    for (std::size_t i = 0; i < units.size(); ++i)
      if (units[i] == q) return static_cast<std::uint32_t>(i);
    throw std::logic_error("quaternion8: product outside unit set");
  };
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b)
      table[a][b] = find(quat_mul(units[a], units[b]));
  return from_table(names, table);
}

FiniteGroup FiniteGroup::dihedral8() {
  // Element (rot, flip) is r^rot s^flip.
  auto idx = [](int rot, int flip) {
    return static_cast<std::uint32_t>(flip * 4 + rot);
  };
  std::vector<std::string> names(8);
  for (int flip = 0; flip < 2; ++flip)
    for (int rot = 0; rot < 4; ++rot) {
      std::string n = rot == 0 ? "" : (rot == 1 ? "r" : "r" + std::to_string(rot));
      if (flip) n += "s";
      if (n.empty()) n = "1";
      names[idx(rot, flip)] = n;
    }
  std::vector<std::vector<std::uint32_t>> table(8, std::vector<std::uint32_t>(8));
  for (int ra = 0; ra < 4; ++ra)
    for (int fa = 0; fa < 2; ++fa)
      for (int rb = 0; rb < 4; ++rb)
        for (int fb = 0; fb < 2; ++fb) {
          // r^ra s^fa r^rb s^fb = r^{ra + (fa ? -rb : rb)} s^{fa ^ fb}
          int rot = ((ra + (fa ? -rb : rb)) % 4 + 4) % 4;
          table[idx(ra, fa)][idx(rb, fb)] = idx(rot, fa ^ fb);
        }
  return from_table(names, table);
}

int FiniteGroup::element_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

std::vector<std::uint32_t> generated_subgroup(const FiniteGroup& g,
                                              const std::vector<std::uint32_t>& gens) {
  std::set<std::uint32_t> closure{g.identity()};
  std::vector<std::uint32_t> frontier{g.identity()};
  for (auto x : gens)
    if (closure.insert(x).second) frontier.push_back(x);
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (auto x : frontier) {
      for (auto y : gens) {
        std::uint32_t z = g.mul(x, y);
        if (closure.insert(z).second) next.push_back(z);
      }
    }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::uint32_t na = a.size(), nb = b.size();
  std::vector<std::string> names(static_cast<std::size_t>(na) * nb);
  std::vector<std::vector<std::uint32_t>> table(
      static_cast<std::size_t>(na) * nb,
      std::vector<std::uint32_t>(static_cast<std::size_t>(na) * nb));
  auto idx = [nb](std::uint32_t x, std::uint32_t y) { return x * nb + y; };
  for (std::uint32_t xa = 0; xa < na; ++xa)
    for (std::uint32_t ya = 0; ya < nb; ++ya) {
      names[idx(xa, ya)] = a.name(xa) + "|" + b.name(ya);
      for (std::uint32_t xb = 0; xb < na; ++xb)
        for (std::uint32_t yb = 0; yb < nb; ++yb)
          table[idx(xa, ya)][idx(xb, yb)] = idx(a.mul(xa, xb), b.mul(ya, yb));
    }
  return FiniteGroup::from_table(std::move(names), std::move(table));
}

}  // namespace iwagraph
