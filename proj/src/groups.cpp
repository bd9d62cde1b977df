#include "ringlab/groups.hpp"

#include <algorithm>
#include <array>

namespace ringlab {

std::shared_ptr<const FiniteGroup> FiniteGroup::create(
    std::size_t size, std::string label,
    const std::function<GIndex(GIndex, GIndex)>& compose) {
  if (size == 0) throw ring_error(label + ": a group needs an element");
  auto G = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  G->size_ = size;
  G->label_ = std::move(label);
  G->table_.resize(size * size);
  for (GIndex a = 0; a < size; ++a) {
    for (GIndex b = 0; b < size; ++b) {
      GIndex c = compose(a, b);
      if (c >= size) throw ring_error(G->label_ + ": composition out of range");
      G->table_[std::size_t(a) * size + b] = c;
    }
  }
  // identity at index 0 by convention
  for (GIndex a = 0; a < size; ++a) {
    if (G->compose(0, a) != a || G->compose(a, 0) != a) {
      throw ring_error(G->label_ + ": index 0 is not an identity");
    }
  }
  G->identity_ = 0;
  G->inverse_.assign(size, size);
  for (GIndex a = 0; a < size; ++a) {
    for (GIndex b = 0; b < size; ++b) {
      if (G->compose(a, b) == 0 && G->compose(b, a) == 0) {
        G->inverse_[a] = b;
        break;
      }
    }
    if (G->inverse_[a] == size) {
      throw ring_error(G->label_ + ": element without inverse");
    }
  }
  for (GIndex a = 0; a < size; ++a) {
    for (GIndex b = 0; b < size; ++b) {
      for (GIndex c = 0; c < size; ++c) {
        if (G->compose(G->compose(a, b), c) != G->compose(a, G->compose(b, c))) {
          throw ring_error(G->label_ + ": composition is not associative");
        }
      }
    }
  }
  return G;
}

GroupPtr make_cyclic(unsigned n) {
  if (n == 0) throw ring_error("cyclic group needs n >= 1");
  return FiniteGroup::create(n, "C" + std::to_string(n),
                             [n](GIndex a, GIndex b) { return (a + b) % n; });
}

GroupPtr make_group_product(const GroupPtr& G, const GroupPtr& H) {
  std::size_t gs = G->size(), hs = H->size();
  std::string label = G->label() + " x " + H->label();
  GroupPtr g = G, h = H;
  return FiniteGroup::create(
      gs * hs, label, [g, h, hs](GIndex a, GIndex b) {
        GIndex a1 = a / hs, a2 = a % hs, b1 = b / hs, b2 = b % hs;
        return static_cast<GIndex>(g->compose(a1, b1) * hs +
                                   h->compose(a2, b2));
      });
}

GroupPtr make_dihedral(unsigned n) {
  if (n == 0) throw ring_error("dihedral group needs n >= 1");
  return FiniteGroup::create(
      2 * n, "D" + std::to_string(n), [n](GIndex x, GIndex y) -> GIndex {
        bool rx = x < n, ry = y < n;
        if (rx && ry) return (x + y) % n;                    // r^x r^y
        if (rx && !ry) return n + ((y - n + n - x) % n);     // r^x (s r^j) = s r^{j-x}
        if (!rx && ry) return n + ((x - n + y) % n);         // (s r^i) r^y = s r^{i+y}
        return ((y - n) + n - (x - n)) % n;                  // (s r^i)(s r^j) = r^{j-i}
      });
}

GroupPtr make_quaternion8() {
  // letter multiplication: result letter and extra sign
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kTable{{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},   // 1 * x
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},   // i * {1,i,j,k}
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},   // j * {1,i,j,k}
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},   // k * {1,i,j,k}
  }};
  return FiniteGroup::create(8, "Q8", [](GIndex x, GIndex y) -> GIndex {
    int lx = x / 2, sx = x % 2, ly = y / 2, sy = y % 2;
    auto [lz, sz] = kTable[lx][ly];
    return static_cast<GIndex>(lz * 2 + ((sx + sy + sz) % 2));
  });
}

GroupPtr make_symmetric3() {
  static const std::array<std::array<GIndex, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [](const std::array<GIndex, 3>& p) -> GIndex {
    for (GIndex i = 0; i < 6; ++i) {
      if (perms[i] == p) return i;
    }
    return 6;
  };
  return FiniteGroup::create(6, "S3", [index_of](GIndex a, GIndex b) {
    const auto& f = perms[a];
    const auto& g = perms[b];
    return index_of({f[g[0]], f[g[1]], f[g[2]]});
  });
}

std::uint32_t element_order(const FiniteGroup& G, GIndex g) {
  std::uint32_t n = 1;
  GIndex x = g;
  while (x != G.identity()) {
    x = G.compose(x, g);
    ++n;
  }
  return n;
}

bool is_p_group(const FiniteGroup& G, std::uint32_t p) {
  for (GIndex g = 0; g < G.size(); ++g) {
    std::uint32_t n = element_order(G, g);
    while (n % p == 0) n /= p;
    if (n != 1) return false;
  }
  return true;
}

std::vector<GIndex> group_center(const FiniteGroup& G) {
  std::vector<GIndex> out;
  for (GIndex g = 0; g < G.size(); ++g) {
    bool central = true;
    for (GIndex h = 0; h < G.size(); ++h) {
      if (G.compose(g, h) != G.compose(h, g)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(g);
  }
  return out;
}

bool is_nilpotent_group(const FiniteGroup& G) {
  // upper central series: Z_{i+1} = {g : [g,h] in Z_i for all h}
  std::vector<std::uint8_t> in(G.size(), 0);
  in[G.identity()] = 1;
  std::size_t count = 1;
  while (count < G.size()) {
    std::vector<GIndex> next;
    for (GIndex g = 0; g < G.size(); ++g) {
      if (in[g]) continue;
      bool ok = true;
      for (GIndex h = 0; h < G.size(); ++h) {
        GIndex comm = G.compose(G.compose(G.compose(g, h), G.inverse(g)),
                                G.inverse(h));
        if (!in[comm]) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(g);
    }
    if (next.empty()) return false;  // series stalled below G
    for (GIndex g : next) in[g] = 1;
    count += next.size();
  }
  return true;
}

}  // namespace ringlab
