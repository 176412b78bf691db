#include "wreathbase/orbits.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace wb::orbits {

namespace {

std::uint64_t tuple_count(std::uint64_t base, unsigned m, std::uint64_t budget)
{
  const auto n = checked_pow(base, m, budget);
  if (!n)
    throw BudgetExceeded("tuple count " + std::to_string(base) + "^" + std::to_string(m) +
                         " exceeds budget " + std::to_string(budget));
  return *n;
}

class UnionFind {
public:
  explicit UnionFind(std::uint64_t n)
  {
    if (n > std::numeric_limits<std::uint32_t>::max())
      throw BudgetExceeded("tuple space of " + std::to_string(n) + " exceeds 32-bit indexing");
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x)
  {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::uint32_t> parent_;
};

// Vectors of F_q^d as integers < q^d with precomputed addition and scaling.
struct VectorSpace {
  gf::FiniteField field;
  unsigned dim;
  std::uint32_t size;
  std::vector<std::uint32_t> add;   // size*size
  std::vector<std::uint32_t> scale; // q*size

  VectorSpace(gf::FiniteField f, unsigned d)
      : field(f), dim(d), size(static_cast<std::uint32_t>(*checked_pow(f.q(), d)))
  {
    const auto q = f.q();
    add.resize(std::size_t(size) * size);
    scale.resize(std::size_t(q) * size);
    for (std::uint32_t a = 0; a < size; ++a) {
      const auto x = coords(a);
      for (std::uint32_t b = 0; b < size; ++b) {
        const auto y = coords(b);
        std::vector<std::uint32_t> z(d);
        for (unsigned i = 0; i < d; ++i)
          z[i] = f.add(x[i], y[i]);
        add[std::size_t(a) * size + b] = encode(z);
      }
      for (std::uint32_t c = 0; c < q; ++c) {
        std::vector<std::uint32_t> z(d);
        for (unsigned i = 0; i < d; ++i)
          z[i] = f.mul(c, x[i]);
        scale[std::size_t(c) * size + a] = encode(z);
      }
    }
  }

  std::vector<std::uint32_t> coords(std::uint32_t v) const
  {
    std::vector<std::uint32_t> out(dim);
    for (unsigned i = 0; i < dim; ++i) {
      out[i] = v % field.q();
      v /= field.q();
    }
    return out;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& x) const
  {
    std::uint32_t v = 0;
    for (unsigned i = dim; i-- > 0;)
      v = v * field.q() + x[i];
    return v;
  }

  // Size of span{vs} by closure under addition of scalar multiples.
  std::size_t span_size(std::span<const std::uint32_t> vs, std::vector<char>& member,
                        std::vector<std::uint32_t>& elems) const
  {
    std::fill(member.begin(), member.end(), 0);
    elems.assign(1, 0);
    member[0] = 1;
    const auto q = field.q();
    for (auto v : vs) {
      if (member[v])
        continue;
      const std::size_t before = elems.size();
      for (std::uint32_t c = 1; c < q; ++c) {
        const auto cv = scale[std::size_t(c) * size + v];
        for (std::size_t i = 0; i < before; ++i) {
          const auto w = add[std::size_t(elems[i]) * size + cv];
          if (!member[w]) {
            member[w] = 1;
            elems.push_back(w);
          }
        }
      }
    }
    return elems.size();
  }
};

} // namespace

Nat count_spanning_orbits_canonical(unsigned d, std::uint64_t q, unsigned m, std::uint64_t budget,
                                    std::span<const unsigned> position_order)
{
  const auto field = gf::FiniteField::of_order(q);
  const std::uint64_t total = tuple_count(q, d * m, budget);
  if (!position_order.empty()) {
    std::vector<char> seen(m, 0);
    if (position_order.size() != m)
      throw std::invalid_argument("position order must have length m");
    for (auto p : position_order) {
      if (p >= m || seen[p])
        throw std::invalid_argument("position order is not a permutation");
      seen[p] = 1;
    }
  }

  std::unordered_set<linalg::SubspaceCanon, linalg::SubspaceCanonHash> classes;
  linalg::MatGF a(field, m, d);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned pos = 0; pos < m; ++pos) {
      const unsigned row = position_order.empty() ? pos : position_order[pos];
      for (unsigned c = 0; c < d; ++c) {
        a.code(row, c) = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
    }
    auto canon = linalg::column_space_canon(a);
    if (canon.dim == d)
      classes.insert(std::move(canon));
  }
  return classes.size();
}

Nat count_spanning_orbits_partition(unsigned d, std::uint64_t q, unsigned m, std::uint64_t budget,
                                    std::uint64_t gl_cap)
{
  const auto field = gf::FiniteField::of_order(q);
  const VectorSpace space(field, d);
  const std::uint64_t total = tuple_count(space.size, m, budget);
  const auto group = linalg::all_gl(d, field, gl_cap);

  UnionFind uf(total);
  std::vector<char> classified(total, 0);
  std::vector<char> member(space.size);
  std::vector<std::uint32_t> elems;
  std::vector<std::uint32_t> tuple(m);
  std::vector<std::vector<std::uint32_t>> coords(m);

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (classified[idx])
      continue;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      tuple[i] = static_cast<std::uint32_t>(rest % space.size);
      rest /= space.size;
    }
    if (space.span_size(tuple, member, elems) != space.size)
      continue;
    for (unsigned i = 0; i < m; ++i)
      coords[i] = space.coords(tuple[i]);
    for (const auto& g : group) {
      // image tuple: each row vector v -> v g
      std::uint64_t image = 0;
      for (unsigned i = m; i-- > 0;) {
        std::vector<std::uint32_t> w(d, 0);
        for (unsigned r = 0; r < d; ++r) {
          const auto vr = coords[i][r];
          if (vr == 0)
            continue;
          for (unsigned c = 0; c < d; ++c)
            w[c] = field.add(w[c], field.mul(vr, g.code(r, c)));
        }
        image = image * space.size + space.encode(w);
      }
      uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(image));
      classified[image] = 1;
    }
  }

  Nat classes = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (classified[idx] && uf.find(static_cast<std::uint32_t>(idx)) == idx)
      ++classes;
  return classes;
}

ExplicitAction::ExplicitAction(std::size_t num_points, std::vector<std::uint32_t> table)
    : points_(num_points), table_(std::move(table))
{
  if (points_ == 0 || table_.size() % points_ != 0)
    throw std::invalid_argument("action table size is not a multiple of the point count");
  for (auto x : table_)
    if (x >= points_)
      throw std::invalid_argument("action table entry out of range");
}

ExplicitAction ExplicitAction::gl_on_vectors(unsigned d, gf::FiniteField field, std::uint64_t cap)
{
  const VectorSpace space(field, d);
  std::vector<std::uint32_t> table;
  linalg::enumerate_gl(
      d, field,
      [&](const linalg::MatGF& g) {
        for (std::uint32_t v = 0; v < space.size; ++v) {
          const auto x = space.coords(v);
          std::vector<std::uint32_t> w(d, 0);
          for (unsigned r = 0; r < d; ++r)
            for (unsigned c = 0; c < d; ++c)
              w[c] = field.add(w[c], field.mul(x[r], g.code(r, c)));
          table.push_back(space.encode(w));
        }
      },
      cap);
  return ExplicitAction(space.size, std::move(table));
}

ExplicitAction ExplicitAction::trivial(std::size_t num_points)
{
  std::vector<std::uint32_t> table(num_points);
  std::iota(table.begin(), table.end(), 0u);
  return ExplicitAction(num_points, std::move(table));
}

Nat count_multibase_orbits(const ExplicitAction& h, unsigned m, std::uint64_t budget)
{
  const std::size_t n = h.num_points();
  const std::size_t order = h.num_elements();
  const std::uint64_t total = tuple_count(n, m, budget);
  const std::size_t words = (order + 63) / 64;

  // fixers[x] = bitset of elements fixing x
  std::vector<std::uint64_t> fixers(n * words, 0);
  for (std::size_t e = 0; e < order; ++e)
    for (std::uint32_t x = 0; x < n; ++x)
      if (h.image(e, x) == x)
        fixers[x * words + e / 64] |= std::uint64_t{1} << (e % 64);

  UnionFind uf(total);
  std::vector<char> classified(total, 0);
  std::vector<std::uint32_t> tuple(m);
  std::vector<std::uint64_t> acc(words);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (classified[idx])
      continue;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < m; ++i) {
      tuple[i] = static_cast<std::uint32_t>(rest % n);
      rest /= n;
    }
    std::fill(acc.begin(), acc.end(), ~std::uint64_t{0});
    for (auto x : tuple)
      for (std::size_t w = 0; w < words; ++w)
        acc[w] &= fixers[x * words + w];
    std::size_t fixing = 0;
    for (std::size_t w = 0; w < words; ++w) {
      if (w + 1 == words && order % 64)
        acc[w] &= (std::uint64_t{1} << (order % 64)) - 1;
      fixing += static_cast<std::size_t>(__builtin_popcountll(acc[w]));
    }
    if (fixing != 1)
      continue;
    for (std::size_t e = 0; e < order; ++e) {
      std::uint64_t image = 0;
      for (unsigned i = m; i-- > 0;)
        image = image * n + h.image(e, tuple[i]);
      uf.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(image));
      classified[image] = 1;
    }
  }

  Nat classes = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (classified[idx] && uf.find(static_cast<std::uint32_t>(idx)) == idx)
      ++classes;
  return classes;
}

} // namespace wb::orbits
