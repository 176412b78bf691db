#include "wreathbase/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wb::perm {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images))
{
  std::vector<char> seen(images_.size(), 0);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image list is not a permutation");
    seen[x] = 1;
  }
}

Perm Perm::identity(std::size_t degree)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles)
{
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto a = cycle[i];
      if (a >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(a + 1) + " exceeds degree " +
                                    std::to_string(degree));
      if (used[a])
        throw std::invalid_argument("point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = 1;
      im[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[images_[i]] = static_cast<std::uint32_t>(i);
  return Perm(std::move(im));
}

Perm Perm::then(const Perm& next) const
{
  if (next.degree() != degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    im[i] = next.images_[images_[i]];
  return Perm(std::move(im));
}

std::string Perm::to_cycle_string() const
{
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first)
        out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

namespace {

std::uint64_t hash_images(const std::uint16_t* p, std::size_t n)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h ^ (h >> 29);
}

// Open-addressing set of element indices keyed by their image lists.
class ElementIndex {
public:
  ElementIndex(const std::vector<std::uint16_t>& flat, std::size_t degree)
      : flat_(flat), degree_(degree), slots_(64, kEmpty)
  {}

  // Looks up the candidate stored at the end of `flat_` (index `candidate`);
  // inserts it if absent. Returns true if it was new.
  bool insert_candidate(std::uint32_t candidate)
  {
    if ((count_ + 1) * 2 > slots_.size())
      grow();
    const auto* p = flat_.data() + std::size_t(candidate) * degree_;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_images(p, degree_) & mask;; s = (s + 1) & mask) {
      if (slots_[s] == kEmpty) {
        slots_[s] = candidate;
        ++count_;
        return true;
      }
      const auto* o = flat_.data() + std::size_t(slots_[s]) * degree_;
      if (std::equal(p, p + degree_, o))
        return false;
    }
  }

private:
  static constexpr std::uint32_t kEmpty = UINT32_MAX;

  void grow()
  {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    const std::size_t mask = slots_.size() - 1;
    for (auto idx : old) {
      if (idx == kEmpty)
        continue;
      const auto* p = flat_.data() + std::size_t(idx) * degree_;
      std::size_t s = hash_images(p, degree_) & mask;
      while (slots_[s] != kEmpty)
        s = (s + 1) & mask;
      slots_[s] = idx;
    }
  }

  const std::vector<std::uint16_t>& flat_;
  std::size_t degree_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

} // namespace

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Perm> generators,
                                     std::uint64_t cap)
{
  if (degree > 65535)
    throw std::invalid_argument("degree too large");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
  PermGroup grp;
  grp.degree_ = degree;
  grp.generators_ = std::move(generators);
  if (degree == 0)
    return grp;

  auto& flat = grp.flat_;
  flat.reserve(degree * 64);
  for (std::size_t i = 0; i < degree; ++i)
    flat.push_back(static_cast<std::uint16_t>(i));
  ElementIndex index(flat, degree);
  index.insert_candidate(0);

  std::vector<std::vector<std::uint16_t>> gens;
  for (const auto& g : grp.generators_)
    gens.emplace_back(g.images().begin(), g.images().end());

  std::vector<std::uint16_t> scratch(degree);
  for (std::size_t head = 0; head * degree < flat.size(); ++head) {
    for (const auto& g : gens) {
      const std::uint16_t* x = flat.data() + head * degree;
      for (std::size_t i = 0; i < degree; ++i)
        scratch[i] = g[x[i]];
      const auto candidate = static_cast<std::uint32_t>(flat.size() / degree);
      flat.insert(flat.end(), scratch.begin(), scratch.end());
      if (!index.insert_candidate(candidate))
        flat.resize(flat.size() - degree);
      else if (flat.size() / degree > cap)
        throw BudgetExceeded("group order exceeds cap " + std::to_string(cap));
    }
  }
  flat.shrink_to_fit();
  return grp;
}

Perm PermGroup::element_perm(std::size_t index) const
{
  auto e = element(index);
  return Perm(std::vector<std::uint32_t>(e.begin(), e.end()));
}

bool PermGroup::contains(const Perm& g) const
{
  if (g.degree() != degree_)
    return false;
  for (std::size_t k = 0; k < order(); ++k) {
    auto e = element(k);
    if (std::equal(e.begin(), e.end(), g.images().begin()))
      return true;
  }
  return false;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const
{
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(degree_, 0);
  for (std::uint32_t start = 0; start < degree_; ++start) {
    if (seen[start])
      continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : generators_) {
        const auto y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::size_t PermGroup::stabilizer_order(std::uint32_t point) const
{
  std::size_t n = 0;
  for (std::size_t k = 0; k < order(); ++k)
    if (element(k)[point] == point)
      ++n;
  return n;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbits().size() == 1; }

std::vector<std::uint32_t> PermGroup::minimal_block(std::uint32_t beta) const
{
  std::vector<std::uint32_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending{{0, beta}};
  parent[find(beta)] = find(0);
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (const auto& g : generators_) {
      const auto ra = find(g[a]);
      const auto rb = find(g[b]);
      if (ra != rb) {
        parent[rb] = ra;
        pending.emplace_back(g[a], g[b]);
      }
    }
  }
  std::vector<std::uint32_t> block;
  const auto root = find(0);
  for (std::uint32_t i = 0; i < degree_; ++i)
    if (find(i) == root)
      block.push_back(i);
  return block;
}

bool PermGroup::is_primitive() const
{
  if (!is_transitive())
    return false;
  for (std::uint32_t beta = 1; beta < degree_; ++beta)
    if (minimal_block(beta).size() != degree_)
      return false;
  return true;
}

bool PermGroup::is_semiregular() const
{
  for (std::size_t k = 1; k < order(); ++k) {
    auto e = element(k);
    for (std::size_t i = 0; i < degree_; ++i)
      if (e[i] == i)
        return false;
  }
  return true;
}

bool PermGroup::contains_alternating() const
{
  if (degree_ <= 2)
    return true;
  return Nat(order()) * 2 >= factorial(static_cast<unsigned>(degree_));
}

Predicates predicates(const PermGroup& g)
{
  return {g.is_transitive(), g.is_primitive(), g.is_semiregular()};
}

namespace {
using Cycles = std::vector<std::vector<std::uint32_t>>;

std::vector<std::uint32_t> range_cycle(std::uint32_t begin, std::uint32_t end)
{
  std::vector<std::uint32_t> c(end - begin);
  std::iota(c.begin(), c.end(), begin);
  return c;
}
} // namespace

PermGroup symmetric(std::size_t n, std::uint64_t cap)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    if (n >= 3)
      gens.push_back(Perm::from_cycles(n, {range_cycle(0, static_cast<std::uint32_t>(n))}));
  }
  return PermGroup::from_generators(n, std::move(gens), cap);
}

PermGroup alternating(std::size_t n, std::uint64_t cap)
{
  std::vector<Perm> gens;
  for (std::uint32_t i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup::from_generators(n, std::move(gens), cap);
}

PermGroup cyclic(std::size_t n, std::uint64_t cap)
{
  std::vector<Perm> gens;
  if (n >= 2)
    gens.push_back(Perm::from_cycles(n, {range_cycle(0, static_cast<std::uint32_t>(n))}));
  return PermGroup::from_generators(n, std::move(gens), cap);
}

PermGroup dihedral(std::size_t n, std::uint64_t cap)
{
  std::vector<Perm> gens;
  if (n >= 2)
    gens.push_back(Perm::from_cycles(n, {range_cycle(0, static_cast<std::uint32_t>(n))}));
  if (n >= 3) {
    Cycles refl;
    for (std::uint32_t i = 1; 2 * i < n; ++i)
      refl.push_back({i, static_cast<std::uint32_t>(n - i)});
    gens.push_back(Perm::from_cycles(n, refl));
  }
  return PermGroup::from_generators(n, std::move(gens), cap);
}

PermGroup affine_line(std::size_t p, std::uint64_t cap)
{
  if (!is_prime(p))
    throw std::invalid_argument("affine_line needs a prime degree");
  std::vector<Perm> gens{Perm::from_cycles(p, {range_cycle(0, static_cast<std::uint32_t>(p))})};
  // x -> g x for a primitive root g
  for (std::uint32_t g = 2; g < p; ++g) {
    std::uint32_t x = g;
    unsigned ord = 1;
    while (x != 1) {
      x = static_cast<std::uint32_t>((std::uint64_t(x) * g) % p);
      ++ord;
    }
    if (ord == p - 1) {
      std::vector<std::uint32_t> im(p);
      for (std::uint32_t i = 0; i < p; ++i)
        im[i] = static_cast<std::uint32_t>((std::uint64_t(i) * g) % p);
      gens.emplace_back(std::move(im));
      break;
    }
  }
  return PermGroup::from_generators(p, std::move(gens), cap);
}

PermGroup psl2_5()
{
  // points 0..4 are GF(5), point 5 is infinity
  return PermGroup::from_generators(6, {Perm::from_cycles(6, {{0, 1, 2, 3, 4}}), // x -> x + 1
                                        Perm::from_cycles(6, {{1, 4}, {2, 3}}),   // x -> 4x
                                        Perm::from_cycles(6, {{5, 0}, {1, 4}})}); // x -> -1/x
}

PermGroup wreath_imprimitive(std::size_t m, std::size_t r, std::uint64_t cap)
{
  if (m < 1 || r < 1)
    throw std::invalid_argument("wreath parameters must be positive");
  const std::size_t n = m * r;
  std::vector<Perm> gens;
  if (m >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    if (m >= 3)
      gens.push_back(Perm::from_cycles(n, {range_cycle(0, static_cast<std::uint32_t>(m))}));
  }
  if (r >= 2) {
    Cycles swap;
    for (std::uint32_t i = 0; i < m; ++i)
      swap.push_back({i, static_cast<std::uint32_t>(m + i)});
    gens.push_back(Perm::from_cycles(n, swap));
    if (r >= 3) {
      Cycles rot;
      for (std::uint32_t i = 0; i < m; ++i) {
        std::vector<std::uint32_t> c;
        for (std::uint32_t j = 0; j < r; ++j)
          c.push_back(static_cast<std::uint32_t>(j * m + i));
        rot.push_back(std::move(c));
      }
      gens.push_back(Perm::from_cycles(n, rot));
    }
  }
  return PermGroup::from_generators(n, std::move(gens), cap);
}

} // namespace wb::perm
