#include "wreathbase/distinguishing.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wb::dist {

Coloring canonical(std::span<const std::uint32_t> colors)
{
  Coloring out(colors.size());
  std::vector<std::uint32_t> relabel;
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const auto c = colors[i];
    if (c >= relabel.size())
      relabel.resize(c + 1, UINT32_MAX);
    if (relabel[c] == UINT32_MAX)
      relabel[c] = next++;
    out[i] = relabel[c];
  }
  return out;
}

namespace {

bool preserves(std::span<const std::uint16_t> e, std::span<const std::uint32_t> colors)
{
  for (std::size_t i = 0; i < e.size(); ++i)
    if (colors[e[i]] != colors[i])
      return false;
  return true;
}

// Checks colorings against a group, trying small-support elements first and
// remembering recent witnesses of non-distinguishing colorings.
class Checker {
public:
  explicit Checker(const PermGroup& g) : group_(g)
  {
    order_.resize(g.order() > 0 ? g.order() - 1 : 0);
    std::iota(order_.begin(), order_.end(), std::size_t{1});
    std::vector<std::uint32_t> support(g.order(), 0);
    for (std::size_t k = 1; k < g.order(); ++k) {
      auto e = g.element(k);
      for (std::size_t i = 0; i < e.size(); ++i)
        support[k] += e[i] != i;
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  }

  bool distinguishing(std::span<const std::uint32_t> colors)
  {
    ++checked_;
    for (std::size_t i = 0; i < recent_.size(); ++i)
      if (preserves(group_.element(recent_[i]), colors)) {
        std::rotate(recent_.begin(), recent_.begin() + static_cast<std::ptrdiff_t>(i),
                    recent_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        return false;
      }
    for (auto k : order_)
      if (preserves(group_.element(k), colors)) {
        recent_.insert(recent_.begin(), k);
        if (recent_.size() > 8)
          recent_.pop_back();
        return false;
      }
    return true;
  }

  std::uint64_t checked() const { return checked_; }

private:
  const PermGroup& group_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> recent_;
  std::uint64_t checked_ = 0;
};

// Visits every restricted growth string of length n with exactly k blocks.
template <typename Visit>
bool for_each_partition(std::size_t n, unsigned k, Visit&& visit)
{
  Coloring c(n, 0);
  // returns true to stop
  auto rec = [&](auto&& self, std::size_t pos, unsigned used) -> bool {
    if (pos == n)
      return used == k && visit(std::span<const std::uint32_t>(c));
    if (k - used > n - pos)
      return false;
    const unsigned top = std::min(used + 1, k);
    for (unsigned v = 0; v < top; ++v) {
      c[pos] = v;
      if (self(self, pos + 1, std::max(used, v + 1)))
        return true;
    }
    return false;
  };
  if (n == 0)
    return k == 0 && visit(std::span<const std::uint32_t>(c));
  return rec(rec, 0, 0);
}

} // namespace

bool coloring_is_distinguishing(const PermGroup& g, std::span<const std::uint32_t> colors)
{
  if (colors.size() != g.degree())
    throw std::invalid_argument("coloring length does not match group degree");
  for (std::size_t k = 1; k < g.order(); ++k)
    if (preserves(g.element(k), colors))
      return false;
  return true;
}

std::string DistResult::to_string() const
{
  if (exact())
    return std::to_string(lower);
  return "[" + std::to_string(lower) + ", " + std::to_string(upper) + "]";
}

DistResult distinguishing_number(const PermGroup& g, const SearchOptions& opts)
{
  const std::size_t n = g.degree();
  DistResult res;
  res.lower = 1;
  res.upper = static_cast<unsigned>(std::max<std::size_t>(n, 1));
  res.witness.resize(n);
  std::iota(res.witness.begin(), res.witness.end(), 0u);
  if (g.is_trivial()) {
    res.upper = 1;
    res.witness.assign(n, 0);
    return res;
  }

  Checker check(g);
  std::mt19937_64 rng(opts.seed);
  Coloring trial(n);
  for (unsigned k = 1; k <= n; ++k) {
    res.lower = k;
    if (k >= 2) {
      for (unsigned t = 0; t < opts.random_trials; ++t) {
        for (auto& c : trial)
          c = static_cast<std::uint32_t>(rng() % k);
        if (check.distinguishing(trial)) {
          res.upper = k;
          res.witness = canonical(trial);
          res.colorings_checked = check.checked();
          return res;
        }
      }
    }
    std::uint64_t visited = 0;
    bool exhausted = false;
    const bool found = for_each_partition(n, k, [&](std::span<const std::uint32_t> c) {
      if (++visited > opts.budget) {
        exhausted = true;
        return true;
      }
      if (check.distinguishing(c)) {
        res.witness.assign(c.begin(), c.end());
        return true;
      }
      return false;
    });
    res.colorings_checked = check.checked();
    if (exhausted)
      return res; // lower = k, upper from the discrete coloring
    if (found) {
      res.upper = k;
      return res;
    }
  }
  throw std::logic_error("discrete coloring was not distinguishing");
}

ChanResult chan_wreath_distnum(unsigned m, unsigned r)
{
  if (m < 1 || r < 1)
    throw std::invalid_argument("m and r must be positive");
  ChanResult out;
  unsigned d = m;
  while (binomial(d, m) < r)
    ++d;
  out.exact = d;
  // smallest d with (d/m)^m >= r, i.e. d^m >= r m^m
  const Nat target = Nat(r) * wb::pow(Nat(m), m);
  unsigned b = 1;
  while (wb::pow(Nat(b), m) < target)
    ++b;
  out.bound = b;
  return out;
}

CatalogReport primitive_catalog_check(const std::vector<CatalogEntry>& catalog,
                                      const SearchOptions& opts)
{
  CatalogReport rep;
  rep.all_ok = true;
  for (const auto& entry : catalog) {
    CatalogRow row;
    row.name = entry.name;
    row.degree = entry.group.degree();
    row.order = entry.group.order();
    if (!entry.group.is_primitive())
      row.rejection = "not primitive";
    else if (entry.group.contains_alternating())
      row.rejection = "contains the alternating group";
    row.accepted = row.rejection.empty();
    if (row.accepted) {
      row.value = distinguishing_number(entry.group, opts);
      rep.max_d = std::max(rep.max_d, row.value.upper);
      if (!row.value.exact() || row.value.upper > 4)
        rep.all_ok = false;
    } else {
      rep.all_ok = false;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<CatalogEntry> builtin_primitive_catalog()
{
  return {{"C5", perm::cyclic(5)},        {"D5", perm::dihedral(5)},
          {"AGL1_5", perm::affine_line(5)}, {"PSL2_5", perm::psl2_5()},
          {"C7", perm::cyclic(7)},        {"D7", perm::dihedral(7)}};
}

} // namespace wb::dist
