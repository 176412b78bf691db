#include "wreathbase/basesize.hpp"

#include <numeric>
#include <stdexcept>

#include "wreathbase/qbinom.hpp"

namespace wb::basesize {

unsigned base_size_closed_form(unsigned d, std::uint64_t q, unsigned dL)
{
  if (d < 1 || dL < 1)
    throw std::invalid_argument("d and d(L) must be positive");
  unsigned s = 0;
  while (qbinom::gaussian_binomial(d + s, d, q) < dL)
    ++s;
  return d + s;
}

unsigned ceil_log_ratio(unsigned d, std::uint64_t q, unsigned dL)
{
  if (d < 1 || dL < 1)
    throw std::invalid_argument("d and d(L) must be positive");
  require_prime_power(q);
  unsigned t = 0;
  const Nat step = wb::pow(Nat(q), d);
  Nat power = 1;
  while (power < dL) {
    power *= step;
    ++t;
  }
  return t;
}

LogForm base_size_log_form(unsigned d, std::uint64_t q, unsigned dL)
{
  LogForm out;
  out.b = base_size_closed_form(d, q, dL);
  out.ceil_term = ceil_log_ratio(d, q, dL);
  out.c = static_cast<int>(out.b) - static_cast<int>(d) - static_cast<int>(out.ceil_term);
  if (out.c != -1 && out.c != 0)
    throw InvariantViolation("log-form gap c = " + std::to_string(out.c) + " at d=" + std::to_string(d) +
                           " q=" + std::to_string(q) + " dL=" + std::to_string(dL));
  return out;
}

namespace {

using ElementList = std::vector<std::uint32_t>;

// GL_d(q) wr L on V^l, elements indexed by k + |L| (g_0 + G (g_1 + ...)).
class WreathAction {
public:
  WreathAction(const WreathSpec& spec, const BruteOptions& opts)
      : ell_(static_cast<unsigned>(spec.blocks())), group_(spec.group),
        gl_(orbits::ExplicitAction::gl_on_vectors(spec.d, gf::FiniteField::of_order(spec.q),
                                                  opts.max_group_order))
  {
    if (ell_ < 1)
      throw std::invalid_argument("wreath product needs at least one block");
    vectors_ = static_cast<std::uint32_t>(gl_.num_points());
    const auto points = checked_pow(vectors_, ell_, opts.max_points);
    if (!points)
      throw BudgetExceeded("point count exceeds cap " + std::to_string(opts.max_points));
    points_ = *points;
    const auto base = checked_pow(gl_.num_elements(), ell_, opts.max_group_order);
    if (!base || *base > opts.max_group_order / group_.order())
      throw BudgetExceeded("wreath product order exceeds cap " + std::to_string(opts.max_group_order));
    elements_ = *base * group_.order();

    for (std::size_t h = 0; h < gl_.num_elements(); ++h) {
      bool fixes_all = true;
      for (std::uint32_t v = 0; v < vectors_ && fixes_all; ++v)
        fixes_all = gl_.image(h, v) == v;
      if (fixes_all)
        gl_identity_ = h;
    }
  }

  std::size_t num_points() const { return points_; }
  std::size_t num_elements() const { return elements_; }

  std::size_t identity() const
  {
    std::size_t e = 0;
    for (unsigned i = ell_; i-- > 0;)
      e = e * gl_.num_elements() + gl_identity_;
    return e * group_.order();
  }

  std::uint32_t image(std::size_t e, std::uint32_t x) const
  {
    const auto k = group_.element(e % group_.order());
    e /= group_.order();
    std::uint32_t w[32];
    for (unsigned i = 0; i < ell_; ++i) {
      const auto g = e % gl_.num_elements();
      e /= gl_.num_elements();
      w[k[i]] = gl_.image(g, x % vectors_);
      x /= vectors_;
    }
    std::uint32_t out = 0;
    for (unsigned j = ell_; j-- > 0;)
      out = out * vectors_ + w[j];
    return out;
  }

  // GL_d(q) on the first block together with all of L.
  ElementList generating_elements() const
  {
    ElementList out;
    const std::size_t rest = identity() / group_.order() / gl_.num_elements();
    for (std::size_t g = 0; g < gl_.num_elements(); ++g)
      out.push_back(static_cast<std::uint32_t>((rest * gl_.num_elements() + g) * group_.order()));
    for (std::size_t k = 0; k < group_.order(); ++k)
      out.push_back(static_cast<std::uint32_t>(identity() + k));
    return out;
  }

private:
  unsigned ell_;
  const perm::PermGroup& group_;
  orbits::ExplicitAction gl_;
  std::uint32_t vectors_ = 0;
  std::size_t points_ = 0;
  std::size_t elements_ = 0;
  std::size_t gl_identity_ = 0;
};

class TableAction {
public:
  explicit TableAction(const orbits::ExplicitAction& a) : a_(a)
  {
    for (std::size_t h = 0; h < a.num_elements(); ++h) {
      bool fixes_all = true;
      for (std::uint32_t v = 0; v < a.num_points() && fixes_all; ++v)
        fixes_all = a.image(h, v) == v;
      if (fixes_all) {
        identity_ = h;
        return;
      }
    }
    throw std::invalid_argument("action has no identity element");
  }

  std::size_t num_points() const { return a_.num_points(); }
  std::size_t num_elements() const { return a_.num_elements(); }
  std::size_t identity() const { return identity_; }
  std::uint32_t image(std::size_t e, std::uint32_t x) const { return a_.image(e, x); }

  ElementList generating_elements() const
  {
    ElementList out(a_.num_elements());
    std::iota(out.begin(), out.end(), 0u);
    return out;
  }

private:
  const orbits::ExplicitAction& a_;
  std::size_t identity_ = 0;
};

template <typename Action>
ElementList stabilizer(const Action& act, const ElementList& elems, std::uint32_t x)
{
  ElementList out;
  for (auto e : elems)
    if (act.image(e, x) == x)
      out.push_back(e);
  return out;
}

template <typename Action>
bool only_identity_fixes(const Action& act, const ElementList& elems, std::uint32_t x)
{
  for (auto e : elems)
    if (e != act.identity() && act.image(e, x) == x)
      return false;
  return true;
}

// Can `remaining` further points, chosen from [start, n), reduce `stab` to
// the identity?
template <typename Action>
bool extend(const Action& act, const ElementList& stab, unsigned remaining, std::uint32_t start)
{
  if (stab.size() == 1)
    return true;
  if (remaining == 0)
    return false;
  const auto n = static_cast<std::uint32_t>(act.num_points());
  if (remaining == 1) {
    for (std::uint32_t x = start; x < n; ++x)
      if (only_identity_fixes(act, stab, x))
        return true;
    return false;
  }
  for (std::uint32_t x = start; x < n; ++x) {
    auto next = stabilizer(act, stab, x);
    if (next.size() == stab.size())
      continue; // x is fixed by all of stab
    if (extend(act, next, remaining - 1, x + 1))
      return true;
  }
  return false;
}

template <typename Action>
unsigned search_min_base(const Action& act)
{
  if (act.num_elements() == 1)
    return 0;
  const auto n = static_cast<std::uint32_t>(act.num_points());

  // orbit representatives of the whole group (smallest point of each orbit)
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto g : act.generating_elements())
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto a = find(x);
      const auto b = find(act.image(g, x));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < n; ++x)
    if (find(x) == x)
      reps.push_back(x);

  ElementList all(act.num_elements());
  std::iota(all.begin(), all.end(), 0u);
  std::vector<ElementList> first_stabs;
  for (auto r : reps)
    first_stabs.push_back(stabilizer(act, all, r));

  for (unsigned size = 1; size <= n; ++size)
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (first_stabs[i].size() == all.size())
        continue;
      if (extend(act, first_stabs[i], size - 1, 0))
        return size;
    }
  throw std::logic_error("action is not faithful: no base exists");
}

} // namespace

unsigned minimal_base_size(const orbits::ExplicitAction& action)
{
  return search_min_base(TableAction(action));
}

unsigned base_size_brute_force(const WreathSpec& spec, const BruteOptions& opts)
{
  if (spec.d < 1)
    throw std::invalid_argument("d must be positive");
  if (spec.blocks() > 32)
    throw std::invalid_argument("at most 32 blocks supported");
  return search_min_base(WreathAction(spec, opts));
}

BaileyCameron bailey_cameron_check(const WreathSpec& spec, unsigned m, const BruteOptions& opts,
                                   const dist::SearchOptions& search)
{
  BaileyCameron out;
  out.m = m;
  const auto dl = dist::distinguishing_number(spec.group, search);
  if (!dl.exact())
    throw std::runtime_error("distinguishing number not determined: " + dl.to_string());
  out.dL = dl.lower;
  const auto gl = orbits::ExplicitAction::gl_on_vectors(spec.d, gf::FiniteField::of_order(spec.q),
                                                        opts.max_group_order);
  out.multibase_orbits = orbits::count_multibase_orbits(gl, m);
  out.criterion = out.multibase_orbits >= out.dL;
  out.brute_b = base_size_brute_force(spec, opts);
  out.brute_has_base = out.brute_b <= m;
  return out;
}

SmallDLBound small_dl_bound(unsigned d, std::uint64_t q, unsigned dL)
{
  if (dL < 1 || dL > 4)
    throw std::invalid_argument("bound needs 1 <= d(L) <= 4");
  SmallDLBound out;
  out.b = base_size_closed_form(d, q, dL);
  out.holds = out.b <= d + 1;
  out.excluded_point = d == 1 && q == 2;
  if (!out.holds && !out.excluded_point)
    throw InvariantViolation("closed-form base size exceeds d + 1 with d(L) <= 4");
  return out;
}

} // namespace wb::basesize
