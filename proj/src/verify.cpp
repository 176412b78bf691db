#include "wreathbase/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "wreathbase/basesize.hpp"
#include "wreathbase/distinguishing.hpp"
#include "wreathbase/linalg.hpp"
#include "wreathbase/orbits.hpp"
#include "wreathbase/pyber.hpp"
#include "wreathbase/qbinom.hpp"

namespace wb::verify {

using report::Json;

Grid parse_grid(const std::string& name)
{
  if (name == "small")
    return Grid::Small;
  if (name == "full")
    return Grid::Full;
  throw std::invalid_argument("grid must be 'small' or 'full'");
}

namespace {

bool full(const Options& o) { return o.grid == Grid::Full; }

std::string point(unsigned d, std::uint64_t q)
{
  return "(d,q)=(" + std::to_string(d) + "," + std::to_string(q) + ")";
}

dist::SearchOptions search_options(const Options& o)
{
  dist::SearchOptions s;
  s.seed = o.seed;
  return s;
}

struct GroupCase {
  std::string name;
  std::function<perm::PermGroup(std::uint64_t cap)> make;
};

std::vector<GroupCase> sym_alt_cyc(std::size_t ell)
{
  return {{"S" + std::to_string(ell), [ell](std::uint64_t cap) { return perm::symmetric(ell, cap); }},
          {"A" + std::to_string(ell), [ell](std::uint64_t cap) { return perm::alternating(ell, cap); }},
          {"C" + std::to_string(ell), [ell](std::uint64_t cap) { return perm::cyclic(ell, cap); }}};
}

// |GL_d(q)|^l * |L| <= cap
bool wreath_within(unsigned d, std::uint64_t q, std::size_t ell, std::uint64_t order_L, std::uint64_t cap)
{
  const Nat total = wb::pow(linalg::gl_order(d, q), ell) * order_L;
  return total <= cap;
}

CheckResult start(std::string id, std::string title)
{
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

void finish(CheckResult& r) { r.passed = r.failures.empty(); }

} // namespace

CheckResult check_orbit_counts(const Options& opts)
{
  auto r = start("orbit_counts", "Gaussian binomial = subspace count = spanning-tuple orbits (two ways)");
  const unsigned dmax = full(opts) ? 3 : 2;
  const std::vector<std::uint64_t> qs = full(opts) ? std::vector<std::uint64_t>{2, 3, 4}
                                                   : std::vector<std::uint64_t>{2, 3};
  const unsigned extra = full(opts) ? 3 : 2;
  const std::uint64_t limit = std::min<std::uint64_t>(full(opts) ? 10'000'000 : 100'000, opts.max_tuples);
  Json rows = Json::array();
  for (unsigned d = 1; d <= dmax; ++d)
    for (auto q : qs)
      for (unsigned m = d; m <= d + extra; ++m) {
        if (!checked_pow(q, std::uint64_t(d) * m, limit))
          continue;
        const Nat g = qbinom::gaussian_binomial(m, d, q);
        const Nat o = qbinom::count_subspaces_oracle(m, d, q);
        const Nat c = orbits::count_spanning_orbits_canonical(d, q, m, limit);
        const Nat p = orbits::count_spanning_orbits_partition(d, q, m, limit, opts.max_group_order);
        rows.push_back({{"d", d}, {"q", q}, {"m", m}, {"gaussian", g.str()}, {"oracle", o.str()},
                        {"canonical", c.str()}, {"partition", p.str()}});
        if (!(g == o && o == c && c == p))
          r.failures.push_back(point(d, q) + " m=" + std::to_string(m) + ": " + g.str() + " " + o.str() +
                               " " + c.str() + " " + p.str());
      }
  r.data["cases"] = std::move(rows);
  finish(r);
  return r;
}

CheckResult check_multibase_orbits(const Options& opts)
{
  auto r = start("multibase_orbits", "Multi-base orbits of GL_d(q) equal spanning-tuple orbits for (d,q) != (1,2)");
  const std::vector<std::pair<unsigned, std::uint64_t>> points =
      full(opts) ? std::vector<std::pair<unsigned, std::uint64_t>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}}
                 : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 2}, {1, 3}, {2, 2}};
  const std::uint64_t limit = full(opts) ? 1'000'000 : 100'000;
  Json rows = Json::array();
  for (auto [d, q] : points) {
    const auto action = orbits::ExplicitAction::gl_on_vectors(d, gf::FiniteField::of_order(q),
                                                              opts.max_group_order);
    for (unsigned m = 1; m <= d + 3; ++m) {
      if (!checked_pow(q, std::uint64_t(d) * m, limit))
        continue;
      const Nat multibase = orbits::count_multibase_orbits(action, m, limit);
      const Nat spanning = orbits::count_spanning_orbits_canonical(d, q, m, limit);
      rows.push_back({{"d", d}, {"q", q}, {"m", m}, {"multibase", multibase.str()}, {"spanning", spanning.str()}});
      if (d == 1 && q == 2) {
        // GL_1(2) is trivial: every tuple is a multi-base, only nonzero ones span
        const Nat all = wb::pow(Nat(2), m);
        if (multibase != all || spanning != all - 1)
          r.failures.push_back("(1,2) m=" + std::to_string(m) + ": unexpected counts " + multibase.str() +
                               " / " + spanning.str());
        else
          r.flagged.push_back("(d,q)=(1,2) m=" + std::to_string(m) + ": multi-base orbits " + multibase.str() +
                              " != spanning-tuple orbits " + spanning.str() +
                              " (GL_1(2) is trivial, so non-spanning tuples are multi-bases)");
      } else if (multibase != spanning) {
        r.failures.push_back(point(d, q) + " m=" + std::to_string(m) + ": " + multibase.str() +
                             " != " + spanning.str());
      }
    }
  }
  r.data["cases"] = std::move(rows);
  finish(r);
  return r;
}

namespace {

std::vector<std::pair<unsigned, std::uint64_t>> brute_points(const Options& opts)
{
  if (full(opts))
    return {{1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}};
  return {{1, 3}, {1, 4}, {2, 2}};
}

std::vector<std::size_t> brute_blocks(const Options& opts)
{
  if (full(opts))
    return {2, 3};
  return {2};
}

} // namespace

CheckResult check_base_size_brute(const Options& opts)
{
  auto r = start("base_size_brute", "Closed-form base size of GL_d(q) wr L equals exhaustive search");
  Json rows = Json::array();
  Json skipped = Json::array();
  for (auto [d, q] : brute_points(opts))
    for (auto ell : brute_blocks(opts))
      for (const auto& gc : sym_alt_cyc(ell)) {
        const auto L = gc.make(opts.max_group_order);
        if (!wreath_within(d, q, ell, L.order(), opts.max_group_order)) {
          skipped.push_back(point(d, q) + " L=" + gc.name);
          continue;
        }
        const auto dl = dist::distinguishing_number(L, search_options(opts));
        if (!dl.exact()) {
          r.failures.push_back(point(d, q) + " L=" + gc.name + ": d(L) not exact " + dl.to_string());
          continue;
        }
        const unsigned closed = basesize::base_size_closed_form(d, q, dl.lower);
        basesize::BruteOptions bo;
        bo.max_group_order = opts.max_group_order;
        const unsigned brute = basesize::base_size_brute_force({d, q, L}, bo);
        rows.push_back({{"d", d}, {"q", q}, {"L", gc.name}, {"dL", dl.lower}, {"closed_form", closed},
                        {"brute_force", brute}});
        if (closed != brute)
          r.failures.push_back(point(d, q) + " L=" + gc.name + ": closed form " + std::to_string(closed) +
                               " != brute force " + std::to_string(brute));
      }
  r.data["cases"] = std::move(rows);
  r.data["skipped_over_cap"] = std::move(skipped);
  finish(r);
  return r;
}

CheckResult check_bailey_cameron(const Options& opts)
{
  auto r = start("bailey_cameron", "Base of size m exists iff multi-base orbits >= d(L), both directions");
  auto points = brute_points(opts);
  points.insert(points.begin(), {1, 2});
  Json rows = Json::array();
  std::map<std::tuple<unsigned, std::uint64_t, unsigned>, Nat> multibase_cache;
  for (auto [d, q] : points) {
    const auto action = orbits::ExplicitAction::gl_on_vectors(d, gf::FiniteField::of_order(q),
                                                              opts.max_group_order);
    for (auto ell : brute_blocks(opts))
      for (const auto& gc : sym_alt_cyc(ell)) {
        const auto L = gc.make(opts.max_group_order);
        if (!wreath_within(d, q, ell, L.order(), opts.max_group_order))
          continue;
        const auto dl = dist::distinguishing_number(L, search_options(opts));
        basesize::BruteOptions bo;
        bo.max_group_order = opts.max_group_order;
        const unsigned brute = basesize::base_size_brute_force({d, q, L}, bo);
        for (unsigned m = 1; m <= brute + 1; ++m) {
          auto key = std::make_tuple(d, q, m);
          if (!multibase_cache.count(key))
            multibase_cache[key] = orbits::count_multibase_orbits(action, m, opts.max_tuples);
          const Nat& count = multibase_cache[key];
          const bool criterion = count >= dl.lower;
          const bool has_base = brute <= m;
          rows.push_back({{"d", d}, {"q", q}, {"L", gc.name}, {"m", m}, {"multibase_orbits", count.str()},
                          {"dL", dl.lower}, {"brute_force", brute}, {"criterion", criterion},
                          {"has_base", has_base}});
          if (criterion != has_base)
            r.failures.push_back(point(d, q) + " L=" + gc.name + " m=" + std::to_string(m) +
                                 ": criterion " + (criterion ? "true" : "false") + " but brute force b=" +
                                 std::to_string(brute));
        }
      }
  }
  r.data["cases"] = std::move(rows);
  finish(r);
  return r;
}

CheckResult check_one_two_discrepancy(const Options& opts)
{
  auto r = start("one_two_discrepancy", "(d,q)=(1,2): closed form and brute force disagree; flagged, not failed");
  const auto s2 = perm::symmetric(2);
  const unsigned closed = basesize::base_size_closed_form(1, 2, 2);
  const unsigned brute = basesize::base_size_brute_force({1, 2, s2});
  r.data["closed_form_S2"] = closed;
  r.data["brute_force_S2"] = brute;
  if (closed != 2)
    r.failures.push_back("closed form at (1,2,S2) is " + std::to_string(closed) + ", expected 2");
  if (brute != 1)
    r.failures.push_back("brute force at (1,2,S2) is " + std::to_string(brute) + ", expected 1");
  for (unsigned m : {1u, 2u}) {
    const auto bc = basesize::bailey_cameron_check({1, 2, s2}, m, {}, search_options(opts));
    r.data["bailey_cameron_m" + std::to_string(m)] = {{"multibase_orbits", bc.multibase_orbits.str()},
                                                      {"criterion", bc.criterion},
                                                      {"consistent", bc.consistent()}};
    if (!bc.consistent())
      r.failures.push_back("multi-base criterion inconsistent at (1,2,S2) m=" + std::to_string(m));
  }

  // scan the (1,2) column for every disagreement
  std::vector<GroupCase> groups;
  for (std::size_t ell = 2; ell <= (full(opts) ? 5u : 4u); ++ell)
    for (auto& g : sym_alt_cyc(ell))
      groups.push_back(std::move(g));
  Json rows = Json::array();
  for (const auto& gc : groups) {
    const auto L = gc.make(opts.max_group_order);
    const auto dl = dist::distinguishing_number(L, search_options(opts));
    const unsigned c = basesize::base_size_closed_form(1, 2, dl.lower);
    const unsigned b = basesize::base_size_brute_force({1, 2, L});
    rows.push_back({{"L", gc.name}, {"dL", dl.lower}, {"closed_form", c}, {"brute_force", b}});
    if (c != b)
      r.flagged.push_back("(d,q)=(1,2) L=" + gc.name + " d(L)=" + std::to_string(dl.lower) + ": closed form " +
                          std::to_string(c) + " vs brute force " + std::to_string(b) +
                          " (multi-bases are not spanning tuples when GL_1(2) is trivial)");
  }
  r.data["scan"] = std::move(rows);
  finish(r);
  return r;
}

CheckResult check_log_form_gap(const Options& opts)
{
  auto r = start("log_form_gap", "b = d + ceil(log d(L) / (d log q)) + c with c in {-1, 0}");
  const unsigned max_dl = full(opts) ? 10'000 : 200;
  std::size_t cases = 0;
  std::size_t minus_one = 0;
  for (unsigned d = 1; d <= 6; ++d)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      // closed form is monotone in dL; walk the breakpoints
      unsigned s = 0;
      Nat next = qbinom::gaussian_binomial(d, d, q);
      for (unsigned dl = 1; dl <= max_dl; ++dl) {
        try {
          const auto lf = basesize::base_size_log_form(d, q, dl);
          ++cases;
          if (lf.c == -1)
            ++minus_one;
          while (next < dl)
            next = qbinom::gaussian_binomial(d + ++s, d, q);
          if (lf.b != d + s)
            r.failures.push_back(point(d, q) + " dL=" + std::to_string(dl) + ": closed form mismatch");
        } catch (const InvariantViolation& e) {
          r.failures.push_back(e.what());
        }
      }
    }
  r.data["cases"] = cases;
  r.data["c_equals_minus_one"] = minus_one;
  r.data["max_dL"] = max_dl;
  finish(r);
  return r;
}

CheckResult check_qbinom_bounds(const Options&)
{
  auto r = start("qbinom_bounds", "q^{ds} <= [d+s choose d]_q <= q^{ds} / c(q), exact rationals");
  std::size_t cases = 0;
  for (unsigned d = 1; d <= 6; ++d)
    for (unsigned s = 1; s <= 6; ++s)
      for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto b = qbinom::check_qbinom_bounds(d, s, q);
        ++cases;
        if (!b.lower_ok || !b.upper_ok)
          r.failures.push_back(point(d, q) + " s=" + std::to_string(s) + ": lower " +
                               (b.lower_ok ? "ok" : "FAIL") + ", upper " + (b.upper_ok ? "ok" : "FAIL"));
      }
  r.data["cases"] = cases;
  finish(r);
  return r;
}

CheckResult check_distinguishing(const Options& opts)
{
  auto r = start("distinguishing", "d(S_l) = l, d(A_l) = l - 1, and d(S_m wr S_r) = min{d : C(d,m) >= r}");
  const std::size_t lmax = full(opts) ? 8 : 6;
  Json sa = Json::array();
  for (std::size_t ell = 2; ell <= lmax; ++ell) {
    const auto ds = dist::distinguishing_number(perm::symmetric(ell, opts.max_group_order), search_options(opts));
    const auto da = dist::distinguishing_number(perm::alternating(ell, opts.max_group_order), search_options(opts));
    sa.push_back({{"l", ell}, {"d_S", ds.to_string()}, {"d_A", da.to_string()}});
    if (!ds.exact() || ds.lower != ell)
      r.failures.push_back("d(S" + std::to_string(ell) + ") = " + ds.to_string());
    if (!da.exact() || da.lower != ell - 1)
      r.failures.push_back("d(A" + std::to_string(ell) + ") = " + da.to_string());
  }
  r.data["sym_alt"] = std::move(sa);

  const unsigned max_product = full(opts) ? 10 : 6;
  Json wr = Json::array();
  for (unsigned m = 1; m <= max_product; ++m)
    for (unsigned rr = 1; m * rr <= max_product; ++rr) {
      const Nat order = wb::pow(factorial(m), rr) * factorial(rr);
      if (order > opts.max_group_order)
        continue;
      const auto chan = dist::chan_wreath_distnum(m, rr);
      const auto found = dist::distinguishing_number(perm::wreath_imprimitive(m, rr, opts.max_group_order),
                                                     search_options(opts));
      wr.push_back({{"m", m}, {"r", rr}, {"order", order.str()}, {"search", found.to_string()},
                    {"formula", chan.exact}, {"bound", chan.bound}});
      if (!found.exact() || found.lower != chan.exact)
        r.failures.push_back("S" + std::to_string(m) + "wrS" + std::to_string(rr) + ": search " +
                             found.to_string() + " vs formula " + std::to_string(chan.exact));
    }
  r.data["wreath"] = std::move(wr);

  std::size_t bound_cases = 0;
  for (unsigned m = 1; m <= 12; ++m)
    for (unsigned rr = 1; rr <= 12; ++rr) {
      const auto chan = dist::chan_wreath_distnum(m, rr);
      ++bound_cases;
      if (chan.exact > chan.bound)
        r.failures.push_back("Chan bound violated at m=" + std::to_string(m) + " r=" + std::to_string(rr));
    }
  r.data["bound_cases"] = bound_cases;
  finish(r);
  return r;
}

CheckResult check_primitive_catalog(const Options& opts)
{
  auto r = start("primitive_catalog", "d(L) <= 4 for small primitive groups not containing A_l");
  const auto rep = dist::primitive_catalog_check(dist::builtin_primitive_catalog(), search_options(opts));
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back({{"name", row.name}, {"degree", row.degree}, {"order", row.order},
                    {"d", row.value.to_string()}, {"accepted", row.accepted}, {"rejection", row.rejection}});
    if (!row.accepted)
      r.failures.push_back(row.name + " rejected: " + row.rejection);
    else if (!row.value.exact() || row.value.upper > 4)
      r.failures.push_back(row.name + ": d = " + row.value.to_string());
  }
  r.data["groups"] = std::move(rows);
  r.data["max_d"] = rep.max_d;
  finish(r);
  return r;
}

CheckResult check_pyber(const Options& opts)
{
  auto r = start("pyber", "Certification chain holds with the family constants; k^k <= (k!)^2");
  const std::vector<std::pair<unsigned, std::uint64_t>> fields =
      full(opts) ? std::vector<std::pair<unsigned, std::uint64_t>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 5}}
                 : std::vector<std::pair<unsigned, std::uint64_t>>{{1, 3}, {2, 2}};
  const std::size_t lmax = full(opts) ? 10 : 6;
  // S_10 has order 3628800; the exact search needs the larger cap
  const std::uint64_t cap = std::max<std::uint64_t>(opts.max_group_order, full(opts) ? 4'000'000 : 0);

  struct Case {
    std::string name;
    perm::PermGroup group;
    pyber::Family family;
    pyber::FamilyParams params;
  };
  std::vector<Case> cases;
  for (std::size_t ell = 2; ell <= lmax; ++ell)
    cases.push_back({"C" + std::to_string(ell), perm::cyclic(ell, cap), pyber::Family::Semiregular, {}});
  for (std::size_t ell = 2; ell <= lmax; ++ell) {
    pyber::FamilyParams p;
    p.alt_or_sym = true;
    cases.push_back({"S" + std::to_string(ell), perm::symmetric(ell, cap), pyber::Family::Primitive, p});
    cases.push_back({"A" + std::to_string(ell), perm::alternating(ell, cap), pyber::Family::Primitive, p});
  }
  for (unsigned m : {2u, 3u})
    for (unsigned rr : {2u, 3u}) {
      pyber::FamilyParams p;
      p.m = m;
      p.r = rr;
      cases.push_back({"S" + std::to_string(m) + "wrS" + std::to_string(rr), perm::wreath_imprimitive(m, rr, cap),
                       pyber::Family::Wreath, p});
    }
  for (auto& entry : dist::builtin_primitive_catalog())
    cases.push_back({entry.name, std::move(entry.group), pyber::Family::Primitive, {}});

  Json rows = Json::array();
  auto search = search_options(opts);
  for (const auto& c : cases) {
    const auto constant = pyber::family_constant(c.family, c.params);
    const auto& C = constant.refined ? *constant.refined : constant.general;
    for (auto [d, q] : fields) {
      const auto cert = pyber::certify({d, q, c.group}, C, search);
      rows.push_back({{"L", c.name}, {"family", pyber::family_name(c.family)}, {"C", C.to_string()},
                      {"d", d}, {"q", q}, {"dL", cert.dL}, {"b", cert.b},
                      {"hypothesis_ok", cert.hypothesis_ok}, {"conclusion_ok", cert.conclusion_ok}});
      if (!cert.hypothesis_ok || !cert.conclusion_ok)
        r.failures.push_back(c.name + " " + point(d, q) + " C=" + C.to_string() + ": hypothesis " +
                             (cert.hypothesis_ok ? "ok" : "FAIL") + ", conclusion " +
                             (cert.conclusion_ok ? "ok" : "FAIL"));
    }
  }
  r.data["certificates"] = std::move(rows);

  const bool kk = pyber::kk_factorial_check(100);
  r.data["kk_factorial_100"] = kk;
  if (!kk)
    r.failures.push_back("k^k <= (k!)^2 failed for some k <= 100");
  for (unsigned ell = 1; ell <= 12; ++ell)
    if (!pyber::sym_alt_power_check(ell))
      r.failures.push_back("d(L)^l <= |L|^2 failed for S/A of degree " + std::to_string(ell));
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned rr = 1; rr <= 6; ++rr)
      if (!pyber::wreath_power_check(m, rr))
        r.failures.push_back("wreath power inequality failed at m=" + std::to_string(m) + " r=" +
                             std::to_string(rr));
  finish(r);
  return r;
}

std::vector<CheckResult> run_all(const Options& opts)
{
  return {check_orbit_counts(opts),     check_multibase_orbits(opts),   check_base_size_brute(opts),
          check_bailey_cameron(opts),   check_one_two_discrepancy(opts), check_log_form_gap(opts),
          check_qbinom_bounds(opts),    check_distinguishing(opts),      check_primitive_catalog(opts),
          check_pyber(opts)};
}

Json to_json(const CheckResult& r)
{
  return {{"id", r.id},         {"title", r.title},     {"passed", r.passed},
          {"failures", r.failures}, {"flagged", r.flagged}, {"data", r.data}};
}

bool all_passed(const std::vector<CheckResult>& results)
{
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

report::Report verify_report(const Options& opts)
{
  report::Report rep;
  rep.command = "verify";
  rep.seed = opts.seed;
  rep.params = {{"grid", opts.grid == Grid::Full ? "full" : "small"},
                {"max_group_order", opts.max_group_order},
                {"max_tuples", opts.max_tuples}};
  const auto results = run_all(opts);
  Json checks = Json::array();
  for (const auto& r : results) {
    checks.push_back(to_json(r));
    for (const auto& f : r.flagged)
      rep.discrepancies.push_back(r.id + ": " + f);
  }
  rep.results = {{"all_passed", all_passed(results)}, {"checks", std::move(checks)}};
  return rep;
}

} // namespace wb::verify
