#include "wreathbase/commands.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

#include "wreathbase/basesize.hpp"
#include "wreathbase/distinguishing.hpp"
#include "wreathbase/group_io.hpp"
#include "wreathbase/linalg.hpp"
#include "wreathbase/orbits.hpp"
#include "wreathbase/qbinom.hpp"

namespace wb::cmd {

using report::Json;

perm::PermGroup load_group(const GroupSource& src, std::uint64_t cap)
{
  const bool has_builtin = !src.builtin.empty();
  const bool has_file = !src.generators_path.empty();
  if (has_builtin == has_file)
    throw std::invalid_argument("give exactly one of --builtin or --generators");
  if (has_builtin)
    return perm::builtin_group(src.builtin, cap);
  std::ifstream in(src.generators_path);
  if (!in)
    throw std::invalid_argument("cannot open generator file '" + src.generators_path + "'");
  return perm::parse_generators(in, cap);
}

namespace {

report::Report base_report(const std::string& command, const Budgets& budgets)
{
  report::Report r;
  r.command = command;
  r.seed = budgets.seed;
  return r;
}

Json source_json(const GroupSource& src)
{
  if (!src.builtin.empty())
    return {{"builtin", src.builtin}};
  return {{"generators", src.generators_path}};
}

dist::SearchOptions search_options(const Budgets& budgets)
{
  dist::SearchOptions s;
  s.seed = budgets.seed;
  return s;
}

Json witness_json(const dist::Coloring& w)
{
  Json out = Json::array();
  for (auto c : w)
    out.push_back(c + 1);
  return out;
}

Json dist_json(const dist::DistResult& r)
{
  return {{"value", r.to_string()},      {"lower", r.lower},
          {"upper", r.upper},            {"exact", r.exact()},
          {"witness", witness_json(r.witness)}, {"colorings_checked", r.colorings_checked}};
}

Json group_json(const perm::PermGroup& g)
{
  const auto p = perm::predicates(g);
  return {{"degree", g.degree()},
          {"order", g.order_nat().str()},
          {"transitive", p.is_transitive},
          {"primitive", p.is_primitive},
          {"semiregular", p.is_semiregular},
          {"contains_alternating", g.contains_alternating()}};
}

bool one_two(unsigned d, std::uint64_t q) { return d == 1 && q == 2; }

} // namespace

Outcome cmd_qbinom(unsigned m, unsigned d, std::uint64_t q, bool oracle, const Budgets& budgets)
{
  require_prime_power(q);
  Outcome out{base_report("qbinom", budgets)};
  auto& r = out.report;
  r.params = {{"m", m}, {"d", d}, {"q", q}, {"oracle", oracle}};
  const Nat value = qbinom::gaussian_binomial(m, d, q);
  r.results["gaussian_binomial"] = value.str();
  if (oracle) {
    const Nat count = qbinom::count_subspaces_oracle(m, d, q, budgets.max_tuples);
    r.results["oracle_subspace_count"] = count.str();
    r.results["oracle_agrees"] = count == value;
    if (count != value) {
      r.discrepancies.push_back("oracle count " + count.str() + " != " + value.str());
      out.ok = false;
    }
  }
  return out;
}

Outcome cmd_distnum(const GroupSource& src, const Budgets& budgets)
{
  const auto g = load_group(src, budgets.max_group_order);
  Outcome out{base_report("distnum", budgets)};
  auto& r = out.report;
  r.params = {{"group", source_json(src)}};
  r.results["group"] = group_json(g);
  const auto value = dist::distinguishing_number(g, search_options(budgets));
  r.results["distinguishing_number"] = dist_json(value);
  if (!value.exact())
    out.ok = false;

  static const std::regex wreath(R"(S(\d+)wrS(\d+))");
  std::smatch match;
  if (std::regex_match(src.builtin, match, wreath)) {
    const unsigned m = std::stoul(match[1]);
    const unsigned rr = std::stoul(match[2]);
    const auto chan = dist::chan_wreath_distnum(m, rr);
    const bool agrees = value.exact() && value.lower == chan.exact;
    r.results["wreath_formula"] = {{"min_d_with_binomial_d_m_at_least_r", chan.exact},
                                   {"ceil_m_r_pow_1_over_m", chan.bound},
                                   {"agrees", agrees}};
    if (value.exact() && !agrees) {
      r.discrepancies.push_back("search " + value.to_string() + " != formula " + std::to_string(chan.exact));
      out.ok = false;
    }
  }
  return out;
}

Outcome cmd_basesize(unsigned d, std::uint64_t q, const GroupSource& src, bool brute, const Budgets& budgets)
{
  require_prime_power(q);
  if (d < 1)
    throw std::invalid_argument("d must be at least 1");
  auto g = load_group(src, budgets.max_group_order);
  Outcome out{base_report("basesize", budgets)};
  auto& r = out.report;
  r.params = {{"d", d}, {"q", q}, {"group", source_json(src)}, {"brute", brute}};
  r.results["group"] = group_json(g);
  const auto dl = dist::distinguishing_number(g, search_options(budgets));
  r.results["distinguishing_number"] = dist_json(dl);

  if (!dl.exact()) {
    // the closed form is monotone in d(L)
    r.results["closed_form"] = {{"lower", basesize::base_size_closed_form(d, q, dl.lower)},
                                {"upper", basesize::base_size_closed_form(d, q, dl.upper)}};
    out.ok = false;
    return out;
  }
  const auto lf = basesize::base_size_log_form(d, q, dl.lower);
  r.results["closed_form"] = lf.b;
  r.results["log_form"] = {{"d", d}, {"ceil_log_term", lf.ceil_term}, {"c", lf.c}};
  if (dl.lower <= 4) {
    const auto bound = basesize::small_dl_bound(d, q, dl.lower);
    r.results["at_most_d_plus_1"] = bound.holds;
  }

  if (brute) {
    basesize::BruteOptions bo;
    bo.max_group_order = budgets.max_group_order;
    bo.max_points = budgets.max_tuples;
    const unsigned b = basesize::base_size_brute_force({d, q, std::move(g)}, bo);
    r.results["brute_force"] = b;
    r.results["agrees"] = b == lf.b;
    if (b != lf.b) {
      r.discrepancies.push_back("DISCREPANCY: closed form " + std::to_string(lf.b) + " vs brute force " +
                                std::to_string(b) + " at (d,q)=(" + std::to_string(d) + "," +
                                std::to_string(q) + ")");
      if (one_two(d, q))
        r.results["flagged"] = "(d,q)=(1,2): GL_1(2) is trivial, so multi-bases need not span";
      else
        out.ok = false;
    }
  }
  return out;
}

Outcome cmd_orbits(unsigned d, std::uint64_t q, unsigned m, const Budgets& budgets)
{
  require_prime_power(q);
  if (d < 1)
    throw std::invalid_argument("d must be at least 1");
  Outcome out{base_report("orbits", budgets)};
  auto& r = out.report;
  r.params = {{"d", d}, {"q", q}, {"m", m}};
  const Nat gauss = qbinom::gaussian_binomial(m, d, q);
  const Nat canon = orbits::count_spanning_orbits_canonical(d, q, m, budgets.max_tuples);
  const Nat part = orbits::count_spanning_orbits_partition(d, q, m, budgets.max_tuples, budgets.max_group_order);
  const auto action = orbits::ExplicitAction::gl_on_vectors(d, gf::FiniteField::of_order(q), budgets.max_group_order);
  const Nat multi = orbits::count_multibase_orbits(action, m, budgets.max_tuples);
  r.results["gaussian_binomial"] = gauss.str();
  r.results["spanning_orbits_canonical"] = canon.str();
  r.results["spanning_orbits_partition"] = part.str();
  r.results["multibase_orbits"] = multi.str();
  if (canon != gauss || part != gauss) {
    r.discrepancies.push_back("spanning-tuple orbit counts disagree with the Gaussian binomial");
    out.ok = false;
  }
  if (multi != canon) {
    r.discrepancies.push_back("multi-base orbits " + multi.str() + " != spanning-tuple orbits " + canon.str());
    if (!one_two(d, q))
      out.ok = false;
  }
  return out;
}

Outcome cmd_pyber(unsigned d, std::uint64_t q, const GroupSource& src, const PyberChoice& choice,
                  const Budgets& budgets)
{
  require_prime_power(q);
  if (choice.family.has_value() == choice.constant.has_value())
    throw std::invalid_argument("give exactly one of --family or --C");
  const auto g = load_group(src, budgets.max_group_order);
  Outcome out{base_report("pyber", budgets)};
  auto& r = out.report;
  r.params = {{"d", d}, {"q", q}, {"group", source_json(src)}};

  std::optional<logcmp::LogRatio> C;
  if (choice.family) {
    const auto family = pyber::parse_family(*choice.family);
    auto params = choice.params;
    static const std::regex wreath(R"(S(\d+)wrS(\d+))");
    std::smatch match;
    if (family == pyber::Family::Wreath && params.m == 0 && std::regex_match(src.builtin, match, wreath)) {
      params.m = std::stoul(match[1]);
      params.r = std::stoul(match[2]);
    }
    const auto p = perm::predicates(g);
    if (family == pyber::Family::Primitive && !p.is_primitive)
      throw std::invalid_argument("group is not primitive");
    if (family == pyber::Family::Primitive && params.alt_or_sym && !g.contains_alternating())
      throw std::invalid_argument("group does not contain the alternating group");
    if (family == pyber::Family::Semiregular && !p.is_semiregular)
      throw std::invalid_argument("group is not semiregular");
    const auto fc = pyber::family_constant(family, params);
    C = fc.refined ? *fc.refined : fc.general;
    r.params["family"] = pyber::family_name(family);
  } else {
    C = logcmp::LogRatio::from_rational(Rational(*choice.constant));
    r.params["C"] = *choice.constant;
  }

  const auto cert = pyber::certify({d, q, g}, *C, search_options(budgets));
  const auto minimal = pyber::minimal_pyber_C(static_cast<unsigned>(cert.ell), cert.order_L, cert.dL);
  r.results["C"] = C->to_string();
  r.results["C_approx"] = C->approx();
  r.results["minimal_C"] = minimal.any_above_one ? Json("any C > 1") : Json(minimal.value.to_string());
  r.results["dL"] = cert.dL;
  r.results["b"] = cert.b;
  r.results["order_L"] = cert.order_L.str();
  r.results["order_X0"] = cert.order_X0.str();
  r.results["n"] = cert.n.str();
  r.results["order_G"] = cert.order_G.str();
  r.results["lhs_b_plus_1"] = cert.lhs;
  r.results["rhs_approx"] = cert.rhs_approx;
  r.results["hypothesis_ok"] = cert.hypothesis_ok;
  r.results["conclusion_tested"] = cert.conclusion_tested;
  r.results["conclusion_ok"] = cert.conclusion_ok;
  r.results["certificate"] = cert.hypothesis_ok && cert.conclusion_ok ? "ok" : "not certified";
  if (one_two(d, q))
    r.discrepancies.push_back("(d,q)=(1,2): b is the closed form, which may exceed the true base size here");
  out.ok = cert.hypothesis_ok && cert.conclusion_ok;
  return out;
}

Outcome cmd_verify(const verify::Options& opts)
{
  Outcome out;
  out.report = verify::verify_report(opts);
  out.ok = out.report.results.at("all_passed").get<bool>();
  return out;
}

} // namespace wb::cmd
