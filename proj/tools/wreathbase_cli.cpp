#include <chrono>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "wreathbase/commands.hpp"
#include "wreathbase/nat.hpp"

namespace {

struct Global {
  bool json = false;
  bool csv = false;
  bool timing = false;
  wb::cmd::Budgets budgets;
};

void add_group_source(CLI::App* sub, wb::cmd::GroupSource& src)
{
  auto* b = sub->add_option("--builtin", src.builtin, "builtin group: Sn, An, Cn, Dn, SmwrSr, AGL1_p, PSL2_5");
  auto* g = sub->add_option("--generators", src.generators_path, "generator file (cycle notation, 1-indexed)")
                ->check(CLI::ExistingFile);
  b->excludes(g);
}

int emit(const wb::cmd::Outcome& out, const Global& global, double ms)
{
  auto report = out.report;
  if (global.timing)
    report.timing_ms = ms;
  if (global.json)
    std::cout << report.json_text();
  else if (global.csv)
    std::cout << report.csv_text();
  else
    std::cout << report.table_text();
  return out.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Base sizes of GL_d(q) wr L, distinguishing numbers, and the supporting counts"};
  app.require_subcommand(1);
  app.fallthrough(); // global flags may follow the subcommand
  Global global;
  app.add_flag("--json", global.json, "JSON output");
  app.add_flag("--csv", global.csv, "CSV output");
  app.add_flag("--timing", global.timing, "record wall time in the report");
  app.add_option("--seed", global.budgets.seed, "seed for the randomized coloring pre-pass")->capture_default_str();
  app.add_option("--max-group-order", global.budgets.max_group_order, "largest group to enumerate")
      ->capture_default_str();
  app.add_option("--max-tuples", global.budgets.max_tuples, "largest tuple/point space to enumerate")
      ->capture_default_str();

  unsigned m = 0, d = 0;
  std::uint64_t q = 0;
  bool oracle = false, brute = false;
  wb::cmd::GroupSource src;
  wb::cmd::PyberChoice choice;
  std::string family, constant, grid = "small";

  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial [m choose d]_q");
  qb->add_option("m", m)->required();
  qb->add_option("d", d)->required();
  qb->add_option("q", q)->required();
  qb->add_flag("--oracle", oracle, "cross-check by counting subspaces");

  auto* dn = app.add_subcommand("distnum", "distinguishing number of a permutation group");
  add_group_source(dn, src);

  auto* bs = app.add_subcommand("basesize", "base size of GL_d(q) wr L");
  bs->add_option("d", d)->required();
  bs->add_option("q", q)->required();
  add_group_source(bs, src);
  bs->add_flag("--brute", brute, "cross-check by exhaustive search");

  auto* ob = app.add_subcommand("orbits", "orbits of GL_d(q) on spanning m-tuples and multi-bases");
  ob->add_option("d", d)->required();
  ob->add_option("q", q)->required();
  ob->add_option("m", m)->required();

  auto* py = app.add_subcommand("pyber", "certify b + 1 <= C log|G| / log n + C + 2");
  py->add_option("d", d)->required();
  py->add_option("q", q)->required();
  add_group_source(py, src);
  auto* fam = py->add_option("--family", family, "small_dL | primitive | semiregular | wreath");
  auto* cc = py->add_option("--C", constant, "explicit constant, a rational > 1");
  fam->excludes(cc);
  py->add_option("--c", choice.params.c, "small_dL: bound on d(L)");
  py->add_flag("--alt-or-sym", choice.params.alt_or_sym, "primitive: L is A_l or S_l");
  py->add_option("--m", choice.params.m, "wreath: S_m wr S_r");
  py->add_option("--r", choice.params.r, "wreath: S_m wr S_r");

  auto* vf = app.add_subcommand("verify", "run the acceptance grid");
  vf->add_option("--grid", grid, "small | full")->check(CLI::IsMember({"small", "full"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  try {
    wb::cmd::Outcome out;
    if (*qb) {
      out = wb::cmd::cmd_qbinom(m, d, q, oracle, global.budgets);
    } else if (*dn) {
      out = wb::cmd::cmd_distnum(src, global.budgets);
    } else if (*bs) {
      out = wb::cmd::cmd_basesize(d, q, src, brute, global.budgets);
    } else if (*ob) {
      out = wb::cmd::cmd_orbits(d, q, m, global.budgets);
    } else if (*py) {
      if (!family.empty())
        choice.family = family;
      if (!constant.empty())
        choice.constant = constant;
      out = wb::cmd::cmd_pyber(d, q, src, choice, global.budgets);
    } else {
      wb::verify::Options opts;
      opts.grid = wb::verify::parse_grid(grid);
      opts.seed = global.budgets.seed;
      opts.max_group_order = global.budgets.max_group_order;
      opts.max_tuples = global.budgets.max_tuples;
      out = wb::cmd::cmd_verify(opts);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return emit(out, global, ms);
  } catch (const wb::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
