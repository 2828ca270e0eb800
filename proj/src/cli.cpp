#include "qheat/cli.hpp"

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qheat/core_model.hpp"
#include "qheat/cycles.hpp"
#include "qheat/errors.hpp"
#include "qheat/report.hpp"
#include "qheat/statmech.hpp"
#include "qheat/sweep.hpp"
#include "qheat/validation.hpp"
#include "qheat/version.hpp"

namespace qheat::cli {

namespace {

constexpr const char* kFooter =
    "Units: hbar = k_B = 1, so temperatures are energies and beta = 1/T.\n"
    "Numbers are printed with 9 significant digits: plain notation for\n"
    "1e-4 <= |x| < 1e9, scientific notation otherwise.\n"
    "Exit codes: 0 ok, 1 validation failure, 2 invalid flags or spec,\n"
    "3 GUP validity gate violated or degenerate cycle.";

void emit(std::ostream& out, const report::Table& table, const std::string& format) {
  if (format == "json")
    report::write_json(out, table);
  else
    report::write_csv(out, table);
}

void append_ledger(report::Table& t, std::vector<report::Cell>& row, const CycleLedger& l) {
  auto col = [&](std::string name, report::Cell value) {
    t.columns.push_back(std::move(name));
    row.push_back(std::move(value));
  };
  col("eta", l.eta);
  col("etaG", l.etaG);
  col("deltaEta", l.deltaEta);
  col("deltaEta_first_order", l.deltaEtaFirstOrder);
  for (std::size_t k = 0; k < 4; ++k)
    col("Q_" + std::string(kLegNames[k]), l.legs[k].Q);
  for (std::size_t k = 0; k < 4; ++k)
    col("QG_" + std::string(kLegNames[k]), l.legs[k].QG);
  col("Q_in", l.Q_in);
  col("Q_out", l.Q_out);
  col("W", l.W);
  col("Q_inG", l.Q_inG);
  col("Q_outG", l.Q_outG);
  col("WG", l.WG);
  col("deltaQ", l.deltaQ);
  col("approximation", std::string(statmech::to_string(l.approximation)));
  col("regime_flags", l.flags.to_string());
}

report::Table carnot_report(const CarnotSpec& spec) {
  const CycleLedger ledger = carnot_ledger(spec);
  const Cycle cycle = carnot_build(spec);
  report::Table t;
  std::vector<report::Cell> row;
  auto col = [&](std::string name, report::Cell value) {
    t.columns.push_back(std::move(name));
    row.push_back(std::move(value));
  };
  col("T_hot", spec.t_hot);
  col("T_cold", spec.t_cold);
  col("L_A", cycle.widths[0]);
  col("L_B", cycle.widths[1]);
  col("L_C", cycle.widths[2]);
  col("L_D", cycle.widths[3]);
  col("mass", spec.mass);
  col("beta_G", spec.beta_g);
  col("lambda", spec.gup().lambda());
  append_ledger(t, row, ledger);
  t.add_row(std::move(row));
  return t;
}

report::Table otto_report(const OttoSpec& spec) {
  const CycleLedger ledger = otto_ledger(spec);
  const OttoRatios ratios = otto_ratios(spec);
  report::Table t;
  std::vector<report::Cell> row;
  auto col = [&](std::string name, report::Cell value) {
    t.columns.push_back(std::move(name));
    row.push_back(std::move(value));
  };
  col("T_hot", spec.t_hot);
  col("T_cold", spec.t_cold);
  col("L_small", spec.l_small);
  col("L_large", spec.l_large);
  col("mass", spec.mass);
  col("beta_G", spec.beta_g);
  col("lambda", spec.gup().lambda());
  col("f_AD", spec.effective_f_ad());
  col("f_CB", spec.effective_f_cb());
  col("r", ratios.r);
  col("r_L_O", ratios.r_L_O);
  append_ledger(t, row, ledger);
  t.add_row(std::move(row));
  return t;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat, work and efficiency of quantum Carnot and Otto engines built on a particle "
               "in an infinite square well, with first-order GUP corrections.",
               "qheat"};
  app.footer(kFooter);
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format = "csv";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  // carnot
  CarnotSpec carnot{};
  auto* carnot_cmd = app.add_subcommand("carnot", "One-row Carnot cycle report");
  carnot_cmd->add_option("--t-hot", carnot.t_hot, "Hot bath temperature")->required();
  carnot_cmd->add_option("--t-cold", carnot.t_cold, "Cold bath temperature")->required();
  carnot_cmd->add_option("--l-a", carnot.l_a, "Well width at A (start of hot expansion)")->required();
  carnot_cmd->add_option("--l-b", carnot.l_b, "Well width at B (end of hot expansion)")->required();
  carnot_cmd->add_option("--mass", carnot.mass, "Particle mass")->required();
  carnot_cmd->add_option("--beta-g", carnot.beta_g, "GUP parameter beta_G")->capture_default_str();
  carnot_cmd->add_option("--gup-threshold", carnot.gup_threshold,
                         "Largest accepted delta = 4 m beta_G gamma")
      ->capture_default_str();
  add_format(carnot_cmd);

  // otto
  OttoSpec otto{};
  double f_ad = 0.0;
  double f_cb = 0.0;
  auto* otto_cmd = app.add_subcommand("otto", "One-row Otto cycle report");
  otto_cmd->add_option("--t-hot", otto.t_hot, "Hot bath temperature (corner B)")->required();
  otto_cmd->add_option("--t-cold", otto.t_cold, "Cold bath temperature (corner D)")->required();
  otto_cmd->add_option("--l-small", otto.l_small, "Width of the hot isochore")->required();
  otto_cmd->add_option("--l-large", otto.l_large, "Width of the cold isochore")->required();
  otto_cmd->add_option("--mass", otto.mass, "Particle mass")->required();
  otto_cmd->add_option("--beta-g", otto.beta_g, "GUP parameter beta_G")->capture_default_str();
  auto* f_ad_opt = otto_cmd->add_option(
      "--f-ad", f_ad, "beta_A / beta_cold for the GUP corners (default gamma_l/gamma_h)");
  auto* f_cb_opt = otto_cmd->add_option(
      "--f-cb", f_cb, "beta_C / beta_hot for the GUP corners (default gamma_h/gamma_l)");
  otto_cmd->add_option("--gup-threshold", otto.gup_threshold,
                       "Largest accepted delta = 4 m beta_G gamma")
      ->capture_default_str();
  add_format(otto_cmd);

  // sweep
  std::string target_name;
  sweep::SweepSpec sw{};
  std::optional<double> r_L, r, sw_f_ad, sw_f_cb, r_L_O, lo, hi;
  std::optional<int> steps;
  bool with_prefactor = false;
  double pf_t_hot = 0.0, pf_mass = 0.0, pf_beta_g = 0.0;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Figure data: stripped GUP efficiency deficit over a linear grid");
  sweep_cmd->add_option("target", target_name, "fig3 | fig4 | fig5 | fig6")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6"}));
  sweep_cmd->add_option("--r-l", r_L, "fig3: fixed r_L (default 2)");
  sweep_cmd->add_option("--r", r, "fig4/fig6: fixed r (defaults 0.5 / 0.1)");
  sweep_cmd->add_option("--f-ad", sw_f_ad, "fig5/fig6: f_AD (default 0.5)");
  sweep_cmd->add_option("--f-cb", sw_f_cb, "fig5/fig6: f_CB (default 2)");
  sweep_cmd->add_option("--r-l-o", r_L_O, "fig5: fixed r_L_O (default 5)");
  sweep_cmd->add_option("--min", lo, "Lower end of the swept variable");
  sweep_cmd->add_option("--max", hi, "Upper end of the swept variable");
  sweep_cmd->add_option("--steps", steps, "Grid points, endpoints included (default 41)");
  auto* pf_flag = sweep_cmd->add_flag("--with-prefactor", with_prefactor,
                                      "Add rel_deficit = delta_eta / eta (needs --t-hot, --mass, --beta-g)");
  auto* pf_t = sweep_cmd->add_option("--t-hot", pf_t_hot, "Hot bath temperature for the prefactor");
  auto* pf_m = sweep_cmd->add_option("--mass", pf_mass, "Particle mass for the prefactor");
  auto* pf_b = sweep_cmd->add_option("--beta-g", pf_beta_g, "GUP parameter for the prefactor");
  pf_t->needs(pf_flag);
  pf_m->needs(pf_flag);
  pf_b->needs(pf_flag);
  add_format(sweep_cmd);

  // validate
  validation::Options vopts{};
  auto* validate_cmd = app.add_subcommand("validate", "Run every oracle-versus-closed-form check");
  validate_cmd->add_option("--beta-gamma", vopts.beta_gamma, "Probe point of the closed-form validity check")
      ->capture_default_str();
  validate_cmd->add_option("--steps", vopts.steps, "Path-integration steps per leg")->capture_default_str();
  validate_cmd->add_option("--tail-tol", vopts.tail_tol, "Absolute truncation tolerance of lattice sums")
      ->capture_default_str();
  add_format(validate_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qheat: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (carnot_cmd->parsed()) {
      emit(out, carnot_report(carnot), format);
    } else if (otto_cmd->parsed()) {
      if (f_ad_opt->count() > 0)
        otto.f_ad = f_ad;
      if (f_cb_opt->count() > 0)
        otto.f_cb = f_cb;
      emit(out, otto_report(otto), format);
    } else if (sweep_cmd->parsed()) {
      const sweep::Target target = *sweep::parse_target(target_name);
      sw = sweep::default_spec(target);
      if (r_L) sw.r_L = *r_L;
      if (r) sw.r = *r;
      if (sw_f_ad) sw.f_ad = *sw_f_ad;
      if (sw_f_cb) sw.f_cb = *sw_f_cb;
      if (r_L_O) sw.r_L_O = *r_L_O;
      if (lo) sw.min = *lo;
      if (hi) sw.max = *hi;
      if (steps) sw.steps = *steps;
      if (with_prefactor) {
        if (pf_t->count() == 0 || pf_m->count() == 0 || pf_b->count() == 0) {
          err << "qheat: --with-prefactor requires --t-hot, --mass and --beta-g\n";
          return kUsage;
        }
        sw.prefactor = sweep::Prefactor{pf_t_hot, pf_mass, pf_beta_g};
      }
      emit(out, sweep::run(sw), format);
    } else if (validate_cmd->parsed()) {
      const auto checks = validation::run(vopts);
      emit(out, validation::to_table(checks), format);
      if (!validation::all_passed(checks)) {
        for (const auto& c : checks)
          if (!c.passed)
            err << "qheat: check " << c.name << " failed: measured "
                << report::format_number(c.measured)
                << (c.comparison == validation::Comparison::AtMost ? " > " : " <= ")
                << report::format_number(c.tolerance) << '\n';
        return kCheckFailed;
      }
    }
  } catch (const RegimeError& e) {
    err << "qheat: " << e.what() << '\n';
    return kRegime;
  } catch (const DegenerateCycleError& e) {
    err << "qheat: " << e.what() << '\n';
    return kRegime;
  } catch (const ConvergenceError& e) {
    err << "qheat: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    // DomainError, SpecError, ContractError, PoleError
    err << "qheat: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

} // namespace qheat::cli
