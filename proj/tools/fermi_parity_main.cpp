// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT
//
// fermi-parity: thermal parity-helicity two-qubit model of a relativistic
// Fermi gas. Subcommands: coeffs, table, state, sweep, selfcheck.
// Exit codes: 0 success, 1 usage error, 2 numerical or I/O failure,
// 3 self-check failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermipar/qinfo.hpp"
#include "fermipar/reference.hpp"
#include "fermipar/selfcheck.hpp"
#include "fermipar/sweep.hpp"
#include "fermipar/thermal.hpp"

namespace {

using nlohmann::json;

std::string num(double x, int sig) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, x);
  return buf;
}

// Writes to stdout when path is empty or "-", otherwise to the file.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error("cannot open output file: " + path);
      }
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (file_.is_open() && !file_) {
      throw std::runtime_error("write failure on output file");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

struct CommonFlags {
  int s = 1;
  double tm = 1.0;
  double chi = M_PI / 4;
  double mu = 0.0;
  bool deg = false;
  double tol = 1e-13;
  std::string format = "text";
  std::string out_path;
};

double to_radians(double value, bool deg) {
  return deg ? value * M_PI / 180.0 : value;
}

int run_coeffs(const CommonFlags& flags) {
  const auto tc = fermipar::thermal::coefficients(flags.s, flags.tm, flags.tol);
  OutputSink sink(flags.out_path);
  if (flags.format == "json") {
    json j;
    j["s"] = flags.s;
    j["t_m"] = flags.tm;
    j["m_pp"] = tc.m_pp;
    j["m_mm"] = tc.m_mm;
    j["m_pm"] = tc.m_pm;
    sink.stream() << j.dump(2) << '\n';
  } else {
    sink.stream() << num(tc.m_pp, 5) << ' ' << num(tc.m_mm, 5) << ' '
                  << num(tc.m_pm, 5) << '\n';
  }
  sink.finish();
  return 0;
}

struct CellCheck {
  double t_m;
  std::string column;
  double computed;
  double published;
  bool pass;
};

std::vector<CellCheck> table1_cells(double tol) {
  std::vector<CellCheck> cells;
  for (const auto& row : fermipar::reference::kCoefficientTable) {
    const auto tc = fermipar::thermal::coefficients(1, row.t_m, tol);
    const double computed[3] = {tc.m_pp, tc.m_mm, tc.m_pm};
    const double published[3] = {row.m_pp, row.m_mm, row.m_pm};
    const char* names[3] = {"m_pp", "m_mm", "m_pm"};
    for (int c = 0; c < 3; ++c) {
      cells.push_back({row.t_m, names[c], computed[c], published[c],
                       fermipar::reference::cell_matches(computed[c], published[c])});
    }
  }
  return cells;
}

std::vector<CellCheck> table2_cells(double tol) {
  std::vector<CellCheck> cells;
  for (const auto& row : fermipar::reference::kDifferenceTable) {
    const auto c1 = fermipar::thermal::coefficients(1, row.t_m, tol);
    const auto c0 = fermipar::thermal::coefficients(0, row.t_m, tol);
    const double d1 = c1.m_pp - c1.m_mm;
    const double d0 = c0.m_pp - c0.m_mm;
    cells.push_back({row.t_m, "diff_s1", d1, row.diff,
                     fermipar::reference::cell_matches(d1, row.diff)});
    cells.push_back({row.t_m, "diff_s0", d0, -row.diff,
                     fermipar::reference::cell_matches(d0, -row.diff)});
  }
  return cells;
}

void render_cells(std::ostream& os, const std::string& title,
                  const std::vector<CellCheck>& cells) {
  os << title << '\n';
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %-8s %-24s %-12s %-10s %-10s %s",
                "t_m", "column", "computed", "published", "abs.dev", "rel.dev",
                "verdict");
  os << line << '\n';
  for (const auto& c : cells) {
    const double abs_dev = std::abs(c.computed - c.published);
    const double rel_dev =
        c.published != 0.0 ? abs_dev / std::abs(c.published) : abs_dev;
    std::snprintf(line, sizeof(line), "%-10s %-8s %-24s %-12s %-10s %-10s %s",
                  num(c.t_m, 4).c_str(), c.column.c_str(),
                  num(c.computed, 17).c_str(), num(c.published, 6).c_str(),
                  num(abs_dev, 3).c_str(), num(rel_dev, 3).c_str(),
                  c.pass ? "PASS" : "FAIL");
    os << line << '\n';
  }
}

int run_table(int which, const CommonFlags& flags) {
  std::vector<CellCheck> t1, t2;
  if (which == 0 || which == 1) t1 = table1_cells(flags.tol);
  if (which == 0 || which == 2) t2 = table2_cells(flags.tol);

  OutputSink sink(flags.out_path);
  std::size_t passed = 0, total = 0;
  for (const auto* set : {&t1, &t2}) {
    for (const auto& c : *set) {
      ++total;
      passed += c.pass ? 1 : 0;
    }
  }
  if (flags.format == "json") {
    json j;
    auto dump_cells = [](const std::vector<CellCheck>& cells) {
      json arr = json::array();
      for (const auto& c : cells) {
        arr.push_back({{"t_m", c.t_m},
                       {"column", c.column},
                       {"computed", c.computed},
                       {"published", c.published},
                       {"pass", c.pass}});
      }
      return arr;
    };
    if (!t1.empty()) j["coefficients"] = dump_cells(t1);
    if (!t2.empty()) j["differences"] = dump_cells(t2);
    j["cells_total"] = total;
    j["cells_passed"] = passed;
    sink.stream() << j.dump(2) << '\n';
  } else {
    if (!t1.empty()) {
      render_cells(sink.stream(),
                   "table 1: thermal coefficients, branch s=1 (published at 5 "
                   "significant figures)",
                   t1);
    }
    if (!t2.empty()) {
      if (!t1.empty()) sink.stream() << '\n';
      render_cells(sink.stream(),
                   "table 2: sector differences m_pp - m_mm for s=1 and s=0",
                   t2);
    }
    sink.stream() << "\nsummary: " << passed << '/' << total << " cells PASS\n";
  }
  sink.finish();
  return passed == total ? 0 : 2;
}

json matrix_to_json(const fermipar::linalg::Mat4& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 4; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (int j = 0; j < 4; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return {{"real", re}, {"imag", im}};
}

int run_state(const CommonFlags& flags) {
  namespace qi = fermipar::qinfo;
  const qi::ModelParams params{flags.s, flags.tm, to_radians(flags.chi, flags.deg),
                               to_radians(flags.mu, flags.deg)};
  qi::validate_params(params);
  const auto tc = fermipar::thermal::coefficients(params.s, params.t_m, flags.tol);
  const auto d = qi::assemble_rho12(params, tc);

  const auto closed = qi::rho12_eigenvalues_closed(tc, d.angular);
  const auto solver = fermipar::linalg::hermitian_eigenvalues<4>(d.rho);
  const auto rho1 = qi::reduce_parity(d.rho);
  const auto rho2 = qi::reduce_helicity(d.rho);
  const auto s1 = qi::spectral_data(rho1);
  const auto s2 = qi::spectral_data(rho2);
  const auto s12 = qi::spectral_data(d.rho);
  const auto r1_closed = qi::rho1_eigenvalues_closed(tc, params.chi);
  const double h_pp = qi::helicity_population(tc, params.chi, params.mu);
  const double info = qi::mutual_information(params, tc);
  const auto ppt = qi::ppt_check(d.rho);
  const double trace = d.rho.trace().real();
  const double kelvin = fermipar::thermal::kelvin_from_tm(params.t_m);

  // Charge-conjugation summary: spectrum invariance and population swap.
  const auto conj = qi::charge_conjugate(d.rho);
  const auto conj_eigs = fermipar::linalg::hermitian_eigenvalues<4>(conj);
  double spec_dev = 0.0;
  for (int i = 0; i < 4; ++i) {
    spec_dev = std::max(spec_dev, std::abs(conj_eigs[i] - solver[i]));
  }
  const auto conj_parity = qi::reduce_parity(conj);
  const double swap_dev =
      std::max(std::abs(conj_parity(0, 0).real() - rho1(1, 1).real()),
               std::abs(conj_parity(1, 1).real() - rho1(0, 0).real()));

  OutputSink sink(flags.out_path);
  std::ostream& os = sink.stream();
  if (flags.format == "json") {
    json j;
    j["params"] = {{"s", params.s},
                   {"t_m", params.t_m},
                   {"chi", params.chi},
                   {"mu", params.mu}};
    j["t_kelvin_electron"] = kelvin;
    j["coefficients"] = {
        {"m_pp", tc.m_pp}, {"m_mm", tc.m_mm}, {"m_pm", tc.m_pm}};
    j["trace"] = trace;
    j["rho12"] = matrix_to_json(d.rho);
    j["eigenvalues_closed"] = closed;
    j["eigenvalues_solver"] = std::vector<double>(solver.begin(), solver.end());
    j["rho1"] = {{"m_pp", rho1(0, 0).real()},
                 {"m_mm", rho1(1, 1).real()},
                 {"coherence", rho1(0, 1).real()},
                 {"eigenvalues", s1.eigenvalues},
                 {"eigenvalues_closed",
                  std::vector<double>(r1_closed.begin(), r1_closed.end())},
                 {"entropy", s1.entropy_nats}};
    j["rho2"] = {{"h_pp", h_pp},
                 {"h_mm", 1.0 - h_pp},
                 {"eigenvalues", s2.eigenvalues},
                 {"entropy", s2.entropy_nats}};
    j["entropy_rho12"] = s12.entropy_nats;
    j["mutual_info"] = info;
    j["ppt"] = {{"max_pt_deviation", ppt.max_pt_deviation},
                {"min_pt_eigenvalue", ppt.min_pt_eigenvalue},
                {"pt_invariant", ppt.pt_invariant},
                {"separable", ppt.separable}};
    j["charge_conjugation"] = {{"spectrum_deviation", spec_dev},
                               {"population_swap_deviation", swap_dev}};
    os << j.dump(2) << '\n';
  } else {
    char line[200];
    os << "parameters: s=" << params.s << " t_m=" << num(params.t_m, 15)
       << " chi=" << num(params.chi, 15) << " mu=" << num(params.mu, 15)
       << " (radians)\n";
    os << "t_kelvin (electron rest energy): " << num(kelvin, 15) << '\n';
    os << "coefficients: m_pp=" << num(tc.m_pp, 15)
       << " m_mm=" << num(tc.m_mm, 15) << " m_pm=" << num(tc.m_pm, 15) << '\n';
    std::snprintf(line, sizeof(line), "trace: %.6f", trace);
    os << line << '\n';
    os << "rho12 (real part):\n";
    for (int i = 0; i < 4; ++i) {
      os << " ";
      for (int j = 0; j < 4; ++j) os << ' ' << num(d.rho(i, j).real(), 15);
      os << '\n';
    }
    os << "rho12 (imag part):\n";
    for (int i = 0; i < 4; ++i) {
      os << " ";
      for (int j = 0; j < 4; ++j) os << ' ' << num(d.rho(i, j).imag(), 15);
      os << '\n';
    }
    os << "eigenvalues (closed form):";
    for (double x : closed) os << ' ' << num(x, 15);
    os << "\neigenvalues (dense solver):";
    for (double x : solver) os << ' ' << num(x, 15);
    os << '\n';
    os << "rho1 (parity): m_pp=" << num(rho1(0, 0).real(), 15)
       << " m_mm=" << num(rho1(1, 1).real(), 15)
       << " coherence=" << num(rho1(0, 1).real(), 15) << '\n';
    os << "rho1 eigenvalues: " << num(s1.eigenvalues[0], 15) << ' '
       << num(s1.eigenvalues[1], 15) << "  entropy: " << num(s1.entropy_nats, 15)
       << '\n';
    os << "rho2 (helicity): h_pp=" << num(h_pp, 15)
       << " h_mm=" << num(1.0 - h_pp, 15) << "  entropy: " << num(s2.entropy_nats, 15)
       << '\n';
    os << "entropy_rho12: " << num(s12.entropy_nats, 15) << '\n';
    os << "mutual_info: " << num(info, 15) << '\n';
    os << "ppt: max|PT-rho|=" << num(ppt.max_pt_deviation, 3)
       << " min_eigenvalue=" << num(ppt.min_pt_eigenvalue, 15)
       << " separable=" << (ppt.separable ? "yes" : "no") << '\n';
    os << "charge conjugation: spectrum deviation=" << num(spec_dev, 3)
       << " parity populations swapped (deviation=" << num(swap_dev, 3)
       << ")\n";
  }
  sink.finish();
  return 0;
}

int run_sweep_cmd(const fermipar::sweep::SweepSpec& spec,
                  const std::vector<std::string>& columns,
                  const CommonFlags& flags) {
  const auto records = fermipar::sweep::run_sweep(spec);
  const auto& cols =
      columns.empty() ? fermipar::sweep::all_columns() : columns;

  OutputSink sink(flags.out_path);
  std::ostream& os = sink.stream();
  if (flags.format == "json") {
    json arr = json::array();
    for (const auto& r : records) {
      json row;
      for (const auto& c : cols) row[c] = fermipar::sweep::column_value(r, c);
      arr.push_back(row);
    }
    os << arr.dump(2) << '\n';
  } else if (flags.format == "text") {
    for (const auto& c : cols) os << c << (c == cols.back() ? "" : " ");
    os << '\n';
    for (const auto& r : records) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        os << (i ? " " : "") << num(fermipar::sweep::column_value(r, cols[i]), 9);
      }
      os << '\n';
    }
  } else {
    fermipar::sweep::write_csv(os, records, cols);
  }
  sink.finish();
  return 0;
}

int run_selfcheck(bool quick, double inject_fault) {
  const auto start = std::chrono::steady_clock::now();
  const auto results =
      fermipar::selfcheck::run({quick, inject_fault});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
              << r.detail << '\n';
    passed += r.passed ? 1 : 0;
  }
  char line[96];
  std::snprintf(line, sizeof(line), "selfcheck: %zu/%zu passed in %.2f s",
                passed, results.size(), seconds);
  std::cout << line << '\n';
  return passed == results.size() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Thermal parity-helicity two-qubit model of a relativistic Fermi gas"};
  app.set_version_flag("--version", "fermi-parity 0.1.0");
  app.require_subcommand(1);

  CommonFlags flags;

  auto add_common = [&flags](CLI::App* cmd, bool with_angles) {
    cmd->add_option("--s", flags.s, "branch: 1 fermion-like, 0 antifermion-like")
        ->check(CLI::IsMember({0, 1}));
    cmd->add_option("--tol", flags.tol,
                    "absolute quadrature tolerance per integral")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", flags.out_path, "output path ('-' = stdout)");
    if (with_angles) {
      cmd->add_option("--chi", flags.chi, "superposition angle (default pi/4)");
      cmd->add_option("--mu", flags.mu, "superposition phase (default 0)");
      cmd->add_flag("--deg", flags.deg, "interpret --chi/--mu in degrees");
    }
  };

  auto* coeffs =
      app.add_subcommand("coeffs", "Thermal coefficients at one temperature");
  coeffs->add_option("--tm", flags.tm, "reduced temperature T/m")->required();
  add_common(coeffs, false);
  coeffs->add_option("--format", flags.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand(
      "table", "Recompute the published coefficient and difference tables");
  int which = 0;
  table->add_option("which", which, "1 = coefficients, 2 = differences")
      ->check(CLI::IsMember({1, 2}));
  add_common(table, false);
  table->add_option("--format", flags.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* state = app.add_subcommand(
      "state", "Full density-matrix report at one parameter point");
  state->add_option("--tm", flags.tm, "reduced temperature T/m")->required();
  add_common(state, true);
  state->add_option("--format", flags.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Temperature scan writing one record per point");
  fermipar::sweep::SweepSpec spec;
  std::string columns_arg;
  bool linear = false;
  sweep_cmd->add_option("--tmin", spec.t_min, "lowest t_m (default 1e-3)");
  sweep_cmd->add_option("--tmax", spec.t_max, "highest t_m (default 1e2)");
  sweep_cmd->add_option("--points", spec.points, "grid size (default 61)");
  sweep_cmd->add_flag("--linear", linear, "linear grid (default logarithmic)");
  sweep_cmd->add_option("--threads", spec.threads,
                        "worker threads (default 0 = hardware concurrency; "
                        "results are identical for any value)");
  sweep_cmd->add_option("--columns", columns_arg,
                        "comma-separated subset of: t_m,m_pp,m_mm,m_pm,h_pp,"
                        "entropy_rho1,entropy_rho2,entropy_rho12,mutual_info,"
                        "min_pt_eig");
  add_common(sweep_cmd, true);
  sweep_cmd->add_option("--format", flags.format, "csv | json | text")
      ->check(CLI::IsMember({"csv", "json", "text"}));

  auto* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Run the structural invariant suite");
  bool quick = false;
  double inject_fault = 0.0;
  selfcheck_cmd->add_flag("--quick", quick, "reduced grids, finishes in seconds");
  selfcheck_cmd->add_option(
      "--inject-fault", inject_fault,
      "negative control: perturb one computed coefficient by this amount");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(coeffs)) return run_coeffs(flags);
    if (app.got_subcommand(table)) return run_table(which, flags);
    if (app.got_subcommand(state)) return run_state(flags);
    if (app.got_subcommand(sweep_cmd)) {
      if (flags.format == "text" && sweep_cmd->count("--format") == 0) {
        flags.format = "csv";  // sweep's natural default
      }
      spec.log_spaced = !linear;
      spec.s = flags.s;
      spec.chi = sweep_cmd->count("--chi") ? to_radians(flags.chi, flags.deg)
                                           : spec.chi;
      spec.mu = sweep_cmd->count("--mu") ? to_radians(flags.mu, flags.deg)
                                         : spec.mu;
      spec.abs_tol = flags.tol;
      std::vector<std::string> columns;
      if (!columns_arg.empty()) {
        std::stringstream ss(columns_arg);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (!item.empty()) columns.push_back(item);
        }
      }
      return run_sweep_cmd(spec, columns, flags);
    }
    if (app.got_subcommand(selfcheck_cmd)) {
      return run_selfcheck(quick, inject_fault);
    }
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
