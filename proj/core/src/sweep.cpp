// Copyright (c) 2026 fermi-parity contributors
// SPDX-License-Identifier: MIT

#include "fermipar/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace fermipar::sweep {

const std::vector<std::string>& all_columns() {
  static const std::vector<std::string> cols = {
      "t_m",          "m_pp",         "m_mm",
      "m_pm",         "h_pp",         "entropy_rho1",
      "entropy_rho2", "entropy_rho12", "mutual_info",
      "min_pt_eig"};
  return cols;
}

double column_value(const OutputRecord& record, const std::string& name) {
  if (name == "t_m") return record.t_m;
  if (name == "m_pp") return record.m_pp;
  if (name == "m_mm") return record.m_mm;
  if (name == "m_pm") return record.m_pm;
  if (name == "h_pp") return record.h_pp;
  if (name == "entropy_rho1") return record.entropy_rho1;
  if (name == "entropy_rho2") return record.entropy_rho2;
  if (name == "entropy_rho12") return record.entropy_rho12;
  if (name == "mutual_info") return record.mutual_info;
  if (name == "min_pt_eig") return record.min_pt_eig;
  throw std::invalid_argument("column_value: unknown column '" + name + "'");
}

OutputRecord evaluate_point(int s, double t_m, double chi, double mu,
                            double abs_tol) {
  const qinfo::ModelParams params{s, t_m, chi, mu};
  qinfo::validate_params(params);
  const auto tc = thermal::coefficients(s, t_m, abs_tol);
  const auto d = qinfo::assemble_rho12(params, tc);

  OutputRecord r;
  r.t_m = t_m;
  r.m_pp = tc.m_pp;
  r.m_mm = tc.m_mm;
  r.m_pm = tc.m_pm;
  r.h_pp = qinfo::helicity_population(tc, chi, mu);
  r.entropy_rho1 = qinfo::spectral_data(qinfo::reduce_parity(d.rho)).entropy_nats;
  r.entropy_rho2 =
      qinfo::spectral_data(qinfo::reduce_helicity(d.rho)).entropy_nats;
  r.entropy_rho12 = qinfo::spectral_data(d.rho).entropy_nats;
  r.mutual_info = qinfo::mutual_information(params, tc);
  r.min_pt_eig = qinfo::ppt_check(d.rho).min_pt_eigenvalue;
  return r;
}

std::vector<OutputRecord> run_sweep(const SweepSpec& spec) {
  if (spec.points < 2 || spec.points > 100000) {
    throw std::invalid_argument("run_sweep: points must lie in [2, 100000]");
  }
  if (!std::isfinite(spec.t_min) || !(spec.t_min > 0.0) ||
      !std::isfinite(spec.t_max) || !(spec.t_max > spec.t_min)) {
    throw std::invalid_argument("run_sweep: need 0 < t_min < t_max, finite");
  }
  const qinfo::ModelParams probe{spec.s, spec.t_min, spec.chi, spec.mu};
  qinfo::validate_params(probe);

  std::vector<double> grid(spec.points);
  const double n1 = spec.points - 1;
  for (int i = 0; i < spec.points; ++i) {
    grid[i] = spec.log_spaced
                  ? spec.t_min * std::pow(spec.t_max / spec.t_min, i / n1)
                  : spec.t_min + (spec.t_max - spec.t_min) * (i / n1);
  }

  std::vector<OutputRecord> records(spec.points);
  unsigned n_threads = spec.threads > 0
                           ? static_cast<unsigned>(spec.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, spec.points);

  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= spec.points) return;
      try {
        records[i] =
            evaluate_point(spec.s, grid[i], spec.chi, spec.mu, spec.abs_tol);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records,
               const std::vector<std::string>& columns) {
  if (columns.empty()) {
    throw std::invalid_argument("write_csv: no columns selected");
  }
  const OutputRecord probe{};
  for (const auto& c : columns) column_value(probe, c);  // reject bad names
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "," : "") << columns[c];
  }
  out << '\n';
  char buf[32];
  for (const auto& r : records) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g", column_value(r, columns[c]));
      out << (c ? "," : "") << buf;
    }
    out << '\n';
  }
}

}  // namespace fermipar::sweep
