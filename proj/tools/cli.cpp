// Copyright 2026 The choqdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdint>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "choqdist/capacity.hpp"
#include "choqdist/distribution.hpp"
#include "choqdist/error.hpp"
#include "choqdist/lovasz.hpp"
#include "choqdist/oracle.hpp"
#include "choqdist/parallel.hpp"

namespace choqdist::cli {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x,
                                 std::chars_format::general, 12);
  return std::string(buffer, end);
}

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string capacity_path;
  int threads = 0;
  std::vector<double> point;
  double at = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 512;
  int order = 2;
  double p = 0.5;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
};

void print_classification(const Capacity& v, std::ostream& out) {
  const auto c = classify(v);
  out << "property,value\n"
      << "monotone," << flag(c.monotone) << '\n'
      << "lattice_polynomial," << flag(c.lattice_polynomial) << '\n'
      << "cardinality_based," << flag(c.cardinality_based) << '\n'
      << "additive," << flag(c.additive) << '\n';
}

void print_grid(const Capacity& v, const Options& o, std::ostream& out) {
  const auto grid = distribution_grid(v, {o.lo, o.hi, o.points});
  out << "y,cdf,pdf,note\n";
  for (std::size_t j = 0; j < grid.y.size(); ++j) {
    out << format_number(grid.y[j]) << ',' << format_number(grid.cdf[j]) << ','
        << format_number(grid.pdf[j]) << ',';
    if (grid.point_mass) {
      out << "point_mass";
    } else if (grid.at_knot[j]) {
      out << "knot";
    }
    out << '\n';
  }
}

void print_moments(const Capacity& v, const Options& o, std::ostream& out) {
  const auto table = moment_table(v, o.order);
  out << "r,raw,central\n";
  for (int r = 1; r <= table.order; ++r) {
    out << r << ',' << format_number(table.raw[r - 1]) << ','
        << format_number(table.central[r - 1]) << '\n';
  }
  out << "mean," << format_number(table.mean) << '\n'
      << "std," << format_number(table.stddev) << '\n';
}

int run_check(const Capacity& v, const Options& o, std::ostream& out,
              std::ostream& err) {
  if (o.count == 0) throw Error(ErrorKind::domain, "--count must be positive");
  const auto batch = oracle::sample(v, o.count, o.seed);
  const double ks = oracle::ks_statistic(batch, v);
  const double threshold = oracle::ks_critical_value(o.count);
  const bool pass = ks < threshold;
  out << "statistic,value\n"
      << "ks," << format_number(ks) << '\n'
      << "threshold," << format_number(threshold) << '\n'
      << "count," << o.count << '\n'
      << "seed," << o.seed << '\n'
      << "result," << (pass ? "pass" : "fail") << '\n';
  if (!pass) {
    err << "error:check:KS statistic " << format_number(ks)
        << " is not below " << format_number(threshold) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact distribution, density and moments of a Lovász extension "
               "(discrete Choquet integral) of independent uniform inputs",
               "choqdist"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_option("--threads", o.threads,
                 "worker threads (default: all cores); never changes output")
      ->check(CLI::PositiveNumber);

  auto command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("capacity", o.capacity_path, "capacity JSON file")
        ->required();
    return sub;
  };

  auto* classify_cmd = command("classify", "monotone / lattice polynomial / "
                                           "cardinality-based / additive flags");
  auto* eval_cmd = command("eval", "evaluate h(x) by both representations");
  eval_cmd->add_option("--point", o.point, "comma-separated x_1,...,x_n")
      ->delimiter(',')
      ->required();
  auto* cdf_cmd = command("cdf", "P(Y <= y)");
  cdf_cmd->add_option("--at", o.at, "y")->required();
  auto* pdf_cmd = command("pdf", "density of Y at y");
  pdf_cmd->add_option("--at", o.at, "y")->required();
  auto* grid_cmd = command("grid", "CSV of y,cdf,pdf on an even grid");
  grid_cmd->add_option("--lo", o.lo, "first grid point")->capture_default_str();
  grid_cmd->add_option("--hi", o.hi, "last grid point")->capture_default_str();
  grid_cmd->add_option("--points", o.points, "number of grid points")
      ->capture_default_str();
  auto* moments_cmd = command("moments", "raw and central moments");
  moments_cmd->add_option("--order", o.order, "highest moment order")
      ->capture_default_str();
  auto* quantile_cmd = command("quantile", "smallest y with cdf(y) >= p");
  quantile_cmd->add_option("--p", o.p, "probability")->required();
  auto* sample_cmd = command("sample", "seeded Monte Carlo realizations");
  sample_cmd->add_option("--count", o.count, "sample count")
      ->capture_default_str();
  sample_cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  auto* check_cmd = command("check", "KS test of the exact cdf against samples");
  check_cmd->add_option("--count", o.count, "sample count")
      ->capture_default_str();
  check_cmd->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error:parse:" << e.what() << '\n';
    return 2;
  }

  try {
    if (o.threads > 0) set_thread_count(o.threads);
    const Capacity v = load_capacity_file(o.capacity_path);

    if (classify_cmd->parsed()) {
      print_classification(v, out);
    } else if (eval_cmd->parsed()) {
      const double sorted = eval_sorted(v, o.point);
      const double moebius = eval_moebius(moebius_transform(v), o.point);
      out << "representation,value\n"
          << "sorted," << format_number(sorted) << '\n'
          << "moebius," << format_number(moebius) << '\n';
    } else if (cdf_cmd->parsed()) {
      out << format_number(cdf(v, o.at)) << '\n';
    } else if (pdf_cmd->parsed()) {
      out << format_number(pdf(v, o.at)) << '\n';
    } else if (grid_cmd->parsed()) {
      print_grid(v, o, out);
    } else if (moments_cmd->parsed()) {
      print_moments(v, o, out);
    } else if (quantile_cmd->parsed()) {
      out << format_number(quantile(v, o.p)) << '\n';
    } else if (sample_cmd->parsed()) {
      const auto batch = oracle::sample(v, o.count, o.seed);
      out << "value\n";
      for (double y : batch.values) out << format_number(y) << '\n';
    } else if (check_cmd->parsed()) {
      return run_check(v, o, out, err);
    }
  } catch (const Error& e) {
    err << "error:" << to_string(e.kind()) << ':' << e.what() << '\n';
    return e.kind() == ErrorKind::parse ? 2 : 1;
  }
  return 0;
}

}  // namespace choqdist::cli
