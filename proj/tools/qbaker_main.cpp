// Command-line surface for building and verifying quantum baker's map
// propagators. Subcommands:
//
//   propagator    write the N x N propagator matrix (json or csv)
//   verify        run named identity checks, one JSON line per (check, N)
//   classical     iterate the torus map, the covering map, or its inverse
//   semiclassics  expectation values, classical-limit scans, the projector
//                 non-commutativity sum
//
// stdout carries data only; diagnostics go to stderr. Exit codes: 0 success,
// 1 I/O failure, 2 invalid arguments, 3 a verify check failed.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qbaker/checks.hpp"
#include "qbaker/classical_map.hpp"
#include "qbaker/propagator.hpp"
#include "qbaker/semiclassics.hpp"
#include "qbaker/torus_kinematics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

// 17 significant digits: enough to reproduce any double bit-exactly.
std::string fmt17(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Shortest representation that round-trips.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

qbaker::PropagatorVariant parse_variant(const std::string& name) {
  if (name == "corrected") return qbaker::PropagatorVariant::corrected;
  if (name == "bv") return qbaker::PropagatorVariant::balazs_voros;
  throw std::invalid_argument("unknown variant '" + name +
                              "' (expected corrected or bv)");
}

void write_matrix_csv(std::ostream& out, const qbaker::ComplexMatrix& m) {
  out << "row,col,re,im\n";
  for (std::size_t row = 0; row < m.dim(); ++row) {
    for (std::size_t col = 0; col < m.dim(); ++col) {
      out << row << ',' << col << ',' << fmt17(m(row, col).real()) << ','
          << fmt17(m(row, col).imag()) << '\n';
    }
  }
}

void write_matrix_json(std::ostream& out, const qbaker::ComplexMatrix& m,
                       int n, const std::string& variant) {
  out << "{\"n\": " << n << ", \"variant\": \"" << variant << "\", \"re\": [";
  for (std::size_t row = 0; row < m.dim(); ++row) {
    out << (row == 0 ? "[" : ", [");
    for (std::size_t col = 0; col < m.dim(); ++col) {
      out << (col == 0 ? "" : ", ") << fmt17(m(row, col).real());
    }
    out << "]";
  }
  out << "], \"im\": [";
  for (std::size_t row = 0; row < m.dim(); ++row) {
    out << (row == 0 ? "[" : ", [");
    for (std::size_t col = 0; col < m.dim(); ++col) {
      out << (col == 0 ? "" : ", ") << fmt17(m(row, col).imag());
    }
    out << "]";
  }
  out << "]}\n";
}

int cmd_propagator(int n, const std::string& variant, const std::string& format,
                   const std::string& out_path) {
  const qbaker::PlanckN planck(n);
  const qbaker::ComplexMatrix m = qbaker::build(parse_variant(variant), planck);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open output file '" << out_path << "'\n";
      return kExitIo;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  if (format == "csv") {
    write_matrix_csv(out, m);
  } else {
    write_matrix_json(out, m, n, variant);
  }
  out.flush();
  if (!out) {
    std::cerr << "error: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

void write_report_line(std::ostream& out, const qbaker::CheckReport& report) {
  out << "{\"check\": \"" << report.check_name << "\", \"n\": " << report.n;
  for (const auto& [key, value] : report.context) {
    out << ", \"" << key << "\": \"" << value << "\"";
  }
  out << ", \"residual\": " << fmt(report.residual)
      << ", \"threshold\": " << fmt(report.threshold)
      << ", \"passed\": " << (report.passed ? "true" : "false") << "}\n";
}

int cmd_verify(const std::vector<int>& n_list,
               const std::optional<std::string>& variant,
               const std::vector<std::string>& check_names) {
  std::vector<qbaker::NamedCheck> checks;
  for (const std::string& name : check_names) {
    const auto check = qbaker::parse_check_name(name);
    if (!check) {
      std::cerr << "error: unknown check '" << name << "'\n";
      return kExitUsage;
    }
    checks.push_back(*check);
  }
  std::vector<qbaker::PropagatorVariant> variants;
  if (variant) {
    variants.push_back(parse_variant(*variant));
  } else {
    variants = {qbaker::PropagatorVariant::corrected,
                qbaker::PropagatorVariant::balazs_voros};
  }
  const auto reports = qbaker::run_checks(checks, n_list, variants);
  bool all_passed = true;
  for (const auto& report : reports) {
    write_report_line(std::cout, report);
    all_passed = all_passed && report.passed;
  }
  std::cout.flush();
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_classical(const std::string& which, double x, double p, int iters) {
  std::cout << "step,x,p\n";
  if (which == "map") {
    const auto orbit = qbaker::torus_orbit(qbaker::TorusPoint(x, p), iters);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      std::cout << i << ',' << fmt(orbit[i].x) << ',' << fmt(orbit[i].p) << '\n';
    }
  } else {
    const auto orbit = qbaker::cover_orbit(qbaker::PlanePoint(x, p), iters,
                                           which == "inverse");
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      std::cout << i << ',' << fmt(orbit[i].x) << ',' << fmt(orbit[i].p) << '\n';
    }
  }
  std::cout.flush();
  return kExitOk;
}

int cmd_expect(double x0, double p0, int a, int b, double hbar) {
  const qbaker::CoherentStateParams params(x0, p0, hbar);
  const std::complex<double> value =
      qbaker::expect_harmonic_continuum(params, a, b);
  std::cout << "re,im\n" << fmt(value.real()) << ',' << fmt(value.imag()) << '\n';
  std::cout.flush();
  return kExitOk;
}

int cmd_limit_scan(double x0, double p0, int a, int b, std::vector<int> n_list,
                   const std::string& variant) {
  std::sort(n_list.begin(), n_list.end());
  n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
  const auto rows =
      qbaker::weak_limit_scan(x0, p0, a, b, n_list, parse_variant(variant));
  std::cout << "N,re_q,im_q,re_c,im_c,abs_error\n";
  for (const auto& row : rows) {
    std::cout << row.n << ',' << fmt(row.quantum_value.real()) << ','
              << fmt(row.quantum_value.imag()) << ','
              << fmt(row.classical_value.real()) << ','
              << fmt(row.classical_value.imag()) << ',' << fmt(row.abs_error)
              << '\n';
  }
  std::cout.flush();
  return kExitOk;
}

int cmd_noncommute(std::vector<double> hbar_list, long k_max) {
  std::sort(hbar_list.begin(), hbar_list.end(), std::greater<>());
  hbar_list.erase(std::unique(hbar_list.begin(), hbar_list.end()),
                  hbar_list.end());
  const std::complex<double> limit{0.0, -std::log(2.0) / std::numbers::pi};
  std::cout << "hbar,re,im,abs_dev_from_limit\n";
  for (double hbar : hbar_list) {
    const long k = k_max > 0 ? k_max : qbaker::noncommute_min_kmax(hbar);
    const auto result = qbaker::noncommute_demo(hbar, k);
    std::cout << fmt(hbar) << ',' << fmt(result.le_p.real()) << ','
              << fmt(result.le_p.imag()) << ','
              << fmt(std::abs(result.le_p - limit)) << '\n';
  }
  std::cout.flush();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum baker's map propagators and verifiers"};
  app.require_subcommand(1);

  // propagator
  auto* prop = app.add_subcommand("propagator", "build and write a propagator");
  int prop_n = 0;
  std::string prop_variant = "corrected";
  std::string prop_format = "json";
  std::string prop_out;
  prop->add_option("--n", prop_n, "matrix dimension (even, >= 2)")->required();
  prop->add_option("--variant", prop_variant, "corrected or bv");
  prop->add_option("--format", prop_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  prop->add_option("--out", prop_out, "output file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "run identity checks");
  std::vector<int> verify_n_list;
  std::string verify_variant;
  std::vector<std::string> verify_checks;
  verify->add_option("--n-list", verify_n_list, "comma-separated even N values")
      ->required()
      ->delimiter(',');
  verify->add_option("--variant", verify_variant,
                     "corrected or bv (default: both)");
  verify
      ->add_option("--checks", verify_checks,
                   "unitarity,parity,time-reversal,bv-phase,pipeline-oracle,"
                   "weyl,center")
      ->required()
      ->delimiter(',');

  // classical
  auto* classical = app.add_subcommand("classical", "iterate classical maps");
  classical->require_subcommand(1);
  double cl_x = 0.0, cl_p = 0.0;
  int cl_iters = 1;
  std::string cl_which;
  for (const char* name : {"map", "cover", "inverse"}) {
    auto* sub = classical->add_subcommand(
        name, name == std::string("map") ? "torus baker's map"
              : name == std::string("cover") ? "plane covering map"
                                             : "inverse covering map");
    sub->add_option("--x", cl_x, "initial x")->required();
    sub->add_option("--p", cl_p, "initial p")->required();
    sub->add_option("--iters", cl_iters, "iteration count");
    sub->callback([&cl_which, name]() { cl_which = name; });
  }

  // semiclassics
  auto* semi = app.add_subcommand("semiclassics", "coherent-state tools");
  semi->require_subcommand(1);

  auto* expect = semi->add_subcommand("expect", "harmonic expectation value");
  double ex_x0 = 0.0, ex_p0 = 0.0, ex_hbar = 0.0;
  int ex_a = 0, ex_b = 0;
  expect->add_option("--x0", ex_x0)->required();
  expect->add_option("--p0", ex_p0)->required();
  expect->add_option("--a", ex_a)->required();
  expect->add_option("--b", ex_b)->required();
  expect->add_option("--hbar", ex_hbar)->required();

  auto* scan = semi->add_subcommand("limit-scan", "classical-limit scan over N");
  double sc_x0 = 0.0, sc_p0 = 0.0;
  int sc_a = 0, sc_b = 0;
  std::vector<int> sc_n_list;
  std::string sc_variant = "corrected";
  scan->add_option("--x0", sc_x0)->required();
  scan->add_option("--p0", sc_p0)->required();
  scan->add_option("--a", sc_a)->required();
  scan->add_option("--b", sc_b)->required();
  scan->add_option("--n-list", sc_n_list)->required()->delimiter(',');
  scan->add_option("--variant", sc_variant, "corrected or bv");

  auto* noncommute =
      semi->add_subcommand("noncommute", "projector non-commutativity sum");
  std::vector<double> nc_hbar_list;
  long nc_k_max = 0;
  noncommute->add_option("--hbar-list", nc_hbar_list)->required()->delimiter(',');
  noncommute->add_option("--k-max", nc_k_max,
                         "odd cutoff (default: smallest admissible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (prop->parsed()) {
      return cmd_propagator(prop_n, prop_variant, prop_format, prop_out);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_n_list,
                        verify->count("--variant")
                            ? std::optional<std::string>(verify_variant)
                            : std::nullopt,
                        verify_checks);
    }
    if (classical->parsed()) {
      return cmd_classical(cl_which, cl_x, cl_p, cl_iters);
    }
    if (expect->parsed()) {
      return cmd_expect(ex_x0, ex_p0, ex_a, ex_b, ex_hbar);
    }
    if (scan->parsed()) {
      return cmd_limit_scan(sc_x0, sc_p0, sc_a, sc_b, sc_n_list, sc_variant);
    }
    if (noncommute->parsed()) {
      return cmd_noncommute(nc_hbar_list, nc_k_max);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
