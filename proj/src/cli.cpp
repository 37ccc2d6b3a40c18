#include "ekzero/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ekzero/bench.hpp"
#include "ekzero/report.hpp"

namespace ekzero {

namespace {

Polynomial parse_poly(const std::string& text, bool descending) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw validation_error(errc::non_positive_coefficient, "--poly: cannot parse '" + item + "'");
    }
    if (pos != item.size()) {
      throw validation_error(errc::non_positive_coefficient, "--poly: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  if (descending) std::reverse(values.begin(), values.end());
  Vec coeffs(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = values[i];
  return make_polynomial(std::move(coeffs));
}

std::string interval_csv(const BoundInterval& b) {
  return "lower,upper\n" + format_double(b.lower) + "," + format_double(b.upper) + "\n";
}

std::string report_csv(const RegionReport& r) {
  std::string out = "role,index,cx,cy,radius,closed\n";
  auto rows = [&](const char* role, const std::vector<Disk>& disks) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
      out += std::string(role) + "," + std::to_string(i) + "," +
             format_double(disks[i].center.real()) + "," + format_double(disks[i].center.imag()) +
             "," + format_double(disks[i].radius) + "," +
             (disks[i].openness == Openness::closed_inclusion ? "true" : "false") + "\n";
    }
  };
  rows("inclusion", r.inclusion);
  rows("exclusion", r.exclusion);
  return out;
}

std::string roots_csv(const RootSet& rs) {
  std::string out = "re,im\n";
  for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
    out += format_double(rs.roots(i).real()) + "," + format_double(rs.roots(i).imag()) + "\n";
  }
  return out;
}

RegionReport dispatch_region(const std::string& method, const Polynomial& p, double eps) {
  if (method == "thm41") return thm41_disks(p);
  if (method == "thm42") return thm42_disks(p, eps);
  if (method == "cor41") return cor41_disks(p);
  if (method == "thm43") return thm43_disks(p);
  if (method == "thm51") return thm51_region(p);
  if (method == "thm52") return thm52_region(p, eps);
  if (method == "cor51") return cor51_region(p);
  if (method == "thm53") return thm53_region(p);
  if (method == "thm61") return thm61_region(p, eps);
  if (method == "cor61") return cor61_region(p);
  throw validation_error(errc::hypothesis_violated, "--method: unknown region method '" + method + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero inclusion and exclusion regions for polynomials with positive coefficients"};
  app.require_subcommand(1);

  std::string poly_text, method, format = "json", table = "upper", klass = "I", out_path, figure;
  bool descending = false;
  int k = 1, degree = 10, samples = 1000, workers = 1;
  double eps = 1.0;
  std::uint64_t seed = 0;

  auto add_poly = [&](CLI::App* cmd) {
    cmd->add_option("--poly", poly_text, "comma-separated coefficients, constant term first")
        ->required();
    cmd->add_flag("--descending", descending, "coefficients given leading term first");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json (default) or csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* bounds = app.add_subcommand("bounds", "modulus bounds for all zeros");
  add_poly(bounds);
  add_format(bounds);
  bounds->add_option("--method", method, "ek | thm32 | thm33-1 | thm33-2 | cauchy-k")
      ->required()
      ->check(CLI::IsMember({"ek", "thm32", "thm33-1", "thm33-2", "cauchy-k"}));
  bounds->add_option("--k", k, "kind for cauchy-k (default 1)");

  CLI::App* region = app.add_subcommand("region", "inclusion/exclusion disks for all zeros");
  add_poly(region);
  add_format(region);
  region->add_option("--method", method,
                     "thm41 | thm42 | cor41 | thm43 | thm51 | thm52 | cor51 | thm53 | thm61 | cor61")
      ->required();
  region->add_option("--eps", eps, "parameter in (0,1] for thm42/thm52/thm61 (default 1)");

  CLI::App* roots = app.add_subcommand("roots", "oracle zeros of the polynomial");
  add_poly(roots);
  add_format(roots);

  CLI::App* bench = app.add_subcommand("bench", "median statistics over random ensembles");
  add_format(bench);
  bench->add_option("--class", klass, "polynomial class: I or II")->required();
  bench->add_option("--degree", degree, "polynomial degree")->required();
  bench->add_option("--samples", samples, "sample count (default 1000)");
  bench->add_option("--seed", seed, "RNG seed (EKZERO_SEED overrides)");
  bench->add_option("--workers", workers, "parallel workers (default 1)");
  bench->add_option("--table", table, "upper | disk | union")
      ->check(CLI::IsMember({"upper", "disk", "union"}));

  CLI::App* plot = app.add_subcommand("plot", "SVG figure of regions and zeros");
  add_poly(plot);
  plot->add_option("--method", method, "plot one region method");
  plot->add_option("--figure", figure, "single-disk | two-disk | three-disk")
      ->check(CLI::IsMember({"single-disk", "two-disk", "three-disk"}));
  plot->add_option("--eps", eps, "parameter for eps methods");
  plot->add_option("--out", out_path, "output SVG path")->required();

  std::vector<const char*> argv;
  argv.push_back("ekzero");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*bounds) {
      const Polynomial p = parse_poly(poly_text, descending);
      if (method == "cauchy-k") {
        const CauchyRadius sk = cauchy_radius(p, k);
        const CauchyRadius sk_rev = cauchy_radius(reverse(p), k);
        out << "{\"kind\":" << k << ",\"value\":" << format_double(sk.value)
            << ",\"reverse_value\":" << format_double(sk_rev.value);
        if (k == 1) {
          out << ",\"lower\":" << format_double(1.0 / sk_rev.value)
              << ",\"upper\":" << format_double(sk.value);
        }
        out << "}\n";
        return 0;
      }
      BoundInterval b;
      if (method == "ek") b = ek_bounds(p);
      else if (method == "thm32") b = thm32_bounds(p);
      else if (method == "thm33-1") b = thm33_bounds(p, 1);
      else b = thm33_bounds(p, 2);
      out << (format == "csv" ? interval_csv(b) : bound_interval_json(b) + "\n");
      return 0;
    }

    if (*region) {
      const Polynomial p = parse_poly(poly_text, descending);
      const RegionReport r = dispatch_region(method, p, eps);
      out << (format == "csv" ? report_csv(r) : region_report_json(r) + "\n");
      return 0;
    }

    if (*roots) {
      const Polynomial p = parse_poly(poly_text, descending);
      const RootSet rs = all_roots(p);
      out << (format == "csv" ? roots_csv(rs) : root_set_json(rs) + "\n");
      return 0;
    }

    if (*bench) {
      if (const char* env_seed = std::getenv("EKZERO_SEED")) {
        seed = std::strtoull(env_seed, nullptr, 10);
      }
      BenchClass c{bench_kind_from_string(klass), degree, samples, seed};
      BenchTable t;
      if (table == "upper") t = table_upper_ratios(c, workers);
      else if (table == "disk") t = table_inclusion_radii(c, workers);
      else t = table_union_radii(c, workers);
      out << (format == "csv" ? to_csv(t) : to_json(t) + "\n");
      return 0;
    }

    if (*plot) {
      const Polynomial p = parse_poly(poly_text, descending);
      PlotSpec ps;
      if (!figure.empty()) {
        if (figure == "single-disk") ps = plot_single_disk_comparison(p);
        else if (figure == "two-disk") ps = plot_two_disk_comparison(p);
        else ps = plot_union_comparison(p);
      } else if (!method.empty()) {
        const RegionReport r = dispatch_region(method, p, eps);
        for (const Disk& d : r.inclusion) ps.circles.emplace_back(d, Stroke::solid);
        for (const Disk& d : r.exclusion) ps.circles.emplace_back(d, Stroke::dash_dot);
        const RootSet rs = all_roots(p);
        for (Eigen::Index i = 0; i < rs.roots.size(); ++i) ps.markers.push_back(rs.roots(i));
      } else {
        throw validation_error(errc::hypothesis_violated, "plot: pass --figure or --method");
      }
      const std::string svg = render_svg(ps);
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        throw validation_error(errc::hypothesis_violated, "plot: cannot open --out path " + out_path);
      }
      file << svg;
      return 0;
    }
  } catch (const validation_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const numeric_error& e) {
    err << e.what() << "\n";
    return 3;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace ekzero
