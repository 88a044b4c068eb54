#include <CLI11.hpp>

#include "latcover/bounds.hpp"
#include "latcover/certificate.hpp"
#include "latcover/interval.hpp"
#include "latcover/render.hpp"
#include "latcover/search.hpp"
#include "latcover/verifier.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace latcover;

namespace {

// 0 ok, 1 verification failure, 2 parse/usage error,
// 3 search exhausted, 4 search budget exceeded, 5 infeasible by density

std::string approx_interval(const SqrtInterval &iv) {
  std::string hi = iv.hi.is_infinite() ? "inf" : approx_decimal(iv.hi, 4);
  return "≈ [" + approx_decimal(iv.lo, 4) + ", " + hi +
         (iv.hi.is_infinite() ? ")" : "]");
}

int load_certificate(const std::string &path, const std::string &builtin_name,
                     CoveringCertificate &cert) {
  if (!builtin_name.empty()) {
    try {
      cert = builtin(builtin_name);
      return 0;
    } catch (const std::out_of_range &) {
      std::cerr << "unknown builtin certificate: " << builtin_name << "\n";
      return 2;
    }
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    cert = parse_certificate(buf.str());
  } catch (const CertificateError &e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

void print_report(const CoveringCertificate &cert, const VerificationReport &rep) {
  std::cout << "name: " << (cert.name.empty() ? "(unnamed)" : cert.name) << "\n";
  std::cout << "lattice: " << to_string(cert.lattice)
            << "  det " << lat_det(cert.lattice).str() << "\n";
  std::cout << "clusters: " << cert.clusters.size() << "\n";
  std::cout << "covered: " << (rep.coverage.covered ? "yes" : "no") << "\n";
  std::cout << "coverage witness: "
            << (rep.coverage.witness ? to_string(*rep.coverage.witness) : "none")
            << "\n";
  std::cout << "multiplicity: "
            << (rep.coverage.multiplicity == Multiplicity::partition ? "partition"
                                                                     : "cover")
            << "\n";
  std::cout << "overlap: " << rep.coverage.overlap << "\n";
  std::cout << "alpha_sq: " << rat_to_string(rep.alpha_sq) << "\n";
  std::cout << "beta_sq: " << rat_to_string(rep.beta_sq) << "\n";
  std::cout << "admissible: " << (rep.admissible ? "yes" : "no") << "\n";
  if (rep.interval)
    std::cout << "interval: " << to_string(*rep.interval) << " "
              << approx_interval(*rep.interval) << "\n";
  else
    std::cout << "interval: none\n";
  std::cout << "verified: " << (rep.verified() ? "yes" : "no") << "\n";
}

int cmd_verify(const std::string &path, const std::string &builtin_name, bool strict) {
  CoveringCertificate cert;
  if (int rc = load_certificate(path, builtin_name, cert)) return rc;
  VerificationReport rep = verify(cert);
  print_report(cert, rep);
  int rc = rep.verified() ? 0 : 1;
  if (strict) {
    auto cong = strict_congruence(cert);
    std::cout << "congruent: " << (cong.pass ? "yes" : "no");
    if (!cong.pass && cong.fail_pair)
      std::cout << "  (clusters " << cong.fail_pair->first << ", "
                << cong.fail_pair->second << ")";
    std::cout << "\n";
    if (cong.pass) {
      auto trans = strict_transitivity(cert);
      std::cout << "transitive: " << (trans.pass ? "yes" : "no");
      if (!trans.pass && trans.fail_pair)
        std::cout << "  (clusters " << trans.fail_pair->first << ", "
                  << trans.fail_pair->second << ")";
      std::cout << "\n";
      if (!trans.pass) rc = rc ? rc : 1;
    } else {
      rc = rc ? rc : 1;
    }
  }
  return rc;
}

int cmd_union(const std::vector<std::string> &paths,
              const std::vector<std::string> &builtins) {
  std::vector<SqrtInterval> intervals;
  auto add = [&](const CoveringCertificate &cert) -> int {
    VerificationReport rep = verify(cert);
    if (!rep.verified() || !rep.interval) {
      std::cerr << "certificate "
                << (cert.name.empty() ? "(unnamed)" : cert.name)
                << " does not verify\n";
      return 1;
    }
    std::cout << (cert.name.empty() ? "(unnamed)" : cert.name) << ": "
              << to_string(*rep.interval) << " " << approx_interval(*rep.interval)
              << "\n";
    intervals.push_back(*rep.interval);
    return 0;
  };
  for (const auto &name : builtins) {
    CoveringCertificate cert;
    if (int rc = load_certificate("", name, cert)) return rc;
    if (int rc = add(cert)) return rc;
  }
  for (const auto &path : paths) {
    CoveringCertificate cert;
    if (int rc = load_certificate(path, "", cert)) return rc;
    if (int rc = add(cert)) return rc;
  }
  if (intervals.empty()) {
    std::cerr << "no certificates given\n";
    return 2;
  }
  IntervalUnion u = interval_union(intervals);
  std::cout << "union components:\n";
  for (const auto &c : u.components)
    std::cout << "  " << to_string(c) << " " << approx_interval(c) << "\n";
  if (u.gaps.empty()) {
    std::cout << "gaps: none\n";
  } else {
    std::cout << "gaps:\n";
    for (const auto &g : u.gaps)
      std::cout << "  (" << g.lo.to_machine_string() << ", "
                << g.hi.to_machine_string() << ") ≈ ("
                << approx_decimal(g.lo, 4) << ", " << approx_decimal(g.hi, 4)
                << ")\n";
  }
  return 0;
}

int parse_target(const std::string &d_text, const std::string &interval_text,
                 SearchTarget &target, int max_index, int max_orbits) {
  SqrtVal lo, hi;
  if (!d_text.empty()) {
    auto v = parse_sqrtval(d_text);
    if (!v) {
      std::cerr << "cannot parse d: " << d_text << "\n";
      return 2;
    }
    lo = hi = *v;
  } else {
    auto comma = interval_text.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--interval wants \"LO,HI\"\n";
      return 2;
    }
    auto a = parse_sqrtval(interval_text.substr(0, comma));
    auto b = parse_sqrtval(interval_text.substr(comma + 1));
    if (!a || !b) {
      std::cerr << "cannot parse interval: " << interval_text << "\n";
      return 2;
    }
    lo = *a;
    hi = *b;
  }
  try {
    target = target_from_interval(lo, hi);
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  target.max_index = max_index;
  target.max_orbits = max_orbits;
  return 0;
}

int cmd_search(const SearchParams &params, const std::string &out_path) {
  SearchOutcome out = search_certificate(params);
  std::cout << out.describe() << "\n";
  std::cout << "lattices enumerated: " << out.stats.lattices_enumerated
            << ", explored: " << out.stats.lattices_explored
            << ", root pruned: " << out.stats.lattices_root_pruned
            << ", budget aborted: " << out.stats.lattices_budget_aborted
            << ", nodes: " << out.stats.nodes << "\n";
  switch (out.kind) {
    case SearchOutcome::Kind::found: {
      VerificationReport rep = verify(*out.certificate);
      if (rep.interval)
        std::cout << "interval: " << to_string(*rep.interval) << " "
                  << approx_interval(*rep.interval) << "\n";
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      f << serialize_certificate(*out.certificate);
      std::cout << "certificate written to " << out_path << "\n";
      return 0;
    }
    case SearchOutcome::Kind::exhausted:
      return 3;
    case SearchOutcome::Kind::budget_exceeded:
      return 4;
    case SearchOutcome::Kind::infeasible:
      return 5;
  }
  return 2;
}

void print_verdict_row(const DensityVerdict &v) {
  std::cout << "d = " << rat_to_string(v.d) << " ≈ "
            << rat_to_decimal(v.d, 4) << "  k = " << v.k << "  "
            << v.verdict_name();
  if (v.uncoverable)
    std::cout << "  (disk at " << v.witness.describe() << " holds " << v.k
              << " points, k^2 d^4 < 12)";
  std::cout << "\n";
}

int cmd_bounds(const std::string &d_text, const std::vector<std::string> &scan) {
  if (!d_text.empty()) {
    auto d = parse_rational(d_text);
    if (!d || *d <= 0) {
      std::cerr << "cannot parse d: " << d_text << "\n";
      return 2;
    }
    print_verdict_row(density_verdict(*d));
    return 0;
  }
  auto lo = parse_rational(scan[0]);
  auto hi = parse_rational(scan[1]);
  int steps = 0;
  try {
    steps = std::stoi(scan[2]);
  } catch (...) {
    std::cerr << "cannot parse steps: " << scan[2] << "\n";
    return 2;
  }
  if (!lo || !hi) {
    std::cerr << "cannot parse scan range\n";
    return 2;
  }
  ScanResult res;
  try {
    res = threshold_scan(*lo, *hi, steps);
  } catch (const std::invalid_argument &e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cout << "scan [" << rat_to_string(*lo) << ", " << rat_to_string(*hi)
            << "], " << steps << " grid points\n";
  for (const auto &row : res.rows) print_verdict_row(row);
  if (res.largest_uncoverable)
    std::cout << "largest uncoverable grid point: "
              << rat_to_string(*res.largest_uncoverable) << " ≈ "
              << rat_to_decimal(*res.largest_uncoverable, 4) << "\n";
  else
    std::cout << "largest uncoverable grid point: none\n";
  std::cout << "prior two-point bound ≈ " << prior_bound_decimal(6) << "\n";
  return 0;
}

int cmd_render(const std::string &path, const std::string &builtin_name,
               const std::string &d_text, const RenderOptions &opt,
               const std::string &out_path) {
  CoveringCertificate cert;
  if (int rc = load_certificate(path, builtin_name, cert)) return rc;
  auto d = parse_rational(d_text);
  if (!d || *d <= 0) {
    std::cerr << "render needs a positive rational d, got: " << d_text << "\n";
    return 2;
  }
  VerificationReport rep = verify(cert);
  std::string svg = render_svg(cert, *d, opt, rep.interval);
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  f << svg;
  std::cout << "wrote " << out_path;
  if (rep.interval && interval_contains(*rep.interval, SqrtVal::of_rational(*d)))
    std::cout << " (d inside " << to_string(*rep.interval) << ")";
  else
    std::cout << " (not verified at this d)";
  std::cout << "\n";
  return 0;
}

int cmd_builtin(bool list, const std::string &name, const std::string &out_path) {
  if (list || name.empty()) {
    for (const auto &id : builtin_names()) {
      auto cert = builtin(id);
      auto rep = verify(cert);
      std::cout << id << "  " << builtin_summary(id) << "  interval "
                << (rep.interval ? to_string(*rep.interval) : "none") << "\n";
    }
    return 0;
  }
  CoveringCertificate cert;
  if (int rc = load_certificate("", name, cert)) return rc;
  std::string text = serialize_certificate(cert);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"periodic unit-disk coverings of scaled square lattices"};
  app.require_subcommand(1);

  // verify
  auto *verify_cmd = app.add_subcommand("verify", "verify a certificate file");
  std::string v_path, v_builtin;
  bool v_strict = false;
  verify_cmd->add_option("cert", v_path, "certificate file");
  verify_cmd->add_option("--builtin", v_builtin, "use a catalog certificate");
  verify_cmd->add_flag("--strict", v_strict, "also check congruence and transitivity");

  // union
  auto *union_cmd = app.add_subcommand("union", "union of verified intervals");
  std::vector<std::string> u_paths, u_builtins;
  union_cmd->add_option("certs", u_paths, "certificate files");
  union_cmd->add_option("--builtin", u_builtins, "catalog certificates")
      ->take_all();

  // search
  auto *search_cmd = app.add_subcommand("search", "search for a certificate");
  std::string s_d, s_interval, s_out = "searched.cert";
  int s_max_index = 12, s_max_orbits = 8, s_threads = 1;
  std::uint64_t s_budget = 2'000'000;
  search_cmd->add_option("--d", s_d, "single dilation (rational or sqrt(p/q))");
  search_cmd->add_option("--interval", s_interval, "target interval \"LO,HI\"");
  search_cmd->add_option("--max-index", s_max_index, "largest lattice determinant");
  search_cmd->add_option("--max-orbits", s_max_orbits, "cluster orbit cap");
  search_cmd->add_option("--budget", s_budget, "per-lattice node budget");
  search_cmd->add_option("--threads", s_threads, "worker threads (0 = hardware)");
  search_cmd->add_option("--out", s_out, "output certificate path");

  // bounds
  auto *bounds_cmd = app.add_subcommand("bounds", "density uncoverability bounds");
  std::string b_d;
  std::vector<std::string> b_scan;
  bounds_cmd->add_option("--d", b_d, "single dilation (rational)");
  bounds_cmd->add_option("--scan", b_scan, "grid scan: LO HI STEPS")->expected(3);

  // render
  auto *render_cmd = app.add_subcommand("render", "render a certificate as SVG");
  std::string r_path, r_builtin, r_d, r_out = "covering.svg";
  RenderOptions r_opt;
  bool no_disks = false, no_points = false, no_centers = false, no_domain = false;
  render_cmd->add_option("cert", r_path, "certificate file");
  render_cmd->add_option("--builtin", r_builtin, "use a catalog certificate");
  render_cmd->add_option("--d", r_d, "dilation (rational)")->required();
  render_cmd->add_option("--window", r_opt.window, "half-width of the drawn window");
  render_cmd->add_option("--out", r_out, "output SVG path");
  render_cmd->add_flag("--no-disks", no_disks, "omit unit disks");
  render_cmd->add_flag("--no-points", no_points, "omit lattice points");
  render_cmd->add_flag("--no-centers", no_centers, "omit center markers");
  render_cmd->add_flag("--no-domain", no_domain, "omit the fundamental domain");

  // builtin
  auto *builtin_cmd = app.add_subcommand("builtin", "catalog certificates");
  bool l_list = false;
  std::string l_name, l_out;
  builtin_cmd->add_flag("--list", l_list, "list catalog entries");
  builtin_cmd->add_option("name", l_name, "catalog id or alias to emit");
  builtin_cmd->add_option("--out", l_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) {
      if (v_path.empty() && v_builtin.empty()) {
        std::cerr << "verify wants a certificate file or --builtin\n";
        return 2;
      }
      return cmd_verify(v_path, v_builtin, v_strict);
    }
    if (union_cmd->parsed()) return cmd_union(u_paths, u_builtins);
    if (search_cmd->parsed()) {
      if (s_d.empty() == s_interval.empty()) {
        std::cerr << "search wants exactly one of --d or --interval\n";
        return 2;
      }
      SearchParams params;
      if (int rc = parse_target(s_d, s_interval, params.target, s_max_index,
                                s_max_orbits))
        return rc;
      params.node_budget = s_budget;
      params.threads = s_threads > 0
                           ? s_threads
                           : (int)std::max(1u, std::thread::hardware_concurrency());
      return cmd_search(params, s_out);
    }
    if (bounds_cmd->parsed()) {
      if (b_d.empty() == b_scan.empty()) {
        std::cerr << "bounds wants exactly one of --d or --scan\n";
        return 2;
      }
      return cmd_bounds(b_d, b_scan);
    }
    if (render_cmd->parsed()) {
      if (r_path.empty() && r_builtin.empty()) {
        std::cerr << "render wants a certificate file or --builtin\n";
        return 2;
      }
      r_opt.show_disks = !no_disks;
      r_opt.show_points = !no_points;
      r_opt.show_centers = !no_centers;
      r_opt.show_domain = !no_domain;
      return cmd_render(r_path, r_builtin, r_d, r_opt, r_out);
    }
    if (builtin_cmd->parsed()) return cmd_builtin(l_list, l_name, l_out);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
