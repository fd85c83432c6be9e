#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "classprod/report_io.hpp"

// Command-line front door. `run_cli` is the whole program minus argv
// slicing, so tests can drive it with string vectors and capture streams.
//
// Commands:
//   inspect  order, abelian/solvable/supersolvable flags, series data
//   classes  conjugacy class decomposition
//   eta      eta(AA^-1) and dl(G/C_G(A)) for one class
//   verify   named check suites over one group, a spec file, or the corpus
//   scan     conjecture-evidence CSV over a spec file or the built-in corpus
//
// Exit codes: 0 all pass/skip, 1 at least one check failed, 2 usage or
// build error.

namespace classprod {
namespace detail {

struct CliConfig {
  std::string spec_path;
  std::string named;
  int n = -1;
  int p = -1;
  std::string suite = "all";
  std::string format;
  std::string out_path;
  int max_order = kDefaultMaxOrder;
  int threads = 1;
  std::string class_rep = "auto-noncentral";
};

inline std::vector<GroupSpec> cli_specs(const CliConfig& c) {
  if (!c.spec_path.empty()) {
    std::ifstream in(c.spec_path);
    if (!in) throw ParseError("cannot open spec file: " + c.spec_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_spec_lines(buf.str());
  }
  if (!c.named.empty()) {
    std::map<std::string, int> params;
    if (c.n >= 0) params["n"] = c.n;
    if (c.p >= 0) params["p"] = c.p;
    return {GroupSpec::named_spec(c.named, params)};
  }
  return {};
}

inline std::vector<std::string> parse_suite(const std::string& suite) {
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(suite);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      for (const std::string& n : suite_names()) names.push_back(n);
      continue;
    }
    if (!is_check_name(token))
      throw ParseError("unknown check name: " + token);
    names.push_back(token);
  }
  if (names.empty()) throw ParseError("empty --suite");
  return names;
}

inline int pick_class_rep(const Group& G, const std::string& choice) {
  if (choice == "auto-noncentral") {
    ElementSet z = center(G).set();
    for (int x = 0; x < G.order(); ++x)
      if (!z.contains(x)) return x;
    throw ParameterOutOfRange(
        "group " + G.label() +
        " is abelian: every element is central, pass --class-rep <index>");
  }
  int v = -1;
  auto [p, ec] = std::from_chars(choice.data(), choice.data() + choice.size(), v);
  if (ec != std::errc{} || p != choice.data() + choice.size() || v < 0 ||
      v >= G.order())
    throw ParameterOutOfRange("bad --class-rep '" + choice + "' for order " +
                              std::to_string(G.order()));
  return v;
}

inline nlohmann::ordered_json inspect_json(const Group& G) {
  SeriesReport chief = chief_series(G);
  DlResult dl = derived_length(G);
  nlohmann::ordered_json j;
  j["group"] = G.label();
  j["order"] = G.order();
  j["abelian"] = center(G).order() == G.order();
  j["solvable"] = dl.reached;
  if (dl.reached) j["derived_length"] = dl.value;
  j["supersolvable"] = is_supersolvable(G);
  j["center_order"] = center(G).order();
  j["class_count"] = static_cast<int>(all_classes(G).size());
  j["chief_factor_orders"] = chief.factor_orders;
  return j;
}

inline void inspect_text(std::ostream& out, const Group& G) {
  nlohmann::ordered_json j = inspect_json(G);
  out << "group " << G.label() << ": order " << G.order() << '\n';
  out << "  abelian: " << (j["abelian"].get<bool>() ? "true" : "false")
      << '\n';
  out << "  solvable: " << (j["solvable"].get<bool>() ? "true" : "false");
  if (j.contains("derived_length"))
    out << " (derived length " << j["derived_length"].get<int>() << ')';
  out << '\n';
  out << "  supersolvable: "
      << (j["supersolvable"].get<bool>() ? "true" : "false") << '\n';
  out << "  center order: " << j["center_order"].get<int>() << '\n';
  out << "  conjugacy classes: " << j["class_count"].get<int>() << '\n';
  out << "  chief factor orders:";
  for (int f : j["chief_factor_orders"].get<std::vector<int>>()) out << ' ' << f;
  out << '\n';
}

inline int cmd_inspect(const CliConfig& c, bool as_classes, std::ostream& out) {
  std::vector<GroupSpec> specs = cli_specs(c);
  if (specs.empty()) throw ParseError("need --spec or --named");
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GroupSpec& s : specs) {
    Group G = build_from_spec(s, c.max_order);
    if (as_classes) {
      auto classes = all_classes(G);
      if (c.format == "json") {
        nlohmann::ordered_json j;
        j["group"] = G.label();
        j["order"] = G.order();
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const ConjugacyClass& cl : classes)
          cs.push_back({{"rep", cl.representative}, {"size", cl.size()}});
        j["classes"] = std::move(cs);
        arr.push_back(std::move(j));
      } else {
        out << "group " << G.label() << ": " << classes.size()
            << " conjugacy classes\n";
        for (const ConjugacyClass& cl : classes)
          out << "  rep " << cl.representative << ": size " << cl.size()
              << '\n';
      }
    } else {
      if (c.format == "json")
        arr.push_back(inspect_json(G));
      else
        inspect_text(out, G);
    }
  }
  if (c.format == "json")
    out << (arr.size() == 1 ? arr.front() : arr).dump(2) << '\n';
  return 0;
}

inline int cmd_eta(const CliConfig& c, std::ostream& out) {
  std::vector<GroupSpec> specs = cli_specs(c);
  if (specs.empty()) throw ParseError("need --spec or --named");
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const GroupSpec& s : specs) {
    Group G = build_from_spec(s, c.max_order);
    int a = pick_class_rep(G, c.class_rep);
    ConjugacyClass A = conjugacy_class(G, a);
    ClassProduct cp = class_product_eta(G, a, G.inv(a));
    ElementSet ca = centralizer_in(G, ElementSet::full(G), A.members);
    DlResult d =
        dl_from_chain(derived_chain_of(G, ElementSet::full(G)), ca);
    if (c.format == "json") {
      nlohmann::ordered_json j;
      j["group"] = G.label();
      j["order"] = G.order();
      j["class_rep"] = A.representative;
      j["class_size"] = A.size();
      j["eta_aa"] = cp.eta;
      if (d.reached) {
        j["dl_mod_centralizer"] = d.value;
        j["bound"] = 2 * cp.eta - 1;
      }
      arr.push_back(std::move(j));
    } else {
      out << "group " << G.label() << ", order " << G.order() << ", a = " << a
          << ", |A| = " << A.size() << '\n';
      out << "eta(AA^-1) = " << cp.eta << '\n';
      if (d.reached)
        out << "dl(G/C_G(A)) = " << d.value << " <= 2*eta(AA^-1) - 1 = "
            << 2 * cp.eta - 1 << '\n';
      else
        out << "dl(G/C_G(A)) undefined (quotient not solvable)\n";
    }
  }
  if (c.format == "json")
    out << (arr.size() == 1 ? arr.front() : arr).dump(2) << '\n';
  return 0;
}

inline int cmd_verify(const CliConfig& c, std::ostream& out) {
  std::vector<GroupSpec> specs = cli_specs(c);
  if (specs.empty()) specs = builtin_corpus();
  std::vector<std::string> names = parse_suite(c.suite);
  std::vector<std::vector<VerificationReport>> per(specs.size());
  parallel_for(static_cast<int>(specs.size()), c.threads, [&](int i) {
    Group G = build_from_spec(specs[i], c.max_order);
    per[i] = run_suite(G, names);
  });
  std::vector<VerificationReport> reports;
  for (auto& v : per)
    for (auto& r : v) reports.push_back(std::move(r));
  for (const std::string& n : names)
    if (n == "eta_examples") {
      reports.push_back(check_eta_examples());
      break;
    }
  bool any_fail = false;
  int pass = 0, skip = 0;
  for (const VerificationReport& r : reports) {
    if (r.status == VerificationReport::Status::fail) any_fail = true;
    if (r.status == VerificationReport::Status::pass) ++pass;
    if (r.status == VerificationReport::Status::skipped) ++skip;
  }
  if (c.format == "json") {
    out << reports_to_json(reports).dump(2) << '\n';
  } else {
    for (const VerificationReport& r : reports) write_text_report(out, r);
    out << "summary: " << pass << " pass, "
        << (reports.size() - pass - skip) << " fail, " << skip
        << " skipped\n";
  }
  return any_fail ? 1 : 0;
}

inline int cmd_scan(const CliConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<GroupSpec> specs = cli_specs(c);
  if (specs.empty()) specs = scan_corpus();
  ScanOptions opts;
  opts.threads = c.threads;
  opts.max_order = c.max_order;
  ScanResult res = conjecture_scan(specs, opts);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ScanRow& r : res.rows)
      rows.push_back({{"group", r.group_label},
                      {"order", r.order},
                      {"solvable", r.solvable},
                      {"supersolvable", r.supersolvable},
                      {"class_rep", r.class_rep},
                      {"class_size", r.class_size},
                      {"eta_aa", r.eta_aa},
                      {"dl_mod_centralizer", r.dl_mod_centralizer}});
    j["rows"] = std::move(rows);
    j["summary"] = scan_summary_json(res);
    if (!c.out_path.empty()) {
      std::ofstream f(c.out_path, std::ios::binary);
      if (!f) throw ParseError("cannot open output file: " + c.out_path);
      f << j.dump(2) << '\n';
    } else {
      out << j.dump(2) << '\n';
    }
    return 0;
  }
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw ParseError("cannot open output file: " + c.out_path);
    write_scan_csv(f, res.rows);
    if (!f) throw ParseError("write failed: " + c.out_path);
    write_scan_summary_text(out, res);
  } else {
    write_scan_csv(out, res.rows);
    write_scan_summary_text(err, res);
  }
  return 0;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  detail::CliConfig cfg;
  CLI::App app{"conjugacy class product calculator and verification harness",
               "classprod"};
  app.require_subcommand(1);
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--spec", cfg.spec_path,
                    "group spec JSON or JSON-lines file");
    cmd->add_option("--named", cfg.named, "named group family");
    cmd->add_option("--n", cfg.n, "family parameter n");
    cmd->add_option("--p", cfg.p, "family parameter p (prime)");
    cmd->add_option("--max-order", cfg.max_order, "group order cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out_path, "output file path");
  };
  auto add_format = [&](CLI::App* cmd, std::string def,
                        std::vector<std::string> choices) {
    cfg.format = def;
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(choices))
        ->default_val(def);
  };
  CLI::App* inspect = app.add_subcommand("inspect", "structural summary");
  add_input(inspect);
  add_format(inspect, "text", {"text", "json"});
  CLI::App* classes = app.add_subcommand("classes", "conjugacy classes");
  add_input(classes);
  add_format(classes, "text", {"text", "json"});
  CLI::App* eta = app.add_subcommand("eta", "eta(AA^-1) for one class");
  add_input(eta);
  add_format(eta, "text", {"text", "json"});
  eta->add_option("--class-rep", cfg.class_rep,
                  "class representative index or 'auto-noncentral'");
  CLI::App* verify = app.add_subcommand("verify", "run check suites");
  add_input(verify);
  add_format(verify, "text", {"text", "json"});
  verify->add_option("--suite", cfg.suite, "comma list of check names or 'all'");
  verify->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::Range(1, 256));
  CLI::App* scan = app.add_subcommand("scan", "conjecture-evidence scan");
  add_input(scan);
  add_format(scan, "csv", {"csv", "json"});
  scan->add_option("--threads", cfg.threads, "worker threads")
      ->check(CLI::Range(1, 256));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (app.got_subcommand(inspect)) return detail::cmd_inspect(cfg, false, out);
    if (app.got_subcommand(classes)) return detail::cmd_inspect(cfg, true, out);
    if (app.got_subcommand(eta)) return detail::cmd_eta(cfg, out);
    if (app.got_subcommand(verify)) return detail::cmd_verify(cfg, out);
    return detail::cmd_scan(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
}

inline int run_cli_main(int argc, char** argv) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                 std::cerr);
}

}  // namespace classprod
