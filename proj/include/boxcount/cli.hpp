#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxcount/colouring.hpp"
#include "boxcount/dtsign.hpp"
#include "boxcount/enum3d.hpp"
#include "boxcount/fock.hpp"
#include "boxcount/formulas.hpp"
#include "boxcount/io.hpp"
#include "boxcount/operator_suite.hpp"
#include "boxcount/pyramid.hpp"

namespace boxcount {

enum ExitCode { kSuccess = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string group;
  int max_degree = -1;
  int shards = 1;
  int shard = 0;
  std::string out;
  std::string format = "json";
  int threads = 1;
  std::string which;
  std::string theorem;
  std::string suite = "all";
  int cutoff = 6;
  std::string diagram;
};

inline int default_threads() {
  if (const char* env = std::getenv("BOXCOUNT_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace detail {

inline void emit(const RunConfig& cfg, const Series& s, std::ostream& out) {
  const std::string text = format_series(s, cfg.format);
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot write output file '" + cfg.out + "'");
  file << text;
  if (!file.flush()) throw UsageError("cannot write output file '" + cfg.out + "'");
}

inline GroupChoice required_group(const RunConfig& cfg) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  return parse_group(cfg.group);
}

inline int compare(const std::string& label, const Series& left, const Series& right, std::ostream& out) {
  auto d = first_difference(left, right);
  if (!d) {
    out << "PASS " << label << " through degree " << std::min(left.truncation(), right.truncation()) << "\n";
    return kSuccess;
  }
  out << "FAIL " << label << ": first difference at " << detail::format_exponents(left.variables(), d->exponents)
      << ": left " << d->left.str() << ", right " << d->right.str() << "\n";
  return kMismatch;
}

inline Diagram3D parse_diagram(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw UsageError("--diagram must be a JSON list of [i,j,k] triples");
  std::vector<Box> boxes;
  for (const auto& t : j) {
    auto v = t.get<std::vector<int>>();
    if (v.size() != 3) throw UsageError("each box needs three coordinates");
    boxes.push_back({v[0], v[1], v[2]});
  }
  return Diagram3D(std::move(boxes));
}

inline int verify(const RunConfig& cfg, std::ostream& out) {
  const int N = cfg.max_degree;
  const std::string& t = cfg.theorem;
  if (t == "thm-zn") {
    auto g = required_group(cfg);
    if (g.kind != ColouringKind::cyclic) throw UsageError("thm-zn needs --group zn:<n>");
    return compare("coloured Z_" + std::to_string(g.n) + " series = product formula",
                   coloured_series(g.colouring(), N, cfg.threads), closed_Zn(g.n, N), out);
  }
  if (t == "thm-klein")
    return compare("coloured Klein series = product formula", coloured_series(OctantColouring::klein(), N, cfg.threads),
                   closed_Klein(N), out);
  if (t == "thm-pyramid")
    return compare("pyramid series = product formula", pyramid_series(N, cfg.threads), closed_pyramid(N), out);
  if (t == "lemma-7.2") {
    auto v = pyramid_variables();
    auto qab = Monomial::of(*v, {{"qa", 1}, {"qb", 1}});
    auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
    return compare("Klein product = M~(qa qb, q) * pyramid product", closed_Klein(N),
                   mac_Mtilde(v, qab, q, N) * closed_pyramid(N), out);
  }
  if (t == "crc") {
    auto g = required_group(cfg);
    return compare("orbifold DT = resolution side of the crepant resolution identity for " + g.to_string(),
                   dt_orbifold(g, N), crc_rhs(g, N), out);
  }
  if (t == "sign-flip") {
    auto g = required_group(cfg);
    return compare("signed enumeration = sign-substituted product for " + g.to_string(),
                   dt_signed_series(g, N, cfg.threads), dt_orbifold(g, N), out);
  }
  throw UsageError("unknown theorem '" + t + "'");
}

inline Series transfer(const std::string& which, int N) {
  if (which == "pyramid") return transfer_pyramid(N);
  if (which == "pyramid-checkerboard") return transfer_pyramid_checkerboard(N);
  if (which == "z2z2") return transfer_klein(N);
  auto g = parse_group(which);
  if (g.kind != ColouringKind::cyclic) throw UsageError("transfer supports zn:<n>, pyramid, pyramid-checkerboard, z2z2");
  return transfer_Zn(g.n, N);
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Coloured 3D partition counting, product formulas and vertex-operator checks", "boxcount"};
  app.require_subcommand(1);

  auto degree = [&](CLI::App* sub) {
    sub->add_option("--max-degree,-N", cfg.max_degree, "truncation degree")->required()->check(CLI::NonNegativeNumber);
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads (default: $BOXCOUNT_THREADS or 1)")
        ->check(CLI::PositiveNumber);
  };
  auto shards = [&](CLI::App* sub) {
    sub->add_option("--shards", cfg.shards, "number of shards")->check(CLI::PositiveNumber);
    sub->add_option("--shard", cfg.shard, "shard index")->check(CLI::NonNegativeNumber);
  };

  auto* en = app.add_subcommand("enum", "enumerate coloured 3D diagrams");
  en->add_option("--group", cfg.group, "zn:<n>, klein or z3diag")->required();
  degree(en), output(en), threads(en), shards(en);

  auto* py = app.add_subcommand("pyramid", "enumerate pyramid partitions");
  degree(py), output(py), threads(py), shards(py);

  auto* fo = app.add_subcommand("formula", "evaluate a product formula");
  fo->add_option("--which", cfg.which, "zn:<n>, klein, pyramid, dt-orb:<group>, dt-res:<group>")->required();
  degree(fo), output(fo);

  auto* tr = app.add_subcommand("transfer", "evaluate a vertex-operator transfer product");
  tr->add_option("--which", cfg.which, "zn:<n>, pyramid, pyramid-checkerboard or z2z2")->required();
  degree(tr), output(tr);

  auto* ve = app.add_subcommand("verify", "compare an enumeration or identity exactly");
  ve->add_option("--theorem", cfg.theorem, "thm-zn, thm-klein, thm-pyramid, lemma-7.2, crc or sign-flip")->required();
  ve->add_option("--group", cfg.group, "group for thm-zn, crc and sign-flip");
  degree(ve), threads(ve);

  auto* vo = app.add_subcommand("verify-ops", "check operator identities on basis partitions");
  vo->add_option("--suite", cfg.suite, "commutators, heisenberg, skew-schur or all");
  vo->add_option("--cutoff", cfg.cutoff, "largest basis partition size")->check(CLI::NonNegativeNumber);

  auto* si = app.add_subcommand("sign", "fixed-point sign of one diagram");
  si->add_option("--group", cfg.group, "zn:<n>, klein or z3diag")->required();
  si->add_option("--diagram", cfg.diagram, "JSON list of [i,j,k] boxes")->required();

  auto* dt = app.add_subcommand("dt", "signed enumeration of the orbifold DT series");
  dt->add_option("--group", cfg.group, "zn:<n> or klein")->required();
  degree(dt), output(dt), threads(dt);

  std::vector<const char*> argv{"boxcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cfg.shard >= cfg.shards) throw UsageError("--shard must be smaller than --shards");
    const int N = cfg.max_degree;
    if (*en) {
      auto c = parse_group(cfg.group).colouring();
      detail::emit(cfg, cfg.shards == 1 ? coloured_series(c, N, cfg.threads) : coloured_shard_series(c, N, cfg.shards, cfg.shard),
                   out);
    } else if (*py) {
      detail::emit(cfg, cfg.shards == 1 ? pyramid_series(N, cfg.threads) : pyramid_shard_series(N, cfg.shards, cfg.shard),
                   out);
    } else if (*fo) {
      detail::emit(cfg, FormulaSpec::parse(cfg.which).evaluate(N), out);
    } else if (*tr) {
      detail::emit(cfg, detail::transfer(cfg.which, N), out);
    } else if (*dt) {
      detail::emit(cfg, dt_signed_series(parse_group(cfg.group), N, cfg.threads), out);
    } else if (*ve) {
      return detail::verify(cfg, out);
    } else if (*vo) {
      int code = kSuccess;
      for (const auto& check : operator_suite(cfg.suite, cfg.cutoff)) {
        auto r = check.run();
        out << (r ? "FAIL " : "PASS ") << check.name << (r ? ": " + *r : "") << "\n";
        if (r) code = kMismatch;
      }
      return code;
    } else if (*si) {
      auto g = parse_group(cfg.group);
      auto d = detail::parse_diagram(cfg.diagram);
      const int parity = invariant_parity(d, g), sign = sign_closed_form(d, g);
      out << "parity " << parity << "\nsign from parity " << (parity ? -1 : 1) << "\nclosed-form sign " << sign << "\n";
      return (parity ? -1 : 1) == sign ? kSuccess : kMismatch;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kSuccess;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, out, err);
}

}  // namespace boxcount
