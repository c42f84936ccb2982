#pragma once

// The `walkex` command line. Exit codes:
//   0  success (check: free; verify: everything matches)
//   1  check: the matrix is not free
//   2  usage, parse or I/O error
//   3  verify: a value or characterization mismatch
//   4  search/verify: the budget ran out before the result was exact

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkex/constructions.hpp"
#include "walkex/formulas.hpp"
#include "walkex/matrix_io.hpp"
#include "walkex/report_json.hpp"
#include "walkex/search.hpp"
#include "walkex/verify.hpp"
#include "walkex/walks.hpp"

namespace walkex {

enum ExitCode : int { kExitOk = 0, kExitNotFree = 1, kExitError = 2, kExitMismatch = 3, kExitIncomplete = 4 };

namespace detail {

inline std::string join_walk(const std::vector<int>& walk)
{
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(walk[i]);
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace detail

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Turan numbers of walk-free digraphs: formulas, constructions and exact search", "walkex"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int n = 0;
  int k = 0;
  bool loops = false;
  bool enumerate = false;
  double budget = 600.0;
  int threads = 1;
  std::string input;
  std::string output;
  std::string family;
  std::vector<int> params;

  auto* exnum = app.add_subcommand("exnum", "Closed-form ex(n, F_k) as JSON");
  exnum->add_option("--n", n, "Order")->required()->check(CLI::Range(1, 1 << 20));
  exnum->add_option("--k", k, "Walk length")->required()->check(CLI::PositiveNumber);
  exnum->add_flag("--loops", loops, "Allow loops");

  auto* check = app.add_subcommand("check", "Test whether a matrix file is F_k-free");
  check->add_option("--input", input, "Matrix file")->required();
  check->add_option("--k", k, "Walk length")->required()->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Write a named construction as a matrix file");
  construct->add_option("--family", family, "Family tag (t, j, pi, ct, k, kprime, f, f1, f2, f3, f4, bordered, "
                                            "k3block, k4n9)")
      ->required();
  construct->add_option("--n", n, "Order; prepended to --params when given");
  construct->add_option("--params", params, "Comma-separated integer parameters")->delimiter(',');
  construct->add_option("--out", output, "Output file")->required();

  auto* search = app.add_subcommand("search", "Exact maximum-arc search");
  search->add_option("--n", n, "Order")->required()->check(CLI::Range(1, kMaxOrder));
  search->add_option("--k", k, "Walk length")->required()->check(CLI::PositiveNumber);
  search->add_flag("--loops", loops, "Allow loops");
  search->add_flag("--enumerate", enumerate, "Collect every extremal class");
  search->add_option("--budget", budget, "Wall-clock budget in seconds")->check(CLI::Range(1.0, 1e9));
  search->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  search->add_option("--out", output, "Directory for report.json and witness files");

  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form and characterization with search");
  verify_cmd->add_option("--n", n, "Order")->required()->check(CLI::Range(1, kMaxOrder));
  verify_cmd->add_option("--k", k, "Walk length")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--loops", loops, "Allow loops");
  verify_cmd->add_flag("--enumerate", enumerate, "Enumerate extremal classes");
  verify_cmd->add_option("--budget", budget, "Wall-clock budget in seconds")->check(CLI::Range(1.0, 1e9));
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_option("--out", output, "Also write the JSON to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (exnum->parsed()) {
      out << to_json(ex_value(n, k, loops)).dump(2) << "\n";
      return kExitOk;
    }

    if (check->parsed()) {
      const BitMatrix a = read_matrix_file(input);
      const auto v = find_violation(a, k);
      out << "order " << a.order() << "\n";
      out << "arcs " << count_ones(a) << "\n";
      if (!v) {
        out << "free k=" << k << "\n";
        return kExitOk;
      }
      out << "not free k=" << k << "\n";
      out << "entry " << v->source << " " << v->target << "\n";
      out << "walk " << detail::join_walk(v->walk_a) << "\n";
      out << "walk " << detail::join_walk(v->walk_b) << "\n";
      return kExitNotFree;
    }

    if (construct->parsed()) {
      const auto tag = parse_family_tag(family);
      if (!tag) {
        err << "unknown family '" << family << "'\n";
        return kExitError;
      }
      FamilyDescriptor d{*tag, params};
      if (construct->count("--n")) d.params.insert(d.params.begin(), n);
      const BitMatrix a = build(d);
      write_matrix_file(output, a);
      out << describe(d) << " -> " << output << " (order " << a.order() << ", arcs " << count_ones(a) << ")\n";
      return kExitOk;
    }

    if (search->parsed()) {
      SearchConfig cfg;
      cfg.n = n;
      cfg.k = k;
      cfg.loops = loops;
      cfg.enumerate = enumerate;
      cfg.budget_seconds = budget;
      cfg.threads = threads;
      const SearchReport rep = max_search(cfg);

      std::vector<std::string> files;
      if (!output.empty()) {
        const std::filesystem::path dir(output);
        std::filesystem::create_directories(dir);
        for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
          const auto path = dir / ("witness_" + std::to_string(i + 1) + ".txt");
          write_matrix_file(path.string(), rep.witnesses[i]);
          files.push_back(path.string());
        }
        detail::write_text_file(dir / "report.json", to_json(rep, files).dump(2) + "\n");
      }
      out << to_json(rep, files).dump(2) << "\n";
      return rep.status == SearchStatus::exact ? kExitOk : kExitIncomplete;
    }

    if (verify_cmd->parsed()) {
      const VerifyOutcome o = verify(n, k, loops, enumerate, budget, threads);
      const std::string text = to_json(o).dump(2) + "\n";
      if (!output.empty()) detail::write_text_file(output, text);
      out << text;
      if (o.mismatch()) {
        err << "MISMATCH at n=" << n << " k=" << k << (loops ? " (loops)" : "") << "\n";
        for (const auto& note : o.notes) err << "  " << note << "\n";
        return kExitMismatch;
      }
      return o.complete() ? kExitOk : kExitIncomplete;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, out, err);
}

}  // namespace walkex
