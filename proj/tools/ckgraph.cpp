// ckgraph: generate Kautz-family digraphs, compute exact diameters, iterate
// line digraphs, query the d=2 reachability oracle, and run the
// formula-versus-construction verification suites.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ckgraph/digraph.hpp"
#include "ckgraph/export.hpp"
#include "ckgraph/families.hpp"
#include "ckgraph/formulas.hpp"
#include "ckgraph/label.hpp"
#include "ckgraph/reachability.hpp"

namespace {

using namespace ckgraph;

constexpr long kMaxVertices = 10'000'000;

// Failures reported with exit status 1 (domain errors, guard refusals,
// verification mismatches).
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed commands beyond what the parser catches; exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  int d = 0;
  int l = 0;
  int t = 0;
  std::string format = "dot";
  std::string iter_format = "stats";
  std::string output;
  std::string u, v;
  std::string suite;
  bool count_only = false;
  bool formula_only = false;
  bool check = false;
  bool force = false;
  int dmax = 4;
  int lmax = 6;
  int tmax = -1;  // -1: up to l-2
};

FamilySpec parse_spec(const Options& opt) {
  return FamilySpec{parse_family(opt.family), opt.d, opt.l};
}

BigInt predicted_vertex_count(const FamilySpec& spec) {
  if (spec.d < 1 || spec.l < 1) return 0;  // constructors raise the real error
  BigInt dd(spec.d);
  switch (spec.family) {
    case Family::kautz: {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), dd.get_mpz_t(), static_cast<unsigned long>(spec.l - 1));
      return (dd + 1) * p;
    }
    case Family::de_bruijn: {
      BigInt p;
      mpz_pow_ui(p.get_mpz_t(), dd.get_mpz_t(), static_cast<unsigned long>(spec.l));
      return p;
    }
    case Family::cyclic_kautz:
    case Family::modified_cyclic_kautz:
      return spec.l == 1 ? BigInt(spec.d + 1) : ck_vertex_count(spec.d, spec.l);
  }
  return 0;
}

void check_size_guard(const FamilySpec& spec, bool force) {
  const BigInt predicted = predicted_vertex_count(spec);
  if (!force && predicted > kMaxVertices)
    throw CliError(spec.str() + " has a predicted vertex count of " + predicted.get_str() +
                   " (> " + std::to_string(kMaxVertices) + "); pass --force to proceed");
}

void write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp(target);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("cannot open \"" + tmp.string() + "\" for writing");
    out << payload;
    out.flush();
    if (!out) throw CliError("write to \"" + tmp.string() + "\" failed");
  }
  fs::rename(tmp, target);
}

int run_generate(const Options& opt) {
  const FamilySpec spec = parse_spec(opt);
  check_size_guard(spec, opt.force);
  const Digraph g = build_family(spec);
  if (opt.format == "dot") {
    write_output(dot_export(g, spec.dot_name()), opt.output);
  } else if (opt.format == "json") {
    write_output(digraph_json(g, family_code(spec.family), spec.d, spec.l).dump(2) + "\n",
                 opt.output);
  } else {
    throw UsageError("generate supports --format dot or json");
  }
  return 0;
}

int run_stats(const Options& opt) {
  const FamilySpec spec = parse_spec(opt);
  check_size_guard(spec, opt.force);
  const Digraph g = build_family(spec);
  write_output(stats_json(g, family_code(spec.family), spec.d, spec.l, 0).dump(2) + "\n",
               opt.output);
  return 0;
}

int run_diameter(const Options& opt) {
  const FamilySpec spec = parse_spec(opt);
  if (opt.formula_only) {
    if (spec.family != Family::cyclic_kautz)
      throw UsageError("--formula-only applies to family CK only");
    write_output(ck_diameter_formula(spec.d, spec.l).str() + "\n", opt.output);
    return 0;
  }
  check_size_guard(spec, opt.force);
  write_output(diameter(build_family(spec)).str() + "\n", opt.output);
  return 0;
}

int run_iterate(const Options& opt) {
  const FamilySpec spec = parse_spec(opt);
  if (opt.t < 0) throw UsageError("--t must be nonnegative");
  check_size_guard(spec, opt.force);
  Digraph g = build_family(spec);
  for (int i = 0; i < opt.t; ++i) {
    if (!opt.force && g.arc_count() > static_cast<std::size_t>(kMaxVertices))
      throw CliError("iteration " + std::to_string(i + 1) + " would have " +
                     std::to_string(g.arc_count()) + " vertices (> " +
                     std::to_string(kMaxVertices) + "); pass --force to proceed");
    g = line_digraph(g);
  }

  if (opt.count_only) {
    std::ostringstream line;
    line << "constructed=" << g.vertex_count();
    const bool in_range = spec.family == Family::cyclic_kautz && spec.l >= 3 &&
                          opt.t <= spec.l - 2;
    bool mismatch = false;
    if (in_range || (spec.family == Family::cyclic_kautz && spec.l == 4)) {
      const BigInt expected = spec.l == 4 ? ck4_count_closed_form(spec.d, opt.t)
                                          : ck_iterated_vertex_count(spec.d, spec.l, opt.t);
      mismatch = expected != static_cast<long>(g.vertex_count());
      line << " formula=" << expected.get_str() << (mismatch ? " MISMATCH" : " MATCH");
    } else {
      line << " formula=n/a";
    }
    write_output(line.str() + "\n", opt.output);
    return mismatch ? 1 : 0;
  }

  const std::string name =
      opt.t == 0 ? spec.dot_name() : "L" + std::to_string(opt.t) + "_" + spec.dot_name();
  if (opt.iter_format == "dot") {
    write_output(dot_export(g, name), opt.output);
  } else if (opt.iter_format == "json") {
    write_output(digraph_json(g, family_code(spec.family), spec.d, spec.l).dump(2) + "\n",
                 opt.output);
  } else {
    write_output(
        stats_json(g, family_code(spec.family), spec.d, spec.l, opt.t).dump(2) + "\n",
        opt.output);
  }
  return 0;
}

int run_oracle(const Options& opt) {
  const FamilySpec spec = parse_spec(opt);
  if (spec.family != Family::cyclic_kautz || spec.d != 2)
    throw UsageError("the oracle supports family CK with d = 2 only");
  const Label u = Label::parse(opt.u);
  const Label v = Label::parse(opt.v);
  if (static_cast<int>(u.size()) != spec.l || static_cast<int>(v.size()) != spec.l)
    throw CliError("labels must have length l = " + std::to_string(spec.l));
  const bool by_imprint = oracle::reachable(u, v);
  std::ostringstream out;
  out << "reachable: " << (by_imprint ? "true" : "false") << "\n";
  int status = 0;
  if (opt.check) {
    const Digraph g = cyclic_kautz(spec.d, spec.l);
    const auto dist = bfs_distances(g, u.str());
    const bool by_bfs = dist[static_cast<std::size_t>(g.index(v.str()))] != kUnreachable;
    out << "bfs: " << (by_bfs ? "true" : "false") << "\n";
    if (by_bfs != by_imprint) {
      out << "MISMATCH\n";
      status = 1;
    }
  }
  write_output(out.str(), opt.output);
  return status;
}

// --- verify ---------------------------------------------------------------

struct VerifyRow {
  std::string family;
  int d = 0;
  int l = 0;
  std::string t;  // empty when not applicable
  std::string quantity;
  std::string formula_value;
  std::string constructed_value;
  bool match = false;
};

VerifyRow make_row(std::string family, int d, int l, std::string t, std::string quantity,
                   std::string formula_value, std::string constructed_value) {
  VerifyRow row;
  row.family = std::move(family);
  row.d = d;
  row.l = l;
  row.t = std::move(t);
  row.quantity = std::move(quantity);
  row.formula_value = std::move(formula_value);
  row.constructed_value = std::move(constructed_value);
  row.match = row.formula_value == row.constructed_value;
  return row;
}

using RowTask = std::function<std::vector<VerifyRow>()>;

std::vector<VerifyRow> run_tasks(std::vector<RowTask> tasks) {
  std::vector<std::future<std::vector<VerifyRow>>> futures;
  futures.reserve(tasks.size());
  for (auto& task : tasks) futures.push_back(std::async(std::launch::async, std::move(task)));
  std::vector<VerifyRow> rows;
  for (auto& f : futures) {
    auto part = f.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  return rows;
}

std::vector<VerifyRow> verify_counts(int dmax, int lmax) {
  std::vector<RowTask> tasks;
  // The closed forms hold from l = 2 upward (the vertex form degenerates at
  // l = 1, where the digraph on single-symbol labels has d+1 vertices).
  for (int d = 1; d <= dmax; ++d)
    for (int l = 2; l <= lmax; ++l)
      tasks.push_back([d, l] {
        const Digraph g = cyclic_kautz(d, l);
        std::vector<VerifyRow> rows;
        rows.push_back(make_row("CK", d, l, "", "vertex_count",
                                ck_vertex_count(d, l).get_str(),
                                std::to_string(g.vertex_count())));
        rows.push_back(make_row("CK", d, l, "", "arc_count", ck_arc_count(d, l).get_str(),
                                std::to_string(g.arc_count())));
        return rows;
      });
  return run_tasks(std::move(tasks));
}

std::vector<VerifyRow> verify_diameter(int dmax, int lmax) {
  std::vector<RowTask> tasks;
  for (int d = 1; d <= dmax; ++d)
    for (int l = 1; l <= lmax; ++l)
      tasks.push_back([d, l] {
        const Digraph g = cyclic_kautz(d, l);
        return std::vector<VerifyRow>{make_row("CK", d, l, "", "diameter",
                                               ck_diameter_formula(d, l).str(),
                                               diameter(g).str())};
      });
  return run_tasks(std::move(tasks));
}

std::vector<VerifyRow> verify_line(int dmax, int lmax, int tmax) {
  std::vector<RowTask> tasks;
  for (int d = 2; d <= dmax; ++d)
    for (int l = 3; l <= lmax; ++l)
      tasks.push_back([d, l, tmax] {
        std::vector<VerifyRow> rows;
        const int tlimit = tmax < 0 ? l - 2 : std::min(tmax, l - 2);
        Digraph g = cyclic_kautz(d, l);
        for (int t = 1; t <= tlimit; ++t) {
          g = line_digraph(g);
          rows.push_back(make_row("CK", d, l, std::to_string(t), "iterated_vertex_count",
                                  ck_iterated_vertex_count(d, l, t).get_str(),
                                  std::to_string(g.vertex_count())));
        }
        return rows;
      });
  for (int d = 2; d <= std::min(3, dmax); ++d)
    for (int l = 2; l <= std::min(4, lmax); ++l)
      tasks.push_back([d, l] {
        const Digraph direct = kautz(d, l);
        std::vector<VerifyRow> rows;
        rows.push_back(make_row("K", d, l, "", "line_of_kautz_identity", "equal",
                                line_digraph(kautz(d, l - 1)) == direct ? "equal"
                                                                        : "different"));
        rows.push_back(make_row("K", d, l, "", "iterated_complete_identity", "equal",
                                iterated_line_digraph(kautz(d, 1), l - 1) == direct
                                    ? "equal"
                                    : "different"));
        return rows;
      });
  return run_tasks(std::move(tasks));
}

std::vector<VerifyRow> verify_mck(int dmax, int lmax) {
  std::vector<RowTask> tasks;
  for (int d = 2; d <= dmax; ++d)
    for (int l = 3; l <= lmax; ++l)
      tasks.push_back([d, l] {
        const Digraph mck = modified_cyclic_kautz(d, l);
        std::vector<VerifyRow> rows;
        rows.push_back(make_row("MCK", d, l, "", "vertex_count",
                                ck_vertex_count(d, l).get_str(),
                                std::to_string(mck.vertex_count())));
        const DegreeProfile deg = degree_profile(mck);
        rows.push_back(make_row("MCK", d, l, "", "out_regular", std::to_string(d),
                                deg.is_out_regular ? std::to_string(deg.min_out)
                                                   : "irregular"));
        rows.push_back(make_row("MCK", d, l, "", "diameter", Diameter::finite(l).str(),
                                diameter(mck).str()));
        const Digraph base = kautz(d, l - 1);
        std::vector<Arc> keep;
        for (auto& [u, v] : base.arcs())
          if (Label::parse(u).front() != Label::parse(v).back())
            keep.emplace_back(std::move(u), std::move(v));
        rows.push_back(make_row("MCK", d, l, "", "partial_line_identity", "equal",
                                partial_line_digraph(base, keep) == mck ? "equal"
                                                                        : "different"));
        return rows;
      });
  return run_tasks(std::move(tasks));
}

std::vector<VerifyRow> verify_imprint(int lmax) {
  std::vector<RowTask> tasks;
  for (int l = 2; l <= lmax; ++l)
    tasks.push_back([l] {
      const Digraph g = cyclic_kautz(2, l);
      const int n = static_cast<int>(g.vertex_count());
      std::vector<Label> labels;
      labels.reserve(static_cast<std::size_t>(n));
      for (const std::string& name : g.names()) labels.push_back(Label::parse(name));
      long long agreeing = 0;
      for (int u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
          const bool by_bfs = dist[static_cast<std::size_t>(v)] != kUnreachable;
          if (by_bfs == oracle::reachable(labels[static_cast<std::size_t>(u)],
                                          labels[static_cast<std::size_t>(v)]))
            ++agreeing;
        }
      }
      std::vector<VerifyRow> rows;
      rows.push_back(make_row("CK", 2, l, "", "oracle_agreement",
                              std::to_string(static_cast<long long>(n) * n),
                              std::to_string(agreeing)));
      long long census_total = 0;
      for (const auto& [plus, count] : oracle::component_census(l)) census_total += count;
      rows.push_back(make_row("CK", 2, l, "", "census_total",
                              ck_vertex_count(2, l).get_str(),
                              std::to_string(census_total)));
      return rows;
    });
  return run_tasks(std::move(tasks));
}

int run_verify(const Options& opt) {
  std::vector<VerifyRow> rows;
  if (opt.suite == "counts")
    rows = verify_counts(opt.dmax, opt.lmax);
  else if (opt.suite == "diameter")
    rows = verify_diameter(opt.dmax, opt.lmax);
  else if (opt.suite == "line")
    rows = verify_line(opt.dmax, opt.lmax, opt.tmax);
  else if (opt.suite == "mck")
    rows = verify_mck(opt.dmax, opt.lmax);
  else if (opt.suite == "imprint")
    rows = verify_imprint(opt.lmax);
  else
    throw UsageError("unknown suite \"" + opt.suite +
                     "\" (expected counts, diameter, line, mck or imprint)");

  std::ostringstream csv;
  csv << "family,d,l,t,quantity,formula_value,constructed_value,match\n";
  bool all_match = true;
  for (const VerifyRow& row : rows) {
    csv << row.family << ',' << row.d << ',' << row.l << ',' << row.t << ',' << row.quantity
        << ',' << row.formula_value << ',' << row.constructed_value << ','
        << (row.match ? "true" : "false") << "\n";
    all_match = all_match && row.match;
  }
  write_output(csv.str(), opt.output);
  return all_match ? 0 : 1;
}

void add_family_args(CLI::App* cmd, Options& opt) {
  cmd->add_option("family", opt.family, "family code: K, DB, CK or MCK")->required();
  cmd->add_option("d", opt.d, "degree parameter")->required();
  cmd->add_option("l", opt.l, "label length")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kautz-family digraph construction and verification"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* generate = app.add_subcommand("generate", "write a digraph as DOT or JSON");
  add_family_args(generate, opt);
  generate->add_option("--format", opt.format, "dot (default) or json");
  generate->add_option("--output", opt.output, "write atomically to this path");
  generate->add_flag("--force", opt.force, "ignore the large-instance guard");

  CLI::App* stats = app.add_subcommand("stats", "emit the JSON stats record");
  add_family_args(stats, opt);
  stats->add_option("--output", opt.output, "write atomically to this path");
  stats->add_flag("--force", opt.force, "ignore the large-instance guard");

  CLI::App* diam = app.add_subcommand("diameter", "print FINITE(n), INFINITE or NONEXISTENT");
  add_family_args(diam, opt);
  diam->add_flag("--formula-only", opt.formula_only,
                 "skip construction and print the CK case-table value");
  diam->add_option("--output", opt.output, "write atomically to this path");
  diam->add_flag("--force", opt.force, "ignore the large-instance guard");

  CLI::App* iterate = app.add_subcommand("iterate", "apply the line digraph t times");
  add_family_args(iterate, opt);
  iterate->add_option("--t", opt.t, "number of iterations")->required();
  iterate->add_flag("--count-only", opt.count_only,
                    "print the vertex count next to the closed-form value");
  iterate->add_option("--format", opt.iter_format, "stats (default), dot or json");
  iterate->add_option("--output", opt.output, "write atomically to this path");
  iterate->add_flag("--force", opt.force, "ignore the large-instance guard");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "imprint-based reachability in CK(2,l)");
  add_family_args(oracle_cmd, opt);
  oracle_cmd->add_option("u", opt.u, "source label")->required();
  oracle_cmd->add_option("v", opt.v, "target label")->required();
  oracle_cmd->add_flag("--check", opt.check, "confirm the answer with BFS");
  oracle_cmd->add_option("--output", opt.output, "write atomically to this path");

  CLI::App* verify = app.add_subcommand("verify", "formula-versus-construction sweeps");
  verify->add_option("suite", opt.suite, "counts, diameter, line, mck or imprint")
      ->required();
  verify->add_option("--dmax", opt.dmax, "largest degree parameter (default 4)");
  verify->add_option("--lmax", opt.lmax, "largest label length (default 6)");
  verify->add_option("--tmax", opt.tmax, "largest iteration count (default l-2)");
  verify->add_option("--output", opt.output, "write the CSV report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(generate)) return run_generate(opt);
    if (app.got_subcommand(stats)) return run_stats(opt);
    if (app.got_subcommand(diam)) return run_diameter(opt);
    if (app.got_subcommand(iterate)) return run_iterate(opt);
    if (app.got_subcommand(oracle_cmd)) return run_oracle(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
