#include "hurwitz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hurwitz/braid.hpp"
#include "hurwitz/canonical.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/graph.hpp"
#include "hurwitz/oracle.hpp"

namespace hurwitz::cli {

namespace {

/// File contents; "-" reads standard input.
std::string slurp(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw hurwitz::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Factorization read_factorization(const std::string &path) {
  try {
    return parse_factorization(slurp(path));
  } catch (const ParseError &e) {
    throw hurwitz::Error(path + ": " + e.what());
  }
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw hurwitz::Error("cannot write '" + path + "'");
}

struct Options {
  std::string file, other;
  std::string move_text;
  std::string dot_path;
  bool cert = false;
  bool quiet = false;
  bool json = false;
  std::size_t cap = kDefaultOrbitCap;
  unsigned workers = 1;
  unsigned degree = 0;
  std::size_t length = 0;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Hurwitz equivalence of transposition factorizations of the identity"};
  app.name("hurwitz");
  app.require_subcommand(1);
  Options o;

  auto *sig = app.add_subcommand("sig", "Print the component signature");
  sig->add_option("file", o.file, "Factorization file")->required();
  sig->add_option("--dot", o.dot_path, "Also write the weighted graph as DOT");

  auto *equiv = app.add_subcommand("equiv", "Decide Hurwitz equivalence (exit 0 / 1)");
  equiv->add_option("first", o.file, "Factorization file")->required();
  equiv->add_option("second", o.other, "Factorization file")->required();

  auto *canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("file", o.file, "Factorization file")->required();
  canon->add_flag("--cert", o.cert, "Print the move certificate, one move per line");
  canon->add_flag("--quiet", o.quiet, "Omit the factorization line");

  auto *move = app.add_subcommand("move", "Apply one move, e.g. F@0 or I@2");
  move->add_option("file", o.file, "Factorization file")->required();
  move->add_option("move", o.move_text, "Move")->required();

  auto *replay = app.add_subcommand("replay", "Apply a certificate file");
  replay->add_option("file", o.file, "Factorization file")->required();
  replay->add_option("cert", o.other, "Certificate file")->required();

  auto *orbit = app.add_subcommand("orbit", "Enumerate the Hurwitz orbit by BFS");
  orbit->add_option("file", o.file, "Factorization file")->required();
  orbit->add_option("--cap", o.cap, "Maximum number of states")->check(CLI::PositiveNumber);
  orbit->add_option("--workers", o.workers, "Expansion threads (0 = all cores)");
  orbit->add_flag("--quiet", o.quiet, "Omit the member listing");
  orbit->add_flag("--json", o.json, "Machine-readable summary");

  auto *census = app.add_subcommand("census", "Partition all identity factorizations into orbits");
  census->add_option("n", o.degree, "Degree")->required();
  census->add_option("m", o.length, "Length")->required();
  census->add_option("--cap", o.cap, "Maximum states per orbit")->check(CLI::PositiveNumber);
  census->add_option("--workers", o.workers, "Expansion threads (0 = all cores)");
  census->add_flag("--json", o.json, "One JSON record per orbit");

  auto *project = app.add_subcommand("project", "Project a braid tuple file to S_n");
  project->add_option("file", o.file, "Braid tuple file")->required();

  auto *dot = app.add_subcommand("dot", "Print the weighted factorization graph as DOT");
  dot->add_option("file", o.file, "Factorization file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return Error;
  }

  try {
    if (sig->parsed()) {
      Factorization f = read_factorization(o.file);
      out << to_string(signature(f)) << '\n';
      if (!o.dot_path.empty())
        write_file(o.dot_path, to_dot(build_graph(f)));
    } else if (equiv->parsed()) {
      bool same = hurwitz_equivalent(read_factorization(o.file), read_factorization(o.other));
      out << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
      return same ? Ok : NotEquivalent;
    } else if (canon->parsed()) {
      CanonicalResult r = canonical_form(read_factorization(o.file));
      if (!o.quiet)
        out << format_factorization(r.canonical) << '\n';
      if (o.cert)
        out << format_certificate(r.certificate);
    } else if (move->parsed()) {
      Factorization f = read_factorization(o.file);
      out << format_factorization(apply_move(f, parse_move(o.move_text))) << '\n';
    } else if (replay->parsed()) {
      Factorization f = read_factorization(o.file);
      MoveCertificate cert = parse_certificate(slurp(o.other));
      out << format_factorization(apply_certificate(f, cert)) << '\n';
    } else if (orbit->parsed()) {
      OrbitOptions options{o.cap, o.workers, !o.quiet && !o.json};
      OrbitReport r = enumerate_orbit(read_factorization(o.file), options);
      out << (o.json ? orbit_report_json(r) : format_orbit_report(r, !o.quiet));
    } else if (census->parsed()) {
      PartitionReport r = orbit_partition(o.degree, o.length, {o.cap, o.workers, false});
      out << (o.json ? partition_report_json(r) : format_partition_report(r));
    } else if (project->parsed()) {
      out << format_factorization(project_tuple(parse_braid_tuple(slurp(o.file)))) << '\n';
    } else if (dot->parsed()) {
      out << to_dot(build_graph(read_factorization(o.file)));
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return Error;
  }
  return Ok;
}

} // namespace hurwitz::cli
