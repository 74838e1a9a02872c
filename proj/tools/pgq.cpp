// Command-line front end: hole-group analysis, structural checks, the
// collinear cycle-type table, and the puzzle HTTP service.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgq/app/analysis.hpp"
#include "pgq/app/service.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

int run_analyze(std::uint64_t q, pgq::PointId alpha, bool primitivity, const std::string& json_path) {
  const auto report = pgq::app::analyze(q, {alpha, primitivity});
  const auto j = pgq::app::to_json(report);
  std::cout << "q = " << report.q << ", alpha = " << report.alpha << ", |Omega| = " << report.degree << '\n'
            << "generators: " << report.raw_generators << " raw, " << report.identity_generators
            << " identity, " << report.generators << " used\n"
            << "order: " << report.order << '\n'
            << "classification: " << pgq::to_string(report.tag) << '\n'
            << "parity: " << j["parity"].get<std::string>() << '\n';
  if (report.primitive) std::cout << "primitive: " << (*report.primitive ? "yes" : "no") << '\n';
  if (!report.note.empty()) std::cout << "note: " << report.note << '\n';
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << '\n';
      return exit_invalid;
    }
    out << j.dump(2) << '\n';
  }
  return exit_ok;
}

int run_verify(std::uint64_t q, const std::string& which, pgq::PointId alpha, bool as_json) {
  std::vector<std::string> names = which == "all" ? pgq::app::check_names() : split(which);
  pgq::app::VerifyOptions opts;
  opts.alpha = alpha;
  const auto results = pgq::app::verify(q, names, opts);
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    arr.push_back(pgq::app::to_json(r));
    if (!as_json) {
      std::cout << (r.ok() ? "[ ok ] " : "[FAIL] ") << r.name << " (" << pgq::app::to_string(r.status) << "): "
                << r.summary << '\n';
      if (!r.ok()) std::cout << "       counterexample: " << r.counterexample.dump() << '\n';
    }
  }
  if (as_json) std::cout << arr.dump(2) << '\n';
  return ok ? exit_ok : exit_failed;
}

int run_cycle_table(const std::string& qs, bool as_json) {
  std::vector<std::uint64_t> list;
  for (const auto& s : split(qs)) list.push_back(std::stoull(s));
  const auto rows = pgq::app::cycle_table(list);
  bool ok = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    const bool match = row.uniform && (!row.expected || *row.expected == row.type.to_string());
    ok = ok && match;
    arr.push_back(pgq::app::to_json(row));
    if (!as_json) {
      std::cout << "q = " << row.q << "  " << row.type.to_string();
      if (row.expected) std::cout << "  (tabulated " << *row.expected << ')';
      if (!row.uniform) std::cout << "  NOT UNIFORM";
      std::cout << (match ? "" : "  MISMATCH") << '\n';
    }
  }
  if (as_json) std::cout << arr.dump(2) << '\n';
  return ok ? exit_ok : exit_failed;
}

int run_serve(const std::string& host, int port) {
  pgq::app::PuzzleService service;
  httplib::Server srv;
  service.bind(srv);
  std::cout << "listening on " << host << ':' << port << std::endl;
  if (!srv.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ':' << port << '\n';
    return exit_invalid;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conway-type puzzle groupoids on PG(2,q)"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  pgq::PointId alpha = 0;
  std::string json_path, checks = "all", q_list, host = "127.0.0.1";
  bool primitivity = false, as_json = false;
  int port = 8080;

  auto* analyze = app.add_subcommand("analyze", "order and classification of the hole group");
  analyze->add_option("--q", q, "odd prime power")->required();
  analyze->add_option("--alpha", alpha, "home position of the hole (point id)");
  analyze->add_option("--json", json_path, "write the report as JSON");
  analyze->add_flag("--primitivity", primitivity, "also test primitivity on Omega");

  auto* verify = app.add_subcommand("verify", "run structural checks");
  verify->add_option("--q", q, "odd prime power")->required();
  verify->add_option("--checks", checks, "all, or a comma list of lemma2,lemma3i,lemma3ii,lemma3iv,lemma4,remark_table,parity");
  verify->add_option("--alpha", alpha, "home position of the hole (point id)");
  verify->add_flag("--json", as_json, "print results as JSON");

  auto* table = app.add_subcommand("cycle-table", "cycle types of collinear generators on their line");
  table->add_option("--q", q_list, "comma-separated list of odd prime powers > 3")->required();
  table->add_flag("--json", as_json, "print rows as JSON");

  auto* serve = app.add_subcommand("serve", "run the puzzle HTTP service");
  serve->add_option("--port", port, "TCP port");
  serve->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*analyze) return run_analyze(q, alpha, primitivity, json_path);
    if (*verify) return run_verify(q, checks, alpha, as_json);
    if (*table) return run_cycle_table(q_list, as_json);
    if (*serve) return run_serve(host, port);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
