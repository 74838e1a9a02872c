#pragma once

// Hole-group analysis and the structural verification checks.

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgq/moves.hpp"
#include "pgq/permgrp.hpp"
#include "pgq/plane.hpp"

namespace pgq::app {

using json = nlohmann::json;

inline const BigInt& m12_order() {
  static const BigInt order = 95040;
  return order;
}

struct StageTimings {
  double plane_seconds = 0;
  double generators_seconds = 0;
  double chain_seconds = 0;
  double primitivity_seconds = 0;
};

struct AnalysisReport {
  std::uint32_t q = 0;
  PointId alpha = 0;
  std::size_t degree = 0;  // |Omega|
  std::size_t raw_generators = 0;
  std::size_t identity_generators = 0;
  std::size_t generators = 0;
  std::size_t strong_generators = 0;
  std::vector<Point> base;
  BigInt order;
  GroupTag tag = GroupTag::other;
  bool all_even = false;
  bool all_odd = false;
  std::optional<bool> primitive;
  std::string note;
  StageTimings timings;
};

namespace detail {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::vector<Point> omega(const Plane& pl, PointId alpha) {
  std::vector<Point> out;
  for (Point p = 0; p < pl.size(); ++p)
    if (p != alpha) out.push_back(p);
  return out;
}

}  // namespace detail

struct AnalyzeOptions {
  PointId alpha = 0;
  bool check_primitivity = false;
};

inline AnalysisReport analyze(std::uint64_t q, AnalyzeOptions opts = {}) {
  detail::Stopwatch sw;
  const Plane pl(Field::of_order(q));
  if (opts.alpha >= pl.size()) throw move_error("alpha is not a point id of the plane");
  AnalysisReport r;
  r.q = pl.q();
  r.alpha = opts.alpha;
  r.degree = pl.size() - 1;
  r.timings.plane_seconds = sw.lap();

  const GeneratorSet gs = hole_group_generators(pl, opts.alpha);
  r.raw_generators = gs.raw_count;
  r.identity_generators = gs.identity_count;
  r.generators = gs.generators.size();
  r.all_even = std::all_of(gs.generators.begin(), gs.generators.end(),
                           [](const Permutation& g) { return parity(g) == Parity::even; });
  r.all_odd = std::all_of(gs.generators.begin(), gs.generators.end(),
                          [](const Permutation& g) { return parity(g) == Parity::odd; });
  r.timings.generators_seconds = sw.lap();

  const StabilizerChain chain(gs.generators, pl.size());
  r.order = chain.order();
  r.base = chain.base();
  r.strong_generators = chain.num_strong_generators();
  r.tag = classify(r.order, r.degree).tag;
  r.timings.chain_seconds = sw.lap();

  if (opts.check_primitivity) {
    const auto dom = detail::omega(pl, opts.alpha);
    r.primitive = is_primitive(gs.generators, dom);
    r.timings.primitivity_seconds = sw.lap();
  }

  if (r.tag == GroupTag::other && r.order == m12_order() && r.degree == 12)
    r.note = "order 95040 on 12 points: the Mathieu group M12";
  return r;
}

inline json to_json(const AnalysisReport& r) {
  json j;
  j["q"] = r.q;
  j["alpha"] = r.alpha;
  j["degree"] = r.degree;
  j["generators"] = {{"raw", r.raw_generators}, {"identity", r.identity_generators}, {"nontrivial", r.generators}};
  j["strong_generators"] = r.strong_generators;
  j["base"] = r.base;
  j["order"] = r.order.str();
  j["classification"] = to_string(r.tag);
  j["parity"] = r.all_even ? "all_even" : r.all_odd ? "all_odd" : "mixed";
  j["primitive"] = r.primitive ? json(*r.primitive) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  j["timings"] = {{"plane", r.timings.plane_seconds},
                  {"generators", r.timings.generators_seconds},
                  {"chain", r.timings.chain_seconds},
                  {"primitivity", r.timings.primitivity_seconds}};
  return j;
}

// ---------------------------------------------------------------------------
// Collinear cycle types

/// Cycle types of collinear x[beta,gamma] on ell \ {alpha}, tabulated for small q.
inline const std::map<std::uint32_t, std::string>& reference_cycle_types() {
  static const std::map<std::uint32_t, std::string> table = {
      {5, "1^1.4^1"},   {7, "7^1"},           {9, "1^5.4^1"},  {11, "1^2.3^3"},
      {13, "2^3.7^1"},  {17, "3^3.8^1"},      {19, "1^2.17^1"}, {23, "23^1"},
      {25, "1^1.4^1.5^4"}, {27, "1^3.4^6"}, {29, "1^2.13^1.14^1"},
  };
  return table;
}

struct CycleTableRow {
  std::uint32_t q = 0;
  CycleType type;
  bool uniform = true;          // identical for every line through alpha and every pair
  std::size_t pairs_checked = 0;
  std::optional<std::string> expected;
  std::optional<std::pair<PointId, PointId>> witness;  // first pair that differed
  double seconds = 0;
};

inline CycleTableRow collinear_cycle_type(std::uint64_t q, PointId alpha = 0) {
  detail::Stopwatch sw;
  const Plane pl(Field::of_order(q));
  if (pl.q() <= 3) throw field_error(FieldErrc::not_prime_power, "cycle table needs q > 3");
  CycleTableRow row;
  row.q = pl.q();
  bool first = true;
  for (LineId ell : pl.lines_through(alpha)) {
    const auto dom = line_minus_point(pl, ell, alpha);
    for (PointId b : dom) {
      for (PointId c : dom) {
        if (b == c) continue;
        const CycleType ct = cycle_type(x_generator(pl, alpha, b, c), dom);
        ++row.pairs_checked;
        if (first) {
          row.type = ct;
          first = false;
        } else if (!(ct == row.type) && row.uniform) {
          row.uniform = false;
          row.witness = {b, c};
        }
      }
    }
  }
  if (auto it = reference_cycle_types().find(row.q); it != reference_cycle_types().end()) row.expected = it->second;
  row.seconds = sw.lap();
  return row;
}

inline std::vector<CycleTableRow> cycle_table(const std::vector<std::uint64_t>& qs) {
  std::vector<CycleTableRow> rows;
  for (auto q : qs) rows.push_back(collinear_cycle_type(q));
  return rows;
}

// ---------------------------------------------------------------------------
// Verification checks

enum class CheckStatus { pass, fail, expected_degenerate, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::expected_degenerate: return "expected_degenerate";
    default: return "not_applicable";
  }
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string summary;
  json counterexample;  // null unless failed
  std::size_t cases = 0;
  double seconds = 0;

  bool ok() const { return status != CheckStatus::fail; }
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"lemma2", "lemma3i", "lemma3ii", "lemma3iv",
                                                 "lemma4", "remark_table", "parity"};
  return names;
}

struct VerifyOptions {
  PointId alpha = 0;
  std::size_t exhaustive_limit = 7;   // q at or below: every noncollinear pair
  std::size_t noncollinear_samples = 500;
  std::size_t conjugation_samples = 50;
  std::uint64_t seed = 20240601;
};

namespace checks {

inline json perm_json(const Permutation& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

// Noncollinear x[beta,gamma] = (beta gamma) t[alpha,beta] t[beta,gamma] t[gamma,alpha],
// a product of (3q-1)/2 disjoint transpositions.
inline CheckResult lemma2(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"lemma2"};
  const PointId a = o.alpha;
  const std::size_t q = pl.q();
  CycleType expected;
  expected.counts[2] = (3 * q - 1) / 2;
  expected.counts[1] = pl.size() - 2 * expected.counts[2];

  auto check = [&](PointId b, PointId c) {
    const Permutation x = x_generator(pl, a, b, c);
    const Permutation formula = Permutation::transposition(pl.size(), b, c) * involution_t(pl, a, b) *
                                involution_t(pl, b, c) * involution_t(pl, c, a);
    ++r.cases;
    if (!(x == formula) || !(cycle_type(x) == expected)) {
      r.status = CheckStatus::fail;
      r.counterexample = {{"beta", b}, {"gamma", c}, {"x", perm_json(x)}, {"cycle_type", cycle_type(x).to_string()}};
      return false;
    }
    return true;
  };

  if (q <= o.exhaustive_limit) {
    for (PointId b = 0; b < pl.size() && r.ok(); ++b)
      for (PointId c = 0; c < pl.size() && r.ok(); ++c)
        if (b != a && c != a && b != c && !pl.collinear(a, b, c)) check(b, c);
  } else {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<PointId> pick(0, pl.size() - 1);
    while (r.cases < o.noncollinear_samples && r.ok()) {
      const PointId b = pick(rng), c = pick(rng);
      if (b == a || c == a || b == c || pl.collinear(a, b, c)) continue;
      check(b, c);
    }
  }
  if (r.ok()) r.summary = std::to_string(r.cases) + " noncollinear generators have cycle type " + expected.to_string();
  return r;
}

// Conjugating x[beta,gamma] by g in the stabilizer of alpha and ell gives x[beta^g, gamma^g].
inline CheckResult lemma3i(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"lemma3i"};
  const Field& f = pl.field();
  const PointId a = o.alpha;
  std::mt19937_64 rng(o.seed + 1);
  std::uniform_int_distribution<std::uint32_t> any(0, f.order() - 1), nonzero(1, f.order() - 1);
  const auto& lines = pl.lines_through(a);
  std::uniform_int_distribution<std::size_t> pick_line(0, lines.size() - 1);
  for (std::size_t i = 0; i < o.conjugation_samples && r.ok(); ++i) {
    const LineId ell = lines[pick_line(rng)];
    const auto dom = line_minus_point(pl, ell, a);
    std::uniform_int_distribution<std::size_t> pick(0, dom.size() - 1);
    PointId b = dom[pick(rng)], c = dom[pick(rng)];
    while (c == b) c = dom[pick(rng)];
    const ProjMatrix m = pl.line_stabilizer_element(a, ell, FieldElement{nonzero(rng)}, FieldElement{nonzero(rng)},
                                                    FieldElement{any(rng)}, FieldElement{any(rng)},
                                                    FieldElement{any(rng)});
    const Permutation g(pl.induced_images(m));
    const Permutation lhs = x_generator(pl, a, b, c).conjugate_by(g);
    const Permutation rhs = x_generator(pl, a, g[b], g[c]);
    ++r.cases;
    if (!(lhs == rhs)) {
      r.status = CheckStatus::fail;
      r.counterexample = {{"line", ell}, {"beta", b}, {"gamma", c}, {"g", perm_json(g)}};
    }
  }
  if (r.ok()) r.summary = std::to_string(r.cases) + " sampled stabilizer conjugations are equivariant";
  return r;
}

// Collinear x[beta,gamma] is never the identity for q > 3; for q = 3 it always is.
inline CheckResult lemma3ii(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"lemma3ii"};
  const PointId a = o.alpha;
  std::size_t identities = 0;
  json first_identity;
  for (LineId ell : pl.lines_through(a)) {
    const auto dom = line_minus_point(pl, ell, a);
    for (PointId b : dom)
      for (PointId c : dom) {
        if (b == c) continue;
        ++r.cases;
        if (x_generator(pl, a, b, c).is_identity()) {
          if (identities++ == 0) first_identity = {{"line", ell}, {"beta", b}, {"gamma", c}};
        }
      }
  }
  if (pl.q() == 3) {
    if (identities == r.cases) {
      r.status = CheckStatus::expected_degenerate;
      r.summary = "all " + std::to_string(r.cases) + " collinear generators are the identity at q = 3";
    } else {
      r.status = CheckStatus::fail;
      r.summary = "expected every collinear generator to be trivial at q = 3";
    }
  } else if (identities > 0) {
    r.status = CheckStatus::fail;
    r.counterexample = first_identity;
    r.summary = std::to_string(identities) + " collinear generators are the identity";
  } else {
    r.summary = "no identity among " + std::to_string(r.cases) + " collinear generators";
  }
  return r;
}

// G(ell) is transitive on ell \ {alpha} for every line through alpha.
inline CheckResult lemma3iv(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"lemma3iv"};
  const PointId a = o.alpha;
  for (LineId ell : pl.lines_through(a)) {
    const auto gens = line_group_generators(pl, a, ell);
    const auto dom = line_minus_point(pl, ell, a);
    ++r.cases;
    if (pl.q() == 3) continue;
    const auto orbs = orbits(gens.generators, dom);
    if (orbs.size() != 1) {
      r.status = CheckStatus::fail;
      r.counterexample = {{"line", ell}, {"orbits", orbs}};
      return r;
    }
  }
  if (pl.q() == 3) {
    r.status = CheckStatus::expected_degenerate;
    r.summary = "line groups are trivial at q = 3";
  } else {
    r.summary = "G(l) transitive on all " + std::to_string(r.cases) + " lines through alpha";
  }
  return r;
}

inline CheckResult lemma4(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"lemma4"};
  const auto gens = hole_group_generators(pl, o.alpha);
  const auto dom = detail::omega(pl, o.alpha);
  r.cases = dom.size();
  if (!is_transitive(gens.generators, dom)) {
    r.status = CheckStatus::fail;
    r.counterexample = {{"orbits", orbits(gens.generators, dom)}};
    return r;
  }
  const Point d0 = dom.front();
  for (Point d : dom) {
    if (d == d0) continue;
    auto block = minimal_block(gens.generators, dom, d0, d);
    if (block.size() != dom.size()) {
      r.status = CheckStatus::fail;
      r.counterexample = {{"block", block}};
      return r;
    }
  }
  r.summary = "hole group primitive on " + std::to_string(dom.size()) + " points";
  return r;
}

inline CheckResult remark_table(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"remark_table"};
  if (pl.q() <= 3) {
    r.status = CheckStatus::not_applicable;
    r.summary = "collinear generators are trivial at q = 3";
    return r;
  }
  const CycleTableRow row = collinear_cycle_type(pl.q(), o.alpha);
  r.cases = row.pairs_checked;
  if (!row.uniform) {
    r.status = CheckStatus::fail;
    r.counterexample = {{"beta", row.witness->first}, {"gamma", row.witness->second}};
    r.summary = "cycle type depends on the chosen collinear pair";
  } else if (!row.expected) {
    r.status = CheckStatus::not_applicable;
    r.summary = "cycle type " + row.type.to_string() + " (no tabulated value for this q)";
  } else if (row.type.to_string() != *row.expected) {
    r.status = CheckStatus::fail;
    r.counterexample = {{"computed", row.type.to_string()}, {"expected", *row.expected}};
  } else {
    r.summary = "cycle type " + row.type.to_string() + " on every line through alpha";
  }
  return r;
}

// Every generator is even iff q = 3 mod 4.
inline CheckResult parity_check(const Plane& pl, const VerifyOptions& o) {
  CheckResult r{"parity"};
  const bool expect_even = pl.q() % 4 == 3;
  const auto gens = hole_group_generators(pl, o.alpha);
  for (const auto& g : gens.generators) {
    ++r.cases;
    if ((parity(g) == Parity::even) != expect_even) {
      r.status = CheckStatus::fail;
      r.counterexample = {{"generator", perm_json(g)}};
      return r;
    }
  }
  r.summary = std::string("all ") + std::to_string(r.cases) + " generators " + (expect_even ? "even" : "odd");
  return r;
}

}  // namespace checks

class unknown_check : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline CheckResult run_check(const Plane& pl, const std::string& name, const VerifyOptions& o = {}) {
  detail::Stopwatch sw;
  CheckResult r;
  if (name == "lemma2")
    r = checks::lemma2(pl, o);
  else if (name == "lemma3i")
    r = checks::lemma3i(pl, o);
  else if (name == "lemma3ii")
    r = checks::lemma3ii(pl, o);
  else if (name == "lemma3iv")
    r = checks::lemma3iv(pl, o);
  else if (name == "lemma4")
    r = checks::lemma4(pl, o);
  else if (name == "remark_table")
    r = checks::remark_table(pl, o);
  else if (name == "parity")
    r = checks::parity_check(pl, o);
  else
    throw unknown_check("unknown check: " + name);
  r.seconds = sw.lap();
  return r;
}

inline std::vector<CheckResult> verify(std::uint64_t q, const std::vector<std::string>& which, const VerifyOptions& o = {}) {
  for (const auto& n : which)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw unknown_check("unknown check: " + n);
  const Plane pl(Field::of_order(q));
  if (o.alpha >= pl.size()) throw move_error("alpha is not a point id of the plane");
  std::vector<CheckResult> out;
  for (const auto& n : which) out.push_back(run_check(pl, n, o));
  return out;
}

inline json to_json(const CheckResult& r) {
  return {{"check", r.name},         {"status", to_string(r.status)}, {"summary", r.summary},
          {"cases", r.cases},        {"seconds", r.seconds},          {"counterexample", r.counterexample}};
}

inline json to_json(const CycleTableRow& row) {
  json j = {{"q", row.q}, {"cycle_type", row.type.to_string()}, {"uniform", row.uniform},
            {"pairs_checked", row.pairs_checked}, {"seconds", row.seconds}};
  j["expected"] = row.expected ? json(*row.expected) : json(nullptr);
  return j;
}

}  // namespace pgq::app
