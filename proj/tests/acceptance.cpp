// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock time.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pgq/app/analysis.hpp"

using namespace pgq;
using namespace pgq::app;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << std::fixed << std::setprecision(2) << s << " s] "
            << o.detail << std::endl;
}

// Runs f and fails the outcome if it took longer than the limit.
template <typename F>
Outcome timed(double limit_seconds, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = f();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_seconds) {
    o.pass = false;
    o.detail += " (took " + std::to_string(s) + " s, limit " + std::to_string(limit_seconds) + " s)";
  }
  return o;
}

Outcome expect_order(std::uint64_t q, const BigInt& expected, GroupTag tag) {
  const auto r = analyze(q);
  Outcome o;
  o.pass = r.order == expected && r.tag == tag;
  o.detail = "q=" + std::to_string(q) + " order " + (r.order == expected ? "exact" : "MISMATCH") + " tag " +
             to_string(r.tag) + ";";
  return o;
}

Outcome run_checks(const std::vector<std::uint64_t>& qs, const std::string& check, CheckStatus wanted,
                   VerifyOptions opts = {}, double per_q_limit = 1e9) {
  Outcome o;
  for (auto q : qs) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify(q, {check}, opts).front();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.status == wanted && s < per_q_limit;
    o.pass = o.pass && ok;
    std::ostringstream d;
    d << " q=" << q << ":" << to_string(r.status) << "(" << r.cases << " cases, " << std::setprecision(3) << s << "s)";
    if (!ok && !r.counterexample.is_null()) d << " counterexample " << r.counterexample.dump();
    o.detail += d.str();
  }
  return o;
}

}  // namespace

int main() {
  criterion("q=3 hole group is M12 (order 95040) within 5 s", [] {
    return timed(5, [] { return expect_order(3, 95040, GroupTag::other); });
  });

  criterion("q=5 order 30! symmetric; q=9 order 90! symmetric within 5 min", [] {
    return timed(300, [] {
      Outcome a = expect_order(5, factorial(30), GroupTag::symmetric);
      Outcome b = expect_order(9, factorial(90), GroupTag::symmetric);
      return Outcome{a.pass && b.pass, a.detail + " " + b.detail};
    });
  });

  criterion("q=7 order 56!/2 alternating; q=11 order 132!/2 alternating within 5 min", [] {
    return timed(300, [] {
      Outcome a = expect_order(7, factorial(56) / 2, GroupTag::alternating);
      Outcome b = expect_order(11, factorial(132) / 2, GroupTag::alternating);
      return Outcome{a.pass && b.pass, a.detail + " " + b.detail};
    });
  });

  criterion("collinear cycle-type table for q in {5,...,29}, each < 10 s", [] {
    Outcome o;
    for (std::uint64_t q : {5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29}) {
      const auto row = collinear_cycle_type(q);
      const bool ok = row.uniform && row.expected && *row.expected == row.type.to_string() && row.seconds < 10;
      o.pass = o.pass && ok;
      std::ostringstream d;
      d << " " << q << ":" << row.type.to_string() << (ok ? "" : "(MISMATCH)");
      o.detail += d.str();
    }
    return o;
  });

  criterion("noncollinear x is a product of (3q-1)/2 disjoint transpositions", [] {
    VerifyOptions opts;
    opts.exhaustive_limit = 7;
    opts.noncollinear_samples = 500;
    return run_checks({5, 7, 9, 11, 13}, "lemma2", CheckStatus::pass, opts);
  });

  criterion("collinear x never trivial for q in {5..13}; always trivial at q=3", [] {
    Outcome a = run_checks({5, 7, 9, 11, 13}, "lemma3ii", CheckStatus::pass);
    Outcome b = run_checks({3}, "lemma3ii", CheckStatus::expected_degenerate);
    return Outcome{a.pass && b.pass, a.detail + b.detail};
  });

  criterion("line groups G(l) transitive on l minus alpha for every line through alpha", [] {
    return run_checks({5, 7, 9, 11, 13}, "lemma3iv", CheckStatus::pass);
  });

  criterion("hole group primitive on Omega for q in {5..13}, each < 2 min", [] {
    return run_checks({5, 7, 9, 11, 13}, "lemma4", CheckStatus::pass, {}, 120);
  });

  criterion("stabilizer conjugation equivariance, >= 50 samples at q=5 and q=9", [] {
    VerifyOptions opts;
    opts.conjugation_samples = 50;
    return run_checks({5, 9}, "lemma3i", CheckStatus::pass, opts);
  });

  criterion("every generator even iff q = 3 mod 4, exhaustive for q <= 13", [] {
    return run_checks({3, 5, 7, 9, 11, 13}, "parity", CheckStatus::pass);
  });

  criterion("Schreier-Sims order matches brute-force closure (>= 50 groups, degree <= 8)", [] {
    std::mt19937_64 rng(2718);
    std::size_t cases = 0;
    Outcome o;
    for (; cases < 60; ++cases) {
      const std::size_t n = 3 + cases % 6;
      const auto gens = oracle::random_generators(n, rng);
      if (schreier_sims(gens, n).order() != oracle::closure_size(gens, n)) {
        o.pass = false;
        o.detail = "mismatch at case " + std::to_string(cases);
        return o;
      }
    }
    o.detail = std::to_string(cases) + " groups agree";
    return o;
  });

  criterion("is_primitive matches brute-force partition search (>= 20 transitive groups)", [] {
    std::mt19937_64 rng(31415);
    std::size_t cases = 0, primitive = 0;
    Outcome o;
    for (int t = 0; cases < 30 && t < 2000; ++t) {
      const std::size_t n = 4 + t % 5;
      const auto gens = oracle::random_generators(n, rng);
      std::vector<Point> dom(n);
      std::iota(dom.begin(), dom.end(), Point{0});
      if (!is_transitive(gens, dom)) continue;
      ++cases;
      const bool got = is_primitive(gens, dom);
      primitive += got;
      if (got != oracle::primitive_by_partitions(gens, n)) {
        o.pass = false;
        o.detail = "mismatch at trial " + std::to_string(t);
        return o;
      }
    }
    o.pass = cases >= 20;
    o.detail = std::to_string(cases) + " groups agree (" + std::to_string(primitive) + " primitive)";
    return o;
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
