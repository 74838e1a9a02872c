#pragma once

// Permutation-group engine: cycle types, parity, orbits, blocks, and a
// deterministic Schreier-Sims stabilizer chain with exact group orders.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgq/permutation.hpp"

namespace pgq {

using BigInt = boost::multiprecision::cpp_int;

class group_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Cycle types and parity

/// Multiset of cycle lengths: length -> multiplicity.
struct CycleType {
  std::map<std::size_t, std::size_t> counts;

  std::size_t total() const {
    std::size_t s = 0;
    for (auto [len, mult] : counts) s += len * mult;
    return s;
  }

  /// "1^1.4^1" style, lengths ascending.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto [len, mult] : counts) {
      if (!first) os << '.';
      first = false;
      os << len << '^' << mult;
    }
    return os.str();
  }

  static CycleType parse(const std::string& s) {
    CycleType ct;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, '.')) {
      const auto caret = part.find('^');
      const std::size_t len = std::stoul(part.substr(0, caret));
      const std::size_t mult = caret == std::string::npos ? 1 : std::stoul(part.substr(caret + 1));
      ct.counts[len] += mult;
    }
    return ct;
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline void require_invariant(const Permutation& g, std::span<const Point> domain) {
  std::vector<bool> in(g.degree(), false);
  for (Point x : domain) {
    if (x >= g.degree()) throw group_error("domain point out of range");
    in[x] = true;
  }
  for (Point x : domain)
    if (!in[g[x]]) throw group_error("domain is not invariant under the permutation");
}

inline CycleType cycle_type(const Permutation& g, std::span<const Point> domain) {
  require_invariant(g, domain);
  std::vector<bool> done(g.degree(), false);
  CycleType ct;
  for (Point x : domain) {
    if (done[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !done[y]; y = g[y]) {
      done[y] = true;
      ++len;
    }
    ++ct.counts[len];
  }
  return ct;
}

inline CycleType cycle_type(const Permutation& g) {
  std::vector<Point> all(g.degree());
  std::iota(all.begin(), all.end(), Point{0});
  return cycle_type(g, all);
}

enum class Parity { even, odd };

inline Parity parity(const Permutation& g) {
  std::vector<bool> done(g.degree(), false);
  std::size_t moved = 0, cycles = 0;
  for (Point x = 0; x < g.degree(); ++x) {
    if (done[x] || g[x] == x) continue;
    ++cycles;
    for (Point y = x; !done[y]; y = g[y]) {
      done[y] = true;
      ++moved;
    }
  }
  return (moved - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

// ---------------------------------------------------------------------------
// Orbits and blocks

inline std::size_t common_degree(std::span<const Permutation> gens) {
  if (gens.empty()) return 0;
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw group_error("generators have inconsistent degrees");
  return n;
}

/// Orbits of <gens> on an invariant domain, each ascending, ordered by least element.
inline std::vector<std::vector<Point>> orbits(std::span<const Permutation> gens, std::span<const Point> domain) {
  common_degree(gens);
  for (const auto& g : gens) require_invariant(g, domain);
  Point top = 0;
  for (Point x : domain) top = std::max(top, x + 1);
  std::vector<bool> seen(top, false);
  std::vector<Point> sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Point>> out;
  for (Point x : sorted) {
    if (seen[x]) continue;
    std::vector<Point> orb{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto& g : gens) {
        const Point y = g[orb[i]];
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

inline bool is_transitive(std::span<const Permutation> gens, std::span<const Point> domain) {
  return domain.empty() || orbits(gens, domain).size() == 1;
}

namespace detail {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

// Atkinson's refinement: the finest gens-invariant partition joining a and b.
inline UnionFind join_classes(std::span<const Permutation> gens, std::size_t degree, Point a, Point b) {
  UnionFind uf(degree);
  std::vector<std::pair<Point, Point>> queue;
  auto merge = [&](Point x, Point y) {
    x = uf.find(x);
    y = uf.find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    uf.parent[y] = x;
    queue.emplace_back(x, y);
  };
  merge(a, b);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [x, y] = queue[i];
    for (const auto& g : gens) merge(g[x], g[y]);
  }
  return uf;
}

}  // namespace detail

/// Smallest block of imprimitivity of a transitive group containing a and b.
inline std::vector<Point> minimal_block(std::span<const Permutation> gens, std::span<const Point> domain,
                                        Point a, Point b) {
  if (a == b) throw group_error("minimal_block needs two distinct points");
  const std::size_t n = common_degree(gens);
  if (gens.empty() && domain.size() > 1) throw group_error("group is not transitive on the domain");
  if (!is_transitive(gens, domain)) throw group_error("group is not transitive on the domain");
  if (std::find(domain.begin(), domain.end(), a) == domain.end() ||
      std::find(domain.begin(), domain.end(), b) == domain.end())
    throw group_error("block points must lie in the domain");
  auto uf = detail::join_classes(gens, n, a, b);
  const Point root = uf.find(a);
  std::vector<Point> block;
  for (Point x : domain)
    if (uf.find(x) == root) block.push_back(x);
  std::sort(block.begin(), block.end());
  return block;
}

inline bool is_primitive(std::span<const Permutation> gens, std::span<const Point> domain) {
  if (domain.size() <= 1) return true;
  if (gens.empty() || !is_transitive(gens, domain)) throw group_error("group is not transitive on the domain");
  const std::size_t n = common_degree(gens);
  const Point d0 = *std::min_element(domain.begin(), domain.end());
  for (Point d : domain) {
    if (d == d0) continue;
    auto uf = detail::join_classes(gens, n, d0, d);
    const Point root = uf.find(d0);
    for (Point x : domain)
      if (uf.find(x) != root) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Stabilizer chains

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Level i holds the generators fixing base points 0..i-1, the orbit of
/// base point i, and an explicit transversal.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  StabilizerChain(std::span<const Permutation> gens, std::size_t degree) : degree_(degree) {
    for (const auto& g : gens)
      if (g.degree() != degree) throw group_error("generator degree does not match chain degree");
    for (const auto& g : gens) add_generator(g);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& l : levels_) s.push_back(l.orbit.size());
    return s;
  }

  const std::vector<Point>& orbit(std::size_t level) const { return levels_.at(level).orbit; }

  /// Strong generators fixing base points 0..level-1.
  std::vector<Permutation> strong_generators(std::size_t level = 0) const {
    std::vector<Permutation> out;
    if (level >= levels_.size()) return out;
    for (auto idx : levels_[level].gens) out.push_back(strong_[idx]);
    return out;
  }

  std::size_t num_strong_generators() const noexcept { return strong_.size(); }

  BigInt order() const {
    BigInt r = 1;
    for (const auto& l : levels_) r *= l.orbit.size();
    return r;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) throw group_error("membership test degree mismatch");
    Permutation h = g;
    return sift(h, 0) == levels_.size() && h.is_identity();
  }

  /// Adds g to the group (no-op if already a member) and restores the chain.
  /// Returns true if the group grew.
  bool add_generator(const Permutation& g) {
    if (g.degree() != degree_) throw group_error("generator degree does not match chain degree");
    Permutation h = g;
    const std::size_t j = sift(h, 0);
    if (j == levels_.size() && h.is_identity()) return false;
    install(std::move(h), 0, j);
    complete();
    return true;
  }

 private:
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;       // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // point -> orbit index or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
    std::size_t checked_orbit = 0;  // Schreier pairs (p, s) with p < checked_orbit and
    std::size_t checked_gens = 0;   // s < checked_gens are known to sift through
  };

  // Sifts h in place starting at `from`; returns the level where it stopped
  // (levels_.size() when it passed every level).
  std::size_t sift(Permutation& h, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      const Level& l = levels_[i];
      const Point x = h[l.base];
      const auto pos = l.position[x];
      if (pos < 0) return i;
      if (pos != 0) h *= l.inverse_transversal[pos];
    }
    return levels_.size();
  }

  void new_level(Point base) {
    Level l;
    l.base = base;
    l.position.assign(degree_, -1);
    l.orbit.push_back(base);
    l.position[base] = 0;
    l.transversal.push_back(Permutation::identity(degree_));
    l.inverse_transversal.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(l));
  }

  // Makes h a strong generator of levels [from, to]; h fixes the base points
  // of levels < to and, if to == depth(), a new level is opened for it.
  void install(Permutation h, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      const auto s = h.support();
      new_level(s.front());
    }
    const std::size_t idx = strong_.size();
    strong_.push_back(std::move(h));
    for (std::size_t i = from; i <= to; ++i) {
      levels_[i].gens.push_back(idx);
      extend_orbit(i, levels_[i].gens.size() - 1);
    }
  }

  // Closes the orbit of level i after generators [first_new, end) were added.
  void extend_orbit(std::size_t i, std::size_t first_new) {
    Level& l = levels_[i];
    const std::size_t old_size = l.orbit.size();
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      const std::size_t g0 = k < old_size ? first_new : 0;
      for (std::size_t gi = g0; gi < l.gens.size(); ++gi) {
        const Permutation& s = strong_[l.gens[gi]];
        const Point y = s[l.orbit[k]];
        if (l.position[y] >= 0) continue;
        l.position[y] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(y);
        Permutation u = l.transversal[k] * s;
        l.inverse_transversal.push_back(u.inverse());
        l.transversal.push_back(std::move(u));
      }
    }
  }

  // Schreier-Sims, deepest level first. Pairs already verified on earlier
  // passes are skipped through the per-level checked cursors.
  void complete() {
    std::size_t i = levels_.size() - 1;
    Permutation sg = Permutation::identity(degree_);
    while (true) {
      Level& l = levels_[i];
      bool grew = false;
      const std::size_t orbit_size = l.orbit.size();
      const std::size_t gen_count = l.gens.size();
      for (std::size_t k = 0; k < orbit_size && !grew; ++k) {
        const std::size_t g0 = k < l.checked_orbit ? l.checked_gens : 0;
        for (std::size_t gi = g0; gi < gen_count; ++gi) {
          const Permutation& s = strong_[l.gens[gi]];
          const Point y = s[l.orbit[k]];
          const auto pos = l.position[y];
          // u_p s u_{p^s}^{-1}
          sg = l.transversal[k];
          sg *= s;
          sg *= l.inverse_transversal[pos];
          if (sg.is_identity()) continue;
          const std::size_t j = sift(sg, i + 1);
          if (j == levels_.size() && sg.is_identity()) continue;
          install(sg, i + 1, j);
          i = j;
          grew = true;
          break;
        }
      }
      if (grew) continue;
      l.checked_orbit = orbit_size;
      l.checked_gens = gen_count;
      if (i == 0) break;
      --i;
    }
  }

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

inline StabilizerChain schreier_sims(std::span<const Permutation> gens, std::size_t degree) {
  return StabilizerChain(gens, degree);
}

inline BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

enum class GroupTag { symmetric, alternating, other };

inline const char* to_string(GroupTag t) {
  switch (t) {
    case GroupTag::symmetric: return "symmetric";
    case GroupTag::alternating: return "alternating";
    default: return "other";
  }
}

struct GroupClass {
  GroupTag tag = GroupTag::other;
  BigInt order;
  std::size_t degree = 0;
};

/// Recognizes Sym(n) and Alt(n) from the exact order.
inline GroupClass classify(const BigInt& order, std::size_t degree) {
  if (order < 1) throw group_error("group order must be positive");
  GroupClass c{GroupTag::other, order, degree};
  const BigInt full = factorial(degree);
  if (order == full)
    c.tag = GroupTag::symmetric;
  else if (degree >= 2 && order * 2 == full)
    c.tag = GroupTag::alternating;
  return c;
}

}  // namespace pgq
