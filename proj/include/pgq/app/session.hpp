#pragma once

// The sliding puzzle on PG(2,q): counters on every point but the hole,
// moved by elementary moves.
//
// Counters are labeled by their home point id. In the solved state the hole
// sits on alpha and every other point carries its own label. Scrambles are
// random walks of the hole drawn from std::minstd_rand (x <- 48271 x mod
// 2^31 - 1) seeded with the session seed: each step takes r = rng() and moves
// to the (r mod (n-1))-th point of P(q) \ {hole} in id order.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgq/moves.hpp"
#include "pgq/plane.hpp"

namespace pgq::app {

struct MovePreview {
  PointId hole = 0;
  PointId target = 0;
  LineId line = 0;
  std::vector<std::pair<PointId, PointId>> transposed;  // the (q-1)/2 pairs of t[hole,target]
};

inline MovePreview preview_move(const Plane& pl, PointId hole, PointId target) {
  if (target >= pl.size()) throw move_error("target is not a point id");
  if (target == hole) throw move_error("cannot move the hole onto itself");
  return {hole, target, pl.line_through(hole, target), involution_pairs(pl, hole, target)};
}

/// Picks the next scramble target; see the header comment.
inline PointId scramble_step(std::minstd_rand& rng, std::uint32_t n, PointId hole) {
  const std::uint32_t r = static_cast<std::uint32_t>(rng());
  const PointId idx = r % (n - 1);
  return idx < hole ? idx : idx + 1;
}

class PuzzleSession {
 public:
  PuzzleSession(std::string id, std::shared_ptr<const Plane> plane, PointId alpha, std::size_t scramble_length,
                std::uint64_t seed)
      : id_(std::move(id)), plane_(std::move(plane)), alpha_(alpha), seed_(seed) {
    if (alpha_ >= plane_->size()) throw move_error("alpha is not a point id");
    hole_ = alpha_;
    history_ = {alpha_};
    arrangement_.resize(plane_->size());
    for (PointId p = 0; p < plane_->size(); ++p)
      if (p != alpha_) arrangement_[p] = p;
    std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed_));
    for (std::size_t i = 0; i < scramble_length; ++i) apply(scramble_step(rng, plane_->size(), hole_));
  }

  const std::string& id() const noexcept { return id_; }
  const Plane& plane() const noexcept { return *plane_; }
  std::uint32_t q() const noexcept { return plane_->q(); }
  PointId alpha() const noexcept { return alpha_; }
  PointId hole() const noexcept { return hole_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const HolePath& history() const noexcept { return history_; }
  /// Label on each point id; nullopt on the hole.
  const std::vector<std::optional<PointId>>& arrangement() const noexcept { return arrangement_; }

  bool solved() const {
    if (hole_ != alpha_) return false;
    for (PointId p = 0; p < arrangement_.size(); ++p)
      if (p != hole_ && arrangement_[p] != p) return false;
    return true;
  }

  MovePreview preview(PointId target) const { return preview_move(*plane_, hole_, target); }

  MovePreview move(PointId target) {
    MovePreview pv = preview(target);
    apply(target);
    return pv;
  }

  /// Steps the hole back along the history.
  MovePreview undo() {
    if (history_.size() < 2) throw move_error("nothing to undo");
    const PointId back = history_[history_.size() - 2];
    MovePreview pv = preview(back);
    permute(elementary_move(*plane_, hole_, back));
    hole_ = back;
    history_.pop_back();
    return pv;
  }

 private:
  void apply(PointId target) {
    permute(elementary_move(*plane_, hole_, target));
    hole_ = target;
    history_.push_back(target);
  }

  // whatever sits on p moves to p^h
  void permute(const Permutation& h) {
    std::vector<std::optional<PointId>> next(arrangement_.size());
    for (PointId p = 0; p < arrangement_.size(); ++p) next[h[p]] = arrangement_[p];
    arrangement_ = std::move(next);
  }

  std::string id_;
  std::shared_ptr<const Plane> plane_;
  PointId alpha_;
  PointId hole_;
  std::uint64_t seed_;
  HolePath history_;
  std::vector<std::optional<PointId>> arrangement_;
};

inline nlohmann::json to_json(const PuzzleSession& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : s.arrangement()) arr.push_back(a ? nlohmann::json(*a) : nlohmann::json(nullptr));
  return {{"id", s.id()},          {"q", s.q()},         {"alpha", s.alpha()},     {"hole", s.hole()},
          {"arrangement", arr},    {"history", s.history()}, {"seed", s.seed()}, {"solved", s.solved()}};
}

inline nlohmann::json to_json(const MovePreview& p) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : p.transposed) pairs.push_back({a, b});
  return {{"hole", p.hole}, {"target", p.target}, {"line", p.line}, {"swap", {p.hole, p.target}}, {"transposed", pairs}};
}

}  // namespace pgq::app
