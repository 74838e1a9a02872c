#pragma once

// HTTP/JSON service for puzzle sessions.
//
//   GET  /api/plane/{q}
//   POST /api/sessions                  {q, alpha?, scramble_length?, seed?}
//   GET  /api/sessions/{id}
//   POST /api/sessions/{id}/moves       {target}
//   GET  /api/sessions/{id}/preview?target=
//   POST /api/sessions/{id}/undo
//
// Errors come back as {"error": message} with 400 (bad input or illegal
// move) or 404 (unknown session).

#include <atomic>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "httplib.h"
#include "pgq/app/session.hpp"
#include "pgq/plane.hpp"

namespace pgq::app {

class not_found : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class bad_request : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PuzzleService {
 public:
  static constexpr std::uint32_t max_q = 31;

  std::shared_ptr<const Plane> plane(std::uint64_t q) {
    if (q > max_q) throw bad_request("q = " + std::to_string(q) + " exceeds the service limit of " + std::to_string(max_q));
    std::lock_guard lock(planes_mutex_);
    auto it = planes_.find(q);
    if (it != planes_.end()) return it->second;
    auto pl = std::make_shared<const Plane>(Field::of_order(q));
    planes_.emplace(q, pl);
    return pl;
  }

  nlohmann::json plane_json(std::uint64_t q) {
    const auto pl = plane(q);
    nlohmann::json points = nlohmann::json::array(), lines = nlohmann::json::array();
    for (PointId p = 0; p < pl->size(); ++p) {
      const auto& c = pl->coords(p);
      points.push_back({c[0].code, c[1].code, c[2].code});
    }
    for (LineId l = 0; l < pl->num_lines(); ++l) {
      const auto& c = pl->covector(l);
      lines.push_back({{"covector", {c[0].code, c[1].code, c[2].code}}, {"point_ids", pl->points_on(l)}});
    }
    return {{"q", pl->q()}, {"points", points}, {"lines", lines}};
  }

  nlohmann::json create(const nlohmann::json& req) {
    if (!req.is_object() || !is_count(req, "q")) throw bad_request("request needs a positive integer field q");
    const auto q = req["q"].get<std::uint64_t>();
    const auto pl = plane(q);
    const PointId alpha = get_or(req, "alpha", std::uint64_t{0});
    const std::size_t length = get_or(req, "scramble_length", std::uint64_t{0});
    const std::uint64_t seed = get_or(req, "seed", std::uint64_t{1});
    if (length > 100000) throw bad_request("scramble_length too large");
    const std::string id = "s" + std::to_string(++next_id_);
    auto entry = std::make_shared<Entry>(PuzzleSession(id, pl, alpha, length, seed));
    nlohmann::json out = to_json(entry->session);
    std::unique_lock lock(sessions_mutex_);
    sessions_.emplace(id, std::move(entry));
    return out;
  }

  nlohmann::json get(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    return to_json(e->session);
  }

  nlohmann::json move(const std::string& id, const nlohmann::json& req) {
    if (!req.is_object() || !is_count(req, "target")) throw bad_request("request needs a point id field target");
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    const MovePreview applied = e->session.move(req["target"].get<PointId>());
    nlohmann::json out = to_json(e->session);
    out["move"] = to_json(applied);
    return out;
  }

  nlohmann::json preview(const std::string& id, PointId target) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    return to_json(e->session.preview(target));
  }

  nlohmann::json undo(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    const MovePreview applied = e->session.undo();
    nlohmann::json out = to_json(e->session);
    out["move"] = to_json(applied);
    return out;
  }

  /// Registers the routes on an httplib server.
  void bind(httplib::Server& srv) {
    srv.Get(R"(/api/plane/(\d+))", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] { return plane_json(std::stoull(rq.matches[1].str())); });
    });
    srv.Post("/api/sessions", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] { return create(parse(rq.body)); });
    });
    srv.Get(R"(/api/sessions/([^/]+))", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] { return get(rq.matches[1].str()); });
    });
    srv.Post(R"(/api/sessions/([^/]+)/moves)", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] { return move(rq.matches[1].str(), parse(rq.body)); });
    });
    srv.Get(R"(/api/sessions/([^/]+)/preview)", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] {
        if (!rq.has_param("target")) throw bad_request("missing target parameter");
        return preview(rq.matches[1].str(), parse_point(rq.get_param_value("target")));
      });
    });
    srv.Post(R"(/api/sessions/([^/]+)/undo)", [this](const httplib::Request& rq, httplib::Response& rs) {
      respond(rs, [&] { return undo(rq.matches[1].str()); });
    });
  }

 private:
  struct Entry {
    explicit Entry(PuzzleSession s) : session(std::move(s)) {}
    std::mutex mutex;
    PuzzleSession session;
  };

  static bool is_count(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) return false;
    const auto v = j[key].get<std::int64_t>();
    return v >= 0 && v <= std::numeric_limits<std::uint32_t>::max();
  }

  template <typename T>
  static T get_or(const nlohmann::json& j, const char* key, T fallback) {
    if (!j.contains(key) || j[key].is_null()) return fallback;
    if (!is_count(j, key)) throw bad_request(std::string("field ") + key + " must be a non-negative integer");
    return j[key].get<T>();
  }

  static nlohmann::json parse(const std::string& body) {
    auto j = nlohmann::json::parse(body, nullptr, false);
    if (j.is_discarded()) throw bad_request("malformed JSON body");
    return j;
  }

  static PointId parse_point(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      throw bad_request("target must be a point id");
    }
    if (used != s.size() || v > std::numeric_limits<std::uint32_t>::max()) throw bad_request("target must be a point id");
    return static_cast<PointId>(v);
  }

  std::shared_ptr<Entry> find(const std::string& id) {
    std::shared_lock lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw not_found("no session " + id);
    return it->second;
  }

  template <typename F>
  static void respond(httplib::Response& rs, F&& body) {
    try {
      rs.set_content(body().dump(), "application/json");
    } catch (const not_found& e) {
      rs.status = 404;
      rs.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
    } catch (const std::invalid_argument& e) {
      rs.status = 400;
      rs.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
    } catch (const std::out_of_range& e) {
      rs.status = 400;
      rs.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
    }
  }

  std::mutex planes_mutex_;
  std::map<std::uint64_t, std::shared_ptr<const Plane>> planes_;
  std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::atomic<std::uint64_t> next_id_{0};
};

}  // namespace pgq::app
