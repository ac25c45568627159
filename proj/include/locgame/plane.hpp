#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "locgame/random.hpp"
#include "locgame/vertex_set.hpp"

// Geometric localization game in the Euclidean plane: the cop probes points
// and learns exact Euclidean distances; the robber moves at most 1 per round.
namespace locgame::plane {

struct Point {
  double x = 0;
  double y = 0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point unit(Point a) { return (1.0 / norm(a)) * a; }
inline Point polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

inline bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
  Point center;
  double radius = 0;
};

struct Tolerance {
  double geometry = 1e-9;
  double game = 1e-6;
};

inline std::string describe(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

inline std::string describe(Point p) {
  std::ostringstream s;
  s.precision(12);
  s << "(" << p.x << "," << p.y << ")";
  return s.str();
}

/// Intersection points of two circles: none, one (tangent within tol) or two.
/// Two points come out as center-line foot +/- the perpendicular offset, the
/// "+" side (left of c1 -> c2) first.
inline std::vector<Point> circle_intersection(const Circle& c1, const Circle& c2, double tol = 1e-9) {
  if (c1.radius < 0 || c2.radius < 0) throw invalid_input("circle radius must be nonnegative");
  const Point delta = c2.center - c1.center;
  const double d = norm(delta);
  if (d <= tol) throw invalid_input("circle_intersection: coincident centers");
  const double r1 = c1.radius, r2 = c2.radius;
  const double scale = tol * std::max({1.0, r1, r2, d});
  if (d > r1 + r2 + scale || d < std::abs(r1 - r2) - scale) return {};
  const Point u = (1.0 / d) * delta;
  const double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
  if (std::abs(d - (r1 + r2)) <= scale || std::abs(d - std::abs(r1 - r2)) <= scale)
    return {c1.center + a * u};
  const double h = std::sqrt(std::max(0.0, (r1 - a) * (r1 + a)));
  const Point foot = c1.center + a * u;
  return {foot + h * perp(u), foot - h * perp(u)};
}

/// Point at the given distances from three noncolinear probes: a linear solve
/// of the differenced circle equations, polished by Gauss-Newton steps.
inline Point trilaterate(std::span<const Point> probes, std::span<const double> distances, double tol = 1e-9) {
  if (probes.size() != 3 || distances.size() != 3) throw invalid_input("trilaterate: need three probes and three distances");
  const Point p1 = probes[0], p2 = probes[1], p3 = probes[2];
  const Point e1 = p2 - p1, e2 = p3 - p1;
  const double det = 4 * cross(e1, e2);
  if (std::abs(cross(e1, e2)) <= tol * norm(e1) * norm(e2) || norm(e1) <= tol || norm(e2) <= tol)
    throw invalid_input("trilaterate: probes are colinear");
  const double d1 = distances[0], d2 = distances[1], d3 = distances[2];
  // Relative to p1: 2 e_i . x = |e_i|^2 - d_{i+1}^2 + d1^2
  const double b1 = dot(e1, e1) - d2 * d2 + d1 * d1;
  const double b2 = dot(e2, e2) - d3 * d3 + d1 * d1;
  Point x{(b1 * 2 * e2.y - b2 * 2 * e1.y) / det, (2 * e1.x * b2 - 2 * e2.x * b1) / det};
  x = x + p1;
  for (int it = 0; it < 3; ++it) {
    // Normal equations of the 3x2 Jacobian of |x - p_i| - d_i.
    double a11 = 0, a12 = 0, a22 = 0, g1 = 0, g2 = 0;
    for (int i = 0; i < 3; ++i) {
      const Point r = x - probes[i];
      const double len = norm(r);
      if (len == 0) continue;
      const Point j = (1.0 / len) * r;
      const double res = len - distances[i];
      a11 += j.x * j.x;
      a12 += j.x * j.y;
      a22 += j.y * j.y;
      g1 += j.x * res;
      g2 += j.y * res;
    }
    const double dd = a11 * a22 - a12 * a12;
    if (std::abs(dd) < 1e-300) break;
    x = x - Point{(a22 * g1 - a12 * g2) / dd, (a11 * g2 - a12 * g1) / dd};
  }
  double residual = 0, scale = 1;
  for (int i = 0; i < 3; ++i) {
    residual = std::max(residual, std::abs(dist(x, probes[i]) - distances[i]));
    scale = std::max(scale, distances[i]);
  }
  if (residual > tol * scale) throw invalid_input("trilaterate: inconsistent distances");
  return x;
}

// Region descriptors for traces.
struct Everywhere {};
struct OnCircle { Circle circle; };
struct AtPoints { std::vector<Point> points; };
struct Annulus { Point center; double inner; double outer; };
struct Arc { Circle support; double from; double to; };  // angles in radians, from <= to
struct ArcSet { std::vector<Arc> arcs; };
struct Line { Point origin; Point direction; };
struct HalfPlaneConstrained { std::string region; Line boundary; double max_offset; };

using RegionEstimate = std::variant<Everywhere, OnCircle, AtPoints, Annulus, ArcSet, HalfPlaneConstrained>;

inline std::string describe(const RegionEstimate& r) {
  std::ostringstream s;
  s.precision(12);
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Everywhere>) {
          s << "everything";
        } else if constexpr (std::is_same_v<T, OnCircle>) {
          s << "circle(" << describe(v.circle.center) << "," << v.circle.radius << ")";
        } else if constexpr (std::is_same_v<T, AtPoints>) {
          s << (v.points.size() == 1 ? "point" : "points") << "{";
          for (std::size_t i = 0; i < v.points.size(); ++i) s << (i ? "," : "") << describe(v.points[i]);
          s << "}";
        } else if constexpr (std::is_same_v<T, Annulus>) {
          s << "annulus(" << describe(v.center) << "," << v.inner << "," << v.outer << ")";
        } else if constexpr (std::is_same_v<T, ArcSet>) {
          s << "arcs{";
          for (std::size_t i = 0; i < v.arcs.size(); ++i)
            s << (i ? "," : "") << "arc(" << describe(v.arcs[i].support.center) << "," << v.arcs[i].support.radius
              << "," << v.arcs[i].from << "," << v.arcs[i].to << ")";
          s << "}";
        } else {
          s << v.region << "&strip(" << describe(v.boundary.origin) << "," << describe(v.boundary.direction) << ","
            << v.max_offset << ")";
        }
      },
      r);
  return s.str();
}

/// Robber in the plane. Every move has length at most 1. The robber is told the
/// probes of the coming round before moving (it knows the cop's strategy).
class RobberModel {
 public:
  enum class Kind { stationary, scripted, random_walk, evasive };

  static RobberModel stationary(Point p) { return RobberModel(Kind::stationary, p, {}, 0, 0); }
  /// Position in round i is waypoints[i]; the last waypoint repeats.
  static RobberModel scripted(std::vector<Point> waypoints) {
    if (waypoints.empty()) throw invalid_input("scripted robber needs a waypoint");
    for (std::size_t i = 1; i < waypoints.size(); ++i)
      if (dist(waypoints[i], waypoints[i - 1]) > 1 + 1e-12) throw invalid_input("scripted robber moves more than 1");
    Point start = waypoints.front();
    return RobberModel(Kind::scripted, start, std::move(waypoints), 0, 0);
  }
  static RobberModel random_walk(Point start, std::uint64_t seed) {
    return RobberModel(Kind::random_walk, start, {}, seed, 0);
  }
  /// Samples candidate moves and keeps the one that is hardest for the
  /// announced probes: nearest the line through two probes, or most
  /// tangential to a single probe.
  static RobberModel evasive(Point start, std::uint64_t seed, int samples = 64) {
    return RobberModel(Kind::evasive, start, {}, seed, samples);
  }

  Kind kind() const { return kind_; }
  Point position() const { return pos_; }

  Point advance(std::span<const Point> upcoming) {
    ++round_;
    Point next = pos_;
    switch (kind_) {
      case Kind::stationary:
        break;
      case Kind::scripted:
        next = waypoints_[std::min(round_, waypoints_.size() - 1)];
        break;
      case Kind::random_walk:
        next = pos_ + polar(uniform_unit(rng_), 2 * std::numbers::pi * uniform_unit(rng_));
        break;
      case Kind::evasive:
        next = evade(upcoming);
        break;
    }
    if (dist(next, pos_) > 1 + 1e-12) throw invalid_input("robber moved more than 1");
    pos_ = next;
    return pos_;
  }

 private:
  RobberModel(Kind k, Point p, std::vector<Point> w, std::uint64_t seed, int samples)
      : kind_(k), pos_(p), waypoints_(std::move(w)), rng_(seed), samples_(samples) {}

  Point evade(std::span<const Point> upcoming) {
    Point best = pos_;
    double best_score = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples_; ++i) {
      const double r = i % 2 ? 1.0 : std::sqrt(uniform_unit(rng_));
      const Point cand = pos_ + polar(std::min(r, 1.0), 2 * std::numbers::pi * uniform_unit(rng_));
      double score = 0;
      if (upcoming.size() >= 2) {
        const Point dir = unit(upcoming[1] - upcoming[0]);
        score = std::abs(cross(dir, cand - upcoming[0]));
      } else if (upcoming.size() == 1 && dist(pos_, upcoming[0]) > 0) {
        const Point radial = unit(pos_ - upcoming[0]);
        score = -std::abs(cross(radial, cand - pos_));
      }
      if (score < best_score) {
        best_score = score;
        best = cand;
      }
    }
    return best;
  }

  Kind kind_;
  Point pos_;
  std::vector<Point> waypoints_;
  std::size_t round_ = 0;
  Rng rng_;
  int samples_;
};

struct TraceEntry {
  int round;
  Point probe;
  double distance;
  std::string region;
};

struct TwoCopResult {
  Point located;
  Point robber;  // true position in the last round
  int rounds = 0;
  std::vector<TraceEntry> trace;
};

namespace detail {

inline TraceEntry probe_entry(int round, Point probe, Point robber, const RegionEstimate& region) {
  return {round, probe, dist(probe, robber), describe(region)};
}

}  // namespace detail

/// Two cops, two rounds. Round 1 probes (0,0) and (6,0); unless that already
/// pins the robber, he was at one of two mirror points p1, p2 and is now in
/// one of the unit disks around them. Round 2 probes two points of a line
/// with both disks strictly on one side (margin 0.5); of the two circle
/// intersections, the one on the disks' side is the robber.
inline TwoCopResult two_cop_play(RobberModel robber, Tolerance tol = {}) {
  TwoCopResult out;
  const Point v1{0, 0}, v2{6, 0};
  const Point r1 = robber.position();
  const double d1 = dist(r1, v1), d2 = dist(r1, v2);
  out.rounds = 1;
  out.robber = r1;
  if (d1 <= tol.geometry || d2 <= tol.geometry) {
    const Point at = d1 <= tol.geometry ? v1 : v2;
    out.trace.push_back(detail::probe_entry(1, v1, r1, AtPoints{{at}}));
    out.trace.push_back(detail::probe_entry(1, v2, r1, AtPoints{{at}}));
    out.located = at;
    return out;
  }
  auto cand = circle_intersection({v1, d1}, {v2, d2}, tol.geometry);
  out.trace.push_back(detail::probe_entry(1, v1, r1, OnCircle{{v1, d1}}));
  out.trace.push_back(detail::probe_entry(1, v2, r1, AtPoints{cand}));
  if (cand.empty()) throw std::logic_error("two_cop_play: round-1 circles do not meet");
  if (cand.size() == 1) {
    out.located = cand[0];
    return out;
  }
  const Point p1 = cand[0], p2 = cand[1];
  const Point mid = 0.5 * (p1 + p2);
  Point w = unit(perp(p1 - p2));
  if (w.x < 0 || (w.x == 0 && w.y < 0)) w = -1.0 * w;
  const double reach = std::max(std::abs(dot(p1 - mid, w)), std::abs(dot(p2 - mid, w))) + 1.0;
  const double offset = reach + 0.5;
  const Point origin = mid + offset * w;
  const Point along = perp(w);
  out.rounds = 2;
  double half = 10.0;
  for (int attempt = 0; attempt < 2; ++attempt, half *= 10) {
    const Point v3 = origin - half * along, v4 = origin + half * along;
    const Point probes[] = {v3, v4};
    const Point r2 = attempt == 0 ? robber.advance(probes) : robber.position();
    out.robber = r2;
    const double d3 = dist(r2, v3), d4 = dist(r2, v4);
    auto hits = circle_intersection({v3, d3}, {v4, d4}, tol.geometry);
    HalfPlaneConstrained region{"disks{" + describe(p1) + "," + describe(p2) + "}", {origin, along}, reach};
    out.trace.push_back(detail::probe_entry(2, v3, r2, region));
    out.trace.push_back(detail::probe_entry(2, v4, r2, AtPoints{hits}));
    if (hits.size() == 1) {
      out.located = hits[0];
      return out;
    }
    if (hits.empty()) throw std::logic_error("two_cop_play: round-2 circles do not meet");
    const double s0 = dot(hits[0] - origin, w), s1 = dot(hits[1] - origin, w);
    if (std::abs(s0) < tol.geometry || std::abs(s1) < tol.geometry) continue;
    out.located = s0 < 0 ? hits[0] : hits[1];
    return out;
  }
  throw invalid_input("two_cop_play: side selection stayed ambiguous");
}

/// One round of the one-cop escape: the robber revealed `previous`, the cop
/// probed `probe`, the robber now sits at `position`. `witness` is a second
/// point of the same response circle inside the unit disk around `previous`.
struct EscapeRound {
  Point previous;
  Point probe;
  Point position;
  Point witness;
  double distance;
  double separation;
};

using Prober = std::function<Point(Point previous, const std::vector<EscapeRound>& history)>;

/// Robber strategy against a single cop who even learns the robber's previous
/// position. Step 0.9 at golden-angle headings, turned a quarter when the
/// heading would fall within 0.1 of the line through the probe and the disk
/// centre; the witness is the mirror image across that line.
inline std::vector<EscapeRound> one_cop_escape(const Prober& prober, int rounds, Point start = {0, 0}) {
  const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
  std::vector<EscapeRound> out;
  Point prev = start;
  for (int i = 0; i < rounds; ++i) {
    const Point c = prober(prev, out);
    if (!finite(c)) throw invalid_input("prober returned a non-finite point");
    double heading = golden * i;
    Point pos = prev + polar(0.9, heading);
    Point witness;
    if (dist(c, prev) < 1e-12) {
      witness = prev + polar(0.9, heading + std::numbers::pi / 2);
    } else {
      const Point axis = unit(prev - c);
      if (std::abs(cross(axis, pos - prev)) < 0.1) {
        heading += std::numbers::pi / 2;
        pos = prev + polar(0.9, heading);
      }
      const Point rel = pos - c;
      witness = c + (2 * dot(rel, axis)) * axis - rel;
    }
    out.push_back({prev, c, pos, witness, dist(pos, c), dist(pos, witness)});
    prev = pos;
  }
  return out;
}

struct ApproxParams {
  double epsilon;
  double root;   // largest root of 2d^2 + 2d - (2e + e^2) = 0
  double delta;  // root / 2
};

/// delta with sqrt((1+delta)^2 + delta^2) <= 1 + epsilon, from the quadratic
/// (1+d)^2 + d^2 = (1+e)^2 and then halved.
inline ApproxParams derive_delta(double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw invalid_input("epsilon must be positive");
  const double c = 2 * epsilon + epsilon * epsilon;
  // (-2 + sqrt(4 + 8c)) / 4, written to avoid cancellation for small c.
  const double root = 2 * c / (2 + std::sqrt(4 + 8 * c));
  return {epsilon, root, root / 2};
}

struct ApproxResult {
  Point estimate;
  double error_bound = 0;  // sqrt((1 + dev_l)^2 + dev_k^2) <= 1 + epsilon
  bool exact = false;
  int rounds = 0;
  ApproxParams params{};
  double deviation_l = 0;  // arc-to-line deviation in round 2
  double deviation_k = 0;  // arc-to-line deviation in round 3
  double sagitta_bound_l = 0;
  double sagitta_bound_k = 0;
  Point robber;  // true position in the last round
  std::vector<TraceEntry> trace;
};

/// Probe distance so that arcs of chord at most `chord` deviate from their
/// tangent line by at most delta (sagitta <= chord^2 / (4R)).
inline double far_probe_distance(double chord, double diameter, double delta) {
  return std::max(chord * chord / (4 * delta), 10 * diameter) + diameter;
}

/// One cop, three rounds, error at most 1 + epsilon.
///  1. probe c1: the robber is on a circle, next round in an annulus A2.
///  2. probe c2 = c1 + D2 (1,0) far away: the response arcs inside A2 lie
///     within delta of the vertical line l through the arcs' apex.
///  3. probe c3 on l far beyond A3: the response arc lies within delta of a
///     line k perpendicular to l. The estimate is k meet l.
inline ApproxResult approx_one_cop(RobberModel robber, double epsilon, Point c1 = {0, 0}, Tolerance tol = {}) {
  ApproxResult out;
  out.params = derive_delta(epsilon);
  const double delta = out.params.delta;

  const Point r1 = robber.position();
  const double d1 = dist(r1, c1);
  out.rounds = 1;
  if (d1 <= tol.geometry) {
    out.trace.push_back(detail::probe_entry(1, c1, r1, AtPoints{{c1}}));
    out.estimate = c1;
    out.exact = true;
    out.robber = r1;
    return out;
  }
  const Annulus a2{c1, std::max(0.0, d1 - 1), d1 + 1};
  out.trace.push_back(detail::probe_entry(1, c1, r1, OnCircle{{c1, d1}}));

  // Round 2.
  const Point u{1, 0}, v{0, 1};
  const double diam2 = 2 * a2.outer;
  const double far2 = far_probe_distance(diam2, diam2, delta);
  const Point c2 = c1 + far2 * u;
  const Point r2 = robber.advance(std::span<const Point>(&c2, 1));
  const double d2 = dist(r2, c2);
  out.rounds = 2;
  if (d2 <= tol.geometry) {
    out.trace.push_back(detail::probe_entry(2, c2, r2, AtPoints{{c2}}));
    out.estimate = c2;
    out.exact = true;
    out.robber = r2;
    return out;
  }
  // Points c2 + d2 * (-cos psi, sin psi): distance to c1 grows with |psi|.
  auto psi_for = [&](double radius) {
    const double cosv = (d2 * d2 + far2 * far2 - radius * radius) / (2 * d2 * far2);
    return std::acos(std::clamp(cosv, -1.0, 1.0));
  };
  const double psi_max = psi_for(a2.outer);
  const double psi_min = a2.inner > 0 ? psi_for(a2.inner) : 0.0;
  ArcSet s2;
  const Circle support2{c2, d2};
  if (psi_min <= 0) {
    s2.arcs.push_back({support2, std::numbers::pi - psi_max, std::numbers::pi + psi_max});
  } else {
    s2.arcs.push_back({support2, std::numbers::pi - psi_max, std::numbers::pi - psi_min});
    s2.arcs.push_back({support2, std::numbers::pi + psi_min, std::numbers::pi + psi_max});
  }
  const Point apex2 = c2 - d2 * u;  // l: through apex2, direction v
  const double half_sin = std::sin(psi_max / 2);
  out.deviation_l = 2 * d2 * half_sin * half_sin;
  out.sagitta_bound_l = diam2 * diam2 / (4 * d2);
  if (out.deviation_l > delta || out.sagitta_bound_l > delta)
    throw std::logic_error("approx_one_cop: round-2 arcs stray more than delta from l");
  out.trace.push_back(detail::probe_entry(2, c2, r2, s2));

  // Round 3. A3 lies in the strip of half-width 1 + dev_l around l and in disk(c1, d1 + 2).
  const double strip = 1 + out.deviation_l;
  const double reach3 = d1 + 2;
  const double diam3 = 2 * reach3;
  const double far3 = far_probe_distance(2 * strip, diam3, delta);
  const Point foot = apex2 + dot(c1 - apex2, v) * v;
  const Point c3 = foot + far3 * v;
  const Point r3 = robber.advance(std::span<const Point>(&c3, 1));
  const double d3 = dist(r3, c3);
  out.rounds = 3;
  out.robber = r3;
  if (d3 <= tol.geometry) {
    out.trace.push_back(detail::probe_entry(3, c3, r3, AtPoints{{c3}}));
    out.estimate = c3;
    out.exact = true;
    return out;
  }
  if (dist(c3 + d3 * v, c1) <= reach3 + strip)
    throw std::logic_error("approx_one_cop: two arcs survive in round 3");
  if (strip >= d3) throw std::logic_error("approx_one_cop: round-3 probe too close");
  const double chi_max = std::asin(strip / d3);
  const double half_chi = std::sin(chi_max / 2);
  out.deviation_k = 2 * d3 * half_chi * half_chi;
  out.sagitta_bound_k = (2 * strip) * (2 * strip) / (4 * d3);
  if (out.deviation_k > delta || out.sagitta_bound_k > delta)
    throw std::logic_error("approx_one_cop: round-3 arc strays more than delta from k");
  const Point apex3 = c3 - d3 * v;  // k: through apex3, direction u
  ArcSet s3{{{{c3, d3}, -std::numbers::pi / 2 - chi_max, -std::numbers::pi / 2 + chi_max}}};
  out.trace.push_back(detail::probe_entry(
      3, c3, r3, HalfPlaneConstrained{describe(RegionEstimate{s3}), {apex2, v}, strip}));
  out.estimate = apex3;
  out.error_bound = std::hypot(1 + out.deviation_l, out.deviation_k);
  return out;
}

}  // namespace locgame::plane
