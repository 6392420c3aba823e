#include "augopt/decision_set.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "augopt/random.hpp"

namespace augopt {

namespace {

constexpr double kDykstraStep = 1e-10;
constexpr int kDykstraRounds = 10000;
constexpr double kFeasibilityTol = 1e-7;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(ConstVecView w, const char* what) {
  if (!all_finite(w)) throw Error(std::string(what) + ": non-finite input");
}

Vec project_ball(const Ball& b, ConstVecView w) {
  const double d = distance(w, b.center);
  if (d <= b.radius) return Vec(w.begin(), w.end());
  Vec out(b.center);
  const double s = b.radius / d;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * (w[i] - b.center[i]);
  return out;
}

Vec project_box(const Box& b, ConstVecView w) {
  Vec out(w.begin(), w.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::clamp(out[i], b.lo[i], b.hi[i]);
  return out;
}

Vec dykstra(const std::vector<DecisionSet>& parts, ConstVecView w) {
  const std::size_t k = parts.size();
  Vec x(w.begin(), w.end());
  std::vector<Vec> increments(k, Vec(w.size(), 0.0));
  for (int round = 0; round < kDykstraRounds; ++round) {
    const Vec start = x;
    for (std::size_t i = 0; i < k; ++i) {
      Vec y = add(x, increments[i]);
      Vec px = parts[i].project(y);
      increments[i] = sub(y, px);
      x = std::move(px);
    }
    if (distance(x, start) < kDykstraStep) break;
  }
  return x;
}

}  // namespace

DecisionSet DecisionSet::ball(Vec center, double radius) {
  if (center.empty()) throw Error("Ball: empty center");
  require_finite(center, "Ball");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("Ball: radius must be > 0");
  return DecisionSet(Ball{std::move(center), radius});
}

DecisionSet DecisionSet::box(Vec lo, Vec hi) {
  if (lo.empty()) throw Error("Box: empty bounds");
  require_same_size(lo, hi, "Box");
  require_finite(lo, "Box");
  require_finite(hi, "Box");
  bool positive_extent = false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw Error("Box: lo must be <= hi elementwise");
    if (hi[i] > lo[i]) positive_extent = true;
  }
  if (!positive_extent) throw Error("Box: zero diameter");
  return DecisionSet(Box{std::move(lo), std::move(hi)});
}

DecisionSet DecisionSet::simplex(std::size_t dim) {
  if (dim < 2) throw Error("Simplex: dimension must be >= 2");
  return DecisionSet(Simplex{dim});
}

DecisionSet DecisionSet::ball_intersection(std::vector<Ball> balls) {
  if (balls.empty()) throw Error("BallIntersection: no balls");
  std::vector<DecisionSet> parts;
  parts.reserve(balls.size());
  for (auto& b : balls) parts.push_back(ball(std::move(b.center), b.radius));
  const std::size_t d = parts.front().dim();
  for (const auto& p : parts) {
    if (p.dim() != d) throw Error("BallIntersection: dimension mismatch");
  }
  if (parts.size() == 1) return parts.front();
  DecisionSet out(Intersection{std::move(parts)});
  const auto& pieces = std::get<Intersection>(out.shape_).parts;
  const Vec probe = dykstra(pieces, std::get<Ball>(pieces.front().shape()).center);
  for (const auto& p : pieces) {
    if (!p.contains(probe, kFeasibilityTol)) throw Error("BallIntersection: empty intersection");
  }
  return out;
}

DecisionSet DecisionSet::intersect_ball(Vec center, double radius) const {
  if (center.size() != dim()) throw Error("intersect_ball: dimension mismatch");
  std::vector<DecisionSet> parts;
  if (const auto* inter = std::get_if<Intersection>(&shape_)) {
    parts = inter->parts;
  } else {
    parts.push_back(*this);
  }
  parts.push_back(ball(std::move(center), radius));
  DecisionSet out(Intersection{std::move(parts)});
  const auto& pieces = std::get<Intersection>(out.shape_).parts;
  const Vec probe = dykstra(pieces, std::get<Ball>(pieces.back().shape()).center);
  for (const auto& p : pieces) {
    if (!p.contains(probe, kFeasibilityTol)) throw Error("intersect_ball: empty intersection");
  }
  return out;
}

std::size_t DecisionSet::dim() const {
  return std::visit(Overloaded{
                        [](const Ball& b) { return b.center.size(); },
                        [](const Box& b) { return b.lo.size(); },
                        [](const Simplex& s) { return s.dim; },
                        [](const Intersection& s) { return s.parts.front().dim(); },
                    },
                    shape_);
}

Vec DecisionSet::project(ConstVecView w) const {
  if (w.size() != dim()) throw Error("project: dimension mismatch");
  require_finite(w, "project");
  return std::visit(Overloaded{
                        [&](const Ball& b) { return project_ball(b, w); },
                        [&](const Box& b) { return project_box(b, w); },
                        [&](const Simplex&) { return project_simplex(w); },
                        [&](const Intersection& s) {
                          if (contains(w, 0.0)) return Vec(w.begin(), w.end());
                          return dykstra(s.parts, w);
                        },
                    },
                    shape_);
}

bool DecisionSet::contains(ConstVecView w, double tol) const {
  if (w.size() != dim()) return false;
  return std::visit(Overloaded{
                        [&](const Ball& b) { return distance(w, b.center) <= b.radius + tol; },
                        [&](const Box& b) {
                          for (std::size_t i = 0; i < w.size(); ++i) {
                            if (w[i] < b.lo[i] - tol || w[i] > b.hi[i] + tol) return false;
                          }
                          return true;
                        },
                        [&](const Simplex&) {
                          double s = 0.0;
                          for (double x : w) {
                            if (x < -tol) return false;
                            s += x;
                          }
                          return std::abs(s - 1.0) <= tol;
                        },
                        [&](const Intersection& s) {
                          return std::all_of(s.parts.begin(), s.parts.end(),
                                             [&](const DecisionSet& p) { return p.contains(w, tol); });
                        },
                    },
                    shape_);
}

double DecisionSet::diameter() const {
  return std::visit(Overloaded{
                        [](const Ball& b) { return 2.0 * b.radius; },
                        [](const Box& b) { return distance(b.lo, b.hi); },
                        [](const Simplex&) { return std::sqrt(2.0); },
                        [](const Intersection& s) {
                          double d = std::numeric_limits<double>::infinity();
                          for (const auto& p : s.parts) d = std::min(d, p.diameter());
                          return d;
                        },
                    },
                    shape_);
}

Vec DecisionSet::sample_uniform(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return std::visit(
      Overloaded{
          [&](const Ball& b) {
            Vec u = sample_unit_ball(b.center.size(), rng);
            for (std::size_t i = 0; i < u.size(); ++i) u[i] = b.center[i] + b.radius * u[i];
            return u;
          },
          [&](const Box& b) {
            Vec u(b.lo.size());
            for (std::size_t i = 0; i < u.size(); ++i) {
              std::uniform_real_distribution<double> dist(b.lo[i], b.hi[i]);
              u[i] = b.lo[i] == b.hi[i] ? b.lo[i] : dist(rng);
            }
            return u;
          },
          [&](const Simplex& s) {
            // Normalized exponentials are Dirichlet(1,...,1), i.e. uniform on the simplex.
            std::exponential_distribution<double> expo(1.0);
            Vec u(s.dim);
            double total = 0.0;
            for (double& x : u) {
              x = expo(rng);
              total += x;
            }
            for (double& x : u) x /= total;
            return u;
          },
          [&](const Intersection& s) {
            const auto tightest =
                std::min_element(s.parts.begin(), s.parts.end(),
                                 [](const DecisionSet& a, const DecisionSet& b) {
                                   return a.diameter() < b.diameter();
                                 });
            for (int attempt = 0; attempt < 100000; ++attempt) {
              Vec u = tightest->sample_uniform(rng());
              if (contains(u, 0.0)) return u;
            }
            throw Error("sample_uniform: rejection sampling failed for intersection");
          },
      },
      shape_);
}

Vec project_simplex(ConstVecView q) {
  if (q.empty()) throw Error("project_simplex: empty input");
  require_finite(q, "project_simplex");
  double total = 0.0;
  bool nonnegative = true;
  for (double x : q) {
    total += x;
    nonnegative = nonnegative && x >= 0.0;
  }
  if (nonnegative && std::abs(total - 1.0) <= 1e-15 * static_cast<double>(q.size())) {
    return Vec(q.begin(), q.end());
  }
  // The projection commutes with adding a constant to every coordinate;
  // shifting a large leading entry to 0 keeps the running sums well scaled.
  const double top = std::max(*std::max_element(q.begin(), q.end()), 1.0) - 1.0;
  Vec sorted(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) sorted[i] = q[i] - top;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) threshold = t;
  }
  Vec out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = std::max((q[i] - top) - threshold, 0.0);
  return out;
}

}  // namespace augopt
