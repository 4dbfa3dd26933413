#include "scarf/slack.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "scarf/errors.hpp"
#include "scarf/linalg.hpp"
#include "scarf/parallel.hpp"
#include "scarf/subdivision.hpp"

namespace scarf {

ExtendedPoint slack_vector(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw InputError("slack_vector: index out of range");
  std::vector<ExtendedCoordinate> coords(n, ExtendedCoordinate::neg_inf());
  coords[i - 1] = ExtendedCoordinate::pos_inf();
  return ExtendedPoint(std::move(coords));
}

PointSet augment(const PointSet& A) {
  if (!A.all_finite()) throw InputError("augment: input must have finite coordinates");
  std::vector<ExtendedPoint> pts = A.points();
  std::vector<std::string> labels;
  if (A.has_labels()) {
    labels = A.labels();
  } else {
    for (int i = 0; i < A.size(); ++i) labels.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= A.dim(); ++i) {
    pts.push_back(slack_vector(A.dim(), i));
    labels.push_back("w" + std::to_string(i));
  }
  return PointSet(A.dim(), std::move(pts), std::move(labels));
}

int finite_point_count(const PointSet& Astar) {
  int count = 0;
  for (const auto& p : Astar.points())
    if (p.all_finite()) ++count;
  return count;
}

GenericityReport is_generic_star(const PointSet& Astar) { return is_generic(Astar); }

BonnetCertificate locate_bonnet(const PointSet& Astar, const ExtendedPoint& b,
                                const std::vector<int>& coordinate_order) {
  const int n = Astar.dim();
  if (b.dim() != n) throw InputError("locate_bonnet: dimension mismatch");
  if (!b.all_finite()) throw InputError("locate_bonnet: query must be finite");
  {
    std::vector<int> check = coordinate_order;
    std::sort(check.begin(), check.end());
    for (int k = 0; k < n; ++k)
      if (k >= static_cast<int>(check.size()) || check[k] != k + 1)
        throw InputError("locate_bonnet: coordinate order must be a permutation of 1.." +
                         std::to_string(n));
  }
  for (int i = 0; i < Astar.size(); ++i)
    if (point_leq(Astar.point(i), b))
      throw InputError("locate_bonnet: point " + std::to_string(i) + " = " +
                       Astar.point(i).str() + " lies at or below the query");
  if (!Astar.is_antichain()) throw InputError("locate_bonnet: augmented set is not an antichain");
  if (!is_generic_star(Astar).generic)
    throw InputError("locate_bonnet: augmented set is not generic");

  BonnetCertificate cert;
  cert.query = b;
  cert.coordinate_order = coordinate_order;
  cert.member_by_coordinate.assign(n, -1);

  std::vector<ExtendedCoordinate> current = b.coords();
  std::set<int> collected;
  for (int k1 : coordinate_order) {
    const int k = k1 - 1;
    // Finite candidates below the running point away from direction k; the
    // raise target is the smallest coordinate level strictly above.
    std::optional<int> chosen;
    Rat level;
    for (int i = 0; i < Astar.size(); ++i) {
      if (collected.count(i)) continue;
      const ExtendedPoint& a = Astar.point(i);
      if (!a[k].finite()) continue;  // only its own slack vector can land at +inf
      bool fits = true;
      for (int j = 0; j < n && fits; ++j)
        if (j != k) fits = cmp(a[j], current[j]) <= 0;
      if (!fits) continue;
      if (cmp(a[k], current[k]) <= 0)
        throw InternalError("locate_bonnet: uncollected point below the running corner");
      if (!chosen || a[k].value() < level) {
        chosen = i;
        level = a[k].value();
      } else if (a[k].value() == level) {
        throw InternalError("locate_bonnet: two points on the rising face; genericity violated");
      }
    }
    if (chosen) {
      current[k] = ExtendedCoordinate(level);
      collected.insert(*chosen);
      cert.member_by_coordinate[k] = *chosen;
    } else {
      current[k] = ExtendedCoordinate::pos_inf();
      auto wk = Astar.index_of(slack_vector(n, k1));
      if (!wk) throw InputError("locate_bonnet: slack vector w" + std::to_string(k1) +
                                " is missing from the augmented set");
      collected.insert(*wk);
      cert.member_by_coordinate[k] = *wk;
    }
  }
  cert.members.assign(collected.begin(), collected.end());
  cert.join_point = ExtendedPoint(std::move(current));
  verify_certificate(Astar, cert);
  return cert;
}

void verify_certificate(const PointSet& Astar, const BonnetCertificate& cert) {
  const int n = Astar.dim();
  if (static_cast<int>(cert.members.size()) != n)
    throw InternalError("certificate: expected " + std::to_string(n) + " members");
  // The query sits strictly inside the bonnet.
  if (!point_below_all(cert.query, cert.join_point))
    throw InternalError("certificate: query not strictly below the join");
  // The join is the actual join of the members.
  std::vector<ExtendedPoint> pts;
  for (int i : cert.members) pts.push_back(Astar.point(i));
  if (join(pts) != cert.join_point)
    throw InternalError("certificate: join mismatch");
  // The bonnet interior is free.
  for (int i = 0; i < Astar.size(); ++i)
    if (point_below_all(Astar.point(i), cert.join_point))
      throw InternalError("certificate: bonnet interior contains " + Astar.point(i).str());
  // Exactly one point of the whole set on each codimension-1 face.
  for (int k = 0; k < n; ++k) {
    int on_face = 0;
    for (int i = 0; i < Astar.size(); ++i) {
      const ExtendedPoint& a = Astar.point(i);
      if (point_leq(a, cert.join_point) && cmp(a[k], cert.join_point[k]) == 0) ++on_face;
    }
    if (on_face != 1)
      throw InternalError("certificate: face " + std::to_string(k + 1) + " holds " +
                          std::to_string(on_face) + " points, expected exactly 1");
  }
  // At least one member is finite whenever the set has finite points.
  if (finite_point_count(Astar) > 0) {
    bool any_finite = false;
    for (int i : cert.members) any_finite = any_finite || Astar.point(i).all_finite();
    if (!any_finite) throw InternalError("certificate: no finite member collected");
  }
}

Rat box_coordinate(const ExtendedCoordinate& c) {
  switch (c.kind()) {
    case CoordKind::NegInf: return Rat(-1);
    case CoordKind::PosInf: return Rat(1);
    default: {
      const Rat& v = c.value();
      return v >= 0 ? Rat(v / (1 + v)) : Rat(v / (1 - v));
    }
  }
}

ExtendedPoint box_point(const ExtendedPoint& p) {
  std::vector<Rat> out;
  out.reserve(p.dim());
  for (int i = 0; i < p.dim(); ++i) out.push_back(box_coordinate(p[i]));
  return ExtendedPoint::from_rats(std::move(out));
}

bool simplex_contains(const std::vector<ExtendedPoint>& vertices, const ExtendedPoint& q) {
  if (vertices.empty()) return false;
  const int n = q.dim();
  const int m = static_cast<int>(vertices.size());
  DenseMatrix M(n + 1, std::vector<Rat>(m));
  std::vector<Rat> rhs(n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) M[r][c] = vertices[c][r].value();
    rhs[r] = q[r].value();
  }
  for (int c = 0; c < m; ++c) M[n][c] = 1;
  rhs[n] = 1;
  auto weights = solve_exact(std::move(M), std::move(rhs));
  if (!weights) return false;
  for (const Rat& w : *weights)
    if (w < 0) return false;
  return true;
}

namespace {

/// Realized chains of one face in the box model: for each ordering of the
/// members, the prefix joins (mapped into the box) span a straight simplex.
bool face_cells_contain(const PointSet& Astar, const std::vector<int>& face,
                        const ExtendedPoint& boxed_query) {
  std::vector<int> order = face;
  std::sort(order.begin(), order.end());
  do {
    std::vector<ExtendedPoint> cell;
    ExtendedPoint running = Astar.point(order[0]);
    cell.push_back(box_point(running));
    for (std::size_t j = 1; j < order.size(); ++j) {
      running = join(running, Astar.point(order[j]));
      cell.push_back(box_point(running));
    }
    if (simplex_contains(cell, boxed_query)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

CoverageReport coverage_check(const PointSet& Astar, const std::vector<ExtendedPoint>& samples,
                              bool keep_detail, int threads) {
  const int n = Astar.dim();
  if (!is_generic_star(Astar).generic)
    throw InputError("coverage_check: augmented set is not generic");
  CoverageReport report;
  report.samples = static_cast<long long>(samples.size());

  const bool no_finite_points = finite_point_count(Astar) == 0;
  std::vector<Face> facets;
  std::optional<StaircaseRegion> region;
  if (!no_finite_points) {
    facets = maximal_faces(Astar);
    std::vector<ExtendedPoint> corners;
    for (const auto& f : facets) corners.push_back(f.join);
    region.emplace(n, std::move(corners));
  }

  std::vector<int> default_order(n);
  for (int k = 0; k < n; ++k) default_order[k] = k + 1;

  auto evaluate = [&](const ExtendedPoint& h) {
    if (h.dim() != n || !h.all_finite())
      throw InputError("coverage_check: samples must be finite points of matching dimension");
    Rat sum(0);
    for (int i = 0; i < n; ++i) sum += h[i].value();
    if (sum != 0) throw InputError("coverage_check: sample is not on the hyperplane");

    CoverageSample sample;
    sample.h = h;
    if (no_finite_points) {
      // Only the slack corner remains; every line crosses its single cell.
      sample.hit = true;
      sample.via_located_face = true;
      return sample;
    }

    ExtendedPoint p = raise_to_surface(*region, h);
    // Step just below the boundary point: far enough from the next-lower
    // exit level that the sweep must land on a corner whose bonnet still
    // contains p.
    std::vector<Rat> exit_levels;
    for (const auto& x : region->corners()) {
      bool has_finite = false;
      Rat t;
      for (int j = 0; j < n; ++j) {
        if (!x[j].finite()) continue;
        Rat slack = x[j].value() - h[j].value();
        if (!has_finite || slack < t) t = slack;
        has_finite = true;
      }
      if (has_finite) exit_levels.push_back(std::move(t));
    }
    std::sort(exit_levels.begin(), exit_levels.end());
    const Rat& t_star = exit_levels.back();
    Rat eps(1);
    for (auto it = exit_levels.rbegin(); it != exit_levels.rend(); ++it)
      if (*it < t_star) { eps = (t_star - *it) / 2; break; }
    std::vector<Rat> below;
    for (int i = 0; i < n; ++i) below.push_back(p[i].value() - eps);
    ExtendedPoint b = ExtendedPoint::from_rats(std::move(below));

    BonnetCertificate cert = locate_bonnet(Astar, b, default_order);
    ExtendedPoint q = box_point(p);
    if (face_cells_contain(Astar, cert.members, q)) {
      sample.hit = true;
      sample.via_located_face = true;
    } else {
      for (const auto& f : facets) {
        if (face_cells_contain(Astar, f.members, q)) {
          sample.hit = true;
          break;
        }
      }
    }
    return sample;
  };

  std::vector<CoverageSample> results(samples.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_for(samples.size(), threads, [&](std::size_t i) {
    try {
      results[i] = evaluate(samples[i]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  });
  if (failure) std::rethrow_exception(failure);

  for (const auto& sample : results) {
    if (sample.hit) {
      ++report.hits;
      if (!sample.via_located_face) ++report.fallback_hits;
    } else {
      ++report.misses;
    }
    if (keep_detail) report.detail.push_back(sample);
  }
  return report;
}

}  // namespace scarf
