#include "scarf/random.hpp"

#include <algorithm>
#include <set>

#include "scarf/errors.hpp"
#include "scarf/neighborly.hpp"

namespace scarf {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long Rng::range(long long lo, long long hi) {
  if (lo > hi) throw InputError("Rng::range: empty interval");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

Rat Rng::rational(long long scale) {
  if (scale < 1) throw InputError("Rng::rational: scale must be >= 1");
  return Rat(Int(range(-scale, scale)), Int(range(1, scale)));
}

namespace {

PointSet antichain_2d(Rng& rng, int count, long long range) {
  // Distinct x ascending against distinct y descending is always an
  // antichain, and 2d antichains never share a coordinate, so genericity
  // is automatic.
  auto distinct = [&](int k) {
    std::set<long long> vals;
    while (static_cast<int>(vals.size()) < k) vals.insert(rng.range(0, range));
    return std::vector<long long>(vals.begin(), vals.end());
  };
  std::vector<long long> xs = distinct(count);
  std::vector<long long> ys = distinct(count);
  std::vector<std::vector<long long>> coords;
  for (int i = 0; i < count; ++i) coords.push_back({xs[i], ys[count - 1 - i]});
  return PointSet::from_ints(coords);
}

}  // namespace

PointSet random_generic_antichain(int n, int count, std::uint64_t seed,
                                  long long coordinate_range) {
  if (n < 2) throw InputError("random_generic_antichain: n must be >= 2");
  if (count < 1) throw InputError("random_generic_antichain: count must be >= 1");
  if (coordinate_range + 1 < count)
    throw InputError("random_generic_antichain: coordinate range too small for the count");
  Rng rng(seed);
  if (n == 2) return antichain_2d(rng, count, coordinate_range);

  const int max_restarts = 20000;
  const int max_point_tries = 300;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    std::vector<std::vector<long long>> coords;
    bool stuck = false;
    while (static_cast<int>(coords.size()) < count && !stuck) {
      bool placed = false;
      for (int t = 0; t < max_point_tries && !placed; ++t) {
        std::vector<long long> c(n);
        for (int k = 0; k < n; ++k) c[k] = rng.range(0, coordinate_range);
        bool ok = true;
        for (const auto& other : coords) {
          bool leq_fwd = true, leq_bwd = true;
          for (int k = 0; k < n; ++k) {
            leq_fwd = leq_fwd && c[k] <= other[k];
            leq_bwd = leq_bwd && other[k] <= c[k];
          }
          if (leq_fwd || leq_bwd) { ok = false; break; }
        }
        if (ok) {
          coords.push_back(std::move(c));
          placed = true;
        }
      }
      stuck = !placed;
    }
    if (stuck) continue;
    PointSet A = PointSet::from_ints(coords);
    if (is_generic(A).generic) return A;
  }
  throw InputError(
      "random_generic_antichain: rejection budget exhausted; try a larger coordinate range");
}

}  // namespace scarf
