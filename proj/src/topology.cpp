#include "scarf/topology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "scarf/errors.hpp"
#include "scarf/neighborly.hpp"

namespace scarf {

namespace {

std::vector<ExtendedPoint> join_closure(const PointSet& A, std::size_t max_size) {
  std::set<ExtendedPoint, ExtendedPointLexLess> seen;
  std::deque<ExtendedPoint> work;
  for (const auto& p : A.points())
    if (seen.insert(p).second) work.push_back(p);
  while (!work.empty()) {
    ExtendedPoint u = std::move(work.front());
    work.pop_front();
    for (const auto& a : A.points()) {
      ExtendedPoint v = join(u, a);
      if (seen.insert(v).second) {
        if (seen.size() > max_size)
          throw ScaleError("join closure exceeds the size guard (" + std::to_string(max_size) +
                           ")");
        work.push_back(v);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

FinitePoset lcm_lattice(const PointSet& A, std::size_t max_size) {
  return FinitePoset::from_points(join_closure(A, max_size));
}

FinitePoset neighborly_poset(const PointSet& A, std::size_t max_size) {
  std::vector<ExtendedPoint> kept;
  for (const auto& b : join_closure(A, max_size)) {
    bool blocked = false;
    for (const auto& a : A.points())
      if (point_below_all(a, b)) { blocked = true; break; }
    if (!blocked) kept.push_back(b);
  }
  return FinitePoset::from_points(std::move(kept));
}

CrosscutCheck check_crosscut(const FinitePoset& P, const std::vector<int>& C) {
  CrosscutCheck result;
  std::set<int> cset(C.begin(), C.end());
  if (cset.size() != C.size()) {
    result.failure = "crosscut has repeated elements";
    return result;
  }
  for (int i : C)
    if (i < 0 || i >= P.size()) {
      result.failure = "crosscut element out of range";
      return result;
    }
  for (int i : C)
    for (int j : C)
      if (i != j && P.leq(i, j)) {
        result.failure = "crosscut is not an antichain";
        return result;
      }
  result.is_antichain = true;

  for (const auto& chain : P.maximal_chains()) {
    bool meets = std::any_of(chain.begin(), chain.end(), [&](int e) { return cset.count(e) > 0; });
    if (!meets) {
      result.failure = "condition (a): a maximal chain avoids the crosscut";
      return result;
    }
  }
  result.chains_meet = true;

  // Condition (b) over all nonempty subsets of C.
  const std::size_t m = C.size();
  if (m > 24) throw ScaleError("crosscut condition scan over 2^" + std::to_string(m) + " subsets");
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<int> S;
    for (std::size_t t = 0; t < m; ++t)
      if (mask & (std::size_t(1) << t)) S.push_back(C[t]);
    std::vector<int> ub, lb;
    for (int p = 0; p < P.size(); ++p) {
      bool upper = true, lower = true;
      for (int s : S) {
        upper = upper && P.leq(s, p);
        lower = lower && P.leq(p, s);
      }
      if (upper) ub.push_back(p);
      if (lower) lb.push_back(p);
    }
    if (ub.empty() && lb.empty()) continue;  // unbounded subsets impose nothing
    auto has_extremum = [&](const std::vector<int>& bounds, bool least) {
      for (int cand : bounds) {
        bool extremal = true;
        for (int other : bounds)
          if (least ? !P.leq(cand, other) : !P.leq(other, cand)) { extremal = false; break; }
        if (extremal) return true;
      }
      return false;
    };
    bool has_sup = !ub.empty() && has_extremum(ub, true);
    bool has_inf = !lb.empty() && has_extremum(lb, false);
    if (!has_sup && !has_inf) {
      result.failure = "condition (b): a bounded subset has neither sup nor inf";
      return result;
    }
  }
  result.bounds_complete = true;
  return result;
}

SimplicialComplex crosscut_complex(const FinitePoset& P, const std::vector<int>& C) {
  CrosscutCheck check = check_crosscut(P, C);
  if (!check.ok()) throw InputError("crosscut_complex: " + check.failure);
  // Bounded subsets of C, grown incrementally: boundedness is monotone
  // under taking subsets, so extension mirrors face enumeration.
  SimplicialComplex K(static_cast<int>(C.size()));
  auto bounded = [&](const std::vector<int>& members) {
    bool has_ub = false, has_lb = false;
    for (int p = 0; p < P.size() && !(has_ub && has_lb); ++p) {
      bool upper = true, lower = true;
      for (int t : members) {
        upper = upper && P.leq(C[t], p);
        lower = lower && P.leq(p, C[t]);
      }
      has_ub = has_ub || upper;
      has_lb = has_lb || lower;
    }
    return has_ub || has_lb;
  };
  for (int i = 0; i < static_cast<int>(C.size()); ++i)
    if (bounded({i})) K.insert_unchecked({i});
  for (int k = 1; k < static_cast<int>(C.size()); ++k) {
    const auto& layer = K.faces_with_size(k);
    if (layer.empty()) break;
    std::vector<std::vector<int>> grown;
    for (const auto& face : layer) {
      for (int a = face.back() + 1; a < static_cast<int>(C.size()); ++a) {
        std::vector<int> candidate = face;
        candidate.push_back(a);
        bool subsets_ok = true;
        for (std::size_t drop = 0; drop + 1 < candidate.size() && subsets_ok; ++drop) {
          std::vector<int> sub;
          for (std::size_t j = 0; j < candidate.size(); ++j)
            if (j != drop) sub.push_back(candidate[j]);
          subsets_ok = K.contains(sub);
        }
        if (subsets_ok && bounded(candidate)) grown.push_back(std::move(candidate));
      }
    }
    for (auto& f : grown) K.insert_unchecked(std::move(f));
  }
  return K;
}

namespace {

/// Boundary columns of the k-member layer against the (k-1)-member layer,
/// including the augmentation (vertices map to the empty face).
std::vector<SparseColumn> boundary_columns(const SimplicialComplex& K, int k) {
  std::map<std::vector<int>, int> row_index;
  int idx = 0;
  for (const auto& f : K.faces_with_size(k - 1)) row_index[f] = idx++;
  std::vector<SparseColumn> cols;
  for (const auto& f : K.faces_with_size(k)) {
    SparseColumn col;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      sub.reserve(f.size() - 1);
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) sub.push_back(f[j]);
      auto it = row_index.find(sub);
      if (it == row_index.end()) throw InternalError("homology: complex not downward closed");
      col.emplace_back(it->second, (drop % 2 == 0) ? Rat(1) : Rat(-1));
    }
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<std::vector<Int>> boundary_dense_int(const SimplicialComplex& K, int k) {
  std::map<std::vector<int>, int> row_index;
  int idx = 0;
  for (const auto& f : K.faces_with_size(k - 1)) row_index[f] = idx++;
  std::vector<std::vector<Int>> m(row_index.size(),
                                  std::vector<Int>(K.faces_with_size(k).size(), Int(0)));
  int c = 0;
  for (const auto& f : K.faces_with_size(k)) {
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) sub.push_back(f[j]);
      m[row_index.at(sub)][c] = (drop % 2 == 0) ? 1 : -1;
    }
    ++c;
  }
  return m;
}

}  // namespace

BettiVector reduced_homology(const SimplicialComplex& K) {
  const int top = K.max_dim() + 1;  // largest member count
  std::vector<long long> rank_d(top + 2, 0);
  for (int k = 1; k <= top; ++k) rank_d[k] = sparse_rank(boundary_columns(K, k));
  BettiVector out;
  for (int k = 0; k <= top; ++k) {
    long long dim_ck = K.face_count_with_size(k);
    long long betti = dim_ck - rank_d[k] - rank_d[k + 1];
    if (betti < 0) throw InternalError("homology: negative Betti number");
    out.reduced.push_back(betti);
  }
  while (!out.reduced.empty() && out.reduced.back() == 0) out.reduced.pop_back();
  return out;
}

IntegralHomology reduced_homology_integral(const SimplicialComplex& K) {
  const int top = K.max_dim() + 1;
  std::vector<std::vector<Int>> factors(top + 2);
  std::vector<long long> rank_d(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    factors[k] = smith_invariant_factors(boundary_dense_int(K, k));
    rank_d[k] = static_cast<long long>(factors[k].size());
  }
  IntegralHomology out;
  out.torsion.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    long long betti = K.face_count_with_size(k) - rank_d[k] - rank_d[k + 1];
    if (betti < 0) throw InternalError("integral homology: negative rank");
    out.betti.reduced.push_back(betti);
    for (const Int& d : factors[k + 1])
      if (d > 1) out.torsion[k].push_back(d);
  }
  while (!out.betti.reduced.empty() && out.betti.reduced.back() == 0) out.betti.reduced.pop_back();
  return out;
}

PointSet restrict_below(const PointSet& A, const ExtendedPoint& b, bool strict) {
  if (b.dim() != A.dim()) throw InputError("restrict_below: dimension mismatch");
  std::vector<ExtendedPoint> pts;
  std::vector<std::string> labels;
  for (int i = 0; i < A.size(); ++i) {
    bool keep = strict ? point_less(A.point(i), b) : point_leq(A.point(i), b);
    if (keep) {
      pts.push_back(A.point(i));
      if (A.has_labels()) labels.push_back(A.label(i));
    }
  }
  return PointSet(A.dim(), std::move(pts), std::move(labels));
}

SimplicialComplex restrict_complex(const PointSet& A, const SimplicialComplex& K,
                                   const ExtendedPoint& b, bool strict) {
  SimplicialComplex out(K.ground_size());
  for (int k = 1; k <= K.max_dim() + 1; ++k) {
    for (const auto& f : K.faces_with_size(k)) {
      ExtendedPoint jf = face_join(A, f);
      bool keep = strict ? point_less(jf, b) : point_leq(jf, b);
      if (keep) out.insert_unchecked(f);
    }
  }
  return out;
}

}  // namespace scarf
