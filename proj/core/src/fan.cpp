#include "bfan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "bfan/errors.hpp"

namespace bfan {

std::vector<LatticeVector> Fan::cone_generators(const Cone& c) const {
  std::vector<LatticeVector> gens;
  gens.reserve(c.ray_indices.size());
  for (std::size_t i : c.ray_indices) gens.push_back(rays.at(i));
  return gens;
}

namespace {

bool gens_independent(const std::vector<LatticeVector>& gens) {
  if (gens.empty()) return true;
  return rat_rank(columns_to_matrix(gens)) == gens.size();
}

Cone sorted_cone(std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end());
  return Cone{std::move(idx)};
}

}  // namespace

bool Fan::is_simplicial() const {
  for (const Cone& c : max_cones) {
    if (!gens_independent(cone_generators(c))) return false;
  }
  return true;
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.rank != b.rank) return false;
  auto canonical = [](const Fan& f) {
    std::vector<std::size_t> order(f.rays.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return f.rays[x] < f.rays[y]; });
    std::vector<std::size_t> rank_of(f.rays.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = i;
    std::vector<LatticeVector> rays;
    for (std::size_t i : order) rays.push_back(f.rays[i]);
    std::vector<Cone> cones;
    for (const Cone& c : f.max_cones) {
      std::vector<std::size_t> idx;
      for (std::size_t i : c.ray_indices) idx.push_back(rank_of[i]);
      cones.push_back(sorted_cone(std::move(idx)));
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    return std::make_pair(std::move(rays), std::move(cones));
  };
  return canonical(a) == canonical(b);
}

bool cone_contains(const std::vector<LatticeVector>& generators, const LatticeVector& w) {
  if (is_zero(w)) return true;
  if (generators.empty()) return false;
  if (gens_independent(generators)) {
    try {
      auto coeffs = solve_in_generators(generators, w);
      return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& a) { return a >= 0; });
    } catch (const NotInSpanError&) {
      return false;
    }
  }
  // Caratheodory: membership in a cone is witnessed by some linearly
  // independent subset of the generators.
  const std::size_t k = generators.size();
  const std::size_t max_rank = rat_rank(columns_to_matrix(generators));
  std::vector<std::size_t> subset;
  std::function<bool(std::size_t)> search = [&](std::size_t next) {
    if (!subset.empty() && subset.size() <= max_rank) {
      std::vector<LatticeVector> sub;
      for (std::size_t i : subset) sub.push_back(generators[i]);
      if (gens_independent(sub)) {
        try {
          auto coeffs = solve_in_generators(sub, w);
          if (std::all_of(coeffs.begin(), coeffs.end(),
                          [](const Rat& a) { return a >= 0; }))
            return true;
        } catch (const NotInSpanError&) {
        }
      } else {
        return false;  // no independent superset either
      }
    }
    if (subset.size() == max_rank) return false;
    for (std::size_t i = next; i < k; ++i) {
      subset.push_back(i);
      if (search(i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return search(0);
}

bool fan_contains(const Fan& fan, const LatticeVector& w) {
  for (const Cone& c : fan.max_cones) {
    if (cone_contains(fan.cone_generators(c), w)) return true;
  }
  return is_zero(w) && fan.max_cones.empty();
}

bool fan_contains_rat(const Fan& fan, const RatVector& w) {
  // Scale to an integer vector; membership in a cone is scale invariant.
  Int denom(1);
  for (const Rat& c : w) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
  LatticeVector scaled(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rat s = w[i] * Rat(denom);
    scaled[i] = s.get_num();
  }
  if (is_zero(scaled)) return true;
  return fan_contains(fan, scaled);
}

std::vector<std::vector<std::size_t>> cone_facets(const std::vector<LatticeVector>& gens) {
  std::vector<std::vector<std::size_t>> facets;
  if (gens.empty()) return facets;
  const std::size_t k = gens.size();
  const std::size_t d = rat_rank(columns_to_matrix(gens));
  if (d <= 1) return facets;

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> subset;
  std::function<void(std::size_t)> scan = [&](std::size_t next) {
    if (subset.size() == d - 1) {
      RatMatrix rows;
      for (std::size_t i : subset) {
        RatVector row;
        for (const Int& c : gens[i]) row.emplace_back(c);
        rows.push_back(std::move(row));
      }
      if (rat_rank(rows) != d - 1) return;
      for (const RatVector& h : nullspace(rows)) {
        bool pos = false, neg = false, nonzero = false;
        std::vector<Rat> evals(k);
        for (std::size_t i = 0; i < k; ++i) {
          evals[i] = dot(h, gens[i]);
          if (evals[i] > 0) pos = true;
          if (evals[i] < 0) neg = true;
          if (evals[i] != 0) nonzero = true;
        }
        if (!nonzero) continue;  // h vanishes on the span; try the next basis vector
        if (pos && neg) return;  // generators on both sides: not a facet
        std::vector<std::size_t> facet;
        for (std::size_t i = 0; i < k; ++i) {
          if (evals[i] == 0) facet.push_back(i);
        }
        if (seen.insert(facet).second) facets.push_back(std::move(facet));
        return;
      }
      return;
    }
    for (std::size_t i = next; i < k && k - i >= d - 1 - subset.size(); ++i) {
      subset.push_back(i);
      scan(i + 1);
      subset.pop_back();
    }
  };
  scan(0);
  return facets;
}

namespace {

// Pulling triangulation of cone(rays[idx]), recursing on facets. The pulled
// generator is always the lexicographically smallest ray vector, so shared
// faces of different maximal cones receive identical triangulations.
void pull_triangulate(const std::vector<LatticeVector>& rays, const std::vector<std::size_t>& idx,
                      std::vector<std::vector<std::size_t>>& out) {
  std::vector<LatticeVector> gens;
  for (std::size_t i : idx) gens.push_back(rays[i]);
  if (gens_independent(gens)) {
    std::vector<std::size_t> simplex = idx;
    std::sort(simplex.begin(), simplex.end());
    out.push_back(std::move(simplex));
    return;
  }
  std::size_t pulled = 0;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (rays[idx[i]] < rays[idx[pulled]]) pulled = i;
  }
  for (const auto& facet : cone_facets(gens)) {
    if (std::find(facet.begin(), facet.end(), pulled) != facet.end()) continue;
    std::vector<std::size_t> facet_idx;
    for (std::size_t local : facet) facet_idx.push_back(idx[local]);
    std::vector<std::vector<std::size_t>> pieces;
    pull_triangulate(rays, facet_idx, pieces);
    for (auto& piece : pieces) {
      piece.push_back(idx[pulled]);
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
  }
}

std::vector<Cone> normalized_cones(std::vector<Cone> cones) {
  for (Cone& c : cones) std::sort(c.ray_indices.begin(), c.ray_indices.end());
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return cones;
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  ValidationReport report;
  auto flag = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (fan.rank < 1) flag("rank must be positive");
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const LatticeVector& r = fan.rays[i];
    if (static_cast<int>(r.size()) != fan.rank) {
      flag("ray #" + std::to_string(i) + " has wrong length");
      continue;
    }
    if (is_zero(r)) {
      flag("ray #" + std::to_string(i) + " is zero");
      continue;
    }
    if (!is_primitive(r)) flag("non-primitive ray #" + std::to_string(i));
    for (std::size_t j = i + 1; j < fan.rays.size(); ++j) {
      if (fan.rays[j] == r) flag("duplicate ray #" + std::to_string(j));
    }
  }
  if (!report.violations.empty()) return report;

  std::vector<bool> used(fan.rays.size(), false);
  std::set<std::vector<std::size_t>> cone_sets;
  bool all_simplicial = true;
  for (std::size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
    const Cone& c = fan.max_cones[ci];
    if (c.ray_indices.empty()) {
      flag("maximal cone #" + std::to_string(ci) + " is empty");
      continue;
    }
    std::vector<std::size_t> idx = c.ray_indices;
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      flag("maximal cone #" + std::to_string(ci) + " repeats a ray");
    if (idx.back() >= fan.rays.size()) {
      flag("maximal cone #" + std::to_string(ci) + " references a missing ray");
      continue;
    }
    for (std::size_t i : idx) used[i] = true;
    if (!cone_sets.insert(idx).second)
      flag("duplicate maximal cone #" + std::to_string(ci));

    const auto gens = fan.cone_generators(c);
    if (!gens_independent(gens)) {
      all_simplicial = false;
      // strong convexity: a generated cone contains a line iff it contains
      // the negative of one of its generators
      for (const LatticeVector& g : gens) {
        LatticeVector neg(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) neg[i] = -g[i];
        if (cone_contains(gens, neg)) {
          flag("maximal cone #" + std::to_string(ci) + " contains a line");
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) flag("ray #" + std::to_string(i) + " appears in no maximal cone");
  }
  for (const auto& a : cone_sets) {
    for (const auto& b : cone_sets) {
      if (&a == &b) continue;
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()) && a != b)
        flag("a maximal cone is contained in another");
    }
  }
  if (!report.violations.empty()) return report;

  if (!all_simplicial) {
    report.caveats.push_back(
        "fan has non-simplicial cones; face-intersection condition not verified");
    return report;
  }

  // Pairwise check: the intersection of two maximal cones must be the cone
  // on their common rays. Extreme rays of the intersection are cut out by
  // rank-(n-1) subsets of the active constraints.
  const std::size_t n = static_cast<std::size_t>(fan.rank);
  auto h_description = [&](const Cone& c, RatMatrix& ineqs, RatMatrix& eqs) {
    const auto gens = fan.cone_generators(c);
    RatMatrix cols = columns_to_matrix(gens);
    // coordinate functionals: rows d_i with d_i . (sum a_j g_j) = a_i
    RatMatrix gram(gens.size(), RatVector(gens.size(), Rat(0)));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t k = 0; k < n; ++k) gram[i][j] += Rat(gens[i][k]) * Rat(gens[j][k]);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      RatVector e(gens.size(), Rat(0));
      e[i] = 1;
      auto sol = solve_linear(gram, e);
      RatVector functional(n, Rat(0));
      for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t k = 0; k < n; ++k) functional[k] += sol->x[j] * Rat(gens[j][k]);
      ineqs.push_back(std::move(functional));
    }
    // equations pinning the span
    RatMatrix rows;
    for (const auto& g : gens) {
      RatVector row;
      for (const Int& v : g) row.emplace_back(v);
      rows.push_back(std::move(row));
    }
    for (auto& h : nullspace(rows)) eqs.push_back(std::move(h));
  };

  for (std::size_t a = 0; a < fan.max_cones.size(); ++a) {
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      RatMatrix ineqs, eqs;
      h_description(fan.max_cones[a], ineqs, eqs);
      h_description(fan.max_cones[b], ineqs, eqs);

      std::vector<std::size_t> shared;
      std::vector<std::size_t> ia = fan.max_cones[a].ray_indices;
      std::vector<std::size_t> ib = fan.max_cones[b].ray_indices;
      std::sort(ia.begin(), ia.end());
      std::sort(ib.begin(), ib.end());
      std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(),
                            std::back_inserter(shared));
      std::vector<LatticeVector> shared_gens;
      for (std::size_t i : shared) shared_gens.push_back(fan.rays[i]);

      // enumerate extreme ray candidates of the intersection
      std::set<RatVector> extreme;
      const std::size_t m = ineqs.size();
      std::vector<std::size_t> pick;
      std::function<void(std::size_t)> walk = [&](std::size_t next) {
        RatMatrix active = eqs;
        for (std::size_t i : pick) active.push_back(ineqs[i]);
        const std::size_t r = active.empty() ? 0 : rat_rank(active);
        if (r == n - 1) {
          for (const RatVector& v : nullspace(active)) {
            for (const RatVector* cand : {&v}) {
              RatVector plus = *cand, minus = *cand;
              for (auto& x : minus) x = -x;
              for (RatVector dir : {plus, minus}) {
                bool feasible = true;
                for (const auto& row : ineqs) {
                  if (dot(row, dir) < 0) {
                    feasible = false;
                    break;
                  }
                }
                for (const auto& row : eqs) {
                  if (dot(row, dir) != 0) feasible = false;
                }
                bool nonzero = std::any_of(dir.begin(), dir.end(),
                                           [](const Rat& x) { return x != 0; });
                if (feasible && nonzero) {
                  // normalize: first nonzero coordinate = +-1
                  Rat scale(0);
                  for (const Rat& x : dir) {
                    if (x != 0) {
                      scale = abs(x);
                      break;
                    }
                  }
                  for (auto& x : dir) x /= scale;
                  extreme.insert(dir);
                }
              }
            }
          }
          return;  // adding more constraints only drops rank below n-1 targets
        }
        if (pick.size() >= n) return;
        for (std::size_t i = next; i < m; ++i) {
          pick.push_back(i);
          walk(i + 1);
          pick.pop_back();
        }
      };
      walk(0);

      bool bad = false;
      for (const RatVector& dir : extreme) {
        Int denom(1);
        for (const Rat& c : dir)
          mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
        LatticeVector v(dir.size());
        for (std::size_t i = 0; i < dir.size(); ++i) {
          Rat s = dir[i] * Rat(denom);
          v[i] = s.get_num();
        }
        if (!cone_contains(shared_gens, v)) {
          bad = true;
          break;
        }
      }
      if (bad)
        flag("maximal cones #" + std::to_string(a) + " and #" + std::to_string(b) +
             " do not intersect in a common face");
    }
  }
  return report;
}

Cone find_containing_cone(const Fan& fan, const LatticeVector& w) {
  if (is_zero(w)) throw ZeroVectorError{};
  for (const Cone& c : fan.max_cones) {
    const auto gens = fan.cone_generators(c);
    if (gens_independent(gens)) {
      try {
        auto coeffs = solve_in_generators(gens, w);
        if (!std::all_of(coeffs.begin(), coeffs.end(),
                         [](const Rat& a) { return a >= 0; }))
          continue;
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (coeffs[i] > 0) face.push_back(c.ray_indices[i]);
        }
        return sorted_cone(std::move(face));
      } catch (const NotInSpanError&) {
        continue;
      }
    }
    if (!cone_contains(gens, w)) continue;
    // minimal face = generators lying on every facet hyperplane through w
    std::vector<bool> keep(gens.size(), true);
    for (const auto& facet : cone_facets(gens)) {
      RatMatrix rows;
      for (std::size_t i : facet) {
        RatVector row;
        for (const Int& c2 : gens[i]) row.emplace_back(c2);
        rows.push_back(std::move(row));
      }
      for (const RatVector& h : nullspace(rows)) {
        Rat hw = dot(h, w);
        bool informative =
            std::any_of(gens.begin(), gens.end(),
                        [&](const LatticeVector& g) { return dot(h, g) != 0; });
        if (!informative) continue;
        if (hw == 0) {
          for (std::size_t i = 0; i < gens.size(); ++i) {
            if (dot(h, gens[i]) != 0) keep[i] = false;
          }
        }
        break;
      }
    }
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (keep[i]) face.push_back(c.ray_indices[i]);
    }
    return sorted_cone(std::move(face));
  }
  throw NotInSupportError{};
}

Fan triangulate(const Fan& fan) {
  Fan out;
  out.rank = fan.rank;
  out.rays = fan.rays;
  std::vector<Cone> cones;
  for (const Cone& c : fan.max_cones) {
    const auto gens = fan.cone_generators(c);
    if (gens_independent(gens)) {
      cones.push_back(sorted_cone(c.ray_indices));
      continue;
    }
    std::vector<std::vector<std::size_t>> simplices;
    pull_triangulate(fan.rays, c.ray_indices, simplices);
    for (auto& s : simplices) cones.push_back(Cone{std::move(s)});
  }
  out.max_cones = normalized_cones(std::move(cones));
  return out;
}

Fan star_subdivide(const Fan& fan, const LatticeVector& w) {
  if (is_zero(w)) throw ZeroVectorError{};
  if (!is_primitive(w)) throw NotPrimitiveError{};
  const Fan base = fan.is_simplicial() ? fan : triangulate(fan);
  for (const LatticeVector& r : base.rays) {
    if (r == w) throw RayAlreadyPresentError{};
  }
  if (!fan_contains(base, w)) throw NotInSupportError{};

  Fan out;
  out.rank = base.rank;
  out.rays = base.rays;
  out.rays.push_back(w);
  const std::size_t new_index = out.rays.size() - 1;

  std::vector<Cone> cones;
  for (const Cone& c : base.max_cones) {
    const auto gens = base.cone_generators(c);
    std::vector<Rat> coeffs;
    bool inside = false;
    try {
      coeffs = solve_in_generators(gens, w);
      inside = std::all_of(coeffs.begin(), coeffs.end(),
                           [](const Rat& a) { return a >= 0; });
    } catch (const NotInSpanError&) {
      inside = false;
    }
    if (!inside) {
      cones.push_back(c);
      continue;
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;  // dropping this one stays degenerate
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < c.ray_indices.size(); ++j) {
        if (j != i) idx.push_back(c.ray_indices[j]);
      }
      idx.push_back(new_index);
      cones.push_back(sorted_cone(std::move(idx)));
    }
  }
  out.max_cones = normalized_cones(std::move(cones));
  return out;
}

Fan blowup_stratum(const Fan& fan, const Cone& cone) {
  if (cone.ray_indices.size() < 2)
    throw std::invalid_argument("stratum blowup needs a cone with at least 2 generators");
  bool is_face = false;
  std::vector<std::size_t> idx = cone.ray_indices;
  std::sort(idx.begin(), idx.end());
  if (!idx.empty() && idx.back() >= fan.rays.size())
    throw std::invalid_argument("cone references a missing ray");
  for (const Cone& c : fan.max_cones) {
    std::vector<std::size_t> ci = c.ray_indices;
    std::sort(ci.begin(), ci.end());
    if (std::includes(ci.begin(), ci.end(), idx.begin(), idx.end()) &&
        gens_independent(fan.cone_generators(c))) {
      is_face = true;
      break;
    }
  }
  if (!is_face) throw std::invalid_argument("cone is not a face of the fan");

  LatticeVector sum(fan.rank, Int(0));
  for (std::size_t i : idx) {
    for (int k = 0; k < fan.rank; ++k) sum[k] += fan.rays[i][k];
  }
  return star_subdivide(fan, make_primitive(sum).vector);
}

namespace {

struct PpdCandidate {
  LatticeVector point;
  Rat coeff_sum;
};

// Nonzero lattice points of the half-open fundamental parallelepiped
// { sum a_i v_i : 0 <= a_i < 1 } of a simplicial cone.
std::vector<PpdCandidate> parallelepiped_points(const std::vector<LatticeVector>& gens) {
  const std::size_t n = gens[0].size();
  LatticeVector lo(n, Int(0)), hi(n, Int(0));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& g : gens) {
      if (g[k] < 0) lo[k] += g[k];
      if (g[k] > 0) hi[k] += g[k];
    }
  }
  std::vector<PpdCandidate> found;
  enumerate_integer_points(lo, hi, [&](const LatticeVector& p) {
    if (is_zero(p)) return false;
    try {
      auto coeffs = solve_in_generators(gens, p);
      Rat sum(0);
      for (const Rat& a : coeffs) {
        if (a < 0 || a >= 1) return false;
        sum += a;
      }
      found.push_back(PpdCandidate{p, sum});
    } catch (const NotInSpanError&) {
    }
    return false;
  });
  return found;
}

}  // namespace

Fan resolve_with_log(const Fan& fan, std::vector<LatticeVector>& centers) {
  Fan current = triangulate(fan);
  while (true) {
    // offending cone: multiplicity > 1, lexicographically smallest generator tuple
    std::optional<std::vector<LatticeVector>> worst;
    for (const Cone& c : current.max_cones) {
      auto gens = current.cone_generators(c);
      if (cone_multiplicity(gens) == 1) continue;
      std::sort(gens.begin(), gens.end());
      if (!worst || gens < *worst) worst = std::move(gens);
    }
    if (!worst) return current;

    auto candidates = parallelepiped_points(*worst);
    // Termination: every candidate has all coefficients in [0,1), so each
    // subdivision replaces the cones containing it by cones of strictly
    // smaller multiplicity; the multiset of multiplicities decreases in the
    // Dershowitz-Manna order, which is well founded.
    const PpdCandidate* best = nullptr;
    for (const PpdCandidate& cand : candidates) {
      if (!best || cand.coeff_sum < best->coeff_sum ||
          (cand.coeff_sum == best->coeff_sum && cand.point < best->point)) {
        best = &cand;
      }
    }
    if (!best) throw VerificationFailedError("singular cone with empty parallelepiped");
    LatticeVector center = make_primitive(best->point).vector;
    centers.push_back(center);
    current = star_subdivide(current, center);
  }
}

Fan resolve(const Fan& fan) {
  std::vector<LatticeVector> centers;
  return resolve_with_log(fan, centers);
}

}  // namespace bfan
