#include "bfan/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "bfan/errors.hpp"

namespace bfan {

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

bool is_primitive(const LatticeVector& v) {
  Int g(0);
  for (const Int& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g == 1;
}

PrimitivePart make_primitive(const LatticeVector& v) {
  Int g(0);
  for (const Int& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g == 0) throw ZeroVectorError{};
  LatticeVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return PrimitivePart{std::move(w), std::move(g)};
}

RatMatrix columns_to_matrix(const std::vector<LatticeVector>& columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns[0].size();
  RatMatrix m(n, RatVector(columns.size(), Rat(0)));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw std::invalid_argument("mixed vector lengths");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = Rat(columns[j][i]);
  }
  return m;
}

std::vector<Rat> solve_in_generators_rat(const std::vector<LatticeVector>& generators,
                                         const RatVector& w) {
  if (generators.empty()) {
    const bool zero = std::all_of(w.begin(), w.end(), [](const Rat& c) { return c == 0; });
    if (!zero) throw NotInSpanError{};
    return {};
  }
  RatMatrix m = columns_to_matrix(generators);
  if (rat_rank(m) < generators.size()) throw DependentGeneratorsError{};
  auto sol = solve_linear(m, w);
  if (!sol) throw NotInSpanError{};
  return sol->x;
}

std::vector<Rat> solve_in_generators(const std::vector<LatticeVector>& generators,
                                     const LatticeVector& w) {
  RatVector rhs(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) rhs[i] = Rat(w[i]);
  return solve_in_generators_rat(generators, rhs);
}

namespace {

Int int_determinant(const std::vector<std::vector<Int>>& m) {
  // Exact determinant via rational elimination; inputs are tiny.
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return Int(0);
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rat inv = Rat(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rat f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (det.get_den() != 1) throw std::logic_error("integer determinant not integral");
  return det.get_num();
}

void minor_gcd_rec(const std::vector<LatticeVector>& gens, std::size_t n, std::size_t m,
                   std::vector<std::size_t>& rows, std::size_t next, Int& g) {
  if (rows.size() == m) {
    std::vector<std::vector<Int>> sub(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub[i][j] = gens[j][rows[i]];
    Int d = int_determinant(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    return;
  }
  for (std::size_t r = next; r < n; ++r) {
    if (n - r < m - rows.size()) break;
    rows.push_back(r);
    minor_gcd_rec(gens, n, m, rows, r + 1, g);
    rows.pop_back();
  }
}

}  // namespace

Int cone_multiplicity(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  const std::size_t m = generators.size();
  const std::size_t n = generators[0].size();
  if (m > n) throw DependentGeneratorsError{};
  Int g(0);
  std::vector<std::size_t> rows;
  minor_gcd_rec(generators, n, m, rows, 0, g);
  if (g == 0) throw DependentGeneratorsError{};
  return g;
}

std::vector<LatticeVector> enumerate_integer_points(
    const LatticeVector& box_lo, const LatticeVector& box_hi,
    const std::function<bool(const LatticeVector&)>& predicate) {
  if (box_lo.size() != box_hi.size())
    throw std::invalid_argument("box corners of different lengths");
  const std::size_t n = box_lo.size();
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (box_lo[i] > box_hi[i]) return out;
  }
  LatticeVector p = box_lo;
  while (true) {
    if (predicate(p)) out.push_back(p);
    // lexicographic odometer, last coordinate fastest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (p[i] < box_hi[i]) {
        ++p[i];
        for (std::size_t j = i + 1; j < n; ++j) p[j] = box_lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace bfan
