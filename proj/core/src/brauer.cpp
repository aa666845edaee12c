#include "bfan/brauer.hpp"

#include <stdexcept>

#include "bfan/discrepancy.hpp"
#include "bfan/errors.hpp"

namespace bfan {

Int rp(const Int& x, const Int& p) {
  if (p < 1) throw std::invalid_argument("modulus must be positive");
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return r;
}

BrauerClass BrauerClass::make(Int p, std::vector<std::vector<Int>> matrix) {
  if (p < 2) throw InvalidBrauerMatrixError("modulus must be at least 2");
  const std::size_t n = matrix.size();
  for (auto& row : matrix) {
    if (row.size() != n) throw InvalidBrauerMatrixError("matrix is not square");
    for (auto& e : row) e = rp(e, p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0) throw InvalidBrauerMatrixError("diagonal not zero mod p");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rp(matrix[i][j] + matrix[j][i], p) != 0)
        throw InvalidBrauerMatrixError("matrix not skew-symmetric mod p");
    }
  }
  BrauerClass cls;
  cls.p = std::move(p);
  cls.rank = static_cast<int>(n);
  cls.matrix = std::move(matrix);
  return cls;
}

Int order_of_image(const BrauerClass& cls, const LatticeVector& w) {
  const LatticeVector primitive = make_primitive(w).vector;
  if (primitive.size() != static_cast<std::size_t>(cls.rank))
    throw std::invalid_argument("vector length does not match the Brauer class rank");
  Int g = cls.p;
  for (int i = 0; i < cls.rank; ++i) {
    Int entry(0);
    for (int j = 0; j < cls.rank; ++j) entry += cls.matrix[i][j] * primitive[j];
    entry = rp(entry, cls.p);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), entry.get_mpz_t());
  }
  return cls.p / g;
}

CTriple CTriple::make(Int p, std::array<Int, 3> c) {
  if (!is_prime(p)) throw InvalidCTripleError("modulus must be prime");
  int nonzero = 0;
  for (auto& x : c) {
    x = rp(x, p);
    if (x != 0) ++nonzero;
  }
  if (nonzero < 2)
    throw InvalidCTripleError("at least two of the c_j must be nonzero mod p");
  return CTriple{std::move(p), std::move(c)};
}

BrauerClass matrix_from_c(const CTriple& t) {
  const Int &c0 = t.c[0], &c1 = t.c[1], &c2 = t.c[2];
  std::vector<std::vector<Int>> m = {
      {Int(0), c2, -c1},
      {-c2, Int(0), c0},
      {c1, -c0, Int(0)},
  };
  return BrauerClass::make(t.p, std::move(m));
}

Int c_invariant(const CTriple& t) {
  std::optional<Int> best;
  for (Int i(1); i < t.p; ++i) {
    Int total = rp(i * t.c[0], t.p) + rp(i * t.c[1], t.p) + rp(i * t.c[2], t.p);
    if (!best || total < *best) best = total;
  }
  return *best;
}

Affine3Classification classify_affine3(const CTriple& t) {
  const Int c = c_invariant(t);
  Affine3Category cat;
  if (c > t.p) {
    cat = Affine3Category::BTerminal;
  } else if (c == t.p) {
    cat = Affine3Category::BCanonicalNotTerminal;
  } else {
    cat = Affine3Category::NotBCanonical;
  }
  return Affine3Classification{cat, true, c, t.p};
}

bool is_prime(const Int& p) {
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

int rank_mod_p(const BrauerClass& cls) {
  if (!is_prime(cls.p)) throw CompositeModulusError("rank mod p needs a prime modulus");
  std::vector<std::vector<Int>> m = cls.matrix;
  const int n = cls.rank;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), m[rank][col].get_mpz_t(), cls.p.get_mpz_t()) == 0)
      throw CompositeModulusError("entry not invertible mod p");
    for (int c = col; c < n; ++c) m[rank][c] = rp(m[rank][c] * inv, cls.p);
    for (int r = 0; r < n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Int f = m[r][col];
      for (int c = col; c < n; ++c) m[r][c] = rp(m[r][c] - f * m[rank][c], cls.p);
    }
    ++rank;
  }
  return rank;
}

std::optional<Classification> full_rank_shortcut(const BrauerClass& cls, const Fan& fan) {
  if (cls.p == 2 || !is_prime(cls.p))
    throw CompositeModulusError("full-rank shortcut needs an odd prime modulus");
  if (fan.rank != cls.rank)
    throw std::invalid_argument("fan rank does not match the Brauer class rank");
  if (rank_mod_p(cls) != cls.rank) return std::nullopt;
  // Full rank: every primitive vector is ramified with index exactly p, so
  // b-discrepancies coincide with the ordinary discrepancies of the fan.
  return classify(fan, CoefficientRule::zero());
}

}  // namespace bfan
