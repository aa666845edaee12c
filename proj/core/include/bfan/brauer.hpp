#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bfan/classification.hpp"
#include "bfan/fan.hpp"
#include "bfan/lattice.hpp"

namespace bfan {

/// A toric Brauer class: a modulus p >= 2 and a skew-symmetric matrix over
/// Z/p (entries stored as least non-negative residues, zero diagonal).
/// The ramification index along the divisor of a primitive w is the additive
/// order of M * w mod p.
struct BrauerClass {
  Int p;
  int rank = 0;
  std::vector<std::vector<Int>> matrix;

  /// Validates and reduces the entries. Throws InvalidBrauerMatrixError when
  /// M + M^T != 0 or the diagonal is nonzero mod p.
  static BrauerClass make(Int p, std::vector<std::vector<Int>> matrix);
};

/// Order of M * (w mod p) in (Z/p)^n: p / gcd(p, entries of M w). Equals 1
/// exactly when w mod p lies in ker M.
Int order_of_image(const BrauerClass& cls, const LatticeVector& w);

/// Least non-negative residue of x modulo p.
Int rp(const Int& x, const Int& p);

/// Data of a rank-2 class on affine 3-space: prime p and (c0, c1, c2) with
/// at least two entries nonzero mod p.
struct CTriple {
  Int p;
  std::array<Int, 3> c;

  static CTriple make(Int p, std::array<Int, 3> c);
};

/// The 3x3 skew matrix
///   [  0   c2 -c1 ]
///   [ -c2  0   c0 ]
///   [  c1 -c0  0  ]
/// reduced mod p. Its kernel is spanned by (c0, c1, c2).
BrauerClass matrix_from_c(const CTriple& t);

/// min over units i mod p of rp(i c0) + rp(i c1) + rp(i c2).
Int c_invariant(const CTriple& t);

enum class Affine3Category { BTerminal, BCanonicalNotTerminal, NotBCanonical };

struct Affine3Classification {
  Affine3Category category;
  bool always_b_log_terminal;  // rank-2 classes on affine 3-space always are
  Int c;
  Int p;
};

/// b-terminal iff c > p, b-canonical iff c >= p; in every case b-lt.
Affine3Classification classify_affine3(const CTriple& t);

/// When p is an odd prime and M has full rank mod p, the b-classification of
/// the induced pair equals the ordinary classification of the fan with zero
/// boundary, which is what this returns; otherwise nullopt. Throws
/// CompositeModulusError when p is not an odd prime.
std::optional<Classification> full_rank_shortcut(const BrauerClass& cls, const Fan& fan);

bool is_prime(const Int& p);

/// Rank of the matrix over the field Z/p (p prime).
int rank_mod_p(const BrauerClass& cls);

}  // namespace bfan
