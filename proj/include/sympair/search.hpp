#ifndef SYMPAIR_SEARCH_HPP
#define SYMPAIR_SEARCH_HPP

#include <cstdint>

#include "sympair/pairs.hpp"

namespace sympair {

/// Wedge pairing on the closed 2-forms of a 4-dimensional algebra,
/// measured against a fixed volume form: zeta_i ^ zeta_j = G_ij * vol.
struct WedgeGram {
  std::vector<ExteriorForm> basis;  // echelon basis of the closed 2-forms
  MatX gram;
  ExteriorForm volume;

  bool is_zero() const;
};

struct SignatureResult {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool indefinite() const { return positive > 0 && negative > 0; }
};

WedgeGram wedge_gram(const LieAlgebra& g);

/// Sylvester signature via exact congruence diagonalization.
SignatureResult signature(const MatX& gram);

/// A closed form of nonzero square exists iff the pairing is not
/// identically zero; in dimension 4 that form is symplectic.
bool has_invariant_symplectic(const LieAlgebra& g);

/// A pair of closed rank-2 forms with complementary kernels exists iff
/// the pairing is indefinite: two null directions with nonzero product
/// come from the diagonalization, and conversely a pair gives a
/// hyperbolic plane inside the closed forms.
bool has_invariant_symplectic_pair(const LieAlgebra& g);

struct PairWitness {
  bool found = false;
  ExteriorForm omega1, omega2;  // over Q(sqrt(d)) when found
  PairReport verification;      // exact check of the produced pair
  WedgeGram certificate;        // Gram data; the absence certificate when !found
  SignatureResult sig;
};

PairWitness construct_pair_witness(const LieAlgebra& g);

/// Randomized search for a pair among small rational combinations of the
/// closed 2-forms.  Deterministic given (seed, trials).  A positive answer
/// is a proof; repeated failure is only evidence.
bool brute_force_oracle(const LieAlgebra& g, std::uint64_t seed, int trials);

}  // namespace sympair

#endif  // SYMPAIR_SEARCH_HPP
