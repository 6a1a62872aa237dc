#ifndef SYMPAIR_BOOTHBYWANG_HPP
#define SYMPAIR_BOOTHBYWANG_HPP

#include "sympair/pairs.hpp"

namespace sympair {

/// Central extension of g by a closed 2-form cocycle.  The new central
/// generator sits at index dim(g)+1; its dual 1-form is the connection
/// form and satisfies d(connection) = cocycle lifted to the total algebra.
/// Integrality of the cocycle class is a global hypothesis that has no
/// meaning at the algebra level; it is carried as an advisory flag only.
struct CentralExtension {
  LieAlgebra base;
  ExteriorForm cocycle;
  LieAlgebra total;
  ExteriorForm connection;
  bool integral_class_assumed = true;

  CentralExtension() : base(0), total(0) {}
};

/// Reinterprets a form on the base as a form on the enlarged algebra;
/// indices are unchanged because new generators are appended at the end.
ExteriorForm lift_form(const ExteriorForm& phi, int total_dim);

/// Bracket table with [x,y] extended by -omega(x,y) times the new central
/// generator.  No closedness requirement; used to probe the equivalence
/// between Jacobi on the total algebra and closedness of the cocycle.
LieAlgebra central_extension_unchecked(const LieAlgebra& g, const ExteriorForm& omega);

/// Requires the cocycle to be closed and verifies Jacobi on the result.
CentralExtension central_extension(const LieAlgebra& g, const ExteriorForm& omega);

struct ContactSymplecticResult {
  CentralExtension extension;
  ExteriorForm alpha;  // connection form
  ExteriorForm beta;   // lifted second form
  PairReport report;   // contact-symplectic verdict on the total algebra
};

/// Extension over the first member of a symplectic pair; the connection
/// form and the lifted second form make a contact-symplectic pair.
ContactSymplecticResult bw_contact_symplectic(const LieAlgebra& g, const ExteriorForm& omega1,
                                              const ExteriorForm& omega2);

struct ContactPairResult {
  CentralExtension extension;
  ExteriorForm alpha;  // lifted contact-type form
  ExteriorForm gamma;  // connection form over the symplectic member
  PairReport report;
};

/// Extension of a contact-symplectic pair over its closed 2-form member.
ContactPairResult bw_contact_pair_from_cs(const LieAlgebra& g, const ExteriorForm& alpha,
                                          const ExteriorForm& beta);

struct TorusExtensionResult {
  LieAlgebra total;
  ExteriorForm alpha;  // dual of the first new generator
  ExteriorForm gamma;  // dual of the second new generator
  PairReport report;
};

/// Two-generator central extension by both members of a symplectic pair;
/// equals the composition of the two single extensions on the nose.
TorusExtensionResult torus_extension(const LieAlgebra& g, const ExteriorForm& omega1,
                                     const ExteriorForm& omega2);

}  // namespace sympair

#endif  // SYMPAIR_BOOTHBYWANG_HPP
