#ifndef SYMPAIR_LIEALGEBRA_HPP
#define SYMPAIR_LIEALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "sympair/exterior.hpp"

namespace sympair {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c_ij^k e_k over the exact scalar field.
/// Antisymmetry is built into the storage; the Jacobi identity is a
/// separate check so that deliberately broken tables can be probed.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Defines [e_i, e_j] = value (and [e_j, e_i] = -value), 1-based.
  void set_bracket(int i, int j, const VecX& value);
  void set_bracket_term(int i, int j, int k, const Scalar& c);

  VecX bracket_basis(int i, int j) const;
  VecX bracket(const VecX& x, const VecX& y) const;
  Scalar structure_constant(int i, int j, int k) const;

  bool is_unimodular() const;

 private:
  int dim_;
  std::string name_;
  std::vector<VecX> table_;  // pair (i<j) -> [e_i, e_j]
};

struct JacobiReport {
  bool ok = true;
  int i = 0, j = 0, k = 0;  // first failing triple when !ok
  VecX residual;
  std::string str() const;
};

JacobiReport jacobi_check(const LieAlgebra& g);

/// Chevalley-Eilenberg differential, fixed by (d a)(x,y) = -a([x,y]) on
/// 1-forms and extended as an antiderivation.
ExteriorForm ce_d(const LieAlgebra& g, const ExteriorForm& phi);

/// Matrix of the degree-p differential in the basis of increasing tuples.
MatX ce_matrix(const LieAlgebra& g, int p);

/// Echelon basis of the closed p-forms.
std::vector<ExteriorForm> closed_forms(const LieAlgebra& g, int p);

/// Betti numbers b_0 .. b_n of the invariant-form complex.
std::vector<int> cohomology_dims(const LieAlgebra& g);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct CatalogEntry {
  std::string name;
  LieAlgebra algebra;
  /// Distinguished closed 2-forms (a known pair) where the catalog records one.
  std::vector<ExteriorForm> pair_forms;
  /// Distinguished contact-type 1-forms where the catalog records one.
  std::vector<ExteriorForm> contact_forms;
  /// "structure-equations" when the bracket table is forced by the recorded
  /// invariant-form equations, "representative-presentation" otherwise.
  std::string provenance;
};

/// Derivation-type solvable algebra on R^3 x R with diagonal eigenvalues
/// (a, b, c), a + b + c = 0.  Pairwise nonzero sums give the generic stratum.
LieAlgebra make_sol_mn(const Rational& a, const Rational& b);

/// Named algebras: abelian2..abelian16 (even), heis3, nil3xR, nil4, sol3xR,
/// sl2xR, sol4_0, sol4_1, sol_mn (optionally with explicit eigenvalues).
CatalogEntry catalog_get(const std::string& name,
                         const std::vector<Rational>& params = {});

std::vector<std::string> catalog_names();

}  // namespace sympair

#endif  // SYMPAIR_LIEALGEBRA_HPP
