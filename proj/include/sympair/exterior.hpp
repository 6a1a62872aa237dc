#ifndef SYMPAIR_EXTERIOR_HPP
#define SYMPAIR_EXTERIOR_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sympair/linalg.hpp"
#include "sympair/scalar.hpp"

namespace sympair {

/// Bit i-1 set <=> 1-based index i belongs to the tuple.
using IndexMask = std::uint32_t;

constexpr int kMaxDim = 16;

IndexMask mask_of(std::span<const int> indices);
std::vector<int> indices_of(IndexMask mask);

/// Sign of the shuffle merging two disjoint sorted tuples, 0 on overlap.
int wedge_sign(IndexMask a, IndexMask b);

/// All masks with the given popcount over {1..dim}, ascending as integers.
std::vector<IndexMask> masks_of_degree(int dim, int degree);

/// Homogeneous alternating form on an n-dimensional space, stored as a
/// sparse map from strictly increasing index tuples to exact scalars.
/// Degrees above the ambient dimension are permitted and always zero,
/// which keeps wedge powers total.
class ExteriorForm {
 public:
  ExteriorForm() : dim_(0), degree_(0) {}
  ExteriorForm(int dim, int degree);

  static ExteriorForm basis(int dim, std::initializer_list<int> indices);
  static ExteriorForm monomial(int dim, std::span<const int> indices, const Scalar& c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<IndexMask, Scalar>& terms() const { return terms_; }

  Scalar coefficient(IndexMask mask) const;
  void add_term(IndexMask mask, const Scalar& c);

  ExteriorForm operator-() const;
  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const Scalar& s);

  friend ExteriorForm operator+(ExteriorForm l, const ExteriorForm& r) { return l += r; }
  friend ExteriorForm operator-(ExteriorForm l, const ExteriorForm& r) { return l -= r; }
  friend ExteriorForm operator*(const Scalar& s, ExteriorForm f) { return f *= s; }

  friend bool operator==(const ExteriorForm& l, const ExteriorForm& r) {
    return l.dim_ == r.dim_ && l.degree_ == r.degree_ && l.terms_ == r.terms_;
  }
  friend bool operator!=(const ExteriorForm& l, const ExteriorForm& r) { return !(l == r); }

  std::string str() const;

 private:
  int dim_, degree_;
  std::map<IndexMask, Scalar> terms_;
};

/// Linear subspace held as a reduced-echelon row basis, so equality of
/// subspaces is equality of matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_spanning(int ambient, const MatX& spanning_rows);
  static Subspace whole(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const MatX& basis() const { return basis_; }
  VecX basis_vector(int i) const { return basis_.row(i).transpose(); }

  bool contains(const VecX& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  MatX basis_;
};

ExteriorForm wedge(const ExteriorForm& phi, const ExteriorForm& psi);
ExteriorForm wedge_power(const ExteriorForm& phi, int k);

/// Interior product with a coordinate vector; degree drops by one.
ExteriorForm contract(const VecX& v, const ExteriorForm& phi);

/// Value of the form on a tuple of vectors given as matrix columns.
Scalar evaluate(const ExteriorForm& phi, const MatX& vectors);

/// Rank of the skew coefficient matrix of a 2-form, cross-checked in even
/// ambient dimension against nonvanishing of the top wedge power.
int rank_two_form(const ExteriorForm& omega);

Subspace kernel(const ExteriorForm& phi);

/// Pullback along the inclusion of s, written in the echelon basis of s.
ExteriorForm restrict_form(const ExteriorForm& phi, const Subspace& s);

}  // namespace sympair

#endif  // SYMPAIR_EXTERIOR_HPP
