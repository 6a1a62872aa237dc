#ifndef SYMPAIR_COORDFORMS_HPP
#define SYMPAIR_COORDFORMS_HPP

#include <map>
#include <string>
#include <vector>

#include "sympair/exterior.hpp"

namespace sympair {

/// Multivariate polynomial with exact rational coefficients, sparse in
/// monomials with dense exponent tuples.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);  // 1-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exponents, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly l, const Poly& r) { return l += r; }
  friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
  friend Poly operator*(const Poly& l, const Poly& r);
  friend bool operator==(const Poly& l, const Poly& r) {
    return l.nvars_ == r.nvars_ && l.terms_ == r.terms_;
  }
  friend bool operator!=(const Poly& l, const Poly& r) { return !(l == r); }

  Poly derivative(int i) const;  // d/dx_i, 1-based
  Rational eval(const std::vector<Rational>& point) const;
  /// Substitutes args[i-1] for x_i; the result lives in the variables of args.
  Poly substitute(const std::vector<Poly>& args) const;

  std::string str() const;

 private:
  int nvars_;
  std::map<std::vector<int>, Rational> terms_;
};

/// Differential form on a coordinate chart with polynomial coefficients.
class PolyForm {
 public:
  PolyForm() : dim_(0), degree_(0) {}
  PolyForm(int dim, int degree);

  static PolyForm monomial(int dim, std::initializer_list<int> indices, const Poly& c);
  static PolyForm basis(int dim, std::initializer_list<int> indices);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexMask, Poly>& terms() const { return terms_; }
  Poly coefficient(IndexMask mask) const;
  void add_term(IndexMask mask, const Poly& c);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm l, const PolyForm& r) { return l += r; }
  friend PolyForm operator-(PolyForm l, const PolyForm& r) { return l -= r; }
  friend bool operator==(const PolyForm& l, const PolyForm& r) {
    return l.dim_ == r.dim_ && l.degree_ == r.degree_ && l.terms_ == r.terms_;
  }
  friend bool operator!=(const PolyForm& l, const PolyForm& r) { return !(l == r); }

  std::string str() const;

 private:
  int dim_, degree_;
  std::map<IndexMask, Poly> terms_;
};

/// Polynomial map between coordinate charts, one polynomial per target
/// coordinate in the source variables.
struct PolyMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<Poly> components;

  static PolyMap identity(int dim);
};

PolyMap compose(const PolyMap& outer, const PolyMap& inner);

/// Exterior derivative via formal partials.
PolyForm pd(const PolyForm& phi);

PolyForm pwedge(const PolyForm& phi, const PolyForm& psi);

/// Substitutes coordinates and pushes differentials through the components;
/// contravariant: pullback(compose(f,g), phi) = pullback(g, pullback(f, phi)).
PolyForm pullback(const PolyMap& f, const PolyForm& phi);

struct InvarianceReport {
  std::vector<bool> invariant;  // one verdict per generator
  bool all() const;
};

InvarianceReport invariance_check(const PolyForm& phi, const std::vector<PolyMap>& generators);

/// Pointwise evaluation of all coefficients, landing in the exact-scalar
/// exterior algebra.
ExteriorForm evaluate_at(const PolyForm& phi, const std::vector<Rational>& point);

struct GenericRankReport {
  bool square_identically_zero = false;
  int min_rank = 0;
  int max_rank = 0;
  std::vector<int> ranks;  // one per sample, in sample order
};

/// Symbolic square test plus pointwise skew ranks of a 2-form on a
/// 4-dimensional chart.
GenericRankReport generic_rank(const PolyForm& phi, const std::vector<std::vector<Rational>>& samples);

/// The box {-1, -1/2, 0, 1/2, 1}^dim in odometer order.
std::vector<std::vector<Rational>> default_grid(int dim);

}  // namespace sympair

#endif  // SYMPAIR_COORDFORMS_HPP
