#ifndef SYMPAIR_PAIRS_HPP
#define SYMPAIR_PAIRS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sympair/liealgebra.hpp"

namespace sympair {

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Verdict object for the pair predicates.  Every axiom is evaluated and
/// recorded even after the first failure; the verdict is the conjunction.
struct PairReport {
  std::string kind;
  int dim = 0;
  int k = -1;  // class integer of the first form, where applicable
  int l = -1;  // class/rank integer of the second form
  bool verdict = false;
  std::vector<AxiomResult> axioms;
  std::vector<std::string> notes;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void finalize();
  std::string str() const;
};

/// Thrown by constructions whose input pair fails its axioms; carries the
/// failed report.
class PairRejected : public std::runtime_error {
 public:
  PairRejected(const std::string& what, PairReport report)
      : std::runtime_error(what), report(std::move(report)) {}
  PairReport report;
};

/// Class bookkeeping of a 1-form: valid means the class is the odd number
/// 2k+1, i.e. alpha^(d alpha)^k != 0 and (d alpha)^(k+1) = 0.  When no such
/// k exists the class is even (2k with (d alpha)^k != 0, alpha^(d alpha)^k = 0)
/// and valid is false.
struct FormClass {
  int k = 0;
  bool valid = false;
  int class_value() const { return 2 * k + (valid ? 1 : 0); }
};

FormClass form_class(const LieAlgebra& g, const ExteriorForm& alpha);

PairReport check_symplectic_pair(const LieAlgebra& g, const ExteriorForm& omega1,
                                 const ExteriorForm& omega2);

PairReport check_contact_symplectic_pair(const LieAlgebra& g, const ExteriorForm& alpha,
                                         const ExteriorForm& beta);

PairReport check_contact_pair(const LieAlgebra& g, const ExteriorForm& alpha,
                              const ExteriorForm& gamma);

std::pair<ExteriorForm, ExteriorForm> pair_to_pm(const ExteriorForm& omega1,
                                                 const ExteriorForm& omega2);
std::pair<ExteriorForm, ExteriorForm> pm_to_pair(const ExteriorForm& plus,
                                                 const ExteriorForm& minus);

enum class CoupleType { SymplecticPair, ConformalCouple, Neither };

struct CoupleReport {
  CoupleType type = CoupleType::Neither;
  bool inputs_admissible = false;  // both closed and nondegenerate
  std::vector<AxiomResult> checks;
};

/// Classifies two symplectic forms in dimension 4 by the sign relation of
/// their squares when the mixed wedge vanishes.
CoupleReport couple_type(const LieAlgebra& g, const ExteriorForm& plus,
                         const ExteriorForm& minus);

const char* couple_type_name(CoupleType t);

}  // namespace sympair

#endif  // SYMPAIR_PAIRS_HPP
