// Acceptance suite: one pass/fail line per criterion, exit code = number
// of failures.  Tolerances are zero everywhere (exact arithmetic); the
// stated time budgets are enforced as part of each criterion.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "sympair/boothbywang.hpp"
#include "sympair/coordforms.hpp"
#include "sympair/fourman.hpp"
#include "sympair/json_io.hpp"
#include "sympair/search.hpp"
#include "test_util.hpp"

using namespace sympair;
using testutil::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

// --- criterion 1: the recorded symplectic pairs verify exactly -----------

void criterion_1() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* name : {"sol3xR", "nil4", "nil3xR", "abelian4"}) {
    auto start = Clock::now();
    CatalogEntry e = catalog_get(name);
    PairReport rep = check_symplectic_pair(e.algebra, e.pair_forms[0], e.pair_forms[1]);
    double dt = seconds_since(start);
    bool this_ok = rep.verdict && dt < 0.1;
    if (!this_ok) detail << name << " failed; ";
    ok = ok && this_ok;
  }
  report(1, "recorded pairs on sol3xR, nil4, nil3xR and the abelian algebra verify", ok,
         detail.str());
}

// --- criterion 2: nonexistence decisions with zero-Gram certificates -----

void criterion_2() {
  bool ok = true;
  std::ostringstream detail;
  auto check_negative = [&](const std::string& label, const LieAlgebra& g) {
    auto start = Clock::now();
    PairWitness w = construct_pair_witness(g);
    bool this_ok = !has_invariant_symplectic(g) && !w.found && w.certificate.is_zero() &&
                   seconds_since(start) < 0.1;
    if (!this_ok) {
      detail << label << " failed; ";
      ok = false;
    }
  };
  for (const char* name : {"sl2xR", "sol4_0", "sol4_1"}) check_negative(name, catalog_get(name).algebra);
  const std::pair<Rational, Rational> triples[] = {
      {Rational(1), Rational(2)},  {Rational(1), Rational(3)},    {Rational(2), Rational(3)},
      {Rational(3), Rational(5)},  {Rational(1, 2), Rational(1, 3)},
  };
  int count = 0;
  for (const auto& [a, b] : triples) {
    check_negative("sol_mn(" + rational_str(a) + "," + rational_str(b) + ")", make_sol_mn(a, b));
    ++count;
  }
  report(2, "no invariant symplectic form on sl2xR, sol4_0, sol4_1 and " +
                std::to_string(count) + " sol_mn strata, with zero-Gram certificates",
         ok, detail.str());
}

// --- criterion 3: both extension theorems plus the fiber-product identity --

void criterion_3() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  for (const char* name : {"abelian4", "sol3xR", "nil4", "nil3xR"}) {
    CatalogEntry e = catalog_get(name);
    try {
      ContactSymplecticResult cs = bw_contact_symplectic(e.algebra, e.pair_forms[0], e.pair_forms[1]);
      ContactPairResult cp = bw_contact_pair_from_cs(cs.extension.total, cs.alpha, cs.beta);
      TorusExtensionResult torus = torus_extension(e.algebra, e.pair_forms[0], e.pair_forms[1]);
      bool tables_equal = true;
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
          for (int k = 1; k <= 6; ++k)
            tables_equal = tables_equal && torus.total.structure_constant(i, j, k) ==
                                               cp.extension.total.structure_constant(i, j, k);
      bool this_ok = cs.report.verdict && cs.extension.total.dim() == 5 && cp.report.verdict &&
                     cp.extension.total.dim() == 6 && torus.report.verdict && tables_equal;
      if (!this_ok) {
        detail << name << " failed; ";
        ok = false;
      }
    } catch (const std::exception& ex) {
      detail << name << " threw: " << ex.what() << "; ";
      ok = false;
    }
  }
  double dt = seconds_since(start);
  if (dt >= 0.5) {
    detail << "took " << dt << "s; ";
    ok = false;
  }
  report(3, "circle and torus extensions carry the expected pairs on every catalog pair", ok,
         detail.str());
}

// --- criterion 4: coordinate-chart pairs -----------------------------------

void criterion_4() {
  bool ok = true;
  std::ostringstream detail;
  auto samples = default_grid(4);
  if (samples.size() != 625) {
    detail << "grid has " << samples.size() << " points; ";
    ok = false;
  }

  PolyForm w1 = PolyForm::basis(4, {2, 4});
  PolyForm w2 = PolyForm::basis(4, {1, 3}) - PolyForm::monomial(4, {1, 2}, Poly::variable(4, 1));
  PolyForm v1 = PolyForm::basis(4, {1, 2});
  PolyForm v2 = PolyForm::basis(4, {3, 4});
  auto vol = [](const Rational& c) {
    return PolyForm::monomial(4, {1, 2, 3, 4}, Poly::constant(4, c));
  };

  auto check_pair = [&](const std::string& label, const PolyForm& a, const PolyForm& b,
                        const Rational& volc) {
    bool closed = pd(a).is_zero() && pd(b).is_zero();
    bool squares = pwedge(a, a).is_zero() && pwedge(b, b).is_zero();
    bool product = pwedge(a, b) == vol(volc);
    GenericRankReport ra = generic_rank(a, samples);
    GenericRankReport rb = generic_rank(b, samples);
    bool ranks = ra.square_identically_zero && rb.square_identically_zero && ra.min_rank == 2 &&
                 ra.max_rank == 2 && rb.min_rank == 2 && rb.max_rank == 2 &&
                 ra.ranks.size() == 625 && rb.ranks.size() == 625;
    if (!(closed && squares && product && ranks)) {
      detail << label << " failed; ";
      ok = false;
    }
  };
  check_pair("(dy^dt, dx^dz - x dx^dy)", w1, w2, Rational(-1));
  check_pair("(dx^dy, dz^dt)", v1, v2, Rational(1));

  report(4, "both coordinate pairs: closed, null squares, constant volume product, rank 2 at 625 samples",
         ok, detail.str());
}

// --- criterion 5: torus-bundle table and its exclusivity -------------------

void criterion_5() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  struct RowCase {
    T2BundleData b;
    char row;
    int b1;
    const char* geometry;
  };
  auto mk = [](std::array<int, 4> c, int d, int m, int n) {
    T2BundleData b;
    b.c = c; b.d = d; b.euler_m = m; b.euler_n = n;
    return b;
  };
  const RowCase cases[] = {
      {mk({1, 0, 0, 1}, 1, 0, 0), 'a', 4, "R4"},
      {mk({1, 0, 0, 1}, 1, 2, 5), 'b', 3, "Nil3xR"},
      {mk({1, 0, 0, 1}, 1, -1, 0), 'b', 3, "Nil3xR"},
      {mk({0, -1, 1, -1}, 1, 0, 0), 'c', 2, "R4"},
      {mk({0, -1, 1, -1}, 1, -1, 0), 'c', 2, "R4"},
      {mk({0, -1, 1, 0}, 1, 0, 0), 'c', 2, "R4"},
      {mk({0, -1, 1, 0}, 1, -1, 0), 'c', 2, "R4"},
      {mk({1, -1, 1, 0}, 1, 0, 0), 'c', 2, "R4"},
      {mk({-1, 0, 0, -1}, 1, 0, 0), 'c', 2, "R4"},
      {mk({-1, 0, 0, -1}, 1, -1, 0), 'c', 2, "R4"},
      {mk({1, 1, 0, 1}, 1, 0, 1), 'd', 2, "Nil4"},
      {mk({1, -3, 0, 1}, 1, 2, -2), 'd', 2, "Nil4"},
      {mk({-1, 1, 0, -1}, 1, 0, 0), 'e', 2, "Nil3xR"},
      {mk({-1, -2, 0, -1}, 1, 3, 1), 'e', 2, "Nil3xR"},
      {mk({1, 1, 0, 1}, -1, 0, 0), 'f', 2, "Nil3xR"},
      {mk({1, 4, 0, 1}, -1, 1, 2), 'f', 2, "Nil3xR"},
      {mk({2, 1, 1, 1}, 1, 0, 0), 'g', 2, "Sol3xR"},
      {mk({-2, 1, 1, -1}, 1, 2, 3), 'g', 2, "Sol3xR"},
      {mk({2, 1, 1, 1}, -1, 0, 0), 'h', 2, "Sol3xR"},
      {mk({3, 1, 2, 1}, -1, -1, 2), 'h', 2, "Sol3xR"},
  };
  int case_c_count = 0;
  for (const auto& c : cases) {
    try {
      BundleClass cls = classify_t2_bundle(c.b);
      if (!(cls.row == c.row && cls.b1 == c.b1 && cls.geometry == c.geometry)) {
        detail << "row " << c.row << " instance misclassified; ";
        ok = false;
      }
      if (c.row == 'c') ++case_c_count;
    } catch (const std::exception& ex) {
      detail << "row " << c.row << " threw: " << ex.what() << "; ";
      ok = false;
    }
  }
  if (case_c_count != 7) {
    detail << "expected 7 flat entries, saw " << case_c_count << "; ";
    ok = false;
  }

  long overlaps = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          if (a * d - b * c != 1) continue;
          for (int dd : {1, -1})
            for (int m = -3; m <= 3; ++m)
              for (int n = -3; n <= 3; ++n)
                if (matching_rows(mk({a, b, c, d}, dd, m, n)).size() > 1) ++overlaps;
        }
  if (overlaps != 0) {
    detail << overlaps << " overlapping normal forms; ";
    ok = false;
  }
  double dt = seconds_since(start);
  if (dt >= 5.0) {
    detail << "took " << dt << "s; ";
    ok = false;
  }
  report(5, "every printed table row classifies as printed and rows are mutually exclusive", ok,
         detail.str());
}

// --- criterion 6: first Betti numbers ---------------------------------------

void criterion_6() {
  bool ok = true;
  std::ostringstream detail;
  const std::pair<const char*, int> expected[] = {
      {"abelian4", 4}, {"nil3xR", 3}, {"nil4", 2}, {"sol3xR", 2}};
  for (const auto& [name, b1] : expected) {
    int got = cohomology_dims(catalog_get(name).algebra)[1];
    if (got != b1) {
      detail << name << ": b1 = " << got << " expected " << b1 << "; ";
      ok = false;
    }
  }
  report(6, "first Betti numbers 4, 3, 2, 2 for abelian4, nil3xR, nil4, sol3xR", ok, detail.str());
}

// --- criterion 7: property suites, 200+ randomized cases each ---------------

void criterion_7() {
  auto start = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  {  // d^2 = 0
    Rng rng(1001);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      LieAlgebra g = testutil::random_jacobi_algebra4(rng);
      int p = static_cast<int>(rng() % 4);
      ExteriorForm f = testutil::random_form(rng, 4, p);
      if (!ce_d(g, ce_d(g, f)).is_zero()) ++bad;
    }
    if (bad) { detail << "d^2 failures: " << bad << "; "; ok = false; }
  }

  {  // extension Jacobi <=> closed cocycle
    Rng rng(1002);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
      LieAlgebra g = testutil::random_jacobi_algebra4(rng);
      ExteriorForm w = (i & 1) ? testutil::random_form(rng, 4, 2, 4)
                               : testutil::random_closed_2form(rng, g);
      if (jacobi_check(central_extension_unchecked(g, w)).ok != ce_d(g, w).is_zero()) ++bad;
    }
    if (bad) { detail << "extension-Jacobi failures: " << bad << "; "; ok = false; }
  }

  {  // Sylvester invariance under congruence
    Rng rng(1003);
    int bad = 0;
    const char* names[] = {"abelian4", "sol3xR", "nil4", "nil3xR", "sl2xR"};
    for (int i = 0; i < 200; ++i) {
      MatX gram = wedge_gram(catalog_get(names[i % 5]).algebra).gram;
      SignatureResult base = signature(gram);
      MatX p = testutil::random_invertible(rng, static_cast<int>(gram.rows()));
      SignatureResult s = signature(p.transpose() * gram * p);
      if (s.positive != base.positive || s.negative != base.negative || s.zero != base.zero) ++bad;
    }
    if (bad) { detail << "Sylvester failures: " << bad << "; "; ok = false; }
  }

  {  // oracle agreement
    Rng rng(1004);
    int bad = 0;
    const char* names[] = {"abelian4", "sol3xR", "nil4", "nil3xR",
                           "sl2xR",    "sol4_0", "sol4_1"};
    for (int i = 0; i < 200; ++i) {
      LieAlgebra g = (i % 2 == 0) ? catalog_get(names[(i / 2) % 7]).algebra
                                  : testutil::random_jacobi_algebra4(rng);
      bool oracle = brute_force_oracle(g, 2000 + static_cast<std::uint64_t>(i), 60);
      if (oracle && !has_invariant_symplectic_pair(g)) ++bad;
    }
    if (bad) { detail << "oracle disagreements: " << bad << "; "; ok = false; }
  }

  {  // witness soundness
    Rng rng(1005);
    int bad = 0, found = 0;
    for (int i = 0; i < 200; ++i) {
      LieAlgebra g = testutil::random_jacobi_algebra4(rng);
      PairWitness w = construct_pair_witness(g);
      if (!w.found) continue;
      ++found;
      if (!w.verification.verdict || !check_symplectic_pair(g, w.omega1, w.omega2).verdict) ++bad;
    }
    if (bad || found < 40) {
      detail << "witness failures: " << bad << " of " << found << "; ";
      ok = false;
    }
  }

  {  // pair <=> plus/minus characterization
    Rng rng(1006);
    int bad = 0, positives = 0;
    LieAlgebra algebras[] = {LieAlgebra(4), catalog_get("sol3xR").algebra,
                             catalog_get("nil4").algebra, catalog_get("nil3xR").algebra};
    for (int i = 0; i < 200; ++i) {
      const LieAlgebra& g = algebras[i % 4];
      auto z1 = closed_forms(g, 1);
      auto decomposable = [&]() {
        ExteriorForm u(4, 1), v(4, 1);
        for (const auto& zeta : z1) {
          u += Scalar(testutil::random_rational(rng, 3, 2)) * zeta;
          v += Scalar(testutil::random_rational(rng, 3, 2)) * zeta;
        }
        return wedge(u, v);
      };
      ExteriorForm w1 = (i % 3 == 0) ? testutil::random_closed_2form(rng, g) : decomposable();
      ExteriorForm w2 = decomposable();
      if (w1.is_zero() || w2.is_zero()) continue;
      bool verdict = check_symplectic_pair(g, w1, w2).verdict;
      auto [plus, minus] = pair_to_pm(w1, w2);
      if (verdict != (couple_type(g, plus, minus).type == CoupleType::SymplecticPair)) ++bad;
      if (verdict) ++positives;
    }
    if (bad || positives < 5) {
      detail << "characterization failures: " << bad << ", positives " << positives << "; ";
      ok = false;
    }
  }

  double dt = seconds_since(start);
  if (dt >= 60.0) {
    detail << "took " << dt << "s; ";
    ok = false;
  }
  report(7, "six property suites at 200 randomized cases each", ok, detail.str());
}

// --- criterion 8: single sign flips are always detected ---------------------

void criterion_8() {
  bool ok = true;
  std::ostringstream detail;

  // expected structure equations per entry, used as the example verdicts
  auto structure_ok = [](const std::string& name, const LieAlgebra& g) {
    LieAlgebra stock = catalog_get(name).algebra;
    for (int k = 1; k <= 4; ++k) {
      ExteriorForm expected = ce_d(stock, ExteriorForm::basis(4, {k}));
      if (ce_d(g, ExteriorForm::basis(4, {k})) != expected) return false;
    }
    return true;
  };

  for (const char* name : {"sol3xR", "nil4"}) {
    CatalogEntry e = catalog_get(name);
    int flips = 0, detected = 0;
    for (int i = 1; i <= 4; ++i) {
      for (int j = i + 1; j <= 4; ++j) {
        for (int k = 1; k <= 4; ++k) {
          Scalar c = e.algebra.structure_constant(i, j, k);
          if (c.is_zero()) continue;
          ++flips;
          LieAlgebra mutant = e.algebra;
          mutant.set_bracket_term(i, j, k, -c);

          bool jacobi_broken = !jacobi_check(mutant).ok;
          bool d2_broken = false;
          for (int t = 1; t <= 4 && !d2_broken; ++t)
            d2_broken = !ce_d(mutant, ce_d(mutant, ExteriorForm::basis(4, {t}))).is_zero();
          bool example_changed =
              !structure_ok(name, mutant) ||
              !check_symplectic_pair(mutant, e.pair_forms[0], e.pair_forms[1]).verdict ||
              cohomology_dims(mutant)[1] != cohomology_dims(e.algebra)[1] ||
              has_invariant_symplectic_pair(mutant) != has_invariant_symplectic_pair(e.algebra);

          if (jacobi_broken || d2_broken || example_changed) ++detected;
        }
      }
    }
    if (flips == 0 || detected != flips) {
      detail << name << ": " << detected << " of " << flips << " flips detected; ";
      ok = false;
    }
  }
  report(8, "every single structure-constant sign flip in sol3xR and nil4 is detected", ok,
         detail.str());
}

}  // namespace

int main() {
  auto start = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << seconds_since(start) << "s total)" << std::endl;
  return failures;
}
