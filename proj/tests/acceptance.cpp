// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion enforces its stated wall-clock budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "thetarep/codegree.hpp"
#include "thetarep/kac.hpp"
#include "thetarep/matrix_model.hpp"
#include "thetarep/symfun.hpp"

using namespace thetarep;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void(std::vector<std::string>&)>& body) {
  std::vector<std::string> problems;
  auto start = std::chrono::steady_clock::now();
  try {
    body(problems);
  } catch (const std::exception& e) {
    problems.push_back(std::string("exception: ") + e.what());
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (elapsed > budget_seconds) {
    std::ostringstream os;
    os << "runtime " << elapsed << " s exceeds budget " << budget_seconds
       << " s";
    problems.push_back(os.str());
  }
  if (problems.empty()) {
    std::printf("PASS criterion %d: %s (%.2f s)\n", number, label.c_str(),
                elapsed);
  } else {
    ++failures;
    std::printf("FAIL criterion %d: %s (%.2f s)\n", number, label.c_str(),
                elapsed);
    for (const std::string& p : problems)
      std::printf("     - %s\n", p.c_str());
  }
  std::fflush(stdout);
}

template <class A, class B>
void expect_eq(std::vector<std::string>& problems, const A& got,
               const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    problems.push_back(os.str());
  }
}

template <>
void expect_eq<Int, Int>(std::vector<std::string>& problems, const Int& got,
                         const Int& want, const std::string& what) {
  if (got != want)
    problems.push_back(what + ": got " + got.get_str() + ", want " +
                       want.get_str());
}

struct PrintedRow {
  const char* type;
  const char* g0;
  const char* g1;
  int m;
  const char* weyl;
  const char* census;
};

}  // namespace

int main() {
  // ----------------------------------------------------------------------
  criterion(1, "Table 1 reproduction with the F4 discrepancy flagged", 10.0,
            [](std::vector<std::string>& problems) {
    // the sixteen printed rows, frozen
    const PrintedRow want[16] = {
        {"B_{2p}^1", "DpxBp", "C^{2p}(x)C^{2p+1}", 2, "W(B_{2p})", "2^{4p^2}"},
        {"B_{2p-1}^1", "DpxB{p-1}", "C^{2p}(x)C^{2p-1}", 2, "W(B_{2p-1})",
         "2^{4p^2-4p+1}"},
        {"D_{2p}^1", "DpxDp", "C^{2p}(x)C^{2p}", 2, "W(D_{2p})",
         "2^{4p^2-2p}"},
        {"A_{2n-2}^2", "B{n-1}", "S^<2>C^{2n-1}", 2, "W(A_{2n-2})",
         "2^{2n^2-3n+1}"},
        {"A_{2n-3}^2", "D{n-1}", "S^<2>C^{2n-2}", 2, "W(A_{2n-3})",
         "2^{2n^2-5n+3}"},
        {"D_{2p+1}^2", "BpxBp", "C^{2p+1}(x)C^{2p+1}", 2, "W(D_{2p+1})",
         "2^{4p^2+2p}"},
        {"E6^1", "A2xA2xA2", "C^3(x)C^3(x)C^3", 3, "25th", "3^24"},
        {"E7^1", "A7", "wedge^4 C^8", 2, "W(E7)", "2^63"},
        {"E8^1", "D8", "S^+_16", 2, "W(E8)", "2^120"},
        {"E8^1", "A8", "wedge^3 C^9", 3, "32nd", "3^80"},
        {"E8^1", "A4xA4", "C^5(x)wedge^2 C^5", 5, "16th", "5^48"},
        {"F4^1", "B3xA1", "S_7(x)C^2", 2, "W(F4)", "2^24"},
        {"F4^1", "A2xA2", "Sym^2 C^3(x)C^3", 3, "5th", "3^16"},
        {"G2^1", "A1xA1", "Sym^3 C^2(x)C^2", 2, "W(G2)", "2^6"},
        {"E6^2", "C4", "wedge^<4>C^8", 2, "W(E6)", "2^36"},
        {"D4^3", "A2", "Sym^3 C^3", 3, "4th", "3^8"},
    };
    const auto& printed = table1_printed_rows();
    expect_eq(problems, printed.size(), size_t{16}, "printed row count");
    for (int i = 0; i < 16 && i < static_cast<int>(printed.size()); ++i) {
      const Table1Printed& r = printed[i];
      if (r.type != want[i].type || r.g0 != want[i].g0 ||
          r.g1 != want[i].g1 || r.m != want[i].m || r.weyl != want[i].weyl ||
          r.census != want[i].census)
        problems.push_back(std::string("printed row mismatch at ") +
                           want[i].type + " | " + want[i].g0);
      if ((i == 11) != r.discrepancy)
        problems.push_back(std::string("discrepancy flag wrong on row ") +
                           want[i].type);
    }
    // recomputation: every exceptional/twisted row present with the printed
    // invariants (m, g0, Weyl name, census), the F4 mark-2 row with warning
    struct Expect {
      const char* diagram;
      int node;
      const char* g0;
      int m;
      const char* weyl;
      long reflections;
    };
    const Expect rows[] = {
        {"E6^1", 4, "A2xA2xA2", 3, "25th", 24},
        {"E7^1", 2, "A7", 2, "W(E7)", 63},
        {"E8^1", 1, "D8", 2, "W(E8)", 120},
        {"E8^1", 2, "A8", 3, "32nd", 80},
        {"E8^1", 5, "A4xA4", 5, "16th", 48},
        {"F4^1", 1, "C3xA1", 2, "W(F4)", 24},
        {"F4^1", 2, "A2xA2", 3, "5th", 16},
        {"G2^1", 2, "A1xA1", 2, "W(G2)", 6},
        {"E6^2", 4, "C4", 2, "W(E6)", 36},
        {"D4^3", 2, "A2", 3, "4th", 8},
    };
    for (const Expect& e : rows) {
      GradingReport r = grading_from_node(kac_diagram(e.diagram), e.node);
      std::string where = std::string(e.diagram) + " node " +
                          std::to_string(e.node);
      expect_eq(problems, r.g0_type, std::string(e.g0), where + " g0");
      expect_eq(problems, r.m, e.m, where + " m");
      expect_eq(problems, r.little_weyl, std::string(e.weyl), where + " W");
      long total = 0;
      for (const ReflectionClass& c : r.reflections) total += c.count;
      expect_eq(problems, total, e.reflections, where + " census");
      if (std::string(e.diagram) == "F4^1" && e.node == 1) {
        if (r.warnings.empty())
          problems.push_back("F4 mark-2 row missing the discrepancy warning");
        expect_eq(problems, r.dims.size() == 2 ? r.dims[1] : -1, 28L,
                  "F4 computed dim g1");
      }
    }
    // the scan carries all of them plus the classical families
    std::vector<GradingReport> scan = scan_table1(6);
    for (const Expect& e : rows) {
      bool found = false;
      for (const GradingReport& r : scan)
        found |= r.diagram == e.diagram && r.g0_type == e.g0 && r.m == e.m;
      if (!found)
        problems.push_back(std::string("scan_table1 misses ") + e.diagram +
                           " " + e.g0);
    }
  });

  // ----------------------------------------------------------------------
  criterion(2, "Table 2 degrees, parametric families at p,n in 1..6", 5.0,
            [](std::vector<std::string>& problems) {
    std::vector<GradingReport> rows = scan_table1(6);
    auto check_deg = [&](const std::string& weyl, const std::string& cls,
                         long expect) {
      bool seen = false;
      for (const GradingReport& r : rows) {
        if (r.little_weyl != weyl) continue;
        for (const ReflectionClass& c : r.reflections)
          if (c.label == cls) {
            seen = true;
            if (c.deg_d != expect) {
              std::ostringstream os;
              os << weyl << " " << cls << ": deg " << c.deg_d << " != "
                 << expect;
              problems.push_back(os.str());
            }
          }
      }
      return seen;
    };
    // fixed entries
    check_deg("W(E6)", "alpha", 72);
    check_deg("32nd", "alpha", 120);
    check_deg("W(E7)", "alpha", 126);
    check_deg("16th", "alpha", 60);
    check_deg("25th", "alpha", 36);
    check_deg("W(E8)", "alpha", 240);
    check_deg("4th", "alpha", 12);
    check_deg("W(G2)", "alpha_l", 6);
    check_deg("W(G2)", "alpha_s", 6);
    check_deg("5th", "alpha_l", 12);
    check_deg("5th", "alpha_s", 12);
    check_deg("W(F4)", "alpha_l", 24);
    check_deg("W(F4)", "alpha_s", 24);
    // parametric families at every valid parameter in 1..6
    int instantiated = 0;
    for (int p = 1; p <= 6; ++p) {
      instantiated += check_deg("W(B" + std::to_string(2 * p) + ")", "alpha_l",
                                4L * p * (2 * p - 1));
      check_deg("W(B" + std::to_string(2 * p) + ")", "alpha_s", 4L * p);
      check_deg("W(B" + std::to_string(2 * p - 1) + ")", "alpha_l",
                4L * (p - 1) * (2 * p - 1));
      check_deg("W(B" + std::to_string(2 * p - 1) + ")", "alpha_s",
                4L * p - 2);
      check_deg("W(D" + std::to_string(2 * p) + ")", "alpha",
                4L * p * (2 * p - 1));
      check_deg("W(D" + std::to_string(2 * p + 1) + ")", "alpha",
                4L * p * (2 * p + 1));
      check_deg("W(A" + std::to_string(2 * p - 2) + ")", "alpha",
                (2L * p - 1) * (2 * p - 2));
      check_deg("W(A" + std::to_string(2 * p - 3) + ")", "alpha",
                (2L * p - 2) * (2 * p - 3));
    }
    if (instantiated < 5)
      problems.push_back("too few W(B_{2p}) instantiations found");
  });

  // ----------------------------------------------------------------------
  criterion(3, "Table 3 codegrees, reflection route vs Katz-Kleiman", 120.0,
            [](std::vector<std::string>& problems) {
    struct Want {
      const char* orbit;
      long deg;
    };
    const Want wants[] = {
        {"G(4,8)", 126},        {"G(3,9)", 120},
        {"OG(8,16)_+", 240},    {"LG(4,8)", 72},
        {"P^2 x P^2 x P^2", 36}, {"P^4 x G(2,5)", 60},
        {"OG(3,7) x P^1", 24},  {"v_2(P^2) x P^2", 12},
        {"v_3(P^2)", 12},       {"v_3(P^1) x P^1", 6},
    };
    std::vector<Table3Check> checks = table3_crosscheck(3);
    for (const Want& w : wants) {
      bool found = false;
      for (const Table3Check& c : checks) {
        if (c.orbit != w.orbit) continue;
        found = true;
        if (c.expected != w.deg) {
          std::ostringstream os;
          os << w.orbit << ": reflection route " << c.expected << " != "
             << w.deg;
          problems.push_back(os.str());
        }
        if (!c.computed) {
          problems.push_back(std::string(w.orbit) + ": no Katz-Kleiman route");
        } else if (*c.computed != w.deg) {
          problems.push_back(std::string(w.orbit) +
                             ": Katz-Kleiman route disagrees (" +
                             c.computed->get_str() + ")");
        }
      }
      if (!found)
        problems.push_back(std::string(w.orbit) + " missing from Table 3");
    }
    // every modeled row in the scan matches
    for (const Table3Check& c : checks)
      if (c.computed && !c.match)
        problems.push_back("cross-check mismatch at " + c.diagram + " " +
                           c.orbit);
  });

  // ----------------------------------------------------------------------
  criterion(4, "Grassmannian two-route agreement, n <= 10", 120.0,
            [](std::vector<std::string>& problems) {
    expect_eq(problems, grassmannian_dual_degree_sum(3, 9), Int(120),
              "deg G(3,9)");
    expect_eq(problems, grassmannian_dual_degree_sum(4, 8), Int(126),
              "deg G(4,8)");
    for (int n = 4; n <= 10; ++n)
      for (int k = 2; k <= n - 2; ++k) {
        Int sum = grassmannian_dual_degree_sum(k, n);
        Int kk = katz_kleiman(grassmannian_profile(k, n)).value;
        if (sum != kk) {
          std::ostringstream os;
          os << "G(" << k << "," << n << "): sum " << sum.get_str()
             << " != kk " << kk.get_str();
          problems.push_back(os.str());
        }
      }
  });

  // ----------------------------------------------------------------------
  criterion(5, "Lagrangian and spinor closed forms vs direct integrals",
            60.0, [](std::vector<std::string>& problems) {
    auto both = [&](CodegreeResult r, long want, const std::string& what) {
      expect_eq(problems, r.value, Int(want), what);
      bool agreed = !r.cross_checks.empty();
      for (auto& [m, v] : r.cross_checks) agreed &= v == r.value;
      if (!agreed) problems.push_back(what + ": routes disagree");
    };
    both(codegree_lagrangian(3, Route::Both), 4, "LG(3,6)");
    both(codegree_lagrangian(4, Route::Both), 72, "LG(4,8)");
    both(codegree_spinor(4, Route::Both), 2, "S_8");
    both(codegree_spinor(5, Route::Both), 0, "S_10");
    both(codegree_spinor(8, Route::Both), 240, "S_16");
  });

  // ----------------------------------------------------------------------
  criterion(6, "quadric products: series, Table 3 patterns, conjecture",
            10.0, [](std::vector<std::string>& problems) {
    // (4,4): D_{2p}^{(1)} at p=2: 4p(2p-1) = 24;  (4,5): B_{2p}^{(1)} p=2;
    // (5,5): D_{2p+1}^{(2)} at p=2: 4p(2p+1) = 40;  (6,7): B_{2p}^{(1)} p=3
    expect_eq(problems, codegree_segre_quadrics(4, 4).value, Int(24),
              "Q^2 x Q^2");
    expect_eq(problems, codegree_segre_quadrics(4, 5).value, Int(24),
              "Q^2 x Q^3");
    expect_eq(problems, codegree_segre_quadrics(5, 5).value, Int(40),
              "Q^3 x Q^3");
    expect_eq(problems, codegree_segre_quadrics(6, 7).value, Int(60),
              "Q^4 x Q^5");
    int mismatches = 0;
    for (int a = 3; a <= 10; ++a)
      for (int b = 3; b <= 10; ++b) {
        SegreQuadricResult r = codegree_segre_quadrics(a, b);
        if (r.conjectured != 4 * binomial(std::min(a, b), 2))
          problems.push_back("conjecture value wrong");
        if (!r.matches_conjecture) ++mismatches;
        if (std::abs(a - b) <= 1 && !r.matches_conjecture)
          problems.push_back("conjecture fails in the proved range");
      }
    std::printf("     criterion 6 note: conjecture comparison reported for "
                "3 <= a,b <= 10 (%d value(s) differ)\n", mismatches);
  });

  // ----------------------------------------------------------------------
  criterion(7, "counterexamples have degenerate duals", 60.0,
            [](std::vector<std::string>& problems) {
    expect_eq(problems, codegree_segre({1, 2, 5}).value, Int(0),
              "P^1 x P^2 x P^5");
    expect_eq(problems, codegree_product_with_pk(spinor_profile(5), 3).value,
              Int(0), "OG(5,10)+ x P^3");
  });

  // ----------------------------------------------------------------------
  criterion(8, "matrix-model property suite", 180.0,
            [](std::vector<std::string>& problems) {
    struct Case {
      const char* tag;
      long nroots;
      long weyl_order;
      long deg_long;
      long deg_short;  // 0 when single class
    };
    const Case cases[] = {
        {"sl:outer-sym:2", 2, 2, 2, 0},
        {"sl:outer-sym:3", 6, 6, 6, 0},
        {"sl:outer-sym:4", 12, 24, 12, 0},
        {"sl:outer-sym:5", 20, 120, 20, 0},
        {"sl:outer-sym:6", 30, 720, 30, 0},
        {"sl:inner:0,1", 2, 2, 2, 0},
        {"sl:inner:0,1,2", 6, 3, 3, 0},
        {"sl:inner:0,1,2,3,4", 20, 5, 5, 0},
        {"so:block:3,3", 12, 24, 12, 0},
        {"so:block:3,4", 18, 48, 12, 6},
        {"so:block:4,5", 32, 384, 24, 8},
    };
    for (const Case& cs : cases) {
      std::string tag = cs.tag;
      GradedMatrixAlgebra a = realize(cs.tag);
      RestrictedRootDatum d = restricted_roots(a, find_cartan_subspace(a));
      if (static_cast<long>(d.lines.size()) !=
          cs.nroots / (a.m * (a.m - 1)))
        problems.push_back(tag + ": line count != |R|/(m(m-1))");
      LittleWeylGroup w = little_weyl_group(a, d);
      if (w.order() != cs.weyl_order)
        problems.push_back(tag + ": little Weyl order " +
                           std::to_string(w.order()));
      if (static_cast<long>(w.reflections.size()) != cs.nroots / a.m)
        problems.push_back(tag + ": reflection census != |R|/m");
      bool two = cs.deg_short > 0;
      SliceDiscriminant dl =
          restricted_discriminant(a, d, w, two ? "alpha_l" : "alpha");
      long roots_long = 0;
      for (const RootLine& l : d.lines)
        if (l.length_class == dl.cls)
          roots_long += static_cast<long>(l.root_ids.size());
      if (dl.degree() != cs.deg_long ||
          dl.degree() != roots_long / (a.m - 1))
        problems.push_back(tag + ": deg D long = " +
                           std::to_string(dl.degree()));
      if (!discriminant_is_invariant(a, dl, d, w))
        problems.push_back(tag + ": discriminant not W-invariant");
      if (two) {
        SliceDiscriminant ds = restricted_discriminant(a, d, w, "alpha_s");
        if (ds.degree() != cs.deg_short)
          problems.push_back(tag + ": deg D short = " +
                             std::to_string(ds.degree()));
      }
      SliceTestReport slice = centralizer_slice_test(a, d, 0);
      if (!slice.kernel_equals_hyperplane)
        problems.push_back(tag + ": centralizer slice kernel mismatch");
      if (!slice.centralizer_dim_matches)
        problems.push_back(tag + ": centralizer dimension mismatch");
      if (!regular_slice_dimension_test(a, d, 0, 1))
        problems.push_back(tag + ": regular slice rank test failed");
    }
    // census against the kac_gradings reports
    struct Match {
      const char* tag;
      const char* diagram;
      int node;
    };
    const Match matches[] = {
        {"sl:outer-sym:5", "A4^2", 2},  {"sl:outer-sym:6", "A5^2", 3},
        {"so:block:3,3", "D3^2", 1},    {"so:block:3,4", "B3^1", 2},
        {"so:block:4,5", "B4^1", 2},
    };
    for (const Match& m : matches) {
      GradedMatrixAlgebra a = realize(m.tag);
      RestrictedRootDatum d = restricted_roots(a, find_cartan_subspace(a));
      LittleWeylGroup w = little_weyl_group(a, d);
      GradingReport rep = grading_from_node(kac_diagram(m.diagram), m.node);
      long expected_total = 0;
      for (const ReflectionClass& c : rep.reflections)
        expected_total += c.count;
      if (static_cast<long>(w.reflections.size()) != expected_total)
        problems.push_back(std::string(m.tag) + " vs " + m.diagram +
                           ": reflection census mismatch");
      if (rep.weyl_order != w.order())
        problems.push_back(std::string(m.tag) + " vs " + m.diagram +
                           ": group order mismatch");
      auto census = w.census();
      for (const ReflectionClass& c : rep.reflections) {
        std::pair<int, std::string> key{c.order, c.label};
        std::pair<int, std::string> fallback{c.order, "alpha"};
        long got = census.count(key) ? census[key] : census[fallback];
        if (got != c.count)
          problems.push_back(std::string(m.tag) + " vs " + m.diagram +
                             ": class " + c.label + " count mismatch");
      }
    }
  });

  // ----------------------------------------------------------------------
  criterion(9, "symmetric-function oracle suite", 60.0,
            [](std::vector<std::string>& problems) {
    for (int w = 0; w <= 8; ++w)
      for (const Partition& mu : partitions_of(w, 4, 8)) {
        SchurExpansion single(4);
        single.add(mu, 1);
        if (!(schur_decompose(schur_polynomial(4, mu)) == single))
          problems.push_back("Schur round-trip failed at " + mu.str());
      }
    for (int wa = 1; wa <= 5; ++wa)
      for (int wb = 1; wb <= 5; ++wb)
        for (const Partition& mu : partitions_of(wa, 4, wa))
          for (const Partition& nu : partitions_of(wb, 4, wb)) {
            Poly prod = schur_polynomial(4, mu) * schur_polynomial(4, nu);
            if (!(lr_product(mu, nu, 4) == schur_decompose(prod)))
              problems.push_back("LR mismatch at " + mu.str() + "*" +
                                 nu.str());
          }
    for (int w = 0; w <= 10; ++w)
      for (const Partition& nu : partitions_of(w, 4, 6))
        for (int wm = 0; wm <= w; ++wm)
          for (const Partition& mu : partitions_of(wm, 4, 6)) {
            if (!nu.contains(mu)) continue;
            if (skew_syt_count(mu, nu) != skew_syt_count_recursive(mu, nu))
              problems.push_back("skew count mismatch at " + nu.str() + "/" +
                                 mu.str());
          }
  });

  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
