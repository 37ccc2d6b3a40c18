// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ekzero/bench.hpp"
#include "ekzero/report.hpp"
#include "test_util.hpp"

using namespace ekzero;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& msg) { g_notes.push_back(msg); }

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    note("FAILED: " + what);
  }
}

void expect_near(double got, double want, double atol, const std::string& what) {
  expect(std::abs(got - want) <= atol,
         what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
}

class Criterion {
 public:
  Criterion(int index, std::string name) : index_(index), name_(std::move(name)) {
    start_failures_ = g_failures;
    start_ = std::chrono::steady_clock::now();
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  ~Criterion() {
    const double secs = seconds();
    const bool ok = g_failures == start_failures_;
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", index_, name_.c_str(),
                secs);
    for (const std::string& n : g_notes) std::printf("         %s\n", n.c_str());
    g_notes.clear();
  }

 private:
  int index_;
  std::string name_;
  int start_failures_;
  std::chrono::steady_clock::time_point start_;
};

// --- criterion 1: paper-value regression -----------------------------------

void criterion1() {
  Criterion c(1, "paper-value regression (±5e-4, < 1 s)");
  const double tol = 5e-4;
  const Polynomial p1 = testutil::p1(), p2 = testutil::p2(), p3 = testutil::p3(),
                   p4 = testutil::p4();

  {  // p1
    const BoundInterval ek = ek_bounds(p1);
    expect_near(ek.lower, 0.25, tol, "p1 ek lower");
    expect_near(ek.upper, 4.00, tol, "p1 ek upper");
    const BoundInterval cy = cauchy_interval(p1);
    expect_near(cy.lower, 0.6288, tol, "p1 cauchy lower");
    expect_near(cy.upper, 1.9242, tol, "p1 cauchy upper");
    const auto [lo, hi] = moduli_extremes(all_roots(p1));
    expect_near(lo, 0.7740, tol, "p1 smallest zero");
    expect_near(hi, 1.3921, tol, "p1 largest zero");
  }
  {  // p2
    const BoundInterval ek = ek_bounds(p2);
    expect_near(ek.lower, 0.5, tol, "p2 ek lower");
    expect_near(ek.upper, 2.0, tol, "p2 ek upper");
    const BoundInterval cy = cauchy_interval(p2);
    expect_near(cy.lower, 0.3143, tol, "p2 cauchy lower");
    expect_near(cy.upper, 2.4654, tol, "p2 cauchy upper");
    const auto [lo, hi] = moduli_extremes(all_roots(p2));
    expect_near(lo, 0.7136, tol, "p2 smallest zero");
    expect_near(hi, 1.4013, tol, "p2 largest zero");
  }
  {  // p3 interval methods
    const BoundInterval cy = cauchy_interval(p3);
    expect_near(cy.lower, 0.670, tol, "p3 cauchy lower");
    expect_near(cy.upper, 4.580, tol, "p3 cauchy upper");
    const BoundInterval ek = ek_bounds(p3);
    expect_near(ek.lower, 0.500, tol, "p3 ek lower");
    expect_near(ek.upper, 4.000, tol, "p3 ek upper");
    const BoundInterval q = thm32_bounds(p3);
    expect_near(q.lower, 0.633, tol, "p3 thm32 lower");
    expect_near(q.upper, 4.000, tol, "p3 thm32 upper");
    const BoundInterval c1 = thm33_bounds(p3, 1);
    expect_near(c1.lower, 0.766, tol, "p3 thm33-1 lower");
    expect_near(c1.upper, 4.000, tol, "p3 thm33-1 upper");
    const BoundInterval c2 = thm33_bounds(p3, 2);
    expect_near(c2.lower, 0.807, tol, "p3 thm33-2 lower");
    expect_near(c2.upper, 3.788, tol, "p3 thm33-2 upper");
  }
  {  // p3 disk radii
    const double s2 = cauchy_radius(p3, 2).value;
    expect_near(s2 + 4.0, 5.475, tol, "p3 s2 inclusion radius");
    const double s2_rev = cauchy_radius(reverse(p3), 2).value;
    const Disk s2_excl = recip_exterior(Complex(7.0 / 6.0, 0.0), 6.0 / 7.0 + s2_rev);
    expect_near(s2_excl.radius, 0.698, tol, "p3 s2 exclusion radius");

    const RegionReport t41 = thm41_disks(p3);
    expect_near(t41.exclusion[0].radius, 0.513, tol, "p3 thm41 exclusion");
    expect_near(t41.inclusion[0].radius, 5.732, tol, "p3 thm41 inclusion");
    const RegionReport c41 = cor41_disks(p3);
    expect_near(c41.exclusion[0].radius, 0.607, tol, "p3 cor41 exclusion");
    expect_near(c41.inclusion[0].radius, 5.618, tol, "p3 cor41 inclusion");
    const RegionReport t43 = thm43_disks(p3);
    expect_near(t43.exclusion[0].radius, 0.693, tol, "p3 thm43 exclusion");
    expect_near(t43.inclusion[0].radius, 5.492, tol, "p3 thm43 inclusion");
    const RegionReport t42 = thm42_disks(p3, 0.5);
    expect_near(t42.exclusion[0].radius, 0.664, tol, "p3 thm42(1/2) exclusion");
    expect_near(t42.inclusion[0].radius, 4.740, tol, "p3 thm42(1/2) inclusion");
    expect_near(thm51_region(p3).inclusion[0].radius, 3.151, tol, "p3 thm51 radius");
    expect_near(cor61_region(p3).inclusion[0].radius, 2.507, tol, "p3 cor61 radius");
    const auto [lo, hi] = moduli_extremes(all_roots(p3));
    expect_near(lo, 1.075, tol, "p3 smallest zero");
    expect_near(hi, 3.554, tol, "p3 largest zero");
  }
  {  // p4
    expect_near(thm33_bounds(p4, 2).upper, 8.744, tol, "p4 thm33-2 upper");
    expect_near(thm51_region(p4).inclusion[0].radius, 5.012, tol, "p4 thm51 radius");
    const RegionReport c61 = cor61_region(p4);
    expect_near(c61.inclusion[0].radius, 3.552, tol, "p4 cor61 radius");
    expect_near(cauchy_radius(p4, 1).value, 9.592, tol, "p4 cauchy radius");

    // cor61 isolates exactly one zero in a disjoint disk
    expect(c61.counts.has_value(), "p4 cor61 certificate present");
    if (c61.counts) {
      const CountGroup& isolated = (*c61.counts)[0];
      expect(isolated.disks.size() == 1 && isolated.count == 1, "p4 cor61 isolates one zero");
      const int idx = isolated.disks[0];
      expect(c61.disjoint[idx][0] && c61.disjoint[idx][3 - idx], "p4 cor61 isolated disk disjoint");
      expect(count_in_disk(all_roots(p4), c61.inclusion[idx]) == 1, "p4 cor61 oracle count 1");
    }
  }
  expect(c.seconds() < 1.0, "criterion 1 runtime below 1 s");
}

// --- criterion 2: soundness sweep -------------------------------------------

void criterion2() {
  Criterion c(2, "soundness sweep: 1000 x {I,II} x degree {5,10,40} (< 60 s)");
  long long violations = 0;
  for (const auto kind : {BenchClass::Kind::I, BenchClass::Kind::II}) {
    for (const int degree : {5, 10, 40}) {
      const BenchClass bc{kind, degree, 0, 0xA11CEULL};
      for (int i = 0; i < 1000; ++i) {
        const Polynomial p = sample_polynomial(bc, i);
        const RootSet rs = all_roots(p);

        if (!testutil::interval_sound(cauchy_interval(p), rs)) ++violations;
        if (!testutil::interval_sound(ek_bounds(p), rs)) ++violations;
        if (!testutil::interval_sound(thm32_bounds(p), rs)) ++violations;
        if (!testutil::interval_sound(thm33_bounds(p, 1), rs)) ++violations;
        if (!testutil::interval_sound(thm33_bounds(p, 2), rs)) ++violations;

        if (!testutil::region_sound(thm41_disks(p), rs)) ++violations;
        if (!testutil::region_sound(thm42_disks(p, 0.5), rs)) ++violations;
        if (!testutil::region_sound(cor41_disks(p), rs)) ++violations;
        if (!testutil::region_sound(thm43_disks(p), rs)) ++violations;
        if (!testutil::region_sound(thm51_region(p), rs)) ++violations;
        if (!testutil::region_sound(thm52_region(p, 0.5), rs)) ++violations;
        if (!testutil::region_sound(cor51_region(p), rs)) ++violations;
        if (!testutil::region_sound(thm53_region(p), rs)) ++violations;
        if (!testutil::region_sound(thm61_region(p, 0.5), rs)) ++violations;
        if (!testutil::region_sound(cor61_region(p), rs)) ++violations;
      }
    }
  }
  expect(violations == 0, "zero violations (got " + std::to_string(violations) + ")");
  expect(c.seconds() < 60.0, "criterion 2 runtime below 60 s");
}

// --- criterion 3 + 5: table reproduction and determinism --------------------

struct FullBench {
  std::string csv;
  std::vector<BenchTable> tables;  // per class {I,II} x degree {10,40} x kind
};

FullBench run_full_bench(int samples, std::uint64_t seed, int workers) {
  FullBench fb;
  for (const auto kind : {BenchClass::Kind::I, BenchClass::Kind::II}) {
    for (const int degree : {10, 40}) {
      const BenchClass c{kind, degree, samples, seed};
      fb.tables.push_back(table_upper_ratios(c, workers));
      fb.tables.push_back(table_inclusion_radii(c, workers));
      fb.tables.push_back(table_union_radii(c, workers));
      for (std::size_t i = fb.tables.size() - 3; i < fb.tables.size(); ++i) {
        fb.csv += "# class " + to_string(kind) + " " + fb.tables[i].statistic + "\n";
        fb.csv += to_csv(fb.tables[i]);
      }
    }
  }
  return fb;
}

void check_row(const BenchTable& t, const std::vector<double>& paper, double rtol,
               const std::string& label) {
  for (std::size_t i = 0; i < paper.size(); ++i) {
    const double got = t.rows[i].median;
    expect(std::abs(got - paper[i]) <= rtol * paper[i],
           label + " " + t.rows[i].method + ": got " + std::to_string(got) + ", paper " +
               std::to_string(paper[i]));
  }
}

double median_for(const BenchTable& t, const std::string& method) {
  for (const BenchRow& row : t.rows) {
    if (row.method == method) return row.median;
  }
  return -1.0;
}

std::string g_csv_first_run;

void criterion3() {
  Criterion c(3, "table reproduction: 1000-sample medians vs paper (< 5 min)");
  const FullBench fb = run_full_bench(1000, 20260810ULL, 2);
  g_csv_first_run = fb.csv;

  // tables[i]: (class, degree) x (upper, disk, union)
  const BenchTable &u_i10 = fb.tables[0], &d_i10 = fb.tables[1], &g_i10 = fb.tables[2];
  const BenchTable &u_i40 = fb.tables[3], &d_i40 = fb.tables[4], &g_i40 = fb.tables[5];
  const BenchTable &u_ii10 = fb.tables[6], &d_ii10 = fb.tables[7], &g_ii10 = fb.tables[8];
  const BenchTable &u_ii40 = fb.tables[9], &d_ii40 = fb.tables[10], &g_ii40 = fb.tables[11];

  check_row(u_i10, {1.465, 4.570, 1.600, 1.479, 1.3553}, 0.15, "upper I n=10");
  check_row(u_i40, {1.417, 18.828, 2.515, 2.015, 2.072}, 0.20, "upper I n=40");
  check_row(u_ii10, {1.626, 2.091, 1.385, 1.365, 1.245}, 0.15, "upper II n=10");
  check_row(u_ii40, {1.629, 2.920, 1.595, 1.516, 1.393}, 0.15, "upper II n=40");

  check_row(d_i10, {2.457, 3.957, 2.808, 2.741}, 0.15, "disk I n=10");
  check_row(d_i40, {2.471, 7.235, 3.884, 3.447}, 0.20, "disk I n=40");
  check_row(d_ii10, {2.413, 2.649, 2.362, 2.359}, 0.15, "disk II n=10");
  check_row(d_ii40, {2.403, 2.857, 2.463, 2.411}, 0.15, "disk II n=40");

  check_row(g_i10, {1.845, 3.315, 2.052}, 0.15, "union I n=10");
  check_row(g_i40, {1.846, 6.292, 2.884}, 0.20, "union I n=40");
  check_row(g_ii10, {1.845, 2.072, 1.633}, 0.15, "union II n=10");
  check_row(g_ii40, {1.854, 2.360, 1.795}, 0.15, "union II n=40");

  // Ordering claims, exact at the median level.
  for (const BenchTable* t : {&u_i10, &u_i40, &u_ii10, &u_ii40}) {
    const double ek = median_for(*t, "ek");
    for (const char* m : {"cauchy", "thm32", "thm33-1", "thm33-2"}) {
      expect(median_for(*t, m) <= ek, "ek median worst in " + t->statistic);
    }
  }
  for (const BenchTable* t : {&u_ii10, &u_ii40}) {
    const double best = median_for(*t, "thm33-2");
    for (const char* m : {"cauchy", "ek", "thm32", "thm33-1"}) {
      expect(best <= median_for(*t, m), "thm33-2 best for class II");
    }
  }
  for (const BenchTable* t : {&d_i10, &d_i40, &d_ii10, &d_ii40}) {
    expect(median_for(*t, "cor41") <= median_for(*t, "thm41"), "cor41 <= thm41 medians");
    expect(median_for(*t, "thm43") <= median_for(*t, "thm41"), "thm43 <= thm41 medians");
  }
  for (const BenchTable* t : {&g_ii10, &g_ii40}) {
    expect(median_for(*t, "cor51") <= median_for(*t, "thm51"), "cor51 <= thm51 for class II");
  }
  // Class I: the ek/cauchy gap widens with the degree.
  expect(median_for(u_i40, "ek") / median_for(u_i40, "cauchy") >
             median_for(u_i10, "ek") / median_for(u_i10, "cauchy"),
         "class I ek-vs-cauchy gap widens from n=10 to n=40");

  expect(c.seconds() < 300.0, "criterion 3 runtime below 5 min");
}

void criterion5() {
  Criterion c(5, "determinism: full bench identical for different worker counts");
  const FullBench again = run_full_bench(1000, 20260810ULL, 5);
  expect(!g_csv_first_run.empty() && again.csv == g_csv_first_run,
         "byte-identical CSV for workers 2 vs 5");
}

// --- criterion 4: property suites --------------------------------------------

void criterion4() {
  Criterion c(4, "property suites");
  std::mt19937_64 rng(0xEC0);

  // reverse involution (exact)
  for (int t = 0; t < 200; ++t) {
    const Polynomial p = testutil::random_poly(rng, 1 + int(rng() % 20), 0.0, 10.0);
    expect(reverse(reverse(p)).coeffs() == p.coeffs(), "reverse involution");
  }

  // convolution point-check at 1e-12
  std::uniform_real_distribution<double> gdist(-3.0, 3.0), tdist(-2.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const Polynomial p = testutil::random_poly(rng, 1 + int(rng() % 10), 0.0, 10.0);
    Vec g(1 + int(rng() % 4));
    for (Eigen::Index j = 0; j < g.size(); ++j) g(j) = gdist(rng);
    const MultiplierSpec m(g);
    const SignedPolynomial q = multiply(p, m);
    const double x = tdist(rng);
    const double direct = evaluate(m.full_coeffs(), x) * evaluate(p.coeffs(), x);
    expect(std::abs(evaluate(q.coeffs(), x) - direct) <=
               1e-12 * std::max(1.0, std::abs(direct)),
           "convolution point check");
  }

  // Cauchy radius sign witness
  std::uniform_real_distribution<double> cdist(-5.0, 5.0);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + int(rng() % 12);
    Vec coeffs(n + 1);
    for (Eigen::Index j = 0; j <= n; ++j) coeffs(j) = cdist(rng);
    if (coeffs(n) == 0.0) coeffs(n) = 1.0;
    const int k = 1 + int(rng() % n);
    if (coeffs.head(n - k + 1).cwiseAbs().maxCoeff() == 0.0) continue;
    const double sk = cauchy_radius(coeffs, k).value;
    expect(cauchy_lhs(coeffs, k, 0.999 * sk) < 0.0 && cauchy_lhs(coeffs, k, 1.001 * sk) > 0.0,
           "cauchy radius sign witness");
  }

  // unique_positive_root vs oracle at 1e-10
  std::uniform_real_distribution<double> pos(0.01, 5.0);
  for (int t = 0; t < 100; ++t) {
    Vec g(2 + int(rng() % 3));
    for (Eigen::Index j = 0; j < g.size(); ++j) g(j) = pos(rng);
    const MultiplierSpec m(g);
    const double root = unique_positive_root(m);
    const RootSet rs = all_roots(m.full_coeffs());
    double oracle = -1.0;
    for (Eigen::Index i = 0; i < rs.roots.size(); ++i) {
      if (std::abs(rs.roots(i).imag()) < 1e-8 && rs.roots(i).real() > 0.0) {
        oracle = rs.roots(i).real();
      }
    }
    expect(oracle > 0.0 && std::abs(root - oracle) <= 1e-10 * oracle,
           "unique_positive_root vs oracle");
  }

  // radius orderings
  std::uniform_real_distribution<double> epsd(0.05, 1.0);
  for (int t = 0; t < 150; ++t) {
    const Polynomial p = testutil::random_poly(rng, 4 + int(rng() % 10), t % 2 ? 1.0 : 0.0,
                                               t % 2 ? 5.0 : 10.0);
    const double eps = epsd(rng);
    expect(thm51_region(p).inclusion[0].radius <=
               thm41_disks(p).inclusion[0].radius * (1 + 1e-9),
           "thm51 radius <= thm41 radius");
    expect(thm52_region(p, eps).inclusion[0].radius <=
               thm42_disks(p, eps).inclusion[0].radius * (1 + 1e-9),
           "thm52 radius <= thm42 radius");
    expect(thm61_region(p, 1.0).inclusion[0].radius <=
               thm53_region(p).inclusion[0].radius * (1 + 1e-9),
           "thm61(1) radius <= thm53 radius");
  }

  // eps -> 0+ reductions at 1e-6, eps = 1 equalities exact
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = testutil::random_poly(rng, 4 + int(rng() % 8), 1.0, 5.0);
    const double cubic_upper = thm33_bounds(p, 2).upper;
    const RegionReport a = thm42_disks(p, 1e-9);
    expect(std::abs(std::abs(a.inclusion[0].center) + a.inclusion[0].radius - cubic_upper) <=
               1e-6,
           "thm42 eps->0 reduction");
    expect(std::abs(thm52_region(p, 1e-9).inclusion[0].radius - cubic_upper) <= 1e-6,
           "thm52 eps->0 reduction");
    expect(std::abs(thm61_region(p, 1e-9).inclusion[0].radius -
                    thm52_region(p, 1.0).inclusion[0].radius) <= 1e-6,
           "thm61 eps->0 reduction");

    expect(thm42_disks(p, 1.0).inclusion[0].radius == cor41_disks(p).inclusion[0].radius &&
               thm42_disks(p, 1.0).exclusion[0].radius == cor41_disks(p).exclusion[0].radius,
           "thm42(1) == cor41 exactly");
    expect(thm52_region(p, 1.0).inclusion[0].radius == cor51_region(p).inclusion[0].radius,
           "thm52(1) == cor51 exactly");
    expect(thm61_region(p, 1.0).inclusion[0].radius == cor61_region(p).inclusion[0].radius,
           "thm61(1) == cor61 exactly");
  }

  // Lemma boundary characterization at 1e-9
  std::uniform_real_distribution<double> adist(0.1, 4.0), ang(0.0, 6.283185307179586);
  for (int t = 0; t < 40; ++t) {
    const Complex a(adist(rng), cdist(rng));
    const double R = 1.0 / std::abs(a) + adist(rng);
    const Disk d = recip_exterior(a, R);
    for (int s = 0; s < 25; ++s) {
      const double th = ang(rng);
      const Complex z = d.center + d.radius * Complex(std::cos(th), std::sin(th));
      const double lhs = std::abs(z + a), rhs = std::abs(a) * R * std::abs(z);
      expect(std::abs(lhs - rhs) <= 1e-9 * (lhs + rhs + 1.0), "recip boundary characterization");
    }
  }

  // thm53 disjoint-case structure
  {
    const Polynomial p = make_polynomial({1, 1, 1, 100, 1});
    const RegionReport r = thm53_region(p);
    expect(r.disjoint[0][1], "thm53 split case is disjoint");
    expect(r.inclusion[1].center.real() < r.inclusion[0].center.real() &&
               r.inclusion[0].center.real() < 0.0,
           "thm53 c2 < c1 < 0");
    expect(contains(r.inclusion[0], Complex(0.0)), "thm53 origin inside the c1 disk");
    expect(r.counts.has_value() && testutil::region_sound(r, all_roots(p)),
           "thm53 counts verified");
  }
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  if (g_failures > 0) {
    std::printf("%d acceptance check(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
