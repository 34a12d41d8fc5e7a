#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "brauer/cache.hpp"
#include "brauer/model.hpp"
#include "brauer/model_file.hpp"
#include "test_util.hpp"

using namespace brauer;

namespace {

struct BruteCount {
  std::uint64_t points = 0;
  std::uint64_t smooth = 0;
};

// Counts orbits of nonzero solutions with some weight-1 coordinate nonzero by
// running over the whole affine cone; the scaling action is free there, so
// each orbit has q - 1 elements. A point is singular when every partial
// derivative vanishes (Euler's relation, p not dividing the degree).
BruteCount brute_force(const ModelSpec& M, unsigned k) {
  const FiniteField& F = FiniteField::get(M.p, k);
  const FqPoly f = reduce_mod(M.equations.front(), F);
  std::vector<FqPoly> partials;
  for (std::size_t i = 0; i < f.arity(); ++i) partials.push_back(f.derivative(i));
  const auto chart = M.ambient.weight_one_indices();
  const std::size_t n = M.ambient.size();
  std::vector<std::uint64_t> idx(n, 0);
  BruteCount c;
  std::vector<FqElem> pt(n, FqElem::zero(F));
  while (true) {
    bool on_chart = false;
    for (auto i : chart) on_chart = on_chart || idx[i] != 0;
    if (on_chart) {
      for (std::size_t i = 0; i < n; ++i) pt[i] = FqElem(F, idx[i]);
      if (f.evaluate(pt).is_zero()) {
        ++c.points;
        bool smooth = false;
        for (const auto& d : partials) smooth = smooth || !d.evaluate(pt).is_zero();
        c.smooth += smooth;
      }
    }
    std::size_t j = 0;
    while (j < n && ++idx[j] == F.order()) idx[j++] = 0;
    if (j == n) break;
  }
  c.points /= F.order() - 1;
  c.smooth /= F.order() - 1;
  return c;
}

ModelSpec quartic() { return test::load_model("quartic_f17").model; }
ModelSpec dp1() { return test::load_model("dp1_f11").model; }

ModelSpec hypersurface(const std::string& eq, std::uint64_t p) {
  const AmbientSpace A = AmbientSpace::projective({"X0", "X1", "X2", "X3"});
  return ModelSpec::make("test", A, {parse_poly(eq, A.variables())}, p);
}

}  // namespace

TEST(Model, ValidatesInput) {
  const AmbientSpace A = AmbientSpace::projective({"X0", "X1", "X2", "X3"});
  const auto& v = A.variables();
  EXPECT_THROW(ModelSpec::make("m", A, {parse_poly("X0^2 + X1", v)}, 5), Error);
  EXPECT_THROW(ModelSpec::make("m", A, {parse_poly("X0^2 + X1^2", v)}, 6), Error);
  EXPECT_THROW(ModelSpec::make("m", A, {parse_poly("5*X0^2 + 10*X1^2", v)}, 5), Error);
  EXPECT_NO_THROW(ModelSpec::make("m", A, {parse_poly("5*X0^2 + X1*X2", v)}, 5));
}

TEST(Model, HashIsStableAndDistinguishesPrimes) {
  EXPECT_EQ(quartic().hash(), quartic().hash());
  EXPECT_NE(hypersurface("X0^2 + X1*X2 - X3^2", 5).hash(), hypersurface("X0^2 + X1*X2 - X3^2", 7).hash());
}

TEST(Model, QuarticConeCountsMatchBruteForce) {
  const ModelSpec M = quartic();
  const BruteCount b = brute_force(M, 1);
  EXPECT_EQ(count_points(M, 1, false), b.points);
  EXPECT_EQ(count_points(M, 1, true), b.smooth);
  EXPECT_EQ(b.points, 205u);
  EXPECT_EQ(b.smooth, 204u);
}

TEST(Model, QuarticBaseCurveHasTwelvePoints) {
  const ModelSpec C = cone_base(quartic());
  EXPECT_EQ(C.ambient.size(), 3u);
  EXPECT_EQ(count_points(C, 1, false), 12u);
  EXPECT_EQ(count_points(C, 1, true), 12u);
  // The cone over a curve with c points has 1 + q c points.
  EXPECT_EQ(count_points(quartic(), 1, false), 1 + 17 * 12u);
}

TEST(Model, ConeCountOverQuadraticExtension) {
  const ModelSpec M = quartic();
  const ModelSpec C = cone_base(M);
  const std::uint64_t c = brute_force(C, 2).points;
  EXPECT_EQ(count_points(C, 2, false), c);
  EXPECT_EQ(count_points(M, 2, false), 1 + 289 * c);
}

TEST(Model, ApexVariablesIgnorePDivisibleTerms) {
  EXPECT_EQ(apex_variables(quartic()), std::vector<std::size_t>{3});
  EXPECT_TRUE(apex_variables(hypersurface("X0^2 + X1*X2 - X3^2", 5)).empty());
}

TEST(Model, SmallSurfacesMatchBruteForce) {
  for (const auto& [eq, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"X0*X1 - X2*X3", 5},
           {"X0^2 + X1^2 + X2^2 - X3^2", 7},
           {"X0*X1*X2 - X3^3 + 7*X0^3", 7},
           {"X0^3 + X1^3 + X2^3 + 3*X3^3", 5},
           {"X0^2*X1 + X1^2*X2 + X2^2*X3 + X3^2*X0", 3}}) {
    const ModelSpec M = hypersurface(eq, p);
    const BruteCount b = brute_force(M, 1);
    EXPECT_EQ(count_points(M, 1, false), b.points) << eq;
    EXPECT_EQ(count_points(M, 1, true), b.smooth) << eq;
  }
}

TEST(Model, WeightedDelPezzoMatchesBruteForce) {
  const ModelSpec M = dp1();
  const BruteCount b = brute_force(M, 1);
  EnumerationStats stats;
  EXPECT_EQ(count_points(M, 1, false, kDefaultBudget, &stats), b.points);
  EXPECT_EQ(count_points(M, 1, true), b.smooth);
  EXPECT_EQ(b.points - b.smooth, 2u);
  // (0:0:1:1) lies off the weight-1 charts and is skipped.
  EXPECT_TRUE(stats.off_chart_present);
}

TEST(Model, EnumerationVisitsEachPointOnce) {
  const ModelSpec M = dp1();
  const auto pts = enumerate_points(M, 1, false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_TRUE(lies_on_fibre(M, pts[i]));
    for (std::size_t j = i + 1; j < pts.size(); ++j) EXPECT_FALSE(same_point(M.ambient, pts[i].coords, pts[j].coords));
  }
}

TEST(Model, FieldOfDefinitionOfExtensionPoints) {
  const ModelSpec C = cone_base(quartic());
  std::uint64_t rational = 0;
  for (const auto& P : enumerate_points(C, 2, false)) rational += P.field_of_definition == 1;
  EXPECT_EQ(rational, 12u);
}

TEST(Model, WeightedPointsNormaliseUpToScaling) {
  const ModelSpec M = dp1();
  const FiniteField& F = FiniteField::get(11, 1);
  // (-1, 1, 5, 0) and (1, -1, 5, 0) are the same point of P(1,1,2,3).
  EXPECT_TRUE(same_point(M.ambient, test::elems(F, {-1, 1, 5, 0}), test::elems(F, {1, -1, 5, 0})));
  EXPECT_FALSE(same_point(M.ambient, test::elems(F, {1, 1, 5, 0}), test::elems(F, {-1, 1, 5, 0})));
  EXPECT_THROW(normalize_point(M.ambient, test::elems(F, {0, 0, 1, 1})), Error);
}

TEST(Model, SingularPointsOfTheDelPezzoFibre) {
  const ModelSpec M = dp1();
  const FiniteField& F = FiniteField::get(11, 1);
  const SingularPointSearch s = find_singular_points(M, 2);
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_TRUE(s.complete);
  const auto plus = test::elems(F, {1, 1, 5, 0});
  const auto minus = test::elems(F, {-1, 1, 5, 0});
  const bool first_plus = same_point(M.ambient, s.points[0].coords, plus);
  EXPECT_TRUE(same_point(M.ambient, s.points[first_plus ? 0 : 1].coords, plus));
  EXPECT_TRUE(same_point(M.ambient, s.points[first_plus ? 1 : 0].coords, minus));
  for (const auto& P : s.points) {
    EXPECT_EQ(P.field_of_definition, 1u);
    EXPECT_TRUE(regularity_check(M, P));
  }
}

TEST(Model, RegularityDetectsSingularTotalSpace) {
  // X0 X1 - X2^2 + 25 X3^2: the vertex has F/p = 5 X3^2, zero mod 5.
  const ModelSpec bad = hypersurface("X0*X1 - X2^2 + 25*X3^2", 5);
  const ModelSpec good = hypersurface("X0*X1 - X2^2 + 5*X3^2", 5);
  const FiniteField& F = FiniteField::get(5, 1);
  const FibrePoint vertex = normalize_point(bad.ambient, test::elems(F, {0, 0, 0, 1}));
  EXPECT_FALSE(regularity_check(bad, vertex));
  EXPECT_TRUE(regularity_check(good, vertex));
}

TEST(Model, NonIsolatedSingularLocusIsRejected) {
  EXPECT_THROW(find_singular_points(hypersurface("X0*X1 + 5*X2^2 + 5*X3^2", 5), 1), Error);
}

TEST(Model, BudgetIsEnforced) {
  try {
    count_points(quartic(), 2, false, 1000);
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(ModelFile, ParsesSectionsAndAlgebras) {
  const ModelFile f = test::load_model("quartic_f17");
  EXPECT_EQ(f.model.p, 17u);
  EXPECT_EQ(f.model.label, "quartic_f17");
  ASSERT_EQ(f.algebras.size(), 1u);
  EXPECT_EQ(f.algebras[0].n, 2u);
  EXPECT_EQ(f.algebras[0].alternatives.size(), 1u);
  EXPECT_EQ(test::load_model("dp1_f11").dp_degree, 1);
}

TEST(ModelFile, RejectsMalformedInput) {
  const std::string base = "[ambient]\nvars = X0, X1, X2\n[equation]\nexpr = X0^2 + X1*X2\n";
  EXPECT_NO_THROW(parse_model_file(base + "[arith]\np = 5\n"));
  EXPECT_THROW(parse_model_file(base), Error);                                   // no prime
  EXPECT_THROW(parse_model_file(base + "[arith]\np = 5\n[extra]\nx = 1\n"), Error);  // unknown section
  EXPECT_THROW(parse_model_file(base + "[arith]\np = 5\n[algebra]\na = 5\n"), Error);  // no f_num
  EXPECT_THROW(parse_model_file("[ambient]\nvars = x, y\nweights = 1\n[equation]\nexpr = x\n[arith]\np = 5\n"), Error);
}

TEST(ModelFile, RationalsAndRatios) {
  EXPECT_EQ(parse_rational("-3/4"), (std::pair<BigInt, BigInt>{-3, 4}));
  const std::vector<Variable> v{{"X0", 1}, {"X1", 1}};
  const auto [n, d] = parse_ratio("(X0 + X1)/X1", v);
  EXPECT_EQ(to_string(n), "X0 + X1");
  EXPECT_EQ(to_string(d), "X1");
}

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("brauer-cache-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CacheTest, RoundTripsThroughTheFile) {
  const auto path = dir_ / "counts.txt";
  {
    PointCountCache c = PointCountCache::open(path);
    EXPECT_EQ(c.size(), 0u);
    c.put(42, 17, true, 204);
  }
  PointCountCache c = PointCountCache::open(path);
  EXPECT_EQ(c.get(42, 17, true), 204u);
  EXPECT_FALSE(c.get(42, 17, false).has_value());
}

TEST_F(CacheTest, ComputesOnceThenHits) {
  PointCountCache c = PointCountCache::open(dir_ / "counts.txt");
  bool hit = true;
  EXPECT_EQ(c.get_or_compute(quartic(), 1, false, kDefaultBudget, &hit), 205u);
  EXPECT_FALSE(hit);
  EXPECT_EQ(c.get_or_compute(quartic(), 1, false, kDefaultBudget, &hit), 205u);
  EXPECT_TRUE(hit);
}

TEST_F(CacheTest, MalformedFileIsReported) {
  const auto path = dir_ / "bad.txt";
  std::ofstream(path) << "# brauer-local point-count cache v1\nnot a record\n";
  try {
    PointCountCache::open(path);
    FAIL() << "expected CacheError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Cache);
  }
  bool reset = false;
  const PointCountCache c = PointCountCache::open_or_reset(path, &reset);
  EXPECT_TRUE(reset);
  EXPECT_EQ(c.size(), 0u);
  EXPECT_NO_THROW(PointCountCache::open(path));
}
