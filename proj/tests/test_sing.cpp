#include <gtest/gtest.h>

#include <random>

#include "brauer/local_algebra.hpp"
#include "brauer/sing.hpp"
#include "test_util.hpp"

using namespace brauer;

namespace {

std::vector<Variable> xyz() { return {{"x", 1}, {"y", 1}, {"z", 1}}; }

FqPoly local(const std::string& text, std::uint64_t p = 31) {
  return reduce_mod(parse_poly(text, xyz()), FiniteField::get(p, 1));
}

struct NormalForm {
  std::string f;
  std::string type;
};

const std::vector<NormalForm>& normal_forms() {
  static const std::vector<NormalForm> forms{
      {"x^2 + y^2 + z^2", "A1"},      {"x*y + z^3", "A2"},           {"x^2 + y^2 + z^4", "A3"},
      {"x*y + z^5", "A4"},            {"x^2 + y^2 + z^6", "A5"},     {"x*y + z^7", "A6"},
      {"x^2 + y^2*z + z^3", "D4"},    {"x^2 + y^2*z + z^4", "D5"},   {"x^2 + y^2*z + z^5", "D6"},
      {"x^2 + y^2*z + z^6", "D7"},    {"x^2 + y^3 + z^4", "E6"},     {"x^2 + y^3 + y*z^3", "E7"},
      {"x^2 + y^3 + z^5", "E8"},      {"x^2 + y^3 - z^3", "D4"},     {"x^2 + y*z*(y + z)", "D4"},
  };
  return forms;
}

// f(A v) for a random invertible matrix A.
FqPoly random_linear_change(const FqPoly& f, std::mt19937_64& rng) {
  const FiniteField& F = FiniteField::get(31, 1);
  while (true) {
    std::vector<std::vector<FqElem>> A(3, std::vector<FqElem>(3));
    for (auto& row : A) {
      for (auto& a : row) a = FqElem(F, rng() % 31);
    }
    if (matrix_rank(A) < 3) continue;
    std::vector<FqPoly> images;
    for (const auto& row : A) {
      FqPoly l(f.variables());
      for (std::size_t j = 0; j < 3; ++j) l = l + FqPoly::variable(f.variables(), j, FqElem::one(F)).scaled(row[j]);
      images.push_back(l);
    }
    return f.compose(images);
  }
}

}  // namespace

TEST(Ade, NormalFormsAreClassified) {
  for (const auto& nf : normal_forms()) EXPECT_EQ(classify_ade(local(nf.f)).label(), nf.type) << nf.f;
}

// The type is an invariant of the singularity: it survives linear changes of
// coordinates and perturbations of order above mu + 1 (finite determinacy).
TEST(Ade, TypeIsInvariantUnderCoordinateChangeAndHighOrderTerms) {
  std::mt19937_64 rng(11);
  const FiniteField& F = FiniteField::get(31, 1);
  for (const auto& nf : normal_forms()) {
    const FqPoly f = local(nf.f);
    const auto mu = milnor_number(f);
    ASSERT_TRUE(mu.has_value());
    for (int trial = 0; trial < 8; ++trial) {
      FqPoly g = random_linear_change(f, rng);
      const std::uint32_t d = static_cast<std::uint32_t>(mu->mu) + 2;
      g.add_term({d, 0, 0}, FqElem(F, 1 + rng() % 30));
      g.add_term({1, d - 1, 1}, FqElem(F, 1 + rng() % 30));
      EXPECT_EQ(classify_ade(g).label(), nf.type) << nf.f << " trial " << trial;
      EXPECT_EQ(milnor_number(g)->mu, mu->mu);
    }
  }
}

TEST(Ade, MilnorNumberAgreesWithIndex) {
  for (const auto& nf : normal_forms()) {
    const AdeType t = classify_ade(local(nf.f));
    EXPECT_EQ(milnor_number(local(nf.f))->mu, static_cast<std::uint64_t>(t.index)) << nf.f;
  }
}

TEST(Ade, NonSimpleSingularitiesAreRejected) {
  for (const std::string f : {"x^3 + y^3 + z^3", "x^2 + y^4 + z^4", "x^2 + y^3 + z^6"}) {
    try {
      classify_ade(local(f));
      FAIL() << f;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NotADE) << f;
    }
  }
}

TEST(Ade, SmallCharacteristicIsUnsupported) {
  try {
    classify_ade(local("x*y + z^3", 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedCharacteristic);
  }
}

TEST(Ade, HessianCorank) {
  EXPECT_EQ(hessian_corank(local("x^2 + y^2 + z^2")), 0u);
  EXPECT_EQ(hessian_corank(local("x*y + z^5")), 1u);
  EXPECT_EQ(hessian_corank(local("x^2 + y^3 + z^4")), 2u);
  EXPECT_EQ(hessian_corank(local("x^3 + y^3 + z^3")), 3u);
}

TEST(Ade, LabelsParseAndValidate) {
  EXPECT_EQ(AdeType::parse("D5"), AdeType::make('D', 5));
  EXPECT_THROW(AdeType::make('D', 3), Error);
  EXPECT_THROW(AdeType::make('E', 9), Error);
  EXPECT_THROW(AdeType::parse("B2"), Error);
  EXPECT_EQ(SingularityType::canonical_label("A3+2A1"), "2A1+A3");
  EXPECT_EQ(SingularityType::canonical_label("A4 + A4"), "2A4");
  EXPECT_EQ(SingularityType::label_of({AdeType::make('A', 2), AdeType::make('A', 2), AdeType::make('A', 2)}), "3A2");
}

TEST(SingularityType, DelPezzoDegreeOneFibre) {
  const SingularityType t = singularity_type(test::load_model("dp1_f11").model);
  EXPECT_EQ(t.label(), "2A4");
  EXPECT_TRUE(t.complete);
  for (const auto& p : t.points) EXPECT_EQ(p.milnor, 4u);
}

TEST(SingularityType, CubicWithThreeA2Points) {
  const SingularityType t = singularity_type(test::load_model("dp3_3a2").model);
  EXPECT_EQ(t.label(), "3A2");
  EXPECT_EQ(t.points.size(), 3u);
}

TEST(SingularityType, SmoothQuadric) {
  const SingularityType t = singularity_type(test::load_model("quadric_f5").model);
  EXPECT_TRUE(t.is_smooth());
  EXPECT_EQ(t.label(), "");
}

TEST(SingularityType, ConjugatePointsOverTheQuadraticExtension) {
  // A cubic in the square of the ideal (X1^2 - 3 X0^2, X2, X3): it is singular at
  // the two points (1 : ±sqrt(3) : 0 : 0), conjugate over F_7 since 3 is not a square.
  const AmbientSpace A = AmbientSpace::projective({"X0", "X1", "X2", "X3"});
  const IntPoly f = parse_poly("(X1^2 - 3*X0^2)*X2 + X3^2*X0 + X2*X3*X1 + X3^3 + X2^3 + 7*X0^3", A.variables());
  const ModelSpec M = ModelSpec::make("conjugate nodes", A, {f}, 7);
  const SingularityType t = singularity_type(M, 2);
  EXPECT_EQ(t.label(), "2A1");
  for (const auto& P : t.points) {
    EXPECT_EQ(P.point.field_of_definition, 2u);
    EXPECT_TRUE(P.point.coords[2].is_zero() && P.point.coords[3].is_zero());
    const FqElem y = P.point.coords[1];
    EXPECT_EQ(y * y, FqElem::from_int(y.field(), 3));
  }
  EXPECT_TRUE(singularity_type(M, 1).is_smooth());
}

TEST(Groups, InvariantFactorForm) {
  EXPECT_EQ(GroupDescriptor::from_cyclic_orders({2, 3}).str(), "Z/6");
  EXPECT_EQ(GroupDescriptor::from_cyclic_orders({5, 5}).str(), "(Z/5)^2");
  EXPECT_EQ(GroupDescriptor::from_cyclic_orders({4, 2}).str(), "Z/2 x Z/4");
  EXPECT_EQ(GroupDescriptor::from_cyclic_orders({1, 1}).str(), "0");
  EXPECT_EQ(GroupDescriptor::from_cyclic_orders({6, 4}), GroupDescriptor::from_cyclic_orders({2, 12}));
  EXPECT_EQ(GroupDescriptor::parse("2,2").order(), 4);
  EXPECT_TRUE(GroupDescriptor::parse("1").is_trivial());
}

TEST(BrauerTable, DelPezzoRows) {
  const BrauerTable& T = BrauerTable::builtin();
  const auto& e = T.lookup(1, "2A4");
  EXPECT_EQ(e.br_bar.str(), "Z/5");
  EXPECT_EQ(e.h1.str(), "Z/5");
  ASSERT_TRUE(e.br_nr.has_value());
  EXPECT_EQ(e.br_nr->str(), "(Z/5)^2");
  EXPECT_EQ(T.lookup(3, "3A2").br_nr->str(), "(Z/3)^2");
  EXPECT_EQ(T.lookup(4, "A3+2A1").br_nr->str(), "(Z/2)^2");
  // Singular quartic del Pezzo surfaces not listed have trivial groups.
  EXPECT_TRUE(T.lookup(4, "A1").br_nr->is_trivial());
}

TEST(BrauerTable, MissesAreReported) {
  const BrauerTable& T = BrauerTable::builtin();
  for (const auto& [d, type] : std::vector<std::pair<int, std::string>>{{1, "A1"}, {3, ""}, {2, "A1"}}) {
    try {
      T.lookup(d, type);
      FAIL() << d << " " << type;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::TableMiss);
    }
  }
}

// 0 -> Br_bar -> Br_nr -> H1 -> 0 forces |Br_nr| = |Br_bar| |H1|.
TEST(BrauerTable, ExactnessOnResolvedRows) {
  std::size_t resolved = 0;
  for (const auto& row : BrauerTable::builtin().rows()) {
    if (!row.br_nr) continue;
    ++resolved;
    EXPECT_EQ(row.br_bar.order() * row.h1.order(), row.br_nr->order()) << row.degree << " " << row.type;
  }
  EXPECT_GT(resolved, 5u);
}

TEST(BrauerTable, ParsesUserTables) {
  const BrauerTable T = BrauerTable::parse("# comment\n2 | A1+A3 | 2 | 2 | ?\n2 | * | 1 | 1 | 1\n");
  EXPECT_FALSE(T.lookup(2, "A3+A1").br_nr.has_value());
  EXPECT_TRUE(T.lookup(2, "D4").br_bar.is_trivial());
  EXPECT_THROW(BrauerTable::parse("2 | A1 | 2 | 2\n"), Error);
}
