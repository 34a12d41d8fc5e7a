#include <gtest/gtest.h>

#include <algorithm>

#include "brauer/report.hpp"
#include "brauer/verdict.hpp"
#include "test_util.hpp"

using namespace brauer;

namespace {

VerdictRequest diagonal(const std::string& family, std::vector<BigInt> coeffs) {
  VerdictRequest r;
  r.family = family;
  r.coefficients = std::move(coeffs);
  return r;
}

const ConditionCheck& condition(const VerdictReport& r, const std::string& name) {
  const auto it = std::find_if(r.conditions.begin(), r.conditions.end(),
                               [&](const ConditionCheck& c) { return c.name == name; });
  if (it == r.conditions.end()) throw std::runtime_error("missing condition " + name);
  return *it;
}

bool mentions(const std::vector<std::string>& notes, const std::string& text) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& s) { return s.find(text) != std::string::npos; });
}

}  // namespace

TEST(Verdict, QuarticOverF17IsALocalWitness) {
  VerdictRequest req = diagonal("diagonal-quartic", {1, 47, -103, BigInt(-17) * 47 * 103});
  req.prime = 17;
  req.model = test::load_model("quartic_f17");
  req.trivial_elsewhere = true;
  const VerdictReport r = run_verdict(req);
  EXPECT_EQ(r.candidate_primes, std::vector<std::uint64_t>{17});
  EXPECT_TRUE(condition(r, "regular model at p").holds);
  EXPECT_TRUE(condition(r, "special fibre is a cone over a smooth curve").holds);
  EXPECT_EQ(condition(r, "p does not divide N").basis, "literature bound");
  EXPECT_FALSE(condition(r, "residue field above the cone bound").holds);
  ASSERT_TRUE(r.direct_evaluation.has_value());
  EXPECT_EQ(*r.direct_evaluation, "image over F_17 = {1/2} (constant)");
  EXPECT_EQ(r.verdict, Verdict::LocalObstructionWitness);

  req.trivial_elsewhere = false;
  const VerdictReport s = run_verdict(req);
  EXPECT_EQ(s.verdict, Verdict::Inconclusive);
  EXPECT_TRUE(mentions(s.notes, "--trivial-elsewhere"));
}

TEST(Verdict, AssumedBrauerOrderPassesTheBoundAt1009) {
  VerdictRequest req = diagonal("diagonal-quartic", {1, 2, 3, 1009});
  req.assume_br_order = 2;
  const VerdictReport r = run_verdict(req);
  EXPECT_EQ(r.candidate_primes, (std::vector<std::uint64_t>{3, 1009}));
  EXPECT_EQ(r.prime, 1009u);
  EXPECT_EQ(r.assumed_br_order, 2);
  EXPECT_EQ(condition(r, "p does not divide N").basis, "assumed");
  EXPECT_TRUE(condition(r, "residue field above the cone bound").holds);
  EXPECT_EQ(r.verdict, Verdict::NoObstructionViaProlific);
  EXPECT_TRUE(mentions(r.notes, "ASSUMED"));

  // the same surface against the published bound
  req.assume_br_order.reset();
  const VerdictReport honest = run_verdict(req);
  EXPECT_FALSE(condition(honest, "residue field above the cone bound").holds);
  EXPECT_EQ(honest.verdict, Verdict::Inconclusive);

  // 97 < 98 fails the N = 2 bound, 101 passes it
  for (const auto& [p, holds] : std::vector<std::pair<std::uint64_t, bool>>{{97, false}, {101, true}}) {
    VerdictRequest q = diagonal("diagonal-quartic", {1, 2, 3, BigInt(p)});
    q.assume_br_order = 2;
    const VerdictReport v = run_verdict(q);
    EXPECT_EQ(condition(v, "residue field above the cone bound").holds, holds) << p;
  }

  req.assume_br_order = 1009;
  EXPECT_FALSE(condition(run_verdict(req), "p does not divide N").holds);
}

TEST(Verdict, QuarticNeedsAnOddPrimeOfValuationOne) {
  const VerdictReport r = run_verdict(diagonal("diagonal-quartic", {1, 1, 1, 9}));
  EXPECT_TRUE(r.candidate_primes.empty());
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);
  VerdictRequest req = diagonal("diagonal-quartic", {1, 1, 1, 9});
  req.prime = 3;
  req.assume_br_order = 2;
  const VerdictReport s = run_verdict(req);
  EXPECT_FALSE(condition(s, "v_p(a0a1a2a3) = 1").holds);
  EXPECT_EQ(s.verdict, Verdict::Inconclusive);
}

TEST(Verdict, DiagonalCubics) {
  const VerdictReport r = run_verdict(diagonal("diagonal-cubic", {1, 1, 1, 14}));
  EXPECT_EQ(r.candidate_primes, (std::vector<std::uint64_t>{2, 7}));
  EXPECT_EQ(r.prime, 2u);
  // genus-1 base: the bound is vacuous
  EXPECT_TRUE(condition(r, "residue field above the cone bound").holds);
  EXPECT_EQ(r.verdict, Verdict::NoObstructionViaProlific);

  VerdictRequest req = diagonal("diagonal-cubic", {1, 1, 1, 3});
  req.prime = 3;
  const VerdictReport s = run_verdict(req);
  EXPECT_FALSE(condition(s, "p does not divide 3").holds);
  EXPECT_EQ(s.verdict, Verdict::Inconclusive);
}

TEST(Verdict, ConeCubics) {
  VerdictRequest req;
  req.family = "cone-cubic";
  req.prime = 7;
  req.cone_f = "X0^3 + X1^3 + X2^3";
  req.cone_g = "X3^3 + X0*X1*X2";
  EXPECT_EQ(run_verdict(req).verdict, Verdict::NoObstructionViaProlific);

  // a nodal base curve
  req.cone_f = "X0*X1*X2 + X0^3 + X1^3";
  const VerdictReport nodal = run_verdict(req);
  EXPECT_FALSE(condition(nodal, "special fibre is a cone over a smooth curve").holds);
  EXPECT_EQ(nodal.verdict, Verdict::Inconclusive);

  // p | g(0,0,0,1): the vertex is not a regular point of the model
  req.cone_f = "X0^3 + X1^3 + X2^3";
  req.cone_g = "7*X3^3 + X0^2*X3";
  const VerdictReport irregular = run_verdict(req);
  EXPECT_FALSE(condition(irregular, "regular model at p").holds);
  EXPECT_EQ(irregular.verdict, Verdict::Inconclusive);

  req.cone_f = "X0^3 + X3^3";
  EXPECT_THROW(run_verdict(req), Error);
}

TEST(Verdict, CustomModels) {
  VerdictRequest req;
  req.family = "custom";
  req.model = test::load_model("quartic_f17");
  req.assume_br_order = 2;
  const VerdictReport r = run_verdict(req);
  EXPECT_TRUE(condition(r, "special fibre is a cone over a plane curve").holds);
  EXPECT_TRUE(condition(r, "base curve smooth").holds);
  EXPECT_TRUE(condition(r, "regular model at p").holds);
  // 17 < 98
  EXPECT_FALSE(condition(r, "residue field above the cone bound").holds);
  EXPECT_EQ(r.verdict, Verdict::Inconclusive);

  req.assume_br_order.reset();
  EXPECT_FALSE(condition(run_verdict(req), "p does not divide N").holds);
}

TEST(Verdict, BadRequests) {
  for (const VerdictRequest& req : {diagonal("diagonal-quintic", {1, 1, 1, 5}), diagonal("diagonal-quartic", {2, 4, 6, 34}),
                                    diagonal("diagonal-quartic", {1, 1, 17}), diagonal("diagonal-cubic", {0, 1, 1, 7})}) {
    try {
      run_verdict(req);
      FAIL() << req.family;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Domain);
    }
  }
}

TEST(Report, TextRendering) {
  Report r;
  r["command"] = "demo";
  r["values"] = {1, 2, 3};
  r["nested"]["a"] = "x";
  r["rows"] = Report::array({{{"k", 1}, {"v", "one"}}, {{"k", 2}, {"v", "two"}}});
  EXPECT_EQ(render_text(r), "command: demo\nvalues: [1, 2, 3]\nnested:\n  a: x\nrows:\n  - k: 1\n    v: one\n  - k: 2\n    v: two\n");
  EXPECT_EQ(Report::parse(render_json(r)), r);
}

TEST(Report, ClassifySummaries) {
  const ModelFile dp1 = test::load_model("dp1_f11");
  const Report r = classify_report(dp1, ClassifyOptions{});
  EXPECT_EQ(r["type"], "2A4");
  EXPECT_EQ(r["summary"], "2A4; Br_bar=Z/5; H1=Z/5; Br_nr=(Z/5)^2");
  EXPECT_EQ(r["singular_points"].size(), 2u);
  EXPECT_EQ(classify_report(test::load_model("quadric_f5"), ClassifyOptions{})["summary"], "smooth; tables N/A");
}
