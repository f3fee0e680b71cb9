#include <gtest/gtest.h>

#include "lef/chain.hpp"
#include "lef/density.hpp"
#include "lef/errors.hpp"
#include "lef/pipeline.hpp"

using namespace lef;

namespace {

const char* kTrivial = R"(# Z/2 with both generators the involution
p 3
n 3
depth 1
quotient 0 degree 2
s1 1 0
s2 1 0
xi1 a
xi2 a
xi3 a
xi4 a
)";

const char* kZ2Z4 = R"(p 3
n 3
depth 2
quotient 0 degree 2
s1 1 0
s2 1 0
quotient 1 degree 4
s1 1 2 3 0
s2 1 2 3 0
xi1 aa
xi2 e
xi3 bb
xi4 aB
)";

std::string klein_chain() {
  // Z2 x Z_k on 2 + k points: a swaps 0 and 1, b cycles the rest.
  std::string s = "p 3\nn 3\ndepth 3\n";
  const int ks[] = {2, 6, 18};
  for (int m = 0; m < 3; ++m) {
    const int k = ks[m], d = 2 + k;
    s += "quotient " + std::to_string(m) + " degree " + std::to_string(d) + "\ns1 1 0";
    for (int i = 2; i < d; ++i) s += " " + std::to_string(i);
    s += "\ns2 0 1";
    for (int i = 2; i < d; ++i) s += " " + std::to_string(i + 1 < d ? i + 1 : 2);
    s += "\n";
  }
  s += "xi1 a\nxi2 bbbbbbbbb\nxi3 abbbbbbbbb\nxi4 a\n";
  return s;
}

const ReportRecord* find(const Report& r, const std::string& level, const std::string& check) {
  for (const auto& x : r.records())
    if (x.level == level && x.check == check) return &x;
  return nullptr;
}

}  // namespace

TEST(Chain, ParsesTrivial) {
  auto c = parse_chain(kTrivial);
  EXPECT_EQ(c.p, 3u);
  EXPECT_EQ(c.depth(), 1u);
  EXPECT_EQ(c.xi[0], (Word{1}));
  EXPECT_EQ(parse_word("aAbB"), (Word{1, -1, 2, -2}));
  EXPECT_EQ(word_to_string({1, -2}), "aB");
}

TEST(Chain, Rejections) {
  std::string bad = kTrivial;
  EXPECT_THROW(parse_chain("n 3\n"), ParseError);
  EXPECT_THROW(parse_chain(std::string(kTrivial).replace(bad.find("s1 1 0"), 6, "s1 1 1")), ParseError);
  EXPECT_THROW(parse_chain(std::string(kTrivial) + "xi1 a\n"), ParseError);
  EXPECT_THROW(parse_chain(std::string(kTrivial) + "bogus 1\n"), ParseError);
  // a b has order 3 in Sym(3).
  const char* non_involution = "p 3\nn 3\ndepth 1\nquotient 0 degree 3\ns1 1 0 2\ns2 0 2 1\nxi1 ab\nxi2 a\nxi3 a\nxi4 a\n";
  EXPECT_THROW(parse_chain(non_involution), InvalidArgument);
  // Decreasing sizes.
  const char* shrinking = "p 3\nn 3\ndepth 2\nquotient 0 degree 4\ns1 1 2 3 0\ns2 1 2 3 0\n"
                          "quotient 1 degree 2\ns1 1 0\ns2 1 0\nxi1 e\nxi2 e\nxi3 e\nxi4 e\n";
  EXPECT_THROW(parse_chain(shrinking), InvalidArgument);
  // Z/3 does not map onto Z/2.
  const char* not_quotient = "p 3\nn 3\ndepth 2\nquotient 0 degree 2\ns1 1 0\ns2 1 0\n"
                             "quotient 1 degree 3\ns1 1 2 0\ns2 1 2 0\nxi1 e\nxi2 e\nxi3 e\nxi4 e\n";
  EXPECT_THROW(parse_chain(not_quotient), InvalidArgument);
  EXPECT_THROW(parse_chain(std::string(kZ2Z4).replace(0, 3, "p 2")), InvalidArgument);
}

TEST(Pipeline, TrivialLevel) {
  auto spec = parse_chain(kTrivial);
  auto lv = build_level(spec, 0);
  EXPECT_EQ(lv.set_size(), 12u);
  EXPECT_EQ(lv.l, 10u);
  EXPECT_EQ(lv.dim(), 30u);
  const auto x1 = std::get<MatFp>(lv.x.at("x1"));
  EXPECT_TRUE((x1 * x1).is_identity());
  EXPECT_EQ(element_order(std::get<MatFp>(lv.x.at("x6"))), 6u);
  EXPECT_EQ(lv.nine.mats.size(), 9u);
  auto e = verify_embedding(lv, spec);
  EXPECT_TRUE(e.isomorphic) << e.failure;
  EXPECT_EQ(e.order_sym, 2u);
}

TEST(Pipeline, IdentityXiGivesOrderOne) {
  std::string t = kTrivial;
  for (int i = 0; i < 4; ++i) t.replace(t.find(" a\n"), 3, " e\n");
  auto spec = parse_chain(t);
  auto e = verify_embedding(build_level(spec, 0), spec);
  EXPECT_TRUE(e.isomorphic);
  EXPECT_EQ(e.order_sym, 1u);
  EXPECT_EQ(e.order_sl, 1u);
}

TEST(Pipeline, DihedralEmbedding) {
  // D8 on the square's vertices; xi = the two generating reflections.
  const char* d8 = "p 3\nn 3\ndepth 1\nquotient 0 degree 4\ns1 1 0 3 2\ns2 0 3 2 1\nxi1 a\nxi2 b\nxi3 ab\nxi4 a\n";
  auto spec = parse_chain(std::string(d8).replace(std::string(d8).find("xi3 ab"), 6, "xi3 e"));
  auto e = verify_embedding(build_level(spec, 0), spec);
  EXPECT_TRUE(e.isomorphic) << e.failure;
  EXPECT_EQ(e.order_sym, 8u);
  EXPECT_EQ(e.order_sl, 8u);
}

TEST(Pipeline, TwoLevelReport) {
  auto spec = parse_chain(kZ2Z4);
  auto r = run_main_theorem(spec);
  EXPECT_TRUE(r.passed()) << r.render();
  ASSERT_NE(find(r, "0", "arith"), nullptr);
  EXPECT_NE(find(r, "0", "arith")->payload.find("l=10,N=30,G=SL(30,3)"), std::string::npos);
  EXPECT_NE(find(r, "1", "arith")->payload.find("l=22,N=66,G=SL(66,3)"), std::string::npos);
  EXPECT_EQ(find(r, "all", "density-nine")->verdict, "dense");
  EXPECT_EQ(find(r, "all", "density-two")->verdict, "dense");
  EXPECT_EQ(r.render(), run_main_theorem(spec).render());
}

TEST(Pipeline, KleinChain) {
  PipelineOptions o;
  o.agreement_dim_cap = 80;
  auto spec = parse_chain(klein_chain());
  std::vector<std::size_t> ls;
  for (std::size_t m = 0; m < spec.depth(); ++m) {
    auto lv = build_level(spec, m);
    ls.push_back(lv.l);
    auto e = verify_embedding(lv, spec);
    EXPECT_TRUE(e.isomorphic) << e.failure;
    EXPECT_EQ(e.order_sym, 4u);
    EXPECT_EQ(e.order_sl, 4u);
  }
  EXPECT_EQ(ls, (std::vector<std::size_t>{22, 70, 214}));
}

TEST(Density, Rules) {
  auto ev = [](std::size_t d, std::uint32_t p, Surjectivity s = Surjectivity::Verified) {
    return FactorEvidence{{d, p}, s, "given", ""};
  };
  EXPECT_EQ(density_check({ev(9, 3), ev(12, 3)}).verdict, DensityVerdict::Dense);
  EXPECT_EQ(density_check({ev(9, 3), ev(9, 3)}).verdict, DensityVerdict::NotGuaranteed);
  EXPECT_EQ(density_check({ev(9, 3)}).verdict, DensityVerdict::Dense);
  EXPECT_EQ(density_check({ev(9, 3), ev(12, 3, Surjectivity::Unverifiable)}).verdict, DensityVerdict::Unverifiable);
  EXPECT_EQ(density_check({ev(9, 3), ev(12, 3, Surjectivity::Fails)}).verdict, DensityVerdict::NotGuaranteed);
  EXPECT_EQ(density_check({ev(3, 2), ev(2, 7)}).verdict, DensityVerdict::NotGuaranteed);
  EXPECT_EQ(simple_quotient_name({3, 2}), simple_quotient_name({2, 7}));
  EXPECT_EQ(simple_quotient_name({2, 3}), "");
  EXPECT_EQ(sl_order(2, 3), 24u);
  EXPECT_EQ(sl_order(3, 2), 168u);
  EXPECT_FALSE(sl_order(30, 3).has_value());
}

TEST(Density, FactorEvidence) {
  auto f = factor_surjectivity(mu_images(1, 3, 2));
  EXPECT_EQ(f.method, "bfs");
  EXPECT_EQ(f.status, Surjectivity::Verified);
  auto g = factor_surjectivity(mu_images(2, 3, 2));
  EXPECT_EQ(g.method, "certificate");
  EXPECT_EQ(g.status, Surjectivity::Verified) << g.detail;
}
