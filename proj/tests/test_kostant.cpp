#include <doctest.h>

#include "bcrystal/explorer.hpp"
#include "bcrystal/kostant.hpp"

using namespace bcrystal;

namespace {

const LieType B2{Kind::B, 2}, B3{Kind::B, 3}, C2{Kind::C, 2}, C3{Kind::C, 3};

KostantPartition kp(LieType t, std::map<RootLabel, int> counts) {
  return KostantPartition::from_counts(t, std::move(counts));
}

// First type-C operator example.
KostantPartition c3_alpha1() {
  return kp(C3, {{beta(1, 2), 4},
                 {gamma(1, 3), 2},
                 {gamma(1, 1), 2},
                 {gamma(2, 2), 1},
                 {gamma(2, 3), 1},
                 {gamma(3, 3), 1}});
}

// Second type-C operator example (also the image of the first under f_3).
KostantPartition c3_alpha2() {
  return kp(C3, {{beta(1, 2), 2},
                 {gamma(1, 3), 2},
                 {gamma(1, 1), 3},
                 {gamma(2, 2), 1},
                 {gamma(2, 3), 1},
                 {gamma(3, 3), 1}});
}

// Image of the running B_3 tableau under the isomorphism.
KostantPartition b3_image() {
  return kp(B3, {{beta(1, 1), 2},
                 {beta(1, 2), 1},
                 {beta(1, 3), 1},
                 {gamma(1, 2), 2},
                 {gamma(1, 3), 2},
                 {beta(2, 2), 3},
                 {beta(2, 3), 1},
                 {gamma(2, 3), 2},
                 {beta(3, 3), 4}});
}

std::string signature_shape(const std::vector<KpBracket>& sig) {
  std::string shape;
  for (const auto& b : sig)
    shape += b.side == BracketSide::close ? ')' : '(';
  return shape;
}

}  // namespace

TEST_CASE("zero partition") {
  KostantPartition z = KostantPartition::zero(B3);
  CHECK(z.is_zero());
  CHECK(z.weight() == Weight{0, 0, 0});
  for (int i = 1; i <= 3; ++i) {
    CHECK_FALSE(z.e(i).has_value());
    CHECK(z.epsilon(i) == 0);
  }
}

TEST_CASE("from_counts validates") {
  CHECK_THROWS_AS(kp(C3, {{beta(1, 3), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(kp(B3, {{beta(1, 1), 0}}), std::invalid_argument);
}

TEST_CASE("phi block structure") {
  // i < n: four blocks per row below i plus the closing beta(i,i).
  auto blocks = phi_blocks(B3, 1);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].root == beta(1, 1));
  CHECK(blocks[0].side == BracketSide::close);

  // Type B top index doubles the middle pair and repeats beta(j,n).
  auto top = phi_blocks(B3, 3);
  REQUIRE(top.size() == 9);
  CHECK(top[0].root == beta(1, 3));
  CHECK(top[0].factor == 1);
  CHECK(top[1].root == beta(1, 2));
  CHECK(top[1].factor == 2);
  CHECK(top[2].root == gamma(1, 3));
  CHECK(top[2].factor == 2);
  CHECK(top[3].root == beta(1, 3));
  CHECK(top[3].side == BracketSide::open);

  // Type C top index brackets gamma(j,j) on both sides.
  auto ctop = phi_blocks(C3, 3);
  REQUIRE(ctop.size() == 9);
  CHECK(ctop[0].root == gamma(1, 1));
  CHECK(ctop[0].side == BracketSide::close);
  CHECK(ctop[3].root == gamma(1, 1));
  CHECK(ctop[3].side == BracketSide::open);
  CHECK(ctop[8].root == gamma(3, 3));
  CHECK(ctop[8].side == BracketSide::close);
}

TEST_CASE("bracket roots step by a_i as the remark describes, i < n") {
  for (LieType t : {B2, C2, B3, C3, LieType(Kind::B, 4), LieType(Kind::C, 4)}) {
    for (int i = 1; i < t.rank; ++i)
      for (const PhiBlock& block : phi_blocks(t, i)) {
        if (block.side == BracketSide::close) {
          RootStep down = root_step(t, block.root, i, StepDir::sub);
          CHECK((down.is_root() || block.root == beta(i, i)));
        } else {
          CHECK(root_step(t, block.root, i, StepDir::add).is_root());
        }
      }
  }
}

TEST_CASE("signatures of the worked examples") {
  auto sig1 = c3_alpha1().signature(3);
  CHECK(signature_shape(sig1) == "))((");
  CHECK(sig1[2].source.root == beta(1, 2));

  auto sig2 = c3_alpha2().signature(3);
  CHECK(signature_shape(sig2) == ")))(");
  CHECK(sig2[3].source.root == gamma(1, 1));

  CHECK(signature_shape(b3_image().signature(3)) == "))))");
}

TEST_CASE("epsilon of the worked examples") {
  CHECK(c3_alpha1().epsilon(3) == 2);
  CHECK(b3_image().epsilon(3) == 4);
}

TEST_CASE("type-C top operator, combining case") {
  // Leftmost '(' on beta(1,2) with c[gamma(1,3)] < c[beta(1,2)] - 1: two
  // copies combine into gamma(1,1).
  CHECK(c3_alpha1().f(3) == c3_alpha2());
}

TEST_CASE("type-C top operator, splitting case") {
  // Leftmost '(' on gamma(1,1): one copy splits into two gamma(1,3).
  KostantPartition expected = kp(C3, {{beta(1, 2), 2},
                                      {gamma(1, 3), 4},
                                      {gamma(1, 1), 2},
                                      {gamma(2, 2), 1},
                                      {gamma(2, 3), 1},
                                      {gamma(3, 3), 1}});
  CHECK(c3_alpha2().f(3) == expected);
}

TEST_CASE("type-C top operator, plain case") {
  // c[gamma(1,3)] = c[beta(1,2)] - 1 moves a single copy.
  KostantPartition a = kp(C3, {{beta(1, 2), 3},
                               {gamma(1, 3), 2},
                               {gamma(1, 1), 2},
                               {gamma(2, 2), 1},
                               {gamma(2, 3), 1},
                               {gamma(3, 3), 1}});
  KostantPartition expected = kp(C3, {{beta(1, 2), 2},
                                      {gamma(1, 3), 3},
                                      {gamma(1, 1), 2},
                                      {gamma(2, 2), 1},
                                      {gamma(2, 3), 1},
                                      {gamma(3, 3), 1}});
  CHECK(a.f(3) == expected);
}

TEST_CASE("the no-bracket fallback appends alpha_i") {
  KostantPartition fb3 = b3_image().f(3);
  CHECK(fb3.count(beta(3, 3)) == 5);
  KostantPartition rest = b3_image();
  for (const auto& [root, c] : rest.counts())
    CHECK(fb3.count(root) == c + (root == beta(3, 3) ? 1 : 0));

  CHECK(KostantPartition::zero(C3).f(3) == kp(C3, {{gamma(3, 3), 1}}));
  CHECK(KostantPartition::zero(C3).f(1) == kp(C3, {{beta(1, 1), 1}}));
}

TEST_CASE("raising undoes lowering on the worked examples") {
  auto back = c3_alpha2().e(3);
  REQUIRE(back.has_value());
  CHECK(*back == c3_alpha1());

  auto split_back = c3_alpha2().f(3).e(3);
  REQUIRE(split_back.has_value());
  CHECK(*split_back == c3_alpha2());
}

TEST_CASE("subtracting down to the zero root drops the copy") {
  KostantPartition a = kp(B3, {{beta(3, 3), 1}});
  auto up = a.e(3);
  REQUIRE(up.has_value());
  CHECK(up->is_zero());

  CHECK(kp(C3, {{gamma(3, 3), 1}}).e(3)->is_zero());
}

TEST_CASE("weights") {
  CHECK(c3_alpha1().weight() ==
        Weight{-(4 + 2 + 4), -(4 + 2 + 4 + 2 + 1), -(2 + 2 + 1 + 1 + 1)});
  CHECK(b3_image().weight() == to_tableau(b3_image()).weight());
}

TEST_CASE("type-C top cases each shift the weight by exactly alpha_n") {
  // (1) gamma(k,n) - beta(k,n-1), (2) gamma(k,k) - 2 beta(k,n-1),
  // (3) 2 gamma(k,n) - gamma(k,k).
  for (LieType t : {C2, C3, LieType(Kind::C, 4)}) {
    const int n = t.rank;
    RootVector alpha_n(n, 0);
    alpha_n[n - 1] = 1;
    for (int k = 1; k < n; ++k) {
      RootVector g_kn = expand_simple(t, gamma(k, n));
      RootVector b_kn1 = expand_simple(t, beta(k, n - 1));
      RootVector g_kk = expand_simple(t, gamma(k, k));
      CHECK(g_kn - b_kn1 == alpha_n);
      CHECK(g_kk - (b_kn1 + b_kn1) == alpha_n);
      CHECK((g_kn + g_kn) - g_kk == alpha_n);
    }
  }
}

TEST_CASE("crystal relations hold on generated partitions") {
  for (LieType t : {B2, C2, B3, C3}) {
    for (const KostantPartition& a : generate_kostant_graph(t, 4).vertices) {
      const Weight wt = a.weight();
      for (int i = 1; i <= t.rank; ++i) {
        KostantPartition fa = a.f(i);
        CHECK(fa.e(i) == std::optional<KostantPartition>(a));
        Weight stepped = wt;
        stepped[i - 1] -= 1;
        CHECK(fa.weight() == stepped);
        if (auto ea = a.e(i)) CHECK(ea->f(i) == a);

        int steps = 0;
        KostantPartition cursor = a;
        while (auto up = cursor.e(i)) {
          cursor = *up;
          ++steps;
        }
        CHECK(steps == a.epsilon(i));
        CHECK(a.phi(i) == a.epsilon(i) + coroot_pairing(t, i, wt));
      }
    }
  }
}
