#include <doctest.h>

#include <random>

#include "lielat/group.hpp"

using namespace lielat;

namespace {

std::vector<Rat> random_coords(std::mt19937& rng, int d, long long bound) {
  std::uniform_int_distribution<long long> dist(0, bound - 1);
  std::vector<Rat> v(d);
  for (int i = 0; i < d; ++i) v[i] = Rat(Int(dist(rng)));
  return v;
}

}  // namespace

TEST_CASE("abelian group law is coordinate addition") {
  LieLattice ab = builtin_lattice("abelian", 5, 3);
  GroupElement g = make_element(ab, {Rat(1), Rat(2), Rat(3)}, 2);
  GroupElement h = make_element(ab, {Rat(4), Rat(20), Rat(7)}, 2);
  GroupElement p = bch_mul(ab, g, h);
  CHECK(p.coordinates == std::vector<Rat>{Rat(5), Rat(22), Rat(10)});
}

TEST_CASE("powerful Heisenberg product: the class-2 formula") {
  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  GroupElement g = make_element(l, {Rat(1), Rat(0), Rat(0)}, 2);
  GroupElement h = make_element(l, {Rat(0), Rat(1), Rat(0)}, 2);
  GroupElement p = bch_mul(l, g, h);
  // g + h + [g,h]/2 = (1, 1, 5/2); 5/2 = 15 mod 25
  CHECK(p.coordinates == std::vector<Rat>{Rat(1), Rat(1), Rat(15)});
}

TEST_CASE("group axioms at precision on random elements") {
  std::mt19937 rng(1234);
  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  for (long long e : {1, 2, 3}) {
    long long pe = 1;
    for (long long t = 0; t < e; ++t) pe *= 5;
    GroupElement id = bch_identity(l, e);
    for (int t = 0; t < 60; ++t) {
      GroupElement g = make_element(l, random_coords(rng, 3, pe), e);
      GroupElement h = make_element(l, random_coords(rng, 3, pe), e);
      GroupElement k = make_element(l, random_coords(rng, 3, pe), e);
      // associativity
      CHECK(bch_mul(l, bch_mul(l, g, h), k).coordinates ==
            bch_mul(l, g, bch_mul(l, h, k)).coordinates);
      // identity and inverse
      CHECK(bch_mul(l, g, id).coordinates == g.coordinates);
      CHECK(bch_mul(l, g, bch_inverse(l, g)).coordinates == id.coordinates);
    }
  }
}

TEST_CASE("scaling carries the group law to the group law of pL") {
  // In pL's own coordinates the product of x, y is p^{-1} * (px . py) in L.
  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  LieLattice lp = intrinsic_presentation(scale_power(l, 1));
  std::mt19937 rng(77);
  for (int t = 0; t < 30; ++t) {
    auto x = random_coords(rng, 3, 25);
    auto y = random_coords(rng, 3, 25);
    GroupElement inner = bch_mul(lp, make_element(lp, x, 2), make_element(lp, y, 2));
    std::vector<Rat> px(3), py(3);
    for (int i = 0; i < 3; ++i) {
      px[i] = Rat(5) * x[i];
      py[i] = Rat(5) * y[i];
    }
    GroupElement outer = bch_mul(l, make_element(l, px, 3), make_element(l, py, 3));
    for (int i = 0; i < 3; ++i)
      CHECK(residue_mod_pk(Rat(5) * inner.coordinates[i], 5, 3) ==
            residue_mod_pk(outer.coordinates[i], 5, 3));
  }
}

TEST_CASE("unsupported inputs are rejected honestly") {
  LieLattice h = builtin_lattice("heisenberg", 5);  // not powerful
  GroupElement g{std::vector<Rat>(3, Rat(0)), 1};
  CHECK_THROWS_AS(bch_mul(h, g, g), NotPowerful);

  LieLattice h2 = builtin_lattice("heisenberg_powerful", 2);  // p = 2 excluded
  CHECK_THROWS_AS(bch_mul(h2, g, g), UnsupportedClass);

  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  GroupElement a = make_element(l, {Rat(1), Rat(0), Rat(0)}, 1);
  GroupElement b = make_element(l, {Rat(1), Rat(0), Rat(0)}, 2);
  CHECK_THROWS_AS(bch_mul(l, a, b), InvalidInput);
  CHECK_THROWS_AS(make_element(l, {Rat(1, 5), Rat(0), Rat(0)}, 1), NotPIntegral);
}

TEST_CASE("group index matches the lattice index") {
  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  GroupIndexReport r = group_index_check(l, scale_power(l, 1), 2);
  CHECK(r.coset_count == 125);  // 5^3
  CHECK(r.lattice_index_exponent == 3);
  CHECK(r.agree);

  LieLattice ab = builtin_lattice("abelian", 3, 2);
  Sublattice m(ab, QMatrix::diagonal({Rat(3), Rat(9)}));
  GroupIndexReport r2 = group_index_check(ab, m, 2);
  CHECK(r2.coset_count == 27);  // p^3 both ways
  CHECK(r2.agree);
}

TEST_CASE("group_index_check rejects unfaithful precision and non-subgroups") {
  LieLattice l = builtin_lattice("heisenberg_powerful", 5);
  // e = 1 does not satisfy p^e L inside p^2 L
  CHECK_THROWS_AS(group_index_check(l, scale_power(l, 2), 1), InvalidInput);
  CHECK_THROWS_AS(group_index_check(builtin_lattice("heisenberg", 5),
                                    scale_power(builtin_lattice("heisenberg", 5), 1), 2),
                  NotPowerful);
  // budget guard
  CHECK_THROWS_AS(group_index_check(l, scale_power(l, 1), 2, 10), BudgetError);
}
