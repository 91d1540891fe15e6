#include <doctest.h>

#include "lielat/lattice.hpp"

using namespace lielat;

namespace {

QMatrix mk(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    std::vector<Rat> rr;
    for (long long x : row) rr.push_back(Rat(Int(x)));
    r.push_back(rr);
  }
  return QMatrix::from_rows(r);
}

std::vector<Rat> e(int d, int i) {
  std::vector<Rat> v(d, Rat(0));
  v[i] = 1;
  return v;
}

// Exact Leibniz re-verification: D[x,y] = [Dx,y] + [x,Dy] on basis pairs.
bool is_derivation(const LieLattice& l, const QMatrix& d) {
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j) {
      auto lhs = d.apply(l.bracket_basis(i, j));
      auto rhs = l.bracket(d.apply(e(l.dim, i)), e(l.dim, j));
      auto rhs2 = l.bracket(e(l.dim, i), d.apply(e(l.dim, j)));
      for (int k = 0; k < l.dim; ++k)
        if (lhs[k] != rhs[k] + rhs2[k]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("catalog lattices all validate") {
  for (const auto& name : builtin_names()) {
    LieLattice l = builtin_lattice(name, 5, name == "abelian" ? 2 : 0);
    CAPTURE(name);
    CHECK(validate(l).ok);
  }
}

TEST_CASE("validate flags a Jacobi failure with the failing triple") {
  LieLattice l;
  l.name = "bad";
  l.p = 5;
  l.dim = 3;
  l.set_bracket(0, 1, {Rat(0), Rat(0), Rat(1)});  // [e1,e2] = e3
  l.set_bracket(0, 2, {Rat(1), Rat(0), Rat(0)});  // [e1,e3] = e1
  l.set_bracket(1, 2, {Rat(0), Rat(1), Rat(0)});  // [e2,e3] = e2
  ValidationReport r = validate(l);
  CHECK_FALSE(r.ok);
  CHECK(r.i == 0);
  CHECK(r.j == 1);
  CHECK(r.k == 2);
  CHECK_THROWS_AS(validate_or_throw(l), NotALieAlgebra);
}

TEST_CASE("validate flags non-p-integral structure constants") {
  LieLattice l;
  l.p = 3;
  l.dim = 2;
  l.set_bracket(0, 1, {Rat(1, 3), Rat(0)});
  CHECK_FALSE(validate(l).ok);
  CHECK_THROWS_AS(validate_or_throw(l), NotALattice);
}

TEST_CASE("ad matrices of catalog elements") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  // basis (e, h, f); ad(h) = diag(2, 0, -2)
  CHECK(ad_matrix(sl2, e(3, 1)) == QMatrix::diagonal({Rat(2), Rat(0), Rat(-2)}));

  LieLattice ab = builtin_lattice("abelian", 5, 3);
  CHECK(ad_matrix(ab, {Rat(1), Rat(2), Rat(3)}).is_zero());

  LieLattice h = builtin_lattice("heisenberg", 5);
  QMatrix adx = ad_matrix(h, e(3, 0));
  QMatrix expect(3, 3);
  expect.at(2, 1) = 1;  // y-coordinate maps to z-coordinate
  CHECK(adx == expect);
}

TEST_CASE("Killing matrices: exact ground truths") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  KillingData kd = killing_matrix(sl2);
  CHECK(kd.a == mk({{0, 0, 4}, {0, 8, 0}, {4, 0, 0}}));
  CHECK(kd.det_a == -128);

  CHECK(killing_matrix(builtin_lattice("abelian", 3, 4)).a.is_zero());
  CHECK(killing_matrix(builtin_lattice("heisenberg", 3)).a.is_zero());

  LieLattice so3 = builtin_lattice("so3", 7);
  CHECK(killing_matrix(so3).a == QMatrix::diagonal({Rat(-2), Rat(-2), Rat(-2)}));
}

TEST_CASE("Killing matrix is symmetric across the catalog") {
  for (const auto& name : builtin_names()) {
    LieLattice l = builtin_lattice(name, 3, name == "abelian" ? 3 : 0);
    QMatrix a = killing_matrix(l).a;
    CHECK(a == a.transpose());
  }
}

TEST_CASE("kappa computed two ways agrees") {
  LieLattice l = builtin_lattice("sl2", 3);
  QMatrix a = killing_matrix(l).a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(a.at(i, j) == (ad_matrix(l, e(3, i)) * ad_matrix(l, e(3, j))).trace());
}

TEST_CASE("Cartan's criterion for semisimplicity") {
  for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
    CHECK(is_semisimple(builtin_lattice("sl2", p)).semisimple);
    CHECK(is_semisimple(builtin_lattice("so3", p)).semisimple);
  }
  CHECK_FALSE(is_semisimple(builtin_lattice("heisenberg", 5)).semisimple);
  CHECK_FALSE(is_semisimple(builtin_lattice("abelian", 5, 2)).semisimple);
  CHECK(is_semisimple(builtin_lattice("sl2_plus_sl2", 5)).semisimple);
}

TEST_CASE("powerful lattices") {
  CHECK(is_powerful(builtin_lattice("abelian", 5, 3)));
  CHECK_FALSE(is_powerful(builtin_lattice("heisenberg", 5)));
  CHECK(is_powerful(builtin_lattice("heisenberg_powerful", 5)));
  CHECK(is_powerful(builtin_lattice("heisenberg_powerful", 2)));  // v_2 >= 2
}

TEST_CASE("series profiles") {
  SeriesProfile h = series_profile(builtin_lattice("heisenberg", 5));
  CHECK(h.lower_central_ranks == std::vector<int>{3, 1, 0});
  REQUIRE(h.nilpotency_class.has_value());
  CHECK(*h.nilpotency_class == 2);
  CHECK(h.solvable);

  SeriesProfile ab = series_profile(builtin_lattice("abelian", 5, 2));
  REQUIRE(ab.nilpotency_class.has_value());
  CHECK(*ab.nilpotency_class == 1);
  CHECK(ab.solvable);

  SeriesProfile s = series_profile(builtin_lattice("sl2", 5));
  CHECK(s.derived_ranks.back() == 3);  // derived series stabilizes at rank 3
  CHECK_FALSE(s.solvable);
  CHECK_FALSE(s.nilpotency_class.has_value());
}

TEST_CASE("derivation algebras") {
  DerivationAlgebra ab = derivations(builtin_lattice("abelian", 5, 2));
  CHECK(ab.dim == 4);
  CHECK_FALSE(ab.nilpotent);

  DerivationAlgebra sl2 = derivations(builtin_lattice("sl2", 5));
  CHECK(sl2.dim == 3);

  DerivationAlgebra h = derivations(builtin_lattice("heisenberg", 5));
  CHECK(h.dim == 6);

  // every reported basis element satisfies the Leibniz identity exactly
  for (const auto& name : builtin_names()) {
    LieLattice l = builtin_lattice(name, 5, name == "abelian" ? 2 : 0);
    for (const auto& d : derivations(l).basis) CHECK(is_derivation(l, d));
  }
}

TEST_CASE("semisimple implies all derivations inner (dimension match)") {
  for (const auto& name : {"sl2", "so3", "sl2_plus_sl2"}) {
    LieLattice l = builtin_lattice(name, 5);
    REQUIRE(is_semisimple(l).semisimple);
    CHECK(derivations(l).dim == l.dim);
  }
}

TEST_CASE("simplicity reports") {
  SimplicityReport sl2 = simplicity_report(builtin_lattice("sl2", 5));
  CHECK(sl2.semisimple);
  CHECK(sl2.centroid_dim == 1);
  CHECK(sl2.simple == Verdict::Yes);
  CHECK(sl2.just_infinite == Verdict::Yes);

  SimplicityReport two = simplicity_report(builtin_lattice("sl2_plus_sl2", 5));
  CHECK(two.centroid_dim == 2);
  CHECK(two.simple == Verdict::No);
  CHECK(two.just_infinite == Verdict::No);

  SimplicityReport ab = simplicity_report(builtin_lattice("abelian", 5, 2));
  CHECK_FALSE(ab.semisimple);
  CHECK(ab.just_infinite == Verdict::No);

  // rank 1 is the degenerate just-infinite case
  CHECK(simplicity_report(builtin_lattice("abelian", 5, 1)).just_infinite == Verdict::Yes);
}

TEST_CASE("series ranks are invariant under a verified change of basis") {
  // re-derive sl2's structure constants in the (f, h, e) basis and compare
  LieLattice l = builtin_lattice("sl2", 5);
  QMatrix s = mk({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});  // Chevalley involution
  auto sinv = s.inverse();
  REQUIRE(sinv.has_value());
  LieLattice m;
  m.p = l.p;
  m.dim = l.dim;
  for (int i = 0; i < l.dim; ++i)
    for (int j = i + 1; j < l.dim; ++j)
      m.set_bracket(i, j, sinv->apply(l.bracket(s.apply(e(3, i)), s.apply(e(3, j)))));
  validate_or_throw(m);
  SeriesProfile a = series_profile(l), b = series_profile(m);
  CHECK(a.lower_central_ranks == b.lower_central_ranks);
  CHECK(a.derived_ranks == b.derived_ranks);
}

TEST_CASE("builtin catalog rejects unknown names") {
  CHECK_THROWS_AS(builtin_lattice("nope", 5), InvalidInput);
  CHECK_THROWS_AS(builtin_lattice("abelian", 5, 0), InvalidInput);
}
