#include <doctest.h>

#include "lielat/stability.hpp"

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

const QMatrix kInvolution = mk({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});  // e<->f, h->-h

}  // namespace

TEST_CASE("automorphism_check on documented candidates") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  AutoMap s = automorphism_check(sl2, kInvolution);
  CHECK(s.verified);
  CHECK(s.det == 1);
  CHECK(s.det_valuation == PVal::finite(0));

  LieLattice ab = builtin_lattice("abelian", 5, 2);
  AutoMap t = automorphism_check(ab, QMatrix::identity(2) * Rat(5));
  CHECK(t.verified);
  CHECK(t.det_valuation == PVal::finite(2));

  // e -> h, h -> e, f -> f is not bracket-preserving
  AutoMap bad = automorphism_check(sl2, mk({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK_FALSE(bad.verified);
}

TEST_CASE("sT A s = A for verified automorphisms") {
  LieLattice sl2 = builtin_lattice("sl2", 3);
  QMatrix a = killing_matrix(sl2).a;
  AutoMap s = automorphism_check(sl2, kInvolution);
  REQUIRE(s.verified);
  CHECK(s.s.transpose() * a * s.s == a);
}

TEST_CASE("serre_verdict") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  SerreVerdict v = serre_verdict(sl2, automorphism_check(sl2, kInvolution));
  CHECK(v.passes);
  CHECK(v.det_valuation == 0);
  CHECK(v.eigen_valuations == std::vector<Rat>{Rat(0), Rat(0), Rat(0)});

  LieLattice ab = builtin_lattice("abelian", 5, 2);
  SerreVerdict w = serre_verdict(ab, automorphism_check(ab, QMatrix::identity(2) * Rat(5)));
  CHECK_FALSE(w.passes);
  CHECK(w.det_valuation == 2);

  LieLattice h = builtin_lattice("heisenberg", 5);
  AutoMap d = automorphism_check(h, QMatrix::diagonal({Rat(5), Rat(1), Rat(5)}));
  CHECK(d.verified);
  SerreVerdict hv = serre_verdict(h, d);
  CHECK_FALSE(hv.passes);
  CHECK(hv.det_valuation == 2);

  // sum of eigenvalue valuations equals vp(det)
  for (const auto& [l, am] : {std::pair<LieLattice, AutoMap>{sl2, automorphism_check(sl2, kInvolution)},
                              {ab, automorphism_check(ab, mk({{5, 1}, {0, 1}}))},
                              {h, d}}) {
    SerreVerdict sv = serre_verdict(l, am);
    Rat sum = 0;
    for (const auto& x : sv.eigen_valuations) sum += x;
    CHECK(sum == Rat(Int(sv.det_valuation)));
  }

  AutoMap unverified;
  unverified.s = QMatrix::identity(3);
  CHECK_THROWS_AS(serre_verdict(sl2, unverified), NotAnAutomorphism);
}

TEST_CASE("iso_index_check") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  Sublattice pl = scale_power(sl2, 1);
  IsoIndexReport r = iso_index_check(sl2, pl, pl, QMatrix::identity(3));
  CHECK(r.index_m == 3);
  CHECK(r.index_n == 3);
  CHECK(r.equal);

  Sublattice m(sl2, QMatrix::diagonal({Rat(1), Rat(1), Rat(5)}));
  Sublattice n = transform(m, kInvolution);
  IsoIndexReport r2 = iso_index_check(sl2, m, n, kInvolution);
  CHECK(r2.index_m == 1);
  CHECK(r2.index_n == 1);
  CHECK(r2.equal);
  CHECK(r2.gram_checked);
  CHECK(r2.gram_equal);

  LieLattice ab = builtin_lattice("abelian", 5, 2);
  IsoIndexReport r3 = iso_index_check(ab, Sublattice::full(ab), scale_power(ab, 1),
                                      QMatrix::identity(2) * Rat(5));
  CHECK(r3.index_m == 0);
  CHECK(r3.index_n == 2);
  CHECK_FALSE(r3.equal);  // an instability exhibit

  // wrong target lattice -> basis mismatch
  CHECK_THROWS_AS(iso_index_check(sl2, m, pl, kInvolution), BasisMismatch);
  // non-isomorphism -> invalid iso
  CHECK_THROWS_AS(
      iso_index_check(sl2, Sublattice::full(sl2), Sublattice::full(sl2),
                      mk({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})),
      InvalidIso);
}

TEST_CASE("stability certificates across the catalog") {
  LieLattice sl2 = builtin_lattice("sl2", 5);
  StabilityVerdict v = stability_certificate(sl2);
  CHECK(v.status == StabilityStatus::Stable);
  CHECK(v.certificate == CertificateKind::Semisimple);
  CHECK(v.det_killing == -128);

  StabilityVerdict ab = stability_certificate(builtin_lattice("abelian", 5, 2));
  CHECK(ab.status == StabilityStatus::Unstable);
  REQUIRE(ab.witness.has_value());
  CHECK(ab.witness->s == QMatrix::identity(2) * Rat(5));
  CHECK(ab.witness->verified);

  StabilityVerdict h = stability_certificate(builtin_lattice("heisenberg", 5));
  CHECK(h.status == StabilityStatus::Unstable);
  REQUIRE(h.witness.has_value());
  CHECK(h.witness->s == QMatrix::diagonal({Rat(5), Rat(1), Rat(5)}));
  CHECK(h.witness->det_valuation == PVal::finite(2));
}

TEST_CASE("witness search finds nothing on sl2") {
  CHECK_FALSE(search_unstable_witness(builtin_lattice("sl2", 3)).has_value());
  CHECK_FALSE(search_unstable_witness(builtin_lattice("so3", 3)).has_value());
}

TEST_CASE("witness search accepts user candidates") {
  LieLattice ab = builtin_lattice("abelian", 3, 2);
  auto w = search_unstable_witness(ab, 100000, {mk({{9, 0}, {0, 1}})});
  REQUIRE(w.has_value());
  CHECK(w->s == QMatrix::identity(2) * Rat(3));  // built-in candidates come first
}

TEST_CASE("index_ratio identities") {
  LieLattice ab = builtin_lattice("abelian", 5, 2);
  Sublattice l0 = Sublattice::full(ab);
  IndexRatio r = index_ratio(ab, l0, l0, QMatrix::identity(2));
  CHECK(r.ratio_valuation == 0);

  QMatrix pid = QMatrix::identity(2) * Rat(5);
  IndexRatio r2 = index_ratio(ab, l0, scale_power(ab, 1), pid);
  CHECK(r2.ratio_valuation == -2);  // = -vp(det pI)

  LieLattice sl2 = builtin_lattice("sl2", 5);
  Sublattice m(sl2, QMatrix::diagonal({Rat(1), Rat(1), Rat(5)}));
  IndexRatio r3 = index_ratio(sl2, m, transform(m, kInvolution), kInvolution);
  CHECK(r3.ratio_valuation == 0);  // |det| = 1
}

TEST_CASE("ratio exponent equals -vp(det s) for transformed sublattices") {
  LieLattice h = builtin_lattice("heisenberg", 3);
  QMatrix s = QMatrix::diagonal({Rat(3), Rat(1), Rat(3)});
  AutoMap am = automorphism_check(h, s);
  REQUIRE(am.verified);
  for (const QMatrix& b :
       {QMatrix::identity(3), QMatrix::diagonal({Rat(3), Rat(3), Rat(3)}),
        QMatrix::diagonal({Rat(9), Rat(1), Rat(3)})}) {
    Sublattice m(h, b);
    IndexRatio r = index_ratio(h, m, transform(m, s), s);
    CHECK(r.ratio_valuation == -am.det_valuation.value());
  }
}

TEST_CASE("Stable verdict and verified witness are mutually exclusive") {
  for (const auto& name : builtin_names()) {
    LieLattice l = builtin_lattice(name, 3, name == "abelian" ? 2 : 0);
    StabilityVerdict v = stability_certificate(l);
    auto w = search_unstable_witness(l);
    CAPTURE(name);
    bool contradiction = v.status == StabilityStatus::Stable && w.has_value();
    CHECK_FALSE(contradiction);
  }
}
