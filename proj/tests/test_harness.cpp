#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcert/errors.hpp"
#include "lcert/harness.hpp"
#include "lcert/nt.hpp"

using namespace lcert;

TEST_CASE("coprimality hypothesis") {
  auto a = check_hypothesis_coprime({5, 7});
  CHECK(a.first);
  CHECK(a.second);  // gcd(35, 24) = 1

  auto b = check_hypothesis_coprime({7, 29});
  CHECK(b.first);
  CHECK(!b.second);  // 7 divides phi(29)

  auto c = check_hypothesis_coprime({6, 10});
  CHECK(!c.first);
  CHECK(!c.second);

  CHECK_THROWS_AS(check_hypothesis_coprime({2, 5}), error);
}

TEST_CASE("sophie germain chain") {
  auto [b, c] = sophie_germain_chain(200);
  std::vector<long> bfront = {5, 7, 11, 23, 47, 59, 83, 107, 167, 179};
  REQUIRE(b.size() >= bfront.size());
  for (size_t i = 0; i < bfront.size(); ++i) CHECK(b[i] == bfront[i]);
  CHECK(c == std::vector<long>({5, 23, 59, 167}));

  auto [b5, c5] = sophie_germain_chain(5);
  CHECK(b5 == std::vector<long>({5}));
  CHECK(c5 == std::vector<long>({5}));

  CHECK_THROWS_AS(sophie_germain_chain(4), error);
}

TEST_CASE("cotangent identity, exact and numeric") {
  for (long q = 3; q <= 50; ++q) CHECK(verify_cot_identity(q));
  CHECK_THROWS_AS(verify_cot_identity(2), error);
}

TEST_CASE("group character matrix is nonsingular") {
  for (long q = 3; q <= 20; ++q) {
    CHECK(verify_group_lemma(q, false));
    CHECK(verify_group_lemma(q, true));
  }
}

TEST_CASE("odd-character independence run") {
  mpz_class B = mpz_class(1) << 20;
  EscalationPolicy esc{1024, 4096};
  auto rep = verify_theorem_odd({5, 7}, 1, B, esc);
  CHECK(rep.verdict == Verdict::consistent);
  CHECK(rep.hyp_pairwise);
  CHECK(rep.hyp_gcd);
  CHECK(rep.subjects.size() == 5);  // 2 odd mod 5, 3 odd mod 7
  REQUIRE(rep.certificates.size() == 1);
  CHECK(rep.certificates[0].kind == "no-relation");
  CHECK(rep.bound == B);

  // single odd character mod 4 degenerates to a non-vanishing check
  auto deg = verify_theorem_odd({4}, 1, B, esc);
  CHECK(deg.verdict == Verdict::consistent);
  CHECK(deg.subjects.size() == 1);
  REQUIRE(deg.certificates.size() == 1);
  CHECK(deg.certificates[0].kind == "nonvanishing");
  CHECK(deg.certificates[0].residual.to_double() > 0.7);
}

TEST_CASE("odd-character run with field coefficients") {
  // coefficients in Q(zeta_8), disjoint from Q(zeta_35)
  auto rep = verify_theorem_odd({5, 7}, 8, mpz_class(1) << 12,
                                EscalationPolicy{1024, 4096});
  CHECK(rep.verdict == Verdict::consistent);
  CHECK(rep.coeff_modulus == 8);
  REQUIRE(rep.certificates.size() == 1);
  CHECK(rep.certificates[0].kind == "no-relation");

  // Q(zeta_5) meets Q(zeta_35), so m = 5 is rejected
  CHECK_THROWS_AS(verify_theorem_odd({5, 7}, 5, mpz_class(1) << 12), error);
}

TEST_CASE("even-character independence run with unit rank") {
  auto rep = verify_theorem_even({5, 8}, 1, mpz_class(1) << 16,
                                 EscalationPolicy{1024, 4096});
  CHECK(rep.verdict == Verdict::consistent);
  CHECK(rep.subjects.size() == 2);
  bool saw_rank = false, saw_norel = false;
  for (const auto& c : rep.certificates) {
    if (c.kind == "rank") {
      saw_rank = true;
      CHECK(c.rank == 2);  // |S_5| + |S_8| = 1 + 1
    }
    if (c.kind == "no-relation") saw_norel = true;
  }
  CHECK(saw_rank);
  CHECK(saw_norel);

  // X_{3,e} is empty
  auto vac = verify_theorem_even({3}, 1, mpz_class(1) << 16);
  CHECK(vac.verdict == Verdict::consistent);
  CHECK(vac.subjects.empty());
}

TEST_CASE("pooled independence run, single modulus") {
  mpz_class B = mpz_class(1) << 16;
  EscalationPolicy esc{1024, 4096};
  for (long q : {5L, 7L, 8L, 12L}) {
    auto rep = verify_theorem_all({q}, 1, B, esc);
    CHECK(rep.verdict == Verdict::consistent);
    CHECK(rep.subjects.size() == static_cast<size_t>(euler_phi(q) - 1));
  }
}

TEST_CASE("pooled independence run, two moduli and hypothesis failure") {
  auto rep = verify_theorem_all({5, 13}, 1, mpz_class(1) << 12,
                                EscalationPolicy{1024, 4096});
  CHECK(rep.verdict == Verdict::consistent);
  CHECK(rep.subjects.size() == 14);

  CHECK_THROWS_AS(verify_theorem_all({7, 29}, 1, mpz_class(1) << 12), error);
  try {
    verify_theorem_all({7, 29}, 1, mpz_class(1) << 12);
  } catch (const error& e) {
    CHECK(e.code() == errc::hypothesis_failed);
  }
}

TEST_CASE("cotangent value independence") {
  mpz_class B = mpz_class(1) << 20;
  EscalationPolicy esc{1024, 4096};
  auto r1 = verify_okada({5}, 1, B, esc);
  CHECK(r1.verdict == Verdict::consistent);
  CHECK(r1.subjects.size() == 2);  // cot(pi/5), cot(2pi/5)

  auto r2 = verify_okada({5, 7}, 1, B, esc);
  CHECK(r2.verdict == Verdict::consistent);
  CHECK(r2.subjects.size() == 5);

  auto r3 = verify_okada({5}, 2, B, esc);
  CHECK(r3.verdict == Verdict::consistent);

  CHECK_THROWS_AS(verify_okada({6, 10}, 1, B, esc), error);
  CHECK_THROWS_AS(verify_okada({5}, 0, B, esc), error);
}

TEST_CASE("anomaly injection produces a verifying certificate") {
  mpz_class B = mpz_class(1) << 16;
  EscalationPolicy esc{1024, 4096};
  auto rep = verify_theorem_odd({5, 7}, 1, B, esc, true);
  CHECK(rep.verdict == Verdict::anomaly);
  REQUIRE(rep.certificates.size() == 1);
  const auto& cert = rep.certificates[0];
  CHECK(cert.kind == "relation");
  CHECK(cert.residual.abs_below_pow2(-400));

  // the certificate re-verifies against the reported subject values
  std::vector<Complex> xs;
  for (const auto& s : rep.subjects) xs.push_back(s.value);
  REQUIRE(xs.size() == cert.coefficients.size());
  PrecisionContext ctx(1024);
  Real res = verify_relation(xs, cert.coefficients, ctx);
  CHECK(res.abs_below_pow2(-400));
}

TEST_CASE("erdos survey") {
  mpz_class B = mpz_class(1) << 16;
  EscalationPolicy esc{512, 4096};
  auto rep = erdos_survey({3, 5}, B, esc);
  CHECK(rep.hyp_gcd);
  CHECK(rep.verdict == Verdict::consistent);
  REQUIRE(rep.certificates.size() == 1);
  CHECK(rep.certificates[0].kind == "no-relation");
  CHECK(rep.subjects.size() == 2);

  // gcd(21, phi(21)) = 3: the scan still runs, the search leg does not
  auto part = erdos_survey({3, 7}, B, esc);
  CHECK(!part.hyp_gcd);
  CHECK(part.verdict == Verdict::consistent);
  CHECK(part.certificates.empty());

  // single prime, serial scan path
  auto solo = erdos_survey({3}, B, esc, false);
  CHECK(solo.verdict == Verdict::consistent);
  REQUIRE(solo.certificates.size() == 1);
  CHECK(solo.certificates[0].kind == "nonvanishing");

  CHECK_THROWS_AS(erdos_survey({17}, B, esc), error);
  CHECK_THROWS_AS(erdos_survey({9}, B, esc), error);
  CHECK_THROWS_AS(erdos_survey({3, 3}, B, esc), error);
}
