#include <doctest.h>

#include <random>

#include "wb/textio.hpp"

using namespace wb;

TEST_CASE("cocharacter strings") {
  CHECK(cochar_to_string({1, -2}) == "[1,-2]");
  CHECK(parse_cochar("[1,-2]") == Vec{1, -2});
  CHECK(parse_cochar("1,-2") == Vec{1, -2});
  CHECK(parse_cochar(" 3 ") == Vec{3});
  CHECK_THROWS_AS(parse_cochar(""), error);
  CHECK_THROWS_AS(parse_cochar("[1,]"), error);
  CHECK_THROWS_AS(parse_cochar("[1,a]"), error);
}

TEST_CASE("element grammar round trips") {
  for (const char* name : {"SL2", "GL2", "G2"}) {
    AffineWeyl W(build_datum(name));
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> gen(0, W.num_generators() - 1);
    std::uniform_int_distribution<int> len(0, 7);
    for (int trial = 0; trial < 40; ++trial) {
      ExtAffine x = W.identity();
      if (!W.omega_generators().empty() && trial % 3 == 0)
        x = W.multiply(x, W.omega_pi());
      int n = len(rng);
      for (int i = 0; i < n; ++i) x = W.multiply(x, W.simple(gen(rng)));
      CHECK(parse_element(W, element_to_string(W, x)) == x);
    }
  }
}

TEST_CASE("element grammar forms") {
  AffineWeyl W(build_datum("GL2"));
  CHECK(parse_element(W, "e") == W.identity());
  CHECK(parse_element(W, "s0 s1") == W.multiply(W.simple(0), W.simple(1)));
  CHECK(parse_element(W, "t[1,0]") == W.translation({1, 0}));
  CHECK(parse_element(W, "t[1,-1]") == W.translation({1, -1}));
  CHECK(parse_element(W, "pi") == W.omega_pi());
  CHECK(parse_element(W, "pi^2") == W.translation({1, 1}));
  CHECK(parse_element(W, "pi^-1") == W.inverse(W.omega_pi()));
  CHECK(parse_element(W, "pi^0") == W.identity());
  CHECK(parse_element(W, "t[1,0] t[0,1]") == W.translation({1, 1}));
  CHECK(element_to_string(W, W.identity()) == "e");

  CHECK_THROWS_AS(parse_element(W, ""), error);
  CHECK_THROWS_AS(parse_element(W, "s7"), error);
  CHECK_THROWS_AS(parse_element(W, "t[1]"), error);
  CHECK_THROWS_AS(parse_element(W, "foo"), error);
  CHECK_THROWS_AS(parse_element(W, "t[1,0"), error);

  AffineWeyl sl2(build_datum("SL2"));
  CHECK_THROWS_AS(parse_element(sl2, "pi"), error);
}

TEST_CASE("Hecke expression grammar") {
  AffineWeyl W(build_datum("SL2"));
  HeckeAlgebra<GenericQ> HQ(W, GenericQ{});
  GenericQ R;

  auto parsed = parse_hecke(HQ, "(q-1)*T[s0] + T[e]");
  auto expected = HQ.add(HQ.scale(R.sub(R.q(), R.one()), HQ.t_basis(W.simple(0))),
                         HQ.one());
  CHECK(HQ.equal(parsed, expected));

  CHECK(HQ.equal(parse_hecke(HQ, "T[s0 s1] - T[s0 s1]"), HQ.zero()));
  CHECK(HQ.equal(parse_hecke(HQ, "0"), HQ.zero()));
  CHECK(HQ.equal(parse_hecke(HQ, "-T[s1]"), HQ.scale(R.from_int(-1), HQ.t_basis(W.simple(1)))));
  CHECK(HQ.equal(parse_hecke(HQ, "2*q*T[t[1]]"),
                 HQ.scale(R.mul(R.from_int(2), R.q()), HQ.t_basis(W.translation({1})))));

  CHECK_THROWS_AS(parse_hecke(HQ, "q-1"), error);        // no T[...]
  CHECK_THROWS_AS(parse_hecke(HQ, "(q-1) T[s0]"), error);  // missing '*'
  CHECK_THROWS_AS(parse_hecke(HQ, "T[s0] junk"), error);
  CHECK_THROWS_AS(parse_hecke(HQ, ""), error);

  HeckeAlgebra<PrimeField> H3(W, PrimeField(3, 0));
  auto fp = parse_hecke(H3, "(q-1)*T[s0] + 4*T[e]");
  auto fp_expected = H3.add(H3.scale(2, H3.t_basis(W.simple(0))), H3.one());
  CHECK(H3.equal(fp, fp_expected));
}

TEST_CASE("Hecke strings round trip bit-exactly") {
  for (const char* name : {"SL2", "GL2"}) {
    AffineWeyl W(build_datum(name));
    HeckeAlgebra<GenericQ> HQ(W, GenericQ{});
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> gen(0, W.num_generators() - 1);
    std::uniform_int_distribution<Int> coeff(-3, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    for (int trial = 0; trial < 30; ++trial) {
      auto e = HQ.zero();
      for (int t = 0; t < 3; ++t) {
        ExtAffine x = W.identity();
        for (int i = 0; i < t; ++i) x = W.multiply(x, W.simple(gen(rng)));
        ZPoly p;
        p.coeffs.assign(deg(rng) + 1, 0);
        for (Int& c : p.coeffs) c = coeff(rng);
        p.trim();
        e = HQ.add(e, HQ.scale(p, HQ.t_basis(x)));
      }
      std::string text = hecke_to_string(HQ, e);
      CHECK(HQ.equal(parse_hecke(HQ, text), e));
      CHECK(hecke_to_string(HQ, parse_hecke(HQ, text)) == text);
    }

    HeckeAlgebra<PrimeField> H5(W, PrimeField(5, 0));
    auto z = H5.z_mu(W.datum().rank == 1 ? Vec{2} : Vec{1, 0});
    std::string text = hecke_to_string(H5, z);
    CHECK(H5.equal(parse_hecke(H5, text), z));
  }
}

TEST_CASE("element JSON") {
  AffineWeyl W(build_datum("GL2"));
  ExtAffine x = W.multiply(W.omega_pi(), W.simple(0));
  Json j = element_to_json(x);
  CHECK(j.contains("t"));
  CHECK(j.contains("w"));
  CHECK(element_from_json(W, j) == x);
  j["w"] = Mat{{1, 1}, {0, 1}};  // not a Weyl matrix
  CHECK_THROWS_AS(element_from_json(W, j), error);
}

TEST_CASE("Hecke JSON round trips") {
  AffineWeyl W(build_datum("SL2"));
  HeckeAlgebra<GenericQ> HQ(W, GenericQ{});
  auto e = parse_hecke(HQ, "(q^2-1)*T[s0 s1] - T[e] + 3*T[s1]");
  Json j = hecke_to_json(HQ, e);
  CHECK(j["ring"]["kind"] == "generic-q");
  CHECK(HQ.equal(hecke_from_json(HQ, j), e));

  HeckeAlgebra<PrimeField> H3(W, PrimeField(3, 0));
  auto z = H3.z_mu({1});
  Json jz = hecke_to_json(H3, z);
  CHECK(jz["ring"]["p"] == 3);
  CHECK(H3.equal(hecke_from_json(H3, jz), z));

  HeckeAlgebra<PrimeField> H5(W, PrimeField(5, 0));
  CHECK_THROWS_AS(hecke_from_json(H5, jz), error);  // ring mismatch
}

TEST_CASE("spherical and monomial JSON") {
  AffineWeyl W(build_datum("GL2"));
  Satake S(W, PrimeField(3, 0));
  auto a = S.spherical_add(S.spherical_basis({1, 0}, 2), S.spherical_basis({1, 1}));
  CHECK(S.spherical_equal(spherical_from_json(S, spherical_to_json(S, a)), a));
  auto m = S.monomial({2, 0}, 2);
  CHECK(S.monomial_equal(monomial_from_json(S, monomial_to_json(S, m)), m));
}

TEST_CASE("datum JSON fields") {
  Json j = datum_to_json(build_datum("Sp4"));
  CHECK(j["name"] == "Sp4");
  CHECK(j["rank"] == 2);
  CHECK(j["simple_roots"].size() == 2);
  CHECK(j["positive_roots"].size() == 4);
  CHECK(j["highest_root"] == Json::array({2, 0}));
  CHECK(j["two_rho"] == Json::array({4, 2}));
  CHECK(j["pairing"].size() == 2);
}
