#include <doctest.h>

#include <random>
#include <set>

#include "wb/affine_weyl.hpp"
#include "wb/verify.hpp"

using namespace wb;

namespace {

ExtAffine word(const AffineWeyl& W, std::initializer_list<int> letters) {
  ExtAffine x = W.identity();
  for (int i : letters) x = W.multiply(x, W.simple(i));
  return x;
}

std::set<ExtAffine, ExtAffineLess> as_set(const std::vector<ExtAffine>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("semidirect product law") {
  AffineWeyl W(build_datum("SL2"));
  ExtAffine t1 = W.translation({1});
  CHECK(W.multiply(W.identity(), t1) == t1);
  CHECK(W.multiply(t1, t1) == W.translation({2}));
  ExtAffine s1 = W.simple(1);
  CHECK(W.multiply(W.multiply(s1, t1), s1) == W.translation({-1}));
  CHECK(W.multiply(t1, W.inverse(t1)) == W.identity());
}

TEST_CASE("inverses and associativity on random elements") {
  for (const char* name : {"GL2", "Sp4", "G2"}) {
    AffineWeyl W(build_datum(name));
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, W.num_generators() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      ExtAffine x = W.identity(), y = W.identity(), z = W.identity();
      for (int i = 0; i < 4; ++i) {
        x = W.multiply(x, W.simple(gen(rng)));
        y = W.multiply(W.simple(gen(rng)), y);
        z = W.multiply(z, W.simple(gen(rng)));
      }
      CHECK(W.multiply(x, W.inverse(x)) == W.identity());
      CHECK(W.multiply(W.multiply(x, y), z) == W.multiply(x, W.multiply(y, z)));
      CHECK(W.length(W.inverse(x)) == W.length(x));
      CHECK(W.length(W.multiply(x, y)) <= W.length(x) + W.length(y));
    }
  }
}

TEST_CASE("datum mismatch is rejected") {
  AffineWeyl sl2(build_datum("SL2"));
  AffineWeyl gl2(build_datum("GL2"));
  CHECK_THROWS_AS(sl2.multiply(sl2.identity(), gl2.identity()), error);
  // Right rank, but not a Weyl matrix of SL3.
  AffineWeyl sl3(build_datum("SL3"));
  ExtAffine fake{{0, 0}, {{1, 1}, {0, 1}}};
  CHECK_THROWS_AS(sl3.length(fake), error);
}

TEST_CASE("lengths: identity, translations, affine generators") {
  AffineWeyl W(build_datum("SL2"));
  CHECK(W.length(W.identity()) == 0);
  CHECK(W.length(W.translation({1})) == 2);  // <2rho, [1]>
  for (int i = 0; i < W.num_generators(); ++i) CHECK(W.length(W.simple(i)) == 1);
  for (const std::string& name : preset_names()) {
    AffineWeyl V(build_datum(name));
    for (int i = 0; i < V.num_generators(); ++i) CHECK(V.length(V.simple(i)) == 1);
    for (const Cocharacter& mu : dominant_cocharacters(V.datum(), 6))
      CHECK(V.length(V.translation(mu)) == V.datum().height(mu));
  }
}

TEST_CASE("length additivity for t_mu * t_lambda w0") {
  for (const std::string& name : preset_names()) {
    AffineWeyl W(build_datum(name));
    const ExtAffine w0 = W.from_finite(W.longest_element());
    std::vector<Cocharacter> grid = dominant_cocharacters(W.datum(), 8);
    for (const Cocharacter& mu : grid)
      for (const Cocharacter& lam : grid) {
        Int lhs = W.length(W.translation(mu)) +
                  W.length(W.multiply(W.translation(lam), w0));
        CHECK(lhs == W.length(W.multiply(W.translation(add(mu, lam)), w0)));
      }
  }
}

TEST_CASE("reduced words recompose, SL2 translation") {
  AffineWeyl W(build_datum("SL2"));
  ReducedWord rw = W.reduced_word(W.translation({1}));
  CHECK(rw.omega == W.identity());
  CHECK(rw.word.size() == 2);
  CHECK(W.recompose(rw) == W.translation({1}));
  ReducedWord id = W.reduced_word(W.identity());
  CHECK(id.word.empty());
  CHECK(id.omega == W.identity());
}

TEST_CASE("reduced words round-trip on random products") {
  for (const std::string& name : preset_names()) {
    AffineWeyl W(build_datum(name));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> gen(0, W.num_generators() - 1);
    std::uniform_int_distribution<int> len(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
      ExtAffine x = W.identity();
      int n = len(rng);
      for (int i = 0; i < n; ++i) x = W.multiply(x, W.simple(gen(rng)));
      ReducedWord rw = W.reduced_word(x);
      CHECK(W.recompose(rw) == x);
      CHECK(static_cast<Int>(rw.word.size()) == W.length(x));
      CHECK(W.length(rw.omega) == 0);
    }
  }
}

TEST_CASE("Omega decomposition") {
  AffineWeyl sl2(build_datum("SL2"));
  auto [om_triv, aff] = sl2.omega_decompose(sl2.translation({1}));
  CHECK(om_triv == sl2.identity());  // X_* = coroot lattice for SL2
  CHECK(aff == sl2.translation({1}));
  CHECK(sl2.omega_generators().empty());
  CHECK_THROWS_AS(sl2.omega_pi(), error);

  AffineWeyl gl2(build_datum("GL2"));
  ExtAffine t10 = gl2.translation({1, 0});
  CHECK(gl2.length(t10) == 1);
  auto [om, wa] = gl2.omega_decompose(t10);
  CHECK(gl2.length(om) == 0);
  CHECK_FALSE(om == gl2.identity());  // [1,0] is not in the coroot lattice
  CHECK(gl2.multiply(om, wa) == t10);
  CHECK(gl2.length(wa) == gl2.length(t10));
  CHECK(gl2.omega_exponent(om) == 1);
  CHECK(om == gl2.omega_pi());

  // The Omega class is the image of the translation part in X_*/Q-vee.
  ExtAffine t11 = gl2.translation({1, 1});
  CHECK(gl2.length(t11) == 0);
  CHECK(gl2.omega_exponent(t11) == 2);
  CHECK(gl2.multiply(gl2.omega_pi(), gl2.omega_pi()) == t11);
}

TEST_CASE("Omega conjugation permutes the affine simple reflections") {
  for (const char* name : {"GL2", "GL3"}) {
    AffineWeyl W(build_datum(name));
    for (const ExtAffine& om : W.omega_generators()) {
      for (int i = 0; i < W.num_generators(); ++i) {
        ExtAffine conj = W.multiply(W.multiply(om, W.simple(i)), W.inverse(om));
        bool found = false;
        for (int j = 0; j < W.num_generators(); ++j)
          if (conj == W.simple(j)) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("Bruhat order basics") {
  AffineWeyl W(build_datum("SL2"));
  ExtAffine s0 = W.simple(0), s1 = W.simple(1);
  ExtAffine s0s1 = word(W, {0, 1}), s1s0 = word(W, {1, 0});
  CHECK(W.bruhat_leq(s0s1, s0s1));
  CHECK(W.bruhat_leq(s0, s0s1));
  CHECK(W.bruhat_leq(s1, s0s1));
  CHECK_FALSE(W.bruhat_leq(s1s0, s0s1));
  CHECK_FALSE(W.bruhat_leq(s0s1, s1s0));

  AffineWeyl gl2(build_datum("GL2"));
  CHECK_FALSE(gl2.bruhat_leq(gl2.omega_pi(), gl2.identity()));  // distinct components
  CHECK_FALSE(gl2.bruhat_leq(gl2.identity(), gl2.translation({1, 0})));
  CHECK(gl2.bruhat_leq(gl2.omega_pi(), gl2.translation({1, 0})));
}

TEST_CASE("Bruhat order agrees with the subword oracle on a small ball") {
  for (const char* name : {"SL2", "GL2", "SL3"}) {
    AffineWeyl W(build_datum(name));
    std::vector<ExtAffine> ball = waff_ball(W, 4);
    for (const ExtAffine& y : ball) {
      auto closure = as_set(subword_closure(W, y));
      for (const ExtAffine& x : ball)
        CHECK(W.bruhat_leq(x, y) == (closure.count(x) > 0));
    }
  }
}

TEST_CASE("admissible sets: SL2 and GL2 frozen examples") {
  AffineWeyl W(build_datum("SL2"));
  CHECK(W.admissible_set({0}) == std::vector<ExtAffine>{W.identity()});
  auto adm1 = as_set(W.admissible_set({1}));
  CHECK(adm1 == as_set({W.identity(), W.simple(0), W.simple(1), word(W, {0, 1}),
                        word(W, {1, 0})}));
  CHECK_THROWS_AS(W.admissible_set({-1}), error);

  // |Adm([m])| = 4m + 1 in the infinite dihedral group.
  for (Int m = 1; m <= 5; ++m)
    CHECK(W.admissible_set({m}).size() == static_cast<std::size_t>(4 * m + 1));

  AffineWeyl gl2(build_datum("GL2"));
  auto adm10 = gl2.admissible_set({1, 0});
  CHECK(adm10.size() == 3);
  CHECK(as_set(adm10) == as_set({gl2.omega_pi(), gl2.translation({1, 0}),
                                 gl2.translation({0, 1})}));
}

TEST_CASE("admissible sets are Bruhat downward closed with maximal translations") {
  for (const char* name : {"SL2", "GL2", "SL3", "Sp4"}) {
    AffineWeyl W(build_datum(name));
    for (const Cocharacter& mu : dominant_cocharacters(W.datum(), 4)) {
      auto adm = W.admissible_set(mu);
      auto adm_set = as_set(adm);
      Int top = W.datum().height(mu);
      std::set<ExtAffine, ExtAffineLess> maximal;
      for (const ExtAffine& w : adm) {
        CHECK(W.length(w) <= top);
        if (W.length(w) == top) maximal.insert(w);
        for (const ExtAffine& below : W.lower_interval(w))
          CHECK(adm_set.count(below) == 1);
      }
      std::set<ExtAffine, ExtAffineLess> translations;
      for (const Cocharacter& lam : weyl_orbit(W.datum(), mu))
        translations.insert(W.translation(lam));
      CHECK(maximal == translations);
    }
  }
}

TEST_CASE("strata report") {
  AffineWeyl W(build_datum("SL2"));
  auto rows = W.a_mu_report({1});
  REQUIRE(rows.size() == 5);
  std::multiset<Int> lengths;
  for (const auto& [w, len] : rows) lengths.insert(len);
  CHECK(lengths == std::multiset<Int>{0, 1, 1, 2, 2});
  CHECK(rows.back().second == W.datum().height({1}));

  AffineWeyl gl2(build_datum("GL2"));
  auto gl2_rows = gl2.a_mu_report({1, 0});
  std::multiset<Int> gl2_lengths;
  for (const auto& [w, len] : gl2_rows) gl2_lengths.insert(len);
  CHECK(gl2_lengths == std::multiset<Int>{0, 1, 1});

  auto zero_rows = gl2.a_mu_report({0, 0});
  REQUIRE(zero_rows.size() == 1);
  CHECK(zero_rows[0].second == 0);
}

TEST_CASE("admissible sets match the subword enumeration oracle") {
  for (const char* name : {"SL2", "GL2", "SL3", "Sp4", "G2"}) {
    AffineWeyl W(build_datum(name));
    for (const Cocharacter& mu : dominant_cocharacters(W.datum(), 6))
      CHECK(W.admissible_set(mu) == admissible_set_bruteforce(W, mu));
  }
}

TEST_CASE("alcove shells grow as in the classical tilings") {
  // Infinite dihedral: exactly two elements of each positive length.
  AffineWeyl sl2(build_datum("SL2"));
  std::map<Int, int> shells;
  for (const ExtAffine& x : waff_ball(sl2, 7)) ++shells[sl2.length(x)];
  CHECK(shells[0] == 1);
  for (Int k = 1; k <= 7; ++k) CHECK(shells[k] == 2);

  // Triangular tiling of the plane: 3k alcoves at gallery distance k.
  AffineWeyl sl3(build_datum("SL3"));
  std::map<Int, int> shells3;
  for (const ExtAffine& x : waff_ball(sl3, 7)) ++shells3[sl3.length(x)];
  CHECK(shells3[0] == 1);
  for (Int k = 1; k <= 7; ++k) CHECK(shells3[k] == 3 * k);
}

TEST_CASE("central translations shift admissible sets through Omega") {
  AffineWeyl W(build_datum("GL2"));
  ExtAffine central = W.translation({1, 1});
  auto base = W.admissible_set({1, 0});
  auto shifted = as_set(W.admissible_set({2, 1}));
  std::set<ExtAffine, ExtAffineLess> expected;
  for (const ExtAffine& w : base) expected.insert(W.multiply(central, w));
  CHECK(shifted == expected);
}
