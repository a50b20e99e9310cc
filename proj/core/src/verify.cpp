#include "wb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace wb {

bool VerificationReport::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.pass; });
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const CaseResult& c : cases)
    if (!c.pass) ++n;
  return n;
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["suite"] = suite;
  j["group"] = group;
  j["params"] = params;
  j["passed"] = passed();
  Json arr = Json::array();
  for (const CaseResult& c : cases) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.pass) cj["counterexample"] = c.detail;
    arr.push_back(std::move(cj));
  }
  j["cases"] = std::move(arr);
  if (include_timing) j["duration_ms"] = duration_ms;
  return j;
}

std::string VerificationReport::summary_line() const {
  std::ostringstream os;
  os << (passed() ? "PASS" : "FAIL") << " " << suite << " group=" << group
     << " cases=" << cases.size() << " failures=" << failures() << " ("
     << static_cast<long long>(duration_ms) << " ms)";
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const CaseResult& c : cases) {
    os << (c.pass ? "  ok   " : "  FAIL ") << c.name;
    if (!c.pass) os << "\n       counterexample: " << c.detail;
    os << "\n";
  }
  os << summary_line() << "\n";
  return os.str();
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

Json params_json(const VerifyOptions& opts) {
  Json p;
  p["height"] = opts.height;
  p["primes"] = opts.primes;
  return p;
}

std::vector<PrimeField> rings_for(const VerifyOptions& opts) {
  std::vector<PrimeField> rings;
  for (Int p : opts.primes) rings.emplace_back(p, 0, opts.allow_p2);
  return rings;
}

// Dominant box enumeration with |coordinate| <= bound, sorted by height.
std::vector<Cocharacter> dominant_box(const RootDatum& d, Int bound) {
  std::vector<std::pair<Int, Vec>> found;
  Vec mu(d.rank, -bound);
  for (;;) {
    if (d.is_dominant(mu)) found.emplace_back(d.height(mu), mu);
    int pos = d.rank - 1;
    while (pos >= 0) {
      if (mu[pos] < bound) {
        ++mu[pos];
        break;
      }
      mu[pos] = -bound;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(found.begin(), found.end());
  std::vector<Cocharacter> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace

std::vector<ExtAffine> subword_closure(const AffineWeyl& W, const ExtAffine& y) {
  ReducedWord rw = W.reduced_word(y);
  const std::size_t k = rw.word.size();
  if (k > 20) throw error("subword oracle refuses words longer than 20");
  std::set<ExtAffine, ExtAffineLess> acc;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    ExtAffine x = rw.omega;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) x = W.multiply(x, W.simple(rw.word[i]));
    acc.insert(x);
  }
  return {acc.begin(), acc.end()};
}

std::vector<ExtAffine> admissible_set_bruteforce(const AffineWeyl& W,
                                                 const Cocharacter& mu) {
  if (!W.datum().is_dominant(mu))
    throw error("admissible set requires a dominant cocharacter");
  std::set<ExtAffine, ExtAffineLess> acc;
  for (const Cocharacter& lam : weyl_orbit(W.datum(), mu))
    for (const ExtAffine& x : subword_closure(W, W.translation(lam))) acc.insert(x);
  std::vector<ExtAffine> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [&](const ExtAffine& a, const ExtAffine& b) {
    Int la = W.length(a), lb = W.length(b);
    if (la != lb) return la < lb;
    return ExtAffineLess{}(a, b);
  });
  return out;
}

std::vector<ExtAffine> waff_ball(const AffineWeyl& W, Int max_length) {
  std::set<ExtAffine, ExtAffineLess> seen{W.identity()};
  std::queue<ExtAffine> queue;
  queue.push(W.identity());
  while (!queue.empty()) {
    ExtAffine x = queue.front();
    queue.pop();
    for (int i = 0; i < W.num_generators(); ++i) {
      ExtAffine y = W.multiply(x, W.simple(i));
      if (W.length(y) > max_length || seen.count(y)) continue;
      seen.insert(y);
      queue.push(y);
    }
  }
  return {seen.begin(), seen.end()};
}

VerificationReport verify_central(const AffineWeyl& W, const VerifyOptions& opts) {
  Timer timer;
  VerificationReport report{"central", W.datum().name, params_json(opts), {}, 0};
  for (const PrimeField& ring : rings_for(opts)) {
    Satake S(W, ring);
    const auto& H = S.hecke();
    for (const Cocharacter& mu : dominant_cocharacters(W.datum(), opts.height)) {
      CaseResult c;
      c.name = "p=" + std::to_string(ring.p) + " mu=" + cochar_to_string(mu);
      auto z = H.z_mu(mu);
      bool central = H.is_central(z);
      auto lhs = H.mul(z, H.one_K());
      auto rhs = S.to_iwahori(S.satake_inverse(S.monomial(mu)));
      bool equal = H.equal(lhs, rhs);
      c.pass = central && equal;
      if (!c.pass) {
        c.detail = "group=" + W.datum().name + " p=" + std::to_string(ring.p) +
                   " mu=" + cochar_to_string(mu) +
                   (central ? "" : " [z_mu not central]") +
                   (equal ? "" : " [z_mu*1_K=" + hecke_to_string(H, lhs) +
                                     " expected " + hecke_to_string(H, rhs) + "]");
      }
      report.cases.push_back(std::move(c));
    }
  }
  report.duration_ms = timer.ms();
  return report;
}

VerificationReport verify_bernstein(const AffineWeyl& W, const VerifyOptions& opts) {
  Timer timer;
  VerificationReport report{"bernstein", W.datum().name, params_json(opts), {}, 0};
  for (const PrimeField& ring : rings_for(opts)) {
    Satake S(W, ring);
    const auto& H = S.hecke();
    for (const Cocharacter& mu : dominant_cocharacters(W.datum(), opts.height)) {
      CaseResult c;
      c.name = "p=" + std::to_string(ring.p) + " mu=" + cochar_to_string(mu);
      auto via_bernstein = S.bernstein_map(S.monomial(mu));
      auto direct = H.z_mu(mu);
      bool equal = H.equal(via_bernstein, direct);
      bool central = H.is_central(direct);
      c.pass = equal && central;
      if (!c.pass)
        c.detail = "group=" + W.datum().name + " p=" + std::to_string(ring.p) +
                   " mu=" + cochar_to_string(mu) +
                   (equal ? "" : " [bernstein path gives " +
                                     hecke_to_string(H, via_bernstein) + "]") +
                   (central ? "" : " [z_mu not central]");
      report.cases.push_back(std::move(c));
    }
  }
  report.duration_ms = timer.ms();
  return report;
}

VerificationReport verify_monoidal(const AffineWeyl& W, const VerifyOptions& opts) {
  Timer timer;
  VerificationReport report{"monoidal", W.datum().name, params_json(opts), {}, 0};
  std::vector<Cocharacter> grid = dominant_cocharacters(W.datum(), opts.height);
  for (const PrimeField& ring : rings_for(opts)) {
    HeckeAlgebra<PrimeField> H(W, ring);
    for (const Cocharacter& mu : grid) {
      for (const Cocharacter& nu : grid) {
        if (W.datum().height(mu) + W.datum().height(nu) > opts.height) continue;
        CaseResult c;
        c.name = "p=" + std::to_string(ring.p) + " mu=" + cochar_to_string(mu) +
                 " nu=" + cochar_to_string(nu);
        auto prod = H.mul(H.z_mu(mu), H.z_mu(nu));
        auto expected = H.z_mu(add(mu, nu));
        c.pass = H.equal(prod, expected);
        if (!c.pass)
          c.detail = "group=" + W.datum().name + " p=" + std::to_string(ring.p) +
                     " mu=" + cochar_to_string(mu) + " nu=" + cochar_to_string(nu) +
                     " z_mu*z_nu=" + hecke_to_string(H, prod);
        report.cases.push_back(std::move(c));
      }
    }
  }
  report.duration_ms = timer.ms();
  return report;
}

VerificationReport verify_coxeter(const AffineWeyl& W) {
  Timer timer;
  const RootDatum& d = W.datum();
  VerificationReport report{"coxeter", d.name, Json::object(), {}, 0};

  {  // translation length = <2rho, mu> on the dominant box
    CaseResult c;
    std::vector<Cocharacter> box = dominant_box(d, 3);
    c.name = "translation-length-height (" + std::to_string(box.size()) + " dominants)";
    c.pass = true;
    for (const Cocharacter& mu : box) {
      if (W.length(W.translation(mu)) != d.height(mu)) {
        c.pass = false;
        c.detail = "mu=" + cochar_to_string(mu) +
                   " length=" + std::to_string(W.length(W.translation(mu))) +
                   " height=" + std::to_string(d.height(mu));
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // length additivity: l(t_mu) + l(t_lambda w0) = l(t_{mu+lambda} w0)
    CaseResult c;
    std::vector<Cocharacter> box = dominant_box(d, 3);
    c.name = "length-additivity (" + std::to_string(box.size() * box.size()) + " pairs)";
    c.pass = true;
    const ExtAffine w0 = W.from_finite(W.longest_element());
    for (const Cocharacter& mu : box) {
      for (const Cocharacter& lam : box) {
        Int lhs = W.length(W.translation(mu)) +
                  W.length(W.multiply(W.translation(lam), w0));
        Int rhs = W.length(W.multiply(W.translation(add(mu, lam)), w0));
        if (lhs != rhs) {
          c.pass = false;
          c.detail = "mu=" + cochar_to_string(mu) + " lambda=" + cochar_to_string(lam) +
                     " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.cases.push_back(std::move(c));
  }

  {  // Bruhat order against the subword oracle on the length-6 ball
    CaseResult c;
    std::vector<ExtAffine> ball = waff_ball(W, 6);
    c.name = "bruhat-subword-oracle (" + std::to_string(ball.size() * ball.size()) +
             " pairs)";
    c.pass = true;
    for (const ExtAffine& y : ball) {
      std::vector<ExtAffine> closure = subword_closure(W, y);
      std::set<ExtAffine, ExtAffineLess> in_closure(closure.begin(), closure.end());
      for (const ExtAffine& x : ball) {
        bool lifting = W.bruhat_leq(x, y);
        bool oracle = in_closure.count(x) > 0;
        if (lifting != oracle) {
          c.pass = false;
          c.detail = "x=" + element_to_string(W, x) + " y=" + element_to_string(W, y) +
                     " lifting=" + std::to_string(lifting) +
                     " subword=" + std::to_string(oracle);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.cases.push_back(std::move(c));
  }

  {  // Cartan partition: each element lies in exactly one W t_lambda W
    CaseResult c;
    std::vector<ExtAffine> ball = waff_ball(W, 6);
    std::vector<ExtAffine> probe = ball;
    for (const ExtAffine& om : W.omega_generators())
      for (const ExtAffine& x : ball) probe.push_back(W.multiply(om, x));
    c.name = "cartan-partition (" + std::to_string(probe.size()) + " elements)";
    c.pass = true;
    std::set<Vec> rep_set;
    for (const ExtAffine& x : probe) rep_set.insert(W.coset_dominant(x));
    HeckeAlgebra<PrimeField> H(W, PrimeField(3, 0));
    std::map<Vec, std::set<ExtAffine, ExtAffineLess>> supports;
    for (const Vec& lam : rep_set) {
      auto ind = H.double_coset_indicator(lam);
      for (const auto& [w, coeff] : ind.terms) supports[lam].insert(w);
    }
    for (const ExtAffine& x : probe) {
      int memberships = 0;
      for (const auto& [lam, supp] : supports)
        if (supp.count(x)) ++memberships;
      bool in_own = supports[W.coset_dominant(x)].count(x) > 0;
      if (memberships != 1 || !in_own) {
        c.pass = false;
        c.detail = "x=" + element_to_string(W, x) + " lies in " +
                   std::to_string(memberships) + " double cosets";
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // reduced-word round trip on random products
    CaseResult c;
    const int kWords = 200;
    c.name = "reduced-word-roundtrip (" + std::to_string(kWords) + " random words)";
    c.pass = true;
    std::mt19937 rng(20240311);
    std::uniform_int_distribution<int> len_dist(0, 8);
    std::uniform_int_distribution<int> gen_dist(0, W.num_generators() - 1);
    const auto& omegas = W.omega_generators();
    std::uniform_int_distribution<int> omega_dist(0, static_cast<int>(omegas.size()));
    for (int trial = 0; trial < kWords; ++trial) {
      ExtAffine x = W.identity();
      if (!omegas.empty()) {
        int pick = omega_dist(rng);
        if (pick > 0) x = W.multiply(x, omegas[pick - 1]);
      }
      int len = len_dist(rng);
      for (int i = 0; i < len; ++i) x = W.multiply(x, W.simple(gen_dist(rng)));
      ReducedWord rw = W.reduced_word(x);
      bool ok = W.recompose(rw) == x &&
                static_cast<Int>(rw.word.size()) == W.length(x) &&
                W.length(rw.omega) == 0;
      if (!ok) {
        c.pass = false;
        c.detail = "element " + element_to_string(W, x);
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // Bruhat vs dominance on dominant translations
    CaseResult c;
    std::vector<Cocharacter> grid = dominant_cocharacters(d, 6);
    c.name = "bruhat-dominance-translations (" +
             std::to_string(grid.size() * grid.size()) + " pairs)";
    c.pass = true;
    for (const Cocharacter& lam : grid) {
      for (const Cocharacter& mu : grid) {
        bool bruhat = W.bruhat_leq(W.translation(lam), W.translation(mu));
        bool dom = dominance_leq(d, lam, mu);
        if (bruhat != dom) {
          c.pass = false;
          c.detail = "lambda=" + cochar_to_string(lam) + " mu=" + cochar_to_string(mu) +
                     " bruhat=" + std::to_string(bruhat) +
                     " dominance=" + std::to_string(dom);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.cases.push_back(std::move(c));
  }

  report.duration_ms = timer.ms();
  return report;
}

VerificationReport verify_oracles(const AffineWeyl& W, const VerifyOptions& opts) {
  Timer timer;
  const RootDatum& d = W.datum();
  VerificationReport report{"oracles", d.name, params_json(opts), {}, 0};
  HeckeAlgebra<GenericQ> HQ(W, GenericQ{});

  {  // BFS admissible sets against the 2^l subword enumeration
    CaseResult c;
    std::vector<Cocharacter> grid = dominant_cocharacters(d, 8);
    c.name = "admissible-bfs-vs-subwords (" + std::to_string(grid.size()) + " mu)";
    c.pass = true;
    for (const Cocharacter& mu : grid) {
      auto bfs = W.admissible_set(mu);
      auto brute = admissible_set_bruteforce(W, mu);
      if (bfs != brute) {
        c.pass = false;
        c.detail = "mu=" + cochar_to_string(mu) + " bfs size " +
                   std::to_string(bfs.size()) + " brute size " +
                   std::to_string(brute.size());
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // quadratic relation over Z[q]
    CaseResult c;
    c.name = "quadratic-relation";
    c.pass = true;
    GenericQ R;
    auto q = R.q();
    for (int i = 0; i < W.num_generators(); ++i) {
      auto ts = HQ.t_basis(W.simple(i));
      auto expected = HQ.add(HQ.scale(q, HQ.one()), HQ.scale(R.sub(q, R.one()), ts));
      if (!HQ.equal(HQ.mul(ts, ts), expected)) {
        c.pass = false;
        c.detail = "generator s" + std::to_string(i);
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // length-additive products multiply in the T-basis
    CaseResult c;
    std::vector<ExtAffine> ball = waff_ball(W, 6);
    c.name = "braid-length-additivity (ball " + std::to_string(ball.size()) + ")";
    c.pass = true;
    for (const ExtAffine& u : ball) {
      for (const ExtAffine& v : ball) {
        if (W.length(u) + W.length(v) > 6) continue;
        ExtAffine uv = W.multiply(u, v);
        if (W.length(uv) != W.length(u) + W.length(v)) continue;
        if (!HQ.equal(HQ.mul(HQ.t_basis(u), HQ.t_basis(v)), HQ.t_basis(uv))) {
          c.pass = false;
          c.detail = "u=" + element_to_string(W, u) + " v=" + element_to_string(W, v);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.cases.push_back(std::move(c));
  }

  {  // Omega twist permutes the affine simple generators
    CaseResult c;
    c.name = "omega-twist";
    c.pass = true;
    for (const ExtAffine& om : W.omega_generators()) {
      for (int i = 0; i < W.num_generators(); ++i) {
        ExtAffine conj = W.multiply(W.multiply(om, W.simple(i)), W.inverse(om));
        bool is_simple = false;
        for (int j = 0; j < W.num_generators(); ++j)
          if (conj == W.simple(j)) is_simple = true;
        auto lhs = HQ.mul(HQ.mul(HQ.t_basis(om), HQ.t_basis(W.simple(i))),
                          HQ.t_basis(W.inverse(om)));
        if (!is_simple || !HQ.equal(lhs, HQ.t_basis(conj))) {
          c.pass = false;
          c.detail = "omega=" + element_to_string(W, om) + " i=" + std::to_string(i);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.cases.push_back(std::move(c));
  }

  {  // associativity over Z[q] on random basis triples
    CaseResult c;
    const int kTriples = 200;
    c.name = "generic-associativity (" + std::to_string(kTriples) + " triples)";
    c.pass = true;
    std::mt19937 rng(577215664);
    std::uniform_int_distribution<int> len_dist(0, 5);
    std::uniform_int_distribution<int> gen_dist(0, W.num_generators() - 1);
    auto random_basis = [&]() {
      ExtAffine x = W.identity();
      int len = len_dist(rng);
      for (int i = 0; i < len; ++i) x = W.multiply(x, W.simple(gen_dist(rng)));
      return HQ.t_basis(x);
    };
    for (int trial = 0; trial < kTriples; ++trial) {
      auto a = random_basis(), b = random_basis(), cc = random_basis();
      if (!HQ.equal(HQ.mul(HQ.mul(a, b), cc), HQ.mul(a, HQ.mul(b, cc)))) {
        c.pass = false;
        c.detail = "trial " + std::to_string(trial);
        break;
      }
    }
    report.cases.push_back(std::move(c));
  }

  {  // specialization is a ring homomorphism
    CaseResult c;
    const int kPairs = 200;
    c.name = "specialization-homomorphism (" + std::to_string(kPairs) + " pairs)";
    c.pass = true;
    std::mt19937 rng(362436069);
    std::uniform_int_distribution<int> len_dist(0, 4);
    std::uniform_int_distribution<int> gen_dist(0, W.num_generators() - 1);
    std::uniform_int_distribution<Int> coeff_dist(-4, 4);
    std::uniform_int_distribution<int> deg_dist(0, 2);
    std::uniform_int_distribution<int> nterms_dist(1, 3);
    auto random_elt = [&]() {
      auto e = HQ.zero();
      int nterms = nterms_dist(rng);
      for (int t = 0; t < nterms; ++t) {
        ExtAffine x = W.identity();
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) x = W.multiply(x, W.simple(gen_dist(rng)));
        ZPoly poly;
        poly.coeffs.assign(deg_dist(rng) + 1, 0);
        for (Int& cf : poly.coeffs) cf = coeff_dist(rng);
        poly.trim();
        e = HQ.add(e, HQ.scale(poly, HQ.t_basis(x)));
      }
      return e;
    };
    std::size_t ring_idx = 0;
    auto rings = rings_for(opts);
    for (int trial = 0; trial < kPairs && c.pass; ++trial) {
      const PrimeField& f = rings[ring_idx++ % rings.size()];
      HeckeAlgebra<PrimeField> HP(W, f);
      auto a = random_elt(), b = random_elt();
      bool mul_ok = HP.equal(specialize(HQ.mul(a, b), f),
                             HP.mul(specialize(a, f), specialize(b, f)));
      bool add_ok = HP.equal(specialize(HQ.add(a, b), f),
                             HP.add(specialize(a, f), specialize(b, f)));
      if (!mul_ok || !add_ok) {
        c.pass = false;
        c.detail = "trial " + std::to_string(trial) + " p=" + std::to_string(f.p);
      }
    }
    report.cases.push_back(std::move(c));
  }

  report.duration_ms = timer.ms();
  return report;
}

std::vector<VerificationReport> verify_all(const AffineWeyl& W,
                                           const VerifyOptions& opts) {
  return {verify_central(W, opts), verify_bernstein(W, opts),
          verify_monoidal(W, opts), verify_coxeter(W), verify_oracles(W, opts)};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

}  // namespace

std::string export_table(const AffineWeyl& W, const std::string& table,
                         const std::string& format, Int max_height,
                         const Cocharacter* mu) {
  const bool csv = format == "csv";
  if (!csv && format != "json") throw error("unknown export format '" + format + "'");
  std::ostringstream os;

  if (table == "adm-sizes") {
    std::vector<Cocharacter> grid = dominant_cocharacters(W.datum(), max_height);
    if (csv) {
      os << "mu,size\n";
      for (const Cocharacter& m : grid)
        os << csv_field("t" + cochar_to_string(m)) << ","
           << W.admissible_set(m).size() << "\n";
    } else {
      Json rows = Json::array();
      for (const Cocharacter& m : grid) {
        Json row;
        row["mu"] = m;
        row["size"] = W.admissible_set(m).size();
        rows.push_back(std::move(row));
      }
      os << rows.dump(1) << "\n";
    }
    return os.str();
  }

  if (table == "strata") {
    if (!mu) throw error("strata table needs --mu");
    auto rows = W.a_mu_report(*mu);
    if (csv) {
      os << "element,length\n";
      for (const auto& [w, len] : rows)
        os << csv_field(element_to_string(W, w)) << "," << len << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& [w, len] : rows) {
        Json row;
        row["element"] = element_to_string(W, w);
        row["length"] = len;
        arr.push_back(std::move(row));
      }
      os << arr.dump(1) << "\n";
    }
    return os.str();
  }

  if (table == "matrix") {
    // Unitriangular matrix of the inverse Satake map: entry (mu, lambda)
    // is 1 iff lambda <= mu in dominance order.
    std::vector<Cocharacter> grid = dominant_cocharacters(W.datum(), max_height);
    if (csv) {
      os << "mu\\lambda";
      for (const Cocharacter& lam : grid) os << "," << csv_field("t" + cochar_to_string(lam));
      os << "\n";
      for (const Cocharacter& m : grid) {
        os << csv_field("t" + cochar_to_string(m));
        for (const Cocharacter& lam : grid)
          os << "," << (dominance_leq(W.datum(), lam, m) ? 1 : 0);
        os << "\n";
      }
    } else {
      Json j;
      Json labels = Json::array();
      for (const Cocharacter& m : grid) labels.push_back(m);
      j["basis"] = labels;
      Json entries = Json::array();
      for (const Cocharacter& m : grid) {
        Json row = Json::array();
        for (const Cocharacter& lam : grid)
          row.push_back(dominance_leq(W.datum(), lam, m) ? 1 : 0);
        entries.push_back(std::move(row));
      }
      j["entries"] = std::move(entries);
      os << j.dump(1) << "\n";
    }
    return os.str();
  }

  throw error("unknown export table '" + table + "'");
}

}  // namespace wb
