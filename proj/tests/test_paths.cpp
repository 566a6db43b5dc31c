#include "oracles.hpp"

#include "toda/paths.hpp"

#include <doctest.h>
#include <json.hpp>

#include <map>

using namespace toda;

namespace {

std::vector<std::string> words(const std::vector<LatticePath>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    out.push_back(p.to_string());
  }
  return out;
}

std::vector<oracle::Family> as_words(const std::vector<PathFamily>& families) {
  std::vector<oracle::Family> out;
  for (const auto& f : families) {
    out.push_back(words(f.paths));
  }
  return out;
}

// Oracle enumeration is the slow part; share it across test cases.
const std::vector<oracle::Family>& oracle_families(std::size_t t, std::size_t n, bool tabular) {
  static std::map<std::tuple<std::size_t, std::size_t, bool>, std::vector<oracle::Family>> cache;
  auto key = std::make_tuple(t, n, tabular);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, oracle::families(t, n, tabular)).first;
  }
  return it->second;
}

const LatticePath kFigurePath = LatticePath::parse("UUDDUUUDDUDD");

}  // namespace

TEST_CASE("path text round trip and geometry") {
  CHECK(kFigurePath.to_string() == "UUDDUUUDDUDD");
  CHECK(kFigurePath.size() == 12);
  CHECK(kFigurePath.down_steps() == 6);
  CHECK(kFigurePath.is_positive());
  CHECK(kFigurePath.is_grounded());
  CHECK(kFigurePath.end() == Point{12, 0});
  CHECK_THROWS_AS(LatticePath::parse("UDX"), InputError);
  const auto shifted = LatticePath::parse("UD", {-2, 0});
  CHECK(shifted.end() == Point{0, 0});
  CHECK_FALSE(LatticePath::parse("DU").is_positive());
  CHECK_FALSE(LatticePath::parse("UUD").is_grounded());
  CHECK(LatticePath().empty());
}

TEST_CASE("positive grounded paths match bitmask enumeration") {
  CHECK(words(enumerate_positive_grounded(0)) == std::vector<std::string>{""});
  CHECK(words(enumerate_positive_grounded(1)) == std::vector<std::string>{"UD"});
  CHECK(enumerate_positive_grounded(3).size() == 5);
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto paths = enumerate_positive_grounded(n);
    CHECK(Integer(static_cast<unsigned long>(paths.size())) == catalan(n));
    if (n <= 8) {
      CHECK(words(paths) == oracle::dyck_words(2 * n));
    }
  }
  CHECK_THROWS_AS(enumerate_positive_grounded(kMaxDyckSemilength + 1), ResourceError);
}

TEST_CASE("path weights") {
  const InitialDataDiscrete a({Rational(2), Rational(3), Rational(5)});
  CHECK(path_weight(kFigurePath, a) == 2 * 2 * 3 * 3 * 3 * 5);  // a0^2 a1^3 a2
  CHECK(path_weight(LatticePath(), a) == 1);
  const InitialDataUltra A({Integer(7), Integer(-2), Integer(11)});
  CHECK(path_weight(kFigurePath, A) == 2 * 7 + 3 * -2 + 11);
  CHECK(path_weight(LatticePath(), A) == 0);
  CHECK(level_profile(kFigurePath) == std::vector<unsigned>{2, 3, 1});
  CHECK_THROWS_AS(path_weight(LatticePath::parse("UUUDDD"), InitialDataUltra({Integer(1), Integer(1)})),
                  DataExhaustedError);
}

TEST_CASE("moments: nested sum, enumeration and S-fraction agree") {
  const Rational a0(3, 2), a1(5, 7), a2(2);
  const InitialDataDiscrete a({a0, a1, a2, Rational(1, 3)});
  CHECK(moment_f0(a, 0) == 1);
  CHECK(moment_f0(a, 1) == a0);
  CHECK(moment_f0(a, 2) == a0 * a0 + a0 * a1);
  CHECK(moment_f0(a, 3) == a0 * a0 * a0 + 2 * a0 * a0 * a1 + a0 * a1 * a1 + a0 * a1 * a2);
  CHECK_THROWS_AS(moment_f0(a, 5), DataExhaustedError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto values = oracle::random_rationals(rng, 8);
    const InitialDataDiscrete b(values);
    const auto series = s_fraction_series(b, 8);
    REQUIRE(series.size() == 9);
    for (std::size_t n = 0; n <= 8; ++n) {
      Rational brute = 0;
      for (const auto& w : oracle::dyck_words(2 * n)) {
        brute += oracle::word_product(w, values);
      }
      CHECK(moment_f0(b, n) == brute);
      CHECK(series[n] == brute);
    }
  }

  const InitialDataDiscrete ones(std::vector<Rational>(4, Rational(1)));
  const auto catalan_series = s_fraction_series(ones, 4);
  CHECK(catalan_series == std::vector<Rational>{1, 1, 2, 5, 14});
  CHECK_THROWS_AS(s_fraction_series(ones, 5), DataExhaustedError);
}

TEST_CASE("non-intersection is pointwise") {
  const std::vector<LatticePath> apart{LatticePath::parse("UD"),
                                       LatticePath::parse("UUUDDD", {-2, 0})};
  CHECK(is_non_intersecting(apart));
  const std::vector<LatticePath> touching{LatticePath::parse("UD"),
                                          LatticePath::parse("UUDUDD", {-2, 0})};
  CHECK_FALSE(is_non_intersecting(touching));
}

TEST_CASE("family counts: closed forms and enumeration") {
  CHECK(count_families(4, 3, false) == 330);
  CHECK(count_families(4, 3, true) == 20);
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(count_families(1, n, false) == 1);
    CHECK(count_families(0, n, false) == 1);
  }
  for (std::size_t t = 0; t <= 6; ++t) {
    CHECK(count_families(t, 0, false) == 1);
    CHECK(count_families(t, 0, true) == 1);
  }
  for (std::size_t t = 0; t <= 4; ++t) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (bool tabular : {false, true}) {
        CAPTURE(t);
        CAPTURE(n);
        CAPTURE(tabular);
        const auto families = enumerate_families(t, n, tabular);
        CHECK(Integer(static_cast<unsigned long>(families.size())) == count_families(t, n, tabular));
        CHECK(as_words(families) == oracle_families(t, n, tabular));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_families(10, 8, false), ResourceError);
}

TEST_CASE("enumerated families satisfy the defining conditions") {
  for (const auto& family : enumerate_families(3, 3, false)) {
    REQUIRE(family.paths.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& p = family.paths[j];
      CHECK(p.origin() == Point{-2 * static_cast<long>(j), 0});
      CHECK(p.end() == Point{6 + 2 * static_cast<long>(j), 0});
      CHECK(p.is_positive());
    }
    CHECK(is_non_intersecting(family.paths));
  }
}

TEST_CASE("tau as a weighted family sum") {
  const Rational a0(2, 3), a1(4), a2(1, 5);
  const InitialDataDiscrete a({a0, a1, a2, Rational(6), Rational(7, 2)});
  CHECK(tau_gv(a, 3, 0) == 1);
  for (std::size_t t = 0; t <= 5; ++t) {
    CHECK(tau_gv(a, t, 1) == moment_f0(a, t));
  }
  CHECK(tau_gv(a, 1, 2) == a0 * a0 * a1 * a2);
  CHECK_THROWS_AS(tau_gv(a, 2, 3), DataExhaustedError);

  std::mt19937_64 rng(5);
  const auto values = oracle::random_rationals(rng, 8);
  const InitialDataDiscrete b(values);
  for (std::size_t t = 0; t <= 4; ++t) {
    for (std::size_t n = 0; n <= 3; ++n) {
      Rational brute = 0;
      for (const auto& f : oracle_families(t, n, false)) {
        brute += oracle::family_product(f, values);
      }
      CHECK(tau_gv(b, t, n) == brute);
    }
  }
}

TEST_CASE("tabular paths") {
  CHECK(is_tabular(LatticePath::parse("UD")));
  CHECK_FALSE(is_tabular(kFigurePath));
  for (std::size_t k = 1; k <= 6; ++k) {
    CHECK(is_tabular(LatticePath::parse(std::string(k, 'U') + std::string(k, 'D'))));
  }
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_positive_grounded(n)) {
      CAPTURE(p.to_string());
      CHECK(is_tabular(p) == oracle::tabular_by_extrema(p.to_string()));
      CHECK(is_tabular(p) == find_hooks(p).empty());
    }
  }
}

TEST_CASE("hooks and their deformations") {
  const auto p = LatticePath::parse("UDUUDD");
  const auto hooks = find_hooks(p);
  REQUIRE(hooks.size() == 1);
  CHECK(hooks[0] == Hook{Hook::Kind::Up, 1, 2});
  CHECK(apply_phi(p).to_string() == "UUDUDD");
  CHECK(apply_psi(p).to_string() == "UDUDUD");

  const InitialDataUltra A({Integer(5), Integer(-3)});
  CHECK(path_weight(apply_phi(p), A) == 5 + 2 * -3);
  CHECK(path_weight(apply_psi(p), A) == 3 * 5);
  CHECK(path_weight(apply_phi(p), A) + path_weight(apply_psi(p), A) == 2 * path_weight(p, A));

  const auto mixed = find_hooks(LatticePath::parse("UUUDDUUDDD"));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == Hook{Hook::Kind::Down, 2, 2});
  CHECK(mixed[1] == Hook{Hook::Kind::Up, 4, 2});

  // two up hooks sharing their middle D
  const auto twin = LatticePath::parse("UDUUDUUDDD");
  const auto twin_hooks = find_hooks(twin);
  CHECK(std::count_if(twin_hooks.begin(), twin_hooks.end(),
                      [](const Hook& h) { return h.kind == Hook::Kind::Up; }) == 2);
  CHECK(apply_phi(twin).to_string() == "UUDUUDUDDD");
  CHECK(apply_psi(twin).to_string() == "UDUDUUDUDD");

  for (const auto& q : enumerate_positive_grounded(5)) {
    if (is_tabular(q)) {
      CHECK(apply_phi(q) == q);
      CHECK(apply_psi(q) == q);
    }
  }
}

TEST_CASE("mean formula over all short paths") {
  std::mt19937_64 rng(9);
  const auto values = oracle::random_integers(rng, 8);
  const InitialDataUltra A(values);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& p : enumerate_positive_grounded(n)) {
      const auto phi = apply_phi(p);
      const auto psi = apply_psi(p);
      CAPTURE(p.to_string());
      CHECK(phi.is_positive());
      CHECK(phi.is_grounded());
      CHECK(psi.is_positive());
      CHECK(psi.is_grounded());
      CHECK(phi.size() == p.size());
      CHECK(oracle::word_sum(phi.to_string(), values) + oracle::word_sum(psi.to_string(), values) ==
            2 * oracle::word_sum(p.to_string(), values));
      CHECK(path_weight(phi, A) + path_weight(psi, A) == 2 * path_weight(p, A));
    }
  }
}

TEST_CASE("minimum family weight") {
  const Integer A0(4), A1(-7), A2(2);
  const InitialDataUltra A({A0, A1, A2});
  CHECK(min_family_weight(A, 2, 0, false).weight == 0);
  CHECK(min_family_weight(A, 1, 1, false).weight == A0);
  CHECK(min_family_weight(A, 1, 2, false).weight == 2 * A0 + A1 + A2);
  CHECK(min_family_weight(A, 1, 2, true).weight == 2 * A0 + A1 + A2);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const auto values = oracle::random_integers(rng, 8);
    const InitialDataUltra B(values);
    for (std::size_t t = 0; t <= 4; ++t) {
      for (std::size_t n = 0; n <= 3; ++n) {
        std::optional<Integer> best;
        oracle::Family argmin;
        for (const auto& f : oracle_families(t, n, false)) {
          const Integer w = oracle::family_sum(f, values);
          if (!best || w < *best) {
            best = w;
            argmin = f;
          }
        }
        const auto all = min_family_weight(B, t, n, false);
        const auto tabular = min_family_weight(B, t, n, true);
        CHECK(all.weight == *best);
        CHECK(tabular.weight == *best);
        CHECK(words(all.family.paths) == argmin);
      }
    }
  }
}

TEST_CASE("family JSON encoding") {
  const auto families = enumerate_families(1, 2, false);
  REQUIRE(families.size() == 1);
  const auto doc = nlohmann::json::parse(family_to_json(families[0]));
  CHECK(doc["t"] == 1);
  CHECK(doc["n"] == 2);
  CHECK(doc["paths"] == nlohmann::json::array({"UD", "UUUDDD"}));
}
