#include <catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "simplex/delta.hpp"

using namespace simplex;

namespace {

// Independent oracle: every function m -> n, filtered for monotonicity.
std::vector<std::vector<std::size_t>> brute_force_monotone(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (m > 0 && n == 0) return out;
  std::size_t total = 1;
  for (std::size_t k = 0; k < m; ++k) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> v(m);
    std::size_t c = code;
    for (std::size_t k = m; k-- > 0;) {
      v[k] = c % n;
      c /= n;
    }
    bool mono = true;
    for (std::size_t k = 1; k < m; ++k) mono = mono && v[k - 1] <= v[k];
    if (mono) out.push_back(v);
  }
  return out;
}

std::uint64_t pascal(std::size_t top, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> c(top + 1, std::vector<std::uint64_t>(top + 1, 0));
  for (std::size_t r = 0; r <= top; ++r) {
    c[r][0] = 1;
    for (std::size_t j = 1; j <= r; ++j) c[r][j] = c[r - 1][j - 1] + (j <= r - 1 ? c[r - 1][j] : 0);
  }
  return k <= top ? c[top][k] : 0;
}

// Every generator word obeying the normal-form discipline: strictly
// descending degeneracies (application order), then strictly ascending faces.
std::vector<std::vector<DeltaGen>> disciplined_words(std::size_t m, std::size_t n) {
  std::vector<std::vector<DeltaGen>> out;
  const std::size_t degs = m > 0 ? m - 1 : 0;
  for (std::size_t dmask = 0; dmask < (std::size_t{1} << degs); ++dmask) {
    std::vector<DeltaGen> word;
    std::size_t size = m;
    for (std::size_t p = degs; p-- > 0;) {
      if ((dmask >> p) & 1U) {
        word.push_back(mu(size - 1, p));
        --size;
      }
    }
    if (size > n) continue;
    for (std::size_t fmask = 0; fmask < (std::size_t{1} << n); ++fmask) {
      if (static_cast<std::size_t>(__builtin_popcountll(fmask)) != n - size) continue;
      auto full = word;
      std::size_t s = size;
      for (std::size_t j = 0; j < n; ++j) {
        if ((fmask >> j) & 1U) full.push_back(eta(s++, j));
      }
      out.push_back(full);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("identity maps", "[delta]") {
  CHECK(identity_map(0).dom() == 0);
  CHECK(identity_map(0).cod() == 0);
  CHECK(identity_map(1).values() == std::vector<std::size_t>{0});
  CHECK(identity_map(3).values() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("monotone map invariants are enforced", "[delta]") {
  CHECK_THROWS_AS(MonotoneMap(2, {1, 0}), index_error);
  CHECK_THROWS_AS(MonotoneMap(2, {0, 2}), index_error);
  CHECK_THROWS_AS(MonotoneMap(0, {0}), index_error);
  CHECK_NOTHROW(MonotoneMap(0, {}));
}

TEST_CASE("composition", "[delta]") {
  const MonotoneMap sigma0(1, {0, 0});
  const MonotoneMap delta0(2, {1});
  CHECK(compose_maps(sigma0, delta0) == identity_map(1));

  const MonotoneMap sigma1(2, {0, 1, 1});
  const MonotoneMap delta0_2(3, {1, 2});
  CHECK(compose_maps(sigma1, delta0_2) == MonotoneMap(2, {1, 1}));

  for (const auto& f : enumerate_homs(3, 2)) CHECK(compose_maps(identity_map(2), f) == f);
  CHECK_THROWS_AS(compose_maps(sigma0, sigma0), boundary_error);
}

TEST_CASE("composition is associative and unital on small ordinals", "[delta][property]") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t c = 0; c <= 3; ++c)
        for (std::size_t d = 0; d <= 3; ++d)
          for (const auto& f : enumerate_homs(a, b))
            for (const auto& g : enumerate_homs(b, c)) {
              REQUIRE(compose_maps(g, identity_map(b)) == g);
              REQUIRE(compose_maps(identity_map(b), f) == f);
              for (const auto& h : enumerate_homs(c, d)) {
                REQUIRE(compose_maps(h, compose_maps(g, f)) == compose_maps(compose_maps(h, g), f));
              }
            }
}

TEST_CASE("tensor is ordinal addition", "[delta]") {
  const MonotoneMap mult(1, {0, 0});
  const MonotoneMap unit(1, {});
  CHECK(tensor_maps(identity_map(1), mult) == MonotoneMap(2, {0, 1, 1}));
  CHECK(tensor_maps(unit, identity_map(1)) == MonotoneMap(2, {1}));
  for (const auto& g : enumerate_homs(2, 3)) CHECK(tensor_maps(identity_map(0), g) == g);
}

TEST_CASE("tensor is strictly associative with unit 0", "[delta][property]") {
  for (std::size_t m1 = 0; m1 <= 2; ++m1)
    for (std::size_t n1 = 0; n1 <= 2; ++n1)
      for (const auto& f : enumerate_homs(m1, n1)) {
        REQUIRE(tensor_maps(f, identity_map(0)) == f);
        REQUIRE(tensor_maps(identity_map(0), f) == f);
        for (std::size_t m2 = 0; m2 <= 2; ++m2)
          for (std::size_t n2 = 0; n2 <= 2; ++n2)
            for (const auto& g : enumerate_homs(m2, n2))
              for (std::size_t m3 = 0; m3 <= 2; ++m3)
                for (std::size_t n3 = 0; n3 <= 2; ++n3)
                  for (const auto& h : enumerate_homs(m3, n3)) {
                    REQUIRE(tensor_maps(f, tensor_maps(g, h)) == tensor_maps(tensor_maps(f, g), h));
                  }
      }
}

TEST_CASE("interchange holds at the level of maps", "[delta][property]") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (std::size_t c = 0; c <= 3; ++c)
        for (std::size_t d = 0; d <= 3; ++d)
          for (const auto& f : enumerate_homs(a, b))
            for (const auto& g : enumerate_homs(c, d)) {
              const auto fg = tensor_maps(f, g);
              REQUIRE(compose_maps(tensor_maps(f, identity_map(d)), tensor_maps(identity_map(a), g)) == fg);
              REQUIRE(compose_maps(tensor_maps(identity_map(b), g), tensor_maps(f, identity_map(c))) == fg);
            }
}

TEST_CASE("generators denote cofaces and codegeneracies", "[delta]") {
  CHECK(gen_to_map(eta(1, 0)) == MonotoneMap(2, {1}));
  CHECK(gen_to_map(mu(1, 0)) == MonotoneMap(1, {0, 0}));
  CHECK(gen_to_map(eta(2, 2)) == MonotoneMap(3, {0, 1}));
  CHECK(gen_to_map(eta(0, 0)) == MonotoneMap(1, {}));
  CHECK_THROWS_AS(gen_to_map(mu(1, 1)), index_error);
  CHECK_THROWS_AS(gen_to_map(mu(0, 0)), index_error);
  CHECK_THROWS_AS(gen_to_map(eta(1, 2)), index_error);
  // Tensor construction agrees: eta{n,i} = id_i (x) eta (x) id_{n-i}.
  for (std::size_t n = 0; n <= 5; ++n) {
    for (std::size_t i = 0; i <= n; ++i) {
      auto expected = tensor_maps(tensor_maps(identity_map(i), gen_to_map(eta(0, 0))), identity_map(n - i));
      REQUIRE(gen_to_map(eta(n, i)) == expected);
      if (i < n) {
        auto m = tensor_maps(tensor_maps(identity_map(i), gen_to_map(mu(1, 0))), identity_map(n - i - 1));
        REQUIRE(gen_to_map(mu(n, i)) == m);
      }
    }
  }
}

TEST_CASE("word evaluation", "[delta]") {
  CHECK(eval_word(2, {}) == identity_map(2));
  const std::vector<DeltaGen> bad{eta(1, 0), mu(1, 1)};
  CHECK_THROWS_AS(eval_word(1, bad), index_error);
  const std::vector<DeltaGen> assoc{mu(2, 1), mu(1, 0)};
  CHECK(eval_word(3, assoc) == MonotoneMap(1, {0, 0, 0}));
  const std::vector<DeltaGen> assoc2{mu(2, 0), mu(1, 0)};
  CHECK(eval_word(3, assoc2) == MonotoneMap(1, {0, 0, 0}));
  const std::vector<DeltaGen> mismatch{mu(1, 0), mu(1, 0)};
  CHECK_THROWS_AS(eval_word(2, mismatch), boundary_error);
}

TEST_CASE("canonical factorization examples", "[delta]") {
  CHECK(factorize(identity_map(3)).degeneracies.empty());
  CHECK(factorize(identity_map(3)).faces.empty());

  auto f = factorize(MonotoneMap(2, {1, 1}));
  CHECK(f.degeneracies == std::vector<std::size_t>{0});
  CHECK(f.faces == std::vector<std::size_t>{0});
  CHECK(f.to_word() == std::vector<DeltaGen>{mu(1, 0), eta(1, 0)});

  auto m = factorize(MonotoneMap(1, {0, 0}));
  CHECK(m.degeneracies == std::vector<std::size_t>{0});
  CHECK(m.faces.empty());

  auto c = factorize(MonotoneMap(1, {0, 0, 0}));
  CHECK(c.degeneracies == std::vector<std::size_t>{0, 1});
  CHECK(recompose(c) == MonotoneMap(1, {0, 0, 0}));
}

TEST_CASE("factorization round-trips and is unique among disciplined words", "[delta][property]") {
  for (std::size_t m = 0; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 5; ++n) {
      auto words = disciplined_words(m, n);
      for (const auto& f : enumerate_homs(m, n)) {
        auto fac = factorize(f);
        REQUIRE(recompose(fac) == f);
        std::size_t producing = 0;
        for (const auto& w : words) {
          if (eval_word(m, w) == f) {
            ++producing;
            REQUIRE(w == fac.to_word());
          }
        }
        REQUIRE(producing == 1);
      }
    }
  }
}

TEST_CASE("hom counting", "[delta]") {
  CHECK(hom_count(0, 0) == 1);
  CHECK(hom_count(0, 4) == 1);
  CHECK(hom_count(2, 2) == 3);
  CHECK(hom_count(3, 2) == 4);
  CHECK(hom_count(3, 0) == 0);
  CHECK(enumerate_homs(1, 1) == std::vector<MonotoneMap>{identity_map(1)});
  CHECK(enumerate_homs(2, 1) == std::vector<MonotoneMap>{MonotoneMap(1, {0, 0})});
  CHECK(enumerate_homs(3, 0).empty());
  for (std::size_t m = 0; m <= 7; ++m) {
    for (std::size_t n = 0; n <= 7; ++n) {
      auto maps = enumerate_homs(m, n);
      auto brute = brute_force_monotone(m, n);
      REQUIRE(maps.size() == brute.size());
      for (std::size_t k = 0; k < maps.size(); ++k) REQUIRE(maps[k].values() == brute[k]);
      REQUIRE(hom_count(m, n) == maps.size());
      if (m + n >= 1) REQUIRE(hom_count(m, n) == pascal(m + n - 1, m));
    }
  }
}
