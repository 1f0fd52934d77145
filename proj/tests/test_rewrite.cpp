#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "simplex/lg_coherence.hpp"
#include "simplex/rewrite.hpp"

using namespace simplex;
using K = TwoCellKind;

namespace {

OneCellWord word(std::vector<DeltaGen> gens) { return make_word(std::move(gens)); }

bool is_valid_proof(const EqualityResult& r, const TwoCellTerm& from, const TwoCellTerm& to) {
  if (r.proof.empty() || r.proof.front().term != from || r.proof.back().term != to) return false;
  for (std::size_t k = 1; k < r.proof.size(); ++k) {
    bool linked = false;
    for (const auto& m : rewrite_moves(r.proof[k - 1].term)) linked = linked || m.result == r.proof[k].term;
    if (!linked) return false;
  }
  return r.proof.size() == r.depth + 1;
}

}  // namespace

TEST_CASE("rewrite moves preserve boundaries", "[rewrite][property]") {
  std::mt19937 rng(20261015);
  std::size_t applied = 0;
  while (applied < 1000) {
    std::uniform_int_distribution<std::size_t> start(0, 3), len(0, 3), tlen(0, 3);
    auto dom = testing::random_word(rng, start(rng), len(rng));
    auto t = testing::random_term(rng, dom, tlen(rng));
    auto moves = rewrite_moves(t);
    if (moves.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const auto& m = moves[pick(rng)];
    REQUIRE_FALSE(validate_term(m.result));
    REQUIRE(m.result.dom == t.dom);
    REQUIRE(m.result.cod == t.cod);
    ++applied;
  }
}

TEST_CASE("reflexivity at depth zero", "[rewrite]") {
  auto t = axiom_sides(AxiomName::Ma, 0, 0).lhs;
  auto r = bounded_equal(t, t, {0, 10});
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.depth == 0);
}

TEST_CASE("every axiom instance is one substitution", "[rewrite]") {
  for (auto name : all_axioms) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (std::size_t i = 0; i <= n; ++i) {
        auto ax = axiom_sides(name, n, i);
        auto fwd = bounded_equal(ax.lhs, ax.rhs, {1, 100'000});
        REQUIRE(fwd.verdict == Verdict::equal);
        REQUIRE(fwd.depth == 1);
        REQUIRE(is_valid_proof(fwd, ax.lhs, ax.rhs));
        auto back = bounded_equal(ax.rhs, ax.lhs, {1, 100'000});
        REQUIRE(back.verdict == Verdict::equal);
        REQUIRE(is_valid_proof(back, ax.rhs, ax.lhs));
      }
    }
  }
}

TEST_CASE("axioms apply inside whiskering contexts", "[rewrite]") {
  auto ax = axiom_sides(AxiomName::Mq, 1, 1);
  const auto pre = word({eta(2, 0)});
  const auto post = word({eta(2, 2), mu(2, 0)});
  auto lhs = whisker_compose(ax.lhs, pre, post);
  auto rhs = whisker_compose(ax.rhs, pre, post);
  auto r = bounded_equal(lhs, rhs, {1, 100'000});
  CHECK(r.verdict == Verdict::equal);
  CHECK(is_valid_proof(r, lhs, rhs));
}

TEST_CASE("disjoint cells commute in one move", "[rewrite]") {
  const std::vector<GenTwoCell> blocks{{K::a, 0, 0}, {K::p, 0, 0}};
  auto t1 = testing::block_term(blocks, {0, 1});
  auto t2 = testing::block_term(blocks, {1, 0});
  REQUIRE(t1 != t2);
  auto r = bounded_equal(t1, t2, {1, 100'000});
  CHECK(r.verdict == Verdict::equal);
  CHECK(r.depth == 1);
  CHECK(r.proof.back().move.find("interchange") != std::string::npos);
}

TEST_CASE("cells on overlapping segments do not commute", "[rewrite]") {
  // p consumes the mu that a produced, so the two cannot be swapped.
  auto mp = axiom_sides(AxiomName::Mp, 0, 0).lhs;
  for (const auto& m : rewrite_moves(mp)) CHECK(m.description.find("interchange") == std::string::npos);
}

TEST_CASE("interchange fixtures are proved equal within four moves", "[rewrite]") {
  for (const auto& [t1, t2] : testing::interchange_fixtures()) {
    auto r = bounded_equal(t1, t2, {4, 100'000});
    REQUIRE(r.verdict == Verdict::equal);
    REQUIRE(r.depth <= 4);
    REQUIRE(is_valid_proof(r, t1, t2));
    REQUIRE(project_to_delta(t1) == project_to_delta(t2));
  }
}

TEST_CASE("boundary mismatch is reported with a witness", "[rewrite]") {
  auto a = axiom_sides(AxiomName::Ma, 0, 0).lhs;
  auto b = axiom_sides(AxiomName::Ma, 1, 0).lhs;
  auto r = bounded_equal(a, b, {4, 10});
  CHECK(r.verdict == Verdict::unknown);
  CHECK(r.reason == "boundary-mismatch");
  REQUIRE(r.witness);
  CHECK(r.witness->find("domains differ") != std::string::npos);
}

TEST_CASE("search is symmetric, monotone in depth, and honest", "[rewrite]") {
  auto ax = axiom_sides(AxiomName::Ma, 0, 0);
  CHECK(bounded_equal(ax.lhs, ax.rhs, {0, 100}).verdict == Verdict::unknown);
  CHECK(bounded_equal(ax.lhs, ax.rhs, {0, 100}).reason == "depth-exhausted");
  for (std::size_t d = 1; d <= 3; ++d) {
    CHECK(bounded_equal(ax.lhs, ax.rhs, {d, 100'000}).verdict == Verdict::equal);
    CHECK(bounded_equal(ax.rhs, ax.lhs, {d, 100'000}).verdict == Verdict::equal);
  }
  auto fx = testing::interchange_fixtures().at(4);
  for (std::size_t d = 0; d <= 4; ++d) {
    auto r12 = bounded_equal(fx.first, fx.second, {d, 100'000});
    auto r21 = bounded_equal(fx.second, fx.first, {d, 100'000});
    CHECK(r12.verdict == r21.verdict);
    CHECK((r12.verdict == Verdict::equal) == (d >= 2));
  }
}

TEST_CASE("node budget is enforced", "[rewrite]") {
  auto ax = axiom_sides(AxiomName::Ma, 1, 0);
  auto fx = testing::interchange_fixtures().at(9);
  CHECK_THROWS_AS(bounded_equal(fx.first, fx.second, {4, 20}), resource_limit_error);
  CHECK(bounded_equal(ax.lhs, ax.rhs, {1, 100'000}).verdict == Verdict::equal);
}

TEST_CASE("results are deterministic", "[rewrite]") {
  auto fx = testing::interchange_fixtures().at(7);
  auto r1 = bounded_equal(fx.first, fx.second, {4, 100'000});
  auto r2 = bounded_equal(fx.first, fx.second, {4, 100'000});
  CHECK(r1.nodes == r2.nodes);
  REQUIRE(r1.proof.size() == r2.proof.size());
  for (std::size_t k = 0; k < r1.proof.size(); ++k) {
    CHECK(r1.proof[k].term == r2.proof[k].term);
    CHECK(r1.proof[k].move == r2.proof[k].move);
  }
}
