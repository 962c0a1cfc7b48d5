#include <doctest.h>

#include <set>

#include "lukeff/effectivity.hpp"
#include "lukeff/filtration.hpp"
#include "lukeff/generators.hpp"
#include "oracles.hpp"

using namespace lukeff;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_argument;
}

std::uint64_t class_bound(const Formula& f, int n) {
  std::uint64_t b = 1;
  for (std::size_t k = 0; k < subformulas(f).members.size() && b < (1u << 20); ++k) b *= n + 1;
  return b;
}

void check_truth_preserved(const Model& m, const FiltrationResult& r, const Formula& mu) {
  for (const Formula& g : subformulas(mu).members)
    for (int u = 0; u < m.size(); ++u)
      REQUIRE(oracle::value(m, u, g) == oracle::value(r.model, r.quotient.class_of[u], g));
}

// Closure of the subformula vectors (over classes) computed independently.
std::set<oracle::Vec> definable(const Model& m, const Formula& mu, const Quotient& q) {
  const int n = m.n();
  std::set<oracle::Vec> out;
  std::vector<oracle::Vec> queue;
  auto add = [&](oracle::Vec v) {
    if (out.insert(v).second) queue.push_back(std::move(v));
  };
  for (const Formula& g : subformulas(mu).members) {
    oracle::Vec v;
    for (int r : q.representative) v.push_back(oracle::value(m, r, g));
    add(v);
  }
  while (!queue.empty()) {
    const oracle::Vec v = queue.back();
    queue.pop_back();
    add(oracle::pointwise(v, v, [n](int x, int) { return n - x; }));
    add(oracle::pointwise(v, v, [n](int x, int y) { return std::min(n, x + y); }));
    add(oracle::pointwise(v, v, [n](int x, int y) { return std::max(0, x + y - n); }));
    const std::vector<oracle::Vec> snapshot(out.begin(), out.end());
    for (const oracle::Vec& w : snapshot) {
      add(oracle::pointwise(v, w, [n](int x, int y) { return std::min(n, n - x + y); }));
      add(oracle::pointwise(w, v, [n](int x, int y) { return std::min(n, n - x + y); }));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("quotients") {
  EffFn e(Chain(2), 2, {"a", "b", "c"});
  const EffFn t = effectivity_table(GameForm(2, {3, 1}, {"a", "b", "c"}, {0, 1, 2}), Chain(2));
  const Model m(Chain(2), 2, {"a", "b", "c"}, {t, t, t}, {{1, {0, 1, 1}}});
  const Quotient q = quotient(m, Formula::prop(1));
  CHECK(q.size() == 2);
  CHECK(q.class_of == std::vector<int>{0, 1, 1});
  CHECK(q.representative == std::vector<int>{0, 1});
  CHECK(quotient(m, Formula::top()).size() == 1);
}

TEST_CASE("intermediate filtration") {
  Rng rng(77);
  for (int k = 0; k < 40; ++k) {
    const int n = 1 + k % 2;
    const Model m = random_model(rng, Chain(n), 2, {2 + k % 2, {1, 2}, false});
    const Formula mu = random_formula(rng, 3, {1, 2}, 2, Chain(n));
    const FiltrationResult r = intermediate_filtration(m, mu);
    CHECK(r.stage == Stage::intermediate);
    const auto d = definable(m, mu, r.quotient);
    CHECK(d.size() == definable_closure(m, mu, r.quotient).size());
    const int classes = r.quotient.size();
    for (std::uint32_t c = 0; c < 4; ++c)
      for (const oracle::Vec& f : oracle::all_vectors(n, classes)) {
        for (int cls = 0; cls < classes; ++cls) {
          const EffFn& star = r.model.eff(cls);
          if (c != 3) {
            int best = 0;
            for (const oracle::Vec& v : d)
              if (oracle::leq(v, f)) {
                oracle::Vec lifted;
                for (int u = 0; u < m.size(); ++u) lifted.push_back(v[r.quotient.class_of[u]]);
                best = std::max(best, oracle::E(m.eff(r.quotient.representative[cls]), c, lifted));
              }
            REQUIRE(oracle::E(star, c, f) == best);
          } else {
            const oracle::Vec nf = oracle::pointwise(f, f, [n](int x, int) { return n - x; });
            REQUIRE(oracle::E(star, 3, f) == n - oracle::E(star, 0, nf));
          }
        }
      }
  }
}

TEST_CASE("playable filtration") {
  Rng rng(78);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 2;
    const Model m = random_model(rng, Chain(n), 2, {1 + k % 4, {1, 2}, false});
    const Formula mu = random_formula(rng, 4, {1, 2}, 2, Chain(n));
    const FiltrationResult r = playable_filtration(m, mu);
    check_truth_preserved(m, r, mu);
    for (const EffFn& e : r.model.effs()) CHECK(is_truly_playable(e));
    CHECK(static_cast<std::uint64_t>(r.model.size()) <= class_bound(mu, n));
    CHECK(r.model.states()[0] == "|" + m.states()[0] + "|");
  }
}

TEST_CASE("enriched filtration") {
  Rng rng(79);
  for (int k = 0; k < 60; ++k) {
    const int n = 1 + k % 2;
    const Model m = random_model(rng, Chain(n), 2, {1 + k % 4, {1, 2}, true});
    const Formula mu = random_formula(rng, 4, {1, 2}, 2, Chain(n), Dialect::LPlus);
    const FiltrationResult r = enriched_filtration(m, mu);
    check_truth_preserved(m, r, mu);
    CHECK(is_standard(r.model));
    // edges are carried over from class representatives
    for (int u : r.quotient.representative)
      for (int v = 0; v < m.size(); ++v)
        if (m.relation()->contains(u, v))
          CHECK(r.model.relation()->contains(r.quotient.class_of[u], r.quotient.class_of[v]));
  }
}

TEST_CASE("filtration errors") {
  Rng rng(80);
  const Model m = random_model(rng, Chain(2), 2, {2, {1}, false});
  CHECK(code_of([&] { playable_filtration(m, Formula::box_o(Formula::prop(1))); }) == Errc::dialect_violation);
  CHECK(code_of([&] { enriched_filtration(m, Formula::prop(1)); }) == Errc::not_standard);
  CHECK(code_of([&] { enriched_filtration(m.with_relation(Relation{{0, 0}}), Formula::prop(1)); }) ==
        Errc::not_standard);
  EffFn bad(Chain(2), 2, {"u", "v"});
  const Model broken(Chain(2), 2, {"u", "v"}, {bad, bad}, {{1, {0, 2}}});
  CHECK(code_of([&] { playable_filtration(broken, Formula::prop(1)); }) == Errc::not_playable);
}
