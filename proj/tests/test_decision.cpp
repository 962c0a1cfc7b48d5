#include <doctest.h>

#include "lukeff/decision.hpp"
#include "lukeff/effectivity.hpp"
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

Formula P(const std::string& text, int n, Dialect d = Dialect::L) { return parse(text, {2, Chain(n), d}); }

SearchOptions options(int n, int max_states, SearchStrategy s = SearchStrategy::exhaustive) {
  SearchOptions o;
  o.chain = Chain(n);
  o.max_states = max_states;
  o.strategy = s;
  return o;
}

void check_countermodel(const DecisionVerdict& v, const Formula& f, Logic logic) {
  REQUIRE(v.status == Verdict::countermodel_found);
  REQUIRE(v.countermodel);
  const Model& m = *v.countermodel;
  CHECK(m.size() <= v.max_states);
  CHECK(is_playable(m));
  if (logic == Logic::TPn) CHECK(is_standard(m));
  CHECK(oracle::value(m, v.state, f) < m.n());
}

}  // namespace

TEST_CASE("the reflexivity instance has a two-state countermodel") {
  const Formula f = P("[{}]p1 -> p1", 2);
  const DecisionVerdict v = search_countermodel(f, Logic::Pn, options(2, 2));
  check_countermodel(v, f, Logic::Pn);
  CHECK(v.countermodel->size() == 2);
  // one state cannot refute it: E(u)(0, f) = f(u) there
  CHECK(search_countermodel(f, Logic::Pn, options(2, 1)).status == Verdict::no_countermodel_up_to_bound);
}

TEST_CASE("theorems reach the filtration bound") {
  CHECK(filtration_bound(Formula::top(), Chain(1)) == 2);
  CHECK(filtration_bound(P("p1 -> p1", 2), Chain(2)) == 9);
  const DecisionVerdict top = search_countermodel(Formula::top(), Logic::Pn, options(3, 4));
  CHECK(top.status == Verdict::theorem_by_filtration_bound);
  CHECK_FALSE(top.countermodel);

  const Formula ax = P("[{1}](p1 (.) p1) <-> ([{1}]p1 (.) [{1}]p1)", 1);
  const std::uint64_t b = filtration_bound(ax, Chain(1));
  REQUIRE(b < 100000);
  CHECK(search_countermodel(ax, Logic::Pn, options(1, static_cast<int>(b))).status ==
        Verdict::theorem_by_filtration_bound);
  CHECK(search_countermodel(ax, Logic::Pn, options(1, 2)).status == Verdict::no_countermodel_up_to_bound);
}

TEST_CASE("filtration bound saturates") {
  Formula f = Formula::prop(1);
  for (int k = 0; k < 80; ++k) f = Formula::neg(f);
  CHECK(filtration_bound(f, Chain(3)) == UINT64_MAX);
}

TEST_CASE("type elimination agrees with brute force") {
  Rng rng(202);
  int found = 0;
  for (int k = 0; k < 120; ++k) {
    const Formula f = random_formula(rng, 3, {1}, 2, Chain(1));
    const DecisionVerdict a = search_countermodel(f, Logic::Pn, options(1, 2));
    const DecisionVerdict b = search_countermodel(f, Logic::Pn, options(1, 2, SearchStrategy::enumerate));
    REQUIRE((a.status == Verdict::countermodel_found) == (b.status == Verdict::countermodel_found));
    if (a.status == Verdict::countermodel_found) {
      ++found;
      check_countermodel(a, f, Logic::Pn);
      check_countermodel(b, f, Logic::Pn);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("randomized search only reports certified countermodels") {
  Rng rng(203);
  for (int k = 0; k < 30; ++k) {
    const Formula f = random_formula(rng, 3, {1, 2}, 2, Chain(2));
    SearchOptions o = options(2, 3, SearchStrategy::randomized);
    o.samples = 200;
    o.seed = static_cast<std::uint64_t>(k);
    const DecisionVerdict v = search_countermodel(f, Logic::Pn, o);
    if (v.status == Verdict::countermodel_found) {
      check_countermodel(v, f, Logic::Pn);
      CHECK(search_countermodel(f, Logic::Pn, options(2, 3)).status == Verdict::countermodel_found);
    } else {
      CHECK(v.status == Verdict::no_countermodel_up_to_bound);
    }
  }
}

TEST_CASE("TPn search") {
  const Formula link = P("[O]p1 <-> [{}]p1", 2, Dialect::LPlus);
  CHECK(search_countermodel(link, Logic::TPn, options(2, 3)).status != Verdict::countermodel_found);
  const Formula refl = P("[O]p1 -> p1", 2, Dialect::LPlus);
  const DecisionVerdict v = search_countermodel(refl, Logic::TPn, options(2, 2));
  check_countermodel(v, refl, Logic::TPn);
  // [O] is not part of the Pn language
  CHECK(code_of([&] { search_countermodel(refl, Logic::Pn, options(2, 2)); }) == Errc::dialect_violation);
}

TEST_CASE("search errors") {
  CHECK(code_of([&] { search_countermodel(Formula::top(), Logic::Pn, options(1, 0)); }) == Errc::invalid_argument);
  CHECK(code_of([&] { search_countermodel(Formula::box(Coalition(4, 3), Formula::top()), Logic::Pn, options(1, 2)); }) ==
        Errc::unknown_player);
}

TEST_CASE("n = 1 degenerates to the Boolean case") {
  // on Boolean values tau(1) is the identity, so these are theorems
  const Formula f = P("[{1}]p1 <-> [{1}](p1 (.) p1)", 1);
  CHECK(search_countermodel(f, Logic::Pn, options(1, 2)).status != Verdict::countermodel_found);
  // over L2 the same formula fails at value 1/2
  const DecisionVerdict v = search_countermodel(f, Logic::Pn, options(2, 2));
  check_countermodel(v, f, Logic::Pn);
}

TEST_CASE("soundness suite on a small corpus") {
  Rng rng(204);
  std::vector<Model> corpus;
  for (int k = 0; k < 12; ++k) corpus.push_back(random_model(rng, Chain(1 + k % 2), 2, {1 + k % 2, {1, 2}, false}));
  const SoundnessReport pn = soundness_suite(Logic::Pn, corpus, 5);
  CHECK(pn.passed());
  CHECK(pn.to_string() == soundness_suite(Logic::Pn, corpus, 5).to_string());
  CHECK(pn.to_string().find("modus_ponens") != std::string::npos);

  std::vector<Model> standard;
  for (const Model& m : corpus) standard.push_back(standardize(m));
  const SoundnessReport tp = soundness_suite(Logic::TPn, standard, 5);
  CHECK(tp.passed());
  CHECK(tp.to_string().find("necessitation") != std::string::npos);
  CHECK(tp.to_string().find("TP7") != std::string::npos);
}

TEST_CASE("the suite reports violations on non-playable frames") {
  EffFn e(Chain(2), 2, {"u"});
  for (std::uint32_t c = 0; c < 4; ++c)
    for (Code f = 0; f < 3; ++f) e.set(c, f, f >= 1 ? 2 : 0);
  const Model frame(Chain(2), 2, {"u"}, {e}, {{1, {1}}, {2, {0}}});
  const SoundnessReport r = soundness_suite(Logic::Pn, {frame});
  CHECK_FALSE(r.passed());
  CHECK(r.to_string().find("witness=") != std::string::npos);
}
