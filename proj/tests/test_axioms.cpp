#include <doctest.h>

#include <algorithm>
#include <random>

#include "anncat/axioms.hpp"
#include "anncat/catalog.hpp"
#include "anncat/search.hpp"
#include "support.hpp"

using namespace anncat;
using anncat::testing::trivial_model;

namespace {

  bool has(std::vector<std::string> const& v, std::string const& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  }

  SkeletalModel d14_violator() {
    auto m = trivial_model(2);
    m.table(TableId::Ldist).data()[(1 * 2 + 1) * 2 + 1] = 1;
    return m;
  }

  SkeletalModel lhat_violator() {
    auto m = trivial_model(2);
    m.table(TableId::Ldist).data()[(1 * 2 + 0) * 2 + 1] = 1;
    return m;
  }

}  // namespace

TEST_CASE("suite tokens") {
  for (auto const& s : all_suites()) {
    CHECK(parse_suite(s.name) == s.id);
    CHECK(suite(s.id).name == s.name);
    for (auto const& member : s.members) {
      bool known = find_diagram(member) != nullptr || member == kLhatConsistency
                   || member == kRhatConsistency;
      CHECK(known);
    }
  }
  CHECK_FALSE(parse_suite("everything").has_value());
  CHECK(suite(SuiteId::ann).members.size() == 8 + 5 + 4 + 4 + 2);
  CHECK(suite(SuiteId::cring).members.size() == 8 + 5 + 4 + 2 + 2);
}

TEST_CASE("ann contains ann1_minus_c, ann2 and ann3") {
  auto const& ann = suite(SuiteId::ann).members;
  for (SuiteId id : {SuiteId::ann1_minus_c, SuiteId::ann2, SuiteId::ann3, SuiteId::pic,
                     SuiteId::tensor, SuiteId::ann1}) {
    for (auto const& m : suite(id).members) {
      CHECK(has(ann, m));
    }
  }
  // Hence passing ann implies passing each of them, on any model.
  std::mt19937_64 rng(1);
  auto            space = strict_space("z2", "regular", {TableId::Ldist});
  enumerate_models(space, [&](std::uint64_t, SkeletalModel const& m) {
    ModelVerdicts v(m);
    if (v.satisfies(SuiteId::ann)) {
      CHECK(v.satisfies(SuiteId::ann1_minus_c));
      CHECK(v.satisfies(SuiteId::ann2));
      CHECK(v.satisfies(SuiteId::ann3));
    }
  });
}

TEST_CASE("trivial models pass every suite") {
  for (std::size_t n : {1, 2, 3, 4}) {
    auto m = trivial_model(n);
    for (auto const& s : all_suites()) {
      CAPTURE(n);
      CAPTURE(s.name);
      auto r = check_suite(m, s);
      CHECK(r.passed);
      CHECK(r.skipped.empty());
      CHECK(r.reports.size() == s.members.size());
    }
  }
}

TEST_CASE("d1.4 violator fails ann3 at (1,1) only") {
  auto r = check_suite(d14_violator(), suite(SuiteId::ann3));
  CHECK_FALSE(r.passed);
  REQUIRE(r.reports.size() == 2);
  CHECK(r.reports[0].name == "d1.4");
  REQUIRE(r.reports[0].failures.size() == 1);
  CHECK(r.reports[0].failures[0].assignment == std::vector<Elem>{1, 1});
  CHECK(r.reports[1].passed);
}

TEST_CASE("lhat violator fails only lhat_consistency within u") {
  auto r = check_suite(lhat_violator(), suite(SuiteId::u));
  CHECK_FALSE(r.passed);
  std::vector<std::string> failing;
  for (auto const& rep : r.reports) {
    if (!rep.passed) {
      failing.push_back(rep.name);
      REQUIRE(rep.failures.size() == 1);
      CHECK(rep.failures[0].assignment == std::vector<Elem>{1, 1});
    }
  }
  CHECK(failing == std::vector<std::string>{std::string(kLhatConsistency)});
  CHECK(r.skipped == std::vector<std::string>{"d1.5", "d1.5p"});
}

TEST_CASE("memoised verdicts agree with full reports") {
  std::mt19937_64 rng(5);
  auto            R = cyclic_ring(2);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = testing::random_model(R, ring_bimodule(R), rng);
    if (trial % 2 == 0) {
      m = trivial_model(2);
      m.table(TableId::Ldist).data()[rng() % 8] = 1;
      m.table(TableId::Rdist).data()[rng() % 8] = 1;
    }
    ModelVerdicts v(m);
    for (auto const& s : all_suites()) {
      CAPTURE(s.name);
      CHECK(v.satisfies(s) == check_suite(m, s).passed);
    }
  }
}

TEST_CASE("properties on hand-picked models") {
  auto t = trivial_model(2);
  for (auto p : {check_prop1(t), check_prop2(t), check_thm1(t), check_thm2(t)}) {
    CHECK(p.premise);
    CHECK(p.conclusion);
  }

  // Fails ann2 and lfun_c: the implication holds vacuously.
  auto m = trivial_model(2);
  m.table(TableId::Ldist).data()[(1 * 2 + 0) * 2 + 1] = 1;
  CHECK_FALSE(diagram_holds(diagram("lfun_c"), m));
  CHECK_FALSE(check_suite(m, suite(SuiteId::ann2)).passed);
  auto p2 = check_prop2(m);
  CHECK_FALSE(p2.premise);
  CHECK(p2.respected());

  // Fails pic: thm1 vacuous.
  auto pic = trivial_model(2);
  pic.table(TableId::eta).data()[1] = 1;
  CHECK_FALSE(check_suite(pic, suite(SuiteId::pic)).passed);
  CHECK_FALSE(check_thm1(pic).premise);
  CHECK(check_thm1(pic).respected());

  // Inconsistent lhat: thm2 premise false.
  auto lh = lhat_violator();
  CHECK_FALSE(check_thm2(lh).premise);
  CHECK(check_thm2(lh).respected());
}

TEST_CASE("the prop2 premise drops the c-compatibilities") {
  auto full = prop2_premise_members(Prop2Premise::full);
  CHECK_FALSE(has(full, "lfun_c"));
  CHECK_FALSE(has(full, "rfun_c"));
  CHECK(has(full, "hexagon"));
  CHECK(full.size() == suite(SuiteId::ann).members.size() - 2);
  auto weak = prop2_premise_members(Prop2Premise::without_hexagon);
  CHECK_FALSE(has(weak, "hexagon"));
}

TEST_CASE("properties hold over the (Z/2, Z/2) distributivity space") {
  auto        space = strict_space("z2", "z2", {TableId::Ldist, TableId::Rdist});
  std::size_t ann = 0, cring_u = 0;
  enumerate_models(space, [&](std::uint64_t, SkeletalModel const& m) {
    ModelVerdicts v(m);
    CHECK(check_prop1(v).respected());
    CHECK(check_prop2(v).respected());
    CHECK(check_thm1(v).respected());
    CHECK(check_thm2(v).respected());
    ann += v.satisfies(SuiteId::ann);
    cring_u += v.satisfies(SuiteId::cring) && v.satisfies(SuiteId::u);
  });
  CHECK(ann > 0);
  CHECK(cring_u > 0);
}

TEST_CASE("ann-passing models have consistent units") {
  auto space = strict_space("z2", "z2", {TableId::Ldist, TableId::g, TableId::d});
  std::size_t seen = 0;
  enumerate_models(space, [&](std::uint64_t, SkeletalModel const& m) {
    ModelVerdicts v(m);
    if (v.satisfies(SuiteId::ann)) {
      ++seen;
      auto u = derive_units(m);
      CHECK(u.consistent());
      for (Elem A = 0; A < 2; ++A) {
        for (Elem X = 0; X < 2; ++X) {
          auto s = testing::d15_sides(m, u.lhat.table, A, X);
          CHECK(s.lhs == s.rhs);
        }
      }
    }
  });
  CHECK(seen > 0);
}

TEST_CASE("lfun_aplus on the zero tables is 0 = 0") {
  auto m = trivial_model(3);
  auto r = check_diagram(diagram("lfun_aplus"), m);
  CHECK(r.passed);
  CHECK(r.total == 81);
}
