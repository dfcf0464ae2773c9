#include "doctest.h"

#include "TestHelpers.hpp"
#include "kernel/Unify.hpp"

using namespace synthsat;
using namespace synthsat::test;

TEST_CASE("mgu of basic pairs") {
  GroupFixture fx;
  auto s = mgu(fx.bank, fx.x(0), fx.A());
  REQUIRE(s);
  CHECK(s->apply(fx.bank, fx.x(0)) == fx.A());

  auto s2 = mgu(fx.bank, fx.Gg(fx.x(0), fx.B()), fx.Gg(fx.A(), fx.x(1)));
  REQUIRE(s2);
  CHECK(s2->apply(fx.bank, fx.x(0)) == fx.A());
  CHECK(s2->apply(fx.bank, fx.x(1)) == fx.B());

  CHECK_FALSE(mgu(fx.bank, fx.x(0), fx.F(fx.x(0))));        // occurs check
  CHECK_FALSE(mgu(fx.bank, fx.F(fx.A()), fx.Gg(fx.A(), fx.A()))); // symbol clash
  CHECK_FALSE(mgu(fx.bank, fx.A(), fx.B()));
}

TEST_CASE("mgu handles chained variable bindings") {
  GroupFixture fx;
  // g(x0, f(x0)) =? g(f(x1), x2)
  auto s = mgu(fx.bank, fx.Gg(fx.x(0), fx.F(fx.x(0))), fx.Gg(fx.F(fx.x(1)), fx.x(2)));
  REQUIRE(s);
  CHECK(s->apply(fx.bank, fx.x(0)) == fx.F(fx.x(1)));
  CHECK(s->apply(fx.bank, fx.x(2)) == fx.F(fx.F(fx.x(1))));
}

TEST_CASE("mgu rejects variables of a different sort") {
  GroupFixture fx;
  TermId intVar = fx.bank.var(9, fx.sig.intSort());
  CHECK_FALSE(mgu(fx.bank, intVar, fx.A()));
}

TEST_CASE("mgu produces an idempotent unifier on random pairs") {
  GroupFixture fx;
  std::mt19937 rng(20260815);
  int unified = 0;
  for (int i = 0; i < 2000; ++i) {
    TermId s = fx.randomTerm(rng, 3, 3);
    TermId t = fx.randomTerm(rng, 3, 3);
    auto m = mgu(fx.bank, s, t);
    if (!m)
      continue;
    ++unified;
    TermId su = m->apply(fx.bank, s);
    TermId tu = m->apply(fx.bank, t);
    CHECK(su == tu);
    CHECK(m->apply(fx.bank, su) == su); // idempotent
  }
  CHECK(unified > 100);
}

TEST_CASE("matching is one-way") {
  GroupFixture fx;
  auto m = matchTerm(fx.bank, fx.Gg(fx.x(0), fx.x(0)), fx.Gg(fx.F(fx.A()), fx.F(fx.A())));
  REQUIRE(m);
  CHECK(m->apply(fx.bank, fx.x(0)) == fx.F(fx.A()));

  CHECK_FALSE(matchTerm(fx.bank, fx.Gg(fx.x(0), fx.x(0)), fx.Gg(fx.A(), fx.B())));
  CHECK_FALSE(matchTerm(fx.bank, fx.A(), fx.x(0))); // target variable is rigid
  // Pattern variables may capture target variables, even with clashing ids.
  auto m2 = matchTerm(fx.bank, fx.Gg(fx.x(0), fx.x(1)), fx.Gg(fx.x(1), fx.A()));
  REQUIRE(m2);
  CHECK(m2->apply(fx.bank, fx.Gg(fx.x(0), fx.x(1))) == fx.Gg(fx.x(1), fx.A()));
}

TEST_CASE("computable unification defers uncomputable bindings as constraints") {
  GroupFixture fx;
  // Unify f(u(x0)) with x1 while keeping f(x1) computable: x1 may only take a
  // computable value, so x1 becomes f(z) and z != u(x0) is recorded.
  uint32_t fresh = 10;
  auto res = computableUnifier(fx.bank, fx.F(fx.U(fx.x(0))), fx.x(1), fx.F(fx.x(1)), fresh);
  REQUIRE(res);
  TermId z = fx.x(10);
  CHECK(fresh == 11);
  CHECK(res->theta.apply(fx.bank, fx.x(1)) == fx.F(z));
  REQUIRE(res->constraints.size() == 1);
  CHECK(res->constraints[0].atom == fx.bank.mkEq(z, fx.U(fx.x(0))));
  CHECK_FALSE(res->constraints[0].positive);
  CHECK(res->constraints[0].constraint);
}

TEST_CASE("computable unification fails when the relative term is uncomputable") {
  GroupFixture fx;
  uint32_t fresh = 10;
  CHECK_FALSE(computableUnifier(fx.bank, fx.x(0), fx.A(), fx.U(fx.x(0)), fresh));
}

TEST_CASE("computable unification binds computable terms directly") {
  GroupFixture fx;
  uint32_t fresh = 10;
  auto res = computableUnifier(fx.bank, fx.x(0), fx.F(fx.A()), fx.x(0), fresh);
  REQUIRE(res);
  CHECK(res->constraints.empty());
  CHECK(res->theta.apply(fx.bank, fx.x(0)) == fx.F(fx.A()));
  CHECK(fresh == 10); // no fresh variables needed
}

TEST_CASE("irrelevant variables may take uncomputable values freely") {
  GroupFixture fx;
  uint32_t fresh = 10;
  auto res = computableUnifier(fx.bank, fx.x(0), fx.U(fx.A()), fx.x(1), fresh);
  REQUIRE(res);
  CHECK(res->constraints.empty());
  CHECK(res->theta.apply(fx.bank, fx.x(0)) == fx.U(fx.A()));
}

TEST_CASE("a variable inside the relative term is constrained directly") {
  GroupFixture fx;
  uint32_t fresh = 10;
  auto res = computableUnifier(fx.bank, fx.x(0), fx.U(fx.A()), fx.x(0), fresh);
  REQUIRE(res);
  CHECK(res->theta.empty());
  REQUIRE(res->constraints.size() == 1);
  CHECK(res->constraints[0].atom == fx.bank.mkEq(fx.x(0), fx.U(fx.A())));
}

TEST_CASE("relevance propagates through computable bindings") {
  GroupFixture fx;
  // x1 is relevant; binding x1 -> f(x2) makes x2 relevant, so x2 = u(a) must
  // be deferred rather than bound.
  uint32_t fresh = 10;
  auto res = computableUnifier(fx.bank, fx.Gg(fx.x(1), fx.x(2)),
                               fx.Gg(fx.F(fx.x(2)), fx.U(fx.A())), fx.x(1), fresh);
  REQUIRE(res);
  REQUIRE(res->constraints.size() == 1);
  CHECK(res->constraints[0].atom == fx.bank.mkEq(fx.x(2), fx.U(fx.A())));
  CHECK(res->theta.apply(fx.bank, fx.x(1)) == fx.F(fx.x(2)));
}

TEST_CASE("computable unification keeps the relative term computable") {
  GroupFixture fx;
  std::mt19937 rng(77);
  int succeeded = 0, constrained = 0;
  for (int i = 0; i < 3000; ++i) {
    TermId s = fx.randomTerm(rng, 3, 3);
    TermId t = fx.randomTerm(rng, 3, 3);
    TermId r = fx.randomTerm(rng, 3, 2);
    uint32_t fresh = 50;
    auto res = computableUnifier(fx.bank, s, t, r, fresh);
    if (!fx.bank[r].computable) {
      CHECK_FALSE(res);
      continue;
    }
    if (!res)
      continue;
    ++succeeded;
    if (!res->constraints.empty())
      ++constrained;
    // The substitution never smuggles uncomputable symbols into r.
    CHECK(fx.bank[res->theta.apply(fx.bank, r)].computable);
    // theta is idempotent.
    TermId sT = res->theta.apply(fx.bank, s);
    CHECK(res->theta.apply(fx.bank, sT) == sT);
    // When every deferred disequality collapses under a ground instantiation,
    // theta really unifies s and t.
    Substitution ground;
    std::vector<uint32_t> vars;
    fx.bank.collectVars(sT, vars);
    fx.bank.collectVars(res->theta.apply(fx.bank, t), vars);
    for (auto& lit : res->constraints)
      fx.bank.collectVars(lit.atom, vars);
    bool allCollapse = true;
    for (auto& lit : res->constraints) {
      const Term& eq = fx.bank[lit.atom];
      if (eq.args[0] != eq.args[1])
        allCollapse = false;
    }
    if (res->constraints.empty()) {
      CHECK(sT == res->theta.apply(fx.bank, t));
    } else if (allCollapse) {
      CHECK(sT == res->theta.apply(fx.bank, t));
    }
  }
  CHECK(succeeded > 200);
  CHECK(constrained > 20);
}
