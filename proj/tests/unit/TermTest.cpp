#include "doctest.h"

#include "TestHelpers.hpp"
#include "kernel/Substitution.hpp"

using namespace synthsat;
using namespace synthsat::test;

TEST_CASE("terms are hash-consed: equal structure shares one id") {
  GroupFixture fx;
  TermId t1 = fx.Gg(fx.F(fx.x(0)), fx.A());
  TermId t2 = fx.Gg(fx.F(fx.x(0)), fx.A());
  CHECK(t1 == t2);
  CHECK(t1 != fx.Gg(fx.F(fx.x(1)), fx.A()));
}

TEST_CASE("interning fills size, ground, varUpper and computability caches") {
  GroupFixture fx;
  TermId t = fx.Gg(fx.F(fx.x(3)), fx.A());
  const Term& n = fx.bank[t];
  CHECK(n.size == 4);
  CHECK(n.varUpper == 4);
  CHECK_FALSE(n.ground);
  CHECK(n.computable);

  TermId uc = fx.U(fx.A());
  CHECK_FALSE(fx.bank[uc].computable);
  CHECK(fx.bank[fx.Gg(uc, fx.B())].computable == false);
  CHECK(fx.bank[fx.A()].ground);
  CHECK(fx.bank[fx.A()].size == 1);
}

TEST_CASE("skolem constants are flagged unless they are synthesis inputs") {
  GroupFixture fx;
  SymbolId sk = fx.sig.addFresh("sk", {}, fx.G);
  fx.sig.symbolMut(sk).skolem = true;
  SymbolId in = fx.sig.addFresh("in", {}, fx.G);
  fx.sig.symbolMut(in).skolem = true;
  fx.sig.symbolMut(in).inputIndex = 0;

  CHECK(fx.bank[fx.bank.constant(sk)].foreignSkolem);
  CHECK_FALSE(fx.bank[fx.bank.constant(in)].foreignSkolem);
  CHECK(fx.bank[fx.F(fx.bank.constant(sk))].foreignSkolem);
}

TEST_CASE("occurs and variable collection") {
  GroupFixture fx;
  TermId t = fx.Gg(fx.F(fx.x(2)), fx.Gg(fx.x(0), fx.x(2)));
  CHECK(fx.bank.occurs(2, t));
  CHECK(fx.bank.occurs(0, t));
  CHECK_FALSE(fx.bank.occurs(1, t));

  std::vector<uint32_t> vars;
  fx.bank.collectVars(t, vars);
  CHECK(vars == std::vector<uint32_t>{2, 0});

  std::unordered_map<uint32_t, uint32_t> counts;
  fx.bank.countVars(t, counts);
  CHECK(counts[2] == 2);
  CHECK(counts[0] == 1);
}

TEST_CASE("renameUp shifts every variable") {
  GroupFixture fx;
  TermId t = fx.Gg(fx.x(0), fx.F(fx.x(2)));
  CHECK(fx.bank.renameUp(t, 5) == fx.Gg(fx.x(5), fx.F(fx.x(7))));
  CHECK(fx.bank.renameUp(fx.A(), 5) == fx.A());
}

TEST_CASE("replaceAt rewrites exactly the addressed subterm") {
  GroupFixture fx;
  TermId t = fx.Gg(fx.A(), fx.F(fx.B()));
  std::vector<uint32_t> path{1, 0};
  CHECK(fx.bank.replaceAt(t, path, fx.C()) == fx.Gg(fx.A(), fx.F(fx.C())));
  std::vector<uint32_t> root{};
  CHECK(fx.bank.replaceAt(t, root, fx.C()) == fx.C());
  std::vector<uint32_t> bad{0, 0};
  CHECK_THROWS_AS(fx.bank.replaceAt(t, bad, fx.C()), InternalError);
}

TEST_CASE("app checks arity and argument sorts") {
  GroupFixture fx;
  CHECK_THROWS_AS(fx.bank.app(fx.f, {fx.A(), fx.B()}), InternalError);
  TermId atom = fx.bank.app(fx.p, {fx.A()});
  CHECK_THROWS_AS(fx.bank.app(fx.f, {atom}), InternalError);
}

TEST_CASE("equality atoms accept any matching sorts but reject mismatches") {
  GroupFixture fx;
  TermId atom = fx.bank.app(fx.p, {fx.A()});
  // Boolean equalities arise internally (answer disequality constraints for
  // boolean-valued programs), so the bank permits them.
  TermId boolEq = fx.bank.mkEq(atom, fx.bank.app(fx.q, {fx.A()}));
  CHECK(fx.bank.isEqualityAtom(boolEq));
  CHECK_THROWS_AS(fx.bank.mkEq(atom, fx.A()), InternalError);
  TermId eq = fx.bank.mkEq(fx.A(), fx.B());
  CHECK(fx.bank.isEqualityAtom(eq));
  CHECK_FALSE(fx.bank.isEqualityAtom(atom));
}

TEST_CASE("skeleton comparison ignores variable identity") {
  GroupFixture fx;
  CHECK(TermBank::skeletonCompare(fx.bank, fx.F(fx.x(0)), fx.F(fx.x(7))) == 0);
  CHECK(TermBank::skeletonCompare(fx.bank, fx.F(fx.x(0)), fx.F(fx.A())) != 0);
  CHECK(TermBank::structuralCompare(fx.bank, fx.F(fx.x(0)), fx.F(fx.x(7))) < 0);
  CHECK(TermBank::structuralCompare(fx.bank, fx.x(3), fx.A()) < 0);
}

TEST_CASE("substitution application is simultaneous") {
  GroupFixture fx;
  Substitution s;
  s.bind(0, fx.x(1));
  s.bind(1, fx.C());
  TermId t = fx.Gg(fx.x(0), fx.x(1));
  CHECK(s.apply(fx.bank, t) == fx.Gg(fx.x(1), fx.C()));
}

TEST_CASE("composed substitutions behave like sequential application") {
  GroupFixture fx;
  std::mt19937 rng(20260815);
  for (int round = 0; round < 200; ++round) {
    Substitution s1, s2;
    for (uint32_t v = 0; v < 3; ++v) {
      if (rng() % 2)
        s1.bind(v, fx.randomTerm(rng, 5, 2));
      if (rng() % 2)
        s2.bind(v + 2, fx.randomTerm(rng, 5, 2));
    }
    Substitution both = composeSubstitutions(fx.bank, s1, s2);
    TermId t = fx.randomTerm(rng, 5, 3);
    CHECK(both.apply(fx.bank, t) == s2.apply(fx.bank, s1.apply(fx.bank, t)));
  }
}
