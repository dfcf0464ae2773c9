#include "doctest.h"

#include "TestHelpers.hpp"
#include "kernel/Clause.hpp"
#include "parse/Printer.hpp"

using namespace synthsat;
using namespace synthsat::test;

namespace {

struct ClauseFixture : GroupFixture {
  ClauseBank clauses{bank};

  std::string makeAndPrint(RawClause rc) {
    auto res = clauses.make(std::move(rc));
    return printClause(bank, clauses.get(res.id));
  }
};

} // namespace

TEST_CASE("normalization renumbers variables and orders literals canonically") {
  ClauseFixture fx;
  RawClause rc;
  rc.lits = {Literal{fx.bank.app(fx.q, {fx.x(2)}), true, false},
             Literal{fx.bank.app(fx.p, {fx.x(5)}), true, false}};
  auto res = fx.clauses.make(rc);
  const Clause& c = fx.clauses.get(res.id);
  CHECK(printClause(fx.bank, c) == "(p X0) | (q X1)");
  CHECK(c.numVars == 2);
  CHECK(c.weight == 4);
}

TEST_CASE("alpha-variant clauses intern to the same id") {
  ClauseFixture fx;
  RawClause rc1;
  rc1.lits = {Literal{fx.bank.app(fx.p, {fx.x(7)}), true, false}};
  RawClause rc2;
  rc2.lits = {Literal{fx.bank.app(fx.p, {fx.x(3)}), true, false}};
  auto r1 = fx.clauses.make(rc1);
  auto r2 = fx.clauses.make(rc2);
  CHECK(r1.fresh);
  CHECK_FALSE(r2.fresh);
  CHECK(r1.id == r2.id);
}

TEST_CASE("equality arguments take a canonical order") {
  ClauseFixture fx;
  RawClause rc;
  rc.lits = {Literal{fx.bank.mkEq(fx.A(), fx.B()), true, false}};
  CHECK(fx.makeAndPrint(rc) == "(= b a)");
  RawClause rc2;
  rc2.lits = {Literal{fx.bank.mkEq(fx.B(), fx.A()), true, false}};
  auto i1 = fx.clauses.make(rc);
  auto i2 = fx.clauses.make(rc2);
  CHECK(i1.id == i2.id); // both orders meet in one clause
}

TEST_CASE("exact duplicate literals merge and keep the constraint flag") {
  ClauseFixture fx;
  TermId atom = fx.bank.app(fx.p, {fx.x(0)});
  RawClause rc;
  rc.lits = {Literal{atom, true, false}, Literal{atom, true, true}};
  auto res = fx.clauses.make(rc);
  const Clause& c = fx.clauses.get(res.id);
  REQUIRE(c.lits.size() == 1);
  CHECK(c.lits[0].constraint);
}

TEST_CASE("answer variables are renumbered after the literal variables") {
  ClauseFixture fx;
  RawClause rc;
  rc.lits = {Literal{fx.bank.app(fx.p, {fx.x(9)}), false, false}};
  rc.answer = fx.Gg(fx.x(9), fx.x(2));
  auto res = fx.clauses.make(rc);
  const Clause& c = fx.clauses.get(res.id);
  CHECK(printClause(fx.bank, c) == "(not (p X0)) | ans((g X0 X1))");
  CHECK(c.numVars == 2);
  CHECK(c.weight == 3); // atom size 2 plus 1 for the whole answer literal
  CHECK(c.hasAnswer());
}

TEST_CASE("applied substitutes and the result renormalizes") {
  ClauseFixture fx;
  RawClause rc;
  rc.lits = {Literal{fx.bank.app(fx.p, {fx.x(0)}), true, false},
             Literal{fx.bank.app(fx.q, {fx.x(1)}), true, false}};
  auto base = fx.clauses.make(rc);
  Substitution theta;
  theta.bind(0, fx.A());
  RawClause inst = fx.clauses.applied(fx.clauses.get(base.id), theta);
  auto res = fx.clauses.make(inst);
  CHECK(printClause(fx.bank, fx.clauses.get(res.id)) == "(p a) | (q X0)");
}

TEST_CASE("the empty clause prints as falsum") {
  ClauseFixture fx;
  RawClause rc;
  auto res = fx.clauses.make(rc);
  CHECK(fx.clauses.get(res.id).empty());
  CHECK(printClause(fx.bank, fx.clauses.get(res.id)) == "$false");
}

TEST_CASE("answer atoms cannot hide inside the literal list") {
  ClauseFixture fx;
  SymbolId ansSym = fx.sig.addFresh("ans", {fx.G}, fx.sig.boolSort());
  fx.sig.symbolMut(ansSym).answerPredicate = true;
  RawClause rc;
  rc.lits = {Literal{fx.bank.app(ansSym, {fx.A()}), true, false}};
  CHECK_THROWS_AS(fx.clauses.make(rc), InternalError);
}

TEST_CASE("non-boolean atoms are rejected") {
  ClauseFixture fx;
  RawClause rc;
  rc.lits = {Literal{fx.A(), true, false}};
  CHECK_THROWS_AS(fx.clauses.make(rc), InternalError);
}
