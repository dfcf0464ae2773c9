#include "shell/Clausify.hpp"

#include "kernel/Substitution.hpp"

namespace synthsat {

namespace {

/// Quantifier-free negation-normal form: literals at the leaves, And/Or
/// internal nodes. Existentials met along the way are skolemized over the
/// universal variables in scope.
struct Clausifier {
  TermBank& bank;
  bool computableSkolems;
  std::vector<QuantVar> universals;  // currently governing prefix
  Substitution skolemMap;            // existential var -> skolem term

  Formula nnf(const Formula& f, bool positive) {
    switch (f.kind) {
      case Formula::Kind::Atom: {
        TermId atom = skolemMap.apply(bank, f.atom);
        Formula leaf = Formula::mkAtom(atom);
        return positive ? leaf : Formula::mkNot(std::move(leaf));
      }
      case Formula::Kind::Not:
        return nnf(f.kids[0], !positive);
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        bool isAnd = (f.kind == Formula::Kind::And) == positive;
        std::vector<Formula> kids;
        for (const Formula& k : f.kids)
          kids.push_back(nnf(k, positive));
        return Formula::mkConn(isAnd ? Formula::Kind::And : Formula::Kind::Or,
                               std::move(kids));
      }
      case Formula::Kind::Implies: {
        std::vector<Formula> kids;
        kids.push_back(nnf(f.kids[0], !positive));
        kids.push_back(nnf(f.kids[1], positive));
        return Formula::mkConn(positive ? Formula::Kind::Or : Formula::Kind::And,
                               std::move(kids));
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bool universal = (f.kind == Formula::Kind::Forall) == positive;
        if (universal) {
          size_t mark = universals.size();
          for (const QuantVar& v : f.vars)
            universals.push_back(v);
          Formula body = nnf(f.kids[0], positive);
          universals.resize(mark);
          return body;
        }
        // Skolemize over the governing universal prefix.
        Substitution saved = skolemMap;
        for (const QuantVar& v : f.vars) {
          std::vector<SortId> argSorts;
          std::vector<TermId> args;
          for (const QuantVar& u : universals) {
            argSorts.push_back(u.sort);
            args.push_back(bank.var(u.var, u.sort));
          }
          SymbolId sk = bank.sig().addFresh("sk_" + v.name, std::move(argSorts), v.sort);
          Symbol& sym = bank.sig().symbolMut(sk);
          sym.skolem = true;
          sym.computable = computableSkolems;
          Substitution one;
          one.bind(v.var, bank.app(sk, std::move(args)));
          skolemMap.composeWith(bank, one);
        }
        Formula body = nnf(f.kids[0], positive);
        skolemMap = saved;
        return body;
      }
    }
    throw InternalError("unhandled formula kind");
  }

  /// Distributes the NNF tree into CNF, dropping true literals/clauses.
  std::vector<std::vector<Literal>> cnf(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::Atom:
      case Formula::Kind::Not: {
        bool positive = f.kind == Formula::Kind::Atom;
        TermId atom = positive ? f.atom : f.kids[0].atom;
        const Term& n = bank[atom];
        Interp in = n.kind == Term::Kind::App ? bank.sig().symbol(n.sym).interp : Interp::None;
        if (in == Interp::True || in == Interp::False) {
          bool truthy = (in == Interp::True) == positive;
          if (truthy)
            return {};  // tautological clause: no constraint at all
          return {{}};  // contributes an always-false literal: empty clause
        }
        return {{Literal{atom, positive, false}}};
      }
      case Formula::Kind::And: {
        std::vector<std::vector<Literal>> out;
        for (const Formula& k : f.kids)
          for (auto& cl : cnf(k))
            out.push_back(std::move(cl));
        return out;
      }
      case Formula::Kind::Or: {
        std::vector<std::vector<Literal>> acc{{}};
        for (const Formula& k : f.kids) {
          std::vector<std::vector<Literal>> kidCnf = cnf(k);
          std::vector<std::vector<Literal>> next;
          for (const auto& left : acc)
            for (const auto& right : kidCnf) {
              std::vector<Literal> merged = left;
              merged.insert(merged.end(), right.begin(), right.end());
              next.push_back(std::move(merged));
            }
          acc = std::move(next);
        }
        return acc;
      }
      default:
        throw InternalError("quantifier survived NNF");
    }
  }
};

} // namespace

std::vector<RawClause> clausify(TermBank& bank, const Formula& f, bool computableSkolems,
                                RuleId origin) {
  Clausifier cl{bank, computableSkolems};
  Formula flat = cl.nnf(f, true);
  std::vector<RawClause> out;
  for (auto& lits : cl.cnf(flat)) {
    RawClause rc;
    rc.lits = std::move(lits);
    rc.rule = origin;
    out.push_back(std::move(rc));
  }
  return out;
}

namespace {

Formula applyToFormula(TermBank& bank, const Substitution& s, const Formula& f) {
  Formula out = f;
  if (out.kind == Formula::Kind::Atom) {
    out.atom = s.apply(bank, out.atom);
    return out;
  }
  for (Formula& k : out.kids)
    k = applyToFormula(bank, s, k);
  return out;
}

bool mentionsIntLess(const TermBank& bank, TermId t) {
  const Term& n = bank[t];
  if (n.kind == Term::Kind::Var)
    return false;
  if (bank.sig().symbol(n.sym).interp == Interp::Less)
    return true;
  for (TermId a : n.args)
    if (mentionsIntLess(bank, a))
      return true;
  return false;
}

void addOrderAxioms(TermBank& bank, std::vector<RawClause>& clauses) {
  SortId Int = bank.sig().intSort();
  TermId x = bank.var(0, Int), y = bank.var(1, Int), z = bank.var(2, Int);
  auto less = [&](TermId a, TermId b) { return bank.app(bank.sig().intLess(), {a, b}); };
  RawClause total;
  total.lits = {Literal{less(x, y), true, false}, Literal{less(y, x), true, false},
                Literal{bank.mkEq(x, y), true, false}};
  total.rule = RuleId::TheoryAxiom;
  RawClause trans;
  trans.lits = {Literal{less(x, y), false, false}, Literal{less(y, z), false, false},
                Literal{less(x, z), true, false}};
  trans.rule = RuleId::TheoryAxiom;
  RawClause irref;
  irref.lits = {Literal{less(x, x), false, false}};
  irref.rule = RuleId::TheoryAxiom;
  clauses.push_back(std::move(total));
  clauses.push_back(std::move(trans));
  clauses.push_back(std::move(irref));
}

} // namespace

PreprocessedProblem preprocess(Problem& p, bool computableSkolems) {
  PreprocessedProblem out;
  TermBank& bank = *p.bank;

  for (const Formula& a : p.assumptions)
    for (RawClause& rc : clausify(bank, a, computableSkolems, RuleId::Input))
      out.clauses.push_back(std::move(rc));

  if (p.specification) {
    const Formula& spec = *p.specification;
    const Formula* exists = &spec;
    std::vector<QuantVar> inputs;
    if (spec.kind == Formula::Kind::Forall) {
      inputs = spec.vars;
      exists = &spec.kids[0];
    }
    if (exists->kind != Formula::Kind::Exists || exists->vars.size() != 1)
      throw InputError("specification lost its shape");
    const QuantVar& output = exists->vars[0];
    out.outputName = output.name;
    out.outputSort = output.sort;
    out.hasSpec = true;

    // Replace each input by a fresh computable constant.
    Substitution inputMap;
    for (size_t i = 0; i < inputs.size(); ++i) {
      SymbolId sk = bank.sig().addFresh("sk_" + inputs[i].name, {}, inputs[i].sort);
      Symbol& sym = bank.sig().symbolMut(sk);
      sym.skolem = true;
      sym.computable = true;
      sym.inputIndex = static_cast<int32_t>(i);
      out.inputSkolems.push_back(sk);
      out.inputNames.push_back(inputs[i].name);
      Substitution one;
      one.bind(inputs[i].var, bank.constant(sk));
      inputMap.composeWith(bank, one);
    }

    // Negated body, inputs instantiated; the output variable stays free and
    // every clause carries it as the answer.
    Formula negBody = Formula::mkNot(exists->kids[0]);
    Formula grounded = applyToFormula(bank, inputMap, negBody);
    TermId answerVar = bank.var(output.var, output.sort);
    for (RawClause& rc : clausify(bank, grounded, computableSkolems, RuleId::Spec)) {
      rc.answer = answerVar;
      out.clauses.push_back(std::move(rc));
    }
  }

  bool needOrder = false;
  for (const RawClause& rc : out.clauses)
    for (const Literal& lit : rc.lits)
      needOrder = needOrder || mentionsIntLess(bank, lit.atom);
  if (needOrder)
    addOrderAxioms(bank, out.clauses);
  return out;
}

} // namespace synthsat
