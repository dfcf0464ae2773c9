#include "parse/Parser.hpp"

#include <cctype>

#include "parse/Sexp.hpp"

namespace synthsat {

Problem::Problem() : sig(std::make_unique<Signature>()), bank(std::make_unique<TermBank>(*sig)) {}

namespace {

[[noreturn]] void fail(const Sexp& at, const std::string& msg) {
  throw InputError(msg + " (line " + std::to_string(at.line) + ")");
}

/// Names that can never be declared or shadowed. The arithmetic operator
/// names (+ - * < <= > >=) are not listed: declaring one of them replaces the
/// built-in meaning for the whole file, which lets algebra problems use the
/// traditional operator spellings on uninterpreted sorts.
bool isReservedName(const std::string& n) {
  static const char* names[] = {"and",  "or",    "not", "=>",  "forall",
                                "exists", "=",   "ite", "true", "false",
                                "Int",  "Bool"};
  for (const char* r : names)
    if (n == r)
      return true;
  return false;
}

bool isNumeral(const std::string& s) {
  if (s.empty())
    return false;
  size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size())
    return false;
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

struct ParserCtx {
  Signature& sig;
  TermBank& bank;
  uint32_t varCounter = 0;
  std::vector<QuantVar> scope;  // innermost last

  const QuantVar* lookupVar(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name)
        return &*it;
    return nullptr;
  }

  SortId parseSort(const Sexp& s) {
    if (!s.isAtom)
      fail(s, "expected a sort name");
    if (s.atom == "Int")
      return sig.intSort();
    if (s.atom == "Bool")
      return sig.boolSort();
    if (auto found = sig.findSort(s.atom))
      return *found;
    fail(s, "unknown sort '" + s.atom + "'");
  }

  std::string sortName(SortId s) const { return sig.sort(s).name; }

  TermId checkSort(const Sexp& at, TermId t, SortId expected, const char* what) {
    if (bank[t].sort != expected)
      fail(at, std::string(what) + ": expected sort " + sortName(expected) + ", got " +
                   sortName(bank[t].sort));
    return t;
  }

  // ---- terms -------------------------------------------------------------

  TermId parseTerm(const Sexp& s) {
    if (s.isAtom)
      return parseAtomToken(s);
    if (s.size() == 0)
      fail(s, "empty application");
    const Sexp& head = s[0];
    if (!head.isAtom)
      fail(head, "expected an operator or function name");
    const std::string& op = head.atom;

    if (auto symId = sig.findSymbol(op))
      return applyDeclared(s, *symId);

    if (op == "ite") {
      if (s.size() != 4)
        fail(s, "ite takes a guard and two branches");
      TermId guard = checkSort(s[1], parseTerm(s[1]), sig.boolSort(), "ite guard");
      TermId thenT = parseTerm(s[2]);
      TermId elseT = parseTerm(s[3]);
      if (bank[thenT].sort != bank[elseT].sort)
        fail(s, "ite branches have different sorts");
      if (bank[thenT].sort == sig.boolSort())
        fail(s, "boolean-valued ite is not supported");
      return bank.mkIte(guard, thenT, elseT);
    }
    if (op == "+" || op == "*" || (op == "-" && s.size() == 3)) {
      if (s.size() != 3)
        fail(s, "'" + op + "' takes two integer arguments");
      TermId l = checkSort(s[1], parseTerm(s[1]), sig.intSort(), "arithmetic argument");
      TermId r = checkSort(s[2], parseTerm(s[2]), sig.intSort(), "arithmetic argument");
      SymbolId f = op == "+" ? sig.intAdd() : op == "*" ? sig.intMul() : sig.intSub();
      return bank.app(f, {l, r});
    }
    if (op == "-" && s.size() == 2) {
      if (s[1].isAtom && isNumeral(s[1].atom))
        return bank.constant(sig.numeral(-std::stoll(s[1].atom)));
      TermId t = checkSort(s[1], parseTerm(s[1]), sig.intSort(), "arithmetic argument");
      return bank.app(sig.intSub(), {bank.constant(sig.numeral(0)), t});
    }
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      if (s.size() != 3)
        fail(s, "'" + op + "' takes two integer arguments");
      TermId l = checkSort(s[1], parseTerm(s[1]), sig.intSort(), "comparison argument");
      TermId r = checkSort(s[2], parseTerm(s[2]), sig.intSort(), "comparison argument");
      // Normalize everything to strict less-than.
      if (op == "<")
        return bank.app(sig.intLess(), {l, r});
      if (op == ">")
        return bank.app(sig.intLess(), {r, l});
      if (op == "<=")
        return bank.mkNot(bank.app(sig.intLess(), {r, l}));
      return bank.mkNot(bank.app(sig.intLess(), {l, r}));  // >=
    }
    if (op == "=") {
      if (s.size() != 3)
        fail(s, "'=' takes two arguments");
      TermId l = parseTerm(s[1]);
      TermId r = parseTerm(s[2]);
      if (bank[l].sort != bank[r].sort)
        fail(s, "'=' between different sorts");
      if (bank[l].sort == sig.boolSort())
        fail(s, "'=' on booleans is not supported");
      return bank.mkEq(l, r);
    }
    if (op == "and" || op == "or") {
      if (s.size() < 3)
        fail(s, "'" + op + "' takes at least two arguments");
      TermId acc = checkSort(s[1], parseTerm(s[1]), sig.boolSort(), "connective argument");
      for (size_t i = 2; i < s.size(); ++i) {
        TermId next = checkSort(s[i], parseTerm(s[i]), sig.boolSort(), "connective argument");
        acc = bank.app(op == "and" ? sig.conjunction() : sig.disjunction(), {acc, next});
      }
      return acc;
    }
    if (op == "not") {
      if (s.size() != 2)
        fail(s, "'not' takes one argument");
      return bank.mkNot(checkSort(s[1], parseTerm(s[1]), sig.boolSort(), "'not' argument"));
    }
    fail(head, "unknown function or operator '" + op + "'");
  }

  TermId parseAtomToken(const Sexp& s) {
    if (isNumeral(s.atom))
      return bank.constant(sig.numeral(std::stoll(s.atom)));
    if (s.atom == "true")
      return bank.mkTrue();
    if (s.atom == "false")
      return bank.mkFalse();
    if (const QuantVar* v = lookupVar(s.atom))
      return bank.var(v->var, v->sort);
    if (auto symId = sig.findSymbol(s.atom)) {
      if (sig.symbol(*symId).arity() != 0)
        fail(s, "'" + s.atom + "' needs arguments");
      return bank.constant(*symId);
    }
    fail(s, "unknown identifier '" + s.atom + "'");
  }

  TermId applyDeclared(const Sexp& s, SymbolId f) {
    const Symbol& sym = sig.symbol(f);
    if (s.size() - 1 != sym.arity())
      fail(s, "'" + sym.name + "' takes " + std::to_string(sym.arity()) + " arguments");
    std::vector<TermId> args;
    for (size_t i = 1; i < s.size(); ++i)
      args.push_back(checkSort(s[i], parseTerm(s[i]), sym.argSorts[i - 1],
                               ("argument of '" + sym.name + "'").c_str()));
    return bank.app(f, std::move(args));
  }

  // ---- formulas ----------------------------------------------------------

  std::vector<QuantVar> parseBindings(const Sexp& s) {
    if (!s.isList() || s.size() == 0)
      fail(s, "expected a non-empty variable binding list");
    std::vector<QuantVar> out;
    for (size_t i = 0; i < s.size(); ++i) {
      const Sexp& b = s[i];
      if (!b.isList() || b.size() != 2 || !b[0].isAtom)
        fail(b, "expected a (name Sort) binding");
      QuantVar qv;
      qv.name = b[0].atom;
      qv.sort = parseSort(b[1]);
      qv.var = varCounter++;
      out.push_back(std::move(qv));
    }
    return out;
  }

  Formula parseFormula(const Sexp& s) {
    if (s.isList() && s.size() > 0 && s[0].isAtom) {
      const std::string& op = s[0].atom;
      bool shadowed = sig.findSymbol(op).has_value() && !isReservedName(op);
      if (!shadowed) {
        if (op == "forall" || op == "exists") {
          if (s.size() != 3)
            fail(s, "'" + op + "' takes a binding list and a body");
          std::vector<QuantVar> vars = parseBindings(s[1]);
          if (op == "exists" && vars.size() != 1)
            fail(s, "'exists' must bind exactly one variable");
          size_t mark = scope.size();
          for (const QuantVar& v : vars)
            scope.push_back(v);
          Formula body = parseFormula(s[2]);
          scope.resize(mark);
          return Formula::mkQuant(
              op == "forall" ? Formula::Kind::Forall : Formula::Kind::Exists,
              std::move(vars), std::move(body));
        }
        if (op == "and" || op == "or") {
          if (s.size() < 3)
            fail(s, "'" + op + "' takes at least two arguments");
          std::vector<Formula> kids;
          for (size_t i = 1; i < s.size(); ++i)
            kids.push_back(parseFormula(s[i]));
          return Formula::mkConn(op == "and" ? Formula::Kind::And : Formula::Kind::Or,
                                 std::move(kids));
        }
        if (op == "not") {
          if (s.size() != 2)
            fail(s, "'not' takes one argument");
          return Formula::mkNot(parseFormula(s[1]));
        }
        if (op == "=>") {
          if (s.size() < 3)
            fail(s, "'=>' takes at least two arguments");
          // Right-associative: (=> a b c) is a -> (b -> c).
          Formula acc = parseFormula(s[s.size() - 1]);
          for (size_t i = s.size() - 1; i-- > 1;) {
            std::vector<Formula> kids;
            kids.push_back(parseFormula(s[i]));
            kids.push_back(std::move(acc));
            acc = Formula::mkConn(Formula::Kind::Implies, std::move(kids));
          }
          return acc;
        }
        if (op == "<=" || op == ">=") {
          // Keep the literal structure visible to the clausifier.
          if (s.size() != 3)
            fail(s, "'" + op + "' takes two integer arguments");
          TermId l = checkSort(s[1], parseTerm(s[1]), sig.intSort(), "comparison argument");
          TermId r = checkSort(s[2], parseTerm(s[2]), sig.intSort(), "comparison argument");
          TermId atom = op == "<=" ? bank.app(sig.intLess(), {r, l})
                                   : bank.app(sig.intLess(), {l, r});
          return Formula::mkNot(Formula::mkAtom(atom));
        }
      }
    }
    TermId atom = parseTerm(s);
    if (bank[atom].sort != sig.boolSort())
      fail(s, "expected a formula, got a term of sort " + sortName(bank[atom].sort));
    // `not` folded into a term (e.g. from a nested <=) still reads as formula
    // negation; unwrap so clausification sees plain atoms.
    return unwrapBoolTerm(atom);
  }

  Formula unwrapBoolTerm(TermId t) {
    const Term& n = bank[t];
    Interp in = n.kind == Term::Kind::App ? sig.symbol(n.sym).interp : Interp::None;
    if (in == Interp::Not)
      return Formula::mkNot(unwrapBoolTerm(n.args[0]));
    if (in == Interp::And || in == Interp::Or) {
      std::vector<Formula> kids;
      kids.push_back(unwrapBoolTerm(n.args[0]));
      kids.push_back(unwrapBoolTerm(n.args[1]));
      return Formula::mkConn(in == Interp::And ? Formula::Kind::And : Formula::Kind::Or,
                             std::move(kids));
    }
    return Formula::mkAtom(t);
  }
};

void checkSpecificationShape(const Sexp& at, const Formula& f) {
  const Formula* body = &f;
  if (body->kind == Formula::Kind::Forall)
    body = &body->kids[0];
  if (body->kind != Formula::Kind::Exists || body->vars.size() != 1)
    fail(at, "specification must have the shape "
             "(forall (inputs) (exists (one-output) body))");
  if (!body->kids[0].quantifierFree())
    fail(at, "specification body must be quantifier-free");
}

} // namespace

Problem parseProblem(const std::string& text) {
  Problem p;
  ParserCtx ctx{*p.sig, *p.bank};
  std::vector<Sexp> cmds = parseSexps(text);

  for (const Sexp& cmd : cmds) {
    if (!cmd.isList() || cmd.size() == 0 || !cmd[0].isAtom)
      fail(cmd, "expected a command");
    const std::string& op = cmd[0].atom;
    if (op == "set-logic" || op == "set-info" || op == "check-synth" || op == "check-sat" ||
        op == "exit")
      continue;
    if (op == "declare-sort") {
      if (cmd.size() < 2 || cmd.size() > 3 || !cmd[1].isAtom)
        fail(cmd, "expected (declare-sort Name) or (declare-sort Name 0)");
      if (cmd.size() == 3 && (!cmd[2].isAtom || cmd[2].atom != "0"))
        fail(cmd, "only arity-0 sorts are supported");
      if (isReservedName(cmd[1].atom) || p.sig->findSort(cmd[1].atom))
        fail(cmd, "sort name '" + cmd[1].atom + "' is reserved or already declared");
      p.sig->addSort(cmd[1].atom);
      continue;
    }
    if (op == "declare-fun" || op == "declare-const") {
      bool isConst = op == "declare-const";
      size_t expected = isConst ? 3 : 4;
      if (cmd.size() != expected || !cmd[1].isAtom)
        fail(cmd, "malformed " + op);
      const std::string& name = cmd[1].atom;
      if (isReservedName(name) || isNumeral(name))
        fail(cmd, "'" + name + "' cannot be declared");
      std::vector<SortId> argSorts;
      if (!isConst) {
        if (!cmd[2].isList())
          fail(cmd, "expected an argument sort list");
        for (const Sexp& a : cmd[2].items)
          argSorts.push_back(ctx.parseSort(a));
      }
      SortId res = ctx.parseSort(cmd[isConst ? 2 : 3]);
      p.sig->addSymbol(name, std::move(argSorts), res);
      continue;
    }
    if (op == "assert" || op == "assert-not") {
      if (cmd.size() != 2)
        fail(cmd, "'" + op + "' takes one formula");
      Formula f = ctx.parseFormula(cmd[1]);
      if (op == "assert") {
        p.assumptions.push_back(std::move(f));
      } else {
        if (p.specification)
          fail(cmd, "multiple assert-not commands");
        checkSpecificationShape(cmd, f);
        p.specification = std::move(f);
      }
      continue;
    }
    if (op == "set-option") {
      if (cmd.size() != 3 || !cmd[1].isAtom || cmd[1].atom != ":uncomputable" ||
          !cmd[2].isList())
        fail(cmd, "expected (set-option :uncomputable (name ...))");
      for (const Sexp& n : cmd[2].items) {
        if (!n.isAtom)
          fail(n, "expected a symbol name");
        auto symId = p.sig->findSymbol(n.atom);
        if (!symId || p.sig->symbol(*symId).interpreted)
          fail(n, "unknown or built-in symbol '" + n.atom + "' in :uncomputable");
        p.sig->symbolMut(*symId).computable = false;
        p.uncomputableNames.push_back(n.atom);
      }
      continue;
    }
    fail(cmd, "unknown command '" + op + "'");
  }
  return p;
}

} // namespace synthsat
