#include "synthesis/Synthesis.hpp"

#include <json.hpp>

#include "inferences/GroundTheory.hpp"
#include "parse/Printer.hpp"

namespace synthsat {

namespace {

/// Distinct variables of t with their sorts, in first-occurrence order.
void collectVarsSorted(const TermBank& bank, TermId t,
                       std::vector<std::pair<uint32_t, SortId>>& out) {
  const Term& n = bank[t];
  if (n.ground)
    return;
  if (n.kind == Term::Kind::Var) {
    for (const auto& seen : out)
      if (seen.first == n.var)
        return;
    out.push_back({n.var, n.sort});
    return;
  }
  for (TermId a : n.args)
    collectVarsSorted(bank, a, out);
}

} // namespace

TermId designatedConstant(TermBank& bank, SortId sort,
                          const std::vector<SymbolId>& inputSkolems) {
  Signature& sig = bank.sig();
  if (sort == sig.intSort())
    return bank.constant(sig.numeral(0));
  if (sort == sig.boolSort())
    return bank.mkTrue();
  for (SymbolId f = 0; f < sig.symbolCount(); ++f) {
    const Symbol& s = sig.symbol(f);
    if (s.arity() != 0 || s.resultSort != sort || !s.computable || s.answerPredicate)
      continue;
    if (s.skolem && s.inputIndex < 0)
      continue;  // witnesses of assumption existentials are not program material
    return bank.constant(f);
  }
  (void)inputSkolems;  // inputs are Skolem constants and already match above
  throw InputError("no computable constant of sort '" + sig.sort(sort).name +
                   "' to use as a default output");
}

std::vector<ProgramWithConditions> pruneVariablePrograms(
    const TermBank& bank, const std::vector<ProgramWithConditions>& ps) {
  std::vector<ProgramWithConditions> kept;
  for (const ProgramWithConditions& p : ps)
    if (bank[p.term].kind != Term::Kind::Var)
      kept.push_back(p);
  return kept;
}

TermId negatedClauseGuard(ClauseBank& clauses, ClauseId conditionClause) {
  TermBank& bank = clauses.terms();
  const Clause& c = clauses.get(conditionClause);
  TermId guard = kNoTerm;
  for (const Literal& l : c.lits) {
    TermId piece = l.positive ? bank.mkNot(l.atom) : l.atom;
    guard = guard == kNoTerm ? piece : bank.mkAnd(guard, piece);
  }
  return guard == kNoTerm ? bank.mkTrue() : guard;
}

SynthesizedProgram composeProgram(ClauseBank& clauses, const PreprocessedProblem& pre,
                                  const std::vector<ProgramWithConditions>& used) {
  TermBank& bank = clauses.terms();
  SynthesizedProgram out;
  for (size_t i = 0; i < pre.inputSkolems.size(); ++i)
    out.inputs.push_back(
        {pre.inputNames[i], bank.sig().symbol(pre.inputSkolems[i]).resultSort});

  std::vector<ProgramWithConditions> ps = pruneVariablePrograms(bank, used);
  if (ps.empty()) {
    out.degenerate = true;
    out.body = designatedConstant(bank, pre.outputSort, pre.inputSkolems);
    return out;
  }

  TermId body = ps.back().term;
  for (size_t i = ps.size() - 1; i-- > 0;)
    body = bank.mkIte(negatedClauseGuard(clauses, ps[i].conditionClause), ps[i].term, body);

  // A clause variable surviving in a fragment stands for an arbitrary value;
  // any concrete choice is correct on that branch.
  std::vector<std::pair<uint32_t, SortId>> vars;
  collectVarsSorted(bank, body, vars);
  if (!vars.empty()) {
    Substitution sigma;
    for (const auto& [v, sort] : vars)
      sigma.bind(v, designatedConstant(bank, sort, pre.inputSkolems));
    body = sigma.apply(bank, body);
  }

  out.body = body;
  out.provenance = std::move(ps);
  return out;
}

namespace {

/// Bottom-up structural cleanup that the ground evaluator does not cover:
/// a branch pair under a negated guard swaps instead.
TermId flipNegatedGuards(TermBank& bank, TermId t) {
  const Term& n0 = bank[t];
  if (n0.kind == Term::Kind::Var)
    return t;
  const SymbolId f = n0.sym;
  std::vector<TermId> args = n0.args;  // copy: interning may reallocate nodes
  bool changed = false;
  for (TermId& a : args) {
    TermId na = flipNegatedGuards(bank, a);
    changed = changed || na != a;
    a = na;
  }
  TermId result = changed ? bank.app(f, std::move(args)) : t;
  const Signature& sig = bank.sig();
  if (sig.symbol(f).interp == Interp::IfThenElse) {
    const Term& ite = bank[result];
    TermId guard = ite.args[0];
    if (bank[guard].kind == Term::Kind::App &&
        sig.symbol(bank[guard].sym).interp == Interp::Not) {
      TermId inner = bank[guard].args[0];
      TermId thenT = ite.args[1];
      TermId elseT = ite.args[2];
      return bank.mkIte(inner, elseT, thenT);
    }
  }
  return result;
}

} // namespace

SynthesizedProgram simplifyProgram(TermBank& bank, SynthesizedProgram p) {
  if (p.body == kNoTerm)
    return p;
  TheoryEvaluator eval(bank);
  TermId t = eval.normalize(p.body);
  for (;;) {
    TermId flipped = flipNegatedGuards(bank, t);
    flipped = eval.normalize(flipped);
    if (flipped == t)
      break;
    t = flipped;
  }
  p.body = t;
  return p;
}

// ---------------------------------------------------------------------------
// Finite models

FiniteModel FiniteModel::load(const std::string& jsonText, const Signature& sig) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(jsonText);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("model is not valid JSON: ") + e.what());
  }
  FiniteModel m;
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (!g.contains("min") || !g.contains("max"))
      throw InputError("grid model needs integer fields 'min' and 'max'");
    m.gridMode = true;
    m.gridMin = g["min"].get<long long>();
    m.gridMax = g["max"].get<long long>();
    if (m.gridMin > m.gridMax)
      throw InputError("grid model has min > max");
    return m;
  }

  if (!doc.contains("sorts") || !doc["sorts"].is_object())
    throw InputError("model needs a 'sorts' object (or a 'grid')");
  for (const auto& [name, size] : doc["sorts"].items()) {
    auto s = sig.findSort(name);
    if (!s)
      throw InputError("model mentions unknown sort '" + name + "'");
    long long n = size.get<long long>();
    if (n <= 0)
      throw InputError("sort '" + name + "' needs a positive size");
    m.sortSize[*s] = n;
  }

  auto domainOf = [&](SortId s) -> long long {
    auto it = m.sortSize.find(s);
    if (it == m.sortSize.end())
      throw InputError("model gives no size for sort '" + sig.sort(s).name + "'");
    return it->second;
  };

  if (doc.contains("symbols")) {
    for (const auto& [name, value] : doc["symbols"].items()) {
      auto f = sig.findSymbol(name);
      if (!f)
        throw InputError("model mentions unknown symbol '" + name + "'");
      const Symbol& sym = sig.symbol(*f);
      long long resultRange = sym.resultSort == sig.boolSort() ? 2 : domainOf(sym.resultSort);

      std::vector<long long> table;
      // Nested arrays, one level per argument, leaves = result values.
      auto flatten = [&](auto&& self, const nlohmann::json& node, size_t depth) -> void {
        if (depth == sym.arity()) {
          long long v;
          if (node.is_boolean())
            v = node.get<bool>() ? 1 : 0;
          else if (node.is_number_integer())
            v = node.get<long long>();
          else
            throw InputError("table entry for '" + name + "' is not an integer or boolean");
          if (v < 0 || v >= resultRange)
            throw InputError("table entry for '" + name + "' is out of range");
          table.push_back(v);
          return;
        }
        long long expect = domainOf(sym.argSorts[depth]);
        if (!node.is_array() || static_cast<long long>(node.size()) != expect)
          throw InputError("table for '" + name + "' has wrong dimensions");
        for (const auto& child : node)
          self(self, child, depth + 1);
      };
      flatten(flatten, value, 0);
      m.tables[*f] = std::move(table);
    }
  }
  return m;
}

std::vector<long long> FiniteModel::domain(const Signature& sig, SortId sort) const {
  std::vector<long long> values;
  if (gridMode) {
    if (sort != sig.intSort())
      throw InputError("grid models only cover integer sorts");
    for (long long v = gridMin; v <= gridMax; ++v)
      values.push_back(v);
    return values;
  }
  auto it = sortSize.find(sort);
  if (it == sortSize.end())
    throw InputError("model gives no size for sort '" + sig.sort(sort).name + "'");
  for (long long v = 0; v < it->second; ++v)
    values.push_back(v);
  return values;
}

namespace {

/// Term and formula evaluation under a finite model. Input constants are
/// supplied as per-point symbol overrides; variables through `env`.
struct ModelEval {
  const FiniteModel& model;
  const TermBank& bank;
  const std::unordered_map<SymbolId, long long>* overrides = nullptr;

  long long term(TermId t, const std::unordered_map<uint32_t, long long>& env) const {
    const Term& n = bank[t];
    if (n.kind == Term::Kind::Var) {
      auto it = env.find(n.var);
      if (it == env.end())
        throw InternalError("unbound variable in model evaluation");
      return it->second;
    }
    const Symbol& sym = bank.sig().symbol(n.sym);
    switch (sym.interp) {
      case Interp::Numeral: return sym.numeral;
      case Interp::True: return 1;
      case Interp::False: return 0;
      case Interp::Add: return term(n.args[0], env) + term(n.args[1], env);
      case Interp::Sub: return term(n.args[0], env) - term(n.args[1], env);
      case Interp::Mul: return term(n.args[0], env) * term(n.args[1], env);
      case Interp::Less: return term(n.args[0], env) < term(n.args[1], env) ? 1 : 0;
      case Interp::Equal: return term(n.args[0], env) == term(n.args[1], env) ? 1 : 0;
      case Interp::IfThenElse:
        return term(n.args[0], env) != 0 ? term(n.args[1], env) : term(n.args[2], env);
      case Interp::And: return (term(n.args[0], env) != 0 && term(n.args[1], env) != 0) ? 1 : 0;
      case Interp::Or: return (term(n.args[0], env) != 0 || term(n.args[1], env) != 0) ? 1 : 0;
      case Interp::Not: return term(n.args[0], env) != 0 ? 0 : 1;
      case Interp::None: break;
    }
    if (overrides) {
      auto it = overrides->find(n.sym);
      if (it != overrides->end())
        return it->second;
    }
    auto table = model.tables.find(n.sym);
    if (table == model.tables.end())
      throw InputError("model does not interpret symbol '" + sym.name + "'");
    size_t index = 0;
    for (size_t i = 0; i < n.args.size(); ++i) {
      long long range = model.sortSize.at(sym.argSorts[i]);
      long long v = term(n.args[i], env);
      if (v < 0 || v >= range)
        throw InternalError("argument value escapes the model domain");
      index = index * static_cast<size_t>(range) + static_cast<size_t>(v);
    }
    return table->second.at(index);
  }

  bool formula(const Formula& f, std::unordered_map<uint32_t, long long>& env) const {
    switch (f.kind) {
      case Formula::Kind::Atom:
        return term(f.atom, env) != 0;
      case Formula::Kind::Not:
        return !formula(f.kids[0], env);
      case Formula::Kind::And:
        for (const Formula& k : f.kids)
          if (!formula(k, env))
            return false;
        return true;
      case Formula::Kind::Or:
        for (const Formula& k : f.kids)
          if (formula(k, env))
            return true;
        return false;
      case Formula::Kind::Implies:
        return !formula(f.kids[0], env) || formula(f.kids[1], env);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bool isAll = f.kind == Formula::Kind::Forall;
        return quantify(f, 0, isAll, env);
      }
    }
    return false;
  }

private:
  bool quantify(const Formula& f, size_t i,
                bool isAll, std::unordered_map<uint32_t, long long>& env) const {
    if (i == f.vars.size())
      return formula(f.kids[0], env);
    for (long long v : model.domain(bank.sig(), f.vars[i].sort)) {
      env[f.vars[i].var] = v;
      bool sub = quantify(f, i + 1, isAll, env);
      if (isAll && !sub) {
        env.erase(f.vars[i].var);
        return false;
      }
      if (!isAll && sub) {
        env.erase(f.vars[i].var);
        return true;
      }
    }
    env.erase(f.vars[i].var);
    return isAll;
  }
};

} // namespace

VerificationReport verifyProgram(const SynthesizedProgram& p, const Problem& problem,
                                 const PreprocessedProblem& pre, const FiniteModel& model) {
  VerificationReport report;
  const TermBank& bank = *problem.bank;
  ModelEval eval{model, bank, nullptr};

  // The check is meaningless on a structure that breaks the assumptions.
  std::unordered_map<uint32_t, long long> env;
  for (size_t i = 0; i < problem.assumptions.size(); ++i) {
    if (!eval.formula(problem.assumptions[i], env)) {
      report.invalidModel = true;
      report.detail = "model falsifies assumption #" + std::to_string(i + 1);
      return report;
    }
  }

  if (!problem.specification) {
    report.pass = true;
    report.detail = "no specification to check";
    return report;
  }
  const Formula& spec = *problem.specification;
  const std::vector<QuantVar>* inputs = nullptr;
  const Formula* exists = &spec;
  static const std::vector<QuantVar> kNoInputs;
  if (spec.kind == Formula::Kind::Forall) {
    inputs = &spec.vars;
    exists = &spec.kids[0];
  } else {
    inputs = &kNoInputs;
  }
  const Formula& body = exists->kids[0];
  const QuantVar& output = exists->vars[0];

  std::vector<std::vector<long long>> domains;
  for (const QuantVar& in : *inputs)
    domains.push_back(model.domain(bank.sig(), in.sort));

  std::vector<size_t> idx(domains.size(), 0);
  std::unordered_map<SymbolId, long long> point;
  ModelEval evalWithInputs{model, bank, &point};
  for (;;) {
    point.clear();
    env.clear();
    std::string where;
    for (size_t i = 0; i < domains.size(); ++i) {
      long long v = domains[i][idx[i]];
      point[pre.inputSkolems[i]] = v;
      env[(*inputs)[i].var] = v;
      where += (i ? ", " : "") + pre.inputNames[i] + "=" + std::to_string(v);
    }
    long long y = evalWithInputs.term(p.body, env);
    env[output.var] = y;
    ++report.pointsChecked;
    if (!evalWithInputs.formula(body, env)) {
      report.detail = "specification fails at " + (where.empty() ? "the empty input" : where) +
                      " with output " + std::to_string(y);
      return report;
    }

    size_t k = 0;
    while (k < idx.size() && ++idx[k] == domains[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size())
      break;
  }
  report.pass = true;
  report.detail = "verified on " + std::to_string(report.pointsChecked) + " input point(s)";
  return report;
}

} // namespace synthsat
