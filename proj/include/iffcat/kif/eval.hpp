#pragma once

#include "iffcat/kif/ast.hpp"
#include "iffcat/kif/value.hpp"

namespace iffcat::kif {

struct EvalError : Error {
    std::string category; // UnknownSymbol, ArityMismatch, DescriptionFailure, ...
    EvalError(std::string cat, const std::string& msg)
        : Error(cat + ": " + msg), category(std::move(cat)) {}
};

/// A finite interpretation: named semantic values plus a ground universe
/// used for quantifiers whose sort cannot be read off their guard.
struct KifModel {
    std::map<std::string, Value> symbols;
    std::vector<Value> universe; // sorted unique

    void add_to_universe(Value v) { universe.push_back(std::move(v)); }
    void finalize_universe() {
        std::sort(universe.begin(), universe.end());
        universe.erase(std::unique(universe.begin(), universe.end(),
                                   [](const Value& a, const Value& b) { return a == b; }),
                       universe.end());
    }
};

/// Sorted first-order evaluation over finite domains. Connectives are
/// evaluated left to right with short-circuiting, so sort guards written as
/// leading conjuncts protect later partial-function applications.
class Evaluator {
  public:
    explicit Evaluator(const KifModel& model) : model_(model) {}

    bool eval_sentence(const ExprPtr& e) {
        witness_.clear();
        env_.clear();
        return as_bool(eval(*e));
    }

    /// First falsifying assignment found under an outermost forall, if any.
    const std::string& witness() const { return witness_; }

  private:
    const KifModel& model_;
    std::vector<std::pair<std::string, Value>> env_;
    std::string witness_;

    static bool as_bool(const Value& v) {
        if (!v.is_bool()) throw EvalError("TypeMismatch", "expected a truth value");
        return v.boolean;
    }

    const Value* lookup_var(const std::string& name) const {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it)
            if (it->first == name) return &it->second;
        return nullptr;
    }

    std::string env_string() const {
        std::string out;
        for (const auto& [var, val] : env_) {
            if (!out.empty()) out += ", ";
            out += var + "=" + to_string(val);
        }
        return out;
    }

    Value eval(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::BoolLit:
                return mk_bool(e.boolean);
            case Expr::Kind::Var: {
                const Value* v = lookup_var(e.name);
                if (!v) throw EvalError("UnboundVariable", e.name);
                return *v;
            }
            case Expr::Kind::Name: {
                auto it = model_.symbols.find(e.name);
                if (it != model_.symbols.end()) return it->second;
                if (e.name.find('$') != std::string::npos)
                    throw EvalError("UnknownSymbol", e.name);
                return mk_atom(e.name); // plain names denote themselves
            }
            case Expr::Kind::Tuple: {
                std::vector<Value> items;
                for (const auto& a : e.args) items.push_back(eval(*a));
                return mk_tuple(std::move(items));
            }
            case Expr::Kind::Apply:
                return eval_apply(e);
            case Expr::Kind::Eq:
                return mk_bool(eval(*e.args[0]) == eval(*e.args[1]));
            case Expr::Kind::Not:
                return mk_bool(!as_bool(eval(*e.args[0])));
            case Expr::Kind::And: {
                for (const auto& a : e.args)
                    if (!as_bool(eval(*a))) return mk_bool(false);
                return mk_bool(true);
            }
            case Expr::Kind::Or: {
                for (const auto& a : e.args)
                    if (as_bool(eval(*a))) return mk_bool(true);
                return mk_bool(false);
            }
            case Expr::Kind::Implies: {
                if (!as_bool(eval(*e.args[0]))) return mk_bool(true);
                return mk_bool(as_bool(eval(*e.args[1])));
            }
            case Expr::Kind::Iff:
                return mk_bool(as_bool(eval(*e.args[0])) == as_bool(eval(*e.args[1])));
            case Expr::Kind::Forall:
                return mk_bool(eval_forall(e, 0));
            case Expr::Kind::Exists:
                return mk_bool(eval_exists(e, 0));
            case Expr::Kind::ExistsUnique: {
                size_t count = 0;
                count_satisfiers(e, 0, count, 2);
                return mk_bool(count == 1);
            }
            case Expr::Kind::The:
                return eval_the(e);
        }
        throw EvalError("Internal", "unhandled expression kind");
    }

    /// Resolve an expression to a pointer into stable storage (the model's
    /// symbol table or the environment), avoiding deep copies of class and
    /// function values on the hot application path. Returns nullptr when the
    /// value is not addressable that way; callers fall back to eval().
    const Value* resolve_ptr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::Name: {
                auto it = model_.symbols.find(e.name);
                return it != model_.symbols.end() ? &it->second : nullptr;
            }
            case Expr::Kind::Var:
                return lookup_var(e.name);
            case Expr::Kind::Apply: {
                const Value* callee = resolve_ptr(*e.args[0]);
                if (!callee || !callee->is_func()) return nullptr;
                std::vector<Value> args;
                for (size_t i = 1; i < e.args.size(); ++i) args.push_back(eval(*e.args[i]));
                if (args.empty())
                    throw EvalError("ArityMismatch", "function application needs arguments");
                Value key = args.size() == 1 ? std::move(args[0]) : mk_tuple(std::move(args));
                const Value* v = func_lookup(*callee, key);
                if (!v)
                    throw EvalError("UndefinedApplication",
                                    "function undefined at " + to_string(key));
                return v;
            }
            default:
                return nullptr;
        }
    }

    // builtin subclass predicates
    Value eval_apply(const Expr& e) {
        const Expr& head = *e.args[0];
        if (head.kind == Expr::Kind::Name &&
            (head.name == "SET$subclass" || head.name == "KIF$subclass" ||
             head.name == "IFF$subclass")) {
            if (e.args.size() != 3) throw EvalError("ArityMismatch", head.name);
            Value a = eval(*e.args[1]);
            Value b = eval(*e.args[2]);
            if (!a.is_class() || !b.is_class())
                throw EvalError("TypeMismatch", head.name + " expects two classes");
            for (const Value& m : a.items)
                if (!class_contains(b, m)) return mk_bool(false);
            return mk_bool(true);
        }

        Value owned;
        const Value* callee = resolve_ptr(head);
        if (!callee) {
            owned = eval(head);
            callee = &owned;
        }
        std::vector<Value> args;
        for (size_t i = 1; i < e.args.size(); ++i) args.push_back(eval(*e.args[i]));
        if (callee->is_class()) {
            if (args.size() != 1)
                throw EvalError("ArityMismatch", "class application takes one argument");
            return mk_bool(class_contains(*callee, args[0]));
        }
        if (callee->is_func()) {
            if (args.empty()) throw EvalError("ArityMismatch", "function application needs arguments");
            Value key = args.size() == 1 ? args[0] : mk_tuple(std::move(args));
            const Value* v = func_lookup(*callee, key);
            if (!v)
                throw EvalError("UndefinedApplication",
                                "function undefined at " + to_string(key));
            return *v;
        }
        throw EvalError("TypeMismatch", "value is not applicable");
    }

    /// The extent a binder ranges over in the current environment. A guard
    /// that is literally a class application to the bound variable gives the
    /// sort directly; otherwise the universe is filtered by the guard.
    /// Either a borrowed pointer into stable model storage or an owned list.
    const std::vector<Value>* extent(const Binder& b, std::vector<Value>& owned) {
        if (b.guard) {
            const Expr& g = *b.guard;
            if (g.kind == Expr::Kind::Apply && g.args.size() == 2 &&
                g.args[1]->kind == Expr::Kind::Var && g.args[1]->name == b.var) {
                if (const Value* sort = resolve_ptr(*g.args[0])) {
                    if (!sort->is_class())
                        throw EvalError("NonFiniteSort",
                                        "sort of " + b.var + " is not a finite class");
                    return &sort->items;
                }
                Value s = eval(*g.args[0]);
                if (!s.is_class())
                    throw EvalError("NonFiniteSort",
                                    "sort of " + b.var + " is not a finite class");
                owned = std::move(s.items);
                return &owned;
            }
            owned.clear();
            for (const Value& v : model_.universe) {
                env_.emplace_back(b.var, v);
                bool keep = as_bool(eval(g));
                env_.pop_back();
                if (keep) owned.push_back(v);
            }
            return &owned;
        }
        return &model_.universe;
    }

    bool eval_forall(const Expr& e, size_t i) {
        if (i == e.binders.size()) {
            bool ok = as_bool(eval(*e.body));
            if (!ok && witness_.empty()) witness_ = env_string();
            return ok;
        }
        std::vector<Value> owned;
        const std::vector<Value>* dom = extent(e.binders[i], owned);
        for (const Value& v : *dom) {
            env_.emplace_back(e.binders[i].var, v);
            bool ok = eval_forall(e, i + 1);
            env_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    bool eval_exists(const Expr& e, size_t i) {
        if (i == e.binders.size()) return as_bool(eval(*e.body));
        std::vector<Value> owned;
        const std::vector<Value>* dom = extent(e.binders[i], owned);
        for (const Value& v : *dom) {
            env_.emplace_back(e.binders[i].var, v);
            bool ok = eval_exists(e, i + 1);
            env_.pop_back();
            if (ok) return true;
        }
        return false;
    }

    void count_satisfiers(const Expr& e, size_t i, size_t& count, size_t cap) {
        if (count >= cap) return;
        if (i == e.binders.size()) {
            if (as_bool(eval(*e.body))) ++count;
            return;
        }
        std::vector<Value> owned;
        const std::vector<Value>* dom = extent(e.binders[i], owned);
        for (const Value& v : *dom) {
            env_.emplace_back(e.binders[i].var, v);
            count_satisfiers(e, i + 1, count, cap);
            env_.pop_back();
            if (count >= cap) return;
        }
    }

    Value eval_the(const Expr& e) {
        if (e.binders.size() != 1)
            throw EvalError("DescriptionFailure", "'the' takes exactly one binder");
        std::vector<Value> hits;
        std::vector<Value> owned;
        const std::vector<Value>* dom = extent(e.binders[0], owned);
        for (const Value& v : *dom) {
            env_.emplace_back(e.binders[0].var, v);
            bool ok = as_bool(eval(*e.body));
            env_.pop_back();
            if (ok) {
                hits.push_back(v);
                if (hits.size() > 1) break;
            }
        }
        if (hits.size() != 1)
            throw EvalError("DescriptionFailure",
                            hits.empty() ? "no satisfier" : "multiple satisfiers");
        return hits.front();
    }
};

/// Evaluate a closed sentence; errors are reported via EvalError.
inline bool evaluate(const KifModel& model, const ExprPtr& sentence) {
    Evaluator ev(model);
    return ev.eval_sentence(sentence);
}

} // namespace iffcat::kif
