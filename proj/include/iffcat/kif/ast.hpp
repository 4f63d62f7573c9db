#pragma once

#include <memory>
#include <set>

#include "iffcat/kif/sexpr.hpp"

namespace iffcat::kif {

struct AnalysisError : Error {
    using Error::Error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// A quantified variable, optionally restricted by a sort guard formula
/// (normally a class application to the variable itself).
struct Binder {
    std::string var;
    ExprPtr guard; // may be null
};

/// Analyzed sentence/term tree for the KIF dialect accepted here.
struct Expr {
    enum class Kind {
        BoolLit,
        Name,  // symbol or plain ground constant; resolved at evaluation time
        Var,
        Tuple,
        Apply, // args[0] is the callee
        Eq,
        Not,
        And,
        Or,
        Implies,
        Iff,
        Forall,
        Exists,
        ExistsUnique,
        The
    };
    Kind kind = Kind::Name;
    bool boolean = false;
    std::string name;
    std::vector<ExprPtr> args;
    std::vector<Binder> binders;
    ExprPtr body;
};

namespace detail {

inline ExprPtr analyze_impl(const SExpr& form, std::set<std::string>& bound);

inline std::vector<Binder> analyze_binding_list(const SExpr& list, std::set<std::string>& bound,
                                                std::vector<std::string>& introduced) {
    if (!list.is_list()) throw AnalysisError("malformed binding list");
    std::vector<Binder> binders;
    for (const SExpr& item : list.children) {
        if (item.is_atom()) {
            if (!item.is_variable())
                throw AnalysisError("expected variable in binding list, got '" + item.text + "'");
            binders.push_back({item.text, nullptr});
            if (bound.insert(item.text).second) introduced.push_back(item.text);
        } else if (item.is_list() && !item.children.empty() && item.children[0].is_variable()) {
            // nested form (?v guard)
            if (item.children.size() != 2)
                throw AnalysisError("malformed nested binder for '" + item.children[0].text + "'");
            const std::string& v = item.children[0].text;
            if (bound.insert(v).second) introduced.push_back(v);
            binders.push_back({v, analyze_impl(item.children[1], bound)});
        } else if (item.is_list()) {
            // flat style: guard following its variable as a separate item
            if (binders.empty() || binders.back().guard)
                throw AnalysisError("guard with no preceding variable in binding list");
            binders.back().guard = analyze_impl(item, bound);
        } else {
            throw AnalysisError("malformed binding list item");
        }
    }
    return binders;
}

inline ExprPtr mk(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

inline ExprPtr analyze_body(const std::vector<SExpr>& forms, size_t from,
                            std::set<std::string>& bound) {
    if (from >= forms.size()) throw AnalysisError("quantifier without a body");
    if (forms.size() - from == 1) return analyze_impl(forms[from], bound);
    // several body forms are an implicit conjunction
    Expr e;
    e.kind = Expr::Kind::And;
    for (size_t i = from; i < forms.size(); ++i) e.args.push_back(analyze_impl(forms[i], bound));
    return mk(std::move(e));
}

inline ExprPtr analyze_quantifier(Expr::Kind kind, const SExpr& form,
                                  std::set<std::string>& bound) {
    if (form.children.size() < 3) throw AnalysisError("quantifier needs binders and a body");
    Expr e;
    e.kind = kind;
    std::vector<std::string> introduced;
    e.binders = analyze_binding_list(form.children[1], bound, introduced);
    e.body = analyze_body(form.children, 2, bound);
    for (const auto& v : introduced) bound.erase(v);
    return mk(std::move(e));
}

inline ExprPtr analyze_impl(const SExpr& form, std::set<std::string>& bound) {
    if (form.is_atom()) {
        Expr e;
        if (form.is_variable()) {
            if (!bound.count(form.text))
                throw AnalysisError("unbound variable '" + form.text + "'");
            e.kind = Expr::Kind::Var;
            e.name = form.text;
        } else if (form.text == "true" || form.text == "false") {
            e.kind = Expr::Kind::BoolLit;
            e.boolean = form.text == "true";
        } else {
            e.kind = Expr::Kind::Name;
            e.name = form.text;
        }
        return mk(std::move(e));
    }
    if (form.is_tuple()) {
        Expr e;
        e.kind = Expr::Kind::Tuple;
        for (const SExpr& c : form.children) e.args.push_back(analyze_impl(c, bound));
        return mk(std::move(e));
    }
    if (form.children.empty()) throw AnalysisError("empty form");

    const SExpr& head = form.children[0];
    if (head.is_atom()) {
        const std::string& op = head.text;
        auto nary = [&](Expr::Kind kind, size_t min_args) {
            if (form.children.size() - 1 < min_args)
                throw AnalysisError("'" + op + "' needs at least " + std::to_string(min_args) +
                                    " argument(s)");
            Expr e;
            e.kind = kind;
            for (size_t i = 1; i < form.children.size(); ++i)
                e.args.push_back(analyze_impl(form.children[i], bound));
            return mk(std::move(e));
        };
        auto binary = [&](Expr::Kind kind) {
            if (form.children.size() != 3)
                throw AnalysisError("'" + op + "' takes exactly two arguments");
            return nary(kind, 2);
        };
        if (op == "forall") return analyze_quantifier(Expr::Kind::Forall, form, bound);
        if (op == "exists") return analyze_quantifier(Expr::Kind::Exists, form, bound);
        if (op == "exists-unique")
            return analyze_quantifier(Expr::Kind::ExistsUnique, form, bound);
        if (op == "the") return analyze_quantifier(Expr::Kind::The, form, bound);
        if (op == "=") return binary(Expr::Kind::Eq);
        if (op == "<=>") return binary(Expr::Kind::Iff);
        if (op == "=>") return binary(Expr::Kind::Implies);
        if (op == "not") {
            if (form.children.size() != 2) throw AnalysisError("'not' takes one argument");
            return nary(Expr::Kind::Not, 1);
        }
        if (op == "and") return nary(Expr::Kind::And, 1);
        if (op == "or") return nary(Expr::Kind::Or, 1);
    }

    Expr e;
    e.kind = Expr::Kind::Apply;
    for (const SExpr& c : form.children) e.args.push_back(analyze_impl(c, bound));
    return mk(std::move(e));
}

} // namespace detail

/// Vocabulary declarations are metadata, never evaluated as truth claims.
inline bool is_declaration(const SExpr& form) {
    if (!form.is_list() || form.children.empty() || !form.children[0].is_atom()) return false;
    const std::string& head = form.children[0].text;
    return head == "KIF$function" || head == "KIF$signature" || head == "KIF$class" ||
           head == "SET$conglomerate";
}

/// Turn a well-formed s-expression into a closed sentence (or term) tree.
inline ExprPtr analyze(const SExpr& form) {
    std::set<std::string> bound;
    return detail::analyze_impl(form, bound);
}

} // namespace iffcat::kif
