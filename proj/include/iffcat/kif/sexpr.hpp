#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "iffcat/graph.hpp" // for iffcat::Error

namespace iffcat::kif {

struct SyntaxError : Error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : Error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
          line(line_), column(column_) {}
};

/// Atom or (possibly bracketed) list, with source position for diagnostics.
struct SExpr {
    enum class Kind { Atom, List, Tuple };
    Kind kind = Kind::Atom;
    std::string text;            // atoms only
    std::vector<SExpr> children; // lists and bracket tuples
    int line = 0;
    int column = 0;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_list() const { return kind == Kind::List; }
    bool is_tuple() const { return kind == Kind::Tuple; }

    bool is_variable() const { return is_atom() && !text.empty() && text[0] == '?'; }
    bool is_namespaced() const { return is_atom() && text.find('$') != std::string::npos; }
    bool is_qualified_instance() const { return is_atom() && text.find('#') != std::string::npos; }

    bool operator==(const SExpr& other) const {
        if (kind != other.kind) return false;
        if (is_atom()) return text == other.text;
        return children == other.children;
    }
};

namespace detail {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }
    void skip_trivia() {
        while (!done()) {
            char c = peek();
            if (c == ';') {
                while (!done() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }
};

inline bool is_delim(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == ';' || c == ' ' || c == '\t' ||
           c == '\r' || c == '\n';
}

inline SExpr parse_one(Cursor& cur) {
    cur.skip_trivia();
    if (cur.done()) throw SyntaxError("unexpected end of input", cur.line, cur.column);
    SExpr node;
    node.line = cur.line;
    node.column = cur.column;
    char c = cur.peek();
    if (c == '(' || c == '[') {
        char close = (c == '(') ? ')' : ']';
        node.kind = (c == '(') ? SExpr::Kind::List : SExpr::Kind::Tuple;
        cur.advance();
        for (;;) {
            cur.skip_trivia();
            if (cur.done())
                throw SyntaxError("unbalanced delimiter opened", node.line, node.column);
            if (cur.peek() == close) {
                cur.advance();
                return node;
            }
            if (cur.peek() == ')' || cur.peek() == ']')
                throw SyntaxError(std::string("mismatched '") + cur.peek() + "'", cur.line,
                                  cur.column);
            node.children.push_back(parse_one(cur));
        }
    }
    if (c == ')' || c == ']')
        throw SyntaxError(std::string("stray '") + c + "'", cur.line, cur.column);
    node.kind = SExpr::Kind::Atom;
    while (!cur.done() && !is_delim(cur.peek())) node.text += cur.advance();
    return node;
}

} // namespace detail

/// Parse zero or more top-level forms.
inline std::vector<SExpr> parse(const std::string& text) {
    detail::Cursor cur{text};
    std::vector<SExpr> out;
    for (;;) {
        cur.skip_trivia();
        if (cur.done()) return out;
        out.push_back(detail::parse_one(cur));
    }
}

inline void print_to(std::ostream& os, const SExpr& e) {
    switch (e.kind) {
        case SExpr::Kind::Atom:
            os << e.text;
            break;
        case SExpr::Kind::List:
        case SExpr::Kind::Tuple: {
            os << (e.is_tuple() ? '[' : '(');
            for (size_t i = 0; i < e.children.size(); ++i) {
                if (i) os << ' ';
                print_to(os, e.children[i]);
            }
            os << (e.is_tuple() ? ']' : ')');
            break;
        }
    }
}

inline std::string print(const SExpr& e) {
    std::ostringstream os;
    print_to(os, e);
    return os.str();
}

} // namespace iffcat::kif
