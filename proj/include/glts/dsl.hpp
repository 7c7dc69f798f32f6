#pragma once

// Bracket-identity language.
//
//   identity := expr "=" expr
//   expr     := term { ("+" | "-") term }
//   term     := coeff "*" factor | "-" factor | factor | "0"
//   factor   := var | "[" expr "," expr "]" | "[" expr "," expr "," expr "]"
//   coeff    := ["-"] integer [ "/" integer ]
//   var      := lowercase letter { letter | digit }
//
// Two-argument brackets are the algebra product, three-argument brackets the
// derived ternary bracket. Variables are universally quantified.

#include "glts/algebra.hpp"
#include "glts/checker.hpp"
#include "glts/errors.hpp"
#include "glts/linalg.hpp"
#include "glts/report.hpp"
#include "glts/scalar.hpp"
#include "glts/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <type_traits>
#include <variant>
#include <vector>

namespace glts::dsl {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {},
               std::string found = {})
        : std::runtime_error(render(line, column, message, expected, found)),
          line_(line),
          column_(column),
          message_(std::move(message)),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }
    [[nodiscard]] const std::vector<std::string>& expected() const { return expected_; }
    [[nodiscard]] const std::string& found() const { return found_; }

    [[nodiscard]] ParseError at_line(std::size_t line) const {
        return ParseError(line, column_, message_, expected_, found_);
    }

private:
    static std::string render(std::size_t line, std::size_t column, const std::string& message,
                              const std::vector<std::string>& expected, const std::string& found) {
        std::string out = std::to_string(line) + ":" + std::to_string(column) + ": ";
        if (!expected.empty()) {
            out += "expected ";
            for (std::size_t k = 0; k < expected.size(); ++k) {
                if (k) out += k + 1 == expected.size() ? " or " : ", ";
                out += expected[k];
            }
            out += " but found " + found;
            if (!message.empty()) out += " (" + message + ")";
        } else {
            out += message;
        }
        return out;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
    std::vector<std::string> expected_;
    std::string found_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct VarRef {
    std::string name;
    std::size_t index = 0;
};
struct ZeroLit {};
struct Scaled {
    Scalar coeff;
    ExprPtr child;
};
struct SumTerm {
    bool negated = false;
    ExprPtr expr;
};
struct Sum {
    std::vector<SumTerm> terms;
};
/// Two children: binary bracket. Three: ternary bracket.
struct Bracket {
    std::vector<ExprPtr> args;
};

struct Expr {
    std::variant<VarRef, ZeroLit, Scaled, Sum, Bracket> node;
};

bool operator==(const Expr& a, const Expr& b);

inline bool same(const ExprPtr& a, const ExprPtr& b) { return (a && b) ? *a == *b : a == b; }

inline bool operator==(const VarRef& a, const VarRef& b) { return a.name == b.name && a.index == b.index; }
inline bool operator==(const ZeroLit&, const ZeroLit&) { return true; }
inline bool operator==(const Scaled& a, const Scaled& b) { return a.coeff == b.coeff && same(a.child, b.child); }
inline bool operator==(const SumTerm& a, const SumTerm& b) { return a.negated == b.negated && same(a.expr, b.expr); }
inline bool operator==(const Sum& a, const Sum& b) { return a.terms == b.terms; }
inline bool operator==(const Bracket& a, const Bracket& b) {
    return std::equal(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(), same);
}
inline bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }

struct IdentityAst {
    /// In order of first appearance, left side first.
    std::vector<std::string> variables;
    std::vector<VariableDomain> domains;
    ExprPtr lhs;
    ExprPtr rhs;

    [[nodiscard]] std::vector<int> multiplicities() const {
        std::vector<int> out;
        for (const auto& d : domains) out.push_back(d.multiplicity);
        return out;
    }

    friend bool operator==(const IdentityAst& a, const IdentityAst& b) {
        return a.variables == b.variables && a.domains == b.domains && same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
    }
};

namespace detail {

enum class Tok { Ident, Integer, LBracket, RBracket, Comma, Plus, Minus, Star, Slash, Equals, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::string describe(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "variable";
        case Tok::Integer: return "integer";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Equals: return "'='";
        case Tok::End: return "end of input";
    }
    return "?";
}

inline std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::Ident: return "variable '" + t.text + "'";
        case Tok::Integer: return "integer " + t.text;
        default: return describe(t.kind);
    }
}

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto single = [](char c) -> std::optional<Tok> {
        switch (c) {
            case '[': return Tok::LBracket;
            case ']': return Tok::RBracket;
            case ',': return Tok::Comma;
            case '+': return Tok::Plus;
            case '-': return Tok::Minus;
            case '*': return Tok::Star;
            case '/': return Tok::Slash;
            case '=': return Tok::Equals;
            default: return std::nullopt;
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        std::size_t len = 1;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i + len < text.size() && std::isalnum(static_cast<unsigned char>(text[i + len]))) ++len;
            tok.kind = Tok::Ident;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i + len < text.size() && std::isdigit(static_cast<unsigned char>(text[i + len]))) ++len;
            tok.kind = Tok::Integer;
        } else if (auto k = single(c)) {
            tok.kind = *k;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        tok.text = std::string(text.substr(i, len));
        out.push_back(std::move(tok));
        i += len;
        col += len;
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    IdentityAst parse_identity() {
        IdentityAst ast;
        ast.lhs = parse_expr();
        expect(Tok::Equals, {Tok::Plus, Tok::Minus, Tok::Equals});
        ast.rhs = parse_expr();
        expect(Tok::End, {Tok::Plus, Tok::Minus, Tok::End});
        ast.variables = variables_;
        return ast;
    }

private:
    static constexpr int kMaxDepth = 200;

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

    [[noreturn]] void fail(std::vector<Tok> expected, std::string note = {}) const {
        std::vector<std::string> names;
        for (Tok t : expected) names.push_back(describe(t));
        throw ParseError(peek().line, peek().column, std::move(note), std::move(names), describe(peek()));
    }

    void expect(Tok kind, std::vector<Tok> expected) {
        if (peek().kind != kind) fail(std::move(expected));
        advance();
    }

    ExprPtr parse_expr() {
        if (++depth_ > kMaxDepth) throw ParseError(peek().line, peek().column, "expression nested too deeply");
        Sum sum;
        sum.terms.push_back({false, parse_term()});
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool negated = advance().kind == Tok::Minus;
            sum.terms.push_back({negated, parse_term()});
        }
        --depth_;
        if (sum.terms.size() == 1) return sum.terms.front().expr;
        return std::make_shared<const Expr>(Expr{std::move(sum)});
    }

    ExprPtr parse_term() {
        const bool signed_coeff = peek().kind == Tok::Minus && peek(1).kind == Tok::Integer;
        if (peek().kind == Tok::Integer || signed_coeff) {
            const Token& start = peek();
            Scalar coeff = parse_coeff();
            if (peek().kind == Tok::Star) {
                advance();
                return std::make_shared<const Expr>(Expr{Scaled{std::move(coeff), parse_factor()}});
            }
            if (!coeff.is_zero()) {
                fail({Tok::Star}, "a bare coefficient must be 0, at " + std::to_string(start.line) + ":" +
                                      std::to_string(start.column));
            }
            return std::make_shared<const Expr>(Expr{ZeroLit{}});
        }
        if (peek().kind == Tok::Minus) {
            advance();
            return std::make_shared<const Expr>(Expr{Scaled{Scalar(-1), parse_factor()}});
        }
        if (peek().kind != Tok::Ident && peek().kind != Tok::LBracket) {
            fail({Tok::Ident, Tok::Integer, Tok::Minus, Tok::LBracket});
        }
        return parse_factor();
    }

    Scalar parse_coeff() {
        std::string text;
        if (peek().kind == Tok::Minus) {
            advance();
            text = "-";
        }
        text += advance().text;
        if (peek().kind == Tok::Slash) {
            advance();
            const Token& den = peek();
            if (den.kind != Tok::Integer) fail({Tok::Integer});
            advance();
            if (den.text.find_first_not_of('0') == std::string::npos) {
                throw ParseError(den.line, den.column, "zero denominator in coefficient");
            }
            text += "/" + den.text;
        }
        return *Scalar::parse(text);
    }

    ExprPtr parse_factor() {
        const Token& tok = peek();
        if (tok.kind == Tok::Ident) {
            if (!std::islower(static_cast<unsigned char>(tok.text.front()))) {
                throw ParseError(tok.line, tok.column,
                                 "variable '" + tok.text + "' must start with a lowercase letter");
            }
            advance();
            return std::make_shared<const Expr>(Expr{VarRef{tok.text, intern(tok.text)}});
        }
        if (tok.kind != Tok::LBracket) fail({Tok::Ident, Tok::LBracket});
        const std::size_t open_line = tok.line;
        const std::size_t open_col = tok.column;
        advance();
        Bracket b;
        b.args.push_back(parse_expr());
        while (peek().kind == Tok::Comma) {
            advance();
            b.args.push_back(parse_expr());
        }
        expect(Tok::RBracket, {Tok::Plus, Tok::Minus, Tok::Comma, Tok::RBracket});
        if (b.args.size() != 2 && b.args.size() != 3) {
            throw ParseError(open_line, open_col,
                             "bracket with " + std::to_string(b.args.size()) +
                                 " argument(s); only binary and ternary brackets exist");
        }
        return std::make_shared<const Expr>(Expr{std::move(b)});
    }

    std::size_t intern(const std::string& name) {
        const auto it = std::find(variables_.begin(), variables_.end(), name);
        if (it != variables_.end()) return static_cast<std::size_t>(it - variables_.begin());
        variables_.push_back(name);
        return variables_.size() - 1;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    std::vector<std::string> variables_;
};

// Per-variable (min, max) degree over the additive terms of an expression;
// nullopt for expressions that are identically zero by syntax.
using Degrees = std::optional<std::vector<std::pair<int, int>>>;

inline Degrees merge_terms(Degrees a, const Degrees& b) {
    if (!a) return b;
    if (!b) return a;
    for (std::size_t v = 0; v < a->size(); ++v) {
        (*a)[v].first = std::min((*a)[v].first, (*b)[v].first);
        (*a)[v].second = std::max((*a)[v].second, (*b)[v].second);
    }
    return a;
}

inline Degrees degrees(const Expr& e, std::size_t nvars) {
    return std::visit(
        [&](const auto& n) -> Degrees {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, VarRef>) {
                std::vector<std::pair<int, int>> d(nvars, {0, 0});
                d[n.index] = {1, 1};
                return d;
            } else if constexpr (std::is_same_v<N, ZeroLit>) {
                return std::nullopt;
            } else if constexpr (std::is_same_v<N, Scaled>) {
                return degrees(*n.child, nvars);
            } else if constexpr (std::is_same_v<N, Sum>) {
                Degrees acc;
                for (const auto& t : n.terms) acc = merge_terms(std::move(acc), degrees(*t.expr, nvars));
                return acc;
            } else {
                std::vector<std::pair<int, int>> d(nvars, {0, 0});
                for (const auto& arg : n.args) {
                    const auto sub = degrees(*arg, nvars);
                    if (!sub) return std::nullopt;
                    for (std::size_t v = 0; v < nvars; ++v) {
                        d[v].first += (*sub)[v].first;
                        d[v].second += (*sub)[v].second;
                    }
                }
                return d;
            }
        },
        e.node);
}

}  // namespace detail

/// Infers each variable's substitution domain from the parsed sides.
inline std::vector<VariableDomain> infer_domains(const IdentityAst& ast) {
    const std::size_t n = ast.variables.size();
    const auto deg = detail::merge_terms(detail::degrees(*ast.lhs, n), detail::degrees(*ast.rhs, n));
    std::vector<VariableDomain> out(n, VariableDomain{1, true});
    if (!deg) return out;
    for (std::size_t v = 0; v < n; ++v) {
        const auto [lo, hi] = (*deg)[v];
        if (hi == 0) continue;  // only occurs inside syntactically zero terms
        out[v] = VariableDomain{hi, lo == hi};
    }
    return out;
}

inline IdentityAst parse_identity(std::string_view text) {
    detail::Parser parser(text);
    IdentityAst ast = parser.parse_identity();
    ast.domains = infer_domains(ast);
    return ast;
}

struct FileIdentity {
    std::size_t line = 0;
    IdentityAst ast;
};

/// One identity per line; '#' starts a comment, blank lines are skipped.
/// Parse errors carry the line number within the file.
inline std::vector<FileIdentity> parse_identity_file(std::string_view text) {
    std::vector<FileIdentity> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        try {
            out.push_back({line_no, parse_identity(line)});
        } catch (const ParseError& e) {
            throw e.at_line(line_no);
        }
    }
    return out;
}

inline std::string to_string(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, VarRef>) {
                return n.name;
            } else if constexpr (std::is_same_v<N, ZeroLit>) {
                return "0";
            } else if constexpr (std::is_same_v<N, Scaled>) {
                return n.coeff.str() + "*" + to_string(*n.child);
            } else if constexpr (std::is_same_v<N, Sum>) {
                std::string out;
                for (std::size_t k = 0; k < n.terms.size(); ++k) {
                    if (k) out += n.terms[k].negated ? " - " : " + ";
                    out += to_string(*n.terms[k].expr);
                }
                return out;
            } else {
                std::string out = "[";
                for (std::size_t k = 0; k < n.args.size(); ++k) {
                    if (k) out += ",";
                    out += to_string(*n.args[k]);
                }
                return out + "]";
            }
        },
        e.node);
}

inline std::string to_string(const IdentityAst& ast) { return to_string(*ast.lhs) + " = " + to_string(*ast.rhs); }

/// Evaluates with values[k] bound to variable k.
inline Vector eval(const Algebra& a, const Expr& e, std::span<const Vector> values) {
    return std::visit(
        [&](const auto& n) -> Vector {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, VarRef>) {
                if (n.index >= values.size()) throw ContractViolation("no value for variable '" + n.name + "'");
                return values[n.index];
            } else if constexpr (std::is_same_v<N, ZeroLit>) {
                return Vector::zero(a.dim());
            } else if constexpr (std::is_same_v<N, Scaled>) {
                return n.coeff * eval(a, *n.child, values);
            } else if constexpr (std::is_same_v<N, Sum>) {
                Vector acc = Vector::zero(a.dim());
                for (const auto& t : n.terms) {
                    if (t.negated) {
                        acc -= eval(a, *t.expr, values);
                    } else {
                        acc += eval(a, *t.expr, values);
                    }
                }
                return acc;
            } else {
                if (n.args.size() == 2) return a.bracket(eval(a, *n.args[0], values), eval(a, *n.args[1], values));
                return yamaguti(a, eval(a, *n.args[0], values), eval(a, *n.args[1], values),
                                eval(a, *n.args[2], values));
            }
        },
        e.node);
}

/// Both sides of `ast` under a named assignment.
inline std::pair<Vector, Vector> eval_ast(const Algebra& a, const IdentityAst& ast,
                                          const std::map<std::string, Vector>& assignment) {
    std::vector<Vector> values;
    for (const auto& name : ast.variables) {
        const auto it = assignment.find(name);
        if (it == assignment.end()) throw ContractViolation("eval_ast: missing value for variable '" + name + "'");
        if (it->second.dim() != a.dim()) {
            throw ContractViolation("eval_ast: variable '" + name + "' has dimension " +
                                    std::to_string(it->second.dim()) + ", algebra '" + a.name() +
                                    "' has dimension " + std::to_string(a.dim()));
        }
        values.push_back(it->second);
    }
    return {eval(a, *ast.lhs, values), eval(a, *ast.rhs, values)};
}

/// Checks a parsed identity the same way builtin identities are checked.
/// The report is labelled with `label`, or with the printed identity.
inline CheckReport check_identity(const Algebra& a, const IdentityAst& ast, const CheckOptions& options = {},
                                  std::optional<std::string> label = std::nullopt) {
    const Evaluator evaluator = [&ast](const Algebra& alg, std::span<const Vector> values) {
        return std::pair<Value, Value>{eval(alg, *ast.lhs, values), eval(alg, *ast.rhs, values)};
    };
    return run_check(a, label ? std::move(*label) : to_string(ast), ast.variables, ast.domains, evaluator, options);
}

}  // namespace glts::dsl
