#include "tinv/program.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "tinv/error.hpp"

namespace tinv {
namespace {

using program::Comparison;
using program::Expr;
using program::ExprPtr;
using program::Guard;

struct Token {
    enum class Kind { Ident, Number, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    bool primed = false;
};

class Lexer {
public:
    Lexer(std::string_view line, int line_no) : line_no_(line_no) { tokenize(line); }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool accept(std::string_view sym) {
        const Token& t = peek();
        if ((t.kind == Token::Kind::Sym || t.kind == Token::Kind::Ident) && t.text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(std::string_view sym) {
        if (!accept(sym)) error("expected '" + std::string(sym) + "'");
    }
    [[noreturn]] void error(const std::string& what) const {
        std::string near = at_end() ? "end of line" : "'" + peek().text + "'";
        fail(ErrorKind::ParseError, "line " + std::to_string(line_no_) + ": " + what + " near " + near);
    }

private:
    void tokenize(std::string_view s) {
        std::size_t i = 0;
        while (i < s.size()) {
            char c = s[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                Token t{Token::Kind::Ident, std::string(s.substr(i, j - i)), false};
                if (j < s.size() && s[j] == '\'') {
                    t.primed = true;
                    ++j;
                }
                tokens_.push_back(std::move(t));
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                tokens_.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), false});
                i = j;
            } else {
                static const char* two[] = {"<=", ">=", "==", "!=", ":=", "->", "&&"};
                bool matched = false;
                for (const char* op : two) {
                    if (s.substr(i, 2) == op) {
                        tokens_.push_back({Token::Kind::Sym, op, false});
                        i += 2;
                        matched = true;
                        break;
                    }
                }
                if (matched) continue;
                if (std::string_view("+-*^()<>=,").find(c) == std::string_view::npos) {
                    fail(ErrorKind::ParseError, "line " + std::to_string(line_no_) +
                                                    ": unexpected character '" + std::string(1, c) + "'");
                }
                tokens_.push_back({Token::Kind::Sym, std::string(1, c), false});
                ++i;
            }
        }
        tokens_.push_back({Token::Kind::End, "", false});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_no_;
};

class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names, bool growable)
        : names_(std::move(names)), growable_(growable) {}

    std::size_t lookup(const std::string& name, const Lexer& lex) {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it != names_.end()) return static_cast<std::size_t>(it - names_.begin());
        if (!growable_) lex.error("unknown variable '" + name + "'");
        names_.push_back(name);
        return names_.size() - 1;
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    bool growable_;
};

ExprPtr make(Expr::Op op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

class Parser {
public:
    Parser(Lexer& lex, SymbolTable& symbols, bool allow_primed)
        : lex_(lex), symbols_(symbols), allow_primed_(allow_primed) {}

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (lex_.accept("+")) e = make(Expr::Op::Add, e, term());
            else if (lex_.accept("-")) e = make(Expr::Op::Sub, e, term());
            else return e;
        }
    }

    Comparison comparison() {
        Comparison c;
        c.lhs = expr();
        static const std::pair<const char*, Comparison::Rel> rels[] = {
            {"<=", Comparison::Rel::Le}, {">=", Comparison::Rel::Ge}, {"==", Comparison::Rel::Eq},
            {"!=", Comparison::Rel::Ne}, {"<", Comparison::Rel::Lt},  {">", Comparison::Rel::Gt},
            {"=", Comparison::Rel::Eq}};
        bool found = false;
        for (const auto& [sym, rel] : rels) {
            if (lex_.accept(sym)) {
                c.rel = rel;
                found = true;
                break;
            }
        }
        if (!found) lex_.error("expected a comparison operator");
        c.rhs = expr();
        return c;
    }

    Guard guard() {
        Guard g;
        if (lex_.accept("true")) return g;
        g.push_back(comparison());
        while (lex_.accept("&&") || lex_.accept("and")) g.push_back(comparison());
        return g;
    }

private:
    ExprPtr term() {
        ExprPtr e = power();
        while (lex_.accept("*")) e = make(Expr::Op::Mul, e, power());
        return e;
    }

    ExprPtr power() {
        ExprPtr base = unary();
        if (lex_.accept("^")) return make(Expr::Op::Pow, base, power());
        return base;
    }

    ExprPtr unary() {
        if (lex_.accept("-")) return make(Expr::Op::Neg, unary(), nullptr);
        return primary();
    }

    ExprPtr primary() {
        if (lex_.accept("(")) {
            ExprPtr e = expr();
            lex_.expect(")");
            return e;
        }
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::Const;
            e->value = Integer(lex_.next().text);
            return e;
        }
        if (t.kind == Token::Kind::Ident && t.text != "and" && t.text != "true") {
            Token tok = lex_.next();
            if (tok.primed && !allow_primed_) lex_.error("primed variable outside a transition predicate");
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::Var;
            e->var = symbols_.lookup(tok.text, lex_);
            e->primed = tok.primed;
            return e;
        }
        lex_.error("expected an expression");
    }

    Lexer& lex_;
    SymbolTable& symbols_;
    bool allow_primed_;
};

std::vector<std::pair<int, std::string>> logical_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        out.emplace_back(no, line);
    }
    return out;
}

struct Evaluator {
    std::size_t max_bits;

    void check(const Integer& v) const {
        if (v != 0 && boost::multiprecision::msb(abs(v)) + 1 > max_bits) {
            fail(ErrorKind::ArithmeticOverflow,
                 "intermediate value exceeds " + std::to_string(max_bits) + " bits");
        }
    }

    Integer eval(const Expr& e, const Valuation& pre, const Valuation* post) const {
        switch (e.op) {
        case Expr::Op::Const: return e.value;
        case Expr::Op::Var: return e.primed ? (*post)[e.var] : pre[e.var];
        case Expr::Op::Neg: return -eval(*e.lhs, pre, post);
        default: break;
        }
        Integer a = eval(*e.lhs, pre, post);
        Integer b = eval(*e.rhs, pre, post);
        Integer r;
        switch (e.op) {
        case Expr::Op::Add: r = a + b; break;
        case Expr::Op::Sub: r = a - b; break;
        case Expr::Op::Mul: r = a * b; break;
        case Expr::Op::Pow: {
            if (b < 0) fail(ErrorKind::ArithmeticOverflow, "negative exponent");
            if (a == 0 || a == 1) {
                r = (b == 0) ? Integer(1) : a;
            } else if (a == -1) {
                r = (b % 2 == 0) ? Integer(1) : Integer(-1);
            } else {
                if (b > Integer(max_bits)) {
                    fail(ErrorKind::ArithmeticOverflow,
                         "exponent exceeds the " + std::to_string(max_bits) + "-bit value budget");
                }
                r = boost::multiprecision::pow(a, b.convert_to<unsigned>());
            }
            break;
        }
        default: break;
        }
        check(r);
        return r;
    }

    bool holds(const Comparison& c, const Valuation& pre, const Valuation* post) const {
        Integer a = eval(*c.lhs, pre, post);
        Integer b = eval(*c.rhs, pre, post);
        switch (c.rel) {
        case Comparison::Rel::Lt: return a < b;
        case Comparison::Rel::Le: return a <= b;
        case Comparison::Rel::Gt: return a > b;
        case Comparison::Rel::Ge: return a >= b;
        case Comparison::Rel::Eq: return a == b;
        case Comparison::Rel::Ne: return a != b;
        }
        return false;
    }

    bool holds(const Guard& g, const Valuation& pre, const Valuation* post) const {
        return std::all_of(g.begin(), g.end(), [&](const Comparison& c) { return holds(c, pre, post); });
    }
};

Integer zigzag(const Integer& v) { return v >= 0 ? Integer(2 * v) : Integer(-2 * v - 1); }

}  // namespace

Program parse_program(std::string_view text) {
    SymbolTable symbols({}, true);
    std::vector<std::vector<std::pair<std::size_t, Integer>>> inits;
    Program prog;
    for (const auto& [no, line] : logical_lines(text)) {
        Lexer lex(line, no);
        if (lex.accept("init")) {
            std::vector<std::pair<std::size_t, Integer>> assigns;
            while (!lex.at_end()) {
                const Token& name = lex.peek();
                if (name.kind != Token::Kind::Ident || name.primed) lex.error("expected a variable name");
                std::size_t var = symbols.lookup(lex.next().text, lex);
                lex.expect("=");
                bool negative = lex.accept("-");
                if (lex.peek().kind != Token::Kind::Number) lex.error("expected an integer");
                Integer v(lex.next().text);
                assigns.emplace_back(var, negative ? Integer(-v) : v);
                lex.accept(",");
            }
            if (assigns.empty()) lex.error("init line assigns nothing");
            inits.push_back(std::move(assigns));
            continue;
        }
        Parser parser(lex, symbols, false);
        program::Rule rule;
        rule.line = no;
        rule.guard = parser.guard();
        lex.expect("->");
        do {
            const Token& name = lex.peek();
            if (name.kind != Token::Kind::Ident || name.primed) lex.error("expected an assignment target");
            program::Assignment a;
            a.var = symbols.lookup(lex.next().text, lex);
            lex.expect(":=");
            a.value = parser.expr();
            rule.updates.push_back(std::move(a));
        } while (lex.accept(","));
        if (!lex.at_end()) lex.error("trailing input");
        prog.rules.push_back(std::move(rule));
    }
    if (inits.empty()) fail(ErrorKind::ParseError, "program declares no init line");
    prog.variables = symbols.names();
    for (const auto& assigns : inits) {
        Valuation v(prog.variables.size(), Integer(0));
        for (const auto& [var, value] : assigns) v[var] = value;
        prog.initial.push_back(std::move(v));
    }
    return prog;
}

State encode_valuation(const Valuation& v) {
    Integer acc = v.empty() ? Integer(0) : zigzag(v.back());
    for (std::size_t i = v.size(); i-- > 1;) {
        Integer a = zigzag(v[i - 1]);
        Integer s = a + acc;
        acc = s * (s + 1) / 2 + acc;
    }
    if (acc > Integer(std::numeric_limits<State>::max())) {
        fail(ErrorKind::ArithmeticOverflow, "state id does not fit in 64 bits");
    }
    return acc.convert_to<State>();
}

std::string describe_encoding(const std::vector<std::string>& variables) {
    std::string vars;
    for (std::size_t i = 0; i < variables.size(); ++i) vars += (i ? "," : "") + variables[i];
    return "id = pair(z(" + vars + ")) with z(v) = 2v (v>=0) | -2v-1 (v<0), "
           "pair(a,b) = (a+b)(a+b+1)/2 + b folded from the right";
}

ProgramSystem simulate_program(const Program& prog, std::size_t state_cap, std::size_t depth_cap,
                               const Caps& caps) {
    if (state_cap == 0 || depth_cap == 0) fail(ErrorKind::InvalidArgument, "caps must be positive");
    const Evaluator ev{caps.max_value_bits};
    ProgramSystem out;
    out.variables = prog.variables;

    std::unordered_map<State, std::size_t> depth;
    std::deque<State> queue;
    std::vector<State> initial;
    std::vector<Edge> edges;

    auto admit = [&](const Valuation& v, std::size_t d) -> std::optional<State> {
        for (const Integer& x : v) ev.check(x);
        State id = encode_valuation(v);
        if (auto it = out.valuations.find(id); it != out.valuations.end()) {
            if (it->second != v) fail(ErrorKind::InternalInconsistency, "state encoding collision");
            return id;
        }
        if (out.valuations.size() >= state_cap) {
            out.truncated = true;
            return std::nullopt;
        }
        out.valuations.emplace(id, v);
        depth.emplace(id, d);
        queue.push_back(id);
        return id;
    };

    for (const Valuation& v : prog.initial)
        if (auto id = admit(v, 0)) initial.push_back(*id);

    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        const Valuation pre = out.valuations.at(s);
        for (const program::Rule& rule : prog.rules) {
            if (!ev.holds(rule.guard, pre, nullptr)) continue;
            if (depth.at(s) >= depth_cap) {
                out.truncated = true;
                break;
            }
            Valuation post = pre;
            for (const program::Assignment& a : rule.updates) post[a.var] = ev.eval(*a.value, pre, nullptr);
            if (auto t = admit(post, depth.at(s) + 1)) edges.emplace_back(s, *t);
        }
    }

    std::vector<State> domain;
    domain.reserve(out.valuations.size());
    for (const auto& [id, v] : out.valuations) domain.push_back(id);
    out.system = TransitionSystem(FiniteRelation(std::move(domain), std::move(edges), caps),
                                  std::move(initial));
    return out;
}

TransitionPredicate parse_transition_predicate(std::string_view text,
                                               const std::vector<std::string>& variables) {
    TransitionPredicate pred;
    pred.variables = variables;
    SymbolTable symbols(variables, false);
    for (const auto& [no, line] : logical_lines(text)) {
        Lexer lex(line, no);
        Parser parser(lex, symbols, true);
        pred.disjuncts.push_back(parser.guard());
        if (!lex.at_end()) lex.error("trailing input");
    }
    if (pred.disjuncts.empty()) fail(ErrorKind::ParseError, "empty transition predicate");
    return pred;
}

FiniteRelation instantiate(const ProgramSystem& ps, const TransitionPredicate& pred, const Caps& caps) {
    if (pred.variables != ps.variables) {
        fail(ErrorKind::InvalidArgument, "predicate and program use different variables");
    }
    const std::size_t n = ps.valuations.size();
    if (n != 0 && n > caps.max_closure_cells / n) {
        fail(ErrorKind::InstanceCapExceeded, "predicate instantiation over " + std::to_string(n) + " states");
    }
    const Evaluator ev{caps.max_value_bits};
    std::vector<Edge> edges;
    for (const auto& [s, pre] : ps.valuations) {
        for (const auto& [t, post] : ps.valuations) {
            for (const Guard& g : pred.disjuncts) {
                if (ev.holds(g, pre, &post)) {
                    edges.emplace_back(s, t);
                    break;
                }
            }
        }
    }
    std::vector<State> domain;
    for (const auto& [s, v] : ps.valuations) domain.push_back(s);
    Caps relaxed = caps;
    relaxed.max_edges = std::max(caps.max_edges, caps.max_closure_cells);
    return FiniteRelation(std::move(domain), std::move(edges), relaxed);
}

}  // namespace tinv
