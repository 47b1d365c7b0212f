#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace nyq::cli {

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t k = 0;
    auto digit = [&](std::size_t j) { return j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); };
    while (k < s.size()) {
        char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++k;
            continue;
        }
        std::size_t start = k;
        if (digit(k) || (c == '.' && digit(k + 1))) {
            while (digit(k)) ++k;
            if (k < s.size() && s[k] == '.') {
                ++k;
                while (digit(k)) ++k;
            }
            // exponent only when digits follow, so "2e(1)" stays a product
            if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
                std::size_t j = k + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (digit(j)) {
                    k = j;
                    while (digit(k)) ++k;
                }
            }
            out.push_back({Token::Kind::Number, std::string(s.substr(start, k - start)), start});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (k < s.size() && (std::isalnum(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
            out.push_back({Token::Kind::Ident, std::string(s.substr(start, k - start)), start});
        } else if (c == '*' && k + 1 < s.size() && s[k + 1] == '*') {
            out.push_back({Token::Kind::Op, "^", start});
            k += 2;
        } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::Op, std::string(1, c), start});
            ++k;
        } else {
            throw Error(ErrorKind::Parse, fmt::format("unexpected character '{}' at position {}", c, k));
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

NodePtr make(Node::Kind kind) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    return n;
}

NodePtr binary(Node::Kind kind, NodePtr a, NodePtr b) {
    auto n = make(kind);
    n->args.push_back(std::move(a));
    n->args.push_back(std::move(b));
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

    NodePtr parse() {
        if (peek().kind == Token::Kind::End) fail("empty expression");
        NodePtr e = sum();
        if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, fmt::format("{} at position {} in \"{}\"", what, peek().pos, text_));
    }
    void expect(const char* op) {
        if (!is_op(op)) fail(std::string("expected '") + op + "'");
        ++k_;
    }

    NodePtr sum() {
        NodePtr e = product();
        while (is_op("+") || is_op("-")) {
            auto kind = peek().text == "+" ? Node::Kind::Add : Node::Kind::Sub;
            ++k_;
            e = binary(kind, std::move(e), product());
        }
        return e;
    }

    bool starts_atom() const {
        return peek().kind == Token::Kind::Number || peek().kind == Token::Kind::Ident || is_op("(");
    }

    NodePtr product() {
        NodePtr e = unary();
        while (true) {
            if (is_op("*") || is_op("/")) {
                auto kind = peek().text == "*" ? Node::Kind::Mul : Node::Kind::Div;
                ++k_;
                e = binary(kind, std::move(e), unary());
            } else if (starts_atom()) {
                e = binary(Node::Kind::Mul, std::move(e), power());
            } else {
                return e;
            }
        }
    }

    NodePtr unary() {
        if (is_op("-")) {
            ++k_;
            auto n = make(Node::Kind::Neg);
            n->args.push_back(unary());
            return n;
        }
        if (is_op("+")) {
            ++k_;
            return unary();
        }
        return power();
    }

    long integer_exponent() {
        bool paren = is_op("(");
        if (paren) ++k_;
        bool neg = false;
        if (is_op("-") || is_op("+")) {
            neg = peek().text == "-";
            ++k_;
        }
        if (peek().kind != Token::Kind::Number) fail("expected an integer exponent");
        mpq_class q = parse_rational(peek().text);
        if (q.get_den() != 1 || abs(q) > 1024) fail("exponent must be an integer of modulus <= 1024");
        ++k_;
        if (paren) expect(")");
        long e = q.get_num().get_si();
        return neg ? -e : e;
    }

    NodePtr power() {
        NodePtr base = atom();
        if (is_op("^")) {
            ++k_;
            auto n = make(Node::Kind::Pow);
            n->exponent = integer_exponent();
            n->args.push_back(std::move(base));
            return n;
        }
        return base;
    }

    NodePtr atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Number) {
            auto n = make(Node::Kind::Number);
            n->number = parse_rational(t.text);
            ++k_;
            return n;
        }
        if (t.kind == Token::Kind::Ident) {
            std::string name = t.text;
            ++k_;
            if (is_op("(")) {
                ++k_;
                auto n = make(Node::Kind::Call);
                n->name = name;
                if (!is_op(")")) {
                    n->args.push_back(sum());
                    while (is_op(",")) {
                        ++k_;
                        n->args.push_back(sum());
                    }
                }
                expect(")");
                return n;
            }
            if (name == "i") return make(Node::Kind::Imag);
            auto n = make(Node::Kind::Name);
            n->name = name;
            return n;
        }
        if (is_op("(")) {
            ++k_;
            NodePtr e = sum();
            expect(")");
            return e;
        }
        fail(t.kind == Token::Kind::End ? "unexpected end" : "unexpected '" + t.text + "'");
    }

    std::string text_;
    std::vector<Token> toks_;
    std::size_t k_ = 0;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

// Shared walk; domains supply constant, name, call and the arithmetic.
template <class Dom>
typename Dom::Value eval(const Node& n, Dom& d) {
    using K = Node::Kind;
    switch (n.kind) {
        case K::Number: return d.constant(GaussQ(n.number));
        case K::Imag: return d.constant(GaussQ::i());
        case K::Name: {
            auto it = d.params.find(n.name);
            if (it != d.params.end()) return d.constant(it->second);
            return d.name(n.name);
        }
        case K::Add: return d.add(eval(*n.args[0], d), eval(*n.args[1], d));
        case K::Sub: return d.add(eval(*n.args[0], d), d.neg(eval(*n.args[1], d)));
        case K::Mul: return d.mul(eval(*n.args[0], d), eval(*n.args[1], d));
        case K::Div: return d.div(eval(*n.args[0], d), eval(*n.args[1], d));
        case K::Neg: return d.neg(eval(*n.args[0], d));
        case K::Pow: {
            auto base = eval(*n.args[0], d);
            auto acc = d.constant(GaussQ(1));
            for (long k = 0; k < std::labs(n.exponent); ++k) acc = d.mul(acc, base);
            return n.exponent < 0 ? d.div(d.constant(GaussQ(1)), acc) : acc;
        }
        case K::Call: return d.call(n);
    }
    bad("malformed expression");
}

template <class V>
struct Arith {
    V add(const V& a, const V& b) const { return a + b; }
    V mul(const V& a, const V& b) const { return a * b; }
    V neg(const V& a) const { return -a; }
};

struct RationalDomain : Arith<RationalFunction> {
    using Value = RationalFunction;
    const Params& params;
    std::string var;

    Value constant(const GaussQ& c) const { return RationalFunction(Poly(c)); }
    Value name(const std::string& n) const {
        if (n == var) return RationalFunction(Poly::monomial(1));
        bad("unknown name '" + n + "' (the variable is " + var + ")");
    }
    Value div(const Value& a, const Value& b) const {
        if (b.is_zero()) bad("division by zero");
        return a / b;
    }
    Value call(const Node& n) const { bad("unknown function '" + n.name + "' in a rational expression"); }
};

// Frequencies: coordinates over the basis (1, sqrt(k1), sqrt(k2), ...).
struct FrequencyDomain {
    using Value = FrequencyCoords;
    const Params& params;
    FrequencyBasis& basis;

    static bool is_rational(const Value& v) {
        for (std::size_t j = 1; j < v.size(); ++j)
            if (sgn(v[j]) != 0) return false;
        return true;
    }
    static mpq_class head(const Value& v) { return v.empty() ? mpq_class(0) : v[0]; }
    static Value scaled(Value v, const mpq_class& c) {
        for (auto& x : v) x *= c;
        return v;
    }

    Value constant(const GaussQ& c) const {
        if (!c.is_real()) bad("frequencies must be real");
        return {c.re()};
    }
    Value name(const std::string& n) const { bad("unknown name '" + n + "' in a frequency"); }
    Value add(Value a, const Value& b) const {
        if (a.size() < b.size()) a.resize(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) a[j] += b[j];
        return a;
    }
    Value neg(const Value& a) const { return scaled(a, -1); }
    Value mul(const Value& a, const Value& b) const {
        if (is_rational(a)) return scaled(b, head(a));
        if (is_rational(b)) return scaled(a, head(b));
        bad("product of two irrational frequencies");
    }
    Value div(const Value& a, const Value& b) const {
        if (!is_rational(b) || sgn(head(b)) == 0) bad("frequencies divide only by nonzero rationals");
        return scaled(a, 1 / head(b));
    }
    Value call(const Node& n) const {
        if (n.name != "sqrt" || n.args.size() != 1) bad("only sqrt(k) is allowed inside a frequency");
        FrequencyDomain inner{params, basis};
        Value k = eval(*n.args[0], inner);
        mpq_class q = head(k);
        if (!is_rational(k) || q.get_den() != 1 || q <= 1 || q > 1000000) bad("sqrt needs an integer 1 < k <= 10^6");
        long r = q.get_num().get_si();
        for (long p = 2; p * p <= r; ++p)
            if (r % (p * p) == 0) bad(fmt::format("sqrt({}) is not square-free; write it as a rational multiple", r));
        Value out(basis.index_of(r) + 1);
        out.back() = 1;
        return out;
    }
};

struct ExponentialDomain : Arith<ExponentialPolynomial> {
    using Value = ExponentialPolynomial;
    const Params& params;
    FrequencyBasis& basis;

    Value constant(const GaussQ& c) const { return ExponentialPolynomial(c.to_complex()); }
    Value name(const std::string& n) const { bad("unknown name '" + n + "'; almost periodic terms are written e(lambda)"); }
    Value div(const Value& a, const Value& b) const {
        if (b.size() != 1 || b.terms().begin()->first.size() > 0 || std::abs(b.mean()) == 0.0) {
            bad("almost periodic expressions divide only by nonzero constants");
        }
        return a * ExponentialPolynomial(1.0 / b.mean());
    }
    Value call(const Node& n) const {
        if (n.name != "e" || n.args.size() != 1) bad("unknown function '" + n.name + "'; use e(lambda)");
        FrequencyDomain fd{params, basis};
        FrequencyCoords c = eval(*n.args[0], fd);
        return ExponentialPolynomial::exponential(trim_coords(c), 1.0, basis.values());
    }
};

// sum_t R_t(s) exp(-t s)
struct QuasiRational {
    std::map<mpq_class, RationalFunction> terms;
};

QuasiRational operator+(QuasiRational a, const QuasiRational& b) {
    for (const auto& [t, r] : b.terms) {
        auto [it, inserted] = a.terms.emplace(t, r);
        if (!inserted) it->second = it->second + r;
    }
    return a;
}

struct DelayDomain {
    using Value = QuasiRational;
    const Params& params;

    Value constant(const GaussQ& c) const { return {{{mpq_class(0), RationalFunction(Poly(c))}}}; }
    Value name(const std::string& n) const {
        if (n == "s") return {{{mpq_class(0), RationalFunction(Poly::monomial(1))}}};
        bad("unknown name '" + n + "' (the variable is s)");
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(Value a) const {
        for (auto& [t, r] : a.terms) r = -r;
        return a;
    }
    Value mul(const Value& a, const Value& b) const {
        Value out;
        for (const auto& [ta, ra] : a.terms)
            for (const auto& [tb, rb] : b.terms) out = out + Value{{{ta + tb, ra * rb}}};
        return out;
    }
    Value div(const Value& a, const Value& b) const {
        RationalFunction d;
        for (const auto& [t, r] : b.terms) {
            if (r.is_zero()) continue;
            if (sgn(t) != 0 || !d.is_zero()) bad("division by an expression containing delays");
            d = r;
        }
        if (d.is_zero()) bad("division by zero");
        Value out = a;
        for (auto& [t, r] : out.terms) r = r / d;
        return out;
    }
    Value call(const Node& n) const {
        if (n.name != "exp" || n.args.size() != 1) bad("unknown function '" + n.name + "'; delays are exp(-t*s)");
        RationalFunction arg = to_rational(*n.args[0], params, "s");
        if (arg.den().degree() != 0 || arg.num().degree() > 1) bad("exp() takes an argument c - t*s");
        GaussQ c0 = arg.num().coeff(0) / arg.den().leading();
        GaussQ c1 = arg.num().coeff(1) / arg.den().leading();
        if (!c1.is_real() || sgn(c1.re()) > 0) bad("delays exp(-t*s) need a real t >= 0");
        GaussQ factor = c0.is_zero() ? GaussQ(1) : GaussQ::from_complex(std::exp(c0.to_complex()));
        return {{{mpq_class(-c1.re()), RationalFunction(Poly(factor))}}};
    }
};

struct PolydiskDomain {
    using Value = PolyRatio;
    const Params& params;
    int nvars;

    Value constant(const GaussQ& c) const { return PolyRatio(MultiPoly(nvars, c), MultiPoly(nvars, GaussQ(1))); }
    Value name(const std::string& n) const {
        if (n.size() >= 2 && n[0] == 'z') {
            int j = std::atoi(n.c_str() + 1);
            if (j >= 1 && j <= nvars && n.substr(1) == std::to_string(j)) {
                return PolyRatio(MultiPoly::variable(nvars, j - 1), MultiPoly(nvars, GaussQ(1)));
            }
        }
        bad("unknown name '" + n + "' (variables are z1..z" + std::to_string(nvars) + ")");
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value neg(const Value& a) const { return -a; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const {
        if (b.num().is_zero()) bad("division by zero");
        return PolyRatio(a.num() * b.den(), a.den() * b.num());
    }
    Value call(const Node& n) const { bad("unknown function '" + n.name + "' in a polydisk expression"); }
};

}  // namespace

NodePtr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::size_t FrequencyBasis::index_of(long radicand) {
    for (std::size_t j = 1; j < radicands_.size(); ++j)
        if (radicands_[j] == radicand) return j;
    radicands_.push_back(radicand);
    return radicands_.size() - 1;
}

std::vector<double> FrequencyBasis::values() const {
    std::vector<double> out;
    for (long r : radicands_) out.push_back(std::sqrt(static_cast<double>(r)));
    return out;
}

RationalFunction to_rational(const Node& n, const Params& params, const std::string& var) {
    RationalDomain d{{}, params, var};
    return eval(n, d);
}

ExponentialPolynomial to_exponential(const Node& n, const Params& params, FrequencyBasis& basis) {
    ExponentialDomain d{{}, params, basis};
    return eval(n, d);
}

CDElement to_cd(const Node& n, const Params& params) {
    DelayDomain d{params};
    QuasiRational q = eval(n, d);
    CDElement out;
    for (const auto& [t, r] : q.terms) {
        if (r.is_zero()) continue;
        if (sgn(t) < 0) bad("negative delay");
        if (r.num().degree() > r.den().degree()) bad("the coefficient of exp(-" + rational_str(t) + " s) is improper");
        out = out + CDElement::rational(r, t);
    }
    return out;
}

int polydisk_variable_count(const Node& n) {
    int best = 0;
    if (n.kind == Node::Kind::Name && n.name.size() >= 2 && n.name[0] == 'z') {
        bool digits = true;
        for (std::size_t k = 1; k < n.name.size(); ++k) digits = digits && std::isdigit(static_cast<unsigned char>(n.name[k]));
        if (digits && n.name.size() < 6) best = std::atoi(n.name.c_str() + 1);
    }
    for (const auto& a : n.args) best = std::max(best, polydisk_variable_count(*a));
    return best;
}

PolyRatio to_polyratio(const Node& n, const Params& params, int nvars) {
    PolydiskDomain d{params, std::max(nvars, polydisk_variable_count(n))};
    return eval(n, d);
}

}  // namespace nyq::cli
