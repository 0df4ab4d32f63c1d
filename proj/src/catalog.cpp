#include "gauge5/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gauge5::lie {

using arith::Int;

struct CatalogExpr::Node {
    enum class Op { Num, Var, Neg, Not, Add, Sub, Mul, Div, Mod, Pow, Lt, Le, Gt, Ge, Eq, Ne, And, Or, Call };
    Op op = Op::Num;
    Int num = 0;
    char var = 0;
    std::string func;
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using Node = CatalogExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = Node::Op;

NodePtr make(Op op, std::vector<NodePtr> kids) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->kids = std::move(kids);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NodePtr parse() {
        auto n = parse_or();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("catalog expression '" + std::string(s_) + "': " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    NodePtr parse_or() {
        auto lhs = parse_and();
        while (eat("||")) lhs = make(Op::Or, {lhs, parse_and()});
        return lhs;
    }

    NodePtr parse_and() {
        auto lhs = parse_not();
        while (eat("&&")) lhs = make(Op::And, {lhs, parse_not()});
        return lhs;
    }

    NodePtr parse_not() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '!' && s_.substr(pos_, 2) != "!=") {
            ++pos_;
            return make(Op::Not, {parse_not()});
        }
        return parse_cmp();
    }

    NodePtr parse_cmp() {
        auto lhs = parse_sum();
        static const std::pair<std::string_view, Op> ops[] = {
            {"<=", Op::Le}, {">=", Op::Ge}, {"==", Op::Eq}, {"!=", Op::Ne}, {"<", Op::Lt}, {">", Op::Gt}};
        for (const auto& [tok, op] : ops)
            if (eat(tok)) return make(op, {lhs, parse_sum()});
        return lhs;
    }

    NodePtr parse_sum() {
        auto lhs = parse_term();
        for (;;) {
            if (eat("+"))
                lhs = make(Op::Add, {lhs, parse_term()});
            else if (eat("-"))
                lhs = make(Op::Sub, {lhs, parse_term()});
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        auto lhs = parse_unary();
        for (;;) {
            if (eat("*"))
                lhs = make(Op::Mul, {lhs, parse_unary()});
            else if (eat("/"))
                lhs = make(Op::Div, {lhs, parse_unary()});
            else if (eat("%"))
                lhs = make(Op::Mod, {lhs, parse_unary()});
            else
                return lhs;
        }
    }

    NodePtr parse_unary() {
        if (eat("-")) return make(Op::Neg, {parse_unary()});
        auto base = parse_primary();
        if (eat("^")) return make(Op::Pow, {base, parse_unary()});
        return base;
    }

    NodePtr parse_primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (eat("(")) {
            auto inner = parse_or();
            if (!eat(")")) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Int v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = arith::checked_add(arith::checked_mul(v, 10), s_[pos_++] - '0');
            auto n = std::make_shared<Node>();
            n->num = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (eat("(")) {
                std::vector<NodePtr> args{parse_or()};
                while (eat(",")) args.push_back(parse_or());
                if (!eat(")")) fail("missing ')' after arguments of " + name);
                std::size_t want = name == "gcd" ? 2 : 1;
                if (name != "gcd" && name != "nu" && name != "legendre") fail("unknown function " + name);
                if (args.size() != want) fail("wrong argument count for " + name);
                auto n = std::make_shared<Node>();
                n->op = Op::Call;
                n->func = name;
                n->kids = std::move(args);
                return n;
            }
            if (name != "n" && name != "p" && name != "c") fail("unknown variable " + name);
            auto n = std::make_shared<Node>();
            n->op = Op::Var;
            n->var = name[0];
            return n;
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

Int lookup(char var, const Bindings& b) {
    const std::optional<Int>& v = var == 'n' ? b.n : var == 'p' ? b.p : b.c;
    if (!v) throw std::invalid_argument(std::string("catalog expression needs a value for ") + var);
    return *v;
}

Int eval(const Node& n, const Bindings& b) {
    auto arg = [&](std::size_t i) { return eval(*n.kids[i], b); };
    switch (n.op) {
        case Op::Num: return n.num;
        case Op::Var: return lookup(n.var, b);
        case Op::Neg: return arith::checked_mul(-1, arg(0));
        case Op::Not: return arg(0) == 0;
        case Op::Add: return arith::checked_add(arg(0), arg(1));
        case Op::Sub: return arith::checked_add(arg(0), arith::checked_mul(-1, arg(1)));
        case Op::Mul: return arith::checked_mul(arg(0), arg(1));
        case Op::Div:
        case Op::Mod: {
            Int d = arg(1);
            if (d == 0) throw std::domain_error("division by zero in catalog expression");
            return n.op == Op::Div ? arg(0) / d : arg(0) % d;
        }
        case Op::Pow: {
            Int e = arg(1);
            if (e < 0) throw std::domain_error("negative exponent in catalog expression");
            return arith::checked_pow(arg(0), static_cast<int>(e));
        }
        case Op::Lt: return arg(0) < arg(1);
        case Op::Le: return arg(0) <= arg(1);
        case Op::Gt: return arg(0) > arg(1);
        case Op::Ge: return arg(0) >= arg(1);
        case Op::Eq: return arg(0) == arg(1);
        case Op::Ne: return arg(0) != arg(1);
        case Op::And: return arg(0) != 0 && arg(1) != 0;
        case Op::Or: return arg(0) != 0 || arg(1) != 0;
        case Op::Call:
            if (n.func == "gcd") return arith::gcd(arg(0), arg(1));
            if (n.func == "nu") return arith::nu_p(arg(0), lookup('p', b));
            return arith::legendre_valuation(arg(0), lookup('p', b));
    }
    return 0;
}

bool uses(const Node& n, char var) {
    if (n.op == Op::Var && n.var == var) return true;
    if (n.op == Op::Call && n.func != "gcd" && var == 'p') return true;
    for (const auto& k : n.kids)
        if (uses(*k, var)) return true;
    return false;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Splits on a single '|'; "||" belongs to a condition.
std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '|' && i + 1 < s.size() && s[i + 1] == '|') {
            item += "||";
            ++i;
        } else if (s[i] == '|') {
            out.push_back(trim(item));
            item.clear();
        } else {
            item += s[i];
        }
    }
    out.push_back(trim(item));
    return out;
}

RowKind parse_kind(const std::string& s) {
    if (s == "ord") return RowKind::Ord;
    if (s == "range") return RowKind::Range;
    if (s == "r") return RowKind::R;
    if (s == "torsion") return RowKind::Torsion;
    if (s == "trivial") return RowKind::Trivial;
    throw std::invalid_argument("unknown row kind '" + s + "'");
}

int parse_param(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad parameter '" + s + "'");
    return std::stoi(s);
}

}  // namespace

CatalogExpr CatalogExpr::parse(std::string_view text) {
    CatalogExpr e;
    e.source_ = trim(text);
    e.root_ = Parser(e.source_).parse();
    return e;
}

Int CatalogExpr::eval(const Bindings& b) const {
    if (!root_) throw std::logic_error("empty catalog expression");
    return gauge5::lie::eval(*root_, b);
}

bool CatalogExpr::uses(char var) const { return root_ && gauge5::lie::uses(*root_, var); }

Catalog Catalog::parse(std::string_view text, const std::string& origin) {
    Catalog cat;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    bool have_version = false;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto where = [&] { return origin + ":" + std::to_string(line_no) + ": "; };
        if (!have_version) {
            if (!line.starts_with("catalog-version "))
                throw std::invalid_argument(where() + "expected 'catalog-version N' header");
            cat.version_ = parse_param(trim(line.substr(16)));
            have_version = true;
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != 5) throw std::invalid_argument(where() + "expected 5 '|'-separated fields");
        try {
            CatalogRow row;
            row.line = line_no;
            row.kind = parse_kind(f[0]);
            row.family = f[1];
            if (f[2] == "-") {
                row.lo = row.hi = 0;
            } else if (auto dots = f[2].find(".."); dots != std::string::npos) {
                row.lo = parse_param(f[2].substr(0, dots));
                std::string hi = f[2].substr(dots + 2);
                row.hi = hi.empty() ? -1 : parse_param(hi);
            } else {
                row.lo = row.hi = parse_param(f[2]);
            }
            if (f[3] == "integral") {
                row.integral = true;
                row.condition = CatalogExpr::parse("1");
            } else {
                row.condition = CatalogExpr::parse(f[3]);
            }
            row.value = CatalogExpr::parse(f[4]);
            if (row.integral && row.value.uses('p'))
                throw std::invalid_argument("integral row value may not depend on p");
            cat.rows_.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::invalid_argument(where() + e.what());
        }
    }
    if (!have_version) throw std::invalid_argument(origin + ": empty catalog");
    return cat;
}

Catalog Catalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

const CatalogRow* Catalog::find(RowKind kind, std::string_view family, int n, std::optional<Int> p,
                                std::optional<Int> c) const {
    Bindings b{n, p, c};
    for (const auto& row : rows_) {
        if (row.kind != kind || row.family != family) continue;
        if (n < row.lo || (row.hi >= 0 && n > row.hi)) continue;
        if (row.integral) return &row;
        if (!p) continue;
        if (row.condition.eval(b) != 0) return &row;
    }
    return nullptr;
}

}  // namespace gauge5::lie
