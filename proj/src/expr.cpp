#include "paramtc/expr.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace paramtc {

namespace {

std::unique_ptr<ExprAst> node(ExprAst::Kind kind)
{
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    return n;
}

std::unique_ptr<ExprAst> binary(ExprAst::Kind kind, std::unique_ptr<ExprAst> lhs,
                                std::unique_ptr<ExprAst> rhs)
{
    auto n = node(kind);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAst run()
    {
        auto ast = parse_expr();
        skip_ws();
        if (!eof())
            fail("end of input");
        return std::move(*ast);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (!eof() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(what);
    }

    [[noreturn]] void fail(const std::string& expected)
    {
        throw SyntaxError(pos_, expected);
    }

    std::int64_t parse_int(const char* what)
    {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(what);
        std::int64_t value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const int digit = peek() - '0';
            if (__builtin_mul_overflow(value, 10, &value) ||
                __builtin_add_overflow(value, digit, &value))
                fail("an integer literal within 64 bits");
            ++pos_;
        }
        return value;
    }

    std::unique_ptr<ExprAst> parse_expr()
    {
        auto lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = binary(ExprAst::Kind::Add, std::move(lhs), parse_term());
            else if (accept('-'))
                lhs = binary(ExprAst::Kind::Sub, std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    std::unique_ptr<ExprAst> parse_term()
    {
        auto lhs = parse_factor();
        while (accept('*'))
            lhs = binary(ExprAst::Kind::Mul, std::move(lhs), parse_factor());
        return lhs;
    }

    std::unique_ptr<ExprAst> parse_factor()
    {
        skip_ws();
        if (!eof() && peek() == '-') {
            ++pos_;
            auto n = node(ExprAst::Kind::Neg);
            n->lhs = parse_factor();
            return n;
        }
        auto base = parse_primary();
        while (accept('^')) {
            auto n = node(ExprAst::Kind::Pow);
            n->lhs = std::move(base);
            n->value = parse_int("a nonnegative exponent");
            base = std::move(n);
        }
        return base;
    }

    std::unique_ptr<ExprAst> parse_primary()
    {
        skip_ws();
        if (eof())
            fail("an integer, a generator or '('");
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ExprAst::Kind::IntLiteral);
            n->value = parse_int("an integer");
            return n;
        }
        if (c == 'w') {
            ++pos_;
            auto n = node(ExprAst::Kind::Gen);
            skip_ws();
            if (!eof() && peek() == '\'') {
                n->gen_primed = true;
                ++pos_;
            }
            expect('(', "'(' after the generator name");
            skip_ws();
            const std::size_t i_offset = pos_;
            const std::int64_t i = parse_int("an index");
            expect(',', "','");
            skip_ws();
            const std::size_t j_offset = pos_;
            const std::int64_t j = parse_int("an index");
            expect(')', "')'");
            if (i < 1 || i > 1'000'000)
                throw SyntaxError(i_offset, "a positive index");
            if (j < 1 || j > 1'000'000)
                throw SyntaxError(j_offset, "a positive index");
            n->gen_i = static_cast<int>(i);
            n->gen_j = static_cast<int>(j);
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        fail("an integer, a generator or '('");
    }
};

}  // namespace

ExprAst parse(std::string_view text)
{
    return Parser(text).run();
}

Element evaluate(const ExprAst& ast, const SpaceSpec& spec)
{
    switch (ast.kind) {
    case ExprAst::Kind::IntLiteral:
        return scalar_multiply(ast.value, Element::unit(spec));
    case ExprAst::Kind::Gen:
        return make_generator(spec, ast.gen_i, ast.gen_j,
                              ast.gen_primed ? Side::Primed : Side::Unprimed);
    case ExprAst::Kind::Neg:
        return scalar_multiply(-1, evaluate(*ast.lhs, spec));
    case ExprAst::Kind::Add:
        return add(evaluate(*ast.lhs, spec), evaluate(*ast.rhs, spec));
    case ExprAst::Kind::Sub:
        return add(evaluate(*ast.lhs, spec), scalar_multiply(-1, evaluate(*ast.rhs, spec)));
    case ExprAst::Kind::Mul:
        return multiply(evaluate(*ast.lhs, spec), evaluate(*ast.rhs, spec));
    case ExprAst::Kind::Pow: {
        Element base = evaluate(*ast.lhs, spec);
        Element result = Element::unit(spec);
        std::int64_t e = ast.value;
        while (e > 0 && !result.is_zero()) {
            if (e & 1)
                result = multiply(result, base);
            e >>= 1;
            if (e)
                base = multiply(base, base);
        }
        return result;
    }
    }
    throw Error("corrupt expression tree");
}

Element evaluate(std::string_view text, const SpaceSpec& spec)
{
    return evaluate(parse(text), spec);
}

namespace {

void print_part(std::ostringstream& out, const std::vector<IndexPair>& part, bool primed,
                bool& first)
{
    for (const IndexPair& p : part) {
        if (!first)
            out << '*';
        first = false;
        out << 'w' << (primed ? "'" : "") << '(' << p.low << ',' << p.high << ')';
    }
}

}  // namespace

std::string to_expr_string(const Monomial& mono)
{
    if (mono.is_unit())
        return "1";
    std::ostringstream out;
    bool first = true;
    print_part(out, mono.base, false, first);
    print_part(out, mono.fibre, false, first);
    print_part(out, mono.primed, true, first);
    return out.str();
}

std::string to_expr_string(const Element& element)
{
    if (element.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : element.terms()) {
        const bool negative = coeff < 0;
        // avoid overflow on INT64_MIN by printing the magnitude digit-wise
        const std::uint64_t magnitude =
            negative ? ~static_cast<std::uint64_t>(coeff) + 1 : static_cast<std::uint64_t>(coeff);
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mono.is_unit())
            out << magnitude;
        else if (magnitude != 1)
            out << magnitude << '*' << to_expr_string(mono);
        else
            out << to_expr_string(mono);
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& mono)
{
    return os << to_expr_string(mono);
}

std::ostream& operator<<(std::ostream& os, const Element& element)
{
    return os << to_expr_string(element);
}

}  // namespace paramtc
