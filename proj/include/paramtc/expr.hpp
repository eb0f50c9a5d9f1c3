#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "paramtc/ring.hpp"

namespace paramtc {

/* Text syntax for ring elements.  Grammar (whitespace insignificant):
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor ('*' factor)*
 *   factor := INT | GEN | '(' expr ')' | '-' factor | factor '^' INT
 *   GEN    := 'w' ["'"] '(' INT ',' INT ')'
 *
 * Precedence: '^' over unary '-' over '*' over binary '+'/'-'.
 * '*' is mandatory between factors. */

struct ExprAst {
    enum class Kind { IntLiteral, Gen, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::IntLiteral;
    std::int64_t value = 0;  // IntLiteral payload, Pow exponent (always >= 0)
    int gen_i = 0;           // Gen indices as written (sign convention applies on evaluation)
    int gen_j = 0;
    bool gen_primed = false;
    std::unique_ptr<ExprAst> lhs;
    std::unique_ptr<ExprAst> rhs;
};

/* Throws SyntaxError with the byte offset of the first problem. */
ExprAst parse(std::string_view text);

/* Bottom-up evaluation into a normalized Element of the given ring. */
Element evaluate(const ExprAst& ast, const SpaceSpec& spec);

Element evaluate(std::string_view text, const SpaceSpec& spec);

/* Canonical printing in the grammar above; re-parsing reproduces the
 * element exactly.  Terms come out in the canonical monomial order. */
std::string to_expr_string(const Monomial& mono);
std::string to_expr_string(const Element& element);

std::ostream& operator<<(std::ostream& os, const Monomial& mono);
std::ostream& operator<<(std::ostream& os, const Element& element);

}  // namespace paramtc
