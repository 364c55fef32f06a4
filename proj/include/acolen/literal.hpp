#ifndef ACOLEN_LITERAL_HPP
#define ACOLEN_LITERAL_HPP

#include "acolen/families.hpp"
#include "acolen/monomial.hpp"

#include <string>

namespace acolen {

/// Parse error carrying the byte offset within the literal.
struct parse_error : input_error {
    parse_error(const std::string& msg, size_t position);
    size_t position;
};

/// Ideal literal grammar: comma-separated monomials over x1..xd, `^` for
/// exponents, `*` optional ("x1^3, x1*x2, x2^2"). "1" is the unit ideal, "0"
/// the zero ideal. When d == 0 the dimension is inferred from the largest
/// variable index.
MonomialIdeal parse_ideal_literal(const std::string& text, int d = 0);

/// "x1^3*x2" rendering of one exponent vector; "1" for the zero exponent.
std::string monomial_to_string(const Exponents& u);

/// Canonical literal; "0" for the zero ideal.
std::string ideal_to_literal(const MonomialIdeal& I);

/// Canonical JSON {"d": d, "gens": [[...], ...]}.
std::string ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const std::string& json_text);

/// FamilySpec JSON, e.g.
///   {"index":"p-power","p":2,"kind":"generalized_bracket",
///    "ideal":{"d":2,"gens":[[1,0],[0,1]]}}
/// Composite kinds nest under "base"/"other"; floor_power takes "alpha" as
/// "num/den". Custom families have no JSON form.
FamilySpec family_from_json(const std::string& json_text);
std::string family_to_json(const FamilySpec& spec);

/// Parses either an inline JSON object or the contents of a file path.
std::string slurp_arg(const std::string& arg);

/// "num/den" or integer string to an exact rational.
BigRat parse_rational(const std::string& text);

}  // namespace acolen

#endif
