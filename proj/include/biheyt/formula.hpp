#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace biheyt
{

enum class connective
{
    atom,
    bottom,
    top,
    neg,   // intuitionistic / classical negation
    conot, // co-negation
    conj,
    disj,
    implies,
    minus, // co-implication a <- b
    box,
    diamond,
};

struct formula_node;
using formula = std::shared_ptr< const formula_node >;

struct formula_node
{
    connective op;
    std::string name; // atoms only
    formula left;     // unary operand, or left operand
    formula right;
};

formula make_atom( std::string name );
formula make_bottom();
formula make_top();
formula make_neg( formula f );
formula make_conot( formula f );
formula make_conj( formula a, formula b );
formula make_disj( formula a, formula b );
formula make_implies( formula a, formula b );
formula make_minus( formula a, formula b );
formula make_box( formula f );
formula make_diamond( formula f );

[[nodiscard]] bool is_unary( connective c );
[[nodiscard]] bool is_binary( connective c );
// ASCII spelling: "!", "~", "&", "|", "->", "<-", "[]", "<>", "_|_", "T".
[[nodiscard]] std::string_view symbol( connective c );

/// Binding, tightest first: unary operators, &, |, then -> (right
/// associative) and <- (left associative) on one level. Both ASCII and the
/// Unicode symbols are accepted. Throws syntax_error.
formula parse_formula( std::string_view text );

// ASCII rendering with only the parentheses the grammar needs.
std::string to_string( const formula& f );

std::set< std::string > atoms_of( const formula& f );
// Height of the syntax tree; atoms and constants have depth 0.
std::size_t depth( const formula& f );
// Structural equality.
bool same_formula( const formula& a, const formula& b );
// Whether any node of f uses the connective.
bool uses( const formula& f, connective c );

} // namespace biheyt
