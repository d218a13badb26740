#include "biheyt/formula.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace biheyt
{

namespace
{

formula make( connective op, formula left = nullptr, formula right = nullptr, std::string name = {} )
{
    return std::make_shared< const formula_node >( formula_node{ op, std::move( name ), std::move( left ),
                                                                 std::move( right ) } );
}

enum class token_kind
{
    identifier,
    constant_bottom,
    constant_top,
    unary,
    conj,
    disj,
    implies,
    minus,
    lparen,
    rparen,
    end,
};

struct token
{
    token_kind kind;
    connective op = connective::atom;
    std::string text;
    std::size_t position = 0;
};

struct spelling
{
    std::string_view text;
    token_kind kind;
    connective op;
};

// Longest spellings first where prefixes overlap.
constexpr std::array< spelling, 22 > spellings{ {
    { "_|_", token_kind::constant_bottom, connective::bottom },
    { "->", token_kind::implies, connective::implies },
    { "<-", token_kind::minus, connective::minus },
    { "[]", token_kind::unary, connective::box },
    { "<>", token_kind::unary, connective::diamond },
    { "!", token_kind::unary, connective::neg },
    { "~", token_kind::unary, connective::conot },
    { "&", token_kind::conj, connective::conj },
    { "|", token_kind::disj, connective::disj },
    { "(", token_kind::lparen, connective::atom },
    { ")", token_kind::rparen, connective::atom },
    { "¬", token_kind::unary, connective::neg },
    { "∼", token_kind::unary, connective::conot },
    { "∧", token_kind::conj, connective::conj },
    { "∨", token_kind::disj, connective::disj },
    { "→", token_kind::implies, connective::implies },
    { "←", token_kind::minus, connective::minus },
    { "□", token_kind::unary, connective::box },
    { "◇", token_kind::unary, connective::diamond },
    { "⊥", token_kind::constant_bottom, connective::bottom },
    { "⊤", token_kind::constant_top, connective::top },
    { "☐", token_kind::unary, connective::box },
} };

std::vector< token > tokenize( std::string_view text )
{
    std::vector< token > out;
    std::size_t i = 0;
    while ( i < text.size() )
    {
        const auto c = static_cast< unsigned char >( text[ i ] );
        if ( std::isspace( c ) )
        {
            ++i;
            continue;
        }
        if ( std::isalpha( c ) )
        {
            auto j = i;
            while ( j < text.size() &&
                    ( std::isalnum( static_cast< unsigned char >( text[ j ] ) ) || text[ j ] == '_' ) )
                ++j;
            std::string word{ text.substr( i, j - i ) };
            if ( word == "T" )
                out.push_back( { token_kind::constant_top, connective::top, word, i } );
            else
                out.push_back( { token_kind::identifier, connective::atom, word, i } );
            i = j;
            continue;
        }
        auto match = std::find_if( spellings.begin(), spellings.end(),
                                   [ & ]( const spelling& s ) { return text.substr( i ).starts_with( s.text ); } );
        if ( match == spellings.end() )
        {
            // Report the whole UTF-8 sequence rather than a lone lead byte.
            auto len = std::size_t{ 1 };
            while ( i + len < text.size() && ( static_cast< unsigned char >( text[ i + len ] ) & 0xC0 ) == 0x80 )
                ++len;
            throw syntax_error( i, "a formula token", "'" + std::string{ text.substr( i, len ) } + "'" );
        }
        out.push_back( { match->kind, match->op, std::string{ match->text }, i } );
        i += match->text.size();
    }
    out.push_back( { token_kind::end, connective::atom, "", text.size() } );
    return out;
}

class parser
{
    std::vector< token > _tokens;
    std::size_t _pos = 0;

    [[nodiscard]] const token& peek() const { return _tokens[ _pos ]; }
    const token& advance() { return _tokens[ _pos++ ]; }

    [[noreturn]] void fail( const std::string& expected ) const
    {
        const auto& t = peek();
        throw syntax_error( t.position, expected, t.kind == token_kind::end ? "end of input" : "'" + t.text + "'" );
    }

    formula arrow_level()
    {
        auto lhs = disj_level();
        while ( true )
        {
            if ( peek().kind == token_kind::minus )
            {
                advance();
                lhs = make_minus( lhs, disj_level() );
            }
            else if ( peek().kind == token_kind::implies )
            {
                advance();
                return make_implies( lhs, arrow_level() );
            }
            else
                return lhs;
        }
    }

    formula disj_level()
    {
        auto lhs = conj_level();
        while ( peek().kind == token_kind::disj )
        {
            advance();
            lhs = make_disj( lhs, conj_level() );
        }
        return lhs;
    }

    formula conj_level()
    {
        auto lhs = unary_level();
        while ( peek().kind == token_kind::conj )
        {
            advance();
            lhs = make_conj( lhs, unary_level() );
        }
        return lhs;
    }

    formula unary_level()
    {
        const auto& t = peek();
        switch ( t.kind )
        {
        case token_kind::unary:
        {
            const auto op = advance().op;
            return make( op, unary_level() );
        }
        case token_kind::identifier:
            return make_atom( advance().text );
        case token_kind::constant_bottom:
            advance();
            return make_bottom();
        case token_kind::constant_top:
            advance();
            return make_top();
        case token_kind::lparen:
        {
            advance();
            auto inner = arrow_level();
            if ( peek().kind != token_kind::rparen )
                fail( "')' or a binary operator" );
            advance();
            return inner;
        }
        default:
            fail( "an atom, constant, unary operator or '('" );
        }
    }

public:
    explicit parser( std::string_view text ) : _tokens{ tokenize( text ) } {}

    formula parse()
    {
        auto f = arrow_level();
        if ( peek().kind != token_kind::end )
            fail( "a binary operator or end of input" );
        return f;
    }
};

int binding( connective c )
{
    switch ( c )
    {
    case connective::implies:
    case connective::minus:
        return 1;
    case connective::disj:
        return 2;
    case connective::conj:
        return 3;
    default:
        return 4;
    }
}

void render( const formula& f, std::string& out )
{
    switch ( f->op )
    {
    case connective::atom:
        out += f->name;
        return;
    case connective::bottom:
    case connective::top:
        out += symbol( f->op );
        return;
    default:
        break;
    }

    auto child = [ & ]( const formula& c, bool parenthesise ) {
        if ( parenthesise )
            out += '(';
        render( c, out );
        if ( parenthesise )
            out += ')';
    };

    if ( is_unary( f->op ) )
    {
        out += symbol( f->op );
        child( f->left, binding( f->left->op ) < 4 );
        return;
    }

    const auto level = binding( f->op );
    const auto lb = binding( f->left->op );
    const auto rb = binding( f->right->op );
    bool left_parens = lb < level;
    bool right_parens = rb < level;
    if ( f->op == connective::implies )
        left_parens = lb <= level;
    else if ( f->op == connective::minus )
    {
        left_parens = lb < level || f->left->op == connective::implies;
        right_parens = rb <= level;
    }
    else
        right_parens = rb <= level; // & and | print left-nested chains bare
    child( f->left, left_parens );
    out += ' ';
    out += symbol( f->op );
    out += ' ';
    child( f->right, right_parens );
}

} // namespace

formula make_atom( std::string name ) { return make( connective::atom, nullptr, nullptr, std::move( name ) ); }
formula make_bottom() { return make( connective::bottom ); }
formula make_top() { return make( connective::top ); }
formula make_neg( formula f ) { return make( connective::neg, std::move( f ) ); }
formula make_conot( formula f ) { return make( connective::conot, std::move( f ) ); }
formula make_conj( formula a, formula b ) { return make( connective::conj, std::move( a ), std::move( b ) ); }
formula make_disj( formula a, formula b ) { return make( connective::disj, std::move( a ), std::move( b ) ); }
formula make_implies( formula a, formula b ) { return make( connective::implies, std::move( a ), std::move( b ) ); }
formula make_minus( formula a, formula b ) { return make( connective::minus, std::move( a ), std::move( b ) ); }
formula make_box( formula f ) { return make( connective::box, std::move( f ) ); }
formula make_diamond( formula f ) { return make( connective::diamond, std::move( f ) ); }

bool is_unary( connective c )
{
    return c == connective::neg || c == connective::conot || c == connective::box || c == connective::diamond;
}

bool is_binary( connective c )
{
    return c == connective::conj || c == connective::disj || c == connective::implies || c == connective::minus;
}

std::string_view symbol( connective c )
{
    switch ( c )
    {
    case connective::atom: return "atom";
    case connective::bottom: return "_|_";
    case connective::top: return "T";
    case connective::neg: return "!";
    case connective::conot: return "~";
    case connective::conj: return "&";
    case connective::disj: return "|";
    case connective::implies: return "->";
    case connective::minus: return "<-";
    case connective::box: return "[]";
    case connective::diamond: return "<>";
    }
    return "?";
}

formula parse_formula( std::string_view text )
{
    return parser{ text }.parse();
}

std::string to_string( const formula& f )
{
    std::string out;
    render( f, out );
    return out;
}

std::set< std::string > atoms_of( const formula& f )
{
    std::set< std::string > out;
    std::vector< const formula_node* > stack{ f.get() };
    while ( !stack.empty() )
    {
        const auto* n = stack.back();
        stack.pop_back();
        if ( n->op == connective::atom )
            out.insert( n->name );
        if ( n->left )
            stack.push_back( n->left.get() );
        if ( n->right )
            stack.push_back( n->right.get() );
    }
    return out;
}

std::size_t depth( const formula& f )
{
    std::size_t d = 0;
    if ( f->left )
        d = std::max( d, depth( f->left ) + 1 );
    if ( f->right )
        d = std::max( d, depth( f->right ) + 1 );
    return d;
}

bool same_formula( const formula& a, const formula& b )
{
    if ( a == b )
        return true;
    if ( !a || !b || a->op != b->op || a->name != b->name )
        return false;
    return same_formula( a->left, b->left ) && same_formula( a->right, b->right );
}

bool uses( const formula& f, connective c )
{
    if ( !f )
        return false;
    return f->op == c || uses( f->left, c ) || uses( f->right, c );
}

} // namespace biheyt
