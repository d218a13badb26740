#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biheyt
{

// Every failure the library reports derives from this. The message always
// names the offending element, pair, line or token.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class not_a_partial_order : public error
{
public:
    not_a_partial_order( std::size_t a, std::size_t b )
        : error( "not a partial order: " + std::to_string( a ) + " <= " + std::to_string( b ) +
                 " and " + std::to_string( b ) + " <= " + std::to_string( a ) )
        , first{ a }, second{ b } {}

    std::size_t first;
    std::size_t second;
};

class not_a_lattice : public error
{
public:
    not_a_lattice( std::string operation, std::size_t a, std::size_t b )
        : error( "not a lattice: {" + std::to_string( a ) + ", " + std::to_string( b ) + "} has no " +
                 operation )
        , operation{ std::move( operation ) }, first{ a }, second{ b } {}

    std::string operation; // "meet" or "join"
    std::size_t first;
    std::size_t second;
};

class not_bounded : public error
{
public:
    explicit not_bounded( const std::string& what ) : error( "not bounded: " + what ) {}
};

class not_distributive : public error
{
public:
    not_distributive( std::size_t a, std::size_t b, std::size_t c )
        : error( "not distributive: a=" + std::to_string( a ) + " b=" + std::to_string( b ) +
                 " c=" + std::to_string( c ) + " violate a&(b|c) = (a&b)|(a&c)" )
        , a{ a }, b{ b }, c{ c } {}

    std::size_t a, b, c;
};

class bound_exceeded : public error
{
public:
    bound_exceeded( const std::string& what, std::size_t requested, std::size_t bound )
        : error( what + ": " + std::to_string( requested ) + " exceeds bound " + std::to_string( bound ) )
        , requested{ requested }, bound{ bound } {}

    std::size_t requested;
    std::size_t bound;
};

class topology_error : public error
{
public:
    enum class kind { missing_empty_or_full, not_closed_under_intersection, not_closed_under_union };

    topology_error( kind k, std::string message, std::size_t a = 0, std::size_t b = 0 )
        : error( std::move( message ) ), reason{ k }, first{ a }, second{ b } {}

    kind reason;
    // Indices into the opens as given (for the closure failures).
    std::size_t first;
    std::size_t second;
};

class wrong_kind : public error
{
public:
    using error::error;
};

class not_a_homomorphism : public error
{
public:
    not_a_homomorphism( std::string op, std::size_t a, std::size_t b )
        : error( "not a homomorphism: " + op + " not preserved at (" + std::to_string( a ) + ", " +
                 std::to_string( b ) + ")" )
        , operation{ std::move( op ) }, first{ a }, second{ b } {}

    std::string operation;
    std::size_t first;
    std::size_t second;
};

class not_a_congruence : public error
{
public:
    using error::error;
};

class unsupported_connective : public error
{
public:
    unsupported_connective( const std::string& connective, const std::string& context )
        : error( "unsupported connective " + connective + " in " + context ), connective{ connective } {}

    std::string connective;
};

class unbound_atom : public error
{
public:
    explicit unbound_atom( const std::string& atom )
        : error( "unbound atom '" + atom + "'" ), atom{ atom } {}

    std::string atom;
};

class syntax_error : public error
{
public:
    syntax_error( std::size_t position, std::string expected, const std::string& found )
        : error( "syntax error at position " + std::to_string( position ) + ": expected " + expected +
                 ", found " + found )
        , position{ position }, expected{ std::move( expected ) } {}

    std::size_t position;
    std::string expected;
};

class parse_error : public error
{
public:
    parse_error( std::size_t line, const std::string& reason )
        : error( "line " + std::to_string( line ) + ": " + reason ), line{ line } {}

    std::size_t line;
};

} // namespace biheyt
