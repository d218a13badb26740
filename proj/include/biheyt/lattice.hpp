#pragma once

#include "biheyt/sets.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace biheyt
{

// Lattice elements are dense indices 0..n-1.
using element = std::size_t;

/// A finite bounded lattice. The order is stored closed (full relation) and
/// meet/join as complete tables, so every query is a table lookup. Values
/// are immutable once built.
class finite_lattice
{
    std::size_t _n = 0;
    std::vector< std::uint8_t > _leq;
    std::vector< element > _meet;
    std::vector< element > _join;
    element _bottom = 0;
    element _top = 0;
    std::optional< std::array< element, 3 > > _distributivity_witness;

    finite_lattice() = default;

public:
    /// Validates an already reflexive-transitive relation given as an n*n
    /// row-major 0/1 matrix and derives the meet/join tables.
    static finite_lattice from_order( std::size_t n, std::vector< std::uint8_t > closed_leq );
    // As from_order, but returns nullopt instead of throwing.
    static std::optional< finite_lattice > try_from_order( std::size_t n, std::vector< std::uint8_t > closed_leq );

    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] bool leq( element a, element b ) const { return _leq[ a * _n + b ] != 0; }
    [[nodiscard]] element meet( element a, element b ) const { return _meet[ a * _n + b ]; }
    [[nodiscard]] element join( element a, element b ) const { return _join[ a * _n + b ]; }
    [[nodiscard]] element bottom() const { return _bottom; }
    [[nodiscard]] element top() const { return _top; }

    [[nodiscard]] bool distributive() const { return !_distributivity_witness.has_value(); }
    // A triple (a, b, c) with a&(b|c) != (a&b)|(a&c), if any.
    [[nodiscard]] const std::optional< std::array< element, 3 > >& distributivity_witness() const
    {
        return _distributivity_witness;
    }

    // Covering pairs (a, b): a < b with nothing strictly between, sorted.
    [[nodiscard]] std::vector< std::pair< element, element > > hasse() const;

    friend bool operator==( const finite_lattice& a, const finite_lattice& b )
    {
        return a._n == b._n && a._leq == b._leq;
    }
};

/// Builds the lattice whose order is the reflexive-transitive closure of
/// `leq_pairs` on n elements. Throws not_a_partial_order, not_a_lattice or
/// not_bounded.
finite_lattice build_lattice( std::size_t n, const std::vector< std::pair< element, element > >& leq_pairs );

bool check_distributive( const finite_lattice& lattice );

// Single queries by direct candidate scan. All of these throw
// not_distributive on a non-distributive lattice.
element heyting_implies( const finite_lattice& lattice, element a, element b );
element heyting_not( const finite_lattice& lattice, element a );
element coheyting_minus( const finite_lattice& lattice, element a, element b );
element coheyting_not( const finite_lattice& lattice, element a );
element boundary( const finite_lattice& lattice, element a );

// Same elements, reversed order; meet/join and bottom/top swap.
finite_lattice dualize( const finite_lattice& lattice );

// Every element has a complement. Throws not_distributive.
bool is_boolean( const finite_lattice& lattice );

/// A distributive lattice with its implication and negation tables
/// precomputed.
class heyting_algebra
{
    finite_lattice _base;
    std::vector< element > _implies;
    std::vector< element > _not;

public:
    explicit heyting_algebra( finite_lattice base );

    [[nodiscard]] const finite_lattice& lattice() const { return _base; }
    [[nodiscard]] std::size_t size() const { return _base.size(); }
    [[nodiscard]] element implies( element a, element b ) const { return _implies[ a * _base.size() + b ]; }
    [[nodiscard]] element negate( element a ) const { return _not[ a ]; }
};

/// A distributive lattice with co-implication (subtraction), co-negation and
/// boundary tables precomputed.
class coheyting_algebra
{
    finite_lattice _base;
    std::vector< element > _minus;
    std::vector< element > _conot;
    std::vector< element > _boundary;

public:
    explicit coheyting_algebra( finite_lattice base );

    [[nodiscard]] const finite_lattice& lattice() const { return _base; }
    [[nodiscard]] std::size_t size() const { return _base.size(); }
    // a <- b: least x with a <= b | x.
    [[nodiscard]] element minus( element a, element b ) const { return _minus[ a * _base.size() + b ]; }
    [[nodiscard]] element conot( element a ) const { return _conot[ a ]; }
    [[nodiscard]] element boundary( element a ) const { return _boundary[ a ]; }
};

/// All lattices with at most `max_size` elements, one per isomorphism
/// class. Each representative has bottom = 0 and top = n-1, and the output
/// is sorted by size, then by a canonical code of the order.
std::vector< finite_lattice > enumerate_lattices( std::size_t max_size, bool distributive_only = false );

// Standard shapes used throughout the tests and the CLI.
finite_lattice chain_lattice( std::size_t n );
finite_lattice boolean_lattice( std::size_t atoms );
finite_lattice diamond_m3();
finite_lattice pentagon_n5();

} // namespace biheyt
