#pragma once

#include "biheyt/lattice.hpp"
#include "biheyt/sets.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace biheyt
{

// Default cap on exhaustive topology enumeration (point count).
inline constexpr std::size_t default_max_points = 4;

/// A finite topological space on points 0..m-1 (m <= 64). The opens are
/// duplicate-free and kept in canonical subset order.
class finite_space
{
    std::size_t _points = 0;
    std::vector< point_set > _opens;

    finite_space( std::size_t points, std::vector< point_set > opens )
        : _points{ points }, _opens{ std::move( opens ) } {}

    friend finite_space validate_topology( std::size_t, std::vector< point_set > );
    friend finite_space generate_from_basis( std::size_t, const std::vector< point_set >& );

public:
    [[nodiscard]] std::size_t points() const { return _points; }
    [[nodiscard]] point_set full() const { return point_set::full( _points ); }
    [[nodiscard]] const std::vector< point_set >& opens() const { return _opens; }
    // Complements of the opens, in canonical order.
    [[nodiscard]] std::vector< point_set > closeds() const;
    [[nodiscard]] bool is_open( point_set s ) const;
    [[nodiscard]] bool is_closed( point_set s ) const;

    friend bool operator==( const finite_space&, const finite_space& ) = default;
};

/// Reflexive-transitive relation on m points.
class preorder
{
    std::size_t _points = 0;
    std::vector< point_set > _up; // _up[x] = { y | x R y }

public:
    preorder() = default;
    // Throws error unless `up` describes a reflexive, transitive relation.
    preorder( std::size_t points, std::vector< point_set > up );

    [[nodiscard]] std::size_t points() const { return _points; }
    [[nodiscard]] bool related( std::size_t x, std::size_t y ) const { return _up[ x ].contains( y ); }
    [[nodiscard]] point_set up( std::size_t x ) const { return _up[ x ]; }
    [[nodiscard]] bool symmetric() const;

    friend bool operator==( const preorder&, const preorder& ) = default;
};

/// Checks the topology axioms and returns the canonical space. Throws
/// topology_error naming the missing set or the witness pair.
finite_space validate_topology( std::size_t points, std::vector< point_set > opens );

point_set interior( const finite_space& space, point_set s );
point_set closure( const finite_space& space, point_set s );
point_set complement( const finite_space& space, point_set s );

/// Opens ordered by inclusion: meet is intersection, join is union, and
/// A -> B = int(A^c | B). Lattice element i is sets[i].
struct open_set_algebra
{
    finite_space space;
    std::vector< point_set > sets;
    heyting_algebra algebra;

    [[nodiscard]] element element_of( point_set s ) const;
    [[nodiscard]] point_set set_of( element e ) const { return sets[ e ]; }
};

/// Closed sets ordered by plain inclusion (empty set at the bottom):
/// meet is intersection, join is union and A <- B = cl(A & B^c).
struct closed_set_algebra
{
    finite_space space;
    std::vector< point_set > sets;
    coheyting_algebra algebra;

    [[nodiscard]] element element_of( point_set s ) const;
    [[nodiscard]] point_set set_of( element e ) const { return sets[ e ]; }
};

open_set_algebra open_lattice( const finite_space& space );
closed_set_algebra closed_lattice( const finite_space& space );

/// The coarsest topology containing `basis`, which is treated as a
/// subbasis: close under intersections, then unions.
finite_space generate_from_basis( std::size_t points, const std::vector< point_set >& basis );

preorder specialization_preorder( const finite_space& space );
// Opens are the up-closed sets of the preorder.
finite_space from_preorder( const preorder& order );

/// Every preorder on m points, ordered by the bit pattern of the
/// off-diagonal relation entries.
void for_each_preorder( std::size_t points, const std::function< void( const preorder& ) >& visit );

/// Every topology on m labelled points exactly once (through preorders).
/// Throws bound_exceeded when m > max_points.
std::vector< finite_space > enumerate_topologies( std::size_t points, std::size_t max_points = default_max_points );

// Named spaces.
finite_space discrete_space( std::size_t points );
finite_space indiscrete_space( std::size_t points );
finite_space sierpinski_space();        // opens {}, {0}, {0,1}
finite_space three_point_example();     // opens {}, {a}, {a,b}, X with a,b,c = 0,1,2

} // namespace biheyt
