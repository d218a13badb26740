#include "biheyt/topology.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>
#include <set>

namespace biheyt
{

namespace
{

std::string brace( point_set s )
{
    return "{" + s.to_string() + "}";
}

template < typename Sets >
finite_lattice inclusion_lattice( const Sets& sets )
{
    const auto n = sets.size();
    std::vector< std::uint8_t > leq( n * n );
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < n; ++b )
            leq[ a * n + b ] = sets[ a ].subset_of( sets[ b ] ) ? 1 : 0;
    return finite_lattice::from_order( n, std::move( leq ) );
}

element index_in( const std::vector< point_set >& sets, point_set s )
{
    auto it = std::lower_bound( sets.begin(), sets.end(), s, canonical_less{} );
    if ( it == sets.end() || *it != s )
        throw error( "set " + brace( s ) + " is not an element of the algebra" );
    return static_cast< element >( it - sets.begin() );
}

} // namespace

std::vector< point_set > finite_space::closeds() const
{
    std::vector< point_set > out;
    out.reserve( _opens.size() );
    for ( auto u : _opens )
        out.push_back( full() - u );
    std::sort( out.begin(), out.end(), canonical_less{} );
    return out;
}

bool finite_space::is_open( point_set s ) const
{
    return std::binary_search( _opens.begin(), _opens.end(), s, canonical_less{} );
}

bool finite_space::is_closed( point_set s ) const
{
    return s.subset_of( full() ) && is_open( full() - s );
}

preorder::preorder( std::size_t points, std::vector< point_set > up ) : _points{ points }, _up{ std::move( up ) }
{
    if ( points > point_set::capacity )
        throw bound_exceeded( "preorder points", points, point_set::capacity );
    if ( _up.size() != points )
        throw error( "preorder needs one up-set per point" );
    for ( std::size_t x = 0; x < points; ++x )
    {
        if ( !_up[ x ].contains( x ) )
            throw error( "preorder is not reflexive at " + std::to_string( x ) );
        if ( !_up[ x ].subset_of( point_set::full( points ) ) )
            throw error( "preorder relates point " + std::to_string( x ) + " outside the point range" );
        for ( auto y : _up[ x ].members() )
            if ( !_up[ y ].subset_of( _up[ x ] ) )
                throw error( "preorder is not transitive at " + std::to_string( x ) + " -> " + std::to_string( y ) );
    }
}

bool preorder::symmetric() const
{
    for ( std::size_t x = 0; x < _points; ++x )
        for ( auto y : _up[ x ].members() )
            if ( !_up[ y ].contains( x ) )
                return false;
    return true;
}

finite_space validate_topology( std::size_t points, std::vector< point_set > opens )
{
    if ( points > point_set::capacity )
        throw bound_exceeded( "space points", points, point_set::capacity );
    const auto full = point_set::full( points );
    for ( auto u : opens )
        if ( !u.subset_of( full ) )
            throw error( "open " + brace( u ) + " mentions a point outside 0.." + std::to_string( points ) );

    std::sort( opens.begin(), opens.end(), canonical_less{} );
    opens.erase( std::unique( opens.begin(), opens.end() ), opens.end() );

    auto has = [ & ]( point_set s ) { return std::binary_search( opens.begin(), opens.end(), s, canonical_less{} ); };
    if ( !has( point_set{} ) )
        throw topology_error( topology_error::kind::missing_empty_or_full, "missing empty set among the opens" );
    if ( !has( full ) )
        throw topology_error( topology_error::kind::missing_empty_or_full, "missing full set among the opens" );

    for ( std::size_t i = 0; i < opens.size(); ++i )
        for ( std::size_t j = i + 1; j < opens.size(); ++j )
        {
            if ( !has( opens[ i ] & opens[ j ] ) )
                throw topology_error( topology_error::kind::not_closed_under_intersection,
                                      "not closed under intersection: " + brace( opens[ i ] ) + " & " +
                                          brace( opens[ j ] ),
                                      i, j );
            if ( !has( opens[ i ] | opens[ j ] ) )
                throw topology_error( topology_error::kind::not_closed_under_union,
                                      "not closed under union: " + brace( opens[ i ] ) + " | " + brace( opens[ j ] ),
                                      i, j );
        }

    return finite_space{ points, std::move( opens ) };
}

point_set interior( const finite_space& space, point_set s )
{
    point_set out;
    for ( auto u : space.opens() )
        if ( u.subset_of( s ) )
            out = out | u;
    return out;
}

point_set closure( const finite_space& space, point_set s )
{
    point_set out = space.full();
    for ( auto c : space.closeds() )
        if ( s.subset_of( c ) )
            out = out & c;
    return out;
}

point_set complement( const finite_space& space, point_set s )
{
    return space.full() - s;
}

element open_set_algebra::element_of( point_set s ) const
{
    return index_in( sets, s );
}

element closed_set_algebra::element_of( point_set s ) const
{
    return index_in( sets, s );
}

open_set_algebra open_lattice( const finite_space& space )
{
    auto sets = space.opens();
    return open_set_algebra{ space, sets, heyting_algebra{ inclusion_lattice( sets ) } };
}

closed_set_algebra closed_lattice( const finite_space& space )
{
    auto sets = space.closeds();
    return closed_set_algebra{ space, sets, coheyting_algebra{ inclusion_lattice( sets ) } };
}

finite_space generate_from_basis( std::size_t points, const std::vector< point_set >& basis )
{
    if ( points > point_set::capacity )
        throw bound_exceeded( "space points", points, point_set::capacity );
    const auto full = point_set::full( points );

    // Finite intersections; the empty intersection is the full set.
    std::set< point_set, canonical_less > meets{ full };
    for ( auto b : basis )
    {
        if ( !b.subset_of( full ) )
            throw error( "basis set " + brace( b ) + " mentions a point outside 0.." + std::to_string( points ) );
        std::vector< point_set > fresh;
        for ( auto m : meets )
            fresh.push_back( m & b );
        meets.insert( fresh.begin(), fresh.end() );
    }

    std::set< point_set, canonical_less > opens{ point_set{} };
    for ( auto m : meets )
    {
        std::vector< point_set > fresh;
        for ( auto u : opens )
            fresh.push_back( u | m );
        opens.insert( fresh.begin(), fresh.end() );
    }
    return finite_space{ points, { opens.begin(), opens.end() } };
}

preorder specialization_preorder( const finite_space& space )
{
    std::vector< point_set > up( space.points() );
    for ( std::size_t x = 0; x < space.points(); ++x )
    {
        point_set smallest = space.full();
        for ( auto u : space.opens() )
            if ( u.contains( x ) )
                smallest = smallest & u;
        up[ x ] = smallest;
    }
    return preorder{ space.points(), std::move( up ) };
}

finite_space from_preorder( const preorder& order )
{
    // Up-sets are exactly the unions of principal up-sets.
    std::vector< point_set > principal;
    for ( std::size_t x = 0; x < order.points(); ++x )
        principal.push_back( order.up( x ) );

    std::set< point_set, canonical_less > opens{ point_set{} };
    for ( auto p : principal )
    {
        std::vector< point_set > fresh;
        for ( auto u : opens )
            fresh.push_back( u | p );
        opens.insert( fresh.begin(), fresh.end() );
    }
    opens.insert( point_set::full( order.points() ) );
    return validate_topology( order.points(), { opens.begin(), opens.end() } );
}

void for_each_preorder( std::size_t points, const std::function< void( const preorder& ) >& visit )
{
    std::vector< std::pair< std::size_t, std::size_t > > slots;
    for ( std::size_t x = 0; x < points; ++x )
        for ( std::size_t y = 0; y < points; ++y )
            if ( x != y )
                slots.emplace_back( x, y );
    if ( slots.size() >= 63 )
        throw bound_exceeded( "preorder enumeration points", points, 8 );

    std::vector< point_set > up( points );
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << slots.size() ); ++mask )
    {
        for ( std::size_t x = 0; x < points; ++x )
            up[ x ] = point_set::from_bits( std::uint64_t{ 1 } << x );
        for ( std::size_t s = 0; s < slots.size(); ++s )
            if ( ( mask >> s ) & 1U )
                up[ slots[ s ].first ].insert( slots[ s ].second );

        bool transitive = true;
        for ( std::size_t x = 0; x < points && transitive; ++x )
            for ( auto y : up[ x ].members() )
                if ( !up[ y ].subset_of( up[ x ] ) )
                {
                    transitive = false;
                    break;
                }
        if ( transitive )
            visit( preorder{ points, up } );
    }
}

std::vector< finite_space > enumerate_topologies( std::size_t points, std::size_t max_points )
{
    if ( points > max_points )
        throw bound_exceeded( "topology enumeration points", points, max_points );
    std::vector< finite_space > out;
    for_each_preorder( points, [ & ]( const preorder& p ) { out.push_back( from_preorder( p ) ); } );
    return out;
}

finite_space discrete_space( std::size_t points )
{
    std::vector< point_set > singletons;
    for ( std::size_t x = 0; x < points; ++x )
        singletons.push_back( point_set{ x } );
    return generate_from_basis( points, singletons );
}

finite_space indiscrete_space( std::size_t points )
{
    return validate_topology( points, { point_set{}, point_set::full( points ) } );
}

finite_space sierpinski_space()
{
    return validate_topology( 2, { point_set{}, point_set{ 0 }, point_set{ 0, 1 } } );
}

finite_space three_point_example()
{
    return validate_topology( 3, { point_set{}, point_set{ 0 }, point_set{ 0, 1 }, point_set{ 0, 1, 2 } } );
}

} // namespace biheyt
