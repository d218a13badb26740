#include "biheyt/lattice.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace biheyt
{

namespace
{

// Greatest element of `candidates` under leq, if the set has one.
template < typename Leq >
std::optional< element > greatest( const std::vector< element >& candidates, Leq&& leq )
{
    for ( auto g : candidates )
        if ( std::all_of( candidates.begin(), candidates.end(), [ & ]( element c ) { return leq( c, g ); } ) )
            return g;
    return std::nullopt;
}

void require_distributive( const finite_lattice& lattice )
{
    if ( const auto& w = lattice.distributivity_witness() )
        throw not_distributive( ( *w )[ 0 ], ( *w )[ 1 ], ( *w )[ 2 ] );
}

} // namespace

std::optional< finite_lattice > finite_lattice::try_from_order( std::size_t n, std::vector< std::uint8_t > closed_leq )
{
    try
    {
        return from_order( n, std::move( closed_leq ) );
    }
    catch ( const error& )
    {
        return std::nullopt;
    }
}

finite_lattice finite_lattice::from_order( std::size_t n, std::vector< std::uint8_t > closed_leq )
{
    if ( n == 0 )
        throw not_bounded( "the empty poset has no bottom or top" );
    if ( closed_leq.size() != n * n )
        throw error( "order matrix has wrong dimensions" );

    auto leq = [ & ]( element a, element b ) { return closed_leq[ a * n + b ] != 0; };

    for ( element a = 0; a < n; ++a )
    {
        if ( !leq( a, a ) )
            throw error( "order is not reflexive at " + std::to_string( a ) );
        for ( element b = a + 1; b < n; ++b )
            if ( leq( a, b ) && leq( b, a ) )
                throw not_a_partial_order( a, b );
    }
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
            if ( leq( a, b ) )
                for ( element c = 0; c < n; ++c )
                    if ( leq( b, c ) && !leq( a, c ) )
                        throw error( "order is not transitive at " + std::to_string( a ) + " <= " +
                                     std::to_string( b ) + " <= " + std::to_string( c ) );

    finite_lattice out;
    out._n = n;
    out._meet.assign( n * n, 0 );
    out._join.assign( n * n, 0 );

    std::vector< element > bounds;
    for ( element a = 0; a < n; ++a )
    {
        for ( element b = a; b < n; ++b )
        {
            bounds.clear();
            for ( element c = 0; c < n; ++c )
                if ( leq( c, a ) && leq( c, b ) )
                    bounds.push_back( c );
            auto m = greatest( bounds, leq );
            if ( !m )
                throw not_a_lattice( "meet", a, b );

            bounds.clear();
            for ( element c = 0; c < n; ++c )
                if ( leq( a, c ) && leq( b, c ) )
                    bounds.push_back( c );
            auto j = greatest( bounds, [ & ]( element x, element y ) { return leq( y, x ); } );
            if ( !j )
                throw not_a_lattice( "join", a, b );

            out._meet[ a * n + b ] = out._meet[ b * n + a ] = *m;
            out._join[ a * n + b ] = out._join[ b * n + a ] = *j;
        }
    }

    std::vector< element > all( n );
    std::iota( all.begin(), all.end(), element{ 0 } );
    auto bottom = greatest( all, [ & ]( element x, element y ) { return leq( y, x ); } );
    auto top = greatest( all, leq );
    if ( !bottom || !top )
        throw not_bounded( "no global bottom or top" );
    out._bottom = *bottom;
    out._top = *top;
    out._leq = std::move( closed_leq );

    for ( element a = 0; a < n && !out._distributivity_witness; ++a )
        for ( element b = 0; b < n && !out._distributivity_witness; ++b )
            for ( element c = 0; c < n; ++c )
                if ( out.meet( a, out.join( b, c ) ) != out.join( out.meet( a, b ), out.meet( a, c ) ) )
                {
                    out._distributivity_witness = std::array< element, 3 >{ a, b, c };
                    break;
                }

    return out;
}

std::vector< std::pair< element, element > > finite_lattice::hasse() const
{
    std::vector< std::pair< element, element > > out;
    for ( element a = 0; a < _n; ++a )
        for ( element b = 0; b < _n; ++b )
        {
            if ( a == b || !leq( a, b ) )
                continue;
            bool covering = true;
            for ( element c = 0; c < _n && covering; ++c )
                if ( c != a && c != b && leq( a, c ) && leq( c, b ) )
                    covering = false;
            if ( covering )
                out.emplace_back( a, b );
        }
    return out;
}

finite_lattice build_lattice( std::size_t n, const std::vector< std::pair< element, element > >& leq_pairs )
{
    std::vector< std::uint8_t > leq( n * n, 0 );
    for ( element a = 0; a < n; ++a )
        leq[ a * n + a ] = 1;
    for ( auto [ a, b ] : leq_pairs )
    {
        if ( a >= n || b >= n )
            throw error( "pair (" + std::to_string( a ) + ", " + std::to_string( b ) +
                         ") references an element outside 0.." + std::to_string( n ) );
        leq[ a * n + b ] = 1;
    }
    // Warshall
    for ( element k = 0; k < n; ++k )
        for ( element i = 0; i < n; ++i )
            if ( leq[ i * n + k ] )
                for ( element j = 0; j < n; ++j )
                    if ( leq[ k * n + j ] )
                        leq[ i * n + j ] = 1;
    return finite_lattice::from_order( n, std::move( leq ) );
}

bool check_distributive( const finite_lattice& lattice )
{
    return lattice.distributive();
}

element heyting_implies( const finite_lattice& lattice, element a, element b )
{
    require_distributive( lattice );
    element result = lattice.bottom();
    for ( element x = 0; x < lattice.size(); ++x )
        if ( lattice.leq( lattice.meet( a, x ), b ) )
            result = lattice.join( result, x );
    return result;
}

element heyting_not( const finite_lattice& lattice, element a )
{
    return heyting_implies( lattice, a, lattice.bottom() );
}

element coheyting_minus( const finite_lattice& lattice, element a, element b )
{
    require_distributive( lattice );
    element result = lattice.top();
    for ( element x = 0; x < lattice.size(); ++x )
        if ( lattice.leq( a, lattice.join( b, x ) ) )
            result = lattice.meet( result, x );
    return result;
}

element coheyting_not( const finite_lattice& lattice, element a )
{
    return coheyting_minus( lattice, lattice.top(), a );
}

element boundary( const finite_lattice& lattice, element a )
{
    return lattice.meet( a, coheyting_not( lattice, a ) );
}

finite_lattice dualize( const finite_lattice& lattice )
{
    const auto n = lattice.size();
    std::vector< std::uint8_t > leq( n * n );
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
            leq[ a * n + b ] = lattice.leq( b, a ) ? 1 : 0;
    return finite_lattice::from_order( n, std::move( leq ) );
}

bool is_boolean( const finite_lattice& lattice )
{
    require_distributive( lattice );
    for ( element a = 0; a < lattice.size(); ++a )
    {
        bool complemented = false;
        for ( element x = 0; x < lattice.size() && !complemented; ++x )
            complemented = lattice.meet( a, x ) == lattice.bottom() && lattice.join( a, x ) == lattice.top();
        if ( !complemented )
            return false;
    }
    return true;
}

heyting_algebra::heyting_algebra( finite_lattice base ) : _base{ std::move( base ) }
{
    require_distributive( _base );
    const auto n = _base.size();
    _implies.resize( n * n );
    _not.resize( n );
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
            _implies[ a * n + b ] = heyting_implies( _base, a, b );
    for ( element a = 0; a < n; ++a )
        _not[ a ] = implies( a, _base.bottom() );
}

coheyting_algebra::coheyting_algebra( finite_lattice base ) : _base{ std::move( base ) }
{
    require_distributive( _base );
    const auto n = _base.size();
    _minus.resize( n * n );
    _conot.resize( n );
    _boundary.resize( n );
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
            _minus[ a * n + b ] = coheyting_minus( _base, a, b );
    for ( element a = 0; a < n; ++a )
    {
        _conot[ a ] = minus( _base.top(), a );
        _boundary[ a ] = _base.meet( a, _conot[ a ] );
    }
}

std::vector< finite_lattice > enumerate_lattices( std::size_t max_size, bool distributive_only )
{
    std::vector< finite_lattice > out;
    for ( std::size_t n = 1; n <= max_size; ++n )
    {
        if ( n <= 2 )
        {
            out.push_back( chain_lattice( n ) );
            continue;
        }

        // Middle elements 1..k. Enumerate strict orders compatible with the
        // natural labelling (i < j in the order only if i < j as indices):
        // every finite poset has such a labelling.
        const std::size_t k = n - 2;
        std::vector< std::pair< element, element > > slots;
        for ( element i = 1; i <= k; ++i )
            for ( element j = i + 1; j <= k; ++j )
                slots.emplace_back( i, j );

        std::set< std::vector< std::uint8_t > > codes;
        std::vector< element > perm( k );
        for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << slots.size() ); ++mask )
        {
            std::vector< std::uint8_t > leq( n * n, 0 );
            for ( element a = 0; a < n; ++a )
            {
                leq[ a * n + a ] = 1;
                leq[ 0 * n + a ] = 1;
                leq[ a * n + ( n - 1 ) ] = 1;
            }
            for ( std::size_t s = 0; s < slots.size(); ++s )
                if ( ( mask >> s ) & 1U )
                    leq[ slots[ s ].first * n + slots[ s ].second ] = 1;

            bool transitive = true;
            for ( element a = 1; a <= k && transitive; ++a )
                for ( element b = a + 1; b <= k && transitive; ++b )
                    if ( leq[ a * n + b ] )
                        for ( element c = b + 1; c <= k; ++c )
                            if ( leq[ b * n + c ] && !leq[ a * n + c ] )
                            {
                                transitive = false;
                                break;
                            }
            if ( !transitive )
                continue;

            auto lattice = finite_lattice::try_from_order( n, leq );
            if ( !lattice || ( distributive_only && !lattice->distributive() ) )
                continue;

            // Canonical code: lexicographically least relabelled matrix.
            std::iota( perm.begin(), perm.end(), element{ 1 } );
            std::vector< std::uint8_t > best;
            std::vector< std::uint8_t > code( n * n );
            auto relabel = [ & ]( element x ) { return ( x == 0 || x == n - 1 ) ? x : perm[ x - 1 ]; };
            do
            {
                for ( element a = 0; a < n; ++a )
                    for ( element b = 0; b < n; ++b )
                        code[ relabel( a ) * n + relabel( b ) ] = leq[ a * n + b ];
                if ( best.empty() || code < best )
                    best = code;
            } while ( std::next_permutation( perm.begin(), perm.end() ) );
            codes.insert( std::move( best ) );
        }

        // std::set orders the codes; larger codes come first so the chain
        // (densest order matrix) is listed first.
        for ( auto it = codes.rbegin(); it != codes.rend(); ++it )
            out.push_back( finite_lattice::from_order( n, *it ) );
    }
    return out;
}

finite_lattice chain_lattice( std::size_t n )
{
    std::vector< std::pair< element, element > > pairs;
    for ( element i = 0; i + 1 < n; ++i )
        pairs.emplace_back( i, i + 1 );
    return build_lattice( n, pairs );
}

finite_lattice boolean_lattice( std::size_t atoms )
{
    const std::size_t n = std::size_t{ 1 } << atoms;
    std::vector< std::pair< element, element > > pairs;
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
            if ( a != b && ( a & ~b ) == 0 )
                pairs.emplace_back( a, b );
    return build_lattice( n, pairs );
}

finite_lattice diamond_m3()
{
    return build_lattice( 5, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 4 }, { 2, 4 }, { 3, 4 } } );
}

finite_lattice pentagon_n5()
{
    return build_lattice( 5, { { 0, 1 }, { 1, 2 }, { 2, 4 }, { 0, 3 }, { 3, 4 } } );
}

} // namespace biheyt
