#include "biheyt/quotient.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace biheyt
{

namespace
{

struct failure
{
    std::string op;
    element a;
    element b;
};

std::optional< failure > first_failure( const std::vector< element >& map, const finite_lattice& source,
                                        const finite_lattice& target, hom_flavor flavor )
{
    if ( map.size() != source.size() )
        throw error( "map has " + std::to_string( map.size() ) + " entries for a lattice of " +
                     std::to_string( source.size() ) + " elements" );
    for ( element a = 0; a < map.size(); ++a )
        if ( map[ a ] >= target.size() )
            throw error( "map sends " + std::to_string( a ) + " outside the target" );

    if ( map[ source.bottom() ] != target.bottom() )
        return failure{ "bottom", source.bottom(), source.bottom() };
    if ( map[ source.top() ] != target.top() )
        return failure{ "top", source.top(), source.top() };

    const auto n = source.size();
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
        {
            if ( map[ source.meet( a, b ) ] != target.meet( map[ a ], map[ b ] ) )
                return failure{ "meet", a, b };
            if ( map[ source.join( a, b ) ] != target.join( map[ a ], map[ b ] ) )
                return failure{ "join", a, b };
        }

    if ( flavor == hom_flavor::heyting )
    {
        const heyting_algebra src{ source };
        const heyting_algebra tgt{ target };
        for ( element a = 0; a < n; ++a )
            for ( element b = 0; b < n; ++b )
                if ( map[ src.implies( a, b ) ] != tgt.implies( map[ a ], map[ b ] ) )
                    return failure{ "implies", a, b };
    }
    else if ( flavor == hom_flavor::coheyting )
    {
        const coheyting_algebra src{ source };
        const coheyting_algebra tgt{ target };
        for ( element a = 0; a < n; ++a )
            for ( element b = 0; b < n; ++b )
                if ( map[ src.minus( a, b ) ] != tgt.minus( map[ a ], map[ b ] ) )
                    return failure{ "minus", a, b };
    }
    return std::nullopt;
}

// Union-find over lattice elements.
class partition_builder
{
    std::vector< std::size_t > _parent;

public:
    explicit partition_builder( std::size_t n ) : _parent( n )
    {
        std::iota( _parent.begin(), _parent.end(), std::size_t{ 0 } );
    }

    std::size_t find( std::size_t x )
    {
        while ( _parent[ x ] != x )
            x = _parent[ x ] = _parent[ _parent[ x ] ];
        return x;
    }

    bool merge( std::size_t a, std::size_t b )
    {
        a = find( a );
        b = find( b );
        if ( a == b )
            return false;
        _parent[ std::max( a, b ) ] = std::min( a, b );
        return true;
    }

    std::vector< std::size_t > labels()
    {
        std::vector< std::size_t > out( _parent.size() );
        for ( std::size_t i = 0; i < out.size(); ++i )
            out[ i ] = find( i );
        return out;
    }
};

// Smallest lattice congruence containing the seeded merges.
congruence close_under_operations( const finite_lattice& lattice, partition_builder uf )
{
    const auto n = lattice.size();
    for ( bool changed = true; changed; )
    {
        changed = false;
        for ( element a = 0; a < n; ++a )
            for ( element b = a + 1; b < n; ++b )
            {
                if ( uf.find( a ) != uf.find( b ) )
                    continue;
                for ( element c = 0; c < n; ++c )
                {
                    changed |= uf.merge( lattice.meet( a, c ), lattice.meet( b, c ) );
                    changed |= uf.merge( lattice.join( a, c ), lattice.join( b, c ) );
                }
            }
    }
    return congruence{ uf.labels() };
}

std::string describe( const element_set& s )
{
    return "{" + s.to_string() + "}";
}

} // namespace

bool lattice_hom::surjective() const
{
    std::vector< bool > hit( _target.size(), false );
    for ( auto e : _map )
        hit[ e ] = true;
    return std::all_of( hit.begin(), hit.end(), []( bool h ) { return h; } );
}

lattice_hom check_hom( std::vector< element > map, const finite_lattice& source, const finite_lattice& target,
                       hom_flavor flavor )
{
    if ( auto f = first_failure( map, source, target, flavor ) )
        throw not_a_homomorphism( f->op, f->a, f->b );
    return lattice_hom{ source, target, std::move( map ), flavor };
}

std::optional< std::string > hom_failure( const std::vector< element >& map, const finite_lattice& source,
                                          const finite_lattice& target, hom_flavor flavor )
{
    if ( auto f = first_failure( map, source, target, flavor ) )
        return not_a_homomorphism( f->op, f->a, f->b ).what();
    return std::nullopt;
}

lattice_hom identity_hom( const finite_lattice& lattice, hom_flavor flavor )
{
    std::vector< element > map( lattice.size() );
    std::iota( map.begin(), map.end(), element{ 0 } );
    return check_hom( std::move( map ), lattice, lattice, flavor );
}

lattice_hom compose( const lattice_hom& second, const lattice_hom& first )
{
    if ( !( first.target() == second.source() ) )
        throw error( "cannot compose: first target differs from second source" );
    std::vector< element > map( first.source().size() );
    for ( element a = 0; a < map.size(); ++a )
        map[ a ] = second( first( a ) );
    const auto flavor = first.flavor() == second.flavor() ? first.flavor() : hom_flavor::lattice;
    return check_hom( std::move( map ), first.source(), second.target(), flavor );
}

std::vector< lattice_hom > enumerate_homs( const finite_lattice& source, const finite_lattice& target,
                                           hom_flavor flavor )
{
    const auto n = source.size();
    const auto k = target.size();
    std::vector< lattice_hom > out;
    std::vector< element > map( n, 0 );

    // Assign elements in index order; prune as soon as a meet/join whose
    // three elements are all assigned disagrees.
    std::function< void( element ) > extend = [ & ]( element i ) {
        if ( i == n )
        {
            if ( !first_failure( map, source, target, flavor ) )
                out.push_back( check_hom( map, source, target, flavor ) );
            return;
        }
        for ( element v = 0; v < k; ++v )
        {
            if ( i == source.bottom() && v != target.bottom() )
                continue;
            if ( i == source.top() && v != target.top() )
                continue;
            map[ i ] = v;
            bool consistent = true;
            for ( element a = 0; a <= i && consistent; ++a )
                for ( element b = 0; b <= i && consistent; ++b )
                {
                    const auto m = source.meet( a, b );
                    const auto j = source.join( a, b );
                    if ( m <= i && map[ m ] != target.meet( map[ a ], map[ b ] ) )
                        consistent = false;
                    if ( j <= i && map[ j ] != target.join( map[ a ], map[ b ] ) )
                        consistent = false;
                }
            if ( consistent )
                extend( i + 1 );
        }
    };
    extend( 0 );
    return out;
}

element_set kernel( const lattice_hom& hom )
{
    element_set out( hom.source().size() );
    for ( element a = 0; a < hom.source().size(); ++a )
        if ( hom( a ) == hom.target().bottom() )
            out.insert( a );
    return out;
}

element_set cokernel( const lattice_hom& hom )
{
    element_set out( hom.source().size() );
    for ( element a = 0; a < hom.source().size(); ++a )
        if ( hom( a ) == hom.target().top() )
            out.insert( a );
    return out;
}

std::vector< lattice_hom > two_valued_homs( const finite_lattice& lattice )
{
    auto homs = enumerate_homs( lattice, chain_lattice( 2 ), hom_flavor::lattice );
    std::erase_if( homs, []( const lattice_hom& h ) { return !h.surjective(); } );
    return homs;
}

congruence::congruence( const std::vector< std::size_t >& labels ) : _n{ labels.size() }, _block_of( labels.size() )
{
    std::vector< std::size_t > renumber;
    std::vector< std::size_t > seen;
    for ( element a = 0; a < _n; ++a )
    {
        auto it = std::find( seen.begin(), seen.end(), labels[ a ] );
        std::size_t id;
        if ( it == seen.end() )
        {
            id = seen.size();
            seen.push_back( labels[ a ] );
            _blocks.emplace_back();
        }
        else
            id = static_cast< std::size_t >( it - seen.begin() );
        _block_of[ a ] = id;
        _blocks[ id ].push_back( a );
    }
}

void verify_congruence( const finite_lattice& lattice, const congruence& relation, hom_flavor flavor )
{
    const auto n = lattice.size();
    if ( relation.universe() != n )
        throw not_a_congruence( "relation and lattice differ in size" );

    std::optional< heyting_algebra > heyting;
    std::optional< coheyting_algebra > coheyting;
    if ( flavor == hom_flavor::heyting )
        heyting.emplace( lattice );
    if ( flavor == hom_flavor::coheyting )
        coheyting.emplace( lattice );

    auto fail = [ & ]( const std::string& op, element a, element b, element c, element d ) {
        throw not_a_congruence( "relation does not respect " + op + ": " + std::to_string( a ) + "~" +
                                std::to_string( b ) + " and " + std::to_string( c ) + "~" + std::to_string( d ) );
    };

    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
        {
            if ( !relation.related( a, b ) )
                continue;
            for ( element c = 0; c < n; ++c )
                for ( element d = 0; d < n; ++d )
                {
                    if ( !relation.related( c, d ) )
                        continue;
                    if ( !relation.related( lattice.meet( a, c ), lattice.meet( b, d ) ) )
                        fail( "meet", a, b, c, d );
                    if ( !relation.related( lattice.join( a, c ), lattice.join( b, d ) ) )
                        fail( "join", a, b, c, d );
                    if ( heyting && !relation.related( heyting->implies( a, c ), heyting->implies( b, d ) ) )
                        fail( "implies", a, b, c, d );
                    if ( coheyting && !relation.related( coheyting->minus( a, c ), coheyting->minus( b, d ) ) )
                        fail( "minus", a, b, c, d );
                }
        }
}

void require_ideal( const finite_lattice& lattice, const element_set& ideal )
{
    if ( ideal.universe() != lattice.size() )
        throw wrong_kind( "ideal is over a different lattice" );
    if ( ideal.empty() )
        throw wrong_kind( "ideal must be nonempty" );
    if ( ideal.contains( lattice.top() ) )
        throw wrong_kind( "ideal " + describe( ideal ) + " is improper (contains top)" );
    for ( auto a : ideal.members() )
        for ( element b = 0; b < lattice.size(); ++b )
        {
            if ( lattice.leq( b, a ) && !ideal.contains( b ) )
                throw wrong_kind( describe( ideal ) + " is not downward closed at " + std::to_string( b ) );
            if ( ideal.contains( b ) && !ideal.contains( lattice.join( a, b ) ) )
                throw wrong_kind( describe( ideal ) + " is not closed under join of " + std::to_string( a ) + " and " +
                                  std::to_string( b ) );
        }
}

void require_filter( const finite_lattice& lattice, const element_set& filter )
{
    if ( filter.universe() != lattice.size() )
        throw wrong_kind( "filter is over a different lattice" );
    if ( filter.empty() )
        throw wrong_kind( "filter must be nonempty" );
    if ( filter.contains( lattice.bottom() ) )
        throw wrong_kind( "filter " + describe( filter ) + " is improper (contains bottom)" );
    for ( auto a : filter.members() )
        for ( element b = 0; b < lattice.size(); ++b )
        {
            if ( lattice.leq( a, b ) && !filter.contains( b ) )
                throw wrong_kind( describe( filter ) + " is not upward closed at " + std::to_string( b ) );
            if ( filter.contains( b ) && !filter.contains( lattice.meet( a, b ) ) )
                throw wrong_kind( describe( filter ) + " is not closed under meet of " + std::to_string( a ) +
                                  " and " + std::to_string( b ) );
        }
}

congruence congruence_from_ideal( const heyting_algebra& algebra, const element_set& ideal )
{
    const auto& lattice = algebra.lattice();
    require_ideal( lattice, ideal );
    partition_builder uf( lattice.size() );
    for ( auto a : ideal.members() )
        uf.merge( a, lattice.bottom() );
    auto result = close_under_operations( lattice, std::move( uf ) );
    verify_congruence( lattice, result, hom_flavor::lattice );

    const auto& bottom_block = result.blocks()[ result.block_of( lattice.bottom() ) ];
    if ( bottom_block.size() != ideal.size() )
        throw not_a_congruence( "closure of ideal " + describe( ideal ) + " collapsed more than the ideal to bottom" );
    return result;
}

congruence congruence_from_filter( const heyting_algebra& algebra, const element_set& filter )
{
    const auto& lattice = algebra.lattice();
    require_filter( lattice, filter );
    partition_builder uf( lattice.size() );
    for ( auto a : filter.members() )
        uf.merge( a, lattice.top() );
    auto result = close_under_operations( lattice, std::move( uf ) );
    verify_congruence( lattice, result, hom_flavor::lattice );

    const auto& top_block = result.blocks()[ result.block_of( lattice.top() ) ];
    if ( top_block.size() != filter.size() )
        throw not_a_congruence( "closure of filter " + describe( filter ) + " collapsed more than the filter to top" );
    return result;
}

std::vector< std::uint8_t > biimplication_relation( const heyting_algebra& algebra, const element_set& members )
{
    const auto n = algebra.size();
    const auto& lattice = algebra.lattice();
    std::vector< std::uint8_t > out( n * n );
    for ( element x = 0; x < n; ++x )
        for ( element y = 0; y < n; ++y )
            out[ x * n + y ] = members.contains( lattice.meet( algebra.implies( x, y ), algebra.implies( y, x ) ) );
    return out;
}

std::vector< std::uint8_t > biconditional_relation( const heyting_algebra& algebra, const element_set& members )
{
    const auto n = algebra.size();
    std::vector< std::uint8_t > out( n * n );
    for ( element x = 0; x < n; ++x )
        for ( element y = 0; y < n; ++y )
            out[ x * n + y ] = members.contains( algebra.implies( x, y ) ) == members.contains( algebra.implies( y, x ) );
    return out;
}

bool same_relation( const congruence& relation, const std::vector< std::uint8_t >& matrix )
{
    const auto n = relation.universe();
    if ( matrix.size() != n * n )
        return false;
    for ( element x = 0; x < n; ++x )
        for ( element y = 0; y < n; ++y )
            if ( relation.related( x, y ) != ( matrix[ x * n + y ] != 0 ) )
                return false;
    return true;
}

quotient_result quotient( const finite_lattice& lattice, const congruence& relation, hom_flavor flavor )
{
    verify_congruence( lattice, relation, hom_flavor::lattice );

    const auto& blocks = relation.blocks();
    const auto k = blocks.size();
    std::vector< element > reps( k );
    for ( std::size_t b = 0; b < k; ++b )
        reps[ b ] = blocks[ b ].front();

    std::vector< std::uint8_t > leq( k * k );
    for ( std::size_t a = 0; a < k; ++a )
        for ( std::size_t b = 0; b < k; ++b )
            leq[ a * k + b ] = relation.block_of( lattice.meet( reps[ a ], reps[ b ] ) ) == a ? 1 : 0;
    auto result = finite_lattice::from_order( k, std::move( leq ) );

    for ( std::size_t a = 0; a < k; ++a )
        for ( std::size_t b = 0; b < k; ++b )
        {
            if ( result.meet( a, b ) != relation.block_of( lattice.meet( reps[ a ], reps[ b ] ) ) ||
                 result.join( a, b ) != relation.block_of( lattice.join( reps[ a ], reps[ b ] ) ) )
                throw not_a_congruence( "recomputed quotient tables disagree with representatives at blocks " +
                                        std::to_string( a ) + ", " + std::to_string( b ) );
        }

    std::vector< element > map( lattice.size() );
    for ( element a = 0; a < lattice.size(); ++a )
        map[ a ] = relation.block_of( a );
    auto projection = check_hom( std::move( map ), lattice, result, flavor );
    return quotient_result{ std::move( result ), std::move( projection ), std::move( reps ) };
}

quotient_result quotient_by_ideal( const heyting_algebra& algebra, const element_set& ideal )
{
    return quotient( algebra.lattice(), congruence_from_ideal( algebra, ideal ), hom_flavor::coheyting );
}

quotient_result quotient_by_filter( const heyting_algebra& algebra, const element_set& filter )
{
    return quotient( algebra.lattice(), congruence_from_filter( algebra, filter ), hom_flavor::heyting );
}

} // namespace biheyt
