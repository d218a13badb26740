#include "biheyt/spectrum.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>

namespace biheyt
{

namespace
{

void require_size( const finite_lattice& lattice, std::size_t max_size )
{
    if ( lattice.size() > max_size )
        throw bound_exceeded( "lattice size", lattice.size(), max_size );
}

void sort_canonically( std::vector< filter_or_ideal >& xs )
{
    std::sort( xs.begin(), xs.end(), []( const filter_or_ideal& a, const filter_or_ideal& b ) {
        return canonical_before( a.members, b.members );
    } );
}

std::string set_string( point_set s )
{
    return "{" + s.to_string() + "}";
}

} // namespace

// A nonempty meet-closed subset of a finite lattice has a least element, so
// the proper filters are exactly the principal up-sets of non-bottom
// elements (dually for ideals).
std::vector< filter_or_ideal > filters( const finite_lattice& lattice, std::size_t max_size )
{
    require_size( lattice, max_size );
    std::vector< filter_or_ideal > out;
    for ( element a = 0; a < lattice.size(); ++a )
    {
        if ( a == lattice.bottom() )
            continue;
        element_set up( lattice.size() );
        for ( element b = 0; b < lattice.size(); ++b )
            if ( lattice.leq( a, b ) )
                up.insert( b );
        out.push_back( { std::move( up ), subset_kind::filter } );
    }
    sort_canonically( out );
    return out;
}

std::vector< filter_or_ideal > ideals( const finite_lattice& lattice, std::size_t max_size )
{
    require_size( lattice, max_size );
    std::vector< filter_or_ideal > out;
    for ( element a = 0; a < lattice.size(); ++a )
    {
        if ( a == lattice.top() )
            continue;
        element_set down( lattice.size() );
        for ( element b = 0; b < lattice.size(); ++b )
            if ( lattice.leq( b, a ) )
                down.insert( b );
        out.push_back( { std::move( down ), subset_kind::ideal } );
    }
    sort_canonically( out );
    return out;
}

bool is_prime_filter( const finite_lattice& lattice, const filter_or_ideal& filter )
{
    if ( filter.kind != subset_kind::filter )
        throw wrong_kind( "is_prime_filter expects a filter, got an ideal" );
    for ( element a = 0; a < lattice.size(); ++a )
        for ( element b = 0; b < lattice.size(); ++b )
            if ( filter.members.contains( lattice.join( a, b ) ) && !filter.members.contains( a ) &&
                 !filter.members.contains( b ) )
                return false;
    return true;
}

std::vector< filter_or_ideal > prime_filters( const finite_lattice& lattice, std::size_t max_size )
{
    auto all = filters( lattice, max_size );
    std::erase_if( all, [ & ]( const filter_or_ideal& f ) { return !is_prime_filter( lattice, f ); } );
    return all;
}

spectral_space spectrum( const finite_lattice& lattice, std::size_t max_size )
{
    if ( !lattice.distributive() )
    {
        const auto& w = *lattice.distributivity_witness();
        throw not_distributive( w[ 0 ], w[ 1 ], w[ 2 ] );
    }
    auto primes = prime_filters( lattice, max_size );
    if ( primes.size() > point_set::capacity )
        throw bound_exceeded( "prime filters", primes.size(), point_set::capacity );

    std::vector< element_set > points;
    for ( auto& p : primes )
        points.push_back( std::move( p.members ) );

    std::vector< point_set > beta( lattice.size() );
    for ( element h = 0; h < lattice.size(); ++h )
        for ( std::size_t p = 0; p < points.size(); ++p )
            if ( points[ p ].contains( h ) )
                beta[ h ].insert( p );

    auto space = generate_from_basis( points.size(), beta );
    return spectral_space{ lattice, std::move( points ), std::move( space ), std::move( beta ) };
}

stone_report verify_stone_embedding( const finite_lattice& lattice, std::size_t max_size )
{
    const auto spec = spectrum( lattice, max_size );
    const auto n = lattice.size();
    const auto& beta = spec.beta;
    stone_report report;

    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
        {
            if ( a < b && beta[ a ] == beta[ b ] )
            {
                report.injective = false;
                report.violations.push_back( "beta not injective: beta(" + std::to_string( a ) + ") = beta(" +
                                             std::to_string( b ) + ") = " + set_string( beta[ a ] ) );
            }
            if ( beta[ lattice.meet( a, b ) ] != ( beta[ a ] & beta[ b ] ) )
            {
                report.preserves_meets = false;
                report.violations.push_back( "beta(" + std::to_string( a ) + " & " + std::to_string( b ) +
                                             ") != beta(a) & beta(b)" );
            }
            if ( beta[ lattice.join( a, b ) ] != ( beta[ a ] | beta[ b ] ) )
            {
                report.preserves_joins = false;
                report.violations.push_back( "beta(" + std::to_string( a ) + " | " + std::to_string( b ) +
                                             ") != beta(a) | beta(b)" );
            }
        }

    for ( auto u : spec.space.opens() )
        if ( std::find( beta.begin(), beta.end(), u ) == beta.end() )
        {
            report.surjective = false;
            report.violations.push_back( "open " + set_string( u ) + " is not in the image of beta" );
        }

    const heyting_algebra algebra{ lattice };
    for ( element a = 0; a < n; ++a )
        for ( element b = 0; b < n; ++b )
        {
            const auto expected = interior( spec.space, complement( spec.space, beta[ a ] ) | beta[ b ] );
            if ( beta[ algebra.implies( a, b ) ] != expected )
            {
                report.preserves_implication = false;
                report.violations.push_back( "beta(" + std::to_string( a ) + " -> " + std::to_string( b ) +
                                             ") != int(beta(a)^c | beta(b))" );
            }
        }
    return report;
}

induced_point_map induced_map( const lattice_hom& phi )
{
    induced_point_map out{ spectrum( phi.target() ), spectrum( phi.source() ), {}, false, false };
    const auto& domain = out.domain;
    const auto& codomain = out.codomain;

    for ( const auto& p : domain.points )
    {
        element_set pre( phi.source().size() );
        for ( element h = 0; h < phi.source().size(); ++h )
            if ( p.contains( phi( h ) ) )
                pre.insert( h );
        auto it = std::find( codomain.points.begin(), codomain.points.end(), pre );
        if ( it == codomain.points.end() )
            throw not_a_homomorphism( "prime filter preimage", 0, 0 );
        out.image.push_back( static_cast< std::size_t >( it - codomain.points.begin() ) );
    }

    auto preimage = [ & ]( point_set s ) {
        point_set r;
        for ( std::size_t q = 0; q < out.image.size(); ++q )
            if ( s.contains( out.image[ q ] ) )
                r.insert( q );
        return r;
    };

    out.continuous = true;
    for ( auto u : codomain.space.opens() )
        out.continuous = out.continuous && domain.space.is_open( preimage( u ) );

    out.preimage_identity = true;
    for ( element h = 0; h < phi.source().size(); ++h )
        out.preimage_identity = out.preimage_identity && preimage( codomain.beta[ h ] ) == domain.beta[ phi( h ) ];
    return out;
}

point_set point_map::apply( point_set s ) const
{
    point_set out;
    for ( auto x : s.members() )
        out.insert( image[ x ] );
    return out;
}

point_set point_map::preimage( point_set s ) const
{
    point_set out;
    for ( std::size_t x = 0; x < image.size(); ++x )
        if ( s.contains( image[ x ] ) )
            out.insert( x );
    return out;
}

open_map_verdict open_map_criterion( const point_map& f )
{
    if ( f.image.size() != f.source.points() )
        throw error( "point map is not total on the source" );
    for ( auto y : f.image )
        if ( y >= f.target.points() )
            throw error( "point map sends a point outside the target" );

    open_map_verdict verdict;
    verdict.continuous = std::all_of( f.target.opens().begin(), f.target.opens().end(),
                                      [ & ]( point_set u ) { return f.source.is_open( f.preimage( u ) ); } );
    verdict.open = std::all_of( f.source.opens().begin(), f.source.opens().end(),
                                [ & ]( point_set u ) { return f.target.is_open( f.apply( u ) ); } );

    if ( !verdict.continuous )
        return verdict; // preimages are not even opens

    const auto source_opens = open_lattice( f.source );
    const auto target_opens = open_lattice( f.target );
    std::vector< element > map;
    for ( auto u : target_opens.sets )
        map.push_back( source_opens.element_of( f.preimage( u ) ) );
    verdict.induces_heyting_hom =
        !hom_failure( map, target_opens.algebra.lattice(), source_opens.algebra.lattice(), hom_flavor::heyting );
    return verdict;
}

} // namespace biheyt
