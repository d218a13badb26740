#include "biheyt/errors.hpp"
#include "biheyt/spectrum.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace biheyt;

namespace
{

element_set members( std::size_t n, std::initializer_list< element > xs )
{
    element_set s( n );
    for ( auto x : xs )
        s.insert( x );
    return s;
}

std::uint32_t mask_of( const element_set& s )
{
    std::uint32_t m = 0;
    for ( auto x : s.members() )
        m |= 1U << x;
    return m;
}

std::vector< std::size_t > compose_maps( const std::vector< std::size_t >& outer,
                                         const std::vector< std::size_t >& inner )
{
    std::vector< std::size_t > out;
    for ( auto x : inner )
        out.push_back( outer[ x ] );
    return out;
}

} // namespace

TEST( filters, small_examples )
{
    const auto two = chain_lattice( 2 );
    auto f2 = filters( two );
    ASSERT_EQ( f2.size(), 1u );
    EXPECT_EQ( f2[ 0 ].members, members( 2, { 1 } ) );

    const auto chain = chain_lattice( 3 );
    auto f3 = filters( chain );
    ASSERT_EQ( f3.size(), 2u );
    EXPECT_EQ( f3[ 0 ].members, members( 3, { 2 } ) );
    EXPECT_EQ( f3[ 1 ].members, members( 3, { 1, 2 } ) );
    EXPECT_EQ( f3[ 0 ].kind, subset_kind::filter );

    EXPECT_EQ( filters( diamond_m3() ).size(), 4u );

    auto i3 = ideals( chain );
    ASSERT_EQ( i3.size(), 2u );
    EXPECT_EQ( i3[ 0 ].members, members( 3, { 0 } ) );
    EXPECT_EQ( i3[ 1 ].members, members( 3, { 0, 1 } ) );
    EXPECT_EQ( i3[ 0 ].kind, subset_kind::ideal );
}

TEST( filters, agree_with_subset_scan )
{
    for ( const auto& l : enumerate_lattices( 7 ) )
    {
        std::set< std::uint32_t > ours;
        for ( const auto& f : filters( l ) )
            ours.insert( mask_of( f.members ) );
        const auto brute = oracle::filter_masks( l );
        EXPECT_EQ( ours, std::set< std::uint32_t >( brute.begin(), brute.end() ) );

        // Ideals are the filters of the dual.
        std::set< std::uint32_t > ideal_masks, dual_filters;
        for ( const auto& i : ideals( l ) )
            ideal_masks.insert( mask_of( i.members ) );
        for ( auto m : oracle::filter_masks( dualize( l ) ) )
            dual_filters.insert( m );
        EXPECT_EQ( ideal_masks, dual_filters );
    }
}

TEST( filters, bound )
{
    EXPECT_THROW( filters( chain_lattice( 10 ), 9 ), bound_exceeded );
    EXPECT_THROW( spectrum( chain_lattice( 10 ), 9 ), bound_exceeded );
}

TEST( prime_filters, examples )
{
    for ( const auto& f : filters( chain_lattice( 4 ) ) )
        EXPECT_TRUE( is_prime_filter( chain_lattice( 4 ), f ) );

    const auto b4 = boolean_lattice( 2 ); // 0, atoms 1 and 2, top 3
    const filter_or_ideal top_only{ members( 4, { 3 } ), subset_kind::filter };
    EXPECT_FALSE( is_prime_filter( b4, top_only ) );
    const filter_or_ideal atom{ members( 4, { 1, 3 } ), subset_kind::filter };
    EXPECT_TRUE( is_prime_filter( b4, atom ) );

    const filter_or_ideal ideal{ members( 4, { 0 } ), subset_kind::ideal };
    EXPECT_THROW( is_prime_filter( b4, ideal ), wrong_kind );
}

TEST( prime_filters, agree_with_subset_scan )
{
    for ( const auto& l : enumerate_lattices( 7 ) )
    {
        std::set< std::uint32_t > ours, brute;
        for ( const auto& f : prime_filters( l ) )
            ours.insert( mask_of( f.members ) );
        for ( auto m : oracle::filter_masks( l ) )
            if ( oracle::prime( l, m ) )
                brute.insert( m );
        EXPECT_EQ( ours, brute );
    }
}

TEST( spectrum, three_chain )
{
    const auto s = spectrum( chain_lattice( 3 ) );
    ASSERT_EQ( s.points.size(), 2u );
    EXPECT_EQ( s.points[ 0 ], members( 3, { 2 } ) );
    EXPECT_EQ( s.points[ 1 ], members( 3, { 1, 2 } ) );
    EXPECT_EQ( s.beta[ 0 ], point_set{} );
    EXPECT_EQ( s.beta[ 1 ], point_set{ 1 } );
    EXPECT_EQ( s.beta[ 2 ], ( point_set{ 0, 1 } ) );
    EXPECT_EQ( s.space.opens().size(), 3u );

    // beta(m -> 0) = beta(0) = int(beta(m)^c | beta(0)).
    const heyting_algebra h{ chain_lattice( 3 ) };
    EXPECT_EQ( s.beta[ h.implies( 1, 0 ) ], point_set{} );
    EXPECT_EQ( interior( s.space, complement( s.space, s.beta[ 1 ] ) | s.beta[ 0 ] ), point_set{} );
}

TEST( spectrum, small_cases )
{
    const auto two = spectrum( chain_lattice( 2 ) );
    EXPECT_EQ( two.points.size(), 1u );
    EXPECT_EQ( two.space.opens(), ( std::vector< point_set >{ {}, { 0 } } ) );

    const auto four = spectrum( boolean_lattice( 2 ) );
    EXPECT_EQ( four.points.size(), 2u );
    EXPECT_EQ( four.space, discrete_space( 2 ) );

    const auto one = spectrum( chain_lattice( 1 ) );
    EXPECT_TRUE( one.points.empty() );
    EXPECT_EQ( one.space.opens(), ( std::vector< point_set >{ {} } ) );
    EXPECT_TRUE( verify_stone_embedding( chain_lattice( 1 ) ).isomorphism() );

    EXPECT_THROW( spectrum( diamond_m3() ), not_distributive );
}

TEST( spectrum, beta_bounds )
{
    for ( const auto& l : enumerate_lattices( 7, true ) )
    {
        const auto s = spectrum( l );
        EXPECT_EQ( s.beta[ l.bottom() ], point_set{} );
        EXPECT_EQ( s.beta[ l.top() ], s.space.full() );
    }
}

TEST( stone, isomorphism_for_distributive_lattices )
{
    for ( const auto& l : enumerate_lattices( 7, true ) )
    {
        const auto r = verify_stone_embedding( l );
        EXPECT_TRUE( r.isomorphism() ) << ( r.violations.empty() ? "" : r.violations.front() );
        EXPECT_TRUE( r.injective && r.preserves_meets && r.preserves_joins && r.surjective &&
                     r.preserves_implication );
    }
    EXPECT_TRUE( verify_stone_embedding( boolean_lattice( 4 ) ).isomorphism() );
}

TEST( induced_map, identity_and_two_valued_example )
{
    const auto chain = chain_lattice( 3 );
    const auto id = induced_map( identity_hom( chain ) );
    EXPECT_EQ( id.image, ( std::vector< std::size_t >{ 0, 1 } ) );
    EXPECT_TRUE( id.continuous );
    EXPECT_TRUE( id.preimage_identity );

    const auto phi = check_hom( { 0, 1, 1 }, chain, chain_lattice( 2 ), hom_flavor::lattice );
    const auto f = induced_map( phi );
    ASSERT_EQ( f.image.size(), 1u );
    EXPECT_EQ( f.codomain.points[ f.image[ 0 ] ], members( 3, { 1, 2 } ) );
    EXPECT_TRUE( f.continuous );
    EXPECT_TRUE( f.preimage_identity );
}

TEST( induced_map, preimages_of_primes_are_prime_and_functorial )
{
    const auto lattices = enumerate_lattices( 5, true );
    std::size_t pairs = 0;
    for ( const auto& h : lattices )
        for ( const auto& k : lattices )
            for ( const auto& phi : enumerate_homs( h, k ) )
            {
                const auto f = induced_map( phi );
                EXPECT_TRUE( f.continuous );
                EXPECT_TRUE( f.preimage_identity );
                for ( const auto& l : lattices )
                    for ( const auto& psi : enumerate_homs( k, l ) )
                    {
                        ++pairs;
                        const auto g = induced_map( psi );
                        const auto gf = induced_map( compose( psi, phi ) );
                        ASSERT_EQ( gf.image, compose_maps( f.image, g.image ) );
                    }
            }
    EXPECT_GT( pairs, 0u );
}

TEST( open_map_criterion, examples )
{
    const auto s = sierpinski_space();
    const auto id = open_map_criterion( { s, s, { 0, 1 } } );
    EXPECT_TRUE( id.continuous );
    EXPECT_TRUE( id.open );
    EXPECT_TRUE( id.induces_heyting_hom );

    // Constant map onto the closed point of the Sierpinski space.
    const auto constant = open_map_criterion( { discrete_space( 2 ), s, { 1, 1 } } );
    EXPECT_TRUE( constant.continuous );
    EXPECT_FALSE( constant.open );
    EXPECT_FALSE( constant.induces_heyting_hom );
    EXPECT_TRUE( constant.agrees() );

    // Inclusion of the open point.
    const auto inclusion = open_map_criterion( { discrete_space( 1 ), s, { 0 } } );
    EXPECT_TRUE( inclusion.continuous );
    EXPECT_TRUE( inclusion.open );
    EXPECT_TRUE( inclusion.induces_heyting_hom );

    EXPECT_THROW( open_map_criterion( { s, s, { 0 } } ), error );
    EXPECT_THROW( open_map_criterion( { s, s, { 0, 2 } } ), error );
}

namespace
{

bool t0( const finite_space& x )
{
    const auto r = specialization_preorder( x );
    for ( std::size_t p = 0; p < x.points(); ++p )
        for ( std::size_t q = 0; q < x.points(); ++q )
            if ( p != q && r.related( p, q ) && r.related( q, p ) )
                return false;
    return true;
}

template < typename Visit >
void for_each_map( const std::vector< finite_space >& spaces, Visit&& visit )
{
    for ( const auto& x : spaces )
        for ( const auto& y : spaces )
        {
            std::vector< std::size_t > image( x.points(), 0 );
            while ( true )
            {
                visit( point_map{ x, y, image } );
                std::size_t i = 0;
                while ( i < image.size() && ++image[ i ] == y.points() )
                    image[ i++ ] = 0;
                if ( i == image.size() )
                    break;
            }
        }
}

std::vector< finite_space > spaces_up_to( std::size_t m )
{
    std::vector< finite_space > out;
    for ( std::size_t k = 1; k <= m; ++k )
        for ( auto& x : enumerate_topologies( k ) )
            out.push_back( x );
    return out;
}

} // namespace

TEST( open_map_criterion, continuous_open_maps_always_induce_heyting_homs )
{
    std::size_t open_maps = 0;
    for_each_map( spaces_up_to( 3 ), [ & ]( const point_map& f ) {
        const auto v = open_map_criterion( f );
        if ( v.continuous && v.open )
        {
            ++open_maps;
            ASSERT_TRUE( v.induces_heyting_hom );
        }
    } );
    EXPECT_GT( open_maps, 0u );
}

TEST( open_map_criterion, agrees_on_every_map_into_a_t0_space )
{
    std::size_t checked = 0;
    for_each_map( spaces_up_to( 3 ), [ & ]( const point_map& f ) {
        if ( !t0( f.target ) )
            return;
        ++checked;
        ASSERT_TRUE( open_map_criterion( f ).agrees() );
    } );
    EXPECT_GT( checked, 0u );
}

TEST( open_map_criterion, converse_fails_into_an_indiscrete_space )
{
    // f^-1 is a bijection between {0, X} and {0, pt}, but the image of the
    // one-point space is not open.
    const auto v = open_map_criterion( { discrete_space( 1 ), indiscrete_space( 2 ), { 0 } } );
    EXPECT_TRUE( v.continuous );
    EXPECT_FALSE( v.open );
    EXPECT_TRUE( v.induces_heyting_hom );
    EXPECT_FALSE( v.agrees() );
}
