#include "biheyt/errors.hpp"
#include "biheyt/topology.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace biheyt;

namespace
{

constexpr std::size_t a = 0, b = 1, c = 2;

std::vector< point_set > every_subset( std::size_t m )
{
    std::vector< point_set > out;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << m ); ++bits )
        out.push_back( point_set::from_bits( bits ) );
    return out;
}

} // namespace

TEST( point_set, basics )
{
    point_set s{ 0, 2 };
    EXPECT_TRUE( s.contains( 0 ) );
    EXPECT_FALSE( s.contains( 1 ) );
    EXPECT_EQ( s.size(), 2u );
    EXPECT_EQ( s.bits(), 5u );
    EXPECT_EQ( s.to_string(), "0 2" );
    EXPECT_EQ( point_set{}.to_string(), "" );
    EXPECT_EQ( ( s | point_set{ 1 } ), point_set::full( 3 ) );
    EXPECT_EQ( ( s - point_set{ 0 } ), point_set{ 2 } );
    EXPECT_TRUE( point_set{ 2 }.subset_of( s ) );
    EXPECT_EQ( point_set::full( 64 ).size(), 64u );
}

TEST( validate_topology, three_point_example )
{
    auto x = validate_topology( 3, { {}, { a }, { a, b }, { a, b, c } } );
    EXPECT_EQ( x.points(), 3u );
    EXPECT_EQ( x.opens(), ( std::vector< point_set >{ {}, { a }, { a, b }, { a, b, c } } ) );
    EXPECT_EQ( x, three_point_example() );
}

TEST( validate_topology, canonical_order_and_duplicates )
{
    auto x = validate_topology( 2, { { 0, 1 }, { 1 }, {}, { 0 }, { 1 } } );
    EXPECT_EQ( x.opens(), ( std::vector< point_set >{ {}, { 0 }, { 1 }, { 0, 1 } } ) );
}

TEST( validate_topology, missing_full_set )
{
    try
    {
        validate_topology( 2, { {}, { 0 }, { 1 } } );
        FAIL();
    }
    catch ( const topology_error& e )
    {
        EXPECT_EQ( e.reason, topology_error::kind::missing_empty_or_full );
    }
}

TEST( validate_topology, union_and_intersection_witnesses )
{
    try
    {
        validate_topology( 3, { {}, { 0 }, { 2 }, { 0, 1, 2 } } );
        FAIL();
    }
    catch ( const topology_error& e )
    {
        EXPECT_EQ( e.reason, topology_error::kind::not_closed_under_union );
        EXPECT_EQ( e.first, 1u );
        EXPECT_EQ( e.second, 2u );
    }
    try
    {
        validate_topology( 3, { {}, { 0, 1 }, { 1, 2 }, { 0, 1, 2 } } );
        FAIL();
    }
    catch ( const topology_error& e )
    {
        EXPECT_EQ( e.reason, topology_error::kind::not_closed_under_intersection );
    }
    EXPECT_THROW( validate_topology( 2, { {}, { 0, 1 }, { 2 } } ), error );
}

TEST( operators, three_point_values )
{
    const auto x = three_point_example();
    EXPECT_EQ( interior( x, { c } ), point_set{} );
    EXPECT_EQ( closure( x, { c } ), point_set{ c } );
    EXPECT_EQ( closure( x, { a } ), x.full() );
    EXPECT_EQ( interior( x, x.full() ), x.full() );
    EXPECT_EQ( closure( x, {} ), point_set{} );
    EXPECT_EQ( complement( x, { a } ), ( point_set{ b, c } ) );
    EXPECT_EQ( x.closeds(), ( std::vector< point_set >{ {}, { c }, { b, c }, { a, b, c } } ) );
}

TEST( operators, kuratowski_properties_on_all_small_spaces )
{
    for ( std::size_t m = 1; m <= 4; ++m )
        for ( const auto& x : enumerate_topologies( m ) )
        {
            const auto subsets = every_subset( m );
            for ( auto s : subsets )
            {
                const auto i = interior( x, s );
                const auto cl = closure( x, s );
                ASSERT_EQ( i, oracle::interior( x, s ) );
                ASSERT_EQ( cl, oracle::closure( x, s ) );
                EXPECT_TRUE( i.subset_of( s ) );
                EXPECT_TRUE( s.subset_of( cl ) );
                EXPECT_EQ( interior( x, i ), i );
                EXPECT_EQ( closure( x, cl ), cl );
                EXPECT_EQ( cl, complement( x, interior( x, complement( x, s ) ) ) );
                EXPECT_TRUE( x.is_open( i ) );
                EXPECT_TRUE( x.is_closed( cl ) );
                for ( auto t : subsets )
                    if ( s.subset_of( t ) )
                    {
                        EXPECT_TRUE( i.subset_of( interior( x, t ) ) );
                        EXPECT_TRUE( cl.subset_of( closure( x, t ) ) );
                    }
            }
        }
}

TEST( open_lattice, double_negation_fails_on_three_points )
{
    const auto opens = open_lattice( three_point_example() );
    const auto ab = opens.element_of( { a, b } );
    const auto neg = opens.algebra.negate( ab );
    EXPECT_EQ( opens.set_of( neg ), point_set{} );
    EXPECT_EQ( opens.set_of( opens.algebra.negate( neg ) ), ( point_set{ a, b, c } ) );
}

TEST( closed_lattice, boundary_is_nonempty_on_three_points )
{
    const auto closeds = closed_lattice( three_point_example() );
    const auto bc = closeds.element_of( { b, c } );
    EXPECT_EQ( closeds.set_of( closeds.algebra.conot( bc ) ), ( point_set{ a, b, c } ) );
    EXPECT_EQ( closeds.set_of( closeds.algebra.boundary( bc ) ), ( point_set{ b, c } ) );
    EXPECT_EQ( closeds.set_of( closeds.algebra.minus( bc, closeds.element_of( { c } ) ) ), ( point_set{ b, c } ) );
}

TEST( open_lattice, discrete_two_points_is_boolean_both_ways )
{
    const auto x = discrete_space( 2 );
    const auto opens = open_lattice( x );
    const auto closeds = closed_lattice( x );
    EXPECT_EQ( opens.sets, closeds.sets );
    EXPECT_TRUE( is_boolean( opens.algebra.lattice() ) );
    EXPECT_TRUE( is_boolean( closeds.algebra.lattice() ) );
    EXPECT_EQ( opens.algebra.lattice(), closeds.algebra.lattice() );
}

TEST( open_lattice, operations_match_set_formulas )
{
    for ( std::size_t m = 1; m <= 4; ++m )
        for ( const auto& x : enumerate_topologies( m ) )
        {
            const auto opens = open_lattice( x );
            const auto closeds = closed_lattice( x );
            const auto& ol = opens.algebra.lattice();
            const auto& cl = closeds.algebra.lattice();
            for ( element i = 0; i < ol.size(); ++i )
                for ( element j = 0; j < ol.size(); ++j )
                {
                    const auto u = opens.set_of( i ), v = opens.set_of( j );
                    ASSERT_EQ( opens.set_of( ol.meet( i, j ) ), u & v );
                    ASSERT_EQ( opens.set_of( ol.join( i, j ) ), u | v );
                    ASSERT_EQ( opens.set_of( opens.algebra.implies( i, j ) ),
                               oracle::interior( x, ( x.full() - u ) | v ) );
                }
            for ( element i = 0; i < cl.size(); ++i )
                for ( element j = 0; j < cl.size(); ++j )
                {
                    const auto s = closeds.set_of( i ), t = closeds.set_of( j );
                    ASSERT_EQ( closeds.set_of( cl.meet( i, j ) ), s & t );
                    ASSERT_EQ( closeds.set_of( cl.join( i, j ) ), s | t );
                    ASSERT_EQ( closeds.set_of( closeds.algebra.minus( i, j ) ),
                               oracle::closure( x, s & ( x.full() - t ) ) );
                }
        }
}

TEST( closed_lattice, complement_order_reversal_matches_dual_of_opens )
{
    // Ordering the closed sets by reverse inclusion (empty set on top) gives
    // the open-set lattice through complementation.
    for ( std::size_t m = 1; m <= 3; ++m )
        for ( const auto& x : enumerate_topologies( m ) )
        {
            const auto opens = open_lattice( x );
            const auto closeds = closed_lattice( x );
            const auto reversed = dualize( closeds.algebra.lattice() );
            const auto& ol = opens.algebra.lattice();
            for ( element i = 0; i < ol.size(); ++i )
                for ( element j = 0; j < ol.size(); ++j )
                {
                    const auto ci = closeds.element_of( complement( x, opens.set_of( i ) ) );
                    const auto cj = closeds.element_of( complement( x, opens.set_of( j ) ) );
                    ASSERT_EQ( ol.leq( i, j ), reversed.leq( ci, cj ) );
                }
        }
}

TEST( generate_from_basis, examples )
{
    EXPECT_EQ( generate_from_basis( 3, { { a }, { a, b } } ), three_point_example() );
    EXPECT_EQ( generate_from_basis( 3, { { 0 }, { 1 }, { 2 } } ), discrete_space( 3 ) );
    EXPECT_EQ( generate_from_basis( 3, {} ), indiscrete_space( 3 ) );
    // A subbasis: intersections are added before unions.
    EXPECT_TRUE( generate_from_basis( 3, { { 0, 1 }, { 1, 2 } } ).is_open( { 1 } ) );
}

TEST( specialization, three_point_preorder )
{
    const auto x = three_point_example();
    const auto r = specialization_preorder( x );
    for ( std::size_t p = 0; p < 3; ++p )
        for ( std::size_t q = 0; q < 3; ++q )
            EXPECT_EQ( r.related( p, q ), oracle::specializes( x, p, q ) ) << p << " " << q;
    // c lies only in X, b only in {a,b} and X.
    EXPECT_TRUE( r.related( c, a ) );
    EXPECT_TRUE( r.related( c, b ) );
    EXPECT_TRUE( r.related( b, a ) );
    EXPECT_FALSE( r.related( a, b ) );
    EXPECT_FALSE( r.related( b, c ) );
}

TEST( specialization, discrete_and_indiscrete )
{
    const auto d = specialization_preorder( discrete_space( 3 ) );
    const auto i = specialization_preorder( indiscrete_space( 3 ) );
    for ( std::size_t p = 0; p < 3; ++p )
        for ( std::size_t q = 0; q < 3; ++q )
        {
            EXPECT_EQ( d.related( p, q ), p == q );
            EXPECT_TRUE( i.related( p, q ) );
        }
}

TEST( specialization, round_trips )
{
    for ( std::size_t m = 1; m <= 4; ++m )
    {
        for ( const auto& x : enumerate_topologies( m ) )
            EXPECT_EQ( from_preorder( specialization_preorder( x ) ), x );
        for_each_preorder( m, [ & ]( const preorder& p ) {
            EXPECT_EQ( specialization_preorder( from_preorder( p ) ), p );
        } );
    }
}

TEST( specialization, boolean_iff_clopen_iff_symmetric )
{
    for ( std::size_t m = 1; m <= 4; ++m )
        for ( const auto& x : enumerate_topologies( m ) )
        {
            const bool boolean = is_boolean( open_lattice( x ).algebra.lattice() );
            bool clopen = true;
            for ( auto u : x.opens() )
                clopen = clopen && x.is_closed( u );
            EXPECT_EQ( boolean, clopen );
            EXPECT_EQ( boolean, specialization_preorder( x ).symmetric() );
        }
}

TEST( preorder, rejects_non_reflexive_or_non_transitive )
{
    EXPECT_THROW( ( preorder{ 2, { { 1 }, { 1 } } } ), error );
    EXPECT_THROW( ( preorder{ 3, { { 0, 1 }, { 1, 2 }, { 2 } } } ), error );
}

TEST( enumerate_topologies, counts_match_family_enumeration )
{
    const std::size_t expected[] = { 1, 4, 29, 355 };
    for ( std::size_t m = 1; m <= 4; ++m )
    {
        const auto spaces = enumerate_topologies( m );
        EXPECT_EQ( spaces.size(), expected[ m - 1 ] );
        std::set< std::vector< std::uint64_t > > ours;
        for ( const auto& x : spaces )
            ours.insert( oracle::open_bits( x ) );
        EXPECT_EQ( ours.size(), spaces.size() ) << "duplicates at m=" << m;
        EXPECT_EQ( ours, oracle::topology_families( m ) ) << "m=" << m;
    }
}

TEST( enumerate_topologies, bound )
{
    EXPECT_THROW( enumerate_topologies( 5 ), bound_exceeded );
    EXPECT_EQ( enumerate_topologies( 5, 5 ).size(), 6942u );
}
