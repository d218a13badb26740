#include "biheyt/dual_logic.hpp"
#include "biheyt/errors.hpp"
#include "biheyt/modal.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace biheyt;

namespace
{

bool holds( const kripke_model& m, std::size_t w, const char* text )
{
    return kripke_eval( m, w, parse_formula( text ) );
}

// Every frame on n worlds, by relation bitmask.
std::vector< kripke_frame > all_frames( std::size_t n )
{
    std::vector< kripke_frame > out;
    for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << ( n * n ) ); ++mask )
    {
        std::vector< std::pair< std::size_t, std::size_t > > edges;
        for ( std::size_t i = 0; i < n * n; ++i )
            if ( ( mask >> i ) & 1U )
                edges.emplace_back( i / n, i % n );
        out.emplace_back( n, edges );
    }
    return out;
}

// Validity by looping over every assignment of subsets to p and q.
bool valid_by_loop( const kripke_frame& f, const formula& phi )
{
    const std::size_t n = f.worlds();
    for ( std::uint64_t pv = 0; pv < ( std::uint64_t{ 1 } << n ); ++pv )
        for ( std::uint64_t qv = 0; qv < ( std::uint64_t{ 1 } << n ); ++qv )
        {
            kripke_model m{ f, { { "p", point_set::from_bits( pv ) }, { "q", point_set::from_bits( qv ) } } };
            for ( std::size_t w = 0; w < n; ++w )
                if ( !kripke_eval( m, w, phi ) )
                    return false;
        }
    return true;
}

std::vector< finite_space > spaces_up_to( std::size_t m )
{
    std::vector< finite_space > out;
    for ( std::size_t k = 1; k <= m; ++k )
        for ( auto& x : enumerate_topologies( k ) )
            out.push_back( x );
    return out;
}

// Every formula over p, q of depth <= d built from constants, !, &, |, ->,
// [] and <>, listed syntactically without any deduplication.
std::vector< formula > all_formulas( std::size_t d )
{
    std::vector< std::vector< formula > > by_depth( d + 1 );
    by_depth[ 0 ] = { make_bottom(), make_top(), make_atom( "p" ), make_atom( "q" ) };
    std::vector< formula > upto = by_depth[ 0 ];
    for ( std::size_t k = 1; k <= d; ++k )
    {
        const auto below = upto;
        for ( const auto& a : by_depth[ k - 1 ] )
        {
            by_depth[ k ].push_back( make_neg( a ) );
            by_depth[ k ].push_back( make_box( a ) );
            by_depth[ k ].push_back( make_diamond( a ) );
        }
        for ( const auto& a : below )
            for ( const auto& b : below )
            {
                if ( depth( a ) != k - 1 && depth( b ) != k - 1 )
                    continue;
                by_depth[ k ].push_back( make_conj( a, b ) );
                by_depth[ k ].push_back( make_disj( a, b ) );
                by_depth[ k ].push_back( make_implies( a, b ) );
            }
        upto.insert( upto.end(), by_depth[ k ].begin(), by_depth[ k ].end() );
    }
    return upto;
}

// Membership in a set of points via the specialization scan, independent of
// model_from_space.
bool topo_member_by_scan( const finite_space& x, const valuation& v, const formula& f, std::size_t w )
{
    switch ( f->op )
    {
    case connective::atom:
        return v.at( f->name ).contains( w );
    case connective::bottom:
        return false;
    case connective::top:
        return true;
    case connective::neg:
        return !topo_member_by_scan( x, v, f->left, w );
    case connective::conj:
        return topo_member_by_scan( x, v, f->left, w ) && topo_member_by_scan( x, v, f->right, w );
    case connective::disj:
        return topo_member_by_scan( x, v, f->left, w ) || topo_member_by_scan( x, v, f->right, w );
    case connective::implies:
        return !topo_member_by_scan( x, v, f->left, w ) || topo_member_by_scan( x, v, f->right, w );
    case connective::box:
        for ( std::size_t u = 0; u < x.points(); ++u )
            if ( oracle::specializes( x, w, u ) && !topo_member_by_scan( x, v, f->left, u ) )
                return false;
        return true;
    case connective::diamond:
        for ( std::size_t u = 0; u < x.points(); ++u )
            if ( oracle::specializes( x, w, u ) && topo_member_by_scan( x, v, f->left, u ) )
                return true;
        return false;
    default:
        throw std::logic_error( "unexpected connective" );
    }
}

} // namespace

TEST( worked_examples, first_model )
{
    const auto [ m, unused ] = worked_examples();
    EXPECT_TRUE( holds( m, 0, "<>p & <>!p" ) );
    EXPECT_TRUE( holds( m, 1, "p" ) );
    EXPECT_TRUE( holds( m, 2, "!p" ) );
    const auto c = classify_frame( m.frame );
    EXPECT_EQ( c.system, modal_system::S4 );
    EXPECT_TRUE( c.reflexive && c.transitive );
    EXPECT_FALSE( c.symmetric );
    EXPECT_FALSE( frame_in( m.frame, modal_system::S5 ) );
}

TEST( worked_examples, second_model )
{
    const auto [ unused, m ] = worked_examples();
    EXPECT_TRUE( holds( m, 0, "<>p & <>q" ) );
    EXPECT_TRUE( holds( m, 1, "p & !q" ) );
    EXPECT_TRUE( holds( m, 2, "q & !p" ) );
    EXPECT_EQ( m.frame.edges().size(), 4u );
    EXPECT_FALSE( m.frame.related( 0, 0 ) );
    // The worlds where q holds or p fails.
    EXPECT_EQ( kripke_extension( m, parse_formula( "q | !p" ) ), example2_chi() );
    EXPECT_EQ( example2_chi(), ( point_set{ 0, 2 } ) );
}

TEST( kripke_eval, constants_and_errors )
{
    const auto [ m, unused ] = worked_examples();
    for ( std::size_t w = 0; w < 3; ++w )
    {
        EXPECT_TRUE( holds( m, w, "T" ) );
        EXPECT_FALSE( holds( m, w, "_|_" ) );
    }
    EXPECT_THROW( holds( m, 0, "~p" ), unsupported_connective );
    EXPECT_THROW( holds( m, 0, "p <- p" ), unsupported_connective );
    EXPECT_THROW( holds( m, 0, "q" ), unbound_atom );
}

TEST( kripke_frame, rejects_out_of_range_worlds )
{
    EXPECT_THROW( kripke_frame( 2, { { 0, 2 } } ), error );
    EXPECT_THROW( kripke_frame( 65, {} ), error );
}

TEST( classify_frame, examples )
{
    EXPECT_EQ( classify_frame( kripke_frame( 3, { { 0, 0 }, { 1, 1 }, { 2, 2 } } ) ).system, modal_system::S5 );
    const auto empty = classify_frame( kripke_frame( 2, {} ) );
    EXPECT_EQ( empty.system, modal_system::K );
    EXPECT_FALSE( empty.reflexive );
    EXPECT_TRUE( empty.transitive && empty.symmetric );
    EXPECT_EQ( classify_frame( kripke_frame( 2, { { 0, 0 }, { 1, 1 }, { 0, 1 } } ) ).system, modal_system::S4 );
    EXPECT_EQ( classify_frame( kripke_frame( 3, { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 0, 1 }, { 1, 2 } } ) ).system,
               modal_system::T );
    EXPECT_EQ( name( modal_system::S4 ), "S4" );
}

TEST( classify_frame, matches_relation_scan )
{
    for ( std::size_t n = 1; n <= 3; ++n )
        for ( const auto& f : all_frames( n ) )
        {
            bool refl = true, trans = true, sym = true;
            for ( std::size_t a = 0; a < n; ++a )
            {
                refl = refl && f.related( a, a );
                for ( std::size_t b = 0; b < n; ++b )
                {
                    sym = sym && ( !f.related( a, b ) || f.related( b, a ) );
                    for ( std::size_t c = 0; c < n; ++c )
                        trans = trans && ( !f.related( a, b ) || !f.related( b, c ) || f.related( a, c ) );
                }
            }
            const auto k = classify_frame( f );
            EXPECT_EQ( k.reflexive, refl );
            EXPECT_EQ( k.transitive, trans );
            EXPECT_EQ( k.symmetric, sym );
            EXPECT_EQ( frame_in( f, modal_system::T ), refl );
            EXPECT_EQ( frame_in( f, modal_system::S4 ), refl && trans );
            EXPECT_EQ( frame_in( f, modal_system::S5 ), refl && trans && sym );
        }
}

TEST( valid_in_frame, schemas_on_small_frames )
{
    const auto t = parse_formula( "[]p -> p" );
    const auto four = parse_formula( "[]p -> [][]p" );
    for ( std::size_t n = 1; n <= 3; ++n )
        for ( const auto& f : all_frames( n ) )
        {
            const auto c = classify_frame( f );
            EXPECT_EQ( valid_in_frame( f, t, { "p", "q" } ), valid_by_loop( f, t ) );
            EXPECT_EQ( valid_in_frame( f, four, { "p", "q" } ), valid_by_loop( f, four ) );
            EXPECT_TRUE( !c.reflexive || valid_in_frame( f, t, { "p" } ) );
            EXPECT_TRUE( !c.transitive || valid_in_frame( f, four, { "p" } ) );
        }
    // The irreflexive two-world chain.
    EXPECT_FALSE( valid_in_frame( kripke_frame( 2, { { 0, 1 } } ), t, { "p" } ) );
    EXPECT_THROW( valid_in_frame( kripke_frame( 13, {} ), t, { "p", "q" } ), bound_exceeded );
}

TEST( valid_in_model, examples )
{
    const auto [ m, unused ] = worked_examples();
    EXPECT_TRUE( valid_in_model( m, parse_formula( "[]p -> p" ) ) );
    EXPECT_FALSE( valid_in_model( m, parse_formula( "p" ) ) );
}

TEST( topo_eval, three_point_examples )
{
    const auto x = three_point_example();
    const valuation v{ { "p", point_set{ 0, 1 } } };
    EXPECT_EQ( topo_eval( x, v, parse_formula( "[]p" ) ), ( point_set{ 0, 1 } ) );
    EXPECT_EQ( topo_eval( x, v, parse_formula( "<>p" ) ), x.full() );
    EXPECT_EQ( topo_eval( x, v, parse_formula( "[]T" ) ), x.full() );
    EXPECT_EQ( topo_eval( x, v, parse_formula( "<>_|_" ) ), point_set{} );
    EXPECT_EQ( topo_eval( x, v, parse_formula( "!p" ) ), point_set{ 2 } );
    EXPECT_THROW( topo_eval( x, v, parse_formula( "~p" ) ), unsupported_connective );
    EXPECT_THROW( topo_eval( x, v, parse_formula( "q" ) ), unbound_atom );
}

TEST( topo_eval, modal_operators_match_open_scans )
{
    for ( const auto& x : spaces_up_to( 3 ) )
        for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << x.points() ); ++bits )
        {
            const auto s = point_set::from_bits( bits );
            const valuation v{ { "p", s } };
            EXPECT_EQ( topo_eval( x, v, parse_formula( "[]p" ) ), oracle::interior( x, s ) );
            EXPECT_EQ( topo_eval( x, v, parse_formula( "<>p" ) ), oracle::closure( x, s ) );
            EXPECT_EQ( topo_eval( x, v, parse_formula( "[]p -> p" ) ), x.full() );
        }
}

TEST( invariants, diamond_is_dual_of_box )
{
    for ( const auto& x : spaces_up_to( 3 ) )
        for ( std::uint64_t pv = 0; pv < ( std::uint64_t{ 1 } << x.points() ); ++pv )
            for ( std::uint64_t qv = 0; qv < ( std::uint64_t{ 1 } << x.points() ); ++qv )
            {
                const valuation v{ { "p", point_set::from_bits( pv ) }, { "q", point_set::from_bits( qv ) } };
                const auto model = model_from_space( x, v );
                for ( const char* body : { "p", "p & !q", "[]q | p" } )
                {
                    const auto phi = parse_formula( body );
                    const auto diamond = make_diamond( phi );
                    const auto rewritten = make_neg( make_box( make_neg( phi ) ) );
                    EXPECT_EQ( topo_eval( x, v, diamond ), topo_eval( x, v, rewritten ) );
                    EXPECT_EQ( kripke_extension( model, diamond ), kripke_extension( model, rewritten ) );
                }
            }
}

TEST( invariants, adding_edges_preserves_positive_diamond_truths )
{
    const std::vector< formula > positive{ parse_formula( "<>p" ), parse_formula( "<>(p & q)" ),
                                           parse_formula( "<><>p | <>q" ), parse_formula( "<>p & <>q" ) };
    const auto frames = all_frames( 3 );
    for ( const auto& f : frames )
        for ( const auto& g : frames )
        {
            bool extends = true;
            for ( std::size_t w = 0; w < 3; ++w )
                extends = extends && f.successors( w ).subset_of( g.successors( w ) );
            if ( !extends )
                continue;
            for ( std::uint64_t pv = 0; pv < 8; ++pv )
                for ( std::uint64_t qv = 0; qv < 8; qv += 3 )
                {
                    const valuation v{ { "p", point_set::from_bits( pv ) }, { "q", point_set::from_bits( qv ) } };
                    for ( const auto& phi : positive )
                        ASSERT_TRUE( kripke_extension( { f, v }, phi ).subset_of( kripke_extension( { g, v }, phi ) ) );
                }
        }
}

TEST( invariants, frame_class_monotonicity )
{
    const auto formulas = all_formulas( 2 );
    const modal_system order[] = { modal_system::K, modal_system::T, modal_system::S4, modal_system::S5 };
    std::vector< std::vector< bool > > valid( 4, std::vector< bool >( formulas.size(), true ) );
    for ( std::size_t n = 1; n <= 2; ++n )
        for ( const auto& f : all_frames( n ) )
            for ( std::size_t s = 0; s < 4; ++s )
            {
                if ( !frame_in( f, order[ s ] ) )
                    continue;
                for ( std::size_t i = 0; i < formulas.size(); ++i )
                    if ( valid[ s ][ i ] && !valid_in_frame( f, formulas[ i ], { "p", "q" } ) )
                        valid[ s ][ i ] = false;
            }
    std::size_t strict = 0;
    for ( std::size_t s = 0; s + 1 < 4; ++s )
        for ( std::size_t i = 0; i < formulas.size(); ++i )
        {
            EXPECT_TRUE( !valid[ s ][ i ] || valid[ s + 1 ][ i ] ) << to_string( formulas[ i ] );
            strict += !valid[ s ][ i ] && valid[ s + 1 ][ i ];
        }
    EXPECT_GT( strict, 0u );
}

TEST( model_from_space, examples )
{
    const auto d = model_from_space( discrete_space( 3 ), {} );
    EXPECT_EQ( d.frame, kripke_frame( 3, { { 0, 0 }, { 1, 1 }, { 2, 2 } } ) );
    EXPECT_EQ( classify_frame( d.frame ).system, modal_system::S5 );

    const auto x = three_point_example();
    const auto m = model_from_space( x, { { "p", point_set{ 0 } } } );
    EXPECT_EQ( classify_frame( m.frame ).system, modal_system::S4 );
    for ( std::size_t a = 0; a < 3; ++a )
        for ( std::size_t b = 0; b < 3; ++b )
            EXPECT_EQ( m.frame.related( a, b ), oracle::specializes( x, a, b ) );
    EXPECT_EQ( m.val.at( "p" ), point_set{ 0 } );
}

TEST( alexandrov, agrees_with_syntactic_enumeration )
{
    const auto formulas = all_formulas( 2 );
    for ( const auto& x : spaces_up_to( 2 ) )
        for ( std::uint64_t pv = 0; pv < ( std::uint64_t{ 1 } << x.points() ); ++pv )
            for ( std::uint64_t qv = 0; qv < ( std::uint64_t{ 1 } << x.points() ); ++qv )
            {
                const valuation v{ { "p", point_set::from_bits( pv ) }, { "q", point_set::from_bits( qv ) } };
                const auto model = model_from_space( x, v );
                for ( const auto& f : formulas )
                {
                    const auto value = topo_eval( x, v, f );
                    for ( std::size_t w = 0; w < x.points(); ++w )
                    {
                        ASSERT_EQ( value.contains( w ), kripke_eval( model, w, f ) ) << to_string( f );
                        ASSERT_EQ( value.contains( w ), topo_member_by_scan( x, v, f, w ) ) << to_string( f );
                    }
                }
            }
}

TEST( alexandrov, class_method_reports_no_disagreement )
{
    const auto r = check_alexandrov_agreement( 2, 2 );
    EXPECT_EQ( r.spaces, 1u + 4u );
    EXPECT_EQ( r.models, 4u + 4u * 16u );
    EXPECT_GT( r.checks, 0u );
    EXPECT_EQ( r.disagreements, 0u );
    EXPECT_FALSE( r.first_disagreement.has_value() );
    EXPECT_THROW( check_alexandrov_agreement( 5, 1 ), bound_exceeded );
}

TEST( s4_suite, every_topology_up_to_four_points )
{
    for ( const auto& x : spaces_up_to( 4 ) )
    {
        const auto r = s4_axiom_suite( x );
        ASSERT_EQ( r.schemas.size(), 5u );
        EXPECT_TRUE( r.all_valid() );
    }
    EXPECT_TRUE( s4_axiom_suite( discrete_space( 1 ) ).all_valid() );
}

TEST( s4_suite, frames )
{
    const auto [ m, unused ] = worked_examples();
    EXPECT_TRUE( s4_axiom_suite( m.frame ).all_valid() );

    // Reflexive but not transitive.
    const kripke_frame f{ 3, { { 0, 0 }, { 1, 1 }, { 2, 2 }, { 0, 1 }, { 1, 2 } } };
    const auto r = s4_axiom_suite( f );
    EXPECT_FALSE( r.all_valid() );
    for ( const auto& s : r.schemas )
    {
        if ( s.name == "4" )
        {
            EXPECT_FALSE( s.valid );
            EXPECT_TRUE( s.counterexample.has_value() );
        }
        EXPECT_TRUE( s.valid || ( s.name != "T" && s.name != "K" ) );
    }
    EXPECT_THROW( s4_axiom_suite( kripke_frame( 11, {} ) ), bound_exceeded );
}

TEST( countermodel_search, double_negation_elimination_intuitionistically )
{
    const auto phi = parse_formula( "!!p -> p" );
    const auto c = countermodel_search( phi, { search_semantics::intuitionistic, 3 } );
    ASSERT_TRUE( c.has_value() );
    ASSERT_TRUE( c->space.has_value() );
    EXPECT_NE( c->value, c->space->full() );
    EXPECT_FALSE( c->value.contains( c->point ) );

    // Re-evaluate the witness independently.
    const auto opens = open_lattice( *c->space );
    const auto p = c->val.at( "p" );
    const auto not_p = oracle::interior( *c->space, c->space->full() - p );
    const auto not_not_p = oracle::interior( *c->space, c->space->full() - not_p );
    EXPECT_EQ( oracle::interior( *c->space, ( c->space->full() - not_not_p ) | p ), c->value );
    EXPECT_EQ( c->space->points(), 2u );

    // The three-point example space is also a witness.
    const auto x = three_point_example();
    const auto x_opens = open_lattice( x );
    const auto value = eval_intuitionistic( phi, x_opens.algebra, { { "p", x_opens.element_of( point_set{ 0, 1 } ) } } );
    EXPECT_NE( x_opens.set_of( value ), x.full() );
}

TEST( countermodel_search, classical_tautology_has_none )
{
    EXPECT_FALSE( countermodel_search( parse_formula( "p | !p" ), { search_semantics::topological, 3 } ).has_value() );
    EXPECT_FALSE( countermodel_search( parse_formula( "p | ~p" ), { search_semantics::dual, 3 } ).has_value() );
}

TEST( countermodel_search, transitivity_schema_on_reflexive_frames )
{
    const auto c = countermodel_search( parse_formula( "[]p -> [][]p" ),
                                        { search_semantics::kripke, 3, modal_system::T } );
    ASSERT_TRUE( c.has_value() );
    ASSERT_TRUE( c->frame.has_value() );
    EXPECT_EQ( c->frame->worlds(), 3u );
    EXPECT_TRUE( classify_frame( *c->frame ).reflexive );
    EXPECT_FALSE( classify_frame( *c->frame ).transitive );
    EXPECT_FALSE( kripke_eval( { *c->frame, c->val }, c->point, parse_formula( "[]p -> [][]p" ) ) );

    EXPECT_FALSE( countermodel_search( parse_formula( "[]p -> [][]p" ), { search_semantics::kripke, 3, modal_system::S4 } )
                      .has_value() );
}

TEST( countermodel_search, is_deterministic_and_bounded )
{
    const auto phi = parse_formula( "<>p -> []p" );
    const auto a = countermodel_search( phi, { search_semantics::topological, 3 } );
    const auto b = countermodel_search( phi, { search_semantics::topological, 3 } );
    ASSERT_TRUE( a && b );
    EXPECT_EQ( a->space, b->space );
    EXPECT_EQ( a->val, b->val );
    EXPECT_EQ( a->point, b->point );
    EXPECT_THROW( countermodel_search( phi, { search_semantics::topological, 6 } ), bound_exceeded );
    EXPECT_THROW( countermodel_search( phi, { search_semantics::kripke, 5 } ), bound_exceeded );
    EXPECT_EQ( parse_semantics( "s4" ), search_semantics::topological );
    EXPECT_FALSE( parse_semantics( "classical" ).has_value() );
}
