#include "biheyt/dual_logic.hpp"

#include "biheyt/errors.hpp"
#include "biheyt/topology.hpp"

#include <algorithm>

namespace biheyt
{

namespace
{

element lookup( const assignment& v, const std::string& atom, std::size_t size )
{
    auto it = v.find( atom );
    if ( it == v.end() )
        throw unbound_atom( atom );
    if ( it->second >= size )
        throw error( "atom '" + atom + "' assigned " + std::to_string( it->second ) + ", outside an algebra of size " +
                     std::to_string( size ) );
    return it->second;
}

std::string pair_witness( element a, element b )
{
    return "a=" + std::to_string( a ) + " b=" + std::to_string( b );
}

void record( law_result& r, bool holds, const std::string& witness )
{
    ++r.checked;
    if ( holds )
        return;
    if ( r.violations++ == 0 )
        r.first_witness = witness;
}

std::string space_name( const finite_space& space )
{
    std::string out = "m=" + std::to_string( space.points() ) + " opens";
    for ( auto u : space.opens() )
        out += " {" + u.to_string() + "}";
    return out;
}

} // namespace

element eval_intuitionistic( const formula& phi, const heyting_algebra& algebra, const assignment& v )
{
    const auto& l = algebra.lattice();
    auto rec = [ & ]( const formula& f ) { return eval_intuitionistic( f, algebra, v ); };
    switch ( phi->op )
    {
    case connective::atom: return lookup( v, phi->name, l.size() );
    case connective::bottom: return l.bottom();
    case connective::top: return l.top();
    case connective::neg: return algebra.negate( rec( phi->left ) );
    case connective::conj: return l.meet( rec( phi->left ), rec( phi->right ) );
    case connective::disj: return l.join( rec( phi->left ), rec( phi->right ) );
    case connective::implies: return algebra.implies( rec( phi->left ), rec( phi->right ) );
    default: throw unsupported_connective( std::string{ symbol( phi->op ) }, "intuitionistic evaluation" );
    }
}

element eval_dual( const formula& phi, const coheyting_algebra& algebra, const assignment& v )
{
    const auto& l = algebra.lattice();
    auto rec = [ & ]( const formula& f ) { return eval_dual( f, algebra, v ); };
    switch ( phi->op )
    {
    case connective::atom: return lookup( v, phi->name, l.size() );
    case connective::bottom: return l.bottom();
    case connective::top: return l.top();
    case connective::conot: return algebra.minus( l.top(), rec( phi->left ) );
    case connective::conj: return l.meet( rec( phi->left ), rec( phi->right ) );
    case connective::disj: return l.join( rec( phi->left ), rec( phi->right ) );
    case connective::minus: return algebra.minus( rec( phi->left ), rec( phi->right ) );
    default: throw unsupported_connective( std::string{ symbol( phi->op ) }, "dual-intuitionistic evaluation" );
    }
}

void law_result::merge( const law_result& other, const std::string& context )
{
    checked += other.checked;
    if ( other.violations != 0 && violations == 0 )
        first_witness = *other.first_witness + " in " + context;
    violations += other.violations;
}

bool law_report::all_passed() const
{
    return std::all_of( laws.begin(), laws.end(), []( const law_result& r ) { return r.passed(); } );
}

const law_result& law_report::operator[]( const std::string& name ) const
{
    auto it = std::find_if( laws.begin(), laws.end(), [ & ]( const law_result& r ) { return r.name == name; } );
    if ( it == laws.end() )
        throw error( "no law named '" + name + "' in report" );
    return *it;
}

law_report check_dual_de_morgan( const coheyting_algebra& algebra )
{
    const auto& l = algebra.lattice();
    law_result conjunctive{ "conjunctive de morgan" };
    law_result disjunctive{ "disjunctive de morgan" };
    for ( element a = 0; a < l.size(); ++a )
        for ( element b = 0; b < l.size(); ++b )
        {
            record( conjunctive,
                    algebra.conot( l.meet( a, b ) ) == l.join( algebra.conot( a ), algebra.conot( b ) ),
                    pair_witness( a, b ) );
            record( disjunctive,
                    algebra.conot( l.join( a, b ) ) == l.meet( algebra.conot( a ), algebra.conot( b ) ),
                    pair_witness( a, b ) );
        }
    return { { conjunctive, disjunctive } };
}

law_result check_lem( const coheyting_algebra& algebra )
{
    const auto& l = algebra.lattice();
    law_result r{ "excluded middle" };
    for ( element a = 0; a < l.size(); ++a )
        record( r, l.join( a, algebra.conot( a ) ) == l.top(), "a=" + std::to_string( a ) );
    return r;
}

std::optional< element > find_paraconsistent_witness( const coheyting_algebra& algebra )
{
    for ( element a = 0; a < algebra.size(); ++a )
        if ( algebra.boundary( a ) != algebra.lattice().bottom() )
            return a;
    return std::nullopt;
}

law_report check_boundary_laws( const coheyting_algebra& algebra )
{
    const auto& l = algebra.lattice();
    auto d = [ & ]( element a ) { return algebra.boundary( a ); };
    law_result meet_law{ "boundary of meet" };
    law_result join_law{ "boundary of join" };
    law_result idempotent{ "boundary idempotent" };
    law_result decomposition{ "boundary decomposition" };

    for ( element a = 0; a < l.size(); ++a )
    {
        const auto w = "a=" + std::to_string( a );
        record( idempotent, d( d( a ) ) == d( a ), w );
        record( decomposition, a == l.join( algebra.conot( algebra.conot( a ) ), d( a ) ), w );
        for ( element b = 0; b < l.size(); ++b )
        {
            record( meet_law, d( l.meet( a, b ) ) == l.join( l.meet( d( a ), b ), l.meet( a, d( b ) ) ),
                    pair_witness( a, b ) );
            record( join_law, l.join( d( a ), d( b ) ) == l.join( d( l.join( a, b ) ), d( l.meet( a, b ) ) ),
                    pair_witness( a, b ) );
        }
    }
    return { { meet_law, join_law, idempotent, decomposition } };
}

boolean_verdict boolean_iff_trivial_boundary( const finite_lattice& lattice )
{
    boolean_verdict verdict;
    verdict.complemented = is_boolean( lattice );

    const coheyting_algebra co{ lattice };
    verdict.trivial_boundary = !find_paraconsistent_witness( co ).has_value();

    const heyting_algebra h{ lattice };
    verdict.double_negation = true;
    for ( element a = 0; a < lattice.size(); ++a )
        verdict.double_negation = verdict.double_negation && h.negate( h.negate( a ) ) == a;
    return verdict;
}

dual_suite_report run_dual_law_suite( std::size_t max_points )
{
    dual_suite_report report;
    report.laws.laws = { law_result{ "conjunctive de morgan" }, law_result{ "excluded middle" },
                         law_result{ "boundary of meet" },      law_result{ "boundary of join" },
                         law_result{ "boundary idempotent" },   law_result{ "boundary decomposition" } };
    report.disjunctive_de_morgan.name = "disjunctive de morgan";

    auto merge_into = [ & ]( const law_result& r, const std::string& context ) {
        for ( auto& law : report.laws.laws )
            if ( law.name == r.name )
                law.merge( r, context );
    };

    for ( std::size_t m = 1; m <= max_points; ++m )
        for ( const auto& space : enumerate_topologies( m, max_points ) )
        {
            ++report.spaces;
            const auto closeds = closed_lattice( space );
            const auto& co = closeds.algebra;
            const auto context = space_name( space );

            auto de_morgan = check_dual_de_morgan( co );
            merge_into( de_morgan[ "conjunctive de morgan" ], context );
            report.disjunctive_de_morgan.merge( de_morgan[ "disjunctive de morgan" ], context );
            merge_into( check_lem( co ), context );
            for ( const auto& r : check_boundary_laws( co ).laws )
                merge_into( r, context );

            if ( !report.paraconsistent_witness )
                if ( auto w = find_paraconsistent_witness( co ) )
                    report.paraconsistent_witness =
                        "closed {" + closeds.set_of( *w ).to_string() + "} in " + context;
        }
    return report;
}

} // namespace biheyt
