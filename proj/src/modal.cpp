#include "biheyt/modal.hpp"

#include "biheyt/dual_logic.hpp"
#include "biheyt/errors.hpp"

#include <algorithm>

namespace biheyt
{

namespace
{

void require_worlds( std::size_t worlds )
{
    if ( worlds > point_set::capacity )
        throw bound_exceeded( "worlds", worlds, point_set::capacity );
}

point_set lookup( const valuation& val, const std::string& atom )
{
    auto it = val.find( atom );
    if ( it == val.end() )
        throw unbound_atom( atom );
    return it->second;
}

// Every subset of m points in canonical order.
std::vector< point_set > all_subsets( std::size_t m )
{
    std::vector< point_set > out;
    for ( std::uint64_t bits = 0; bits < ( std::uint64_t{ 1 } << m ); ++bits )
        out.push_back( point_set::from_bits( bits ) );
    std::sort( out.begin(), out.end(), canonical_less{} );
    return out;
}

/// Visits every valuation of `atoms` with values from `choices`, the first
/// atom varying slowest. Stops early when visit returns true.
template < typename Visit >
bool for_each_valuation( const std::vector< std::string >& atoms, const std::vector< point_set >& choices,
                         Visit&& visit )
{
    std::vector< std::size_t > index( atoms.size(), 0 );
    valuation val;
    while ( true )
    {
        for ( std::size_t i = 0; i < atoms.size(); ++i )
            val[ atoms[ i ] ] = choices[ index[ i ] ];
        if ( visit( val ) )
            return true;
        auto i = atoms.size();
        while ( i > 0 && ++index[ i - 1 ] == choices.size() )
            index[ --i ] = 0;
        if ( i == 0 )
            return false;
    }
}

std::string describe( const valuation& val )
{
    std::string out;
    for ( const auto& [ atom, set ] : val )
    {
        if ( !out.empty() )
            out += ' ';
        out += atom + "={" + set.to_string() + "}";
    }
    return out;
}

std::size_t first_missing( point_set value, point_set all )
{
    return ( all - value ).members().front();
}

bool is_reflexive( const kripke_frame& f )
{
    for ( std::size_t w = 0; w < f.worlds(); ++w )
        if ( !f.related( w, w ) )
            return false;
    return true;
}

bool is_transitive( const kripke_frame& f )
{
    for ( std::size_t w = 0; w < f.worlds(); ++w )
        for ( auto u : f.successors( w ).members() )
            if ( !f.successors( u ).subset_of( f.successors( w ) ) )
                return false;
    return true;
}

bool is_symmetric( const kripke_frame& f )
{
    for ( std::size_t w = 0; w < f.worlds(); ++w )
        for ( auto u : f.successors( w ).members() )
            if ( !f.related( u, w ) )
                return false;
    return true;
}

} // namespace

kripke_frame::kripke_frame( std::size_t worlds, const std::vector< std::pair< std::size_t, std::size_t > >& edges )
    : _worlds{ worlds }, _succ( worlds )
{
    require_worlds( worlds );
    for ( auto [ w, u ] : edges )
    {
        if ( w >= worlds || u >= worlds )
            throw error( "edge (" + std::to_string( w ) + ", " + std::to_string( u ) + ") outside " +
                         std::to_string( worlds ) + " worlds" );
        _succ[ w ].insert( u );
    }
}

kripke_frame kripke_frame::from_successors( std::vector< point_set > successors )
{
    kripke_frame f;
    f._worlds = successors.size();
    require_worlds( f._worlds );
    for ( auto s : successors )
        if ( !s.subset_of( point_set::full( f._worlds ) ) )
            throw error( "successor set {" + s.to_string() + "} outside the frame" );
    f._succ = std::move( successors );
    return f;
}

std::vector< std::pair< std::size_t, std::size_t > > kripke_frame::edges() const
{
    std::vector< std::pair< std::size_t, std::size_t > > out;
    for ( std::size_t w = 0; w < _worlds; ++w )
        for ( auto u : _succ[ w ].members() )
            out.emplace_back( w, u );
    return out;
}

std::string_view name( modal_system system )
{
    switch ( system )
    {
    case modal_system::K: return "K";
    case modal_system::T: return "T";
    case modal_system::S4: return "S4";
    case modal_system::S5: return "S5";
    }
    return "?";
}

frame_class classify_frame( const kripke_frame& frame )
{
    frame_class c;
    c.reflexive = is_reflexive( frame );
    c.transitive = is_transitive( frame );
    c.symmetric = is_symmetric( frame );
    if ( c.reflexive && c.transitive && c.symmetric )
        c.system = modal_system::S5;
    else if ( c.reflexive && c.transitive )
        c.system = modal_system::S4;
    else if ( c.reflexive )
        c.system = modal_system::T;
    return c;
}

bool frame_in( const kripke_frame& frame, modal_system system )
{
    const auto c = classify_frame( frame );
    switch ( system )
    {
    case modal_system::K: return true;
    case modal_system::T: return c.reflexive;
    case modal_system::S4: return c.reflexive && c.transitive;
    case modal_system::S5: return c.reflexive && c.transitive && c.symmetric;
    }
    return false;
}

bool kripke_eval( const kripke_model& model, std::size_t world, const formula& phi )
{
    const auto& f = model.frame;
    if ( world >= f.worlds() )
        throw error( "world " + std::to_string( world ) + " outside the model" );
    auto at = [ & ]( std::size_t w, const formula& g ) { return kripke_eval( model, w, g ); };
    switch ( phi->op )
    {
    case connective::atom: return lookup( model.val, phi->name ).contains( world );
    case connective::bottom: return false;
    case connective::top: return true;
    case connective::neg: return !at( world, phi->left );
    case connective::conj: return at( world, phi->left ) && at( world, phi->right );
    case connective::disj: return at( world, phi->left ) || at( world, phi->right );
    case connective::implies: return !at( world, phi->left ) || at( world, phi->right );
    case connective::box:
        for ( auto u : f.successors( world ).members() )
            if ( !at( u, phi->left ) )
                return false;
        return true;
    case connective::diamond:
        for ( auto u : f.successors( world ).members() )
            if ( at( u, phi->left ) )
                return true;
        return false;
    default: throw unsupported_connective( std::string{ symbol( phi->op ) }, "Kripke evaluation" );
    }
}

point_set kripke_extension( const kripke_model& model, const formula& phi )
{
    const auto& f = model.frame;
    const auto all = f.all();
    auto rec = [ & ]( const formula& g ) { return kripke_extension( model, g ); };
    switch ( phi->op )
    {
    case connective::atom: return lookup( model.val, phi->name ) & all;
    case connective::bottom: return {};
    case connective::top: return all;
    case connective::neg: return all - rec( phi->left );
    case connective::conj: return rec( phi->left ) & rec( phi->right );
    case connective::disj: return rec( phi->left ) | rec( phi->right );
    case connective::implies: return ( all - rec( phi->left ) ) | rec( phi->right );
    case connective::box:
    {
        const auto inner = rec( phi->left );
        point_set out;
        for ( std::size_t w = 0; w < f.worlds(); ++w )
            if ( f.successors( w ).subset_of( inner ) )
                out.insert( w );
        return out;
    }
    case connective::diamond:
    {
        const auto inner = rec( phi->left );
        point_set out;
        for ( std::size_t w = 0; w < f.worlds(); ++w )
            if ( !( f.successors( w ) & inner ).empty() )
                out.insert( w );
        return out;
    }
    default: throw unsupported_connective( std::string{ symbol( phi->op ) }, "Kripke evaluation" );
    }
}

bool valid_in_model( const kripke_model& model, const formula& phi )
{
    return kripke_extension( model, phi ) == model.frame.all();
}

bool valid_in_frame( const kripke_frame& frame, const formula& phi, const std::vector< std::string >& alphabet )
{
    const auto bits = frame.worlds() * alphabet.size();
    if ( bits > max_frame_valuation_bits )
        throw bound_exceeded( "frame valuation bits", bits, max_frame_valuation_bits );
    for ( const auto& a : atoms_of( phi ) )
        if ( std::find( alphabet.begin(), alphabet.end(), a ) == alphabet.end() )
            throw unbound_atom( a );

    const auto subsets = all_subsets( frame.worlds() );
    kripke_model model{ frame, {} };
    return !for_each_valuation( alphabet, subsets, [ & ]( const valuation& val ) {
        model.val = val;
        return !valid_in_model( model, phi );
    } );
}

point_set topo_eval( const finite_space& space, const valuation& val, const formula& phi )
{
    const auto all = space.full();
    auto rec = [ & ]( const formula& g ) { return topo_eval( space, val, g ); };
    switch ( phi->op )
    {
    case connective::atom: return lookup( val, phi->name ) & all;
    case connective::bottom: return {};
    case connective::top: return all;
    case connective::neg: return all - rec( phi->left );
    case connective::conj: return rec( phi->left ) & rec( phi->right );
    case connective::disj: return rec( phi->left ) | rec( phi->right );
    case connective::implies: return ( all - rec( phi->left ) ) | rec( phi->right );
    case connective::box: return interior( space, rec( phi->left ) );
    case connective::diamond: return closure( space, rec( phi->left ) );
    default: throw unsupported_connective( std::string{ symbol( phi->op ) }, "topological evaluation" );
    }
}

kripke_model model_from_space( const finite_space& space, const valuation& val )
{
    const auto order = specialization_preorder( space );
    std::vector< point_set > succ;
    for ( std::size_t x = 0; x < space.points(); ++x )
        succ.push_back( order.up( x ) );
    return { kripke_frame::from_successors( std::move( succ ) ), val };
}

bool s4_report::all_valid() const
{
    return std::all_of( schemas.begin(), schemas.end(), []( const schema_result& s ) { return s.valid; } );
}

const std::vector< std::pair< std::string, formula > >& s4_schemas()
{
    static const std::vector< std::pair< std::string, formula > > schemas{
        { "K", parse_formula( "[](p -> q) -> ([]p -> []q)" ) },
        { "T", parse_formula( "[]p -> p" ) },
        { "4", parse_formula( "[]p -> [][]p" ) },
        { "T-diamond", parse_formula( "p -> <>p" ) },
        { "4-diamond", parse_formula( "<><>p -> <>p" ) },
    };
    return schemas;
}

namespace
{

template < typename Extension >
s4_report run_suite( std::size_t points, point_set all, Extension&& extension )
{
    if ( points > max_suite_points )
        throw bound_exceeded( "suite points", points, max_suite_points );
    const auto subsets = all_subsets( points );
    const std::vector< std::string > atoms{ "p", "q" };
    s4_report report;
    for ( const auto& [ label, schema ] : s4_schemas() )
    {
        schema_result r{ label, schema };
        for_each_valuation( atoms, subsets, [ & ]( const valuation& val ) {
            ++r.valuations;
            const auto value = extension( val, schema );
            if ( value != all && r.valid )
            {
                r.valid = false;
                r.counterexample = describe( val ) + " fails at " + std::to_string( first_missing( value, all ) );
            }
            return false;
        } );
        report.schemas.push_back( std::move( r ) );
    }
    return report;
}

} // namespace

s4_report s4_axiom_suite( const finite_space& space )
{
    return run_suite( space.points(), space.full(),
                      [ & ]( const valuation& val, const formula& f ) { return topo_eval( space, val, f ); } );
}

s4_report s4_axiom_suite( const kripke_frame& frame )
{
    return run_suite( frame.worlds(), frame.all(), [ & ]( const valuation& val, const formula& f ) {
        const kripke_model model{ frame, val };
        point_set out;
        for ( std::size_t w = 0; w < frame.worlds(); ++w )
            if ( kripke_eval( model, w, f ) )
                out.insert( w );
        return out;
    } );
}

std::optional< search_semantics > parse_semantics( std::string_view text )
{
    if ( text == "topological" || text == "s4" )
        return search_semantics::topological;
    if ( text == "intuitionistic" )
        return search_semantics::intuitionistic;
    if ( text == "dual" )
        return search_semantics::dual;
    if ( text == "kripke" )
        return search_semantics::kripke;
    return std::nullopt;
}

std::optional< countermodel > countermodel_search( const formula& phi, const search_options& options )
{
    const auto atom_set = atoms_of( phi );
    const std::vector< std::string > atoms{ atom_set.begin(), atom_set.end() };
    std::optional< countermodel > found;

    if ( options.semantics == search_semantics::kripke )
    {
        if ( options.max_points > max_search_worlds )
            throw bound_exceeded( "search worlds", options.max_points, max_search_worlds );
        for ( std::size_t n = 1; n <= options.max_points; ++n )
        {
            const auto subsets = all_subsets( n );
            for ( std::uint64_t mask = 0; mask < ( std::uint64_t{ 1 } << ( n * n ) ); ++mask )
            {
                std::vector< point_set > succ( n );
                for ( std::size_t i = 0; i < n * n; ++i )
                    if ( ( mask >> i ) & 1U )
                        succ[ i / n ].insert( i % n );
                const auto frame = kripke_frame::from_successors( std::move( succ ) );
                if ( !frame_in( frame, options.frame_condition ) )
                    continue;
                const bool hit = for_each_valuation( atoms, subsets, [ & ]( const valuation& val ) {
                    const kripke_model model{ frame, val };
                    const auto value = kripke_extension( model, phi );
                    if ( value == frame.all() )
                        return false;
                    found = countermodel{ std::nullopt, frame, val, first_missing( value, frame.all() ), value };
                    return true;
                } );
                if ( hit )
                    return found;
            }
        }
        return std::nullopt;
    }

    if ( options.max_points > max_search_points )
        throw bound_exceeded( "search points", options.max_points, max_search_points );
    for ( std::size_t m = 1; m <= options.max_points; ++m )
    {
        const auto subsets = all_subsets( m );
        for ( const auto& space : enumerate_topologies( m, max_search_points ) )
        {
            const auto all = space.full();
            auto refute = [ & ]( const valuation& val, point_set value ) {
                if ( value == all )
                    return false;
                found = countermodel{ space, std::nullopt, val, first_missing( value, all ), value };
                return true;
            };

            bool hit = false;
            switch ( options.semantics )
            {
            case search_semantics::topological:
                hit = for_each_valuation( atoms, subsets, [ & ]( const valuation& val ) {
                    return refute( val, topo_eval( space, val, phi ) );
                } );
                break;
            case search_semantics::intuitionistic:
            {
                const auto opens = open_lattice( space );
                hit = for_each_valuation( atoms, opens.sets, [ & ]( const valuation& val ) {
                    assignment v;
                    for ( const auto& [ atom, set ] : val )
                        v[ atom ] = opens.element_of( set );
                    return refute( val, opens.set_of( eval_intuitionistic( phi, opens.algebra, v ) ) );
                } );
                break;
            }
            case search_semantics::dual:
            {
                const auto closeds = closed_lattice( space );
                hit = for_each_valuation( atoms, closeds.sets, [ & ]( const valuation& val ) {
                    assignment v;
                    for ( const auto& [ atom, set ] : val )
                        v[ atom ] = closeds.element_of( set );
                    return refute( val, closeds.set_of( eval_dual( phi, closeds.algebra, v ) ) );
                } );
                break;
            }
            case search_semantics::kripke:
                break;
            }
            if ( hit )
                return found;
        }
    }
    return std::nullopt;
}

std::pair< kripke_model, kripke_model > worked_examples()
{
    kripke_model first{ kripke_frame{ 3, { { 0, 0 }, { 0, 1 }, { 0, 2 }, { 1, 1 }, { 2, 2 } } },
                        { { "p", point_set{ 1 } } } };
    kripke_model second{ kripke_frame{ 3, { { 0, 1 }, { 0, 2 }, { 1, 1 }, { 2, 2 } } },
                         { { "p", point_set{ 1 } }, { "q", point_set{ 2 } } } };
    return { std::move( first ), std::move( second ) };
}

point_set example2_chi()
{
    return point_set{ 0, 2 };
}

agreement_report check_alexandrov_agreement( std::size_t max_points, std::size_t max_depth,
                                             const std::vector< std::string >& atoms )
{
    if ( max_points > default_max_points )
        throw bound_exceeded( "agreement points", max_points, default_max_points );

    agreement_report report;
    std::vector< formula > leaves{ make_bottom(), make_top() };
    for ( const auto& a : atoms )
        leaves.push_back( make_atom( a ) );
    const connective unary[] = { connective::neg, connective::box, connective::diamond };
    const connective binary[] = { connective::conj, connective::disj, connective::implies };

    for ( std::size_t m = 1; m <= max_points; ++m )
    {
        const auto subsets = all_subsets( m );
        for ( const auto& space : enumerate_topologies( m ) )
        {
            ++report.spaces;
            for_each_valuation( atoms, subsets, [ & ]( const valuation& val ) {
                ++report.models;
                const auto model = model_from_space( space, val );
                std::vector< formula > rep( std::size_t{ 1 } << m );
                std::vector< point_set > found;

                auto check = [ & ]( const formula& f ) {
                    const auto value = topo_eval( space, val, f );
                    ++report.checks;
                    for ( std::size_t w = 0; w < m; ++w )
                        if ( kripke_eval( model, w, f ) != value.contains( w ) )
                        {
                            if ( report.disagreements++ == 0 )
                                report.first_disagreement = to_string( f ) + " at point " + std::to_string( w ) +
                                                            " with " + describe( val );
                            break;
                        }
                    return value;
                };
                auto add = [ & ]( std::vector< point_set >& fresh, const formula& f, point_set value ) {
                    if ( !rep[ value.bits() ] )
                    {
                        rep[ value.bits() ] = f;
                        fresh.push_back( value );
                    }
                };

                for ( const auto& leaf : leaves )
                    add( found, leaf, check( leaf ) );
                for ( std::size_t d = 1; d <= max_depth; ++d )
                {
                    std::vector< point_set > fresh;
                    for ( auto op : unary )
                        for ( auto a : found )
                        {
                            auto f = std::make_shared< const formula_node >(
                                formula_node{ op, {}, rep[ a.bits() ], nullptr } );
                            add( fresh, f, check( f ) );
                        }
                    for ( auto op : binary )
                        for ( auto a : found )
                            for ( auto b : found )
                            {
                                auto f = std::make_shared< const formula_node >(
                                    formula_node{ op, {}, rep[ a.bits() ], rep[ b.bits() ] } );
                                add( fresh, f, check( f ) );
                            }
                    found.insert( found.end(), fresh.begin(), fresh.end() );
                }
                return false;
            } );
        }
    }
    return report;
}

} // namespace biheyt
