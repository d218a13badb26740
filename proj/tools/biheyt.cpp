#include "biheyt/dual_logic.hpp"
#include "biheyt/errors.hpp"
#include "biheyt/modal.hpp"
#include "biheyt/quotient.hpp"
#include "biheyt/spectrum.hpp"
#include "biheyt/text_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace biheyt;
using json = nlohmann::ordered_json;

namespace
{

enum exit_code
{
    ok = 0,
    violation = 1,
    usage = 2,
};

class usage_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string render( const json& v )
{
    if ( v.is_string() )
        return v.get< std::string >();
    if ( v.is_null() )
        return "-";
    if ( v.is_array() )
    {
        std::string out = "{";
        for ( std::size_t i = 0; i < v.size(); ++i )
            out += ( i ? "," : "" ) + render( v[ i ] );
        return out + "}";
    }
    if ( v.is_object() )
    {
        std::string out;
        for ( const auto& [ key, item ] : v.items() )
            out += ( out.empty() ? "" : " " ) + key + "=" + render( item );
        return out;
    }
    return v.dump();
}

// Human output is aligned text, machine output one JSON object per line.
class printer
{
    bool _json = false;
    std::ostream& _out;

public:
    printer( bool json_lines, std::ostream& out ) : _json{ json_lines }, _out{ out } {}

    void fields( const json& record )
    {
        if ( _json )
        {
            _out << record.dump() << '\n';
            return;
        }
        std::size_t width = 0;
        for ( const auto& [ key, value ] : record.items() )
            width = std::max( width, key.size() );
        for ( const auto& [ key, value ] : record.items() )
            _out << key << std::string( width - key.size() + 2, ' ' ) << render( value ) << '\n';
    }

    void table( const std::vector< json >& rows )
    {
        if ( _json )
        {
            for ( const auto& r : rows )
                _out << r.dump() << '\n';
            return;
        }
        if ( rows.empty() )
            return;
        std::vector< std::string > keys;
        for ( const auto& [ key, value ] : rows.front().items() )
            keys.push_back( key );
        std::vector< std::size_t > width;
        for ( const auto& k : keys )
            width.push_back( k.size() );
        std::vector< std::vector< std::string > > cells;
        for ( const auto& r : rows )
        {
            auto& line = cells.emplace_back();
            for ( std::size_t i = 0; i < keys.size(); ++i )
            {
                line.push_back( r.contains( keys[ i ] ) ? render( r[ keys[ i ] ] ) : "" );
                width[ i ] = std::max( width[ i ], line.back().size() );
            }
        }
        auto emit = [ & ]( const std::vector< std::string >& line ) {
            std::string text;
            for ( std::size_t i = 0; i < line.size(); ++i )
                text += line[ i ] + ( i + 1 < line.size() ? std::string( width[ i ] - line[ i ].size() + 2, ' ' ) : "" );
            _out << text << '\n';
        };
        emit( keys );
        for ( const auto& line : cells )
            emit( line );
    }

    // A bare value: the text itself for humans, {key: value} for machines.
    void value( const std::string& key, const json& v )
    {
        if ( _json )
            _out << json{ { key, v } }.dump() << '\n';
        else
            _out << render( v ) << '\n';
    }

    // Structure text in the file format.
    void text( const std::string& key, const std::string& body )
    {
        if ( _json )
            _out << json{ { key, body } }.dump() << '\n';
        else
            _out << body;
    }

    void blank()
    {
        if ( !_json )
            _out << '\n';
    }
};

json set_json( point_set s )
{
    json out = json::array();
    for ( auto x : s.members() )
        out.push_back( x );
    return out;
}

json set_json( const element_set& s )
{
    json out = json::array();
    for ( auto x : s.members() )
        out.push_back( x );
    return out;
}

json valuation_json( const valuation& val )
{
    json out = json::object();
    for ( const auto& [ atom, set ] : val )
        out[ atom ] = set_json( set );
    return out;
}

std::optional< std::size_t > parse_index( std::string_view s )
{
    std::size_t value = 0;
    auto [ ptr, ec ] = std::from_chars( s.data(), s.data() + s.size(), value );
    if ( ec != std::errc{} || ptr != s.data() + s.size() )
        return std::nullopt;
    return value;
}

// "0 1", "0,1", "a,b" or "w0 w2"; empty for the empty set.
std::vector< std::size_t > parse_indices( const std::string& text, std::size_t bound, const std::string& what )
{
    std::string spaced = text;
    std::replace( spaced.begin(), spaced.end(), ',', ' ' );
    std::istringstream in{ spaced };
    std::vector< std::size_t > out;
    for ( std::string word; in >> word; )
    {
        std::optional< std::size_t > v;
        if ( word.size() == 1 && word[ 0 ] >= 'a' && word[ 0 ] <= 'z' )
            v = static_cast< std::size_t >( word[ 0 ] - 'a' );
        else if ( word.size() > 1 && word[ 0 ] == 'w' )
            v = parse_index( std::string_view{ word }.substr( 1 ) );
        else
            v = parse_index( word );
        if ( !v )
            throw usage_error( "invalid " + what + " '" + word + "'" );
        if ( *v >= bound )
            throw usage_error( what + " '" + word + "' out of range (size " + std::to_string( bound ) + ")" );
        out.push_back( *v );
    }
    return out;
}

point_set parse_point_set( const std::string& text, std::size_t points, const std::string& what )
{
    point_set s;
    for ( auto x : parse_indices( text, points, what ) )
        s.insert( x );
    return s;
}

// BIHEYT_MAX_POINTS caps every enumeration size given on the command line.
std::size_t capped( std::size_t requested, const std::string& flag )
{
    if ( requested == 0 )
        throw usage_error( flag + " must be positive" );
    const char* env = std::getenv( "BIHEYT_MAX_POINTS" );
    if ( env == nullptr )
        return requested;
    const auto cap = parse_index( env );
    if ( !cap || *cap == 0 )
        throw usage_error( std::string{ "BIHEYT_MAX_POINTS must be a positive integer, got '" } + env + "'" );
    if ( requested > *cap )
        throw usage_error( flag + " " + std::to_string( requested ) + " exceeds BIHEYT_MAX_POINTS=" +
                           std::to_string( *cap ) );
    return requested;
}

structure load( const std::string& source )
{
    if ( !is_builtin( source ) && !std::filesystem::exists( source ) )
        throw usage_error( "no built-in structure or file named '" + source + "'" );
    return resolve_structure( source );
}

template < typename T >
const T& expect( const structure& s, const std::string& source, const char* kind )
{
    if ( const auto* v = std::get_if< T >( &s ) )
        return *v;
    throw usage_error( "'" + source + "' is not a " + kind );
}

std::vector< finite_space > spaces_up_to( std::size_t m )
{
    std::vector< finite_space > out;
    for ( std::size_t k = 1; k <= m; ++k )
        for ( auto& x : enumerate_topologies( k ) )
            out.push_back( x );
    return out;
}

json law_row( const law_result& r, const char* expectation )
{
    return json{ { "law", r.name },
                 { "checked", r.checked },
                 { "violations", r.violations },
                 { "expected", expectation },
                 { "status", ( r.passed() == ( std::string{ expectation } == "hold" ) ) ? "pass" : "FAIL" },
                 { "witness", r.first_witness ? json( *r.first_witness ) : json() } };
}

void print_countermodel( printer& out, const std::optional< countermodel >& c )
{
    if ( !c )
    {
        out.fields( json{ { "countermodel", "none" } } );
        return;
    }
    json summary{ { "countermodel", "found" } };
    if ( c->space )
        summary[ "points" ] = c->space->points();
    else
        summary[ "worlds" ] = c->frame->worlds();
    summary[ "valuation" ] = valuation_json( c->val );
    summary[ "fails at" ] = c->point;
    summary[ "value" ] = set_json( c->value );
    out.fields( summary );
    out.blank();
    if ( c->space )
        out.text( "space", format_space( *c->space ) );
    else
        out.text( "model", format_model( { *c->frame, c->val } ) );
}

struct options
{
    std::string format = "human";
    std::string source;
    std::string ideal, filter;
    std::size_t points = 3;
    std::size_t max_size = 6;
    std::size_t depth = 3;
    std::string formula_text;
    std::string world;
    std::string semantics = "topological";
    std::string frame_class = "K";
    std::vector< std::string > assign;
    bool dual = false;
    bool frame_validity = false;
};

modal_system parse_system( const std::string& text )
{
    for ( auto s : { modal_system::K, modal_system::T, modal_system::S4, modal_system::S5 } )
        if ( name( s ) == text )
            return s;
    throw usage_error( "unknown frame class '" + text + "' (expected K, T, S4 or S5)" );
}

int lattice_check( const options& o, printer& out )
{
    const auto loaded = load( o.source );
    const auto& l = expect< finite_lattice >( loaded, o.source, "lattice" );
    json r{ { "size", l.size() },
            { "bottom", l.bottom() },
            { "top", l.top() },
            { "covers", l.hasse().size() },
            { "distributive", l.distributive() },
            { "heyting", l.distributive() },
            { "boolean", l.distributive() && is_boolean( l ) } };
    if ( const auto& w = l.distributivity_witness() )
        r[ "distributivity witness" ] = json::array( { ( *w )[ 0 ], ( *w )[ 1 ], ( *w )[ 2 ] } );
    out.fields( r );
    return ok;
}

int lattice_spectrum( const options& o, printer& out )
{
    const auto loaded = load( o.source );
    const auto& l = expect< finite_lattice >( loaded, o.source, "lattice" );
    const auto s = spectrum( l );
    std::vector< json > points;
    for ( std::size_t p = 0; p < s.points.size(); ++p )
        points.push_back( json{ { "point", p }, { "prime filter", set_json( s.points[ p ] ) } } );
    out.table( points );
    out.blank();
    std::vector< json > beta;
    for ( element a = 0; a < l.size(); ++a )
        beta.push_back( json{ { "element", a }, { "beta", set_json( s.beta[ a ] ) } } );
    out.table( beta );
    out.blank();
    out.text( "space", format_space( s.space ) );
    const auto report = verify_stone_embedding( l );
    out.blank();
    out.fields( json{ { "isomorphism", report.isomorphism() } } );
    return report.isomorphism() ? ok : violation;
}

int lattice_quotient( const options& o, printer& out )
{
    const auto loaded = load( o.source );
    const auto& l = expect< finite_lattice >( loaded, o.source, "lattice" );
    if ( o.ideal.empty() == o.filter.empty() )
        throw usage_error( "give exactly one of --by-ideal and --by-filter" );
    const heyting_algebra h{ l };
    element_set members( l.size() );
    for ( auto x : parse_indices( o.ideal.empty() ? o.filter : o.ideal, l.size(), "element" ) )
        members.insert( x );
    const auto q = o.ideal.empty() ? quotient_by_filter( h, members ) : quotient_by_ideal( h, members );
    std::vector< json > rows;
    for ( element a = 0; a < l.size(); ++a )
        rows.push_back( json{ { "element", a }, { "class", q.projection( a ) } } );
    out.table( rows );
    out.blank();
    out.text( "quotient", format_lattice( q.lattice ) );
    return ok;
}

int space_check( const options& o, printer& out )
{
    const auto loaded = load( o.source );
    const auto& x = expect< finite_space >( loaded, o.source, "space" );
    const auto order = specialization_preorder( x );
    bool t0 = true;
    for ( std::size_t a = 0; a < x.points(); ++a )
        for ( std::size_t b = a + 1; b < x.points(); ++b )
            t0 = t0 && !( order.related( a, b ) && order.related( b, a ) );
    const auto frame = model_from_space( x, {} ).frame;
    out.fields( json{ { "points", x.points() },
                      { "opens", x.opens().size() },
                      { "t0", t0 },
                      { "discrete", order.symmetric() && t0 },
                      { "specialization", std::string{ name( classify_frame( frame ).system ) } } } );
    return ok;
}

int space_sets( const options& o, printer& out, bool closed )
{
    const auto loaded = load( o.source );
    const auto& x = expect< finite_space >( loaded, o.source, "space" );
    std::vector< json > rows;
    const auto sets = closed ? x.closeds() : x.opens();
    for ( std::size_t i = 0; i < sets.size(); ++i )
        rows.push_back( json{ { "index", i }, { closed ? "closed" : "open", set_json( sets[ i ] ) } } );
    out.table( rows );
    return ok;
}

int verify_dual_laws( const options& o, printer& out )
{
    const auto r = run_dual_law_suite( capped( o.points, "--points" ) );
    std::vector< json > rows;
    for ( const auto& law : r.laws.laws )
        rows.push_back( law_row( law, "hold" ) );
    rows.push_back( law_row( r.disjunctive_de_morgan, "fail" ) );
    out.table( rows );
    out.blank();
    out.fields( json{ { "spaces", r.spaces },
                      { "paraconsistency witness",
                        r.paraconsistent_witness ? json( *r.paraconsistent_witness ) : json() },
                      { "result", r.passed() ? "pass" : "FAIL" } } );
    return r.passed() ? ok : violation;
}

int verify_stone( const options& o, printer& out )
{
    std::size_t lattices = 0, failures = 0;
    std::optional< std::string > first;
    for ( const auto& l : enumerate_lattices( o.max_size, true ) )
    {
        ++lattices;
        const auto r = verify_stone_embedding( l );
        if ( !r.isomorphism() )
        {
            ++failures;
            if ( !first && !r.violations.empty() )
                first = r.violations.front();
        }
    }
    out.fields( json{ { "max size", o.max_size },
                      { "lattices", lattices },
                      { "violations", failures },
                      { "witness", first ? json( *first ) : json() },
                      { "result", failures == 0 ? "pass" : "FAIL" } } );
    return failures == 0 ? ok : violation;
}

int verify_functoriality( const options& o, printer& out )
{
    const auto lattices = enumerate_lattices( o.max_size, true );
    std::size_t homs = 0, pairs = 0, failures = 0;
    for ( const auto& h : lattices )
    {
        const auto id = induced_map( identity_hom( h ) );
        for ( std::size_t p = 0; p < id.image.size(); ++p )
            failures += id.image[ p ] != p;
    }
    for ( const auto& h : lattices )
        for ( const auto& k : lattices )
            for ( const auto& phi : enumerate_homs( h, k ) )
            {
                ++homs;
                const auto f = induced_map( phi );
                failures += !f.continuous || !f.preimage_identity;
                for ( const auto& l : lattices )
                    for ( const auto& psi : enumerate_homs( k, l ) )
                    {
                        ++pairs;
                        const auto g = induced_map( psi );
                        const auto gf = induced_map( compose( psi, phi ) );
                        for ( std::size_t p = 0; p < gf.image.size(); ++p )
                            failures += gf.image[ p ] != f.image[ g.image[ p ] ];
                    }
            }
    out.fields( json{ { "max size", o.max_size },
                      { "lattices", lattices.size() },
                      { "homs", homs },
                      { "composable pairs", pairs },
                      { "violations", failures },
                      { "result", failures == 0 ? "pass" : "FAIL" } } );
    return failures == 0 ? ok : violation;
}

int verify_s4( const options& o, printer& out )
{
    const auto spaces = spaces_up_to( capped( o.points, "--points" ) );
    std::vector< json > rows;
    bool all = true;
    for ( std::size_t i = 0; i < s4_schemas().size(); ++i )
    {
        std::size_t failures = 0, valuations = 0;
        std::optional< std::string > first;
        for ( const auto& x : spaces )
        {
            const auto& s = s4_axiom_suite( x ).schemas[ i ];
            valuations += s.valuations;
            if ( !s.valid )
            {
                ++failures;
                if ( !first )
                    first = s.counterexample;
            }
        }
        all = all && failures == 0;
        rows.push_back( json{ { "schema", s4_schemas()[ i ].first },
                              { "formula", to_string( s4_schemas()[ i ].second ) },
                              { "valuations", valuations },
                              { "failing spaces", failures },
                              { "status", failures == 0 ? "pass" : "FAIL" },
                              { "witness", first ? json( *first ) : json() } } );
    }
    out.table( rows );
    out.blank();
    out.fields( json{ { "spaces", spaces.size() }, { "result", all ? "pass" : "FAIL" } } );
    return all ? ok : violation;
}

int verify_boolean( const options& o, printer& out )
{
    std::size_t lattices = 0, spaces = 0, boolean = 0, failures = 0;
    for ( const auto& l : enumerate_lattices( o.max_size, true ) )
    {
        ++lattices;
        const auto v = boolean_iff_trivial_boundary( l );
        boolean += v.complemented;
        failures += !v.agrees();
    }
    for ( const auto& x : spaces_up_to( capped( o.points, "--points" ) ) )
    {
        ++spaces;
        failures += !boolean_iff_trivial_boundary( open_lattice( x ).algebra.lattice() ).agrees();
    }
    out.fields( json{ { "distributive lattices", lattices },
                      { "boolean lattices", boolean },
                      { "spaces", spaces },
                      { "disagreements", failures },
                      { "result", failures == 0 ? "pass" : "FAIL" } } );
    return failures == 0 ? ok : violation;
}

int verify_bridge( const options& o, printer& out )
{
    const auto r = check_alexandrov_agreement( capped( o.points, "--points" ), o.depth );
    out.fields( json{ { "spaces", r.spaces },
                      { "models", r.models },
                      { "checks", r.checks },
                      { "disagreements", r.disagreements },
                      { "witness", r.first_disagreement ? json( *r.first_disagreement ) : json() },
                      { "result", r.disagreements == 0 ? "pass" : "FAIL" } } );
    return r.disagreements == 0 ? ok : violation;
}

int verify_open_maps( const options& o, printer& out )
{
    const auto spaces = spaces_up_to( capped( o.points, "--points" ) );
    std::size_t maps = 0, forward_failures = 0, converse_failures = 0, t0_failures = 0;
    std::optional< std::string > converse_witness;
    for ( const auto& x : spaces )
        for ( const auto& y : spaces )
        {
            const auto order = specialization_preorder( y );
            bool t0 = true;
            for ( std::size_t a = 0; a < y.points(); ++a )
                for ( std::size_t b = a + 1; b < y.points(); ++b )
                    t0 = t0 && !( order.related( a, b ) && order.related( b, a ) );
            std::vector< std::size_t > image( x.points(), 0 );
            while ( true )
            {
                ++maps;
                const auto v = open_map_criterion( { x, y, image } );
                forward_failures += v.continuous && v.open && !v.induces_heyting_hom;
                if ( !v.agrees() )
                {
                    ++converse_failures;
                    t0_failures += t0;
                    if ( !converse_witness )
                    {
                        std::string text = format_space( x ) + "->\n" + format_space( y ) + "image";
                        for ( auto p : image )
                            text += " " + std::to_string( p );
                        converse_witness = text;
                    }
                }
                std::size_t i = 0;
                while ( i < image.size() && ++image[ i ] == y.points() )
                    image[ i++ ] = 0;
                if ( i == image.size() )
                    break;
            }
        }
    out.fields( json{ { "maps", maps },
                      { "open and continuous without hom", forward_failures },
                      { "hom without open and continuous", converse_failures },
                      { "of which into T0 targets", t0_failures },
                      { "result", forward_failures == 0 && t0_failures == 0 ? "pass" : "FAIL" } } );
    if ( converse_witness )
    {
        out.blank();
        out.text( "first non-T0 counterexample", *converse_witness + "\n" );
    }
    return forward_failures == 0 && t0_failures == 0 ? ok : violation;
}

formula formula_of( const options& o )
{
    if ( o.formula_text.empty() )
        throw usage_error( "--formula is required" );
    return parse_formula( o.formula_text );
}

const kripke_model& model_of( const structure& s, const std::string& source )
{
    return expect< kripke_model >( s, source, "Kripke model (frame file)" );
}

int modal_eval( const options& o, printer& out )
{
    const auto s = load( o.source );
    const auto& m = model_of( s, o.source );
    const auto phi = formula_of( o );
    if ( o.world.empty() )
    {
        out.value( "worlds", set_json( kripke_extension( m, phi ) ) );
        return ok;
    }
    const auto w = parse_indices( o.world, m.frame.worlds(), "world" );
    if ( w.size() != 1 )
        throw usage_error( "--world takes a single world" );
    out.value( "value", kripke_eval( m, w[ 0 ], phi ) );
    return ok;
}

int modal_valid( const options& o, printer& out )
{
    const auto s = load( o.source );
    const auto& m = model_of( s, o.source );
    const auto phi = formula_of( o );
    bool valid = false;
    if ( o.frame_validity )
    {
        const auto atoms = atoms_of( phi );
        valid = valid_in_frame( m.frame, phi, { atoms.begin(), atoms.end() } );
    }
    else
        valid = valid_in_model( m, phi );
    out.value( "valid", valid );
    return valid ? ok : violation;
}

int run_search( const options& o, printer& out, std::string semantics_text )
{
    const auto semantics = parse_semantics( semantics_text );
    if ( !semantics )
        throw usage_error( "unknown semantics '" + semantics_text +
                           "' (expected topological, s4, intuitionistic, dual or kripke)" );
    const auto phi = formula_of( o );
    const auto c = countermodel_search(
        phi, { *semantics, capped( o.points, "--max-points" ), parse_system( o.frame_class ) } );
    print_countermodel( out, c );
    return c ? violation : ok;
}

int eval_algebra( const options& o, printer& out )
{
    const auto s = load( o.source );
    const auto phi = formula_of( o );
    std::vector< std::pair< std::string, std::string > > pairs;
    for ( const auto& a : o.assign )
    {
        const auto eq = a.find( '=' );
        if ( eq == std::string::npos || eq == 0 )
            throw usage_error( "--assign expects atom=value, got '" + a + "'" );
        pairs.emplace_back( a.substr( 0, eq ), a.substr( eq + 1 ) );
    }

    if ( const auto* l = std::get_if< finite_lattice >( &s ) )
    {
        assignment v;
        for ( const auto& [ atom, text ] : pairs )
        {
            const auto e = parse_indices( text, l->size(), "element" );
            if ( e.size() != 1 )
                throw usage_error( "atom '" + atom + "' needs exactly one element" );
            v[ atom ] = e[ 0 ];
        }
        const auto value = o.dual ? eval_dual( phi, coheyting_algebra{ *l }, v )
                                  : eval_intuitionistic( phi, heyting_algebra{ *l }, v );
        out.value( "value", value );
        return ok;
    }
    if ( const auto* x = std::get_if< finite_space >( &s ) )
    {
        assignment v;
        if ( o.dual )
        {
            const auto closeds = closed_lattice( *x );
            for ( const auto& [ atom, text ] : pairs )
            {
                const auto set = parse_point_set( text, x->points(), "point" );
                if ( !x->is_closed( set ) )
                    throw usage_error( "value of '" + atom + "' is not closed" );
                v[ atom ] = closeds.element_of( set );
            }
            out.value( "value", set_json( closeds.set_of( eval_dual( phi, closeds.algebra, v ) ) ) );
        }
        else
        {
            const auto opens = open_lattice( *x );
            for ( const auto& [ atom, text ] : pairs )
            {
                const auto set = parse_point_set( text, x->points(), "point" );
                if ( !x->is_open( set ) )
                    throw usage_error( "value of '" + atom + "' is not open" );
                v[ atom ] = opens.element_of( set );
            }
            out.value( "value", set_json( opens.set_of( eval_intuitionistic( phi, opens.algebra, v ) ) ) );
        }
        return ok;
    }
    throw usage_error( "'" + o.source + "' is not a lattice or a space" );
}

const CLI::App* deepest( const CLI::App* app )
{
    while ( !app->get_subcommands().empty() )
        app = app->get_subcommands().front();
    return app;
}

} // namespace

int main( int argc, char** argv )
{
    CLI::App app{ "Finite Heyting, co-Heyting and S4 structures: checks, spectra, law suites and countermodels",
                  "biheyt" };
    app.require_subcommand( 1 );
    options o;
    std::function< int( printer& ) > action;

    auto add_format = [ & ]( CLI::App* sub ) {
        sub->add_option( "--format", o.format, "Output format" )->check( CLI::IsMember( { "human", "json" } ) );
    };
    auto add_source = [ & ]( CLI::App* sub, const char* what ) {
        sub->add_option( "structure", o.source, what )->required();
        add_format( sub );
    };

    auto* lattice = app.add_subcommand( "lattice", "Finite lattices" );
    lattice->require_subcommand( 1 );
    auto* lcheck = lattice->add_subcommand( "check", "Validate a lattice and report its properties" );
    add_source( lcheck, "Lattice file or built-in name" );
    lcheck->callback( [ & ] { action = [ & ]( printer& p ) { return lattice_check( o, p ); }; } );
    auto* lspec = lattice->add_subcommand( "spectrum", "Prime filters, the spectral space and the Stone map" );
    add_source( lspec, "Lattice file or built-in name" );
    lspec->callback( [ & ] { action = [ & ]( printer& p ) { return lattice_spectrum( o, p ); }; } );
    auto* lquot = lattice->add_subcommand( "quotient", "Quotient by an ideal or a filter" );
    add_source( lquot, "Lattice file or built-in name" );
    lquot->add_option( "--by-ideal", o.ideal, "Elements of the ideal, e.g. \"0,1\"" );
    lquot->add_option( "--by-filter", o.filter, "Elements of the filter, e.g. \"1,2\"" );
    lquot->callback( [ & ] { action = [ & ]( printer& p ) { return lattice_quotient( o, p ); }; } );

    auto* space = app.add_subcommand( "space", "Finite topological spaces" );
    space->require_subcommand( 1 );
    auto* scheck = space->add_subcommand( "check", "Validate a space" );
    add_source( scheck, "Space file or built-in name" );
    scheck->callback( [ & ] { action = [ & ]( printer& p ) { return space_check( o, p ); }; } );
    auto* sopens = space->add_subcommand( "opens", "List the open sets" );
    add_source( sopens, "Space file or built-in name" );
    sopens->callback( [ & ] { action = [ & ]( printer& p ) { return space_sets( o, p, false ); }; } );
    auto* sclosed = space->add_subcommand( "closeds", "List the closed sets" );
    add_source( sclosed, "Space file or built-in name" );
    sclosed->callback( [ & ] { action = [ & ]( printer& p ) { return space_sets( o, p, true ); }; } );

    auto* verify = app.add_subcommand( "verify", "Exhaustive law suites" );
    verify->require_subcommand( 1 );
    auto add_points = [ & ]( CLI::App* sub, std::size_t fallback ) {
        o.points = fallback;
        sub->add_option( "--points", o.points, "Largest number of points" )->capture_default_str();
        add_format( sub );
    };
    auto add_max_size = [ & ]( CLI::App* sub, std::size_t fallback ) {
        sub->add_option( "--max-size", o.max_size, "Largest lattice size (default " + std::to_string( fallback ) + ")" );
    };
    auto* vdual = verify->add_subcommand( "dual-laws", "De Morgan, excluded middle and boundary laws on closed sets" );
    add_points( vdual, 3 );
    vdual->callback( [ & ] { action = [ & ]( printer& p ) { return verify_dual_laws( o, p ); }; } );
    auto* vstone = verify->add_subcommand( "stone", "Stone isomorphism for distributive lattices" );
    add_max_size( vstone, 6 );
    add_format( vstone );
    vstone->callback( [ & ] { action = [ & ]( printer& p ) { return verify_stone( o, p ); }; } );
    auto* vfunct = verify->add_subcommand( "functoriality", "Spectrum functor on homomorphism pairs" );
    add_max_size( vfunct, 5 );
    add_format( vfunct );
    vfunct->preparse_callback( [ & ]( std::size_t ) { o.max_size = 5; } );
    vfunct->callback( [ & ] { action = [ & ]( printer& p ) { return verify_functoriality( o, p ); }; } );
    auto* vs4 = verify->add_subcommand( "s4", "S4 schemas on every small topology" );
    add_points( vs4, 4 );
    vs4->callback( [ & ] { action = [ & ]( printer& p ) { return verify_s4( o, p ); }; } );
    auto* vbool = verify->add_subcommand( "boolean", "Complements, boundaries and double negation agree" );
    add_points( vbool, 4 );
    add_max_size( vbool, 7 );
    vbool->callback( [ & ] { action = [ & ]( printer& p ) { return verify_boolean( o, p ); }; } );
    auto* vbridge = verify->add_subcommand( "bridge", "Kripke and topological evaluation agree" );
    add_points( vbridge, 3 );
    vbridge->add_option( "--depth", o.depth, "Formula depth" )->capture_default_str();
    vbridge->callback( [ & ] { action = [ & ]( printer& p ) { return verify_bridge( o, p ); }; } );
    auto* vopen = verify->add_subcommand( "open-maps", "Open continuous maps and Heyting preimages" );
    add_points( vopen, 3 );
    vopen->callback( [ & ] { action = [ & ]( printer& p ) { return verify_open_maps( o, p ); }; } );
    // Each suite has its own default point count.
    vdual->preparse_callback( [ & ]( std::size_t ) { o.points = 3; } );
    vs4->preparse_callback( [ & ]( std::size_t ) { o.points = 4; } );
    vbool->preparse_callback( [ & ]( std::size_t ) {
        o.points = 4;
        o.max_size = 7;
    } );
    vbridge->preparse_callback( [ & ]( std::size_t ) { o.points = 3; } );
    vopen->preparse_callback( [ & ]( std::size_t ) { o.points = 3; } );
    o.points = 3;

    auto* modal = app.add_subcommand( "modal", "Kripke models" );
    modal->require_subcommand( 1 );
    auto* meval = modal->add_subcommand( "eval", "Evaluate a formula in a Kripke model" );
    meval->add_option( "--model", o.source, "Frame file or built-in name" )->required();
    meval->add_option( "--formula", o.formula_text, "Formula" )->required();
    meval->add_option( "--world", o.world, "World (w0 or 0); all satisfying worlds when omitted" );
    add_format( meval );
    meval->callback( [ & ] { action = [ & ]( printer& p ) { return modal_eval( o, p ); }; } );
    auto* mvalid = modal->add_subcommand( "valid", "Validity in a model, or in its frame" );
    mvalid->add_option( "--model", o.source, "Frame file or built-in name" )->required();
    mvalid->add_option( "--formula", o.formula_text, "Formula" )->required();
    mvalid->add_flag( "--frame", o.frame_validity, "Quantify over every valuation of the frame" );
    add_format( mvalid );
    mvalid->callback( [ & ] { action = [ & ]( printer& p ) { return modal_valid( o, p ); }; } );
    auto* msearch = modal->add_subcommand( "search", "Search Kripke frames for a countermodel" );
    msearch->add_option( "--formula", o.formula_text, "Formula" )->required();
    msearch->add_option( "--max-points", o.points, "Largest number of worlds" )->capture_default_str();
    msearch->add_option( "--frame-class", o.frame_class, "Only frames of this class: K, T, S4 or S5" )
        ->capture_default_str();
    add_format( msearch );
    msearch->callback( [ & ] { action = [ & ]( printer& p ) { return run_search( o, p, "kripke" ); }; } );

    auto* search = app.add_subcommand( "search", "Search small structures for a countermodel" );
    search->add_option( "--formula", o.formula_text, "Formula" )->required();
    search->add_option( "--semantics", o.semantics, "topological (s4), intuitionistic, dual or kripke" )
        ->capture_default_str();
    search->add_option( "--max-points", o.points, "Largest number of points or worlds" )->capture_default_str();
    search->add_option( "--frame-class", o.frame_class, "For kripke: only frames of this class" )
        ->capture_default_str();
    add_format( search );
    search->callback( [ & ] { action = [ & ]( printer& p ) { return run_search( o, p, o.semantics ); }; } );

    auto* eval = app.add_subcommand( "eval", "Evaluate a formula in a lattice or in the opens of a space" );
    eval->add_option( "--algebra", o.source, "Lattice or space file, or built-in name" )->required();
    eval->add_option( "--formula", o.formula_text, "Formula" )->required();
    eval->add_option( "--assign", o.assign, "atom=value: an element index, or points of an open (closed) set" );
    eval->add_flag( "--dual", o.dual, "Co-Heyting evaluation (closed sets for spaces)" );
    add_format( eval );
    eval->callback( [ & ] { action = [ & ]( printer& p ) { return eval_algebra( o, p ); }; } );

    try
    {
        app.parse( argc, argv );
    }
    catch ( const CLI::CallForHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::CallForAllHelp& e )
    {
        return app.exit( e );
    }
    catch ( const CLI::ParseError& e )
    {
        std::cerr << "error: " << e.what() << "\n\n" << deepest( &app )->help();
        return usage;
    }

    printer out{ o.format == "json", std::cout };
    try
    {
        return action( out );
    }
    catch ( const usage_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const parse_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const syntax_error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const bound_exceeded& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const unsupported_connective& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const unbound_atom& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    catch ( const biheyt::error& e )
    {
        std::cerr << "error: " << e.what() << '\n';
        return violation;
    }
}
