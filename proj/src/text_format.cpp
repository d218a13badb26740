#include "biheyt/text_format.hpp"

#include "biheyt/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace biheyt
{

namespace
{

struct line
{
    std::size_t number;
    std::vector< std::string > words;
};

std::vector< line > split_lines( std::string_view text )
{
    std::vector< line > out;
    std::istringstream in{ std::string{ text } };
    std::string raw;
    for ( std::size_t number = 1; std::getline( in, raw ); ++number )
    {
        if ( auto hash = raw.find( '#' ); hash != std::string::npos )
            raw.resize( hash );
        // "val p: 1 2" splits the colon off the atom.
        std::replace( raw.begin(), raw.end(), ':', ' ' );
        std::istringstream words{ raw };
        line l{ number, {} };
        for ( std::string w; words >> w; )
            l.words.push_back( w );
        if ( !l.words.empty() )
            out.push_back( std::move( l ) );
    }
    return out;
}

std::optional< std::size_t > number( std::string_view s )
{
    std::size_t value = 0;
    auto [ ptr, ec ] = std::from_chars( s.data(), s.data() + s.size(), value );
    if ( ec != std::errc{} || ptr != s.data() + s.size() )
        return std::nullopt;
    return value;
}

// "n=3" style header attribute.
std::size_t header_size( const line& l, std::string_view key )
{
    if ( l.words.size() != 2 || !l.words[ 1 ].starts_with( std::string{ key } + "=" ) )
        throw parse_error( l.number, "expected '" + l.words[ 0 ] + " " + std::string{ key } + "=<count>'" );
    auto n = number( std::string_view{ l.words[ 1 ] }.substr( key.size() + 1 ) );
    if ( !n || *n == 0 )
        throw parse_error( l.number, "invalid count '" + l.words[ 1 ] + "'" );
    return *n;
}

std::size_t index( const line& l, const std::string& word, std::size_t bound, bool letters, bool worlds )
{
    std::optional< std::size_t > value;
    if ( letters && word.size() == 1 && word[ 0 ] >= 'a' && word[ 0 ] <= 'z' )
        value = static_cast< std::size_t >( word[ 0 ] - 'a' );
    else if ( worlds && word.size() > 1 && word[ 0 ] == 'w' )
        value = number( std::string_view{ word }.substr( 1 ) );
    else
        value = number( word );
    if ( !value )
        throw parse_error( l.number, "invalid index '" + word + "'" );
    if ( *value >= bound )
        throw parse_error( l.number, "index '" + word + "' out of range (size " + std::to_string( bound ) + ")" );
    return *value;
}

finite_lattice parse_lattice( const std::vector< line >& lines )
{
    const auto n = header_size( lines[ 0 ], "n" );
    std::vector< std::pair< element, element > > pairs;
    for ( std::size_t i = 1; i < lines.size(); ++i )
    {
        const auto& l = lines[ i ];
        if ( l.words[ 0 ] != "le" || l.words.size() != 3 )
            throw parse_error( l.number, "expected 'le <i> <j>'" );
        pairs.emplace_back( index( l, l.words[ 1 ], n, false, false ), index( l, l.words[ 2 ], n, false, false ) );
    }
    return build_lattice( n, pairs );
}

point_set parse_open( const line& l, std::size_t m )
{
    point_set s;
    if ( l.words.size() == 2 && m >= 2 && l.words[ 1 ].size() == m &&
         l.words[ 1 ].find_first_not_of( "01" ) == std::string::npos )
    {
        for ( std::size_t i = 0; i < m; ++i )
            if ( l.words[ 1 ][ i ] == '1' )
                s.insert( i );
        return s;
    }
    for ( std::size_t i = 1; i < l.words.size(); ++i )
        s.insert( index( l, l.words[ i ], m, true, false ) );
    return s;
}

finite_space parse_space( const std::vector< line >& lines )
{
    const auto m = header_size( lines[ 0 ], "m" );
    if ( m > point_set::capacity )
        throw parse_error( lines[ 0 ].number, "at most 64 points are supported" );

    if ( lines.size() > 1 && lines[ 1 ].words[ 0 ] == "preorder" )
    {
        if ( lines[ 1 ].words.size() != 1 )
            throw parse_error( lines[ 1 ].number, "expected 'preorder' on its own line" );
        std::vector< point_set > up( m );
        for ( std::size_t x = 0; x < m; ++x )
            up[ x ].insert( x );
        for ( std::size_t i = 2; i < lines.size(); ++i )
        {
            const auto& l = lines[ i ];
            if ( l.words[ 0 ] != "le" || l.words.size() != 3 )
                throw parse_error( l.number, "expected 'le <x> <y>'" );
            up[ index( l, l.words[ 1 ], m, true, false ) ].insert( index( l, l.words[ 2 ], m, true, false ) );
        }
        // Transitive closure.
        for ( std::size_t k = 0; k < m; ++k )
            for ( std::size_t x = 0; x < m; ++x )
                if ( up[ x ].contains( k ) )
                    up[ x ] = up[ x ] | up[ k ];
        return from_preorder( preorder{ m, std::move( up ) } );
    }

    std::vector< point_set > opens;
    for ( std::size_t i = 1; i < lines.size(); ++i )
    {
        const auto& l = lines[ i ];
        if ( l.words[ 0 ] != "open" )
            throw parse_error( l.number, "expected 'open <points>'" );
        opens.push_back( parse_open( l, m ) );
    }
    return validate_topology( m, std::move( opens ) );
}

kripke_model parse_frame( const std::vector< line >& lines )
{
    const auto n = header_size( lines[ 0 ], "n" );
    if ( n > point_set::capacity )
        throw parse_error( lines[ 0 ].number, "at most 64 worlds are supported" );
    std::vector< std::pair< std::size_t, std::size_t > > edges;
    valuation val;
    for ( std::size_t i = 1; i < lines.size(); ++i )
    {
        const auto& l = lines[ i ];
        if ( l.words[ 0 ] == "edge" && l.words.size() == 3 )
            edges.emplace_back( index( l, l.words[ 1 ], n, false, true ), index( l, l.words[ 2 ], n, false, true ) );
        else if ( l.words[ 0 ] == "val" && l.words.size() >= 2 )
        {
            const auto& atom = l.words[ 1 ];
            if ( !std::isalpha( static_cast< unsigned char >( atom[ 0 ] ) ) || atom == "T" )
                throw parse_error( l.number, "invalid atom name '" + atom + "'" );
            if ( val.contains( atom ) )
                throw parse_error( l.number, "atom '" + atom + "' valued twice" );
            point_set worlds;
            for ( std::size_t j = 2; j < l.words.size(); ++j )
                worlds.insert( index( l, l.words[ j ], n, false, true ) );
            val[ atom ] = worlds;
        }
        else
            throw parse_error( l.number, "expected 'edge <i> <j>' or 'val <atom>: <worlds>'" );
    }
    return { kripke_frame{ n, edges }, std::move( val ) };
}

} // namespace

structure parse_structure( std::string_view text )
{
    const auto lines = split_lines( text );
    if ( lines.empty() )
        throw parse_error( 1, "empty input" );
    const auto& kind = lines[ 0 ].words[ 0 ];
    if ( kind == "lattice" )
        return parse_lattice( lines );
    if ( kind == "space" )
        return parse_space( lines );
    if ( kind == "frame" )
        return parse_frame( lines );
    throw parse_error( lines[ 0 ].number, "unknown header '" + kind + "' (expected lattice, space or frame)" );
}

structure load_structure( const std::string& path )
{
    std::ifstream in{ path };
    if ( !in )
        throw error( "cannot open '" + path + "'" );
    std::ostringstream text;
    text << in.rdbuf();
    return parse_structure( text.str() );
}

bool is_builtin( std::string_view name )
{
    return name == "example1" || name == "example2" || name == "paper3pt" || name == "sierpinski" ||
           name == "chain3";
}

structure builtin_structure( std::string_view name )
{
    if ( name == "example1" )
        return worked_examples().first;
    if ( name == "example2" )
        return worked_examples().second;
    if ( name == "paper3pt" )
        return three_point_example();
    if ( name == "sierpinski" )
        return sierpinski_space();
    if ( name == "chain3" )
        return chain_lattice( 3 );
    throw error( "no built-in structure named '" + std::string{ name } + "'" );
}

structure resolve_structure( const std::string& name_or_path )
{
    if ( is_builtin( name_or_path ) )
        return builtin_structure( name_or_path );
    return load_structure( name_or_path );
}

std::string format_lattice( const finite_lattice& lattice )
{
    std::string out = "lattice n=" + std::to_string( lattice.size() ) + "\n";
    for ( auto [ a, b ] : lattice.hasse() )
        out += "le " + std::to_string( a ) + " " + std::to_string( b ) + "\n";
    return out;
}

std::string format_space( const finite_space& space )
{
    std::string out = "space m=" + std::to_string( space.points() ) + "\n";
    for ( auto u : space.opens() )
        out += u.empty() ? "open\n" : "open " + u.to_string() + "\n";
    return out;
}

std::string format_model( const kripke_model& model )
{
    std::string out = "frame n=" + std::to_string( model.frame.worlds() ) + "\n";
    for ( auto [ w, u ] : model.frame.edges() )
        out += "edge " + std::to_string( w ) + " " + std::to_string( u ) + "\n";
    for ( const auto& [ atom, worlds ] : model.val )
        out += "val " + atom + ":" + ( worlds.empty() ? "" : " " + worlds.to_string() ) + "\n";
    return out;
}

} // namespace biheyt
