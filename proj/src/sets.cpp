#include "biheyt/sets.hpp"

namespace biheyt
{

namespace
{

std::string join_indices( const std::vector< std::size_t >& xs )
{
    std::string out;
    for ( auto x : xs )
    {
        if ( !out.empty() )
            out += ' ';
        out += std::to_string( x );
    }
    return out;
}

} // namespace

std::string point_set::to_string() const
{
    return join_indices( members() );
}

std::string element_set::to_string() const
{
    return join_indices( members() );
}

} // namespace biheyt
