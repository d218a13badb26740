#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace biheyt
{

// Subset of the points 0..63 of a finite space (or worlds of a frame).
class point_set
{
    std::uint64_t _bits = 0;

public:
    static constexpr std::size_t capacity = 64;

    constexpr point_set() = default;
    point_set( std::initializer_list< std::size_t > points )
    {
        for ( auto p : points )
            insert( p );
    }

    static constexpr point_set from_bits( std::uint64_t bits )
    {
        point_set s;
        s._bits = bits;
        return s;
    }

    static constexpr point_set full( std::size_t m )
    {
        return from_bits( m >= 64 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << m ) - 1 );
    }

    [[nodiscard]] constexpr std::uint64_t bits() const { return _bits; }
    [[nodiscard]] constexpr bool contains( std::size_t p ) const { return ( _bits >> p ) & 1U; }
    [[nodiscard]] constexpr bool empty() const { return _bits == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return std::popcount( _bits ); }
    [[nodiscard]] constexpr bool subset_of( point_set other ) const { return ( _bits & ~other._bits ) == 0; }

    constexpr void insert( std::size_t p ) { _bits |= std::uint64_t{ 1 } << p; }
    constexpr void erase( std::size_t p ) { _bits &= ~( std::uint64_t{ 1 } << p ); }

    friend constexpr point_set operator&( point_set a, point_set b ) { return from_bits( a._bits & b._bits ); }
    friend constexpr point_set operator|( point_set a, point_set b ) { return from_bits( a._bits | b._bits ); }
    // Set difference.
    friend constexpr point_set operator-( point_set a, point_set b ) { return from_bits( a._bits & ~b._bits ); }

    friend constexpr bool operator==( point_set, point_set ) = default;

    [[nodiscard]] std::vector< std::size_t > members() const
    {
        std::vector< std::size_t > out;
        for ( auto b = _bits; b != 0; b &= b - 1 )
            out.push_back( static_cast< std::size_t >( std::countr_zero( b ) ) );
        return out;
    }

    // Space-separated point indices, "" for the empty set.
    [[nodiscard]] std::string to_string() const;
};

// Canonical subset order: by cardinality, then by numeric bit pattern.
struct canonical_less
{
    bool operator()( point_set a, point_set b ) const
    {
        if ( a.size() != b.size() )
            return a.size() < b.size();
        return a.bits() < b.bits();
    }
};

// Subset of lattice elements of arbitrary size.
class element_set
{
    std::size_t _universe = 0;
    std::vector< std::uint64_t > _words;

public:
    element_set() = default;
    explicit element_set( std::size_t universe ) : _universe{ universe }, _words( ( universe + 63 ) / 64, 0 ) {}

    [[nodiscard]] std::size_t universe() const { return _universe; }
    [[nodiscard]] bool contains( std::size_t e ) const { return ( _words[ e / 64 ] >> ( e % 64 ) ) & 1U; }
    void insert( std::size_t e ) { _words[ e / 64 ] |= std::uint64_t{ 1 } << ( e % 64 ); }
    void erase( std::size_t e ) { _words[ e / 64 ] &= ~( std::uint64_t{ 1 } << ( e % 64 ) ); }

    [[nodiscard]] std::size_t size() const
    {
        std::size_t n = 0;
        for ( auto w : _words )
            n += std::popcount( w );
        return n;
    }
    [[nodiscard]] bool empty() const { return size() == 0; }

    [[nodiscard]] std::vector< std::size_t > members() const
    {
        std::vector< std::size_t > out;
        for ( std::size_t i = 0; i < _words.size(); ++i )
            for ( auto b = _words[ i ]; b != 0; b &= b - 1 )
                out.push_back( i * 64 + static_cast< std::size_t >( std::countr_zero( b ) ) );
        return out;
    }

    friend bool operator==( const element_set&, const element_set& ) = default;

    // Canonical order: cardinality, then members lexicographically.
    friend bool canonical_before( const element_set& a, const element_set& b )
    {
        if ( a.size() != b.size() )
            return a.size() < b.size();
        return a.members() < b.members();
    }

    [[nodiscard]] std::string to_string() const;
};

} // namespace biheyt
