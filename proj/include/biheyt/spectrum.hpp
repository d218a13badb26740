#pragma once

#include "biheyt/lattice.hpp"
#include "biheyt/quotient.hpp"
#include "biheyt/sets.hpp"
#include "biheyt/topology.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace biheyt
{

// Largest lattice the filter/spectrum routines accept by default.
inline constexpr std::size_t default_max_lattice_size = 256;

enum class subset_kind
{
    filter,
    ideal,
};

/// A proper, nonempty filter or ideal of a lattice.
struct filter_or_ideal
{
    element_set members;
    subset_kind kind;

    friend bool operator==( const filter_or_ideal&, const filter_or_ideal& ) = default;
};

/// All proper nonempty filters (resp. ideals), canonically ordered.
std::vector< filter_or_ideal > filters( const finite_lattice& lattice,
                                        std::size_t max_size = default_max_lattice_size );
std::vector< filter_or_ideal > ideals( const finite_lattice& lattice, std::size_t max_size = default_max_lattice_size );

// a | b in F implies a in F or b in F. Throws wrong_kind for ideals.
bool is_prime_filter( const finite_lattice& lattice, const filter_or_ideal& filter );

std::vector< filter_or_ideal > prime_filters( const finite_lattice& lattice,
                                              std::size_t max_size = default_max_lattice_size );

/// The space of prime filters with the topology generated by
/// beta(h) = { P | h in P }.
struct spectral_space
{
    finite_lattice base;
    std::vector< element_set > points;
    finite_space space;
    std::vector< point_set > beta;
};

// Throws not_distributive or bound_exceeded (also when there are more than
// 64 prime filters).
spectral_space spectrum( const finite_lattice& lattice, std::size_t max_size = default_max_lattice_size );

struct stone_report
{
    bool injective = true;
    bool preserves_meets = true;
    bool preserves_joins = true;
    bool surjective = true;
    bool preserves_implication = true;
    std::vector< std::string > violations;

    [[nodiscard]] bool isomorphism() const { return violations.empty(); }
};

/// Checks that beta is an injective lattice map into the opens of the
/// spectrum, that it hits every open, and that it carries -> to the
/// implication of the open-set algebra.
stone_report verify_stone_embedding( const finite_lattice& lattice, std::size_t max_size = default_max_lattice_size );

/// The map Spec(K) -> Spec(H), P |-> phi^-1(P), induced by phi : H -> K.
struct induced_point_map
{
    spectral_space domain;   // Spec(K)
    spectral_space codomain; // Spec(H)
    std::vector< std::size_t > image;
    bool continuous = false;
    // f^-1(beta(h)) == beta(phi(h)) for every h.
    bool preimage_identity = false;
};

induced_point_map induced_map( const lattice_hom& phi );

/// A total function between the points of two finite spaces.
struct point_map
{
    finite_space source;
    finite_space target;
    std::vector< std::size_t > image;

    [[nodiscard]] point_set apply( point_set s ) const;
    [[nodiscard]] point_set preimage( point_set s ) const;
};

struct open_map_verdict
{
    bool continuous = false;
    bool open = false;
    // U |-> f^-1(U) is a Heyting homomorphism of the open-set algebras.
    bool induces_heyting_hom = false;

    [[nodiscard]] bool agrees() const { return induces_heyting_hom == ( continuous && open ); }
};

open_map_verdict open_map_criterion( const point_map& f );

} // namespace biheyt
