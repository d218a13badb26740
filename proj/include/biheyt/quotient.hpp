#pragma once

#include "biheyt/lattice.hpp"
#include "biheyt/sets.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace biheyt
{

enum class hom_flavor
{
    lattice,   // bounds, meets and joins
    heyting,   // additionally ->
    coheyting, // additionally <-
};

/// A verified map between finite lattices. Only check_hom and the
/// enumerators produce these.
class lattice_hom
{
    finite_lattice _source;
    finite_lattice _target;
    std::vector< element > _map;
    hom_flavor _flavor;

    lattice_hom( finite_lattice source, finite_lattice target, std::vector< element > map, hom_flavor flavor )
        : _source{ std::move( source ) }, _target{ std::move( target ) }, _map{ std::move( map ) }, _flavor{ flavor } {}

    friend lattice_hom check_hom( std::vector< element >, const finite_lattice&, const finite_lattice&, hom_flavor );

public:
    [[nodiscard]] const finite_lattice& source() const { return _source; }
    [[nodiscard]] const finite_lattice& target() const { return _target; }
    [[nodiscard]] const std::vector< element >& map() const { return _map; }
    [[nodiscard]] element operator()( element a ) const { return _map[ a ]; }
    [[nodiscard]] hom_flavor flavor() const { return _flavor; }
    [[nodiscard]] bool surjective() const;
};

/// Verifies `map` as a homomorphism of the given flavor. Throws
/// not_a_homomorphism naming the first failing operation and argument pair
/// (bottom/top failures report the pair (0, 0)), or not_distributive when a
/// Heyting/co-Heyting check is requested on a non-distributive lattice.
lattice_hom check_hom( std::vector< element > map, const finite_lattice& source, const finite_lattice& target,
                       hom_flavor flavor );

// Same check without throwing; returns the failure message instead.
std::optional< std::string > hom_failure( const std::vector< element >& map, const finite_lattice& source,
                                          const finite_lattice& target, hom_flavor flavor );

lattice_hom identity_hom( const finite_lattice& lattice, hom_flavor flavor = hom_flavor::lattice );
// Throws error when the targets/sources do not line up.
lattice_hom compose( const lattice_hom& second, const lattice_hom& first );

/// All homomorphisms source -> target of the flavor, in lexicographic order
/// of their element tables. Exhaustive search; meant for small lattices.
std::vector< lattice_hom > enumerate_homs( const finite_lattice& source, const finite_lattice& target,
                                           hom_flavor flavor = hom_flavor::lattice );

// The preimage of the target's bottom.
element_set kernel( const lattice_hom& hom );
// The preimage of the target's top.
element_set cokernel( const lattice_hom& hom );

/// All bounded-lattice homomorphisms onto the two-element lattice.
std::vector< lattice_hom > two_valued_homs( const finite_lattice& lattice );

/// An equivalence relation on lattice elements given by its blocks. Blocks
/// are sorted by their least member and each block is sorted.
class congruence
{
    std::size_t _n = 0;
    std::vector< std::size_t > _block_of;
    std::vector< std::vector< element > > _blocks;

public:
    congruence() = default;
    // Any labelling of elements by block id; normalised on construction.
    explicit congruence( const std::vector< std::size_t >& labels );

    [[nodiscard]] std::size_t universe() const { return _n; }
    [[nodiscard]] std::size_t block_of( element a ) const { return _block_of[ a ]; }
    [[nodiscard]] bool related( element a, element b ) const { return _block_of[ a ] == _block_of[ b ]; }
    [[nodiscard]] const std::vector< std::vector< element > >& blocks() const { return _blocks; }

    friend bool operator==( const congruence&, const congruence& ) = default;
};

/// Throws not_a_congruence with a witness unless `relation` is compatible
/// with meet and join (and with -> / <- for those flavors).
void verify_congruence( const finite_lattice& lattice, const congruence& relation, hom_flavor flavor );

// Throws wrong_kind unless the set is a proper, nonempty ideal / filter.
void require_ideal( const finite_lattice& lattice, const element_set& ideal );
void require_filter( const finite_lattice& lattice, const element_set& filter );

/// The smallest lattice congruence whose bottom block contains the ideal.
/// Its bottom block is exactly the ideal, and it is compatible with <-.
congruence congruence_from_ideal( const heyting_algebra& algebra, const element_set& ideal );
/// The smallest lattice congruence whose top block contains the filter.
/// Its top block is exactly the filter, and it is compatible with ->.
congruence congruence_from_filter( const heyting_algebra& algebra, const element_set& filter );

/// The literal relation x R y <=> (x -> y) & (y -> x) in `members`, as an
/// n*n 0/1 matrix. Kept as a diagnostic next to the closure construction.
std::vector< std::uint8_t > biimplication_relation( const heyting_algebra& algebra, const element_set& members );
/// The variant x R y <=> (x -> y in members <=> y -> x in members).
std::vector< std::uint8_t > biconditional_relation( const heyting_algebra& algebra, const element_set& members );
// Whether a relation matrix coincides with the congruence.
bool same_relation( const congruence& relation, const std::vector< std::uint8_t >& matrix );

struct quotient_result
{
    finite_lattice lattice;
    lattice_hom projection;
    // representatives[b] is the least element of block b.
    std::vector< element > representatives;
};

/// The block lattice. Tables are recomputed from the block order, then
/// cross-checked against the operations on representatives. The projection
/// is verified with `flavor` (lattice, or additionally -> / <-).
quotient_result quotient( const finite_lattice& lattice, const congruence& relation,
                          hom_flavor flavor = hom_flavor::lattice );

// The flavors appropriate to each generator.
quotient_result quotient_by_ideal( const heyting_algebra& algebra, const element_set& ideal );
quotient_result quotient_by_filter( const heyting_algebra& algebra, const element_set& filter );

} // namespace biheyt
