#pragma once

#include "biheyt/formula.hpp"
#include "biheyt/lattice.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace biheyt
{

// Values of atoms in an algebra.
using assignment = std::map< std::string, element >;

/// Value of phi in a Heyting algebra: atoms, constants, !, &, | and ->.
/// !x is x -> bottom. Throws unsupported_connective for ~, <-, [] and <>,
/// unbound_atom for atoms missing from v.
element eval_intuitionistic( const formula& phi, const heyting_algebra& algebra, const assignment& v );

/// Value of phi in a co-Heyting algebra: atoms, constants, ~, &, | and <-.
/// ~x is top <- x. Throws unsupported_connective for !, ->, [] and <>.
element eval_dual( const formula& phi, const coheyting_algebra& algebra, const assignment& v );

/// Outcome of checking one identity over every element (or pair) of an
/// algebra, or over a whole family of algebras.
struct law_result
{
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional< std::string > first_witness;

    [[nodiscard]] bool passed() const { return violations == 0; }
    void merge( const law_result& other, const std::string& context );
};

struct law_report
{
    std::vector< law_result > laws;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const law_result& operator[]( const std::string& name ) const;
};

// "conjunctive de morgan" ~(a&b) = ~a | ~b, and
// "disjunctive de morgan" ~(a|b) = ~a & ~b (which may fail).
law_report check_dual_de_morgan( const coheyting_algebra& algebra );

// a | ~a = top.
law_result check_lem( const coheyting_algebra& algebra );

// The least a with boundary(a) != bottom.
std::optional< element > find_paraconsistent_witness( const coheyting_algebra& algebra );

/// "boundary of meet":  d(a&b) = (da & b) | (a & db)
/// "boundary of join":  da | db = d(a|b) | d(a&b)
/// "boundary idempotent": d(da) = da
/// "boundary decomposition": a = ~~a | da
law_report check_boundary_laws( const coheyting_algebra& algebra );

/// The three characterisations of Booleanness, computed independently:
/// every element has a complement, every boundary is bottom, and every
/// element equals its double Heyting negation.
struct boolean_verdict
{
    bool complemented = false;
    bool trivial_boundary = false;
    bool double_negation = false;

    [[nodiscard]] bool agrees() const
    {
        return complemented == trivial_boundary && trivial_boundary == double_negation;
    }
};

// Throws not_distributive.
boolean_verdict boolean_iff_trivial_boundary( const finite_lattice& lattice );

/// The dual-law suite over the closed-set algebras of every topology on at
/// most max_points points.
struct dual_suite_report
{
    std::size_t spaces = 0;
    // Conjunctive De Morgan, LEM and the four boundary laws.
    law_report laws;
    law_result disjunctive_de_morgan;
    std::optional< std::string > paraconsistent_witness;

    [[nodiscard]] bool passed() const
    {
        return laws.all_passed() && !disjunctive_de_morgan.passed() && paraconsistent_witness.has_value();
    }
};

dual_suite_report run_dual_law_suite( std::size_t max_points );

} // namespace biheyt
