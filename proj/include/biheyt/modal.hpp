#pragma once

#include "biheyt/formula.hpp"
#include "biheyt/sets.hpp"
#include "biheyt/topology.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biheyt
{

/// Worlds 0..n-1 (n <= 64) with an arbitrary accessibility relation.
class kripke_frame
{
    std::size_t _worlds = 0;
    std::vector< point_set > _succ;

public:
    kripke_frame() = default;
    // Throws error for out-of-range worlds.
    kripke_frame( std::size_t worlds, const std::vector< std::pair< std::size_t, std::size_t > >& edges );
    static kripke_frame from_successors( std::vector< point_set > successors );

    [[nodiscard]] std::size_t worlds() const { return _worlds; }
    [[nodiscard]] bool related( std::size_t w, std::size_t u ) const { return _succ[ w ].contains( u ); }
    [[nodiscard]] point_set successors( std::size_t w ) const { return _succ[ w ]; }
    [[nodiscard]] point_set all() const { return point_set::full( _worlds ); }
    [[nodiscard]] std::vector< std::pair< std::size_t, std::size_t > > edges() const;

    friend bool operator==( const kripke_frame&, const kripke_frame& ) = default;
};

enum class modal_system
{
    K,
    T,
    S4,
    S5,
};

std::string_view name( modal_system system );

struct frame_class
{
    bool reflexive = false;
    bool transitive = false;
    bool symmetric = false;
    // Strongest of K < T < S4 < S5 whose frame condition holds.
    modal_system system = modal_system::K;
};

frame_class classify_frame( const kripke_frame& frame );
// Whether the frame meets the condition of `system` (K always holds).
bool frame_in( const kripke_frame& frame, modal_system system );

// Atom name to the set of worlds (or points) where it holds.
using valuation = std::map< std::string, point_set >;

struct kripke_model
{
    kripke_frame frame;
    valuation val;
};

/// Truth at a world: classical connectives, [] over all successors, <>
/// over some successor. Throws unsupported_connective for ~ and <-,
/// unbound_atom for atoms without a valuation.
bool kripke_eval( const kripke_model& model, std::size_t world, const formula& phi );

// Worlds satisfying phi.
point_set kripke_extension( const kripke_model& model, const formula& phi );

bool valid_in_model( const kripke_model& model, const formula& phi );

// Largest worlds * atoms product valid_in_frame accepts.
inline constexpr std::size_t max_frame_valuation_bits = 24;

/// Valid under every valuation of `alphabet` (which must cover phi's atoms).
/// Throws bound_exceeded when worlds * |alphabet| > max_frame_valuation_bits.
bool valid_in_frame( const kripke_frame& frame, const formula& phi, const std::vector< std::string >& alphabet );

/// Set-valued semantics on a space: ! is complement, -> is A^c | B, [] is
/// interior and <> is closure. Throws unsupported_connective for ~ and <-.
point_set topo_eval( const finite_space& space, const valuation& val, const formula& phi );

// The specialization preorder as a frame, with the valuation carried over.
kripke_model model_from_space( const finite_space& space, const valuation& val );

struct schema_result
{
    std::string name;
    formula schema;
    bool valid = true;
    std::size_t valuations = 0;
    std::optional< std::string > counterexample;
};

struct s4_report
{
    std::vector< schema_result > schemas;

    [[nodiscard]] bool all_valid() const;
};

// K, T, 4 and the two diamond schemas, over the atoms p and q.
const std::vector< std::pair< std::string, formula > >& s4_schemas();

// Largest structure the axiom suites accept.
inline constexpr std::size_t max_suite_points = 10;

/// Each schema checked under topo_eval for every valuation of p and q.
s4_report s4_axiom_suite( const finite_space& space );
/// Each schema checked under kripke_eval for every valuation of p and q.
s4_report s4_axiom_suite( const kripke_frame& frame );

enum class search_semantics
{
    topological,   // topo_eval over all subsets, refuted when not the whole space
    intuitionistic, // eval_intuitionistic in the open-set algebra
    dual,          // eval_dual in the closed-set algebra
    kripke,        // kripke_eval over frames
};

std::optional< search_semantics > parse_semantics( std::string_view text );

// Largest point count countermodel_search accepts.
inline constexpr std::size_t max_search_points = 5;
inline constexpr std::size_t max_search_worlds = 4;

struct search_options
{
    search_semantics semantics = search_semantics::topological;
    std::size_t max_points = 3;
    // For kripke: only frames meeting this condition are searched.
    modal_system frame_condition = modal_system::K;
};

struct countermodel
{
    std::optional< finite_space > space;
    std::optional< kripke_frame > frame;
    valuation val;
    // A point (world) where phi fails.
    std::size_t point = 0;
    // For the algebraic semantics: the set phi evaluates to.
    point_set value;
};

/// The first refutation in the order: point count, then structure (the
/// topology or frame enumeration order), then valuation, where valuations
/// are compared atom by atom (in name order) by the index of their value in
/// the canonical list of admissible sets. Throws bound_exceeded.
std::optional< countermodel > countermodel_search( const formula& phi, const search_options& options );

/// Two small Kripke models. The first has loops at every world and
/// w0 R w1, w0 R w2 with V(p) = {w1}. The second has
/// R = {(w0,w1), (w0,w2), (w1,w1), (w2,w2)} (no loop at w0), V(p) = {w1},
/// V(q) = {w2}.
std::pair< kripke_model, kripke_model > worked_examples();
// Worlds of the second model where q holds or p fails: {w0, w2}.
point_set example2_chi();

struct agreement_report
{
    std::size_t spaces = 0;
    std::size_t models = 0;
    // Formula/model pairs evaluated in full by both semantics.
    std::size_t checks = 0;
    std::size_t disagreements = 0;
    std::optional< std::string > first_disagreement;
};

/// Compares membership in topo_eval with kripke_eval on model_from_space,
/// for every formula over `atoms` with depth <= max_depth built from the
/// constants, atoms, !, &, |, ->, [] and <>, on every topology with at most
/// max_points points and every valuation. Within one model, formulas are
/// grouped by their topological value; each connective is then applied to
/// one representative per group and the result checked in full.
agreement_report check_alexandrov_agreement( std::size_t max_points = 3, std::size_t max_depth = 3,
                                             const std::vector< std::string >& atoms = { "p", "q" } );

} // namespace biheyt
