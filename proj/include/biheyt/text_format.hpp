#pragma once

#include "biheyt/lattice.hpp"
#include "biheyt/modal.hpp"
#include "biheyt/topology.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace biheyt
{

// Text formats, one statement per line; '#' starts a comment.
//
//   lattice n=3          space m=3            space m=3        frame n=3
//   le 0 1               open                 preorder         edge 0 1
//   le 1 2               open 0               le 0 1           val p: 1
//                        open 0 1                              val q: 2
//                        open 0 1 2
//
// Points and worlds are indices, or letters (a = 0) for points and w0, w1,
// ... for worlds. An open may also be a single bit string of length m, whose
// i-th character is point i.

using structure = std::variant< finite_lattice, finite_space, kripke_model >;

// Dispatches on the header line. Throws parse_error, or the validation
// error of the structure itself.
structure parse_structure( std::string_view text );
structure load_structure( const std::string& path );

// Built-in names: example1, example2, paper3pt, sierpinski, chain3.
bool is_builtin( std::string_view name );
structure builtin_structure( std::string_view name );
// A built-in name, or else a file path.
structure resolve_structure( const std::string& name_or_path );

// Canonical text: covering pairs for lattices, opens in canonical order,
// edges and valuations in index order.
std::string format_lattice( const finite_lattice& lattice );
std::string format_space( const finite_space& space );
std::string format_model( const kripke_model& model );

} // namespace biheyt
