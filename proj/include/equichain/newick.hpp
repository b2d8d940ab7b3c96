#ifndef EQUICHAIN_NEWICK_HPP
#define EQUICHAIN_NEWICK_HPP

#include <string>

#include "equichain/boron_tree.hpp"
#include "equichain/ordered_tree.hpp"

namespace equichain {

// Newick-like text format for boron trees.
//
//   tree    := subtree ';'
//   subtree := leaf | '(' subtree (',' subtree)+ ')'
//   leaf    := [A-Za-z0-9_.]+
//
// The parse is read as an unrooted tree: the top-level node is a virtual
// root and every vertex of degree two is suppressed afterwards. Whatever
// remains must satisfy the boron valence constraints, so `((1,2),(3,4));` is
// the quartet tree 12|34 and `((1,2),(3,4),(5,6));` the six-leaf snowflake.
//
// Ordered trees carry a `root=LABEL:` prefix; the circular counterclockwise
// leaf arrangement is the left-to-right leaf order of the Newick text, e.g.
// `root=5:((1,2),(3,4),5);` has leaf order 1 < 2 < 3 < 4 < 5 = root.
//
// Parse failures throw parse_error with a position annotation.

BoronTree parse_newick(const std::string& text);
OrderedBoronTree parse_ordered_newick(const std::string& text);

std::string to_newick(const BoronTree& t);
std::string to_newick(const OrderedBoronTree& t);

} // namespace equichain

#endif
