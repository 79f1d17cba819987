#pragma once

#include <string>
#include <vector>

#include "eqmon/monoid.hpp"
#include "eqmon/presentation.hpp"

namespace eqmon {

// Named monoids and semigroups:
//   N2 N6 B0 B2 A0 A2 I J L2 R2 P2 Q E O   (frozen tables, see data/monoids)
//   Zn(k) or Zk                              cyclic group of order k
//   S3                                       symmetric group
//   T                                        trivial monoid
//   M(w1,w2,...)                             Rees quotient
//   <name>^1                                 adjoin a new identity
// "X1" is accepted as shorthand for "X^1" when X is a table name.
// Products are written with " x " between factors, e.g. "L2^1 x R2^1".
FiniteMonoid catalog(std::string const& name);

// The presentation text of a frozen table, e.g. "a,b | a^2=0, ...".
std::string const& catalog_presentation(std::string const& name);
std::vector<std::string> catalog_table_names();

FiniteMonoid cyclic_group(std::size_t k);
FiniteMonoid symmetric_group_3();

}  // namespace eqmon
