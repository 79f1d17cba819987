#pragma once

#include <string>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

// Named identities and identity sets used throughout the library, the CLI
// ("@name" references) and the manifest.
//
// Single identities:
//   e1.cube       x^3 = x^2
//   e1.left       x^2 y x = x y x
//   e1.right      x y x^2 = x y x
//   e1.sq         x y^2 x = x^2 y^2
//   q1.comm       x^2 y^2 = y^2 x^2
//   excl.L2       x^2 (y^2 x^2)^2 = (y^2 x^2)^2
//   excl.Qa       x^2 y x^2 z x^2 = x^2 y z x^2
//   excl.Qb       (x^2 y x^2)^2 = x^2 y x^2
//   m4.1 .. m4.5  basis of the variety generated by all monoids of order four
//   lz.1 .. lz.3  Luo-Zhang identities at n = 2
//   mxy.1 .. mxy.3  basis of the semigroup reduct of M(xy)
//   remark.w2     w_2 = x0 x1 y z x0 x2 y z x1 x2
//   xyxzx         x y x z x = x y z x
//   sigma<n>, sigmaInf
//
// Sets: E1 (the four e1.* identities), Q1 (e1.cube, e1.left, e1.right,
// q1.comm), L2B0 (E1 plus xyxzx), M4, LZ2, LZ3, Mxy.
Identity named_identity(std::string const& name);
std::vector<Identity> named_set(std::string const& name);
std::vector<std::string> named_identity_names();
std::vector<std::string> named_set_names();

// The identities x^{n+1} h x = x h x, x h x t x = x^2 h t x,
// x h x y t y = x h y x t y.
std::vector<Identity> luo_zhang(std::size_t n);

// Resolves "@name" to a named identity or set; anything else is parsed as a
// single identity.
std::vector<Identity> resolve_identities(std::string const& text);

}  // namespace eqmon
