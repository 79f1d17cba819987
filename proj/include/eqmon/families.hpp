#pragma once

// Word and identity families used throughout the workbench.

#include <cstddef>
#include <vector>

#include "eqmon/word.hpp"

namespace eqmon {

// z_1 = x1, z_{n+1} = z_n x_{n+1} z_n.
Word zimin(std::size_t n);

// z_n = p_1 (p_2 p_1)(p_3 p_2) ... (p_n p_{n-1}) q_n with
// con(p_i) in {x1..xi}, x_i occurring once in p_i, con(q_n) in {x1..x_{n-2}}.
struct ZiminDecomposition {
  std::vector<Word> parts;  // p_1 ... p_n
  Word tail;                // q_n

  Word reassemble() const;
};

ZiminDecomposition zimin_decompose(std::size_t n);

// x0 . yz . x1x0 . x2x1 ... x_n x_{n-1} . yz . x_n; primed swaps y and z.
Word wn_xyxy(std::size_t n, bool primed = false);

// x0 h x1 yz x0 . x2x1 ... x_{n-1}x_{n-2} . x_n yz x_{n-1} t x_n; primed
// swaps y and z.
Word wn_zimin(std::size_t n, bool primed = false);

// (e_1 h1 ... e_n hn) x^2 y^2 = (e_1 h1 ... e_n hn) y^2 x^2 where e_i is x^2
// for odd i and y^2 for even i.
Identity sigma(std::size_t n);
// x^2 y^2 h x^2 y^2 = x^2 y^2 h y^2 x^2
Identity sigma_infinity();

// Variable named prefix + index, e.g. indexed_variable("x", 3) is x3.
Variable indexed_variable(char const* prefix, std::size_t i);

}  // namespace eqmon
