#include <algorithm>

#include "eqmon/deduction.hpp"
#include "eqmon/equations.hpp"
#include "eqmon/error.hpp"
#include "eqmon/families.hpp"

namespace eqmon {

namespace {

Word block_word(Block b, Variable x, Variable y) {
  switch (b) {
    case Block::one:
      return {};
    case Block::x2:
      return {x, x};
    case Block::y2:
      return {y, y};
    case Block::x2y2:
      return {x, x, y, y};
    case Block::y2x2:
      return {y, y, x, x};
  }
  return {};
}

// The projection onto {x, y} of a product of distinct squares.
Block project_block(std::vector<Variable> const& squares, Variable x, Variable y) {
  std::vector<Variable> kept;
  for (Variable v : squares) {
    if (v == x || v == y) {
      kept.push_back(v);
    }
  }
  if (kept.empty()) {
    return Block::one;
  }
  if (kept.size() == 1) {
    return kept[0] == x ? Block::x2 : Block::y2;
  }
  return kept[0] == x ? Block::x2y2 : Block::y2x2;
}

}  // namespace

std::string format_block(Block b, Variable x, Variable y) {
  Word w = block_word(b, x, y);
  return w.empty() ? "1" : format_word(w);
}

Identity LambdaIdentity::identity() const {
  Word prefix;
  for (auto const& [p, h] : this->prefix) {
    prefix += block_word(p, x, y);
    prefix.push_back(h);
  }
  Identity out{prefix * Word{x, x, y, y}, prefix * Word{y, y, x, x}};
  return xy_first ? out : out.reversed();
}

std::vector<LambdaIdentity> lambda_reduce(Word const& u, Word const& v) {
  auto cu = is_canonical(u);
  auto cv = is_canonical(v);
  if (!cu || !cv) {
    throw PreconditionError("lambda_reduce: both words must be in canonical form");
  }
  if (u == v) {
    throw PreconditionError("lambda_reduce: the words must be distinct");
  }
  auto lq = lq_equiv_syntactic(u, v);
  if (!lq.q_holds || !lq.l_holds) {
    throw PreconditionError("lambda_reduce: the identity must hold in both L2^1 and Q^1");
  }
  std::vector<LambdaIdentity> out;
  CanonicalWord cur = *cv;
  while (!(cur == *cu)) {
    std::size_t ell = 0;
    while (cur.blocks[ell] == cu->blocks[ell]) {
      ++ell;
    }
    // Equal initial parts force the first blocks to agree.
    if (ell == 0) {
      throw Error("lambda_reduce: first blocks differ");
    }
    auto const& ub = cu->blocks[ell];
    auto& vb = cur.blocks[ell];
    std::size_t q = 0;
    while (q < ub.size() && ub[ub.size() - 1 - q] == vb[vb.size() - 1 - q]) {
      ++q;
    }
    Variable x = ub[ub.size() - 1 - q];
    auto xpos = static_cast<std::size_t>(std::find(vb.begin(), vb.end(), x) - vb.begin());
    std::size_t end = vb.size() - q;  // x moves to just before the common suffix
    for (std::size_t j = xpos + 1; j < end; ++j) {
      LambdaIdentity lambda;
      lambda.x = x;
      lambda.y = vb[j];
      for (std::size_t i = 0; i < ell; ++i) {
        lambda.prefix.push_back({project_block(cur.blocks[i], x, vb[j]), cur.separators[i]});
      }
      out.push_back(std::move(lambda));
    }
    std::rotate(vb.begin() + static_cast<std::ptrdiff_t>(xpos),
                vb.begin() + static_cast<std::ptrdiff_t>(xpos) + 1,
                vb.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return out;
}

Identity SigmaClass::identity() const {
  return infinite ? sigma_infinity() : sigma(n);
}

std::string SigmaClass::name() const {
  return infinite ? "sigmaInf" : "sigma" + std::to_string(n);
}

SigmaClass sigma_classify(LambdaIdentity const& lambda) {
  std::vector<Block> ps;
  for (auto const& [p, h] : lambda.prefix) {
    if (p != Block::one) {
      ps.push_back(p);
    }
  }
  if (ps.empty()) {
    throw PreconditionError("sigma_classify: every block of the prefix is empty");
  }
  SigmaClass out;
  if (std::any_of(ps.begin(), ps.end(),
                  [](Block b) { return b == Block::x2y2 || b == Block::y2x2; })) {
    out.infinite = true;
    return out;
  }
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  out.n = ps.size();
  return out;
}

}  // namespace eqmon
