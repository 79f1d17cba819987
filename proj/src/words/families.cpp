#include "eqmon/families.hpp"

#include <string>

namespace eqmon {

Variable indexed_variable(char const* prefix, std::size_t i) {
  return Variable(std::string(prefix) + std::to_string(i));
}

Word zimin(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("zimin: n must be at least 1");
  }
  Word z{indexed_variable("x", 1)};
  for (std::size_t i = 2; i <= n; ++i) {
    Word next = z;
    next.push_back(indexed_variable("x", i));
    next += z;
    z = std::move(next);
  }
  return z;
}

Word ZiminDecomposition::reassemble() const {
  Word out = parts.at(0);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += parts[i];
    out += parts[i - 1];
  }
  out += tail;
  return out;
}

ZiminDecomposition zimin_decompose(std::size_t n) {
  if (n < 3) {
    throw PreconditionError("zimin_decompose: n must be at least 3");
  }
  auto x = [](std::size_t i) { return indexed_variable("x", i); };
  ZiminDecomposition d;
  d.parts = {Word{x(1)}, Word{x(2)}, Word{x(3), x(1)}};
  d.tail = Word{x(1)};
  for (std::size_t m = 4; m <= n; ++m) {
    // p_m = q_{m-1} x_m p_1 (p_2 p_1) ... (p_{m-2} p_{m-3})
    Word p = d.tail;
    p.push_back(x(m));
    p += d.parts[0];
    for (std::size_t i = 2; i <= m - 2; ++i) {
      p += d.parts[i - 1];
      p += d.parts[i - 2];
    }
    // q_m = p_{m-2} q_{m-1}
    d.tail = d.parts[m - 3] * d.tail;
    d.parts.push_back(std::move(p));
  }
  return d;
}

Word wn_xyxy(std::size_t n, bool primed) {
  if (n < 2) {
    throw PreconditionError("wn_xyxy: n must be at least 2");
  }
  Variable y("y"), z("z");
  if (primed) {
    std::swap(y, z);
  }
  auto x = [](std::size_t i) { return indexed_variable("x", i); };
  Word w{x(0), y, z};
  for (std::size_t i = 1; i <= n; ++i) {
    w.push_back(x(i));
    w.push_back(x(i - 1));
  }
  w.push_back(y);
  w.push_back(z);
  w.push_back(x(n));
  return w;
}

Word wn_zimin(std::size_t n, bool primed) {
  if (n < 3) {
    throw PreconditionError("wn_zimin: n must be at least 3");
  }
  Variable y("y"), z("z"), h("h"), t("t");
  if (primed) {
    std::swap(y, z);
  }
  auto x = [](std::size_t i) { return indexed_variable("x", i); };
  Word w{x(0), h, x(1), y, z, x(0)};
  for (std::size_t i = 2; i <= n - 1; ++i) {
    w.push_back(x(i));
    w.push_back(x(i - 1));
  }
  w += Word{x(n), y, z, x(n - 1), t, x(n)};
  return w;
}

Identity sigma(std::size_t n) {
  if (n == 0) {
    throw PreconditionError("sigma: n must be at least 1");
  }
  Variable x("x"), y("y");
  Word prefix;
  for (std::size_t i = 1; i <= n; ++i) {
    Variable e = (i % 2 == 1) ? x : y;
    prefix += Word{e, e, indexed_variable("h", i)};
  }
  return {prefix * Word{x, x, y, y}, prefix * Word{y, y, x, x}};
}

Identity sigma_infinity() {
  return parse_identity("x^2 y^2 h x^2 y^2 = x^2 y^2 h y^2 x^2");
}

}  // namespace eqmon
