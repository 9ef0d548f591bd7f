#include "fsig/monomial_module.hpp"

#include <algorithm>

namespace fsig {

Int weight(const Exponent& m, const GroupParams& g) {
  return mod(mod(m.i, g.n) + mod(m.j, g.n) * g.a, g.n);
}

std::string monomial_string(const Exponent& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string s;
  auto power = [&s](char var, Int e) {
    if (e == 0) return;
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  power('x', m.i);
  power('y', m.j);
  return s;
}

Int MonomialModule::generator_index(const Exponent& m) const {
  const auto it = std::find(mingens.begin(), mingens.end(), m);
  return it == mingens.end() ? -1 : static_cast<Int>(it - mingens.begin());
}

MonomialModule minimal_generators(Int label, const GroupParams& g) {
  if (label < 0 || label >= g.n) {
    throw ValidationError("label must lie in [0, n) (got " +
                          std::to_string(label) + ")");
  }
  // x^n and y^n lie in R, so every minimal generator sits in the box [0,n)^2.
  // Inside the box each row j carries exactly one monomial of weight `label`,
  // so the kept monomials are the staircase of strictly decreasing x-degree.
  MonomialModule out;
  out.label = label;
  Int best_i = g.n;
  for (Int j = 0; j < g.n; ++j) {
    const Int i = mod(label - j * g.a, g.n);
    if (i < best_i) {
      out.mingens.push_back({i, j});
      best_i = i;
    }
    if (best_i == 0) break;
  }
  for (const auto& m : out.mingens) {
    if (m.i >= g.n || m.j >= g.n) {
      throw InvariantError("minimal generator outside the box [0,n)^2");
    }
  }
  return out;
}

Int num_generators(Int label, const GroupParams& g) {
  return minimal_generators(label, g).num_generators();
}

MonomialModule hom_monomials(Int source, Int target, const GroupParams& g) {
  return minimal_generators(mod(target - source, g.n), g);
}

InducedMatrix induced_matrix(const Exponent& f, const MonomialModule& source,
                             const MonomialModule& target, const GroupParams& g) {
  if (f.i < 0 || f.j < 0 || weight(f, g) != mod(target.label - source.label, g.n)) {
    throw ValidationError("hom monomial " + monomial_string(f) +
                          " does not map M_" + std::to_string(source.label) +
                          " into M_" + std::to_string(target.label));
  }
  InducedMatrix m;
  m.rows = target.num_generators();
  m.cols = source.num_generators();
  m.entries.assign(static_cast<std::size_t>(m.rows * m.cols), 0);
  for (Int c = 0; c < m.cols; ++c) {
    const Int r = target.generator_index(f + source.mingens[static_cast<std::size_t>(c)]);
    // Anything that is not exactly a target generator lies in m * M_target.
    if (r >= 0) m.entries[static_cast<std::size_t>(r * m.cols + c)] = 1;
  }
  return m;
}

InducedMatrix induced_matrix(const Exponent& f, Int source, Int target,
                             const GroupParams& g) {
  return induced_matrix(f, minimal_generators(source, g),
                        minimal_generators(target, g), g);
}

std::vector<MonomialModule> all_modules(const GroupParams& g) {
  std::vector<MonomialModule> out;
  out.reserve(static_cast<std::size_t>(g.n));
  for (Int t = 0; t < g.n; ++t) out.push_back(minimal_generators(t, g));
  return out;
}

}  // namespace fsig
