#include "fsig/surjectivity_oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "fsig/galois_field.hpp"
#include "fsig/monomial_module.hpp"

namespace fsig {

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::trivial: return "trivial";
    case WitnessKind::pair: return "pair";
    case WitnessKind::r_pair: return "r_pair";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Enumeration

DecompositionVector enumerate_decomposition(Int t, const GroupParams& g,
                                            const CharacteristicParams& ch,
                                            const OracleLimits& limits) {
  if (t < 0 || t >= g.n) {
    throw ValidationError("label must lie in [0, n) (got " + std::to_string(t) + ")");
  }
  if (g.n % ch.p == 0) throw ValidationError("p divides n");
  const Int q = ch.q;
  if (q * q > limits.enumeration_max_q2) {
    throw ValidationError("enumeration guard exceeded: q^2 = " + std::to_string(q * q) +
                          " > " + std::to_string(limits.enumeration_max_q2));
  }
  // Monomials x^{u + q al} y^{v + q be} of M_t, grouped by the class (u, v).
  // Each class, with (al, be) restricted to [0, n]^2, must coincide with the
  // monomials of exactly one M_s in the same box.
  const Int side = g.n + 1;
  const auto cells = static_cast<std::size_t>(side * side);
  std::vector<std::uint8_t> in_class(cells);

  DecompositionVector dec;
  dec.source_label = t;
  dec.ch = ch;
  dec.counts.assign(static_cast<std::size_t>(g.n), 0);

  for (Int u = 0; u < q; ++u) {
    for (Int v = 0; v < q; ++v) {
      for (Int al = 0; al < side; ++al) {
        for (Int be = 0; be < side; ++be) {
          const Exponent m{u + q * al, v + q * be};
          in_class[static_cast<std::size_t>(al * side + be)] = weight(m, g) == t;
        }
      }
      Int matched = -1, matches = 0;
      for (Int s = 0; s < g.n; ++s) {
        bool equal = true;
        for (Int al = 0; al < side && equal; ++al) {
          for (Int be = 0; be < side && equal; ++be) {
            const bool in_ms = mod(al + be * g.a, g.n) == s;
            equal = in_ms == static_cast<bool>(in_class[static_cast<std::size_t>(al * side + be)]);
          }
        }
        if (equal) {
          matched = s;
          ++matches;
        }
      }
      if (matches != 1) {
        throw InvariantError("monomial class (" + std::to_string(u) + "," + std::to_string(v) +
                             ") of ^eM_" + std::to_string(t) + " matches " +
                             std::to_string(matches) + " modules");
      }
      ++dec.counts[static_cast<std::size_t>(matched)];
    }
  }
  return dec;
}

// ---------------------------------------------------------------------------
// Certificate verification

namespace {

Int dense_rank(std::vector<std::vector<GaloisField::Element>> rows, const GaloisField& field) {
  Int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](const auto& r) { return !field.is_zero(r[c]); });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    const auto inv = field.inv(prow[c]);
    for (auto& x : prow) x = field.mul(x, inv);
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const auto factor = rows[r][c];
      if (field.is_zero(factor)) continue;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, prow[k]));
      }
    }
    ++rank;
  }
  return rank;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool verify_certificate(const SurjectionCertificate& cert, const GroupParams& g,
                        const CharacteristicParams& ch) {
  if (cert.target_label < 0 || cert.target_label >= g.n) {
    throw ValidationError("certificate target label out of range");
  }
  if (static_cast<Int>(cert.source_counts.size()) != g.n) {
    throw ValidationError("certificate source counts must have n entries");
  }
  if (cert.copies == 0) return true;
  if (cert.copies < 0) return false;

  const std::vector<MonomialModule> modules = all_modules(g);
  const MonomialModule& target = modules[static_cast<std::size_t>(cert.target_label)];
  const Int mu_t = target.num_generators();

  // Columns: (source label, source copy, generator). Rows: (target copy, generator).
  std::set<std::pair<Int, Int>> used;
  Int num_cols = 0;
  std::map<std::pair<Int, Int>, Int> entries;  // (row, col) -> value in Z

  for (const Witness& w : cert.witnesses) {
    for (const HomApplication& h : w.maps) {
      if (h.source_label < 0 || h.source_label >= g.n) {
        throw ValidationError("witness source label out of range");
      }
      const MonomialModule& source = modules[static_cast<std::size_t>(h.source_label)];
      const InducedMatrix im = induced_matrix(h.hom, source, target, g);
      if (h.source_copy < 0 ||
          h.source_copy >= cert.source_counts[static_cast<std::size_t>(h.source_label)]) {
        return false;  // draws on a summand the pushforward does not have
      }
      if (h.target_copy < 0 || h.target_copy >= cert.copies) return false;
      const std::pair<Int, Int> key{h.source_label, h.source_copy};
      if (!used.insert(key).second) return false;  // summand consumed twice
      const Int base = num_cols;
      num_cols += im.cols;
      for (Int r = 0; r < im.rows; ++r) {
        for (Int c = 0; c < im.cols; ++c) {
          if (im.at(r, c) != 0) entries[{h.target_copy * mu_t + r, base + c}] += 1;
        }
      }
    }
  }

  const Int num_rows = cert.copies * mu_t;
  // The matrix is block diagonal after permutation; rank adds over the
  // connected components of its row/column incidence graph.
  DisjointSets dsu(static_cast<std::size_t>(num_rows + num_cols));
  for (const auto& [rc, value] : entries) {
    if (mod(value, ch.p) == 0) continue;
    dsu.join(static_cast<std::size_t>(rc.first), static_cast<std::size_t>(num_rows + rc.second));
  }
  std::map<std::size_t, std::pair<std::vector<Int>, std::vector<Int>>> components;
  for (Int r = 0; r < num_rows; ++r) {
    components[dsu.find(static_cast<std::size_t>(r))].first.push_back(r);
  }
  for (Int c = 0; c < num_cols; ++c) {
    components[dsu.find(static_cast<std::size_t>(num_rows + c))].second.push_back(c);
  }

  const GaloisField field = GaloisField::prime(ch.p);
  Int rank = 0;
  for (const auto& [root, members] : components) {
    const auto& [rows, cols] = members;
    if (rows.empty() || cols.empty()) continue;
    std::vector<std::vector<GaloisField::Element>> block(
        rows.size(), std::vector<GaloisField::Element>(cols.size(), field.zero()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto it = entries.find({rows[i], cols[k]});
        if (it != entries.end()) block[i][k] = field.from_int(it->second);
      }
    }
    rank += dense_rank(std::move(block), field);
  }
  return rank == num_rows;
}

// ---------------------------------------------------------------------------
// Randomized estimator

std::uint64_t coefficient_word(std::uint64_t seed, std::uint64_t trial, std::uint64_t source,
                               std::uint64_t target, std::uint64_t hom) {
  // splitmix64 finalizer chained over the counter fields
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(seed);
  h = mix(h ^ trial);
  h = mix(h ^ source);
  h = mix(h ^ target);
  return mix(h ^ hom);
}

namespace {

// A source generator column together with the target generators it reaches:
// (target generator index, hom index within Hom(M_s, M_t)).
struct ColumnPattern {
  std::vector<std::pair<Int, Int>> hits;
};

struct SourceBlock {
  Int label = 0;
  Int copies = 0;
  Int first_copy = 0;  // global copy numbering across labels
  std::vector<ColumnPattern> columns;
};

// Largest prefix b of target copies whose rows are linearly independent for
// one random sample, capped at `cap`.
Int full_rank_prefix(const std::vector<SourceBlock>& blocks, Int num_cols, Int mu_t, Int cap,
                     const GaloisField& field, std::uint64_t seed, std::uint64_t trial) {
  using E = GaloisField::Element;
  const auto cols = static_cast<std::size_t>(num_cols);
  std::vector<std::vector<E>> basis;
  std::vector<std::size_t> pivots;
  basis.reserve(static_cast<std::size_t>(cap * mu_t));
  std::vector<E> row(cols);

  for (Int copy = 0; copy < cap; ++copy) {
    for (Int gen = 0; gen < mu_t; ++gen) {
      std::fill(row.begin(), row.end(), field.zero());
      std::size_t col = 0;
      for (const SourceBlock& b : blocks) {
        for (Int c = 0; c < b.copies; ++c) {
          const auto global = static_cast<std::uint64_t>(b.first_copy + c);
          for (const ColumnPattern& pattern : b.columns) {
            for (const auto& [target_gen, hom] : pattern.hits) {
              if (target_gen == gen) {
                row[col] = field.add(row[col], field.from_index(coefficient_word(
                                                   seed, trial, global,
                                                   static_cast<std::uint64_t>(copy),
                                                   static_cast<std::uint64_t>(hom))));
              }
            }
            ++col;
          }
        }
      }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const std::size_t pc = pivots[k];
        const E factor = row[pc];
        if (field.is_zero(factor)) continue;
        const std::vector<E>& brow = basis[k];
        for (std::size_t j = pc; j < cols; ++j) {
          if (!field.is_zero(brow[j])) row[j] = field.sub(row[j], field.mul(factor, brow[j]));
        }
      }
      const auto nz = std::find_if(row.begin(), row.end(),
                                   [&](E x) { return !field.is_zero(x); });
      if (nz == row.end()) return copy;
      const auto pc = static_cast<std::size_t>(nz - row.begin());
      const E inv = field.inv(row[pc]);
      for (std::size_t j = pc; j < cols; ++j) row[j] = field.mul(row[j], inv);
      basis.push_back(row);
      pivots.push_back(pc);
    }
  }
  return cap;
}

// Rows of b target copies restricted to a generator set S only meet the
// columns reaching S, so b * |S| <= #columns(S). Exhaustive over S for small
// mu_t; otherwise singletons and the full set. Generators past bit 63 share
// the last bit, which only weakens the bound.
std::uint64_t reach_bit(Int gen) { return std::uint64_t{1} << std::min<Int>(gen, 63); }

Int coverage_bound(const std::map<std::uint64_t, Int>& reach_masks, Int mu_t) {
  auto columns_meeting = [&](std::uint64_t set) {
    Int total = 0;
    for (const auto& [mask, count] : reach_masks) {
      if ((mask & set) != 0) total += count;
    }
    return total;
  };
  constexpr Int kExhaustiveLimit = 16;
  Int best = std::numeric_limits<Int>::max();
  if (mu_t <= kExhaustiveLimit) {
    for (std::uint64_t set = 1; set < (std::uint64_t{1} << mu_t); ++set) {
      best = std::min(best, columns_meeting(set) / std::popcount(set));
    }
    return best;
  }
  for (Int gen = 0; gen < 63 && gen < mu_t; ++gen) best = std::min(best, columns_meeting(reach_bit(gen)));
  if (mu_t <= 63) best = std::min(best, columns_meeting(~std::uint64_t{0}) / mu_t);
  return best;
}

}  // namespace

OracleEstimate estimate_b_e_report(Int t, const GroupParams& g, const CharacteristicParams& ch,
                                   Int trials, std::uint64_t seed, const OracleLimits& limits) {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  if (ch.q * ch.q > limits.estimate_max_q2) {
    throw ValidationError("estimator guard exceeded: q^2 = " + std::to_string(ch.q * ch.q) +
                          " > " + std::to_string(limits.estimate_max_q2));
  }
  const DecompositionVector dec =
      enumerate_decomposition(t, g, ch, {limits.estimate_max_q2, limits.estimate_max_q2, 0});
  const std::vector<MonomialModule> modules = all_modules(g);
  const MonomialModule& target = modules[static_cast<std::size_t>(t)];
  const Int mu_t = target.num_generators();

  OracleEstimate est;
  est.target = t;
  est.rank_bound = ch.q * ch.q;
  Int mu_push = 0;
  for (Int s = 0; s < g.n; ++s) mu_push += dec.count(s) * modules[static_cast<std::size_t>(s)].num_generators();
  est.generator_bound = mu_push / mu_t;

  // Reduce each source generator modulo m: keep only generators some monomial
  // hom sends exactly onto a target generator.
  std::vector<SourceBlock> blocks;
  std::map<std::uint64_t, Int> reach_masks;  // target-generator set -> column count
  Int num_cols = 0, next_copy = 0;
  for (Int s = 0; s < g.n; ++s) {
    const Int copies = dec.count(s);
    if (copies == 0) continue;
    const MonomialModule& source = modules[static_cast<std::size_t>(s)];
    const MonomialModule homs = hom_monomials(s, t, g);
    SourceBlock block;
    block.label = s;
    block.copies = copies;
    block.first_copy = next_copy;
    next_copy += copies;
    block.columns.resize(static_cast<std::size_t>(source.num_generators()));
    for (Int h = 0; h < homs.num_generators(); ++h) {
      const InducedMatrix im =
          induced_matrix(homs.mingens[static_cast<std::size_t>(h)], source, target, g);
      for (Int r = 0; r < im.rows; ++r) {
        for (Int c = 0; c < im.cols; ++c) {
          if (im.at(r, c) != 0) block.columns[static_cast<std::size_t>(c)].hits.emplace_back(r, h);
        }
      }
    }
    std::erase_if(block.columns, [](const ColumnPattern& p) { return p.hits.empty(); });
    if (block.columns.empty()) continue;
    for (const ColumnPattern& p : block.columns) {
      std::uint64_t mask = 0;
      for (const auto& hit : p.hits) mask |= reach_bit(hit.first);
      reach_masks[mask] += copies;
    }
    num_cols += copies * static_cast<Int>(block.columns.size());
    blocks.push_back(std::move(block));
  }
  est.coverage_bound = coverage_bound(reach_masks, mu_t);

  const Int cap = std::min({est.generator_bound, est.rank_bound, est.coverage_bound});
  RankProblem problem{t, cap, dec, std::max(limits.min_field_size, Int{2} * mu_t * cap), seed};
  const GaloisField field = GaloisField::with_min_size(ch.p, problem.field_size);
  est.field_size = field.size();

  for (Int trial = 0; trial < trials && est.b < cap; ++trial) {
    const Int b = full_rank_prefix(blocks, num_cols, mu_t, cap, field, problem.seed,
                                   static_cast<std::uint64_t>(trial));
    est.b = std::max(est.b, b);
    est.trials_used = trial + 1;
  }
  est.exact = est.b == cap;
  return est;
}

Int estimate_b_e(Int t, const GroupParams& g, const CharacteristicParams& ch, Int trials,
                 std::uint64_t seed, const OracleLimits& limits) {
  return estimate_b_e_report(t, g, ch, trials, seed, limits).b;
}

}  // namespace fsig
