#pragma once

// Explicit witnesses for a surjection ^eM_t ->> M_t^b. Every witness feeds
// whole source summands (identified by label and copy number inside a
// DecompositionVector) into one copy of the target through monomial homs.

#include <string_view>
#include <vector>

#include "fsig/group.hpp"
#include "fsig/monomial_module.hpp"

namespace fsig {

enum class WitnessKind {
  trivial,  // M_t --1--> M_t
  pair,     // M_f (+) M_g ->> M_t via x^{i_t - f} and a power of y
  r_pair,   // R (+) R ->> M_t via x^{i_t} and y^{j_t}
};

std::string_view to_string(WitnessKind k);

/// One source summand mapped into one target copy by multiplication by `hom`.
struct HomApplication {
  Int source_label = 0;
  Int source_copy = 0;  // index among the c_{source_label} copies
  Int target_copy = 0;  // index in [0, copies)
  Exponent hom;

  friend bool operator==(const HomApplication&, const HomApplication&) = default;
};

struct Witness {
  WitnessKind kind = WitnessKind::trivial;
  std::vector<HomApplication> maps;
};

struct SurjectionCertificate {
  Int target_label = 0;
  Int copies = 0;
  /// Multiplicities c_s of the pushforward the witnesses draw from.
  std::vector<Int> source_counts;
  std::vector<Witness> witnesses;
};

}  // namespace fsig
