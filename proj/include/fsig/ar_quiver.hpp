#pragma once

// Auslander-Reiten theory of 1/n(1,a). For every label t there is
//
//   0 -> M_{t-a-1} -> M_{t-1} (+) M_{t-a} -> M_t -> 0     (t != 0, AR sequence)
//   0 -> w_R -> M_{-1} (+) M_{-a} -> R -> k -> 0          (t = 0, fundamental)
//
// so tau(M_t) = M_{t-a-1}, and the quiver has an x-arrow (t-1) -> t and a
// y-arrow (t-a) -> t into every vertex.

#include <string>
#include <string_view>
#include <vector>

#include "fsig/group.hpp"

namespace fsig {

enum class ArrowLabel { x, y };

struct Arrow {
  Int source = 0;
  Int target = 0;
  ArrowLabel label = ArrowLabel::x;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct ARQuiver {
  Int n = 0;
  /// Sorted by (source, target, label); parallel x/y arrows are both kept.
  std::vector<Arrow> arrows;
};

enum class SequenceKind { ar, fundamental };

struct ARSequence {
  Int end = 0;
  Int middle_x = 0;  // t - 1
  Int middle_y = 0;  // t - a
  Int tau = 0;       // t - a - 1
  SequenceKind kind = SequenceKind::ar;
};

enum class QuiverFormat { dot, json };

Int tau(Int t, const GroupParams& g);

ARSequence ar_sequence(Int t, const GroupParams& g);

/// Label of the canonical module w_R = tau(R).
Int canonical_label(const GroupParams& g);

ARQuiver build_quiver(const GroupParams& g);

/// Throws ValidationError for anything other than "dot" or "json".
QuiverFormat parse_quiver_format(std::string_view name);

std::string export_quiver(const GroupParams& g, QuiverFormat format);

std::string_view to_string(ArrowLabel l);
std::string_view to_string(SequenceKind k);

/// e.g. "0 -> M_5 -> M_1 (+) M_6 -> M_2 -> 0".
std::string describe(const ARSequence& seq);

}  // namespace fsig
