#include "fsig/ar_quiver.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "fsig/hj_series.hpp"

namespace fsig {

namespace {

std::string module_name(Int label) {
  return label == 0 ? "R" : "M_" + std::to_string(label);
}

std::vector<bool> special_flags(const GroupParams& g) {
  std::vector<bool> flags(static_cast<std::size_t>(g.n), false);
  for (Int label : special_labels(series_for(g))) {
    flags[static_cast<std::size_t>(label)] = true;
  }
  return flags;
}

}  // namespace

Int tau(Int t, const GroupParams& g) { return mod(t - g.a - 1, g.n); }

ARSequence ar_sequence(Int t, const GroupParams& g) {
  if (t < 0 || t >= g.n) {
    throw ValidationError("label must lie in [0, n) (got " + std::to_string(t) + ")");
  }
  ARSequence seq;
  seq.end = t;
  seq.middle_x = mod(t - 1, g.n);
  seq.middle_y = mod(t - g.a, g.n);
  seq.tau = tau(t, g);
  seq.kind = t == 0 ? SequenceKind::fundamental : SequenceKind::ar;
  return seq;
}

Int canonical_label(const GroupParams& g) { return tau(0, g); }

ARQuiver build_quiver(const GroupParams& g) {
  ARQuiver q;
  q.n = g.n;
  for (Int t = 0; t < g.n; ++t) {
    q.arrows.push_back({mod(t - 1, g.n), t, ArrowLabel::x});
    q.arrows.push_back({mod(t - g.a, g.n), t, ArrowLabel::y});
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

QuiverFormat parse_quiver_format(std::string_view name) {
  if (name == "dot") return QuiverFormat::dot;
  if (name == "json") return QuiverFormat::json;
  throw ValidationError("unknown quiver format '" + std::string(name) +
                        "' (expected dot or json)");
}

std::string_view to_string(ArrowLabel l) { return l == ArrowLabel::x ? "x" : "y"; }

std::string_view to_string(SequenceKind k) {
  return k == SequenceKind::ar ? "ar" : "fundamental";
}

std::string describe(const ARSequence& seq) {
  std::ostringstream os;
  os << "0 -> " << module_name(seq.tau) << " -> " << module_name(seq.middle_x)
     << " (+) " << module_name(seq.middle_y) << " -> " << module_name(seq.end);
  os << (seq.kind == SequenceKind::fundamental ? " -> k -> 0" : " -> 0");
  return os.str();
}

std::string export_quiver(const GroupParams& g, QuiverFormat format) {
  const ARQuiver q = build_quiver(g);
  const std::vector<bool> special = special_flags(g);
  const Int canonical = canonical_label(g);

  if (format == QuiverFormat::json) {
    nlohmann::ordered_json doc;
    doc["group"] = {{"n", g.n}, {"a", g.a}};
    doc["vertices"] = nlohmann::ordered_json::array();
    for (Int t = 0; t < g.n; ++t) {
      doc["vertices"].push_back({{"label", t},
                                 {"special", static_cast<bool>(special[static_cast<std::size_t>(t)])},
                                 {"canonical", t == canonical}});
    }
    doc["arrows"] = nlohmann::ordered_json::array();
    for (const Arrow& a : q.arrows) {
      doc["arrows"].push_back(
          {{"source", a.source}, {"target", a.target}, {"label", std::string(to_string(a.label))}});
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "digraph \"1/" << g.n << "(1," << g.a << ")\" {\n";
  for (Int t = 0; t < g.n; ++t) {
    os << "  " << t << " [special=" << (special[static_cast<std::size_t>(t)] ? "true" : "false")
       << ", canonical=" << (t == canonical ? "true" : "false") << "];\n";
  }
  for (const Arrow& a : q.arrows) {
    os << "  " << a.source << " -> " << a.target << " [label=\"" << to_string(a.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fsig
