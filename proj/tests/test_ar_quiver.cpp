#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "fsig/ar_quiver.hpp"
#include "fsig/hj_series.hpp"
#include "fsig/monomial_module.hpp"

using namespace fsig;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool contains(const std::vector<Exponent>& v, const Exponent& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST(ARQuiver, TranslateAndCanonical) {
  const GroupParams g = validate_group(7, 3);
  EXPECT_EQ(tau(0, g), 3);
  EXPECT_EQ(tau(2, g), 5);
  EXPECT_EQ(canonical_label(g), 3);
  const ARSequence seq = ar_sequence(2, g);
  EXPECT_EQ(seq.middle_x, 1);
  EXPECT_EQ(seq.middle_y, 6);
  EXPECT_EQ(seq.tau, 5);
  EXPECT_EQ(describe(seq), "0 -> M_5 -> M_1 (+) M_6 -> M_2 -> 0");
  EXPECT_EQ(describe(ar_sequence(0, g)), "0 -> M_3 -> M_6 (+) M_4 -> R -> k -> 0");
}

TEST(ARQuiver, GorensteinTranslateIsIdentity) {
  for (Int n = 2; n <= 30; ++n) {
    const GroupParams g = validate_group(n, n - 1);
    EXPECT_EQ(canonical_label(g), 0);
    for (Int t = 0; t < n; ++t) EXPECT_EQ(tau(t, g), t);
  }
}

TEST(ARQuiver, ArrowsAreIrreducibleMultiplications) {
  for (Int n = 2; n <= 25; ++n) {
    for (Int a = 1; a < n; ++a) {
      if (std::gcd(n, a) != 1) continue;
      const GroupParams g{n, a};
      const ARQuiver q = build_quiver(g);
      ASSERT_EQ(static_cast<Int>(q.arrows.size()), 2 * n);
      EXPECT_TRUE(std::is_sorted(q.arrows.begin(), q.arrows.end()));
      std::vector<Int> in(static_cast<std::size_t>(n), 0), out(static_cast<std::size_t>(n), 0);
      for (const Arrow& arr : q.arrows) {
        ++in[static_cast<std::size_t>(arr.target)];
        ++out[static_cast<std::size_t>(arr.source)];
        const Exponent f = arr.label == ArrowLabel::x ? Exponent{1, 0} : Exponent{0, 1};
        EXPECT_TRUE(contains(hom_monomials(arr.source, arr.target, g).mingens, f));
      }
      for (Int t = 0; t < n; ++t) {
        EXPECT_EQ(in[static_cast<std::size_t>(t)], 2);
        EXPECT_EQ(out[static_cast<std::size_t>(t)], 2);
      }
    }
  }
}

TEST(ARQuiver, DotMatchesGolden) {
  const GroupParams g = validate_group(7, 3);
  EXPECT_EQ(export_quiver(g, QuiverFormat::dot),
            read_file(std::string(FSIG_GOLDEN_DIR) + "/quiver_7_3.dot"));
}

TEST(ARQuiver, JsonCarriesSameData) {
  const GroupParams g = validate_group(7, 3);
  const auto doc = nlohmann::json::parse(export_quiver(g, QuiverFormat::json));
  EXPECT_EQ(doc["group"]["n"], 7);
  EXPECT_EQ(doc["group"]["a"], 3);
  ASSERT_EQ(doc["vertices"].size(), 7u);
  ASSERT_EQ(doc["arrows"].size(), 14u);
  const ARQuiver q = build_quiver(g);
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    EXPECT_EQ(doc["arrows"][k]["source"], q.arrows[k].source);
    EXPECT_EQ(doc["arrows"][k]["target"], q.arrows[k].target);
    EXPECT_EQ(doc["arrows"][k]["label"], std::string(to_string(q.arrows[k].label)));
  }
  const std::vector<Int> specials = special_labels(series_for(g));
  for (const auto& v : doc["vertices"]) {
    const Int label = v["label"];
    EXPECT_EQ(v["special"], std::count(specials.begin(), specials.end(), label) == 1);
    EXPECT_EQ(v["canonical"], label == 3);
  }
}

TEST(ARQuiver, FormatParsing) {
  EXPECT_EQ(parse_quiver_format("dot"), QuiverFormat::dot);
  EXPECT_EQ(parse_quiver_format("json"), QuiverFormat::json);
  EXPECT_THROW(parse_quiver_format("svg"), ValidationError);
}
