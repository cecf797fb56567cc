#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "bitplane_lab/csv.hpp"
#include "bitplane_lab/feature_table.hpp"
#include "errors.hpp"
#include "synth.hpp"

namespace bpl {
namespace {

using testing::thrown_code;

TEST(CsvNumber, ShortestRoundtrip) {
  EXPECT_EQ(csv::format_number(0.1), "0.1");
  EXPECT_EQ(csv::format_number(1.0), "1");
  EXPECT_EQ(csv::format_number(2.0 / 3.0), "0.6666666666666666");
  EXPECT_EQ(csv::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(csv::format_number(-std::numeric_limits<double>::infinity()), "-inf");
  SplitMix64 rng(60);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.unit() - 0.5) * std::pow(10.0, static_cast<double>(rng.below(40)) - 20.0);
    ASSERT_EQ(csv::parse_number(csv::format_number(v)), v);
  }
  EXPECT_EQ(csv::parse_number("-inf"), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(thrown_code([] { csv::parse_number("1.5x"); }), Errc::SchemaMismatch);
  EXPECT_EQ(thrown_code([] { csv::parse_number(""); }), Errc::SchemaMismatch);
}

TEST(CsvLine, QuotingRules) {
  EXPECT_EQ(csv::split_line("a,\"b,c\",\"d\"\"e\"\r"), (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(csv::split_line("x,,"), (std::vector<std::string>{"x", "", ""}));
  EXPECT_EQ(csv::escape_field("plain"), "plain");
  EXPECT_EQ(csv::escape_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape_field("q\""), "\"q\"\"\"");
}

std::string table_csv(std::size_t rows, std::size_t dim, std::size_t short_row = 99) {
  std::ostringstream out;
  out << "image_id,representation,label";
  for (std::size_t f = 0; f < dim; ++f) out << ",f" << f;
  out << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    out << "img" << r << ",msb4," << r % 2;
    const std::size_t n = r == short_row ? dim - 1 : dim;
    for (std::size_t f = 0; f < n; ++f) out << ',' << 0.25 * static_cast<double>(f + r);
    out << '\n';
  }
  return out.str();
}

TEST(FeatureTable, ReadsWideRows) {
  std::istringstream in(table_csv(3, 1024));
  const FeatureTable t = read_external_features(in);
  EXPECT_EQ(t.feature_dim, 1024U);
  ASSERT_EQ(t.rows.size(), 3U);
  EXPECT_EQ(t.rows[2].image_id, "img2");
  EXPECT_EQ(t.rows[2].representation, "msb4");
  EXPECT_EQ(t.rows[1].label, 1);
  EXPECT_EQ(t.rows[2].features[1023], 0.25 * 1025);
}

TEST(FeatureTable, ShortRowIsRagged) {
  std::istringstream in(table_csv(3, 1024, 1));
  EXPECT_EQ(thrown_code([&] { read_external_features(in); }), Errc::RaggedRows);
}

TEST(FeatureTable, SchemaErrors) {
  for (const std::string bad : {"id,representation,label,f0\nx,msb4,0,1\n",
                                "image_id,representation,label,f1\nx,msb4,0,1\n",
                                "image_id,representation,label,f0\nx,msb4,2,1\n",
                                "image_id,representation,label,f0\nx,msb4,0,abc\n",
                                "image_id,representation,label,f0\nx,msb4,0,nan\n", ""}) {
    std::istringstream in(bad);
    EXPECT_EQ(thrown_code([&] { read_external_features(in); }), Errc::SchemaMismatch) << bad;
  }
  EXPECT_EQ(thrown_code([] { load_external_features("/no/such/features.csv"); }), Errc::FileNotFound);
}

TEST(FeatureTable, WriteReadRoundtrip) {
  SplitMix64 rng(61);
  FeatureTable t;
  t.feature_dim = 17;
  for (int r = 0; r < 20; ++r) {
    FeatureTable::Row row{"id," + std::to_string(r), "lsb4", r % 2, {}};
    for (std::size_t f = 0; f < t.feature_dim; ++f) row.features.push_back(rng.unit() * 1e3 - 500.0);
    t.rows.push_back(row);
  }
  testing::TempDir dir("features");
  save_external_features(t, dir / "t.csv");
  const FeatureTable back = load_external_features(dir / "t.csv");
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    EXPECT_EQ(back.rows[r].image_id, t.rows[r].image_id);
    EXPECT_EQ(back.rows[r].label, t.rows[r].label);
    EXPECT_EQ(back.rows[r].features, t.rows[r].features);
  }
}

TEST(FeatureTable, SharedDeepFeatureFixture) {
  const FeatureTable t =
      load_external_features(std::filesystem::path(BITPLANE_LAB_FIXTURES) / "deepfeat_sample.csv");
  EXPECT_EQ(t.feature_dim, 1024U);
  EXPECT_EQ(t.rows.size(), 10U);
  for (const auto& row : t.rows) {
    for (const double v : row.features) ASSERT_TRUE(std::isfinite(v));
  }
}

}  // namespace
}  // namespace bpl
