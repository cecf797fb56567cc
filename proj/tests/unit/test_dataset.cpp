#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bitplane_lab/dataset.hpp"
#include "errors.hpp"

namespace bpl {
namespace {

using testing::thrown_code;

Dataset labelled(std::size_t zeros, std::size_t ones) {
  Dataset ds;
  for (std::size_t i = 0; i < zeros + ones; ++i) {
    ds.add({"r" + std::to_string(i), {static_cast<double>(i)}, i < zeros ? 0 : 1});
  }
  return ds;
}

TEST(Dataset, Validation) {
  Dataset ds;
  ds.add({"a", {1.0, 2.0}, 0});
  EXPECT_EQ(ds.feature_dim(), 2U);
  EXPECT_EQ(thrown_code([&] { ds.add({"b", {1.0}, 0}); }), Errc::DimensionMismatch);
  EXPECT_EQ(thrown_code([&] { ds.add({"a", {1.0, 2.0}, 1}); }), Errc::DuplicateId);
  EXPECT_EQ(thrown_code([&] { ds.add({"c", {1.0, 2.0}, 2}); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([&] { ds.add({"d", {std::nan(""), 2.0}, 1}); }), Errc::InvalidParams);
  EXPECT_EQ(ds.size(), 1U);
}

TEST(Split, BalancedHundredRows) {
  const Dataset ds = labelled(50, 50);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto split = train_test_split(ds, 0.2, seed);
    ASSERT_EQ(split.train.size(), 80U);
    ASSERT_EQ(split.test.size(), 20U);
    ASSERT_EQ(split.test.count_label(0), 10U);
    ASSERT_EQ(split.test.count_label(1), 10U);
  }
}

TEST(Split, SameSeedSamePartition) {
  const Dataset ds = labelled(37, 61);
  const auto a = train_test_split(ds, 0.25, 7);
  const auto b = train_test_split(ds, 0.25, 7);
  ASSERT_EQ(a.test.size(), b.test.size());
  for (std::size_t i = 0; i < a.test.size(); ++i) EXPECT_EQ(a.test[i].id, b.test[i].id);
  const auto c = train_test_split(ds, 0.25, 8);
  bool differs = false;
  for (std::size_t i = 0; i < a.test.size(); ++i) differs = differs || a.test[i].id != c.test[i].id;
  EXPECT_TRUE(differs);
}

TEST(Split, FullSizeDatasetGetsRoundedTotal) {
  std::vector<int> labels(4083, 0);
  std::fill(labels.begin(), labels.begin() + 717, 1);
  const auto mask = stratified_test_mask(labels, 0.2, 42);
  std::size_t test = 0;
  std::size_t test_pos = 0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    test += mask[i] ? 1 : 0;
    test_pos += mask[i] && labels[i] == 1 ? 1 : 0;
  }
  EXPECT_EQ(test, 817U);
  EXPECT_EQ(test_pos, 144U);
}

TEST(Split, KeepsRowOrderAndCoversEveryRowOnce) {
  const Dataset ds = labelled(13, 9);
  const auto split = train_test_split(ds, 0.3, 3);
  EXPECT_EQ(split.train.size() + split.test.size(), ds.size());
  for (const Dataset* part : {&split.train, &split.test}) {
    for (std::size_t i = 1; i < part->size(); ++i) {
      ASSERT_LT((*part)[i - 1].features[0], (*part)[i].features[0]);
    }
  }
}

TEST(Split, EveryClassOnBothSides) {
  const Dataset ds = labelled(2, 40);
  for (const double f : {0.01, 0.5, 0.99}) {
    const auto split = train_test_split(ds, f, 1);
    EXPECT_EQ(split.test.count_label(0), 1U);
    EXPECT_EQ(split.train.count_label(0), 1U);
  }
}

TEST(Split, Errors) {
  EXPECT_EQ(thrown_code([] { train_test_split(labelled(5, 5), 0.0, 1); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { train_test_split(labelled(5, 5), 1.0, 1); }), Errc::InvalidParams);
  EXPECT_EQ(thrown_code([] { train_test_split(labelled(1, 5), 0.2, 1); }), Errc::InsufficientData);
}

}  // namespace
}  // namespace bpl
