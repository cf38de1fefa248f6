#include <gtest/gtest.h>

#include "ivnsoft/errors.hpp"
#include "ivnsoft/interval.hpp"
#include "support/golden.hpp"

namespace ivnsoft {
namespace {

using testing::iv;

TEST(Scalar, ParsesDecimalTextExactly) {
  EXPECT_EQ(Scalar::parse("0.55"), Scalar(11, 20));
  EXPECT_EQ(Scalar::parse("1.0"), Scalar(1));
  EXPECT_EQ(Scalar::parse(".5"), Scalar(1, 2));
  EXPECT_EQ(Scalar::parse("-0.25"), Scalar(-1, 4));
  EXPECT_EQ(Scalar::parse("5e-2"), Scalar(1, 20));
  EXPECT_EQ(Scalar::parse("19/60"), Scalar(19, 60));
  EXPECT_EQ(Scalar::parse("0.08"), Scalar(2, 25));
}

TEST(Scalar, RejectsMalformedText) {
  for (const char* bad : {"", ".", "abc", "0.5.1", "1/0", "1e99999", "--1", "0x10"})
    EXPECT_THROW(Scalar::parse(bad), SchemaError) << bad;
}

TEST(Scalar, ExactTextIsMinimal) {
  EXPECT_EQ(Scalar::parse("0.50").to_string(), "0.5");
  EXPECT_EQ(Scalar(1).to_string(), "1");
  EXPECT_EQ(Scalar(0).to_string(), "0");
  EXPECT_EQ(Scalar(19, 60).to_string(), "19/60");
  EXPECT_EQ(Scalar(7, 50).to_string(), "0.14");
}

TEST(Scalar, DisplayRounding) {
  EXPECT_EQ(Scalar(5, 12).to_display(2), "0.42");
  EXPECT_EQ(Scalar(5, 12).to_display(2, Rounding::truncate), "0.41");
  EXPECT_EQ(Scalar(1).to_display(2), "1.0");
  EXPECT_EQ(Scalar(0).to_display(2), "0.0");
  EXPECT_EQ(Scalar(1, 8).to_display(2), "0.13");
  EXPECT_EQ(Scalar(11, 20).to_display(2), "0.55");
  EXPECT_EQ(Scalar(37, 60).rounded(2, Rounding::truncate), Scalar(61, 100));
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_THROW(Scalar(1) / Scalar(0), Error); }

TEST(Interval, StrictConstructionValidates) {
  const auto r = make_interval(Scalar::parse("0.2"), Scalar::parse("0.5"), Validation::strict);
  EXPECT_EQ(r.value, iv("0.2", "0.5"));
  EXPECT_TRUE(r.notes.empty());
  EXPECT_THROW(make_interval(Scalar::parse("0.6"), Scalar::parse("0.5"), Validation::strict), InvalidInterval);
  EXPECT_THROW(make_interval(Scalar::parse("1.0"), Scalar::parse("1.1"), Validation::strict), InvalidInterval);
  EXPECT_THROW(Interval(Scalar(-1, 10), Scalar(0)), InvalidInterval);
}

TEST(Interval, LenientRepairsAndRecords) {
  const auto clamped = make_interval(Scalar::parse("1.0"), Scalar::parse("1.1"), Validation::lenient);
  EXPECT_EQ(clamped.value, iv("1", "1"));
  ASSERT_EQ(clamped.notes.size(), 1u);
  EXPECT_NE(clamped.notes[0].find("1.1 -> 1"), std::string::npos);

  const auto swapped = make_interval(Scalar::parse("0.6"), Scalar::parse("0.5"), Validation::lenient);
  EXPECT_EQ(swapped.value, iv("0.5", "0.6"));
  ASSERT_EQ(swapped.notes.size(), 1u);
  EXPECT_NE(swapped.notes[0].find("swapped"), std::string::npos);
}

TEST(Interval, InvalidIntervalMessageNamesTheBounds) {
  try {
    (void)make_interval(Scalar::parse("0.6"), Scalar::parse("0.5"), Validation::strict);
    FAIL();
  } catch (const InvalidInterval& e) {
    EXPECT_EQ(e.lo(), "0.6");
    EXPECT_EQ(e.hi(), "0.5");
  }
}

TEST(Interval, PointwiseCombine) {
  EXPECT_EQ(combine(iv("0.5", "0.7"), iv("0.6", "0.8"), Pointwise::max), iv("0.6", "0.8"));
  EXPECT_EQ(combine(iv("0.2", "0.5"), iv("0.1", "0.5"), Pointwise::min), iv("0.1", "0.5"));
  EXPECT_EQ(combine(iv("0.2", "0.5"), iv("0.2", "0.5"), Pointwise::min), iv("0.2", "0.5"));
  EXPECT_EQ(combine(iv("0.1", "0.9"), iv("0.3", "0.4"), Pointwise::min), iv("0.1", "0.4"));
}

TEST(Interval, ClampedAddition) {
  EXPECT_EQ(add_clamped(iv("0.5", "0.7"), iv("0.8", "0.9")), iv("1", "1"));
  EXPECT_EQ(add_clamped(Interval::zero(), iv("0.3", "0.6")), iv("0.3", "0.6"));
  EXPECT_EQ(add_clamped(iv("0.5", "0.5"), iv("0.5", "0.5")), iv("1", "1"));
  EXPECT_EQ(add_clamped(iv("0.1", "0.2"), iv("0.3", "0.9")), iv("0.4", "1"));
}

TEST(Interval, ClampedScaling) {
  EXPECT_EQ(scale_clamped(iv("0.5", "0.7"), Scalar(5), ScaleKind::divide), iv("0.1", "0.14"));
  EXPECT_EQ(scale_clamped(iv("0.3", "0.6"), Scalar(1), ScaleKind::multiply), iv("0.3", "0.6"));
  EXPECT_EQ(scale_clamped(iv("0.6", "0.9"), Scalar(2), ScaleKind::multiply), iv("1", "1"));
  EXPECT_EQ(scale_clamped(iv("0.3", "0.6"), Scalar(1, 2), ScaleKind::multiply), iv("0.15", "0.3"));
  EXPECT_THROW(scale_clamped(iv("0.6", "0.9"), Scalar(0), ScaleKind::divide), NonPositiveScalar);
  EXPECT_THROW(scale_clamped(iv("0.6", "0.9"), Scalar(-2), ScaleKind::multiply), NonPositiveScalar);
}

TEST(Interval, UnitComplement) {
  EXPECT_EQ(complement_unit(iv("0.8", "0.9")), iv("0.1", "0.2"));
  EXPECT_EQ(complement_unit(Interval::zero()), Interval::unit());
  EXPECT_EQ(complement_unit(complement_unit(iv("0.25", "0.6"))), iv("0.25", "0.6"));
}

TEST(Interval, Mean) {
  const Interval two[] = {iv("0.6", "0.8"), iv("0.5", "0.8")};
  EXPECT_EQ(mean(two), iv("0.55", "0.8"));
  const Interval one[] = {iv("0.3", "0.4")};
  EXPECT_EQ(mean(one), iv("0.3", "0.4"));
  EXPECT_THROW(mean(std::span<const Interval>{}), EmptySequence);
}

TEST(Interval, MeanOfSixHouseX2Truth) {
  const IvnSoftSet s = testing::load_golden("six_house.json", Validation::lenient);
  std::vector<Interval> truths;
  for (const auto& cell : s.row(s.parameter_index("x2"))) truths.push_back(cell.truth);
  const Interval m = mean(truths);
  EXPECT_EQ(m, Interval(Scalar(19, 60), Scalar(7, 10)));
  EXPECT_EQ(m.to_display(2, Rounding::truncate), "[0.31,0.7]");
}

TEST(Interval, Rendering) {
  EXPECT_EQ(iv("0.5", "1").to_display(), "[0.5,1.0]");
  EXPECT_EQ(Interval(Scalar(19, 60), Scalar(7, 10)).to_string(), "[19/60,0.7]");
}

}  // namespace
}  // namespace ivnsoft
