#include <gtest/gtest.h>

#include "output_record.hpp"

namespace annular::cli {
namespace {

OutputRecord sample() {
  OutputRecord r;
  r.parameters = {{"p", 5}, {"q", 3}, {"s", 1}};
  r.method = "formula";
  r.distribution = {{2, BigInt("123456789012345678901234567890")}, {4, 7}};
  r.derive_genus();
  return r;
}

TEST(OutputRecord, GenusView) {
  const auto r = sample();
  EXPECT_EQ(r.edges(), 4);
  EXPECT_EQ(r.genus, (std::map<int, BigInt>{{0, 7}, {1, BigInt("123456789012345678901234567890")}}));
  EXPECT_TRUE(r.invalid_k.empty());
  OutputRecord bad = sample();
  bad.distribution[3] = 1;
  bad.derive_genus();
  EXPECT_EQ(bad.invalid_k, (std::vector<int>{3}));
}

TEST(OutputRecord, JsonRoundTrip) {
  auto r = sample();
  EXPECT_EQ(from_json(to_json(r)), r);
  r.seconds = 0.125;
  EXPECT_EQ(from_json(to_json(r)), r);
  EXPECT_NE(to_json(r).find("\"123456789012345678901234567890\""), std::string::npos);
}

TEST(OutputRecord, CsvRoundTrip) {
  auto r = sample();
  const auto text = to_csv(r);
  EXPECT_EQ(text.substr(0, text.find('\n')), "p,q,s,method,vertices,k,genus,count,seconds");
  EXPECT_NE(text.find("5,3,1,formula,2,4,0,7,\n"), std::string::npos);
  EXPECT_EQ(from_csv(text), r);
  r.seconds = 1.0 / 3.0;
  EXPECT_EQ(from_csv(to_csv(r)), r);
  EXPECT_THROW(from_csv("nope\n"), std::invalid_argument);
}

TEST(OutputRecord, SingleCycleCsvLeavesAbsentParametersEmpty) {
  OutputRecord r;
  r.parameters = {{"p", 4}};
  r.method = "formula";
  r.vertices = 1;
  r.distribution = {{1, 1}, {3, 2}};
  r.derive_genus();
  EXPECT_EQ(r.genus, (std::map<int, BigInt>{{0, 2}, {1, 1}}));
  const auto text = to_csv(r);
  EXPECT_NE(text.find("4,,,formula,1,3,0,2,\n"), std::string::npos);
  EXPECT_EQ(from_csv(text), r);
}

}  // namespace
}  // namespace annular::cli
