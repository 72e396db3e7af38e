#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecn/table_io.hpp"

using namespace ecn;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("ecn-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

void expect_same(const Tables& a, const Tables& b) {
  ASSERT_EQ(a.outcomes.ruleset(), b.outcomes.ruleset());
  ASSERT_EQ(a.outcomes.size(), b.outcomes.size());
  ASSERT_EQ(a.grundy.has_value(), b.grundy.has_value());
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    ASSERT_EQ(a.outcomes.at_index(i), b.outcomes.at_index(i));
    if (a.grundy) ASSERT_EQ(a.grundy->at_index(i), b.grundy->at_index(i));
  }
}

}  // namespace

TEST(TableIo, BinaryRoundTrip) {
  const auto t = build_tables(Ruleset::ecn(6, {1, 3}, 2), 3);
  std::stringstream buf;
  write_tables(buf, t);
  const auto back = read_tables(buf);
  expect_same(t, back);
  EXPECT_EQ(back.outcomes.bound(), 3U);
  EXPECT_TRUE(back.outcomes.box().is_cube());
}

TEST(TableIo, RoundTripWithoutGrundyAndOnANonCubeBox) {
  SolverOptions o;
  o.grundy = false;
  const auto t = build_box_tables(Ruleset::moore(3, 2), Box({1, 4, 2}), o);
  std::stringstream buf;
  write_tables(buf, t);
  const auto back = read_tables(buf);
  expect_same(t, back);
  EXPECT_EQ(back.outcomes.box().limits()[1], 4U);
}

TEST(TableIo, HeaderLayout) {
  const auto t = build_tables(Ruleset::ecn(4, {1}, 2), 0);
  std::stringstream buf;
  write_tables(buf, t);
  const std::string bytes = buf.str();
  ASSERT_GE(bytes.size(), 8U);
  EXPECT_EQ(bytes.substr(0, 4), "ECNT");
  EXPECT_EQ(bytes[4], 1);  // little-endian version
  EXPECT_NE(bytes.find("ECN(4_{1},2)"), std::string::npos);
}

TEST(TableIo, RejectsBadInput) {
  std::stringstream bad_magic("XXXX");
  EXPECT_THROW(read_tables(bad_magic), TableFormatError);

  const auto t = build_tables(Ruleset::ecn(4, {1}, 2), 2);
  std::stringstream buf;
  write_tables(buf, t);
  const std::string bytes = buf.str();

  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_tables(truncated), TableFormatError);

  std::string versioned = bytes;
  versioned[4] = 9;
  std::stringstream wrong_version(versioned);
  EXPECT_THROW(read_tables(wrong_version), TableFormatError);
}

TEST(TableIo, CsvExport) {
  const auto t = build_tables(Ruleset::ecn(4, {1}, 2), 1);
  std::ostringstream out;
  write_tables_csv(out, t);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "position,outcome,grundy");
  std::getline(in, line);
  EXPECT_EQ(line, "\"0,0,0,0\",P,0");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16U);
}

TEST(TableIo, FileNameEncodesRulesetBoundAndVersion) {
  EXPECT_EQ(table_file_name(Ruleset::ecn(6, {1, 2}, 3), 5), "ECN_6__1_2__3_-B5-v1.ecnt");
}

TEST(TableCacheDir, BuildsOnceThenLoads) {
  TempDir dir;
  const auto r = Ruleset::ecn(5, {1}, 2);
  const auto first = load_or_build(r, 3, dir.path());
  const auto file = dir.path() / table_file_name(r, 3);
  ASSERT_TRUE(std::filesystem::exists(file));
  const auto stamp = std::filesystem::last_write_time(file);
  const auto second = load_or_build(r, 3, dir.path());
  expect_same(first, second);
  EXPECT_EQ(std::filesystem::last_write_time(file), stamp);
}

TEST(TableCacheDir, CorruptFilesAreRebuilt) {
  TempDir dir;
  const auto r = Ruleset::ecn(5, {1}, 2);
  std::filesystem::create_directories(dir.path());
  {
    std::ofstream out(dir.path() / table_file_name(r, 2), std::ios::binary);
    out << "ECNT garbage";
  }
  const auto t = load_or_build(r, 2, dir.path());
  expect_same(t, build_tables(r, 2));
  std::ifstream in(dir.path() / table_file_name(r, 2), std::ios::binary);
  expect_same(read_tables(in), t);
}
