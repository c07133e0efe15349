#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sjk/cli/run.hpp"

using namespace sjk;
using io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string golden(const std::string& name) { return std::string(SJK_GOLDEN_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sjk_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, SeGolden) {
  const Result r = call({"se", "--d", "1", "--w", "21,5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(golden("se_d1_w21_5.json")));
}

TEST(Cli, InfoGolden) {
  const Result r = call({"info", "--seed-file", golden("s5.json"), "--l", "1,13", "--w", "21,5", "--v", "7,5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(golden("info_s5_l1_13_w21_5_v7_5.json")));
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("order"), 455);
  EXPECT_EQ(j.at("smooth"), true);
}

TEST(Cli, CscGolden) {
  const Result r = call({"csc", "--d", "1", "--A", "2", "--l", "1,13", "--w", "21,5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(golden("csc_d1_A2_l1_13_w21_5.json")));
  const Json j = Json::parse(r.out);
  bool found = false;
  for (const auto& ray : j.at("rays")) found = found || (ray.at("b") == "5/7" && ray.at("quasi_regular") == true);
  EXPECT_TRUE(found);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"search-se", "--d", "1", "--index", "2", "--height", "15", "--format", "csv"};
  auto one = args, many = args;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "5"});
  EXPECT_EQ(call(one).out, call(many).out);
  EXPECT_EQ(call(one).out, call(one).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"se", "--bogus", "1"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"se", "--d", "1", "--w", "4,2"}).code, 2);
  EXPECT_EQ(call({"se", "--d", "1", "--w", "21"}).code, 2);
  EXPECT_EQ(call({"info", "--seed-file", "/nonexistent/seed.json", "--l", "1,1", "--w", "2,1"}).code, 2);
  EXPECT_EQ(call({"se", "--d", "1", "--w", "21,5", "--format", "xml"}).code, 2);
}

TEST(Cli, PerpSwapsV) {
  const Result a = call({"info", "--d", "1", "--index", "2", "--l", "1,13", "--w", "5,21", "--v", "5,7"});
  ASSERT_EQ(a.code, 0) << a.err;
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j.at("order"), 455);
}

TEST(Render, EmptyCsvIsHeaderOnly) {
  EXPECT_EQ(io::render({}, io::Format::csv, cli::kSeColumns), "k,w,v,l,smooth,fano_index,order\r\n");
}

TEST(Render, JsonIsExact) {
  const Result r = call({"se", "--d", "1", "--w", "2,1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("k").is_string());
  EXPECT_EQ(j.at("k").get<std::string>().front(), '[');
  EXPECT_EQ(r.out.find('.'), std::string::npos);
}

TEST(Render, IntervalInTable) {
  const Result r = call({"se", "--d", "1", "--w", "2,1", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[1.686140..., 1.686141...] = ["), std::string::npos) << r.out;
}

TEST(Render, Precision) {
  const Result coarse = call({"se", "--d", "1", "--w", "2,1", "--precision", "1/100"});
  const Result fine = call({"se", "--d", "1", "--w", "2,1"});
  EXPECT_LT(coarse.out.size(), fine.out.size());
}

TEST(CatalogFile, RoundTripTamperWarning) {
  const auto path = temp_file("se.jsonl");
  const Result w = call({"search-se", "--d", "1", "--index", "2", "--height", "58", "--out", path.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  const io::Catalog c = io::load_catalog(path.string());
  ASSERT_GE(c.records.size(), 1000U);
  const auto expected = se::enumerate_quasiregular_se(join::SasakiSeed::ke(1, 2), {58, false, 2});
  ASSERT_EQ(c.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(c.records[i], io::se_record_json(expected[i]));
  EXPECT_TRUE(c.warnings.empty());

  const io::Catalog warned = io::load_catalog(path.string(), Json{{"height", 59}});
  EXPECT_EQ(warned.warnings.size(), 1U);
  EXPECT_EQ(warned.records.size(), c.records.size());

  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  Json bad = Json::parse(lines[3]);
  bad["v"] = Json::array({8, 14});
  lines[3] = bad.dump();
  {
    std::ofstream out(path, std::ios::trunc);
    for (const auto& line : lines) out << line << '\n';
  }
  try {
    io::load_catalog(path.string());
    ADD_FAILURE() << "tampered catalog loaded";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("catalog record 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(call({"catalog", "--load", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(CatalogFile, SchemaMismatch) {
  const auto path = temp_file("bad.jsonl");
  {
    std::ofstream out(path);
    out << R"({"schema":"other/2","family":"se","params":{}})" << '\n';
  }
  EXPECT_THROW(io::load_catalog(path.string()), ValidationError);
  std::filesystem::remove(path);
}

TEST(SeedFile, RejectsUnknownKeys) {
  EXPECT_THROW(io::seed_from_json(Json{{"d_N", 1}, {"A_N", "2"}, {"colour", "red"}}), ValidationError);
  const auto s = io::seed_from_json(Json::parse(slurp(golden("s5.json"))));
  EXPECT_EQ(s.d, 2);
}
