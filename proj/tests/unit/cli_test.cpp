#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arlab/errors.hpp"
#include "arlab_cli/cli.hpp"
#include "arlab_cli/io.hpp"
#include "arlab_cli/spec_file.hpp"

using namespace arlab;
using namespace arlab::cli;

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "arlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST(SpecFile, ParsesEveryType) {
  EXPECT_EQ(parse_class_spec(R"({"type":"full","horizon":6})").type, "full");
  const ClassSpec s = parse_class_spec(R"({"type":"shifted_subset","N":[1,3,4],"s_max":16,"horizon":32})");
  EXPECT_EQ(s.N, (std::vector<std::int64_t>{1, 3, 4}));
  EXPECT_EQ(*s.s_max, 16U);
  const ClassSpec p = parse_class_spec(
      R"({"type":"product","parts":[{"type":"full","horizon":4},{"type":"parity","k_max":2}]})");
  ASSERT_EQ(p.parts.size(), 2U);
  EXPECT_EQ(build_class(p, 1, 1 << 20).F.size(), 16U * 4U);
  EXPECT_EQ(build_class(parse_class_spec(R"({"type":"linear_grid","d":1,"weight_bound":1})"), 3, 100).F.size(), 9U);
  EXPECT_EQ(*build_class(parse_class_spec(R"({"type":"linear_grid","d":2,"weight_bound":1})"), 3, 100).linear_d, 2U);
  EXPECT_EQ(build_class(parse_class_spec(R"({"type":"atdim_example","depth":2})"), 1, 100).F.size(), 4U);
  EXPECT_EQ(build_class(parse_class_spec(R"({"type":"taxonomy","rate":[2,2,2,4]})"), 1, 1 << 20).F.size(),
            std::size_t{5 * 4} * (5 * 4));
}

TEST(SpecFile, ErrorsNameTheField) {
  auto field_of = [](const std::string& text) {
    try {
      parse_class_spec(text);
    } catch (const SpecError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of("{"), "spec");
  EXPECT_EQ(field_of(R"({"horizon":3})"), "type");
  EXPECT_EQ(field_of(R"({"type":"cube"})"), "type");
  EXPECT_EQ(field_of(R"({"type":"full"})"), "horizon");
  EXPECT_EQ(field_of(R"({"type":"full","horizon":-1})"), "horizon");
  EXPECT_EQ(field_of(R"({"type":"full","horizon":4,"d":2})"), "d");
  EXPECT_EQ(field_of(R"({"type":"shifted_subset","N":[1,"x"],"s_max":2})"), "N");
  EXPECT_EQ(field_of(R"({"type":"product","parts":[{"type":"full"}]})"), "parts[0].horizon");
  EXPECT_EQ(field_of(R"({"type":"taxonomy","rate":[]})"), "rate");
}

TEST(Io, Domains) {
  EXPECT_EQ(parse_domain("chain:3"), (Domain{"0"_bits, "00"_bits, "000"_bits}));
  EXPECT_EQ(parse_domain(R"("",01,1)"), (Domain{BitString{}, "01"_bits, "1"_bits}));
  EXPECT_THROW(parse_domain("0,0"), SpecError);
  EXPECT_THROW(parse_domain("0,2"), SpecError);
  EXPECT_THROW(parse_domain("chain:x"), SpecError);
}

TEST(Io, SampleCsvRoundTrip) {
  CotSample S(2);
  S.push_back({BitString{}, "01"_bits});
  S.push_back({"10"_bits, "11"_bits});
  std::ostringstream out;
  write_sample_csv(out, S);
  std::istringstream in(out.str());
  EXPECT_EQ(read_sample_csv(in), S);

  std::istringstream ragged("prompt,trace\n0,1\n1,11\n");
  EXPECT_THROW(read_sample_csv(ragged), SpecError);
  std::istringstream header("x,y\n0,1\n");
  EXPECT_THROW(read_sample_csv(header), SpecError);
}

TEST(Io, Formatting) {
  EXPECT_EQ(csv_bits(BitString{}), "\"\"");
  EXPECT_EQ(csv_bits("01"_bits), "01");
  EXPECT_EQ(csv_text("a,b"), "\"a,b\"");
  EXPECT_EQ(format_decimal(0.09), "0.09");
  EXPECT_EQ(parse_count_list("1,2,4", "Ts"), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_THROW(parse_count_list("1,-2", "Ts"), SpecError);
}

TEST_F(CliFiles, DimsShiftedSubset) {
  const std::string spec = write("f.json", R"({"type":"shifted_subset","N":[1,3,4],"s_max":16,"horizon":32})");
  const Result r = run_cli({"dims", spec, "--domain", "chain:8", "--T", "4", "--which", "vc_e2e"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2U);
  EXPECT_EQ(l[0], "dimension,value,wall_time_ms");
  EXPECT_EQ(l[1].rfind("vc_e2e,3,", 0), 0U);
}

TEST_F(CliFiles, DimsAllOnConstantClassIsZero) {
  const std::string spec = write("c.json", R"({"type":"linear_grid","d":1,"weight_bound":0})");
  const Result r = run_cli({"dims", spec, "--domain", "chain:4", "--T", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 7U);
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto first = l[i].find(',');
    EXPECT_EQ(l[i].substr(first, 3), ",0,") << l[i];
  }
}

TEST_F(CliFiles, DimsErrors) {
  const std::string bad = write("bad.json", R"({"type":"shifted_subset","N":[1,3],"s_max":"many"})");
  Result r = run_cli({"dims", bad, "--domain", "chain:4"});
  EXPECT_EQ(r.code, kParseError);
  EXPECT_NE(r.err.find("s_max"), std::string::npos);

  const std::string big = write("big.json", R"({"type":"full","horizon":12})");
  r = run_cli({"dims", big, "--domain", "chain:4", "--cap", "100"});
  EXPECT_EQ(r.code, kCapExceeded);

  r = run_cli({"dims", big, "--domain", "chain:4", "--which", "nonsense"});
  EXPECT_EQ(r.code, kParseError);
  r = run_cli({"dims", path("missing.json"), "--domain", "chain:4"});
  EXPECT_EQ(r.code, kParseError);
}

TEST(Cli, Taxonomy) {
  Result r = run_cli({"taxonomy", "--rate", "1,2,2,3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5U);
  EXPECT_EQ(l[0], "T,r,vc_e2e_restricted,lower_ok,upper_ok");
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_NE(l[i].find(",true,true"), std::string::npos) << l[i];

  r = run_cli({"taxonomy", "--rate", "1,1,1,1,1"});
  ASSERT_EQ(r.code, kOk);
  for (const auto& row : lines(r.out)) {
    if (row[0] != 'T') {
      EXPECT_EQ(row.substr(row.find(',') + 1, 3), "1,1");
    }
  }

  EXPECT_EQ(run_cli({"taxonomy", "--rate", "2,1"}).code, kInvalidRate);
  EXPECT_EQ(run_cli({"taxonomy", "--rate", "1,2", "--Tmax", "5"}).code, kParseError);
}

TEST(Cli, VerifyAndUsage) {
  Result r = run_cli({"verify", "--suite", "sauer", "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("1000 trees"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, kParseError);
  EXPECT_EQ(run_cli({}).code, kParseError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kParseError);
  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

TEST_F(CliFiles, LearnLearners) {
  const std::string full = write("full.json", R"({"type":"full","horizon":5})");
  const std::string sample = write("s.csv", "prompt,trace\n\"\",01\n0,10\n1,00\n");
  Result r = run_cli({"learn", full, sample, "--learner", "cot_compress", "--seed", "1", "--domain", "01"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5U);
  EXPECT_EQ(l[0], "prompt,trace,predicted,correct");
  EXPECT_NE(r.err.find("kernel_size,"), std::string::npos);

  r = run_cli({"learn", full, sample, "--learner", "erm_e2e"});
  ASSERT_EQ(r.code, kOk) << r.err;

  const std::string lin = write("lin.json", R"({"type":"linear_grid","d":2,"weight_bound":2})");
  const std::string sep = write("sep.csv", "prompt,trace\n11,11\n00,00\n010,00\n");
  const std::string report = path("report.csv");
  r = run_cli({"learn", lin, sep, "--learner", "linear_stable", "--report", report});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::ifstream rep(report);
  std::string text((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
  const auto at = text.find("kernel_size,");
  ASSERT_NE(at, std::string::npos);
  EXPECT_LE(std::stoul(text.substr(at + 12)), 3U);
}

TEST_F(CliFiles, LearnNonRealizable) {
  const std::string full = write("full.json", R"({"type":"full","horizon":5})");
  const std::string sample = write("s.csv", "prompt,trace\n1,1\n1,0\n");
  EXPECT_EQ(run_cli({"learn", full, sample, "--learner", "cot_compress"}).code, kNotRealizable);
  EXPECT_EQ(run_cli({"learn", full, sample, "--learner", "erm_e2e"}).code, kNotRealizable);
  EXPECT_EQ(run_cli({"learn", full, sample, "--learner", "linear_stable", "--d", "1"}).code, kNotRealizable);
  EXPECT_EQ(run_cli({"learn", full, sample, "--learner", "perceptron"}).code, kParseError);
}

TEST_F(CliFiles, SweepRowsAndDeterminism) {
  const std::string spec = write("f.json", R"({"type":"shifted_subset","N":[1,3],"s_max":6,"horizon":16})");
  const std::vector<std::string> args{"sweep", spec, "--domain", "chain:4", "--Ts", "2,1", "--mode", "cot,e2e",
                                      "--R",   "50", "--seed",   "3",       "--svg"};
  std::vector<std::string> a = args;
  a.push_back(path("a.svg"));
  const Result r1 = run_cli(a);
  ASSERT_EQ(r1.code, kOk) << r1.err;
  const auto l = lines(r1.out);
  ASSERT_EQ(l.size(), 5U);
  EXPECT_EQ(l[0], "T,mode,m_hat,failure_rate");
  EXPECT_EQ(l[1].substr(0, 6), "1,e2e,");
  EXPECT_EQ(l[2].substr(0, 6), "1,cot,");
  EXPECT_EQ(l[3].substr(0, 6), "2,e2e,");
  EXPECT_EQ(l[4].substr(0, 6), "2,cot,");
  EXPECT_TRUE(fs::exists(path("a.svg")));

  std::vector<std::string> b = args;
  b.push_back(path("b.svg"));
  b.push_back("--jobs");
  b.push_back("2");
  EXPECT_EQ(run_cli(b).out, r1.out);

  EXPECT_EQ(run_cli({"sweep", spec, "--domain", "chain:4", "--Ts", "1", "--mode", "cot", "--R", "10"}).code,
            kParseError);
  EXPECT_EQ(run_cli({"sweep", spec, "--domain", "chain:4", "--Ts", "1", "--learner", "cot_compress,linear_stable"})
                .code,
            kParseError);
}

#ifdef ARLAB_CLI_PATH
TEST_F(CliFiles, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const int raw = std::system((std::string(ARLAB_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("taxonomy --rate 1,2,2,3"), 0);
  EXPECT_EQ(status("taxonomy --rate 2,1"), 4);
  EXPECT_EQ(status("verify --suite nope"), 2);
}
#endif
