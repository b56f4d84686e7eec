#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace pinchext::cli;
namespace fs = std::filesystem;

namespace {

const std::string config_dir = PINCHEXT_CONFIG_DIR;

struct Outcome {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "pinchext");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string cfg(const std::string& name) { return config_dir + "/" + name; }

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("pinchext_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path_ / name) << text;
        return (path_ / name).string();
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

} // namespace

TEST(CliTest, RemarkOneAlongLines) {
    const auto r = invoke({"test", "--config", cfg("remark1_test.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    ASSERT_EQ(j["curves"].size(), 5u);
    for (const auto& v : j["curves"]) EXPECT_EQ(v["verdict"]["kind"], "holomorphic");
}

TEST(CliTest, HorizontalCurveExitsTwo) {
    const auto r = invoke({"test", "--config", cfg("remark1_horizontal.ini")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["curves"][0]["verdict"]["kind"], "not-extendable");
}

TEST(CliTest, MissingConfigExitsOne) {
    EXPECT_EQ(invoke({"test", "--config", "/nonexistent/pinchext.ini"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"test"}).code, 1);
}

TEST(CliTest, CsvFormat) {
    const auto r = invoke({"test", "--config", cfg("remark1_test.ini"), "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "index,kind,residual,degree");
}

TEST(CliLadder, ExponentialHasPinchAtOrigin) {
    const auto r = invoke({"ladder", "--config", cfg("remark1_ladder.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto p = r.json()["pinch"]["pinches"];
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0]["order"], 1);
    EXPECT_EQ(p[0]["a"][0], 0.0);
}

TEST(CliLadder, HolomorphicInputHasNoPinch) {
    const auto r = invoke({"ladder", "--config", cfg("lambda_z2_ladder.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["pinch"]["pinches"].empty());
}

TEST(CliLadder, DepthAboveLimitExitsOne) {
    TempDir t;
    const auto path = t.write("deep.ini", "[function]\nname = remark1\n[curves]\ngenerator = lambda_over_k\n[analysis]\ndepth = 25\n");
    const auto r = invoke({"ladder", "--config", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("depth"), std::string::npos);
}

TEST(CliLadder, WritesJsonAndProfileFiles) {
    TempDir t;
    const auto r = invoke({"ladder", "--config", cfg("remark1_ladder.ini"), "--out", t.path().string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(t.path() / "ladder.json"));
    std::ifstream csv(t.path() / "ladder.csv");
    std::string header;
    std::getline(csv, header);
    EXPECT_EQ(header, "n,r,abs_An");
}

TEST(CliValidate, UnboundedWindingsAreNotATest) {
    const auto r = invoke({"validate", "--config", cfg("remark2_validate.ini")});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.json()["is_test"], false);
}

TEST(CliValidate, LinesAreATestButFailAtOrigin) {
    const auto r = invoke({"validate", "--config", cfg("lines_validate.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["is_test"], true);
    EXPECT_EQ(j["general_position"]["probes"][0]["passes"], false);
    EXPECT_EQ(j["general_position"]["probes"][1]["passes"], true);
}

TEST(CliValidate, EmptyCurveListExitsOne) {
    TempDir t;
    const auto path = t.write("empty.ini", "[curves]\n[analysis]\nn_bound = 10\n");
    EXPECT_EQ(invoke({"validate", "--config", path}).code, 1);
}

TEST(CliGallery, ExampleTwoPoleOrders) {
    const auto r = invoke({"gallery", "--config", cfg("example2_gallery.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto orders = r.json()["result"]["pole_orders"];
    ASSERT_EQ(orders.size(), 8u);
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(orders[static_cast<std::size_t>(k - 1)], k);
}

TEST(CliGallery, ExampleOneGrowthRows) {
    const auto r = invoke({"gallery", "--config", cfg("example1_gallery.ini")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["result"]["growth"]["rows"].size(), 7u);
}

TEST(CliDeterminism, ByteIdenticalReports) {
    for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
             {"test", "remark1_test.ini"}, {"ladder", "remark1_ladder.ini"}, {"validate", "remark2_validate.ini"},
             {"gallery", "example1_gallery.ini"}}) {
        const auto a = invoke({cmd, "--config", cfg(file)});
        const auto b = invoke({cmd, "--config", cfg(file)});
        EXPECT_EQ(a.out, b.out) << cmd;
    }
}

TEST(Config, RangesAndComplexLists) {
    const auto r = parse_range("3..7");
    EXPECT_EQ(r.first, 3);
    EXPECT_EQ(r.last, 7);
    EXPECT_THROW(parse_range("7..3"), ConfigError);
    EXPECT_THROW(parse_range("x"), ConfigError);
    const auto c = parse_complex_list("0.5, -i, 1+2i");
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1], pinchext::cplx(0.0, -1.0));
}

TEST(Config, SchemaAndValidation) {
    EXPECT_THROW(parse_config(IniFile::parse("[nope]\na = 1\n", "t")), ConfigError);
    EXPECT_THROW(parse_config(IniFile::parse("[function]\nname = remark1\nbad = 1\n", "t")), ConfigError);
    EXPECT_THROW(parse_config(IniFile::parse("[function]\nepsilon = 0.7\n", "t")), ConfigError);
    EXPECT_THROW(parse_config(IniFile::parse("[analysis]\ngrid = 100\n", "t")), ConfigError);
    EXPECT_THROW(parse_config(IniFile::parse("[analysis]\nn_max = 17\n", "t")), ConfigError);
    EXPECT_THROW(parse_config(IniFile::parse("key = 1\n", "t")), ConfigError);
    const auto c = parse_config(IniFile::parse("; comment\n[curves]\ncurve = 0.1, 0.5\ncurve = 0, 0.25 # two\n", "t"));
    ASSERT_EQ(c.curves.explicit_curves.size(), 2u);
    EXPECT_EQ(c.curves.explicit_curves[1][1], pinchext::cplx(0.25, 0.0));
}

TEST(Config, Generators) {
    const auto c = parse_config(IniFile::parse("[curves]\ngenerator = two_thirds_power\nindices = 1..4\n", "t"));
    const auto curves = build_curves(c);
    ASSERT_EQ(curves.size(), 4u);
    EXPECT_EQ(curves[3].degree(), 4);
    const auto r1 = build_curves(parse_config(IniFile::parse("[curves]\ngenerator = random\nindices = 1..3\n[analysis]\nseed = 9\n", "t")));
    const auto r2 = build_curves(parse_config(IniFile::parse("[curves]\ngenerator = random\nindices = 1..3\n[analysis]\nseed = 9\n", "t")));
    for (std::size_t i = 0; i < r1.size(); ++i) EXPECT_EQ(r1[i].coeffs(), r2[i].coeffs());
    EXPECT_THROW(parse_config(IniFile::parse("[curves]\ngenerator = spiral\n", "t")), ConfigError);
}

TEST(Config, CoefficientFileResolvedAgainstConfigDirectory) {
    const auto c = load_config(cfg("lambda_z2_ladder.ini"));
    const auto f = build_function(c);
    EXPECT_EQ(f(0.9, 0.5), pinchext::cplx(0.9 * 0.25, 0.0));
    TempDir t;
    const auto path = t.write("missing.ini", "[function]\nname = coefficients\nfile = absent.txt\n");
    EXPECT_THROW(load_config(path), ConfigError);
}
