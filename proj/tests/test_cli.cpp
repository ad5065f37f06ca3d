#include <mackey/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include <unistd.h>

using namespace mackey;

namespace {

struct Result
{
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args, std::map<std::string, std::string> env = {})
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, [env](const std::string& name) -> std::optional<std::string> {
        auto it = env.find(name);
        if (it == env.end())
            return std::nullopt;
        return it->second;
    });
    return {code, out.str(), err.str()};
}

std::filesystem::path scratchDir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("mackey-cli-" + std::to_string(::getpid())) / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST(Cli, SpecExamples)
{
    EXPECT_EQ(call({"lr", "[2,1]", "[1]", "[2]"}).out, "1\n");
    EXPECT_EQ(call({"defect", "1,0,0,1", "0,1,1,0"}).out, "2\n");
    EXPECT_EQ(call({"ext-trivial", "[1],[],[],[1]", "--degree", "1"}).out, "1\n");
}

TEST(Cli, EverySubcommandSucceeds)
{
    const std::vector<std::vector<std::string>> queries = {
        {"product", "[2,1]", "[1]"},
        {"plethysm", "ext", "ext2", "2"},
        {"decompose", "0,1,1,0"},
        {"tensor", "[],[1],[1],[]", "V"},
        {"socle", "0,1,1,0"},
        {"layers", "2"},
        {"chains", "1,0,0,1", "0,1,1,0"},
        {"covers", "0,0,0,0", "--bound", "2"},
        {"ext", "[1],[],[],[1]", "[],[],[],[]", "--degree", "1"},
        {"resolution", "2"},
        {"kernel", "1", "1"},
        {"homdim", "1,2,1,0", "--flavor", "shiftLeft"},
        {"quadkernel", "0,2,2,0"},
        {"osp", "--kind", "o", "layers", "2"},
        {"osp", "--kind", "sp", "socle", "2"},
        {"osp", "defect", "1,0", "0,1"},
        {"osp", "conjugate", "[2]", "[]"},
    };
    for (const auto& q : queries) {
        const auto r = call(q);
        EXPECT_EQ(r.code, 0) << q.front() << ": " << r.err;
        EXPECT_FALSE(r.out.empty()) << q.front();
        EXPECT_TRUE(r.err.empty()) << q.front();
    }
}

TEST(Cli, TextRendering)
{
    EXPECT_EQ(call({"decompose", "1,0,0,0"}).out, "([1],[],[],[]) 1\n");
    EXPECT_EQ(call({"plethysm", "sym", "sym2", "2"}).out, "[2,2] 1\n[4] 1\n");
    EXPECT_EQ(call({"defect", "0,1,1,0", "1,0,0,1"}).out, "undefined\n");
    EXPECT_EQ(call({"ext", "[1],[1],[],[1]", "[],[1],[],[]", "--degree", "1"}).out, "unknown\n");
    EXPECT_EQ(call({"homdim", "2,2,1,1", "--flavor", "end"}).out, "4\n");
    EXPECT_EQ(call({"osp", "--kind", "o", "ext-trivial", "[3,1]", "[]", "--degree", "2"}).out, "1\n");
    EXPECT_EQ(call({"osp", "--kind", "sp", "conjugate", "[2,1,1]", "[1]"}).out, "o:([3,1],[1])\n");
}

TEST(Cli, JsonEnvelope)
{
    const auto r = call({"--output", "json", "socle", "0,1,1,0"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["artifact_version"], "1.0.0");
    EXPECT_EQ(j["command"], "socle");
    ASSERT_EQ(j["result"].size(), 1u);
    EXPECT_EQ(j["result"][0]["index"], nlohmann::json::parse("[[],[1],[1],[]]"));
    EXPECT_EQ(j["result"][0]["mult"], 1);

    const auto big = call({"--output", "json", "homdim", "12,12,12,12", "--flavor", "end"});
    ASSERT_EQ(big.code, 0) << big.err;
    EXPECT_TRUE(nlohmann::json::parse(big.out)["result"]["dimension"].is_string());
}

TEST(Cli, OutputIsDeterministic)
{
    for (const auto& q : std::vector<std::vector<std::string>>{
             {"decompose", "1,1,1,1"}, {"--output", "json", "layers", "3"}, {"chains", "2,0,0,2", "0,1,1,0"}}) {
        const auto a = call(q), b = call(q);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.code, b.code);
    }
}

TEST(Cli, ParseErrorsExitOneAndNamePosition)
{
    const auto r = call({"lr", "[2,1", "[1]", "[2]"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("'[2,1'"), std::string::npos) << r.err;

    const auto q = call({"decompose", "1,0,x,0"});
    EXPECT_EQ(q.code, 1);
    EXPECT_NE(q.err.find("position 4"), std::string::npos) << q.err;
}

TEST(Cli, UserErrorsExitOne)
{
    EXPECT_EQ(call({}).code, 1);
    EXPECT_EQ(call({"frobnicate"}).code, 1);
    EXPECT_EQ(call({"lr", "[1]", "[1]"}).code, 1);
    EXPECT_EQ(call({"homdim", "0,0,0,0"}).code, 1);
    EXPECT_EQ(call({"plethysm", "sym", "cube", "2"}).code, 1);
    EXPECT_EQ(call({"--output", "yaml", "lr", "[1]", "[1]", "[]"}).code, 1);
    const auto domain = call({"homdim", "0,1,0,0", "--flavor", "contract"});
    EXPECT_EQ(domain.code, 1);
    EXPECT_NE(domain.err.find("0,1,0,0"), std::string::npos);
}

TEST(Cli, RefusalsExitTwo)
{
    EXPECT_EQ(call({"--degree-cap", "3", "decompose", "2,2,0,0"}).code, 2);
    EXPECT_EQ(call({"decompose", "4,4,4,4"}).code, 2);
    EXPECT_EQ(call({"--group-guard", "3", "quadkernel", "0,2,2,0"}).code, 2);
    const auto r = call({"--degree-cap", "3", "decompose", "2,2,0,0"});
    EXPECT_NE(r.err.find("cap"), std::string::npos);
    // the cap is reset for the next invocation
    EXPECT_EQ(call({"decompose", "2,2,0,0"}).code, 0);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("decompose"), std::string::npos);
}

TEST(Cli, ConfigPrecedence)
{
    const auto dir = scratchDir("config");
    const auto file = dir / "mackey.conf";
    {
        std::ofstream out(file);
        out << "# limits\ndegree_cap = 3\ngroup_guard=8\n";
    }
    const std::vector<std::string> q{"decompose", "2,2,0,0"};
    auto with = [&](std::vector<std::string> front) {
        front.insert(front.end(), q.begin(), q.end());
        return front;
    };
    // file
    EXPECT_EQ(call(with({"--config", file.string()})).code, 2);
    EXPECT_EQ(call(q, {{"MACKEY_CONFIG", file.string()}}).code, 2);
    // environment beats file
    EXPECT_EQ(call(q, {{"MACKEY_CONFIG", file.string()}, {"MACKEY_DEGREE_CAP", "10"}}).code, 0);
    // flag beats environment
    EXPECT_EQ(call(with({"--degree-cap", "3"}), {{"MACKEY_DEGREE_CAP", "10"}}).code, 2);
    EXPECT_EQ(call(with({"--degree-cap", "10"}), {{"MACKEY_DEGREE_CAP", "3"}}).code, 0);
    // default
    EXPECT_EQ(call(q).code, 0);

    const auto settings = cli::resolveSettings({}, [](const std::string&) { return std::nullopt; });
    EXPECT_EQ(settings.degreeCap, 12u);
    EXPECT_EQ(settings.groupGuard, 8u);
}

TEST(Cli, BadConfigIsUserError)
{
    const auto dir = scratchDir("badconfig");
    const auto file = dir / "bad.conf";
    {
        std::ofstream out(file);
        out << "colour = blue\n";
    }
    const auto r = call({"--config", file.string(), "lr", "[1]", "[1]", "[]"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("colour"), std::string::npos);
    EXPECT_EQ(call({"lr", "[1]", "[1]", "[]"}, {{"MACKEY_DEGREE_CAP", "ten"}}).code, 1);
    EXPECT_EQ(call({"--config", (dir / "missing.conf").string(), "lr", "[1]", "[1]", "[]"}).code, 1);
}

TEST(Cli, CacheDirectory)
{
    const auto dir = scratchDir("cache");
    const auto r = call({"--cache-dir", dir.string(), "lr", "[3,2,1]", "[2,1]", "[2,1]"});
    EXPECT_EQ(r.out, "2\n");
    EXPECT_TRUE(r.err.empty());
    EXPECT_TRUE(std::filesystem::exists(dir / "lr-cache.txt"));

    {
        std::ofstream out(dir / "lr-cache.txt", std::ios::trunc);
        out << "garbage\n";
    }
    const auto again = call({"lr", "[3,2,1]", "[2,1]", "[2,1]"}, {{"MACKEY_CACHE_DIR", dir.string()}});
    EXPECT_EQ(again.code, 0);
    EXPECT_EQ(again.out, "2\n");
    EXPECT_NE(again.err.find("corrupt"), std::string::npos);
}

TEST(Cli, VerifyPassesAllChecks)
{
    const auto r = call({"--verify"});
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t lines = 0, passes = 0;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line); ++lines)
        passes += line.rfind("PASS", 0) == 0;
    EXPECT_EQ(lines, 10u);
    EXPECT_EQ(passes, 10u);
}

#ifdef MACKEY_CLI_PATH
TEST(Cli, BinarySeparatesStreams)
{
    const std::string cmd = std::string(MACKEY_CLI_PATH) + " lr '[2,1' '[1]' '[2]' 2>/dev/null; echo \"rc=$?\"";
    std::array<char, 256> buf{};
    std::string out;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    while (std::fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    ::pclose(pipe);
    EXPECT_EQ(out, "rc=1\n");

    const std::string ok = std::string(MACKEY_CLI_PATH) + " defect 1,0,0,1 0,1,1,0";
    pipe = ::popen(ok.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    out.clear();
    while (std::fgets(buf.data(), buf.size(), pipe))
        out += buf.data();
    EXPECT_EQ(::pclose(pipe), 0);
    EXPECT_EQ(out, "2\n");
}
#endif
