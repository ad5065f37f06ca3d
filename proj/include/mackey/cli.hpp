#pragma once

#include "config.hpp"
#include "errors.hpp"
#include "ext.hpp"
#include "grothendieck.hpp"
#include "ospcat.hpp"
#include "plethysm.hpp"
#include "poset.hpp"
#include "symalg.hpp"
#include "symfunc.hpp"
#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mackey::cli {

inline constexpr const char* kArtifactVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kUserError = 1, kRefused = 2 };

using json = nlohmann::ordered_json;
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

inline std::optional<std::string> processEnv(const std::string& name)
{
    if (const char* v = std::getenv(name.c_str()))
        return std::string(v);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Settings: flag > environment > config file > default.

struct Settings
{
    unsigned degreeCap = kDefaultDegreeCap;
    unsigned groupGuard = kDefaultGroupGuard;
    std::string cacheDir;
};

struct SettingFlags
{
    std::optional<unsigned> degreeCap;
    std::optional<unsigned> groupGuard;
    std::optional<std::string> cacheDir;
    std::optional<std::string> configFile;
};

inline unsigned parseUnsigned(const std::string& text, const std::string& what)
{
    if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a non-negative integer for " + what, text,
                         text.empty() ? 0 : text.find_first_not_of("0123456789"));
    return static_cast<unsigned>(std::stoul(text));
}

/// Reads `key = value` lines; '#' starts a comment. Keys: degree_cap, group_guard, cache_dir.
inline std::map<std::string, std::string> readConfigFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    unsigned lineNo = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string body = trim(line.substr(0, line.find('#')));
        if (body.empty())
            continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key = value on line " + std::to_string(lineNo), body, body.size());
        const std::string key = trim(body.substr(0, eq));
        if (key != "degree_cap" && key != "group_guard" && key != "cache_dir")
            throw ParseError("unknown config key on line " + std::to_string(lineNo), key, 0);
        out[key] = trim(body.substr(eq + 1));
    }
    return out;
}

inline Settings resolveSettings(const SettingFlags& flags, const EnvLookup& env)
{
    Settings s;
    std::optional<std::string> configPath = flags.configFile;
    if (!configPath)
        configPath = env("MACKEY_CONFIG");
    if (configPath) {
        const auto file = readConfigFile(*configPath);
        if (auto it = file.find("degree_cap"); it != file.end())
            s.degreeCap = parseUnsigned(it->second, "degree_cap");
        if (auto it = file.find("group_guard"); it != file.end())
            s.groupGuard = parseUnsigned(it->second, "group_guard");
        if (auto it = file.find("cache_dir"); it != file.end())
            s.cacheDir = it->second;
    }
    if (auto v = env("MACKEY_DEGREE_CAP"))
        s.degreeCap = parseUnsigned(*v, "MACKEY_DEGREE_CAP");
    if (auto v = env("MACKEY_GROUP_GUARD"))
        s.groupGuard = parseUnsigned(*v, "MACKEY_GROUP_GUARD");
    if (auto v = env("MACKEY_CACHE_DIR"))
        s.cacheDir = *v;
    if (flags.degreeCap)
        s.degreeCap = *flags.degreeCap;
    if (flags.groupGuard)
        s.groupGuard = *flags.groupGuard;
    if (flags.cacheDir)
        s.cacheDir = *flags.cacheDir;
    return s;
}

// ---------------------------------------------------------------------------
// Rendering.

struct Output
{
    json value;
    std::string text;
};

inline json toJson(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline json toJson(const Partition& p)
{
    json a = json::array();
    for (unsigned v : p.parts())
        a.push_back(v);
    return a;
}

inline json toJson(const QuadIndex& q) { return json::array({q.l, q.m, q.n, q.p}); }

inline json toJson(const SimpleIndex& s)
{
    return json::array({toJson(s.lam), toJson(s.mu), toJson(s.nu), toJson(s.pi)});
}

inline json toJson(const Decomposition& d)
{
    json a = json::array();
    for (const auto& [s, c] : d)
        a.push_back({{"index", toJson(s)}, {"mult", toJson(c)}});
    return a;
}

inline json toJson(const SymFunc& f)
{
    json a = json::array();
    for (const auto& [p, c] : f)
        a.push_back({{"partition", toJson(p)}, {"mult", toJson(c)}});
    return a;
}

inline json toJson(const PairDecomposition& d)
{
    json a = json::array();
    for (const auto& [pp, c] : d)
        a.push_back({{"pair", json::array({toJson(pp.first), toJson(pp.second)})}, {"mult", toJson(c)}});
    return a;
}

template <class Key>
std::string toText(const LinearCombination<Key>& d)
{
    std::ostringstream os;
    for (const auto& [k, c] : d)
        os << k << ' ' << c << '\n';
    return os.str();
}

inline std::string line(const std::string& s) { return s + "\n"; }

// ---------------------------------------------------------------------------
// Commands.

inline Output runDefect(const QuadIndex& a, const QuadIndex& b)
{
    const auto d = defect(a, b);
    return {d ? json(*d) : json(nullptr), line(d ? std::to_string(*d) : "undefined")};
}

inline Output runChains(const QuadIndex& a, const QuadIndex& b)
{
    json arr = json::array();
    std::string text;
    for (const auto& chain : chains(a, b)) {
        json c = json::array();
        std::string row;
        for (const auto& x : chain) {
            c.push_back(toJson(x));
            row += (row.empty() ? "" : " < ") + x.str();
        }
        arr.push_back(c);
        text += line(row);
    }
    return {arr, text};
}

inline Output runCovers(const QuadIndex& a, unsigned bound)
{
    json arr = json::array();
    std::string text;
    for (const auto& c : covers(a, bound)) {
        arr.push_back(toJson(c));
        text += line(c.str());
    }
    return {arr, text};
}

inline Output runPlethysm(const std::string& outerName, const std::string& inner, unsigned k)
{
    PowerKind outer;
    if (outerName == "sym")
        outer = PowerKind::symmetric;
    else if (outerName == "ext")
        outer = PowerKind::exterior;
    else
        throw ParseError("expected 'sym' or 'ext'", outerName, 0);
    if (inner == "tensor") {
        const auto d = cauchy(outer, k);
        return {toJson(d), toText(d)};
    }
    if (inner == "sym2") {
        const auto d = powerOfSym2(k, outer);
        return {toJson(d), toText(d)};
    }
    if (inner == "ext2") {
        const auto d = powerOfExt2(k, outer);
        return {toJson(d), toText(d)};
    }
    throw ParseError("expected 'tensor', 'sym2' or 'ext2'", inner, 0);
}

inline Output runLayers(unsigned kmax)
{
    json arr = json::array();
    std::string text;
    const auto layers = layersOfI(kmax);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        arr.push_back(toJson(layers[k]));
        text += line("# k=" + std::to_string(k)) + toText(layers[k]);
    }
    return {arr, text};
}

inline Output runExt(const SimpleIndex& s, const SimpleIndex& t, unsigned q)
{
    const ExtAnswer a = extDimension(s, t, q);
    const char* kind = a.kind == ExtAnswer::Kind::zero        ? "zero"
                       : a.kind == ExtAnswer::Kind::dimension ? "dimension"
                                                               : "unknown";
    json v = {{"kind", kind}, {"value", a.kind == ExtAnswer::Kind::unknown ? json(nullptr) : toJson(a.value)}};
    return {v, line(a.str())};
}

inline Output runResolution(unsigned j)
{
    const ResolutionTerm t = resolutionTerm(j);
    json v = {{"degree", t.j}, {"body", t.body}, {"socle", toJson(t.socle)}};
    return {v, line("# " + t.body) + toText(t.socle)};
}

inline Output runHomdim(const QuadIndex& q, const std::string& flavor)
{
    if (flavor == "end") {
        const BigInt d = endDimension(q);
        return {json{{"flavor", "end"}, {"target", toJson(q)}, {"dimension", toJson(d)}}, line(toString(d))};
    }
    const HomFlavor f = parseHomFlavor(flavor);
    const QuadIndex t = homTarget(q, f);
    const BigInt d = homDimensionDeg1(q, f);
    return {json{{"flavor", toString(f)}, {"target", toJson(t)}, {"dimension", toJson(d)}}, line(toString(d))};
}

inline Output runQuadkernel(const QuadIndex& q)
{
    const auto r = quadraticKernelReport(q);
    json v = {{"closed_form", toJson(r.closedForm)},
              {"right_ideal", r.rightIdeal},
              {"bimodule", r.bimodule},
              {"diagram_kernel", toJson(r.diagramKernel)},
              {"ok", r.ok()}};
    std::ostringstream os;
    os << r.closedForm << '\n'
       << "# right ideal " << r.rightIdeal << ", bimodule " << r.bimodule << ", diagram kernel " << r.diagramKernel
       << (r.ok() ? ", consistent" : ", INCONSISTENT") << '\n';
    return {v, os.str()};
}

inline Output runVerify(bool& allPassed)
{
    json arr = json::array();
    std::string text;
    allPassed = true;
    for (const auto& check : verify::acceptanceChecks()) {
        const auto r = check();
        allPassed = allPassed && r.passed;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text += line(std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.name + ": " +
                     r.detail);
    }
    return {arr, text};
}

// ---------------------------------------------------------------------------

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const EnvLookup& env = processEnv)
{
    CLI::App app{"Exact calculator for the Mackey tensor categories", "mackey"};
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.require_subcommand(0, 1);

    std::string outputFormat = "text";
    SettingFlags flags;
    bool verifyFlag = false;
    app.add_option("--output", outputFormat, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--degree-cap", flags.degreeCap, "Largest degree any computation may reach");
    app.add_option("--group-guard", flags.groupGuard, "Largest number of points for group-algebra work");
    app.add_option("--cache-dir", flags.cacheDir, "Directory of the persistent LR cache");
    app.add_option("--config", flags.configFile, "key=value configuration file");
    app.add_flag("--verify", verifyFlag, "Re-run the oracle cross-checks");

    std::vector<std::string> pos;
    unsigned degree = 0, bound = 3;
    std::string flavor = "contract", kindName = "o";

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^LAM_{MU,NU}");
    lr->add_option("args", pos, "LAM MU NU")->allow_extra_args(false)->expected(3)->required();
    auto* product = app.add_subcommand("product", "Schur product s_MU * s_NU");
    product->add_option("args", pos, "MU NU")->allow_extra_args(false)->expected(2)->required();
    auto* pleth = app.add_subcommand("plethysm", "sym|ext power of tensor (F), sym2 or ext2");
    pleth->add_option("args", pos, "OUTER INNER K")->allow_extra_args(false)->expected(3)->required();
    auto* decompose = app.add_subcommand("decompose", "Composition factors of J_{l,m,n,p}");
    decompose->add_option("args", pos, "QUAD")->allow_extra_args(false)->expected(1)->required();
    auto* tensorCmd = app.add_subcommand("tensor", "Composition factors of GEN (x) L_INDEX");
    tensorCmd->add_option("args", pos, "INDEX GENERATOR")->allow_extra_args(false)->expected(2)->required();
    auto* socle = app.add_subcommand("socle", "Socle of I_{l,m,n,p}");
    socle->add_option("args", pos, "QUAD")->allow_extra_args(false)->expected(1)->required();
    auto* layers = app.add_subcommand("layers", "Layers S^k F of I for k <= KMAX");
    layers->add_option("args", pos, "KMAX")->allow_extra_args(false)->expected(1)->required();
    auto* defectCmd = app.add_subcommand("defect", "Defect d(a, b), or undefined");
    defectCmd->add_option("args", pos, "A B")->allow_extra_args(false)->expected(2)->required();
    auto* chainsCmd = app.add_subcommand("chains", "Saturated chains from a to b");
    chainsCmd->add_option("args", pos, "A B")->allow_extra_args(false)->expected(2)->required();
    auto* coversCmd = app.add_subcommand("covers", "Immediate successors of a");
    coversCmd->add_option("args", pos, "A")->allow_extra_args(false)->expected(1)->required();
    coversCmd->add_option("--bound", bound, "Largest entry considered");
    auto* ext = app.add_subcommand("ext", "dim Ext^q(L_s, L_t) where determined");
    ext->add_option("args", pos, "S T")->allow_extra_args(false)->expected(2)->required();
    ext->add_option("--degree", degree, "Ext degree q")->required();
    auto* extTrivial = app.add_subcommand("ext-trivial", "dim Ext^j(L_x, C)");
    extTrivial->add_option("args", pos, "X")->allow_extra_args(false)->expected(1)->required();
    extTrivial->add_option("--degree", degree, "Ext degree j")->required();
    auto* resolution = app.add_subcommand("resolution", "Term j of the injective resolution of C");
    resolution->add_option("args", pos, "J")->allow_extra_args(false)->expected(1)->required();
    auto* kernel = app.add_subcommand("kernel", "Layer K_j^k / K_j^(k-1) of the kernel K_j");
    kernel->add_option("args", pos, "J K")->allow_extra_args(false)->expected(2)->required();
    auto* homdim = app.add_subcommand("homdim", "dim Hom(I_q, I_target) in degree <= 1");
    homdim->add_option("args", pos, "QUAD")->allow_extra_args(false)->expected(1)->required();
    homdim->add_option("--flavor", flavor, "end, contract, shiftLeft or shiftRight");
    auto* quadkernel = app.add_subcommand("quadkernel", "Kernel of the composite of two contractions");
    quadkernel->add_option("args", pos, "QUAD")->allow_extra_args(false)->expected(1)->required();

    auto* osp = app.add_subcommand("osp", "Orthogonal / symplectic variant");
    osp->add_option("--kind", kindName, "o or sp")->check(CLI::IsMember({"o", "sp"}));
    osp->require_subcommand(1);
    auto* ospDefectCmd = osp->add_subcommand("defect", "Defect of pairs l,m");
    ospDefectCmd->add_option("args", pos, "A B")->allow_extra_args(false)->expected(2)->required();
    auto* ospLayers = osp->add_subcommand("layers", "Layers S^k F_g for k <= KMAX");
    ospLayers->add_option("args", pos, "KMAX")->allow_extra_args(false)->expected(1)->required();
    auto* ospSocle = osp->add_subcommand("socle", "Socle Lambda^j F_g of resolution term j");
    ospSocle->add_option("args", pos, "J")->allow_extra_args(false)->expected(1)->required();
    auto* ospExt = osp->add_subcommand("ext-trivial", "dim Ext^j(L_{lam,mu}, C)");
    ospExt->add_option("args", pos, "LAM MU")->allow_extra_args(false)->expected(2)->required();
    ospExt->add_option("--degree", degree, "Ext degree j")->required();
    auto* ospConj = osp->add_subcommand("conjugate", "The o <-> sp correspondence");
    ospConj->add_option("args", pos, "LAM MU")->allow_extra_args(false)->expected(2)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << '\n';
        return kUserError;
    }

    // detaches the cache file however run() exits
    struct CacheGuard
    {
        bool attached = false;
        ~CacheGuard()
        {
            if (attached)
                lrCache().detach();
        }
    } cacheGuard;

    std::string command;
    try {
        const Settings settings = resolveSettings(flags, env);
        limits().degreeCap.store(settings.degreeCap);
        limits().groupGuard.store(settings.groupGuard);
        if (!settings.cacheDir.empty()) {
            std::filesystem::create_directories(settings.cacheDir);
            cacheGuard.attached = true;
            if (!lrCache().attach(std::filesystem::path(settings.cacheDir) / "lr-cache.txt"))
                err << "warning: LR cache file was corrupt and has been rebuilt\n";
        }

        Output result;
        int status = kOk;
        auto arg = [&](std::size_t i) -> const std::string& { return pos.at(i); };
        auto number = [&](std::size_t i) { return parseUnsigned(arg(i), "argument " + std::to_string(i + 1)); };

        if (verifyFlag) {
            if (!app.get_subcommands().empty())
                throw DomainError("--verify does not take a subcommand");
            command = "verify";
            bool passed = false;
            result = runVerify(passed);
            status = passed ? kOk : kUserError;
        } else if (app.get_subcommands().empty()) {
            err << "error: a subcommand is required (see --help)\n";
            return kUserError;
        } else if (lr->parsed()) {
            command = "lr";
            const auto c = lrCoefficient(parsePartition(arg(0)), parsePartition(arg(1)), parsePartition(arg(2)));
            result = {json(c), line(std::to_string(c))};
        } else if (product->parsed()) {
            command = "product";
            const auto f = schurProduct(schur(parsePartition(arg(0))), schur(parsePartition(arg(1))));
            result = {toJson(f), toText(f)};
        } else if (pleth->parsed()) {
            command = "plethysm";
            result = runPlethysm(arg(0), arg(1), number(2));
        } else if (decompose->parsed()) {
            command = "decompose";
            const auto d = decomposeJ(parseQuadIndex(arg(0)));
            result = {toJson(d), toText(d)};
        } else if (tensorCmd->parsed()) {
            command = "tensor";
            const auto d = tensorSimple(parseSimpleIndex(arg(0)), parseGenerator(arg(1)));
            result = {toJson(d), toText(d)};
        } else if (socle->parsed()) {
            command = "socle";
            const auto d = socleOf(parseQuadIndex(arg(0)));
            result = {toJson(d), toText(d)};
        } else if (layers->parsed()) {
            command = "layers";
            result = runLayers(number(0));
        } else if (defectCmd->parsed()) {
            command = "defect";
            result = runDefect(parseQuadIndex(arg(0)), parseQuadIndex(arg(1)));
        } else if (chainsCmd->parsed()) {
            command = "chains";
            result = runChains(parseQuadIndex(arg(0)), parseQuadIndex(arg(1)));
        } else if (coversCmd->parsed()) {
            command = "covers";
            result = runCovers(parseQuadIndex(arg(0)), bound);
        } else if (ext->parsed()) {
            command = "ext";
            result = runExt(parseSimpleIndex(arg(0)), parseSimpleIndex(arg(1)), degree);
        } else if (extTrivial->parsed()) {
            command = "ext-trivial";
            const unsigned v = extToTrivial(parseSimpleIndex(arg(0)), degree);
            result = {json(v), line(std::to_string(v))};
        } else if (resolution->parsed()) {
            command = "resolution";
            result = runResolution(number(0));
        } else if (kernel->parsed()) {
            command = "kernel";
            const auto d = kernelLayer(number(0), number(1));
            result = {toJson(d), toText(d)};
        } else if (homdim->parsed()) {
            command = "homdim";
            result = runHomdim(parseQuadIndex(arg(0)), flavor);
        } else if (quadkernel->parsed()) {
            command = "quadkernel";
            result = runQuadkernel(parseQuadIndex(arg(0)));
        } else if (osp->parsed()) {
            const OspKind kind = parseOspKind(kindName);
            if (ospDefectCmd->parsed()) {
                command = "osp defect";
                const auto d = ospDefect(parseOspPair(arg(0)), parseOspPair(arg(1)));
                result = {d ? json(*d) : json(nullptr), line(d ? std::to_string(*d) : "undefined")};
            } else if (ospLayers->parsed()) {
                command = "osp layers";
                json arr = json::array();
                std::string text;
                const auto ls = ospLayersOfI(kind, number(0));
                for (std::size_t k = 0; k < ls.size(); ++k) {
                    arr.push_back(toJson(ls[k]));
                    text += line("# k=" + std::to_string(k)) + toText(ls[k]);
                }
                result = {arr, text};
            } else if (ospSocle->parsed()) {
                command = "osp socle";
                const auto d = ospResolutionSocle(kind, number(0));
                result = {toJson(d), toText(d)};
            } else if (ospExt->parsed()) {
                command = "osp ext-trivial";
                const unsigned v = ospExtToTrivial({kind, parsePartition(arg(0)), parsePartition(arg(1))}, degree);
                result = {json(v), line(std::to_string(v))};
            } else if (ospConj->parsed()) {
                command = "osp conjugate";
                const OspIndex y = ospConjugate({kind, parsePartition(arg(0)), parsePartition(arg(1))});
                result = {json{{"kind", toString(y.kind)}, {"lam", toJson(y.lam)}, {"mu", toJson(y.mu)}},
                          line(y.str())};
            }
        }

        if (outputFormat == "json") {
            json envelope = {{"artifact_version", kArtifactVersion}, {"command", command}, {"result", result.value}};
            out << envelope.dump(2) << '\n';
        } else {
            out << result.text;
        }
        return status;
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const GuardExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    }
}

} // namespace mackey::cli
