#pragma once

#include "combination.hpp"
#include "config.hpp"
#include "partition.hpp"

#include <boost/crc.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace mackey {

/// Finite integer combination of Schur functions s_lambda.
using SymFunc = LinearCombination<Partition>;

inline SymFunc schur(const Partition& p, BigInt coeff = 1) { return SymFunc::single(p, std::move(coeff)); }

namespace detail {

/// Counts Littlewood-Richardson tableaux of skew shape outer/inner with content `weight`:
/// semistandard fillings whose right-to-left, top-to-bottom reading word is a lattice word.
class LrTableauCounter
{
public:
    LrTableauCounter(const Partition& outer, const Partition& inner, const Partition& weight)
        : outer_(outer), inner_(inner), weight_(weight), counts_(weight.length() + 1, 0)
    {
        for (unsigned r = 0; r < outer.length(); ++r)
            filling_.emplace_back(outer[r], 0u);
    }

    std::uint64_t count()
    {
        total_ = 0;
        visit(0, outer_.length() ? static_cast<int>(outer_[0]) - 1 : -1);
        return total_;
    }

private:
    void visit(unsigned row, int col)
    {
        // advance to the next cell in reading order
        while (row < outer_.length() && col < static_cast<int>(inner_[row])) {
            ++row;
            if (row < outer_.length())
                col = static_cast<int>(outer_[row]) - 1;
        }
        if (row >= outer_.length()) {
            ++total_;
            return;
        }
        const unsigned c = static_cast<unsigned>(col);
        unsigned hi = static_cast<unsigned>(weight_.length());
        hi = std::min(hi, row + 1);
        if (c + 1 < outer_[row])
            hi = std::min(hi, filling_[row][c + 1]);
        unsigned lo = 1;
        if (row > 0 && c >= inner_[row - 1] && c < outer_[row - 1])
            lo = filling_[row - 1][c] + 1;
        for (unsigned v = lo; v <= hi; ++v) {
            if (counts_[v] + 1 > weight_[v - 1])
                continue;
            if (v > 1 && counts_[v] + 1 > counts_[v - 1])
                continue;
            ++counts_[v];
            filling_[row][c] = v;
            visit(row, col - 1);
            --counts_[v];
        }
        filling_[row][c] = 0;
    }

    const Partition& outer_;
    const Partition& inner_;
    const Partition& weight_;
    std::vector<unsigned> counts_;
    std::vector<std::vector<unsigned>> filling_;
    std::uint64_t total_ = 0;
};

inline std::uint32_t crc32Of(const std::string& s)
{
    boost::crc_32_type crc;
    crc.process_bytes(s.data(), s.size());
    return crc.checksum();
}

} // namespace detail

/// Persistent record file for LR coefficients.
///
/// Format: a header line `# mackey lr-cache v1`, then one record per line
///
///     <lambda> <mu> <nu> <coefficient> <crc32-hex>
///
/// where partitions use the `[a,b,c]` syntax and the checksum is the CRC-32 of
/// everything before the final space. Any malformed record or checksum
/// mismatch invalidates the whole file, which is then truncated and rebuilt.
class LrCacheFile
{
public:
    using Key = std::tuple<Partition, Partition, Partition>;
    static constexpr const char* kHeader = "# mackey lr-cache v1";

    explicit LrCacheFile(std::filesystem::path path) : path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

    /// Reads all records. Returns nullopt (and resets the file) on corruption.
    std::optional<std::map<Key, std::uint64_t>> load()
    {
        std::map<Key, std::uint64_t> out;
        std::ifstream in(path_);
        if (!in) {
            reset();
            return out;
        }
        std::string line;
        if (!std::getline(in, line) || line != kHeader) {
            reset();
            return std::nullopt;
        }
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            auto rec = parseRecord(line);
            if (!rec) {
                reset();
                return std::nullopt;
            }
            out.emplace(std::move(rec->first), rec->second);
        }
        return out;
    }

    void append(const Key& key, std::uint64_t value)
    {
        std::lock_guard lock(mutex_);
        std::ofstream out(path_, std::ios::app);
        out << formatRecord(key, value) << '\n';
    }

    static std::string formatRecord(const Key& key, std::uint64_t value)
    {
        std::ostringstream body;
        body << std::get<0>(key) << ' ' << std::get<1>(key) << ' ' << std::get<2>(key) << ' ' << value;
        const std::string b = body.str();
        std::ostringstream rec;
        rec << b << ' ' << std::hex << std::setw(8) << std::setfill('0') << detail::crc32Of(b);
        return rec.str();
    }

    static std::optional<std::pair<Key, std::uint64_t>> parseRecord(const std::string& line)
    {
        const auto cut = line.rfind(' ');
        if (cut == std::string::npos)
            return std::nullopt;
        const std::string body = line.substr(0, cut);
        const std::string sum = line.substr(cut + 1);
        std::uint32_t expected = 0;
        try {
            std::size_t used = 0;
            expected = static_cast<std::uint32_t>(std::stoul(sum, &used, 16));
            if (used != sum.size() || sum.size() != 8)
                return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (detail::crc32Of(body) != expected)
            return std::nullopt;
        try {
            std::size_t pos = 0;
            Partition lam = parsePartitionAt(body, pos);
            Partition mu = parsePartitionAt(body, pos);
            Partition nu = parsePartitionAt(body, pos);
            std::istringstream rest(body.substr(pos));
            std::uint64_t v = 0;
            if (!(rest >> v))
                return std::nullopt;
            return std::make_pair(Key{std::move(lam), std::move(mu), std::move(nu)}, v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

private:
    void reset()
    {
        std::lock_guard lock(mutex_);
        if (path_.has_parent_path())
            std::filesystem::create_directories(path_.parent_path());
        std::ofstream out(path_, std::ios::trunc);
        out << kHeader << '\n';
    }

    std::filesystem::path path_;
    std::mutex mutex_;
};

/// Memo table of LR coefficients, keyed by (lambda, mu, nu) with mu <= nu.
///
/// Insertion is idempotent: concurrent writers may race to insert the same
/// value and the first one wins. An attached file receives every new record.
class LrCache
{
public:
    using Key = LrCacheFile::Key;

    std::optional<std::uint64_t> find(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(const Key& key, std::uint64_t value)
    {
        bool fresh = false;
        {
            std::unique_lock lock(mutex_);
            fresh = table_.emplace(key, value).second;
        }
        if (fresh && file_)
            file_->append(key, value);
    }

    /// Attaches a record file, loading whatever valid records it holds.
    /// Returns false if the file was corrupt and has been reset.
    bool attach(const std::filesystem::path& path)
    {
        auto file = std::make_shared<LrCacheFile>(path);
        auto loaded = file->load();
        std::unique_lock lock(mutex_);
        if (loaded)
            for (auto& [k, v] : *loaded)
                table_.emplace(k, v);
        file_ = std::move(file);
        return loaded.has_value();
    }

    void detach()
    {
        std::unique_lock lock(mutex_);
        file_.reset();
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, std::uint64_t> table_;
    std::shared_ptr<LrCacheFile> file_;
};

inline LrCache& lrCache()
{
    static LrCache cache;
    return cache;
}

/// Littlewood-Richardson coefficient c^lam_{mu,nu}.
inline std::uint64_t lrCoefficient(const Partition& lam, const Partition& mu, const Partition& nu)
{
    if (lam.degree() != mu.degree() + nu.degree())
        return 0;
    if (!contains(lam, mu) || !contains(lam, nu))
        return 0;
    if (mu.empty())
        return lam == nu ? 1 : 0;
    if (nu.empty())
        return lam == mu ? 1 : 0;
    const bool swap = nu < mu;
    LrCache::Key key{lam, swap ? nu : mu, swap ? mu : nu};
    if (auto hit = lrCache().find(key))
        return *hit;
    detail::LrTableauCounter counter(lam, std::get<1>(key), std::get<2>(key));
    const std::uint64_t value = counter.count();
    lrCache().insert(key, value);
    return value;
}

namespace detail {

inline const std::vector<Partition>& partitionsMemo(unsigned n)
{
    static std::mutex m;
    static std::map<unsigned, std::vector<Partition>> memo;
    std::lock_guard lock(m);
    auto it = memo.find(n);
    if (it == memo.end())
        it = memo.emplace(n, partitionsOf(n)).first;
    return it->second;
}

} // namespace detail

/// s_mu * s_nu expanded in the Schur basis.
inline SymFunc schurProductOfPartitions(const Partition& mu, const Partition& nu)
{
    const unsigned n = mu.degree() + nu.degree();
    requireDegree(n, "schurProduct");
    SymFunc out;
    const unsigned maxFirst = mu[0] + nu[0];
    const std::size_t maxLen = mu.length() + nu.length();
    for (const Partition& lam : detail::partitionsMemo(n)) {
        if (lam[0] > maxFirst || lam.length() > maxLen)
            continue;
        if (auto c = lrCoefficient(lam, mu, nu))
            out.add(lam, c);
    }
    return out;
}

inline SymFunc schurProduct(const SymFunc& a, const SymFunc& b)
{
    SymFunc out;
    for (const auto& [mu, cm] : a)
        for (const auto& [nu, cn] : b) {
            auto prod = schurProductOfPartitions(mu, nu);
            prod *= cm * cn;
            out += prod;
        }
    return out;
}

/// (e_k, h_k) = (s_{1^k}, s_{(k)}): the characters of Lambda^k and S^k.
inline std::pair<SymFunc, SymFunc> elementaryHomogeneous(unsigned k)
{
    requireDegree(k, "elementaryHomogeneous");
    return {schur(Partition::column(k)), schur(Partition::row(k))};
}

/// Highest degree among the terms (0 for the zero function).
inline unsigned maxDegree(const SymFunc& f)
{
    unsigned d = 0;
    for (const auto& [p, c] : f)
        d = std::max(d, p.degree());
    return d;
}

} // namespace mackey
