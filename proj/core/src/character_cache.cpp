#include "e6cs/characters.hpp"
#include "e6cs/errors.hpp"
#include "e6cs/serialization.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace e6cs {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kPrefix = "chi_";
constexpr std::string_view kSuffix = ".json";

std::optional<Weight> weight_from_filename(const std::string& name)
{
    if (name.size() <= kPrefix.size() + kSuffix.size() || name.compare(0, kPrefix.size(), kPrefix) != 0
        || name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) != 0)
        return std::nullopt;
    std::string body = name.substr(kPrefix.size(), name.size() - kPrefix.size() - kSuffix.size());
    std::replace(body.begin(), body.end(), '-', ',');
    try {
        return parse_weight(body);
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

}  // namespace

fs::path default_cache_dir()
{
    if (const char* d = std::getenv("E6CS_CACHE_DIR"); d && *d)
        return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return fs::path(x) / "e6cs";
    if (const char* h = std::getenv("HOME"); h && *h)
        return fs::path(h) / ".cache" / "e6cs";
    return fs::temp_directory_path() / "e6cs-cache";
}

CharacterCache::CharacterCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CharacterCache::file_for(const Weight& m) const
{
    std::string key = format_weight(m);
    std::replace(key.begin(), key.end(), ',', '-');
    return dir_ / (std::string(kPrefix) + key + std::string(kSuffix));
}

std::optional<Character> CharacterCache::load(const Weight& m, const OperatorTables& tables) const
{
    const fs::path file = file_for(m);
    std::ifstream in(file, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    Character c;
    try {
        c = character_from_json(buf.str());
    } catch (const ParseError& ex) {
        throw CacheCorrupt(file.string() + ": " + ex.what());
    }
    if (c.weight != m)
        throw CacheCorrupt(file.string() + ": holds weight (" + format_weight(c.weight) + ")");
    if (auto why = character_defect(c, tables); !why.empty())
        throw CacheCorrupt(file.string() + ": " + why);
    return c;
}

void CharacterCache::store(const Character& c) const
{
    static std::atomic<unsigned> serial{0};
    fs::create_directories(dir_);
    const fs::path file = file_for(c.weight);
    fs::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(serial++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << character_to_json(c) << '\n';
        if (!out)
            throw Error("cannot write " + tmp.string());
    }
    fs::rename(tmp, file);
}

std::vector<Weight> CharacterCache::list() const
{
    std::vector<Weight> out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec))
        return out;
    for (const auto& entry : fs::directory_iterator(dir_))
        if (entry.is_regular_file())
            if (auto w = weight_from_filename(entry.path().filename().string()))
                out.push_back(*w);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t CharacterCache::clear() const
{
    std::size_t n = 0;
    for (const auto& w : list())
        n += fs::remove(file_for(w)) ? 1 : 0;
    return n;
}

}  // namespace e6cs
