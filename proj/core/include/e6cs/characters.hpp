#pragma once

#include "e6cs/lattice.hpp"
#include "e6cs/operator.hpp"
#include "e6cs/polynomial.hpp"

#include <atomic>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace e6cs {

enum class Method { recursion, annihilator, golden };

std::string_view to_string(Method m);
/// Throws ParseError on an unknown name.
Method parse_method(std::string_view name);

struct Character {
    Weight weight{};
    Polynomial poly;
    Method method = Method::recursion;
};

/// Coefficient recursion over the candidate exponents, highest first.
/// Throws ZeroDenominator on an eigenvalue collision.
Character character_recursion(const Weight& m, const OperatorTables& tables = OperatorTables::builtin());

/// Applies Π (Δ − ε_μ) over μ below m to z^m and rescales to monic.
/// Throws DegenerateScale if the leading coefficient vanishes.
Character character_annihilator(const Weight& m, const OperatorTables& tables = OperatorTables::builtin());

/// Checks monic leading term, integrality, support, the eigenvector
/// property and the Weyl dimension. Returns an empty string when valid,
/// else a short description of the first defect.
std::string character_defect(const Character& c, const OperatorTables& tables = OperatorTables::builtin());

/// E6CS_CACHE_DIR if set, else $XDG_CACHE_HOME/e6cs, else $HOME/.cache/e6cs.
std::filesystem::path default_cache_dir();

/// One JSON file per character. Safe for concurrent use; writes go through
/// a temporary file and an atomic rename.
class CharacterCache {
public:
    static constexpr int kVersion = 1;

    explicit CharacterCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file_for(const Weight& m) const;

    /// Throws CacheCorrupt if the file exists but cannot be parsed or fails
    /// validation.
    std::optional<Character> load(const Weight& m, const OperatorTables& tables = OperatorTables::builtin()) const;
    void store(const Character& c) const;

    /// Weights of every entry, sorted.
    std::vector<Weight> list() const;
    /// Removes every entry and returns how many were removed.
    std::size_t clear() const;

private:
    std::filesystem::path dir_;
};

/// Cache-first character provider: memory, then disk, then computation.
class CharacterEngine {
public:
    explicit CharacterEngine(std::shared_ptr<const CharacterCache> disk = nullptr,
                             Method method = Method::recursion,
                             const OperatorTables& tables = OperatorTables::builtin());

    std::shared_ptr<const Character> character(const Weight& m);

    Method method() const { return method_; }
    const OperatorTables& tables() const { return tables_; }
    const CharacterCache* disk() const { return disk_.get(); }

    /// Number of characters computed (not served from a cache).
    std::size_t computations() const { return computations_; }

private:
    std::shared_ptr<const CharacterCache> disk_;
    Method method_;
    const OperatorTables& tables_;
    std::mutex mutex_;
    std::map<Weight, std::shared_ptr<const Character>> memory_;
    std::atomic<std::size_t> computations_{0};
};

}  // namespace e6cs
