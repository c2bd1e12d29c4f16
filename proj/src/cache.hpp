#pragma once

#include "engine.hpp"

#include <filesystem>
#include <mutex>

namespace parity {

// One JSON file per index plus a manifest stamped with the engine version.
// A manifest mismatch wipes the stored equations on open.
class EquationCache : public EquationStore {
public:
    explicit EquationCache(std::filesystem::path dir);

    std::optional<LinComb> load(const IndexVector& n) override;
    void save(const IndexVector& n, const LinComb& equation) override;

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path(const IndexVector& n) const;

    // PARITY_CACHE_DIR, else $XDG_CACHE_HOME/parity, else ~/.cache/parity.
    static std::filesystem::path default_dir();

private:
    std::filesystem::path dir_;
    std::mutex mutex_;
};

}  // namespace parity
