#include "cache.hpp"

#include "errors.hpp"
#include "serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

namespace fs = std::filesystem;

namespace parity {

namespace {

Json manifest() { return Json{{"engine_version", kEngineVersion}, {"form", "canonical"}}; }

std::optional<Json> read_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return j;
}

// Write to a sibling temp file and rename, so concurrent writers of the same entry never expose a partial file.
void write_atomic(const fs::path& p, const std::string& text) {
    const fs::path tmp = p.string() + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << text << '\n';
        if (!out) fail(ErrorKind::Io, "cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) fail(ErrorKind::Io, "cannot rename into " + p.string() + ": " + ec.message());
}

}  // namespace

EquationCache::EquationCache(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) fail(ErrorKind::Io, "cannot create cache directory " + dir_.string() + ": " + ec.message());
    const fs::path m = dir_ / "manifest.json";
    auto current = read_json(m);
    if (current && *current == manifest()) return;
    for (auto& entry : fs::directory_iterator(dir_)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("pli_", 0) == 0) fs::remove(entry.path(), ec);
    }
    write_atomic(m, manifest().dump(2));
}

fs::path EquationCache::entry_path(const IndexVector& n) const { return dir_ / ("pli_" + index_str(n, '_') + ".json"); }

std::optional<LinComb> EquationCache::load(const IndexVector& n) {
    std::lock_guard lock(mutex_);
    auto j = read_json(entry_path(n));
    if (!j) return std::nullopt;
    try {
        PliResult r = result_from_json(*j);
        if (r.index != n || r.form != Form::Canonical) return std::nullopt;
        return r.equation;
    } catch (const Error&) {
        return std::nullopt;
    }
}

void EquationCache::save(const IndexVector& n, const LinComb& equation) {
    PliResult r;
    r.index = n;
    r.form = Form::Canonical;
    r.weight = weight(n);
    r.depth_bound = depth(n) - 1;
    r.equation = equation;
    std::lock_guard lock(mutex_);
    write_atomic(entry_path(n), result_to_json(r).dump(2));
}

fs::path EquationCache::default_dir() {
    if (const char* env = std::getenv("PARITY_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "parity";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "parity";
    return fs::temp_directory_path() / "parity-cache";
}

}  // namespace parity
