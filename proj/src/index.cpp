#include "index.hpp"

#include "errors.hpp"

#include <charconv>

namespace parity {

void validate_index(const IndexVector& n) {
    if (n.empty()) fail(ErrorKind::InvalidArgument, "index vector must be nonempty");
    for (int x : n)
        if (x < 1) fail(ErrorKind::InvalidArgument, "index entries must be positive, got " + index_str(n));
}

IndexVector parse_index(std::string_view text) {
    IndexVector out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || r.ec != std::errc() || r.ptr != tok.data() + tok.size())
            fail(ErrorKind::Parse, "cannot parse index '" + std::string(text) + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    validate_index(out);
    return out;
}

std::string index_str(const IndexVector& n, char sep) {
    std::string s;
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(n[i]);
    }
    return s;
}

std::vector<IndexVector> compositions(int w) {
    std::vector<IndexVector> out;
    if (w <= 0) return out;
    for (int first = 1; first <= w; ++first) {
        if (first == w) {
            out.push_back({w});
            continue;
        }
        for (auto& rest : compositions(w - first)) {
            IndexVector n{first};
            n.insert(n.end(), rest.begin(), rest.end());
            out.push_back(std::move(n));
        }
    }
    return out;
}

}  // namespace parity
