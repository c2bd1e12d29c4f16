#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace parity {

// exp(2 pi i k / n), always stored reduced with 0 <= k < n.
struct RootOfUnity {
    long k = 0;
    long n = 1;

    RootOfUnity() = default;
    RootOfUnity(long k_, long n_);

    static RootOfUnity one() { return {}; }
    bool is_one() const { return k == 0; }
    RootOfUnity inverse() const { return {n - k, n}; }
    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    auto operator<=>(const RootOfUnity&) const = default;

    // "k/n"
    std::string str() const;
    static RootOfUnity parse(std::string_view text);
};

}  // namespace parity
