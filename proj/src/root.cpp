#include "root.hpp"

#include "errors.hpp"

#include <charconv>
#include <numeric>

namespace parity {

RootOfUnity::RootOfUnity(long k_, long n_) {
    if (n_ <= 0) fail(ErrorKind::InvalidArgument, "root of unity needs a positive order");
    k_ %= n_;
    if (k_ < 0) k_ += n_;
    long g = std::gcd(k_, n_);
    k = k_ / g;
    n = n_ / g;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    long l = std::lcm(a.n, b.n);
    return {a.k * (l / a.n) + b.k * (l / b.n), l};
}

std::string RootOfUnity::str() const { return std::to_string(k) + "/" + std::to_string(n); }

RootOfUnity RootOfUnity::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) fail(ErrorKind::Parse, "root must look like k/N, got '" + std::string(text) + "'");
    long k = 0, n = 0;
    auto a = text.substr(0, slash), b = text.substr(slash + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), k);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), n);
    if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() || r2.ec != std::errc() || r2.ptr != b.data() + b.size())
        fail(ErrorKind::Parse, "root must look like k/N, got '" + std::string(text) + "'");
    if (n <= 0) fail(ErrorKind::Parse, "root order must be positive in '" + std::string(text) + "'");
    return {k, n};
}

}  // namespace parity
