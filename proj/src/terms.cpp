#include "terms.hpp"

#include "errors.hpp"

#include <algorithm>
#include <tuple>

namespace parity {

int Generator::weight() const {
    int w = 0;
    for (int k : ber) w += k;
    for (auto& f : lis) w += f.weight();
    return w;
}

int Generator::depth() const {
    int d = 0;
    for (auto& f : lis) d += f.depth();
    return d;
}

bool GeneratorOrder::operator()(const Generator& a, const Generator& b) const {
    return std::forward_as_tuple(a.weight(), a.depth(), a.ber, a.lis) <
           std::forward_as_tuple(b.weight(), b.depth(), b.ber, b.lis);
}

void LinComb::add(const Generator& g, const BigRational& c) {
    if (c == 0) return;
    if (g.ambient() != ambient_)
        fail(ErrorKind::Internal, "generator ambient " + std::to_string(g.ambient()) + " added to combination in ambient " +
                                      std::to_string(ambient_));
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (auto& [g, c] : o.terms_) add(g, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (auto& [g, c] : o.terms_) add(g, -c);
    return *this;
}

LinComb& LinComb::operator*=(const BigRational& c) {
    if (c == 0) terms_.clear();
    for (auto& [g, x] : terms_) x *= c;
    return *this;
}

int LinComb::max_depth() const {
    int d = 0;
    for (auto& [g, c] : terms_) d = std::max(d, g.depth());
    return d;
}

int LinComb::homogeneous_weight() const {
    int w = -1;
    for (auto& [g, c] : terms_) {
        if (w == -1)
            w = g.weight();
        else if (w != g.weight())
            return -2;
    }
    return w;
}

bool LinComb::integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](auto& t) { return is_integer(t.second); });
}

Generator unit_generator(int ambient) { return Generator{std::vector<int>(ambient, 0), {}}; }

Generator make_generator(int ambient, std::vector<int> ber, std::vector<LiFactor> lis) {
    if (ber.empty()) ber.assign(ambient, 0);
    if (static_cast<int>(ber.size()) != ambient) fail(ErrorKind::Internal, "ber vector does not match ambient");
    std::sort(lis.begin(), lis.end());
    return Generator{std::move(ber), std::move(lis)};
}

LinComb single(const Generator& g, const BigRational& c) {
    LinComb r(g.ambient());
    r.add(g, c);
    return r;
}

LiFactor li(IndexVector indices, std::vector<ConsProd> args) { return LiFactor{std::move(indices), std::move(args)}; }

Generator multiply(const Generator& a, const Generator& b) {
    if (a.ambient() != b.ambient()) fail(ErrorKind::Internal, "multiplying generators in different ambients");
    Generator r = a;
    for (size_t i = 0; i < b.ber.size(); ++i) {
        if (r.ber[i] && b.ber[i])
            fail(ErrorKind::Unsupported, "product of two ber factors with argument z" + std::to_string(i + 1) + "...z" +
                                             std::to_string(a.ambient()));
        r.ber[i] += b.ber[i];
    }
    r.lis.insert(r.lis.end(), b.lis.begin(), b.lis.end());
    std::sort(r.lis.begin(), r.lis.end());
    return r;
}

LinComb multiply(const LinComb& a, const LinComb& b) {
    if (a.ambient() != b.ambient()) fail(ErrorKind::Internal, "multiplying combinations in different ambients");
    LinComb r(a.ambient());
    for (auto& [ga, ca] : a.terms())
        for (auto& [gb, cb] : b.terms()) r.add(multiply(ga, gb), ca * cb);
    return r;
}

LinComb normalize(const LinComb& c) {
    LinComb r(c.ambient());
    for (auto& [g, x] : c.terms()) {
        Generator h = g;
        std::sort(h.lis.begin(), h.lis.end());
        r.add(h, x);
    }
    return r;
}

namespace {

std::string describe_generator_issue(const Generator& g, int max_depth, int weight) {
    const int n = g.ambient();
    for (int k : g.ber)
        if (k < 0) return "negative ber order";
    int prev_end = 0;
    for (auto& f : g.lis) {
        if (f.indices.empty()) return "empty Li factor";
        if (f.indices.size() != f.args.size()) return "Li factor index/argument count mismatch";
        for (int x : f.indices)
            if (x < 1) return "Li index below 1";
        for (auto& a : f.args) {
            if (a.inverted) return "inverted Li argument";
            if (a.start < 1 || a.end > n || a.start > a.end) return "Li argument outside ambient";
            if (a.start <= prev_end) return "Li arguments not disjoint and increasing";
            prev_end = a.end;
        }
    }
    if (max_depth >= 0 && g.depth() > max_depth) return "depth " + std::to_string(g.depth()) + " exceeds bound";
    if (weight >= 0 && g.weight() != weight) return "weight " + std::to_string(g.weight()) + " differs from expected";
    return {};
}

}  // namespace

void validate_generator(const Generator& g, int max_depth, int weight) {
    auto issue = describe_generator_issue(g, max_depth, weight);
    if (!issue.empty()) fail(ErrorKind::InvalidArgument, "non-canonical generator: " + issue);
}

bool is_canonical(const Generator& g) { return describe_generator_issue(g, -1, -1).empty(); }

bool is_canonical(const LinComb& c) {
    return std::all_of(c.terms().begin(), c.terms().end(), [](auto& t) { return is_canonical(t.first); });
}

LinComb invert_depth1(int n, const ConsProd& x, int ambient) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "index must be positive");
    if (x.inverted || x.end != ambient || x.start < 1 || x.start > x.end)
        fail(ErrorKind::InvalidArgument, "depth-one inversion needs a tail product z_i...z_N");
    const BigRational s = n % 2 ? 1 : -1;  // -(-1)^n
    LinComb r(ambient);
    r.add(make_generator(ambient, {}, {li({n}, {x})}), s);
    std::vector<int> ber(ambient, 0);
    ber[x.start - 1] = n;
    r.add(make_generator(ambient, ber, {}), s);
    return r;
}

LinComb stuffle_swap_depth2(int n1, int n2, const ConsProd& a1, const ConsProd& a2, int ambient) {
    if (a1.inverted || a2.inverted || a1.end + 1 != a2.start)
        fail(ErrorKind::InvalidArgument, "stuffle swap needs adjacent non-inverted arguments");
    LinComb r(ambient);
    r.add(make_generator(ambient, {}, {li({n1}, {a1}), li({n2}, {a2})}), 1);
    r.add(make_generator(ambient, {}, {li({n1, n2}, {a1, a2})}), -1);
    r.add(make_generator(ambient, {}, {li({n1 + n2}, {ConsProd{a1.start, a2.end, false}})}), -1);
    return r;
}

void LogExpansion::add(const LogMonomial& m, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

std::vector<BigRational> ber_log_coefficients(int k) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "negative ber order");
    std::vector<BigRational> out(k + 1);
    for (int j = k; j >= 0; j -= 2) {
        const int m = k - j;
        BigInt p24 = 1;
        for (int i = 0; i < m / 2; ++i) p24 *= -24;
        BigInt pow2 = 1;
        pow2 <<= m;
        const BigRational half_shift = BigRational(2, 1) / BigRational(pow2) - 1;  // 2^{1-m} - 1
        out[j] = BigRational(p24) * half_shift * bernoulli_number(m) / BigRational(factorial(m) * factorial(j));
    }
    return out;
}

LogExpansion expand_ber_to_logs(const LinComb& c) {
    const int n = c.ambient();
    LogExpansion out;
    out.ambient = n;
    for (auto& [g, coeff] : c.terms()) {
        std::map<LogMonomial, BigRational> partial;
        partial[LogMonomial{0, std::vector<int>(n, 0), g.lis}] = coeff;
        for (int i = 0; i < n; ++i) {
            if (g.ber[i] == 0) continue;
            auto coeffs = ber_log_coefficients(g.ber[i]);
            std::map<LogMonomial, BigRational> next;
            for (auto& [m, x] : partial)
                for (int j = 0; j <= g.ber[i]; ++j) {
                    if (coeffs[j] == 0) continue;
                    LogMonomial mm = m;
                    mm.logs[i] += j;
                    mm.zeta2_power += (g.ber[i] - j) / 2;
                    next[mm] += x * coeffs[j];
                }
            partial = std::move(next);
        }
        for (auto& [m, x] : partial) out.add(m, x);
    }
    return out;
}

}  // namespace parity
