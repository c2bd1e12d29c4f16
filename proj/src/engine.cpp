#include "engine.hpp"

#include "errors.hpp"

#include <algorithm>

namespace parity {

const char* form_name(Form f) { return f == Form::Canonical ? "canonical" : "compact"; }

Form parse_form(std::string_view text) {
    if (text == "canonical") return Form::Canonical;
    if (text == "compact") return Form::Compact;
    fail(ErrorKind::Parse, "unknown form '" + std::string(text) + "' (expected canonical or compact)");
}

namespace {

int parity_sign(const IndexVector& n) { return (weight(n) - depth(n)) % 2 == 0 ? 1 : -1; }
BigRational alternating(int mu) { return mu % 2 ? -1 : 1; }

int z1_factor(const Generator& g) {
    for (size_t i = 0; i < g.lis.size(); ++i)
        if (!g.lis[i].args.empty() && g.lis[i].args[0].start == 1) return static_cast<int>(i);
    return -1;
}

Generator without_factor(const Generator& g, int i) {
    Generator h = g;
    if (i >= 0) h.lis.erase(h.lis.begin() + i);
    return h;
}

Generator with_factors(Generator g, int ber1, std::vector<LiFactor> extra) {
    g.ber[0] = ber1;
    g.lis.insert(g.lis.end(), extra.begin(), extra.end());
    std::sort(g.lis.begin(), g.lis.end());
    return g;
}

LiFactor drop_first(const LiFactor& f) {
    return LiFactor{IndexVector(f.indices.begin() + 1, f.indices.end()), std::vector<ConsProd>(f.args.begin() + 1, f.args.end())};
}

[[noreturn]] void unsupported(const std::string& what) { fail(ErrorKind::Unsupported, what); }

}  // namespace

DiffExpr diff_z1(const LinComb& f) {
    const int n = f.ambient();
    if (n < 1) fail(ErrorKind::InvalidArgument, "differentiation needs at least one variable");
    DiffExpr out{LinComb(n), LinComb(n)};
    for (auto& [g, c] : f.terms()) {
        if (g.ber[0] > 0) {
            Generator h = g;
            --h.ber[0];
            out.over_z1.add(h, c);
        }
        const int i = z1_factor(g);
        if (i < 0) continue;
        const LiFactor& fac = g.lis[i];
        const Generator rest = without_factor(g, i);
        const ConsProd& a1 = fac.args[0];
        for (auto& a : fac.args)
            if (a.inverted != a1.inverted) unsupported("Li factor mixing inverted and plain arguments");
        if (fac.indices[0] >= 2) {
            LiFactor h = fac;
            --h.indices[0];
            out.over_z1.add(with_factors(rest, rest.ber[0], {h}), a1.inverted ? BigRational(-c) : c);
            continue;
        }
        if (fac.depth() == 1) {
            if (a1.end != 1) unsupported("derivative of Li_1(z1...zj) with j > 1");
            Generator h = with_factors(rest, rest.ber[0], {});
            out.over_one_minus_z1.add(h, c);
            if (a1.inverted) out.over_z1.add(h, c);
            continue;
        }
        if (a1.end != 1 || fac.args[1].start != 2) unsupported("derivative of Li_{1,...} without adjacent z1, z2 arguments");
        LiFactor tail = drop_first(fac);
        LiFactor merged = tail;
        merged.args[0].start = 1;
        const Generator with_tail = with_factors(rest, rest.ber[0], {tail});
        const Generator with_merged = with_factors(rest, rest.ber[0], {merged});
        out.over_one_minus_z1.add(with_tail, c);
        out.over_one_minus_z1.add(with_merged, -c);
        if (a1.inverted)
            out.over_z1.add(with_tail, c);
        else
            out.over_z1.add(with_merged, -c);
    }
    return out;
}

LinComb iterated_primitive(int k, const IndexVector& m, const std::vector<ConsProd>& args, int ambient, int r) {
    if (k < 0 || r < 1) fail(ErrorKind::InvalidArgument, "iterated primitive needs k >= 0 and r >= 1");
    if (args.empty() || args[0].start != 1 || args[0].inverted || m.size() != args.size())
        fail(ErrorKind::InvalidArgument, "iterated primitive needs a plain Li factor starting at z1");
    LinComb out(ambient);
    for (int mu = 0; mu <= k; ++mu) {
        IndexVector shifted = m;
        shifted[0] += r + mu;
        std::vector<int> ber(ambient, 0);
        ber[0] = k - mu;
        out.add(make_generator(ambient, ber, {li(shifted, args)}), signed_binomial(-r, mu));
    }
    return out;
}

LinComb primitive_z1(const DiffExpr& e) {
    const int n = e.over_z1.ambient();
    if (e.over_one_minus_z1.ambient() != n) fail(ErrorKind::Internal, "derivative parts in different ambients");
    LinComb out(n);
    for (auto& [g, c] : e.over_z1.terms()) {
        const int i = z1_factor(g);
        if (i < 0) {
            Generator h = g;
            ++h.ber[0];
            out.add(h, c);
            continue;
        }
        const LiFactor& fac = g.lis[i];
        for (auto& a : fac.args)
            if (a.inverted) unsupported("primitive of an inverted Li factor");
        const Generator rest = without_factor(g, i);
        const LinComb prim = iterated_primitive(g.ber[0], fac.indices, fac.args, n, 1);
        for (auto& [h, x] : prim.terms())
            out.add(with_factors(rest, h.ber[0], h.lis), c * x);
    }
    for (auto& [g, c] : e.over_one_minus_z1.terms()) {
        const int k = g.ber[0];
        const int i = z1_factor(g);
        const ConsProd z1{1, 1, false};
        if (i < 0) {
            for (int mu = 0; mu <= k; ++mu) out.add(with_factors(g, k - mu, {li({1 + mu}, {z1})}), alternating(mu) * c);
            continue;
        }
        const LiFactor& fac = g.lis[i];
        for (auto& a : fac.args)
            if (a.inverted) unsupported("primitive of an inverted Li factor over 1-z1");
        if (fac.args[0].end < 2) unsupported("primitive of Li_{...}(z1, ...)/(1-z1)");
        const Generator rest = without_factor(g, i);
        LiFactor split = fac;
        split.args[0].start = 2;
        for (int mu = 0; mu <= k; ++mu) {
            const BigRational s = alternating(mu) * c;
            out.add(with_factors(rest, k - mu, {li({1 + mu}, {z1}), split}), s);
            LiFactor deeper = split;
            deeper.indices.insert(deeper.indices.begin(), 1 + mu);
            deeper.args.insert(deeper.args.begin(), z1);
            out.add(with_factors(rest, k - mu, {deeper}), -s);
            LiFactor raised = fac;
            raised.indices[0] += 1 + mu;
            out.add(with_factors(rest, k - mu, {raised}), -s);
        }
    }
    return out;
}

LinComb theta_z1(const LinComb& f) {
    DiffExpr d = diff_z1(f);
    if (!d.over_one_minus_z1.empty()) fail(ErrorKind::InvalidArgument, "combination has a pole at z1 = 1");
    return d.over_z1;
}

LinComb embed(const LinComb& local, const std::vector<ConsProd>& slots, int ambient) {
    if (static_cast<int>(slots.size()) != local.ambient()) fail(ErrorKind::Internal, "embedding slot count mismatch");
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].inverted || slots[i].start > slots[i].end || slots[i].start < 1 || slots[i].end > ambient)
            fail(ErrorKind::Internal, "bad embedding slot");
        if (i + 1 < slots.size() && slots[i].end + 1 != slots[i + 1].start) fail(ErrorKind::Internal, "embedding slots not adjacent");
    }
    LinComb out(ambient);
    for (auto& [g, c] : local.terms()) {
        std::vector<int> ber(ambient, 0);
        for (size_t i = 0; i < g.ber.size(); ++i) {
            if (g.ber[i] == 0) continue;
            if (slots.back().end != ambient) fail(ErrorKind::Unsupported, "ber factor would not be a tail product");
            ber[slots[i].start - 1] += g.ber[i];
        }
        std::vector<LiFactor> lis;
        for (auto& f : g.lis) {
            LiFactor h = f;
            for (auto& a : h.args) a = ConsProd{slots[a.start - 1].start, slots[a.end - 1].end, a.inverted};
            lis.push_back(std::move(h));
        }
        out.add(make_generator(ambient, std::move(ber), std::move(lis)), c);
    }
    return out;
}

std::vector<ConsProd> shifted_slots(int ambient) {
    std::vector<ConsProd> s;
    for (int i = 2; i <= ambient; ++i) s.push_back({i, i, false});
    return s;
}

std::vector<ConsProd> merged_slots(int ambient) {
    if (ambient < 2) fail(ErrorKind::Internal, "merged slots need two variables");
    std::vector<ConsProd> s{{1, 2, false}};
    for (int i = 3; i <= ambient; ++i) s.push_back({i, i, false});
    return s;
}

namespace {

LinComb factor_representation(const LiFactor& f, int ambient, const PliProvider& provider) {
    bool any_inv = false, all_inv = true;
    for (auto& a : f.args) {
        any_inv = any_inv || a.inverted;
        all_inv = all_inv && a.inverted;
    }
    if (any_inv && !all_inv) unsupported("Li factor mixing inverted and plain arguments");
    if (!any_inv) {
        bool increasing = true;
        for (size_t i = 0; i + 1 < f.args.size(); ++i) increasing = increasing && f.args[i].end < f.args[i + 1].start;
        if (increasing) return single(make_generator(ambient, {}, {f}));
        if (f.depth() == 2 && f.args[1].end + 1 == f.args[0].start)
            return stuffle_swap_depth2(f.indices[1], f.indices[0], f.args[1], f.args[0], ambient);
        unsupported("cannot reorder Li arguments beyond depth two");
    }
    std::vector<ConsProd> x = f.args;
    for (auto& a : x) a.inverted = false;
    if (f.depth() == 1) return invert_depth1(f.indices[0], x[0], ambient);
    LinComb plain = single(make_generator(ambient, {}, {li(f.indices, x)}));
    LinComb r = plain - embed(provider(f.indices), x, ambient);
    r *= BigRational(parity_sign(f.indices));
    return r;
}

}  // namespace

LinComb canonicalize(const LinComb& c, const PliProvider& provider) {
    const int n = c.ambient();
    LinComb out(n);
    for (auto& [g, coeff] : c.terms()) {
        LinComb acc = single(Generator{g.ber, {}}, coeff);
        for (auto& f : g.lis) acc = multiply(acc, factor_representation(f, n, provider));
        out += acc;
    }
    return out;
}

LinComb reglim_z1(const IndexVector& n) {
    validate_index(n);
    const int d = depth(n);
    if (d < 2) fail(ErrorKind::InvalidArgument, "regularized limit needs depth at least two");
    LinComb out(d);
    std::vector<int> k(d, 0);
    const BigRational sign = alternating(1 + n[0]);
    // enumerate k_2..k_d with sum <= n1, k_1 takes the rest
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d) {
            k[0] = left;
            BigRational coeff = sign;
            IndexVector m;
            std::vector<ConsProd> args;
            for (int mu = 1; mu < d; ++mu) {
                coeff *= BigRational(binomial(n[mu] - 1 + k[mu], k[mu]));
                m.push_back(n[mu] + k[mu]);
                args.push_back({mu + 1, mu + 1, true});
            }
            std::vector<int> ber(d, 0);
            ber[0] = k[0];
            out.add(make_generator(d, ber, {li(m, args)}), coeff);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            k[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(1, n[0]);
    return out;
}

PliProvider Engine::provider() {
    return [this](const IndexVector& m) { return pli_canonical(m); };
}

LinComb Engine::canonicalize(const LinComb& c) { return parity::canonicalize(c, provider()); }

size_t Engine::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

LinComb Engine::primitive_part(const IndexVector& n) {
    const int d = depth(n);
    if (n[0] > 1) {
        IndexVector lower = n;
        --lower[0];
        LinComb prev = pli_canonical(lower);
        DiffExpr e{LinComb(d), LinComb(d)};
        for (auto& [g, c] : prev.terms())
            if (z1_factor(g) >= 0) e.over_z1.add(g, c);
        return primitive_z1(e);
    }
    IndexVector rest(n.begin() + 1, n.end());
    LinComb sub = pli_canonical(rest);
    DiffExpr e{LinComb(d), embed(sub, shifted_slots(d), d) - embed(sub, merged_slots(d), d)};
    std::vector<ConsProd> merged = merged_slots(d);
    e.over_z1.add(make_generator(d, {}, {li(rest, merged)}), -1);
    return primitive_z1(e);
}

LinComb Engine::compute(const IndexVector& n) {
    const int d = depth(n);
    if (d == 1) {
        std::vector<int> ber{n[0]};
        return single(make_generator(1, ber, {}), -1);
    }
    LinComb limit = canonicalize(reglim_z1(n));
    limit *= BigRational(-parity_sign(n));
    return primitive_part(n) + limit;
}

LinComb Engine::pli_canonical(const IndexVector& n) {
    validate_index(n);
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    const int d = depth(n);
    if (store_) {
        if (auto loaded = store_->load(n)) {
            bool ok = loaded->ambient() == d;
            for (auto& [g, c] : loaded->terms()) {
                if (!ok) break;
                ok = is_canonical(g) && g.weight() == weight(n) && g.depth() <= d - 1 && is_integer(c);
            }
            if (ok) return memo_.emplace(n, std::move(*loaded)).first->second;
        }
    }
    LinComb r = compute(n);
    if (store_) store_->save(n, r);
    return memo_.emplace(n, std::move(r)).first->second;
}

PliResult Engine::pli(const IndexVector& n, Form form) {
    validate_index(n);
    PliResult r;
    r.index = n;
    r.form = form;
    r.weight = weight(n);
    r.depth_bound = depth(n) - 1;
    if (form == Form::Canonical || depth(n) == 1) {
        r.equation = pli_canonical(n);
    } else {
        LinComb limit = reglim_z1(n);
        limit *= BigRational(-parity_sign(n));
        r.equation = primitive_part(n) + limit;
    }
    return r;
}

}  // namespace parity
