#include "closed_forms.hpp"

#include "errors.hpp"

namespace parity {

namespace {

BigRational sgn(int e) { return e % 2 ? -1 : 1; }

std::vector<int> ber_at(int ambient, int start, int k) {
    std::vector<int> b(ambient, 0);
    b[start - 1] = k;
    return b;
}

void check_positive(std::initializer_list<int> n) {
    for (int x : n)
        if (x < 1) fail(ErrorKind::InvalidArgument, "index entries must be positive");
}

LinComb depth2_compact(int n1, int n2) {
    const int w = n1 + n2;
    const ConsProd z1{1, 1, false}, z12{1, 2, false}, inv_z2{2, 2, true};
    LinComb r(2);
    for (int mu = n1; mu <= w; ++mu)
        r.add(make_generator(2, ber_at(2, 1, w - mu), {li({mu}, {z1})}), sgn(n1 + mu) * BigRational(binomial(mu - 1, n1 - 1)));
    r.add(make_generator(2, {}, {li({w}, {z12})}), -1);
    for (int mu = n2; mu <= w; ++mu)
        r.add(make_generator(2, ber_at(2, 1, w - mu), {li({mu}, {inv_z2})}), sgn(n2) * BigRational(binomial(mu - 1, n2 - 1)));
    r.add(make_generator(2, ber_at(2, 2, n2), {li({n1}, {z1})}), -1);
    return r;
}

LinComb depth3_compact(int n1, int n2, int n3) {
    const ConsProd z1{1, 1, false}, z2{2, 2, false}, z3{3, 3, false};
    const ConsProd z12{1, 2, false}, z23{2, 3, false};
    const ConsProd inv_z2{2, 2, true}, inv_z3{3, 3, true};
    LinComb r(3);

    LinComb inner = embed(depth2_compact(n2, n3), shifted_slots(3), 3);
    r += multiply(single(make_generator(3, {}, {li({n1}, {z1})})), inner);
    r.add(make_generator(3, {}, {li({n1 + n2, n3}, {z12, z3})}), -1);
    r.add(make_generator(3, ber_at(3, 3, n3), {li({n2, n1}, {z2, z1})}), 1);
    r.add(make_generator(3, {}, {li({n2 + n3, n1}, {z23, z1})}), 1);

    for (int mu = 0; mu <= n2; ++mu)
        for (int nu = 0; mu + nu <= n2; ++nu) {
            const int s = n2 - mu - nu;
            BigRational c = -signed_binomial(-n3, mu) * signed_binomial(-n1, nu) * sgn(n3 + mu);
            r.add(make_generator(3, ber_at(3, 1, s), {li({n3 + mu}, {inv_z3}), li({n1 + nu}, {z1})}), c);
        }
    for (int mu = 0; mu <= n3; ++mu)
        for (int nu = 0; mu + nu <= n3; ++nu) {
            const int s = n3 - mu - nu;
            BigRational c = -signed_binomial(-n2, mu) * signed_binomial(-n1, nu);
            r.add(make_generator(3, ber_at(3, 1, s), {li({n2 + mu, n1 + nu}, {z2, z1})}), c);
        }
    for (int mu = 0; mu <= n1; ++mu)
        for (int nu = 0; mu + nu <= n1; ++nu) {
            const int s = n1 - mu - nu;
            BigRational c = -signed_binomial(-n2, mu) * signed_binomial(-n3, nu) * sgn(n2 + mu + n3 + nu);
            r.add(make_generator(3, ber_at(3, 1, s), {li({n2 + mu, n3 + nu}, {inv_z2, inv_z3})}), c);
        }
    return r;
}

PliResult wrap(IndexVector n, Form form, LinComb eq) {
    PliResult r;
    r.index = std::move(n);
    r.form = form;
    r.weight = weight(r.index);
    r.depth_bound = depth(r.index) - 1;
    r.equation = std::move(eq);
    return r;
}

}  // namespace

LinComb closed_provider(const IndexVector& m) {
    validate_index(m);
    if (m.size() == 1) return single(make_generator(1, {m[0]}, {}), -1);
    if (m.size() == 2) return canonicalize(depth2_compact(m[0], m[1]), closed_provider);
    fail(ErrorKind::Unsupported, "closed formulas stop at depth three");
}

PliResult pli_depth2_closed(int n1, int n2, Form form) {
    check_positive({n1, n2});
    LinComb c = depth2_compact(n1, n2);
    if (form == Form::Canonical) c = canonicalize(c, closed_provider);
    return wrap({n1, n2}, form, std::move(c));
}

PliResult pli_depth3_closed(int n1, int n2, int n3, Form form) {
    check_positive({n1, n2, n3});
    LinComb c = depth3_compact(n1, n2, n3);
    if (form == Form::Canonical) c = canonicalize(c, closed_provider);
    return wrap({n1, n2, n3}, form, std::move(c));
}

}  // namespace parity
