#include "serialize.hpp"

#include "errors.hpp"

#include <algorithm>
#include <sstream>

namespace parity {

const char* format_name(Format f) {
    switch (f) {
        case Format::Text: return "text";
        case Format::Latex: return "latex";
        case Format::Json: return "json";
    }
    return "text";
}

Format parse_format(std::string_view text) {
    if (text == "text") return Format::Text;
    if (text == "latex") return Format::Latex;
    if (text == "json") return Format::Json;
    fail(ErrorKind::Parse, "unknown format '" + std::string(text) + "' (text, latex, json)");
}

// JSON -----------------------------------------------------------------------

namespace {

Json prod_to_json(const ConsProd& a) { return Json{{"start", a.start}, {"end", a.end}, {"inv", a.inverted}}; }

ConsProd prod_from_json(const Json& j) {
    return {j.at("start").get<int>(), j.at("end").get<int>(), j.at("inv").get<bool>()};
}

BigRational coeff_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json lis_to_json(const std::vector<LiFactor>& lis) {
    Json out = Json::array();
    for (auto& f : lis) {
        Json args = Json::array();
        for (auto& a : f.args) args.push_back(prod_to_json(a));
        out.push_back(Json{{"n", f.indices}, {"args", args}});
    }
    return out;
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        fail(ErrorKind::Parse, std::string("malformed ") + what + ": " + e.what());
    }
}

}  // namespace

Json lincomb_to_json(const LinComb& c) {
    Json terms = Json::array();
    for (auto& [g, coeff] : c.terms()) {
        terms.push_back(Json{{"coeff", to_string(coeff)}, {"ber", g.ber}, {"li", lis_to_json(g.lis)}});
    }
    return Json{{"ambient", c.ambient()}, {"terms", terms}};
}

LinComb lincomb_from_json(const Json& j) {
    return guarded("equation", [&] {
        LinComb out(j.at("ambient").get<int>());
        if (out.ambient() < 0) fail(ErrorKind::Parse, "negative ambient dimension");
        for (auto& t : j.at("terms")) {
            std::vector<LiFactor> lis;
            for (auto& f : t.at("li")) {
                std::vector<ConsProd> args;
                for (auto& a : f.at("args")) args.push_back(prod_from_json(a));
                lis.push_back(li(f.at("n").get<IndexVector>(), std::move(args)));
            }
            auto ber = t.at("ber").get<std::vector<int>>();
            if (static_cast<int>(ber.size()) != out.ambient()) fail(ErrorKind::Parse, "ber vector length differs from ambient");
            out.add(make_generator(out.ambient(), std::move(ber), std::move(lis)), coeff_from_json(t.at("coeff")));
        }
        return out;
    });
}

Json result_to_json(const PliResult& r) {
    return Json{{"index", r.index},
                {"form", form_name(r.form)},
                {"weight", r.weight},
                {"depth_bound", r.depth_bound},
                {"equation", lincomb_to_json(r.equation)}};
}

PliResult result_from_json(const Json& j) {
    return guarded("result", [&] {
        PliResult r;
        r.index = j.at("index").get<IndexVector>();
        validate_index(r.index);
        r.form = parse_form(j.at("form").get<std::string>());
        r.weight = j.at("weight").get<int>();
        r.depth_bound = j.at("depth_bound").get<int>();
        r.equation = lincomb_from_json(j.at("equation"));
        return r;
    });
}

Json czv_to_json(const CzvCombination& c) {
    Json terms = Json::array();
    for (auto& [s, coeff] : c.terms()) {
        Json lis = Json::array();
        for (auto& l : s.lis) {
            std::vector<std::string> roots;
            for (auto& r : l.roots) roots.push_back(r.str());
            lis.push_back(Json{{"n", l.indices}, {"roots", roots}});
        }
        terms.push_back(Json{{"coeff", to_string(coeff)}, {"two_pi_i", s.two_pi_i}, {"even_zetas", s.even_zetas}, {"li", lis}});
    }
    return Json{{"weight", c.homogeneous_weight()}, {"depth", c.max_depth()}, {"terms", terms}};
}

CzvCombination czv_from_json(const Json& j) {
    return guarded("constant combination", [&] {
        CzvCombination out;
        for (auto& t : j.at("terms")) {
            CzvSymbol s;
            s.two_pi_i = t.at("two_pi_i").get<int>();
            s.even_zetas = t.at("even_zetas").get<std::vector<int>>();
            std::sort(s.even_zetas.begin(), s.even_zetas.end());
            for (auto& l : t.at("li")) {
                std::vector<RootOfUnity> roots;
                for (auto& r : l.at("roots")) roots.push_back(RootOfUnity::parse(r.get<std::string>()));
                s = s * li_symbol(l.at("n").get<IndexVector>(), std::move(roots));
            }
            out.add(s, coeff_from_json(t.at("coeff")));
        }
        return out;
    });
}

Json report_to_json(const VerifyReport& r) {
    return Json{{"index", r.index},
                {"samples", r.samples},
                {"max_error", r.max_error},
                {"tolerance", r.tolerance},
                {"pass", r.pass}};
}

// Text and LaTeX -------------------------------------------------------------

std::string cons_prod_str(const ConsProd& a, bool latex) {
    std::string body;
    for (int i = a.start; i <= a.end; ++i) {
        if (latex) {
            if (i > a.start) body += ' ';
            body += "z_" + std::to_string(i);
        } else {
            body += "z" + std::to_string(i);
        }
    }
    if (!a.inverted) return body;
    if (latex) return "\\tfrac{1}{" + body + "}";
    return a.start == a.end ? "1/" + body : "1/(" + body + ")";
}

namespace {

std::string sub(const IndexVector& n, bool latex) {
    const std::string s = index_str(n);
    if (latex) return "_{" + s + "}";
    return n.size() == 1 ? "_" + s : "_{" + s + "}";
}

std::string power(const std::string& base, int e, bool latex) {
    if (e == 1) return base;
    return latex ? base + "^{" + std::to_string(e) + "}" : base + "^" + std::to_string(e);
}

std::string li_str(const LiFactor& f, bool latex) {
    std::string out = latex ? "\\operatorname{Li}" : "Li";
    out += sub(f.indices, latex) + (latex ? "\\left(" : "(");
    for (size_t i = 0; i < f.args.size(); ++i) {
        if (i) out += latex ? ", " : ",";
        out += cons_prod_str(f.args[i], latex);
    }
    return out + (latex ? "\\right)" : ")");
}

std::string ber_str(int k, int start, int ambient, bool latex) {
    const std::string arg = cons_prod_str(ConsProd{start, ambient, false}, latex);
    if (latex) return "\\operatorname{ber}_{" + std::to_string(k) + "}(" + arg + ")";
    return "ber_" + std::to_string(k) + "(" + arg + ")";
}

// Joins signed terms: each factor list is rendered with its coefficient in front.
class SumWriter {
public:
    explicit SumWriter(bool latex) : latex_(latex) {}

    void term(const BigRational& c, const std::vector<std::string>& factors) {
        const bool negative = c < 0;
        const BigRational mag = negative ? BigRational(-c) : c;
        if (first_)
            out_ << (negative ? "-" : "");
        else
            out_ << (negative ? " - " : " + ");
        first_ = false;
        std::string coeff;
        if (mag != 1 || factors.empty()) {
            if (latex_ && !is_integer(mag))
                coeff = "\\tfrac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
            else
                coeff = to_string(mag);
        }
        std::string body;
        for (auto& f : factors) {
            if (!body.empty()) body += latex_ ? " " : "*";
            body += f;
        }
        if (!coeff.empty() && !body.empty()) coeff += latex_ ? " " : "*";
        out_ << coeff << body;
    }

    std::string str() const { return first_ ? std::string("0") : out_.str(); }

private:
    bool latex_;
    bool first_ = true;
    std::ostringstream out_;
};

std::string root_latex(const RootOfUnity& r) {
    if (r.is_one()) return "1";
    if (r.n == 2) return "-1";
    if (r.n == 4) return r.k == 1 ? "i" : "-i";
    return "e^{2\\pi i " + std::to_string(r.k) + "/" + std::to_string(r.n) + "}";
}

std::string li_at_root_str(const LiAtRoot& l, bool latex) {
    const bool mzv = std::all_of(l.roots.begin(), l.roots.end(), [](auto& r) { return r.is_one(); });
    if (mzv) return latex ? "\\zeta(" + index_str(l.indices) + ")" : "zeta(" + index_str(l.indices) + ")";
    std::string out = latex ? "\\operatorname{Li}" : "Li";
    out += sub(l.indices, latex) + "(";
    for (size_t i = 0; i < l.roots.size(); ++i) {
        if (i) out += latex ? ", " : ",";
        out += latex ? root_latex(l.roots[i]) : root_str(l.roots[i]);
    }
    return out + ")";
}

std::string pli_lhs(const IndexVector& n, bool latex) {
    std::string out = latex ? "\\operatorname{PLi}" : "PLi";
    out += sub(n, latex) + "(";
    for (int i = 1; i <= depth(n); ++i) {
        if (i > 1) out += latex ? ", " : ",";
        out += latex ? "z_" + std::to_string(i) : "z" + std::to_string(i);
    }
    return out + ")";
}

}  // namespace

std::string render(const LinComb& c, Format f) {
    if (f == Format::Json) return lincomb_to_json(c).dump(2);
    const bool latex = f == Format::Latex;
    SumWriter w(latex);
    for (auto& [g, coeff] : c.terms()) {
        std::vector<std::string> factors;
        for (int i = 0; i < g.ambient(); ++i)
            if (g.ber[i]) factors.push_back(ber_str(g.ber[i], i + 1, g.ambient(), latex));
        for (auto& l : g.lis) factors.push_back(li_str(l, latex));
        w.term(coeff, factors);
    }
    return w.str();
}

std::string render(const LogExpansion& e, Format f) {
    if (f == Format::Json) {
        Json terms = Json::array();
        for (auto& [m, coeff] : e.terms)
            terms.push_back(Json{{"coeff", to_string(coeff)}, {"zeta2", m.zeta2_power}, {"logs", m.logs}, {"li", lis_to_json(m.lis)}});
        return Json{{"ambient", e.ambient}, {"terms", terms}}.dump(2);
    }
    const bool latex = f == Format::Latex;
    SumWriter w(latex);
    for (auto& [m, coeff] : e.terms) {
        std::vector<std::string> factors;
        if (m.zeta2_power) factors.push_back(power(latex ? "\\zeta(2)" : "zeta(2)", m.zeta2_power, latex));
        for (size_t i = 0; i < m.logs.size(); ++i) {
            if (!m.logs[i]) continue;
            const std::string arg = "-" + cons_prod_str(ConsProd{static_cast<int>(i) + 1, e.ambient, false}, latex);
            if (latex)
                factors.push_back(m.logs[i] == 1 ? "\\log(" + arg + ")" : "\\log^{" + std::to_string(m.logs[i]) + "}(" + arg + ")");
            else
                factors.push_back(power("log(" + arg + ")", m.logs[i], false));
        }
        for (auto& l : m.lis) factors.push_back(li_str(l, latex));
        w.term(coeff, factors);
    }
    return w.str();
}

std::string render(const CzvCombination& c, Format f) {
    if (f == Format::Json) return czv_to_json(c).dump(2);
    const bool latex = f == Format::Latex;
    SumWriter w(latex);
    for (auto& [s, coeff] : c.terms()) {
        std::vector<std::string> factors;
        if (s.two_pi_i) factors.push_back(power(latex ? "(2\\pi i)" : "(2*pi*i)", s.two_pi_i, latex));
        for (size_t i = 0; i < s.even_zetas.size();) {
            size_t j = i;
            while (j < s.even_zetas.size() && s.even_zetas[j] == s.even_zetas[i]) ++j;
            const std::string z = std::to_string(s.even_zetas[i]);
            factors.push_back(power(latex ? "\\zeta(" + z + ")" : "zeta(" + z + ")", static_cast<int>(j - i), latex));
            i = j;
        }
        for (size_t i = 0; i < s.lis.size();) {
            size_t j = i;
            while (j < s.lis.size() && s.lis[j] == s.lis[i]) ++j;
            factors.push_back(power(li_at_root_str(s.lis[i], latex), static_cast<int>(j - i), latex));
            i = j;
        }
        w.term(coeff, factors);
    }
    return w.str();
}

std::string render_result(const PliResult& r, Format f, bool log_basis) {
    if (f == Format::Json) {
        Json j = result_to_json(r);
        if (log_basis) j["log_expansion"] = Json::parse(render(expand_ber_to_logs(r.equation), Format::Json));
        return j.dump(2);
    }
    const bool latex = f == Format::Latex;
    const std::string rhs = log_basis ? render(expand_ber_to_logs(r.equation), f) : render(r.equation, f);
    return pli_lhs(r.index, latex) + " = " + rhs;
}

std::string render_report(const VerifyReport& r, Format f) {
    if (f == Format::Json) return report_to_json(r).dump(2);
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << " PLi_{" << index_str(r.index) << "}: samples=" << r.samples
        << " max_error=" << r.max_error << " tol=" << r.tolerance;
    return out.str();
}

std::string specialization_lhs(const IndexVector& n, const std::vector<RootOfUnity>& roots, Format f) {
    const bool latex = f == Format::Latex;
    LiAtRoot plain{n, roots}, flipped{n, {}};
    for (auto& r : roots) flipped.roots.push_back(r.inverse());
    const bool odd = (weight(n) - depth(n)) % 2 != 0;  // PLi = Li(x) + Li(1/x) when odd
    if (plain == flipped) return odd ? "2 " + li_at_root_str(plain, latex) : "0";
    return li_at_root_str(plain, latex) + (odd ? " + " : " - ") + li_at_root_str(flipped, latex);
}

}  // namespace parity
