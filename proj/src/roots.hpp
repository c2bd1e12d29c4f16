#pragma once

#include "engine.hpp"
#include "root.hpp"

#include <map>
#include <string>
#include <vector>

namespace parity {

// Side from which z -> 1 is approached: Upper sends log(-z) to -i pi, Lower to +i pi.
enum class Branch { Upper, Lower };

// coeff * (2 pi i)^power
struct ExactPiValue {
    BigRational coeff;
    int two_pi_i_power = 0;
};

ExactPiValue ber_at_root(int k, const RootOfUnity& zeta, Branch branch = Branch::Upper);

struct LiAtRoot {
    IndexVector indices;
    std::vector<RootOfUnity> roots;
    auto operator<=>(const LiAtRoot&) const = default;
    bool convergent() const { return !(indices.back() == 1 && roots.back().is_one()); }
};

// (2 pi i)^p * prod zeta(2k) * prod Li(roots); zeta(0) stays symbolic until substituted.
struct CzvSymbol {
    int two_pi_i = 0;
    std::vector<int> even_zetas;  // sorted, entries are the even arguments 2k
    std::vector<LiAtRoot> lis;    // sorted
    auto operator<=>(const CzvSymbol&) const = default;

    int weight() const;
    int depth() const;
};

CzvSymbol operator*(const CzvSymbol& a, const CzvSymbol& b);
CzvSymbol li_symbol(IndexVector n, std::vector<RootOfUnity> roots);
// zeta(m) for m >= 2 (or m = 0): even arguments become even-zeta symbols, odd ones depth-one Li at 1.
CzvSymbol zeta_symbol(int m);
CzvSymbol mzv_symbol(IndexVector n);

class CzvCombination {
public:
    void add(const CzvSymbol& s, const BigRational& c);
    CzvCombination& operator+=(const CzvCombination& o);
    CzvCombination& operator*=(const BigRational& c);
    friend CzvCombination operator+(CzvCombination a, const CzvCombination& b) { return a += b; }
    friend CzvCombination operator-(CzvCombination a, const CzvCombination& b);
    friend CzvCombination operator*(const CzvCombination& a, const CzvCombination& b);
    friend bool operator==(const CzvCombination&, const CzvCombination&) = default;

    const std::map<CzvSymbol, BigRational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_depth() const;
    // -1 when empty, -2 when not homogeneous
    int homogeneous_weight() const;

    static CzvCombination constant(const BigRational& c);
    static CzvCombination of(const CzvSymbol& s, const BigRational& c = 1);

private:
    std::map<CzvSymbol, BigRational> terms_;
};

// Constant term x0 of Li_m(y) as y_s -> 1; the plain value when convergent.
CzvCombination regularized_limit_factor(const IndexVector& m, const std::vector<RootOfUnity>& roots);

// Substitute roots of unity into a canonical equation in ambient roots.size().
CzvCombination specialize_equation(const LinComb& eq, const std::vector<RootOfUnity>& roots, Branch branch = Branch::Upper);
// Rejects the divergent head (n_d, z_d) = (1, 1).
CzvCombination specialize(const PliResult& result, const std::vector<RootOfUnity>& roots, Branch branch = Branch::Upper);

// zeta(0) -> -1/2 only.
CzvCombination substitute_zeta_zero(const CzvCombination& c);
// zeta(2k), Li_2k(1) and Li_2k(-1) to rational multiples of (2 pi i)^{2k}.
CzvCombination normalize_even_zetas(const CzvCombination& c);
// Li_k(-1) = (2^{1-k} - 1) zeta(k) for k >= 2.
CzvCombination fold_alternating_depth1(const CzvCombination& c);
// (2 pi i)^{2k} -> (-24)^k zeta(2)^k, leaving at most one factor 2 pi i per term.
// Replaces every zeta(n1,n2) of odd weight by its reduction to depth one.
CzvCombination reduce_odd_double_zetas(const CzvCombination& c);
CzvCombination pi_powers_to_zeta2(const CzvCombination& c);

CzvCombination reduce_mzv_depth2(int n1, int n2);
CzvCombination reduce_mzv_depth3(int n1, int n2, int n3);
// Li_{n1,n2}(s1, s2) for signs s_i = +-1 and odd weight.
CzvCombination alt_depth2(int n1, int n2, int s1, int s2);
bool bernoulli_identity_check(int n1, int n2);

bool integrality_check(const CzvCombination& c);
bool integrality_check(const PliResult& r);

std::string root_str(const RootOfUnity& r);

}  // namespace parity
