#pragma once

#include "engine.hpp"
#include "numeric.hpp"
#include "roots.hpp"

#include <cstdint>
#include <vector>

namespace parity {

// Points with moduli in [0.3, 0.9] and every consecutive product at distance
// >= margin from [0, inf).  Deterministic in the seed.
std::vector<Cplx> sample_domain_point(int d, std::uint64_t seed, double margin = 0.05);

// Numeric value of a combination of generators at z (plain factors by series,
// inverted factors by hyperlogarithms).
HPComplex eval_lincomb(const LinComb& c, const std::vector<Cplx>& z, const Real& target);
HPComplex eval_generator(const Generator& g, const std::vector<Cplx>& z, const Real& target);

// Li_n(z) - (-1)^{|n|-d} Li_n(1/z)
HPComplex eval_pli_direct(const IndexVector& n, const std::vector<Cplx>& z, const Real& target);

HPComplex eval_czv(const CzvCombination& c, const Real& target);
Cplx eval_li_at_roots(const LiAtRoot& l, const Real& target);

struct VerifyReport {
    IndexVector index;
    int samples = 0;
    double max_error = 0;
    double tolerance = 0;
    bool pass = false;
};

struct VerifyOptions {
    int samples = 3;
    double tolerance = 1e-10;
    unsigned digits = 50;
    std::uint64_t seed = 0x5eed;
};

VerifyReport verify_feq(const PliResult& result, const VerifyOptions& opts);

}  // namespace parity
