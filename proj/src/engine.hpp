#pragma once

#include "terms.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace parity {

enum class Form { Canonical, Compact };
const char* form_name(Form f);
Form parse_form(std::string_view text);

struct PliResult {
    IndexVector index;
    Form form = Form::Canonical;
    LinComb equation;
    int weight = 0;
    int depth_bound = 0;
};

// d/dz1 f = over_z1 / z1 + over_one_minus_z1 / (1 - z1), both in the ambient of f.
struct DiffExpr {
    LinComb over_z1;
    LinComb over_one_minus_z1;
    bool operator==(const DiffExpr&) const = default;
};

DiffExpr diff_z1(const LinComb& f);
// A primitive F with diff_z1(F) == e; throws Unsupported for shapes outside the rule set.
LinComb primitive_z1(const DiffExpr& e);
// z1 d/dz1, only for combinations whose derivative has no 1/(1-z1) part.
LinComb theta_z1(const LinComb& f);
// r-fold primitive along dz1/z1 of ber_k(z1...zN) Li_m(args), args[0] starting at z1.
LinComb iterated_primitive(int k, const IndexVector& m, const std::vector<ConsProd>& args, int ambient, int r);

// Substitute local variable i by the consecutive product slots[i-1]; the slots must be
// adjacent and the last one must end at the ambient dimension when ber factors occur.
LinComb embed(const LinComb& local, const std::vector<ConsProd>& slots, int ambient);
// z' = (z2, ..., zN) and z'' = (z1 z2, z3, ..., zN) seen from ambient N.
std::vector<ConsProd> shifted_slots(int ambient);
std::vector<ConsProd> merged_slots(int ambient);

// Canonical PLi_m in its own ambient depth(m).
using PliProvider = std::function<LinComb(const IndexVector&)>;
// Rewrite inverted Li factors and reversed depth-two arguments into canonical generators.
LinComb canonicalize(const LinComb& c, const PliProvider& provider);

// Expansion of Li_n(1/z) at z1 -> 0, with inverted depth d-1 factors kept.
LinComb reglim_z1(const IndexVector& n);

// Optional persistent storage for canonical equations.
class EquationStore {
public:
    virtual ~EquationStore() = default;
    virtual std::optional<LinComb> load(const IndexVector& n) = 0;
    virtual void save(const IndexVector& n, const LinComb& equation) = 0;
};

class Engine {
public:
    Engine() = default;
    explicit Engine(std::shared_ptr<EquationStore> store) : store_(std::move(store)) {}

    PliResult pli(const IndexVector& n, Form form = Form::Canonical);
    LinComb pli_canonical(const IndexVector& n);
    LinComb canonicalize(const LinComb& c);
    PliProvider provider();
    size_t memo_size() const;

private:
    LinComb compute(const IndexVector& n);
    LinComb primitive_part(const IndexVector& n);

    mutable std::recursive_mutex mutex_;
    std::map<IndexVector, LinComb> memo_;
    std::shared_ptr<EquationStore> store_;
};

}  // namespace parity
