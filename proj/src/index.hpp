#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace parity {

// Li_{n1,...,nd}: n1 pairs with the smallest summation variable.
using IndexVector = std::vector<int>;

inline int weight(const IndexVector& n) { return std::accumulate(n.begin(), n.end(), 0); }
inline int depth(const IndexVector& n) { return static_cast<int>(n.size()); }

// Throws unless nonempty with all entries >= 1.
void validate_index(const IndexVector& n);
IndexVector parse_index(std::string_view text);  // "1,2,3"
std::string index_str(const IndexVector& n, char sep = ',');

// All compositions of w, lexicographic.
std::vector<IndexVector> compositions(int w);

}  // namespace parity
