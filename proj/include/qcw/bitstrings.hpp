#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcw {

// Fixed-length binary string. Bit i of `value` is the i-th character from the
// RIGHT of the display form, i.e. strings print most-significant-bit first
// ("1100" has value 12 at n=4).
struct BitString {
    int n = 0;
    std::uint64_t value = 0;

    BitString() = default;
    BitString(int n_, std::uint64_t value_);

    static BitString parse(const std::string& bits);
    std::string str() const;

    bool operator==(const BitString& o) const = default;
};

// Number of set bits, in [0, n].
int cardinality(const BitString& x);

// True iff no position is set in both strings. Lengths must match.
bool is_disjoint(const BitString& x, const BitString& y);

// All C(n,w) strings of weight w in ascending numeric order.
std::vector<BitString> enumerate_fixed_weight(int n, int w);

// Exact C(n,k); domain 0 <= k <= n <= 62 so the result fits in 64 bits.
std::uint64_t binomial(int n, int k);

// Largest integer r with r*r == n, or -1 if n is not a perfect square.
int exact_sqrt(int n);

}  // namespace qcw
