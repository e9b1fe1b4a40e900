#include "qcw/bitstrings.hpp"

#include <bit>
#include <stdexcept>

namespace qcw {

BitString::BitString(int n_, std::uint64_t value_) : n(n_), value(value_) {
    if (n < 0 || n > 62) throw std::invalid_argument("BitString: length out of range [0,62]");
    if (n < 62 && value >> n) throw std::invalid_argument("BitString: value does not fit in n bits");
}

BitString BitString::parse(const std::string& bits) {
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("BitString: invalid character");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<int>(bits.size()), v);
}

std::string BitString::str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (value >> (n - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

int cardinality(const BitString& x) {
    return std::popcount(x.value);
}

bool is_disjoint(const BitString& x, const BitString& y) {
    if (x.n != y.n) throw std::invalid_argument("is_disjoint: length mismatch");
    return (x.value & y.value) == 0;
}

std::vector<BitString> enumerate_fixed_weight(int n, int w) {
    if (n < 0 || w < 0 || w > n) throw std::invalid_argument("enumerate_fixed_weight: weight out of range");
    std::vector<BitString> out;
    out.reserve(static_cast<std::size_t>(binomial(n, w)));
    if (w == 0) {
        out.emplace_back(n, 0);
        return out;
    }
    // Gosper's hack: next larger integer with the same popcount.
    std::uint64_t v = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = (n == 62) ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << n) - 1;
    while (v <= limit) {
        out.emplace_back(n, v);
        std::uint64_t c = v & (~v + 1);
        std::uint64_t r = v + c;
        if (r > limit || r < v) break;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n || n > 62) throw std::invalid_argument("binomial: domain is 0 <= k <= n <= 62");
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(c);
}

int exact_sqrt(int n) {
    if (n < 0) return -1;
    int r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

}  // namespace qcw
