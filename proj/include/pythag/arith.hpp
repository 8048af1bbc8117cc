#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pythag {

/// Primes in [2, limit], ascending. Limits below 2 yield an empty list.
inline std::vector<std::int64_t> sieve(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (std::int64_t q = p * p; q <= limit; q += p) composite[static_cast<std::size_t>(q)] = true;
    }
    return primes;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization n = prod p^nu, primes ascending, exponents >= 1.
struct Factorization {
    std::int64_t n = 1;
    std::vector<std::pair<std::int64_t, int>> factors;
};

inline Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.n = n;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int nu = 0;
        while (n % p == 0) {
            n /= p;
            ++nu;
        }
        f.factors.emplace_back(p, nu);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

/// Smallest-prime-factor table; amortizes factorization of many integers <= limit.
class SpfTable {
public:
    explicit SpfTable(std::int64_t limit) : limit_(std::max<std::int64_t>(limit, 1)) {
        spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
        for (std::int64_t i = 2; i <= limit_; ++i) {
            if (spf_[static_cast<std::size_t>(i)] != 0) continue;
            for (std::int64_t j = i; j <= limit_; j += i)
                if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
    }

    std::int64_t limit() const { return limit_; }

    Factorization factorize(std::int64_t n) const {
        if (n < 1 || n > limit_) throw std::out_of_range("SpfTable::factorize: n outside table range");
        Factorization f;
        f.n = n;
        while (n > 1) {
            std::int64_t p = spf_[static_cast<std::size_t>(n)];
            int nu = 0;
            while (n % p == 0) {
                n /= p;
                ++nu;
            }
            f.factors.emplace_back(p, nu);
        }
        return f;
    }

private:
    std::int64_t limit_;
    std::vector<std::int32_t> spf_;
};

/// supp(n): the set of prime factors of n, ascending. supp(1) is empty.
inline std::vector<std::int64_t> supp(const Factorization& f) {
    std::vector<std::int64_t> s;
    s.reserve(f.factors.size());
    for (const auto& [p, nu] : f.factors) s.push_back(p);
    return s;
}

inline std::vector<std::int64_t> supp(std::int64_t n) { return supp(factorize(n)); }

/// oddsupp(n): primes whose exponent in n is odd, ascending.
inline std::vector<std::int64_t> oddsupp(const Factorization& f) {
    std::vector<std::int64_t> s;
    for (const auto& [p, nu] : f.factors)
        if (nu % 2 == 1) s.push_back(p);
    return s;
}

inline std::vector<std::int64_t> oddsupp(std::int64_t n) { return oddsupp(factorize(n)); }

/// A finite set of primes; strictly increasing, duplicate-free, every element prime.
class PrimeSet {
public:
    PrimeSet() = default;

    explicit PrimeSet(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (!is_prime(primes_[i]))
                throw std::invalid_argument("PrimeSet: " + std::to_string(primes_[i]) + " is not prime");
            if (i > 0 && primes_[i] == primes_[i - 1])
                throw std::invalid_argument("PrimeSet: duplicate prime " + std::to_string(primes_[i]));
        }
    }

    /// Parse "2,3,5" (empty string -> empty set).
    static PrimeSet parse(const std::string& csv) {
        std::vector<std::int64_t> ps;
        std::size_t pos = 0;
        while (pos < csv.size()) {
            std::size_t next = csv.find(',', pos);
            if (next == std::string::npos) next = csv.size();
            std::string tok = csv.substr(pos, next - pos);
            if (!tok.empty()) ps.push_back(std::stoll(tok));
            pos = next + 1;
        }
        return PrimeSet(std::move(ps));
    }

    /// The first k primes.
    static PrimeSet first(int k) {
        std::vector<std::int64_t> ps;
        std::int64_t bound = 16;
        while (true) {
            ps = sieve(bound);
            if (static_cast<int>(ps.size()) >= k) break;
            bound *= 2;
        }
        ps.resize(static_cast<std::size_t>(k));
        return PrimeSet(std::move(ps));
    }

    bool contains(std::int64_t p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    const std::vector<std::int64_t>& primes() const { return primes_; }

    bool subset_of(const PrimeSet& other) const {
        return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
    }

    bool operator==(const PrimeSet& other) const { return primes_ == other.primes_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(primes_[i]);
        }
        return s + "}";
    }

private:
    std::vector<std::int64_t> primes_;
};

/// The largest divisor of n with support inside p0.
inline std::int64_t smooth_part(const Factorization& f, const PrimeSet& p0) {
    std::int64_t s = 1;
    for (const auto& [p, nu] : f.factors) {
        if (!p0.contains(p)) continue;
        for (int i = 0; i < nu; ++i) s *= p;
    }
    return s;
}

inline std::int64_t smooth_part(std::int64_t n, const PrimeSet& p0) { return smooth_part(factorize(n), p0); }

/// Maximal S(P0)-factor decomposition of n, ascending: the p0-smooth part (when > 1)
/// as a single element, plus p^nu for every prime p outside p0 dividing n.
/// The decomposition of 1 is empty.
inline std::vector<std::int64_t> s_decompose(const Factorization& f, const PrimeSet& p0) {
    std::vector<std::int64_t> parts;
    std::int64_t smooth = 1;
    for (const auto& [p, nu] : f.factors) {
        std::int64_t q = 1;
        for (int i = 0; i < nu; ++i) q *= p;
        if (p0.contains(p))
            smooth *= q;
        else
            parts.push_back(q);
    }
    if (smooth > 1) parts.push_back(smooth);
    std::sort(parts.begin(), parts.end());
    return parts;
}

inline std::vector<std::int64_t> s_decompose(std::int64_t n, const PrimeSet& p0) {
    return s_decompose(factorize(n), p0);
}

/// Membership test for the variable universe S(P0): p0-smooth integers > 1,
/// plus prime powers p^nu with p outside p0.
inline bool in_s_of(std::int64_t n, const PrimeSet& p0) {
    if (n < 2) return false;
    Factorization f = factorize(n);
    bool all_smooth = true;
    for (const auto& [p, nu] : f.factors)
        if (!p0.contains(p)) all_smooth = false;
    if (all_smooth) return true;
    return f.factors.size() == 1 && !p0.contains(f.factors[0].first);
}

}  // namespace pythag
