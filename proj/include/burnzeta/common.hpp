// Shared basics: exact integer/rational types, the error hierarchy and a few
// number-theoretic helpers used by the series and zeta machinery.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnzeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

/// All failures surface as one exception type tagged with a category so the
/// CLI can render a structured diagnostic.
class error : public std::runtime_error {
public:
    enum class kind {
        validation,     // malformed mathematical input
        capacity,       // configured size guard exceeded
        divisibility,   // exact division in the ring failed
        nonintegral,    // marks vector outside the integral image lattice
        domain,         // operation not defined for this value
        parse,          // file/JSON schema violation
    };

    error(kind k, std::string msg) : std::runtime_error(std::move(msg)), kind_(k) {}
    kind category() const noexcept { return kind_; }

    static const char* kind_name(kind k) {
        switch (k) {
            case kind::validation: return "validation";
            case kind::capacity: return "capacity";
            case kind::divisibility: return "divisibility";
            case kind::nonintegral: return "nonintegral";
            case kind::domain: return "domain";
            case kind::parse: return "parse";
        }
        return "unknown";
    }

private:
    kind kind_;
};

[[noreturn]] inline void fail(error::kind k, const std::string& msg) {
    throw error(k, msg);
}

/// Sorted list of the positive divisors of n.
inline std::vector<long long> divisors(long long n) {
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Classical Moebius function.
inline int moebius(long long n) {
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

inline long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return a + b;
    return a / std::gcd(a, b) * b;
}

}  // namespace burnzeta
