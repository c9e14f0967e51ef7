#include "hzeta/combinatorics.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hzeta/error.hpp"

namespace hzeta {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {

std::mutex bern_mutex;
std::vector<Rational> bern_table{Rational(1)};

std::mutex dnk_mutex;
std::map<std::pair<long, long>, Rational> dnk_table;

}  // namespace

Rational bernoulli_number(long n) {
    if (n < 0) throw DomainError("bernoulli index must be non-negative");
    if (n > 1 && n % 2 == 1) return Rational(0);
    std::lock_guard<std::mutex> lock(bern_mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (long m = static_cast<long>(bern_table.size()); m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            bern_table.emplace_back(0);
            continue;
        }
        mpq_class s = 0;
        for (long j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;
            s += mpq_class(binomial(m + 1, j)) * bern_table[static_cast<size_t>(j)].get();
        }
        mpq_class b = -s / mpq_class(m + 1);
        b.canonicalize();
        bern_table.emplace_back(b);
    }
    return bern_table[static_cast<size_t>(n)];
}

Rational bernoulli_poly(long n, const Rational& x) {
    if (n < 0) throw DomainError("bernoulli index must be non-negative");
    Rational s(0);
    Rational xp(1);  // x^(n-j), built from j = n downward
    for (long j = n; j >= 0; --j) {
        Rational b = bernoulli_number(j);
        if (!b.is_zero()) s += Rational(binomial(n, j)) * b * xp;
        xp *= x;
    }
    return s;
}

Rational harmonic(long n) {
    if (n < 0) throw DomainError("harmonic index must be non-negative");
    mpq_class s = 0;
    for (long k = 1; k <= n; ++k) s += mpq_class(1, k);
    s.canonicalize();
    return Rational(s);
}

Rational harmonic_shifted(long n, const Rational& a) {
    if (n < 0) throw DomainError("harmonic index must be non-negative");
    if (a.is_integer() && a.sign() <= 0) throw DomainError("shift must not be a non-positive integer");
    Rational s(0);
    for (long k = 0; k <= n; ++k) s += Rational(1) / (Rational(k) + a);
    return s;
}

Rational harmonic_skew(long n) {
    if (n < 0) throw DomainError("harmonic index must be non-negative");
    mpq_class s = 0;
    for (long k = 1; k <= n; ++k) s += mpq_class(k % 2 == 1 ? 1 : -1, k);
    s.canonicalize();
    return Rational(s);
}

Rational harmonic_odd(long n) {
    if (n < 0) throw DomainError("harmonic index must be non-negative");
    mpq_class s = 0;
    for (long k = 1; k <= n; ++k) s += mpq_class(1, 2 * k - 1);
    s.canonicalize();
    return Rational(s);
}

Rational a_number(long n, long k) {
    if (n < 1 || k < 1) throw DomainError("a_number needs n >= 1 and k >= 1");
    mpq_class s = 0;
    for (long v = n; v >= 1; v -= k) s += mpq_class(1, v);
    s.canonicalize();
    return Rational(s);
}

Rational d_coeff(long n, long k) {
    if (n < 1 || k < 1) throw DomainError("d_coeff needs n >= 1 and k >= 1");
    {
        std::lock_guard<std::mutex> lock(dnk_mutex);
        auto it = dnk_table.find({n, k});
        if (it != dnk_table.end()) return it->second;
    }
    mpq_class s = 0;
    for (long j = 1; j <= n; ++j) {
        Rational bj = bernoulli_number(j);
        Rational bnj = bernoulli_number(n - j);
        if (bj.is_zero() || bnj.is_zero()) continue;
        mpq_class kp = pow(Rational(k), n - 1 - j).get();
        s += mpq_class(binomial(n, j)) * kp * bnj.get() * bj.get() / mpq_class(j);
    }
    s /= mpq_class(factorial(n));
    if (n % 2 == 1) s = -s;
    s.canonicalize();
    Rational r(s);
    std::lock_guard<std::mutex> lock(dnk_mutex);
    dnk_table.emplace(std::make_pair(n, k), r);
    return r;
}

}  // namespace hzeta
