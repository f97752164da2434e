#include "spncov/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace spncov {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

ExactRational bernoulli(unsigned long m) {
    static std::mutex mu;
    static std::vector<ExactRational> memo;
    std::lock_guard<std::mutex> lock(mu);
    if (memo.empty()) memo.emplace_back(1);
    while (memo.size() <= m) {
        // B_k = -1/(k+1) * sum_{i<k} C(k+1, i) B_i
        unsigned long k = memo.size();
        ExactRational sum(0);
        for (unsigned long i = 0; i < k; ++i)
            sum += ExactRational(binomial(k + 1, i)) * memo[i];
        memo.push_back(-sum / ExactRational(static_cast<long>(k) + 1));
    }
    return memo[m];
}

ExactRational bernoulli_poly(unsigned long n, const ExactRational& x) {
    ExactRational sum(0);
    for (unsigned long k = 0; k <= n; ++k)
        sum += ExactRational(binomial(n, k)) * bernoulli(k) * x.pow(static_cast<long>(n - k));
    return sum;
}

}  // namespace spncov
