// SPDX-License-Identifier: Apache-2.0

#include "digitsum/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace digitsum::diophantine {

namespace {

// ln q from the big-integer mantissa/exponent split; accurate to double
// rounding, well inside the documented 1e-6 slack on mu_hat.
double log_mpz(const mpz_class& q) {
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, q.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<mpz_class> quotients)
    : quotients_(std::move(quotients)) {
    for (std::size_t i = 1; i < quotients_.size(); ++i) {
        if (quotients_[i] < 1) {
            throw std::invalid_argument(
                "ContinuedFraction: partial quotients after the first must be >= 1");
        }
    }
}

ContinuedFraction ContinuedFraction::golden(std::size_t count) {
    return ContinuedFraction(std::vector<mpz_class>(count, mpz_class(1)));
}

ContinuedFraction ContinuedFraction::drop_last() const {
    if (quotients_.empty()) return {};
    return ContinuedFraction(
        std::vector<mpz_class>(quotients_.begin(), quotients_.end() - 1));
}

ContinuedFraction ContinuedFraction::common_prefix(
    const ContinuedFraction& other) const {
    std::vector<mpz_class> shared;
    const std::size_t limit = std::min(size(), other.size());
    for (std::size_t i = 0; i < limit && quotients_[i] == other.quotients_[i]; ++i) {
        shared.push_back(quotients_[i]);
    }
    return ContinuedFraction(std::move(shared));
}

ContinuedFraction ContinuedFraction::prefix(std::size_t count) const {
    if (count >= size()) return *this;
    return ContinuedFraction(
        std::vector<mpz_class>(quotients_.begin(), quotients_.begin() + count));
}

std::string ContinuedFraction::to_string() const {
    if (quotients_.empty()) return "[]";
    std::string s = "[" + quotients_[0].get_str();
    for (std::size_t i = 1; i < quotients_.size(); ++i) {
        s += (i == 1 ? "; " : ", ");
        s += quotients_[i].get_str();
    }
    return s + "]";
}

ContinuedFraction cf_of_rational(const mpq_class& x) {
    // Euclidean algorithm with floor division.  The remainder sequence is
    // strictly decreasing, so the final quotient is >= 2 whenever the
    // expansion has length >= 2: the result is already canonical.
    mpz_class n = x.get_num();
    mpz_class d = x.get_den();
    std::vector<mpz_class> quotients;
    for (;;) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        quotients.push_back(q);
        if (r == 0) break;
        n = d;
        d = r;
    }
    return ContinuedFraction(std::move(quotients));
}

ContinuedFraction certified_cf_prefix(const series::Enclosure& e) {
    if (e.lo > e.hi) {
        throw std::invalid_argument("certified_cf_prefix: malformed enclosure");
    }
    const ContinuedFraction lo_cf = cf_of_rational(e.lo).drop_last();
    if (e.lo == e.hi) return lo_cf;
    return lo_cf.common_prefix(cf_of_rational(e.hi).drop_last());
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
    if (cf.empty()) {
        throw std::invalid_argument("convergents: empty continued fraction");
    }
    std::vector<Convergent> table;
    table.reserve(cf.size());
    mpz_class p_prev2 = 0, p_prev1 = 1;  // p_{-2}, p_{-1}
    mpz_class q_prev2 = 1, q_prev1 = 0;
    for (std::size_t k = 0; k < cf.size(); ++k) {
        mpz_class p = cf[k] * p_prev1 + p_prev2;
        mpz_class q = cf[k] * q_prev1 + q_prev2;
        table.push_back(Convergent{p, q});
        p_prev2 = std::move(p_prev1);
        p_prev1 = std::move(p);
        q_prev2 = std::move(q_prev1);
        q_prev1 = std::move(q);
    }
    return table;
}

std::string MuEstimate::to_string() const {
    std::string s;
    char buf[64];
    for (const auto& [k, r] : ratios) {
        std::snprintf(buf, sizeof(buf), "k=%zu ratio=%.6f\n", k, r);
        s += buf;
    }
    std::snprintf(buf, sizeof(buf), "mu_hat=%.6f\n", mu_hat);
    s += buf;
    return s;
}

MuEstimate estimate_mu(const ContinuedFraction& cf, std::size_t window_start) {
    if (cf.size() < window_start + 2) {
        throw std::invalid_argument(
            "estimate_mu: window too short: need at least window_start + 2 "
            "quotients, have " + std::to_string(cf.size()));
    }
    const std::vector<Convergent> table = convergents(cf);
    if (table[window_start].q < 2) {
        throw std::invalid_argument(
            "estimate_mu: q at window_start is below 2, its logarithm "
            "degenerates the growth ratio");
    }

    MuEstimate est;
    est.window_start = window_start;
    est.mu_hat = 0;
    est.argmax_index = window_start;
    double best = -1;
    for (std::size_t k = window_start; k + 1 < table.size(); ++k) {
        const double r = log_mpz(table[k + 1].q) / log_mpz(table[k].q);
        est.ratios.emplace_back(k, r);
        if (r > best) {  // strict: ties keep the smallest k
            best = r;
            est.argmax_index = k;
        }
    }
    est.mu_hat = 1 + best;
    return est;
}

ConstantMu estimate_mu_for_constant(series::Base b, Constant which,
                                    const DepthPolicy& policy) {
    const std::size_t need =
        std::max(policy.min_quotients, policy.window_start + 2);

    ContinuedFraction prefix;
    unsigned depth = 0;
    bool found = false;
    if (which == Constant::F) {
        for (unsigned terms = 3; terms <= policy.max_f_terms; ++terms) {
            prefix = certified_cf_prefix(series::eval_F(b, terms));
            if (prefix.size() >= need) {
                depth = terms;
                found = true;
                break;
            }
        }
    } else {
        for (unsigned terms = 64; terms <= policy.max_s_terms; terms *= 2) {
            prefix = certified_cf_prefix(series::eval_S(b, terms));
            if (prefix.size() >= need) {
                depth = terms;
                found = true;
                break;
            }
        }
    }
    if (!found) {
        throw std::runtime_error(
            "estimate_mu_for_constant: depth cap reached before the certified "
            "prefix had " + std::to_string(need) + " quotients");
    }

    ConstantMu result;
    result.certified_prefix = prefix.prefix(need);
    result.estimate = estimate_mu(result.certified_prefix, policy.window_start);
    result.depth_used = depth;
    return result;
}

}  // namespace digitsum::diophantine
