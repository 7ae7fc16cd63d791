#include "wdvvkit/kontsevich.hpp"

#include "wdvvkit/errors.hpp"

namespace wdvvkit {

QSeries::QSeries(int K) : K_(K) {
    if (K_ < 1) throw Error("truncation order must be >= 1");
}

void QSeries::add_coeff(int k, unsigned m, const Rat& c) {
    if (k > K_ || c.is_zero()) return;
    if (k < 0) throw Error("negative exponential degree");
    auto key = std::make_pair(k, m);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Rat QSeries::coeff(int k, unsigned m) const {
    auto it = coeffs_.find({k, m});
    return it == coeffs_.end() ? Rat(0) : it->second;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r = *this;
    for (const auto& [key, c] : o.coeffs_) r.add_coeff(key.first, key.second, c);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r = *this;
    for (const auto& [key, c] : o.coeffs_) r.add_coeff(key.first, key.second, -c);
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
    QSeries r(K_);
    for (const auto& [ka, ca] : coeffs_)
        for (const auto& [kb, cb] : o.coeffs_) {
            if (ka.first + kb.first > K_) continue;
            r.add_coeff(ka.first + kb.first, ka.second + kb.second, ca * cb);
        }
    return r;
}

QSeries QSeries::d2() const {
    QSeries r(K_);
    for (const auto& [key, c] : coeffs_)
        r.add_coeff(key.first, key.second, c * Rat(key.first));
    return r;
}

QSeries QSeries::d3() const {
    QSeries r(K_);
    for (const auto& [key, c] : coeffs_) {
        if (key.second == 0) continue;
        r.add_coeff(key.first, key.second - 1, c * Rat(static_cast<long>(key.second)));
    }
    return r;
}

int QSeries::first_nonzero_slice() const {
    int best = 0;
    for (const auto& [key, c] : coeffs_)
        if (best == 0 || key.first < best) best = key.first;
    return best;
}

GwTable nk_recursion(int K) {
    if (K < 1) throw Error("truncation order must be >= 1");
    GwTable t;
    t.values.push_back(1); // N_1
    for (int k = 2; k <= K; ++k) {
        BigInt nk = 0;
        for (int p = 1; p < k; ++p) {
            const int q = k - p;
            BigInt b1, b2;
            mpz_bin_uiui(b1.get_mpz_t(), static_cast<unsigned long>(3 * k - 4),
                         static_cast<unsigned long>(3 * p - 2));
            mpz_bin_uiui(b2.get_mpz_t(), static_cast<unsigned long>(3 * k - 4),
                         static_cast<unsigned long>(3 * p - 1));
            nk += t.N(p) * t.N(q) * p * p * q * (q * b1 - p * b2);
        }
        if (nk <= 0) throw Error("recursion produced a non-positive count at k=" + std::to_string(k));
        t.values.push_back(nk);
    }
    return t;
}

QSeries build_series(const GwTable& table) {
    QSeries f(table.order());
    for (int k = 1; k <= table.order(); ++k) {
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(3 * k - 1));
        f.add_coeff(k, static_cast<unsigned>(3 * k - 1), Rat(table.N(k), fact));
    }
    return f;
}

QSeries pde_residual(const QSeries& f) {
    QSeries f2 = f.d2();
    QSeries f22 = f2.d2();
    QSeries f223 = f22.d3();
    QSeries f3 = f.d3();
    QSeries f33 = f3.d3();
    return f223 * f223 - f33.d3() - f22.d2() * f2.d3().d3();
}

GwTable solve_from_pde(int K) {
    if (K < 1) throw Error("truncation order must be >= 1");
    GwTable t;
    t.values.push_back(1); // N_1 seeds the match
    for (int k = 2; k <= K; ++k) {
        // Residual of the series truncated below k: its k-slice carries only
        // the quadratic terms, so the linear f333 contribution of the missing
        // c_k balances it.
        QSeries partial(k);
        for (int p = 1; p < k; ++p) {
            BigInt fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(3 * p - 1));
            partial.add_coeff(p, static_cast<unsigned>(3 * p - 1), Rat(t.N(p), fact));
        }
        const Rat a = pde_residual(partial).coeff(k, static_cast<unsigned>(3 * k - 4));
        const Rat ck =
            a / Rat(static_cast<long>(3 * k - 1) * (3 * k - 2) * (3 * k - 3));
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(3 * k - 1));
        const Rat nk = ck * Rat(fact);
        if (!nk.is_integer() || nk.sign() <= 0)
            throw Error("coefficient match at k=" + std::to_string(k) +
                        " is not a positive integer: " + nk.str());
        t.values.push_back(nk.num());
    }
    return t;
}

Report certify_table(const GwTable& table) {
    Report r;
    bool positive = true;
    std::string pos_witness;
    for (int k = 1; k <= table.order(); ++k)
        if (table.N(k) <= 0) {
            positive = false;
            pos_witness = "N_" + std::to_string(k) + " = " + table.N(k).get_str();
            break;
        }
    r.add("integral", true); // GwTable stores integers by construction
    r.add("positive", positive, pos_witness);
    QSeries res = pde_residual(build_series(table));
    std::string witness;
    if (!res.is_zero()) {
        const int k = res.first_nonzero_slice();
        unsigned m = 0;
        Rat c;
        for (const auto& [key, cc] : res.coeffs())
            if (key.first == k) {
                m = key.second;
                c = cc;
                break;
            }
        witness = "slice k=" + std::to_string(k) + ": coefficient of x3^" + std::to_string(m) +
                  " is " + c.str();
    }
    r.add("pde_residual_zero", res.is_zero(), witness);
    return r;
}

} // namespace wdvvkit
