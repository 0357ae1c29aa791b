#include "schubert/quantum.hpp"

#include <algorithm>

namespace schubert {

namespace {
using Matrix = std::vector<std::vector<Polynomial>>;
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

std::vector<Polynomial> givental_kim_coefficients(int k, const QAlphabet& a) {
    // D_m = (x_m + t) D_{m-1} + q_{m-1} D_{m-2}, as polynomials in t (index = power of t).
    std::vector<Polynomial> prev2, prev1 = {Polynomial(1)};
    for (int m = 1; m <= k; ++m) {
        std::vector<Polynomial> cur(idx(m) + 1);
        for (std::size_t p = 0; p < prev1.size(); ++p) {
            cur[p] += a.var(m) * prev1[p];
            cur[p + 1] += prev1[p];
        }
        const Polynomial qm = a.parameter(m - 1);
        if (!qm.is_zero())
            for (std::size_t p = 0; p < prev2.size(); ++p) cur[p] += qm * prev2[p];
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    std::vector<Polynomial> e(idx(k) + 1);
    for (int i = 0; i <= k; ++i) e[idx(i)] = prev1[idx(k - i)];
    return e;
}

QuantumTable::QuantumTable(const QAlphabet& a, int n) : a_(a), n_(n) {
    for (int k = 0; k <= n; ++k) e_.push_back(givental_kim_coefficients(k, a));
}

Polynomial QuantumTable::e(int i, int k) const {
    if (k > n_) throw AlphabetOverflow("alphabet X_" + std::to_string(k) + " exceeds rank " + std::to_string(n_));
    if (k < 0) k = 0;
    if (i < 0 || i > k) return Polynomial();
    return e_[idx(k)][idx(i)];
}

Polynomial QuantumTable::h(int k, int r, HVariant v) const {
    if (k < 0) return Polynomial();
    if (k == 0) return Polynomial(1);
    if (v == HVariant::Definition && r - 1 + k > n_)
        throw AlphabetOverflow("h_" + std::to_string(k) + "(X_" + std::to_string(r) + ") needs X_" +
                               std::to_string(r - 1 + k) + " beyond rank " + std::to_string(n_));
    Matrix m(idx(k), std::vector<Polynomial>(idx(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int alpha = v == HVariant::Definition ? r - 1 + j : std::min(r - 1 + j, n_ - 1);
            m[idx(i - 1)][idx(j - 1)] = e(1 - i + j, alpha);
        }
    return det(m);
}

Polynomial e_q(int i, int k, int n, const QAlphabet& a) { return QuantumTable(a, n).e(i, k); }

Polynomial h_q(int k, int r, int n, const QAlphabet& a, HVariant v) { return QuantumTable(a, n).h(k, r, v); }

Polynomial inversion_rhs(const QuantumTable& tab, int k, int r, HVariant v) {
    Matrix m(idx(std::max(k, 0)), std::vector<Polynomial>(idx(std::max(k, 0))));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) m[idx(i - 1)][idx(j - 1)] = tab.h(1 - i + j, r + 1 - j, v);
    return k < 0 ? Polynomial() : det(m);
}

CheckResult inversion_check(int k, int r, int n) {
    QuantumTable tab(kXq, n);
    return compare(tab.e(k, r), inversion_rhs(tab, k, r),
                   "inversion k=" + std::to_string(k) + " r=" + std::to_string(r) + " n=" + std::to_string(n));
}

CheckResult capped_check(int k, int r, int n) {
    QuantumTable tab(kXq, n);
    return compare(tab.h(k, r, HVariant::Capped), tab.h(k, r, HVariant::Definition),
                   "capped k=" + std::to_string(k) + " r=" + std::to_string(r) + " n=" + std::to_string(n));
}

Polynomial super_h(int m, int k, int l, const QuantumTable& xt, const QuantumTable& yt, HVariant v) {
    PolyBuilder acc;
    for (int j = 0; j <= m; ++j) {
        const Polynomial ey = yt.e(j, l);
        if (!ey.is_zero()) acc.add_product(xt.h(m - j, k, v), ey);
    }
    return acc.finish();
}

Polynomial super_e(int m, int k, int l, const QuantumTable& xt, const QuantumTable& yt, HVariant v) {
    PolyBuilder acc;
    for (int j = 0; j <= m; ++j) {
        const Polynomial ex = xt.e(m - j, k);
        if (!ex.is_zero()) acc.add_product(ex, yt.h(j, l, v));
    }
    return acc.finish();
}

CheckResult duality_check(int m, int k, int l, int n) {
    QuantumTable xt(QAlphabet{Family::X, Family::Q, true}, n), yt(QAlphabet{Family::Y, Family::QP, true}, n);
    return compare(super_h(m, k, l, xt, yt), super_e(m, l, k, yt, xt),
                   "duality m=" + std::to_string(m) + " k=" + std::to_string(k) + " l=" + std::to_string(l));
}

Polynomial semi_universal_e(int m, int k, int l, const QuantumTable& yt, HVariant v) {
    PolyBuilder acc;
    for (int j = 0; j <= m; ++j) {
        const Polynomial cc = c(m - j, k);
        if (!cc.is_zero()) acc.add_product(cc, yt.h(j, l, v));
    }
    return acc.finish();
}

Polynomial semi_universal_h(int m, int r, int l, const QuantumTable& xt, HVariant v) {
    PolyBuilder acc;
    for (int j = 0; j <= m; ++j) {
        const Polynomial dd = d(j, l);
        if (!dd.is_zero()) acc.add_product(xt.h(m - j, r, v), dd);
    }
    return acc.finish();
}

Polynomial quantum_super_multi_schur(const Partition& lambda0, const Partition& mu0, const std::vector<Flag>& flags,
                                     const QuantumTable& xt, const QuantumTable& yt) {
    const Partition lambda = normalize(lambda0), mu = normalize(mu0);
    if (!contains(lambda, mu)) throw NotContained("mu is not contained in lambda");
    const int m = static_cast<int>(flags.size());
    if (static_cast<int>(lambda.size()) > m) throw std::invalid_argument("partition longer than the flag list");
    auto part = [](const Partition& p, int i) { return i <= static_cast<int>(p.size()) ? p[idx(i - 1)] : 0; };
    Matrix mat(idx(m), std::vector<Polynomial>(idx(m)));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            mat[idx(i - 1)][idx(j - 1)] =
                super_h(part(lambda, i) - part(mu, j) - i + j, flags[idx(i - 1)].k, flags[idx(i - 1)].l, xt, yt);
    return det(mat);
}

Assignment c_to_quantum(Family c_family, const QuantumTable& tab) {
    Assignment a;
    for (int j = 1; j <= tab.rank(); ++j)
        for (int i = 1; i <= j; ++i) a[Var{c_family, i, j}] = tab.e(i, j);
    return a;
}

}  // namespace schubert
