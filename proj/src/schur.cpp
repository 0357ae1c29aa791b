#include "schubert/schur.hpp"

#include <algorithm>

namespace schubert {

std::vector<Polynomial> Alphabet::vars() const {
    std::vector<Polynomial> v;
    for (int i = 1; i <= size; ++i) v.push_back(symbol(family, i));
    return v;
}

Polynomial elementary(int r, const std::vector<Polynomial>& alphabet) {
    if (r < 0 || r > static_cast<int>(alphabet.size())) return Polynomial();
    std::vector<Polynomial> e(static_cast<std::size_t>(r) + 1);
    e[0] = Polynomial(1);
    for (const auto& v : alphabet)
        for (int k = r; k >= 1; --k) e[static_cast<std::size_t>(k)] += v * e[static_cast<std::size_t>(k - 1)];
    return e[static_cast<std::size_t>(r)];
}

Polynomial complete(int r, const std::vector<Polynomial>& alphabet) {
    if (r < 0) return Polynomial();
    if (r == 0) return Polynomial(1);
    if (alphabet.empty()) return Polynomial();
    std::vector<Polynomial> h(static_cast<std::size_t>(r) + 1);
    h[0] = Polynomial(1);
    for (const auto& v : alphabet)
        for (int k = 1; k <= r; ++k) h[static_cast<std::size_t>(k)] += v * h[static_cast<std::size_t>(k - 1)];
    return h[static_cast<std::size_t>(r)];
}

Polynomial elementary(int r, const Alphabet& a) { return elementary(r, a.vars()); }
Polynomial complete(int r, const Alphabet& a) { return complete(r, a.vars()); }

const std::vector<SchurMethod>& all_schur_methods() {
    static const std::vector<SchurMethod> m = {SchurMethod::Alternant, SchurMethod::JacobiTrudi,
                                               SchurMethod::NaegelsbachKostka, SchurMethod::FlaggedH,
                                               SchurMethod::FlaggedE};
    return m;
}

const char* method_name(SchurMethod m) {
    switch (m) {
        case SchurMethod::Alternant: return "alternant";
        case SchurMethod::JacobiTrudi: return "jacobi_trudi";
        case SchurMethod::NaegelsbachKostka: return "naegelsbach_kostka";
        case SchurMethod::FlaggedH: return "flagged_h";
        case SchurMethod::FlaggedE: return "flagged_e";
    }
    return "";
}

namespace {

using Matrix = std::vector<std::vector<Polynomial>>;

int part(const Partition& p, int i) { return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0; }

Polynomial alternant(const Partition& lambda, const Alphabet& a) {
    const int n = a.size;
    if (static_cast<int>(lambda.size()) > n) throw ShapeTooLong("partition longer than the alphabet");
    const auto xs = a.vars();
    Matrix num(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    Matrix van = num;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto& xi = xs[static_cast<std::size_t>(i - 1)];
            num[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = xi.pow(static_cast<unsigned>(part(lambda, j) + n - j));
            van[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = xi.pow(static_cast<unsigned>(n - j));
        }
    return exact_divide(det(num), det(van));
}

}  // namespace

Polynomial schur(const Partition& lambda0, const Alphabet& a, SchurMethod method) {
    const Partition lambda = normalize(lambda0);
    const Partition lc = conjugate(lambda);
    const int l = static_cast<int>(lambda.size());
    const int lp = static_cast<int>(lc.size());
    const int n = a.size;
    Matrix m;
    switch (method) {
        case SchurMethod::Alternant:
            return alternant(lambda, a);
        case SchurMethod::JacobiTrudi:
            m.assign(static_cast<std::size_t>(l), std::vector<Polynomial>(static_cast<std::size_t>(l)));
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j)
                    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = complete(part(lambda, i) - i + j, a);
            break;
        case SchurMethod::NaegelsbachKostka:
            m.assign(static_cast<std::size_t>(lp), std::vector<Polynomial>(static_cast<std::size_t>(lp)));
            for (int i = 1; i <= lp; ++i)
                for (int j = 1; j <= lp; ++j)
                    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = elementary(part(lc, i) - i + j, a);
            break;
        case SchurMethod::FlaggedH:
            m.assign(static_cast<std::size_t>(l), std::vector<Polynomial>(static_cast<std::size_t>(l)));
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= l; ++j)
                    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                        complete(part(lambda, i) - i + j, a.prefix(n + 1 - j));
            break;
        case SchurMethod::FlaggedE:
            m.assign(static_cast<std::size_t>(lp), std::vector<Polynomial>(static_cast<std::size_t>(lp)));
            for (int i = 1; i <= lp; ++i)
                for (int j = 1; j <= lp; ++j)
                    m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                        elementary(part(lc, i) - i + j, a.prefix(n + j - 1));
            break;
    }
    return det(m);
}

Polynomial cauchy_lhs(int n, int m) {
    PolyBuilder acc;
    const Alphabet xs{Family::X, n}, ys{Family::Y, m};
    for (const auto& lambda : partitions_in_box(n, m)) {
        const Partition dual = conjugate(normalize(complement(lambda, n, m)));
        acc.add(schur(lambda, xs) * schur(dual, ys));
    }
    return acc.finish();
}

Polynomial cauchy_rhs(int n, int m) {
    Polynomial r(1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) r *= x(i) + y(j);
    return r;
}

CheckResult cauchy_check(int n, int m) {
    return compare(cauchy_lhs(n, m), cauchy_rhs(n, m), "cauchy n=" + std::to_string(n) + " m=" + std::to_string(m));
}

Polynomial CoefficientSequence::operator()(int k) const {
    if (k < 0) return Polynomial();
    if (k == 0) return Polynomial(1);
    return rule_(k);
}

std::vector<Polynomial> series_divide(const std::vector<Polynomial>& num, const std::vector<Polynomial>& den, int max_degree) {
    if (den.empty() || den[0] != Polynomial(1)) throw std::invalid_argument("series denominator must start with 1");
    auto at = [](const std::vector<Polynomial>& v, int k) { return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : Polynomial(); };
    std::vector<Polynomial> s;
    for (int k = 0; k <= max_degree; ++k) {
        Polynomial v = at(num, k);
        for (int i = 1; i <= k; ++i) v -= at(den, i) * s[static_cast<std::size_t>(k - i)];
        s.push_back(v);
    }
    return s;
}

CoefficientSequence super_series(const std::vector<Polynomial>& xs, const std::vector<Polynomial>& ys, int max_degree) {
    std::vector<Polynomial> num, den;
    for (int k = 0; k <= max_degree; ++k) {
        const long sign = k % 2 ? -1 : 1;
        num.push_back(elementary(k, ys) * mpz_class(sign));
        den.push_back(elementary(k, xs) * mpz_class(sign));
    }
    auto s = series_divide(num, den, max_degree);
    return CoefficientSequence([s, max_degree](int k) {
        if (k > max_degree) throw std::out_of_range("series truncated below requested degree");
        return s[static_cast<std::size_t>(k)];
    });
}

Polynomial generalized_schur(const CoefficientSequence& f, const Partition& lambda0, const Partition& mu0) {
    const Partition lambda = normalize(lambda0), mu = normalize(mu0);
    if (!contains(lambda, mu)) throw NotContained("mu is not contained in lambda");
    const int l = static_cast<int>(lambda.size());
    Matrix m(static_cast<std::size_t>(l), std::vector<Polynomial>(static_cast<std::size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = f(part(lambda, i) - part(mu, j) - i + j);
    return det(m);
}

Polynomial phi(const Polynomial& f, int k) {
    if (k == 0) return f;
    return map_variables(f, [k](const Var& v) {
        if (v.family != Family::H) return v;
        return Var{Family::H, v.i, v.j + k};
    });
}

Polynomial ninth_h_det(const Partition& lambda0, const Partition& mu0) {
    const Partition lambda = normalize(lambda0), mu = normalize(mu0);
    const int n = static_cast<int>(std::max(lambda.size(), mu.size()));
    Matrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                h(part(lambda, i) - part(mu, j) - i + j, part(mu, j) - j + 1);
    return det(m);
}

Polynomial ninth_e(int r) {
    if (r < 0) return Polynomial();
    return ninth_h_det(Partition(static_cast<std::size_t>(r), 1), {});
}

Polynomial ninth_e_det(const Partition& lambda0, const Partition& mu0) {
    const Partition lc = conjugate(normalize(lambda0)), mc = conjugate(normalize(mu0));
    const int n = static_cast<int>(std::max(lc.size(), mc.size()));
    Matrix m(static_cast<std::size_t>(n), std::vector<Polynomial>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                phi(ninth_e(part(lc, i) - part(mc, j) - i + j), -part(mc, j) + j - 1);
    return det(m);
}

Polynomial ninth_giambelli(const Partition& lambda) {
    const Frobenius f = frobenius(lambda);
    const std::size_t r = f.arms.size();
    Matrix m(r, std::vector<Polynomial>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Partition hook(static_cast<std::size_t>(f.legs[j]) + 1, 1);
            hook[0] = f.arms[i] + 1;
            m[i][j] = ninth_h_det(hook, {});
        }
    return det(m);
}

Polynomial ninth_variation(const Partition& lambda, const Partition& mu, NinthForm form, int shift) {
    if (!contains(normalize(lambda), normalize(mu))) throw NotContained("mu is not contained in lambda");
    Polynomial r;
    switch (form) {
        case NinthForm::HDet: r = ninth_h_det(lambda, mu); break;
        case NinthForm::EDet: r = ninth_e_det(lambda, mu); break;
        case NinthForm::Giambelli:
            if (!normalize(mu).empty()) throw std::invalid_argument("Giambelli form requires mu empty");
            r = ninth_giambelli(lambda);
            break;
    }
    return phi(r, shift);
}

}  // namespace schubert
