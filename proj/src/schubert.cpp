#include "schubert/schubert.hpp"

#include <algorithm>

namespace schubert {

namespace {
std::size_t idx(int i) { return static_cast<std::size_t>(i); }
}  // namespace

Polynomial swap_variables(const Polynomial& f, int i, Family fam) {
    return map_variables(f, [i, fam](const Var& v) {
        if (v.family != fam) return v;
        if (v.i == i) return Var{fam, i + 1, 0};
        if (v.i == i + 1) return Var{fam, i, 0};
        return v;
    });
}

Polynomial divided_difference(const Polynomial& f, int i, Family fam) {
    if (i < 1) throw std::invalid_argument("divided difference index must be positive");
    const Var vi{fam, i, 0}, vj{fam, i + 1, 0};
    const std::uint32_t ki = vi.key(), kj = vj.key();
    PolyBuilder out;
    for (const auto& [m, coef] : f.terms()) {
        unsigned a = 0, b = 0;
        std::vector<std::uint64_t> rest;
        for (auto p : m.packed()) {
            const auto key = static_cast<std::uint32_t>(p >> 32);
            if (key == ki)
                a = static_cast<unsigned>(p & 0xffffffffu);
            else if (key == kj)
                b = static_cast<unsigned>(p & 0xffffffffu);
            else
                rest.push_back(p);
        }
        if (a == b) continue;
        const Monomial r(std::move(rest));
        const unsigned lo = std::min(a, b), hi = std::max(a, b);
        const mpz_class c = a > b ? coef : mpz_class(-coef);
        for (unsigned k = 0; k < hi - lo; ++k) {
            const unsigned ei = a > b ? a - 1 - k : a + k;
            const unsigned ej = a > b ? b + k : b - 1 - k;
            out.add(r * Monomial::of(vi, ei) * Monomial::of(vj, ej), c);
        }
    }
    return out.finish();
}

Polynomial divided_difference_by_division(const Polynomial& f, int i, Family fam) {
    return exact_divide(f - swap_variables(f, i, fam), symbol(fam, i) - symbol(fam, i + 1));
}

Polynomial divided_difference_word(const Polynomial& f, const std::vector<int>& word, Family fam) {
    Polynomial r = f;
    for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = divided_difference(r, *it, fam);
    return r;
}

Polynomial divided_difference_w(const Polynomial& f, const Permutation& w, Family fam) {
    return divided_difference_word(f, w.reduced_word(), fam);
}

std::map<Permutation, Polynomial> schubert_family(const Polynomial& top, int n, Family fam, Side side) {
    std::map<Permutation, Polynomial> out;
    auto perms = Permutation::all(n);
    std::stable_sort(perms.begin(), perms.end(),
                     [](const Permutation& a, const Permutation& b) { return a.length() > b.length(); });
    for (const auto& u : perms) {
        if (u == Permutation::longest(n)) {
            out[u] = top;
            continue;
        }
        for (int i = 1; i < n; ++i) {
            const Permutation s = Permutation::simple(i, n);
            const Permutation up = side == Side::Right ? u * s : s * u;
            if (up.length() == u.length() + 1) {
                out[u] = divided_difference(out.at(up), i, fam);
                break;
            }
        }
    }
    return out;
}

Polynomial staircase_monomial(int n, Family fam) { return monomial_power(staircase(n), fam); }

Polynomial double_top(int n, Family xf, Family yf) {
    Polynomial r(1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) r *= symbol(xf, i) + symbol(yf, j);
    return r;
}

Polynomial classical_schubert(const Permutation& w, Family fam) {
    const int n = w.size();
    return divided_difference_w(staircase_monomial(n, fam), w.inverse() * Permutation::longest(n), fam);
}

Polynomial classical_double_schubert(const Permutation& w, Family xf, Family yf) {
    const int n = w.size();
    return divided_difference_w(double_top(n, xf, yf), w.inverse() * Permutation::longest(n), xf);
}

std::map<Permutation, Polynomial> classical_family(int n, Family fam) {
    return schubert_family(staircase_monomial(n, fam), n, fam, Side::Right);
}

std::map<Permutation, Polynomial> classical_double_family(int n, Family xf, Family yf) {
    return schubert_family(double_top(n, xf, yf), n, xf, Side::Right);
}

Polynomial monomial_power(const Composition& exps, Family fam) {
    Monomial m;
    for (std::size_t k = 0; k < exps.size(); ++k)
        if (exps[k] > 0) m = m * Monomial::of(Var{fam, static_cast<int>(k) + 1, 0}, static_cast<unsigned>(exps[k]));
    return Polynomial::from_monomial(m);
}

Composition exponents(const Monomial& m, int n, Family fam) {
    Composition e(idx(n), 0);
    for (std::size_t k = 0; k < m.size(); ++k) {
        const Var v = m.var(k);
        if (v.family != fam) continue;
        if (v.i > static_cast<int>(e.size())) e.resize(idx(v.i), 0);
        e[idx(v.i - 1)] = static_cast<int>(m.exp(k));
    }
    return e;
}

ExpansionTable::ExpansionTable(int n) : n_(n), index_(sub_staircase(n)) {
    const std::size_t size = index_.size();
    std::map<Composition, std::size_t> pos;
    for (std::size_t k = 0; k < size; ++k) pos[index_[k]] = k;
    // a[J][I]: coefficient of x^I in e_J.
    std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size)), inv(size, std::vector<mpq_class>(size));
    const auto e = [](int i, int k) { return elementary(i, Alphabet{Family::X, k}); };
    for (std::size_t r = 0; r < size; ++r) {
        const Polynomial ej = elementary_product(index_[r], n, e);
        for (const auto& [m, coef] : ej.terms()) {
            const auto it = pos.find(exponents(m, n));
            if (it == pos.end()) throw std::logic_error("elementary product leaves the staircase span");
            a[r][it->second] = coef;
        }
        inv[r][r] = 1;
    }
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t p = col;
        while (p < size && a[p][col] == 0) ++p;
        if (p == size) throw std::logic_error("elementary products are not a basis");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        const mpq_class piv = a[col][col];
        for (std::size_t k = 0; k < size; ++k) {
            a[col][k] /= piv;
            inv[col][k] /= piv;
        }
        for (std::size_t r = 0; r < size; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t k = 0; k < size; ++k) {
                a[r][k] -= f * a[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    // inv = a^{-1}: x^I = sum_J inv[I][J] e_J.
    for (std::size_t i = 0; i < size; ++i) {
        auto& row = rows_[index_[i]];
        for (std::size_t j = 0; j < size; ++j) {
            if (inv[i][j] == 0) continue;
            if (inv[i][j].get_den() != 1) throw std::logic_error("non-integral expansion coefficient");
            row.emplace_back(index_[j], inv[i][j].get_num());
        }
    }
}

const std::vector<std::pair<Composition, mpz_class>>& ExpansionTable::expand(const Composition& i) const {
    Composition key = i;
    key.resize(idx(n_), 0);
    const auto it = rows_.find(key);
    if (it == rows_.end() || !is_sub_staircase(i, n_)) throw NotSubStaircase("exponent " + composition_str(i) + " exceeds the staircase");
    return it->second;
}

mpz_class ExpansionTable::alpha(const Composition& i, const Composition& j) const {
    Composition key = j;
    key.resize(idx(n_), 0);
    for (const auto& [jj, a] : expand(i))
        if (jj == key) return a;
    return 0;
}

Polynomial quantize(const Polynomial& f, const ExpansionTable& table, const QuantumTable& qt) {
    const int n = table.rank();
    const Family fam = qt.alphabet().base;
    std::map<Composition, Polynomial> eq;
    PolyBuilder out;
    for (const auto& [xm, coef] : collect(f, family_mask({fam}))) {
        const Composition i = exponents(xm, n, fam);
        if (static_cast<int>(i.size()) > n || !is_sub_staircase(i, n))
            throw NotSubStaircase("monomial " + xm.str() + " is not under the staircase");
        for (const auto& [j, a] : table.expand(i)) {
            auto it = eq.find(j);
            if (it == eq.end())
                it = eq.emplace(j, elementary_product(j, n, [&qt](int a_, int k) { return qt.e(a_, k); })).first;
            out.add(it->second * coef, a);
        }
    }
    return out.finish();
}

Polynomial quantize(const Polynomial& f, int n, const QAlphabet& a) {
    return quantize(f, ExpansionTable(n), QuantumTable(a, n));
}

Polynomial quantum_schubert(const Permutation& w, const QAlphabet& a) {
    return quantize(classical_schubert(w, a.base), w.size(), a);
}

std::map<Permutation, Polynomial> quantum_family(int n, const QAlphabet& a) {
    const ExpansionTable table(n);
    const QuantumTable qt(a, n);
    std::map<Permutation, Polynomial> out;
    for (const auto& [w, s] : classical_family(n, a.base)) out[w] = quantize(s, table, qt);
    return out;
}

Polynomial length_additive_convolution(const Permutation& w, const std::map<Permutation, Polynomial>& a,
                                       const std::map<Permutation, Polynomial>& b) {
    PolyBuilder acc;
    const Permutation wi = w.inverse();
    const int lw = w.length();
    for (const auto& [u, au] : a) {
        const Permutation v = u * wi;
        if (u.length() + v.length() != lw) continue;
        acc.add_product(au, b.at(v));
    }
    return acc.finish();
}

Polynomial double_quantum_schubert(const Permutation& w, const QAlphabet& a, const QAlphabet& b) {
    const int n = w.size();
    return length_additive_convolution(w, quantum_family(n, a), quantum_family(n, b));
}

std::map<Permutation, Polynomial> double_quantum_family(int n, const QAlphabet& a, const QAlphabet& b) {
    const auto fa = quantum_family(n, a), fb = quantum_family(n, b);
    std::map<Permutation, Polynomial> out;
    for (const auto& w : Permutation::all(n)) out[w] = length_additive_convolution(w, fa, fb);
    return out;
}

Polynomial quantum_flagged_schur(const Composition& i, const QuantumTable& qt, HVariant v) {
    const int n = qt.rank();
    const int m = n - 1;
    std::vector<std::vector<Polynomial>> mat(idx(std::max(m, 0)), std::vector<Polynomial>(idx(std::max(m, 0))));
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            const int ia = a <= static_cast<int>(i.size()) ? i[idx(a - 1)] : 0;
            mat[idx(a - 1)][idx(b - 1)] = qt.h(ia - a + b, a, v);
        }
    return det(mat);
}

}  // namespace schubert
