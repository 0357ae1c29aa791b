#pragma once

#include <map>
#include <vector>

#include "schubert/combinat.hpp"
#include "schubert/poly.hpp"
#include "schubert/quantum.hpp"
#include "schubert/schur.hpp"

namespace schubert {

// Swaps variables i and i+1 of a single-indexed family.
Polynomial swap_variables(const Polynomial& f, int i, Family fam = Family::X);
// (f - s_i f) / (v_i - v_{i+1}) computed monomial by monomial.
Polynomial divided_difference(const Polynomial& f, int i, Family fam = Family::X);
// Same operator through exact polynomial division.
Polynomial divided_difference_by_division(const Polynomial& f, int i, Family fam = Family::X);
// d_{a_1} ... d_{a_l} f, the rightmost operator applied first.
Polynomial divided_difference_word(const Polynomial& f, const std::vector<int>& word, Family fam = Family::X);
Polynomial divided_difference_w(const Polynomial& f, const Permutation& w, Family fam = Family::X);

// How the family is generated from the top polynomial.
enum class Side {
    Right,  // S_{u} = d_i S_{u s_i}, for operators on the first argument
    Left    // S_{u} = d_i S_{s_i u}, for operators on the second argument
};
std::map<Permutation, Polynomial> schubert_family(const Polynomial& top, int n, Family fam, Side side);

Polynomial staircase_monomial(int n, Family fam = Family::X);
// Product of (x_i + y_j) over i + j <= n.
Polynomial double_top(int n, Family xf = Family::X, Family yf = Family::Y);

Polynomial classical_schubert(const Permutation& w, Family fam = Family::X);
Polynomial classical_double_schubert(const Permutation& w, Family xf = Family::X, Family yf = Family::Y);
std::map<Permutation, Polynomial> classical_family(int n, Family fam = Family::X);
std::map<Permutation, Polynomial> classical_double_family(int n, Family xf = Family::X, Family yf = Family::Y);

// e_J(X_{n-1}) = prod_k e_{j_k}(X_{n-k}) with entries from a lookup e(i, k).
template <class E>
Polynomial elementary_product(const Composition& j, int n, const E& e) {
    Polynomial r(1);
    for (int k = 1; k <= n - 1 && k <= static_cast<int>(j.size()); ++k) r *= e(j[static_cast<std::size_t>(k - 1)], n - k);
    return r;
}

// x^I = sum_J alpha_{I,J} e_J(X_{n-1}) for I, J under the staircase.
class ExpansionTable {
public:
    explicit ExpansionTable(int n);
    int rank() const { return n_; }
    const std::vector<Composition>& index() const { return index_; }
    const std::vector<std::pair<Composition, mpz_class>>& expand(const Composition& i) const;
    mpz_class alpha(const Composition& i, const Composition& j) const;

private:
    int n_;
    std::vector<Composition> index_;
    std::map<Composition, std::vector<std::pair<Composition, mpz_class>>> rows_;
};

Polynomial monomial_power(const Composition& exps, Family fam = Family::X);
// Exponent vector (length n) of the fam-part of a monomial.
Composition exponents(const Monomial& m, int n, Family fam = Family::X);

// Linear map x^I -> sum_J alpha_{I,J} e^q_J on the sub-staircase span.
Polynomial quantize(const Polynomial& f, const ExpansionTable& table, const QuantumTable& qt);
Polynomial quantize(const Polynomial& f, int n, const QAlphabet& a = kXq);

Polynomial quantum_schubert(const Permutation& w, const QAlphabet& a = kXq);
std::map<Permutation, Polynomial> quantum_family(int n, const QAlphabet& a = kXq);

// Sum over u with l(u) + l(u w^{-1}) = l(w) of A_u B_{u w^{-1}}.
Polynomial length_additive_convolution(const Permutation& w, const std::map<Permutation, Polynomial>& a,
                                       const std::map<Permutation, Polynomial>& b);
Polynomial double_quantum_schubert(const Permutation& w, const QAlphabet& a, const QAlphabet& b);
std::map<Permutation, Polynomial> double_quantum_family(int n, const QAlphabet& a, const QAlphabet& b);

// s^q_I = det(h^q_{i_a - a + b}(X_a)), a, b = 1..n-1.
Polynomial quantum_flagged_schur(const Composition& i, const QuantumTable& qt, HVariant v = HVariant::Capped);

}  // namespace schubert
