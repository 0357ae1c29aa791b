#pragma once

#include <map>
#include <string>
#include <vector>

#include "schubert/schubert.hpp"

namespace schubert {

using Family_t = std::map<Permutation, Polynomial>;

// Renames c_i(j) of one double-indexed family to another (c -> d, c -> b).
Polynomial rename_family(const Polynomial& f, Family from, Family to);
// Substitutes s -> (-1)^{weight} s on a family (the tilde map b -> b~, z -> -z).
Polynomial sign_twist(const Polynomial& f, Family fam);

Polynomial universal_top(int n, Family cf = Family::C, Family yf = Family::Y);
Family_t universal_double_y_family(int n, Family cf = Family::C, Family yf = Family::Y);
Family_t universal_single_family(int n, Family cf = Family::C);
Polynomial universal_double_poly(const Permutation& w);
Polynomial universal_single(const Permutation& w, Family cf = Family::C);
// S_w(c,d) by length-additive convolution of single families in cf and df.
Family_t universal_double_family(int n, Family cf = Family::C, Family df = Family::D);
Polynomial universal_double(const Permutation& w);
// S_w(c,d) restricted to Grassmannian w; throws NotGrassmannian otherwise.
Polynomial universal_factorial_schur(const Permutation& w);

// c_J = prod_k c_{j_k}(n-k).
Polynomial c_product(const Composition& j, int n, Family cf = Family::C);
Polynomial universal_S_I(const Composition& i, const ExpansionTable& table, Family cf = Family::C);
Polynomial universal_S_I(const Composition& i, int n, Family cf = Family::C);

Polynomial universal_elementary_pair(int m, int k, int l);
Polynomial lemma1_lhs(int n);
Polynomial lemma1_rhs(int n);
CheckResult lemma1_check(int n);

// Coefficients of det(t I_k + A_k): entry j is the coefficient of t^{k-j}.
std::vector<Polynomial> box_coefficients(int k);
Polynomial box(int i, int k);
// Box_k(t, g) with t replaced by a polynomial.
Polynomial box_at(int k, const Polynomial& t);
Polynomial box_product(const Composition& i, int n);
inline Polynomial second_form_elementary(int i, int k) { return box(i, k); }
inline Polynomial second_form_products(const Composition& i, int n) { return box_product(i, n); }
Assignment c_to_box(int n, Family cf = Family::C);
Family_t second_form_family(int n);
Polynomial second_form_schubert(const Permutation& w);
Polynomial second_form_top_double(int n, Family yf = Family::Y);
Family_t second_form_double_family(int n, Family zf = Family::Z);
Polynomial second_form_double(const Permutation& w, Family zf = Family::Z);
Polynomial second_form_top_expansion(int n, Family yf = Family::Y);
// g_i[0] -> x_i, g_i[1] -> q_i (if quantum), higher g -> 0.
Assignment box_specialization(int n, bool quantum);

// Default row flag for the Grassmannian determinant: last descent of w^{-1} in every row.
std::vector<int> default_grassmannian_flag(const Permutation& w);
Polynomial grassmannian_determinant(const Permutation& w, const std::vector<int>& flag, const QuantumTable& yt,
                                    HVariant v = HVariant::Capped);
Polynomial grassmannian_determinant(const Permutation& w, bool quantum);
struct FlagValidation {
    bool pass = true;
    std::vector<int> flag;
    bool fitted = false;
    std::string note;
};
// Checks the q'=0 determinant against S_w(c,y); searches for a flag if the default fails.
FlagValidation validate_grassmannian_flag(const Permutation& w);

// Ninth-variation identification.
Polynomial grassmannian_e_form(const Permutation& w);
Polynomial grassmannian_h_form(const Permutation& w);
CheckResult proposition1_check(const Permutation& w);

enum class CauchyForm { Thm3, Cor2_54, Cor2_55, Cor3, Thm2, Thm1, Cor1_45, Cor1_46, Midform, Vanishing, Specialization };
const char* cauchy_form_name(CauchyForm f);
// Runs the chosen identity over all relevant w in S_n.
CheckResult cauchy_universal(int n, CauchyForm form);

// Second-form Cauchy identity against S_w(y), or against S_w(y,-z) when with_z.
CheckResult second_form_cauchy_check(int n, bool with_z);
CheckResult box_expansion_check(int n);

}  // namespace schubert
