#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/universal.hpp"

namespace schubert {

struct RankDeficiency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GaugeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiparam: e_m(t|X_n). Universal: Box_m(n) with g_i[0] = x_i. Classical: e_m(X_n).
enum class IdealKind { Multiparam, Universal, Classical };
const char* ideal_name(IdealKind k);
IdealKind parse_ideal(const std::string& s);

// e_m(t|X_n): sum over sets of disjoint pairs {i<j} in [n] of prod t_ij times e over the unused x.
Polynomial deformed_elementary(int m, int n);
// Box_m(n) with g_i[0] replaced by x_i.
Polynomial universal_generator(int m, int n);
// g_i[0] -> x_i for i <= n.
Assignment g0_to_x(int n);

struct IdealPresentation {
    int n = 0;
    IdealKind kind = IdealKind::Classical;
    std::vector<Polynomial> generators;  // generator m at position m-1
    std::uint32_t parameter_mask = 0;

    static IdealPresentation make(IdealKind kind, int n);
};

// f - normal_form(f) = sum_j multipliers[j] * generators[j].
struct Certificate {
    std::vector<Polynomial> multipliers;
};

class NormalFormTable {
public:
    explicit NormalFormTable(IdealPresentation ideal);

    const IdealPresentation& ideal() const { return ideal_; }
    int rank() const { return ideal_.n; }
    // G_k = sum_{j>=1} (-1)^{j+1} h_{d-j}(X_k) gen_j with d = n-k+1; leading term x_k^d.
    const std::vector<Polynomial>& groebner() const { return gb_; }
    Monomial delta() const { return delta_; }

    Polynomial normal_form(const Polynomial& f);
    Polynomial residue(const Polynomial& f);
    Polynomial pairing(const Polynomial& f, const Polynomial& g) { return residue(f * g); }
    Certificate certificate(const Polynomial& f) const;
    bool verify_certificate(const Polynomial& f, const Certificate& c);
    std::size_t cache_size() const { return memo_.size(); }

private:
    const Polynomial& nf_monomial(const Monomial& xm);

    IdealPresentation ideal_;
    std::vector<Polynomial> gb_;
    std::vector<Polynomial> tails_;  // x_k^d - G_k
    std::vector<std::vector<Polynomial>> gb_in_generators_;
    Monomial delta_;
    std::unordered_map<Monomial, Polynomial, MonomialHash> memo_;
};

bool is_standard(const Monomial& xm, int n);
// Permutations in (length, reversed code) order; monomials x^{code(w)} in the same order.
std::vector<Permutation> basis_order(int n);

using Matrix = std::vector<std::vector<Polynomial>>;

struct SchubertBasis {
    int n = 0;
    std::vector<Permutation> order;
    std::vector<Monomial> monomials;
    Matrix coefficients;  // row i: polynomial order[i] in the monomial basis
    Family_t polys;
};

// Rows of nf(f) for each f of the family in the monomial basis.
Matrix basis_coefficients(NormalFormTable& table, const Family_t& family, const std::vector<Permutation>& order,
                          const std::vector<Monomial>& monomials);
// Pairing matrix <S_u, S_v> over the given order.
Matrix pairing_matrix(NormalFormTable& table, const Family_t& family, const std::vector<Permutation>& order);
// Checks <S_u, S_v> = 1 if v = w0 u and 0 otherwise.
CheckResult orthonormality_check(NormalFormTable& table, const Family_t& family);

Family_t gram_schmidt_anchor(NormalFormTable& table);
SchubertBasis gram_schmidt_from_anchor(NormalFormTable& table, const Family_t& anchor);
SchubertBasis gram_schmidt_schubert(NormalFormTable& table);

std::map<Permutation, Polynomial> structure_constants(const Permutation& u, const Permutation& v, NormalFormTable& table,
                                                      const SchubertBasis& basis);

// <w(x^I)> = (-1)^{l(w)} w(<x^I>) with t_ij -> t_{w(i)w(j)} over all x^I of degree <= max_degree;
// drop_sign omits the sign.
CheckResult residue_symmetry_check(int n, int max_degree, bool drop_sign = false);
Polynomial act_on_multiparam(const Polynomial& f, const Permutation& w);

struct ConjectureReport {
    CheckResult gram_schmidt;  // Gram-Schmidt over the universal ideal reproduces S_w(g)
    CheckResult pairing;       // <Box_I, Box_J> matches the classical <e_I, e_J>
    std::vector<std::string> mismatches;
};
ConjectureReport conjecture_checks(int n);

}  // namespace schubert
