#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

// Symbol families in their fixed total order.
enum class Family : std::uint8_t { X, Y, Z, Q, QP, QPP, C, D, B, T, G, H };

const char* family_name(Family f);
bool family_is_double_indexed(Family f);

struct Var {
    Family family = Family::X;
    int i = 0;
    int j = 0;

    std::uint32_t key() const;
    static Var from_key(std::uint32_t k);
    int weight() const;
    std::string str() const;

    friend bool operator==(const Var& a, const Var& b) { return a.key() == b.key(); }
    friend bool operator<(const Var& a, const Var& b) { return a.key() < b.key(); }
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotSquare : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Product of variable powers, stored as (key << 32 | exponent) sorted by key.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint64_t> packed) : f_(std::move(packed)) {}
    static Monomial of(const Var& v, unsigned e = 1);

    bool is_one() const { return f_.empty(); }
    std::size_t size() const { return f_.size(); }
    Var var(std::size_t k) const { return Var::from_key(static_cast<std::uint32_t>(f_[k] >> 32)); }
    unsigned exp(std::size_t k) const { return static_cast<unsigned>(f_[k] & 0xffffffffu); }
    unsigned exponent_of(const Var& v) const;
    int weight() const;
    unsigned total_degree() const;

    Monomial operator*(const Monomial& o) const;
    // Returns false if o does not divide *this.
    bool divide(const Monomial& o, Monomial& out) const;
    Monomial restrict_to(std::uint32_t family_mask, bool keep) const;

    const std::vector<std::uint64_t>& packed() const { return f_; }
    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.f_ != b.f_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

private:
    std::vector<std::uint64_t> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// Lexicographic monomial order over the variable order (a genuine term order).
bool lex_less(const Monomial& a, const Monomial& b);
// Graded (by weight) then lexicographic; the canonical print order, descending.
bool graded_lex_less(const Monomial& a, const Monomial& b);

std::uint32_t family_mask(std::initializer_list<Family> fams);

using Term = std::pair<Monomial, mpz_class>;

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);
    Polynomial(const mpz_class& c);
    static Polynomial from_var(const Var& v);
    static Polynomial from_monomial(const Monomial& m, const mpz_class& c = 1);
    // Builds from arbitrary terms, merging duplicates and dropping zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }
    mpz_class constant_term() const;
    mpz_class coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpz_class& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const mpz_class& c) { return a *= c; }
    friend Polynomial operator*(const mpz_class& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(long c, Polynomial a) { return a *= mpz_class(c); }
    friend Polynomial operator*(Polynomial a, long c) { return a *= mpz_class(c); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const;
    Polynomial mul_monomial(const Monomial& m) const;

    // Weighted degree bookkeeping.
    bool is_homogeneous() const;
    int max_weight() const;
    int min_weight() const;
    // True if some variable of the listed families occurs.
    bool involves(std::uint32_t family_mask) const;
    std::vector<Var> variables() const;

    std::string str() const;

private:
    std::vector<Term> t_;  // sorted by Monomial::operator<
    friend class PolyBuilder;
};

// Accumulates terms and finalizes into canonical form.
class PolyBuilder {
public:
    void add(const Monomial& m, const mpz_class& c);
    void add(const Polynomial& p, const mpz_class& scale = 1);
    void add_product(const Polynomial& a, const Polynomial& b);
    Polynomial finish();

private:
    std::vector<Term> buf_;
};

// Symbol constructors; folding of trivial symbols happens here.
Polynomial x(int i);
Polynomial y(int i);
Polynomial z(int i);
Polynomial q(int i);
Polynomial qp(int i);
Polynomial qpp(int i);
Polynomial c(int i, int j);
Polynomial d(int i, int j);
Polynomial b(int i, int j);
Polynomial t(int i, int j);  // unordered pair, stored with the smaller index first
Polynomial g(int i, int j);
Polynomial h(int i, int k);
Polynomial symbol(Family f, int i, int j = 0);

using Assignment = std::map<Var, Polynomial>;

Polynomial substitute(const Polynomial& f, const Assignment& a);
// Renames every variable through fn; monomials that collide are merged.
Polynomial map_variables(const Polynomial& f, const std::function<Var(const Var&)>& fn);
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);
Polynomial coefficient_of(const Polynomial& f, const Monomial& m, std::uint32_t in_families);
// Collects f as Σ coefficient·m over monomials m in the given families.
std::map<Monomial, Polynomial> collect(const Polynomial& f, std::uint32_t in_families);
Polynomial det(const std::vector<std::vector<Polynomial>>& m);
Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m);
Polynomial det_bareiss(const std::vector<std::vector<Polynomial>>& m);

// Outcome of an exact identity check; witness is lhs - rhs.
struct CheckResult {
    bool pass = true;
    Polynomial witness;
    std::string detail;
};
CheckResult compare(const Polynomial& lhs, const Polynomial& rhs, const std::string& detail = "");
// Merges b into a: a fails if b fails, keeping the first witness.
void accumulate(CheckResult& a, const CheckResult& b);

std::string serialize(const Polynomial& f);
Polynomial parse(const std::string& text);
std::string to_json(const Polynomial& f);
Polynomial from_json(const std::string& text);

}  // namespace schubert
