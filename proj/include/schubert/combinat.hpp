#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace schubert {

struct InvalidPermutation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotGrassmannian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ShapeTooBig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSubStaircase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotContained : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Partition = std::vector<int>;
using Composition = std::vector<int>;

// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation longest(int n);
    // Adjacent transposition s_i in S_n.
    static Permutation simple(int i, int n);
    static Permutation from_code(const Composition& code);
    // Digit string "2314" or comma-separated "10,2,...".
    static Permutation parse(const std::string& text);
    // All of S_n in lexicographic order of one-line notation.
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

    int length() const;
    Permutation inverse() const;
    Composition code() const;
    std::vector<int> descents() const;
    // Leftmost-descent reduced word: w = s_{a_1} s_{a_2} ... s_{a_l}.
    std::vector<int> reduced_word() const;
    bool is_identity() const;
    std::string str() const;

    // (u*v)(i) = u(v(i)).
    friend Permutation operator*(const Permutation& u, const Permutation& v);
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return a.w_ != b.w_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

private:
    std::vector<int> w_;
};

Permutation from_word(const std::vector<int>& word, int n);
// All reduced words of w.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

struct Grassmannian {
    Partition shape;
    int descent = 0;
};
Grassmannian grassmannian(const Permutation& w);
Permutation grassmannian_perm(const Partition& shape, int descent, int n);
bool is_grassmannian(const Permutation& w);

Partition normalize(Partition p);
int size_of(const Partition& p);
Partition conjugate(const Partition& p);
Partition complement(const Partition& p, int n, int m);
bool contains(const Partition& lambda, const Partition& mu);
struct Frobenius {
    std::vector<int> arms;
    std::vector<int> legs;
    friend bool operator==(const Frobenius& a, const Frobenius& b) { return a.arms == b.arms && a.legs == b.legs; }
};
Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);
// Partitions with at most rows parts, each at most cols.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::string partition_str(const Partition& p);
Partition parse_partition(const std::string& text);

Composition staircase(int n);
bool is_sub_staircase(const Composition& c, int n);
// All I with I_k <= n-k, k = 1..n, in lexicographic order.
std::vector<Composition> sub_staircase(int n);
std::string composition_str(const Composition& c);
Composition parse_composition(const std::string& text);

}  // namespace schubert
