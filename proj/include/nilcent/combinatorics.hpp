#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcent {

struct NoValidInvolution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Jordan block sizes, nonincreasing. Blocks are numbered 1..n everywhere.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);  // "3,2,1"

    std::size_t n() const { return parts_.size(); }
    int N() const { return total_; }
    int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& parts() const { return parts_; }
    int odd_parts() const;

    std::string to_string() const;
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// All partitions of N, largest parts first.
std::vector<Partition> partitions_of(int N);

enum class Case { gl, sp, so };

Case parse_case(const std::string& text);
std::string case_name(Case c);
// +1 for so, -1 for sp. Meaningless for gl.
int epsilon(Case c);

// Throws NoValidInvolution if lambda is not the Jordan type of a nilpotent in k
// (sp needs even N and odd parts in pairs; so needs even parts in pairs).
void check_case(const Partition& lambda, Case c);
bool admissible(const Partition& lambda, Case c);

// i -> i', with the pairing of equal adjacent parts done left to right.
class Involution {
public:
    Involution() = default;
    explicit Involution(std::vector<int> image) : image_(std::move(image)) {}
    int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
    std::size_t size() const { return image_.size(); }
    bool fixed(int i) const { return (*this)(i) == i; }

private:
    std::vector<int> image_;
};

Involution involution(const Partition& lambda, Case c);

// d_r for r = 1..N (entry r-1 of the result).
std::vector<int> degree_sequence(const Partition& lambda);

// All mu with 0 <= mu_i <= lambda_i, |mu| = r and exactly d nonzero entries,
// in lexicographic order.
std::vector<std::vector<int>> compositions(const Partition& lambda, int r, int d);

// Number of generators: N (gl), N/2 (sp), (N + #odd)/2 (so).
int invariant_count(const Partition& lambda, Case c);
// Which x_r survive as generators: every r (gl), r even (sp), r + d_r even (so).
std::vector<int> generator_indices(const Partition& lambda, Case c);

int permutation_sign(const std::vector<int>& w);

// Unordered set partitions of {0..m-1}; each block ascending, blocks ordered
// by their least element.
std::vector<std::vector<std::vector<int>>> set_partitions(int m);

}  // namespace nilcent
