#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "nilcent/centralizer.hpp"

namespace testutil {

using namespace nilcent;

inline Vec unit(Field f, std::size_t n, std::size_t k) {
    Vec v = zero_vec(f, n);
    v[k] = Scalar(f, 1);
    return v;
}

// Every admissible (lambda, case) with N <= max_n.
inline std::vector<std::pair<Partition, Case>> settings_up_to(int max_n, bool with_gl = true) {
    std::vector<std::pair<Partition, Case>> out;
    for (int n = 1; n <= max_n; ++n)
        for (const auto& lam : partitions_of(n))
            for (Case c : {Case::gl, Case::sp, Case::so})
                if ((with_gl || c != Case::gl) && admissible(lam, c)) out.emplace_back(lam, c);
    return out;
}

inline Vec from_ints(Field f, const std::vector<std::int64_t>& xs) {
    Vec v;
    for (auto x : xs) v.push_back(Scalar(f, x));
    return v;
}

}  // namespace testutil
