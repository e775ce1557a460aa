#include "nilcent/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace nilcent {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition: " + text);
        }
        if (used != item.size()) throw std::invalid_argument("bad partition: " + text);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::odd_parts() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x % 2; }));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

std::vector<Partition> partitions_of(int N) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(N, N);
    return out;
}

Case parse_case(const std::string& text) {
    if (text == "gl") return Case::gl;
    if (text == "sp") return Case::sp;
    if (text == "so") return Case::so;
    throw std::invalid_argument("bad case: " + text + " (expected gl, sp or so)");
}

std::string case_name(Case c) {
    switch (c) {
        case Case::gl: return "gl";
        case Case::sp: return "sp";
        case Case::so: return "so";
    }
    return "?";
}

int epsilon(Case c) { return c == Case::sp ? -1 : 1; }

namespace {

// parts that must come in pairs: eps * (-1)^lambda_i = +1
bool paired_part(int part, Case c) {
    int sign = (part % 2 == 0) ? 1 : -1;
    return epsilon(c) * sign == 1;
}

}  // namespace

void check_case(const Partition& lambda, Case c) {
    if (c == Case::gl) return;
    if (c == Case::sp && lambda.N() % 2 != 0)
        throw NoValidInvolution("sp needs N even, got " + lambda.to_string());
    const auto& parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size();) {
        std::size_t e = k;
        while (e < parts.size() && parts[e] == parts[k]) ++e;
        if (paired_part(parts[k], c) && (e - k) % 2 != 0)
            throw NoValidInvolution("part " + std::to_string(parts[k]) + " has odd multiplicity in " +
                                    lambda.to_string() + " for " + case_name(c));
        k = e;
    }
}

bool admissible(const Partition& lambda, Case c) {
    try {
        check_case(lambda, c);
        return true;
    } catch (const NoValidInvolution&) {
        return false;
    }
}

Involution involution(const Partition& lambda, Case c) {
    if (c == Case::gl) throw std::invalid_argument("involution needs sp or so");
    check_case(lambda, c);
    const int n = static_cast<int>(lambda.n());
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (!paired_part(lambda[i], c)) {
            image[static_cast<std::size_t>(i - 1)] = i;
        } else if (image[static_cast<std::size_t>(i - 1)] == 0) {
            image[static_cast<std::size_t>(i - 1)] = i + 1;
            image[static_cast<std::size_t>(i)] = i;
        }
    }
    return Involution(std::move(image));
}

std::vector<int> degree_sequence(const Partition& lambda) {
    std::vector<int> d;
    for (int i = 1; i <= static_cast<int>(lambda.n()); ++i)
        for (int k = 0; k < lambda[i]; ++k) d.push_back(i);
    return d;
}

std::vector<std::vector<int>> compositions(const Partition& lambda, int r, int d) {
    std::vector<std::vector<int>> out;
    const std::size_t n = lambda.n();
    std::vector<int> mu(n, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int left, int nonzero) {
        if (k == n) {
            if (left == 0 && nonzero == d) out.push_back(mu);
            return;
        }
        for (int v = 0; v <= std::min(left, lambda.parts()[k]); ++v) {
            mu[k] = v;
            rec(k + 1, left - v, nonzero + (v > 0));
        }
        mu[k] = 0;
    };
    rec(0, r, 0);
    return out;
}

std::vector<int> generator_indices(const Partition& lambda, Case c) {
    auto d = degree_sequence(lambda);
    std::vector<int> out;
    for (int r = 1; r <= lambda.N(); ++r) {
        bool keep = c == Case::gl || (c == Case::sp && r % 2 == 0) ||
                    (c == Case::so && (r + d[static_cast<std::size_t>(r - 1)]) % 2 == 0);
        if (keep) out.push_back(r);
    }
    return out;
}

int invariant_count(const Partition& lambda, Case c) {
    switch (c) {
        case Case::gl: return lambda.N();
        case Case::sp: return lambda.N() / 2;
        case Case::so: return (lambda.N() + lambda.odd_parts()) / 2;
    }
    return 0;
}

int permutation_sign(const std::vector<int>& w) {
    int sign = 1;
    std::vector<bool> seen(w.size(), false);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (seen[k]) continue;
        std::size_t len = 0;
        for (std::size_t c = k; !seen[c]; c = static_cast<std::size_t>(w[c])) {
            seen[c] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<std::vector<std::vector<int>>> set_partitions(int m) {
    // restricted growth strings
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int k, int blocks) {
        if (k == m) {
            std::vector<std::vector<int>> part(static_cast<std::size_t>(blocks));
            for (int x = 0; x < m; ++x) part[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])].push_back(x);
            out.push_back(std::move(part));
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            a[static_cast<std::size_t>(k)] = b;
            rec(k + 1, std::max(blocks, b + 1));
        }
    };
    if (m == 0) return {{}};
    rec(0, 0);
    return out;
}

}  // namespace nilcent
