#include "ekr/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ekr {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;
using Memo = std::map<Key, Int>;

// Recursion of the Murnaghan-Nakayama rule: strip the largest remaining class
// part, sum over border strips of that size with sign (-1)^{leg length}.
Int mn_rec(const Partition& lambda, const Partition& rho, Memo* memo) {
    if (lambda.empty()) return 1;  // rho is empty too (sizes agree)
    Key key;
    if (memo) {
        key = {lambda.parts(), rho.parts()};
        if (auto it = memo->find(key); it != memo->end()) return it->second;
    }
    const int strip = rho.parts().front();
    std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
    Partition rest(std::move(rest_parts));

    Int total = 0;
    for (const auto& removal : rim_hooks(lambda, strip)) {
        Int sub = mn_rec(removal.remaining, rest, memo);
        if (removal.leg_length % 2)
            total -= sub;
        else
            total += sub;
    }
    if (memo) (*memo)[key] = total;
    return total;
}

Int mn_checked(const Partition& lambda, const Partition& rho, Memo* memo) {
    if (lambda.n() != rho.n())
        throw std::invalid_argument("mn_character: |lambda| != |rho|");
    if (lambda.n() < 1)
        throw std::invalid_argument("mn_character: n must be positive");
    return mn_rec(lambda, rho, memo);
}

int par(int e) { return ((e % 2) + 2) % 2 ? -1 : 1; }  // (-1)^e

// Builds a Table 3 shape from a raw row; out-of-range instantiations are kept
// with valid_shape = false rather than guessed at.
Table3Row make_row(int n, std::string family, int k, std::vector<int> raw,
                   std::array<int, 6> vals) {
    Table3Row row;
    row.family = std::move(family);
    row.k = k;
    bool ok = true;
    int sum = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1 || (i > 0 && raw[i - 1] < raw[i])) ok = false;
        sum += raw[i];
    }
    ok = ok && sum == n;
    row.valid_shape = ok;
    if (ok) row.shape = Partition(std::move(raw));
    for (int i = 0; i < 6; ++i) row.values[i] = vals[i];
    return row;
}

std::vector<int> with_ones(std::vector<int> head, int ones) {
    for (int i = 0; i < ones; ++i) head.push_back(1);
    return head;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& rho) {
    Memo memo;
    return mn_checked(lambda, rho, &memo);
}

Int mn_character_nomemo(const Partition& lambda, const Partition& rho) {
    return mn_checked(lambda, rho, nullptr);
}

const Int& CharacterTable::at(const Partition& lambda, const Partition& rho) const {
    auto r = std::find(rows.begin(), rows.end(), lambda);
    auto c = std::find(cols.begin(), cols.end(), rho);
    if (r == rows.end() || c == cols.end())
        throw std::invalid_argument("CharacterTable::at: label not in table");
    return entries[r - rows.begin()][c - cols.begin()];
}

CharacterTable character_table(int n) {
    if (n < 1) throw std::invalid_argument("character_table: n must be positive");
    if (n > kTableCap)
        throw std::length_error("character_table: n exceeds the n<=16 cap");
    CharacterTable t;
    t.n = n;
    t.rows = enumerate_partitions(n);
    t.cols = t.rows;
    t.entries.assign(t.rows.size(), std::vector<Int>(t.cols.size()));
    const int nrows = static_cast<int>(t.rows.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < nrows; ++i) {
        Memo memo;  // shared across the row's classes
        for (size_t j = 0; j < t.cols.size(); ++j)
            t.entries[i][j] = mn_rec(t.rows[i], t.cols[j], &memo);
    }
    return t;
}

std::vector<Partition> low_dim_partitions(int n) {
    if (n < 13)
        throw std::invalid_argument("low_dim_partitions: requires n >= 13");
    return {
        Partition{n},
        Partition(with_ones({}, n)),
        Partition{n - 1, 1},
        Partition(with_ones({2}, n - 2)),
        Partition{n - 2, 2},
        Partition(with_ones({2, 2}, n - 4)),
        Partition{n - 2, 1, 1},
        Partition(with_ones({3}, n - 3)),
    };
}

Table3 symbolic_table3(int n) {
    if (n < 13) throw std::invalid_argument("symbolic_table3: requires n >= 13");
    Table3 t;
    t.n = n;
    t.column_classes = {Partition{n},           Partition{n - 1, 1},
                        Partition{n - 2, 2},    Partition{n - 3, 3},
                        Partition{n - 3, 2, 1}, Partition{n - 4, 3, 1}};
    auto& rows = t.rows;
    auto add = [&](std::string fam, int k, std::vector<int> shape,
                   std::array<int, 6> v) {
        rows.push_back(make_row(n, std::move(fam), k, std::move(shape), v));
    };

    // Columns in the order (n), (n-1,1), (n-2,2), (n-3,3), (n-3,2,1), (n-4,3,1).
    add("[n]", -1, {n}, {1, 1, 1, 1, 1, 1});
    add("[n-1,1]", -1, {n - 1, 1}, {-1, 0, -1, -1, 0, 0});
    add("[n-2,2]", -1, {n - 2, 2}, {0, -1, 1, 0, 0, -1});
    add("[n-2,1^2]", -1, {n - 2, 1, 1}, {1, 0, 0, 1, -1, 0});
    add("[n-3,3]", -1, {n - 3, 3}, {0, 0, -1, 1, 0, 1});
    add("[n-3,2,1]", -1, {n - 3, 2, 1}, {0, 0, 0, -1, 1, 0});
    add("[n-3,1^3]", -1, {n - 3, 1, 1, 1}, {-1, 0, 0, 0, 0, -1});
    add("[n-4,2^2]", -1, {n - 4, 2, 2}, {0, 0, -1, 1, -1, 0});
    add("[n-4,2,1^2]", -1, {n - 4, 2, 1, 1}, {0, -1, 0, 0, 0, 1});
    add("[n-5,2^2,1]", -1, {n - 5, 2, 2, 1}, {0, 0, 1, 0, 0, -1});
    add("[n-6,2^3]", -1, {n - 6, 2, 2, 2}, {0, 0, 0, -1, 1, -1});

    for (int k = 0; k < n - 8; ++k)  // printed range 0 <= k < n-8
        add("[n-k-4,4,1^k]", k, with_ones({n - k - 4, 4}, k),
            {0, 0, 0, par(k + 1), par(k + 1), 0});
    for (int k = 0; k <= n - 10; ++k)
        add("[n-k-5,5,1^k]", k, with_ones({n - k - 5, 5}, k),
            {0, 0, 0, 0, 0, par(k + 1)});
    for (int k = 0; k <= n - 8; ++k)
        add("[n-k-5,3,2,1^k]", k, with_ones({n - k - 5, 3, 2}, k),
            {0, 0, 0, par(k + 3), 0, 0});
    for (int k = 1; k <= n - 8; ++k)  // printed range 0 < k <= n-8
        add("[n-k-6,2^3,1^k]", k, with_ones({n - k - 6, 2, 2, 2}, k),
            {0, 0, 0, par(k + 3), par(k + 4), 0});
    for (int k = 0; k <= n - 9; ++k)
        add("[n-k-6,3^2,1^k]", k, with_ones({n - k - 6, 3, 3}, k),
            {0, 0, 0, 0, 0, par(k + 1)});
    for (int k = 0; k <= n - 10; ++k)
        add("[n-k-8,2^4,1^k]", k, with_ones({n - k - 8, 2, 2, 2, 2}, k),
            {0, 0, 0, 0, 0, par(k + 4)});
    for (int k = 4; k <= n - 5; ++k)
        add("[n-k,1^k]", k, with_ones({n - k}, k), {par(k), 0, 0, 0, 0, 0});
    for (int k = 3; k <= n - 6; ++k)
        add("[n-k-2,2,1^k]", k, with_ones({n - k - 2, 2}, k),
            {0, par(k + 1), 0, 0, 0, 0});

    add("[4^2,1^{n-8}]", -1, with_ones({4, 4}, n - 8),
        {0, 0, 0, par(n - 7), par(n - 7), par(n - 6)});
    add("[4,3,1^{n-7}]", -1, with_ones({4, 3}, n - 7),
        {0, 0, par(n - 6), 0, 0, par(n - 5)});
    add("[4,2,1^{n-6}]", -1, with_ones({4, 2}, n - 6),
        {0, par(n - 5), 0, 0, 0, par(n - 4)});
    add("[3^2,1^{n-6}]", -1, with_ones({3, 3}, n - 6),
        {0, 0, par(n - 5), par(n - 4), par(n - 6), 0});
    add("[4,1^{n-4}]", -1, with_ones({4}, n - 4),
        {par(n - 4), 0, 0, 0, 0, par(n - 4)});
    add("[3,2,1^{n-5}]", -1, with_ones({3, 2}, n - 5),
        {0, par(n - 4), 0, par(n - 3), par(n - 5), 0});
    add("[2^3,1^{n-6}]", -1, with_ones({2, 2, 2}, n - 6),
        {0, par(n - 5), par(n - 3), par(n - 2), 0, par(n - 3)});
    add("[3,1^{n-3}]", -1, with_ones({3}, n - 3),
        {par(n - 3), 0, 0, par(n - 2), par(n - 4), 0});
    add("[2^2,1^{n-4}]", -1, with_ones({2, 2}, n - 4),
        {0, par(n - 3), par(n - 4), 0, 0, par(n - 4)});
    add("[2,1^{n-2}]", -1, with_ones({2}, n - 2),
        {par(n - 2), 0, par(n - 3), par(n - 1), 0, 0});
    add("[1^n]", -1, with_ones({}, n),
        {par(n - 1), par(n - 2), par(n - 2), par(n - 2), par(n - 3), par(n - 1)});

    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i].valid_shape && rows[j].valid_shape &&
                rows[i].shape == rows[j].shape)
                t.collisions.emplace_back(rows[i].family, rows[j].family);
    return t;
}

}  // namespace ekr
