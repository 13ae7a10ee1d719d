#include "ekr/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ekr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        n_ += parts_[i];
    }
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int col = 0; col < (parts_.empty() ? 0 : parts_[0]); ++col) {
        int height = 0;
        for (int p : parts_)
            if (p > col) ++height;
        conj.push_back(height);
    }
    return Partition(std::move(conj));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        acc.push_back(k);
        enumerate_rec(remaining - k, k, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

Int conjugacy_class_size(const Partition& rho) {
    if (rho.empty())
        throw std::invalid_argument("conjugacy_class_size: empty partition rejected");
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    Int z = 1;
    for (auto [k, m] : mult) {
        Int kk;
        mpz_ui_pow_ui(kk.get_mpz_t(), static_cast<unsigned long>(k),
                      static_cast<unsigned long>(m));
        z *= kk * factorial(m);
    }
    return factorial(rho.n()) / z;
}

Int hook_length_degree(const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("hook_length_degree: empty partition rejected");
    const auto& parts = lambda.parts();
    Partition conj = lambda.conjugate();
    Int denom = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = conj.parts()[j] - i - 1;
            denom *= arm + leg + 1;
        }
    return factorial(lambda.n()) / denom;
}

std::vector<RimHookRemoval> rim_hooks(const Partition& lambda, int k) {
    if (lambda.empty()) throw std::invalid_argument("rim_hooks: empty partition");
    if (k < 1) throw std::invalid_argument("rim_hooks: k must be positive");
    const auto& p = lambda.parts();
    const int r = lambda.rows();
    std::vector<RimHookRemoval> out;

    // A border strip spanning rows i..j leaves row t at p[t+1]-1 cells for
    // i <= t < j and row j at p[i]-k+(j-i) cells; valid iff that sequence is
    // again a partition nested between the untouched rows.
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            std::vector<int> rows(p);
            for (int t = i; t < j; ++t) rows[t] = p[t + 1] - 1;
            long removed_above = 0;
            for (int t = i; t < j; ++t) removed_above += p[t] - rows[t];
            long last = p[j] - (k - removed_above);
            if (last < 0) continue;
            rows[j] = static_cast<int>(last);
            if (rows[j] > (j == i ? p[i] - 1 : rows[j - 1])) continue;
            if (j + 1 < r && rows[j] < p[j + 1]) continue;
            if (p[j] - rows[j] < 1) continue;  // strip must reach row j

            std::vector<std::pair<int, int>> cells;
            for (int t = i; t <= j; ++t)
                for (int c = rows[t]; c < p[t]; ++c) cells.emplace_back(t, c);

            std::vector<int> trimmed;
            for (int v : rows)
                if (v > 0) trimmed.push_back(v);
            out.push_back(RimHookRemoval{Partition(std::move(trimmed)), j - i,
                                         std::move(cells)});
        }
    }
    return out;
}

Partition cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> hit(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v])
            throw std::invalid_argument("cycle_type: input is not a permutation");
        hit[v] = 1;
    }
    std::vector<int> lengths;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

}  // namespace ekr
