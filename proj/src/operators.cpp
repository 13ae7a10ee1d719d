#include "ekr/operators.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "ekr/characters.hpp"
#include "ekr/perms.hpp"

namespace ekr {

namespace {

size_t fact(int n) {
    size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= size_t(i);
    return f;
}

void check_cap(int n, const char* who) {
    if (n < 1 || n > kExplicitCap)
        throw std::length_error(std::string(who) +
                                ": explicit operators are capped at n <= 6");
}

// cycle-type class id of every product h g^{-1}, indexed [g][h]
std::vector<int> class_of_product(int n, const std::vector<Partition>& classes) {
    const auto perms = all_permutations(n);
    const auto m = perms.size();
    std::map<Partition, int> class_id;
    for (size_t c = 0; c < classes.size(); ++c) class_id[classes[c]] = int(c);
    std::vector<int> ids(m * m);
#pragma omp parallel for schedule(static)
    for (long g = 0; g < long(m); ++g) {
        const Perm ginv = inverse(perms[g]);
        for (size_t h = 0; h < m; ++h)
            ids[size_t(g) * m + h] = class_id.at(cycle_type(compose(perms[h], ginv)));
    }
    return ids;
}

}  // namespace

RatMatrix class_operator(int n, const Partition& rho) {
    check_cap(n, "class_operator");
    if (rho.n() != n)
        throw std::invalid_argument("class_operator: rho is not a partition of n");
    const auto classes = enumerate_partitions(n);
    const auto ids = class_of_product(n, classes);
    int target = -1;
    for (size_t c = 0; c < classes.size(); ++c)
        if (classes[c] == rho) target = int(c);
    const size_t dim = fact(n);
    const int d = int(dim);
    RatMatrix a(d, d);
    for (size_t g = 0; g < dim; ++g)
        for (size_t h = 0; h < dim; ++h)
            if (ids[g * dim + h] == target) a.at(int(g), int(h)) = 1;
    return a;
}

RatMatrix assemble_operator(const WeightedClassSum& w) {
    check_cap(w.n, "assemble_operator");
    const auto classes = enumerate_partitions(w.n);
    const auto ids = class_of_product(w.n, classes);
    std::vector<Rational> weight_of_class(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        weight_of_class[c] = w.weight(classes[c]);
    const size_t dim = fact(w.n);
    const int d = int(dim);
    RatMatrix a(d, d);
    for (size_t g = 0; g < dim; ++g)
        for (size_t h = 0; h < dim; ++h)
            a.at(int(g), int(h)) = weight_of_class[ids[g * dim + h]];
    return a;
}

RatMatrix module_operator(int n, const Partition& lambda) {
    check_cap(n, "module_operator");
    if (lambda.n() != n)
        throw std::invalid_argument("module_operator: lambda is not a partition of n");
    const auto classes = enumerate_partitions(n);
    const auto ids = class_of_product(n, classes);
    std::vector<Int> chi(classes.size());
    for (size_t c = 0; c < classes.size(); ++c)
        chi[c] = mn_character(lambda, classes[c]);
    const size_t dim = fact(n);
    const int d = int(dim);
    RatMatrix e(d, d);
    for (size_t g = 0; g < dim; ++g)
        for (size_t h = 0; h < dim; ++h)
            e.at(int(g), int(h)) = Rational(chi[ids[g * dim + h]]);
    return e;
}

RatMatrix projector(int n, const Partition& lambda) {
    RatMatrix e = module_operator(n, lambda);
    return scale(e, rat(hook_length_degree(lambda), factorial(n)));
}

}  // namespace ekr
