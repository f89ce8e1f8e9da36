#include "condgrad/problem_gen.hpp"

#include <algorithm>
#include <stdexcept>

#include "condgrad/rng.hpp"

namespace condgrad {

GeneratedProblem generate_problem(const ProblemSpec& spec) {
    const std::size_t n = spec.n;
    if (n == 0) throw std::invalid_argument("generate_problem: n must be positive");
    if (spec.s == 0 || spec.s > n)
        throw std::invalid_argument("generate_problem: need 1 <= s <= n");
    if (!(spec.mu_target > 0.0))
        throw std::invalid_argument("generate_problem: mu_target must be positive");
    if (!(spec.domain.lo < spec.domain.hi))
        throw std::invalid_argument("generate_problem: degenerate domain");

    SplitMix64 rng(spec.seed);
    std::vector<Triplet> off_diag;
    std::vector<std::size_t> col_budget(n, spec.s - 1);
    std::vector<std::size_t> placed;
    for (std::size_t i = 0; i < n; ++i) {
        placed.clear();
        const std::size_t want = spec.s - 1;
        std::size_t attempts = 0;
        while (placed.size() < want && attempts < 10 * n) {
            ++attempts;
            const std::size_t j = static_cast<std::size_t>(rng.next_below(n));
            if (j == i || col_budget[j] == 0 ||
                std::find(placed.begin(), placed.end(), j) != placed.end())
                continue;
            placed.push_back(j);
            --col_budget[j];
            off_diag.push_back({i, j, 2.0 * rng.next_double() - 1.0});
        }
    }

    if (!off_diag.empty()) {
        DenseVector row_mass(n, 0.0), col_mass(n, 0.0);
        for (const Triplet& t : off_diag) {
            row_mass[t.row] += std::abs(t.value);
            col_mass[t.col] += std::abs(t.value);
        }
        const double m = std::max(*std::max_element(row_mass.begin(), row_mass.end()),
                                  *std::max_element(col_mass.begin(), col_mass.end()));
        const double alpha = m > 0.0 ? 0.5 * spec.mu_target / m : 0.0;
        for (Triplet& t : off_diag) t.value *= alpha;
    }

    std::vector<Triplet> entries;
    entries.reserve(n + off_diag.size());
    for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, spec.mu_target});
    entries.insert(entries.end(), off_diag.begin(), off_diag.end());

    return {CsrMatrix::from_triplets(entries, n, n),
            AxisBox(DenseVector(n, spec.domain.lo), DenseVector(n, spec.domain.hi))};
}

DenseVector initial_point(const AxisBox& box, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0xC0FFEEULL);
    DenseVector x(box.dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * rng.next_double();
    return x;
}

} // namespace condgrad
