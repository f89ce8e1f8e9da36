#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "condgrad/solvers.hpp"

namespace condgrad {

void StopCriterion::validate() const {
    if (!any_active())
        throw std::invalid_argument("StopCriterion: at least one bound must be active");
}

DenseVector HullLedger::reconstruct() const {
    if (atoms.empty()) return {};
    DenseVector x(atoms.front().size(), 0.0);
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += weights[a] * atoms[a][i];
    return x;
}

namespace {

// Incremental hull bookkeeping. Stored weights carry a deferred common factor
// so the per-step rescale is O(1); oracle vertices repeat bit-exactly, so a
// byte hash dedups them.
class HullTracker {
public:
    explicit HullTracker(const DenseVector& x0) { add(x0, 1.0); }

    void step(double gamma, const DenseVector& atom) {
        if (gamma >= 1.0) {
            std::fill(weights_.begin(), weights_.end(), 0.0);
            scale_ = 1.0;
            add(atom, 1.0);
            return;
        }
        scale_ *= (1.0 - gamma);
        if (scale_ < 1e-120) flush();
        add(atom, gamma / scale_);
    }

    HullLedger finalize() {
        flush();
        return {std::move(atoms_), std::move(weights_)};
    }

private:
    void flush() {
        for (double& w : weights_) w *= scale_;
        scale_ = 1.0;
    }

    static std::uint64_t avalanche(std::uint64_t x) {
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDULL;
        x ^= x >> 33;
        x *= 0xC4CEB9FE1A85EC53ULL;
        return x ^ (x >> 33);
    }

    static std::size_t hash_bits(const DenseVector& v) {
        // Vertex coordinates differ only in their high bits, so each word
        // needs full avalanching before it is folded into the digest.
        std::uint64_t h = 1469598103934665603ULL;
        for (const double d : v) {
            std::uint64_t bits;
            std::memcpy(&bits, &d, sizeof(bits));
            h = avalanche(h ^ bits) + 0x9E3779B97F4A7C15ULL;
        }
        return h;
    }

    void add(const DenseVector& atom, double stored_weight) {
        auto& bucket = index_[hash_bits(atom)];
        for (const std::size_t id : bucket) {
            if (atoms_[id] == atom) {
                weights_[id] += stored_weight;
                return;
            }
        }
        bucket.push_back(atoms_.size());
        atoms_.push_back(atom);
        weights_.push_back(stored_weight);
    }

    std::vector<DenseVector> atoms_;
    std::vector<double> weights_;
    std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
    double scale_ = 1.0;
};

} // namespace

double fw_gap(const QuadraticForm& q, const DenseVector& y, const AxisBox& domain,
              OpCounters* counters) {
    DenseVector g = q.gradient(y, counters);
    DenseVector v = lmo_box(domain, g, counters);
    return dot(g, y) - dot(g, v);
}

double fw_gap(const QuadraticForm& q, const DenseVector& y, const Simplex& domain,
              OpCounters* counters) {
    DenseVector g = q.gradient(y, counters);
    DenseVector v = lmo_simplex(domain, g, counters);
    return dot(g, y) - dot(g, v);
}

double fw_gap(const ProxObjective& F, const DenseVector& y, const AxisBox& domain,
              OpCounters* counters) {
    DenseVector g = F.gradient(y, counters);
    DenseVector v = lmo_box(domain, g, counters);
    return dot(g, y) - dot(g, v);
}

namespace detail {

template <class Domain>
Solution fw_engine(const QuadraticForm& q, double kappa, const DenseVector* anchor,
                   const Domain& domain, DenseVector x0, StepRule rule,
                   const StopCriterion& stop) {
    stop.validate();
    if (!all_finite(x0))
        throw std::invalid_argument("frank_wolfe: non-finite start point");
    if (!contains(domain, x0, 1e-10))
        throw std::invalid_argument("frank_wolfe: infeasible start point");

    const auto t0 = std::chrono::steady_clock::now();
    Solution sol;
    GradientState state(q, std::move(x0));
    OpCounters& ctr = state.counters();

    const bool track_hull = kappa == 0.0 && domain.dim() <= kHullDimCap;
    std::optional<HullTracker> hull;
    if (track_hull) hull.emplace(state.y());

    DenseVector p(q.n());
    std::uint64_t k = 0;
    double gamma_prev = 0.0;
    while (true) {
        if (kappa == 0.0) {
            p = state.g();
        } else {
            for (std::size_t i = 0; i < p.size(); ++i)
                p[i] = state.g()[i] + kappa * (state.y()[i] - (*anchor)[i]);
        }
        DenseVector v = domain_lmo(domain, p, &ctr);
        const double gap = dot(p, state.y()) - dot(p, v);
        double f = state.value();
        if (kappa != 0.0) {
            double reg = 0.0;
            for (std::size_t i = 0; i < p.size(); ++i) {
                const double d = state.y()[i] - (*anchor)[i];
                reg += d * d;
            }
            f += 0.5 * kappa * reg;
        }
        sol.trace.push_back({0, k, f, gap, gamma_prev, 0.0, ctr.lmo_calls, ctr.matvecs,
                             elapsed_ns_since(t0)});

        if (stop.eps_gap >= 0.0 && gap <= stop.eps_gap) {
            sol.status = SolveStatus::Converged;
            break;
        }
        if ((stop.max_iters > 0 && k >= stop.max_iters) ||
            (stop.max_lmo_calls > 0 && ctr.lmo_calls >= stop.max_lmo_calls)) {
            sol.status = SolveStatus::IterLimit;
            break;
        }

        ++k;
        if (rule == StepRule::Standard) {
            gamma_prev = 2.0 / static_cast<double>(k + 1);
            state.step(q, v, gamma_prev);
        } else {
            gamma_prev = state.step_exact(q, v, kappa, anchor);
        }
        if (track_hull) hull->step(gamma_prev, v);
    }

    if (track_hull) sol.hull = hull->finalize();
    sol.x = state.y();
    sol.f_value = sol.trace.back().f_value;
    sol.total_iterations = k;
    return sol;
}

Solution fw_core_box(const QuadraticForm& q, double kappa, const DenseVector* anchor,
                     const AxisBox& domain, DenseVector x0, StepRule rule,
                     const StopCriterion& stop) {
    return fw_engine(q, kappa, anchor, domain, std::move(x0), rule, stop);
}

Solution fw_core_simplex(const QuadraticForm& q, const Simplex& domain, DenseVector x0,
                         StepRule rule, const StopCriterion& stop) {
    return fw_engine(q, 0.0, nullptr, domain, std::move(x0), rule, stop);
}

} // namespace detail

Solution frank_wolfe(const ProxObjective& F, const AxisBox& domain, DenseVector x0,
                     StepRule rule, const StopCriterion& stop) {
    if (F.kappa <= 0.0)
        throw std::invalid_argument("frank_wolfe: prox objective needs kappa > 0");
    return detail::fw_core_box(F.base, F.kappa, &F.anchor, domain, std::move(x0), rule, stop);
}

} // namespace condgrad
