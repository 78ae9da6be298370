#include "glfrac/ident.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glfrac {

namespace {

void check_spec(const SampledSignal& r, const SampledSignal& y, const IdentificationSpec& spec) {
    if (r.h != y.h || r.values.size() != y.values.size())
        throw std::invalid_argument("input and output signals must share one grid");
    if (spec.orders.empty())
        throw std::invalid_argument("identification needs at least one order");
    if (spec.shifts.size() != spec.orders.size())
        throw std::invalid_argument("need exactly one shift per unknown coefficient");
    for (std::size_t p = 1; p < spec.shifts.size(); ++p)
        if (spec.shifts[p] <= spec.shifts[p - 1])
            throw std::invalid_argument("shifts must be strictly increasing");
    if (spec.t0_index >= y.values.size())
        throw std::out_of_range("evaluation index past end of record");
    if (spec.scheme == Scheme::original && spec.shifts.front() != 0)
        throw std::invalid_argument("original scheme starts at shift 0");
    if (spec.scheme == Scheme::transformed) {
        for (double order : spec.orders)
            for (std::size_t m : spec.shifts)
                if (order - static_cast<double>(m) >= 0.0)
                    throw std::invalid_argument(
                        "transformed scheme requires every shifted order to be negative");
    }
}

} // namespace

LinearSystem build_equations(const SampledSignal& r, const SampledSignal& y,
                             const IdentificationSpec& spec) {
    check_spec(r, y, spec);
    const std::size_t q = spec.orders.size();
    LinearSystem sys;
    sys.a.assign(q, std::vector<double>(q, 0.0));
    sys.rhs.assign(q, 0.0);
    for (std::size_t p = 0; p < q; ++p) {
        const double m = static_cast<double>(spec.shifts[p]);
        for (std::size_t i = 0; i < q; ++i)
            sys.a[p][i] = differintegrate(y, spec.orders[i] - m, spec.t0_index, spec.mem);
        sys.rhs[p] = differintegrate(r, -m, spec.t0_index, spec.mem);
    }
    return sys;
}

SolveResult solve_linear(std::vector<std::vector<double>> a, std::vector<double> rhs) {
    const std::size_t q = rhs.size();
    if (a.size() != q)
        throw std::invalid_argument("matrix and right-hand side sizes disagree");
    for (const auto& row : a)
        if (row.size() != q)
            throw std::invalid_argument("matrix must be square");

    double max_entry = 0.0;
    for (const auto& row : a)
        for (double v : row)
            max_entry = std::max(max_entry, std::abs(v));

    double max_pivot = 0.0;
    double min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t col = 0; col < q; ++col) {
        std::size_t best = col;
        for (std::size_t row = col + 1; row < q; ++row)
            if (std::abs(a[row][col]) > std::abs(a[best][col]))
                best = row;
        if (best != col) {
            std::swap(a[best], a[col]);
            std::swap(rhs[best], rhs[col]);
        }
        const double pivot = a[col][col];
        if (std::abs(pivot) < 1e-12 * max_entry || pivot == 0.0)
            throw singular_system_error("pivot below 1e-12 of the largest matrix entry");
        max_pivot = std::max(max_pivot, std::abs(pivot));
        min_pivot = std::min(min_pivot, std::abs(pivot));
        for (std::size_t row = col + 1; row < q; ++row) {
            const double factor = a[row][col] / pivot;
            if (factor == 0.0)
                continue;
            for (std::size_t k = col; k < q; ++k)
                a[row][k] -= factor * a[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }

    SolveResult res;
    res.x.assign(q, 0.0);
    for (std::size_t row = q; row-- > 0;) {
        double s = rhs[row];
        for (std::size_t k = row + 1; k < q; ++k)
            s -= a[row][k] * res.x[k];
        res.x[row] = s / a[row][row];
    }
    res.condition_indicator = max_pivot / min_pivot;
    return res;
}

IdentificationResult identify(const SampledSignal& r, const SampledSignal& y,
                              const IdentificationSpec& spec,
                              const std::optional<std::vector<double>>& truth) {
    if (truth && truth->size() != spec.orders.size())
        throw std::invalid_argument("truth vector length must match the unknown count");
    const LinearSystem sys = build_equations(r, y, spec);
    SolveResult solved = solve_linear(sys.a, sys.rhs);

    IdentificationResult res;
    res.estimates = std::move(solved.x);
    res.condition_indicator = solved.condition_indicator;
    if (truth) {
        res.true_values = truth;
        std::vector<double> errors(truth->size());
        for (std::size_t i = 0; i < truth->size(); ++i)
            errors[i] = 100.0 * std::abs(res.estimates[i] - (*truth)[i]) / std::abs((*truth)[i]);
        res.relative_errors_percent = std::move(errors);
    }
    return res;
}

} // namespace glfrac
