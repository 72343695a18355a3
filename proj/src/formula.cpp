#include "hochschild/formula.hpp"

#include <map>
#include <stdexcept>

#include "hochschild/complex.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/extremes.hpp"

namespace hochschild {

namespace {

BigInt sum_parallel(const Quiver& q, int from_j, int to_j, std::size_t length)
{
    BigInt total = 0;
    for (int j = from_j; j <= to_j; ++j)
        total += count_parallel(q, static_cast<std::size_t>(j), length);
    return total;
}

} // namespace

BasicCycleParams BasicCycleParams::from(std::size_t e, std::size_t n)
{
    if (e == 0)
        throw std::invalid_argument("cycle length must be positive");
    return BasicCycleParams{e, n, n / e, n % e};
}

std::size_t c_value(std::size_t n, std::size_t e, std::size_t i)
{
    const auto params = BasicCycleParams::from(e, n);
    const std::size_t residue = params.r * i % e;
    std::size_t count = 0;
    for (std::size_t j = 0; j + 2 <= n; ++j)
        count += j % e == residue;
    return count;
}

CohomologyReport theorem1_dims(std::size_t e, int n, FieldSpec field, int max_degree)
{
    if (e == 1)
        throw FormulaDeclined("closed form for basic cycles needs e >= 2; the single loop (e = 1) is left to the "
                              "direct engine");
    if (n < 2 || max_degree < 0)
        throw std::invalid_argument("need n >= 2 and max degree >= 0");
    const auto params = BasicCycleParams::from(e, static_cast<std::size_t>(n));
    const std::size_t m = params.m;
    const std::size_t r = params.r;
    const std::uint64_t p = field.characteristic();
    const bool char_divides_n = p != 0 && static_cast<std::uint64_t>(n) % p == 0;

    CohomologyReport report;
    report.n = n;
    report.characteristic = p;
    for (int degree = 0; degree <= max_degree; ++degree) {
        std::size_t value = 0;
        if (degree == 0) {
            value = r == 0 ? m : r == 1 ? m + e : m + 1;
        } else if (degree == 1) {
            value = r <= 1 ? m : m + 1;
        } else {
            const auto i = static_cast<std::size_t>(degree / 2);
            value = c_value(params.n, e, i);
            // e | (ni - n + 1), with ni - n + 1 = n(i-1) + 1
            if (char_divides_n && (params.n * (i - 1) + 1) % e == 0)
                ++value;
        }
        report.dims.push_back(BigInt(static_cast<unsigned long>(value)));
        report.engines.push_back(Engine::formula);
    }
    return report;
}

CohomologyReport theorem2_dims(const Quiver& q, int n, FieldSpec field, int max_degree,
                               const EnumerationLimits& limits)
{
    if (n < 2 || max_degree < 0)
        throw std::invalid_argument("need n >= 2 and max degree >= 0");
    const auto shape = classify(q);
    if (shape.is_basic_cycle)
        throw FormulaDeclined("quiver is a basic cycle; use the basic-cycle formula");
    if (!shape.weakly_connected)
        throw FormulaDeclined("closed form assumes a connected quiver");

    CohomologyReport report;
    report.quiver_name = q.name();
    report.n = n;
    report.characteristic = field.characteristic();

    const auto un = static_cast<std::size_t>(n);
    std::map<int, std::map<int, BigInt>> extremes;
    auto extremes_at = [&](int i) -> const std::map<int, BigInt>& {
        auto it = extremes.find(i);
        if (it == extremes.end())
            it = extremes.emplace(i, count_extremes(q, n, i, limits)).first;
        return it->second;
    };

    BigInt center;
    for (int degree = 0; degree <= max_degree; ++degree) {
        BigInt value;
        try {
            if (degree == 0) {
                center = BigInt(static_cast<unsigned long>(kernel_dim(assemble_differential(q, n, 1, limits).matrix,
                                                                      field)));
                value = center;
            } else if (degree == 1) {
                value = center - sum_parallel(q, 0, n - 1, 0) + sum_parallel(q, 1, n - 1, 1);
            } else if (degree % 2 == 1) {
                const int i = degree / 2;
                const std::size_t ni = un * static_cast<std::size_t>(i);
                const auto& ext = extremes_at(i);
                BigInt image = 0;
                for (int j = 0; j <= n - 2; ++j) {
                    image += count_parallel(q, static_cast<std::size_t>(j), ni);
                    if (j >= 1)
                        image -= ext.at(j);
                }
                value = sum_parallel(q, 1, n - 1, ni + 1) - image;
            } else {
                const int i = degree / 2;
                const auto& ext = extremes_at(i);
                BigInt kernel = 0;
                for (int j = 1; j <= n - 1; ++j)
                    kernel += ext.at(j);
                value = kernel - count_parallel(q, 0, un * static_cast<std::size_t>(i - 1) + 1);
            }
        } catch (const CapExceeded& e) {
            report.truncated_at = degree;
            report.truncation_reason = e.what();
            break;
        }
        report.dims.push_back(value);
        report.engines.push_back(Engine::formula);
    }
    return report;
}

CohomologyReport dims_formula(const Quiver& q, int n, FieldSpec field, int max_degree, const EnumerationLimits& limits)
{
    const auto shape = classify(q);
    if (shape.is_basic_cycle) {
        auto report = theorem1_dims(*shape.basic_cycle_length, n, field, max_degree);
        report.quiver_name = q.name();
        return report;
    }
    return theorem2_dims(q, n, field, max_degree, limits);
}

} // namespace hochschild
