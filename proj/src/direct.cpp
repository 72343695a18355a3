#include "hochschild/direct.hpp"

#include <stdexcept>

#include "hochschild/errors.hpp"

namespace hochschild {

std::string to_string(Engine e) { return e == Engine::direct ? "direct" : "formula"; }

TruncatedComplex::TruncatedComplex(Quiver q, int n, EnumerationLimits limits)
    : quiver_(std::move(q)), n_(n), limits_(limits)
{
    if (n < 2)
        throw std::invalid_argument("truncation index must be at least 2");
}

const ComplexSlice& TruncatedComplex::differential(int m)
{
    auto it = slices_.find(m);
    if (it == slices_.end())
        it = slices_.emplace(m, assemble_differential(quiver_, n_, m, limits_)).first;
    return it->second;
}

BigInt TruncatedComplex::cochain_dim(int m) const { return hochschild::cochain_dim(quiver_, n_, m); }

std::size_t TruncatedComplex::rank_of(int m, FieldSpec field)
{
    if (m == 0)
        return 0;
    const auto key = std::pair{m, field.characteristic()};
    if (auto it = ranks_.find(key); it != ranks_.end())
        return it->second;
    const std::size_t r = rank(differential(m).matrix, field);
    ranks_.emplace(key, r);
    return r;
}

CohomologyReport dims_direct(TruncatedComplex& complex, FieldSpec field, int max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("max degree must be nonnegative");
    CohomologyReport report;
    report.quiver_name = complex.quiver().name();
    report.n = complex.n();
    report.characteristic = field.characteristic();
    if (!classify(complex.quiver()).weakly_connected)
        report.warnings.push_back("quiver is not connected; the complex is evaluated as literally defined");

    for (int m = 0; m <= max_degree; ++m) {
        try {
            const BigInt dim = complex.cochain_dim(m);
            const BigInt in = static_cast<unsigned long>(complex.rank_of(m, field));
            const BigInt out = static_cast<unsigned long>(complex.rank_of(m + 1, field));
            report.dims.push_back(dim - in - out);
            report.engines.push_back(Engine::direct);
            report.details.push_back({m, dim, in, out});
        } catch (const CapExceeded& e) {
            report.truncated_at = m;
            report.truncation_reason = e.what();
            break;
        }
    }
    return report;
}

CohomologyReport dims_direct(const Quiver& q, int n, FieldSpec field, int max_degree, const EnumerationLimits& limits)
{
    TruncatedComplex complex(q, n, limits);
    return dims_direct(complex, field, max_degree);
}

} // namespace hochschild
