#include "streaks/poly.hpp"

#include <stdexcept>

namespace streaks {

TruncatedPoly TruncatedPoly::zero(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("TruncatedPoly: negative max_degree");
    TruncatedPoly p;
    p.coefficients.assign(static_cast<std::size_t>(max_degree) + 1, Natural(0));
    return p;
}

TruncatedPoly TruncatedPoly::one(int max_degree) {
    TruncatedPoly p = zero(max_degree);
    p.coefficients[0] = 1;
    return p;
}

TruncatedPoly geometric_block(int min_power, int max_degree) {
    if (min_power < 0) throw std::invalid_argument("geometric_block: negative min_power");
    TruncatedPoly p = TruncatedPoly::zero(max_degree);
    for (int d = min_power; d <= max_degree; ++d) p.coefficients[d] = 1;
    return p;
}

TruncatedPoly poly_mul_truncated(const TruncatedPoly& a, const TruncatedPoly& b,
                                 int max_degree) {
    TruncatedPoly out = TruncatedPoly::zero(max_degree);
    const int da = a.max_degree();
    const int db = b.max_degree();
    for (int i = 0; i <= da && i <= max_degree; ++i) {
        if (a.coefficients[i] == 0) continue;
        const int jmax = std::min(db, max_degree - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b.coefficients[j] == 0) continue;
            out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
        }
    }
    return out;
}

Natural coefficient_of(std::span<const GeneratorBlock> blocks, int target_degree) {
    if (target_degree < 0)
        throw std::invalid_argument("coefficient_of: negative target degree");
    if (blocks.empty())
        throw std::invalid_argument("coefficient_of: no generator blocks");

    TruncatedPoly acc = TruncatedPoly::one(target_degree);
    for (const GeneratorBlock& block : blocks) {
        if (block.min_power < 0)
            throw std::invalid_argument("coefficient_of: negative min_power");
        if (block.multiplicity < 1)
            throw std::invalid_argument("coefficient_of: multiplicity must be positive");
        const TruncatedPoly factor = geometric_block(block.min_power, target_degree);
        for (int m = 0; m < block.multiplicity; ++m)
            acc = poly_mul_truncated(acc, factor, target_degree);
    }
    return acc.coefficients[target_degree];
}

}  // namespace streaks
