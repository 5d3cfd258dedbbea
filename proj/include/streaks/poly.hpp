#pragma once

/**
 * @file poly.hpp
 * @brief Truncated polynomial arithmetic and generating-function
 *        coefficient extraction.
 *
 * Counting gap solutions reduces to reading one coefficient off a
 * product of geometric-series blocks (1 + x + ... + x^T) and
 * (x + x^2 + ... + x^T). All factors have non-negative exponents, so
 * truncating every intermediate product at the target degree is exact
 * for that coefficient: dropped terms could only ever feed higher
 * degrees.
 */

#include <span>
#include <vector>

#include "streaks/natural.hpp"

namespace streaks {

/// Dense polynomial over Natural, truncated at a fixed maximum degree.
/// coefficients[d] is the coefficient of x^d; the vector always has
/// max_degree() + 1 entries.
struct TruncatedPoly {
    std::vector<Natural> coefficients;

    int max_degree() const { return static_cast<int>(coefficients.size()) - 1; }

    const Natural& operator[](int degree) const { return coefficients[degree]; }

    /// The zero polynomial truncated at max_degree.
    static TruncatedPoly zero(int max_degree);
    /// The constant 1 truncated at max_degree.
    static TruncatedPoly one(int max_degree);
};

/// x^min_power + x^(min_power+1) + ... + x^max_degree. Degrees below
/// min_power get coefficient 0; min_power past max_degree yields the
/// zero polynomial.
TruncatedPoly geometric_block(int min_power, int max_degree);

/// Convolution truncated at max_degree: result[d] = sum a_i * b_j over
/// i + j = d, for all d <= max_degree.
TruncatedPoly poly_mul_truncated(const TruncatedPoly& a, const TruncatedPoly& b,
                                 int max_degree);

/// One factor kind in a generating-function product: the geometric
/// block starting at min_power, raised to `multiplicity`.
struct GeneratorBlock {
    int min_power = 0;       // 0 for end gaps, 1 for never-zero interior gaps
    int multiplicity = 1;    // > 0
};

/// Coefficient of x^target_degree in the product over all blocks of
/// (x^min_power + ... + x^target_degree)^multiplicity. Computed by
/// repeated truncated multiplication; exact.
Natural coefficient_of(std::span<const GeneratorBlock> blocks, int target_degree);

}  // namespace streaks
