#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wmod/rootsystem.hpp"

namespace wmod {

// A Weyl group element as an integer matrix on weight coordinates, with its
// sign (determinant) and, when produced by enumeration, a reduced word.
struct WeylElement {
    std::vector<std::vector<long>> matrix;  // image coords = matrix * coords
    int sign = 1;
    std::vector<int> word;                  // generator indices, 1-based

    int rank() const { return static_cast<int>(matrix.size()); }
};

WeylElement weyl_identity(int rank);
WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);

Weight apply(const WeylElement& w, const Weight& lambda);

// Shifted action w.lambda = w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

// Half-group test: w(alpha_star) is a positive root.
bool in_Wsr(const RootSystem& rs, const WeylElement& w);

Int weyl_order(const RootSystem& rs);  // closed-form group order

// Materializes the whole group in breadth-first order (word length, then
// lexicographic word).  Refuses groups larger than `cap` elements.
std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t cap = 400000);

// Streaming full-group statistics without materializing elements.  Groups
// larger than W(E7) are refused unless allow_huge is set.
struct WeylScanStats {
    Int count = 0;
    Int wsr_count = 0;
    Int sign_sum = 0;
};
WeylScanStats weyl_scan(const RootSystem& rs, bool allow_huge = false);

// Minimal-length element sending one root to another (both in weight coords),
// deterministic via breadth-first search over the root orbit.
WeylElement element_mapping_root(const RootSystem& rs, const Weight& source, const Weight& target);

// One bucketed exponential sum over the Weyl group:
//
//   buckets[r][c][e] = sum over w of sign(w) * [coefficient] summed into the
//   residue e = exp_num * (row_r, w(col_c)) * bucket_order / (2 pi i ... )
//
// concretely e = exp_num * d(row_r, w(col_c)) mod bucket_order, where d is
// the form denominator carried by the caller inside exp_num; the engine
// asserts integrality.  With wsr_only set, only w with w(alpha_star) positive
// contribute.  With coefficient_x set (integer weight coords), each term is
// further multiplied by (w(alpha_star), x); callers divide by (alpha_star, x)
// when converting buckets to field elements.
struct ExpSumJob {
    std::vector<std::vector<long>> rows;  // integer weight coords
    std::vector<std::vector<long>> cols;  // integer weight coords
    long exp_num = 0;                     // exponent scale; exponent = exp_num*(row, w col) mod order
    long bucket_order = 1;
    bool wsr_only = false;
    std::vector<long> coefficient_x;      // empty = coefficient 1
};

struct ExpSumResult {
    int num_rows = 0;
    int num_cols = 0;
    long bucket_order = 1;
    std::vector<long long> buckets;  // [(r*num_cols + c)*bucket_order + e]

    long long at(int r, int c, long e) const {
        return buckets[(static_cast<std::size_t>(r) * num_cols + c) * bucket_order + e];
    }
};

// Runs all jobs in a single traversal of the group.  Deterministic for any
// thread count; threads = 0 means use WMOD_THREADS or 1.
std::vector<ExpSumResult> weyl_exp_sums(const RootSystem& rs, const std::vector<ExpSumJob>& jobs,
                                        int threads = 0, bool allow_huge = false);

}  // namespace wmod
