#pragma once

#include <string>
#include <vector>

#include "wmod/admissible.hpp"
#include "wmod/cyclotomic.hpp"

namespace wmod {

// A square matrix with entries (i^i_power / sqrt(radicand)) * scalar * core[r][c].
// The scalar factor keeps a field element common to every entry (for example a
// one-dimensional long-root factor) out of the core so the core stays in the
// smallest possible cyclotomic field.
struct ScaledMatrix {
    int i_power = 0;          // 0..3
    Int radicand = 1;         // positive integer under the square root
    Cyc scalar = Cyc::one();
    std::vector<std::vector<Cyc>> core;
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;

    int size() const { return static_cast<int>(core.size()); }
    std::complex<double> entry(int r, int c) const;
    Cyc folded(int r, int c) const { return scalar * core[r][c]; }
};

// Weyl-character S-matrix of the level p - h^vee integrable family, indexed
// by enumerate_dominant(rs, p - h^vee).
ScaledMatrix K_matrix(const RootSystem& rs, long p, int threads = 0, bool allow_huge = false);

enum class KRestrict { integral, shifted };  // kappa in Q, or kappa in -rho + Q
ScaledMatrix K_restrict(const RootSystem& rs, long p, const ScaledMatrix& K, KRestrict mode);

// Subregular long-root factor at denominator q with grading vector x
// (rational weight, (x, alpha_star) != 0), indexed by
// enumerate_subreg_coweights(rs, q).
ScaledMatrix C_matrix(const RootSystem& rs, long q, const Weight& x, int threads = 0,
                      bool allow_huge = false);

ScaledMatrix C_restrict(const RootSystem& rs, long q, const ScaledMatrix& C);  // eta in Q rows/cols

// Full S-matrix of the subregular W-algebra, indexed by
// orbit_representatives(ld).  x_seed != 0 reseeds the auxiliary grading
// vector used in the coefficient (the result is independent of it).
ScaledMatrix S_subreg(const LevelData& ld, int threads = 0, bool allow_huge = false,
                      unsigned x_seed = 0);

// Independent route: S via the intertwiner amplitudes.  Must equal S_subreg.
ScaledMatrix S_via_aB(const LevelData& ld, int threads = 0, bool allow_huge = false);

// Single amplitude between two labels (materialized Weyl sum; small ranks).
struct ScaledValue {
    int i_power = 0;
    Int radicand = 1;
    Cyc value;
};
ScaledValue a_B(const LevelData& ld, const SubregLabel& a, const SubregLabel& b);

ScaledMatrix galois_matrix(long a, const ScaledMatrix& m);
ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b);

// Entrywise proportionality with one global scalar: cross-multiplication
// test on cores plus scalar bookkeeping.  Returns false on any mismatch.
bool proportional(const ScaledMatrix& a, const ScaledMatrix& b, std::string* why = nullptr);

// Full equality of the represented matrices (prefactors included), checked
// exactly via squared ratios plus a numeric sign test.
bool scaled_equal(const ScaledMatrix& a, const ScaledMatrix& b, std::string* why = nullptr);

bool is_symmetric(const ScaledMatrix& m);

// core * conj(core)^T == (radicand / |scalar|^2) * Id.
bool unitary(const ScaledMatrix& m, std::string* why = nullptr);

// The square of the matrix must be a scalar-free permutation (the conjugation
// C with C^2 = Id); returns the permutation.
std::vector<int> conjugation_permutation(const ScaledMatrix& m);

}  // namespace wmod
