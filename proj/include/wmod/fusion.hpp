#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmod/cyclotomic.hpp"
#include "wmod/smatrix.hpp"

namespace wmod {

struct FusionRing {
    std::vector<std::string> labels;
    int identity = 0;
    std::vector<int> dual;        // contragredient permutation
    std::vector<long> tensor;     // [(i*n + j)*n + k] = N_{ij}^k
    int n = 0;

    long N(int i, int j, int k) const {
        return tensor[(static_cast<std::size_t>(i) * n + j) * n + k];
    }
    long& N(int i, int j, int k) {
        return tensor[(static_cast<std::size_t>(i) * n + j) * n + k];
    }
    // Throws std::domain_error naming the first failed axiom.
    void validate() const;
    bool check(std::string* why = nullptr) const;
    std::string pretty() const;
};

// Verlinde sum from an S-matrix; every structure constant must come out a
// nonnegative integer or the computation aborts naming the offending triple.
FusionRing verlinde(const ScaledMatrix& S, int vacuum);

// Verlinde data from a bare core matrix whose rows are only known up to
// normalization (used for standalone long-root factors): finds the scale from
// unitarity and tries every viable vacuum column; all viable choices must
// yield isomorphic rings.
FusionRing verlinde_from_core(const ScaledMatrix& S);

std::vector<Cyc> quantum_dimensions(const ScaledMatrix& S, int vacuum);

// Label bijection making the tensors equal (identity to identity), or
// nullopt.  `forced` may pre-assign images (-1 = free).
std::optional<std::vector<int>> ring_isomorphic(const FusionRing& a, const FusionRing& b,
                                                const std::vector<int>& forced = {});

FusionRing tensor_ring(const FusionRing& a, const FusionRing& b);

// Group ring Z[Z/m] with labels 0..m-1.
FusionRing cyclic_group_ring(int m);

// Candidate ring on 3m-1 labels from the D-type surgery rule; the rule as
// stated fails the ring axioms for m >= 2, so the result carries a validity
// report instead of throwing.
struct DtypeRing {
    FusionRing ring;
    bool valid = false;
    std::string failure;
};
DtypeRing dtype_conjecture_ring(int m);

}  // namespace wmod
