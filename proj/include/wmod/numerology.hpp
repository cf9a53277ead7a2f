#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmod/admissible.hpp"
#include "wmod/fusion.hpp"
#include "wmod/smatrix.hpp"

namespace wmod {

// c from the norm formula (rank+2) - 12 |sqrt(q/p)(rho) - sqrt(p/q)(x0)|^2
// expanded exactly over the rationals.
Rat central_charge(const LevelData& ld);

// Factored one-line forms per family (A odd rank with the middle node only).
std::optional<Rat> central_charge_closed_form(const LevelData& ld);

Rat conformal_dimension(const LevelData& ld, const Weight& lambda);

Rat effective_central_charge(const LevelData& ld);

// Exponential growth rate of the character: (rank+2) - h^vee dim(g) / (p q).
Rat asymptotic_growth(const LevelData& ld);

// Leading asymptotic amplitude of the vacuum character.
double asymptotic_dimension(const LevelData& ld);

// Conformal weight of the singular vector generating the maximal ideal.
Rat singular_vector_conformal_weight(const LevelData& ld);

// Self-duality predicate for type A exceptional classes (rectangle m x ...).
bool typeA_selfdual(long n, long p, long q, long m);

// Virasoro minimal model data with an exact S-matrix.
struct VirData {
    long p = 0, q = 0;
    Rat c;
    std::vector<std::pair<int, int>> irreps;  // canonical (r, s)
    std::vector<Rat> h;
    int vacuum = 0;
    ScaledMatrix S;
};
VirData vir_minimal_model(long p, long q);
FusionRing vir_fusion(const VirData& v);
Rat vir_h(long p, long q, int r, int s);
double vir_asymptotic_dimension(const VirData& v, int r, int s);

// Attempted identification of the W-algebra with a Virasoro minimal model
// (possibly extended by one module class).
struct SporadicReport {
    enum class Kind { direct, extension, unidentified };
    Kind kind = Kind::unidentified;
    long vir_p = 0, vir_q = 0;
    int ext_r = 0, ext_s = 0;
    long ext_mult = 0;
    Rat c;
    Rat c_eff;
    Int n_irreps;
    double amp_w = 0.0;
    double amp_match = 0.0;
    bool amp_sign_flip = false;   // amplitudes agree only up to sign
    bool fusion_checked = false;  // direct case: ring isomorphism verified
    std::string note;
    std::string pretty() const;
};
SporadicReport sporadic_report(const LevelData& ld, int threads = 0, bool allow_huge = false);

}  // namespace wmod
