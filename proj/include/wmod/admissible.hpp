#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wmod/rootsystem.hpp"
#include "wmod/weyl.hpp"

namespace wmod {

enum class Mode { subreg, typeA };

// A validated admissible level k = -h^vee + p/q for the chosen nilpotent
// class.  Construction rejects illegal (p, q) with a message quoting the
// legal denominators for the family.
struct LevelData {
    RootSystem rs;
    long p = 0;
    long q = 0;
    Mode mode = Mode::subreg;
    Rat k;
};

LevelData make_level(RootSystem rs, long p, long q, Mode mode = Mode::subreg);

// Legal denominator list for a family/rank in the given mode, as text.
std::string legal_denominators(Family family, int rank, Mode mode);
bool denominator_allowed(Family family, int rank, long q, Mode mode);

// Dominant integral weights of level at most m: <lambda, theta^vee> <= m.
std::vector<Weight> enumerate_dominant(const RootSystem& rs, long m);

// Dominant coweights eta of level q whose stabilizer data matches the
// subregular class: either exactly one vanishing simple label with
// <eta, theta> <= q - 1, or all labels positive with <eta, theta> = q.
std::vector<Weight> enumerate_subreg_coweights(const RootSystem& rs, long q);

// Type A only, q <= rank: the coweights are partial-sum patterns of the two
// block sizes of n = (rank+1) = r*q + s.
std::vector<Weight> enumerate_typeA_coweights(const RootSystem& rs, long q);

// Deterministic minimal-length choice of y with y(eta-wall) = alpha_star,
// used to transport each coweight onto the distinguished node.
WeylElement choose_y_eta(const RootSystem& rs, const Weight& eta, long q);

// Roots alpha (alpha-basis coords) with <lambda + rho, alpha^vee> integral.
std::vector<std::vector<long>> integral_roots(const RootSystem& rs, const Weight& lambda);

// Conformal weight of the module labeled by lambda = kappa - (p/q) eta.
Rat conformal_weight(const RootSystem& rs, long p, long q, const Weight& lambda);

struct SubregLabel {
    Weight kappa;      // integral dominant, level p - h^vee
    Weight eta;        // coweight of level q
    WeylElement y_eta;
    Weight beta;       // -y_eta(eta)
    int sign = 1;      // sign of y_eta
    Rat h;             // conformal weight
};

// One label per simple module: canonical representatives of the pair orbits
// under the simple-current action, sorted by (eta, kappa).
std::vector<SubregLabel> orbit_representatives(const LevelData& ld);

// All members of the orbit of one (kappa, eta) pair.
std::vector<std::pair<Weight, Weight>> pair_orbit(const LevelData& ld, const Weight& kappa,
                                                  const Weight& eta);

// The orbit representative of the vacuum pair (0, x0); h = 0.
SubregLabel vacuum_label(const LevelData& ld);

// Index of the vacuum in orbit_representatives order.
int vacuum_index(const LevelData& ld, const std::vector<SubregLabel>& labels);

// q^rank * |dominant weights of level p - h^vee|.
Int admissible_count(const LevelData& ld);

// Re-gauged representative of the same orbit with eta (resp. nu = kappa+rho)
// in the root lattice; gauge picked from gcd(q, center) resp. gcd(p, center).
enum class Gauge { eta_in_Q, nu_in_Q };
Gauge pick_gauge(const LevelData& ld);
SubregLabel regauge(const LevelData& ld, const SubregLabel& label, Gauge gauge);

std::string labels_to_json(const LevelData& ld, const std::vector<SubregLabel>& labels);

}  // namespace wmod
