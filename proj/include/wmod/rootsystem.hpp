#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmod/rational.hpp"

namespace wmod {

enum class Family { A, D, E };

std::string family_name(Family f);

// Parses tokens like "A3", "D5", "E7" into (family, rank).
std::pair<Family, int> parse_family_rank(const std::string& token);

// A weight of the finite root system, stored by its pairings with the simple
// coroots: coords[i] = <lambda, alpha_i^vee>.  Index 0 is Bourbaki node 1.
class Weight {
   public:
    Weight() = default;
    explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, 0)); }

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rat>& coords() const { return coords_; }
    Rat& operator[](int i) { return coords_[i]; }
    const Rat& operator[](int i) const { return coords_[i]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    friend Weight operator*(const Rat& s, const Weight& w);
    bool operator==(const Weight& o) const { return coords_ == o.coords_; }
    bool operator!=(const Weight& o) const { return coords_ != o.coords_; }
    bool operator<(const Weight& o) const { return coords_ < o.coords_; }

    bool is_integral() const;
    bool is_dominant() const;
    std::string str() const;

   private:
    std::vector<Rat> coords_;
};

// One generator of the group of simple-current symmetries: the diagram
// symmetry part pibar_j (a linear map on weight coordinates) together with
// its sign and the cominuscule node j it is attached to.
struct PibarElement {
    int j = 0;                                   // cominuscule node (1-based)
    std::vector<std::vector<long>> matrix;       // acts on weight coords
    int sign = 1;                                // determinant as a Weyl-times-diagram map
    Weight apply(const Weight& w) const;
};

class RootSystem {
   public:
    Family family;
    int rank = 0;

    std::vector<std::vector<long>> cartan;           // A[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<long>> positive_roots;   // alpha-basis coords, sorted by height then lex
    std::vector<std::vector<Rat>> gram;              // (omega_i, omega_j) = (A^{-1})_{ij}
    Weight theta;                                    // highest root, weight coords
    std::vector<long> marks;                         // marks[i]: theta = sum marks[i] alpha_i
    long coxeter = 0;                                // h
    long dual_coxeter = 0;                           // h^vee (= h, simply laced)
    std::vector<int> cominuscule;                    // J = {i : marks[i] = 1} (1-based)
    long center_order = 0;                           // |P/Q| = |J| + 1
    long form_denominator = 0;                       // d: (P,P) in (1/d)Z
    std::vector<PibarElement> pibar;                 // one per j in J
    int star_index = 0;                              // distinguished node (1-based)

    Weight fundamental(int i) const;                 // omega_i, 1-based
    Weight rho() const;
    Weight x0() const;                               // rho - omega_star
    Weight simple_root(int i) const;                 // alpha_i in weight coords (1-based)
    std::vector<long> to_alpha_scaled(const Weight& w) const;  // center_order * alpha-coords
    bool in_root_lattice(const Weight& w) const;
    long height_theta_pairing(const Weight& w) const;          // <w, theta^vee> for integral w
    int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

    // (.,.): the standard invariant form normalized so long roots have norm 2.
    Rat inner(const Weight& a, const Weight& b) const;
    // (w, root) where the root is given in alpha-basis integer coords.
    Rat inner_root(const Weight& w, const std::vector<long>& root_alpha) const;
};

RootSystem build_root_system(Family family, int rank,
                             std::optional<int> star_override = std::nullopt);

Rat inner_product(const RootSystem& rs, const Weight& a, const Weight& b);

// The simple-current generators {pi_j : j in J} of the extended symmetry
// group, together with the identity; size = center_order.
std::vector<PibarElement> wtilde_plus(const RootSystem& rs);

// Shifts mu into the root lattice using the level-m symmetry action
// mu -> pibar_j(mu) + m*omega_j.  Requires gcd(m, center_order) = 1; returns
// the acting generator index (0 = identity, else node j) and the image.
std::pair<int, Weight> shift_to_root_lattice(const RootSystem& rs, const Weight& mu, long m);

}  // namespace wmod
