#include "wmod/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wmod {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::D: return "D";
        case Family::E: return "E";
    }
    return "?";
}

std::pair<Family, int> parse_family_rank(const std::string& token) {
    if (token.size() < 2) throw std::domain_error("bad type token: " + token);
    char f = static_cast<char>(std::toupper(token[0]));
    for (std::size_t i = 1; i < token.size(); ++i)
        if (!std::isdigit(token[i])) throw std::domain_error("bad type token: " + token);
    int rank = std::stoi(token.substr(1));
    switch (f) {
        case 'A': return {Family::A, rank};
        case 'D': return {Family::D, rank};
        case 'E': return {Family::E, rank};
        case 'B':
        case 'C':
        case 'F':
        case 'G':
            throw std::domain_error("type " + token +
                                    " is not simply laced; only A/D/E are constructible");
        default: throw std::domain_error("bad type token: " + token);
    }
}

Weight Weight::operator+(const Weight& o) const {
    std::vector<Rat> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    std::vector<Rat> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return Weight(std::move(c));
}

Weight Weight::operator-() const {
    std::vector<Rat> c(coords_);
    for (auto& x : c) x = -x;
    return Weight(std::move(c));
}

Weight operator*(const Rat& s, const Weight& w) {
    std::vector<Rat> c(w.coords_);
    for (auto& x : c) x *= s;
    return Weight(std::move(c));
}

bool Weight::is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return is_integer(r); });
}

bool Weight::is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& r) { return r >= 0; });
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << rat_str(coords_[i]);
    }
    os << "]";
    return os.str();
}

Weight PibarElement::apply(const Weight& w) const {
    int n = static_cast<int>(matrix.size());
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (matrix[i][j] != 0) out[i] += Rat(matrix[i][j]) * w[j];
    return Weight(std::move(out));
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(Family f, int rank) {
    std::vector<std::pair<int, int>> e;
    switch (f) {
        case Family::A:
            for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 1; i < rank - 2; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(rank - 2, rank - 1);
            e.emplace_back(rank - 2, rank);
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
            e.emplace_back(1, 3);
            e.emplace_back(3, 4);
            for (int i = 4; i < rank; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(2, 4);
            break;
    }
    return e;
}

// Exact inverse and determinant of a small integer matrix.
std::pair<std::vector<std::vector<Rat>>, Rat> invert(const std::vector<std::vector<long>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        a[i][n + i] = 1;
    }
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("singular Cartan matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = Rat(1) / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return {out, det};
}

// Simple reflection on weight coordinates; returns the transformed copy.
std::vector<Rat> reflect_coords(const std::vector<std::vector<long>>& cartan,
                                const std::vector<Rat>& c, int i0) {
    std::vector<Rat> out(c);
    for (std::size_t k = 0; k < c.size(); ++k) out[k] -= c[i0] * Rat(cartan[k][i0]);
    return out;
}

std::vector<std::vector<long>> identity_matrix(int n) {
    std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::vector<std::vector<long>> matmul(const std::vector<std::vector<long>>& a,
                                      const std::vector<std::vector<long>>& b) {
    int n = static_cast<int>(a.size());
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

std::vector<std::vector<long>> reflection_matrix(const std::vector<std::vector<long>>& cartan,
                                                 int i0) {
    int n = static_cast<int>(cartan.size());
    auto m = identity_matrix(n);
    for (int k = 0; k < n; ++k) m[k][i0] -= cartan[k][i0];
    return m;
}

// Longest element of the subgroup generated by the listed reflections, as
// (matrix, length): found by sorting -rho_par back to dominance.
std::pair<std::vector<std::vector<long>>, long> longest_element(
    const std::vector<std::vector<long>>& cartan, const std::vector<int>& gens /*0-based*/) {
    int n = static_cast<int>(cartan.size());
    std::vector<Rat> u(n, Rat(0));
    for (int g : gens) u[g] = -1;
    auto m = identity_matrix(n);
    long len = 0;
    for (;;) {
        int pick = -1;
        for (int g : gens)
            if (u[g] < 0) {
                pick = g;
                break;
            }
        if (pick < 0) break;
        u = reflect_coords(cartan, u, pick);
        // the word is read off right-to-left, but the matrix product of
        // involutions along the path is the same element
        m = matmul(m, reflection_matrix(cartan, pick));
        ++len;
    }
    return {m, len};
}

}  // namespace

Weight RootSystem::fundamental(int i) const {
    std::vector<Rat> c(rank, Rat(0));
    c[i - 1] = 1;
    return Weight(std::move(c));
}

Weight RootSystem::rho() const { return Weight(std::vector<Rat>(rank, Rat(1))); }

Weight RootSystem::x0() const { return rho() - fundamental(star_index); }

Weight RootSystem::simple_root(int i) const {
    std::vector<Rat> c(rank);
    for (int k = 0; k < rank; ++k) c[k] = Rat(cartan[k][i - 1]);
    return Weight(std::move(c));
}

std::vector<long> RootSystem::to_alpha_scaled(const Weight& w) const {
    std::vector<long> out(rank, 0);
    for (int i = 0; i < rank; ++i) {
        Rat x(0);
        for (int j = 0; j < rank; ++j) x += gram[i][j] * w[j];
        x *= center_order;
        if (!is_integer(x))
            throw std::domain_error("weight has alpha-coordinates outside (1/center)Z");
        out[i] = to_long(x);
    }
    return out;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
    if (!w.is_integral()) return false;
    for (int i = 0; i < rank; ++i) {
        Rat x(0);
        for (int j = 0; j < rank; ++j) x += gram[i][j] * w[j];
        if (!is_integer(x)) return false;
    }
    return true;
}

long RootSystem::height_theta_pairing(const Weight& w) const {
    Rat s(0);
    for (int j = 0; j < rank; ++j) s += Rat(marks[j]) * w[j];
    return to_long(s);
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            if (b[j] != 0) s += a[i] * gram[i][j] * b[j];
    }
    return s;
}

Rat RootSystem::inner_root(const Weight& w, const std::vector<long>& root_alpha) const {
    Rat s(0);
    for (int j = 0; j < rank; ++j)
        if (root_alpha[j] != 0) s += Rat(root_alpha[j]) * w[j];
    return s;
}

Rat inner_product(const RootSystem& rs, const Weight& a, const Weight& b) {
    return rs.inner(a, b);
}

RootSystem build_root_system(Family family, int rank, std::optional<int> star_override) {
    switch (family) {
        case Family::A:
            if (rank < 1) throw std::domain_error("type A needs rank >= 1");
            break;
        case Family::D:
            if (rank < 4) throw std::domain_error("type D needs rank >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw std::domain_error("type E needs rank in {6,7,8}");
            break;
    }

    RootSystem rs;
    rs.family = family;
    rs.rank = rank;

    rs.cartan.assign(rank, std::vector<long>(rank, 0));
    for (int i = 0; i < rank; ++i) rs.cartan[i][i] = 2;
    for (auto [a, b] : diagram_edges(family, rank)) {
        rs.cartan[a - 1][b - 1] = -1;
        rs.cartan[b - 1][a - 1] = -1;
    }

    // Positive roots: reflection closure of the simple roots in alpha coords.
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<long> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto r = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            long pairing = 0;
            for (int j = 0; j < rank; ++j) pairing += rs.cartan[i][j] * r[j];
            if (pairing == 0) continue;
            auto img = r;
            img[i] -= pairing;
            if (img[i] < 0 && std::all_of(img.begin(), img.end(), [](long v) { return v <= 0; }))
                continue;  // negative root
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    rs.positive_roots.assign(seen.begin(), seen.end());
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [](const std::vector<long>& a, const std::vector<long>& b) {
                  long ha = std::accumulate(a.begin(), a.end(), 0L);
                  long hb = std::accumulate(b.begin(), b.end(), 0L);
                  return ha != hb ? ha < hb : a < b;
              });

    auto [gram, det] = invert(rs.cartan);
    rs.gram = std::move(gram);

    rs.marks = rs.positive_roots.back();
    {
        std::vector<Rat> tw(rank, Rat(0));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) tw[i] += Rat(rs.cartan[i][j]) * rs.marks[j];
        rs.theta = Weight(std::move(tw));
    }
    rs.coxeter = std::accumulate(rs.marks.begin(), rs.marks.end(), 0L) + 1;
    rs.dual_coxeter = rs.coxeter;

    for (int i = 0; i < rank; ++i)
        if (rs.marks[i] == 1) rs.cominuscule.push_back(i + 1);
    rs.center_order = static_cast<long>(rs.cominuscule.size()) + 1;
    if (Rat(rs.center_order) != det)
        throw std::logic_error("center order disagrees with the Cartan determinant");

    switch (family) {
        case Family::A: rs.form_denominator = rank + 1; break;
        case Family::D: rs.form_denominator = (rank % 2 == 0) ? 2 : 4; break;
        case Family::E: rs.form_denominator = rank == 6 ? 3 : (rank == 7 ? 2 : 1); break;
    }
    {
        Int lcm_den = 1;
        for (const auto& row : rs.gram)
            for (const auto& g : row) {
                Int l;
                mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), g.get_den().get_mpz_t());
                lcm_den = l;
            }
        if (lcm_den != rs.form_denominator)
            throw std::logic_error("form denominator disagrees with the Gram matrix");
        if (rs.center_order % rs.form_denominator != 0)
            throw std::logic_error("form denominator must divide the center order");
    }

    int default_star = 0;
    switch (family) {
        case Family::A: default_star = (rank + 2) / 2; break;
        case Family::D: default_star = rank - 2; break;
        case Family::E: default_star = 4; break;
    }
    rs.star_index = default_star;
    if (star_override) {
        if (family == Family::A) {
            if (*star_override < 1 || *star_override > rank)
                throw std::domain_error("star node out of range");
            rs.star_index = *star_override;
        } else if (*star_override != default_star) {
            throw std::domain_error("the distinguished node is fixed outside type A");
        }
    }

    // pibar_j = (longest element of the parabolic without node j) * (longest
    // element): the linear part of the affine diagram rotation sending node 0
    // to node j.
    std::vector<int> all_gens(rank);
    std::iota(all_gens.begin(), all_gens.end(), 0);
    auto [w0, w0_len] = longest_element(rs.cartan, all_gens);
    for (int j : rs.cominuscule) {
        std::vector<int> sub;
        for (int g = 0; g < rank; ++g)
            if (g != j - 1) sub.push_back(g);
        auto [wj, wj_len] = longest_element(rs.cartan, sub);
        PibarElement pe;
        pe.j = j;
        pe.matrix = matmul(wj, w0);
        pe.sign = ((w0_len + wj_len) % 2 == 0) ? 1 : -1;

        // Defining property: permutes {alpha_1..alpha_l, -theta}, -theta -> alpha_j.
        if (pe.apply(-rs.theta) != rs.simple_root(j))
            throw std::logic_error("pibar does not send the lowest root to node j");
        std::set<std::vector<Rat>> nodes;
        for (int i = 1; i <= rank; ++i) nodes.insert(rs.simple_root(i).coords());
        nodes.insert((-rs.theta).coords());
        for (int i = 1; i <= rank; ++i)
            if (!nodes.count(pe.apply(rs.simple_root(i)).coords()))
                throw std::logic_error("pibar does not permute the affine simple system");
        Weight shift = rs.rho() - pe.apply(rs.rho());
        if (shift != Rat(rs.dual_coxeter) * rs.fundamental(j))
            throw std::logic_error("pibar rho-shift is not h^vee * omega_j");
        rs.pibar.push_back(std::move(pe));
    }

    return rs;
}

std::vector<PibarElement> wtilde_plus(const RootSystem& rs) {
    std::vector<PibarElement> out;
    PibarElement id;
    id.j = 0;
    id.matrix = identity_matrix(rs.rank);
    id.sign = 1;
    out.push_back(std::move(id));
    for (const auto& pe : rs.pibar) out.push_back(pe);
    return out;
}

std::pair<int, Weight> shift_to_root_lattice(const RootSystem& rs, const Weight& mu, long m) {
    if (std::gcd(m, rs.center_order) != 1)
        throw std::domain_error("level shift needs gcd(level, center) = 1");
    std::optional<std::pair<int, Weight>> found;
    if (rs.in_root_lattice(mu)) found = {0, mu};
    for (const auto& pe : rs.pibar) {
        Weight img = pe.apply(mu) + Rat(m) * rs.fundamental(pe.j);
        if (rs.in_root_lattice(img)) {
            if (found) throw std::logic_error("root-lattice representative is not unique");
            found = {pe.j, img};
        }
    }
    if (!found) throw std::logic_error("no root-lattice representative in the orbit");
    return *found;
}

}  // namespace wmod
