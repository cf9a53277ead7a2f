#include "wmod/numerology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wmod {

Rat central_charge(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    Weight rho = rs.rho(), x0 = rs.x0();
    return Rat(rs.rank + 2) - 12 * (rat(ld.q, ld.p) * rs.inner(rho, rho)) +
           24 * rs.inner(rho, x0) - 12 * (rat(ld.p, ld.q) * rs.inner(x0, x0));
}

std::optional<Rat> central_charge_closed_form(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    const long p = ld.p, q = ld.q, n = rs.rank;
    switch (rs.family) {
        case Family::A:
            if (n % 2 == 1 && rs.star_index == (n + 1) / 2)
                return Rat(-n * (n + 1) * (n + 2)) * rat(q, p) +
                       Rat(2 * n * n * n + 3 * n * n - n - 1) -
                       Rat(n * (n - 1) * (n + 1)) * rat(p, q);
            return std::nullopt;
        case Family::D:
            return Rat(-2 * n * (13 - 9 * n + 2 * n * n)) * rat(p, q) +
                   Rat(26 + 17 * n - 24 * n * n + 8 * n * n * n) -
                   Rat(2 * n * (1 - 3 * n + 2 * n * n)) * rat(q, p);
        case Family::E:
            if (n == 6) return rat(-8 * (9 * p - 13 * q) * (7 * p - 9 * q), p * q);
            if (n == 7) return rat(-9 * (14 * p - 19 * q) * (11 * p - 14 * q), p * q);
            return rat(-10 * (24 * p - 31 * q) * (19 * p - 24 * q), p * q);
    }
    return std::nullopt;
}

Rat conformal_dimension(const LevelData& ld, const Weight& lambda) {
    return conformal_weight(ld.rs, ld.p, ld.q, lambda);
}

Rat effective_central_charge(const LevelData& ld) {
    auto labels = orbit_representatives(ld);
    Rat hmin = labels.front().h;
    for (const auto& l : labels) hmin = std::min(hmin, l.h);
    return central_charge(ld) - 24 * hmin;
}

Rat asymptotic_growth(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    long dim = rs.rank + 2 * rs.num_positive_roots();
    return Rat(rs.rank + 2) - rat(rs.dual_coxeter * dim, ld.p * ld.q);
}

double asymptotic_dimension(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    Weight rho = rs.rho(), x0 = rs.x0();
    double amp = std::pow(static_cast<double>(ld.p) * ld.q, -0.5 * rs.rank) /
                 (std::sqrt(static_cast<double>(rs.center_order)) * ld.q);
    for (const auto& alpha : rs.positive_roots) {
        long height = 0;
        for (long a : alpha) height += a;
        bool star_simple = height == 1 && alpha[rs.star_index - 1] == 1;
        if (!star_simple)
            amp *= 2.0 * std::sin(M_PI * to_double(rs.inner_root(x0, alpha)) / ld.q);
        amp *= 2.0 * std::sin(M_PI * to_double(rs.inner_root(rho, alpha)) / ld.p);
    }
    return amp;
}

Rat singular_vector_conformal_weight(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    return Rat(ld.p - rs.dual_coxeter + 1) * Rat(ld.q - rs.height_theta_pairing(rs.x0()));
}

bool typeA_selfdual(long n, long p, long q, long m) {
    if (n < 2) return true;
    Rat factor = rat((n - 1) * (n - 2 * m), 2 * n);
    return factor * (rat(p, q) - rat(n, n - 1)) == 0;
}

Rat vir_h(long p, long q, int r, int s) {
    long t = p * r - q * s;
    return rat(t * t - (p - q) * (p - q), 4 * p * q);
}

VirData vir_minimal_model(long p, long q) {
    if (q < 2 || q >= p || std::gcd(p, q) != 1)
        throw std::domain_error("minimal model needs coprime parameters with 2 <= q < p");
    VirData v;
    v.p = p;
    v.q = q;
    v.c = Rat(1) - rat(6 * (p - q) * (p - q), p * q);
    std::set<std::pair<int, int>> seen;
    for (int r = 1; r < q; ++r)
        for (int s = 1; s < p; ++s)
            seen.insert(std::min(std::pair<int, int>(r, s),
                                 std::pair<int, int>(q - r, p - s)));
    v.irreps.assign(seen.begin(), seen.end());
    for (auto& [r, s] : v.irreps) v.h.push_back(vir_h(p, q, r, s));
    v.vacuum = static_cast<int>(
        std::find(v.irreps.begin(), v.irreps.end(), std::pair<int, int>(1, 1)) -
        v.irreps.begin());
    const int n = static_cast<int>(v.irreps.size());
    v.S.i_power = 0;
    v.S.radicand = Int(2 * p * q);
    v.S.core.assign(n, std::vector<Cyc>(n));
    for (int a = 0; a < n; ++a) {
        auto [r, s] = v.irreps[a];
        for (int b = 0; b < n; ++b) {
            auto [r2, s2] = v.irreps[b];
            int sign = ((r * s2 + s * r2) % 2 == 0) ? 1 : -1;
            Cyc t1 = Cyc::zeta(2 * q, p * r * r2) - Cyc::zeta(2 * q, -p * r * r2);
            Cyc t2 = Cyc::zeta(2 * p, q * s * s2) - Cyc::zeta(2 * p, -q * s * s2);
            v.S.core[a][b] = Rat(sign) * (t1 * t2);
        }
        v.S.row_names.push_back("(" + std::to_string(r) + "," + std::to_string(s) + ")");
    }
    v.S.col_names = v.S.row_names;
    if (v.S.entry(v.vacuum, v.vacuum).real() <= 0)
        for (auto& row : v.S.core)
            for (auto& e : row) e = -e;
    return v;
}

FusionRing vir_fusion(const VirData& v) { return verlinde(v.S, v.vacuum); }

double vir_asymptotic_dimension(const VirData& v, int r, int s) {
    const long p = v.p, q = v.q;
    long r0 = 0;
    for (long t = 1; t < q; ++t)
        if ((t * p) % q == 1) {
            r0 = t;
            break;
        }
    if (r0 == 0) throw std::logic_error("no inverse of p modulo q");
    long s0 = (r0 * p - 1) / q;
    int sign = ((static_cast<long>(r) + s) * (r0 + s0)) % 2 == 0 ? 1 : -1;
    return std::sqrt(8.0 / (static_cast<double>(p) * q)) * sign *
           std::sin(M_PI * (p - q) * r * r0 / static_cast<double>(q)) *
           std::sin(M_PI * (p - q) * s * s0 / static_cast<double>(p));
}

std::string SporadicReport::pretty() const {
    std::ostringstream os;
    os << "c = " << rat_str(c) << ", c_eff = " << rat_str(c_eff) << ", modules = " << n_irreps
       << ", amplitude = " << amp_w << "\n";
    switch (kind) {
        case Kind::direct:
            os << "identified with Vir_{" << vir_p << "," << vir_q << "}";
            if (fusion_checked) os << " (fusion rings agree)";
            break;
        case Kind::extension:
            os << "identified with an extension of Vir_{" << vir_p << "," << vir_q << "} by "
               << ext_mult << " x L(" << ext_r << "," << ext_s << ")";
            break;
        case Kind::unidentified:
            os << "no identification";
            break;
    }
    if (amp_sign_flip) os << " [amplitude matches up to sign]";
    if (!note.empty()) os << " -- " << note;
    os << "\n";
    return os.str();
}

SporadicReport sporadic_report(const LevelData& ld, int threads, bool allow_huge) {
    SporadicReport rep;
    rep.c = central_charge(ld);
    auto labels = orbit_representatives(ld);
    rep.n_irreps = Int(static_cast<long>(labels.size()));
    Rat hmin = labels.front().h;
    for (const auto& l : labels) hmin = std::min(hmin, l.h);
    rep.c_eff = rep.c - 24 * hmin;
    rep.amp_w = asymptotic_dimension(ld);
    if (rep.c_eff >= 1) {
        rep.note = "effective central charge is at least one";
        return rep;
    }
    auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y));
    };
    std::vector<std::pair<long, long>> cands;  // (small, large)
    for (long a = 2; a <= 70; ++a)
        for (long b = a + 1; b <= 70; ++b)
            if (std::gcd(a, b) == 1 && Rat(1) - rat(6 * (b - a) * (b - a), a * b) == rep.c)
                cands.emplace_back(a, b);
    for (auto [a, b] : cands) {
        if (Int((b - 1) * (a - 1) / 2) != rep.n_irreps) continue;
        VirData vir = vir_minimal_model(b, a);
        Rat vhmin = *std::min_element(vir.h.begin(), vir.h.end());
        if (vir.c - 24 * vhmin != rep.c_eff) continue;
        double av = vir_asymptotic_dimension(vir, 1, 1);
        bool flip = false;
        if (!close(rep.amp_w, av)) {
            if (close(-rep.amp_w, av)) flip = true;
            else continue;
        }
        auto S = S_subreg(ld, threads, allow_huge);
        auto ring = verlinde(S, vacuum_index(ld, labels));
        if (!ring_isomorphic(ring, vir_fusion(vir))) continue;
        rep.kind = SporadicReport::Kind::direct;
        rep.vir_p = a;
        rep.vir_q = b;
        rep.amp_match = av;
        rep.amp_sign_flip = flip;
        rep.fusion_checked = true;
        return rep;
    }
    for (auto [a, b] : cands) {
        VirData vir = vir_minimal_model(b, a);
        int er = 0, es = 0, hits = 0;
        for (std::size_t i = 0; i < vir.irreps.size(); ++i)
            if (is_integer(vir.h[i]) && vir.h[i] >= 1) {
                er = vir.irreps[i].first;
                es = vir.irreps[i].second;
                ++hits;
            }
        if (hits != 1) continue;
        double a11 = vir_asymptotic_dimension(vir, 1, 1);
        double aext = vir_asymptotic_dimension(vir, er, es);
        for (int flip = 0; flip < 2; ++flip) {
            double amp = flip ? -rep.amp_w : rep.amp_w;
            double mult = (amp - a11) / aext;
            long m = std::llround(mult);
            if (m >= 1 && close(mult, static_cast<double>(m))) {
                rep.kind = SporadicReport::Kind::extension;
                rep.vir_p = a;
                rep.vir_q = b;
                rep.ext_r = er;
                rep.ext_s = es;
                rep.ext_mult = m;
                rep.amp_match = a11 + m * aext;
                rep.amp_sign_flip = flip != 0;
                return rep;
            }
        }
    }
    rep.note = "no minimal-model identification found";
    return rep;
}

}  // namespace wmod
