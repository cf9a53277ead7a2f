#include "wmod/smatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wmod {

namespace {

std::vector<long> integer_coords(const Weight& w) {
    std::vector<long> out;
    out.reserve(w.coords().size());
    for (const auto& c : w.coords()) out.push_back(to_long(c));
    return out;
}

std::vector<long> cleared_coords(const Weight& w) {
    Int scale = 1;
    for (const auto& c : w.coords()) scale = lcm(scale, Int(c.get_den()));
    std::vector<long> out;
    out.reserve(w.coords().size());
    for (const auto& c : w.coords()) out.push_back(to_long(Rat(scale) * c));
    return out;
}

Cyc bucket_cyc(const ExpSumResult& res, int r, int c) {
    std::vector<Rat> b(res.bucket_order);
    for (long e = 0; e < res.bucket_order; ++e)
        b[e] = Rat(static_cast<long>(res.at(r, c, e)));
    return Cyc::from_buckets(res.bucket_order, b);
}

Int int_pow(long base, int exp) {
    Int v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

std::vector<long> grading_vector(const RootSystem& rs, unsigned seed) {
    if (seed == 0) return std::vector<long>(rs.rank, 1);  // x = rho
    std::vector<long> x(rs.rank);
    unsigned long long s = seed;
    for (int i = 0; i < rs.rank; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        x[i] = 1 + static_cast<long>((s >> 33) % 20);
    }
    return x;
}

std::string label_name(const SubregLabel& l) {
    return l.kappa.str() + " | " + l.eta.str();
}

// membership test in the smaller cyclotomic field, across incompatible orders
std::optional<Cyc> in_subfield(const Cyc& v, long m) {
    long big = std::lcm(v.order(), m);
    return v.embedded(big).descended(m);
}

struct GaugedLabels {
    std::vector<SubregLabel> canonical;
    std::vector<SubregLabel> gauged;
    std::vector<std::vector<long>> nus;    // gauged kappa + rho
    std::vector<std::vector<long>> betas;  // gauged -y(eta)
    std::vector<int> eps;
    std::vector<int> nu_index;
    std::vector<std::vector<long>> distinct_nus;
    int vacuum = 0;
};

GaugedLabels gauge_labels(const LevelData& ld) {
    GaugedLabels g;
    g.canonical = orbit_representatives(ld);
    g.vacuum = vacuum_index(ld, g.canonical);
    Gauge gauge = pick_gauge(ld);
    std::map<std::vector<long>, int> seen;
    for (const auto& l : g.canonical) {
        SubregLabel gl = regauge(ld, l, gauge);
        auto nu = integer_coords(gl.kappa + ld.rs.rho());
        auto [it, inserted] = seen.emplace(nu, static_cast<int>(g.distinct_nus.size()));
        if (inserted) g.distinct_nus.push_back(nu);
        g.nu_index.push_back(it->second);
        g.nus.push_back(std::move(nu));
        g.betas.push_back(integer_coords(gl.beta));
        g.eps.push_back(gl.sign);
        g.gauged.push_back(std::move(gl));
    }
    return g;
}

}  // namespace

std::complex<double> ScaledMatrix::entry(int r, int c) const {
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ipow[i_power % 4] / std::sqrt(radicand.get_d()) *
           (scalar.to_complex() * core[r][c].to_complex());
}

ScaledMatrix K_matrix(const RootSystem& rs, long p, int threads, bool allow_huge) {
    if (p < rs.dual_coxeter)
        throw std::domain_error("level numerator is below the dual Coxeter number");
    auto kappas = enumerate_dominant(rs, p - rs.dual_coxeter);
    const long d = rs.form_denominator;
    ExpSumJob job;
    for (const auto& k : kappas) job.rows.push_back(integer_coords(k + rs.rho()));
    job.cols = job.rows;
    job.exp_num = -d;
    job.bucket_order = d * p;
    auto res = weyl_exp_sums(rs, {job}, threads, allow_huge).front();
    const int n = static_cast<int>(kappas.size());
    ScaledMatrix m;
    m.i_power = rs.num_positive_roots() % 4;
    m.radicand = int_pow(p, rs.rank) * rs.center_order;
    m.core.assign(n, std::vector<Cyc>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.core[r][c] = bucket_cyc(res, r, c);
    for (const auto& k : kappas) m.row_names.push_back(k.str());
    m.col_names = m.row_names;
    return m;
}

ScaledMatrix K_restrict(const RootSystem& rs, long p, const ScaledMatrix& K, KRestrict mode) {
    auto kappas = enumerate_dominant(rs, p - rs.dual_coxeter);
    if (static_cast<int>(kappas.size()) != K.size())
        throw std::domain_error("K-matrix size does not match the level");
    std::vector<int> keep;
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        Weight probe = (mode == KRestrict::integral) ? kappas[i] : kappas[i] + rs.rho();
        if (rs.in_root_lattice(probe)) keep.push_back(static_cast<int>(i));
    }
    const int n = static_cast<int>(keep.size());
    ScaledMatrix m;
    m.i_power = K.i_power;
    m.radicand = K.radicand;
    m.scalar = K.scalar;
    m.core.assign(n, std::vector<Cyc>(n));
    bool all_descend = true;
    for (int r = 0; r < n && all_descend; ++r)
        for (int c = 0; c < n && all_descend; ++c)
            if (!in_subfield(K.core[keep[r]][keep[c]], p)) all_descend = false;
    if (mode == KRestrict::shifted && !all_descend)
        throw std::logic_error("shifted-restricted K entry failed to lie in the p-th field");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Cyc& v = K.core[keep[r]][keep[c]];
            m.core[r][c] = all_descend ? *in_subfield(v, p) : v;
        }
    for (int i : keep) {
        m.row_names.push_back(K.row_names[i]);
        m.col_names.push_back(K.col_names[i]);
    }
    return m;
}

ScaledMatrix C_matrix(const RootSystem& rs, long q, const Weight& x, int threads,
                      bool allow_huge) {
    auto etas = enumerate_subreg_coweights(rs, q);
    if (etas.empty()) throw std::domain_error("no coweights at this denominator");
    const long d = rs.form_denominator;
    ExpSumJob job;
    std::vector<int> eps;
    for (const auto& eta : etas) {
        WeylElement y = choose_y_eta(rs, eta, q);
        job.rows.push_back(integer_coords(-apply(y, eta)));
        eps.push_back(y.sign);
    }
    job.cols = job.rows;
    job.exp_num = -d;
    job.bucket_order = d * q;
    job.wsr_only = true;
    job.coefficient_x = cleared_coords(x);
    long sx = job.coefficient_x[rs.star_index - 1];
    if (sx == 0) throw std::domain_error("grading vector is orthogonal to the star root");
    auto res = weyl_exp_sums(rs, {job}, threads, allow_huge).front();
    const int n = static_cast<int>(etas.size());
    ScaledMatrix m;
    m.core.assign(n, std::vector<Cyc>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m.core[r][c] = rat(eps[r] * eps[c], sx) * bucket_cyc(res, r, c);
    for (const auto& eta : etas) m.row_names.push_back(eta.str());
    m.col_names = m.row_names;
    return m;
}

ScaledMatrix C_restrict(const RootSystem& rs, long q, const ScaledMatrix& C) {
    auto etas = enumerate_subreg_coweights(rs, q);
    if (static_cast<int>(etas.size()) != C.size())
        throw std::domain_error("C-matrix size does not match the denominator");
    std::vector<int> keep;
    for (std::size_t i = 0; i < etas.size(); ++i)
        if (rs.in_root_lattice(etas[i])) keep.push_back(static_cast<int>(i));
    const int n = static_cast<int>(keep.size());
    ScaledMatrix m;
    m.i_power = C.i_power;
    m.radicand = C.radicand;
    m.scalar = C.scalar;
    m.core.assign(n, std::vector<Cyc>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            auto v = in_subfield(C.core[keep[r]][keep[c]], q);
            if (!v)
                throw std::logic_error(
                    "restricted long-root entry failed to lie in the q-th field");
            m.core[r][c] = *v;
        }
    for (int i : keep) {
        m.row_names.push_back(C.row_names[i]);
        m.col_names.push_back(C.col_names[i]);
    }
    return m;
}

ScaledMatrix S_subreg(const LevelData& ld, int threads, bool allow_huge, unsigned x_seed) {
    const RootSystem& rs = ld.rs;
    GaugedLabels g = gauge_labels(ld);
    const long d = rs.form_denominator;
    auto x = grading_vector(rs, x_seed);
    ExpSumJob cjob;
    cjob.rows = g.betas;
    cjob.cols = g.betas;
    cjob.exp_num = -d * ld.p;
    cjob.bucket_order = d * ld.q;
    cjob.wsr_only = true;
    cjob.coefficient_x = x;
    ExpSumJob kjob;
    kjob.rows = g.distinct_nus;
    kjob.cols = g.distinct_nus;
    kjob.exp_num = -d * ld.q;
    kjob.bucket_order = d * ld.p;
    auto res = weyl_exp_sums(rs, {cjob, kjob}, threads, allow_huge);
    const long sx = x[rs.star_index - 1];
    const int n = static_cast<int>(g.canonical.size());
    const int nnu = static_cast<int>(g.distinct_nus.size());
    std::vector<std::vector<Cyc>> ksum(nnu, std::vector<Cyc>(nnu));
    for (int a = 0; a < nnu; ++a)
        for (int b = 0; b < nnu; ++b) ksum[a][b] = bucket_cyc(res[1], a, b);
    ScaledMatrix m;
    m.i_power = 1;
    m.radicand = int_pow(ld.p * ld.q, rs.rank) * rs.center_order;
    m.core.assign(n, std::vector<Cyc>(n));
    const bool fold = nnu == 1;  // keep the core in the q-side field when possible
    if (fold) m.scalar = rat(1, sx) * ksum[0][0];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Cyc v = bucket_cyc(res[0], r, c);
            if (fold)
                m.core[r][c] = Rat(g.eps[r] * g.eps[c]) * v;
            else
                m.core[r][c] =
                    rat(g.eps[r] * g.eps[c], sx) * (v * ksum[g.nu_index[r]][g.nu_index[c]]);
        }
    for (const auto& l : g.canonical) m.row_names.push_back(label_name(l));
    m.col_names = m.row_names;
    if (!is_symmetric(m)) throw std::logic_error("subregular S-matrix is not symmetric");
    std::string why;
    if (!unitary(m, &why)) throw std::logic_error("subregular S-matrix is not unitary: " + why);
    return m;
}

ScaledMatrix S_via_aB(const LevelData& ld, int threads, bool allow_huge) {
    const RootSystem& rs = ld.rs;
    GaugedLabels g = gauge_labels(ld);
    const long d = rs.form_denominator;
    auto x = grading_vector(rs, 0);
    const int n = static_cast<int>(g.canonical.size());
    ExpSumJob cjob;
    for (int r = 0; r < n; ++r) {
        std::vector<long> row(rs.rank);
        for (int i = 0; i < rs.rank; ++i) row[i] = ld.q * g.nus[r][i] + ld.p * g.betas[r][i];
        cjob.rows.push_back(std::move(row));
    }
    cjob.cols = g.betas;
    cjob.exp_num = -d;
    cjob.bucket_order = d * ld.q;
    cjob.wsr_only = true;
    cjob.coefficient_x = x;
    ExpSumJob kjob;
    kjob.rows = g.distinct_nus;
    kjob.cols = g.distinct_nus;
    kjob.exp_num = -d * ld.q;
    kjob.bucket_order = d * ld.p;
    auto res = weyl_exp_sums(rs, {cjob, kjob}, threads, allow_huge);
    const long sx = x[rs.star_index - 1];
    const int nnu = static_cast<int>(g.distinct_nus.size());
    std::vector<std::vector<Cyc>> ksum(nnu, std::vector<Cyc>(nnu));
    for (int a = 0; a < nnu; ++a)
        for (int b = 0; b < nnu; ++b) ksum[a][b] = bucket_cyc(res[1], a, b);
    ScaledMatrix m;
    m.i_power = 1;
    m.radicand = int_pow(ld.p * ld.q, rs.rank) * rs.center_order;
    m.core.assign(n, std::vector<Cyc>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            // w-free cross phase between the column weight and the row coweight
            Weight nu_c = g.gauged[c].kappa + rs.rho();
            long e = to_long(Rat(d) * rs.inner(nu_c, g.gauged[r].beta));
            Cyc phase = Cyc::zeta(d, -e);
            Cyc v = phase * bucket_cyc(res[0], r, c);
            m.core[r][c] = rat(g.eps[r] * g.eps[c], sx) *
                           (v * ksum[g.nu_index[r]][g.nu_index[c]]);
        }
    for (const auto& l : g.canonical) m.row_names.push_back(label_name(l));
    m.col_names = m.row_names;
    return m;
}

ScaledValue a_B(const LevelData& ld, const SubregLabel& a, const SubregLabel& b) {
    const RootSystem& rs = ld.rs;
    const long d = rs.form_denominator;
    Weight nu_a = a.kappa + rs.rho(), nu_b = b.kappa + rs.rho();
    const long order = d * ld.p;
    std::vector<Rat> buckets(order, Rat(0));
    for (const auto& w : enumerate(rs)) {
        long e = mod_reduce(Int(Rat(-d * ld.q) * rs.inner(apply(w, nu_a), nu_b)), order);
        buckets[e] += w.sign;
    }
    Cyc ksum = Cyc::from_buckets(order, buckets);
    long e1 = to_long(Rat(d) * (rs.inner(nu_a, b.beta) + rs.inner(nu_b, a.beta)));
    long e2 = to_long(Rat(d * ld.p) * rs.inner(a.beta, b.beta));
    Cyc phase = Cyc::zeta(d, -e1) * Cyc::zeta(d * ld.q, -e2);
    ScaledValue v;
    v.i_power = 0;
    v.radicand = int_pow(ld.p * ld.q, rs.rank) * rs.center_order;
    v.value = Rat(a.sign * b.sign) * (phase * ksum);
    return v;
}

ScaledMatrix galois_matrix(long a, const ScaledMatrix& m) {
    ScaledMatrix out = m;
    out.scalar = m.scalar.galois(a);
    for (auto& row : out.core)
        for (auto& v : row) v = v.galois(a);
    return out;
}

ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b) {
    const int na = a.size(), nb = b.size();
    ScaledMatrix m;
    m.i_power = (a.i_power + b.i_power) % 4;
    m.radicand = a.radicand * b.radicand;
    m.scalar = a.scalar * b.scalar;
    m.core.assign(na * nb, std::vector<Cyc>(na * nb));
    for (int ra = 0; ra < na; ++ra)
        for (int rb = 0; rb < nb; ++rb)
            for (int ca = 0; ca < na; ++ca)
                for (int cb = 0; cb < nb; ++cb)
                    m.core[ra * nb + rb][ca * nb + cb] = a.core[ra][ca] * b.core[rb][cb];
    for (int ra = 0; ra < na; ++ra)
        for (int rb = 0; rb < nb; ++rb) {
            m.row_names.push_back(a.row_names[ra] + " (x) " + b.row_names[rb]);
            m.col_names.push_back(a.col_names[ra] + " (x) " + b.col_names[rb]);
        }
    return m;
}

bool proportional(const ScaledMatrix& a, const ScaledMatrix& b, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = a.size();
    if (n != b.size()) return fail("size mismatch");
    int r0 = -1, c0 = -1;
    for (int r = 0; r < n && r0 < 0; ++r)
        for (int c = 0; c < n && r0 < 0; ++c)
            if (!a.core[r][c].is_zero()) {
                r0 = r;
                c0 = c;
            }
    if (r0 < 0) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!b.core[r][c].is_zero()) return fail("zero matrix against nonzero matrix");
        return true;
    }
    if (b.core[r0][c0].is_zero()) return fail("zero patterns disagree");
    const Cyc& ar = a.core[r0][c0];
    const Cyc& br = b.core[r0][c0];
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (a.core[r][c] * br != ar * b.core[r][c])
                return fail("cross-ratio fails at (" + std::to_string(r) + "," +
                            std::to_string(c) + ")");
    return true;
}

bool scaled_equal(const ScaledMatrix& a, const ScaledMatrix& b, std::string* why) {
    if (!proportional(a, b, why)) return false;
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = a.size();
    int r0 = -1, c0 = -1;
    for (int r = 0; r < n && r0 < 0; ++r)
        for (int c = 0; c < n && r0 < 0; ++c)
            if (!a.core[r][c].is_zero()) {
                r0 = r;
                c0 = c;
            }
    if (r0 < 0) return true;
    // an entry is i^a / sqrt(R) * folded; compare exact squares, then pin the sign numerically
    Cyc fa = a.folded(r0, c0), fb = b.folded(r0, c0);
    int sa = (a.i_power % 2 == 0) ? 1 : -1;
    int sb = (b.i_power % 2 == 0) ? 1 : -1;
    Cyc lhs = Rat(Int(sa) * b.radicand) * (fa * fa);
    Cyc rhs = Rat(Int(sb) * a.radicand) * (fb * fb);
    if (lhs != rhs) return fail("squared magnitudes differ");
    auto ea = a.entry(r0, c0), eb = b.entry(r0, c0);
    double scale = std::max(1.0, std::abs(ea));
    if (std::abs(ea - eb) > 1e-8 * scale) return fail("entries differ in sign");
    return true;
}

bool is_symmetric(const ScaledMatrix& m) {
    const int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (m.core[r][c] != m.core[c][r]) return false;
    return true;
}

bool unitary(const ScaledMatrix& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto sr = (m.scalar * m.scalar.conj()).to_rational();
    if (!sr || *sr == 0) return fail("scalar norm is not a nonzero rational");
    Cyc target = Cyc::from_rational(Rat(m.radicand) / *sr);
    const int n = m.size();
    for (int r = 0; r < n; ++r)
        for (int r2 = r; r2 < n; ++r2) {
            Cyc dot = Cyc::zero(1);
            for (int c = 0; c < n; ++c) dot = dot + m.core[r][c] * m.core[r2][c].conj();
            Cyc expect = (r == r2) ? target : Cyc::zero(1);
            if (dot != expect)
                return fail("row pair (" + std::to_string(r) + "," + std::to_string(r2) +
                            ") is not orthonormal");
        }
    return true;
}

std::vector<int> conjugation_permutation(const ScaledMatrix& m) {
    const int n = m.size();
    std::vector<int> perm(n, -1);
    std::optional<Cyc> common;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Cyc v = Cyc::zero(1);
            for (int k = 0; k < n; ++k) v = v + m.core[r][k] * m.core[k][c];
            if (v.is_zero()) continue;
            if (perm[r] != -1)
                throw std::logic_error("matrix square has two entries in a row");
            perm[r] = c;
            if (!common) common = v;
            else if (*common != v)
                throw std::logic_error("matrix square entries are not constant");
        }
        if (perm[r] == -1) throw std::logic_error("matrix square has an empty row");
    }
    // the represented square must be exactly the permutation matrix
    Cyc lhs = m.scalar * m.scalar * *common;
    Rat sign = (m.i_power % 2 == 0) ? Rat(1) : Rat(-1);  // (i^a)^2 = (-1)^a
    if (lhs != Cyc::from_rational(sign * Rat(m.radicand)))
        throw std::logic_error("matrix square is not the identity-normalized permutation");
    for (int r = 0; r < n; ++r)
        if (perm[perm[r]] != r) throw std::logic_error("conjugation fails to be an involution");
    return perm;
}

}  // namespace wmod
