#include "wmod/admissible.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wmod {

namespace {

std::vector<long> legal_q_list(Family family, int rank, Mode mode) {
    if (mode == Mode::typeA) {
        if (family != Family::A)
            throw std::domain_error("the rectangular-block classes exist in type A only");
        std::vector<long> qs(rank);
        std::iota(qs.begin(), qs.end(), 1L);
        return qs;
    }
    switch (family) {
        case Family::A: return {static_cast<long>(rank)};
        case Family::D: return {2L * rank - 4, 2L * rank - 3};
        case Family::E:
            if (rank == 6) return {9, 10, 11};
            if (rank == 7) return {14, 15, 16, 17};
            return {24, 25, 26, 27, 28, 29};
    }
    throw std::logic_error("unreachable family");
}

std::string mode_name(Mode mode) { return mode == Mode::subreg ? "subregular" : "typeA"; }

void scan_dominant(const RootSystem& rs, long budget, int i, std::vector<Rat>& cur,
                   std::vector<Weight>& out) {
    if (i == rs.rank) {
        out.emplace_back(cur);
        return;
    }
    for (long c = 0; c * rs.marks[i] <= budget; ++c) {
        cur[i] = c;
        scan_dominant(rs, budget - c * rs.marks[i], i + 1, cur, out);
    }
    cur[i] = 0;
}

int count_zero_labels(const Weight& w) {
    int zeros = 0;
    for (const auto& c : w.coords())
        if (c == 0) ++zeros;
    return zeros;
}

}  // namespace

bool denominator_allowed(Family family, int rank, long q, Mode mode) {
    auto qs = legal_q_list(family, rank, mode);
    return std::find(qs.begin(), qs.end(), q) != qs.end();
}

std::string legal_denominators(Family family, int rank, Mode mode) {
    auto qs = legal_q_list(family, rank, mode);
    std::ostringstream os;
    os << family_name(family) << rank << " (" << mode_name(mode) << ") admits q in {";
    for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? ", " : "") << qs[i];
    os << "}";
    return os.str();
}

LevelData make_level(RootSystem rs, long p, long q, Mode mode) {
    if (p < 1 || q < 1) throw std::domain_error("p and q must be positive");
    if (std::gcd(p, q) != 1)
        throw std::domain_error("p and q must be coprime, got p=" + std::to_string(p) +
                                ", q=" + std::to_string(q));
    if (!denominator_allowed(rs.family, rs.rank, q, mode))
        throw std::domain_error("denominator q=" + std::to_string(q) + " is not rational here; " +
                                legal_denominators(rs.family, rs.rank, mode));
    if (p < rs.dual_coxeter)
        throw std::domain_error("numerator p=" + std::to_string(p) +
                                " is below the dual Coxeter number h^vee=" +
                                std::to_string(rs.dual_coxeter) + " of " +
                                family_name(rs.family) + std::to_string(rs.rank));
    LevelData ld;
    ld.p = p;
    ld.q = q;
    ld.mode = mode;
    ld.k = rat(p, q) - Rat(rs.dual_coxeter);
    ld.rs = std::move(rs);
    return ld;
}

std::vector<Weight> enumerate_dominant(const RootSystem& rs, long m) {
    std::vector<Weight> out;
    if (m < 0) return out;
    std::vector<Rat> cur(rs.rank, Rat(0));
    scan_dominant(rs, m, 0, cur, out);
    return out;
}

std::vector<Weight> enumerate_subreg_coweights(const RootSystem& rs, long q) {
    std::vector<Weight> out;
    for (auto& w : enumerate_dominant(rs, q)) {
        long pairing = rs.height_theta_pairing(w);
        int zeros = count_zero_labels(w);
        if ((zeros == 1 && pairing <= q - 1) || (zeros == 0 && pairing == q))
            out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> enumerate_typeA_coweights(const RootSystem& rs, long q) {
    if (rs.family != Family::A)
        throw std::domain_error("the rectangular-block classes exist in type A only");
    long n = rs.rank + 1;
    if (q < 1 || q > rs.rank) throw std::domain_error("block count must satisfy 1 <= q <= rank");
    long r = n / q, s = n % q;
    std::vector<long> blocks(q - s, r);
    blocks.insert(blocks.end(), s, r + 1);  // ascending: next_permutation covers all orders
    std::vector<Weight> out;
    do {
        Weight eta = Weight::zero(rs.rank);
        long partial = 0;
        for (long j = 0; j + 1 < q; ++j) {
            partial += blocks[j];
            eta[static_cast<int>(partial) - 1] += 1;
        }
        out.push_back(std::move(eta));
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    std::sort(out.begin(), out.end());
    return out;
}

WeylElement choose_y_eta(const RootSystem& rs, const Weight& eta, long q) {
    int zeros = count_zero_labels(eta);
    WeylElement y;
    if (zeros == 1) {
        int k = 0;
        for (int i = 1; i <= rs.rank; ++i)
            if (eta[i - 1] == 0) k = i;
        y = element_mapping_root(rs, rs.simple_root(k), rs.simple_root(rs.star_index));
    } else if (zeros == 0) {
        if (eta != rs.rho())
            throw std::domain_error("a coweight with all labels positive must be rho");
        y = element_mapping_root(rs, -rs.theta, rs.simple_root(rs.star_index));
    } else {
        throw std::domain_error("coweight " + eta.str() + " has more than one vanishing label");
    }
    const int star = rs.star_index - 1;
    Rat yeta_star = apply(y, eta)[star];
    if (yeta_star > 0) throw std::logic_error("transported coweight has positive star label");
    for (int i = 1; i <= rs.rank; ++i) {
        Rat c = apply(y, rs.fundamental(i))[star] - rat(rs.marks[i - 1], q) * yeta_star;
        if (!is_integer(c) || c < 0)
            throw std::logic_error("transport of node " + std::to_string(i) +
                                   " violates the grading bound for " + eta.str());
    }
    return y;
}

std::vector<std::vector<long>> integral_roots(const RootSystem& rs, const Weight& lambda) {
    std::vector<std::vector<long>> out;
    Weight shifted = lambda + rs.rho();
    for (const auto& a : rs.positive_roots) {
        if (!is_integer(rs.inner_root(shifted, a))) continue;
        out.push_back(a);
        std::vector<long> neg(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
        out.push_back(std::move(neg));
    }
    return out;
}

Rat conformal_weight(const RootSystem& rs, long p, long q, const Weight& lambda) {
    Weight rho = rs.rho(), x0 = rs.x0();
    Weight shifted = lambda + rho;
    return rat(q, 2 * p) * (rs.inner(shifted, shifted) - rs.inner(rho, rho)) -
           rat(p, 2 * q) * rs.inner(x0, x0) + rs.inner(x0, rho);
}

namespace {

SubregLabel build_label(const LevelData& ld, const Weight& kappa, const Weight& eta) {
    const RootSystem& rs = ld.rs;
    SubregLabel label;
    label.kappa = kappa;
    label.eta = eta;
    label.y_eta = choose_y_eta(rs, eta, ld.q);
    label.beta = -apply(label.y_eta, eta);
    label.sign = label.y_eta.sign;
    Weight lambda = kappa - rat(ld.p, ld.q) * eta;
    label.h = conformal_weight(rs, ld.p, ld.q, lambda);
    const int star = rs.star_index - 1;
    Rat depth = apply(label.y_eta, kappa + rs.rho())[star] -
                rat(ld.p, ld.q) * apply(label.y_eta, eta)[star];
    if (!is_integer(depth) || depth < 1)
        throw std::logic_error("label (" + kappa.str() + ", " + eta.str() +
                               ") fails the dominance depth bound");
    if (integral_roots(rs, lambda).size() != 2)
        throw std::logic_error("label (" + kappa.str() + ", " + eta.str() +
                               ") does not have an A1 integral root system");
    return label;
}

using WPair = std::pair<Weight, Weight>;  // (eta, kappa) sort key order

}  // namespace

std::vector<std::pair<Weight, Weight>> pair_orbit(const LevelData& ld, const Weight& kappa,
                                                  const Weight& eta) {
    const RootSystem& rs = ld.rs;
    long shift_k = ld.p - rs.dual_coxeter;
    std::set<WPair> seen;
    for (const auto& g : wtilde_plus(rs)) {
        Weight gk = g.apply(kappa), ge = g.apply(eta);
        if (g.j > 0) {
            gk = gk + Rat(shift_k) * rs.fundamental(g.j);
            ge = ge + Rat(ld.q) * rs.fundamental(g.j);
        }
        seen.emplace(std::move(ge), std::move(gk));
    }
    std::vector<std::pair<Weight, Weight>> orbit;
    for (const auto& [e, k] : seen) orbit.emplace_back(k, e);
    return orbit;
}

std::vector<SubregLabel> orbit_representatives(const LevelData& ld) {
    const RootSystem& rs = ld.rs;
    if (ld.mode != Mode::subreg)
        throw std::domain_error(
            "module labels with transport data exist for the subregular class only");
    auto kappas = enumerate_dominant(rs, ld.p - rs.dual_coxeter);
    auto etas = enumerate_subreg_coweights(rs, ld.q);
    std::set<Weight> kappa_set(kappas.begin(), kappas.end());
    std::set<Weight> eta_set(etas.begin(), etas.end());
    std::set<WPair> visited;
    std::vector<WPair> canonicals;
    std::size_t member_total = 0;
    for (const auto& eta : etas) {
        for (const auto& kappa : kappas) {
            if (visited.count({eta, kappa})) continue;
            auto orbit = pair_orbit(ld, kappa, eta);
            member_total += orbit.size();
            std::optional<Rat> h0;
            for (const auto& [k, e] : orbit) {
                if (!kappa_set.count(k) || !eta_set.count(e))
                    throw std::logic_error("orbit of (" + kappa.str() + ", " + eta.str() +
                                           ") leaves the label grid");
                visited.insert({e, k});
                Rat h = conformal_weight(rs, ld.p, ld.q, k - rat(ld.p, ld.q) * e);
                if (!h0) h0 = h;
                else if (*h0 != h)
                    throw std::logic_error("conformal weight is not orbit-invariant at (" +
                                           kappa.str() + ", " + eta.str() + ")");
            }
            canonicals.emplace_back(orbit.front().second, orbit.front().first);
        }
    }
    if (member_total != kappas.size() * etas.size())
        throw std::logic_error("orbits do not partition the label grid");
    std::sort(canonicals.begin(), canonicals.end());
    std::vector<SubregLabel> labels;
    labels.reserve(canonicals.size());
    for (const auto& [eta, kappa] : canonicals) labels.push_back(build_label(ld, kappa, eta));
    return labels;
}

SubregLabel vacuum_label(const LevelData& ld) {
    auto orbit = pair_orbit(ld, Weight::zero(ld.rs.rank), ld.rs.x0());
    SubregLabel label = build_label(ld, orbit.front().first, orbit.front().second);
    if (label.h != 0) throw std::logic_error("vacuum label has nonzero conformal weight");
    return label;
}

int vacuum_index(const LevelData& ld, const std::vector<SubregLabel>& labels) {
    SubregLabel vac = vacuum_label(ld);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i].kappa == vac.kappa && labels[i].eta == vac.eta)
            return static_cast<int>(i);
    throw std::logic_error("vacuum label is missing from the representative list");
}

Int admissible_count(const LevelData& ld) {
    Int total = 1;
    for (int i = 0; i < ld.rs.rank; ++i) total *= ld.q;
    return total * Int(enumerate_dominant(ld.rs, ld.p - ld.rs.dual_coxeter).size());
}

Gauge pick_gauge(const LevelData& ld) {
    if (std::gcd(ld.q, ld.rs.center_order) == 1) return Gauge::eta_in_Q;
    if (std::gcd(ld.p, ld.rs.center_order) == 1) return Gauge::nu_in_Q;
    throw std::logic_error("neither p nor q is coprime to the center order");
}

SubregLabel regauge(const LevelData& ld, const SubregLabel& label, Gauge gauge) {
    const RootSystem& rs = ld.rs;
    std::optional<std::pair<Weight, Weight>> found;
    for (const auto& [kappa, eta] : pair_orbit(ld, label.kappa, label.eta)) {
        bool hit = (gauge == Gauge::eta_in_Q) ? rs.in_root_lattice(eta)
                                              : rs.in_root_lattice(kappa + rs.rho());
        if (!hit) continue;
        if (found) throw std::logic_error("gauge representative is not unique in the orbit");
        found = {kappa, eta};
    }
    if (!found) throw std::logic_error("orbit has no representative in the requested gauge");
    return build_label(ld, found->first, found->second);
}

std::string labels_to_json(const LevelData& ld, const std::vector<SubregLabel>& labels) {
    using json = nlohmann::ordered_json;
    auto coords_array = [](const Weight& w) {
        json a = json::array();
        for (const auto& c : w.coords()) a.push_back(to_long(c));
        return a;
    };
    json j;
    j["algebra"] = family_name(ld.rs.family) + std::to_string(ld.rs.rank);
    j["mode"] = mode_name(ld.mode);
    j["p"] = ld.p;
    j["q"] = ld.q;
    j["level"] = rat_str(ld.k);
    j["count"] = labels.size();
    json arr = json::array();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& l = labels[i];
        json e;
        e["index"] = i;
        e["kappa"] = coords_array(l.kappa);
        e["eta"] = coords_array(l.eta);
        e["beta"] = coords_array(l.beta);
        e["sign"] = l.sign;
        e["h"] = rat_str(l.h);
        e["y_word"] = l.y_eta.word;
        arr.push_back(std::move(e));
    }
    j["modules"] = std::move(arr);
    return j.dump(2);
}

}  // namespace wmod
