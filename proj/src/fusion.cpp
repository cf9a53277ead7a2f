#include "wmod/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wmod {

namespace {

std::string triple_text(const FusionRing& r, int i, int j, int k) {
    return r.labels[i] + " (x) " + r.labels[j] + " -> " + r.labels[k];
}

// Shared division-free Verlinde evaluation.  gamma2 is |prefactor|^2 so that
// the represented matrix is unitary; throws on any non-integer constant.
FusionRing verlinde_core(const std::vector<std::vector<Cyc>>& core,
                         const std::vector<std::string>& labels, const Rat& gamma2,
                         int vacuum) {
    const int n = static_cast<int>(core.size());
    FusionRing ring;
    ring.labels = labels;
    ring.identity = vacuum;
    ring.n = n;
    ring.tensor.assign(static_cast<std::size_t>(n) * n * n, 0);
    std::vector<Cyc> pre(n + 1, Cyc::one()), suf(n + 1, Cyc::one());
    for (int i = 0; i < n; ++i) {
        if (core[vacuum][i].is_zero())
            throw std::logic_error("vacuum row has a zero entry at column " + labels[i]);
        pre[i + 1] = pre[i] * core[vacuum][i];
    }
    for (int i = n - 1; i >= 0; --i) suf[i] = core[vacuum][i] * suf[i + 1];
    const Cyc D = pre[n];
    auto den = (D * D.conj()).to_rational();
    if (!den || *den == 0) throw std::logic_error("vacuum row norm is not rational");
    std::vector<Cyc> U(n);
    for (int X = 0; X < n; ++X)
        for (int Y = X; Y < n; ++Y) {
            for (int W = 0; W < n; ++W)
                U[W] = core[X][W] * core[Y][W] * (pre[W] * suf[W + 1]);
            for (int Z = 0; Z < n; ++Z) {
                Cyc numer = Cyc::zero(1);
                for (int W = 0; W < n; ++W) numer = numer + U[W] * core[Z][W].conj();
                auto val = (numer * D.conj()).to_rational();
                if (!val)
                    throw std::logic_error("Verlinde sum is not rational at " +
                                           triple_text(ring, X, Y, Z));
                Rat N = gamma2 * (*val / *den);
                if (!is_integer(N) || N < 0)
                    throw std::logic_error("Verlinde constant " + rat_str(N) +
                                           " is not a nonnegative integer at " +
                                           triple_text(ring, X, Y, Z));
                long v = to_long(N);
                ring.N(X, Y, Z) = v;
                ring.N(Y, X, Z) = v;
            }
        }
    ring.dual.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ring.N(i, j, vacuum) == 1 && ring.dual[i] == -1) ring.dual[i] = j;
    ring.validate();
    return ring;
}

}  // namespace

void FusionRing::validate() const {
    if (n <= 0 || static_cast<int>(labels.size()) != n ||
        static_cast<int>(dual.size()) != n ||
        tensor.size() != static_cast<std::size_t>(n) * n * n)
        throw std::domain_error("fusion ring shape mismatch");
    if (identity < 0 || identity >= n) throw std::domain_error("identity label out of range");
    for (int i = 0; i < n; ++i)
        if (dual[i] < 0 || dual[i] >= n)
            throw std::domain_error("duality fails for " + labels[i]);
    for (long v : tensor)
        if (v < 0) throw std::domain_error("negative structure constant");
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (N(identity, j, k) != (j == k ? 1 : 0))
                throw std::domain_error("unit axiom fails at " +
                                        triple_text(*this, identity, j, k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (N(i, j, k) != N(j, i, k))
                    throw std::domain_error("commutativity fails at " +
                                            triple_text(*this, i, j, k));
    for (int i = 0; i < n; ++i) {
        int hits = 0;
        for (int j = 0; j < n; ++j) {
            long v = N(i, j, identity);
            if (v == 0) continue;
            if (v != 1 || j != dual[i])
                throw std::domain_error("duality fails for " + labels[i]);
            ++hits;
        }
        if (hits != 1 || dual[dual[i]] != i)
            throw std::domain_error("duality fails for " + labels[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < n; ++m) {
                        lhs += N(i, j, m) * N(m, k, l);
                        rhs += N(j, k, m) * N(i, m, l);
                    }
                    if (lhs != rhs)
                        throw std::domain_error("associativity fails at " + labels[i] +
                                                " (x) " + labels[j] + " (x) " + labels[k]);
                }
}

bool FusionRing::check(std::string* why) const {
    try {
        validate();
        return true;
    } catch (const std::domain_error& e) {
        if (why) *why = e.what();
        return false;
    }
}

std::string FusionRing::pretty() const {
    std::ostringstream os;
    os << "fusion ring on " << n << " labels, identity " << labels[identity] << "\n";
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            os << labels[i] << " (x) " << labels[j] << " =";
            bool any = false;
            for (int k = 0; k < n; ++k) {
                long v = N(i, j, k);
                if (v == 0) continue;
                os << (any ? " + " : " ");
                if (v != 1) os << v << "*";
                os << labels[k];
                any = true;
            }
            if (!any) os << " 0";
            os << "\n";
        }
    return os.str();
}

FusionRing verlinde(const ScaledMatrix& S, int vacuum) {
    auto srat = (S.scalar * S.scalar.conj()).to_rational();
    if (!srat || *srat == 0)
        throw std::logic_error("S-matrix scalar norm is not a nonzero rational");
    return verlinde_core(S.core, S.row_names, *srat / Rat(S.radicand), vacuum);
}

FusionRing verlinde_from_core(const ScaledMatrix& S) {
    const int n = S.size();
    // the rows must be orthogonal with one common norm
    std::optional<Rat> u;
    for (int r = 0; r < n; ++r)
        for (int r2 = r; r2 < n; ++r2) {
            Cyc dot = Cyc::zero(1);
            for (int c = 0; c < n; ++c) dot = dot + S.core[r][c] * S.core[r2][c].conj();
            if (r != r2) {
                if (!dot.is_zero())
                    throw std::logic_error("core rows are not orthogonal");
                continue;
            }
            auto v = dot.to_rational();
            if (!v || *v <= 0) throw std::logic_error("core row norm is not rational");
            if (!u) u = *v;
            else if (*u != *v)
                throw std::logic_error("core rows have unequal norms");
        }
    std::vector<FusionRing> found;
    for (int v = 0; v < n; ++v) {
        bool full = true;
        for (int c = 0; c < n && full; ++c)
            if (S.core[v][c].is_zero()) full = false;
        if (!full) continue;
        try {
            found.push_back(verlinde_core(S.core, S.row_names, Rat(1) / *u, v));
        } catch (const std::exception&) {
            // this vacuum choice does not produce a fusion ring
        }
    }
    if (found.empty()) throw std::logic_error("no vacuum column yields a fusion ring");
    for (std::size_t i = 1; i < found.size(); ++i)
        if (!ring_isomorphic(found[0], found[i]))
            throw std::logic_error("different vacua yield non-isomorphic rings");
    return found.front();
}

std::vector<Cyc> quantum_dimensions(const ScaledMatrix& S, int vacuum) {
    Cyc inv = S.core[vacuum][vacuum].inverse();
    const int n = S.size();
    std::vector<Cyc> out(n);
    for (int i = 0; i < n; ++i) out[i] = S.core[i][vacuum] * inv;
    return out;
}

namespace {

// joint color refinement signatures used to prune the isomorphism search
std::vector<int> refine_colors(const FusionRing& a, const FusionRing& b,
                               std::vector<int>& ca, std::vector<int>& cb) {
    const int n = a.n;
    for (int round = 0; round < n; ++round) {
        std::map<std::string, int> palette;
        auto signature = [&](const FusionRing& r, const std::vector<int>& col, int i) {
            std::vector<std::string> parts;
            parts.push_back("c" + std::to_string(col[i]));
            parts.push_back("d" + std::to_string(col[r.dual[i]]));
            parts.push_back(i == r.identity ? "I1" : "I0");
            std::vector<std::tuple<int, int, long>> triples;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (long v = r.N(i, j, k); v != 0)
                        triples.emplace_back(col[j], col[k], v);
            std::sort(triples.begin(), triples.end());
            for (auto& [x, y, v] : triples)
                parts.push_back(std::to_string(x) + "," + std::to_string(y) + ":" +
                                std::to_string(v));
            std::string s;
            for (auto& p : parts) s += p + ";";
            return s;
        };
        std::vector<std::string> sa(n), sb(n);
        for (int i = 0; i < n; ++i) sa[i] = signature(a, ca, i);
        for (int i = 0; i < n; ++i) sb[i] = signature(b, cb, i);
        std::vector<int> na(n), nb(n);
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = palette.emplace(sa[i], static_cast<int>(palette.size()));
            (void)fresh;
            na[i] = it->second;
        }
        for (int i = 0; i < n; ++i) {
            auto it = palette.find(sb[i]);
            if (it == palette.end()) return {};  // class mismatch: no isomorphism
            nb[i] = it->second;
        }
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return ca;
}

bool extend_map(const FusionRing& a, const FusionRing& b, std::vector<int>& pi,
                std::vector<bool>& used, const std::vector<std::vector<int>>& candidates,
                const std::vector<int>& order, std::size_t pos) {
    const int n = a.n;
    if (pos == order.size()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (a.N(i, j, k) != b.N(pi[i], pi[j], pi[k])) return false;
        return true;
    }
    int i = order[pos];
    if (pi[i] != -1) return extend_map(a, b, pi, used, candidates, order, pos + 1);
    for (int img : candidates[i]) {
        if (used[img]) continue;
        if (pi[a.dual[i]] != -1 && pi[a.dual[i]] != b.dual[img]) continue;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (pi[j] == -1) continue;
            for (int k = 0; k < n && ok; ++k) {
                if (pi[k] == -1) continue;
                if (a.N(i, j, k) != b.N(img, pi[j], pi[k])) ok = false;
                else if (a.N(j, i, k) != b.N(pi[j], img, pi[k])) ok = false;
                else if (a.N(j, k, i) != b.N(pi[j], pi[k], img)) ok = false;
            }
        }
        if (!ok) continue;
        pi[i] = img;
        used[img] = true;
        if (extend_map(a, b, pi, used, candidates, order, pos + 1)) return true;
        pi[i] = -1;
        used[img] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> ring_isomorphic(const FusionRing& a, const FusionRing& b,
                                                const std::vector<int>& forced) {
    if (a.n != b.n) return std::nullopt;
    const int n = a.n;
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    if (!forced.empty()) {
        if (static_cast<int>(forced.size()) != n) return std::nullopt;
        for (int i = 0; i < n; ++i) {
            if (forced[i] == -1) continue;
            if (used[forced[i]]) return std::nullopt;
            pi[i] = forced[i];
            used[forced[i]] = true;
        }
    }
    if (pi[a.identity] == -1) {
        if (used[b.identity]) return std::nullopt;
        pi[a.identity] = b.identity;
        used[b.identity] = true;
    } else if (pi[a.identity] != b.identity) {
        return std::nullopt;
    }
    std::vector<int> ca(n, 0), cb(n, 0);
    if (refine_colors(a, b, ca, cb).empty() && n > 0) return std::nullopt;
    std::vector<std::vector<int>> candidates(n);
    for (int i = 0; i < n; ++i) {
        if (pi[i] != -1) {
            if (ca[i] != cb[pi[i]]) return std::nullopt;
            candidates[i] = {pi[i]};
            continue;
        }
        for (int j = 0; j < n; ++j)
            if (ca[i] == cb[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return candidates[x].size() < candidates[y].size();
    });
    if (!extend_map(a, b, pi, used, candidates, order, 0)) return std::nullopt;
    return pi;
}

FusionRing tensor_ring(const FusionRing& a, const FusionRing& b) {
    FusionRing r;
    r.n = a.n * b.n;
    r.identity = a.identity * b.n + b.identity;
    r.tensor.assign(static_cast<std::size_t>(r.n) * r.n * r.n, 0);
    r.dual.resize(r.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            r.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
            r.dual[i * b.n + j] = a.dual[i] * b.n + b.dual[j];
        }
    for (int i = 0; i < a.n; ++i)
        for (int i2 = 0; i2 < b.n; ++i2)
            for (int j = 0; j < a.n; ++j)
                for (int j2 = 0; j2 < b.n; ++j2)
                    for (int k = 0; k < a.n; ++k)
                        for (int k2 = 0; k2 < b.n; ++k2)
                            r.N(i * b.n + i2, j * b.n + j2, k * b.n + k2) =
                                a.N(i, j, k) * b.N(i2, j2, k2);
    r.validate();
    return r;
}

FusionRing cyclic_group_ring(int m) {
    FusionRing r;
    r.n = m;
    r.identity = 0;
    r.tensor.assign(static_cast<std::size_t>(m) * m * m, 0);
    for (int i = 0; i < m; ++i) {
        r.labels.push_back(std::to_string(i));
        r.dual.push_back((m - i) % m);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r.N(i, j, (i + j) % m) = 1;
    r.validate();
    return r;
}

DtypeRing dtype_conjecture_ring(int m) {
    DtypeRing out;
    const int n = 3 * m - 1;
    out.ring.n = n;
    out.ring.identity = 0;
    out.ring.tensor.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i) {
        out.ring.labels.push_back("[" + std::to_string(i) + "]");
        out.ring.dual.push_back(i);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                bool parity = (i + j - k) % 2 == 0;
                bool window = std::abs(i - j) <= k && k <= std::min(i + j, (3 * m - 1) - i - j);
                if (parity && window) out.ring.N(i, j, k) = 1;
            }
    out.valid = out.ring.check(&out.failure);
    return out;
}

}  // namespace wmod
