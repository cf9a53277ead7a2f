#include "wmod/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace wmod {

namespace {

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

int default_threads() {
    if (const char* env = std::getenv("WMOD_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

}  // namespace

WeylElement weyl_identity(int rank) {
    WeylElement w;
    w.matrix = identity_matrix(rank);
    return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
    WeylElement w;
    w.matrix = identity_matrix(rs.rank);
    for (int k = 0; k < rs.rank; ++k) w.matrix[k][i - 1] -= rs.cartan[k][i - 1];
    w.sign = -1;
    w.word = {i};
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.matrix = matmul(a.matrix, b.matrix);
    w.sign = a.sign * b.sign;
    w.word = a.word;
    w.word.insert(w.word.end(), b.word.begin(), b.word.end());
    return w;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement v;
    v.sign = w.sign;
    v.word.assign(w.word.rbegin(), w.word.rend());
    int n = w.rank();
    // exact inverse of a unimodular integer matrix via rational elimination
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(w.matrix[i][j]);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular Weyl matrix");
        std::swap(a[pivot], a[col]);
        Rat inv = Rat(1) / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    v.matrix.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v.matrix[i][j] = to_long(Int(a[i][n + j].get_num()));
    return v;
}

Weight apply(const WeylElement& w, const Weight& lambda) {
    int n = w.rank();
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.matrix[i][j] != 0) out[i] += Rat(w.matrix[i][j]) * lambda[j];
    return Weight(std::move(out));
}

Weight dot_action(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
    return apply(w, lambda + rs.rho()) - rs.rho();
}

bool in_Wsr(const RootSystem& rs, const WeylElement& w) {
    Weight img = apply(w, rs.simple_root(rs.star_index));
    auto alpha = rs.to_alpha_scaled(img);
    long s = std::accumulate(alpha.begin(), alpha.end(), 0L);
    if (s == 0) throw std::logic_error("image of alpha_star is not a root");
    return s > 0;
}

Int weyl_order(const RootSystem& rs) {
    Int o = 1;
    switch (rs.family) {
        case Family::A:
            for (int i = 2; i <= rs.rank + 1; ++i) o *= i;
            return o;
        case Family::D:
            for (int i = 2; i <= rs.rank; ++i) o *= i;
            for (int i = 0; i < rs.rank - 1; ++i) o *= 2;
            return o;
        case Family::E:
            if (rs.rank == 6) return 51840;
            if (rs.rank == 7) return 2903040;
            return Int(696729600);
    }
    throw std::logic_error("unreachable");
}

std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t cap) {
    Int order = weyl_order(rs);
    if (order > static_cast<long>(cap))
        throw std::domain_error("Weyl group of order " + order.get_str() +
                                " exceeds the materialization cap of " + std::to_string(cap));
    int n = rs.rank;
    std::vector<WeylElement> out;
    out.reserve(order.get_ui());
    std::map<std::vector<long>, std::size_t> seen;

    auto orbit_point = [&](const WeylElement& w) {
        std::vector<long> v(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v[i] += w.matrix[i][j];
        return v;  // w(rho) in weight coords
    };

    std::vector<WeylElement> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(rs, i));

    out.push_back(weyl_identity(n));
    seen.emplace(orbit_point(out[0]), 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            WeylElement child = compose(out[head], gens[i]);
            auto key = orbit_point(child);
            if (seen.emplace(std::move(key), out.size()).second) out.push_back(std::move(child));
        }
    }
    if (Int(static_cast<long>(out.size())) != order)
        throw std::logic_error("Weyl enumeration missed elements");
    return out;
}

namespace {

// Shared depth-first traversal over the canonical spanning tree of the orbit
// of rho: each non-identity element has the unique parent obtained by its
// smallest left descent, so every element is visited exactly once.
struct Traversal {
    const RootSystem& rs;
    int n;
    std::vector<std::vector<int>> adj;  // neighbors per node (0-based)
    std::vector<uint8_t> adjm;          // flat adjacency matrix

    explicit Traversal(const RootSystem& r) : rs(r), n(r.rank), adj(r.rank) {
        adjm.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && r.cartan[i][j] != 0) {
                    adj[i].push_back(j);
                    adjm[static_cast<std::size_t>(i) * n + j] = 1;
                }
    }
};

struct ScanState {
    std::vector<long long> v;  // w(rho), weight coords
    std::vector<long long> y;  // w(alpha_star), alpha coords
    long long ysum = 0;
    int sign = 1;

    void init(const Traversal& t) {
        v.assign(t.n, 1);
        y.assign(t.n, 0);
        y[t.rs.star_index - 1] = 1;
        ysum = 1;
        sign = 1;
    }

    // in-place involution: left-multiply the current element by s_i
    void reflect(const Traversal& t, int i) {
        long long vi = v[i];
        for (int j : t.adj[i]) v[j] += vi;
        v[i] = -vi;
        long long yi = y[i];
        long long s = -yi;
        for (int j : t.adj[i]) s += y[j];
        ysum += s - yi;
        y[i] = s;
        sign = -sign;
    }

    // child s_i w is canonical iff i is the smallest left descent of it
    bool child_canonical(const Traversal& t, int i) const {
        if (v[i] <= 0) return false;  // i already a descent: s_i w is shorter
        const uint8_t* row = &t.adjm[static_cast<std::size_t>(i) * t.n];
        for (int j = 0; j < i; ++j)
            if ((row[j] ? v[j] + v[i] : v[j]) < 0) return false;
        return true;
    }
};

template <typename Visit>
void dfs(const Traversal& t, ScanState& st, const Visit& visit) {
    visit(st);
    for (int i = 0; i < t.n; ++i) {
        if (!st.child_canonical(t, i)) continue;
        st.reflect(t, i);
        dfs(t, st, visit);
        st.reflect(t, i);
    }
}

}  // namespace

WeylScanStats weyl_scan(const RootSystem& rs, bool allow_huge) {
    if (weyl_order(rs) > 2903040 && !allow_huge)
        throw std::domain_error("Weyl group of order " + weyl_order(rs).get_str() +
                                " needs allow_huge");
    Traversal t(rs);
    ScanState st;
    st.init(t);
    long long count = 0, wsr = 0, signsum = 0;
    dfs(t, st, [&](const ScanState& s) {
        ++count;
        if (s.ysum > 0) ++wsr;
        signsum += s.sign;
    });
    WeylScanStats out;
    out.count = Int(static_cast<long>(count));
    out.wsr_count = Int(static_cast<long>(wsr));
    out.sign_sum = Int(static_cast<long>(signsum));
    return out;
}

WeylElement element_mapping_root(const RootSystem& rs, const Weight& source,
                                 const Weight& target) {
    auto is_root = [&](const Weight& w) {
        std::vector<long> a;
        try {
            a = rs.to_alpha_scaled(w);
        } catch (const std::domain_error&) {
            return false;
        }
        for (auto& x : a) {
            if (x % rs.center_order != 0) return false;
            x /= rs.center_order;
        }
        std::vector<long> neg(a);
        for (auto& x : neg) x = -x;
        auto member = [&](const std::vector<long>& r) {
            return std::find(rs.positive_roots.begin(), rs.positive_roots.end(), r) !=
                   rs.positive_roots.end();
        };
        return member(a) || member(neg);
    };
    if (!is_root(source) || !is_root(target))
        throw std::domain_error("element_mapping_root needs roots");

    std::map<std::vector<Rat>, std::vector<int>> word_of;
    std::vector<Weight> queue{source};
    word_of[source.coords()] = {};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Weight cur = queue[head];
        std::vector<int> word = word_of[cur.coords()];
        if (cur == target) {
            // word lists the reflections applied first-to-last, so the
            // element is the composition with the last step outermost
            WeylElement w = weyl_identity(rs.rank);
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                w = compose(w, simple_reflection(rs, *it));
            return w;
        }
        for (int i = 1; i <= rs.rank; ++i) {
            Weight img = cur - cur[i - 1] * rs.simple_root(i);
            if (word_of.count(img.coords())) continue;
            auto next = word;
            next.push_back(i);
            word_of[img.coords()] = std::move(next);
            queue.push_back(std::move(img));
        }
    }
    throw std::domain_error("roots lie in different orbits");
}

namespace {

struct JobState {
    const ExpSumJob* job = nullptr;
    int R = 0, C = 0;
    std::vector<std::vector<long long>> X;  // per column: D-scaled alpha coords of w(col)
    std::vector<long long> dots;            // [r*C+c] = D * (row_r, w(col_c))
    long long cx = 0;                       // (x, w(alpha_star))
    bool with_coef = false;

    void init(const RootSystem& rs, const ExpSumJob& j) {
        job = &j;
        R = static_cast<int>(j.rows.size());
        C = static_cast<int>(j.cols.size());
        with_coef = !j.coefficient_x.empty();
        X.assign(C, {});
        for (int c = 0; c < C; ++c) {
            std::vector<Rat> coords;
            coords.reserve(rs.rank);
            for (long v : j.cols[c]) coords.emplace_back(v);
            auto scaled = rs.to_alpha_scaled(Weight(std::move(coords)));
            X[c].assign(scaled.begin(), scaled.end());
        }
        dots.assign(static_cast<std::size_t>(R) * C, 0);
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) {
                long long s = 0;
                for (std::size_t k = 0; k < X[c].size(); ++k) s += j.rows[r][k] * X[c][k];
                dots[static_cast<std::size_t>(r) * C + c] = s;
            }
        if (with_coef) cx = j.coefficient_x[rs.star_index - 1];
    }

    void reflect(const Traversal& t, int i, const ScanState& st_after) {
        for (int c = 0; c < C; ++c) {
            long long xi = X[c][i];
            long long nx = -xi;
            for (int j : t.adj[i]) nx += X[c][j];
            long long delta = nx - xi;
            if (delta != 0)
                for (int r = 0; r < R; ++r)
                    dots[static_cast<std::size_t>(r) * C + c] += job->rows[r][i] * delta;
            X[c][i] = nx;
        }
        if (with_coef) {
            cx = 0;
            for (int k = 0; k < static_cast<int>(st_after.y.size()); ++k)
                cx += job->coefficient_x[k] * st_after.y[k];
        }
    }

    void accumulate(const RootSystem& rs, const ScanState& st, std::vector<long long>& buckets) {
        if (job->wsr_only && st.ysum < 0) return;
        long long coef = st.sign;
        if (with_coef) coef *= cx;
        if (coef == 0) return;
        long D = rs.center_order;
        long order = job->bucket_order;
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) {
                long long num = job->exp_num * dots[static_cast<std::size_t>(r) * C + c];
                if (num % D != 0) throw std::logic_error("non-integral bucket exponent");
                long long e = (num / D) % order;
                if (e < 0) e += order;
                buckets[(static_cast<std::size_t>(r) * C + c) * order + e] += coef;
            }
    }
};

struct EngineState {
    ScanState scan;
    std::vector<JobState> jobs;
    std::vector<std::vector<long long>> buckets;

    void init(const RootSystem& rs, const Traversal&, const std::vector<ExpSumJob>& js) {
        scan.init(Traversal(rs));
        jobs.resize(js.size());
        buckets.resize(js.size());
        for (std::size_t j = 0; j < js.size(); ++j) {
            jobs[j].init(rs, js[j]);
            buckets[j].assign(static_cast<std::size_t>(jobs[j].R) * jobs[j].C * js[j].bucket_order,
                              0);
        }
    }

    void reflect(const Traversal& t, int i) {
        scan.reflect(t, i);
        for (auto& js : jobs) js.reflect(t, i, scan);
    }

    void visit(const RootSystem& rs) {
        for (std::size_t j = 0; j < jobs.size(); ++j) jobs[j].accumulate(rs, scan, buckets[j]);
    }

    void run_subtree(const RootSystem& rs, const Traversal& t) {
        visit(rs);
        for (int i = 0; i < t.n; ++i) {
            if (!scan.child_canonical(t, i)) continue;
            reflect(t, i);
            run_subtree(rs, t);
            reflect(t, i);
        }
    }
};

}  // namespace

std::vector<ExpSumResult> weyl_exp_sums(const RootSystem& rs, const std::vector<ExpSumJob>& jobs,
                                        int threads, bool allow_huge) {
    if (weyl_order(rs) > 2903040 && !allow_huge)
        throw std::domain_error("Weyl group of order " + weyl_order(rs).get_str() +
                                " needs allow_huge");
    for (const auto& j : jobs) {
        if (j.bucket_order < 1) throw std::domain_error("bucket order must be positive");
        for (const auto& row : j.rows)
            if (static_cast<int>(row.size()) != rs.rank)
                throw std::domain_error("job row has wrong rank");
        for (const auto& col : j.cols)
            if (static_cast<int>(col.size()) != rs.rank)
                throw std::domain_error("job column has wrong rank");
        if (!j.coefficient_x.empty() && static_cast<int>(j.coefficient_x.size()) != rs.rank)
            throw std::domain_error("job coefficient vector has wrong rank");
    }
    if (threads <= 0) threads = default_threads();

    Traversal t(rs);

    // Deterministic partition at depth two: every subtree root s_j s_i with
    // both steps canonical; the identity and depth-one nodes go to worker 0.
    std::vector<std::pair<int, int>> deep_roots;
    {
        ScanState probe;
        probe.init(t);
        for (int i = 0; i < t.n; ++i) {
            if (!probe.child_canonical(t, i)) continue;
            probe.reflect(t, i);
            for (int j = 0; j < t.n; ++j)
                if (probe.child_canonical(t, j)) deep_roots.emplace_back(i, j);
            probe.reflect(t, i);
        }
    }
    threads = std::max(1, std::min<int>(threads, static_cast<int>(deep_roots.size())));

    std::vector<EngineState> states(threads);
    auto worker = [&](int tid) {
        EngineState& es = states[tid];
        es.init(rs, t, jobs);
        if (tid == 0) {
            es.visit(rs);  // identity
            for (int i = 0; i < t.n; ++i) {
                if (!es.scan.child_canonical(t, i)) continue;
                es.reflect(t, i);
                es.visit(rs);  // depth-one node
                es.reflect(t, i);
            }
        }
        for (std::size_t k = tid; k < deep_roots.size(); k += threads) {
            auto [i, j] = deep_roots[k];
            es.reflect(t, i);
            es.reflect(t, j);
            es.run_subtree(rs, t);
            es.reflect(t, j);
            es.reflect(t, i);
        }
    };

    if (threads == 1) {
        // single worker: plain whole-tree traversal
        states[0].init(rs, t, jobs);
        states[0].run_subtree(rs, t);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    std::vector<ExpSumResult> out(jobs.size());
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        out[j].num_rows = static_cast<int>(jobs[j].rows.size());
        out[j].num_cols = static_cast<int>(jobs[j].cols.size());
        out[j].bucket_order = jobs[j].bucket_order;
        out[j].buckets.assign(
            static_cast<std::size_t>(out[j].num_rows) * out[j].num_cols * out[j].bucket_order, 0);
        for (int tid = 0; tid < threads; ++tid)
            if (!states[tid].buckets.empty())
                for (std::size_t b = 0; b < out[j].buckets.size(); ++b)
                    out[j].buckets[b] += states[tid].buckets[j][b];
    }
    return out;
}

}  // namespace wmod
