#include "wmod/refdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace wmod {

namespace {

using json = nlohmann::json;

json load_json(const std::string& name) {
    std::string path = data_dir() + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open bundled data file " + path);
    json j;
    in >> j;
    return j;
}

Rat json_rat(const json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    return Rat(v.get<long>());
}

long eval_poly(const std::vector<long>& coeffs, long n) {
    long v = 0, pw = 1;
    for (long c : coeffs) {
        v += c * pw;
        pw *= n;
    }
    return v;
}

Rat eval_rat_poly(const std::vector<long>& num, const std::vector<long>& den, long n) {
    return rat(eval_poly(num, n), eval_poly(den, n));
}

FusionRing ring_from_tensor(int n, const std::vector<std::string>& labels,
                            std::vector<long> tensor) {
    FusionRing ring;
    ring.n = n;
    ring.labels = labels;
    ring.tensor = std::move(tensor);
    ring.identity = 0;
    ring.dual.assign(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ring.N(i, j, 0) == 1) ring.dual[i] = j;
    ring.validate();
    return ring;
}

}  // namespace

std::string data_dir() {
    if (const char* env = std::getenv("WMOD_DATA_DIR")) return env;
    return WMOD_DATA_DIR;
}

const std::vector<DenominatorRow>& denominator_table() {
    static const std::vector<DenominatorRow> table = [] {
        json j = load_json("denominators.json");
        std::vector<DenominatorRow> rows;
        for (const auto& r : j.at("rows")) {
            DenominatorRow row;
            row.family = r.at("family").get<std::string>().at(0);
            row.min_rank = r.value("min_rank", 0);
            row.rank = r.value("rank", 0);
            row.h_dual = r.at("h_dual").get<std::vector<long>>();
            row.orbit = r.at("orbit").get<std::string>();
            row.denominators = r.at("denominators").get<std::vector<std::vector<long>>>();
            row.simply_laced = r.at("simply_laced").get<bool>();
            rows.push_back(std::move(row));
        }
        return rows;
    }();
    return table;
}

namespace {

TableIdent parse_ident(const json& id) {
    TableIdent ident;
    ident.type = id.at("type").get<std::string>();
    if (id.contains("vp")) {
        // parametric rows carry polynomials, concrete rows plain integers
        if (id.at("vp").is_array()) {
            ident.vp = 0;  // caller instantiates
        } else {
            ident.vp = id.at("vp").get<long>();
            ident.vq = id.at("vq").get<long>();
        }
    }
    ident.r = id.value("r", 0);
    ident.s = id.value("s", 0);
    ident.mult = id.value("mult", 0L);
    return ident;
}

}  // namespace

std::vector<TableRow> walgebra_table(int a_min, int a_max, int d_min, int d_max) {
    json j = load_json("walgebra_table.json");
    std::vector<TableRow> out;
    for (const auto& r : j.at("parametric_rows")) {
        char fam = r.at("family").get<std::string>().at(0);
        int lo = (fam == 'A') ? a_min : d_min;
        int hi = (fam == 'A') ? a_max : d_max;
        lo = std::max(lo, r.at("min_rank").get<int>());
        for (int n = lo; n <= hi; ++n) {
            if (r.contains("exclude_rank_mod")) {
                const auto& ex = r.at("exclude_rank_mod");
                if (n % ex.at("modulus").get<int>() == ex.at("residue").get<int>()) continue;
            }
            TableRow row;
            row.family = fam;
            row.rank = n;
            row.p = eval_poly(r.at("p").get<std::vector<long>>(), n);
            row.q = eval_poly(r.at("q").get<std::vector<long>>(), n);
            row.c = eval_rat_poly(r.at("c_num").get<std::vector<long>>(),
                                  r.at("c_den").get<std::vector<long>>(), n);
            row.ceff = eval_rat_poly(r.at("ceff_num").get<std::vector<long>>(),
                                     r.at("ceff_den").get<std::vector<long>>(), n);
            row.count = Int(eval_poly(r.at("count").get<std::vector<long>>(), n));
            row.ident = parse_ident(r.at("ident"));
            if (row.ident.type == "vir") {
                row.ident.vp = eval_poly(r.at("ident").at("vp").get<std::vector<long>>(), n);
                row.ident.vq = eval_poly(r.at("ident").at("vq").get<std::vector<long>>(), n);
            }
            out.push_back(std::move(row));
        }
    }
    for (const auto& r : j.at("e_rows")) {
        TableRow row;
        row.family = 'E';
        row.rank = r.at("rank").get<int>();
        row.p = r.at("p").get<long>();
        row.q = r.at("q").get<long>();
        row.c = json_rat(r.at("c"));
        row.ceff = json_rat(r.at("ceff"));
        row.count = Int(r.at("count").get<long>());
        row.ident = parse_ident(r.at("ident"));
        out.push_back(std::move(row));
    }
    return out;
}

FusionRing E7Golden::ring() const {
    const int n = 13;
    std::vector<long> tensor(n * n * n, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                tensor[(static_cast<std::size_t>(i) * n + j) * n + k] = F[i][j][k];
    }
    return ring_from_tensor(n, labels, std::move(tensor));
}

const E7Golden& e7_golden() {
    static const E7Golden g = [] {
        json j = load_json("e7_golden.json");
        E7Golden g;
        g.weights = j.at("weights").get<std::vector<std::vector<long>>>();
        g.sigma = j.at("sigma").get<std::vector<int>>();
        g.simple_current = j.at("simple_current_index").get<int>();
        g.simple_current_weight = parse_rat(j.at("simple_current_weight").get<std::string>());
        const int n = 13;
        auto identity = [&] {
            std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
            for (int i = 0; i < n; ++i) m[i][i] = 1;
            return m;
        };
        g.F.assign(n, {});
        g.F[0] = identity();
        for (int i = 1; i <= 7; ++i)
            g.F[i] = j.at("fusion_matrices")
                         .at(std::to_string(i))
                         .get<std::vector<std::vector<long>>>();
        // fusion with the simple current permutes modules by the diagram
        // symmetry acting on their affine labels (it fixes the middle three)
        std::vector<int> simg(n);
        for (int a = 0; a < n; ++a) {
            std::vector<long> image(8, 0);
            for (int node = 0; node < 8; ++node) image[g.sigma[node]] = g.weights[a][node];
            auto it = std::find(g.weights.begin(), g.weights.end(), image);
            if (it == g.weights.end())
                throw std::logic_error("diagram symmetry left the stored weight list");
            simg[a] = static_cast<int>(it - g.weights.begin());
        }
        auto& f12 = g.F[12];
        f12.assign(n, std::vector<long>(n, 0));
        for (int a = 0; a < n; ++a) f12[a][simg[a]] = 1;
        for (int i = 1; i <= 4; ++i) {
            auto& m = g.F[12 - i];
            m.assign(n, std::vector<long>(n, 0));
            for (int a = 0; a < n; ++a) m[a] = g.F[i][simg[a]];  // row a of F12*Fi
        }
        return g;
    }();
    return g;
}

FusionRing E6Golden::ring() const {
    const int n = 7;  // labels [0..4], [5+], [5-]
    std::vector<long> tensor(n * n * n, 0);
    auto add = [&](int i, int j, int k) {
        tensor[(static_cast<std::size_t>(i) * n + j) * n + k] += 1;
        if (i != j) tensor[(static_cast<std::size_t>(j) * n + i) * n + k] += 1;
    };
    for (int i = 0; i <= 4; ++i)
        for (int j = i; j <= 4; ++j)
            for (int k = j - i; k <= i + j; ++k) {
                if (k <= 4) add(i, j, k);
                else if (k == 5) { add(i, j, 5); add(i, j, 6); }
                else add(i, j, 10 - k);
            }
    for (int e = 0; e <= 1; ++e)  // [5+] = index 5 (e=0), [5-] = index 6 (e=1)
        for (int i = 0; i <= 4; ++i) {
            add(5 + e, i, 5 + (e + i) % 2);
            for (int k = 5 - i; k <= 4; ++k) add(5 + e, i, k);
        }
    for (int e = 0; e <= 1; ++e) {
        add(5 + e, 5 + e, 1);
        add(5 + e, 5 + e, 3);
        add(5 + e, 5 + e, 5 + (1 - e));
    }
    add(5, 6, 0);
    add(5, 6, 2);
    add(5, 6, 4);
    std::vector<std::string> labels = {"[0]", "[1]", "[2]", "[3]", "[4]", "[5+]", "[5-]"};
    return ring_from_tensor(n, labels, std::move(tensor));
}

const E6Golden& e6_golden() {
    static const E6Golden g = [] {
        json j = load_json("e6_golden.json");
        E6Golden g;
        for (const auto& v : j.at("conformal_weights")) g.conformal_weights.push_back(json_rat(v));
        for (const auto& m : j.at("quantum_dimensions")) {
            std::map<long, long> qd;
            for (auto it = m.begin(); it != m.end(); ++it)
                qd[std::stol(it.key())] = it.value().get<long>();
            g.qdims.push_back(std::move(qd));
        }
        g.dual = j.at("dual_permutation").get<std::vector<int>>();
        g.qdim_order = j.at("qdim_field_order").get<long>();
        return g;
    }();
    return g;
}

}  // namespace wmod
