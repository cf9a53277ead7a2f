#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

#include "json.hpp"
#include "wmod/admissible.hpp"
#include "wmod/weyl.hpp"

using namespace wmod;

static int failures = 0;
#define CHECK(cond)                                                     \
    do {                                                                \
        if (!(cond)) {                                                  \
            ++failures;                                                 \
            std::cerr << "FAIL " << __FILE__ << ":" << __LINE__ << "  " \
                      << #cond << "\n";                                 \
        }                                                               \
    } while (0)

namespace {

Weight from_longs(const std::vector<long>& v) {
    std::vector<Rat> c(v.begin(), v.end());
    return Weight{c};
}

bool throws_domain(const std::function<void()>& f, const std::string& needle = "") {
    try {
        f();
    } catch (const std::domain_error& e) {
        return needle.empty() || std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

int main() {
    // level legality
    CHECK(throws_domain(
        [] { make_level(build_root_system(Family::D, 5), 7, 6); }, "dual Coxeter"));
    CHECK(throws_domain(
        [] { make_level(build_root_system(Family::E, 6), 12, 7); }, "9"));
    CHECK(throws_domain([] { make_level(build_root_system(Family::E, 6), 12, 9); }));
    CHECK(throws_domain([] { make_level(build_root_system(Family::A, 3), 5, 2); }));
    CHECK(throws_domain([] { make_level(build_root_system(Family::A, 3), 0, 3); }));
    {
        LevelData ld = make_level(build_root_system(Family::E, 6), 12, 11);
        CHECK(ld.k == rat(12, 11) - 12);
        CHECK(ld.mode == Mode::subreg);
    }
    // typeA mode admits every denominator up to the rank, family A only
    CHECK(denominator_allowed(Family::A, 5, 4, Mode::typeA));
    CHECK(!denominator_allowed(Family::A, 5, 4, Mode::subreg));
    CHECK(throws_domain([] { denominator_allowed(Family::D, 5, 4, Mode::typeA); }, "type A"));
    CHECK(denominator_allowed(Family::D, 5, 6, Mode::subreg));
    CHECK(denominator_allowed(Family::E, 8, 29, Mode::subreg));
    CHECK(!denominator_allowed(Family::E, 8, 23, Mode::subreg));

    // dominant weight and coweight counts
    {
        RootSystem e6 = build_root_system(Family::E, 6);
        CHECK(enumerate_dominant(e6, 3).size() == 20);
        CHECK(enumerate_dominant(e6, 1).size() == 3);
        CHECK(enumerate_subreg_coweights(e6, 11).size() == 21);
        auto p1 = enumerate_dominant(e6, 1);
        std::set<Weight> expect{Weight::zero(6), e6.fundamental(1), e6.fundamental(6)};
        CHECK(std::set<Weight>(p1.begin(), p1.end()) == expect);
    }
    {
        RootSystem a3 = build_root_system(Family::A, 3);
        auto cw = enumerate_subreg_coweights(a3, 3);
        std::set<Weight> expect{a3.rho(), from_longs({1, 0, 1}), from_longs({1, 1, 0}),
                                from_longs({0, 1, 1})};
        CHECK(std::set<Weight>(cw.begin(), cw.end()) == expect);
    }
    {
        RootSystem d5 = build_root_system(Family::D, 5);
        auto cw = enumerate_subreg_coweights(d5, 6);
        std::set<Weight> expect{d5.rho() - d5.fundamental(2), d5.rho() - d5.fundamental(3)};
        CHECK(std::set<Weight>(cw.begin(), cw.end()) == expect);
    }
    {
        RootSystem d8 = build_root_system(Family::D, 8);
        auto cw = enumerate_subreg_coweights(d8, 12);
        std::set<Weight> expect;
        for (int i = 2; i <= 6; ++i) expect.insert(d8.rho() - d8.fundamental(i));
        CHECK(std::set<Weight>(cw.begin(), cw.end()) == expect);
    }

    // orbit counts across the printed families
    auto orbit_count = [](Family f, int rank, long p, long q) {
        LevelData ld = make_level(build_root_system(f, rank), p, q);
        return orbit_representatives(ld).size();
    };
    CHECK(orbit_count(Family::A, 3, 5, 3) == 4);
    CHECK(orbit_count(Family::A, 5, 7, 5) == 6);
    CHECK(orbit_count(Family::D, 4, 6, 5) == 2);
    CHECK(orbit_count(Family::D, 4, 7, 5) == 8);
    CHECK(orbit_count(Family::D, 5, 8, 7) == 3);
    CHECK(orbit_count(Family::D, 6, 10, 9) == 4);
    CHECK(orbit_count(Family::E, 6, 12, 11) == 7);
    CHECK(orbit_count(Family::E, 6, 13, 10) == 6);
    CHECK(orbit_count(Family::E, 6, 13, 9) == 1);
    CHECK(orbit_count(Family::E, 7, 19, 16) == 13);
    CHECK(orbit_count(Family::E, 7, 18, 17) == 16);
    CHECK(orbit_count(Family::E, 7, 19, 15) == 4);
    CHECK(orbit_count(Family::E, 8, 31, 25) == 2);
    CHECK(orbit_count(Family::E, 8, 30, 29) == 44);

    // orbits partition the pair grid with the center as step group
    {
        LevelData ld = make_level(build_root_system(Family::E, 6), 12, 11);
        auto labels = orbit_representatives(ld);
        std::size_t total = 0;
        for (const auto& l : labels) total += pair_orbit(ld, l.kappa, l.eta).size();
        CHECK(total == enumerate_subreg_coweights(ld.rs, 11).size() * 1);
        // conformal weight is constant along each orbit
        for (const auto& l : labels) {
            for (const auto& [kappa, eta] : pair_orbit(ld, l.kappa, l.eta)) {
                Weight lam = kappa - rat(ld.p, ld.q) * eta;
                CHECK(conformal_weight(ld.rs, ld.p, ld.q, lam) == l.h);
            }
        }
    }

    // vacuum module
    for (auto [f, rank, p, q] :
         {std::tuple{Family::A, 3, 5L, 3L}, std::tuple{Family::D, 4, 6L, 5L},
          std::tuple{Family::E, 6, 12L, 11L}}) {
        LevelData ld = make_level(build_root_system(f, rank), p, q);
        auto labels = orbit_representatives(ld);
        CHECK(vacuum_label(ld).h == 0);
        int vi = vacuum_index(ld, labels);
        CHECK(labels[vi].h == 0);
        auto orb = pair_orbit(ld, labels[vi].kappa, labels[vi].eta);
        bool has_vacuum_pair =
            std::find(orb.begin(), orb.end(),
                      std::pair{Weight::zero(rank), ld.rs.x0()}) != orb.end();
        CHECK(has_vacuum_pair);
    }

    // the shifted Weyl action never moves a conformal weight
    {
        LevelData ld = make_level(build_root_system(Family::A, 3), 5, 3);
        auto group = enumerate(ld.rs);
        auto labels = orbit_representatives(ld);
        unsigned long long s = 31;
        for (int t = 0; t < 100; ++t) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            const auto& w = group[(s >> 33) % group.size()];
            for (const auto& l : labels) {
                Weight lam = l.kappa - rat(ld.p, ld.q) * l.eta;
                CHECK(conformal_weight(ld.rs, ld.p, ld.q, dot_action(ld.rs, w, lam)) == l.h);
            }
        }
    }

    // gauges
    {
        LevelData ld = make_level(build_root_system(Family::A, 3), 5, 3);
        Gauge g = pick_gauge(ld);
        CHECK(g == Gauge::eta_in_Q);
        auto labels = orbit_representatives(ld);
        std::set<Weight> gauged_etas;
        for (const auto& l : labels) {
            SubregLabel gl = regauge(ld, l, g);
            CHECK(ld.rs.in_root_lattice(gl.eta));
            CHECK(gl.h == l.h);
            gauged_etas.insert(gl.eta);
        }
        CHECK(gauged_etas.size() == 1);  // one eta class in Q at this level
    }
    {
        LevelData ld = make_level(build_root_system(Family::E, 7), 19, 16);
        CHECK(pick_gauge(ld) == Gauge::nu_in_Q);
        auto labels = orbit_representatives(ld);
        std::set<Weight> gauged_kappas;
        for (const auto& l : labels) {
            SubregLabel gl = regauge(ld, l, Gauge::nu_in_Q);
            CHECK(ld.rs.in_root_lattice(gl.kappa + ld.rs.rho()));
            gauged_kappas.insert(gl.kappa);
        }
        CHECK(gauged_kappas.size() == 1);  // all thirteen share one nu
    }

    // type A coweight families
    {
        RootSystem a3 = build_root_system(Family::A, 3);
        CHECK(enumerate_typeA_coweights(a3, 1).size() == 1);
        CHECK(enumerate_typeA_coweights(a3, 2).size() == 1);
        CHECK(enumerate_typeA_coweights(a3, 3).size() == 3);
        auto q3 = enumerate_typeA_coweights(a3, 3);
        std::set<Weight> expect{a3.fundamental(1) + a3.fundamental(2),
                                a3.fundamental(1) + a3.fundamental(3),
                                a3.fundamental(2) + a3.fundamental(3)};
        CHECK(std::set<Weight>(q3.begin(), q3.end()) == expect);
        LevelData ta = make_level(build_root_system(Family::A, 3), 5, 3, Mode::typeA);
        CHECK(admissible_count(ta) == 108);
        bool threw = false;
        try {
            orbit_representatives(ta);
        } catch (const std::domain_error&) {
            threw = true;
        }
        CHECK(threw);
    }
    CHECK(admissible_count(make_level(build_root_system(Family::A, 3), 5, 3)) == 108);
    CHECK(admissible_count(make_level(build_root_system(Family::D, 4), 6, 5)) == 625);

    // label export parses back
    {
        LevelData ld = make_level(build_root_system(Family::D, 4), 6, 5);
        auto labels = orbit_representatives(ld);
        auto j = nlohmann::json::parse(labels_to_json(ld, labels));
        CHECK(j["count"].get<std::size_t>() == labels.size());
        CHECK(j["modules"].size() == labels.size());
        CHECK(j["modules"][0].contains("kappa"));
        CHECK(j["modules"][0].contains("h"));
    }

    // beta is never negative at the star node
    {
        RootSystem e6 = build_root_system(Family::E, 6);
        for (const auto& eta : enumerate_subreg_coweights(e6, 11)) {
            WeylElement y = choose_y_eta(e6, eta, 11);
            Weight beta = Rat(-1) * apply(y, eta);
            CHECK(beta[e6.star_index - 1] >= 0);
        }
    }

    if (failures == 0) std::cout << "admissible structure checks passed\n";
    return failures == 0 ? 0 : 1;
}
