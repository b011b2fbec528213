// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance        run all criteria
//   acceptance k      run criterion k only (exit status 1 on FAIL)

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcycl/groups.hpp"
#include "hopfcycl/quivers.hpp"

using namespace hopfcycl;

namespace {

struct Verdict {
    bool pass = true;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 6) notes.push_back(what);
        }
    }
};

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::shared_ptr<const HopfAlgebraData> kg(const FiniteGroup& g, const Ring& ring) {
    return std::make_shared<const HopfAlgebraData>(group_algebra(g, ring));
}

HopfCyclicModule taft_module(const TaftAlgebra& t, unsigned i, unsigned u, unsigned v, bool force = false) {
    return HopfCyclicModule(t.hopf, check_cm_triple(*t.hopf, t.grouplike(i), t.character(u), t.character(v)), force);
}

// 1. cyclic-module laws
Verdict criterion1() {
    Verdict v;
    const Ring q = Ring::rationals();
    auto laws = [&](const CyclicModule& m, const std::string& name) {
        const auto r = verify_cyclic_axioms(m, 3);
        v.expect(r.all_pass(), name + " laws");
    };
    {
        auto h = kg(FiniteGroup::cyclic(3), q);
        const Character eps = counit_character(*h);
        for (std::uint32_t pi : {0u, 1u})
            laws(HopfCyclicModule(h, check_cm_triple(*h, group_element(q, pi), eps, eps)), "Q[Z/3] pi=" + std::to_string(pi));
    }
    {
        const FiniteGroup s3 = FiniteGroup::symmetric3();
        auto h = kg(s3, q);
        const Character eps = counit_character(*h);
        laws(HopfCyclicModule(h, check_cm_triple(*h, group_element(q, s3.identity()), eps, eps)), "Q[S_3]");
    }
    for (unsigned n : {2u, 3u}) {
        const auto t = taft_hopf(n);
        std::size_t valid = 0;
        for (const auto& tr : taft_cm_triples(t)) {
            if (!tr.by_matrix) continue;
            ++valid;
            laws(taft_module(t, tr.i, tr.u, tr.v),
                 "Taft n=" + std::to_string(n) + " (" + std::to_string(tr.i) + "," + std::to_string(tr.u) + "," +
                     std::to_string(tr.v) + ")");
        }
        v.expect(valid == n + 1, "Taft n=" + std::to_string(n) + " valid triple count");
    }
    const auto t2 = taft_hopf(2);
    const auto bad = taft_module(t2, 1, 1, 1, true);
    v.expect(!check_cm_triple(*t2.hopf, t2.grouplike(1), t2.character(1), t2.character(1)).valid, "(pi_1, a_1, a_1) rejected");
    const auto r = verify_cyclic_axioms(bad, 3);
    v.expect(!r.passed_prefix("t^(n+1) = id"), "(pi_1, a_1, a_1) fails t^(n+1) = id");
    v.notes.insert(v.notes.begin(), "Q[Z/3], Q[S_3], 7 Taft triples, N = 3; forced invalid triple fails t^(n+1)");
    return v;
}

// 2. cyclic groups, closed vs computed
Verdict criterion2() {
    Verdict v;
    std::size_t cells = 0;
    for (unsigned m : {2u, 3u, 4u})
        for (const Ring& ring : {Ring::rationals(), Ring::integers()}) {
            const FiniteGroup g = FiniteGroup::cyclic(m);
            auto h = kg(g, ring);
            const Character eps = counit_character(*h);
            for (std::uint32_t pi = 0; pi < m; ++pi) {
                const HopfCyclicModule mod(h, check_cm_triple(*h, group_element(ring, pi), eps, eps));
                for (unsigned n = 0; n <= 3; ++n) {
                    const auto computed = cyclic_bicomplex_hc(mod, n);
                    const auto closed = closed_hc_cyclic_group(ring, index_of_cyclic_subgroup(g, pi), n);
                    ++cells;
                    v.expect(computed == closed, "Z/" + std::to_string(m) + " " + ring.to_string() + " pi=" +
                                                     std::to_string(pi) + " n=" + std::to_string(n) + ": " +
                                                     computed.to_string() + " vs " + closed.to_string());
                }
            }
        }
    {
        const Ring z = Ring::integers();
        auto h = kg(FiniteGroup::cyclic(2), z);
        const Character eps = counit_character(*h);
        const HopfCyclicModule mod(h, check_cm_triple(*h, group_element(z, 0), eps, eps));
        v.expect(cyclic_bicomplex_hc(mod, 1) == HomologyModule::from_factors(z, 0, {2}), "Z[Z/2] HC_1 = Z/2");
    }
    v.notes.insert(v.notes.begin(), std::to_string(cells) + " cells over Q and Z, HC_1(Z[Z/2]) = Z/2");
    return v;
}

// 3. Burghelea decomposition
Verdict criterion3() {
    Verdict v;
    std::string summary;
    for (const auto& [g, name] : {std::pair{FiniteGroup::cyclic(2), "Z/2"}, std::pair{FiniteGroup::cyclic(4), "Z/4"},
                                  std::pair{FiniteGroup::symmetric3(), "S_3"}}) {
        const auto r = burghelea_check(g, Ring::rationals(), 3);
        v.expect(r.equal, std::string(name) + ": classical " + join(r.classical) + " vs summed " + join(r.summed));
        summary += std::string(summary.empty() ? "" : "; ") + name + " " + join(r.classical);
    }
    v.notes.insert(v.notes.begin(), "dim HC_0..3: " + summary);
    return v;
}

// 4. character-twisted cyclic groups
Verdict criterion4() {
    Verdict v;
    std::size_t pairs = 0, chis = 0;
    for (unsigned m : {2u, 3u, 4u}) {
        const Ring k = Ring::cyclotomic(m);
        const auto h = group_algebra(FiniteGroup::cyclic(m), k);
        for (unsigned a = 0; a < m; ++a)
            for (unsigned b = 0; b < m; ++b) {
                if (a == b) continue;
                const auto alpha = cyclic_group_character(Scalar::zeta(k, a), m);
                const auto beta = cyclic_group_character(Scalar::zeta(k, b), m);
                const auto w = coefficient_hochschild_window(h, alpha, beta, 4);
                const auto per = periodic_resolution_homology(m, Scalar::zeta(k, a), Scalar::zeta(k, b), 3);
                for (unsigned p = 0; p <= 3; ++p) {
                    v.expect(w.homology(p).is_zero(), "m=" + std::to_string(m) + " H_" + std::to_string(p) + " nonzero");
                    v.expect(per[p].is_zero(), "m=" + std::to_string(m) + " periodic H_" + std::to_string(p) + " nonzero");
                }
                ++pairs;
            }
        for (unsigned s = 0; s < m; ++s)
            for (unsigned j = 0; j < m; ++j) {
                if ((s * j) % m != 0) continue;  // alpha(pi) = 1
                const auto r = chi_check(m, s, Scalar::zeta(k, j), 4);
                v.expect(r.identities, "chi identities m=" + std::to_string(m) + " s=" + std::to_string(s));
                v.expect(r.hc_twisted == r.hc_trivial, "HC^(pi,a,a) != HC^(pi,e,e) m=" + std::to_string(m) +
                                                           " s=" + std::to_string(s) + " j=" + std::to_string(j));
                ++chis;
            }
    }
    v.notes.insert(v.notes.begin(), std::to_string(pairs) + " pairs alpha != beta vanish in degrees <= 3; " +
                                        std::to_string(chis) + " chi conjugations match");
    return v;
}

// 5. resolution suite
Verdict criterion5() {
    Verdict v;
    std::size_t compared = 0;
    struct Case {
        Quiver q;
        unsigned n;
        std::string name;
    };
    const std::vector<Case> cases{{Quiver::crown(2), 2, "2-crown/m^2"}, {Quiver::crown(2), 3, "2-crown/m^3"},
                                  {Quiver::crown(3), 2, "3-crown/m^2"}, {Quiver::crown(3), 3, "3-crown/m^3"},
                                  {Quiver::one_loop(), 2, "loop/m^2"},  {Quiver::one_loop(), 3, "loop/m^3"}};
    for (const auto& c : cases)
        for (const Ring& ring : {Ring::rationals(), Ring::integers()}) {
            const std::string tag = c.name + " over " + ring.to_string();
            const TruncatedPathAlgebra a(c.q, c.n, ring);
            const auto rep = check_resolution(a, skoldberg_resolution(a, 4));
            v.expect(rep.squares_to_zero && rep.grade_preserving && rep.exact, tag + " resolution");
            const auto sk = skoldberg_hochschild_complex(a, 4);
            const auto bar = relative_bar_complex(a, 4);
            for (unsigned p = 0; p <= 3; ++p) {
                const std::size_t top = anick_green_length(c.n, p) + c.n;
                for (std::size_t g = 0; g <= top; ++g) {
                    auto at = [&](const GradedWindow& w) {
                        const auto& gr = w.grades[p];
                        return std::find(gr.begin(), gr.end(), g) == gr.end() ? HomologyModule::zero(ring) : w.homology(p, g);
                    };
                    const auto x = at(sk), y = at(bar), z = hh_closed_form(c.q, c.n, p, g, ring);
                    ++compared;
                    const std::string cell = tag + " HH_{" + std::to_string(p) + "," + std::to_string(g) + "}: ";
                    v.expect(x == y, cell + x.to_string() + " vs bar " + y.to_string());
                    v.expect(x == z, cell + x.to_string() + " vs closed " + z.to_string());
                }
            }
            // Lambda_n example values
            if (c.q.vertices.size() == c.n && ring == Ring::rationals()) {
                v.expect(sk.homology(0, 0) == HomologyModule::free(ring, c.n), tag + " HH_{0,0} != k^n");
                for (unsigned p = 1; p <= 3; ++p) {
                    const unsigned cc = (p + 1) / 2;
                    v.expect(sk.homology(p, cc * c.n) == HomologyModule::free(ring, c.n - 1),
                             tag + " HH_{" + std::to_string(p) + "," + std::to_string(cc * c.n) + "} != k^{n-1}");
                }
            }
        }
    v.notes.insert(v.notes.begin(), std::to_string(compared) + " (p, q) cells, resolution = bar = closed over Q and Z");
    return v;
}

// 6. HC of truncated algebras
Verdict criterion6() {
    Verdict v;
    for (unsigned n : {2u, 3u}) {
        for (const bool crown : {false, true}) {
            const Quiver q = crown ? Quiver::crown(n) : Quiver::one_loop();
            const std::string tag = (crown ? std::to_string(n) + "-crown" : std::string("loop")) + "/m^" + std::to_string(n);
            const TruncatedPathAlgebra a(q, n, Ring::rationals());
            const auto hc = graded_sbi_hc(a, 5);
            for (unsigned p = 0; p <= 5; ++p) {
                const std::size_t expected = p % 2 == 0 ? n : (crown ? n - 1 : 0);
                v.expect(hc[p] == hc_closed_form_truncated(q, n, p), tag + " HC_" + std::to_string(p) + " sbi vs closed");
                v.expect(hc[p] == expected, tag + " HC_" + std::to_string(p) + " = " + std::to_string(hc[p]));
            }
        }
    }
    const TruncatedPathAlgebra lam(Quiver::crown(2), 2, Ring::rationals());
    const ClassicalCyclicModule cm(lam.algebra());
    const auto hc = graded_sbi_hc(lam, 3);
    for (unsigned p = 0; p <= 3; ++p)
        v.expect(cyclic_bicomplex_hc(cm, p).dimension() == hc[p], "Lambda_2 HC_" + std::to_string(p) + " bicomplex");
    v.notes.insert(v.notes.begin(), "loop and crowns n = 2, 3 up to degree 5; Lambda_2 bicomplex HC_0..3 = " + join(hc));
    return v;
}

// 7. Taft CM homology
Verdict criterion7() {
    Verdict v;
    const std::vector<std::size_t> fam1{1, 0, 2, 0, 3}, fam2{0, 1, 0, 2, 0};
    std::size_t tables = 0;
    for (const auto& [n, N] : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
        const auto t = taft_hopf(n);
        for (const auto& tr : taft_cm_triples(t)) {
            if (!tr.by_matrix) continue;
            const auto m = taft_module(t, tr.i, tr.u, tr.v);
            const bool first = tr.i == n - 1 && tr.u == 0 && tr.v == 0;
            const bool second = tr.i == 0 && tr.v == (tr.u + n - 1) % n;
            for (unsigned p = 0; p <= N; ++p) {
                const std::size_t expected = first ? fam1[p] : second ? fam2[p] : 0;
                const std::size_t got = connes_lambda_hc(m, p).dimension();
                v.expect(got == expected, "n=" + std::to_string(n) + " (" + std::to_string(tr.i) + "," +
                                              std::to_string(tr.u) + "," + std::to_string(tr.v) + ") HC_" +
                                              std::to_string(p) + " = " + std::to_string(got));
            }
            ++tables;
        }
    }
    v.notes.insert(v.notes.begin(), std::to_string(tables) + " valid triples; (pi_{n-1},e,e): 1,0,2,0,3; (1,a_u,a_{u-1}): 0,1,0,2,0");
    return v;
}

// 8. n = 0 and n = 1
Verdict criterion8() {
    Verdict v;
    for (const auto& [q, name] : {std::pair{Quiver::one_loop(), "loop"}, std::pair{Quiver::crown(2), "2-crown"}}) {
        const auto h = path_algebra_hh(q, 4);
        for (std::size_t g = 0; g <= 4; ++g) {
            const std::size_t orbits = g == 0 ? q.vertices.size() : cycle_orbit_counts(q, g).a_q;
            v.expect(h.hh0[g] == orbits, std::string(name) + " HH_0 grade " + std::to_string(g));
            v.expect(h.hh1[g] == (g == 0 ? 0 : orbits), std::string(name) + " HH_1 grade " + std::to_string(g));
        }
    }
    const auto r = semisimple_case(Quiver::crown(3), Ring::rationals(), 4);
    for (unsigned p = 0; p <= 4; ++p) {
        v.expect(r.hc[p] == (p % 2 == 0 ? 3u : 0u), "semisimple HC_" + std::to_string(p));
        v.expect(r.hh[p] == (p == 0 ? 3u : 0u), "semisimple HH_" + std::to_string(p));
    }
    for (std::size_t p = 0; p < r.h_positive_computed.size(); ++p)
        v.expect(r.h_positive_computed[p] == 0, "semisimple H_" + std::to_string(p + 1) + " nonzero");
    v.expect(r.h0_equal_computed == r.h0_equal_quoted,
             "H_0(kQ_0, _a k_a): computed " + std::to_string(r.h0_equal_computed) + ", quoted " + std::to_string(r.h0_equal_quoted));
    v.expect(static_cast<long>(r.h0_distinct_computed) == r.h0_distinct_quoted,
             "H_0(kQ_0, _b k_a), a != b: computed " + std::to_string(r.h0_distinct_computed) + ", quoted " +
                 std::to_string(r.h0_distinct_quoted));
    v.notes.insert(v.notes.begin(), "path algebra HH per grade, semisimple HC = 3,0,3,0,3 and the quoted H_0 split (3 vertices)");
    return v;
}

// 9. SBI consistency
Verdict criterion9() {
    Verdict v;
    const auto t = taft_hopf(2);
    for (const auto& [i, u, w] : {std::tuple{1u, 0u, 0u}, std::tuple{0u, 0u, 1u}, std::tuple{0u, 1u, 0u}}) {
        const auto r = sbi_check(taft_module(t, i, u, w), 4);
        v.expect(r.consistent, "Lambda_2 (" + std::to_string(i) + "," + std::to_string(u) + "," + std::to_string(w) +
                                   "): " + r.reason);
    }
    const Ring q = Ring::rationals();
    auto h = kg(FiniteGroup::cyclic(2), q);
    const Character eps = counit_character(*h);
    for (std::uint32_t pi : {0u, 1u}) {
        const auto r = sbi_check(HopfCyclicModule(h, check_cm_triple(*h, group_element(q, pi), eps, eps)), 4);
        v.expect(r.consistent, "Q[Z/2] pi=" + std::to_string(pi) + ": " + r.reason);
    }
    const auto rc = sbi_check(ClassicalCyclicModule(std::make_shared<const AlgebraData>(h->algebra)), 4);
    v.expect(rc.consistent, "Q[Z/2] classical: " + rc.reason);
    v.notes.insert(v.notes.begin(), "Lambda_2 triples (1,e,e), (0,a_0,a_1), (0,a_1,a_0); Q[Z/2] twisted and classical; degrees <= 4");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Verdict()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9};
    std::vector<std::size_t> which;
    if (argc > 1) which.push_back(std::stoul(argv[1]));
    else
        for (std::size_t k = 1; k <= criteria.size(); ++k) which.push_back(k);
    bool all = true;
    for (std::size_t k : which) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria.at(k - 1)();
        } catch (const std::exception& e) {
            v.pass = false;
            v.notes = {std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << k << ": " << (v.pass ? "PASS" : "FAIL") << " (" << v.notes.front();
        for (std::size_t i = 1; i < v.notes.size(); ++i) line << "; " << v.notes[i];
        line << ") [" << static_cast<long>(secs * 1000) << " ms]";
        std::cout << line.str() << std::endl;
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
