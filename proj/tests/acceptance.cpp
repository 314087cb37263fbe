// One line per acceptance criterion: PASS/FAIL, id, name, elapsed time, detail.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "lsq/suites.hpp"

using namespace lsq;

namespace {

using Sizes = std::vector<std::size_t>;

struct Outcome {
    bool ok = true;
    std::string detail;

    void check(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s) out.check(false, "over time limit of " + std::to_string(limit_s) + " s");
    if (!out.ok) ++failures;
    std::printf("%s %2d %-34s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.detail.c_str());
    std::fflush(stdout);
}

Outcome from_suite(const SuiteResult& r)
{
    Outcome o;
    for (const auto& c : r.checks) o.check(c.passed, c.name + " (" + c.detail + ")");
    if (o.ok) o.detail = std::to_string(r.checks.size()) + " checks";
    return o;
}

Sizes pad(Sizes v, std::size_t n) { return padded(std::move(v), n); }

std::vector<Face> sorted(std::vector<Face> v)
{
    std::sort(v.begin(), v.end(), FaceOrder{});
    return v;
}

} // namespace

int main()
{
    criterion(1, "f-vector and table row", 1.0, [] { return from_suite(suite_table1()); });

    criterion(2, "engine equals closed form, q<=6", 120.0, [] {
        Outcome o;
        for (unsigned q = 3; q <= 6; ++q)
            for (unsigned s = 3; s <= q; ++s) {
                auto m = matching_L2(q, s);
                o.check(sorted(critical_cells(m.cells, m.spec)) == critical_closed_form_L2(q, s),
                        "mismatch at q=" + std::to_string(q) + " s=" + std::to_string(s));
            }
        return o;
    });

    criterion(3, "acyclic and homogeneous", 120.0, [] {
        Outcome o;
        for (unsigned q = 3; q <= 6; ++q)
            for (unsigned s = 3; s <= q; ++s) {
                auto tag = " q=" + std::to_string(q) + " s=" + std::to_string(s);
                auto m = matching_L2(q, s);
                o.check(is_acyclic(m.cells, m.matching), "cycle" + tag);
                if (q <= 5) {
                    LabeledComplex lc(m.complex, power_generators(q, single_relation(s), 2));
                    o.check(is_homogeneous(m.matching, lc), "inhomogeneous under extremal labels" + tag);
                }
            }
        auto m = matching_L2(4, 3);
        std::mt19937_64 rng(2024);
        unsigned bad = 0;
        for (int t = 0; t < 100; ++t) {
            auto ideal = random_ideal_with_relation(4, 3, 6, rng);
            if (!is_homogeneous(m.matching, LabeledComplex(m.complex, ideal.square()))) ++bad;
        }
        o.check(bad == 0, std::to_string(bad) + " random ideals inhomogeneous");
        return o;
    });

    criterion(4, "Betti numbers equal critical counts", 60.0, [] {
        Outcome o;
        auto b4 = total_betti(power_generators(4, single_relation(3), 2), Field::gf2);
        auto b3 = total_betti(power_generators(3, single_relation(3), 2), Field::gf2);
        o.check(b4 == Sizes{10, 21, 15, 3}, "E4 square " + tuple_string(b4));
        o.check(b3 == Sizes{6, 6, 1}, "E3 square " + tuple_string(b3));
        o.check(b4 == critical_counts(4, 3), "E4 square differs from critical counts");
        o.check(b3 == critical_counts(3, 3), "E3 square differs from critical counts");
        return o;
    });

    criterion(5, "example Betti vectors", 120.0, [] {
        Outcome o;
        auto i1 = total_betti(ideal_i1().square());
        auto i2 = ideal_i2().square().minimalize();
        auto b2 = pad(total_betti(i2), 4);
        auto e = total_betti(power_generators(4, two_relations(), 2));
        o.check(i1 == Sizes{10, 17, 9, 1}, "I1 square " + tuple_string(i1));
        o.check(i2.size() == 9, "I2 square has " + std::to_string(i2.size()) + " generators");
        o.check(b2 == Sizes{9, 14, 6, 0}, "I2 square " + tuple_string(b2));
        o.check(e == Sizes{10, 21, 14, 2}, "E4D' square " + tuple_string(e));
        return o;
    });

    criterion(6, "projective dimension formulas", 0, [] { return from_suite(suite_pd(6)); });

    criterion(7, "characterization sweeps and audit", 300.0, [] {
        Outcome o;
        auto rep = [&](const CharacterizationReport& r, const std::string& tag) {
            o.check(r.passed(), tag + ": " + std::to_string(r.counterexample_count) + " counterexamples");
        };
        for (unsigned q = 1; q <= 3; ++q)
            rep(verify_square_characterization(q, std::nullopt, CharacterizationScope::taylor),
                "empty D q=" + std::to_string(q));
        rep(verify_square_characterization(4, 3, CharacterizationScope::l2), "q=4 s=3");
        for (unsigned s = 3; s <= 5; ++s)
            rep(verify_square_characterization(5, s, CharacterizationScope::l2), "q=5 s=" + std::to_string(s));
        auto audit = suite_characterization(5);
        for (const auto& c : audit.checks)
            if (c.name.rfind("minimal relations", 0) == 0 || c.name.rfind("(4b)", 0) == 0)
                o.check(c.passed, c.name + " (" + c.detail + ")");
        return o;
    });

    criterion(8, "cell order equals gradient paths", 180.0, [] {
        Outcome o;
        for (auto [q, s] : std::vector<std::pair<unsigned, unsigned>>{{3, 3}, {4, 3}, {4, 4}, {5, 3}}) {
            try {
                morse_complex(q, s, CrossCheck::on);
            } catch (const InvariantError& e) {
                o.check(false, e.what());
            }
        }
        auto e = [](unsigned i, unsigned j) { return pair_index(4, i, j); };
        Face pyramid = Face::of({e(1, 2), e(1, 3), e(1, 4), e(2, 3)});
        auto m = matching_L2(4, 3);
        for (Face sub : {Face::of({e(1, 1), e(1, 2), e(1, 4)}), Face::of({e(1, 1), e(1, 3), e(1, 4)})}) {
            o.check(cell_order_closed_form(4, 3, sub, pyramid), "pyramid relation missing in closed form");
            o.check(gradient_path_exists(m.cells, m.matching, pyramid, sub), "pyramid relation missing in paths");
        }
        Face square = Face::of({e(1, 2), e(1, 3), e(2, 3)});
        for (Face edge : {Face::of({e(1, 1), e(1, 2)}), Face::of({e(1, 1), e(1, 3)})}) {
            o.check(cell_order_closed_form(4, 3, edge, square), "square relation missing in closed form");
            o.check(gradient_path_exists(m.cells, m.matching, square, edge), "square relation missing in paths");
        }
        return o;
    });

    criterion(9, "critical counts bound random Betti numbers", 0, [] {
        auto r = suite_random(2024, 100);
        Outcome o;
        for (const auto& c : r.checks)
            if (c.name.rfind("beta(I^2)", 0) == 0) o.check(c.passed, c.name + " (" + c.detail + ")");
        o.detail = o.ok ? "100 ideals, 0 violations" : o.detail;
        return o;
    });

    criterion(10, "first power", 0, [] {
        Outcome o;
        auto g = f_tail(prune_taylor_first_power(4, 3).gamma);
        o.check(g == Sizes{4, 5, 2}, "Gamma " + tuple_string(g));
        auto a = total_betti(extremal_generators(4, single_relation(3)));
        auto b = total_betti(extremal_generators(4, two_relations()));
        o.check(a == Sizes{4, 5, 2}, "E4D " + tuple_string(a));
        o.check(b == Sizes{4, 5, 2}, "E4D' " + tuple_string(b));
        return o;
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
