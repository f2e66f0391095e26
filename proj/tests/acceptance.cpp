// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every comparison is exact; the stated wall-clock budgets are asserted
// where a budget applies.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "helix/catalog.hpp"
#include "helix/json_io.hpp"
#include "helix/p2.hpp"
#include "helix/verify.hpp"

using namespace helix;

namespace {

int g_failures = 0;

struct Criterion {
    std::string what;
    long long budget_ms;  // 0 = no explicit budget
    std::function<void(std::string&)> body;
};

void expect(std::string& err, bool ok, const std::string& what) {
    if (!ok && err.empty()) err = what;
}

Int binom3(long n) {
    if (n + 3 < 3) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + 3), 3);
    return out;
}

void run_criterion(int number, const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
        c.body(err);
    } catch (const std::exception& e) {
        err = std::string("exception: ") + e.what();
    }
    const auto end = std::chrono::steady_clock::now();
    const long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    if (err.empty() && c.budget_ms > 0 && ms >= c.budget_ms)
        err = "exceeded " + std::to_string(c.budget_ms) + " ms budget";
    if (err.empty()) {
        std::printf("[PASS] criterion %d: %s (%lld ms)\n", number, c.what.c_str(), ms);
    } else {
        std::printf("[FAIL] criterion %d: %s (%lld ms): %s\n", number, c.what.c_str(), ms,
                    err.c_str());
        ++g_failures;
    }
}

}  // namespace

int main() {
    EpsilonMap eps;
    const GammaTree tree = build_tree(4);
    const std::vector<ThreeAdic> order6 = enumerate_indices(6);

    const std::vector<Criterion> criteria = {
        {"base values of epsilon, exact", 100,
         [&](std::string& err) {
             const ChernCharacter t1{Rational(3), Rational(1), Rational(-1, 2), Rational(1, 6)};
             expect(err, eps.epsilon(ThreeAdic(1, 1)) == t1, "epsilon(1/3)");
             for (long n = -5; n <= 5; ++n) {
                 const Int nn{n};
                 const ChernCharacter line{Rational(1), Rational(nn), Rational(nn * nn, 2),
                                           Rational(nn * nn * nn, 6)};
                 expect(err, eps.epsilon(ThreeAdic(nn)) == line,
                        "epsilon(" + std::to_string(n) + ")");
             }
         }},

        {"reference-table regeneration with audited ch2 rows", 1000,
         [&](std::string& err) {
             const std::set<std::string> audited{"2/3",   "5/9",   "7/9",  "8/27",
                                                 "14/27", "16/27", "17/27"};
             const auto rows = audit_table(eps);
             expect(err, rows.size() == 20, "expected 20 rows");
             for (const auto& row : rows) {
                 const std::string idx = row.rec.index.str();
                 const std::string label = row.printed->label;
                 // index <-> slope pairing.
                 expect(err, row.rec.slope == Rational::parse(row.printed->printed_slope),
                        label + ": slope vs printed subscript");
                 expect(err, row.rec.order == row.printed->order, label + ": order");
                 // rank, ch0, ch1, ch3 match everywhere; ch2 matches off the
                 // audited rows.
                 for (const auto& d : row.discrepancies) {
                     if (d.field == "ch2") {
                         expect(err, audited.count(idx) == 1, label + ": unexpected ch2 diff");
                     } else {
                         expect(err, false, label + ": diff on " + d.field);
                     }
                 }
                 if (audited.count(idx) == 1) {
                     expect(err, row.discrepancies.size() == 1,
                            label + ": audited row must diff exactly on ch2");
                     // Both printed resolutions hold with the computed value.
                     for (const auto& res : row.rec.resolutions)
                         expect(err, res.additive(), label + ": resolution additivity");
                     expect(err, row.rec.chi == Int(static_cast<long>(row.printed->printed_h0)),
                            label + ": chi vs printed h0");
                 }
                 // Foundation shape (helix level) and resolution
                 // multiplicities were diffed by the audit; any mismatch
                 // already landed in discrepancies above.
             }
         }},

        {"chi equals printed h0 on every table row", 1000,
         [&](std::string& err) {
             const std::vector<long> expected{4,  6,   10,  20,  15, 20,  35,  20,  20,  36,
                                              99, 116, 399, 70,  144, 296, 56,  74,  399, 196};
             const auto& rows = reference_table();
             expect(err, rows.size() == expected.size(), "row count");
             for (size_t i = 0; i < rows.size(); ++i) {
                 const ChernCharacter v = eps.epsilon(ThreeAdic::parse(rows[i].index));
                 expect(err, euler_chi(v) == Rational(Int(expected[i])),
                        rows[i].label + ": chi != " + std::to_string(expected[i]));
                 expect(err, rows[i].printed_h0 == expected[i], rows[i].label + ": fixture h0");
             }
         }},

        {"exceptionality sweep over all indices of order <= 6", 10000,
         [&](std::string& err) {
             for (const ThreeAdic& t : order6) {
                 const ChernCharacter v = eps.epsilon(t);
                 expect(err, euler_pair(v, v) == Rational(1), "chi(v,v) != 1 at " + t.str());
                 Int g;
                 mpz_gcd(g.get_mpz_t(), v.ch0.numerator().get_mpz_t(),
                         v.ch1.numerator().get_mpz_t());
                 expect(err, g == 1, "gcd(ch0, ch1) != 1 at " + t.str());
                 expect(err, chern_classes(v).has_value(), "non-integral classes at " + t.str());
             }
         }},

        {"bijection shadow: distinct characters, increasing slopes", 10000,
         [&](std::string& err) {
             std::set<std::string> seen;
             bool have_prev = false;
             Rational prev;
             for (const ThreeAdic& t : order6) {
                 const ChernCharacter v = eps.epsilon(t);
                 expect(err, seen.insert(v.str()).second, "duplicate character at " + t.str());
                 const Rational mu = slope(v);
                 if (have_prev) expect(err, prev < mu, "slope not increasing at " + t.str());
                 prev = mu;
                 have_prev = true;
             }
         }},

        {"dual computation: perp equals the mutation formula on the depth-4 tree", 5000,
         [&](std::string& err) {
             for (const auto& v : tree.verts) {
                 if (v.is_root) continue;
                 expect(err, perp_complement(v.fnd.f, v.mark) == v.fnd.f[v.mark],
                        "mismatch at " + v.index.str());
             }
         }},

        {"helix relations on all depth <= 4 foundations", 0,
         [&](std::string& err) {
             for (const auto& v : tree.verts)
                 expect(err, verify_helix_relation(v.fnd.f),
                        "fails at " + (v.is_root ? std::string("root") : v.index.str()));
         }},

        {"tree structure at depth 4", 0,
         [&](std::string& err) {
             expect(err, tree.verts.size() == 81, "vertex count != 81");
             const Check c = check_tree_structure(tree);
             expect(err, c.pass, c.witness);
         }},

        {"pairing sanity: binomials and the chi = 9 example", 0,
         [&](std::string& err) {
             for (long n = 0; n <= 10; ++n)
                 expect(err, euler_pair(ch_line(0), ch_line(n)) == Rational(binom3(n)),
                        "chi(O, O(" + std::to_string(n) + "))");
             const ChernCharacter v =
                 Rational(12) * ch_line(-3) - Rational(9) * ch_line(-4);
             expect(err, euler_chi(v) == Rational(9), "chi of the middle-cohomology bundle");
         }},

        {"global generation and left-parent positivity to order 6", 0,
         [&](std::string& err) {
             for (const ThreeAdic& t : order6) {
                 expect(err, is_globally_generated(t), "gg false at " + t.str());
                 expect(err, slope(eps.epsilon(t)).sign() >= 0, "negative slope at " + t.str());
                 if (t.left_form()) {
                     const auto [left, right] = eps.parents(t);
                     expect(err, sgn(left.numerator()) >= 0,
                            "negative left parent at " + t.str());
                     (void)right;
                 }
             }
             for (long n = 0; n <= 6; ++n)
                 expect(err, is_globally_generated(ThreeAdic(n)), "gg false on O(n)");
         }},

        {"P^2 companion: dot values, monotonicity, integrality, certified delta(0)", 5000,
         [&](std::string& err) {
             P2Map p2;
             expect(err, p2.epsilon(Dyadic::parse("1/2")) == Rational(1, 2), "epsilon_p2(1/2)");
             expect(err, p2.epsilon(Dyadic::parse("1/4")) == dot(Rational(0), Rational(1, 2)),
                    "epsilon_p2(1/4) via dot");
             expect(err, p2.epsilon(Dyadic::parse("1/4")) == Rational(2, 5), "epsilon_p2(1/4)");
             expect(err, p2.epsilon(Dyadic::parse("3/4")) == dot(Rational(1, 2), Rational(1)),
                    "epsilon_p2(3/4) via dot");
             expect(err, p2.epsilon(Dyadic::parse("3/4")) == Rational(3, 5), "epsilon_p2(3/4)");

             bool have_prev = false;
             Rational prev;
             for (const Dyadic& t : enumerate_dyadics(Rational(0), Rational(1), 8)) {
                 const Rational alpha = p2.epsilon(t);
                 if (have_prev) expect(err, prev < alpha, "not increasing at " + t.str());
                 prev = alpha;
                 have_prev = true;
                 const P2SlopeData sd = slope_data(alpha);
                 expect(err, (Rational(sd.r) * alpha).is_integer(), "r*alpha at " + t.str());
                 expect(err, sd.chi.is_integer(), "chi(alpha) at " + t.str());
             }

             const DeltaBound b = delta_of_mu(p2, Rational(0), 0);
             expect(err, b.value == Rational(1), "delta(0) != 1");
             expect(err, b.certified, "delta(0) not certified");
         }},
    };

    int number = 1;
    for (const auto& c : criteria) run_criterion(number++, c);

    if (g_failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
