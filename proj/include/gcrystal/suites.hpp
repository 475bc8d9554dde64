#ifndef GCRYSTAL_SUITES_HPP
#define GCRYSTAL_SUITES_HPP

// Randomized and exhaustive verification suites. Every suite is a pure
// function of (shape, trials, seed, bound) apart from the wall-time field.

#include "gcrystal/birational.hpp"
#include "gcrystal/bkinf.hpp"
#include "gcrystal/cartan.hpp"
#include "gcrystal/fundrep.hpp"
#include "gcrystal/geometric.hpp"
#include "gcrystal/iso.hpp"
#include "gcrystal/serialize.hpp"
#include "gcrystal/paths.hpp"
#include "gcrystal/report.hpp"
#include "gcrystal/tropical.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace gcrystal {

/// Trial count plus an optional sampling bound; bound 0 keeps each suite's default.
struct SuiteParams {
    int trials = 1;
    std::int64_t bound = 0;

    std::int64_t bound_or(std::int64_t fallback) const { return bound > 0 ? bound : fallback; }
};

namespace suites {

inline constexpr std::int64_t rational_bound = 9;
inline constexpr std::int64_t c_bound = 6;
inline constexpr std::int64_t trop_bound = 10;
inline constexpr std::int64_t b_bound = 6;

inline Rational sample_c(Sampler& rng)
{
    return rng.coin() ? rng.positive_rational_not_one(c_bound) : rng.positive_rational(c_bound);
}

inline Json q_json(const Rational& q) { return to_string(q); }

inline Json mp_json(const MaxPlus& v) { return v ? Json(*v) : Json(nullptr); }

template <class P>
void compare_tables(RunReport& rep, const std::string& prefix, const P& pt)
{
    const Shape& s = pt.shape();
    const PathTables<P> t{pt};
    auto cmp = [&](const std::string& name, const Coord& c, const auto& dp, const auto& brute) {
        rep.record(prefix + name, dp == brute, [&] {
            if constexpr (std::is_same_v<std::decay_t<decltype(dp)>, Rational>) {
                return Json{{"point", to_json(pt)}, {"node", to_string(c)}, {"dp", q_json(dp)}, {"enumerated", q_json(brute)}};
            } else {
                return Json{{"point", to_json(pt)}, {"node", to_string(c)}, {"dp", mp_json(dp)}, {"enumerated", mp_json(brute)}};
            }
        });
    };
    for (const auto& c : s.nodes(P::side)) {
        if constexpr (P::side == Side::L1) {
            cmp("X", c, t.X(c.l, c.m), oracle::partial_sum(pt, SumKind::X, c.l, c.m));
            cmp("Xstar", c, t.Xstar(c.l, c.m), oracle::partial_sum(pt, SumKind::Xstar, c.l, c.m));
            cmp("U", c, t.U(c.l, c.m), oracle::region_sum(pt, oracle::Region::above, c.l, c.m));
            cmp("V", c, t.V(c.l, c.m), oracle::region_sum(pt, oracle::Region::below, c.l, c.m));
            cmp("R", c, t.R(c.l, c.m), oracle::region_sum(pt, oracle::Region::through, c.l, c.m));
        } else {
            cmp("Y", c, t.Y(c.l, c.m), oracle::partial_sum(pt, SumKind::Y, c.l, c.m));
            cmp("Ystar", c, t.Ystar(c.l, c.m), oracle::partial_sum(pt, SumKind::Ystar, c.l, c.m));
        }
    }
    if constexpr (P::side == Side::L1) {
        cmp("epsilon", full_source(s, Side::L1), t.total(), oracle::sum_over(pt, oracle::full_paths(s, Side::L1)));
    }
}

// -- one function per suite ---------------------------------------------------

inline void paths(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    for (int t = 0; t < p.trials; ++t) {
        compare_tables(rep, "rational.", sample_point<XPoint>(s, rng, p.bound_or(rational_bound)));
        compare_tables(rep, "rational.", sample_point<YPoint>(s, rng, p.bound_or(rational_bound)));
        compare_tables(rep, "maxplus.", sample_point<TropPoint>(s, rng, p.bound_or(trop_bound)));
        compare_tables(rep, "maxplus.", sample_point<TropYPoint>(s, rng, p.bound_or(trop_bound)));
    }
}

inline void birational(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(20));
        const auto y = sample_point<YPoint>(s, rng, p.bound_or(20));
        const auto sx = sigma_map(x);
        const auto xy = xi_map(y);
        rep.record("xi_after_sigma", xi_map(sx) == x, [&] { return Json{{"point", to_json(x)}}; });
        rep.record("sigma_after_xi", sigma_map(xy) == y, [&] { return Json{{"point", to_json(y)}}; });
        rep.record("positive", all_positive(sx) && all_positive(xy),
                   [&] { return Json{{"x", to_json(x)}, {"y", to_json(y)}}; });
    }
}

inline void factorisation(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        const PathTables<XPoint> tx{x};
        const PathTables<YPoint> ty{sigma_map(x)};
        for (const auto& [l, m] : s.nodes(Side::L1)) {
            rep.record("factorisation", x.get(l, m) == tx.X(l, m) * ty.Ystar(l - 1, m),
                       [&] { return Json{{"point", to_json(x)}, {"node", coord_key(l, m)}}; });
        }
    }
}

inline void intertwine(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        const auto y = sigma_bar(x);
        for (int i = 1; i <= s.n() - 1; ++i) {
            auto w = [&] { return Json{{"point", to_json(x)}, {"i", i}}; };
            rep.record("gamma", gamma(x, i) == gamma_bar(y, i), w);
            rep.record("epsilon", epsilon(x, i) == epsilon_bar(y, i), w);
        }
        for (int r = 0; r < 5; ++r) {
            const auto c = sample_c(rng);
            for (int i = 1; i <= s.n() - 1; ++i) {
                rep.record("e", sigma_bar(act_e(x, i, c)) == act_ebar(y, i, c),
                           [&] { return Json{{"point", to_json(x)}, {"i", i}, {"c", q_json(c)}}; });
            }
        }
    }
}

inline void axioms(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    const int n = s.n();
    const CartanA1n a{n};
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        for (int i = 0; i <= n; ++i) {
            rep.record("identity", act_e(x, i, Rational{1}) == x,
                       [&] { return Json{{"point", to_json(x)}, {"i", i}}; });
        }
        for (int r = 0; r < 5; ++r) {
            const auto c = sample_c(rng);
            const auto d = sample_c(rng);
            for (int i = 0; i <= n; ++i) {
                auto w = [&] { return Json{{"point", to_json(x)}, {"i", i}, {"c", q_json(c)}, {"d", q_json(d)}}; };
                const auto ec = act_e(x, i, c);
                rep.record("group_law", act_e(act_e(x, i, d), i, c) == act_e(x, i, c * d), w);
                rep.record("epsilon_scaling", epsilon(ec, i) == epsilon(x, i) / c, w);
                for (int j = 0; j <= n; ++j) {
                    auto wj = [&] {
                        return Json{{"point", to_json(x)}, {"i", i}, {"j", j}, {"c", q_json(c)}, {"d", q_json(d)}};
                    };
                    rep.record("gamma_transform", gamma(ec, j) == pow(c, a(i, j)) * gamma(x, j), wj);
                    if (i == j) {
                        continue;
                    }
                    if (a(i, j) == 0) {
                        rep.record("commute", act_e(act_e(x, j, d), i, c) == act_e(act_e(x, i, c), j, d), wj);
                        rep.record("epsilon_invariance", epsilon(act_e(x, j, c), i) == epsilon(x, i), wj);
                    } else {
                        const auto lhs = act_e(act_e(act_e(x, i, d), j, c * d), i, c);
                        const auto rhs = act_e(act_e(act_e(x, j, c), i, c * d), j, d);
                        rep.record("verma", lhs == rhs, wj);
                    }
                }
            }
        }
    }
}

inline void route0(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        auto w = [&] { return Json{{"point", to_json(x)}}; };
        rep.record("gamma0", gamma(x, 0) == gamma0_via_sigma(x), w);
        rep.record("epsilon0", epsilon(x, 0) == epsilon0_via_sigma(x), w);
        for (int r = 0; r < 5; ++r) {
            const auto c = sample_c(rng);
            rep.record("e0", act_e0(x, c) == act_e0_via_sigma(x, c),
                       [&] { return Json{{"point", to_json(x)}, {"c", q_json(c)}}; });
        }
    }
}

inline void iso(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    const auto tuples = enumerate_ctuples(s);
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<TropPoint>(s, rng, p.bound_or(trop_bound));
        const auto b = omega(x);
        const auto other = sample_belement(s, rng, p.bound_or(b_bound));
        rep.record("round_trip", omega_inv(b) == x && omega(omega_inv(other)) == other,
                   [&] { return Json{{"point", to_json(x)}, {"element", to_json(other)}}; });
        for (int i = 0; i <= s.n(); ++i) {
            auto w = [&] { return Json{{"point", to_json(x)}, {"i", i}}; };
            rep.record("wt", trop_wt(x, i) == b_wt(b, i), w);
            rep.record("epsilon", trop_eps(x, i) == eps_phi(b, i).eps, w);
            rep.record("weyl", omega(trop_weyl(x, i)) == weyl_s_tilde(b, i), w);
            for (int d = -3; d <= 3; ++d) {
                rep.record("e", omega(trop_e(x, i, d)) == kashiwara_power(b, i, d),
                           [&] { return Json{{"point", to_json(x)}, {"i", i}, {"d", d}}; });
            }
        }
        if (tuples.size() <= 70) {
            for (const auto& c : tuples) {
                rep.record("delta_path", delta(b, c) == -*path_weight(x, pi_correspondence(s, c)),
                           [&] { return Json{{"point", to_json(x)}, {"c", to_json(c)}}; });
            }
        }
    }
}

inline void udprobe(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    const TropInt bound = p.bound_or(ud_probe_max_exponent);
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<TropPoint>(s, rng, bound);
        const TropInt d = rng.uniform(-bound, bound);
        auto check = [&](const std::string& name, const UdQuantity& q) {
            const TropInt probe = ud_degree_probe(q, x, d);
            const TropInt closed = ud_closed_form(q, x, d);
            rep.record(name, probe == closed, [&] {
                return Json{{"point", to_json(x)}, {"i", q.i}, {"d", d}, {"at", to_string(q.at)},
                            {"probe", probe}, {"closed_form", closed}};
            });
        };
        for (int i = 0; i <= s.n(); ++i) {
            check("gamma", {UdQuantity::Kind::gamma, i, {}});
            check("epsilon", {UdQuantity::Kind::epsilon, i, {}});
            for (const auto& c : s.nodes(Side::L1)) {
                check("e_coord", {UdQuantity::Kind::e_coord, i, c});
            }
        }
    }
}

/// s_i^2 = id, commutation for a_ij = 0 and braid for a_ij = -1 on one realization.
template <class T, class Reflect, class Encode>
void coxeter_checks(RunReport& rep, const std::string& prefix, const T& v, int n, Reflect s, Encode enc)
{
    const CartanA1n a{n};
    for (int i = 0; i <= n; ++i) {
        rep.record(prefix + "involution", s(s(v, i), i) == v, [&] { return Json{{"point", enc(v)}, {"i", i}}; });
        for (int j = i + 1; j <= n; ++j) {
            auto w = [&] { return Json{{"point", enc(v)}, {"i", i}, {"j", j}}; };
            if (a(i, j) == 0) {
                rep.record(prefix + "commute", s(s(v, j), i) == s(s(v, i), j), w);
            } else {
                rep.record(prefix + "braid", s(s(s(v, i), j), i) == s(s(s(v, j), i), j), w);
            }
        }
    }
}

inline void weyl(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    const int n = s.n();
    auto enc = [](const auto& v) { return to_json(v); };
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        const auto tx = sample_point<TropPoint>(s, rng, p.bound_or(trop_bound));
        const auto b = sample_belement(s, rng, p.bound_or(b_bound));
        coxeter_checks(rep, "geometric.", x, n, [](const XPoint& p, int i) { return weyl_s(p, i); }, enc);
        coxeter_checks(rep, "tropical.", tx, n, [](const TropPoint& p, int i) { return trop_weyl(p, i); }, enc);
        coxeter_checks(rep, "bkinf.", b, n, [](const BElement& p, int i) { return weyl_s_tilde(p, i); }, enc);
        for (int i = 0; i <= n; ++i) {
            rep.record("geometric.closed_form", weyl_s(x, i) == weyl_s_definition(x, i),
                       [&] { return Json{{"point", to_json(x)}, {"i", i}}; });
            rep.record("bkinf.closed_form", weyl_s_tilde(b, i) == weyl_s_tilde_iterate(b, i),
                       [&] { return Json{{"point", to_json(b)}, {"i", i}}; });
        }
    }
}

inline void extremal(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    const auto tuples = enumerate_ctuples(s);
    for (int t = 0; t < p.trials; ++t) {
        const auto b = sample_belement(s, rng, p.bound_or(b_bound));
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (const auto& c : tuples) {
            best = std::min(best, delta(b, c));
        }
        const CTuple ce = minimizer_bound(b, KOp::e);
        const CTuple cf = minimizer_bound(b, KOp::f);
        auto w = [&] { return Json{{"point", to_json(b)}, {"ce", to_json(ce)}, {"cf", to_json(cf)}}; };
        rep.record("ce_minimizer", valid_ctuple(s, ce) && delta(b, ce) == best, w);
        rep.record("cf_minimizer", valid_ctuple(s, cf) && delta(b, cf) == best, w);
        rep.record("ce_inequalities", is_extremal(b, ce, KOp::e), w);
        rep.record("cf_inequalities", is_extremal(b, cf, KOp::f), w);
        rep.record("equal_delta", delta(b, ce) == delta(b, cf), w);
    }
}

/// Report-only apart from the k = 1 ratio, which must be 1/x_1^(n). The summary
/// observation also counts ratios equal to 1/x_1^(n) for any k.
inline void conjecture(RunReport& rep, const Shape& s, const SuiteParams& p, Sampler& rng)
{
    std::uint64_t proportional = 0;
    std::uint64_t inverse_corner = 0;
    for (int t = 0; t < p.trials; ++t) {
        const auto x = sample_point<XPoint>(s, rng, p.bound_or(rational_bound));
        const auto r = proportionality_probe(x);
        const Rational expect = 1 / x.get(1, s.n());
        proportional += r.proportional ? 1 : 0;
        inverse_corner += r.ratio && *r.ratio == expect ? 1 : 0;
        rep.observe(Json{{"trial", t},
                         {"point", to_json(x)},
                         {"proportional", r.proportional},
                         {"ratio", r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr)}});
        if (s.k() == 1) {
            rep.record("k1_ratio", r.proportional && r.ratio && *r.ratio == expect, [&] {
                return Json{{"point", to_json(x)}, {"expected", q_json(expect)},
                            {"ratio", r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr)}};
            });
        }
    }
    rep.observe(Json{{"proportional_count", proportional},
                     {"ratio_inverse_corner_count", inverse_corner},
                     {"trials", p.trials}});
}

inline void fundrep(RunReport& rep, const Shape& s, const SuiteParams& /*p*/, Sampler& /*rng*/)
{
    if (binomial(s.n() + 1, s.k()) > fund_probe_max_dim) {
        throw ValidationError("module dimension exceeds " + std::to_string(fund_probe_max_dim));
    }
    for (const auto& t : fund_basis(s)) {
        const auto v = basis_vector(s, t);
        for (int i = 0; i <= s.n(); ++i) {
            auto w = [&] { return Json{{"vector", to_json(v)}, {"i", i}}; };
            rep.record("f_squared", apply_gen(apply_gen(v, Gen::f, i), Gen::f, i).is_zero(), w);
            rep.record("e_squared", apply_gen(apply_gen(v, Gen::e, i), Gen::e, i).is_zero(), w);
        }
    }
    const auto u1 = basis_vector(s, highest_x(s));
    const auto u2 = basis_vector(s, highest_y(s));
    for (int i = 0; i <= s.n(); ++i) {
        if (i != 0) {
            rep.record("u1_highest", apply_gen(u1, Gen::e, i).is_zero(), [&] { return Json{{"i", i}}; });
        }
        if (i != s.n()) {
            rep.record("u2_highest", apply_gen(u2, Gen::e, i).is_zero(), [&] { return Json{{"i", i}}; });
        }
    }
}

} // namespace suites

struct SuiteInfo {
    std::string name;
    int criterion;
    int default_trials;
    std::function<void(RunReport&, const Shape&, const SuiteParams&, Sampler&)> run;
};

inline const std::vector<SuiteInfo>& suite_registry()
{
    static const std::vector<SuiteInfo> registry{
        {"paths", 1, 20, suites::paths},
        {"birational", 2, 50, suites::birational},
        {"factorisation", 3, 20, suites::factorisation},
        {"intertwine", 4, 20, suites::intertwine},
        {"axioms", 5, 20, suites::axioms},
        {"route0", 6, 20, suites::route0},
        {"iso", 7, 200, suites::iso},
        {"udprobe", 8, 200, suites::udprobe},
        {"weyl", 9, 20, suites::weyl},
        {"extremal", 10, 200, suites::extremal},
        {"conjecture", 11, 25, suites::conjecture},
        {"fundrep", 12, 1, suites::fundrep},
    };
    return registry;
}

inline const SuiteInfo& find_suite(const std::string& name)
{
    for (const auto& s : suite_registry()) {
        if (s.name == name) {
            return s;
        }
    }
    throw ValidationError("unknown suite '" + name + "'");
}

/// Runs one suite; trials <= 0 selects the suite default, bound <= 0 the default sampling bounds.
inline RunReport run_suite(const std::string& name, const Shape& shape, int trials, std::uint64_t seed,
                           std::int64_t bound = 0)
{
    const SuiteInfo& info = find_suite(name);
    const SuiteParams params{trials > 0 ? trials : info.default_trials, bound > 0 ? bound : 0};
    RunReport rep{name, shape, seed, params.trials};
    if (params.bound > 0) {
        rep.set_bound(params.bound);
    }
    Sampler rng{seed};
    const auto start = std::chrono::steady_clock::now();
    info.run(rep, shape, params, rng);
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    rep.set_wall_time_ms(elapsed.count());
    return rep;
}

} // namespace gcrystal

#endif
