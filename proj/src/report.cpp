#include "p1146/report.hpp"

#include "p1146/bundle.hpp"
#include "p1146/ratmap.hpp"
#include "p1146/wps.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <random>
#include <sstream>

namespace p1146 {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
    }
    return "?";
}

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 5> suite_names{{
    {Suite::wps, "wps"},
    {Suite::scroll, "scroll"},
    {Suite::system_s, "system-s"},
    {Suite::system_t, "system-t"},
    {Suite::theorem, "theorem"},
}};

} // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (const auto& [s, n] : suite_names)
        if (n == name) return s;
    return std::nullopt;
}

std::string_view suite_name(Suite s)
{
    for (const auto& [suite, n] : suite_names)
        if (suite == s) return n;
    return "?";
}

const std::vector<Suite>& all_suites()
{
    static const std::vector<Suite> all{Suite::wps, Suite::scroll, Suite::system_s, Suite::system_t, Suite::theorem};
    return all;
}

PencilCubic resolve_cubic(const VerifyConfig& config)
{
    if (!config.xi) return PencilCubic::standard();
    try {
        return PencilCubic::parse(*config.xi);
    }
    catch (const Error& e) {
        throw ConfigError(std::string("invalid --xi: ") + e.what());
    }
}

namespace {

struct Outcome {
    std::string computed;
    std::string expected;
    std::optional<Status> forced = std::nullopt;
};

struct Check {
    std::string id;
    std::string description;
    std::string anchor;
    std::function<Outcome()> run;
};

CheckRecord execute(const Check& check)
{
    CheckRecord rec{check.id, check.description, check.anchor, Status::fail, {}, {}, {}};
    auto start = std::chrono::steady_clock::now();
    try {
        auto out = check.run();
        rec.computed = std::move(out.computed);
        rec.expected = std::move(out.expected);
        if (out.forced && *out.forced != Status::pass)
            rec.status = *out.forced;
        else
            rec.status = rec.computed == rec.expected ? Status::pass : Status::fail;
    }
    catch (const std::exception& e) {
        rec.computed = std::string("error: ") + e.what();
        rec.status = Status::fail;
    }
    rec.elapsed = std::chrono::steady_clock::now() - start;
    return rec;
}

// Checks run concurrently; records come back in declaration order.
std::vector<CheckRecord> execute_all(const std::vector<Check>& checks)
{
    std::vector<std::future<CheckRecord>> pending;
    pending.reserve(checks.size());
    for (const auto& c : checks) pending.push_back(std::async(std::launch::async, execute, std::cref(c)));
    std::vector<CheckRecord> out;
    out.reserve(checks.size());
    for (auto& f : pending) out.push_back(f.get());
    return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::string fraction(std::size_t ok, std::size_t total)
{
    return std::to_string(ok) + "/" + std::to_string(total);
}

Polynomial random_binary_form(unsigned d, std::mt19937_64& rng)
{
    Polynomial out(rings::projective3());
    for (const auto& m : binary_monomials(d)) {
        long c = static_cast<long>(rng() % 19) - 9;
        out += m * Scalar(c == 0 ? 1 : c);
    }
    return out;
}

// Group sizes of the anticanonical basis of P(1,1,4,6), keyed by the (y3, y4) exponents
// in the order y4^2, y3*y4, y4, y3^3, y3^2, y3, 1.
std::string anticanonical_shape(const std::vector<Monomial>& basis)
{
    constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 7> order{
        {{0, 2}, {1, 1}, {0, 1}, {3, 0}, {2, 0}, {1, 0}, {0, 0}}};
    std::string out;
    std::size_t seen = 0;
    for (const auto& [e3, e4] : order) {
        auto n = std::count_if(basis.begin(), basis.end(), [&](const Monomial& m) { return m[2] == e3 && m[3] == e4; });
        seen += static_cast<std::size_t>(n);
        if (!out.empty()) out += '+';
        out += std::to_string(n);
    }
    if (seen != basis.size()) out += " (+" + std::to_string(basis.size() - seen) + " unclassified)";
    return out;
}

std::vector<Check> wps_checks()
{
    const WeightedProjectiveSpace P(WeightSystem({1, 1, 4, 6}));
    const WeightedProjectiveSpace Q(WeightSystem({1, 1, 1, 3}));
    std::vector<Check> c;
    c.push_back({"wps.anticanonical_weight", "-K of P(1,1,4,6) is O(sum of weights)", "-K_P = O_P(12)",
                 [P] { return Outcome{str(anticanonical_weight(P)), "12"}; }});
    c.push_back({"wps.hilbert_count", "monomials of weighted degree 12 on P(1,1,4,6), by recurrence",
                 "dim(|-K_P|)=38",
                 [P] { return Outcome{str(hilbert_count(P.weights(), 12)), "39"}; }});
    c.push_back({"wps.embedding_dim", "anticanonical basis size minus one", "dim(|-K_P|)=38", [P] {
                     return Outcome{str(static_cast<std::int64_t>(anticanonical_basis(P).size()) - 1), "38"};
                 }});
    c.push_back({"wps.enumeration_vs_recurrence", "enumerated monomial count equals recurrence count, d <= 40",
                 "plumbing", [P, Q] {
                     std::size_t agree = 0;
                     for (const auto& ws : {P.weights(), Q.weights()})
                         for (std::uint64_t d = 0; d <= 40; ++d)
                             if (enumerate_monomials(ws, d).size() == hilbert_count(ws, d)) ++agree;
                     return Outcome{fraction(agree, 82), "82/82"};
                 }});
    c.push_back({"wps.selfintersection", "(-K)^3 of P(1,1,4,6)", "-K_P^3=72",
                 [P] { return Outcome{anticanonical_selfintersection(P).get_str(), "72"}; }});
    c.push_back({"wps.selfintersection_1113", "(-K)^3 of P(1,1,1,3)", "-K^3=72 for P(1,1,1,3)",
                 [Q] { return Outcome{anticanonical_selfintersection(Q).get_str(), "72"}; }});
    c.push_back({"wps.basis_size_1113", "anticanonical basis size of P(1,1,1,3)", "dim|-K| = 38 for P(1,1,1,3)",
                 [Q] { return Outcome{str(static_cast<std::int64_t>(anticanonical_basis(Q).size())), "39"}; }});
    c.push_back({"wps.basis_shape", "anticanonical monomials grouped as y4^2, y3y4*f2, y4*f6, y3^3, y3^2*f4, y3*f8, f12",
                 "a y4^2 + y3y4f2 + y4f6 + b y3^3 + y3^2f4 + y3f8 + f12",
                 [P] { return Outcome{anticanonical_shape(anticanonical_basis(P)), "1+3+7+1+5+9+13"}; }});
    return c;
}

std::vector<Check> scroll_checks()
{
    const RuledClass E{4, 1, 0};
    const RuledClass F{4, 0, 1};
    const RuledClass H{4, 1, 6};
    const SplitBundle cone({0, 2, 6});
    std::vector<Check> c;
    c.push_back({"scroll.degree", "(E+6F)^2 on F_4", "(E+6F)^2 = 8",
                 [=] { return Outcome{str(intersect(H, H)), "8"}; }});
    c.push_back({"scroll.section_conic", "E.(E+6F) on F_4", "E.(E+6F) = 2",
                 [=] { return Outcome{str(intersect(E, H)), "2"}; }});
    c.push_back({"scroll.ruling_lines", "F.(E+6F) on F_4", "F.(E+6F) = 1",
                 [=] { return Outcome{str(intersect(F, H)), "1"}; }});
    c.push_back({"scroll.embedding_p9", "h0(O(2)+O(6)) on P^1", "F_4 -> P^9",
                 [] { return Outcome{str(static_cast<std::int64_t>(h0(SplitBundle({2, 6})))), "10"}; }});
    c.push_back({"scroll.cone_p10", "h0(O+O(2)+O(6)) on P^1", "X in P^10",
                 [=] { return Outcome{str(static_cast<std::int64_t>(h0(cone))), "11"}; }});
    c.push_back({"scroll.system_dim_cubics", "dim |3L - 6P| on P(O+O(2)+O(6))", "dim|3L-6P| = 38",
                 [=] { return Outcome{str(system_dim(cone, {3, -6})), "38"}; }});
    c.push_back({"scroll.system_dim_hyperplanes", "dim |L| on P(O+O(2)+O(6))", "dim|L| = 10",
                 [=] { return Outcome{str(system_dim(cone, {1, 0})), "10"}; }});
    c.push_back({"scroll.matches_anticanonical", "dim |3L - 6P| equals dim |-K| of P(1,1,4,6)",
                 "dim|3L-6P| = dim|-K_P|", [=] {
                     auto basis = anticanonical_basis(WeightedProjectiveSpace(WeightSystem({1, 1, 4, 6})));
                     return Outcome{str(system_dim(cone, {3, -6})),
                                    str(static_cast<std::int64_t>(basis.size()) - 1)};
                 }});
    return c;
}

std::vector<Check> system_s_checks(const PencilCubic& xi, std::uint64_t seed)
{
    auto S = std::make_shared<const LinearSystem>(build_system_S(xi));
    auto generic = std::make_shared<const Polynomial>(random_member(*S, seed));
    auto forms = [S, generic] {
        auto all = S->generators();
        all.push_back(*generic);
        return all;
    };
    std::vector<Check> c;
    c.push_back({"S.generators", "generator count of a x1x2x4 xi + x3 xi phi2 + phi6",
                 "S: 11 parameters",
                 [S] { return Outcome{str(static_cast<std::int64_t>(S->size())), "11"}; }});
    c.push_back({"S.projective_dim", "rank of S minus one", "dim S = 10",
                 [S] { return Outcome{str(projective_dim(*S)), "10"}; }});
    c.push_back({"S.degree", "every generator is homogeneous of degree 6", "deg S = 6", [S] {
                     std::size_t ok = 0;
                     for (const auto& g : S->generators()) ok += is_homogeneous(g) == Homogeneity::exact(6);
                     return Outcome{fraction(ok, S->size()), fraction(S->size(), S->size())};
                 }});
    c.push_back({"S.multiplicity_generators", "minimum multiplicity along r over generators",
                 "mult_r S = 5", [S] {
                     std::uint32_t lo = UINT32_MAX;
                     for (const auto& g : S->generators()) lo = std::min(lo, multiplicity_along_r(g));
                     return Outcome{"min " + str(lo), "min 5"};
                 }});
    c.push_back({"S.multiplicity_generic", "multiplicity along r of a seeded random member",
                 "mult_r S = 5", [generic] { return Outcome{str(multiplicity_along_r(*generic)), "5"}; }});
    c.push_back({"S.pencil_residual", "on x2 = t x1, the residual after x1^5 has degree <= 1 in (x1,x3,x4)",
                 "S|(x2=t x1) = x1^5 * line", [forms] {
                     auto all = forms();
                     std::size_t ok = 0;
                     for (const auto& f : all) ok += pencil_residual_is_linear(f);
                     return Outcome{fraction(ok, all.size()), fraction(all.size(), all.size())};
                 }});
    c.push_back({"S.plane_x1_zero", "on x1 = 0 members restrict to x2^5 times a linear form free of x4",
                 "S|(x1=0), S|(x2=0): r^5 + line through q", [forms] {
                     auto all = forms();
                     std::size_t ok = 0;
                     for (const auto& f : all) ok += meets_plane_in_lines_through_q(f, CoordinatePlane::x1_zero);
                     return Outcome{fraction(ok, all.size()), fraction(all.size(), all.size())};
                 }});
    c.push_back({"S.plane_x2_zero", "on x2 = 0 members restrict to x1^5 times a linear form free of x4",
                 "S|(x1=0), S|(x2=0): r^5 + line through q", [forms] {
                     auto all = forms();
                     std::size_t ok = 0;
                     for (const auto& f : all) ok += meets_plane_in_lines_through_q(f, CoordinatePlane::x2_zero);
                     return Outcome{fraction(ok, all.size()), fraction(all.size(), all.size())};
                 }});
    c.push_back({"S.root_planes", "on each root plane x2 = tau x1 members restrict to a multiple of x1^6",
                 "S|(xi=0) = 6r", [forms, xi] {
                     auto all = forms();
                     std::size_t ok = 0;
                     for (const auto& f : all)
                         for (const auto& tau : xi.roots()) ok += meets_root_plane_only_in_r(f, tau);
                     return Outcome{fraction(ok, 3 * all.size()), fraction(3 * all.size(), 3 * all.size())};
                 }});
    c.push_back({"sprime.dim", "solution space of the S' conditions on the 19 admissible sextic monomials",
                 "dim S' <= 10", [xi] {
                     auto sol = solve_constraints_sprime(xi);
                     return Outcome{str(static_cast<std::int64_t>(sol.system.size())), "11"};
                 }});
    c.push_back({"sprime.span_equal", "span of the S' solution equals span of S", "S = S'", [xi, S] {
                     auto cmp = compare_spans(solve_constraints_sprime(xi).system, *S);
                     return Outcome{cmp.equal ? "equal" : "different", "equal"};
                 }});
    c.push_back({"sprime.drop_x1_zero", "solution dimension without the x1 = 0 condition", "plumbing", [xi] {
                     auto sol = solve_constraints_sprime(xi, {false, true, true});
                     return Outcome{str(static_cast<std::int64_t>(sol.system.size())), "12"};
                 }});
    c.push_back({"sprime.condition_count",
                 "informational: direct constraint count versus the split-off bound of 7 conditions",
                 "S': <= 7 conditions", [xi] {
                     auto sol = solve_constraints_sprime(xi);
                     return Outcome{str(static_cast<std::int64_t>(sol.constraints.size())) + " conditions of rank "
                                        + str(static_cast<std::int64_t>(sol.constraint_rank)) + " on "
                                        + str(static_cast<std::int64_t>(sol.unknowns.size())) + " monomials",
                                    "at most 7 conditions after splitting off 5 planes", Status::skip};
                 }});
    return c;
}

std::vector<Check> system_t_checks(const PencilCubic& xi, std::uint64_t seed)
{
    auto T = std::make_shared<const LinearSystem>(build_system_T(xi));
    std::vector<Check> c;
    c.push_back({"T.generators", "generator count of the degree-12 system",
                 "T: 39 parameters",
                 [T] { return Outcome{str(static_cast<std::int64_t>(T->size())), "39"}; }});
    c.push_back({"T.projective_dim", "rank of T minus one", "dim T = 38",
                 [T] { return Outcome{str(projective_dim(*T)), "38"}; }});
    c.push_back({"T.degree", "every generator is homogeneous of degree 12", "deg T = 12", [T] {
                     std::size_t ok = 0;
                     for (const auto& g : T->generators()) ok += is_homogeneous(g) == Homogeneity::exact(12);
                     return Outcome{fraction(ok, T->size()), fraction(T->size(), T->size())};
                 }});
    c.push_back({"T.multiplicity", "minimum multiplicity along r over generators", "mult_r T = 9", [T] {
                     std::uint32_t lo = UINT32_MAX;
                     for (const auto& g : T->generators()) lo = std::min(lo, multiplicity_along_r(g));
                     return Outcome{"min " + str(lo), "min 9"};
                 }});
    c.push_back({"T.displayed_members", "the seven displayed surface types with seeded f_i lie in T",
                 "x1^2x2^2x4^2xi^2, ..., f12 in T", [T, xi, seed] {
                     std::mt19937_64 rng(seed);
                     const auto& r = rings::projective3();
                     auto x1 = Polynomial::variable(r, "x1"), x2 = Polynomial::variable(r, "x2");
                     auto x3 = Polynomial::variable(r, "x3"), x4 = Polynomial::variable(r, "x4");
                     const auto& f = xi.form();
                     std::vector<Polynomial> surfaces{
                         x1 * x1 * x2 * x2 * x4 * x4 * f * f,
                         x1 * x2 * x3 * x4 * f * f * random_binary_form(2, rng),
                         x1 * x2 * x4 * f * random_binary_form(6, rng),
                         pow(x3, 3) * pow(f, 3),
                         x3 * x3 * f * f * random_binary_form(4, rng),
                         x3 * f * random_binary_form(8, rng),
                         random_binary_form(12, rng),
                     };
                     SpanIndex idx(*T);
                     std::size_t ok = 0;
                     for (const auto& s : surfaces) ok += idx.contains(s);
                     return Outcome{fraction(ok, surfaces.size()), fraction(surfaces.size(), surfaces.size())};
                 }});
    c.push_back({"T.divide_phi6", "(x1x2x4 xi)^2 * phi6 divided exactly by phi6 lies in T",
                 "(x1x2x4xi)^2 phi6 / phi6 in T", [T, xi, seed] {
                     std::mt19937_64 rng(seed + 1);
                     const auto& r = rings::projective3();
                     auto u = Polynomial::variable(r, "x1") * Polynomial::variable(r, "x2")
                              * Polynomial::variable(r, "x4") * xi.form();
                     auto phi6 = random_binary_form(6, rng);
                     auto q = exact_divide(u * u * phi6, phi6);
                     return Outcome{q == u * u && member(q, *T) ? "member" : "not a member", "member"};
                 }});
    c.push_back({"T.nonmember", "x4^12 (multiplicity 0 along r) is not in T", "plumbing", [T] {
                     auto x4 = Polynomial::variable(rings::projective3(), "x4");
                     return Outcome{member(pow(x4, 12), *T) ? "member" : "not a member", "not a member"};
                 }});
    return c;
}

std::vector<Check> theorem_checks(const PencilCubic& xi)
{
    std::vector<Check> c;
    c.push_back({"eta.grading", "component degrees of eta", "eta = [x1,x2,x3 xi,x1x2x4 xi]", [xi] {
                     auto eta = make_eta(xi);
                     std::string degs = "(";
                     for (std::size_t i = 0; i < eta.components().size(); ++i)
                         degs += (i ? "," : "") + str(static_cast<std::int64_t>(*eta.components()[i].degree()));
                     return Outcome{degs + ")", eta.target_weights().to_string()};
                 }});
    c.push_back({"eta.pullback_samples", "pullbacks of y4^2 and y3^3", "eta^* y4^2, eta^* y3^3", [xi] {
                     auto eta = make_eta(xi);
                     const auto& r = rings::projective3();
                     auto u = Polynomial::variable(r, "x1") * Polynomial::variable(r, "x2")
                              * Polynomial::variable(r, "x4") * xi.form();
                     auto v = Polynomial::variable(r, "x3") * xi.form();
                     auto y = eta.target_ring();
                     std::size_t ok = 0;
                     ok += pullback(eta, pow(Polynomial::variable(y, "y4"), 2)) == u * u;
                     ok += pullback(eta, pow(Polynomial::variable(y, "y3"), 3)) == pow(v, 3);
                     return Outcome{fraction(ok, 2), "2/2"};
                 }});
    c.push_back({"eta.pullback_distinct", "pullbacks of the 39 anticanonical monomials are pairwise distinct",
                 "plumbing", [xi] {
                     auto eta = make_eta(xi);
                     auto basis = anticanonical_basis(WeightedProjectiveSpace(eta.target_weights()));
                     std::vector<std::string> seen;
                     for (const auto& m : basis)
                         seen.push_back(pullback(eta, Polynomial::monomial(eta.target_ring(), m)).to_string());
                     std::sort(seen.begin(), seen.end());
                     auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
                     return Outcome{str(distinct), "39"};
                 }});
    c.push_back({"theorem.span_identity", "span of eta^*(anticanonical monomials) equals span of T",
                 "phi_L = phi_{-K_P} o eta", [xi] {
                     auto rep = theorem_check(xi);
                     return Outcome{rep.summary(), "PASS: rank(pullback) 39, rank(T) 39, rank(union) 39, basis 39"};
                 }});
    c.push_back({"theorem.alternate_xi", "the span identity for xi = (x2-x1)(x2-5x1)(x2-7x1)",
                 "phi_L = phi_{-K_P} o eta", [] {
                     auto rep = theorem_check(PencilCubic::from_roots({Scalar(1), Scalar(5), Scalar(7)}));
                     return Outcome{rep.summary(), "PASS: rank(pullback) 39, rank(T) 39, rank(union) 39, basis 39"};
                 }});
    c.push_back({"theorem.negative_control", "the identity fails once one generator is removed from T",
                 "plumbing", [xi] {
                     auto gens = build_system_T(xi).generators();
                     gens.pop_back();
                     auto rep = theorem_check(xi, LinearSystem(rings::projective3(), 12, std::move(gens)));
                     return Outcome{std::string(rep.pass ? "PASS" : "FAIL") + " rank " + str(rep.spans.rank_right)
                                        + " vs " + str(rep.spans.rank_left),
                                    "FAIL rank 38 vs 39"};
                 }});
    return c;
}

} // namespace

std::vector<CheckRecord> run_suite(Suite suite, const PencilCubic& xi, std::uint64_t seed)
{
    switch (suite) {
    case Suite::wps: return execute_all(wps_checks());
    case Suite::scroll: return execute_all(scroll_checks());
    case Suite::system_s: return execute_all(system_s_checks(xi, seed));
    case Suite::system_t: return execute_all(system_t_checks(xi, seed));
    case Suite::theorem: return execute_all(theorem_checks(xi));
    }
    return {};
}

std::vector<CheckRecord> run_all(const VerifyConfig& config)
{
    auto xi = resolve_cubic(config);
    const auto& suites = config.suites.empty() ? all_suites() : config.suites;
    std::vector<CheckRecord> out;
    for (auto s : suites) {
        auto recs = run_suite(s, xi, config.seed);
        out.insert(out.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
    }
    return out;
}

nlohmann::json to_json(const CheckRecord& r)
{
    return nlohmann::json{
        {"check_id", r.check_id},
        {"description", r.description},
        {"paper_ref", r.paper_ref},
        {"status", std::string(to_string(r.status))},
        {"computed", r.computed},
        {"expected", r.expected},
        {"elapsed", r.elapsed.count()},
    };
}

std::string to_json_lines(const std::vector<CheckRecord>& records)
{
    std::string out;
    for (const auto& r : records) out += to_json(r).dump() + "\n";
    return out;
}

std::string format_table(const std::vector<CheckRecord>& records, bool with_anchor)
{
    std::size_t width = 8;
    for (const auto& r : records) width = std::max(width, r.check_id.size());
    std::ostringstream os;
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : records) {
        ++counts[static_cast<int>(r.status)];
        os << std::left << std::setw(6) << to_string(r.status) << std::setw(static_cast<int>(width) + 2)
           << r.check_id << r.computed;
        if (r.status != Status::pass) os << "  (expected: " << r.expected << ")";
        if (with_anchor) os << "  [" << r.paper_ref << "]";
        os << '\n';
    }
    os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
    return os.str();
}

int exit_code(const std::vector<CheckRecord>& records)
{
    return std::any_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::fail; })
               ? 1
               : 0;
}

} // namespace p1146
