#include "shv/io.hpp"

#include "shv/ideal.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <tuple>

namespace shv {

using Json = nlohmann::ordered_json;

namespace {

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_of(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    throw DomainError("expected a rational string, got " + j.dump());
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed JSON: ") + e.what());
    }
}

Json matrix_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix matrix_of(const Json& j) {
    if (!j.is_array()) throw DomainError("a matrix is a list of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw DomainError("a matrix row is a list");
        std::vector<Rational> r;
        for (const auto& e : row) r.push_back(rational_of(e));
        if (!rows.empty() && r.size() != rows.front().size()) throw DomainError("ragged matrix");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) return RationalMatrix();
    return RationalMatrix(rows);
}

Json subset_map_json(const std::map<Subset, Rational>& values) {
    Json out = Json::object();
    for (const auto& [s, v] : values) out[s_name(s)] = rational_json(v);
    return out;
}

// Keys "s[...]" of all k-subsets of [n]; k and n are read off the keys.
std::tuple<int, int, std::map<Subset, Rational>> subset_map_of(const Json& j) {
    if (!j.is_object() || j.empty()) throw DomainError("expected a nonempty map of subsets");
    std::map<Subset, Rational> values;
    int k = -1, n = 0;
    for (const auto& [key, v] : j.items()) {
        Subset s = parse_subset_key(key);
        if (k < 0) k = static_cast<int>(s.size());
        if (static_cast<int>(s.size()) != k) throw DomainError("subsets of different sizes in " + key);
        n = std::max(n, s.back());
        values[s] = rational_of(v);
    }
    if (n <= k) throw DomainError("need n > k");
    if (values.size() != subsets(n, k).size()) throw DomainError("map does not cover every subset");
    return {k, n, values};
}

Json complex_json(const Complex& c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json solution_json(const ScatteringSolution& s) {
    Json coords = Json::array();
    for (const auto& c : s.coordinates) coords.push_back(complex_json(c));
    Json out{{"coordinates", coords}, {"residual", s.residual_norm}};
    out["sector"] = s.sector ? Json(*s.sector) : Json(nullptr);
    out["multiplicity_flag"] = s.multiplicity_flag;
    return out;
}

Json bidegree_json(const BidegreePolynomial& b) {
    Json out = Json::array();
    for (const auto& [e, c] : b.terms) out.push_back(Json{{"s", e.first}, {"t", e.second}, {"c", to_string(c)}});
    return out;
}

Json kinematics_json(const KinematicPoint& p) {
    return Json{{"lambda", matrix_json(p.lambda)}, {"lambda_tilde", matrix_json(p.lambda_tilde)}};
}

std::string bidegree_string(const BidegreePolynomial& b) {
    std::string out;
    for (const auto& [e, c] : b.terms) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*s^" + std::to_string(e.first) + "*t^" + std::to_string(e.second);
    }
    return out;
}

}  // namespace

Subset parse_subset_key(const std::string& key) {
    if (key.size() < 4 || key[0] != 's' || key[1] != '[' || key.back() != ']')
        throw DomainError("bad subset key: " + key);
    Subset s;
    std::stringstream in(key.substr(2, key.size() - 3));
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(part, &used);
            if (used != part.size() || v < 1) throw DomainError("bad subset key: " + key);
            s.push_back(v);
        } catch (const std::logic_error&) {
            throw DomainError("bad subset key: " + key);
        }
    }
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw DomainError("subset key must be strictly increasing: " + key);
    return s;
}

std::string to_json(const RationalMatrix& m) { return matrix_json(m).dump(); }
std::string to_json(const MandelstamTensor& s) { return subset_map_json(s.values).dump(); }
std::string to_json(const TropicalVector& v) { return subset_map_json(v.values).dump(); }
std::string to_json(const KinematicPoint& p) { return kinematics_json(p).dump(); }
std::string to_json(const ScatteringSolution& s) { return solution_json(s).dump(); }
std::string to_json(const BidegreePolynomial& b) { return bidegree_json(b).dump(); }

RationalMatrix matrix_from_json(const std::string& text) { return matrix_of(parse_json(text)); }

MandelstamTensor tensor_from_json(const std::string& text) {
    auto [k, n, values] = subset_map_of(parse_json(text));
    return MandelstamTensor{k, n, std::move(values)};
}

TropicalVector tropical_from_json(const std::string& text) {
    auto [k, n, values] = subset_map_of(parse_json(text));
    return TropicalVector{k, n, std::move(values)};
}

KinematicPoint kinematics_from_json(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("lambda") || !j.contains("lambda_tilde"))
        throw DomainError("kinematics need \"lambda\" and \"lambda_tilde\"");
    RationalMatrix a = matrix_of(j["lambda"]), b = matrix_of(j["lambda_tilde"]);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("lambda and lambda_tilde differ in shape");
    return KinematicPoint::from_matrices(a, b);
}

ScatteringSolution solution_from_json(const std::string& text) {
    Json j = parse_json(text);
    try {
        ScatteringSolution s;
        for (const auto& c : j.at("coordinates")) s.coordinates.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
        s.residual_norm = j.at("residual").get<double>();
        if (!j.at("sector").is_null()) s.sector = j.at("sector").get<int>();
        s.multiplicity_flag = j.at("multiplicity_flag").get<bool>();
        return s;
    } catch (const Json::exception& e) {
        throw DomainError(std::string("malformed solution: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Report

bool PaperReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

namespace {

struct Instance36 {
    RationalMatrix x{{4, 0, 7, 4, 9, 1}, {1, 3, 7, 2, 8, 9}, {1, 7, 9, 8, 0, 5}, {6, 6, 2, 2, 4, 2}};
    std::map<Subset, long> s{{{1, 2, 3}, 12000},  {{1, 2, 4}, 6720},    {{1, 2, 5}, 8272},   {{1, 2, 6}, -31584},
                             {{1, 3, 4}, -37760}, {{1, 3, 5}, 54784},   {{1, 3, 6}, -35728}, {{1, 4, 5}, -38080},
                             {{1, 4, 6}, 92208},  {{1, 5, 6}, -30832},  {{2, 3, 4}, -37920}, {{2, 3, 5}, 68288},
                             {{2, 3, 6}, -108016}, {{2, 4, 5}, -82896}, {{2, 4, 6}, 82416},  {{2, 5, 6}, 82720},
                             {{3, 4, 5}, 46592},  {{3, 4, 6}, 57664},   {{3, 5, 6}, -19904}, {{4, 5, 6}, -88944}};
    std::array<std::array<const char*, 4>, 4> solutions{{{"8453/5723", "6083/9263", "3713/1358", "3713/2198"},
                                                         {"6/11", "87/172", "-1/4", "-42/43"},
                                                         {"5/21", "5/36", "19/27", "38/69"},
                                                         {"6588/14911", "20988/9139", "-8601/125060", "17437/138528"}}};
};

Point36 point36(const std::array<const char*, 4>& p) {
    return {parse_rational(p[0]), parse_rational(p[1]), parse_rational(p[2]), parse_rational(p[3])};
}

// Vertices of the (2,5,0) polytope: entries s_ij = sign / 4 on the listed pairs.
MandelstamTensor polytope_vertex(const std::vector<std::pair<Subset, int>>& support) {
    MandelstamTensor s{2, 5, {}};
    for (const auto& p : subsets(5, 2)) s.values[p] = 0;
    for (const auto& [p, sign] : support) s.values[p] = make_rational(sign, 4);
    return s;
}

std::vector<MandelstamTensor> polytope_vertices() {
    return {polytope_vertex({{{1, 2}, -1}, {{1, 3}, 1}, {{2, 4}, 1}, {{3, 4}, -1}}),
            polytope_vertex({{{1, 3}, 1}, {{1, 4}, -1}, {{2, 3}, -1}, {{2, 4}, 1}}),
            polytope_vertex({{{1, 2}, -1}, {{1, 5}, 1}, {{2, 4}, 1}, {{4, 5}, -1}}),
            polytope_vertex({{{1, 4}, -1}, {{1, 5}, 1}, {{2, 4}, 1}, {{2, 5}, -1}}),
            polytope_vertex({{{2, 3}, -1}, {{2, 4}, 1}, {{3, 5}, 1}, {{4, 5}, -1}}),
            polytope_vertex({{{2, 4}, 1}, {{2, 5}, -1}, {{3, 4}, -1}, {{3, 5}, 1}})};
}

bool valid_params(int k, int n, int r) { return k >= 1 && k <= n && r >= 0 && r <= k && 2 * k <= r + n; }

// Every family of one suite vanishes at seeded points; toric binomials are checked on leading monomials.
std::string kernel_failure(int k, int n, int r, std::size_t samples) {
    BracketRing ring(k, n);
    GluedPoset poset(k, n, r);
    ParametrizationPhi phi(k, n, r);
    auto suite = generator_suite(ring, poset);
    std::vector<SparsePolynomial> polys;
    std::multiset<std::pair<Bracket, Bracket>> leading, pairs;
    for (const auto* g : suite.all()) {
        polys.push_back(g->poly);
        leading.insert(ring.factors(g->leading));
    }
    if (r < k)
        for (auto& p : pq_product_entries(ring, r)) polys.push_back(std::move(p));
    auto report = verify_in_kernel(ring, phi, polys, samples, 0);
    if (!report.ok) return report.failure.value_or("kernel check failed");

    auto inc = poset.incomparable_pairs();
    for (const auto* list : {&inc.angle_angle, &inc.square_square, &inc.mixed})
        for (const auto& [a, b] : *list) pairs.insert(ring.factors(ring.quadratic(a, b)));
    if (leading != pairs) return "leading terms differ from the incomparable pairs";

    for (const auto& [a, s] : inc.mixed) {
        auto binomial = toric_binomial(ring, poset, a, s);
        std::vector<Monomial> images;
        for (const auto& [m, c] : binomial.terms()) {
            (void)c;
            auto [u, v] = ring.factors(m);
            Monomial x = phi.leading_monomial(u);
            Monomial y = phi.leading_monomial(v);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<std::uint16_t>(x[i] + y[i]);
            images.push_back(x);
        }
        if (images.size() != 2 || images[0] != images[1]) return "toric binomial " + binomial.to_string();
    }
    return "";
}

bool same_tensor_as_marginal(const KinematicPoint& p) {
    RationalMatrix m = marginal(hadamard(p));
    MandelstamTensor induced = hadamard(induced_k2_point(*p.parameters));
    for (const auto& [ij, v] : induced.values)
        if (m(static_cast<std::size_t>(ij[0] - 1), static_cast<std::size_t>(ij[1] - 1)) != v) return false;
    return true;
}

void add(PaperReport& report, std::string id, std::string expected, std::string computed) {
    bool pass = expected == computed;
    report.checks.push_back({std::move(id), std::move(expected), std::move(computed), pass});
}

template <typename F>
std::string guarded(F f) {
    try {
        return f();
    } catch (const DomainError& e) {
        return std::string("error: ") + e.what();
    }
}

std::string sector_sizes(const SolveResult& result, const KinematicPoint& point) {
    std::map<int, int> sizes;
    for (const auto& s : result.solutions) {
        auto c = sector_classify_k2(s, point);
        if (!c.sector) return "unclassified: " + c.message;
        sizes[*c.sector]++;
    }
    std::string out;
    for (const auto& [l, c] : sizes) out += (out.empty() ? "" : ",") + std::to_string(c);
    return out;
}

std::string eulerian_row(int m) {
    std::string out;
    for (int j = 0; j < m; ++j) out += (j ? "," : "") + to_string(eulerian(m, j));
    return out;
}

}  // namespace

PaperReport paper_report() {
    PaperReport report;
    const Instance36 inst;

    // Generator counts.
    for (auto [k, n, r, expected] : std::vector<std::tuple<int, int, int, int>>{{2, 5, 0, 35}, {2, 6, 0, 66}, {3, 7, 1, 329}}) {
        std::string id = "sh_" + std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(r) + "_generators";
        add(report, id, std::to_string(expected), guarded([&] { return std::to_string(generator_suite(k, n, r).size()); }));
    }
    add(report, "sh_3_7_1_generator_split", "140+140+49", guarded([] {
            auto s = generator_suite(3, 7, 1);
            return std::to_string(s.plucker_angle.size()) + "+" + std::to_string(s.plucker_square.size()) + "+" +
                   std::to_string(s.mixed.size());
        }));
    add(report, "mixed_pairs_formula", "all", guarded([] {
            for (int k = 1; k <= 4; ++k)
                for (int n = k; n <= 9; ++n)
                    for (int r = 0; r <= k; ++r) {
                        if (!valid_params(k, n, r)) continue;
                        BigInt want = k - r - 1 >= 0 ? binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - r - 1)) : BigInt(0);
                        auto got = GluedPoset(k, n, r).incomparable_pairs().mixed.size();
                        if (BigInt(static_cast<unsigned long>(got)) != want * want)
                            return "(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
                    }
            return std::string("all");
        }));

    // Bidegrees and chains.
    add(report, "bidegree_2_5_0", "5*s^3*t^7 + 10*s^4*t^6 + 12*s^5*t^5 + 10*s^6*t^4 + 5*s^7*t^3",
        bidegree_string(GluedPoset(2, 5, 0).bidegree()));
    add(report, "bidegree_2_6_0", "28*s^6*t^10 + 70*s^7*t^9 + 90*s^8*t^8 + 70*s^9*t^7 + 28*s^10*t^6",
        bidegree_string(GluedPoset(2, 6, 0).bidegree()));
    add(report, "bidegree_3_7_1",
        "25872*s^22*t^26 + 77616*s^23*t^25 + 105840*s^24*t^24 + 77616*s^25*t^23 + 25872*s^26*t^22",
        bidegree_string(GluedPoset(3, 7, 1).bidegree()));
    add(report, "p_3_7_1_prefactor", "(st)^22", [] {
        unsigned low = ~0u;
        for (const auto& [e, c] : GluedPoset(3, 7, 1).bidegree().terms) low = std::min({low, e.first, e.second});
        return "(st)^" + std::to_string(low);
    }());
    add(report, "p_2_6_0_chains", "286", to_string(GluedPoset(2, 6, 0).count_maximal_chains()));
    add(report, "p_3_7_1_chains", "312816", to_string(GluedPoset(3, 7, 1).count_maximal_chains()));
    add(report, "y_2_6_chains_from_12", "14", to_string(GluedPoset(2, 6, 0).chain_count(angle({1, 2}))));
    add(report, "y_2_6_chains_from_34", "2", to_string(GluedPoset(2, 6, 0).chain_count(angle({3, 4}))));

    // Kernel membership.
    for (auto [k, n, r] : std::vector<std::tuple<int, int, int>>{
             {2, 4, 0}, {2, 4, 1}, {2, 4, 2}, {2, 5, 0}, {2, 6, 0}, {3, 6, 1}, {3, 7, 1}, {4, 5, 1}}) {
        std::string id = "kernel_" + std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(r);
        add(report, id, "vanishes", guarded([&] {
                auto failure = kernel_failure(k, n, r, 20);
                return failure.empty() ? std::string("vanishes") : failure;
            }));
    }

    // PQ^T rank and span.
    for (auto [k, n, r] : std::vector<std::tuple<int, int, int>>{{2, 5, 0}, {2, 6, 0}, {3, 6, 1}}) {
        std::string tag = std::to_string(k) + "_" + std::to_string(n) + "_" + std::to_string(r);
        BracketRing ring(k, n);
        GluedPoset poset(k, n, r);
        auto pq = bilinear_coefficients(ring, pq_product_entries(ring, r));
        std::vector<SparsePolynomial> mixed;
        for (const auto& g : generator_suite(ring, poset).mixed) mixed.push_back(g.poly);
        BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k - r - 1));
        add(report, "pq_rank_" + tag, to_string(BigInt(c * c)), std::to_string(pq.rank()));
        add(report, "pq_span_" + tag, "equal",
            same_row_space(pq, bilinear_coefficients(ring, mixed)) ? "equal" : "different");
    }

    // Worked (3,6,1) instance.
    {
        auto point = kinematics_from_parameters(3, 6, 1, inst.x);
        auto s = hadamard(point);
        int match = 0;
        for (const auto& [sub, v] : inst.s) match += s.at(sub) == Rational(v) ? 1 : 0;
        add(report, "mandelstam_3_6_1_instance", "20/20", std::to_string(match) + "/20");
    }

    // Membership and marginals.
    add(report, "momentum_forms_vanish", "all", guarded([] {
            for (int k = 2; k <= 4; ++k)
                for (int n = 2 * k; n <= 8; ++n)
                    for (int r = 0; r < k; ++r) {
                        if (!valid_params(k, n, r)) continue;
                        auto s = hadamard(psi_sample(k, n, r, 1));
                        auto ring = mandelstam_ring(k, n);
                        auto vals = assignment(s, ring);
                        for (const auto& f : momentum_forms(k, n, r))
                            if (sgn(f.eval(vals)) != 0)
                                return "(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
                    }
            return std::string("all");
        }));
    add(report, "membership_k2_minors", "all", guarded([] {
            for (int n = 5; n <= 8; ++n)
                for (int r = 0; r <= 2; ++r) {
                    auto m = membership_k2(hadamard(psi_sample(2, n, r, 1)), r);
                    if (!m.member) return "n=" + std::to_string(n) + " r=" + std::to_string(r) + ": " + m.violated;
                }
            return std::string("all");
        }));
    add(report, "marginal_rank_3_6_1", "4", std::to_string(marginal(hadamard(psi_sample(3, 6, 1, 1))).rank()));
    add(report, "marginal_induced_3_6_1", "equal", same_tensor_as_marginal(psi_sample(3, 6, 1, 1)) ? "equal" : "different");

    // Positivity.
    add(report, "positive_signs_2_5", "alternating",
        has_positive_sign_pattern(hadamard(positive_sample(2, 5, 0))) ? "alternating" : "violated");
    {
        int members = 0;
        for (const auto& v : polytope_vertices()) members += membership_k2(v, 0).member ? 1 : 0;
        add(report, "polytope_vertices_2_5_0", "6/6", std::to_string(members) + "/6");
    }
    add(report, "strictness_witness", "negative",
        classify_strictness(strictness_witness_point()) == StrictnessSign::Negative ? "negative" : "not negative");

    // Tropical.
    {
        auto circuits = circuits_m250();
        add(report, "circuits_m250", "30", std::to_string(circuits.size()));
        int found = 0;
        for (const auto& form : m250_forms()) {
            std::vector<Subset> support;
            for (const auto& t : form) support.push_back(t.index);
            std::sort(support.begin(), support.end());
            found += std::find(circuits.begin(), circuits.end(), support) != circuits.end() ? 1 : 0;
        }
        add(report, "circuits_m250_forms", "15/15", std::to_string(found) + "/15");
        int pass = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) pass += tropical_basis_check_m250(trop_mandelstam_sample(2, 5, 0, seed)).ok;
        add(report, "trop_m250_samples", "50/50", std::to_string(pass) + "/50");
        pass = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) pass += positive_trop_check_m250(positive_family_valuation(5, seed)).ok;
        add(report, "positive_trop_m250", "20/20", std::to_string(pass) + "/20");
    }

    // Exact scattering certificates.
    {
        auto s = hadamard(kinematics_from_parameters(3, 6, 1, inst.x));
        int zero = 0;
        for (const auto& p : inst.solutions) {
            auto res = residuals_36(s, point36(p));
            zero += std::all_of(res.begin(), res.end(), [](const Rational& q) { return sgn(q) == 0; }) ? 1 : 0;
        }
        add(report, "residuals_36_table", "4/4", std::to_string(zero) + "/4");
        add(report, "tautological_36_table", "4/4", guarded([&] {
                auto taut = tautological_solutions_36(kinematics_from_parameters(3, 6, 1, inst.x));
                int same = 0;
                for (std::size_t i = 0; i < 4; ++i) same += taut[i] == point36(inst.solutions[i]) ? 1 : 0;
                return std::to_string(same) + "/4";
            }));
        add(report, "sector_construct_exact", "all", guarded([] {
                for (int n = 5; n <= 8; ++n)
                    for (int l = 2; l <= n - 2; ++l)
                        for (std::uint64_t seed = 0; seed < 5; ++seed) {
                            auto sp = sector_sample_k2(n, l, seed);
                            auto res = residuals_k2(hadamard(sp.point), sp.x);
                            if (!std::all_of(res.begin(), res.end(), [](const Rational& q) { return sgn(q) == 0; }))
                                return "n=" + std::to_string(n) + " l=" + std::to_string(l);
                        }
                return std::string("all");
            }));
    }

    // Numerical counts.
    for (int n = 5; n <= 7; ++n) {
        std::string expected_sizes = eulerian_row(n - 3);
        int count_ok = 0, sizes_ok = 0;
        std::string first_bad;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto point = psi_sample(2, n, 0, seed);
            auto result = solve(ScatteringProblem::make(hadamard(point)));
            bool c = static_cast<long>(result.solutions.size()) == result.expected;
            std::string sizes = sector_sizes(result, point);
            count_ok += c;
            sizes_ok += sizes == expected_sizes;
            if ((!c || sizes != expected_sizes) && first_bad.empty())
                first_bad = " (seed " + std::to_string(seed) + ": " + std::to_string(result.solutions.size()) + " solutions, sectors " + sizes + ")";
        }
        add(report, "scatter_2_" + std::to_string(n) + "_count", "20/20", std::to_string(count_ok) + "/20" + first_bad);
        add(report, "scatter_2_" + std::to_string(n) + "_sectors", "20/20", std::to_string(sizes_ok) + "/20");
    }
    add(report, "scatter_3_6_count", "26",
        std::to_string(solve(ScatteringProblem::make(hadamard(kinematics_from_parameters(3, 6, 1, inst.x)))).solutions.size()));
    {
        std::string counts;
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            counts += (seed > 1 ? "," : "") +
                      std::to_string(solve(ScatteringProblem::make(hadamard(psi_sample(3, 6, 1, seed)))).solutions.size());
        add(report, "scatter_3_6_random", "26,26,26,26,26", counts);
    }

    // Eulerian identities.
    {
        bool sums = true, recursion = true;
        for (int n = 5; n <= 10; ++n) {
            BigInt total = 0;
            for (int j = 0; j < n - 3; ++j) total += eulerian(n - 3, j);
            sums = sums && total == factorial(static_cast<unsigned>(n - 3));
            for (int l = 2; l <= n - 2; ++l) {
                auto d = [](int nn, int ll) { return ll - 2 >= 0 && ll - 2 < nn - 3 ? eulerian(nn - 3, ll - 2) : BigInt(0); };
                BigInt rhs = (l - 1) * d(n - 1, l) + (n - l - 1) * d(n - 1, l - 1);
                recursion = recursion && d(n, l) == rhs;
            }
        }
        add(report, "eulerian_factorial_sum", "holds", sums ? "holds" : "fails");
        add(report, "eulerian_sector_recursion", "holds", recursion ? "holds" : "fails");
    }

    std::sort(report.checks.begin(), report.checks.end(),
              [](const ReportCheck& a, const ReportCheck& b) { return a.id < b.id; });
    return report;
}

// ---------------------------------------------------------------------------
// Command dispatch

namespace {

class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void flatten(const Json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [key, v] : j.items()) flatten(v, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

std::vector<std::string> strings_of(const std::vector<SparsePolynomial>& polys) {
    std::vector<std::string> out;
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

std::vector<std::string> strings_of(const std::vector<Generator>& gens) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.poly.to_string());
    return out;
}

Json pair_list(const std::vector<std::pair<Bracket, Bracket>>& pairs) {
    Json out = Json::array();
    for (const auto& [a, b] : pairs) out.push_back(Json::array({to_string(a), to_string(b)}));
    return out;
}

void require_params(const RunConfig& c) {
    if (c.k < 1 || c.n < 1 || c.k > c.n) throw DomainError("need 1 <= k <= n");
    if (c.r < 0 || c.r > c.k) throw DomainError("need 0 <= r <= k");
    if (2 * c.k > c.r + c.n) throw DomainError("need 2k <= r + n");
}

Json run_poset(const RunConfig& c) {
    require_params(c);
    GluedPoset poset(c.k, c.n, c.r);
    Json out{{"k", c.k}, {"n", c.n}, {"r", c.r}};
    const bool all = c.emit == "all";
    if (!all && c.emit != "elements" && c.emit != "pairs" && c.emit != "covers" && c.emit != "bidegree")
        throw DomainError("unknown --emit " + c.emit);
    if (all || c.emit == "elements") {
        Json e = Json::array();
        for (const auto& b : poset.elements()) e.push_back(to_string(b));
        out["elements"] = e;
    }
    if (all || c.emit == "pairs") {
        auto inc = poset.incomparable_pairs();
        out["incomparable"] = Json{{"aa", pair_list(inc.angle_angle)},
                                   {"ss", pair_list(inc.square_square)},
                                   {"mixed", pair_list(inc.mixed)}};
    }
    if (all || c.emit == "covers") {
        Json e = Json::array();
        for (const auto& cv : poset.covering_relations()) e.push_back(Json::array({to_string(cv.square), to_string(cv.angle)}));
        out["covers"] = e;
    }
    if (all || c.emit == "bidegree") {
        out["bidegree"] = bidegree_json(poset.bidegree());
        out["total_chains"] = to_string(poset.count_maximal_chains());
    }
    return out;
}

Json run_ideal(const RunConfig& c) {
    require_params(c);
    BracketRing ring(c.k, c.n);
    GluedPoset poset(c.k, c.n, c.r);
    ParametrizationPhi phi(c.k, c.n, c.r);
    auto suite = generator_suite(ring, poset);
    const std::string& f = c.family;
    if (f != "all" && f != "plucker" && f != "mixed" && f != "pq" && f != "toric")
        throw DomainError("unknown --family " + f);
    Json out{{"k", c.k}, {"n", c.n}, {"r", c.r}};
    Json families = Json::object();
    std::vector<SparsePolynomial> to_verify;
    if (f == "all" || f == "plucker") {
        families["plucker_angle"] = strings_of(suite.plucker_angle);
        families["plucker_square"] = strings_of(suite.plucker_square);
        for (const auto& g : suite.plucker_angle) to_verify.push_back(g.poly);
        for (const auto& g : suite.plucker_square) to_verify.push_back(g.poly);
    }
    if (f == "all" || f == "mixed") {
        families["mixed"] = strings_of(suite.mixed);
        for (const auto& g : suite.mixed) to_verify.push_back(g.poly);
    }
    if ((f == "all" || f == "pq") && c.r < c.k) {
        auto pq = pq_product_entries(ring, c.r);
        families["pq"] = strings_of(pq);
        to_verify.insert(to_verify.end(), pq.begin(), pq.end());
    }
    if (f == "all" || f == "toric") {
        std::vector<SparsePolynomial> toric;
        for (const auto& [a, s] : poset.incomparable_pairs().mixed) toric.push_back(toric_binomial(ring, poset, a, s));
        families["toric"] = strings_of(toric);
    }
    out["families"] = families;
    out["count"] = suite.size();
    if (c.verify) {
        auto rep = verify_in_kernel(ring, phi, to_verify, 20, c.seed);
        out["verify"] = Json{{"ok", rep.ok}, {"samples", rep.samples}, {"evaluations", rep.evaluations}};
        if (rep.failure) out["verify"]["failure"] = *rep.failure;
        if (!rep.ok) throw CheckFailure(out.dump(2));
    }
    return out;
}

Json run_mandelstam(const RunConfig& c) {
    Json out;
    if (!c.check_file.empty()) {
        MandelstamTensor s = tensor_from_json(read_file(c.check_file));
        if (c.r < 0 || c.r >= s.k) throw DomainError("need 0 <= r < k for the check");
        Membership m;
        if (s.k == 2) {
            m = membership_k2(s, c.r);
        } else {
            auto ring = mandelstam_ring(s.k, s.n);
            auto vals = assignment(s, ring);
            for (const auto& form : momentum_forms(s.k, s.n, c.r))
                if (sgn(form.eval(vals)) != 0) {
                    m = {false, form.to_string()};
                    break;
                }
        }
        out = Json{{"k", s.k}, {"n", s.n}, {"r", c.r}, {"member", m.member}};
        if (!m.member) {
            out["violated"] = m.violated;
            throw CheckFailure(out.dump(2));
        }
        return out;
    }
    require_params(c);
    auto d = dims(c.k, c.n, c.r);
    out = Json{{"k", c.k}, {"n", c.n}, {"r", c.r}};
    out["dims"] = Json{{"sh", d.dim_sh}, {"m", d.dim_m}, {"ambient", d.ambient}};
    out["momentum_forms"] = c.r < c.k ? strings_of(momentum_forms(c.k, c.n, c.r)) : std::vector<std::string>{};
    Json samples = Json::array();
    for (std::size_t i = 0; i < c.samples; ++i)
        samples.push_back(subset_map_json(hadamard(psi_sample(c.k, c.n, c.r, mix_seed(c.seed, i))).values));
    out["samples"] = samples;
    return out;
}

Json check_json(const TropCheck& t) {
    Json out{{"ok", t.ok}};
    if (!t.ok) out["failing"] = t.failing;
    return out;
}

Json run_trop(const RunConfig& c) {
    Json out = Json::object();
    bool failed = false;
    if (!c.check_file.empty()) {
        TropicalVector v = tropical_from_json(read_file(c.check_file));
        auto basis = tropical_basis_check_m250(v);
        out["basis"] = check_json(basis);
        out["positive"] = check_json(positive_trop_check_m250(v));
        failed = !basis.ok;
    }
    if (c.circuits) {
        Json list = Json::array();
        for (const auto& circuit : circuits_m250()) {
            Json names = Json::array();
            for (const auto& s : circuit) names.push_back(s_name(s));
            list.push_back(names);
        }
        out["circuits"] = list;
    }
    if (c.samples > 0) {
        require_params(c);
        Json samples = Json::array();
        for (std::size_t i = 0; i < c.samples; ++i) {
            auto v = trop_mandelstam_sample(c.k, c.n, c.r, mix_seed(c.seed, i));
            Json entry{{"vector", subset_map_json(v.values)}};
            if (c.k == 2 && c.n == 5 && c.r == 0) {
                auto basis = tropical_basis_check_m250(v);
                entry["basis"] = check_json(basis);
                failed = failed || !basis.ok;
            }
            samples.push_back(entry);
        }
        out["samples"] = samples;
    }
    if (out.empty()) throw DomainError("trop needs --samples, --check-m250 or --circuits");
    if (failed) throw CheckFailure(out.dump(2));
    return out;
}

Json run_scatter(const RunConfig& c) {
    std::optional<KinematicPoint> point;
    MandelstamTensor s;
    if (!c.kinematics_file.empty()) {
        Json j = parse_json(read_file(c.kinematics_file));
        if (j.is_object() && j.contains("lambda")) {
            point = kinematics_from_json(j.dump());
            if (point->pairing_rank() > static_cast<std::size_t>(point->k - 2))
                throw DomainError("kinematics are not on SH(k,n,k-2): rank of lambda * lambda_tilde^T is " +
                                  std::to_string(point->pairing_rank()));
            s = hadamard(*point);
        } else {
            s = tensor_from_json(j.dump());
        }
        if ((c.k && c.k != s.k) || (c.n && c.n != s.n)) throw DomainError("--k/--n disagree with the kinematics file");
    } else {
        if (!((c.k == 2 && c.n >= 4) || (c.k == 3 && c.n == 6)))
            throw DomainError("scatter supports k = 2 (n >= 4) and (k,n) = (3,6)");
        point = psi_sample(c.k, c.n, c.k - 2, c.seed);
        s = hadamard(*point);
    }
    auto problem = ScatteringProblem::make(s);
    Json out{{"k", s.k}, {"n", s.n}, {"mandelstam", subset_map_json(s.values)}};
    if (point) out["kinematics"] = kinematics_json(*point);
    bool failed = false;

    const bool solving = c.solve || c.classify || !c.tautological;
    if (solving) {
        SolveOptions opts;
        opts.budget = c.budget;
        opts.seed = c.seed;
        opts.tol = c.tol;
        opts.dedup = c.dedup;
        auto result = solve(problem, opts);
        if (c.classify) {
            if (s.k != 2) throw DomainError("--classify needs k = 2");
            if (!point) throw DomainError("--classify needs lambda and lambda_tilde");
            std::map<int, long> sizes;
            Json failures = Json::array();
            for (auto& sol : result.solutions) {
                auto cls = sector_classify_k2(sol, *point, c.classify_tol, c.seed);
                sol.sector = cls.sector;
                if (cls.sector)
                    sizes[*cls.sector]++;
                else
                    failures.push_back(cls.message);
            }
            Json sectors = Json::array();
            for (int l = 2; l <= s.n - 2; ++l) {
                long expected = eulerian(s.n - 3, l - 2).get_si();
                sectors.push_back(Json{{"l", l}, {"found", sizes[l]}, {"expected", expected}});
                failed = failed || sizes[l] != expected;
            }
            out["sectors"] = sectors;
            if (!failures.empty()) {
                out["classification_failures"] = failures;
                failed = true;
            }
        }
        Json sols = Json::array();
        for (const auto& sol : result.solutions) sols.push_back(solution_json(sol));
        out["solve"] = Json{{"expected", result.expected}, {"found", result.solutions.size()},
                            {"starts", result.starts},     {"converged", result.converged},
                            {"partial", result.partial},   {"solutions", sols}};
        failed = failed || static_cast<long>(result.solutions.size()) != result.expected;
    }
    if (c.tautological) {
        if (!point) throw DomainError("--tautological needs lambda and lambda_tilde");
        auto taut = tautological_solutions_36(*point);
        const char* names[] = {"V", "W", "nu(V cap W-perp)", "nu(V-perp cap W)"};
        Json list = Json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            auto res = residuals_36(s, taut[i]);
            bool zero = std::all_of(res.begin(), res.end(), [](const Rational& q) { return sgn(q) == 0; });
            Json xyzw = Json::array();
            for (const auto& q : taut[i]) xyzw.push_back(to_string(q));
            list.push_back(Json{{"name", names[i]}, {"xyzw", xyzw}, {"exact_zero", zero}});
            failed = failed || !zero;
        }
        out["tautological"] = list;
    }
    if (failed) throw CheckFailure(out.dump(2));
    return out;
}

Json report_json(const PaperReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(Json{{"id", c.id}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    return Json{{"checks", checks}, {"all_pass", report.all_pass()}};
}

void emit(const Json& j, const RunConfig& c, std::ostream& out) {
    std::ostringstream text;
    if (c.format == Format::Json) {
        text << j.dump(2) << "\n";
    } else if (c.command == "paper-report") {
        for (const auto& check : j["checks"])
            text << (check["pass"].get<bool>() ? "PASS " : "FAIL ") << check["id"].get<std::string>()
                 << "  expected: " << check["expected"].get<std::string>()
                 << "  computed: " << check["computed"].get<std::string>() << "\n";
    } else {
        flatten(j, "", text);
    }
    if (c.out.empty()) {
        out << text.str();
        return;
    }
    std::ofstream file(c.out);
    if (!file) throw DomainError("cannot write " + c.out);
    file << text.str();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Json result;
        if (config.command == "poset")
            result = run_poset(config);
        else if (config.command == "ideal")
            result = run_ideal(config);
        else if (config.command == "mandelstam")
            result = run_mandelstam(config);
        else if (config.command == "trop")
            result = run_trop(config);
        else if (config.command == "scatter")
            result = run_scatter(config);
        else if (config.command == "paper-report") {
            auto report = paper_report();
            result = report_json(report);
            emit(result, config, out);
            if (!report.all_pass()) {
                for (const auto& c : report.checks)
                    if (!c.pass) err << "check failed: " << c.id << " (computed " << c.computed << ")\n";
                return exit_check_failure;
            }
            return exit_ok;
        } else
            throw DomainError("unknown command: " + config.command);
        emit(result, config, out);
        return exit_ok;
    } catch (const CheckFailure& e) {
        emit(parse_json(e.what()), config, out);
        err << "check failed\n";
        return exit_check_failure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain_error;
    }
}

}  // namespace shv
