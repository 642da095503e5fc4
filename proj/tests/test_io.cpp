#include "shv/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace shv;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / ("shv_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_config(const RunConfig& c) {
    std::ostringstream out, err;
    int code = run(c, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, MatrixRoundTrip) {
    RationalMatrix m{{4, 0, 7}, {1, -3, 7}};
    m(0, 1) = make_rational(-5, 21);
    EXPECT_EQ(matrix_from_json(to_json(m)), m);
    EXPECT_EQ(matrix_from_json("[[1, \"2/3\"], [\"-4\", 5]]")(0, 1), make_rational(2, 3));
}

TEST(Json, TensorAndTropicalRoundTrip) {
    auto s = hadamard(psi_sample(3, 6, 1, 1));
    EXPECT_EQ(tensor_from_json(to_json(s)), s);
    auto v = trop_mandelstam_sample(2, 5, 0, 3);
    EXPECT_EQ(tropical_from_json(to_json(v)), v);
}

TEST(Json, KinematicsRoundTrip) {
    auto p = psi_sample(2, 6, 0, 2);
    auto q = kinematics_from_json(to_json(p));
    EXPECT_EQ(q.lambda, p.lambda);
    EXPECT_EQ(q.lambda_tilde, p.lambda_tilde);
    EXPECT_EQ(hadamard(q), hadamard(p));
}

TEST(Json, SolutionRoundTrip) {
    ScatteringSolution s;
    s.coordinates = {Complex(0.25, -1.5), Complex(3, 0.1)};
    s.residual_norm = 1e-13;
    s.sector = 3;
    s.multiplicity_flag = true;
    auto t = solution_from_json(to_json(s));
    EXPECT_EQ(t.coordinates, s.coordinates);
    EXPECT_EQ(t.residual_norm, s.residual_norm);
    EXPECT_EQ(t.sector, s.sector);
    EXPECT_TRUE(t.multiplicity_flag);
    s.sector.reset();
    EXPECT_FALSE(solution_from_json(to_json(s)).sector.has_value());
}

TEST(Json, BidegreeEncoding) {
    EXPECT_EQ(to_json(GluedPoset(2, 4, 0).bidegree()).front(), '[');
}

TEST(Json, MalformedInputsThrowDomainError) {
    EXPECT_THROW(matrix_from_json("[[1, 2], [3]]"), DomainError);
    EXPECT_THROW(matrix_from_json("{"), DomainError);
    EXPECT_THROW(matrix_from_json("[[1.5]]"), DomainError);
    EXPECT_THROW(tensor_from_json("{\"s[1,2]\": \"1\"}"), DomainError);
    EXPECT_THROW(tensor_from_json("{\"t[1,2]\": \"1\"}"), DomainError);
    EXPECT_THROW(kinematics_from_json("{\"lambda\": [[1]]}"), DomainError);
    EXPECT_THROW(solution_from_json("{}"), DomainError);
}

TEST(Json, SubsetKeys) {
    EXPECT_EQ(parse_subset_key("s[1,2,3]"), (Subset{1, 2, 3}));
    EXPECT_EQ(parse_subset_key("s[4,5]"), (Subset{4, 5}));
    EXPECT_THROW(parse_subset_key("s[2,1]"), DomainError);
    EXPECT_THROW(parse_subset_key("s[1,,2]"), DomainError);
    EXPECT_THROW(parse_subset_key("s[0,1]"), DomainError);
    EXPECT_THROW(parse_subset_key("[1,2]"), DomainError);
}

TEST(Run, PosetBidegree) {
    RunConfig c;
    c.command = "poset";
    c.k = 2;
    c.n = 6;
    c.emit = "bidegree";
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_ok);
    for (const char* coeff : {"\"28\"", "\"70\"", "\"90\""}) EXPECT_NE(o.out.find(coeff), std::string::npos);
    EXPECT_NE(o.out.find("\"total_chains\": \"286\""), std::string::npos);
}

TEST(Run, DomainErrorsExitTwo) {
    RunConfig c;
    c.command = "ideal";
    c.k = 9;
    c.n = 3;
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_domain_error);
    EXPECT_FALSE(o.err.empty());

    c.command = "frobnicate";
    EXPECT_EQ(run_config(c).code, exit_domain_error);

    RunConfig m;
    m.command = "mandelstam";
    m.check_file = temp_file("garbage.json", "{not json");
    EXPECT_EQ(run_config(m).code, exit_domain_error);
    m.check_file = "/nonexistent/shv.json";
    EXPECT_EQ(run_config(m).code, exit_domain_error);
}

TEST(Run, IdealVerify) {
    RunConfig c;
    c.command = "ideal";
    c.k = 2;
    c.n = 5;
    c.verify = true;
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_ok);
    EXPECT_NE(o.out.find("\"ok\": true"), std::string::npos);
}

TEST(Run, MandelstamCheckExitCodes) {
    auto s = hadamard(psi_sample(2, 6, 0, 1));
    RunConfig c;
    c.command = "mandelstam";
    c.check_file = temp_file("member.json", to_json(s));
    EXPECT_EQ(run_config(c).code, exit_ok);
    s.values[{1, 2}] += 1;
    c.check_file = temp_file("nonmember.json", to_json(s));
    EXPECT_EQ(run_config(c).code, exit_check_failure);
}

TEST(Run, TropCheckExitCodes) {
    RunConfig c;
    c.command = "trop";
    c.check_file = temp_file("trop_ok.json", to_json(trop_mandelstam_sample(2, 5, 0, 1)));
    EXPECT_EQ(run_config(c).code, exit_ok);
    TropicalVector bad{2, 5, {}};
    int i = 0;
    for (const auto& ij : subsets(5, 2)) bad.values[ij] = (++i) * i;
    c.check_file = temp_file("trop_bad.json", to_json(bad));
    EXPECT_EQ(run_config(c).code, exit_check_failure);
}

TEST(Run, ScatterFromKinematicsFile) {
    RunConfig c;
    c.command = "scatter";
    c.kinematics_file = temp_file("kin.json", to_json(psi_sample(2, 5, 0, 3)));
    c.classify = true;
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_ok) << o.err;
    EXPECT_NE(o.out.find("\"found\": 2"), std::string::npos);

    // lambda * lambda_tilde^T of rank 1 is not on SH(2,5,0).
    RationalMatrix a{{1, 0, 1, 2, 3}, {0, 1, 1, 1, 1}};
    RationalMatrix b{{1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}};
    c.kinematics_file = temp_file("kin_bad.json", to_json(KinematicPoint::from_matrices(a, b)));
    EXPECT_EQ(run_config(c).code, exit_domain_error);
}

TEST(Run, ScatterTautological) {
    RunConfig c;
    c.command = "scatter";
    c.k = 3;
    c.n = 6;
    c.seed = 2;
    c.tautological = true;
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_ok) << o.err;
    EXPECT_EQ(o.out.find("\"exact_zero\": false"), std::string::npos);
}

TEST(Run, OutputIsIdenticalAcrossThreadCounts) {
    RunConfig c;
    c.command = "scatter";
    c.k = 2;
    c.n = 6;
    c.seed = 5;
    c.classify = true;
    setenv("SHV_THREADS", "1", 1);
    auto one = run_config(c);
    setenv("SHV_THREADS", "3", 1);
    auto three = run_config(c);
    unsetenv("SHV_THREADS");
    EXPECT_EQ(one.code, exit_ok);
    EXPECT_EQ(one.out, three.out);
}

TEST(Run, TextFormatAndOutFile) {
    RunConfig c;
    c.command = "poset";
    c.k = 2;
    c.n = 4;
    c.emit = "covers";
    c.format = Format::Text;
    auto path = std::filesystem::temp_directory_path() / "shv_test_covers.txt";
    c.out = path.string();
    auto o = run_config(c);
    EXPECT_EQ(o.code, exit_ok);
    EXPECT_TRUE(o.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("k = 2", 0), 0u);
}
