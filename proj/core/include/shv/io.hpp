#ifndef SHV_IO_HPP
#define SHV_IO_HPP

#include "shv/mandelstam.hpp"
#include "shv/poset.hpp"
#include "shv/scattering.hpp"
#include "shv/tropical.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace shv {

// JSON encodings. Rationals are strings, complex numbers {"re": .., "im": ..}.
std::string to_json(const RationalMatrix& m);
std::string to_json(const MandelstamTensor& s);  // {"s[1,2,3]": "12000", ...}
std::string to_json(const TropicalVector& v);
std::string to_json(const KinematicPoint& p);  // {"lambda": .., "lambda_tilde": ..}
std::string to_json(const ScatteringSolution& s);
std::string to_json(const BidegreePolynomial& b);

RationalMatrix matrix_from_json(const std::string& text);
MandelstamTensor tensor_from_json(const std::string& text);
TropicalVector tropical_from_json(const std::string& text);
KinematicPoint kinematics_from_json(const std::string& text);
ScatteringSolution solution_from_json(const std::string& text);

// "s[1,2,3]" -> {1,2,3}
Subset parse_subset_key(const std::string& key);

struct ReportCheck {
    std::string id;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct PaperReport {
    std::vector<ReportCheck> checks;  // sorted by id
    bool all_pass() const;
};

PaperReport paper_report();

enum class Format { Json, Text };

struct RunConfig {
    std::string command;  // poset | ideal | mandelstam | trop | scatter | paper-report
    int k = 0;
    int n = 0;
    int r = 0;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    double tol = 1e-11;
    double dedup = 1e-6;
    double classify_tol = 1e-8;
    std::string out;  // empty means the given stream
    Format format = Format::Json;

    std::string emit = "all";    // poset: elements | pairs | covers | bidegree | all
    std::string family = "all";  // ideal: plucker | mixed | pq | toric | all
    bool verify = false;
    std::size_t samples = 0;
    std::string check_file;       // mandelstam --check, trop --check-m250
    bool circuits = false;
    std::string kinematics_file;  // scatter
    bool solve = false;
    bool classify = false;
    bool tautological = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 2;
inline constexpr int exit_check_failure = 3;

// Dispatches one command; writes the result to out (or config.out) and messages to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace shv

#endif
