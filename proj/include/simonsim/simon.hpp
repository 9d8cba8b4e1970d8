#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simonsim/mbqc.hpp"
#include "simonsim/rng.hpp"

namespace simonsim {

class PromiseViolationError : public DomainError {
public:
    using DomainError::DomainError;
};

// One catalogued SP_22 black box: function table, period (or 1-1), ancilla
// flip mask, and the measurement pattern realizing it.
struct SimonInstance {
    std::string bb_id;                 // canonical id ("s01", "a8", ...)
    std::optional<std::string> period;  // nullopt = one-to-one
    int flips = 0;                      // 2-bit mask applied to f(x)
    std::array<int, 4> table{};         // f(x) for x = 00,01,10,11 (2-bit values)
    Pattern pattern;

    bool one_to_one() const { return !period.has_value(); }
};

struct SampleSet {
    int n = 2;
    std::vector<std::string> samples;
    std::map<std::string, std::uint64_t> counts;

    void add(const std::string& y) {
        samples.push_back(y);
        ++counts[y];
    }
};

// Canonical ids: "s01", "s10", "s11" (six-qubit; aliases "h", "k", "n") and
// "a8".."o8" (eight-qubit; bare letters other than h/k/n also accepted).
SimonInstance bb_catalog(const std::string& bb_id, int flips);
std::vector<std::string> all_bb_ids();

SampleSet run_simon_mbqc(const SimonInstance& inst, std::uint64_t shots, Rng& rng);

// Exact y marginal of H^{x-register} applied to 2^{-n/2} sum_x |x>|f(x)>.
std::map<std::string, double> circuit_model_reference(const SimonInstance& inst);
std::map<std::string, double> circuit_model_reference(int n,
                                                      const std::vector<int>& table);

// Weighted branch enumeration of the instance's pattern (exact, no sampling).
std::map<std::string, double> mbqc_branch_distribution(const SimonInstance& inst);

struct PeriodResult {
    enum class Kind { Period, OneToOneSuspected, InsufficientRank };
    Kind kind = Kind::InsufficientRank;
    std::string s;  // set only for Kind::Period

    std::string str() const;
};

// GF(2) elimination. Nonzero samples spanning n dimensions violate the 2-1
// promise and throw PromiseViolationError; rank n-1 determines s uniquely.
PeriodResult solve_period(const std::vector<std::string>& samples, int n);

// Non-throwing variant: full rank, or insufficient rank after at least
// `budget` samples, is reported as OneToOneSuspected.
PeriodResult classify_period(const std::vector<std::string>& samples, int n,
                             std::size_t budget);

double expected_runs_to_nonzero(const SimonInstance& inst, std::uint64_t trials, Rng& rng);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Optimal adaptive classical strategy over the 12-instance SP_22 catalog
// (3 periods x 4 flip masks); exact expectation, equals 8/3.
Rational classical_baseline_sp22();

// Same search restricted to a subset of the catalog (stopping rule still
// checks consistency against the full catalog).
Rational classical_baseline_restricted(const std::vector<int>& catalog_indices);

// Monte Carlo success probability of a random-query classical solver against
// a uniformly random 2-1 instance of size n.
double classical_success_bound(int n, int queries, std::uint64_t trials, Rng& rng);

}  // namespace simonsim
