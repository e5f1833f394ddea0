#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xifn/products.hpp"
#include "xifn/transform.hpp"

namespace xifn {

// One verification outcome.  info_only entries report findings (e.g. the
// published-text discrepancies) without affecting the pass/fail status.
struct CheckResult {
    std::string name;
    bool pass = true;
    bool info_only = false;
    double max_err = 0.0;
    std::string detail;
};

struct CheckOptions {
    std::uint64_t seed = 1;
    double tol_identity = 1e-10;    // closed forms, round trips, products
    double tol_gram = 1e-8;         // relative, discrete orthogonality
    double tol_invariance = 1e-12;  // sum identities, invariances, zeros
    double tol_continuous = 1e-9;
    double tol_parseval = 1e-9;
    i64 m_max_discrete = 8;    // Gram matrices for M = 1..m_max_discrete
    i64 m_max_roundtrip = 8;   // round trips for M = 2..m_max_roundtrip
    i64 m_max_sizes = 16;      // |F_M| = |Lambda_M| for M = 1..m_max_sizes
    int closed_form_trials = 1000;
    int identity_trials = 200;
    int invariance_trials = 100;
    int product_pairs = 50;
    int continuous_pairs = 20;
    std::vector<i64> table_Ms = {4, 5, 6, 7, 8, 9, 10, 12};
    std::optional<Algebra> only_algebra;  // restrict the suites to one algebra
};

std::vector<CheckResult> check_constants();
std::vector<CheckResult> check_group_axioms(const CheckOptions& opt);
std::vector<CheckResult> check_tables(const CheckOptions& opt);
std::vector<CheckResult> check_set_sizes(const CheckOptions& opt);
std::vector<CheckResult> check_closed_forms(const CheckOptions& opt);
std::vector<CheckResult> check_sum_identities(const CheckOptions& opt);
std::vector<CheckResult> check_invariances(const CheckOptions& opt);
std::vector<CheckResult> check_boundary_zeros(const CheckOptions& opt);
std::vector<CheckResult> check_continuous_orthogonality(const CheckOptions& opt);
std::vector<CheckResult> check_discrete_orthogonality(const CheckOptions& opt);
std::vector<CheckResult> check_transform_roundtrips(const CheckOptions& opt);
std::vector<CheckResult> check_products(const CheckOptions& opt);

// Table fixtures (test data transcribed from the published tables).
// Weight patterns: 0 = (a,b), 1 = (a,0), 2 = (0,b), 3 = (0,0).
int weight_pattern(const Vec2i& lambda);
// cab patterns: 0 [c,a,b], 1 [0,a,b], 2 [c,0,b], 3 [c,a,0], 4 [0,0,b],
// 5 [0,a,0], 6 [c,0,0].
int cab_pattern(const std::array<i64, 3>& cab);
std::string cab_pattern_name(int pattern);
std::string weight_pattern_name(int pattern);
i64 table1_d(Algebra kind, int pattern, SubgroupLabel sub);
i64 table2_eps(Algebra kind, int pattern, SubgroupLabel sub);
i64 table2_h(Algebra kind, int pattern, SubgroupLabel sub);

}  // namespace xifn
