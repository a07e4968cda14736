#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kinn {

// The checkable identities. eq2_truncated is a deliberately false diagnostic
// variant of eq2 whose recurrence sum stops at n-k-1 instead of n-k+1; it
// exists to demonstrate what a counterexample report looks like and is the
// one identity expected to fail.
enum class Identity {
    eq1,         // k-fold Catalan convolution: lhs == rhs, 1 <= k <= n
    eq2,         // (n-k) f_k(n) == n sum_{i=2}^{n-k+1} C_{i-1} f_k(n-i+1), 3 <= k <= n
    eq2_truncated,
    eq3,         // exhaustive k-in-n count == C(2n-k-1, n-1), 3 <= k <= n
    eq4,         // sum C_i C_{n-i} == C_{n+1}, n >= 0
    eq5,         // sum i C_i C_{n-i} == C(2n+1, n-1), n >= 1
    eq6,         // sum C_i C(p-1-2i, q-1-i) == C(p,q), 1 <= q <= p <= 2q-1
    eq7,         // k f_k(n) == n * convolution_lhs(k,n), 3 <= k < n
    corollary,   // brute-force average k-cycle count == closed form, 3 <= k < n
};

std::string to_string(Identity id);
Identity identity_from_string(std::string_view name);
std::vector<Identity> all_identities();

// Grid bounds; fields that do not apply to an identity must stay unset.
struct VerifyRange {
    std::optional<int> n_max;
    std::optional<int> k_max;
    std::optional<int> q_max;
};

struct Counterexample {
    std::vector<long long> params;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    Identity id;
    std::vector<std::string> param_names;
    std::string range_desc;
    std::vector<std::vector<long long>> params_checked;
    bool passed = false;  // true iff no counterexample
    std::optional<Counterexample> first_counterexample;
};

// Evaluates both sides of the identity exactly on every grid cell, in
// lexicographic parameter order, and reports the first counterexample if
// any. Throws std::domain_error on out-of-range or inapplicable bounds.
IdentityReport verify_identity(Identity id, const VerifyRange& range = {});

std::string report_text(const IdentityReport& report);
// {"identity":..., "range":..., "param_names":..., "checked":...,
//  "passed":..., "counterexample":{"params":...,"lhs":...,"rhs":...}|null}
std::string report_json(const IdentityReport& report);

}  // namespace kinn
