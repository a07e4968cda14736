#include "kinn/verify.hpp"

#include "kinn/catalan.hpp"
#include "kinn/enumerate.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace kinn {

namespace {

struct IdentityInfo {
    Identity id;
    const char* name;
};

constexpr IdentityInfo kIdentities[] = {
    {Identity::eq1, "eq1"},
    {Identity::eq2, "eq2"},
    {Identity::eq2_truncated, "eq2_truncated"},
    {Identity::eq3, "eq3"},
    {Identity::eq4, "eq4"},
    {Identity::eq5, "eq5"},
    {Identity::eq6, "eq6"},
    {Identity::eq7, "eq7"},
    {Identity::corollary, "corollary"},
};

int pick(const std::optional<int>& requested, int fallback, int minimum, const char* what) {
    if (!requested) return fallback;
    if (*requested < minimum)
        throw std::domain_error(std::string(what) + " must be at least " + std::to_string(minimum));
    return *requested;
}

void reject(const std::optional<int>& field, const char* what, Identity id) {
    if (field)
        throw std::domain_error(std::string(what) + " does not apply to identity " + to_string(id));
}

// Recurrence right-hand side n * sum_{i=2}^{top} C_{i-1} f_k(n-i+1).
Count recurrence_rhs(int k, int n, int top) {
    Count sum(0);
    for (int i = 2; i <= top; ++i) sum += catalan(i - 1) * f_closed(k, n - i + 1);
    return Count(n) * sum;
}

using CellCheck = std::function<std::pair<std::string, std::string>(const std::vector<long long>&)>;

IdentityReport run_grid(Identity id, std::string range_desc, std::vector<std::string> param_names,
                        std::vector<std::vector<long long>> grid, const CellCheck& evaluate) {
    IdentityReport report;
    report.id = id;
    report.param_names = std::move(param_names);
    report.range_desc = std::move(range_desc);
    report.passed = true;
    for (auto& params : grid) {
        auto [lhs, rhs] = evaluate(params);
        report.params_checked.push_back(params);
        if (lhs != rhs) {
            report.passed = false;
            report.first_counterexample =
                Counterexample{std::move(params), std::move(lhs), std::move(rhs)};
            break;
        }
    }
    return report;
}

std::vector<std::vector<long long>> kn_grid(int k_min, int k_max, int n_max, bool strict) {
    std::vector<std::vector<long long>> grid;
    for (int k = k_min; k <= k_max; ++k)
        for (int n = strict ? k + 1 : k; n <= n_max; ++n) grid.push_back({k, n});
    return grid;
}

}  // namespace

std::string to_string(Identity id) {
    for (const auto& info : kIdentities)
        if (info.id == id) return info.name;
    throw std::logic_error("unknown identity");
}

Identity identity_from_string(std::string_view name) {
    for (const auto& info : kIdentities)
        if (name == info.name) return info.id;
    throw std::domain_error("unknown identity: " + std::string(name));
}

std::vector<Identity> all_identities() {
    std::vector<Identity> out;
    for (const auto& info : kIdentities) out.push_back(info.id);
    return out;
}

IdentityReport verify_identity(Identity id, const VerifyRange& range) {
    switch (id) {
        case Identity::eq1: {
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 14, 1, "n_max");
            const int k_max = pick(range.k_max, n_max, 1, "k_max");
            return run_grid(id, "1<=k<=n<=" + std::to_string(n_max), {"k", "n"},
                            kn_grid(1, std::min(k_max, n_max), n_max, false), [](const auto& p) {
                                const int k = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
                                return std::pair(convolution_lhs(k, n).str(),
                                                 convolution_rhs(k, n).str());
                            });
        }
        case Identity::eq2:
        case Identity::eq2_truncated: {
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 14, 3, "n_max");
            const int k_max = pick(range.k_max, n_max, 3, "k_max");
            const bool truncated = id == Identity::eq2_truncated;
            return run_grid(id, "3<=k<=n<=" + std::to_string(n_max), {"k", "n"},
                            kn_grid(3, std::min(k_max, n_max), n_max, false), [=](const auto& p) {
                                const int k = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
                                const int top = truncated ? n - k - 1 : n - k + 1;
                                return std::pair((Count(n - k) * f_closed(k, n)).str(),
                                                 recurrence_rhs(k, n, top).str());
                            });
        }
        case Identity::eq3: {
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 10, 3, "n_max");
            const int k_max = pick(range.k_max, n_max, 3, "k_max");
            return run_grid(id, "3<=k<=n<=" + std::to_string(n_max), {"k", "n"},
                            kn_grid(3, std::min(k_max, n_max), n_max, false), [](const auto& p) {
                                const int k = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
                                return std::pair(count_k_in_n_bruteforce(k, n).str(),
                                                 f_closed(k, n).str());
                            });
        }
        case Identity::eq4: {
            reject(range.k_max, "k_max", id);
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 40, 0, "n_max");
            std::vector<std::vector<long long>> grid;
            for (int n = 0; n <= n_max; ++n) grid.push_back({n});
            return run_grid(id, "0<=n<=" + std::to_string(n_max), {"n"}, std::move(grid),
                            [](const auto& p) {
                                const int n = static_cast<int>(p[0]);
                                Count sum(0);
                                for (int i = 0; i <= n; ++i) sum += catalan(i) * catalan(n - i);
                                return std::pair(sum.str(), catalan(n + 1).str());
                            });
        }
        case Identity::eq5: {
            reject(range.k_max, "k_max", id);
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 40, 1, "n_max");
            std::vector<std::vector<long long>> grid;
            for (int n = 1; n <= n_max; ++n) grid.push_back({n});
            return run_grid(id, "1<=n<=" + std::to_string(n_max), {"n"}, std::move(grid),
                            [](const auto& p) {
                                const int n = static_cast<int>(p[0]);
                                return std::pair(weighted_catalan_sum(n).str(),
                                                 binomial(2LL * n + 1, n - 1).str());
                            });
        }
        case Identity::eq6: {
            reject(range.n_max, "n_max", id);
            reject(range.k_max, "k_max", id);
            const int q_max = pick(range.q_max, 20, 1, "q_max");
            std::vector<std::vector<long long>> grid;
            for (int q = 1; q <= q_max; ++q)
                for (int p = q; p <= 2 * q - 1; ++p) grid.push_back({q, p});
            return run_grid(id, "1<=q<=" + std::to_string(q_max) + ", q<=p<=2q-1", {"q", "p"},
                            std::move(grid), [](const auto& t) {
                                const int q = static_cast<int>(t[0]), p = static_cast<int>(t[1]);
                                return std::pair(lemma_pq_sum(p, q).str(), binomial(p, q).str());
                            });
        }
        case Identity::eq7: {
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 14, 4, "n_max");
            const int k_max = pick(range.k_max, n_max - 1, 3, "k_max");
            return run_grid(id, "3<=k<n<=" + std::to_string(n_max), {"k", "n"},
                            kn_grid(3, std::min(k_max, n_max - 1), n_max, true), [](const auto& p) {
                                const int k = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
                                return std::pair((Count(k) * f_closed(k, n)).str(),
                                                 (Count(n) * convolution_lhs(k, n)).str());
                            });
        }
        case Identity::corollary: {
            reject(range.q_max, "q_max", id);
            const int n_max = pick(range.n_max, 9, 4, "n_max");
            const int k_max = pick(range.k_max, n_max - 1, 3, "k_max");
            return run_grid(id, "3<=k<n<=" + std::to_string(n_max), {"k", "n"},
                            kn_grid(3, std::min(k_max, n_max - 1), n_max, true), [](const auto& p) {
                                const int k = static_cast<int>(p[0]), n = static_cast<int>(p[1]);
                                return std::pair(average_cycles_bruteforce(k, n).str(),
                                                 average_cycles_closed(k, n).str());
                            });
        }
    }
    throw std::logic_error("unknown identity");
}

std::string report_text(const IdentityReport& report) {
    std::string out;
    out += "identity: " + to_string(report.id) + "\n";
    out += "range: " + report.range_desc + "\n";
    out += "checked: " + std::to_string(report.params_checked.size()) + " tuples\n";
    if (report.passed) {
        out += "passed: yes\n";
    } else {
        out += "passed: no\n";
        const auto& ce = *report.first_counterexample;
        out += "counterexample:";
        for (std::size_t i = 0; i < ce.params.size(); ++i)
            out += " " + report.param_names[i] + "=" + std::to_string(ce.params[i]);
        out += " lhs=" + ce.lhs + " rhs=" + ce.rhs + "\n";
    }
    return out;
}

std::string report_json(const IdentityReport& report) {
    std::string out = "{\"identity\":\"" + to_string(report.id) + "\"";
    out += ",\"range\":\"" + report.range_desc + "\"";
    out += ",\"param_names\":[";
    for (std::size_t i = 0; i < report.param_names.size(); ++i) {
        if (i) out += ',';
        out += "\"" + report.param_names[i] + "\"";
    }
    out += "],\"checked\":" + std::to_string(report.params_checked.size());
    out += report.passed ? ",\"passed\":true" : ",\"passed\":false";
    if (report.first_counterexample) {
        const auto& ce = *report.first_counterexample;
        out += ",\"counterexample\":{\"params\":[";
        for (std::size_t i = 0; i < ce.params.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(ce.params[i]);
        }
        out += "],\"lhs\":\"" + ce.lhs + "\",\"rhs\":\"" + ce.rhs + "\"}";
    } else {
        out += ",\"counterexample\":null";
    }
    out += "}";
    return out;
}

}  // namespace kinn
