#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qsv/identities.hpp"

namespace qsv {

/// One registered verification: `run(order)` builds both sides and compares.
/// `order` is the series order, polynomial-size bound, or degree cap,
/// whichever the check is parameterized by; 0 keeps the default.
struct CheckSpec {
    std::string id;
    std::string description;
    long default_order = 0;
    std::function<VerifyReport(long)> run;
};

/// All registered checks, in deterministic order.
const std::vector<CheckSpec>& check_registry();

/// Run one check by id; order 0 (or nullopt) uses the registered default.
VerifyReport run_check(const std::string& id, std::optional<long> order = std::nullopt);

/// Run everything, optionally fanning out over `jobs` threads; results come
/// back in registry order regardless of scheduling.
std::vector<VerifyReport> run_all_checks(int jobs = 1);

/// Named univariate expansions for the CLI: G, H, P, Q, rr-sum-0, rho-low, ...
const std::vector<std::string>& expandable_names();
Series expand_function(const std::string& name, int order);

} // namespace qsv
