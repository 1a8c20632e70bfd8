#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace schurcat {

struct CheckCase {
    std::string case_id;
    std::string relation_id;
    std::string parameters;
    bool ok = false;
    std::string witness;  // empty when ok
};

/// Result of a relation/check suite.  Cases are kept sorted by case_id so
/// reports are byte-identical across runs.
struct Report {
    std::string suite;
    std::vector<CheckCase> cases;

    void add(const std::string& case_id, const std::string& relation_id,
             const std::string& params, bool ok, const std::string& witness = "") {
        cases.push_back({case_id, relation_id, params, ok, witness});
    }
    void merge(const Report& o) {
        cases.insert(cases.end(), o.cases.begin(), o.cases.end());
    }
    void sort() {
        std::sort(cases.begin(), cases.end(),
                  [](const CheckCase& a, const CheckCase& b) { return a.case_id < b.case_id; });
    }
    bool all_ok() const {
        for (auto& c : cases)
            if (!c.ok) return false;
        return true;
    }
    size_t failures() const {
        size_t k = 0;
        for (auto& c : cases)
            if (!c.ok) ++k;
        return k;
    }
    std::string json() const;
    std::string summary() const;
};

} // namespace schurcat
