#include "schurcat/report.hpp"

#include <json.hpp>

#include <sstream>

namespace schurcat {

std::string Report::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["total"] = cases.size();
    j["failed"] = failures();
    j["cases"] = nlohmann::json::array();
    for (auto& c : cases) {
        nlohmann::json jc;
        jc["case_id"] = c.case_id;
        jc["relation_id"] = c.relation_id;
        jc["parameters"] = c.parameters;
        jc["status"] = c.ok ? "pass" : "fail";
        if (!c.ok) jc["witness"] = c.witness;
        j["cases"].push_back(jc);
    }
    return j.dump(2);
}

std::string Report::summary() const {
    std::ostringstream os;
    os << suite << ": " << (cases.size() - failures()) << "/" << cases.size() << " passed";
    if (failures() > 0) {
        os << "; failures:";
        for (auto& c : cases)
            if (!c.ok) os << "\n  " << c.case_id << " [" << c.relation_id << "] " << c.witness;
    }
    return os.str();
}

} // namespace schurcat
