#include "opcalc/check_report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace opcalc {

bool CheckReport::passed() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.passed(); });
}

bool CheckReport::vacuous() const {
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.checked == 0; });
}

Condition& CheckReport::condition(const std::string& id, const std::string& law) {
    auto it = std::find_if(conditions.begin(), conditions.end(), [&](const Condition& c) { return c.id == id; });
    if (it != conditions.end()) return *it;
    conditions.push_back({id, law, 0, 0, {}});
    return conditions.back();
}

void CheckReport::merge(const CheckReport& other) {
    for (const auto& c : other.conditions) {
        auto& mine = condition(c.id, c.law);
        if (mine.failed == 0 && c.failed > 0) mine.witness = c.witness;
        mine.checked += c.checked;
        mine.failed += c.failed;
    }
}

std::string CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["samples"] = samples;
    j["seed"] = seed;
    j["status"] = vacuous() ? "no-samples" : passed() ? "pass" : "fail";
    j["conditions"] = nlohmann::ordered_json::array();
    for (const auto& c : conditions) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["law"] = c.law;
        e["checked"] = c.checked;
        e["failed"] = c.failed;
        e["pass"] = c.passed();
        if (!c.passed()) e["witness"] = c.witness;
        j["conditions"].push_back(std::move(e));
    }
    return j.dump(2);
}

std::string CheckReport::to_text() const {
    std::ostringstream os;
    os << subject << " (" << samples << " samples, seed " << seed << ")\n";
    for (const auto& c : conditions) {
        os << "  " << (c.passed() ? "pass" : "FAIL") << "  " << c.id << "  [" << c.checked << " checks]  " << c.law
           << '\n';
        if (!c.passed()) os << "        witness: " << c.witness << '\n';
    }
    if (vacuous()) os << "  no-samples: nothing was checked\n";
    return os.str();
}

const Condition& CheckReport::at(const std::string& id) const {
    for (const auto& c : conditions)
        if (c.id == id) return c;
    throw std::out_of_range("no condition '" + id + "'");
}

}  // namespace opcalc
