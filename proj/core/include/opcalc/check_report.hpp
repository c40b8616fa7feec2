#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace opcalc {

/// Outcome of one law over a batch of samples. `law` is the identity being checked, written out.
struct Condition {
    std::string id;
    std::string law;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string witness;  // first failing sample, serialized

    bool passed() const { return failed == 0; }
};

struct CheckReport {
    std::string subject;
    std::size_t samples = 0;
    unsigned long long seed = 0;
    std::vector<Condition> conditions;

    bool passed() const;
    /// True when nothing was checked at all.
    bool vacuous() const;
    Condition& condition(const std::string& id, const std::string& law);
    /// Throws std::out_of_range for an unknown id.
    const Condition& at(const std::string& id) const;
    /// Records one evaluation of `id`; the witness thunk is only called for the first failure.
    template <class Witness>
    void record(const std::string& id, const std::string& law, bool ok, Witness&& witness) {
        auto& c = condition(id, law);
        ++c.checked;
        if (!ok && c.failed++ == 0) c.witness = witness();
    }
    void merge(const CheckReport& other);

    std::string to_json() const;
    std::string to_text() const;
};

}  // namespace opcalc
