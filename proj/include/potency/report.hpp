#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "potency/errors.hpp"

namespace potency {

/// Ordered machine-readable verification report. Line grammar:
/// `CHECK <name> PASS|FAIL <detail>`. Check names are unique.
class CheckReport {
  public:
    struct Entry {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        if (!names_.insert(name).second) throw Error("duplicate check name: " + name);
        entries_.push_back({name, pass, detail});
    }

    const std::vector<Entry>& entries() const { return entries_; }

    bool all_pass() const {
        for (const auto& e : entries_)
            if (!e.pass) return false;
        return true;
    }

    void print(std::ostream& os) const {
        for (const auto& e : entries_) {
            os << "CHECK " << e.name << " " << (e.pass ? "PASS" : "FAIL");
            if (!e.detail.empty()) os << " " << e.detail;
            os << "\n";
        }
    }

  private:
    std::vector<Entry> entries_;
    std::set<std::string> names_;
};

}  // namespace potency
