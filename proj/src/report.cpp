#include "modtens/report.hpp"

#include <algorithm>
#include <sstream>

namespace modtens {

void ValidationReport::add_pass(const std::string& id, const std::string& equation,
                                const std::string& note) {
    checks_.push_back(Check{id, equation, {}, note});
    dirty_ = true;
}

void ValidationReport::fail(const std::string& id, const std::string& equation,
                            const std::string& witness) {
    checks_.push_back(Check{id, equation, {witness}, ""});
    dirty_ = true;
}

void ValidationReport::merge(const ValidationReport& other) {
    for (const auto& c : other.checks_) checks_.push_back(c);
    dirty_ = true;
}

void ValidationReport::canonicalize() const {
    if (!dirty_) return;
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const Check& a, const Check& b) { return a.id < b.id; });
    std::vector<Check> merged;
    for (auto& c : checks_) {
        if (!merged.empty() && merged.back().id == c.id) {
            auto& m = merged.back();
            m.witnesses.insert(m.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
            if (m.equation.empty()) m.equation = c.equation;
            if (m.note.empty()) m.note = c.note;
        } else {
            merged.push_back(std::move(c));
        }
    }
    for (auto& c : merged) std::sort(c.witnesses.begin(), c.witnesses.end());
    checks_ = std::move(merged);
    dirty_ = false;
}

const std::vector<Check>& ValidationReport::checks() const {
    canonicalize();
    return checks_;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks()) if (!c.passed()) return false;
    return true;
}

bool ValidationReport::failed(const std::string& id) const {
    for (const auto& c : checks()) if (c.id == id && !c.passed()) return true;
    return false;
}

std::size_t ValidationReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& c : checks()) n += c.witnesses.size();
    return n;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks()) {
        os << "CHECK " << c.id << (c.passed() ? " PASS" : " FAIL");
        if (!c.witnesses.empty()) {
            for (const auto& w : c.witnesses) os << " witness=" << w;
        }
        if (!c.note.empty()) os << " note=" << c.note;
        os << "\n";
    }
    os << (ok() ? "RESULT PASS" : "RESULT FAIL") << " checks=" << checks().size()
       << " failures=" << failure_count() << "\n";
    return os.str();
}

} // namespace modtens
