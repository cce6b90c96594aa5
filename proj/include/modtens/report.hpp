#pragma once

#include <string>
#include <vector>

namespace modtens {

/// One validated axiom (or structural condition). `witnesses` holds the
/// failing instances; empty means the check passed everywhere it was
/// enumerated. `note` carries extra information for checks that pass with a
/// caveat (e.g. which orientation of an axiom holds).
struct Check {
    std::string id;        // stable machine id, e.g. "base.comp.assoc"
    std::string equation;  // human-readable equation name
    std::vector<std::string> witnesses;
    std::string note;

    bool passed() const { return witnesses.empty(); }
};

class ValidationReport {
public:
    void add_pass(const std::string& id, const std::string& equation, const std::string& note = "");
    void fail(const std::string& id, const std::string& equation, const std::string& witness);
    void merge(const ValidationReport& other);

    /// Canonicalize: one Check per id (witnesses concatenated), sorted by id,
    /// witnesses sorted. Called automatically by accessors.
    const std::vector<Check>& checks() const;

    bool ok() const;
    bool failed(const std::string& id) const;
    std::size_t failure_count() const;

    /// Stable line grammar: "CHECK <id> PASS|FAIL [witness ...]".
    std::string to_text() const;

private:
    void canonicalize() const;
    mutable std::vector<Check> checks_;
    mutable bool dirty_ = false;
};

} // namespace modtens
