#pragma once

#include <map>

#include "modtens/equivalence.hpp"
#include "modtens/grading.hpp"

namespace modtens {

/// Grading file contents: the assignment plus the name of the category it
/// grades (resolved against the workspace at use time).
struct GradingArtifact {
    GradingAssignment assignment;
    std::string category;
};

/// Named collection of loaded artifacts, cross-references resolved by name.
/// Loading is order-independent: files are parsed first and instantiated in
/// dependency order (bases, categories, cells).
struct Workspace {
    std::map<std::string, BasePtr> bases;
    std::map<std::string, VMonCatPtr> vcats;
    std::map<std::string, VMonFunctorPtr> functors;
    std::map<std::string, std::shared_ptr<const VTransform>> transforms;
    std::map<std::string, ModTensPtr> modtens;
    std::map<std::string, ModTensCell1Ptr> cell1s;
    std::map<std::string, std::shared_ptr<const ModTensCell2>> cell2s;
    std::map<std::string, GradingArtifact> gradings;

    void load_files(const std::vector<std::string>& paths);
};

// Canonical serialization: fixed key order, sparse entries sorted, zero
// entries omitted, rationals as "p/q" strings. save(load(x)) is idempotent
// byte-for-byte.
std::string save_base(const PresentedBase& B);
std::string save_vmoncat(const VMonCat& C);
std::string save_functor(const VMonFunctor& F);
std::string save_transform(const VTransform& t);
std::string save_modtens(const ModTensCat& M);
std::string save_cell1(const ModTensCell1& c);
std::string save_cell2(const ModTensCell2& th);
std::string save_grading(const GradingArtifact& g, const std::string& name);
std::string save_adjunction_report(const TensorAdjunction& adj);

std::string report_json(const ValidationReport& rep);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

} // namespace modtens
