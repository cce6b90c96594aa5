#include "modtens/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modtens/io.hpp"

namespace modtens {

namespace {

namespace fs = std::filesystem;

void merge_prefixed(ValidationReport& into, const std::string& prefix, const ValidationReport& rep) {
    for (const auto& c : rep.checks()) {
        if (c.passed()) into.add_pass(prefix + ":" + c.id, c.equation, c.note);
        else
            for (const auto& w : c.witnesses) into.fail(prefix + ":" + c.id, c.equation, w);
    }
}

struct AdjCache {
    std::map<std::string, std::shared_ptr<const TensorAdjunction>> by_name;

    std::shared_ptr<const TensorAdjunction> get(const VMonCatPtr& C, std::string* err) {
        auto it = by_name.find(C->name);
        if (it != by_name.end()) return it->second;
        AdjResult r = compute_adjoint(C);
        if (std::holds_alternative<NotWeaklyTensored>(r)) {
            if (err) *err = "category " + C->name + " is not weakly tensored: " +
                            std::get<NotWeaklyTensored>(r).reason;
            return nullptr;
        }
        auto adj = std::make_shared<TensorAdjunction>(std::get<TensorAdjunction>(std::move(r)));
        by_name[C->name] = adj;
        return adj;
    }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (!out_path.empty()) write_file(out_path, text);
    out << text;
}

int cmd_validate(const std::vector<std::string>& paths, const std::string& level,
                 const std::string& out_path, const std::string& format, std::ostream& out,
                 std::ostream& err) {
    Workspace ws;
    try {
        ws.load_files(paths);
    } catch (const std::exception& ex) {
        err << "load error: " << ex.what() << "\n";
        return 2;
    }
    ValidationReport all;
    auto want = [&](const std::string& l) { return level.empty() || level == l; };
    if (want("base"))
        for (const auto& [name, B] : ws.bases) merge_prefixed(all, name, validate_base(*B));
    if (want("vcat"))
        for (const auto& [name, C] : ws.vcats) merge_prefixed(all, name, validate_vcat(*C));
    if (want("vmoncat"))
        for (const auto& [name, C] : ws.vcats) merge_prefixed(all, name, validate_vmoncat(*C));
    if (want("functor"))
        for (const auto& [name, F] : ws.functors) merge_prefixed(all, name, validate_vmon_functor(*F));
    if (want("transform"))
        for (const auto& [name, t] : ws.transforms)
            merge_prefixed(all, name, validate_vtransform(*t, true));
    if (want("modtens")) {
        for (const auto& [name, M] : ws.modtens) merge_prefixed(all, name, validate_modtens_0cell(*M));
        for (const auto& [name, c] : ws.cell1s) merge_prefixed(all, name, validate_modtens_1cell(*c));
        for (const auto& [name, th] : ws.cell2s) merge_prefixed(all, name, validate_modtens_2cell(*th));
    }
    if (want("graded")) {
        for (const auto& [name, g] : ws.gradings) {
            if (ws.vcats.count(g.category))
                merge_prefixed(all, name,
                               validate_graded_vmoncat(*ws.vcats.at(g.category), g.assignment));
            else if (ws.modtens.count(g.category))
                merge_prefixed(all, name,
                               validate_graded_modtens(*ws.modtens.at(g.category), g.assignment));
            else {
                ValidationReport r;
                r.fail("graded.resolve", "grading target resolvable", g.category);
                merge_prefixed(all, name, r);
            }
        }
    }
    emit(format == "json" ? report_json(all) : all.to_text(), out_path, out);
    return all.ok() ? 0 : 1;
}

int cmd_apply(const std::string& op, const std::vector<std::string>& paths,
              const std::string& target, const std::string& out_path, bool force,
              std::ostream& out, std::ostream& err) {
    Workspace ws;
    try {
        ws.load_files(paths);
    } catch (const std::exception& ex) {
        err << "load error: " << ex.what() << "\n";
        return 2;
    }
    AdjCache cache;
    std::string aerr;

    auto pick = [&](auto& map, const char* kind) -> decltype(map.begin()->second) {
        if (!target.empty()) {
            auto it = map.find(target);
            if (it == map.end())
                throw std::invalid_argument(std::string("no ") + kind + " named " + target);
            return it->second;
        }
        if (map.size() != 1)
            throw std::invalid_argument(std::string("expected exactly one ") + kind +
                                        " input (or use --target)");
        return map.begin()->second;
    };

    try {
        if (op == "adjoint" || op == "p0") {
            VMonCatPtr C = pick(ws.vcats, "vcat");
            if (!force && !validate_vmoncat(*C).ok())
                throw std::runtime_error("input fails validate_vmoncat (use --force to override)");
            auto adj = cache.get(C, &aerr);
            if (!adj) throw std::runtime_error(aerr);
            std::string text = op == "adjoint" ? save_adjunction_report(*adj) : save_modtens(*P0(adj));
            emit(text, out_path, out);
            return 0;
        }
        if (op == "p1") {
            VMonFunctorPtr F = pick(ws.functors, "functor");
            if (!force && !validate_vmon_functor(*F).ok())
                throw std::runtime_error("input fails validate_vmon_functor (use --force to override)");
            auto sadj = cache.get(F->src, &aerr);
            if (!sadj) throw std::runtime_error(aerr);
            auto dadj = cache.get(F->dst, &aerr);
            if (!dadj) throw std::runtime_error(aerr);
            ModTensCell1 cell = P1(*F, P0(sadj), P0(dadj));
            cell.name = F->name;
            emit(save_cell1(cell), out_path, out);
            return 0;
        }
        if (op == "p2") {
            auto t = pick(ws.transforms, "transform");
            if (!force && !validate_vtransform(*t, true).ok())
                throw std::runtime_error("input fails validate_vtransform (use --force to override)");
            auto sadj = cache.get(t->src->src, &aerr);
            if (!sadj) throw std::runtime_error(aerr);
            auto dadj = cache.get(t->src->dst, &aerr);
            if (!dadj) throw std::runtime_error(aerr);
            ModTensPtr sM = P0(sadj), dM = P0(dadj);
            auto sc = std::make_shared<ModTensCell1>(P1(*t->src, sM, dM));
            sc->name = t->src->name;
            auto dc = std::make_shared<ModTensCell1>(P1(*t->dst, sM, dM));
            dc->name = t->dst->name;
            ModTensCell2 th = P2(*t, sc, dc);
            th.name = t->name;
            emit(save_cell2(th), out_path, out);
            return 0;
        }
        if (op == "q1") {
            ModTensCell1Ptr c = pick(ws.cell1s, "cell1");
            if (!force && !validate_modtens_1cell(*c).ok())
                throw std::runtime_error("input fails validate_modtens_1cell (use --force to override)");
            VMonFunctor F = Q1(*c);
            F.name = c->name;
            emit(save_functor(F), out_path, out);
            return 0;
        }
        if (op == "q2") {
            auto th = pick(ws.cell2s, "cell2");
            if (!force && !validate_modtens_2cell(*th).ok())
                throw std::runtime_error("input fails validate_modtens_2cell (use --force to override)");
            auto srcF = std::make_shared<VMonFunctor>(Q1(*th->src));
            srcF->name = th->src->name;
            auto dstF = std::make_shared<VMonFunctor>(Q1(*th->dst));
            dstF->name = th->dst->name;
            VTransform t = Q2(*th, srcF, dstF);
            t.name = th->name;
            emit(save_transform(t), out_path, out);
            return 0;
        }
    } catch (const std::exception& ex) {
        err << "apply error: " << ex.what() << "\n";
        return 2;
    }
    err << "unknown op: " << op << "\n";
    return 2;
}

int cmd_roundtrip(const std::string& dir, std::uint64_t seed, int trials,
                  const std::string& out_path, const std::string& format, std::ostream& out,
                  std::ostream& err) {
    std::vector<std::string> paths;
    try {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file()) paths.push_back(entry.path().string());
    } catch (const std::exception& ex) {
        err << "cannot read fixture dir: " << ex.what() << "\n";
        return 2;
    }
    std::sort(paths.begin(), paths.end());
    Workspace ws;
    try {
        ws.load_files(paths);
    } catch (const std::exception& ex) {
        err << "load error: " << ex.what() << "\n";
        return 2;
    }

    ValidationReport all;
    for (const auto& [name, B] : ws.bases) merge_prefixed(all, name, validate_base(*B));
    for (const auto& [name, C] : ws.vcats) merge_prefixed(all, name, validate_vmoncat(*C));
    for (const auto& [name, F] : ws.functors) merge_prefixed(all, name, validate_vmon_functor(*F));
    for (const auto& [name, t] : ws.transforms)
        merge_prefixed(all, name, validate_vtransform(*t, true));
    for (const auto& [name, g] : ws.gradings) {
        if (ws.vcats.count(g.category))
            merge_prefixed(all, name, validate_graded_vmoncat(*ws.vcats.at(g.category), g.assignment));
        else if (ws.modtens.count(g.category))
            merge_prefixed(all, name, validate_graded_modtens(*ws.modtens.at(g.category), g.assignment));
    }

    // Later suites assume validated inputs; stop at the first failing layer
    // so the report names the offending fixture instead of throwing.
    AdjCache cache;
    bool aborted = !all.ok();
    if (!aborted) {
        for (const auto& [name, C] : ws.vcats) {
            std::string aerr;
            auto adj = cache.get(C, &aerr);
            if (!adj) {
                ValidationReport r;
                r.fail("adjoint", "weakly tensored", aerr);
                merge_prefixed(all, name, r);
                aborted = true;
                continue;
            }
            merge_prefixed(all, name, verify_mate_lemmas(*adj, seed, trials));
            merge_prefixed(all, name, validate_modtens_0cell(*P0(adj)));
            merge_prefixed(all, name, check_reconstruction(*adj));
        }
    }

    if (!aborted) {
        for (const auto& [name, F] : ws.functors) {
            auto sadj = cache.get(F->src, nullptr);
            auto dadj = cache.get(F->dst, nullptr);
            merge_prefixed(all, name, validate_modtens_1cell(P1(*F, P0(sadj), P0(dadj))));
        }
        EquivalenceFixtures fx;
        for (const auto& [name, C] : ws.vcats) fx.cats.push_back(C);
        for (const auto& [name, F] : ws.functors) fx.functors.push_back(F);
        for (const auto& [name, t] : ws.transforms) fx.transforms.push_back(t);
        merge_prefixed(all, "fixtures", check_roundtrip(fx));
        merge_prefixed(all, "fixtures", check_2functoriality(fx));
    }

    std::ostringstream os;
    if (format == "json") {
        os << "{\n  \"seed\": " << seed << ",\n  \"trials\": " << trials << ",\n  \"report\": "
           << report_json(all) << "}\n";
    } else {
        os << "SEED " << seed << " TRIALS " << trials << "\n" << all.to_text();
    }
    emit(os.str(), out_path, out);
    return all.ok() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for enriched monoidal categories and module tensor categories",
                 "modtens"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "run validators on artifact files");
    std::vector<std::string> v_paths;
    std::string v_level, v_out, v_format = "text";
    validate->add_option("paths", v_paths, "artifact files")->required()->expected(-1);
    validate->add_option("--level", v_level, "base|vcat|vmoncat|functor|transform|modtens|graded")
        ->check(CLI::IsMember({"base", "vcat", "vmoncat", "functor", "transform", "modtens", "graded"}));
    validate->add_option("--out", v_out, "write the report to a file as well");
    validate->add_option("--format", v_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* apply = app.add_subcommand("apply", "run an engine operation and write the result");
    std::vector<std::string> a_paths;
    std::string a_op, a_out, a_target;
    bool a_force = false;
    apply->add_option("--op", a_op, "adjoint|p0|p1|p2|q1|q2")
        ->required()
        ->check(CLI::IsMember({"adjoint", "p0", "p1", "p2", "q1", "q2"}));
    apply->add_option("paths", a_paths, "input files (the operation target plus its context)")
        ->required()
        ->expected(-1);
    apply->add_option("--out", a_out, "output file");
    apply->add_option("--target", a_target, "name of the artifact to apply the op to");
    apply->add_flag("--force", a_force, "skip input validation");

    auto* roundtrip =
        app.add_subcommand("roundtrip", "run the full verification pipeline on a fixture directory");
    std::string r_dir, r_out, r_format = "text";
    std::uint64_t r_seed = 0;
    int r_trials = 100;
    roundtrip->add_option("dir", r_dir, "fixture directory")->required();
    roundtrip->add_option("--seed", r_seed, "random seed (recorded in the report)");
    roundtrip->add_option("--trials", r_trials, "random trials per lemma shape");
    roundtrip->add_option("--out", r_out, "write the report to a file as well");
    roundtrip->add_option("--format", r_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("modtens");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code;
    }

    if (validate->parsed()) return cmd_validate(v_paths, v_level, v_out, v_format, out, err);
    if (apply->parsed()) return cmd_apply(a_op, a_paths, a_target, a_out, a_force, out, err);
    if (roundtrip->parsed()) return cmd_roundtrip(r_dir, r_seed, r_trials, r_out, r_format, out, err);
    err << "no subcommand\n";
    return 2;
}

} // namespace modtens
