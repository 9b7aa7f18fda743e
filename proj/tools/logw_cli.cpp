// Batch CLI exposing the verification pipelines with machine-readable output.
//
// Exit codes: 0 success/verified, 1 verified mathematical mismatch, 2 usage
// error, 3 resource-cap abort.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "logw/characters.hpp"
#include "logw/fock.hpp"
#include "logw/lambda_calc.hpp"

using json = nlohmann::ordered_json;
using namespace logw;

namespace {

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoll(tok));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (auto v : parse_ll_list(s)) out.push_back(static_cast<int>(v));
    return out;
}

// `--lambda 0` or `--lambda hat=<fundamental index|0>,s=<c1,...,cl>`
LambdaParam parse_lambda(const RootSystemData& rs, int p, const std::string& spec) {
    if (spec == "0" || spec.empty()) return lambda_zero(rs, p);
    auto hpos = spec.find("hat=");
    auto spos = spec.find(",s=");
    if (hpos != 0 || spos == std::string::npos)
        throw ArgumentError("lambda spec must be `0` or `hat=<index|0>,s=<c1,...,cl>`");
    std::string hat = spec.substr(4, spos - 4);
    std::vector<long long> s = parse_ll_list(spec.substr(spos + 3));
    int hat_index = -1;
    if (hat != "0") {
        int fund = std::stoi(hat);
        for (std::size_t k = 0; k < rs.minuscule.size(); ++k)
            if (rs.minuscule[k] == fund) hat_index = static_cast<int>(k);
        if (hat_index < 0) throw ArgumentError("hat must be 0 or a minuscule fundamental index");
    }
    return lambda_make(rs, p, hat_index, std::move(s));
}

json weight_list_json(const std::vector<Weight>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(w.str());
    return a;
}

json charside_json(const RootSystemData& rs, const CharSide& side, bool conjectural) {
    json j;
    j["which"] = side.which == CharSide::Which::euler ? "euler" : "rhs";
    j["lambda"] = lambda_str(rs, side.lambda);
    j["order"] = rat_str(side.order);
    j["alpha_terms"] = side.alpha_terms;
    if (conjectural) j["conjectural"] = true;
    json terms = json::array();
    std::vector<std::tuple<Rat, Weight, Rat>> rows;
    for (const auto& [z, qs] : side.series.terms)
        for (const auto& [e, c] : qs.terms) rows.emplace_back(e, z, c);
    std::sort(rows.begin(), rows.end());
    for (const auto& [e, z, c] : rows) terms.push_back({{"q", rat_str(e)}, {"z", z.str()}, {"c", rat_str(c)}});
    j["terms"] = std::move(terms);
    return j;
}

struct Options {
    std::string type = "A1";
    int p = 2;
    std::string lambda_spec = "0";
    std::string word;
    std::string qmax = "4";
    std::string deltamax = "2";
    std::string Jspec;
    std::string mu;
    int dir = 1;
    int deg = -1;
    std::string format = "json";
    bool unsafe = false;
    bool refine = false;
};

void emit(const json& j, const std::string& format, const std::string& csv) {
    if (format == "csv" && !csv.empty())
        std::cout << csv;
    else
        std::cout << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact screening-kernel and character toolkit"};
    app.require_subcommand(1);
    Options o;
    Caps caps = Caps::from_env();
    int exit_code = 0;

    auto add_common = [&](CLI::App* c, bool with_p = true) {
        c->add_option("--type", o.type, "root system type, e.g. A2, D4, E6");
        if (with_p) c->add_option("-p,--level", o.p, "rescaling level p >= 2");
        c->add_option("--format", o.format, "json|csv|text");
    };

    // root info
    auto* root = app.add_subcommand("root", "root-system data");
    auto* root_info = root->add_subcommand("info", "print the root-system package");
    add_common(root_info, false);
    root_info->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        json j;
        j["type"] = rs.type_name();
        j["rank"] = rs.rank;
        j["cartan"] = rs.cartan;
        j["num_positive_roots"] = rs.positive_roots.size();
        j["positive_roots"] = weight_list_json(rs.positive_roots);
        j["theta"] = rs.theta.str();
        j["rho"] = rs.rho.str();
        j["coxeter"] = rs.coxeter;
        j["dim_g"] = rs.dim_g;
        j["minuscule"] = rs.minuscule;
        j["w0_word"] = rs.w0_word; // application order: first entry acts first
        j["w0_blocks"] = rs.w0_blocks;
        emit(j, o.format, "");
    });

    // lambda list
    auto* lam_cmd = app.add_subcommand("lambda", "module parameters");
    auto* lam_list = lam_cmd->add_subcommand("list", "enumerate the parameter set");
    add_common(lam_list);
    lam_list->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        json arr = json::array();
        std::string csv = "hat,s,alcove,novel\n";
        for (const auto& lam : lambda_enumerate(rs, o.p, caps)) {
            bool alc = check_alcove(rs, lam);
            bool nov = check_novel_full(rs, lam);
            arr.push_back({{"lambda", lambda_str(rs, lam)}, {"alcove", alc}, {"novel", nov}});
            std::string hat = lam.hat_index < 0 ? "0" : "w" + std::to_string(rs.minuscule[lam.hat_index]);
            std::string s;
            for (std::size_t i = 0; i < lam.s.size(); ++i) s += (i ? ";" : "") + std::to_string(lam.s[i]);
            csv += hat + "," + s + "," + (alc ? "1" : "0") + "," + (nov ? "1" : "0") + "\n";
        }
        emit(arr, o.format, csv);
    });

    // epsilon chain|of|table2
    auto* eps = app.add_subcommand("epsilon", "carry calculus of the shifted Weyl action");
    auto* eps_chain = eps->add_subcommand("chain", "stepwise carries along a word");
    add_common(eps_chain);
    eps_chain->add_option("--lambda", o.lambda_spec, "module parameter");
    eps_chain->add_option("--word", o.word, "comma-separated reflection indices, first applied first");
    eps_chain->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        std::vector<int> word = o.word.empty() ? rs.w0_word : parse_int_list(o.word);
        EpsilonChain ch = epsilon_chain(rs, lam, word);
        json j;
        j["lambda"] = lambda_str(rs, lam);
        j["word"] = ch.word;
        json steps = json::array();
        for (const auto& s : ch.steps) steps.push_back(s.str());
        j["steps"] = std::move(steps);
        j["cumulative"] = ch.cumulative.str();
        j["stepwise_condition"] = ch.condition1;
        emit(j, o.format, "");
    });
    auto* eps_of = eps->add_subcommand("of", "carry of a reduced word (default: longest element)");
    add_common(eps_of);
    eps_of->add_option("--lambda", o.lambda_spec, "module parameter");
    eps_of->add_option("--word", o.word, "comma-separated reflection indices, first applied first");
    eps_of->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        std::vector<int> word = o.word.empty() ? rs.w0_word : parse_int_list(o.word);
        Weight e = epsilon_of(rs, lam, word);
        json j;
        j["lambda"] = lambda_str(rs, lam);
        j["word"] = word;
        j["epsilon"] = e.str();
        emit(j, o.format, "");
    });
    auto* eps_tab = eps->add_subcommand("table2", "carry steps along the longest-element word, by segment");
    add_common(eps_tab);
    eps_tab->add_option("--lambda", o.lambda_spec, "alcove module parameter");
    eps_tab->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        json blocks = json::array();
        for (const auto& b : table2_generate(rs, lam)) {
            json steps = json::array();
            for (const auto& s : b.steps) steps.push_back(s.str());
            blocks.push_back({{"hi", b.hi}, {"lo", b.lo}, {"letters", b.letters}, {"steps", steps}});
        }
        json j;
        j["lambda"] = lambda_str(rs, lam);
        j["blocks"] = std::move(blocks);
        emit(j, o.format, "");
    });

    // cond check|scan
    auto* cond = app.add_subcommand("cond", "alcove / stepwise-carry conditions");
    auto* cond_check = cond->add_subcommand("check", "evaluate the conditions for one parameter");
    add_common(cond_check);
    cond_check->add_option("--lambda", o.lambda_spec, "module parameter");
    cond_check->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        EpsilonChain ch = epsilon_chain(rs, lam, rs.w0_word);
        json j;
        j["lambda"] = lambda_str(rs, lam);
        j["alcove"] = check_alcove(rs, lam);
        j["stepwise_condition"] = ch.condition1;
        j["novel_full"] = check_novel_full(rs, lam);
        j["epsilon_w0"] = epsilon_of(rs, lam, weyl_from_word(rs, rs.w0_word)).str();
        emit(j, o.format, "");
    });
    auto* cond_scan = cond->add_subcommand("scan", "exhaustive equivalence scan over the parameter set");
    add_common(cond_scan);
    cond_scan->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        CondScanReport rep = condequiv_scan(rs, o.p, caps);
        json j;
        j["total"] = rep.total;
        j["alcove_count"] = rep.alcove_count;
        json mism = json::array();
        for (const auto& lam : rep.mismatches) mism.push_back(lambda_str(rs, lam));
        j["mismatches"] = std::move(mism);
        j["partial_sum_condition_ok"] = rep.partial_sum_condition_ok;
        j["nonalcove_positive_violation"] = rep.nonalcove_positive_violation;
        json nna = json::array();
        for (const auto& lam : rep.novel_not_alcove) nna.push_back(lambda_str(rs, lam));
        j["novel_not_alcove"] = std::move(nna);
        std::string csv = "total,alcove,mismatches\n" + std::to_string(rep.total) + "," +
                          std::to_string(rep.alcove_count) + "," + std::to_string(rep.mismatches.size()) + "\n";
        emit(j, o.format, csv);
        if (!rep.mismatches.empty() || !rep.partial_sum_condition_ok) exit_code = 1;
    });

    // char euler|rhs|compare
    auto* ch = app.add_subcommand("char", "graded characters");
    auto add_char_opts = [&](CLI::App* c) {
        add_common(c);
        c->add_option("--lambda", o.lambda_spec, "module parameter");
        c->add_option("--qmax", o.qmax, "truncation order (rational)");
        c->add_flag("--unsafe", o.unsafe, "compute the decomposition side outside the alcove (conjectural)");
    };
    auto* ch_euler = ch->add_subcommand("euler", "fixed-point side");
    add_char_opts(ch_euler);
    ch_euler->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        CharSide side = euler_character(rs, lam, rat_parse(o.qmax), caps);
        if (o.format == "text")
            std::cout << qz_dump_text(side.series);
        else
            emit(charside_json(rs, side, false), o.format, "");
    });
    auto* ch_rhs = ch->add_subcommand("rhs", "decomposition side");
    add_char_opts(ch_rhs);
    ch_rhs->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        CharSide side = rhs_character(rs, lam, rat_parse(o.qmax), caps, o.unsafe);
        bool conj = o.unsafe && !check_alcove(rs, lam);
        if (o.format == "text")
            std::cout << qz_dump_text(side.series);
        else
            emit(charside_json(rs, side, conj), o.format, "");
    });
    auto* ch_cmp = ch->add_subcommand("compare", "exact term-by-term comparison of both sides");
    add_char_opts(ch_cmp);
    ch_cmp->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        Rat order = rat_parse(o.qmax);
        CharSide e = euler_character(rs, lam, order, caps);
        CharSide r = rhs_character(rs, lam, order, caps, o.unsafe);
        CompareReport rep = compare_sides(e, r);
        std::cout << compare_report_json(rep) << "\n";
        if (!rep.matches) exit_code = 1;
    });

    // fock basis|kernel|relations
    auto* fock = app.add_subcommand("fock", "graded lattice Fock spaces and screening kernels");
    auto* fock_basis = fock->add_subcommand("basis", "graded dimensions of the module");
    add_common(fock_basis);
    fock_basis->add_option("--lambda", o.lambda_spec, "module parameter");
    fock_basis->add_option("--deltamax", o.deltamax, "maximal conformal weight (rational)");
    fock_basis->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        Rat dmax = rat_parse(o.deltamax);
        if (dmax < 0) throw ArgumentError("deltamax must be >= 0");
        GradedBasis gb = graded_basis(rs, lam, dmax, caps);
        json entries = json::array();
        std::string csv = "delta,dim\n";
        for (const auto& [d, vecs] : gb.by_weight) {
            entries.push_back({{"delta", rat_str(d)}, {"dim", vecs.size()}});
            csv += rat_str(d) + "," + std::to_string(vecs.size()) + "\n";
        }
        json j;
        j["lambda"] = lambda_str(rs, lam);
        j["total"] = gb.total;
        j["entries"] = std::move(entries);
        emit(j, o.format, csv);
    });
    auto* fock_kernel = fock->add_subcommand("kernel", "graded joint-kernel dimensions of the narrow screenings");
    add_common(fock_kernel);
    fock_kernel->add_option("--lambda", o.lambda_spec, "module parameter");
    fock_kernel->add_option("--deltamax", o.deltamax, "maximal conformal weight (rational)");
    fock_kernel->add_option("--J", o.Jspec, "comma-separated directions (default: all)");
    fock_kernel->add_flag("--refine", o.refine, "refine kernel dimensions by Cartan weight");
    fock_kernel->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        LambdaParam lam = parse_lambda(rs, o.p, o.lambda_spec);
        Rat dmax = rat_parse(o.deltamax);
        if (dmax < 0) throw ArgumentError("deltamax must be >= 0");
        std::vector<int> J;
        if (o.Jspec.empty())
            for (int i = 1; i <= rs.rank; ++i) J.push_back(i);
        else
            J = parse_int_list(o.Jspec);
        GradedKernelReport rep = kernel_graded_dims(rs, lam, J, dmax, o.refine, caps);
        if (o.format == "csv") {
            std::string csv = "delta,ambient,kernel\n";
            for (const auto& e : rep.entries)
                csv += rat_str(e.delta) + "," + std::to_string(e.ambient) + "," + std::to_string(e.kernel) + "\n";
            std::cout << csv;
        } else {
            std::cout << kernel_report_json(rs, rep) << "\n";
        }
    });
    auto* fock_rel = fock->add_subcommand("relations", "exact operator-relation suite");
    add_common(fock_rel);
    fock_rel->add_option("--deltamax", o.deltamax, "maximal conformal weight (rational)");
    fock_rel->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        Rat dmax = rat_parse(o.deltamax);
        if (dmax < 0) throw ArgumentError("deltamax must be >= 0");
        RelationReport rep = relation_suite(rs, o.p, dmax, caps);
        std::cout << relation_report_json(rep) << "\n";
        if (!rep.all_pass) exit_code = 1;
    });

    // dims evaluator
    auto* dims = app.add_subcommand("dims", "rank-one parabolic cohomology dimensions");
    add_common(dims, false);
    dims->add_option("--mu", o.mu, "weight in fundamental coordinates, comma-separated")->required();
    dims->add_option("-i,--dir", o.dir, "simple-reflection index");
    dims->add_option("-n,--deg", o.deg, "cohomological degree (default: report 0..2)");
    dims->callback([&] {
        RootSystemData rs = build_root_system(o.type);
        auto coords = parse_ll_list(o.mu);
        if (coords.size() != static_cast<std::size_t>(rs.rank)) throw ArgumentError("mu has wrong rank");
        Weight mu(rs.rank);
        for (int k = 0; k < rs.rank; ++k) mu[k] = coords[k];
        json j;
        j["mu"] = mu.str();
        j["i"] = o.dir;
        j["pairing"] = mu[o.dir - 1];
        if (o.deg >= 0) {
            j["n"] = o.deg;
            j["dim"] = cohomology_dim(rs, mu, o.dir, o.deg);
        } else {
            json ds = json::array();
            for (int n = 0; n <= 2; ++n) ds.push_back(cohomology_dim(rs, mu, o.dir, n));
            j["dims"] = std::move(ds);
        }
        emit(j, o.format, "");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
