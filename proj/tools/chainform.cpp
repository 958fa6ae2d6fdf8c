// chainform: a workbench for descent statistics of edge-labeled graded
// posets, their quasi-symmetric chain generating functions, and the
// incidence Hopf algebra structure behind them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chainform/chainform.hpp"

namespace cf = chainform;

namespace {

struct GlobalOpts {
    int max_rank = 12;
    int threads = 1;
};

void guard_rank(const cf::LabeledPoset& P, const GlobalOpts& g) {
    if (P.rank() > g.max_rank)
        throw cf::MaxRankExceeded("rank " + std::to_string(P.rank()) +
                                  " exceeds --max-rank " + std::to_string(g.max_rank));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw cf::IoError("cannot write '" + out_path + "'");
        out << text;
    }
}

std::vector<int> parse_int_csv(const std::string& s) {
    return cf::detail::parse_int_list(s, "integer");
}

cf::Permutation parse_permutation(const std::string& s) {
    std::vector<int> vals;
    if (s.find(',') != std::string::npos) {
        vals = parse_int_csv(s);
    } else {
        for (char c : s) {
            if (c < '1' || c > '9')
                throw cf::ParseError("bad permutation '" + s +
                                     "' (digits 1-9 or comma-separated values)");
            vals.push_back(c - '0');
        }
    }
    if (!cf::is_permutation(vals))
        throw cf::ParseError("'" + s + "' is not a permutation of 1..n");
    return vals;
}

cf::Partition parse_partition(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) return cf::Partition{};
    return cf::Partition(parse_int_csv(trimmed));
}

// Builder syntax: boolean N | chain L1,L2,... | young MU / NU | weak-order PERM
cf::LabeledPoset run_builder(const std::vector<std::string>& args) {
    if (args.empty()) throw cf::ParseError("empty builder spec");
    const std::string& family = args[0];
    std::string rest;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (i > 1) rest += " ";
        rest += args[i];
    }
    if (family == "boolean") {
        int n;
        try {
            n = std::stoi(rest);
        } catch (const std::exception&) {
            throw cf::ParseError("boolean expects an integer, got '" + rest + "'");
        }
        return cf::boolean_poset(n);
    }
    if (family == "chain") {
        std::string csv;
        for (char c : rest)
            if (!std::isspace(static_cast<unsigned char>(c))) csv += c;
        return cf::chain_poset(csv.empty() ? std::vector<int>{} : parse_int_csv(csv));
    }
    if (family == "young") {
        auto slash = rest.find('/');
        if (slash == std::string::npos)
            throw cf::ParseError("young expects 'MU / NU' (MU may be empty)");
        cf::Partition mu = parse_partition(rest.substr(0, slash));
        cf::Partition nu = parse_partition(rest.substr(slash + 1));
        return cf::young_interval(mu, nu);
    }
    if (family == "weak-order") {
        std::string token;
        for (char c : rest)
            if (!std::isspace(static_cast<unsigned char>(c))) token += c;
        return cf::weak_order_interval(parse_permutation(token));
    }
    throw cf::ParseError("unknown builder '" + family +
                         "' (expected boolean|chain|young|weak-order)");
}

std::string check_report(const cf::LabeledPoset& P) {
    bool r = cf::is_r_labeled(P);
    bool rel = cf::is_relative_r_labeled(P);
    cf::QSymExpr f = cf::fp(P);
    bool sym = cf::is_symmetric(f).has_value();
    bool ef = cf::ehrenborg_ep(P) == f;
    std::ostringstream out;
    out << "r-labeled: " << (r ? "true" : "false") << "\n"
        << "relative-r-labeled: " << (rel ? "true" : "false") << "\n"
        << "symmetric: " << (sym ? "true" : "false") << "\n"
        << "ep-equals-fp: " << (ef ? "true" : "false") << "\n";
    return out.str();
}

std::string stats_report(const cf::LabeledPoset& P) {
    cf::FlagStats fs = cf::flag_stats(P);
    std::ostringstream out;
    out << "elements: " << P.num_elements() << "\n";
    out << "rank: " << P.rank() << "\n";
    out << "chains: " << fs.total_chains() << "\n";
    auto subsets = cf::all_rank_sets(P.rank());
    for (const cf::RankSet& I : subsets)
        out << "d[" << I.str() << "] = " << fs.d(I) << "\n";
    for (const cf::RankSet& J : subsets)
        out << "f[" << J.str() << "] = " << fs.f(J) << "\n";
    return out.str();
}

std::string fp_report(const cf::LabeledPoset& P, const std::string& basis,
                      const std::string& method, int threads) {
    cf::FpMethod m = cf::FpMethod::via_chains;
    if (method == "via_M")
        m = cf::FpMethod::via_M;
    else if (method == "via_dF")
        m = cf::FpMethod::via_dF;

    if (basis == "M") return cf::render(cf::fp(P, m, cf::QBasis::M, threads));
    if (basis == "F") return cf::render(cf::fp(P, m, cf::QBasis::F, threads));
    auto sym = cf::is_symmetric(cf::fp(P, m, cf::QBasis::M, threads));
    if (!sym) throw cf::NotSymmetric("F_P is not a symmetric function");
    return cf::render(basis == "m" ? *sym : cf::m_to_schur(*sym));
}

// Runs the invariant suite on one poset; appends PASS/FAIL lines.
bool hopf_verify_single(const std::string& name, const cf::LabeledPoset& P,
                        std::ostringstream& out) {
    bool ok = true;
    auto report = [&](const std::string& what, bool good) {
        out << (good ? "PASS " : "FAIL ") << name << ": " << what << "\n";
        ok = ok && good;
    };

    cf::QSymExpr via_m = cf::fp(P, cf::FpMethod::via_M);
    cf::QSymExpr via_df = cf::fp(P, cf::FpMethod::via_dF);
    cf::QSymExpr via_ch = cf::fp(P, cf::FpMethod::via_chains);
    report("three-definitions-agree", via_m == via_df && via_df == via_ch);

    cf::FlagStats fs = cf::flag_stats(P);
    bool roundtrip = true;
    for (const cf::RankSet& I : cf::all_rank_sets(P.rank())) {
        cf::Int d = 0;
        auto sub = cf::all_rank_sets(P.rank());
        for (const cf::RankSet& J : sub)
            if (J.subset_of(I))
                d += (((I.size() - J.size()) % 2) ? -1 : 1) * fs.f(J);
        if (d != fs.d(I)) {
            roundtrip = false;
            break;
        }
    }
    report("inclusion-exclusion-roundtrip", roundtrip);

    bool split_ok = true;
    {
        std::vector<cf::FlagStats> lower(P.num_elements()), upper(P.num_elements());
        for (int x = 0; x < P.num_elements(); ++x) {
            lower[x] = cf::flag_stats(cf::interval(P, P.bottom(), x));
            upper[x] = cf::flag_stats(cf::interval(P, x, P.top()));
        }
        for (const cf::Composition& alpha : cf::compositions_of(P.rank())) {
            for (int j = 1; j <= alpha.length() && split_ok; ++j) {
                cf::Int rhs = 0;
                int target = alpha.partial_sum(j);
                for (int x = 0; x < P.num_elements(); ++x) {
                    if (P.rank_of(x) != target) continue;
                    rhs += lower[x].f(cf::set_from_comp(alpha.prefix(j))) *
                           upper[x].f(cf::set_from_comp(alpha.suffix(j)));
                }
                if (rhs != fs.f(cf::set_from_comp(alpha))) split_ok = false;
            }
            if (!split_ok) break;
        }
    }
    report("interval-splitting-identity", split_ok);

    if (P.rank() <= 5) {
        cf::IncidenceElement e = cf::IncidenceElement::from_poset(P);
        report("coproduct-morphism",
               cf::coproduct(via_m) == cf::phi_tensor(cf::hopf_coproduct(e)));
        report("counit-match", cf::counit(via_m) == cf::counit(e));
    }
    if (P.rank() <= 4) {
        cf::IncidenceElement e = cf::IncidenceElement::from_poset(P);
        report("antipode-morphism",
               cf::antipode(via_m) == cf::phi(cf::antipode_incidence(e)));
    }

    bool weighted_ok = true;
    for (const cf::RankSet& I : cf::all_rank_sets(P.rank()))
        if (cf::weighted_flag_count(P, I) != fs.f(I)) {
            weighted_ok = false;
            break;
        }
    report("weighted-rank-selection", weighted_ok);

    if (cf::is_r_labeled(P)) {
        bool phi_ok = true;
        for (const cf::RankSet& I : cf::all_rank_sets(P.rank()))
            if (cf::rank_selected_chain_count(P, I) != fs.f(I)) {
                phi_ok = false;
                break;
            }
        report("r-labeled-flag-equality", phi_ok && cf::ehrenborg_ep(P) == via_m);
    }
    if (cf::is_relative_r_labeled(P)) {
        bool rel_ok = true;
        for (const cf::RankSet& I : cf::all_rank_sets(P.rank()))
            if (cf::relative_flag_count(P, I) != fs.f(I)) {
                rel_ok = false;
                break;
            }
        report("relative-flag-equality", rel_ok);
    }

    auto sym = cf::is_symmetric(via_m);
    if (sym) {
        cf::SymExpr s = cf::m_to_schur(*sym);
        report("schur-roundtrip", cf::schur_to_m(s) == *sym);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"descent statistics and quasi-symmetric generating functions "
                 "of edge-labeled graded posets"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("CHAINFORM_THREADS")) {
        try {
            g.threads = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            g.threads = 1;
        }
    }
    app.add_option("--max-rank", g.max_rank,
                   "refuse chain enumeration beyond this rank")
        ->capture_default_str();
    app.add_option("--threads", g.threads,
                   "worker threads for chain enumeration (CHAINFORM_THREADS)");

    std::string file, file2, out_path, basis = "M", method = "via_chains";
    std::vector<std::string> rest;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a poset file");
    validate->add_option("file", file)->required();

    CLI::App* chains = app.add_subcommand("chains", "list maximal chain words");
    chains->add_option("file", file)->required();

    CLI::App* stats = app.add_subcommand("stats", "print the d/f descent tables");
    stats->add_option("file", file)->required();

    CLI::App* fp_cmd = app.add_subcommand("fp", "quasi-symmetric generating function F_P");
    fp_cmd->add_option("file", file)->required();
    fp_cmd->add_option("--basis", basis, "M|F|m|s")
        ->capture_default_str()
        ->check(CLI::IsMember({"M", "F", "m", "s"}));
    fp_cmd->add_option("--method", method, "via_M|via_dF|via_chains")
        ->capture_default_str()
        ->check(CLI::IsMember({"via_M", "via_dF", "via_chains"}));

    CLI::App* ep_cmd = app.add_subcommand("ep", "Ehrenborg flag generating function E_P");
    ep_cmd->add_option("file", file)->required();

    CLI::App* check = app.add_subcommand("check", "labeling and symmetry report");
    check->add_option("file", file)->required();

    CLI::App* prod = app.add_subcommand("product", "product of two posets");
    prod->add_option("file1", file)->required();
    prod->add_option("file2", file2)->required();
    prod->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* coprod = app.add_subcommand("coproduct", "incidence coproduct terms");
    coprod->add_option("file", file)->required();

    CLI::App* build = app.add_subcommand("build", "construct a named poset");
    build->add_option("spec", rest, "boolean N | chain L1,L2,... | young MU / NU | weak-order PERM")
        ->required()
        ->expected(-1);
    build->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* verify = app.add_subcommand("hopf-verify", "run the invariant suite");
    verify->add_option("files", rest)->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            std::cout << "valid: elements=" << P.num_elements()
                      << " covers=" << P.covers().size() << " rank=" << P.rank()
                      << "\n";
        } else if (*chains) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            auto all = cf::maximal_chains(P);
            std::cout << "count: " << all.size() << "\n";
            for (const auto& ch : all) {
                for (std::size_t j = 0; j < ch.word.size(); ++j)
                    std::cout << (j ? " " : "") << ch.word[j];
                std::cout << "\n";
            }
        } else if (*stats) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            std::cout << stats_report(P);
        } else if (*fp_cmd) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            std::cout << fp_report(P, basis, method, g.threads) << "\n";
        } else if (*ep_cmd) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            std::cout << cf::render(cf::ehrenborg_ep(P)) << "\n";
        } else if (*check) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            std::cout << check_report(P);
        } else if (*prod) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            cf::LabeledPoset Q = cf::load_poset_file(file2);
            emit(cf::serialize_poset(cf::product(P, Q)), out_path);
        } else if (*coprod) {
            cf::LabeledPoset P = cf::load_poset_file(file);
            guard_rank(P, g);
            std::cout << cf::render(cf::hopf_coproduct(cf::IncidenceElement::from_poset(P)))
                      << "\n";
        } else if (*build) {
            emit(cf::serialize_poset(run_builder(rest)), out_path);
        } else if (*verify) {
            std::ostringstream out;
            bool ok = true;
            std::vector<cf::LabeledPoset> posets;
            for (const std::string& f : rest) {
                posets.push_back(cf::load_poset_file(f));
                guard_rank(posets.back(), g);
            }
            for (std::size_t i = 0; i < posets.size(); ++i)
                ok = hopf_verify_single(rest[i], posets[i], out) && ok;
            for (std::size_t i = 0; i + 1 < posets.size(); ++i) {
                if (posets[i].rank() + posets[i + 1].rank() > 6) continue;
                bool prod_ok = cf::fp_product_check(posets[i], posets[i + 1]);
                out << (prod_ok ? "PASS " : "FAIL ") << rest[i] << " x " << rest[i + 1]
                    << ": product-morphism\n";
                ok = ok && prod_ok;
            }
            std::cout << out.str();
            std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
            if (!ok) return 1;
        }
    } catch (const cf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
