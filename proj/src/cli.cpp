#include "bridgegirth/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bridgegirth/bridges.hpp"
#include "bridgegirth/constructions.hpp"
#include "bridgegirth/errors.hpp"
#include "bridgegirth/gaps.hpp"
#include "bridgegirth/path_system.hpp"
#include "bridgegirth/rational.hpp"
#include "bridgegirth/reductions.hpp"
#include "bridgegirth/search.hpp"
#include "bridgegirth/transforms.hpp"

namespace bridgegirth {

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("BRIDGEGIRTH_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw InputError("BRIDGEGIRTH_SEED is not a number");
        }
    }
    return 0;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write file: " + path);
    f << text;
}

std::string witness_line(const BridgeWitness& w) {
    std::ostringstream os;
    os << w.size() << "-bridge river=" << w.river << " arcs=";
    for (std::size_t i = 0; i < w.arcs.size(); ++i) os << (i ? "," : "") << w.arcs[i];
    os << " nodes=";
    for (std::size_t i = 0; i < w.nodes.size(); ++i) os << (i ? "," : "") << w.nodes[i];
    return os.str();
}

int parse_k(const std::string& s) {
    if (s == "inf" || s == "infinity") return kInfiniteGirth;
    try {
        int k = std::stoi(s);
        if (k < 2 && k != kInfiniteGirth) throw InputError("k must be >= 2 or 'inf'");
        return k;
    } catch (const InputError&) {
        throw;
    } catch (...) {
        throw InputError("malformed k value: " + s);
    }
}

std::vector<std::pair<NodeId, NodeId>> load_pair_file(const std::string& path) {
    auto g = load_digraph(path);
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (const Edge& e : g.edges) pairs.emplace_back(e.u, e.v);
    return pairs;
}

struct CsvQuote {
    const std::string& s;
};
std::ostream& operator<<(std::ostream& os, const CsvQuote& q) { return os << '"' << q.s << '"'; }

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"path-system bridge girth toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    int threads = 1;
    app.add_option("--seed", seed, "global random seed (default $BRIDGEGIRTH_SEED or 0)");
    app.add_option("--threads", threads, "worker cap; results are identical across settings");

    // ---- stats ----
    std::string stats_file;
    bool stats_csv = false;
    auto* cmd_stats = app.add_subcommand("stats", "exact statistics of a path system");
    cmd_stats->add_option("file", stats_file)->required();
    cmd_stats->add_flag("--csv", stats_csv);

    // ---- girth ----
    std::string girth_file;
    int girth_maxk = 4;
    bool girth_ordered = false, girth_certify = false;
    long long girth_budget = kDefaultBridgeBudget;
    auto* cmd_girth = app.add_subcommand("girth", "bridge girth by bounded exhaustive search");
    cmd_girth->add_option("file", girth_file)->required();
    cmd_girth->add_option("--max-k", girth_maxk);
    cmd_girth->add_flag("--ordered", girth_ordered);
    cmd_girth->add_flag("--certify", girth_certify, "use the acyclic reachability certificate");
    cmd_girth->add_option("--budget", girth_budget);

    // ---- construct ----
    auto* cmd_construct = app.add_subcommand("construct", "generate a path system");
    std::string construct_out = "-";
    long long quad_q = 0;
    auto* cc_quad = cmd_construct->add_subcommand("quad", "polynomials over F_q, three paths per point");
    cc_quad->add_option("--q", quad_q)->required();
    cc_quad->add_option("-o,--out", construct_out);
    long long lat_n = 0, lat_ell = 0;
    auto* cc_lat = cmd_construct->add_subcommand("lattice", "slope-ordered lattice lines");
    cc_lat->add_option("--n", lat_n)->required();
    cc_lat->add_option("--ell", lat_ell)->required();
    cc_lat->add_option("-o,--out", construct_out);
    long long rs_m = 0;
    std::string rs_set = "greedy";
    auto* cc_rs = cmd_construct->add_subcommand("rs", "three-layer progression-free system");
    cc_rs->add_option("--m", rs_m)->required();
    cc_rs->add_option("--set", rs_set)->check(CLI::IsMember({"greedy", "behrend"}));
    cc_rs->add_option("-o,--out", construct_out);
    std::string bip_file;
    auto* cc_bip = cmd_construct->add_subcommand("from-bipartite", "paths from right-side neighborhoods");
    cc_bip->add_option("file", bip_file)->required();
    cc_bip->add_option("-o,--out", construct_out);
    cmd_construct->require_subcommand(1);

    // ---- trim ----
    std::string trim_file, trim_out = "-";
    long long trim_nodes = -1, trim_paths = -1;
    auto* cmd_trim = app.add_subcommand("trim", "random node then path deletions");
    cmd_trim->add_option("file", trim_file)->required();
    cmd_trim->add_option("--nodes", trim_nodes)->required();
    cmd_trim->add_option("--paths", trim_paths)->required();
    cmd_trim->add_option("-o,--out", trim_out);

    // ---- transforms ----
    std::string clean_file, clean_out = "-";
    auto* cmd_clean = app.add_subcommand("clean", "regularize lengths and degrees");
    cmd_clean->add_option("file", clean_file)->required();
    cmd_clean->add_option("-o,--out", clean_out);

    std::string strip_file, strip_out = "-";
    auto* cmd_strip = app.add_subcommand("strip-2cycles", "remove opposite-order node pairs");
    cmd_strip->add_option("file", strip_file)->required();
    cmd_strip->add_option("-o,--out", strip_out);

    std::string sr_file, sr_out = "-", sr_lambda = "1/16";
    auto* cmd_sr = app.add_subcommand("clean-sr", "source-restricted cleaning");
    cmd_sr->add_option("file", sr_file)->required();
    cmd_sr->add_option("--lambda", sr_lambda);
    cmd_sr->add_option("-o,--out", sr_out);

    std::string sub_file, sub_out = "-", sub_c;
    auto* cmd_sub = app.add_subcommand("subsample", "keep ceil(c*n) nodes and ceil(c*p) paths");
    cmd_sub->add_option("file", sub_file)->required();
    cmd_sub->add_option("--c", sub_c)->required();
    cmd_sub->add_option("-o,--out", sub_out);

    std::string base_file, base_out = "-";
    long long base_h = 0;
    auto* cmd_base = app.add_subcommand("sample-base", "windowed subsystem around a random base path");
    cmd_base->set_help_flag("--help", "print help"); // frees up --h for the window size
    cmd_base->add_option("file", base_file)->required();
    cmd_base->add_option("--h", base_h)->required();
    cmd_base->add_option("-o,--out", base_out);

    std::string l2_file;
    bool l2_csv = false;
    auto* cmd_l2 = app.add_subcommand("l2-report", "squared length norm diagnostics");
    cmd_l2->add_option("file", l2_file)->required();
    cmd_l2->add_flag("--csv", l2_csv);

    // ---- search ----
    auto* cmd_search = app.add_subcommand("search", "exact extremal search");
    int search_n = 0, search_p = 0;
    std::string search_k = "inf";
    bool search_ordered = false, search_acyclic = false;
    long long search_budget = 50'000'000;
    std::string search_witness_out;
    cmd_search->add_option("--n", search_n);
    cmd_search->add_option("--p", search_p);
    cmd_search->add_option("--k", search_k);
    cmd_search->add_flag("--ordered", search_ordered);
    cmd_search->add_flag("--acyclic", search_acyclic);
    cmd_search->add_option("--budget", search_budget);
    cmd_search->add_option("--witness-out", search_witness_out);
    int table_max_n = 0, table_max_p = 0;
    std::string table_ks = "2,3,inf", table_csv;
    auto* cs_table = cmd_search->add_subcommand("table", "tabulate the extremal values");
    cs_table->add_option("--max-n", table_max_n)->required();
    cs_table->add_option("--max-p", table_max_p)->required();
    cs_table->add_option("--ks", table_ks);
    cs_table->add_option("--csv", table_csv);

    // ---- reduce ----
    auto* cmd_reduce = app.add_subcommand("reduce", "compile systems into graph instances");
    std::string red_file, red_out = "-";
    auto* cr_dp = cmd_reduce->add_subcommand("dp", "weighted hard instance from an ordered system");
    cr_dp->add_option("file", red_file)->required();
    cr_dp->add_option("-o,--out", red_out);
    auto* cr_rp = cmd_reduce->add_subcommand("rp", "unit-weight hop digraph with endpoint demands");
    cr_rp->add_option("file", red_file)->required();
    cr_rp->add_option("-o,--out", red_out);
    int adp_k = 0;
    auto* cr_adp = cmd_reduce->add_subcommand("adp", "instance whose edge removals cost k hops");
    cr_adp->add_option("file", red_file)->required();
    cr_adp->add_option("--k", adp_k)->required();
    cr_adp->add_option("-o,--out", red_out);
    long long spanner_k = 0;
    auto* cr_spanner = cmd_reduce->add_subcommand("spanner", "greedy multiplicative spanner");
    cr_spanner->add_option("file", red_file)->required();
    cr_spanner->add_option("--k", spanner_k)->required();
    cr_spanner->add_option("-o,--out", red_out);
    cmd_reduce->require_subcommand(1);

    // ---- independent ----
    auto* cmd_indep = app.add_subcommand("independent", "rewrite an instance to independence");
    std::string indep_mode, indep_file, indep_out = "-";
    cmd_indep->add_option("mode", indep_mode)->check(CLI::IsMember({"dp", "rp"}))->required();
    cmd_indep->add_option("file", indep_file)->required();
    cmd_indep->add_option("-o,--out", indep_out);

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "check instance properties");
    std::string ver_what, ver_file, ver_mode = "dp";
    cmd_verify->add_option("what", ver_what)
        ->check(CLI::IsMember({"independence", "unique-shortest", "preserver-size"}))
        ->required();
    cmd_verify->add_option("file", ver_file)->required();
    cmd_verify->add_option("--mode", ver_mode)->check(CLI::IsMember({"dp", "rp"}));

    // ---- adversary ----
    auto* cmd_adv = app.add_subcommand("adversary", "find an untouched demand pair");
    std::string adv_kind, adv_file, adv_h;
    cmd_adv->add_option("kind", adv_kind)->check(CLI::IsMember({"shortcut", "hopset"}))->required();
    cmd_adv->add_option("file", adv_file)->required();
    cmd_adv->add_option("--H", adv_h)->required();

    // ---- game ----
    auto* cmd_game = app.add_subcommand("game", "online reachability preserver game");
    std::string game_kind, game_file, game_builder = "greedy-shortest";
    cmd_game->add_option("kind", game_kind)->check(CLI::IsMember({"online"}))->required();
    cmd_game->add_option("file", game_file)->required();
    cmd_game->add_option("--builder", game_builder)
        ->check(CLI::IsMember({"lazy", "greedy-shortest"}));

    // ---- gap ----
    auto* cmd_gap = app.add_subcommand("gap", "integrality-gap instances");
    std::string gap_system, gap_out = "-", gap_inst, gap_lambda = "1/16";
    int gap_d = 0, gap_limit = 22;
    auto* cg_multicut = cmd_gap->add_subcommand("multicut", "product instance from a system");
    cg_multicut->add_option("--system", gap_system)->required();
    cg_multicut->add_option("--d", gap_d)->required();
    cg_multicut->add_option("-o,--out", gap_out);
    auto* cg_check = cmd_gap->add_subcommand("check-long-paths", "canonicality and min nonterminal count");
    cg_check->add_option("file", gap_inst)->required();
    auto* cg_exact = cmd_gap->add_subcommand("multicut-exact", "exhaustive integral vertex multicut");
    cg_exact->add_option("file", gap_inst)->required();
    cg_exact->add_option("--limit", gap_limit);
    auto* cg_dsf = cmd_gap->add_subcommand("dsf", "vertex Steiner-forest instance");
    cg_dsf->add_option("--system", gap_system)->required();
    cg_dsf->add_option("--lambda", gap_lambda);
    cg_dsf->add_option("-o,--out", gap_out);
    auto* cg_split = cmd_gap->add_subcommand("node-split", "vertex costs to edge costs");
    cg_split->add_option("file", gap_inst)->required();
    cg_split->add_option("-o,--out", gap_out);
    int hr_d = 0, hr_limit = 1;
    auto* cg_hrep = cmd_gap->add_subcommand("h-report", "small-cut resilience of the layered graph");
    cg_hrep->add_option("--d", hr_d)->required();
    cg_hrep->add_option("--limit", hr_limit);
    cmd_gap->require_subcommand(1);

    std::vector<std::string> cli_args(args.rbegin(), args.rend());
    try {
        app.parse(cli_args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*cmd_stats) {
            auto s = load_path_system(stats_file);
            auto st = stats(s);
            if (stats_csv) {
                out << "n,p,size,d,ell,l2\n";
                out << s.node_count << ',' << s.paths.size() << ',' << st.size << ','
                    << st.avg_degree << ',' << st.avg_length << ',' << st.l2_norm_sq << "\n";
            } else {
                out << "nodes " << s.node_count << "\npaths " << s.paths.size() << "\nsize "
                    << st.size << "\navg-degree " << st.avg_degree << "\navg-length "
                    << st.avg_length << "\ndegree-range [" << st.min_degree << ", "
                    << st.max_degree << "]\nlength-range [" << st.min_length << ", "
                    << st.max_length << "]\nl2 " << st.l2_norm_sq << "\nacyclic "
                    << (st.acyclic ? 1 : 0) << "\n";
            }
            return 0;
        }

        if (*cmd_girth) {
            auto s = load_path_system(girth_file);
            if (girth_certify) {
                if (girth_ordered || s.ordered) {
                    auto cert = certify_ordered_bridge_free_acyclic(s);
                    if (cert.ok) {
                        out << "ordered-bridge-free (certificate)\n";
                        return 0;
                    }
                    out << "ordered-bridge-exists river=" << cert.river << " u=" << cert.u
                        << " v=" << cert.v << "\n";
                    return 1;
                }
                auto cert = certify_bridge_free_acyclic(s);
                if (cert.bridge_free) {
                    out << "bridge-free (certificate)\n";
                    return 0;
                }
                out << "bridge-exists river=" << cert.river << " u=" << cert.u << " v=" << cert.v
                    << "\n";
                return 1;
            }
            auto res = bridge_girth(s, girth_maxk, girth_ordered || s.ordered, girth_budget);
            if (res.witness) {
                out << "girth " << res.girth() << "\n" << witness_line(*res.witness) << "\n";
                return 1;
            }
            out << "girth >" << girth_maxk << "\n";
            return 0;
        }

        if (*cmd_construct) {
            PathSystem s;
            if (*cc_quad) s = quad_construction(quad_q);
            if (*cc_lat) s = lattice_construction({lat_n, lat_ell});
            if (*cc_rs) {
                auto set = ap_free_set(rs_m, rs_set == "greedy" ? ApFreeMethod::Greedy
                                                                : ApFreeMethod::Behrend);
                s = rs_construction(rs_m, set);
            }
            if (*cc_bip) s = bipartite_to_path_system(load_bipartite(bip_file));
            write_text(serialize(s), construct_out, out);
            if (construct_out != "-")
                out << "nodes " << s.node_count << " paths " << s.paths.size() << " size "
                    << s.size() << "\n";
            return 0;
        }

        if (*cmd_trim) {
            auto s = load_path_system(trim_file);
            out << "# seed " << seed << "\n";
            write_text(serialize(trim(s, trim_nodes, trim_paths, seed)), trim_out, out);
            return 0;
        }

        if (*cmd_clean) {
            write_text(serialize(clean_regularize(load_path_system(clean_file))), clean_out, out);
            return 0;
        }
        if (*cmd_strip) {
            write_text(serialize(strip_two_cycles(load_path_system(strip_file))), strip_out, out);
            return 0;
        }
        if (*cmd_sr) {
            auto res = clean_source_restricted(load_path_system(sr_file),
                                               Rational::parse(sr_lambda), seed);
            out << "# seed " << seed << "\n";
            out << "# retention " << res.retention << "\n";
            out << "# sources";
            for (NodeId x : res.sources) out << ' ' << x;
            out << "\n";
            write_text(serialize(res.system), sr_out, out);
            return 0;
        }
        if (*cmd_sub) {
            out << "# seed " << seed << "\n";
            write_text(serialize(subsample(load_path_system(sub_file), Rational::parse(sub_c),
                                           seed)),
                       sub_out, out);
            return 0;
        }
        if (*cmd_base) {
            auto res = sample_base_subsystem(load_path_system(base_file), base_h, seed);
            out << "# seed " << seed << "\n";
            out << "# base-path " << res.base_path << " direction "
                << (res.forwards ? "forwards" : "backwards") << " q " << res.q_count << "\n";
            write_text(serialize(res.system), base_out, out);
            return 0;
        }
        if (*cmd_l2) {
            auto rep = l2_report(load_path_system(l2_file));
            if (l2_csv) {
                out << "n,p,l2,max_length,n_times_l,p13_n43,ratio\n";
                out << rep.n << ',' << rep.p << ',' << rep.l2_norm_sq << ',' << rep.max_length
                    << ',' << rep.n_times_l << ',' << rep.p13_n43 << ',' << rep.ratio << "\n";
            } else {
                out << "l2 " << rep.l2_norm_sq << "\nmax-length " << rep.max_length << "\nn*L "
                    << rep.n_times_l << "\np^(1/3)n^(4/3) " << rep.p13_n43 << "\nratio "
                    << rep.ratio << "\n";
            }
            return 0;
        }

        if (*cmd_search) {
            if (*cs_table) {
                std::vector<int> ks;
                std::stringstream ss(table_ks);
                std::string tok;
                while (std::getline(ss, tok, ',')) ks.push_back(parse_k(tok));
                auto table = beta_table(table_max_n, table_max_p, ks, search_ordered,
                                        search_acyclic, search_budget);
                std::string csv = table.to_csv();
                if (table_csv.empty())
                    out << csv;
                else
                    write_text(csv, table_csv, out);
                return 0;
            }
            SearchParams sp;
            sp.n = search_n;
            sp.p = search_p;
            sp.k = parse_k(search_k);
            sp.ordered = search_ordered;
            sp.acyclic_only = search_acyclic;
            sp.budget = search_budget;
            auto res = max_system(sp);
            out << "value " << res.value << "\nexplored " << res.explored << "\n";
            if (!search_witness_out.empty()) write_text(serialize(res.witness), search_witness_out, out);
            return 0;
        }

        if (*cmd_reduce) {
            if (*cr_dp) {
                write_text(serialize(dp_hard_instance(load_path_system(red_file))), red_out, out);
                return 0;
            }
            if (*cr_rp) {
                write_text(serialize(system_to_digraph(load_path_system(red_file))), red_out, out);
                return 0;
            }
            if (*cr_adp) {
                auto rep = adp_instance(load_path_system(red_file), adp_k);
                out << "all-disconnect " << (rep.all_disconnect ? 1 : 0) << "\n";
                out << "min-hop-after-removal ";
                if (rep.min_hop_after_removal < 0)
                    out << "inf";
                else
                    out << rep.min_hop_after_removal;
                out << "\n";
                write_text(serialize(rep.instance), red_out, out);
                return rep.ok ? 0 : 1;
            }
            if (*cr_spanner) {
                auto res = greedy_spanner(load_undirected(red_file), spanner_k);
                out << "edges " << res.spanner.edges.size() << "\nstretch-ok "
                    << (res.stretch_ok ? 1 : 0) << "\ngirth-ok " << (res.girth_ok ? 1 : 0)
                    << "\n";
                write_text(serialize(res.spanner), red_out, out);
                return res.stretch_ok && res.girth_ok ? 0 : 1;
            }
        }

        if (*cmd_indep) {
            auto g = load_digraph(indep_file);
            if (indep_mode == "dp") {
                auto res = make_independent_dp(g, seed);
                out << "# seed " << seed << "\n";
                out << "# rewrites " << res.potential_log.size() - 1 << " perturbations "
                    << res.perturbation_attempts << "\n";
                write_text(serialize(res.instance), indep_out, out);
            } else {
                auto res = make_independent_rp(g);
                out << "# rewrites " << res.potential_log.size() - 1 << " tree-edges "
                    << res.tree_edges.size() << "\n";
                write_text(serialize(res.instance), indep_out, out);
            }
            return 0;
        }

        if (*cmd_verify) {
            auto g = load_digraph(ver_file);
            auto mode = ver_mode == "dp" ? IndependenceMode::Dp : IndependenceMode::Rp;
            if (ver_what == "independence") {
                auto res = check_independence(g, mode);
                if (res.ok) {
                    out << "independent\n";
                    return 0;
                }
                out << "violation: " << res.violation << "\n";
                return 1;
            }
            if (ver_what == "unique-shortest") {
                for (std::size_t i = 0; i < g.demands.size(); ++i) {
                    auto spc = count_shortest_paths(g, g.demands[i].s, g.demands[i].t);
                    if (!spc.reachable) {
                        out << "demand " << i << " unreachable\n";
                        return 1;
                    }
                    if (spc.count != 1) {
                        out << "demand " << i << " has multiple shortest paths\n";
                        return 1;
                    }
                    out << "demand " << i << " distance " << CsvQuote{spc.distance.to_decimal()}
                        << " unique\n";
                }
                return 0;
            }
            out << "preserver-size " << preserver_size(g, mode) << "\n";
            return 0;
        }

        if (*cmd_adv) {
            auto s = load_path_system(adv_file);
            if (adv_kind == "shortcut") {
                auto ans = shortcut_adversary(s, load_pair_file(adv_h));
                out << "pair " << ans.demand_index << " hops " << ans.hops << "\n";
            } else {
                auto h = load_digraph(adv_h);
                auto ans = hopset_adversary(s, h.edges);
                out << "pair " << ans.demand_index << " hops " << ans.hops << "\n";
            }
            return 0;
        }

        if (*cmd_game) {
            auto s = load_path_system(game_file);
            auto t = online_game(s, game_builder == "lazy" ? BuilderStrategy::Lazy
                                                           : BuilderStrategy::GreedyShortest);
            out << "rounds " << t.rounds.size() << "\nbuilder-edges " << t.final_builder_edges
                << "\n";
            return 0;
        }

        if (*cmd_gap) {
            if (*cg_multicut) {
                auto s = load_path_system(gap_system);
                out << "# seed " << seed << "\n";
                auto part = partition_paths(s, gap_d, seed);
                auto gs = build_gs(s, part.parts);
                auto h = build_h(gap_d, seed + 1);
                auto prod = build_product(gs, h);
                out << "# d " << gap_d << " dprime " << h.d_prime << " width " << h.layer_width
                    << " N " << prod.big_n << "\n";
                out << "# large-parts " << part.large_parts << "\n";
                write_text(serialize(prod), gap_out, out);
                return 0;
            }
            if (*cg_check) {
                auto g = load_gap_instance(gap_inst);
                auto rep = check_long_paths(g);
                out << "canonical " << (rep.all_canonical ? 1 : 0) << "\n";
                out << "min-nonterminals ";
                if (rep.min_nonterminals < 0)
                    out << "none";
                else
                    out << rep.min_nonterminals;
                out << "\ndprime " << g.d_prime << "\nfractional-value " << rep.fractional_value
                    << "\nunreachable-demands " << rep.unreachable_demands << "\n";
                return rep.ok ? 0 : 1;
            }
            if (*cg_exact) {
                auto g = load_gap_instance(gap_inst);
                auto res = brute_force_vertex_multicut(g, gap_limit);
                out << "multicut " << res.size << "\ncut";
                for (int v : res.cut) out << ' ' << v;
                out << "\n";
                return 0;
            }
            if (*cg_dsf) {
                auto s = load_path_system(gap_system);
                out << "# seed " << seed << "\n";
                auto sr = clean_source_restricted(s, Rational::parse(gap_lambda), seed);
                auto inst = build_dsf_instance(sr.system, sr.sources);
                out << "# sources " << inst.sources.size() << "\n";
                for (std::size_t i = 0; i < inst.sources.size(); ++i)
                    out << "# source " << inst.sources[i] << " degree " << inst.source_degree[i]
                        << " disjoint-paths " << inst.disjoint_paths[i] << "\n";
                write_text(serialize(inst.graph), gap_out, out);
                return 0;
            }
            if (*cg_split) {
                auto g = load_gap_instance(gap_inst);
                write_text(serialize(node_split(g).graph), gap_out, out);
                return 0;
            }
            if (*cg_hrep) {
                auto h = build_h(hr_d, seed);
                auto rep = h_cut_report(h, hr_limit);
                out << "# seed " << seed << "\n";
                out << "sets-checked " << rep.sets_checked << "\nmax-pairs-disconnected "
                    << rep.max_pairs_disconnected << "\nd " << hr_d << "\n";
                return 0;
            }
        }

        err << "error: no subcommand handled\n";
        return 2;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace bridgegirth
