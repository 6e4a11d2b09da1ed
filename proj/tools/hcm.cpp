// Command-line surface: every subcommand is deterministic given its inputs
// and seed, echoes the seed and input hashes into its JSON output, and maps
// failure classes to distinct exit codes so pipelines can tell "no colouring
// found" (2) from bad input (1) and cap/regime errors (3).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "hcm/bounds.hpp"
#include "hcm/colouring.hpp"
#include "hcm/cover.hpp"
#include "hcm/errors.hpp"
#include "hcm/generators.hpp"
#include "hcm/graph.hpp"
#include "hcm/hardcore.hpp"
#include "hcm/ipoly.hpp"
#include "hcm/occupancy.hpp"
#include "hcm/split.hpp"
#include "hcm/structure.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitRegime = 3;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hcm::parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out_path, const std::string& format) {
    std::string text;
    if (format == "tsv") {
        std::ostringstream ss;
        for (auto it = j.begin(); it != j.end(); ++it) {
            ss << it.key() << "\t";
            if (it.value().is_string())
                ss << it.value().get<std::string>();
            else
                ss << it.value().dump();
            ss << "\n";
        }
        text = ss.str();
    } else {
        text = j.dump(2) + "\n";
    }
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

json coeff_json(const hcm::IndependencePolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs) {
        if (c.fits_slong_p() && mpz_sizeinbase(c.get_mpz_t(), 2) <= 53)
            a.push_back(c.get_si());
        else
            a.push_back(c.get_str());
    }
    return a;
}

hcm::SparsitySetting parse_setting(const std::string& s) {
    auto colon = s.find(':');
    std::string name = s.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : s.substr(colon + 1);
    auto split2 = [&]() {
        auto comma = args.find(',');
        if (comma == std::string::npos)
            throw hcm::parse_error("setting '" + name + "' expects two arguments");
        return std::pair<std::string, std::string>{args.substr(0, comma), args.substr(comma + 1)};
    };
    if (name == "triangle_free") return hcm::SparsitySetting::triangle_free();
    if (name == "ck_free") return hcm::SparsitySetting::ck_free(std::stoi(args));
    if (name == "triangle_count") return hcm::SparsitySetting::triangle_count(std::stod(args));
    if (name == "path_count") {
        auto [a, b] = split2();
        return hcm::SparsitySetting::path_count(std::stoi(a), std::stod(b));
    }
    if (name == "hall") return hcm::SparsitySetting::hall_ratio(std::stod(args));
    if (name == "clique") return hcm::SparsitySetting::clique(std::stoi(args));
    throw hcm::parse_error("unknown setting '" + name + "'");
}

json witness_json(const hcm::OccupancyReport& rep) {
    json w;
    w["vertex"] = rep.witness.vertex;
    w["subgraphVertices"] = rep.witness.subgraph_vertices;
    json es = json::array();
    for (auto [a, b] : rep.witness.subgraph_edges) es.push_back({a, b});
    w["subgraphEdges"] = std::move(es);
    return w;
}

struct Common {
    double lambda = 1.0;
    std::uint64_t seed = 0;
    int cap = 0;
    long long rounds = 0;
    int jobs = 1;
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--lambda", c.lambda, "fugacity (default 1)");
    cmd->add_option("--seed", c.seed, "RNG seed");
    cmd->add_option("--cap", c.cap, "enumeration cap override");
    cmd->add_option("--rounds", c.rounds, "resampling round cap");
    cmd->add_option("--jobs", c.jobs, "worker threads for sweeps/verification");
    cmd->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--out", c.out_path, "write output to a file instead of stdout");
}

json colour_result_json(const hcm::ColourResult& r, std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["verified"] = r.verified;
    j["success"] = r.success;
    j["chosen"] = r.chosen;
    j["phaseStats"] = {{"phase1Rounds", r.phase1_rounds}, {"phase2Rounds", r.phase2_rounds}};
    if (!r.success) {
        j["failedPhase"] = r.failed_phase;
        json vs = json::array();
        for (const auto& v : r.violations)
            vs.push_back({{"vertex", v.vertex},
                          {"condition", v.condition},
                          {"observed", v.observed},
                          {"required", v.required}});
        j["violations"] = std::move(vs);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hard-core model toolkit: independence polynomials, local occupancy "
                 "certificates, theorem bounds, and two-phase correspondence colouring"};
    app.require_subcommand(1);

    // ---- ipoly ----
    auto* ipoly = app.add_subcommand("ipoly", "independence polynomial, Z, Z', occupancy fraction");
    std::string ipoly_file;
    Common ipoly_c;
    ipoly->add_option("graph", ipoly_file, "graph file")->required();
    add_common(ipoly, ipoly_c);

    // ---- occupancy ----
    auto* occ = app.add_subcommand("occupancy", "verify a local occupancy certificate");
    std::string occ_file, occ_setting;
    double occ_beta = 0, occ_gamma = 0, occ_xi = 0.1;
    bool occ_strong = false;
    Common occ_c;
    occ->add_option("graph", occ_file, "graph file")->required();
    occ->add_option("--setting", occ_setting,
                    "closed-form source: triangle_free, ck_free:k, triangle_count:t, "
                    "path_count:k,t, hall:rho, clique:omega");
    occ->add_option("--beta", occ_beta, "explicit uniform beta");
    occ->add_option("--gamma", occ_gamma, "explicit uniform gamma");
    occ->add_option("--xi", occ_xi, "inflation for the clique setting");
    occ->add_flag("--strong", occ_strong, "quantify over all subgraphs, not just induced");
    add_common(occ, occ_c);

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "evaluate a theorem bound formula");
    std::string bounds_setting = "triangle_free", bounds_mode = "occupancy";
    int bounds_Delta = 0;
    double bounds_eps = 0, bounds_delta0 = 8, bounds_deg = 0;
    Common bounds_c;
    bounds->add_option("--setting", bounds_setting, "sparsity setting")->required();
    bounds->add_option("--Delta", bounds_Delta, "maximum degree")->required();
    bounds->add_option("--mode", bounds_mode, "occupancy, fractional, or list")
        ->check(CLI::IsMember({"occupancy", "fractional", "list"}));
    bounds->add_option("--eps", bounds_eps, "the (1+eps) factor");
    bounds->add_option("--delta0", bounds_delta0, "minimum-degree scale constant");
    bounds->add_option("--deg", bounds_deg, "vertex degree (defaults to Delta)");
    add_common(bounds, bounds_c);

    // ---- colour ----
    auto* colour = app.add_subcommand("colour", "two-phase correspondence colouring");
    std::string colour_file, colour_lists;
    int colour_k = 0, colour_sweep = 1;
    double colour_ell = 4;
    Common colour_c;
    colour->add_option("graph", colour_file, "graph file")->required();
    colour->add_option("--lists", colour_lists, "colour lists file");
    colour->add_option("--random-cover", colour_k, "random k-fold cover instead of lists");
    colour->add_option("--ell", colour_ell, "residual list target (uniform)");
    colour->add_option("--sweep", colour_sweep, "run this many consecutive seeds");
    add_common(colour, colour_c);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    std::string gen_spec;
    Common gen_c;
    gen->add_option("--spec", gen_spec, "e.g. kneser(5,2), random_regular(10,3)")->required();
    add_common(gen, gen_c);

    // ---- split ----
    auto* split = app.add_subcommand("split", "iterated degree-halving partition");
    std::string split_file;
    double split_f = 0, split_delta = 0.005, split_zeta = 0.04;
    Common split_c;
    split->add_option("graph", split_file, "graph file")->required();
    split->add_option("--f", split_f, "sparsity parameter f")->required();
    split->add_option("--delta", split_delta, "slack delta in (0, 1/100)");
    split->add_option("--zeta", split_zeta, "exponent zeta with zeta(2+delta) < 1/10");
    add_common(split, split_c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ipoly) {
            std::string text = slurp(ipoly_file);
            hcm::Graph g = hcm::load_graph(text);
            if (g.vertex_count() == 0) throw hcm::regime_error("empty graph");
            hcm::IpolyOptions opt;
            if (ipoly_c.cap > 0) opt.vertex_cap = ipoly_c.cap;
            auto p = hcm::independence_polynomial(g, opt);
            json j;
            j["command"] = "ipoly";
            j["inputHash"] = fnv1a_hex(text);
            j["lambda"] = ipoly_c.lambda;
            j["n"] = g.vertex_count();
            j["m"] = g.edge_count();
            j["coeffs"] = coeff_json(p);
            j["independenceNumber"] = p.alpha();
            j["Z"] = hcm::evaluate_Z(p, ipoly_c.lambda);
            j["Zprime"] = hcm::evaluate_Zprime(p, ipoly_c.lambda);
            j["occupancyFraction"] = hcm::occupancy_fraction(g, ipoly_c.lambda, opt);
            emit(j, ipoly_c.out_path, ipoly_c.format);
            return kExitOk;
        }

        if (*occ) {
            std::string text = slurp(occ_file);
            hcm::Graph g = hcm::load_graph(text);
            hcm::OccupancyParams params;
            params.lambda = occ_c.lambda;
            params.strong = occ_strong;
            json source;
            if (!occ_setting.empty()) {
                auto setting = parse_setting(occ_setting);
                source["setting"] = occ_setting;
                using Kind = hcm::SparsitySetting::Kind;
                for (int u = 0; u < g.vertex_count(); ++u) {
                    double d = std::max(static_cast<double>(g.degree(u)), 1e-6);
                    hcm::ParamBudget pb;
                    if (setting.kind == Kind::HallRatio)
                        pb = hcm::hall_params(setting.rho, d, occ_c.lambda);
                    else if (setting.kind == Kind::Clique)
                        pb = hcm::clique_params(setting.omega, d, occ_c.lambda, occ_xi).best();
                    else
                        pb = hcm::mad_params(setting.mad_exponent(), d, occ_c.lambda);
                    params.beta_gamma.emplace_back(pb.beta, pb.gamma);
                }
            } else {
                if (!(occ_beta > 0) || !(occ_gamma > 0))
                    throw hcm::parse_error("either --setting or both --beta and --gamma required");
                params = hcm::OccupancyParams::uniform(g.vertex_count(), occ_c.lambda, occ_beta,
                                                       occ_gamma, occ_strong);
                source["beta"] = occ_beta;
                source["gamma"] = occ_gamma;
            }
            hcm::VerifyOptions vopt;
            if (occ_c.cap > 0) vopt.degree_cap = occ_c.cap;
            vopt.threads = std::max(1, occ_c.jobs);
            auto rep = hcm::verify_local_occupancy(g, params, vopt);
            json j;
            j["command"] = "occupancy";
            j["inputHash"] = fnv1a_hex(text);
            j["lambda"] = occ_c.lambda;
            j["strong"] = occ_strong;
            j["params"] = std::move(source);
            j["verified"] = rep.verified;
            j["minGap"] = rep.min_gap;
            j["subgraphsChecked"] = rep.subgraphs_checked;
            j["exactFallbackUsed"] = rep.exact_fallback_used;
            j["witness"] = witness_json(rep);
            emit(j, occ_c.out_path, occ_c.format);
            return kExitOk;
        }

        if (*bounds) {
            auto setting = parse_setting(bounds_setting);
            json j;
            j["command"] = "bounds";
            j["setting"] = bounds_setting;
            j["Delta"] = bounds_Delta;
            j["mode"] = bounds_mode;
            if (bounds_mode == "occupancy") {
                auto r = hcm::occupancy_lower_bound(setting, bounds_Delta, bounds_c.lambda);
                j["lambda"] = bounds_c.lambda;
                j["value"] = r.value;
                if (!std::isnan(r.maximizer)) j["maximizer"] = r.maximizer;
                j["formula"] = r.formula;
                j["o1SetToOne"] = r.o1_set_to_one;
            } else {
                hcm::BudgetParams bp;
                bp.deg = bounds_deg > 0 ? bounds_deg : bounds_Delta;
                bp.delta0 = bounds_delta0;
                bp.Delta = bounds_Delta;
                bp.eps = bounds_eps;
                bp.mode = bounds_mode == "list" ? hcm::BudgetMode::List : hcm::BudgetMode::Fractional;
                j["deg"] = bp.deg;
                j["delta0"] = bp.delta0;
                j["eps"] = bp.eps;
                j["value"] = hcm::chromatic_budget(setting, bp);
            }
            emit(j, bounds_c.out_path, bounds_c.format);
            return kExitOk;
        }

        if (*colour) {
            std::string text = slurp(colour_file);
            hcm::Graph g = hcm::load_graph(text);
            std::string lists_text;
            hcm::ColourOptions copt;
            if (colour_c.rounds > 0) {
                copt.phase1.max_rounds = colour_c.rounds;
                copt.phase2.max_rounds = colour_c.rounds;
            }
            std::vector<double> ell(g.vertex_count(), colour_ell);
            auto cover_for = [&](hcm::Rng& rng) {
                if (!colour_lists.empty()) {
                    lists_text = slurp(colour_lists);
                    return hcm::cover_from_lists(g, hcm::parse_lists(lists_text, g.vertex_count()));
                }
                if (colour_k < 1)
                    throw hcm::parse_error("either --lists or --random-cover k required");
                return hcm::random_cover(g, colour_k, rng);
            };

            json runs = json::array();
            int successes = 0;
            std::vector<json> results(colour_sweep);
            auto run_one = [&](int i) {
                std::uint64_t s = colour_c.seed + static_cast<std::uint64_t>(i);
                hcm::Rng rng = hcm::derive_stream(s, 0);
                hcm::Cover cover = cover_for(rng);
                auto r = hcm::colour(cover, colour_c.lambda, ell, copt, s);
                results[i] = colour_result_json(r, s);
            };
            if (colour_c.jobs > 1 && colour_sweep > 1) {
                std::vector<std::thread> pool;
                std::atomic<int> next{0};
                int nt = std::min(colour_c.jobs, colour_sweep);
                for (int t = 0; t < nt; ++t)
                    pool.emplace_back([&] {
                        int i;
                        while ((i = next.fetch_add(1)) < colour_sweep) run_one(i);
                    });
                for (auto& th : pool) th.join();
            } else {
                for (int i = 0; i < colour_sweep; ++i) run_one(i);
            }
            for (auto& r : results) {
                if (r["success"].get<bool>()) ++successes;
                runs.push_back(std::move(r));
            }
            json j;
            j["command"] = "colour";
            j["inputHash"] = fnv1a_hex(text);
            if (!lists_text.empty()) j["listsHash"] = fnv1a_hex(lists_text);
            j["lambda"] = colour_c.lambda;
            j["ell"] = colour_ell;
            j["seed"] = colour_c.seed;
            if (colour_sweep == 1) {
                j.update(runs[0]);
            } else {
                j["sweep"] = colour_sweep;
                j["successes"] = successes;
                j["runs"] = std::move(runs);
            }
            emit(j, colour_c.out_path, colour_c.format);
            return successes == colour_sweep ? kExitOk : kExitFailure;
        }

        if (*gen) {
            hcm::Rng rng = hcm::make_rng(gen_c.seed);
            hcm::Graph g = hcm::generate(gen_spec, rng);
            std::string text = hcm::write_graph(g);
            if (gen_c.out_path.empty()) {
                std::cout << "c spec " << gen_spec << " seed " << gen_c.seed << "\n" << text;
            } else {
                std::ofstream out(gen_c.out_path, std::ios::binary);
                out << "c spec " << gen_spec << " seed " << gen_c.seed << "\n" << text;
            }
            return kExitOk;
        }

        if (*split) {
            std::string text = slurp(split_file);
            hcm::Graph g = hcm::load_graph(text);
            auto r = hcm::iterated_split(g, split_f, split_delta, split_zeta, split_c.seed);
            json j;
            j["command"] = "split";
            j["inputHash"] = fnv1a_hex(text);
            j["seed"] = split_c.seed;
            j["f"] = split_f;
            j["delta"] = split_delta;
            j["zeta"] = split_zeta;
            j["levels"] = r.levels;
            j["deltaSequence"] = r.delta_seq;
            j["sSequence"] = r.s_seq;
            j["success"] = r.success;
            if (r.success)
                j["parts"] = r.parts;
            else
                j["failure"] = r.failure;
            emit(j, split_c.out_path, split_c.format);
            return r.success ? kExitOk : kExitFailure;
        }
    } catch (const hcm::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hcm::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const hcm::regime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
