// Command-line driver: compute Sigma_n and sigma tables, verify relations,
// construct families, run isospectral scans, recover triangular maps, and
// probe the monic family.
//
// Exit codes: 0 success, 1 usage error, 2 invalid map, 3 resource cap
// exceeded, 4 domain error (e.g. irrational spectrum).

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "multspec/families.hpp"
#include "multspec/mapfile.hpp"
#include "multspec/monic.hpp"
#include "multspec/recovery.hpp"
#include "multspec/relations.hpp"

namespace ms = multspec;

namespace {

struct GlobalOpts {
    ms::ResourceCaps caps;
    std::string format = "text";
    std::string tier = "fast";
};

bool structured(const GlobalOpts& g) { return g.format == "structured"; }

// Environment variables mirror the resource-cap flags; explicit flags win.
void caps_from_env(ms::ResourceCaps& caps) {
    if (const char* v = std::getenv("MULTSPEC_MAX_PAIRS")) caps.max_pairs = std::stoull(v);
    if (const char* v = std::getenv("MULTSPEC_MAX_COEFF_BITS"))
        caps.max_coeff_bits = std::stoull(v);
    if (const char* v = std::getenv("MULTSPEC_TIME_LIMIT"))
        caps.time_limit_seconds = std::stod(v);
}

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--max-pairs", g.caps.max_pairs, "Groebner S-pair cap");
    cmd->add_option("--max-coeff-bits", g.caps.max_coeff_bits, "coefficient bit-size cap");
    cmd->add_option("--time-limit", g.caps.time_limit_seconds, "time limit in seconds");
    cmd->add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--tier", g.tier, "test tier")->check(CLI::IsMember({"fast", "slow"}));
}

ms::Rat parse_rat_arg(const std::string& s) {
    auto r = ms::parse_rat(s);
    if (!r) throw CLI::ValidationError("--param", "not a rational: " + s);
    return *r;
}

std::vector<ms::Rat> parse_rat_list(const std::string& s) {
    std::vector<ms::Rat> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto r = ms::parse_rat(tok);
        if (!r) throw CLI::ValidationError("rational list", "bad entry: " + tok);
        out.push_back(*r);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

ms::UniPoly unipoly_from_string(const std::string& s) {
    ms::Ring r{{"x"}};
    ms::Poly p = ms::parse_poly(r, s);
    ms::UniPoly out(p.total_degree() + 1, ms::Rat(0));
    if (p.is_zero()) return {};
    for (auto& tm : p.terms) out[tm.mon.exps[0]] = tm.coeff;
    ms::uni_trim(out);
    return out;
}

std::vector<std::string> split_semicolons(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t semi = s.find(';', pos);
        out.push_back(s.substr(pos, semi == std::string::npos ? semi : semi - pos));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

void print_sigma(const ms::SigmaPolynomial& S, const GlobalOpts& g) {
    ms::SigmaTable T = ms::extract_sigmas(S);
    if (structured(g)) {
        ms::Json j;
        j["sigma"] = ms::sigma_to_json(S);
        j["table"] = ms::table_to_json(T);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "Sigma_" << S.n << " (" << ms::to_string(S.mode) << ", N=" << S.N
              << ", d=" << S.d << ", D_n=" << S.Dn.get_str() << "):\n";
    std::cout << "  " << ms::format_poly(ms::sigma_ring(), S.poly) << "\n";
    std::cout << "sigma table (nonzero entries):\n";
    for (auto& [ij, v] : T.entries)
        std::cout << "  sigma_{" << ij.first << "," << ij.second << "} = " << ms::to_string(v)
                  << "\n";
}

int cmd_sigma(const std::string& map_path, unsigned period, const std::string& mode,
              const std::string& engine, const GlobalOpts& g) {
    ms::DynamicalSystem f = ms::load_map(map_path);
    ms::SigmaMode m = mode == "plain" ? ms::SigmaMode::plain : ms::SigmaMode::chow;
    ms::SigmaEngine e =
        engine == "groebner" ? ms::SigmaEngine::groebner : ms::SigmaEngine::multop;
    print_sigma(ms::sigma_poly(f, period, m, g.caps, e), g);
    return 0;
}

int cmd_verify(const std::string& map_path, const std::string& relation, unsigned period,
               const GlobalOpts& g) {
    ms::DynamicalSystem f = ms::load_map(map_path);
    bool holds = false;
    std::string residual;

    if (relation == "ueda") {
        auto sp = ms::rational_periodic_spectrum(f, 1, g.caps);
        auto rep = ms::check_ueda(sp, f.N, f.d);
        holds = rep.holds;
        if (!holds)
            residual = ms::format_unipoly(ms::uni_sub(rep.lhs, rep.rhs));
    } else if (relation == "corollary") {
        auto T = ms::extract_sigmas(ms::sigma_poly(f, 1, ms::SigmaMode::chow, g.caps));
        holds = ms::check_corollary_relation(T);
    } else if (relation == "dependence") {
        auto T = ms::extract_sigmas(ms::sigma_poly(f, period, ms::SigmaMode::chow, g.caps));
        size_t D = static_cast<size_t>(T.Dn.get_si());
        holds = true;
        for (size_t j = 1; holds && j < D && j <= T.N * D; ++j) {
            std::vector<ms::Rat> col;
            for (size_t i = 1; i <= j; ++i) col.push_back(T.sigma(i, j));
            auto pred = ms::fit_partition_predictor(col, j, T.Dn);
            for (size_t i = j + 1; i <= D; ++i)
                if (ms::predict_sigma(pred, i) != T.sigma(i, j)) {
                    holds = false;
                    residual = "sigma_{" + std::to_string(i) + "," + std::to_string(j) + "}";
                    break;
                }
        }
    } else {
        throw CLI::ValidationError("--relation", "unknown relation: " + relation);
    }

    if (structured(g)) {
        ms::Json j;
        j["relation"] = relation;
        j["holds"] = holds;
        if (!holds) j["residual"] = residual;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << relation << ": " << (holds ? "HOLDS" : "FAILS") << "\n";
        if (!holds) std::cout << "  residual: " << residual << "\n";
    }
    return 0;
}

int cmd_construct(const std::string& kind, const std::string& param,
                  const std::string& components, const std::string& map_a,
                  const std::string& map_b, size_t power, const GlobalOpts& g) {
    ms::DynamicalSystem f;
    if (kind == "lattes") {
        f = ms::lattes_mordell(parse_rat_arg(param));
    } else if (kind == "symfixture") {
        f = ms::symmetric_lattes_fixture(parse_rat_arg(param));
    } else if (kind == "product") {
        f = ms::cartesian_product(ms::load_map(map_a), ms::load_map(map_b));
    } else if (kind == "segre") {
        f = ms::segre_power_product(ms::load_map(map_a), power);
    } else if (kind == "split") {
        ms::SplitSpec spec;
        for (auto& s : split_semicolons(components))
            spec.components.push_back(unipoly_from_string(s));
        f = ms::split_endomorphism(spec);
    } else if (kind == "triangular") {
        auto parts = split_semicolons(components);
        size_t N = parts.size();
        ms::Ring r;
        for (size_t i = 1; i <= N; ++i) r.vars.push_back("x" + std::to_string(i));
        ms::TriangularSpec spec;
        for (auto& s : parts) spec.components.push_back(ms::parse_poly(r, s));
        f = ms::triangular_endomorphism(spec);
    } else {
        throw CLI::ValidationError("--kind", "unknown kind: " + kind);
    }
    std::cout << ms::map_to_json(f).dump(2) << "\n";
    (void)g;
    return 0;
}

int cmd_scan(const std::string& kind, const std::string& samples, unsigned period,
             const std::string& mode, const GlobalOpts& g) {
    std::function<ms::DynamicalSystem(const ms::Rat&)> builder;
    if (kind == "lattes")
        builder = [](const ms::Rat& a) { return ms::lattes_mordell(a); };
    else if (kind == "lattes-ext")
        builder = [](const ms::Rat& a) { return ms::lattes_mordell_extended(a); };
    else if (kind == "legendre")
        builder = [](const ms::Rat& a) { return ms::lattes_legendre(a); };
    else if (kind == "symfixture")
        builder = [](const ms::Rat& a) { return ms::symmetric_lattes_fixture(a); };
    else
        throw CLI::ValidationError("--kind", "unknown scan kind: " + kind);

    ms::SigmaMode m = mode == "chow" ? ms::SigmaMode::chow : ms::SigmaMode::plain;
    auto rep = ms::isospectral_scan(builder, parse_rat_list(samples), period, m, g.caps);

    if (structured(g)) {
        ms::Json j;
        j["kind"] = kind;
        j["all_agree"] = rep.all_agree;
        ms::Json arr = ms::Json::array();
        for (auto& s : rep.samples) {
            ms::Json rec;
            rec["parameter"] = ms::to_string(s.parameter);
            if (s.sigma)
                rec["sigma"] = ms::sigma_to_json(*s.sigma);
            else
                rec["error"] = s.error;
            arr.push_back(std::move(rec));
        }
        j["samples"] = std::move(arr);
        if (rep.common) j["common"] = ms::format_poly(ms::sigma_ring(), *rep.common);
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& s : rep.samples) {
            std::cout << "a = " << ms::to_string(s.parameter) << ": ";
            if (s.sigma)
                std::cout << ms::format_poly(ms::sigma_ring(), s.sigma->poly) << "\n";
            else
                std::cout << "error: " << s.error << "\n";
        }
        std::cout << (rep.all_agree ? "all samples agree" : "samples disagree") << "\n";
    }
    return 0;
}

int cmd_recover(const std::string& spectrum_path, const GlobalOpts& g) {
    auto pairs = ms::load_spectrum(spectrum_path);
    auto maps = ms::recover_triangular_2_2(pairs, g.caps);
    if (structured(g)) {
        ms::Json arr = ms::Json::array();
        for (auto& m : maps) {
            ms::Json rec;
            rec["map"] = ms::map_to_json(m.map);
            rec["spectrum_mismatch"] = m.spectrum_mismatch;
            auto S = ms::sigma_poly(m.map, 1, ms::SigmaMode::chow, g.caps);
            rec["sigma1"] = ms::format_poly(ms::sigma_ring(), S.poly);
            arr.push_back(std::move(rec));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        if (maps.empty()) std::cout << "no map reproduces the spectrum\n";
        ms::Ring r = ms::coord_ring(3);
        for (auto& m : maps) {
            std::cout << "map: [";
            for (size_t i = 0; i < m.map.coords.size(); ++i)
                std::cout << (i ? " : " : "") << ms::format_poly(r, m.map.coords[i]);
            std::cout << "]  (mismatched pairs: " << m.spectrum_mismatch << ")\n";
            auto S = ms::sigma_poly(m.map, 1, ms::SigmaMode::chow, g.caps);
            std::cout << "  Sigma_1 = " << ms::format_poly(ms::sigma_ring(), S.poly) << "\n";
        }
    }
    return 0;
}

int cmd_monic(const std::string& params, bool check_hyp, bool fiber, const GlobalOpts& g) {
    auto vals = parse_rat_list(params);
    if (vals.size() != 4)
        throw CLI::ValidationError("--params", "monic needs exactly a1,a2,b1,b2");
    ms::MonicParams p{vals[0], vals[1], vals[2], vals[3]};
    ms::DynamicalSystem f = ms::monic_map(p);
    ms::MonicSigmaVector gen = ms::monic_sigma_generators(p);
    ms::Rat res = ms::hypersurface_eval(gen);

    ms::Json j;
    j["map"] = ms::map_to_json(f);
    ms::Json gj = ms::Json::array();
    for (auto& v : gen) gj.push_back(ms::to_string(v));
    j["generators"] = std::move(gj);
    if (check_hyp) j["hypersurface_residual"] = ms::to_string(res);
    std::optional<ms::MonicFiberReport> rep;
    if (fiber) {
        rep = ms::monic_fiber_probe(gen, g.caps);
        ms::Json fj;
        fj["empty"] = rep->empty;
        fj["zero_dimensional"] = rep->zero_dimensional;
        fj["fiber_degree"] = rep->fiber_degree;
        ms::Json sols = ms::Json::array();
        for (auto& s : rep->rational_solutions) {
            ms::Json rec = ms::Json::array();
            for (auto& v : s) rec.push_back(ms::to_string(v));
            sols.push_back(std::move(rec));
        }
        fj["rational_solutions"] = std::move(sols);
        fj["nonrational_present"] = rep->nonrational_present;
        j["fiber"] = std::move(fj);
    }

    if (structured(g)) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    ms::Ring r = ms::coord_ring(3);
    std::cout << "map: [";
    for (size_t i = 0; i < 3; ++i)
        std::cout << (i ? " : " : "") << ms::format_poly(r, f.coords[i]);
    std::cout << "]\n";
    const char* names[5] = {"sigma_{1,2}", "sigma_{2,2}", "sigma_{2,3}", "sigma_{2,4}",
                            "sigma_{3,3}"};
    for (size_t i = 0; i < 5; ++i)
        std::cout << names[i] << " = " << ms::to_string(gen[i]) << "\n";
    if (check_hyp) std::cout << "hypersurface residual: " << ms::to_string(res) << "\n";
    if (rep) {
        if (rep->empty)
            std::cout << "fiber: empty\n";
        else if (!rep->zero_dimensional)
            std::cout << "fiber: positive-dimensional\n";
        else {
            std::cout << "fiber: zero-dimensional, degree " << rep->fiber_degree << "\n";
            for (auto& s : rep->rational_solutions)
                std::cout << "  (" << ms::to_string(s[0]) << ", " << ms::to_string(s[1]) << ", "
                          << ms::to_string(s[2]) << ", " << ms::to_string(s[3]) << ")\n";
            if (rep->nonrational_present) std::cout << "  non-rational solutions present\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplier invariants of projective endomorphisms"};
    app.require_subcommand(1);

    GlobalOpts g;
    caps_from_env(g.caps);

    std::string map_path, map_b_path, mode = "chow", engine = "multop", relation, kind;
    std::string samples, spectrum_path, params, components, param;
    unsigned period = 1;
    size_t power = 1;
    bool check_hyp = false, fiber = false;

    auto* sigma = app.add_subcommand("sigma", "compute Sigma_n and the sigma table");
    sigma->add_option("--map", map_path, "map file")->required();
    sigma->add_option("--period", period, "period n");
    sigma->add_option("--mode", mode, "chow or plain")->check(CLI::IsMember({"chow", "plain"}));
    sigma->add_option("--engine", engine, "multop or groebner")
        ->check(CLI::IsMember({"multop", "groebner"}));
    add_global_opts(sigma, g);

    auto* verify = app.add_subcommand("verify", "check a relation on a map");
    verify->add_option("--map", map_path, "map file")->required();
    verify->add_option("--relation", relation, "ueda, corollary, or dependence")->required();
    verify->add_option("--period", period, "period n (dependence only)");
    add_global_opts(verify, g);

    auto* construct = app.add_subcommand("construct", "emit a family member as a map file");
    construct->add_option("--kind", kind, "product|segre|split|triangular|lattes|symfixture")
        ->required();
    construct->add_option("--param", param, "rational family parameter");
    construct->add_option("--components", components, "semicolon-separated component polynomials");
    construct->add_option("--map", map_path, "first factor map file");
    construct->add_option("--map2", map_b_path, "second factor map file");
    construct->add_option("--power", power, "dimension M of the powering factor");
    add_global_opts(construct, g);

    auto* scan = app.add_subcommand("scan", "isospectral scan over parameter samples");
    scan->add_option("--kind", kind, "lattes|lattes-ext|legendre|symfixture")->required();
    scan->add_option("--samples", samples, "comma-separated rational parameters")->required();
    scan->add_option("--period", period, "period n");
    scan->add_option("--mode", mode, "chow or plain")->check(CLI::IsMember({"chow", "plain"}));
    add_global_opts(scan, g);

    auto* recover = app.add_subcommand("recover", "recover triangular maps from a spectrum");
    recover->add_option("--spectrum", spectrum_path, "spectrum file")->required();
    add_global_opts(recover, g);

    auto* monic = app.add_subcommand("monic", "evaluate the monic family at parameters");
    monic->add_option("--params", params, "a1,a2,b1,b2")->required();
    monic->add_flag("--check-hypersurface", check_hyp, "evaluate the hypersurface residual");
    monic->add_flag("--fiber", fiber, "probe the fiber over the generator vector");
    add_global_opts(monic, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (sigma->parsed()) return cmd_sigma(map_path, period, mode, engine, g);
        if (verify->parsed()) return cmd_verify(map_path, relation, period, g);
        if (construct->parsed())
            return cmd_construct(kind, param, components, map_path, map_b_path, power, g);
        if (scan->parsed()) return cmd_scan(kind, samples, period, mode, g);
        if (recover->parsed()) return cmd_recover(spectrum_path, g);
        if (monic->parsed()) return cmd_monic(params, check_hyp, fiber, g);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ms::ResourceLimitError& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ms::InvalidMapError& e) {
        std::cerr << "invalid map: " << e.what() << "\n";
        return 2;
    } catch (const ms::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
