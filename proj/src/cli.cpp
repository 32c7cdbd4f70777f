#include "plcat/cli.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "plcat/io.hpp"
#include "plcat/parallel.hpp"

namespace plcat::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

struct CommonOpts {
    std::uint64_t budget = kDefaultSearchBudget;
    std::uint64_t seed = 0;  // recorded for reproducibility; algorithms are deterministic
    int threads = 0;
    bool json_only = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--budget", c.budget, "search budget (candidates)")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "seed recorded in the run configuration");
    cmd->add_option("--threads", c.threads, "cap worker threads (0 = default)");
    cmd->add_flag("--json", c.json_only, "suppress the human summary on stderr");
    cmd->add_option("--out", c.out, "output path for the JSON artifact");
}

void emit(const CommonOpts& c, const json& j) {
    if (c.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        io::write_json(c.out, j);
}

void human(const CommonOpts& c, const std::string& line) {
    if (!c.json_only) std::cerr << line << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

int cmd_collapse(const std::string& input, const CommonOpts& c) {
    Timer timer;
    Complex2 k = io::load_complex(input).complex;
    auto cert = is_collapsible(k);
    if (cert) {
        json j = io::collapse_certificate_to_json(k, *cert);
        j["collapsible"] = true;
        emit(c, j);
        human(c, "collapsible: " + std::to_string(cert->steps.size()) + " steps (" +
                     std::to_string(timer.ms()) + " ms)");
        return 0;
    }
    GreedyResult g = greedy_collapse(k, empty_mask(k));
    json j;
    j["type"] = "collapse_certificate";
    j["collapsible"] = false;
    j["residual"] = io::collapse_certificate_to_json(k, g.certificate)["residual"];
    emit(c, j);
    human(c, "not collapsible; greedy residual has " +
                 std::to_string(g.residual.simplex_count()) + " simplices");
    return 1;
}

int cmd_shell(const std::string& input, bool find_order, bool hachimori, const CommonOpts& c) {
    Complex2 k = io::load_complex(input).complex;
    if (find_order == hachimori)
        throw CLI::ValidationError("shell", "pass exactly one of --find-shelling / --hachimori");
    if (find_order) {
        auto order = find_shelling(k);  // NotPureError -> exit 2
        if (order) {
            emit(c, io::shelling_to_json(k, *order));
            human(c, "shellable: order of " + std::to_string(order->size()) + " triangles");
            return 0;
        }
        json j;
        j["type"] = "shelling";
        j["shellable"] = false;
        emit(c, j);
        human(c, "not shellable (search exhausted)");
        return 1;
    }
    HachimoriVerdict v = hachimori_criterion(k, c.budget);
    emit(c, io::hachimori_to_json(k, v));
    switch (v.kind) {
        case HachimoriVerdict::Kind::yes:
            human(c, "hachimori: yes, witness of " + std::to_string(v.witness.size()));
            return 0;
        case HachimoriVerdict::Kind::no:
            human(c, "hachimori: no (" + v.reason + ")");
            return 1;
        default:
            human(c, "hachimori: unknown (budget)");
            return 1;
    }
}

int cmd_plgcat(const std::string& input, bool enriched_flag, const CommonOpts& c) {
    Timer timer;
    io::NamedComplex nc = io::load_complex(input);
    bool has_torus = false;
    for (const auto& [name, mask] : nc.named)
        if (name.rfind("torus:", 0) == 0) has_torus = true;

    PlgcatVerdict v;
    const Complex2* queried = nullptr;
    Complex2 plain = nc.complex;
    if (enriched_flag || has_torus) {
        ComplexPlus kp = io::complex_plus_from_json(io::complex_to_json(nc.complex, nc.named));
        v = plgcat_bounds_enriched(kp, c.budget);
        queried = kp.complex.get();
        emit(c, io::plgcat_verdict_to_json(v, queried));
    } else {
        v = plgcat_bounds(plain, c.budget);
        emit(c, io::plgcat_verdict_to_json(v, &plain));
    }
    human(c, "plgcat in [" + std::to_string(v.lower) + "," + std::to_string(v.upper) + "] (" +
                 v.kind + ", " + std::to_string(timer.ms()) + " ms)");
    return 0;
}

int cmd_enrich(const std::string& input, const CommonOpts& c) {
    Complex2 k = io::load_complex(input).complex;
    ComplexPlus kp = enrich(k);
    emit(c, io::complex_plus_to_json(kp));
    human(c, "enriched: " + std::to_string(kp.complex->vertex_count()) + " vertices, " +
                 std::to_string(kp.complex->triangle_count()) + " triangles");
    return 0;
}

int cmd_reduce(const std::string& cnf_path, const std::string& gadget, const CommonOpts& c) {
    Formula f = parse_dimacs(io::read_file(cnf_path));
    fs::path outdir = c.out.empty() ? fs::path("reduce_out") : fs::path(c.out);
    fs::create_directories(outdir);

    GadgetComplex external;
    const GadgetComplex* gp = nullptr;
    if (gadget != "toy") {
        external = io::load_gadget(gadget);
        gp = &external;
    }
    try {
        PipelineResult res = run_pipeline(f, gp);
        io::write_json(outdir / "gadget_report.json", io::gadget_report_to_json(res.report));
        io::write_json(outdir / "enriched.json", io::complex_plus_to_json(res.enriched));
        json meta;
        meta["type"] = "reduction_metadata";
        meta["num_vars"] = f.num_vars;
        meta["num_clauses"] = f.clauses.size();
        meta["removed_tautologies"] = f.removed_tautologies;
        meta["n"] = res.n;
        meta["gadget"] = {{"vertices", res.gadget.complex.vertex_count()},
                          {"edges", res.gadget.complex.edge_count()},
                          {"triangles", res.gadget.complex.triangle_count()},
                          {"spheres", res.gadget.spheres.size()}};
        meta["enriched"] = {{"vertices", res.enriched.complex->vertex_count()},
                            {"edges", res.enriched.complex->edge_count()},
                            {"triangles", res.enriched.complex->triangle_count()}};
        io::write_json(outdir / "metadata.json", meta);
        human(c, "pipeline ok: gadget passes the contract, artifacts in " + outdir.string());
        return 0;
    } catch (const ContractViolationError& e) {
        io::write_json(outdir / "gadget_report.json", io::gadget_report_to_json(e.report));
        human(c, "gadget contract violated; report in " + outdir.string());
        return 3;
    }
}

int cmd_verify(const std::string& cert_path, const std::string& complex_path,
               const CommonOpts& c) {
    json j = json::parse(io::read_file(cert_path));
    std::string type = j.value("type", "");
    bool ok = false;
    if (type == "cover_certificate") {
        CoverCertificate cover = io::cover_certificate_from_json(j);
        ok = verify_cover_certificate(cover);
        if (ok && !complex_path.empty()) {
            // when the queried complex is supplied, the cover must be over it
            // or over a recorded subdivision whose parent is it
            Complex2 k = io::load_complex(complex_path).complex;
            if (!(k == *cover.complex)) {
                ok = j.contains("subdivision") &&
                     io::complex_from_json(j.at("subdivision").at("parent")).complex == k;
            }
        }
    } else if (type == "collapse_certificate") {
        if (complex_path.empty())
            throw Error("verify needs --complex for collapse certificates");
        Complex2 k = io::load_complex(complex_path).complex;
        CollapseCertificate cert = io::collapse_certificate_from_json(k, j);
        ok = replay_certificate(k, cert);
    } else {
        throw SyntaxError("unknown certificate type: '" + type + "'");
    }
    human(c, ok ? "certificate valid" : "certificate INVALID");
    json out;
    out["type"] = "verification";
    out["valid"] = ok;
    emit(c, out);
    return ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"collapsibility, shellability and PL geometric category of 2-complexes"};
    app.require_subcommand(1);

    CommonOpts copt;
    std::string input, gadget = "toy", complex_path;
    bool find_order = false, hachimori = false, enriched = false;

    auto* collapse_cmd = app.add_subcommand("collapse", "decide collapsibility, emit a certificate");
    collapse_cmd->add_option("input", input, "complex file (text or JSON)")->required();
    add_common(collapse_cmd, copt);

    auto* shell_cmd = app.add_subcommand("shell", "shelling search / shellable-subdivision criterion");
    shell_cmd->add_option("input", input)->required();
    shell_cmd->add_flag("--find-shelling", find_order, "exhaustive shelling search");
    shell_cmd->add_flag("--hachimori", hachimori, "shellable-subdivision criterion");
    add_common(shell_cmd, copt);

    auto* plgcat_cmd = app.add_subcommand("plgcat", "PL geometric category bounds");
    plgcat_cmd->add_option("input", input)->required();
    plgcat_cmd->add_flag("--enriched", enriched, "treat input as an enriched complex");
    add_common(plgcat_cmd, copt);

    auto* enrich_cmd = app.add_subcommand("enrich", "glue a torus onto every triangle");
    enrich_cmd->add_option("input", input)->required();
    add_common(enrich_cmd, copt);

    auto* reduce_cmd = app.add_subcommand("reduce", "3-CNF to enriched-complex pipeline");
    reduce_cmd->add_option("cnf", input, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--gadget", gadget, "'toy' or a gadget JSON file");
    add_common(reduce_cmd, copt);

    auto* verify_cmd = app.add_subcommand("verify", "replay a certificate");
    verify_cmd->add_option("certificate", input)->required();
    verify_cmd->add_option("--complex", complex_path, "complex the certificate refers to");
    add_common(verify_cmd, copt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    parallel::set_max_threads(copt.threads);
    try {
        if (collapse_cmd->parsed()) return cmd_collapse(input, copt);
        if (shell_cmd->parsed()) return cmd_shell(input, find_order, hachimori, copt);
        if (plgcat_cmd->parsed()) return cmd_plgcat(input, enriched, copt);
        if (enrich_cmd->parsed()) return cmd_enrich(input, copt);
        if (reduce_cmd->parsed()) return cmd_reduce(input, gadget, copt);
        if (verify_cmd->parsed()) return cmd_verify(input, complex_path, copt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace plcat::cli
