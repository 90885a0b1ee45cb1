#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "toralpha/errors.hpp"
#include "toralpha/invariant.hpp"
#include "toralpha/json_io.hpp"

using nlohmann::json;
using namespace toralpha;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariance = 4;
constexpr int kExitCapacity = 5;

struct Options {
    std::string file;
    std::string point;
    std::string sections;
    long long level = 1;
    std::string group_override;
    bool fano = false;
    long long oracle = 0;
    bool pretty = false;
};

void emit(const json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

// Env-var fallbacks; explicit flags win.
long long env_or(const char* name, long long fallback) {
    if (const char* v = std::getenv(name)) return std::atoll(v);
    return fallback;
}

JobDocument load_job(const Options& opt) {
    JobDocument job = load_job_document(opt.file);
    if (!opt.group_override.empty()) {
        if (opt.group_override == "full") {
            job.group = GroupSpec{true, {}};
        } else {
            JobDocument gdoc = load_job_document(opt.group_override);
            if (!gdoc.group) throw ParseError("group file has no group field");
            job.group = gdoc.group;
        }
    }
    return job;
}

int cmd_validate(const Options& opt) {
    const JobDocument job = load_job(opt);
    json report;
    const auto diags = validate_fan(job.fan);
    report["valid"] = diags.empty();
    if (!diags.empty()) {
        json list = json::array();
        for (const auto& d : diags) list.push_back({{"message", d.message}, {"indices", d.indices}});
        report["diagnostics"] = list;
        emit(report, opt.pretty);
        return kExitDomain;
    }
    const auto smooth = is_smooth(job.fan);
    report["smooth"] = smooth.smooth;
    if (!smooth.smooth) {
        report["offending_cone"] = smooth.offending_cone;
        report["determinant"] = smooth.det.convert_to<long long>();
    }
    report["complete"] = is_complete(job.fan);
    if (!job.divisor.empty()) {
        const auto D = resolve_divisor(job);
        report["divisor_ok"] = D.coefficients.size() == job.fan.rays.size();
    }
    emit(report, opt.pretty);
    return (report["smooth"].get<bool>() && report["complete"].get<bool>()) ? 0 : kExitDomain;
}

int cmd_info(const Options& opt) {
    const JobDocument job = load_job(opt);
    const auto D = resolve_divisor(job);
    const auto P = polytope_of(D);
    json report;
    report["nef"] = is_nef(D).nef;
    report["big"] = is_big(D);
    report["ample"] = is_ample(D);
    json slopes = json::array();
    for (const auto& v : support_function(D)) slopes.push_back(to_json(v));
    report["support_vectors"] = slopes;
    json verts = json::array();
    for (const auto& v : P.vertices()) verts.push_back(to_json(v));
    report["vertices"] = verts;
    if (!P.vertices().empty() && is_big(D)) {
        const auto [vol, bary] = volume_and_barycenter(P);
        report["volume"] = format_rational(vol);
        report["barycenter"] = to_json(bary);
    }
    emit(report, opt.pretty);
    return 0;
}

int cmd_lct(const Options& opt) {
    const JobDocument job = load_job(opt);
    const auto D = resolve_divisor(job);
    LctValue lct;
    if (!opt.point.empty()) {
        lct = lct_point(D, parse_point(opt.point, job.fan.dimension));
    } else if (!opt.sections.empty()) {
        const auto points = load_section_points(opt.sections, job.fan.dimension);
        const auto body = newton_body_of_sections(points, Int(opt.level), &D);
        lct = lct_newton_body(D, body);
    } else {
        throw ParseError("lct requires --point or --sections");
    }
    emit(to_json(lct), opt.pretty);
    return 0;
}

int cmd_alpha(const Options& opt) {
    const JobDocument job = load_job(opt);
    const auto D = resolve_divisor(job);
    const auto G = resolve_group(job.fan, job.group);
    const auto result = alpha(D, G);
    json report = to_json(result);
    if (opt.fano) {
        const Rat closed = alpha_fano(job.fan, G);  // self-asserts equality
        report["fano_formula"] = format_rational(closed);
    }
    const long long oracle = opt.oracle > 0 ? opt.oracle : env_or("TORALPHA_ORACLE_DENOM", 0);
    if (oracle > 0) {
        const auto grid = grid_oracle_min(D, G, Int(oracle));
        const Rat gap = grid.min_lct - result.alpha;
        if (gap < 0) throw ContractError("grid oracle found a value below alpha");
        report["oracle"] = {{"denominator", oracle},
                            {"min_lct", format_rational(grid.min_lct)},
                            {"gap", format_rational(gap)},
                            {"points_checked", grid.points_checked}};
    }
    emit(report, opt.pretty);
    return 0;
}

int cmd_autos(const Options& opt) {
    const JobDocument job = load_job(opt);
    emit(to_json(automorphism_group(job.fan)), opt.pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact log canonical thresholds and alpha-invariants on smooth complete toric manifolds"};
    app.require_subcommand(1);
    Options opt;
    opt.level = env_or("TORALPHA_LEVEL", 1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", opt.file, "job document (fan JSON)")->required();
        sub->add_option("--group", opt.group_override, "group override: 'full' or a JSON file");
        sub->add_flag("--pretty", opt.pretty, "indented output");
    };
    auto* validate = app.add_subcommand("validate", "check fan axioms, smoothness, completeness");
    add_common(validate);
    auto* info = app.add_subcommand("info", "divisor positivity, support vectors, polytope");
    add_common(info);
    auto* lct = app.add_subcommand("lct", "log canonical threshold of a point or sections metric");
    add_common(lct);
    lct->add_option("--point", opt.point, "rational point, e.g. \"1/2,1/2\"");
    lct->add_option("--sections", opt.sections, "JSON file with lattice section points");
    lct->add_option("--level", opt.level, "level m of the linear system");
    auto* alpha_cmd = app.add_subcommand("alpha", "alpha-invariant of the (G-invariant) divisor");
    add_common(alpha_cmd);
    alpha_cmd->add_flag("--fano", opt.fano, "cross-check with the anticanonical closed form");
    alpha_cmd->add_option("--oracle", opt.oracle, "grid-oracle denominator bound");
    auto* autos = app.add_subcommand("autos", "fan automorphism group");
    add_common(autos);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (info->parsed()) return cmd_info(opt);
        if (lct->parsed()) return cmd_lct(opt);
        if (alpha_cmd->parsed()) return cmd_alpha(opt);
        if (autos->parsed()) return cmd_autos(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const InvarianceError& e) {
        std::cerr << "invariance error: " << e.what() << "\n";
        return kExitInvariance;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
