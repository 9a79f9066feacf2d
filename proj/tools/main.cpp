#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "okbody/json_io.hpp"
#include "okbody/svg.hpp"
#include "verify.hpp"

namespace {

using okb::Json;

Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) okb::fail("IOError", "cannot read " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return Json::parse(text);
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) okb::fail("IOError", "cannot write " + out_path);
    out << j.dump(2) << "\n";
}

std::vector<okb::Rational> parse_samples(const std::string& list) {
    std::vector<okb::Rational> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(okb::Rational::parse(item));
    }
    if (out.empty()) okb::fail("ParseError", "empty sample list");
    return out;
}

okb::OkounkovPolygon translate_canonical(okb::OkounkovPolygon poly) {
    const okb::QuadNum shift(poly.nu);
    for (auto& b : poly.breakpoints) b -= shift;
    for (auto& [t, y] : poly.vertices) t -= shift;
    poly.mu -= shift;
    poly.nu = okb::Rational(0);
    return poly;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Zariski decompositions, Okounkov polygons and slice "
                 "bodies of divisors on surface models"};
    app.require_subcommand(1);

    std::string surface_arg, divisor_arg, flag_arg, polygon_arg, input_arg;
    std::string path_arg, curve_arg, samples_arg, model_arg;
    std::string svg_path, out_path, example_name;
    bool canonical = false;

    auto* validate = app.add_subcommand("validate", "check a surface model");
    validate->add_option("--surface", surface_arg, "surface JSON (path or inline)")
        ->required();

    auto* decompose = app.add_subcommand("decompose", "Zariski decomposition");
    decompose->add_option("--surface", surface_arg)->required();
    decompose->add_option("--divisor", divisor_arg, "class vector JSON")->required();
    decompose->add_option("-o,--output", out_path);

    auto* walk = app.add_subcommand("walk", "decomposition along D - tC");
    walk->add_option("--surface", surface_arg)->required();
    walk->add_option("--divisor", divisor_arg)->required();
    walk->add_option("--flag", flag_arg, "flag JSON (path or inline)")->required();
    walk->add_option("-o,--output", out_path);

    auto* body = app.add_subcommand("body", "Okounkov polygon of a divisor");
    body->add_option("--surface", surface_arg)->required();
    body->add_option("--divisor", divisor_arg)->required();
    body->add_option("--flag", flag_arg)->required();
    body->add_option("--svg", svg_path, "also draw the polygon");
    body->add_flag("--translate-canonical", canonical, "translate t by -nu");
    body->add_option("-o,--output", out_path);

    auto* realize = app.add_subcommand("realize", "fan + divisor realizing a polygon");
    realize->add_option("--polygon", polygon_arg, "polygon JSON")->required();
    realize->add_option("-o,--output", out_path);

    auto* toric_body = app.add_subcommand("toric-body", "polygon of a toric divisor");
    toric_body->add_option("--input", input_arg, "fan + coefficients + flag_rays JSON")
        ->required();
    toric_body->add_option("--svg", svg_path);
    toric_body->add_option("-o,--output", out_path);

    auto* slice = app.add_subcommand("slice", "three-fold slice body data");
    slice->add_option("--model", model_arg, "built-in model name (exe|k3|y1)");
    slice->add_option("--surface", surface_arg, "or an explicit surface JSON");
    slice->add_option("--path", path_arg, "{\"v0\":...,\"w\":...,\"range\":[lo,hi]}")
        ->required();
    slice->add_option("--curve", curve_arg, "flag curve class vector")->required();
    slice->add_option("--samples", samples_arg, "comma-separated rational r values")
        ->required();
    slice->add_option("--svg", svg_path);
    slice->add_option("-o,--output", out_path);

    auto* examples = app.add_subcommand("examples", "built-in worked models");
    examples->add_option("name", example_name, "fano or k3")->required();

    app.add_subcommand("verify", "run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // malformed invocation
    }

    if (validate->parsed()) {
        const auto s = okb::surface_from_json(read_json_arg(surface_arg));
        const auto violations = okb::validate_surface(s);
        Json j;
        j["valid"] = violations.empty();
        j["violations"] = violations;
        write_output(j, out_path);
        return violations.empty() ? 0 : 1;
    }
    if (decompose->parsed()) {
        const auto s = okb::surface_from_json(read_json_arg(surface_arg));
        const auto d = okb::vecq_from_json(read_json_arg(divisor_arg));
        write_output(okb::to_json(okb::zariski_decompose(s, d)), out_path);
        return 0;
    }
    if (walk->parsed()) {
        const auto s = okb::surface_from_json(read_json_arg(surface_arg));
        const auto d = okb::vecq_from_json(read_json_arg(divisor_arg));
        const auto flag = okb::flag_from_json(read_json_arg(flag_arg));
        write_output(okb::to_json(okb::segment_walk(s, d, flag)), out_path);
        return 0;
    }
    if (body->parsed()) {
        const auto s = okb::surface_from_json(read_json_arg(surface_arg));
        const auto d = okb::vecq_from_json(read_json_arg(divisor_arg));
        const auto flag = okb::flag_from_json(read_json_arg(flag_arg));
        okb::OkounkovPolygon poly = okb::okounkov_polygon(s, d, flag);
        if (canonical) poly = translate_canonical(std::move(poly));
        if (!svg_path.empty()) okb::emit_svg_polygon(poly.vertices, svg_path);
        write_output(okb::to_json(poly), out_path);
        return 0;
    }
    if (realize->parsed()) {
        const auto poly = okb::polyq_from_json(read_json_arg(polygon_arg));
        write_output(okb::to_json(okb::realize_polygon(poly)), out_path);
        return 0;
    }
    if (toric_body->parsed()) {
        const auto in = okb::toric_body_input_from_json(read_json_arg(input_arg));
        okb::validate_fan(in.fan);
        const okb::PolyQ poly = okb::okounkov_via_psi(in.fan, in.a, in.i1, in.i2);
        if (!svg_path.empty()) okb::emit_svg_polygon(okb::to_vertex_list(poly), svg_path);
        write_output(okb::to_json(poly), out_path);
        return 0;
    }
    if (slice->parsed()) {
        okb::SurfaceModel s;
        const auto builtin = okb::builtin_models();
        if (model_arg == "exe") s = builtin.exe;
        else if (model_arg == "k3") s = builtin.k3;
        else if (model_arg == "y1") s = builtin.y1;
        else if (!surface_arg.empty()) s = okb::surface_from_json(read_json_arg(surface_arg));
        else okb::fail("ParseError", "need --model exe|k3|y1 or --surface");
        const auto path = okb::path_from_json(read_json_arg(path_arg));
        const auto curve = okb::vecq_from_json(read_json_arg(curve_arg));
        const auto body_data =
            okb::assemble_slice_body(s, path, curve, parse_samples(samples_arg));
        const auto cert = okb::nonpolyhedrality_certificate(body_data);
        if (!svg_path.empty()) okb::emit_svg_slice(body_data, svg_path);
        write_output(okb::slice_to_json(body_data, cert), out_path);
        return 0;
    }
    if (examples->parsed()) {
        const auto m = okb::builtin_models();
        Json j;
        if (example_name == "fano") {
            j["model"] = okb::to_json(m.exe);
            j["path"] = {{"v0", okb::to_json(m.fano_path.v0)},
                         {"w", okb::to_json(m.fano_path.w)},
                         {"range", Json::array({m.fano_path.r_lo.str(),
                                                m.fano_path.r_hi.str()})}};
            j["flag_curve"] = okb::to_json(m.fano_c);
            std::vector<okb::Rational> grid;
            for (long k = 0; k <= 20; ++k) grid.emplace_back(k, 20);
            const auto body_data =
                okb::assemble_slice_body(m.exe, m.fano_path, m.fano_c, grid);
            const auto cert = okb::nonpolyhedrality_certificate(body_data);
            j["slice"] = okb::slice_to_json(body_data, cert);
        } else if (example_name == "k3") {
            j["model"] = okb::to_json(m.k3);
            const okb::DivisorClass d = {okb::Rational(1), okb::Rational(0),
                                         okb::Rational(0)};
            const okb::DivisorClass c = {okb::Rational(2), okb::Rational(1),
                                         okb::Rational(1)};
            j["divisor"] = okb::to_json(d);
            j["flag_curve"] = okb::to_json(c);
            j["mu"] = okb::to_json(okb::mu(m.k3, d, c));
            const auto cert = okb::mu_quadratic_certificate(m.k3, d, c);
            j["mu_certificate"] =
                Json::array({cert.A.str(), cert.B.str(), cert.C.str()});
            j["y1_model"] = okb::to_json(m.y1);
            std::vector<okb::Rational> grid;
            for (long k = 0; k <= 8; ++k) grid.emplace_back(k, 32);
            const auto body_data =
                okb::assemble_slice_body(m.y1, m.y1_path, m.y1_c, grid);
            const auto cert2 = okb::nonpolyhedrality_certificate(body_data);
            j["y1_slice"] = okb::slice_to_json(body_data, cert2);
        } else {
            okb::fail("ParseError", "unknown example '" + example_name + "'");
        }
        write_output(j, out_path);
        return 0;
    }
    // verify
    const auto results = okb::verify::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  —  "
                  << r.detail << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const okb::DomainError& e) {
        Json j;
        j["error"] = e.code();
        j["detail"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return (e.code() == "ParseError" || e.code() == "IOError") ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        Json j;
        j["error"] = "ParseError";
        j["detail"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json j;
        j["error"] = "InternalError";
        j["detail"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 1;
    }
}
