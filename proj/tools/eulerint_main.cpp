#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eulerint/document.hpp"
#include "eulerint/morse.hpp"
#include "eulerint/planar.hpp"
#include "eulerint/render.hpp"
#include "eulerint/sensor.hpp"
#include "eulerint/transforms.hpp"

using namespace eulerint;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_value(const Rat& v) {
    std::cout << rat_str(v) << "\n~ " << rat_double(v) << "\n";
}

RatVec parse_xi(const std::string& s) {
    RatVec xi;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) xi.push_back(rat_parse(item));
    require(!xi.empty(), Err::ParseError, "empty direction");
    return xi;
}

int run_integrate(const std::string& file, const std::string& measure,
                  const std::string& method) {
    Document doc = parse_document(slurp(file));
    require(doc.has_function(), Err::IncompatibleMethod, "document carries no function");

    if (measure == "dchi") {
        CFun h = doc.as_cfun();
        long long v;
        if (method == "closed")
            v = integrate_cf(h);
        else if (method == "levelset")
            v = integrate_cf_levelset(h);
        else
            fail(Err::IncompatibleMethod, "dchi supports methods closed and levelset");
        print_value(rat_ll(v));
        return 0;
    }

    Measure m;
    if (measure == "floor")
        m = Measure::Floor;
    else if (measure == "ceil")
        m = Measure::Ceil;
    else if (measure == "avg")
        m = Measure::Avg;
    else
        fail(Err::ParseError, "unknown measure '" + measure + "'");

    DefFun h = doc.as_deffun();
    if (method == "closed") {
        print_value(integrate(h, m));
    } else if (method == "levelset") {
        print_value(integrate_levelset(h, m));
    } else if (method.rfind("riemann:", 0) == 0) {
        long long n = 0;
        try {
            n = std::stoll(method.substr(8));
        } catch (...) {
            fail(Err::ParseError, "riemann:<n> needs an integer n");
        }
        require(n >= 1, Err::ParseError, "riemann:<n> needs n >= 1");
        print_value(riemann_oracle(h, n, m));
        std::cout << "bound " << rat_str(rat_ll(h.K->cell_count()) / rat_ll(n)) << "\n";
    } else if (method == "morse") {
        if (m == Measure::Floor)
            print_value(integrate_via_index(h, IndexKind::Coindex));
        else if (m == Measure::Ceil)
            print_value(integrate_via_index(h, IndexKind::Index));
        else
            print_value((integrate_via_index(h, IndexKind::Coindex) +
                         integrate_via_index(h, IndexKind::Index)) /
                        2);
    } else if (method == "betti0") {
        require(m == Measure::Floor, Err::IncompatibleMethod,
                "betti0 evaluates the floor measure only");
        PlanarWindow W = make_planar_window(doc.K);
        print_value(integrate_betti0(W, h));
    } else if (method == "pushline") {
        print_value(pushforward_to_line(h, m));
    } else {
        fail(Err::ParseError, "unknown method '" + method + "'");
    }
    return 0;
}

int run_transform(const std::string& file, const std::string& op,
                  const std::vector<std::string>& xi_args, const std::string& out_path) {
    Document doc = parse_document(slurp(file));
    require(doc.has_function(), Err::IncompatibleMethod, "document carries no function");

    if (op == "dual" || op == "link") {
        DefFun h = doc.as_deffun();
        DefFun result = (op == "dual") ? dual(h) : link(h);
        std::string text = serialize_document(document_from_deffun(result));
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
        return 0;
    }
    if (op == "width" || op == "centroid") {
        require(doc.kind == Document::Kind::CellValues, Err::NotConstructibleIntegrand,
                "kernel transforms need a constructible (cell_values) integrand");
        CFun h = doc.as_cfun();
        require(!xi_args.empty(), Err::ParseError, "--xi required");
        std::vector<RatVec> xis;
        for (const std::string& s : xi_args) xis.push_back(parse_xi(s));
        auto vals = kernel_transform(h, xis, op == "width" ? KernelMode::Width : KernelMode::Avg);
        for (std::size_t i = 0; i < xis.size(); ++i) {
            std::cout << "xi=";
            for (std::size_t a = 0; a < xis[i].size(); ++a)
                std::cout << (a ? "," : "") << rat_str(xis[i][a]);
            std::cout << " value=" << rat_str(vals[i]) << "\n";
        }
        return 0;
    }
    fail(Err::ParseError, "unknown transform '" + op + "'");
}

ExperimentConfig parse_sensor_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Err::ParseError, e.what());
    }
    try {
        ExperimentConfig cfg;
        const auto& grid = j.at("grid");
        cfg.nx = grid.at("nx").get<int>();
        cfg.ny = grid.at("ny").get<int>();
        cfg.x_range = {rat_parse(grid.at("x_range")[0].get<std::string>()),
                       rat_parse(grid.at("x_range")[1].get<std::string>())};
        cfg.y_range = {rat_parse(grid.at("y_range")[0].get<std::string>()),
                       rat_parse(grid.at("y_range")[1].get<std::string>())};
        cfg.p = rat_parse(j.at("p").get<std::string>());
        if (j.contains("scene")) {
            const auto& scene = j["scene"];
            for (const auto& d : scene.value("disks", nlohmann::json::array()))
                cfg.scene.supports.push_back(Disk{rat_parse(d.at("center")[0].get<std::string>()),
                                                  rat_parse(d.at("center")[1].get<std::string>()),
                                                  rat_parse(d.at("radius").get<std::string>())});
            for (const auto& r : scene.value("rects", nlohmann::json::array()))
                cfg.scene.supports.push_back(
                    RectSupport{rat_parse(r.at("x0").get<std::string>()),
                                rat_parse(r.at("y0").get<std::string>()),
                                rat_parse(r.at("x1").get<std::string>()),
                                rat_parse(r.at("y1").get<std::string>())});
        }
        for (const auto& d : j.value("holes", nlohmann::json::array()))
            cfg.holes.push_back(Disk{rat_parse(d.at("center")[0].get<std::string>()),
                                     rat_parse(d.at("center")[1].get<std::string>()),
                                     rat_parse(d.at("radius").get<std::string>())});
        for (const auto& s : j.value("seeds", nlohmann::json::array()))
            cfg.seeds.push_back(s.get<std::uint64_t>());
        const std::string mode = j.value("estimator", std::string("continuous"));
        if (mode == "continuous")
            cfg.mode = EstimatorMode::Continuous;
        else if (mode == "usc")
            cfg.mode = EstimatorMode::Usc;
        else if (mode == "lsc")
            cfg.mode = EstimatorMode::Lsc;
        else
            fail(Err::ConfigError, "unknown estimator '" + mode + "'");
        cfg.divisor = j.value("divisor", 1);
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        fail(Err::ParseError, e.what());
    }
}

int run_sensor(const std::string& config_path, int seeds_flag, const std::string& out_csv,
               const std::string& render_dir) {
    ExperimentConfig cfg = parse_sensor_config(slurp(config_path));
    if (seeds_flag > 0) {
        cfg.seeds.clear();
        for (int s = 0; s < seeds_flag; ++s) cfg.seeds.push_back(static_cast<std::uint64_t>(s));
    }
    require(!cfg.seeds.empty(), Err::ConfigError, "no seeds given (config or --seeds)");

    ExperimentReport report = run_experiment(cfg);

    std::ostringstream csv;
    csv << "seed,truth,raw_estimate,smoothed_estimate\n";
    for (const SeedReport& r : report.rows)
        csv << r.seed << "," << r.truth << "," << rat_str(r.raw_estimate) << ","
            << rat_str(r.smoothed_estimate) << "\n";
    csv << "median_estimate," << report.rows.front().truth << ","
        << rat_str(report.median_raw_estimate) << "," << rat_str(report.median_smoothed_estimate)
        << "\n";
    csv << "median_abs_error,," << rat_str(report.median_raw_abs_error) << ","
        << rat_str(report.median_smoothed_abs_error) << "\n";
    if (out_csv.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_csv);
        out << csv.str();
    }

    if (!render_dir.empty()) {
        std::filesystem::create_directories(render_dir);
        SensorNetwork net = make_network(cfg.nx, cfg.ny, cfg.x_range, cfg.y_range, cfg.holes);
        std::vector<long long> truth_counts = synthesize_counts(cfg.scene, net);
        for (const std::uint64_t seed : cfg.seeds) {
            CorruptResult cr = corrupt(truth_counts, cfg.p, seed);
            for (int v = 0; v < net.node_count(); ++v)
                if (net.hole[v]) {
                    cr.values[v] = 0;
                    cr.confidence[v] = 0;
                }
            RatVec raw(net.node_count());
            for (int v = 0; v < net.node_count(); ++v) raw[v] = rat_ll(cr.values[v]);
            RatVec smoothed = smooth(raw, cr.confidence, net);
            const std::string base = render_dir + "/";
            write_field_pgm(base + "raw_" + std::to_string(seed) + ".pgm", net, raw);
            write_field_pgm(base + "smoothed_" + std::to_string(seed) + ".pgm", net, smoothed);
            write_network_svg(base + "network_" + std::to_string(seed) + ".svg", net, raw);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler-characteristic integration of constructible and PL integrands"};
    app.require_subcommand(1);

    std::string file, measure = "floor", method = "closed";
    auto* cmd_int = app.add_subcommand("integrate", "integrate a function document");
    cmd_int->add_option("file", file)->required();
    cmd_int->add_option("--measure", measure)
        ->check(CLI::IsMember({"floor", "ceil", "avg", "dchi"}));
    cmd_int->add_option("--method", method);

    std::string tfile, op;
    std::vector<std::string> xi_args;
    std::string out_path;
    auto* cmd_tr = app.add_subcommand("transform", "duality / link / kernel transforms");
    cmd_tr->add_option("file", tfile)->required();
    cmd_tr->add_option("--op", op)->required()
        ->check(CLI::IsMember({"dual", "link", "width", "centroid"}));
    cmd_tr->add_option("--xi", xi_args);
    cmd_tr->add_option("--out", out_path);

    std::string config_path, out_csv, render_dir;
    int seeds_flag = 0;
    auto* cmd_sn = app.add_subcommand("sensor", "target-counting experiment");
    cmd_sn->add_option("config", config_path)->required();
    cmd_sn->add_option("--seeds", seeds_flag);
    cmd_sn->add_option("--out", out_csv);
    cmd_sn->add_option("--render", render_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_int->parsed()) return run_integrate(file, measure, method);
        if (cmd_tr->parsed()) return run_transform(tfile, op, xi_args, out_path);
        if (cmd_sn->parsed()) return run_sensor(config_path, seeds_flag, out_csv, render_dir);
    } catch (const EulerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Err::ParseError ? 2 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
