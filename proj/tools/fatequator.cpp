// Command-line front end: exact strip/cap geometry, concentration bounds,
// Monte Carlo experiments on minimal instances, dimension sweeps with CSV
// and SVG output, and the self-verification suite.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fatequator/fatequator.hpp"

namespace {

using namespace fatequator;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Instance = std::variant<GreatSubsphere, CliffordTorus, ProductSubmersion>;

int ambient_dim(const Instance& inst) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ProductSubmersion>)
                return v.base_dim;
            else
                return v.ambient_dim();
        },
        inst);
}

int intrinsic_dim(const Instance& inst) {
    return std::visit(
        [](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ProductSubmersion>)
                return v.base_dim + 1;
            else
                return v.intrinsic_dim();
        },
        inst);
}

long long parse_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " from '" + token + "'");
    }
}

double parse_real(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " from '" + token + "'");
    }
}

// instance grammar: subsphere m n | torus m1,m2,... | submersion n delta
Instance parse_instance(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UsageError("missing instance spec");
    const std::string& family = tokens[0];
    if (family == "subsphere") {
        if (tokens.size() != 3) throw UsageError("usage: subsphere <m> <n>");
        return GreatSubsphere(static_cast<int>(parse_int(tokens[1], "m")),
                              static_cast<int>(parse_int(tokens[2], "n")));
    }
    if (family == "torus") {
        if (tokens.size() != 2) throw UsageError("usage: torus <m1,m2,...>");
        std::vector<int> dims;
        std::stringstream ss(tokens[1]);
        std::string part;
        while (std::getline(ss, part, ','))
            dims.push_back(static_cast<int>(parse_int(part, "factor dimension")));
        return CliffordTorus(dims);
    }
    if (family == "submersion") {
        if (tokens.size() != 3) throw UsageError("usage: submersion <n> <delta>");
        return ProductSubmersion(static_cast<int>(parse_int(tokens[1], "n")),
                                 parse_real(tokens[2], "delta"));
    }
    throw UsageError("unknown instance family '" + family +
                     "' (expected subsphere | torus | submersion)");
}

std::string instance_label(const std::vector<std::string>& tokens) {
    std::string label;
    for (const auto& t : tokens) {
        if (!label.empty()) label += ' ';
        label += t;
    }
    // labels land in a CSV column; 'torus 1,1' must not split it
    for (char& c : label)
        if (c == ',') c = 'x';
    return label;
}

// p grammar: axis<k> | random | span-random
SpherePoint resolve_point(const std::string& spec, const Instance& inst, std::uint64_t seed) {
    const int n = ambient_dim(inst);
    if (spec.rfind("axis", 0) == 0) {
        const long long k = parse_int(spec.substr(4), "axis index");
        if (k < 0 || k > n) throw UsageError("axis index out of range for the ambient sphere");
        return SpherePoint::axis(n, static_cast<int>(k));
    }
    if (spec == "random") {
        auto gen = SeedStream{seed, 1}.generator();
        std::vector<double> v(static_cast<std::size_t>(n) + 1);
        sample_unit_sphere_into(gen, v);
        return SpherePoint(std::move(v));
    }
    if (spec == "span-random") {
        const auto* sub = std::get_if<GreatSubsphere>(&inst);
        if (sub == nullptr) throw UsageError("span-random requires a subsphere instance");
        auto gen = SeedStream{seed, 2}.generator();
        std::vector<double> coeffs(static_cast<std::size_t>(sub->intrinsic_dim()) + 1);
        fill_gaussian(gen, coeffs);
        return sub->span_point(coeffs);
    }
    throw UsageError("unknown p spec '" + spec + "' (expected axis<k> | random | span-random)");
}

std::optional<double> closed_form_occupancy(const Instance& inst, const SpherePoint& p,
                                            double epsilon) {
    return std::visit(
        [&](const auto& v) -> std::optional<double> {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ProductSubmersion>)
                return strip_fraction(v.base_dim, epsilon);
            else
                return exact_strip_occupancy(v, p, epsilon);
        },
        inst);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write to '" + path + "' failed");
}

void emit(const CsvDocument& doc, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(doc.text().c_str(), stdout);
    else
        write_file(out_path, doc.text());
}

// ---------------------------------------------------------------------------

struct GeometryArgs {
    long long n = 0;
    double angle = 0.0;
    double delta = 15.0 / 32.0;
    std::optional<double> lambda1, a, c1, c2;
    std::uint64_t seed = 42;  // accepted for flag uniformity; output is exact
    std::string out;
};

void report_rows(CsvDocument& doc, const char* kind, const BoundReport& report,
                 const BoundParams& params) {
    for (const auto& row : report.bound_values) {
        CsvRow r;
        r.kind = kind;
        r.n = report.dimension;
        if (row.bound_name.rfind("main", 0) == 0) r.m = report.dimension;
        r.epsilon = report.epsilon;
        r.delta = row.delta;
        r.exact_fraction = row.exact;
        r.bound_name = row.bound_name;
        r.bound_value = row.value;
        r.slack = row.slack;
        doc.add(r);
    }
    (void)params;
}

int cmd_strip(const GeometryArgs& args) {
    const BoundParams params{args.delta, args.lambda1, args.a, args.c1, args.c2};
    const auto report = bound_report(static_cast<int>(args.n), args.angle, params);
    CsvDocument doc;
    report_rows(doc, "strip", report, params);
    emit(doc, args.out);
    return kExitOk;
}

int cmd_cap(const GeometryArgs& args) {
    CsvRow row;
    row.kind = "cap";
    row.n = args.n;
    row.epsilon = args.angle;  // cap radius r
    row.exact_fraction = cap_fraction(static_cast<int>(args.n), args.angle);
    CsvDocument doc;
    doc.add(row);
    emit(doc, args.out);
    return kExitOk;
}

int cmd_bounds(const GeometryArgs& args) {
    const BoundParams params{args.delta, args.lambda1, args.a, args.c1, args.c2};
    params.validate();
    const int n = static_cast<int>(args.n);
    const double e = args.angle;
    CsvDocument doc;
    const auto add = [&](const std::string& name, double raw, std::optional<double> delta,
                         bool intrinsic_m) {
        CsvRow r;
        r.kind = "bound";
        r.n = n;
        if (intrinsic_m) r.m = n;
        r.epsilon = e;
        r.delta = delta;
        r.bound_name = name;
        r.bound_value = raw;  // raw formula value, may be negative (vacuous)
        doc.add(r);
    };
    add("fattening", fattening_bound(n, e), std::nullopt, false);
    add("equator", equator_bound(n, e), std::nullopt, false);
    if (args.delta > 0.0)
        add("mean_concentration", mean_concentration_bound(n, e, args.delta), args.delta, false);
    add("main1", main1_bound(n, e), std::nullopt, true);
    add("main2", main2_bound(n, e, args.delta), args.delta, true);
    const double best = main2_best_delta(n, e);
    add("main2_best", main2_bound(n, e, best), best, true);
    if (args.lambda1 && args.a)
        add("eigenvalue", eigenvalue_bound(e, *args.lambda1, *args.a), std::nullopt, false);
    if (args.c1 && args.c2 && n >= 2)
        add("yau", yau_bound(n, e, *args.c1, *args.c2), std::nullopt, false);
    emit(doc, args.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct McArgs {
    std::vector<std::string> instance_tokens;
    std::string p_spec = "random";
    double epsilon = 0.0;
    std::vector<double> deltas;
    double tol = 1e-9;
    int k_max = 10;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    unsigned workers = 0;
    std::string out;
};

int cmd_estimate(const McArgs& args) {
    const Instance inst = parse_instance(args.instance_tokens);
    const auto p = resolve_point(args.p_spec, inst, args.seed);
    const SeedStream stream{args.seed, 0};
    const std::string label = instance_label(args.instance_tokens);
    CsvDocument doc;

    if (const auto* sub = std::get_if<ProductSubmersion>(&inst)) {
        const auto est =
            estimate_submersion_occupancy(*sub, p, args.epsilon, args.samples, stream, args.workers);
        CsvRow row;
        row.kind = "estimate";
        row.n = sub->base_dim;
        row.m = intrinsic_dim(inst);
        row.epsilon = args.epsilon;
        row.exact_fraction = strip_fraction(sub->base_dim, args.epsilon);
        row.estimate = est.fraction;
        row.std_err = est.std_err;
        row.bound_name = label;
        row.samples = est.sample_count;
        row.seed = seed_descriptor(args.seed, 0);
        doc.add(row);
        CsvRow bnd;
        bnd.kind = "estimate";
        bnd.n = sub->base_dim;
        bnd.epsilon = args.epsilon;
        bnd.bound_name = "equator";
        bnd.bound_value = std::max(0.0, equator_bound(sub->base_dim, args.epsilon));
        bnd.slack = est.fraction - *bnd.bound_value;
        bnd.samples = est.sample_count;
        bnd.seed = seed_descriptor(args.seed, 0);
        doc.add(bnd);
        emit(doc, args.out);
        return kExitOk;
    }

    const auto run = [&](const auto& concrete) {
        const auto report = extrinsic_concentration_report(concrete, p, args.epsilon, args.samples,
                                                           stream, args.deltas, args.workers);
        CsvRow row;
        row.kind = "estimate";
        row.n = concrete.ambient_dim();
        row.m = concrete.intrinsic_dim();
        row.epsilon = args.epsilon;
        if (const auto exact = exact_strip_occupancy(concrete, p, args.epsilon))
            row.exact_fraction = exact;
        row.estimate = report.occupancy.fraction;
        row.std_err = report.occupancy.std_err;
        row.bound_name = label;
        row.samples = report.occupancy.sample_count;
        row.seed = seed_descriptor(args.seed, 0);
        doc.add(row);
        for (const auto& bound : report.rows) {
            CsvRow r;
            r.kind = "estimate";
            r.n = concrete.ambient_dim();
            r.m = concrete.intrinsic_dim();
            r.epsilon = args.epsilon;
            r.delta = bound.delta;
            r.bound_name = bound.bound_name;
            r.bound_value = bound.bound_clamped;
            r.slack = report.occupancy.fraction - bound.bound_clamped;
            r.samples = report.occupancy.sample_count;
            r.seed = seed_descriptor(args.seed, 0);
            doc.add(r);
        }
    };
    if (const auto* sub = std::get_if<GreatSubsphere>(&inst))
        run(*sub);
    else
        run(std::get<CliffordTorus>(inst));
    emit(doc, args.out);
    return kExitOk;
}

int cmd_two_piece(const McArgs& args) {
    const Instance inst = parse_instance(args.instance_tokens);
    const auto p = resolve_point(args.p_spec, inst, args.seed);
    const SeedStream stream{args.seed, 0};
    const auto verdict = std::visit(
        [&](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ProductSubmersion>) {
                // r_p = d_p o pi ignores the fiber, so the base law decides
                return two_piece_classify(UniformSphere(v.base_dim), p, args.samples, args.tol,
                                          stream, args.workers);
            } else {
                return two_piece_classify(v, p, args.samples, args.tol, stream, args.workers);
            }
        },
        inst);
    CsvDocument doc;
    const auto add = [&](const std::string& name, std::optional<double> value) {
        CsvRow r;
        r.kind = "two_piece";
        r.n = ambient_dim(inst);
        r.m = intrinsic_dim(inst);
        r.bound_name = name;
        r.bound_value = value;
        r.samples = args.samples;
        r.seed = seed_descriptor(args.seed, 0);
        doc.add(r);
    };
    add(std::string("verdict=") + to_string(verdict.verdict), std::nullopt);
    add("count_above_tol", static_cast<double>(verdict.above));
    add("count_below_tol", static_cast<double>(verdict.below));
    add("count_within_tol", static_cast<double>(verdict.within_tol));
    emit(doc, args.out);
    return kExitOk;
}

int cmd_moments(const McArgs& args) {
    const Instance inst = parse_instance(args.instance_tokens);
    const auto p = resolve_point(args.p_spec, inst, args.seed);
    const SeedStream stream{args.seed, 0};
    const int m = intrinsic_dim(inst);
    const auto moments = std::visit(
        [&](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, ProductSubmersion>) {
                return estimate_moments(UniformSphere(v.base_dim), p, args.k_max, args.samples,
                                        stream, args.workers);
            } else {
                return estimate_moments(v, p, args.k_max, args.samples, stream, args.workers);
            }
        },
        inst);
    // the submersion projects onto S^n, so its cos moments follow the base
    const int comparison_m = std::holds_alternative<ProductSubmersion>(inst)
                                 ? std::get<ProductSubmersion>(inst).base_dim
                                 : m;
    const auto verdicts = moment_domination_check(moments, comparison_m);
    CsvDocument doc;
    for (const auto& v : verdicts) {
        CsvRow r;
        r.kind = "moment";
        r.n = ambient_dim(inst);
        r.m = comparison_m;
        r.bound_name = "M_" + std::to_string(v.k);
        r.bound_value = v.limit;
        r.estimate = v.estimate;
        r.std_err = v.std_err;
        r.slack = v.limit + 4.0 * v.std_err - v.estimate;
        r.samples = args.samples;
        r.seed = seed_descriptor(args.seed, 0);
        doc.add(r);
    }
    emit(doc, args.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepConfig {
    long long n_min = 0, n_max = 0, n_step = 1;
    std::vector<double> epsilons;
    std::vector<double> deltas;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::string out;
    std::vector<std::vector<std::string>> instances;
    std::string p_spec = "axis0";
    bool svg = false;
};

std::vector<double> parse_real_list(const std::string& value, const char* what) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_real(part, what));
    return out;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    SweepConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "n_min")
            config.n_min = parse_int(value, "n_min");
        else if (key == "n_max")
            config.n_max = parse_int(value, "n_max");
        else if (key == "n_step")
            config.n_step = parse_int(value, "n_step");
        else if (key == "epsilon")
            config.epsilons = parse_real_list(value, "epsilon");
        else if (key == "delta")
            config.deltas = parse_real_list(value, "delta");
        else if (key == "samples")
            config.samples = static_cast<std::uint64_t>(parse_int(value, "samples"));
        else if (key == "seed")
            config.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
        else if (key == "out")
            config.out = value;
        else if (key == "p")
            config.p_spec = value;
        else if (key == "svg")
            config.svg = (value == "true" || value == "1");
        else if (key == "instances") {
            std::stringstream ss(value);
            std::string spec;
            while (std::getline(ss, spec, ';')) {
                std::vector<std::string> tokens;
                std::stringstream ts(spec);
                std::string token;
                while (ts >> token) tokens.push_back(token);
                if (!tokens.empty()) config.instances.push_back(std::move(tokens));
            }
        } else {
            throw UsageError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                             "'");
        }
    }
    if (config.n_min < 1 || config.n_max < config.n_min || config.n_step < 1)
        throw UsageError("config: need 1 <= n_min <= n_max and n_step >= 1");
    if (config.epsilons.empty()) throw UsageError("config: epsilon list must not be empty");
    if (config.deltas.empty()) config.deltas.push_back(15.0 / 32.0);
    return config;
}

std::string svg_path_for(const std::string& csv_path, std::size_t eps_index) {
    const auto dot = csv_path.find_last_of('.');
    const std::string stem = dot == std::string::npos ? csv_path : csv_path.substr(0, dot);
    return stem + "_eps" + std::to_string(eps_index) + ".svg";
}

int cmd_sweep(const SweepConfig& config) {
    CsvDocument doc;
    std::vector<std::vector<std::pair<double, double>>> exact_curves(config.epsilons.size());
    std::vector<std::vector<std::pair<double, double>>> equator_curves(config.epsilons.size());
    std::vector<std::vector<std::pair<double, double>>> main1_curves(config.epsilons.size());
    std::vector<std::vector<std::pair<double, double>>> main2_curves(config.epsilons.size());

    for (long long n = config.n_min; n <= config.n_max; n += config.n_step) {
        for (std::size_t ei = 0; ei < config.epsilons.size(); ++ei) {
            const double e = config.epsilons[ei];
            for (double d : config.deltas) {
                const BoundParams params{d, {}, {}, {}, {}};
                const auto report = bound_report(static_cast<int>(n), e, params);
                report_rows(doc, "strip", report, params);
            }
            const int ni = static_cast<int>(n);
            const double exact = strip_fraction(ni, e);
            exact_curves[ei].push_back({static_cast<double>(n), exact});
            equator_curves[ei].push_back({static_cast<double>(n), std::max(0.0, equator_bound(ni, e))});
            main1_curves[ei].push_back({static_cast<double>(n), std::max(0.0, main1_bound(ni, e))});
            main2_curves[ei].push_back(
                {static_cast<double>(n),
                 std::max(0.0, main2_bound(ni, e, main2_best_delta(ni, e)))});
        }
    }

    std::uint64_t stream_index = 1000;
    for (const auto& tokens : config.instances) {
        const Instance inst = parse_instance(tokens);
        const auto p = resolve_point(config.p_spec, inst, config.seed);
        const std::string label = instance_label(tokens);
        for (double e : config.epsilons) {
            const SeedStream stream{config.seed, stream_index++};
            OccupancyEstimate est;
            if (const auto* sub = std::get_if<ProductSubmersion>(&inst))
                est = estimate_submersion_occupancy(*sub, p, e, config.samples, stream);
            else if (const auto* sub2 = std::get_if<GreatSubsphere>(&inst))
                est = estimate_strip_occupancy(*sub2, p, e, config.samples, stream);
            else
                est = estimate_strip_occupancy(std::get<CliffordTorus>(inst), p, e, config.samples,
                                               stream);
            CsvRow row;
            row.kind = "estimate";
            row.n = ambient_dim(inst);
            row.m = intrinsic_dim(inst);
            row.epsilon = e;
            if (const auto exact = closed_form_occupancy(inst, p, e)) row.exact_fraction = exact;
            row.estimate = est.fraction;
            row.std_err = est.std_err;
            row.bound_name = label;
            row.samples = est.sample_count;
            row.seed = seed_descriptor(stream.root_seed, stream.stream_index);
            doc.add(row);
        }
    }

    if (config.out.empty()) throw UsageError("sweep: output path required (config out= or --out)");
    write_file(config.out, doc.text());

    if (config.svg) {
        for (std::size_t ei = 0; ei < config.epsilons.size(); ++ei) {
            SvgChart chart;
            chart.title = "strip fraction vs dimension, epsilon = " + format_double(config.epsilons[ei]);
            chart.x_label = "ambient dimension n";
            chart.y_label = "volume fraction";
            chart.series.push_back({"exact", kSvgPalette[0], exact_curves[ei]});
            chart.series.push_back({"equator bound", kSvgPalette[1], equator_curves[ei]});
            chart.series.push_back({"main1 bound", kSvgPalette[2], main1_curves[ei]});
            chart.series.push_back({"main2 best-delta bound", kSvgPalette[3], main2_curves[ei]});
            write_file(svg_path_for(config.out, ei), render_line_chart(chart));
        }
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string level = "quick";
    std::uint64_t seed = 42;
    unsigned workers = 0;
    std::string out;
    std::string inject_fault;
};

int cmd_verify(const VerifyArgs& args) {
    verify::Options options;
    if (args.level == "quick")
        options.level = verify::Level::quick;
    else if (args.level == "full")
        options.level = verify::Level::full;
    else
        throw UsageError("verify: level must be quick or full");
    options.seed = args.seed;
    options.workers = args.workers;
    options.inject_fault = args.inject_fault;

    const auto report = verify::run(options);
    for (const auto& check : report.checks) {
        std::string suffix;
        if (check.samples != 0) suffix = " N=" + std::to_string(check.samples);
        std::printf("%s  %-36s statistic=%.6g threshold=%.6g%s\n", check.pass ? "PASS" : "FAIL",
                    check.name.c_str(), check.statistic, check.threshold, suffix.c_str());
    }
    std::printf("%s: %zu checks, level=%s, seed=%llu\n",
                report.all_pass ? "verification passed" : "verification FAILED",
                report.checks.size(), args.level.c_str(),
                static_cast<unsigned long long>(args.seed));
    if (!args.out.empty()) write_file(args.out, report.csv);
    return report.all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equatorial concentration toolkit for high-dimensional spheres"};
    app.require_subcommand(1);

    GeometryArgs geo;
    McArgs mc;
    SweepConfig sweep;
    std::string sweep_config_path;
    bool sweep_svg_flag = false;
    std::optional<std::uint64_t> sweep_seed_override;
    std::optional<std::uint64_t> sweep_samples_override;
    std::string sweep_out_override;
    VerifyArgs ver;
    unsigned sweep_workers = 0;
    (void)sweep_workers;

    auto* strip = app.add_subcommand("strip", "exact strip fraction with every intrinsic bound");
    strip->add_option("n", geo.n, "ambient dimension")->required();
    strip->add_option("epsilon", geo.angle, "strip half-width in (0, pi/2)")->required();
    strip->add_option("--delta", geo.delta, "delta for the exponential bounds (default 15/32)");
    strip->add_option("--lambda1", geo.lambda1, "first Laplacian eigenvalue (eigenvalue row)");
    strip->add_option("--a", geo.a, "volume fraction a in (0,1] (eigenvalue row)");
    strip->add_option("--c1", geo.c1, "Yau bound constant c1");
    strip->add_option("--c2", geo.c2, "Yau bound constant c2");
    strip->add_option("--seed", geo.seed, "accepted on every command; exact output ignores it");
    strip->add_option("--out", geo.out, "write CSV here instead of stdout");

    auto* cap = app.add_subcommand("cap", "exact geodesic cap volume fraction");
    cap->add_option("n", geo.n, "ambient dimension")->required();
    cap->add_option("r", geo.angle, "cap radius in [0, pi]")->required();
    cap->add_option("--seed", geo.seed, "accepted on every command; exact output ignores it");
    cap->add_option("--out", geo.out, "write CSV here instead of stdout");

    auto* bounds = app.add_subcommand("bounds", "raw (unclamped) bound values");
    bounds->add_option("n", geo.n, "ambient dimension")->required();
    bounds->add_option("epsilon", geo.angle, "strip half-width in (0, pi/2)")->required();
    bounds->add_option("--delta", geo.delta, "delta for the exponential bounds (default 15/32)");
    bounds->add_option("--lambda1", geo.lambda1, "first Laplacian eigenvalue");
    bounds->add_option("--a", geo.a, "volume fraction a in (0,1]");
    bounds->add_option("--c1", geo.c1, "Yau bound constant c1");
    bounds->add_option("--c2", geo.c2, "Yau bound constant c2");
    bounds->add_option("--seed", geo.seed, "accepted on every command; exact output ignores it");
    bounds->add_option("--out", geo.out, "write CSV here instead of stdout");

    const auto add_mc_common = [&](CLI::App* cmd, bool with_epsilon) {
        cmd->add_option("instance", mc.instance_tokens,
                        "instance: subsphere <m> <n> | torus <m1,m2,...> | submersion <n> <delta>")
            ->required()
            ->expected(-1);
        cmd->add_option("--p", mc.p_spec, "center point: axis<k> | random | span-random");
        if (with_epsilon)
            cmd->add_option("--epsilon", mc.epsilon, "strip half-width in (0, pi/2)")->required();
        cmd->add_option("--samples", mc.samples, "Monte Carlo sample count");
        cmd->add_option("--seed", mc.seed, "root seed (reproducible byte-for-byte)");
        cmd->add_option("--workers", mc.workers, "worker threads (speed only, 0 = auto)");
        cmd->add_option("--out", mc.out, "write CSV here instead of stdout");
    };

    auto* estimate = app.add_subcommand("estimate", "Monte Carlo strip occupancy with bounds");
    add_mc_common(estimate, true);
    estimate->add_option("--delta", mc.deltas, "extra main2 delta rows (repeatable)");

    auto* two_piece = app.add_subcommand("two-piece", "two-piece position relative to E(p)");
    add_mc_common(two_piece, false);
    two_piece->add_option("--tol", mc.tol, "band half-width for cos r_p == 0 (default 1e-9)");

    auto* moments = app.add_subcommand("moments", "empirical cos moments vs sphere moments");
    add_mc_common(moments, false);
    moments->add_option("--k", mc.k_max, "highest moment order K (default 10)");

    auto* sweep_cmd = app.add_subcommand("sweep", "dimension sweep to CSV (+ optional SVG)");
    sweep_cmd->add_option("--config", sweep_config_path, "key=value config file")->required();
    sweep_cmd->add_option("--out", sweep_out_override, "override the config output path");
    sweep_cmd->add_flag("--svg", sweep_svg_flag, "also emit one SVG chart per epsilon");
    sweep_cmd->add_option("--seed", sweep_seed_override, "override the config seed");
    sweep_cmd->add_option("--samples", sweep_samples_override, "override the config sample count");
    sweep_cmd->add_option("--workers", mc.workers, "worker threads (speed only)");

    auto* verify_cmd = app.add_subcommand("verify", "run the named invariant suite");
    verify_cmd->add_option("--level", ver.level, "quick (N=1e4) or full (N=1e6)");
    verify_cmd->add_option("--seed", ver.seed, "root seed");
    verify_cmd->add_option("--workers", ver.workers, "worker threads (speed only)");
    verify_cmd->add_option("--out", ver.out, "write the per-check CSV artifact here");
    verify_cmd->add_option("--inject-fault", ver.inject_fault, "plant a known-bad fixture (testing)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (strip->parsed()) return cmd_strip(geo);
        if (cap->parsed()) return cmd_cap(geo);
        if (bounds->parsed()) return cmd_bounds(geo);
        if (estimate->parsed()) return cmd_estimate(mc);
        if (two_piece->parsed()) return cmd_two_piece(mc);
        if (moments->parsed()) return cmd_moments(mc);
        if (sweep_cmd->parsed()) {
            SweepConfig config = load_sweep_config(sweep_config_path);
            if (!sweep_out_override.empty()) config.out = sweep_out_override;
            if (sweep_svg_flag) config.svg = true;
            if (sweep_seed_override) config.seed = *sweep_seed_override;
            if (sweep_samples_override) config.samples = *sweep_samples_override;
            return cmd_sweep(config);
        }
        if (verify_cmd->parsed()) return cmd_verify(ver);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
    return kExitUsage;
}
