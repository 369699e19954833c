#include <algorithm>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "windiso/errors.hpp"
#include "windiso/families.hpp"
#include "windiso/io.hpp"
#include "windiso/winding.hpp"
#include "windiso/young.hpp"

namespace {

// Exit codes: 0 pass, 1 inequality fail, 2 usage/domain error, 3 certified
// bound violated (a bug, never an input problem).
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

void emit(const std::string& path, const std::string& data) {
    if (path == "-") {
        std::fwrite(data.data(), 1, data.size(), stdout);
    } else {
        windiso::write_file(path, data);
    }
}

struct GenArgs {
    std::string family;
    std::size_t n = 4;
    std::uint64_t seed = 0;
    std::string scale = "1";
    std::size_t step = 0;
    std::string output = "-";
};

int run_gen(const GenArgs& args) {
    auto fam = windiso::family_from_name(args.family);
    if (!fam) {
        std::cerr << "unknown family: " << args.family << "\n";
        return kExitUsage;
    }
    windiso::FamilySpec spec;
    spec.family = *fam;
    spec.n = args.n;
    spec.seed = args.seed;
    spec.scale = windiso::Rational::parse(args.scale);
    spec.step = args.step;
    windiso::ClosedCurve curve = windiso::generate(spec);
    emit(args.output, windiso::curve_to_json(curve));
    return kExitPass;
}

struct CheckArgs {
    std::string curve_path;
    double p = 1.0;
    double q = 1.0;
    double guard = 0.05;
    std::string output;
};

int run_check(const CheckArgs& args) {
    if (!(args.p >= 1.0 && args.p < 2.0)) {
        std::cerr << "p must be in [1, 2)\n";
        return kExitUsage;
    }
    if (!(args.q >= 1.0 && args.q < 2.0 / args.p - args.guard)) {
        std::cerr << "q must be in [1, 2/p - guard) = [1, " << (2.0 / args.p - args.guard)
                  << ")\n";
        return kExitUsage;
    }
    windiso::ClosedCurve curve = windiso::curve_from_json(windiso::read_file(args.curve_path));
    windiso::InequalityReport report =
        windiso::check_inequality(curve, windiso::BoundParams{args.p, args.q});
    std::string doc = windiso::report_to_json(report);
    if (!args.output.empty()) {
        windiso::write_file(args.output, doc);
    } else {
        std::fwrite(doc.data(), 1, doc.size(), stdout);
    }
    if (!report.pass) {
        std::cerr << "bound FAILED: lhs=" << report.lhs << " rhs=" << report.rhs << "\n";
        return kExitFail;
    }
    return kExitPass;
}

struct FieldArgs {
    std::string curve_path;
    std::string output;
    std::string heatmap;
    std::vector<int> resolution = {64, 64};
};

int run_field(const FieldArgs& args) {
    windiso::ClosedCurve curve = windiso::curve_from_json(windiso::read_file(args.curve_path));
    bool wrote = false;
    if (!args.heatmap.empty()) {
        windiso::write_file(args.heatmap,
                            windiso::render_heatmap(curve, args.resolution[0], args.resolution[1]));
        wrote = true;
    }
    if (!args.output.empty() || !wrote) {
        windiso::WindingField field = windiso::winding_field(curve);
        emit(args.output.empty() ? "-" : args.output, windiso::field_to_json(field));
    }
    return kExitPass;
}

struct SweepArgs {
    std::string config_path;
    bool acceptance = false;
    std::string output = "-";
    int threads = 0;
    double rhs_scale = 1.0;
};

int run_sweep(const SweepArgs& args) {
    windiso::SweepConfig config;
    if (!args.config_path.empty()) {
        config = windiso::sweep_config_from_json(windiso::read_file(args.config_path));
    } else if (args.acceptance) {
        config = windiso::acceptance_config();
    } else {
        std::cerr << "sweep: pass --config FILE or --acceptance\n";
        return kExitUsage;
    }
    std::vector<windiso::SweepRow> rows = windiso::sweep(config, args.rhs_scale, args.threads);
    emit(args.output, windiso::sweep_csv(rows));

    int failures = 0;
    double max_ratio = 0.0;
    for (const windiso::SweepRow& row : rows) {
        max_ratio = std::max(max_ratio, row.report.ratio);
        if (!row.report.pass) {
            ++failures;
            std::cerr << "FAIL " << windiso::family_name(row.spec.family) << " n=" << row.spec.n
                      << " seed=" << row.spec.seed << " p=" << row.report.params.p
                      << " q=" << row.report.params.q << " lhs=" << row.report.lhs
                      << " rhs=" << row.report.rhs << "\n";
        }
    }
    std::cerr << "sweep: " << rows.size() << " triples, " << failures
              << " failures, max ratio " << max_ratio << "\n";
    return failures == 0 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"winding-number L^q bound toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a curve document");
    gen->add_option("--family", gen_args.family, "family name")->required();
    gen->add_option("--n", gen_args.n, "size parameter");
    gen->add_option("--seed", gen_args.seed, "PRNG seed");
    gen->add_option("--scale", gen_args.scale, "exact scale factor (rational or decimal)");
    gen->add_option("--step", gen_args.step, "star stride (0 = auto)");
    gen->add_option("-o,--output", gen_args.output, "output path (- for stdout)");

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "verify the L^q bound for one curve");
    check->add_option("curve", check_args.curve_path, "curve document path")->required();
    check->add_option("--p", check_args.p, "variation exponent in [1,2)")->required();
    check->add_option("--q", check_args.q, "norm exponent in [1, 2/p - guard)")->required();
    check->add_option("--guard", check_args.guard, "pole guard on 2/p (default 0.05)");
    check->add_option("-o,--output", check_args.output, "report path (default stdout)");

    FieldArgs field_args;
    CLI::App* field = app.add_subcommand("field", "compute the winding field");
    field->add_option("curve", field_args.curve_path, "curve document path")->required();
    field->add_option("-o,--output", field_args.output, "field document path");
    field->add_option("--heatmap", field_args.heatmap, "write a P6 heatmap here");
    field->add_option("--resolution", field_args.resolution, "heatmap W H")->expected(2);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "run a (p, q) verification sweep");
    sweep->add_option("--config", sweep_args.config_path, "sweep config document");
    sweep->add_flag("--acceptance", sweep_args.acceptance, "use the built-in corpus");
    sweep->add_option("-o,--output", sweep_args.output, "CSV path (- for stdout)");
    sweep->add_option("--threads", sweep_args.threads, "OpenMP threads (0 = default)");
    sweep->add_option("--rhs-scale", sweep_args.rhs_scale,
                      "debug: multiply rhs (self-test of the fail path)");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(gen_args);
        if (check->parsed()) return run_check(check_args);
        if (field->parsed()) return run_field(field_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const windiso::TheoremViolationError& e) {
        std::cerr << "CERTIFIED BOUND VIOLATED: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
