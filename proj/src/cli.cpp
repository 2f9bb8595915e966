#include "rnagrowth/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "rnagrowth/counting.hpp"
#include "rnagrowth/errors.hpp"
#include "rnagrowth/json_io.hpp"
#include "rnagrowth/models.hpp"
#include "rnagrowth/rational_io.hpp"
#include "rnagrowth/singularity.hpp"

namespace rnagrowth::cli {

namespace {

constexpr double kPublishedTolerance = 5e-6;

struct RunConfig {
    std::string model;
    int n = -1;
    int terms = -1;
    int digits = 7;
    double rel_tol = 0.01;
    int oracle_cap = kDefaultOracleCap;
    int n_validate = 200;
    std::string format = "table";
    std::string output;
};

class DocumentSink {
public:
    DocumentSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void emit_counts(const CountSequence& counts, const RunConfig& cfg, std::ostream& os) {
    if (cfg.format == "json") {
        os << counts_to_json(counts).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "n,count\n";
        for (size_t n = 0; n < counts.values.size(); ++n)
            os << n << "," << counts.values[n].get_str() << "\n";
    } else {
        for (size_t n = 0; n < counts.values.size(); ++n)
            os << n << " " << counts.values[n].get_str() << "\n";
    }
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    ModelSpec model = resolve_model(cfg.model);
    if (cfg.n < 0) throw DomainError("count needs --n >= 0");
    CountSequence counts = model_counts(model, cfg.n);
    DocumentSink sink(cfg.output, out);
    emit_counts(counts, cfg, sink.stream());
    return 0;
}

int cmd_series(const RunConfig& cfg, std::ostream& out) {
    ModelSpec model = resolve_model(cfg.model);
    if (cfg.terms < 0) throw DomainError("series needs --terms >= 0");
    PowerSeries s = implicit_series(model, cfg.terms);
    DocumentSink sink(cfg.output, out);
    std::ostream& os = sink.stream();
    if (cfg.format == "json") {
        os << series_to_json(s).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "n,coeff\n";
        for (int n = 0; n <= s.order(); ++n)
            os << n << "," << rational_to_string(s.coeff(n)) << "\n";
    } else {
        for (int n = 0; n <= s.order(); ++n)
            os << n << " " << rational_to_string(s.coeff(n)) << "\n";
    }
    return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    ModelSpec model = resolve_model(cfg.model);
    if (!model.has_oracle())
        throw DomainError("model '" + model.name +
                          "' has no brute-force oracle (only lambda recurrence models do)");
    if (cfg.n < 0) throw DomainError("oracle needs --n >= 0");
    mpz_class c = oracle_count(cfg.n, model.lambda, cfg.oracle_cap);
    DocumentSink sink(cfg.output, out);
    std::ostream& os = sink.stream();
    if (cfg.format == "json") {
        json j{{"model", model.name}, {"lambda", model.lambda}, {"n", cfg.n},
               {"count", c.get_str()}};
        os << j.dump(2) << "\n";
    } else {
        os << c.get_str() << "\n";
    }
    return 0;
}

void emit_growth_table(const GrowthReport& rep, std::ostream& os) {
    os << "model:            " << rep.model << "\n";
    os << "radicand:         " << rep.radicand.to_string() << "  (" << rep.radicand_source
       << ")\n";
    os << "R:                " << rep.R << "\n";
    os << "growth (1/R):     " << rep.growth << "\n";
    os << "tie count:        " << rep.tie_count << "\n";
    os << "root test:        " << (rep.root_test.pass ? "pass" : "fail")
       << "  (max |S_n|^{1/n} at n=" << rep.root_test.max_at << ", final ratio over last "
       << rep.root_test.ratio_span << " step(s))\n";
    if (rep.published_growth)
        os << "published growth: " << *rep.published_growth << "  (rel err "
           << std::scientific << std::setprecision(2) << *rep.published_rel_error
           << std::defaultfloat << ")\n";
    os << "certified:        " << (rep.certified ? "yes" : "no") << "\n";
    for (const auto& note : rep.notes) os << "note:             " << note << "\n";
}

int cmd_growth(const RunConfig& cfg, std::ostream& out) {
    ModelSpec model = resolve_model(cfg.model);
    GrowthReport rep = growth_report(model, cfg.n_validate, cfg.digits, cfg.rel_tol);
    DocumentSink sink(cfg.output, out);
    std::ostream& os = sink.stream();
    if (cfg.format == "json") {
        os << growth_report_to_json(rep, cfg.digits).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << kReportCsvHeader << "\n" << growth_report_csv_row(rep) << "\n";
    } else {
        emit_growth_table(rep, os);
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    ModelSpec model = resolve_model(cfg.model);
    json checks = json::array();
    bool all_ok = true;
    auto add = [&](const std::string& check, bool ok, const std::string& detail) {
        checks.push_back(json{{"check", check}, {"model", model.name}, {"ok", ok},
                              {"detail", detail}});
        all_ok = all_ok && ok;
    };

    if (model.has_oracle()) {
        int depth = std::min(cfg.n >= 0 ? cfg.n : 12, cfg.oracle_cap);
        CountSequence rec = recurrence_counts(model.lambda, depth);
        PowerSeries ser = implicit_series(model, depth);
        bool ok = true;
        std::string detail = "oracle == recurrence == series for n <= " + std::to_string(depth);
        for (int n = 0; n <= depth && ok; ++n) {
            mpz_class oc = oracle_count(n, model.lambda, cfg.oracle_cap);
            if (oc != rec.values[static_cast<size_t>(n)] ||
                mpq_class(oc) != ser.coeff(n)) {
                ok = false;
                detail = "disagreement at n=" + std::to_string(n) + ": oracle " + oc.get_str() +
                         ", recurrence " + rec.values[static_cast<size_t>(n)].get_str() +
                         ", series " + rational_to_string(ser.coeff(n));
            }
        }
        add("three-way-agreement", ok, detail);
    }

    if (model.kind == ModelKind::PrimaryWc) {
        int depth = cfg.n >= 0 ? cfg.n : 30;
        CountSequence counts = wc_primary_counts(std::max(depth, 1));
        bool ok = true;
        std::string detail = "R(n) <= 4^n for n <= " + std::to_string(counts.n_max);
        for (int n = 1; n <= counts.n_max && ok; ++n) {
            if (counts.values[static_cast<size_t>(n)] > unrestricted_primary(n)) {
                ok = false;
                detail = "R(" + std::to_string(n) + ") exceeds 4^n";
            }
        }
        add("restricted-below-unrestricted", ok, detail);
    }

    if (model.has_phi()) {
        const int depth = 60;
        bool ok = true;
        std::string detail =
            "phi(z, S(z)) == 0 mod z^" + std::to_string(depth + 1) + ", coefficients admissible";
        try {
            PowerSeries s = implicit_series(model, depth);
            PowerSeries residual = substitute_series(*model.phi, s);
            for (int n = 0; n <= depth && ok; ++n) {
                if (residual.coeff(n) != 0) {
                    ok = false;
                    detail = "phi residual nonzero at z^" + std::to_string(n);
                }
            }
        } catch (const ModelInconsistencyError& e) {
            ok = false;
            detail = e.what();
        }
        add("phi-residual", ok, detail);
    }

    {
        GrowthReport rep = growth_report(model, cfg.n_validate, cfg.digits, cfg.rel_tol);
        std::ostringstream detail;
        detail << "growth " << rep.growth << ", max |S_n|^{1/n} "
               << format_decimal(mpq_class(rep.root_test.max_nth_root), cfg.digits) << " at n="
               << rep.root_test.max_at << ", final ratio "
               << format_decimal(mpq_class(rep.root_test.final_ratio), cfg.digits);
        add("root-test", rep.root_test.pass, detail.str());
        if (rep.published_growth) {
            bool ok = *rep.published_rel_error <= kPublishedTolerance;
            add("published-growth", ok,
                "computed " + rep.growth + " vs published " + *rep.published_growth);
        }
    }

    DocumentSink sink(cfg.output, out);
    sink.stream() << checks.dump(2) << "\n";
    return all_ok ? 0 : 2;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
    std::vector<GrowthReport> reports;
    bool all_ok = true;
    for (const std::string& name : model_names()) {
        const ModelSpec& model = get_model(name);
        GrowthReport rep = growth_report(model, cfg.n_validate, cfg.digits, cfg.rel_tol);
        if (rep.published_growth &&
            (!rep.root_test.pass || *rep.published_rel_error > kPublishedTolerance))
            all_ok = false;
        reports.push_back(std::move(rep));
    }

    DocumentSink sink(cfg.output, out);
    std::ostream& os = sink.stream();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(growth_report_to_json(rep, cfg.digits));
        os << arr.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << kReportCsvHeader << "\n";
        for (const auto& rep : reports) os << growth_report_csv_row(rep) << "\n";
    } else {
        os << std::left << std::setw(22) << "model" << std::setw(14 + cfg.digits) << "R"
           << std::setw(14 + cfg.digits) << "growth" << std::setw(18) << "published"
           << std::setw(12) << "rel_error" << std::setw(5) << "tie" << std::setw(10)
           << "root_test" << "match" << "\n";
        for (const auto& rep : reports) {
            std::string pub = rep.published_growth ? *rep.published_growth : "-";
            std::string err = "-", match = "-";
            if (rep.published_rel_error) {
                std::ostringstream e;
                e << std::scientific << std::setprecision(2) << *rep.published_rel_error;
                err = e.str();
                match = (*rep.published_rel_error <= kPublishedTolerance && rep.root_test.pass)
                            ? "ok"
                            : "FAIL";
            }
            os << std::left << std::setw(22) << rep.model << std::setw(14 + cfg.digits) << rep.R
               << std::setw(14 + cfg.digits) << rep.growth << std::setw(18) << pub
               << std::setw(12) << err << std::setw(5) << rep.tie_count << std::setw(10)
               << (rep.root_test.pass ? "pass" : "fail") << match << "\n";
        }
    }
    return all_ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counts and certified growth bounds for RNA structure families"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_model) {
        if (with_model)
            sub->add_option("--model", cfg.model, "model name or model-file path")->required();
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--output", cfg.output, "write the document to this path");
        sub->add_option("--digits", cfg.digits, "decimal digits after the point")
            ->check(CLI::Range(1, 30));
        sub->add_option("--rel-tol", cfg.rel_tol, "root-test relative tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--oracle-cap", cfg.oracle_cap, "max n for brute-force enumeration");
        sub->add_option("--n-validate", cfg.n_validate, "counts used by the root test")
            ->check(CLI::Range(10, 100000));
    };

    CLI::App* count = app.add_subcommand("count", "counting sequence by the recurrence route");
    add_common(count, true);
    count->add_option("--n", cfg.n, "largest n to count")->required();

    CLI::App* series = app.add_subcommand("series", "coefficients from the implicit equation");
    add_common(series, true);
    series->add_option("--terms", cfg.terms, "truncation order")->required();

    CLI::App* growth = app.add_subcommand("growth", "dominant singularity and growth constant");
    add_common(growth, true);

    CLI::App* validate =
        app.add_subcommand("validate", "cross-validate counts and the growth constant");
    add_common(validate, true);
    validate->add_option("--n", cfg.n, "agreement-check depth");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force count for one n");
    add_common(oracle, true);
    oracle->add_option("--n", cfg.n, "backbone length")->required();

    CLI::App* report =
        app.add_subcommand("report", "growth constants for all models vs published values");
    add_common(report, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (count->parsed()) return cmd_count(cfg, out);
        if (series->parsed()) return cmd_series(cfg, out);
        if (growth->parsed()) return cmd_growth(cfg, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (oracle->parsed()) return cmd_oracle(cfg, out);
        if (report->parsed()) return cmd_report(cfg, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace rnagrowth::cli
