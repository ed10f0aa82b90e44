// Command-line front end: enum, count, expand and verify subcommands with
// stable text/TSV/JSON output. Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.

#include <exception>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <quadpart/quadpart.hpp>

namespace {

using namespace quadpart;
using ordered_json = nlohmann::ordered_json;

long long to_ll(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v < lo || v > hi) {
        throw std::overflow_error("value does not fit in a JSON integer");
    }
    return v.convert_to<long long>();
}

ordered_json coords(const AlgInt& e) {
    return ordered_json::array({to_ll(e.x()), to_ll(e.y())});
}

AlgInt parse_delta(const QuadField& f, const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) {
            return AlgInt(f, Int(s), 0);
        }
        return AlgInt(f, Int(s.substr(0, comma)), Int(s.substr(comma + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("--delta expects integral-basis coordinates \"x,y\"");
    }
}

std::vector<AlgInt> parse_generators(const QuadField& f, const std::string& spec) {
    std::vector<AlgInt> gens;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const auto next = spec.find(';', pos);
        const std::string tok =
            spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (!tok.empty()) {
            gens.push_back(parse_element(f, tok));
        }
        if (next == std::string::npos) {
            break;
        }
        pos = next + 1;
    }
    if (gens.empty()) {
        throw std::invalid_argument("ideal spec contains no generators");
    }
    return gens;
}

enum class Format { text, tsv, json };

struct FormatFlags {
    bool json = false;
    bool tsv = false;
    Format get() const { return json ? Format::json : (tsv ? Format::tsv : Format::text); }
};

void add_format_flags(CLI::App* cmd, FormatFlags& fmt) {
    auto* j = cmd->add_flag("--json", fmt.json, "one JSON object per line");
    cmd->add_flag("--tsv", fmt.tsv, "tab-separated rows")->excludes(j);
}

// ---------------------------------------------------------------- enum ----

int run_enum(const Int& field_d, const Int& max_trace, Format fmt) {
    const QuadField f(field_d);
    const auto elems = enumerate_totally_positive(f, max_trace);
    if (fmt == Format::tsv || fmt == Format::text) {
        std::cout << "x\ty\ttrace\tnorm\tdisplay\n";
        for (const AlgInt& e : elems) {
            std::cout << e.x().str() << '\t' << e.y().str() << '\t' << e.trace().str() << '\t'
                      << e.norm().str() << '\t' << to_display(e) << '\n';
        }
    } else {
        for (const AlgInt& e : elems) {
            ordered_json row;
            row["field"] = to_ll(field_d);
            row["x"] = to_ll(e.x());
            row["y"] = to_ll(e.y());
            row["trace"] = to_ll(e.trace());
            row["norm"] = to_ll(e.norm());
            row["display"] = to_display(e);
            std::cout << row.dump() << '\n';
        }
    }
    return 0;
}

// --------------------------------------------------------------- count ----

std::string tuple_display(const std::vector<AlgInt>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += to_display(parts[i]);
    }
    return out + ")";
}

int run_count(const Int& field_d, const std::string& delta_spec,
              const std::optional<std::string>& not_in_ideal, const std::optional<Int>& mult_bound,
              bool chain, const std::optional<long>& max_parts, bool list, Format fmt) {
    const QuadField f(field_d);
    const AlgInt delta = parse_delta(f, delta_spec);
    PartPredicate pred = all_parts;
    if (not_in_ideal) {
        const auto gens = parse_generators(f, *not_in_ideal);
        const Ideal ideal = Ideal::from_generators(f, std::span<const AlgInt>(gens));
        pred = [ideal](const AlgInt& p) { return !ideal.contains(p); };
    }

    std::vector<std::vector<AlgInt>> listed;
    Int count;
    if (chain) {
        listed = enumerate_chain_partitions(delta, max_parts, pred, mult_bound);
        count = Int(listed.size());
    } else {
        for (auto& p : enumerate_partitions(delta, pred, mult_bound)) {
            listed.push_back(std::move(p.parts));
        }
        count = Int(listed.size());
    }

    if (fmt == Format::json) {
        ordered_json head;
        head["field"] = to_ll(field_d);
        head["delta"] = coords(delta);
        head["count"] = to_ll(count);
        std::cout << head.dump() << '\n';
        if (list) {
            for (const auto& parts : listed) {
                ordered_json row;
                ordered_json arr = ordered_json::array();
                for (const AlgInt& p : parts) {
                    arr.push_back(coords(p));
                }
                row[chain ? "chain" : "partition"] = arr;
                std::cout << row.dump() << '\n';
            }
        }
    } else if (fmt == Format::tsv) {
        std::cout << "count\t" << count.str() << '\n';
        if (list) {
            for (const auto& parts : listed) {
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    std::cout << (i ? "\t" : "") << to_display(parts[i]);
                }
                std::cout << '\n';
            }
        }
    } else {
        std::cout << (chain ? "chain partitions of " : "partitions of ") << to_display(delta)
                  << ": " << count.str() << '\n';
        if (list) {
            for (const auto& parts : listed) {
                std::cout << tuple_display(parts) << '\n';
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------- expand ----

int run_expand(const Int& field_d, const Int& max_trace, bool all,
               const std::optional<std::string>& ideal_spec,
               const std::optional<std::string>& not_in_ideal_spec,
               const std::optional<std::string>& glaisher_spec, const std::optional<Int>& modulus,
               const std::optional<Int>& mult_bound, Format fmt) {
    const QuadField f(field_d);
    PartPredicate pred = all_parts;
    if (all) {
        // keep all parts
    } else if (ideal_spec) {
        const auto gens = parse_generators(f, *ideal_spec);
        const Ideal ideal = Ideal::from_generators(f, std::span<const AlgInt>(gens));
        pred = [ideal](const AlgInt& p) { return ideal.contains(p); };
    } else if (not_in_ideal_spec) {
        const auto gens = parse_generators(f, *not_in_ideal_spec);
        const Ideal ideal = Ideal::from_generators(f, std::span<const AlgInt>(gens));
        pred = [ideal](const AlgInt& p) { return !ideal.contains(p); };
    } else if (glaisher_spec) {
        if (!modulus) {
            throw std::invalid_argument("--glaisher-S requires --modulus");
        }
        const auto gens = parse_generators(f, *glaisher_spec);
        const GlaisherData g(Ideal::from_generators(f, std::span<const AlgInt>(gens)), *modulus);
        pred = [g](const AlgInt& p) { return in_glaisher_S(g, p); };
    }
    const QSum series = partition_genfun(f, max_trace, pred, mult_bound);
    if (fmt == Format::json) {
        for (const auto& [delta, coeff] : series.coefficients()) {
            ordered_json row;
            row["field"] = to_ll(field_d);
            row["delta"] = coords(delta);
            row["coeff"] = to_ll(coeff);
            std::cout << row.dump() << '\n';
        }
    } else {
        std::cout << "x\ty\ttrace\tcoeff\tdisplay\n";
        for (const auto& [delta, coeff] : series.coefficients()) {
            std::cout << delta.x().str() << '\t' << delta.y().str() << '\t' << delta.trace().str()
                      << '\t' << coeff.str() << '\t' << to_display(delta) << '\n';
        }
    }
    return 0;
}

// -------------------------------------------------------------- verify ----

int run_verify(const std::string& theorem, const std::optional<Int>& field_d, const Int& max_trace,
               const std::optional<std::string>& ideal_spec, const std::optional<Int>& modulus,
               long max_parts, bool json) {
    VerifyReport report;
    if (theorem == "ideal") {
        if (!field_d || !ideal_spec || !modulus) {
            throw std::invalid_argument("verify --theorem ideal needs --field, --ideal, --modulus");
        }
        const QuadField f(*field_d);
        const auto gens = parse_generators(f, *ideal_spec);
        report = verify_ideal_theorem(
            GlaisherData(Ideal::from_generators(f, std::span<const AlgInt>(gens)), *modulus),
            max_trace);
    } else if (theorem == "glaisher") {
        if (!field_d || !modulus) {
            throw std::invalid_argument("verify --theorem glaisher needs --field and --modulus");
        }
        report = verify_glaisher(QuadField(*field_d), *modulus, max_trace);
    } else if (theorem == "chain") {
        if (!field_d) {
            throw std::invalid_argument("verify --theorem chain needs --field");
        }
        report = verify_chain_theorem(QuadField(*field_d), max_trace, max_parts);
    } else if (theorem == "remark") {
        if (field_d && *field_d != 3) {
            throw std::invalid_argument("the remark is specific to field 3");
        }
        report = verify_remark_counterexample();
    } else {
        throw std::invalid_argument("unknown theorem: " + theorem);
    }

    if (json) {
        for (const auto& e : report.entries) {
            ordered_json row;
            row["delta"] = coords(e.delta);
            if (e.m) {
                row["m"] = *e.m;
            }
            for (const auto& [label, value] : e.counts) {
                row[label] = to_ll(value);
            }
            row["ok"] = e.ok;
            std::cout << row.dump() << '\n';
        }
        ordered_json summary;
        summary["checks"] = report.entries.size();
        summary["failures"] = report.failures;
        summary["passed"] = report.passed();
        std::cout << summary.dump() << '\n';
    } else {
        print_report(std::cout, report, true);
    }
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted partitions of totally positive integers over real quadratic fields"};
    app.require_subcommand(1);

    long long field_arg = 0;
    long long max_trace_arg = 0;
    FormatFlags fmt;

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "list totally positive integers of bounded trace");
    cmd_enum->add_option("--field", field_arg, "radicand d (1 selects Q)")->required();
    cmd_enum->add_option("--max-trace", max_trace_arg, "trace bound M")->required();
    add_format_flags(cmd_enum, fmt);

    // count
    std::string delta_spec;
    std::string not_in_ideal;
    long long mult_bound_arg = -1;
    long long max_parts_arg = -1;
    bool chain = false, list = false;
    auto* cmd_count = app.add_subcommand("count", "count (and list) partitions of one element");
    cmd_count->add_option("--field", field_arg, "radicand d (1 selects Q)")->required();
    cmd_count->add_option("--delta", delta_spec, "target, integral-basis coordinates \"x,y\"")
        ->required();
    cmd_count->add_option("--not-in-ideal", not_in_ideal, "exclude parts in this ideal (\"g1;g2\")");
    cmd_count->add_option("--mult-bound", mult_bound_arg, "max multiplicity per part");
    cmd_count->add_flag("--chain", chain, "count chain partitions instead");
    cmd_count->add_option("--max-parts", max_parts_arg, "chain part-count bound");
    cmd_count->add_flag("--list", list, "print the partitions");
    add_format_flags(cmd_count, fmt);

    // expand
    bool all = false;
    std::string ideal_spec, glaisher_spec;
    long long modulus_arg = 0;
    auto* cmd_expand = app.add_subcommand("expand", "expand a partition generating function");
    cmd_expand->add_option("--field", field_arg, "radicand d (1 selects Q)")->required();
    cmd_expand->add_option("--max-trace", max_trace_arg, "trace bound M")->required();
    auto* opt_all = cmd_expand->add_flag("--all", all, "parts: all of O+");
    auto* opt_ideal = cmd_expand->add_option("--ideal", ideal_spec, "parts inside this ideal");
    auto* opt_not = cmd_expand->add_option("--not-in-ideal", not_in_ideal,
                                           "parts outside this ideal");
    auto* opt_gl = cmd_expand->add_option("--glaisher-S", glaisher_spec,
                                          "parts in the Glaisher set S of this ideal");
    opt_all->excludes(opt_ideal)->excludes(opt_not)->excludes(opt_gl);
    opt_ideal->excludes(opt_not)->excludes(opt_gl);
    opt_not->excludes(opt_gl);
    cmd_expand->add_option("--modulus", modulus_arg, "the chosen integer d in the ideal");
    cmd_expand->add_option("--mult-bound", mult_bound_arg, "max multiplicity per part");
    add_format_flags(cmd_expand, fmt);

    // verify
    std::string theorem;
    auto* cmd_verify = app.add_subcommand("verify", "check a theorem over a trace window");
    cmd_verify->add_option("--theorem", theorem, "ideal | glaisher | chain | remark")->required();
    auto* vf = cmd_verify->add_option("--field", field_arg, "radicand d (1 selects Q)");
    cmd_verify->add_option("--max-trace", max_trace_arg, "trace bound M");
    cmd_verify->add_option("--ideal", ideal_spec, "ideal generators (\"g1;g2\")");
    cmd_verify->add_option("--modulus", modulus_arg, "the chosen integer d");
    cmd_verify->add_option("--max-parts", max_parts_arg, "chain part-count bound");
    bool verify_json = false;
    cmd_verify->add_flag("--json", verify_json, "one JSON object per row");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_enum->parsed()) {
            return run_enum(Int(field_arg), Int(max_trace_arg), fmt.get());
        }
        if (cmd_count->parsed()) {
            return run_count(Int(field_arg), delta_spec,
                             not_in_ideal.empty() ? std::nullopt
                                                  : std::optional<std::string>(not_in_ideal),
                             mult_bound_arg < 0 ? std::nullopt
                                                : std::optional<Int>(Int(mult_bound_arg)),
                             chain,
                             max_parts_arg < 0 ? std::nullopt
                                               : std::optional<long>(long(max_parts_arg)),
                             list, fmt.get());
        }
        if (cmd_expand->parsed()) {
            if (!all && ideal_spec.empty() && not_in_ideal.empty() && glaisher_spec.empty()) {
                throw std::invalid_argument(
                    "expand needs one of --all, --ideal, --not-in-ideal, --glaisher-S");
            }
            return run_expand(Int(field_arg), Int(max_trace_arg), all,
                              ideal_spec.empty() ? std::nullopt
                                                 : std::optional<std::string>(ideal_spec),
                              not_in_ideal.empty() ? std::nullopt
                                                   : std::optional<std::string>(not_in_ideal),
                              glaisher_spec.empty() ? std::nullopt
                                                    : std::optional<std::string>(glaisher_spec),
                              cmd_expand->count("--modulus") ? std::optional<Int>(Int(modulus_arg))
                                                             : std::nullopt,
                              mult_bound_arg < 0 ? std::nullopt
                                                 : std::optional<Int>(Int(mult_bound_arg)),
                              fmt.get());
        }
        if (cmd_verify->parsed()) {
            return run_verify(theorem,
                              vf->count() ? std::optional<Int>(Int(field_arg)) : std::nullopt,
                              cmd_verify->count("--max-trace") ? Int(max_trace_arg) : Int(12),
                              ideal_spec.empty() ? std::nullopt
                                                 : std::optional<std::string>(ideal_spec),
                              cmd_verify->count("--modulus") ? std::optional<Int>(Int(modulus_arg))
                                                             : std::nullopt,
                              max_parts_arg < 0 ? 4 : long(max_parts_arg), verify_json);
        }
    } catch (const ElementParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
