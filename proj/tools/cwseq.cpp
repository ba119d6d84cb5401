// Command-line front end: encode, decode, trace, range, cardinality and
// graytable, each with text, CSV and JSON output.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 target weight
// unreachable, 3 work cap exceeded.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "cwseq/codec.hpp"
#include "cwseq/errors.hpp"
#include "cwseq/graycode.hpp"
#include "cwseq/oracle.hpp"
#include "cwseq/weighting.hpp"

using json = nlohmann::json;
using namespace cwseq;

namespace {

// ---------------------------------------------------------------------------
// Table rendering. Every command builds one Table; the three formats are
// different views of the same cells, so they can never drift apart.

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "*" : "";
    return v.dump();
}

std::string cell_csv(const json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

void print_text_table(const Table& table, std::ostream& out) {
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
    for (const auto& row : table.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], cell_text(row[i]).size());

    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            line += cells[i];
            if (i + 1 < cells.size()) line.append(width[i] - cells[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    };

    emit(table.columns);
    for (const auto& row : table.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const json& v : row) cells.push_back(cell_text(v));
        emit(cells);
    }
}

void print_csv_table(const Table& table, std::ostream& out) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_csv(row[i]);
        out << "\n";
    }
}

json table_rows_json(const Table& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    return rows;
}

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw DomainError("unknown format '" + name + "'");
}

json params_json(const CodecParams& p) {
    json obj{{"q", p.q},
             {"k", p.k},
             {"t", p.t},
             {"gray_len", p.gray_len},
             {"redundant_len", p.redundant_len},
             {"total_len", p.total_len},
             {"redundancy", p.redundancy}};
    if (p.target_weight)
        obj["target_weight"] = *p.target_weight;
    else
        obj["target_weight"] = nullptr;
    return obj;
}

/// "{1, 4..7, 9}" for sorted weight sets.
std::string format_weight_set(const std::vector<long long>& sorted) {
    if (sorted.empty()) return "{}";
    std::string out = "{";
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[j] + 1) ++j;
        if (i > 0) out += ", ";
        out += std::to_string(sorted[i]);
        if (j > i) out += ".." + std::to_string(sorted[j]);
        i = j + 1;
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Shared option bundle. Each subcommand registers the flags it needs.

struct Options {
    int q = 0;
    long long k = -1;
    int e = 1;
    long long W = 0;
    bool has_W = false;
    int r = 0;
    long long n = 0;
    std::string x_text;
    std::string c_text;
    std::string format = "text";
    long long cap = 10'000'000;
};

Sequence parse_information_word(Options& opt) {
    const Sequence x = Sequence::parse(opt.x_text, opt.q);
    if (opt.k >= 0 && static_cast<long long>(x.size()) != opt.k)
        throw DimensionError("--k " + std::to_string(opt.k) + " does not match the length of --x (" +
                             std::to_string(x.size()) + ")");
    opt.k = static_cast<long long>(x.size());  // the unreachable-weight hint reuses it
    return x;
}

void warn_if_outside_formulas(const CodecParams& p) {
    const WeightBounds widest = weight_bounds(p, BoundFormula::extended);
    const HalfInteger W = HalfInteger::from_whole(*p.target_weight);
    if (W < HalfInteger::from_whole(widest.lower) || W > widest.upper)
        std::cerr << "note: W=" << *p.target_weight << " lies outside the formula range ["
                  << widest.lower << ", " << widest.upper.str()
                  << "]; the sweep decides what is truly reachable\n";
}

// ---------------------------------------------------------------------------
// Commands.

void cmd_encode(Options& opt) {
    const Sequence x = parse_information_word(opt);
    const CodecParams params = derive_params(opt.q, static_cast<long long>(x.size()), opt.e, opt.W);
    warn_if_outside_formulas(params);
    const EncodeResult result = encode(x, params);
    switch (parse_format(opt.format)) {
        case Format::text:
            std::cout << result.codeword.str() << " z=" << result.z << "\n";
            break;
        case Format::csv:
            std::cout << "c,z\n" << cell_csv(json(result.codeword.str())) << "," << result.z << "\n";
            break;
        case Format::json:
            std::cout << json{{"params", params_json(params)},
                              {"c", result.codeword.str()},
                              {"z", result.z}}
                             .dump(2)
                      << "\n";
            break;
    }
}

void cmd_decode(const Options& opt) {
    const CodecParams params = derive_params(opt.q, opt.k, opt.e);
    const Sequence c = Sequence::parse(opt.c_text, opt.q);
    const DecodeSteps steps = decode_steps(c, params);
    switch (parse_format(opt.format)) {
        case Format::text:
            std::cout << steps.x.str() << "\n";
            break;
        case Format::csv:
            std::cout << "x\n" << cell_csv(json(steps.x.str())) << "\n";
            break;
        case Format::json:
            std::cout << json{{"params", params_json(params)},
                              {"x", steps.x.str()},
                              {"u", steps.u.str()},
                              {"g", steps.g.str()},
                              {"d", steps.d.str()},
                              {"z", steps.z},
                              {"s", steps.s},
                              {"p", steps.p},
                              {"b", steps.b.str()},
                              {"y", steps.y.str()}}
                             .dump(2)
                      << "\n";
            break;
    }
}

void emit_weight_series(const std::vector<std::pair<long long, long long>>& series,
                        std::ostream& out) {
    out << "\n# weight progression (z w)\n";
    for (const auto& [z, w] : series) out << z << " " << w << "\n";
}

void cmd_trace_weighting(Options& opt) {
    const Sequence x = parse_information_word(opt);
    const auto rows = all_weighted_outputs(x);
    const HalfInteger beta = balancing_value(static_cast<long long>(x.size()), x.q());

    Table table;
    table.columns = {"z", "b", "y", "w", "hit"};
    std::vector<std::pair<long long, long long>> series;
    std::vector<long long> hits;
    for (const auto& row : rows) {
        const bool hit = beta.is_integral() && row.weight == beta.numerator();
        if (hit) hits.push_back(row.z);
        const Sequence b = weighting_sequence(
            index_to_sp(row.z, static_cast<long long>(x.size()), x.q()));
        table.rows.push_back({row.z, b.str(), row.y.str(), row.weight, hit});
        series.emplace_back(row.z, row.weight);
    }

    switch (parse_format(opt.format)) {
        case Format::text:
            print_text_table(table, std::cout);
            std::cout << "\nbalancing value = " << beta.str();
            if (!hits.empty()) std::cout << "; balanced at z = " << format_weight_set(hits);
            std::cout << "\n";
            emit_weight_series(series, std::cout);
            break;
        case Format::csv:
            print_csv_table(table, std::cout);
            break;
        case Format::json: {
            json root{{"params", {{"q", x.q()}, {"k", x.size()}}},
                      {"balancing_value", beta.str()},
                      {"rows", table_rows_json(table)},
                      {"weight_series", series}};
            std::cout << root.dump(2) << "\n";
            break;
        }
    }
}

void cmd_trace(Options& opt) {
    if (!opt.has_W) {
        cmd_trace_weighting(opt);
        return;
    }
    const Sequence x = parse_information_word(opt);
    const CodecParams params = derive_params(opt.q, static_cast<long long>(x.size()), opt.e, opt.W);
    warn_if_outside_formulas(params);
    const EncodingTrace trace = enumerate_encodings(x, params);

    Table table;
    table.columns = {"z", "b", "y", "g", "u", "c", "w", "hit"};
    std::vector<std::pair<long long, long long>> series;
    std::vector<long long> hits;
    for (const TraceRow& row : trace.rows) {
        table.rows.push_back({row.z, row.b.str(), row.y.str(), row.g.str(), row.u.str(),
                              row.c.str(), row.codeword_weight, row.hit});
        series.emplace_back(row.z, row.codeword_weight);
        if (row.hit) hits.push_back(row.z);
    }

    switch (parse_format(opt.format)) {
        case Format::text:
            print_text_table(table, std::cout);
            std::cout << "\ntarget W = " << opt.W;
            if (trace.chosen_z)
                std::cout << "; hits at z = " << format_weight_set(hits)
                          << "; chosen z = " << *trace.chosen_z;
            else
                std::cout << "; no row reaches W";
            std::cout << "\n";
            emit_weight_series(series, std::cout);
            break;
        case Format::csv:
            print_csv_table(table, std::cout);
            break;
        case Format::json: {
            json root{{"params", params_json(params)},
                      {"rows", table_rows_json(table)},
                      {"weight_series", series},
                      {"hits", hits}};
            root["chosen_z"] = trace.chosen_z ? json(*trace.chosen_z) : json(nullptr);
            std::cout << root.dump(2) << "\n";
            break;
        }
    }
}

void append_bounds_row(Table& table, const WeightBounds& bounds) {
    table.rows.push_back(
        {bound_formula_name(bounds.formula), std::to_string(bounds.lower), bounds.upper.str()});
}

void cmd_range(const Options& opt) {
    const CodecParams params = derive_params(opt.q, opt.k, opt.e);

    Table table;
    table.columns = {"source", "lower", "upper"};
    append_bounds_row(table, weight_bounds(params, BoundFormula::basic));
    append_bounds_row(table, weight_bounds(params, BoundFormula::extended));
    append_bounds_row(table, weight_bounds(params, BoundFormula::tight));

    oracle::SweepOptions sweep;
    sweep.max_candidates = opt.cap;
    oracle::RangeReport report;
    try {
        report = oracle::guaranteed_weight_range(opt.q, opt.k, opt.e, sweep);
    } catch (const ResourceCapExceeded&) {
        // Formulas are still worth printing before giving up.
        if (parse_format(opt.format) == Format::text) print_text_table(table, std::cout);
        throw;
    }

    auto set_row = [&](const char* name, const std::vector<long long>& set) {
        if (set.empty())
            table.rows.push_back({name, "", ""});
        else
            table.rows.push_back(
                {name, std::to_string(set.front()), std::to_string(set.back())});
    };
    set_row("guaranteed", report.guaranteed);
    set_row("union", report.achievable_union);

    switch (parse_format(opt.format)) {
        case Format::text:
            print_text_table(table, std::cout);
            std::cout << "\nguaranteed weights: " << format_weight_set(report.guaranteed) << "\n";
            std::cout << "achievable for some input: "
                      << format_weight_set(report.achievable_union) << "\n";
            break;
        case Format::csv:
            print_csv_table(table, std::cout);
            break;
        case Format::json: {
            json root{{"params", params_json(params)},
                      {"rows", table_rows_json(table)},
                      {"guaranteed", report.guaranteed},
                      {"achievable_union", report.achievable_union}};
            std::cout << root.dump(2) << "\n";
            break;
        }
    }
}

void cmd_cardinality(const Options& opt) {
    if (opt.n < 0) throw DomainError("--n must be non-negative");
    const long long half_range =
        std::min(opt.W, opt.n * (opt.q - 1) - opt.W);  // DP work is n * (half_range + 1)
    if (half_range >= 0 && static_cast<double>(opt.n) * (static_cast<double>(half_range) + 1) >
                               static_cast<double>(opt.cap))
        throw ResourceCapExceeded("counting table needs about " +
                                  std::to_string(opt.n * (half_range + 1)) +
                                  " entries, cap is " + std::to_string(opt.cap));
    const auto report = oracle::cardinality_report(opt.n, opt.W, opt.q, opt.k);

    Table table;
    table.columns = {"n", "W", "q", "k", "N1", "N2", "feasible"};
    table.rows.push_back({report.n, report.W, report.q, report.k, report.n1.str(),
                          report.n2.str(), report.feasible ? "yes" : "no"});

    switch (parse_format(opt.format)) {
        case Format::text:
            print_text_table(table, std::cout);
            break;
        case Format::csv:
            print_csv_table(table, std::cout);
            break;
        case Format::json: {
            json root{{"params", {{"n", report.n}, {"W", report.W}, {"q", report.q}, {"k", report.k}}},
                      {"rows", table_rows_json(table)}};
            std::cout << root.dump(2) << "\n";
            break;
        }
    }
}

void cmd_graytable(const Options& opt) {
    if (opt.r < 1) throw DomainError("--r must be at least 1");
    long long words = 1;
    for (int i = 0; i < opt.r; ++i) {
        if (words > opt.cap / opt.q)  // overflow-safe: words * q would pass the cap
            throw ResourceCapExceeded("table would have more than " + std::to_string(opt.cap) +
                                      " rows");
        words *= opt.q;
    }
    if (words > opt.cap)
        throw ResourceCapExceeded("table would have more than " + std::to_string(opt.cap) +
                                  " rows");
    const long long k = words / opt.q;  // q^{r-1}, so that the kq weighting rows pair off

    Table table;
    table.columns = {"z", "s", "p", "b", "d", "g"};
    for (long long z = 0; z < words; ++z) {
        const Sequence d = index_to_word(z, opt.r, opt.q);
        const Sequence g = gray_encode(d);
        const WeightingIndex idx = index_to_sp(z, k, opt.q);
        table.rows.push_back(
            {z, idx.s, idx.p, weighting_sequence(idx).str(), d.str(), g.str()});
    }

    switch (parse_format(opt.format)) {
        case Format::text:
            print_text_table(table, std::cout);
            break;
        case Format::csv:
            print_csv_table(table, std::cout);
            break;
        case Format::json: {
            json root{{"params", {{"q", opt.q}, {"r", opt.r}, {"k", k}}},
                      {"rows", table_rows_json(table)}};
            std::cout << root.dump(2) << "\n";
            break;
        }
    }
}

void add_format_option(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"q-ary constant-weight sequence codec"};
    app.require_subcommand(1);

    CLI::App* enc = app.add_subcommand("encode", "encode an information sequence at weight W");
    enc->add_option("--q", opt.q, "alphabet size")->required();
    enc->add_option("--k", opt.k, "information length (checked against --x)");
    enc->add_option("--e", opt.e, "redundant vector length")->capture_default_str();
    enc->add_option("--W", opt.W, "target codeword weight")->required();
    enc->add_option("--x", opt.x_text, "information sequence")->required();
    add_format_option(enc, opt);
    enc->callback([&] { cmd_encode(opt); });

    CLI::App* dec = app.add_subcommand("decode", "recover the information sequence");
    dec->add_option("--q", opt.q, "alphabet size")->required();
    dec->add_option("--k", opt.k, "information length")->required();
    dec->add_option("--e", opt.e, "redundant vector length")->capture_default_str();
    dec->add_option("--c", opt.c_text, "codeword of length k + r' + e")->required();
    add_format_option(dec, opt);
    dec->callback([&] { cmd_decode(opt); });

    CLI::App* trace = app.add_subcommand(
        "trace", "full per-z table; with --W the codec table, without it the weighting table");
    trace->add_option("--q", opt.q, "alphabet size")->required();
    trace->add_option("--k", opt.k, "information length (checked against --x)");
    trace->add_option("--e", opt.e, "redundant vector length")->capture_default_str();
    trace->add_option("--W", opt.W, "target codeword weight");
    trace->add_option("--x", opt.x_text, "information sequence")->required();
    add_format_option(trace, opt);
    trace->callback([&] {
        opt.has_W = trace->count("--W") > 0;
        cmd_trace(opt);
    });

    CLI::App* range = app.add_subcommand("range", "formula bounds and the measured weight range");
    range->add_option("--q", opt.q, "alphabet size")->required();
    range->add_option("--k", opt.k, "information length")->required();
    range->add_option("--e", opt.e, "redundant vector length")->capture_default_str();
    range->add_option("--cap", opt.cap, "work cap in candidate evaluations")
        ->capture_default_str();
    add_format_option(range, opt);
    range->callback([&] { cmd_range(opt); });

    CLI::App* card = app.add_subcommand("cardinality",
                                        "count (n, W, q) constant-weight sequences against q^k");
    card->add_option("--q", opt.q, "alphabet size")->required();
    card->add_option("--n", opt.n, "sequence length")->required();
    card->add_option("--W", opt.W, "sequence weight")->required();
    card->add_option("--k", opt.k, "information length for the q^k comparison")->required();
    card->add_option("--cap", opt.cap, "work cap")->capture_default_str();
    add_format_option(card, opt);
    card->callback([&] { cmd_cardinality(opt); });

    CLI::App* gray = app.add_subcommand("graytable", "the (r,q)-Gray code table with weighting rows");
    gray->add_option("--q", opt.q, "alphabet size")->required();
    gray->add_option("--r", opt.r, "Gray word length")->required();
    gray->add_option("--cap", opt.cap, "row cap")->capture_default_str();
    add_format_option(gray, opt);
    gray->callback([&] { cmd_graytable(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const WeightUnreachable& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: run 'cwseq range --q " << opt.q << " --k "
                  << (opt.k >= 0 ? opt.k : static_cast<long long>(opt.x_text.size())) << " --e "
                  << opt.e << "' to see the achievable weight range\n";
        return 2;
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {  // domain, dimension, unsupported length
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
