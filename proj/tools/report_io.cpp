#include "report_io.hpp"

#include <turing/errors.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace turing::io {

namespace {

Family family_from_name(const std::string& name) {
    if (name == "zeta") return Family::zeta;
    if (name == "dirichlet") return Family::dirichlet;
    if (name == "dedekind") return Family::dedekind;
    throw validation_error("unknown family '" + name + "'");
}

std::string csv_counts(const std::vector<long>& counts) {
    std::string s;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(counts[i]);
    }
    return s;
}

void block_csv_rows(std::ostringstream& out, const std::vector<GramBlock>& blocks) {
    for (const auto& b : blocks) {
        out << b.start_index << ',' << b.p_len << ',' << csv_counts(b.counts) << ','
            << (b.rosser_ok ? "true" : "false") << '\n';
    }
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw validation_error("unknown output format '" + name + "'");
}

std::string format_number(double x, int sig_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, x);
    return buf;
}

// --- JSON -------------------------------------------------------------------

json to_json(const TuringConstants& c) {
    json j;
    j["family"] = family_name(c.family);
    j["a"] = c.a;
    j["b"] = c.b;
    if (c.g) j["g"] = *c.g;
    j["t0"] = c.t0;
    return j;
}

TuringConstants constants_from_json(const json& j) {
    TuringConstants c;
    c.family = family_from_name(j.at("family").get<std::string>());
    c.a = j.at("a").get<double>();
    c.b = j.at("b").get<double>();
    if (j.contains("g")) c.g = j.at("g").get<double>();
    c.t0 = j.at("t0").get<double>();
    return c;
}

json to_json(const SearchResult& r) {
    json j;
    j["best"] = {{"c", r.best_params.c}, {"d", r.best_params.d}, {"objective", r.best_value}};
    json table = json::array();
    for (const auto& row : r.table) {
        json jr;
        jr["index"] = row.index;
        jr["c"] = row.c;
        jr["d"] = row.d;
        jr["a"] = row.a;
        jr["b"] = row.b;
        if (row.g) jr["g"] = *row.g;
        jr["objective"] = row.objective;
        table.push_back(std::move(jr));
    }
    j["table"] = std::move(table);
    json skipped = json::array();
    for (const auto& s : r.skipped)
        skipped.push_back({{"index", s.index}, {"c", s.c}, {"d", s.d}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    return j;
}

SearchResult search_result_from_json(const json& j) {
    SearchResult r;
    r.best_params.c = j.at("best").at("c").get<double>();
    r.best_params.d = j.at("best").at("d").get<double>();
    r.best_value = j.at("best").at("objective").get<double>();
    for (const auto& jr : j.at("table")) {
        SearchRow row;
        row.index = jr.at("index").get<int>();
        row.c = jr.at("c").get<double>();
        row.d = jr.at("d").get<double>();
        row.a = jr.at("a").get<double>();
        row.b = jr.at("b").get<double>();
        if (jr.contains("g")) row.g = jr.at("g").get<double>();
        row.objective = jr.at("objective").get<double>();
        r.table.push_back(std::move(row));
    }
    for (const auto& js : j.at("skipped")) {
        r.skipped.push_back({js.at("index").get<int>(), js.at("c").get<double>(),
                             js.at("d").get<double>(), js.at("reason").get<std::string>()});
    }
    return r;
}

json to_json(const GrowthReport& r) {
    return json{{"t_lo", r.t_lo},           {"t_hi", r.t_hi},   {"samples", r.samples},
                {"max_ratio", r.max_ratio}, {"argmax_t", r.argmax_t},
                {"bound", r.bound},         {"pass", r.pass}};
}

GrowthReport growth_report_from_json(const json& j) {
    GrowthReport r;
    r.t_lo = j.at("t_lo").get<double>();
    r.t_hi = j.at("t_hi").get<double>();
    r.samples = j.at("samples").get<long>();
    r.max_ratio = j.at("max_ratio").get<double>();
    r.argmax_t = j.at("argmax_t").get<double>();
    r.bound = j.at("bound").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

json to_json(const CertificationReport& r) {
    json j;
    j["range"] = {{"n", r.n}, {"p", r.p}, {"g_n", r.g_n}, {"g_p", r.g_p}};
    j["blocks_used"] = r.blocks_used;
    j["required_blocks"] = r.required_blocks;
    j["forward_blocks"] = r.forward_blocks;
    j["certified"] = r.certified;
    j["lower_count"] = r.lower_count;
    j["upper_bound"] = r.upper_bound;
    if (r.exact_count) j["exact_count"] = *r.exact_count;
    j["constants_used"] = to_json(r.constants_used);
    return j;
}

CertificationReport certification_from_json(const json& j) {
    CertificationReport r;
    r.n = j.at("range").at("n").get<long>();
    r.p = j.at("range").at("p").get<long>();
    r.g_n = j.at("range").at("g_n").get<double>();
    r.g_p = j.at("range").at("g_p").get<double>();
    r.blocks_used = j.at("blocks_used").get<long>();
    r.required_blocks = j.at("required_blocks").get<long>();
    r.forward_blocks = j.at("forward_blocks").get<long>();
    r.certified = j.at("certified").get<bool>();
    r.lower_count = j.at("lower_count").get<long>();
    r.upper_bound = j.at("upper_bound").get<long>();
    if (j.contains("exact_count")) r.exact_count = j.at("exact_count").get<long>();
    r.constants_used = constants_from_json(j.at("constants_used"));
    return r;
}

json to_json(const BlockClassification& c) {
    json j;
    j["n_lo"] = c.n_lo;
    j["n_hi"] = c.n_hi;
    json blocks = json::array();
    for (const auto& b : c.blocks) {
        blocks.push_back({{"start_index", b.start_index},
                          {"length", b.p_len},
                          {"counts", b.counts},
                          {"rosser_ok", b.rosser_ok},
                          {"indeterminate", b.indeterminate}});
    }
    j["blocks"] = std::move(blocks);
    auto partial = [](const PartialBlock& p) {
        return json{{"start_index", p.start_index}, {"length", p.length}, {"counts", p.counts}};
    };
    if (c.leading) j["leading_partial"] = partial(*c.leading);
    if (c.trailing) j["trailing_partial"] = partial(*c.trailing);
    return j;
}

json envelope(const std::string& type, json report, json inputs) {
    json j;
    j["schema"] = kSchemaVersion;
    j["type"] = type;
    if (!inputs.is_null() && !inputs.empty()) j["inputs"] = std::move(inputs);
    j["report"] = std::move(report);
    return j;
}

// --- CSV --------------------------------------------------------------------

std::string to_csv(const TuringConstants& c, const Style& st) {
    std::ostringstream out;
    out << "family,a,b,g,t0\n";
    out << family_name(c.family) << ',' << format_number(c.a, st.sig_digits) << ','
        << format_number(c.b, st.sig_digits) << ','
        << (c.g ? format_number(*c.g, st.sig_digits) : std::string{}) << ','
        << format_number(c.t0, st.sig_digits) << '\n';
    return out.str();
}

std::string to_csv(const SearchResult& r, const Style& st) {
    const bool with_g = !r.table.empty() && r.table.front().g.has_value();
    std::ostringstream out;
    out << (with_g ? "c,d,a,b,g,objective\n" : "c,d,a,b,objective\n");
    for (const auto& row : r.table) {
        out << format_number(row.c, st.sig_digits) << ',' << format_number(row.d, st.sig_digits)
            << ',' << format_number(row.a, st.sig_digits) << ','
            << format_number(row.b, st.sig_digits) << ',';
        if (with_g) out << (row.g ? format_number(*row.g, st.sig_digits) : std::string{}) << ',';
        out << format_number(row.objective, st.sig_digits) << '\n';
    }
    return out.str();
}

std::string to_csv(const GrowthReport& r, const Style& st) {
    std::ostringstream out;
    out << "t_lo,t_hi,samples,max_ratio,argmax_t,bound,pass\n";
    out << format_number(r.t_lo, st.sig_digits) << ',' << format_number(r.t_hi, st.sig_digits)
        << ',' << r.samples << ',' << format_number(r.max_ratio, st.sig_digits) << ','
        << format_number(r.argmax_t, st.sig_digits) << ','
        << format_number(r.bound, st.sig_digits) << ',' << (r.pass ? "true" : "false") << '\n';
    return out.str();
}

std::string to_csv(const BlockClassification& c, const Style&) {
    std::ostringstream out;
    out << "start_index,length,counts,rosser_ok\n";
    block_csv_rows(out, c.blocks);
    return out.str();
}

// --- text -------------------------------------------------------------------

std::string to_text(const TuringConstants& c, const Style& st) {
    std::ostringstream out;
    out << "family : " << family_name(c.family) << '\n';
    out << "a      : " << format_number(c.a, st.sig_digits) << '\n';
    out << "b      : " << format_number(c.b, st.sig_digits) << '\n';
    if (c.g) out << "g      : " << format_number(*c.g, st.sig_digits) << '\n';
    out << "t0     : " << format_number(c.t0, st.sig_digits) << '\n';
    return out.str();
}

std::string to_text(const SearchResult& r, const Style& st) {
    std::ostringstream out;
    out << "best   : c=" << format_number(r.best_params.c, st.sig_digits)
        << " d=" << format_number(r.best_params.d, st.sig_digits)
        << " objective=" << format_number(r.best_value, st.sig_digits) << '\n';
    out << "points : " << r.table.size() << " evaluated, " << r.skipped.size() << " skipped\n";
    const bool with_g = !r.table.empty() && r.table.front().g.has_value();
    out << '\n';
    out << "        c            d            a            b            ";
    if (with_g) out << "g            ";
    out << "objective\n";
    for (const auto& row : r.table) {
        char line[200];
        if (with_g) {
            std::snprintf(line, sizeof(line), "  %-12s %-12s %-12s %-12s %-12s %s\n",
                          format_number(row.c, st.sig_digits).c_str(),
                          format_number(row.d, st.sig_digits).c_str(),
                          format_number(row.a, st.sig_digits).c_str(),
                          format_number(row.b, st.sig_digits).c_str(),
                          format_number(*row.g, st.sig_digits).c_str(),
                          format_number(row.objective, st.sig_digits).c_str());
        } else {
            std::snprintf(line, sizeof(line), "  %-12s %-12s %-12s %-12s %s\n",
                          format_number(row.c, st.sig_digits).c_str(),
                          format_number(row.d, st.sig_digits).c_str(),
                          format_number(row.a, st.sig_digits).c_str(),
                          format_number(row.b, st.sig_digits).c_str(),
                          format_number(row.objective, st.sig_digits).c_str());
        }
        out << line;
    }
    return out.str();
}

std::string to_text(const GrowthReport& r, const Style& st) {
    std::ostringstream out;
    out << "range     : [" << format_number(r.t_lo, st.sig_digits) << ", "
        << format_number(r.t_hi, st.sig_digits) << "]\n";
    out << "samples   : " << r.samples << '\n';
    out << "max ratio : " << format_number(r.max_ratio, st.sig_digits) << " at t="
        << format_number(r.argmax_t, st.sig_digits) << '\n';
    out << "bound     : " << format_number(r.bound, st.sig_digits) << '\n';
    out << "pass      : " << (r.pass ? "true" : "false") << '\n';
    return out.str();
}

std::string to_text(const CertificationReport& r, const Style& st) {
    std::ostringstream out;
    out << "range           : [g_" << r.n << ", g_" << r.p << "] = ["
        << format_number(r.g_n, st.sig_digits) << ", " << format_number(r.g_p, st.sig_digits)
        << "]\n";
    out << "blocks used     : " << r.blocks_used << " (required " << r.required_blocks << ")\n";
    out << "forward blocks  : " << r.forward_blocks << '\n';
    out << "certified       : " << (r.certified ? "true" : "false") << '\n';
    out << "zeros located   : " << r.lower_count << '\n';
    out << "upper bound     : " << r.upper_bound << '\n';
    if (r.exact_count) out << "exact N(g_p)    : " << *r.exact_count << '\n';
    out << "constants       : a=" << format_number(r.constants_used.a, st.sig_digits)
        << " b=" << format_number(r.constants_used.b, st.sig_digits) << '\n';
    return out.str();
}

std::size_t emit(const std::string& body, const std::string& path) {
    if (path.empty()) {
        std::cout << body;
        std::cout.flush();
        if (!std::cout) throw io_error("failed to write report to stdout");
        return body.size();
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << body;
    out.close();
    if (!out) throw io_error("failed while writing '" + path + "'");
    return body.size();
}

}  // namespace turing::io
