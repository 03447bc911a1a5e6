#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altpoly/errors.hpp"
#include "altpoly/pipeline.hpp"
#include "altpoly/serialization.hpp"

namespace {

using namespace altpoly;

ParamMap parse_params(const std::vector<std::string>& raw) {
    ParamMap out;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("--param expects key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        if (out.count(key)) throw ParseError("duplicate parameter '" + key + "'");
        out.emplace(key, Rational::parse(item.substr(eq + 1)));
    }
    return out;
}

std::string read_input(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + out_path + "'");
    f << text;
}

std::string generate_csv(const std::vector<Polynomial>& rows) {
    std::ostringstream csv;
    csv << "n,x,value,value_approx30\n";
    const Rational eighth(1, 8);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        for (int k = -16; k <= 16; ++k) {
            const Rational x = Rational(k) * eighth;
            const Rational value = rows[n](x);
            csv << n << "," << x.str() << "," << value.str() << ","
                << decimal30(value) << "\n";
        }
    }
    return csv.str();
}

int run_generate(const std::string& family_str, const std::vector<std::string>& raw_params,
                 std::size_t depth, const std::string& format, const std::string& out_path) {
    const FamilyKind kind = family_kind_from_id(family_str);
    const ParamMap params = parse_params(raw_params);
    screen_parameters(kind, params, depth);
    const std::vector<Polynomial> rows = family_table(kind, params, depth);
    if (format == "csv") {
        emit(generate_csv(rows), out_path);
        return 0;
    }
    nlohmann::json doc;
    doc["family"] = family_id(kind);
    doc["params"] = params_to_json(params);
    doc["depth"] = depth;
    nlohmann::json arr = nlohmann::json::array();
    for (const Polynomial& p : rows) arr.push_back(polynomial_to_json(p));
    doc["rows"] = arr;
    emit(dump_document(doc), out_path);
    return 0;
}

int run_pipeline(const std::string& family_str, const std::vector<std::string>& raw_params,
                 const std::optional<Rational>& tau, std::size_t depth,
                 const std::string& out_path) {
    const FamilyKind kind = family_kind_from_id(family_str);
    const ParamMap params = parse_params(raw_params);
    const nlohmann::json doc = pipeline_document(kind, params, tau, depth);
    emit(dump_document(doc), out_path);
    return document_has_violations(doc) ? 1 : 0;
}

int run_verify(const std::string& input, const std::string& out_path) {
    const nlohmann::json doc = parse_document(read_input(input), input);
    const nlohmann::json result = verify_document(doc);
    emit(dump_document(result), out_path);
    return document_has_violations(result) ? 1 : 0;
}

int run_pearson(const std::string& input, const std::string& out_path) {
    const nlohmann::json doc = parse_document(read_input(input), input);
    const nlohmann::json result = pearson_document(doc);
    emit(dump_document(result), out_path);
    return document_has_violations(result) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructor and verifier for (-1)-type orthogonal polynomial families"};
    app.require_subcommand(1);

    std::string family_str;
    std::vector<std::string> raw_params;
    std::size_t depth = 0;
    std::string format = "json";
    std::string tau_str;
    std::string out_path;
    std::string input_path;

    CLI::App* generate = app.add_subcommand(
        "generate", "emit members of a family in closed form (json or csv)");
    generate->add_option("--family", family_str, "family id; see README for the list")
        ->required();
    generate->add_option("--param", raw_params, "family parameter as key=value (repeatable)");
    generate->add_option("--depth", depth, "largest member index")->default_val(8);
    generate->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
    generate->add_option("--out", out_path, "write to this path instead of stdout");

    CLI::App* pipeline = app.add_subcommand(
        "pipeline", "run the full construction and structural checks for a family");
    pipeline->add_option("--family", family_str, "family id; see README for the list")
        ->required();
    pipeline->add_option("--param", raw_params, "family parameter as key=value (repeatable)");
    pipeline->add_option("--tau", tau_str, "pullback point (family-dependent default)");
    pipeline->add_option("--depth", depth, "pullback depth N; members run to 2N+1")
        ->default_val(6);
    pipeline->add_option("--out", out_path, "write to this path instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "replay the structural checks of a stored pipeline document");
    verify->add_option("input", input_path, "path of the document to check")->required();
    verify->add_option("--out", out_path, "write to this path instead of stdout");

    CLI::App* pearson = app.add_subcommand(
        "pearson", "run the classicality search on a stored document or functional");
    pearson->add_option("input", input_path, "path of the document to search")->required();
    pearson->add_option("--out", out_path, "write to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::optional<Rational> tau;
        if (pipeline->count("--tau")) tau = Rational::parse(tau_str);
        if (generate->parsed())
            return run_generate(family_str, raw_params, depth, format, out_path);
        if (pipeline->parsed())
            return run_pipeline(family_str, raw_params, tau, depth, out_path);
        if (verify->parsed()) return run_verify(input_path, out_path);
        return run_pearson(input_path, out_path);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
