#include "operator_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jband::cli {

namespace {

using nlohmann::json;

Complex parse_entry(const json& entry, const std::string& where) {
    if (entry.is_number()) {
        return {entry.get<double>(), 0.0};
    }
    if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
        return {entry[0].get<double>(), entry[1].get<double>()};
    }
    throw ParseError(where + ": expected a number or an [re, im] pair, got " + entry.dump());
}

ComplexMatrix parse_matrix(const json& rows, const std::string& where) {
    if (!rows.is_array() || rows.empty()) {
        throw ParseError(where + ": expected a non-empty list of rows");
    }
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string row_where = where + " row " + std::to_string(r);
        const json& row = rows[r];
        if (!row.is_array() || row.empty()) {
            throw ParseError(row_where + ": expected a non-empty list of entries");
        }
        if (r == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw ParseError(row_where + ": has " + std::to_string(row.size()) +
                             " entries, row 0 has " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            entries.push_back(parse_entry(row[c], row_where + " column " + std::to_string(c)));
        }
    }
    return {rows.size(), cols, std::move(entries)};
}

std::size_t parse_positive(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    const json& v = doc[key];
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw ParseError(std::string("field '") + key + "' must be a positive integer, got " + v.dump());
    }
    return v.get<std::size_t>();
}

std::vector<ComplexMatrix> parse_list(const json& doc, const char* key, std::size_t p) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    const json& list = doc[key];
    if (!list.is_array()) {
        throw ParseError(std::string("field '") + key + "' must be a list of matrices");
    }
    if (list.size() != p) {
        throw ParseError(std::string("field '") + key + "' has " + std::to_string(list.size()) +
                         " matrices but p = " + std::to_string(p));
    }
    std::vector<ComplexMatrix> out;
    out.reserve(p);
    for (std::size_t i = 0; i < list.size(); ++i) {
        out.push_back(parse_matrix(list[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Complex z = m(r, c);
            if (z.imag() == 0.0) {
                row.push_back(z.real());
            } else {
                row.push_back(json::array({z.real(), z.imag()}));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

PeriodicJacobiOperator parse_operator(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("top level must be an object with fields p, m, a, b");
    }
    const std::size_t p = parse_positive(doc, "p");
    const std::size_t m = parse_positive(doc, "m");
    return {m, parse_list(doc, "a", p), parse_list(doc, "b", p)};
}

PeriodicJacobiOperator read_operator_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_operator(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_operator(const PeriodicJacobiOperator& op) {
    // One matrix per line keeps golden files readable and diffs local.
    std::ostringstream out;
    out << "{\n  \"p\": " << op.period() << ",\n  \"m\": " << op.block_size << ",\n";
    auto list = [&](const char* key, const std::vector<ComplexMatrix>& blocks, bool last) {
        out << "  \"" << key << "\": [\n";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            out << "    " << matrix_to_json(blocks[i]).dump() << (i + 1 < blocks.size() ? ",\n" : "\n");
        }
        out << (last ? "  ]\n" : "  ],\n");
    };
    list("a", op.a, false);
    list("b", op.b, true);
    out << "}\n";
    return out.str();
}

void write_operator_file(const std::filesystem::path& path, const PeriodicJacobiOperator& op) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << format_operator(op);
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

} // namespace jband::cli
