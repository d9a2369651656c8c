#include "hyp321/database.hpp"

#include "hyp321/errors.hpp"
#include "hyp321/serialize.hpp"

#include <fstream>
#include <sstream>

namespace hyp321 {

namespace {

const char* kSchema = "hyp321/1";

Json params_to_json(const ParamSet& p) {
    Json up = Json::array(), lo = Json::array();
    for (auto& u : p.upper) up.push_back(lin_to_json(u));
    for (auto& l : p.lower) lo.push_back(lin_to_json(l));
    return Json{{"upper", up}, {"lower", lo}};
}

ParamSet params_from_json(const Json& j) {
    ParamSet p;
    for (auto& u : j.at("upper")) p.upper.push_back(lin_from_json(u));
    for (auto& l : j.at("lower")) p.lower.push_back(lin_from_json(l));
    return p;
}

Json entry_to_json(const DbEntry& e) {
    Json ints = Json::array(), rel = Json::array(), aux = Json::array();
    for (auto& i : e.int_symbols) ints.push_back(Json{{"name", i.name}, {"min", i.min}});
    for (auto& [x, y] : e.less_than) rel.push_back(x + "<" + y);
    for (auto& a : e.aux) aux.push_back(Json{{"name", a.name}, {"definition", expr_to_json(a.definition)}});
    return Json{{"id", e.id},
                {"lhs", params_to_json(e.lhs)},
                {"rhs", expr_to_json(e.rhs)},
                {"int_symbols", ints},
                {"constraints", rel},
                {"aux", aux},
                {"excess", lin_to_json(e.excess)},
                {"provenance", e.provenance},
                {"status", to_string(e.status)},
                {"tolerance", e.tolerance},
                {"note", e.note}};
}

DbEntry entry_from_json(const Json& j) {
    DbEntry e;
    e.id = j.at("id").get<std::string>();
    e.lhs = params_from_json(j.at("lhs"));
    if (e.lhs.upper.size() != 3 || e.lhs.lower.size() != 2)
        throw ParseError(e.id + ": expected three upper and two lower parameters");
    e.rhs = expr_from_json(j.at("rhs"));
    for (auto& i : j.at("int_symbols")) e.int_symbols.push_back({i.at("name").get<std::string>(), i.at("min").get<long>()});
    for (auto& c : j.at("constraints")) {
        auto s = c.get<std::string>();
        auto p = s.find('<');
        if (p == std::string::npos) throw ParseError(e.id + ": malformed constraint '" + s + "'");
        e.less_than.emplace_back(s.substr(0, p), s.substr(p + 1));
    }
    for (auto& a : j.at("aux")) e.aux.push_back({a.at("name").get<std::string>(), expr_from_json(a.at("definition"))});
    e.excess = lin_from_json(j.at("excess"));
    e.provenance = j.at("provenance").get<std::string>();
    e.status = status_from_string(j.at("status").get<std::string>());
    e.tolerance = j.at("tolerance").get<double>();
    e.note = j.at("note").get<std::string>();
    if (!(e.excess == excess(e.lhs)))
        throw ParseError(e.id + ": declared excess " + e.excess.str() + " differs from the parameters' " +
                         excess(e.lhs).str());
    return e;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string dump_db(const std::vector<DbEntry>& entries) {
    Json doc{{"schema", kSchema}, {"entries", Json::array()}};
    for (auto& e : entries) doc["entries"].push_back(entry_to_json(e));
    return doc.dump(1) + "\n";
}

std::vector<DbEntry> parse_db(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& err) {
        auto [line, col] = line_column(text, err.byte ? err.byte - 1 : 0);
        throw ParseError(std::string("malformed database document: ") + err.what(), line, col);
    }
    if (!doc.is_object() || !doc.contains("schema") || !doc.contains("entries"))
        throw ParseError("database document needs 'schema' and 'entries'", 1, 1);
    if (doc["schema"] != kSchema)
        throw SchemaVersionMismatch("expected schema " + std::string(kSchema) + ", found " + doc["schema"].dump());
    std::vector<DbEntry> out;
    for (auto& j : doc["entries"]) {
        std::string id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "?";
        auto at = text.find("\"id\": \"" + id + "\"");
        auto [line, col] = line_column(text, at == std::string::npos ? 0 : at);
        try {
            out.push_back(entry_from_json(j));
        } catch (const ParseError& err) {
            throw ParseError(std::string("entry ") + id + ": " + err.what(), line, col);
        } catch (const Json::exception& err) {
            throw ParseError(std::string("entry ") + id + ": " + err.what(), line, col);
        } catch (const Error& err) {
            throw ParseError(std::string("entry ") + id + ": " + err.what(), line, col);
        }
    }
    return out;
}

std::vector<DbEntry> load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open database file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_db(ss.str());
}

void save(const std::vector<DbEntry>& entries, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write database file '" + path + "'");
    out << dump_db(entries);
}

}  // namespace hyp321
