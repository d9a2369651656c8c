#include "hyp321/database.hpp"

#include "hyp321/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyp321 {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

std::pair<std::string, std::string> binding(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = expression' in '" + text + "'");
    return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

}  // namespace

std::string to_string(EntryStatus s) {
    switch (s) {
    case EntryStatus::Verified: return "verified";
    case EntryStatus::Conjecture: return "conjecture";
    case EntryStatus::Flagged: return "flagged";
    }
    return "?";
}

EntryStatus status_from_string(const std::string& s) {
    if (s == "verified") return EntryStatus::Verified;
    if (s == "conjecture") return EntryStatus::Conjecture;
    if (s == "flagged") return EntryStatus::Flagged;
    throw ParseError("unknown entry status '" + s + "'");
}

bool DbEntry::is_aux(const std::string& s) const {
    return std::any_of(aux.begin(), aux.end(), [&](const AuxSymbol& x) { return x.name == s; });
}

const IntSymbol* DbEntry::int_symbol(const std::string& s) const {
    for (auto& i : int_symbols)
        if (i.name == s) return &i;
    return nullptr;
}

std::vector<std::string> DbEntry::continuous_symbols() const {
    std::set<std::string> all = lhs.symbols();
    all.merge(free_symbols(rhs));
    for (auto& x : aux) all.merge(free_symbols(x.definition));
    std::vector<std::string> out;
    for (auto& s : all)
        if (!is_aux(s) && !int_symbol(s) && !is_integer_symbol(s)) out.push_back(s);
    return out;
}

Assignment DbEntry::complete(Assignment a) const {
    for (auto& x : aux) a[x.name] = eval_expr(x.definition, a);
    return a;
}

bool DbEntry::constraints_hold(const Assignment& a) const {
    for (auto& i : int_symbols) {
        auto it = a.find(i.name);
        if (it == a.end()) continue;
        double v = it->second.real();
        if (v != std::round(v) || v < double(i.min)) return false;
    }
    for (auto& [x, y] : less_than) {
        auto ix = a.find(x), iy = a.find(y);
        if (ix != a.end() && iy != a.end() && !(ix->second.real() < iy->second.real())) return false;
    }
    return true;
}

bool same_entry(const DbEntry& x, const DbEntry& y) {
    if (x.id != y.id || !same_order(x.lhs, y.lhs) || !structurally_equal(x.rhs, y.rhs) ||
        x.int_symbols != y.int_symbols || x.less_than != y.less_than || !(x.excess == y.excess) ||
        x.provenance != y.provenance || x.status != y.status || x.tolerance != y.tolerance ||
        x.note != y.note || x.aux.size() != y.aux.size())
        return false;
    for (std::size_t i = 0; i < x.aux.size(); ++i)
        if (x.aux[i].name != y.aux[i].name || !structurally_equal(x.aux[i].definition, y.aux[i].definition))
            return false;
    return true;
}

DbEntry make_entry(const EntrySpec& spec) {
    DbEntry e;
    e.id = spec.id;
    try {
        for (auto& p : split(spec.upper, ',')) e.lhs.upper.push_back(parse_linexpr(p));
        for (auto& p : split(spec.lower, ',')) e.lhs.lower.push_back(parse_linexpr(p));
        for (auto& a : split(spec.aux, ';')) {
            auto [name, def] = binding(a);
            e.aux.push_back({name, parse_expr(def)});
        }
        e.rhs = parse_expr(spec.rhs);
        auto lets = split(spec.let, ';');
        for (auto it = lets.rbegin(); it != lets.rend(); ++it) {
            auto [name, def] = binding(*it);
            e.rhs = substitute_exprs(e.rhs, {{name, parse_expr(def)}});
        }
    } catch (const ParseError& err) {
        throw ParseError(spec.id + ": " + err.what());
    }
    std::set<std::string> ints;
    for (auto& s : e.lhs.symbols())
        if (is_integer_symbol(s)) ints.insert(s);
    for (auto& s : free_symbols(e.rhs))
        if (is_integer_symbol(s)) ints.insert(s);
    for (auto& s : ints) e.int_symbols.push_back({s, 1});
    for (auto& c : split(spec.constraints, ';')) {
        if (auto p = c.find(">="); p != std::string::npos) {
            std::string name = trim(c.substr(0, p));
            long v = std::stol(trim(c.substr(p + 2)));
            bool found = false;
            for (auto& i : e.int_symbols)
                if (i.name == name) i.min = v, found = true;
            if (!found) throw ParseError(spec.id + ": constraint on unknown integer symbol '" + name + "'");
        } else if (auto q = c.find('<'); q != std::string::npos) {
            e.less_than.emplace_back(trim(c.substr(0, q)), trim(c.substr(q + 1)));
        } else {
            throw ParseError(spec.id + ": malformed constraint '" + c + "'");
        }
    }
    e.excess = excess(e.lhs);
    e.provenance = spec.provenance;
    e.status = spec.status;
    e.tolerance = spec.tolerance;
    e.note = spec.note;
    return e;
}

const DbEntry* lookup_entry(const std::vector<DbEntry>& db, const std::string& id) {
    for (auto& e : db)
        if (e.id == id) return &e;
    return nullptr;
}

const DbEntry& find_entry(const std::vector<DbEntry>& db, const std::string& id) {
    if (auto e = lookup_entry(db, id)) return *e;
    throw Error("no database entry '" + id + "'");
}

}  // namespace hyp321
