#include "hyp321/serialize.hpp"

#include "hyp321/errors.hpp"

namespace hyp321 {

namespace {

Rational rational_of(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

void need(bool ok, const std::string& what) {
    if (!ok) throw ParseError("malformed expression: " + what);
}

}  // namespace

Json lin_to_flat_json(const LinExpr& l) {
    Json j = Json::object();
    for (auto& [s, c] : l.terms()) j[s] = c.str();
    j["const"] = l.constant().str();
    return j;
}

LinExpr lin_from_flat_json(const Json& j) {
    need(j.is_object(), "linear leaf must be an object");
    LinExpr l;
    for (auto& [k, v] : j.items()) {
        if (k == "const")
            l.set_constant(rational_of(v));
        else
            l.set_coeff(k, rational_of(v));
    }
    return l;
}

Json lin_to_json(const LinExpr& l) {
    Json coeffs = Json::object();
    for (auto& [s, c] : l.terms()) coeffs[s] = c.str();
    return Json{{"coeffs", coeffs}, {"const", l.constant().str()}};
}

LinExpr lin_from_json(const Json& j) {
    need(j.is_object() && j.contains("coeffs") && j.contains("const"), "LinExpr needs coeffs and const");
    LinExpr l(rational_of(j.at("const")));
    need(j.at("coeffs").is_object(), "coeffs must be an object");
    for (auto& [k, v] : j.at("coeffs").items()) l.set_coeff(k, rational_of(v));
    return l;
}

Json expr_to_json(const Expr& e) {
    auto node = [](const char* tag, std::initializer_list<Json> rest) {
        Json j = Json::array({tag});
        for (auto& r : rest) j.push_back(r);
        return j;
    };
    auto list = [](const char* tag, const std::vector<Expr>& args) {
        Json j = Json::array({tag});
        for (auto& a : args) j.push_back(expr_to_json(a));
        return j;
    };
    switch (e->kind) {
    case Kind::Const: return node("const", {e->value.str()});
    case Kind::Pi: return node("pi", {});
    case Kind::Lin: return node("lin", {lin_to_flat_json(e->lin)});
    case Kind::Add: return list("add", e->args);
    case Kind::Mul: return list("mul", e->args);
    case Kind::Neg: return list("neg", e->args);
    case Kind::Recip: return list("recip", e->args);
    case Kind::Pow: return list("pow", e->args);
    case Kind::Gamma: return list("Gamma", e->args);
    case Kind::Sin: return list("sin", e->args);
    case Kind::Cos: return list("cos", e->args);
    case Kind::Polygamma: return node("psi", {e->order, expr_to_json(e->args[0])});
    case Kind::Pochhammer:
        return node("poch", {expr_to_json(e->args[0]), lin_to_flat_json(e->ints[0])});
    case Kind::FiniteSum:
        return node("sum", {e->index, lin_to_flat_json(e->ints[0]), lin_to_flat_json(e->ints[1]),
                            expr_to_json(e->args[0])});
    case Kind::WatsonRef:
        return node("W", {expr_to_json(e->args[0]), expr_to_json(e->args[1]), expr_to_json(e->args[2]),
                          lin_to_flat_json(e->ints[0]), lin_to_flat_json(e->ints[1])});
    }
    throw Error("unknown expression node");
}

Expr expr_from_json(const Json& j) {
    need(j.is_array() && !j.empty() && j[0].is_string(), "node must be a tagged array");
    const std::string tag = j[0].get<std::string>();
    auto arity = [&](std::size_t n) { need(j.size() == n + 1, tag + " arity"); };
    auto kids = [&]() {
        std::vector<Expr> v;
        for (std::size_t i = 1; i < j.size(); ++i) v.push_back(expr_from_json(j[i]));
        return v;
    };
    auto raw = [](Kind k, std::vector<Expr> args) {
        Node n(k);
        n.args = std::move(args);
        return std::make_shared<const Node>(std::move(n));
    };
    if (tag == "const") return arity(1), ex::constant(rational_of(j[1]));
    if (tag == "pi") return arity(0), ex::pi();
    if (tag == "lin") {
        arity(1);
        Node n(Kind::Lin);
        n.lin = lin_from_flat_json(j[1]);
        if (n.lin.is_constant()) return ex::constant(n.lin.constant());
        return std::make_shared<const Node>(std::move(n));
    }
    // structural kinds are rebuilt verbatim so that save/load/save is byte-stable
    if (tag == "add") return need(j.size() >= 3, "add arity"), raw(Kind::Add, kids());
    if (tag == "mul") return need(j.size() >= 3, "mul arity"), raw(Kind::Mul, kids());
    if (tag == "neg") return arity(1), raw(Kind::Neg, kids());
    if (tag == "recip") return arity(1), raw(Kind::Recip, kids());
    if (tag == "pow") return arity(2), raw(Kind::Pow, kids());
    if (tag == "Gamma") return arity(1), ex::gamma(expr_from_json(j[1]));
    if (tag == "sin") return arity(1), ex::sin(expr_from_json(j[1]));
    if (tag == "cos") return arity(1), ex::cos(expr_from_json(j[1]));
    if (tag == "psi") {
        arity(2);
        need(j[1].is_number_integer() && j[1].get<int>() >= 0, "psi order");
        return ex::polygamma(j[1].get<int>(), expr_from_json(j[2]));
    }
    if (tag == "poch") return arity(2), ex::poch(expr_from_json(j[1]), lin_from_flat_json(j[2]));
    if (tag == "sum") {
        arity(4);
        need(j[1].is_string(), "sum index");
        return ex::finite_sum(j[1].get<std::string>(), lin_from_flat_json(j[2]), lin_from_flat_json(j[3]),
                              expr_from_json(j[4]));
    }
    if (tag == "W") {
        arity(5);
        return ex::watson(expr_from_json(j[1]), expr_from_json(j[2]), expr_from_json(j[3]),
                          lin_from_flat_json(j[4]), lin_from_flat_json(j[5]));
    }
    throw ParseError("unknown expression tag '" + tag + "'");
}

}  // namespace hyp321
