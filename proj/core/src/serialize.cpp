#include "crysext/serialize.hpp"

#include "crysext/error.hpp"

namespace crysext {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::invalid_argument, path + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) bad(path, std::string("missing key \"") + key + "\"");
    return *it;
}

int int_at(const Json& j, const char* key, const std::string& path) {
    const Json& v = member(j, key, path);
    if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
    return v.get<int>();
}

}  // namespace

Json to_json(const FieldElem& x) { return x.to_string(); }

FieldElem field_from_json(const Json& j, const Context& ctx, const std::string& path) {
    if (j.is_number_integer()) return ctx.field().from_int(j.get<long long>());
    if (!j.is_string()) bad(path, "expected a field element string");
    try {
        return ctx.field().parse(j.get<std::string>());
    } catch (const Error& err) {
        bad(path, err.what());
    }
}

Json to_json(const TruncPoly& poly) {
    Json out = Json::array();
    for (const auto& [deg, c] : poly.terms()) out.push_back(Json::array({deg, c.to_string()}));
    return out;
}

TruncPoly poly_from_json(const Json& j, const Context& ctx, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of [degree, coefficient] terms");
    TruncPoly out(ctx.ring());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string here = path + "[" + std::to_string(i) + "]";
        const Json& term = j[i];
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) bad(here, "expected [degree, coefficient]");
        const int deg = term[0].get<int>();
        if (deg < 0) bad(here, "negative degree");
        if (deg >= ctx.ring_length()) continue;
        out.set_coeff(deg, out.coeff(deg) + field_from_json(term[1], ctx, here + "[1]"));
    }
    return out;
}

Json to_json(const FullChar& chi) { return Json{{"exp", chi.exponent()}, {"frob", to_json(chi.frob)}}; }

FullChar char_from_json(const Json& j, const Context& ctx, const std::string& path) {
    const FieldElem frob = field_from_json(member(j, "frob", path), ctx, path + ".frob");
    if (frob.is_zero()) bad(path + ".frob", "Frobenius scalar must be a unit");
    return make_char(ctx, int_at(j, "exp", path), frob);
}

Json to_json(const SerreWeight& a) { return Json{{"a1", a.a1}, {"a2", a.a2}}; }

SerreWeight weight_from_json(const Json& j, const std::string& path) {
    return {int_at(j, "a1", path), int_at(j, "a2", path)};
}

Json to_json(const JDelta& jd) { return Json{{"J", jd.j_full ? "full" : "empty"}, {"delta", jd.delta}}; }

JDelta jdelta_from_json(const Json& j, const std::string& path) {
    const Json& js = member(j, "J", path);
    if (!js.is_string() || (js != "full" && js != "empty")) bad(path + ".J", "expected \"full\" or \"empty\"");
    return {js == "full", int_at(j, "delta", path)};
}

Json to_json(const ValidPair& vp) { return Json{{"x", vp.x}, {"y", vp.y}, {"k", vp.k}, {"l", vp.l}}; }

ValidPair valid_pair_from_json(const Json& j, const std::string& path) {
    return {int_at(j, "x", path), int_at(j, "y", path), int_at(j, "k", path), int_at(j, "l", path)};
}

Json to_json(const RankOneBM& m) { return Json{{"x", m.x}, {"c", to_json(m.c)}, {"k", m.k}}; }

RankOneBM rank_one_from_json(const Json& j, const Context& ctx, const std::string& path) {
    RankOneBM m{int_at(j, "x", path), field_from_json(member(j, "c", path), ctx, path + ".c"), int_at(j, "k", path)};
    validate_rank_one(m, ctx);
    return m;
}

Json to_json(const ExtBM& p) {
    return Json{{"x", p.x()},        {"y", p.y()},        {"lambda", to_json(p.lambda)}, {"c", to_json(p.c())},
                {"d", to_json(p.d())}, {"k", p.k()}, {"l", p.l()}};
}

ExtBM ext_from_json(const Json& j, const Context& ctx, const std::string& path) {
    ExtBM p{{int_at(j, "x", path), field_from_json(member(j, "c", path), ctx, path + ".c"), int_at(j, "k", path)},
            {int_at(j, "y", path), field_from_json(member(j, "d", path), ctx, path + ".d"), int_at(j, "l", path)},
            poly_from_json(member(j, "lambda", path), ctx, path + ".lambda")};
    validate_extension(p, ctx);
    return p;
}

Json to_json(const Context& ctx) {
    return Json{{"p", ctx.p()}, {"e", ctx.e()}, {"f", ctx.f()}, {"cyclotomic_scalar", to_json(ctx.cyclotomic_scalar())}};
}

Context context_from_json(const Json& j, const std::string& path) {
    const Context base(int_at(j, "p", path), int_at(j, "e", path), j.contains("f") ? int_at(j, "f", path) : 1);
    if (!j.contains("cyclotomic_scalar")) return base;
    const FieldElem scalar = field_from_json(j["cyclotomic_scalar"], base, path + ".cyclotomic_scalar");
    return Context(base.p(), base.e(), base.f(), scalar);
}

}  // namespace crysext
