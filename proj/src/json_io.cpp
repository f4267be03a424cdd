#include "wittex/json_io.hpp"

#include "wittex/error.hpp"

namespace wittex {

namespace {

std::string upoly_text(const UPoly& f) { return mpoly_format(to_mpoly(f, Var::K)); }

std::string string_field(const nlohmann::ordered_json& j, const char* key) {
    if (!j.contains(key))
        throw ParseError(std::string("missing record field: ") + key);
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ParseError(std::string("record field is not a string: ") + key);
    return v.get<std::string>();
}

MPoly km_poly_field(const nlohmann::ordered_json& j, const char* key) {
    MPoly p = mpoly_parse(string_field(j, key));
    if (p.coeff_of(Var::ALPHA, 0) != p || p.coeff_of(Var::BETA, 0) != p)
        throw ParseError(std::string("weight variables are not allowed in ") + key);
    return p;
}

UPoly k_poly_field(const nlohmann::ordered_json& j, const char* key) {
    MPoly p = km_poly_field(j, key);
    if (p.coeff_of(Var::M, 0) != p)
        throw ParseError(std::string("the index variable m is not allowed in ") +
                         key);
    return to_upoly(p, Var::K);
}

}  // namespace

nlohmann::ordered_json cocycle_to_json(const Cocycle& c) {
    if (!c.invk.is_zero())
        throw SerializationError(
            "a 1/(m+k) component has no record shape; it only arises as the "
            "dual image of an inverse-index component");
    const bool others =
        !c.poly.is_zero() || !c.invm.is_zero() || !c.dm0.is_zero();
    if (!c.dkm.is_zero() && others)
        throw SerializationError(
            "a k+m = 0 mass mixed with other components has no record shape");

    nlohmann::ordered_json j;
    j["alpha"] = scalar_format(c.params.alpha);
    j["beta"] = scalar_format(c.params.beta);
    j["gamma"] = scalar_format(c.params.gamma);
    if (!c.dkm.is_zero()) {
        j["kind"] = "delta_km";
        j["f"] = upoly_text(c.dkm);
    } else if (!c.invm.is_zero() || (!c.poly.is_zero() && !c.dm0.is_zero())) {
        const MPoly mu = to_mpoly(c.invm, Var::K) + MPoly::var(Var::M) * c.poly;
        const UPoly at_zero =
            c.dm0 + to_upoly(c.poly.substitute({{Var::M, MPoly(0)}}), Var::K);
        j["kind"] = "inv_m";
        j["mu"] = mpoly_format(mu);
        j["at_zero"] = upoly_text(at_zero);
    } else if (!c.dm0.is_zero()) {
        j["kind"] = "delta_m0";
        j["f"] = upoly_text(c.dm0);
    } else {
        j["kind"] = "poly";
        j["poly"] = mpoly_format(c.poly);
    }
    return j;
}

Cocycle cocycle_from_json(const nlohmann::ordered_json& j) {
    ExtensionParams p(scalar_parse(string_field(j, "alpha")),
                      scalar_parse(string_field(j, "beta")),
                      scalar_parse(string_field(j, "gamma")));
    const std::string kind = string_field(j, "kind");
    if (kind == "poly") return make_poly_cocycle(std::move(p), km_poly_field(j, "poly"));
    if (kind == "delta_km") return make_delta_km(std::move(p), k_poly_field(j, "f"));
    if (kind == "delta_m0") return make_delta_m0(std::move(p), k_poly_field(j, "f"));
    if (kind == "inv_m")
        return make_inv_m(std::move(p), km_poly_field(j, "mu"),
                          k_poly_field(j, "at_zero"));
    throw ParseError("unknown record kind: " + kind);
}

}  // namespace wittex
