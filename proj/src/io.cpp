#include "canal/io.hpp"

#include <fstream>

namespace canal::io {

namespace {

const json& require(const json& j, const std::string& field) {
    if (!j.is_object() || !j.contains(field))
        throw SpecError("missing field '" + field + "'");
    return j.at(field);
}

} // namespace

json rat_json(const Rat& q) { return rat_to_string(q); }

Rat parse_rat(const json& j, const std::string& field) {
    try {
        if (j.is_string()) return rat_from_string(j.get<std::string>());
        if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    } catch (const std::exception& e) {
        throw SpecError("field '" + field + "': " + e.what());
    }
    throw SpecError("field '" + field + "' must be a rational string \"p/q\" or an integer");
}

json unipoly_json(const UniPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_json(c));
    return arr;
}

UniPoly parse_unipoly(const json& j, const std::string& field) {
    if (!j.is_array()) throw SpecError("field '" + field + "' must be a coefficient array");
    std::vector<Rat> c;
    for (std::size_t i = 0; i < j.size(); ++i)
        c.push_back(parse_rat(j[i], field + "[" + std::to_string(i) + "]"));
    return UniPoly(std::move(c));
}

json ratfunc_json(const RatFunc& f) {
    return json{{"num", unipoly_json(f.num())}, {"den", unipoly_json(f.den())}};
}

RatFunc parse_ratfunc(const json& j, const std::string& field) {
    if (!j.is_object()) throw SpecError("field '" + field + "' must be {num, den}");
    UniPoly num = parse_unipoly(require(j, "num"), field + ".num");
    UniPoly den = j.contains("den") ? parse_unipoly(j.at("den"), field + ".den")
                                    : UniPoly::constant(Rat(1));
    try {
        return RatFunc(num, den);
    } catch (const KernelError& e) {
        throw SpecError("field '" + field + "': " + e.what());
    }
}

json isometry_json(const Isometry& f) {
    json q = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < 3; ++j2) row.push_back(rat_json(f.Q.m[i][j2]));
        q.push_back(row);
    }
    return json{{"Q", q},
                {"b", json::array({rat_json(f.b.x), rat_json(f.b.y), rat_json(f.b.z)})},
                {"det", f.det_sign}};
}

Isometry parse_isometry(const json& j, const std::string& field) {
    const json& q = require(j, "Q");
    if (!q.is_array() || q.size() != 3) throw SpecError("field '" + field + ".Q' must be 3x3");
    RMat3 Q;
    for (int i = 0; i < 3; ++i) {
        if (!q[i].is_array() || q[i].size() != 3)
            throw SpecError("field '" + field + ".Q' must be 3x3");
        for (int k = 0; k < 3; ++k)
            Q.m[i][k] = parse_rat(q[i][k], field + ".Q");
    }
    RVec3 b(Rat(0), Rat(0), Rat(0));
    if (j.contains("b")) {
        const json& bj = j.at("b");
        if (!bj.is_array() || bj.size() != 3)
            throw SpecError("field '" + field + ".b' must have 3 entries");
        b = RVec3(parse_rat(bj[0], field + ".b"), parse_rat(bj[1], field + ".b"),
                  parse_rat(bj[2], field + ".b"));
    }
    try {
        return Isometry(Q, b);
    } catch (const KernelError& e) {
        throw SpecError("field '" + field + "': " + e.what());
    }
}

json moebius_json(const Moebius& m) {
    return json::array(
        {rat_json(m.alpha()), rat_json(m.beta()), rat_json(m.gamma()), rat_json(m.delta())});
}

Moebius parse_moebius(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4)
        throw SpecError("field '" + field + "' must be a quadruple [alpha, beta, gamma, delta]");
    try {
        return Moebius(parse_rat(j[0], field), parse_rat(j[1], field), parse_rat(j[2], field),
                       parse_rat(j[3], field));
    } catch (const KernelError& e) {
        throw SpecError("field '" + field + "': " + e.what());
    }
}

namespace {

CanalSurface parse_surface(const json& j, const std::string& field) {
    const json& spine = require(j, "spine");
    RatFunc x = parse_ratfunc(require(spine, "x"), field + ".spine.x");
    RatFunc y = parse_ratfunc(require(spine, "y"), field + ".spine.y");
    RatFunc z = parse_ratfunc(require(spine, "z"), field + ".spine.z");
    RatFunc r = parse_ratfunc(require(j, "radius"), field + ".radius");
    return CanalSurface{SpaceCurve(x, y, z), r};
}

} // namespace

SurfaceSpec parse_spec(const json& j) {
    std::string kind = require(j, "kind").get<std::string>();
    SurfaceSpec spec;
    if (kind == "canal") {
        spec.kind = SurfaceSpec::Kind::Canal;
        spec.surface1 = parse_surface(j, "(root)");
    } else if (kind == "dupin") {
        spec.kind = SurfaceSpec::Kind::Dupin;
        spec.surface1 = parse_surface(require(j, "pair1"), "pair1");
        spec.surface2 = parse_surface(require(j, "pair2"), "pair2");
    } else if (kind == "blend") {
        spec.kind = SurfaceSpec::Kind::Blend;
        spec.surface1 = parse_surface(require(j, "surface1"), "surface1");
        spec.surface2 = parse_surface(require(j, "surface2"), "surface2");
        spec.t1 = parse_rat(require(j, "t1"), "t1");
        spec.t2 = parse_rat(require(j, "t2"), "t2");
        if (j.contains("continuity")) {
            if (!j.at("continuity").is_number_integer())
                throw SpecError("field 'continuity' must be an integer");
            spec.continuity = j.at("continuity").get<int>();
        }
        if (j.contains("symmetry"))
            spec.symmetry = parse_isometry(j.at("symmetry"), "symmetry");
    } else {
        throw SpecError("field 'kind' must be one of canal | dupin | blend");
    }
    return spec;
}

SurfaceSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SpecError(std::string("invalid JSON: ") + e.what());
    }
    return parse_spec(j);
}

namespace {

json vec3_json(const RVec3& v) {
    return json::array({rat_json(v.x), rat_json(v.y), rat_json(v.z)});
}

json plane_json(const Plane& p) {
    return json{{"normal", vec3_json(p.normal)}, {"offset", rat_json(p.offset)}};
}

json entry_json(const SymmetryEntry& e) {
    json out = isometry_json(e.f);
    out["moebius"] = moebius_json(e.phi);
    if (e.phi2) out["moebius2"] = moebius_json(*e.phi2);
    if (e.swaps_spines) out["swaps_spines"] = true;
    out["description"] = e.description;
    out["kind"] = "exact";
    return out;
}

} // namespace

json symmetry_report_json(const SymmetryReport& rep) {
    json out;
    out["group"] = rep.group_label;
    out["symmetry_count"] = rep.symmetries.size();
    json syms = json::array();
    for (const auto& e : rep.symmetries) syms.push_back(entry_json(e));
    out["symmetries"] = syms;
    if (!rep.numeric_symmetries.empty()) {
        json nsyms = json::array();
        for (const auto& e : rep.numeric_symmetries) {
            json q = json::array();
            for (int i = 0; i < 3; ++i)
                q.push_back(json::array({e.Q[i][0], e.Q[i][1], e.Q[i][2]}));
            json m = json::array();
            for (int i = 0; i < 4; ++i) m.push_back(e.moebius[i].to_double());
            nsyms.push_back(json{{"kind", "numeric"},
                                 {"Q", q},
                                 {"b", json::array({e.b[0], e.b[1], e.b[2]})},
                                 {"moebius", m},
                                 {"residual_bound", e.residual}});
        }
        out["numeric_symmetries"] = nsyms;
    }
    if (rep.continuous_family) {
        const auto& fam = *rep.continuous_family;
        json f{{"kind", fam.kind},
               {"axis_point", vec3_json(fam.axis_point)},
               {"axis_dir", vec3_json(fam.axis_dir)}};
        if (fam.mirror) f["mirror_plane"] = plane_json(*fam.mirror);
        out["continuous_family"] = f;
    }
    return out;
}

json dupin_report_json(const DupinCyclide& d, bool super, const SymmetryReport& rep) {
    json out = symmetry_report_json(rep);
    switch (d.frame.type) {
        case CyclideType::I: out["type"] = "I"; break;
        case CyclideType::II: out["type"] = "II"; break;
        case CyclideType::III: out["type"] = "III"; break;
    }
    out["super_symmetric"] = super;
    json params;
    const auto& p = d.frame.params;
    if (d.frame.type == CyclideType::I) {
        params["a"] = rat_json(p.a);
        params["c"] = rat_json(p.c);
    } else if (d.frame.type == CyclideType::II) {
        params["a"] = rat_json(p.a);
        params["b"] = rat_json(p.b);
        params["c"] = rat_json(p.c);
        params["f"] = rat_json(p.f);
    } else {
        params["c"] = rat_json(p.c);
        params["g"] = rat_json(p.g);
    }
    out["params"] = params;
    out["center"] = vec3_json(d.frame.O);
    out["pose"] = isometry_json(d.frame.pose);
    json planes = json::array();
    for (const auto& pl : d.frame.planes) planes.push_back(plane_json(pl));
    out["planes"] = planes;
    return out;
}

json blend_json(const BlendResult& blend, int continuity) {
    json cps = json::array();
    for (const auto& p : blend.spine_bezier.control_points) cps.push_back(vec3_json(p));
    json bern = json::array();
    for (const auto& a : blend.radius_bezier.coeffs) bern.push_back(rat_json(a));
    json out{{"control_points", cps},
             {"radius_bernstein", bern},
             {"radius_poly", unipoly_json(blend.surface.radius.num())},
             {"continuity", continuity}};
    out["spine_poly"] = json{{"x", ratfunc_json(blend.surface.spine.x)},
                             {"y", ratfunc_json(blend.surface.spine.y)},
                             {"z", ratfunc_json(blend.surface.spine.z)}};
    if (blend.symmetry_case != 0) {
        out["symmetry_case"] = blend.symmetry_case;
        out["radius_sign"] = blend.sign;
        out["orientation_flipped"] = blend.orientation_flipped;
    }
    return out;
}

json regularity_json(const RegularityReport& rep) {
    auto roots_json = [](const std::vector<IsolatedRoot>& roots) {
        json arr = json::array();
        for (const auto& r : roots)
            arr.push_back(json{{"lo", rat_json(r.lo)},
                               {"hi", rat_json(r.hi)},
                               {"multiplicity", r.multiplicity}});
        return arr;
    };
    return json{{"pass", rep.pass},
                {"margin", ratfunc_json(rep.margin)},
                {"degenerate_parameters", roots_json(rep.degenerate_params)},
                {"pinch_points", roots_json(rep.pinch_points)}};
}

std::vector<ParsedSymmetry> parse_symmetry_report(const json& j) {
    std::vector<ParsedSymmetry> out;
    const json& syms = require(j, "symmetries");
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const json& e = syms[i];
        ParsedSymmetry p{parse_isometry(e, "symmetries[" + std::to_string(i) + "]"),
                         parse_moebius(require(e, "moebius"), "moebius"), std::nullopt};
        if (e.contains("moebius2")) p.phi2 = parse_moebius(e.at("moebius2"), "moebius2");
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace canal::io
