// Command-line front end: parses JSON surface descriptions, runs the
// symmetry / classification / blend pipelines, and emits reports or meshes.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "canal/io.hpp"
#include "canal/mesh.hpp"

using namespace canal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSpecError = 2;
constexpr int kExitKernelError = 3;

void print_symmetries_text(const SymmetryReport& rep) {
    std::cout << rep.symmetries.size() << " symmetries, group " << rep.group_label << "\n";
    for (const auto& e : rep.symmetries) {
        std::cout << "  - " << e.description << "\n    " << e.f.to_string()
                  << "\n    moebius: " << e.phi.to_string();
        if (e.phi2) std::cout << " / " << e.phi2->to_string();
        if (e.swaps_spines) std::cout << "  (exchanges the spine curves)";
        std::cout << "\n";
    }
    for (const auto& e : rep.numeric_symmetries) {
        std::cout << "  - numerically certified symmetry (residual bound " << e.residual << ")\n";
    }
    if (rep.continuous_family) {
        const auto& fam = *rep.continuous_family;
        std::cout << "  continuous family: " << fam.kind << "\n";
    }
}

int run_symmetries(const std::string& path, bool as_json) {
    auto spec = io::load_spec_file(path);
    if (spec.kind != io::SurfaceSpec::Kind::Canal)
        throw io::SpecError("'symmetries' expects a spec with kind == canal");
    SymmetryReport rep = sym_canal(spec.surface1);
    RegularityReport reg = check_regularity(spec.surface1);
    if (as_json) {
        io::json out = io::symmetry_report_json(rep);
        out["regularity"] = io::regularity_json(reg);
        std::cout << out.dump(2) << "\n";
    } else {
        print_symmetries_text(rep);
        std::cout << "envelope regularity: " << (reg.pass ? "ok" : "violated") << ", "
                  << reg.pinch_points.size() << " pinch point(s)\n";
    }
    return kExitOk;
}

int run_dupin(const std::string& path, bool as_json) {
    auto spec = io::load_spec_file(path);
    if (spec.kind != io::SurfaceSpec::Kind::Dupin || !spec.surface2)
        throw io::SpecError("'dupin' expects a spec with kind == dupin and two pairs");
    DupinCyclide d = classify_dupin(spec.surface1, *spec.surface2);
    bool super = is_super_symmetric(d);
    SymmetryReport rep = dupin_symmetries(d);
    if (as_json) {
        std::cout << io::dupin_report_json(d, super, rep).dump(2) << "\n";
    } else {
        const char* tname = d.frame.type == CyclideType::I
                                ? "I"
                                : (d.frame.type == CyclideType::II ? "II" : "III");
        std::cout << "Type " << tname << ", " << (super ? "super-symmetric" : "generic")
                  << ", group " << rep.group_label;
        if (d.frame.type == CyclideType::I)
            std::cout << ", continuous rotation family";
        else
            std::cout << ", " << rep.symmetries.size() << " symmetries";
        std::cout << "\n";
        print_symmetries_text(rep);
    }
    return kExitOk;
}

int run_blend(const std::string& path, const std::string& out_path, int continuity_override,
              bool as_json) {
    auto spec = io::load_spec_file(path);
    if (spec.kind != io::SurfaceSpec::Kind::Blend || !spec.surface2)
        throw io::SpecError("'blend' expects a spec with kind == blend");
    int N = continuity_override >= 0 ? continuity_override : spec.continuity;
    BlendResult blend =
        spec.symmetry
            ? symmetric_blend(spec.surface1, spec.t1, *spec.surface2, spec.t2, *spec.symmetry, N)
            : hermite_blend(spec.surface1, spec.t1, *spec.surface2, spec.t2, N);
    io::json out = io::blend_json(blend, N);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw io::SpecError("cannot write output file: " + out_path);
        f << out.dump(2) << "\n";
    }
    if (as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "blend spine degree " << blend.spine_bezier.degree() << ", radius r(t) = "
                  << blend.surface.radius.num().to_string() << "\n";
    }
    return kExitOk;
}

int run_mesh(const std::string& path, const std::string& out_path,
             const std::pair<std::string, std::string>& window,
             const std::pair<int, int>& grid) {
    auto spec = io::load_spec_file(path);
    const CanalSurface& S =
        (spec.kind == io::SurfaceSpec::Kind::Canal || spec.kind == io::SurfaceSpec::Kind::Dupin)
            ? spec.surface1
            : throw io::SpecError("'mesh' expects a canal or dupin spec");
    Rat lo = rat_from_string(window.first), hi = rat_from_string(window.second);
    TriMesh m = sample_surface(S, lo, hi, grid.first, grid.second);
    std::ofstream f(out_path);
    if (!f) throw io::SpecError("cannot write output file: " + out_path);
    export_obj(m, f);
    std::cout << "wrote " << m.vertices.size() << " vertices, " << m.faces.size()
              << " triangles to " << out_path << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry detection, cyclide classification and symmetric blends "
                 "for rational canal surfaces"};
    app.require_subcommand(1);

    std::string spec_path, out_path;
    bool as_json = false;
    int continuity = -1;
    std::pair<std::string, std::string> window{"-1", "1"};
    std::pair<int, int> grid{64, 32};

    auto* sym = app.add_subcommand("symmetries", "Euclidean symmetries of a canal surface");
    sym->add_option("spec", spec_path, "JSON surface description")->required();
    sym->add_flag("--json", as_json, "machine-readable report");

    auto* dup = app.add_subcommand("dupin", "classify a Dupin cyclide and its symmetry group");
    dup->add_option("spec", spec_path, "JSON two-pair description")->required();
    dup->add_flag("--json", as_json, "machine-readable report");

    auto* bl = app.add_subcommand("blend", "symmetric Hermite blend between two canal surfaces");
    bl->add_option("spec", spec_path, "JSON blend request")->required();
    bl->add_option("-o,--output", out_path, "write the blend description to a file");
    bl->add_option("--continuity", continuity, "override the continuity order N");
    bl->add_flag("--json", as_json, "machine-readable report");

    auto* me = app.add_subcommand("mesh", "tessellate a surface to a Wavefront OBJ");
    me->add_option("spec", spec_path, "JSON surface description")->required();
    me->add_option("-o,--output", out_path, "output OBJ path")->required();
    me->add_option("--window", window, "parameter window t_lo t_hi");
    me->add_option("--grid", grid, "grid resolution nt ns");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sym->parsed()) return run_symmetries(spec_path, as_json);
        if (dup->parsed()) return run_dupin(spec_path, as_json);
        if (bl->parsed()) return run_blend(spec_path, out_path, continuity, as_json);
        if (me->parsed()) return run_mesh(spec_path, out_path, window, grid);
    } catch (const io::SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const KernelError& e) {
        std::cerr << "kernel error: " << e.what() << "\n";
        return kExitKernelError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSpecError;
    }
    return kExitOk;
}
