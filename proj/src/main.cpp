#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypergreen/families.hpp"
#include "hypergreen/geometry.hpp"
#include "hypergreen/scalar.hpp"
#include "hypergreen/verify.hpp"

namespace hg = hypergreen;
using nlohmann::ordered_json;

namespace {

struct FamInfo {
    const char* name;
    hg::Family fam;
    const char* n1;
    const char* n2;
};

const FamInfo kFams[] = {
    {"gegs", hg::Family::GegS, "alpha", nullptr},
    {"gegh", hg::Family::GegH, "alpha", nullptr},
    {"gegds", hg::Family::GegDS, "alpha", nullptr},
    {"h1s", hg::Family::H1S, "alpha", "beta"},
    {"h1h", hg::Family::H1H, "alpha", "beta"},
    {"h1ds", hg::Family::H1DS, "alpha", "beta"},
    {"h2s", hg::Family::H2S, "tau", "mu"},
    {"h2h", hg::Family::H2H, "kappa", "mu"},
    {"h2ds", hg::Family::H2DS, "kappa", "mu"},
};

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

const FamInfo& family_info(const std::string& name) {
    const std::string key = lower(name);
    for (const auto& f : kFams)
        if (key == f.name) return f;
    throw hg::UsageError("unknown family: " + name);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

double parse_real(const std::string& s) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw hg::UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw hg::UsageError("not a number: '" + s + "'");
    return v;
}

hg::cplx parse_complex(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
    if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
    throw hg::UsageError("complex values are written re or re,im: '" + s + "'");
}

// Comma-separated name=value list; a bare trailing number continues the
// previous parameter as its imaginary part (alpha=1.9,0.6,beta=1.9,-0.6).
hg::FamilyParams parse_params(const FamInfo& info, const std::string& str) {
    hg::FamilyParams fp{info.fam, 0.0, 0.0};
    hg::cplx* current = nullptr;
    bool current_has_imag = false;
    if (str.empty()) return fp;
    for (const std::string& tok : split(str, ',')) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos) {
            if (current == nullptr || current_has_imag)
                throw hg::UsageError("dangling value in --params: '" + tok + "'");
            *current = {current->real(), parse_real(tok)};
            current_has_imag = true;
            continue;
        }
        const std::string name = lower(tok.substr(0, eq));
        const double re = parse_real(tok.substr(eq + 1));
        if (name == info.n1)
            current = &fp.p1;
        else if (info.n2 != nullptr && name == info.n2)
            current = &fp.p2;
        else
            throw hg::UsageError("family " + std::string(info.name)
                                 + " has no parameter named '" + name + "'");
        *current = re;
        current_has_imag = false;
    }
    return fp;
}

ordered_json jcomplex(hg::cplx z) {
    if (z.imag() == 0.0) return z.real();
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

void print_complex_line(hg::cplx z) { std::printf("%.16e,%.16e\n", z.real(), z.imag()); }

ordered_json report_json(const hg::CheckReport& rep) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : rep.failures)
        failures.push_back(ordered_json{{"case_id", f.case_id}, {"residual", f.residual}});
    return ordered_json{{"suite", rep.suite},
                        {"cases", rep.cases},
                        {"max_residual", rep.max_residual},
                        {"failures", failures},
                        {"wall_time_ms", rep.wall_time_ms}};
}

void emit_error(const char* type, const std::string& message) {
    const ordered_json j{{"error", type}, {"message", message}};
    std::fprintf(stderr, "%s\n", j.dump().c_str());
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const hg::UsageError& e) {
        emit_error("UsageError", e.what());
        return 1;
    } catch (const hg::SpectrumError& e) {
        emit_error("SpectrumError", e.what());
        return 3;
    } catch (const hg::DomainError& e) {
        emit_error("DomainError", e.what());
        return 3;
    } catch (const hg::ParamRegionError& e) {
        emit_error("ParamRegionError", e.what());
        return 3;
    } catch (const hg::PoleError& e) {
        emit_error("PoleError", e.what());
        return 3;
    } catch (const hg::NumericError& e) {
        emit_error("NumericError", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form Green kernels, spectra and verification suites "
                 "for the nine hypergeometric Schrodinger families"};
    app.require_subcommand(1);

    std::string family, params, zstr;
    double xpt = 0.0, ypt = 0.0;

    CLI::App* eval = app.add_subcommand("eval-kernel", "evaluate a resolvent kernel at (x, y)");
    eval->add_option("--family", family, "family id (gegs..h2ds)")->required();
    eval->add_option("--params", params, "family parameters, e.g. alpha=0.5,beta=0.5");
    eval->add_option("--z", zstr, "spectral point re[,im]")->required();
    eval->add_option("--x", xpt, "first coordinate")->required();
    eval->add_option("--y", ypt, "second coordinate")->required();

    double bound = 0.0;
    CLI::App* spec = app.add_subcommand("spectrum", "list the closed-form spectrum");
    spec->add_option("--family", family, "family id")->required();
    spec->add_option("--params", params, "family parameters");
    spec->add_option("--bound", bound, "list discrete eigenvalues with Re below this bound")
        ->required();

    double from = 0.0, to = 0.0;
    int npts = 0;
    CLI::App* potl = app.add_subcommand("potential", "sample the potential as CSV");
    potl->add_option("--family", family, "family id")->required();
    potl->add_option("--params", params, "family parameters");
    potl->add_option("--from", from, "first sample point")->required();
    potl->add_option("--to", to, "last sample point")->required();
    potl->add_option("--n", npts, "number of samples")->required();

    std::string manifold;
    int md = 0, mp = 0, mq = 0, ml = 0, mj = 0;
    CLI::App* red = app.add_subcommand("reduce", "reduce a manifold Laplacian sector");
    red->add_option("--manifold", manifold,
                    "sphere|hyperbolic|desitter|doublesphere|hyperboloid|complexhyperboloid")
        ->required();
    red->add_option("--d", md, "dimension (single-parameter manifolds)");
    red->add_option("--p", mp, "first signature dimension");
    red->add_option("--q", mq, "second signature dimension");
    red->add_option("--l", ml, "first sector index");
    red->add_option("--j", mj, "second sector index");

    std::string suite;
    double tol = -1.0;
    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite, "suite name or 'all'")->required();
    ver->add_option("--tol", tol, "override the suite tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*eval)
        return guarded([&] {
            const FamInfo& info = family_info(family);
            const hg::FamilyParams fp = parse_params(info, params);
            const hg::GreenKernel kern = hg::green_kernel(fp, parse_complex(zstr));
            print_complex_line(kern(xpt, ypt));
            return 0;
        });

    if (*spec)
        return guarded([&] {
            const FamInfo& info = family_info(family);
            const hg::SpectrumSpec sp = hg::spectrum(parse_params(info, params), bound);
            ordered_json discrete = ordered_json::array();
            for (const hg::cplx& e : sp.discrete) discrete.push_back(jcomplex(e));
            ordered_json rays = ordered_json::array();
            for (const hg::Ray& r : sp.essential_rays)
                rays.push_back(ordered_json{{"offset", jcomplex(r.offset)},
                                            {"direction", r.direction}});
            const ordered_json j{{"discrete", discrete},
                                 {"essential_rays", rays},
                                 {"exhaustive_below_bound", sp.exhaustive_below_bound}};
            std::printf("%s\n", j.dump().c_str());
            return 0;
        });

    if (*potl)
        return guarded([&] {
            if (npts < 2) throw hg::UsageError("--n must be at least 2");
            const FamInfo& info = family_info(family);
            const hg::FamilyParams fp = parse_params(info, params);
            std::printf("x,re_v,im_v\n");
            const double step = (to - from) / (npts - 1);
            for (int i = 0; i < npts; ++i) {
                const double x = from + i * step;
                const hg::cplx v = hg::potential(fp, x);
                std::printf("%.16e,%.16e,%.16e\n", x, v.real(), v.imag());
            }
            return 0;
        });

    if (*red)
        return guarded([&] {
            hg::ManifoldSpec m;
            const std::string kind = lower(manifold);
            if (kind == "sphere")
                m.kind = hg::ManifoldKind::Sphere;
            else if (kind == "hyperbolic")
                m.kind = hg::ManifoldKind::Hyperbolic;
            else if (kind == "desitter")
                m.kind = hg::ManifoldKind::DeSitter;
            else if (kind == "doublesphere")
                m.kind = hg::ManifoldKind::DoubleSphere;
            else if (kind == "hyperboloid")
                m.kind = hg::ManifoldKind::Hyperboloid;
            else if (kind == "complexhyperboloid")
                m.kind = hg::ManifoldKind::ComplexHyperboloid;
            else
                throw hg::UsageError("unknown manifold: " + manifold);
            m.d = md;
            m.p = mp;
            m.q = mq;
            m.l = ml;
            m.j = mj;
            const hg::Reduction r = hg::reduce(m);
            const FamInfo* info = nullptr;
            for (const auto& f : kFams)
                if (f.fam == r.params.family) info = &f;
            ordered_json pj{{info->n1, jcomplex(r.params.p1)}};
            if (info->n2 != nullptr) pj[info->n2] = jcomplex(r.params.p2);
            const ordered_json j{{"family", info->name},
                                 {"params", pj},
                                 {"gauge_shift", jcomplex(r.gauge_shift)},
                                 {"scale", r.scale}};
            std::printf("%s\n", j.dump().c_str());
            return 0;
        });

    return guarded([&] {
        double tol_eff = tol;
        if (tol_eff <= 0.0) {
            if (const char* env = std::getenv("HYPERGREEN_TOL")) {
                char* end = nullptr;
                const double v = std::strtod(env, &end);
                if (end != env && v > 0.0) tol_eff = v;
            }
        }
        const std::string name = lower(suite);
        if (name == "all") {
            ordered_json arr = ordered_json::array();
            bool ok = true;
            for (const std::string& s : hg::suite_names()) {
                const hg::CheckReport rep = hg::run_suite(s, tol_eff);
                ok = ok && rep.pass();
                arr.push_back(report_json(rep));
            }
            std::printf("%s\n", arr.dump(2).c_str());
            return ok ? 0 : 2;
        }
        const hg::CheckReport rep = hg::run_suite(name, tol_eff);
        std::printf("%s\n", report_json(rep).dump(2).c_str());
        return rep.pass() ? 0 : 2;
    });
}
