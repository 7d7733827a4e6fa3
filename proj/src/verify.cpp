#include "hypergreen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypergreen/families.hpp"
#include "hypergreen/gammafn.hpp"
#include "hypergreen/gegenbauer.hpp"
#include "hypergreen/geometry.hpp"
#include "hypergreen/hyp.hpp"
#include "hypergreen/oracle.hpp"
#include "hypergreen/relations.hpp"
#include "hypergreen/scalar.hpp"
#include "hypergreen/transmute.hpp"

namespace hypergreen {
namespace {

constexpr double kBlown = 9.9e99;

// Portable deterministic uniforms; std::uniform_real_distribution is not
// bit-stable across standard libraries.
double u01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double uni(std::mt19937_64& g, double a, double b) { return a + (b - a) * u01(g); }

int unii(std::mt19937_64& g, int lo, int hi) {
    const int span = hi - lo + 1;
    int v = lo + static_cast<int>(u01(g) * span);
    return std::min(v, hi);
}

cplx cbox(std::mt19937_64& g, double r0, double r1, double i0, double i1) {
    const double re = uni(g, r0, r1);
    return {re, uni(g, i0, i1)};
}

// Complex draw whose imaginary part has magnitude in [m0, m1] and random sign.
cplx cbox_pm(std::mt19937_64& g, double r0, double r1, double m0, double m1) {
    const double re = uni(g, r0, r1);
    const double im = uni(g, m0, m1);
    return {re, (g() & 1u) ? im : -im};
}

struct Collector {
    CheckReport& rep;

    void add(const std::string& id, double r) {
        if (!std::isfinite(r)) r = kBlown;
        ++rep.cases;
        if (r > rep.max_residual) rep.max_residual = r;
        if (r > rep.tolerance) rep.failures.push_back({id, r});
    }

    void run(const std::string& id, const std::function<double()>& f) {
        try {
            add(id, f());
        } catch (const std::exception& e) {
            add(id + " threw: " + e.what(), kBlown);
        }
    }
};

double defect(cplx got, cplx want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

std::string dtag(int d) { return "/d" + std::to_string(d); }

// ---------------------------------------------------------------- specfun --

void suite_kummer(Collector& C) {
    std::mt19937_64 g(0x6b756d6d65720001ull);
    for (int d = 0; d < 50; ++d) {
        const HypParams p{cbox(g, -1.3, 1.3, -0.9, 0.9), cbox(g, -1.3, 1.3, -0.9, 0.9),
                          cbox(g, -1.3, 1.3, -0.9, 0.9)};
        const cplx z = cbox_pm(g, -1.6, 1.6, 0.15, 1.4);
        for (int row = 1; row <= 6; ++row)
            for (int col = 1; col <= 3; ++col)
                C.run("kummer/r" + std::to_string(row) + "c" + std::to_string(col) + dtag(d),
                      [&] {
                          return defect(kummer_expression(row, col, p, z),
                                        kummer_expression(row, 0, p, z));
                      });
    }
}

void suite_connect(Collector& C) {
    const struct {
        RelationKind kind;
        const char* name;
    } hyp_kinds[] = {
        {RelationKind::con2, "con2"},           {RelationKind::con2b, "con2b"},
        {RelationKind::reqdes_pair, "reqdes"},  {RelationKind::con_minus1, "minus1"},
        {RelationKind::con_minus2, "minus2"},   {RelationKind::popo_pair, "popo"},
    };
    std::mt19937_64 g(0x636f6e6e00020001ull);
    for (const auto& k : hyp_kinds)
        for (int d = 0; d < 50; ++d) {
            const HypParams p{cbox_pm(g, -1.3, 1.3, 0.1, 0.9), cbox_pm(g, -1.3, 1.3, 0.1, 0.9),
                              cbox_pm(g, -1.3, 1.3, 0.1, 0.9)};
            const cplx z = cbox_pm(g, -1.6, 1.6, 0.15, 1.4);
            C.run(std::string("connect/") + k.name + dtag(d),
                  [&] { return connection_residual({k.kind, 0}, p, z); });
        }
    const RelationKind geg_kinds[] = {RelationKind::gegencon, RelationKind::gegencon2};
    const char* geg_names[] = {"gegencon", "gegencon2"};
    for (int j = 0; j < 2; ++j)
        for (int d = 0; d < 50; ++d) {
            HypParams p;
            p.alpha = cbox_pm(g, -1.1, 1.1, 0.1, 0.8);
            p.beta = 0.0;
            p.mu = cbox_pm(g, -1.0, 1.6, 0.1, 0.8);
            const cplx w = cbox_pm(g, -1.2, 2.4, 0.2, 1.2);
            C.run(std::string("connect/") + geg_names[j] + dtag(d),
                  [&] { return connection_residual({geg_kinds[j], 0}, p, w); });
        }
}

void suite_whipple(Collector& C) {
    std::mt19937_64 g(0x776869700c030001ull);
    for (int d = 0; d < 50; ++d) {
        HypParams p;
        p.alpha = cbox_pm(g, -1.1, 1.1, 0.1, 0.8);
        p.beta = 0.0;
        p.mu = cbox_pm(g, -1.0, 1.6, 0.1, 0.8);
        const cplx w = cbox_pm(g, 0.3, 2.2, 0.2, 1.2);
        C.run("whipple" + dtag(d),
              [&] { return connection_residual({RelationKind::whipple, 0}, p, w); });
    }
}

void suite_halfint(Collector& C) {
    std::mt19937_64 g(0x68616c6600040001ull);
    for (int k = 1; k <= 8; ++k)
        for (int d = 0; d < 50; ++d) {
            HypParams p;
            p.alpha = 0.0;
            p.beta = 0.0;
            cplx z;
            if (k <= 2) {
                p.mu = cbox_pm(g, -1.2, 1.8, 0.15, 0.9);
                z = uni(g, 0.2, 2.9);
            } else if (k <= 4) {
                p.mu = cbox_pm(g, -1.2, 1.8, 0.15, 0.9);
                z = uni(g, 0.15, 2.4);
            } else if (k <= 6) {
                p.mu = cbox_pm(g, -0.6, 1.4, 0.15, 0.9);
                z = uni(g, 0.15, 2.4);
            } else {
                p.mu = static_cast<double>(unii(g, 0, 7));
                z = uni(g, -0.92, 0.92);
            }
            C.run("halfint/k" + std::to_string(k) + dtag(d),
                  [&] { return connection_residual({RelationKind::half_integer, k}, p, z); });
        }
}

void suite_degen_relation(Collector& C) {
    std::mt19937_64 g(0x646567656e000501ull);
    for (int d = 0; d < 50; ++d) {
        const int m = unii(g, 1, 6);
        HypParams p;
        p.alpha = cbox_pm(g, -1.2, 1.2, 0.1, 0.8);
        p.beta = cbox_pm(g, -1.2, 1.2, 0.1, 0.8);
        p.mu = 0.0;
        const cplx z = cbox_pm(g, 0.15, 0.7, 0.05, 0.45);
        C.run("degen/m" + std::to_string(m) + dtag(d),
              [&] { return connection_residual({RelationKind::degen, m}, p, z); });
    }
}

// --------------------------------------------------------------- legendre --

void suite_legendre(Collector& C) {
    std::mt19937_64 g(0x6c6567656e000601ull);
    const cplx I(0.0, 1.0);
    const double sqpi = std::sqrt(pi);

    for (int d = 0; d < 30; ++d) {
        const double sgn = (g() & 1u) ? 1.0 : -1.0;
        const cplx al = cbox(g, -0.8, 0.8, sgn * 0.1, sgn * 0.6);
        const cplx mu = cbox(g, -0.7, 0.9, sgn * 0.1, sgn * 0.6);
        const cplx z = cbox_pm(g, 1.3, 2.6, 0.2, 1.0);
        C.run("legendre/L1" + dtag(d), [&] {
            const cplx direct = pow_p((z + 1.0) / (z - 1.0), 0.5 * al)
                                * hyp2f1_reg({-al, al, -2.0 * mu - 1.0}, 0.5 * one_minus(z));
            return defect(legendre(LegendreKind::P_assoc, al, mu, z), direct);
        });
        C.run("legendre/L3" + dtag(d), [&] {
            const cplx direct = std::exp(I * pi * al) * sqpi * gamma(al + mu + 1.0)
                                * pow_p(z * z - 1.0, 0.5 * al) * pow_p(cplx(2.0), -mu - 1.0)
                                * pow_p(z, -al - mu - 1.0)
                                * hyp2f1_reg({mu + 0.5, al, -0.5}, 1.0 / (z * z));
            return defect(legendre(LegendreKind::Q_assoc, al, mu, z), direct);
        });
        const cplx zf = uni(g, -0.88, 0.88);
        C.run("legendre/L2" + dtag(d), [&] {
            const cplx direct = pow_p((zf + 1.0) / one_minus(zf), 0.5 * al)
                                * hyp2f1_reg({-al, al, -2.0 * mu - 1.0}, 0.5 * one_minus(zf));
            return defect(legendre(LegendreKind::Ferrers_P, al, mu, zf), direct);
        });
    }

    for (int n = 0; n <= 6; ++n)
        for (int d = 0; d < 6; ++d) {
            const double x = uni(g, -0.9, 0.9);
            C.run("legendre/L4/n" + std::to_string(n) + dtag(d), [&] {
                double pm1 = 1.0, p0 = x;
                if (n == 0) p0 = 1.0;
                for (int j = 1; j < n; ++j) {
                    const double p1 = ((2 * j + 1) * x * p0 - j * pm1) / (j + 1);
                    pm1 = p0;
                    p0 = p1;
                }
                return defect(legendre(LegendreKind::Ferrers_P, 0.0, cplx(n), x), p0);
            });
        }

    for (int d = 0; d < 30; ++d) {
        const double sgn = (g() & 1u) ? 1.0 : -1.0;
        const cplx al = cbox(g, -0.8, 0.8, sgn * 0.1, sgn * 0.5);
        const cplx mu = cbox(g, 0.0, 1.2, sgn * 0.1, sgn * 0.5);
        const cplx zlam = (mu + 0.5) * (mu + 0.5);
        const double rs = uni(g, 0.2, 2.9);
        C.run("legendre/L5" + dtag(d), [&] {
            const FamilyParams fp{Family::GegS, -al};
            const cplx rhs = std::sqrt(2.0 / std::sin(rs))
                             * solution(fp, SolutionId::Ps, zlam, rs);
            return defect(legendre(LegendreKind::Ferrers_P, al, mu, std::cos(rs)), rhs);
        });
        const double rh = uni(g, 0.2, 2.2);
        C.run("legendre/L6" + dtag(d), [&] {
            const FamilyParams fp{Family::GegH, -al};
            const cplx rhs = std::sqrt(2.0 / std::sinh(rh))
                             * solution(fp, SolutionId::Ph, -zlam, rh);
            return defect(legendre(LegendreKind::P_assoc, al, mu, std::cosh(rh)), rhs);
        });
        C.run("legendre/L7" + dtag(d), [&] {
            const FamilyParams fp{Family::GegH, -al};
            const cplx rhs = std::exp(I * pi * al) * sqpi * gamma(al + mu + 1.0)
                             / std::sqrt(2.0 * std::sinh(rh))
                             * solution(fp, SolutionId::Qh, -zlam, rh);
            return defect(legendre(LegendreKind::Q_assoc, al, mu, std::cosh(rh)), rhs);
        });
    }
}

// -------------------------------------------------------------- wronskian --

struct EndSeed {
    MarchFrom from;
    double anchor;
    BoundaryBehavior bb;
    cplx nfac;
};

EndSeed frob_seed(MarchFrom from, double anchor, cplx nu, cplx nfac) {
    return {from, anchor, {BoundaryKind::decay_exponent, nu}, nfac};
}

EndSeed decay_seed(MarchFrom from, double anchor, cplx rate, cplx asym_coeff) {
    return {from, anchor, {BoundaryKind::decay_rate, rate},
            asym_coeff * std::exp(-rate * std::abs(anchor))};
}

OdeFn seeded_fn(const FamilyParams& fp, cplx z, const EndSeed& s) {
    return [fp, z, s](double x) {
        const PotentialFn pot = [fp](double t) { return potential(fp, t); };
        const ValueDeriv vd = ode_solution(pot, z, s.from, s.bb, s.anchor, x);
        return ValueDeriv{s.nfac * vd.first, s.nfac * vd.second};
    };
}

void wronskian_case(Collector& C, const std::string& id, const FamilyParams& fp, cplx z,
                    const EndSeed& first, const EndSeed& second, double xm) {
    C.run(id, [&] {
        const cplx wcl = wronskian_closed(fp, z, PairKind::kernel_pair);
        const cplx wnum = numeric_wronskian(seeded_fn(fp, z, first), seeded_fn(fp, z, second), xm);
        return std::abs(wnum - wcl) / (1.0 + std::abs(wcl));
    });
}

void suite_wronskian(Collector& C) {
    std::mt19937_64 g(0x77726f6e00070001ull);
    const auto two_pow = [](cplx e) { return pow_p(cplx(2.0), e); };
    for (int d = 0; d < 10; ++d) {
        {
            const cplx al = uni(g, -0.4, 1.6);
            const FamilyParams fp{Family::GegS, al};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx nf = two_pow(-al - 0.5) * rgamma(1.0 + al);
            wronskian_case(C, "wronskian/gegs" + dtag(d), fp, z,
                           frob_seed(MarchFrom::right, pi, al + 0.5, nf),
                           frob_seed(MarchFrom::left, 0.0, al + 0.5, nf), 1.1);
        }
        {
            const cplx al = uni(g, -0.4, 1.5);
            const FamilyParams fp{Family::GegH, al};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx lam = internal_params(fp, z).lambda;
            wronskian_case(C, "wronskian/gegh" + dtag(d), fp, z,
                           decay_seed(MarchFrom::right, 18.0, lam, rgamma(1.0 + lam)),
                           frob_seed(MarchFrom::left, 0.0, al + 0.5,
                                     two_pow(-al - 0.5) * rgamma(1.0 + al)),
                           1.3);
        }
        {
            const cplx al = uni(g, 0.3, 2.2);
            const FamilyParams fp{Family::GegDS, al};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx lam = internal_params(fp, z).lambda;
            wronskian_case(C, "wronskian/gegds" + dtag(d), fp, z,
                           decay_seed(MarchFrom::right, 18.0, lam, rgamma(1.0 + lam)),
                           decay_seed(MarchFrom::left, -18.0, lam, rgamma(1.0 + lam)), 0.7);
        }
        {
            const cplx al = uni(g, -0.4, 1.6), be = uni(g, -0.4, 1.6);
            const FamilyParams fp{Family::H1S, al, be};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            wronskian_case(C, "wronskian/h1s" + dtag(d), fp, z,
                           frob_seed(MarchFrom::right, pi, be + 0.5,
                                     two_pow(-be - 0.5) * rgamma(1.0 + be)),
                           frob_seed(MarchFrom::left, 0.0, al + 0.5,
                                     two_pow(-al - 0.5) * rgamma(1.0 + al)),
                           1.1);
        }
        {
            const cplx al = uni(g, -0.4, 1.5), be = uni(g, -1.2, 1.2);
            const FamilyParams fp{Family::H1H, al, be};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx mu = internal_params(fp, z).mu;
            wronskian_case(C, "wronskian/h1h" + dtag(d), fp, z,
                           decay_seed(MarchFrom::right, 32.0, 0.5 * mu,
                                      two_pow(mu) * rgamma(1.0 + mu)),
                           frob_seed(MarchFrom::left, 0.0, al + 0.5,
                                     two_pow(-al - 0.5) * rgamma(1.0 + al)),
                           1.3);
        }
        {
            const cplx al = cbox(g, 0.3, 1.6, 0.2, 0.8);
            const FamilyParams fp{Family::H1DS, al, std::conj(al)};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx mu = internal_params(fp, z).mu;
            const cplx nf = two_pow(mu) * rgamma(1.0 + mu);
            wronskian_case(C, "wronskian/h1ds" + dtag(d), fp, z,
                           decay_seed(MarchFrom::right, 32.0, 0.5 * mu, nf),
                           decay_seed(MarchFrom::left, -32.0, 0.5 * mu, nf), 0.7);
        }
        {
            const cplx tau = uni(g, 0.4, 2.0), mu = uni(g, 0.5, 2.8);
            const FamilyParams fp{Family::H2S, tau, mu};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx nf = two_pow(0.5 * (mu + 1.0)) * rgamma(1.0 + mu);
            wronskian_case(C, "wronskian/h2s" + dtag(d), fp, z,
                           frob_seed(MarchFrom::right, pi, 0.5 * (mu + 1.0), nf),
                           frob_seed(MarchFrom::left, 0.0, 0.5 * (mu + 1.0), nf), 1.1);
        }
        {
            const cplx ka = uni(g, -3.0, -0.3), mu = uni(g, 0.5, 1.9);
            const FamilyParams fp{Family::H2H, ka, mu};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const cplx ai = internal_params(fp, z).alpha;
            wronskian_case(C, "wronskian/h2h" + dtag(d), fp, z,
                           frob_seed(MarchFrom::left, 0.0, 0.5 * (mu + 1.0),
                                     two_pow(0.5 * (mu + 1.0)) * rgamma(1.0 + mu)),
                           decay_seed(MarchFrom::right, 17.0, ai, rgamma(1.0 + ai)), 1.3);
        }
        {
            const cplx ka = uni(g, 0.4, 2.4), mu = uni(g, 0.8, 2.5);
            const FamilyParams fp{Family::H2DS, ka, mu};
            const cplx z = cbox_pm(g, -1.0, 2.0, 0.4, 1.2);
            const InternalParams ip = internal_params(fp, z);
            wronskian_case(C, "wronskian/h2ds" + dtag(d), fp, z,
                           decay_seed(MarchFrom::right, 17.0, ip.alpha, rgamma(1.0 + ip.alpha)),
                           decay_seed(MarchFrom::left, -17.0, ip.beta, rgamma(1.0 + ip.beta)),
                           0.7);
        }
    }
}

// --------------------------------------------------------- kernels-oracle --

std::pair<BoundaryBehavior, BoundaryBehavior> family_bc(const FamilyParams& fp, cplx z) {
    const InternalParams ip = internal_params(fp, z);
    const auto fr = [](cplx nu) { return BoundaryBehavior{BoundaryKind::decay_exponent, nu}; };
    const auto dc = [](cplx r) { return BoundaryBehavior{BoundaryKind::decay_rate, r}; };
    switch (fp.family) {
        case Family::GegS: return {fr(fp.p1 + 0.5), fr(fp.p1 + 0.5)};
        case Family::GegH: return {fr(fp.p1 + 0.5), dc(ip.lambda)};
        case Family::GegDS: return {dc(ip.lambda), dc(ip.lambda)};
        case Family::H1S: return {fr(fp.p1 + 0.5), fr(fp.p2 + 0.5)};
        case Family::H1H: return {fr(fp.p1 + 0.5), dc(0.5 * ip.mu)};
        case Family::H1DS: return {dc(0.5 * ip.mu), dc(0.5 * ip.mu)};
        case Family::H2S: return {fr(0.5 * (fp.p2 + 1.0)), fr(0.5 * (fp.p2 + 1.0))};
        case Family::H2H: return {fr(0.5 * (fp.p2 + 1.0)), dc(ip.alpha)};
        case Family::H2DS: return {dc(ip.beta), dc(ip.alpha)};
    }
    throw UsageError("unknown family");
}

struct OracleConfig {
    const char* name;
    Family fam;
    cplx p1, p2;
    cplx z;
    double a, b, off;
    bool has_p2;
};

const OracleConfig kOracleConfigs[] = {
    {"gegs", Family::GegS, 1.3, 0.0, {1.0, 0.5}, 0.0, pi, 0.05, false},
    {"gegh", Family::GegH, 0.8, 0.0, {-0.5, 0.5}, 0.0, 36.0, 0.1, false},
    {"gegds", Family::GegDS, 1.1, 0.0, {-0.8, 0.4}, -30.0, 30.0, 0.15, false},
    {"h1s", Family::H1S, 0.4, 0.7, {0.3, 0.8}, 0.0, pi, 0.05, true},
    {"h1h", Family::H1H, 0.4, 0.7, {-1.0, 0.7}, 0.0, 27.0, 0.1, true},
    {"h1ds", Family::H1DS, {1.9, 0.6}, {1.9, -0.6}, {-0.7, 0.3}, -20.0, 20.0, 0.12, true},
    {"h2s", Family::H2S, 1.3, 2.5, {0.8, 0.6}, 0.0, pi, 0.05, true},
    {"h2h", Family::H2H, -0.5, 1.4, {-2.0, 0.5}, 0.0, 23.0, 0.1, true},
    {"h2ds", Family::H2DS, 1.5, 5.0, {-3.0, 0.5}, -23.0, 14.0, 0.11, true},
};

void suite_kernels_oracle(Collector& C) {
    std::mt19937_64 g(0x6b65726e00080001ull);
    const int nf = 4097, nc = 2049;
    for (const auto& cfg : kOracleConfigs) {
        for (int d = 0; d < 5; ++d) {
            FamilyParams fp{cfg.fam, cfg.p1, cfg.p2};
            cplx z = cfg.z;
            if (d > 0) {
                if (cfg.fam == Family::H1DS) {
                    const cplx jit = cbox(g, -0.1, 0.1, -0.05, 0.05);
                    fp.p1 += jit;
                    fp.p2 = std::conj(fp.p1);
                } else {
                    fp.p1 += uni(g, -0.1, 0.1);
                    if (cfg.has_p2) fp.p2 += uni(g, -0.1, 0.1);
                }
                z += cbox(g, -0.2, 0.2, -0.1, 0.1);
            }
            const double clamp = cfg.off / (cfg.b - cfg.a);
            const Grid fine{cfg.a, cfg.b, nf, clamp};
            const Grid coarse{cfg.a, cfg.b, nc, clamp};
            const std::string base = std::string("kernels/") + cfg.name + dtag(d);
            C.run(base, [&] {
                const PotentialFn pot = [fp](double t) { return potential(fp, t); };
                const auto bc = family_bc(fp, z);
                const GreenKernel kern = green_kernel(fp, z);
                double worst = 0.0, ef = 0.0, ec = 0.0;
                for (int p = 0; p < 9; ++p) {
                    const int ix = 2 * unii(g, 308, 1740);
                    const int iy = 2 * unii(g, 308, 1740);
                    const double x = fine.lo() + ix * fine.h();
                    const double y = fine.lo() + iy * fine.h();
                    const cplx closed = kern(x, y);
                    const cplx gf = fd_green(pot, fine, bc.first, bc.second, z, x, y);
                    const cplx gc = fd_green(pot, coarse, bc.first, bc.second, z, x, y);
                    worst = std::max(worst, defect(gf, closed));
                    ef = std::max(ef, std::abs(gf - closed));
                    ec = std::max(ec, std::abs(gc - closed));
                }
                const double ratio = ec / std::max(ef, 1e-300);
                if (ef > 1e-12 && !(ratio >= 2.83 && ratio <= 5.66))
                    C.add(base + "/order(ratio=" + std::to_string(ratio) + ")", 1.0);
                else
                    C.add(base + "/order", 0.0);
                return worst;
            });
        }
    }
}

// --------------------------------------------------------- spectra-oracle --

void suite_spectra_oracle(Collector& C) {
    std::mt19937_64 g(0x7370656300090001ull);
    const auto fr = [](cplx nu) {
        return std::optional<BoundaryBehavior>(BoundaryBehavior{BoundaryKind::decay_exponent, nu});
    };
    const std::optional<BoundaryBehavior> none;

    struct SCase {
        std::string name;
        FamilyParams fp;
        Grid grid;
        std::optional<BoundaryBehavior> bca, bcb;
    };

    for (int d = 0; d < 5; ++d) {
        std::vector<SCase> cases;
        {
            const double al = uni(g, 0.8, 1.8);
            cases.push_back({"gegs", {Family::GegS, al}, {0.0, pi, 8192, 0.05 / pi},
                             fr(al + 0.5), fr(al + 0.5)});
        }
        {
            const double al = uni(g, 0.2, 1.2), be = uni(g, 0.2, 1.2);
            cases.push_back({"h1s", {Family::H1S, al, be}, {0.0, pi, 8192, 0.05 / pi},
                             fr(al + 0.5), fr(be + 0.5)});
        }
        {
            const double al = uni(g, -0.83, -0.67);
            cases.push_back({"gegh", {Family::GegH, al}, {0.0, 36.0, 65536, 0.1 / 36.0},
                             fr(al + 0.5), none});
        }
        {
            const double al = uni(g, -0.25, 0.25), be = al + uni(g, 5.6, 7.6);
            cases.push_back({"h1h", {Family::H1H, al, be}, {0.0, 27.0, 16384, 0.1 / 27.0},
                             fr(al + 0.5), none});
        }
        {
            const double al = uni(g, 2.85, 3.35);
            cases.push_back({"gegds", {Family::GegDS, al}, {-30.0, 30.0, 16384, 0.002},
                             none, none});
        }
        {
            const cplx al = cbox(g, 1.75, 2.15, 0.4, 0.8);
            cases.push_back({"h1ds", {Family::H1DS, al, std::conj(al)},
                             {-20.0, 20.0, 16384, 0.003}, none, none});
        }
        {
            const double tau = uni(g, 1.0, 1.6), mu = uni(g, 2.2, 2.8);
            cases.push_back({"h2s", {Family::H2S, tau, mu}, {0.0, pi, 8192, 0.05 / pi},
                             fr(0.5 * (mu + 1.0)), fr(0.5 * (mu + 1.0))});
        }
        {
            const double ka = uni(g, -6.2, -5.3), mu = uni(g, 1.2, 1.9);
            cases.push_back({"h2h", {Family::H2H, ka, mu}, {0.0, 23.0, 65536, 0.1 / 23.0},
                             fr(0.5 * (mu + 1.0)), none});
        }
        {
            const double ka = uni(g, 1.3, 1.7), mu = uni(g, 4.8, 5.3);
            cases.push_back({"h2ds", {Family::H2DS, ka, mu}, {-23.0, 14.0, 16384, 0.003},
                             none, none});
        }

        for (const auto& sc : cases) {
            const std::string base = "spectra/" + sc.name + dtag(d);
            C.run(base, [&] {
                const SpectrumSpec sp = spectrum(sc.fp, 40.0);
                double bottom = 1e308;
                for (const auto& ray : sp.essential_rays)
                    bottom = std::min(bottom, ray.offset.real());
                std::vector<double> want;
                for (const cplx& e : sp.discrete)
                    if (e.real() < bottom - 0.05 && static_cast<int>(want.size()) < 3)
                        want.push_back(e.real());
                if (want.empty()) return kBlown;
                const FamilyParams fp = sc.fp;
                const PotentialFn pot = [fp](double t) { return potential(fp, t); };
                const auto got =
                    fd_spectrum(pot, sc.grid, static_cast<int>(want.size()), sc.bca, sc.bcb);
                double worst = 0.0;
                for (std::size_t i = 0; i < want.size(); ++i)
                    worst = std::max(worst, std::abs(got[i].real() - want[i])
                                                + std::abs(got[i].imag()));
                return worst;
            });
        }
    }
}

// -------------------------------------------------------------- transmute --

void suite_transmute(Collector& C) {
    struct TDraw {
        TransmutationId id;
        const char* name;
        FamilyParams src;
        cplx z;
    };
    const TDraw draws[] = {
        {TransmutationId::T1_GegS_GegDS, "t1", {Family::GegS, 0.7}, {0.4, 0.8}},
        {TransmutationId::T1_GegS_GegDS, "t1", {Family::GegS, 1.2}, {-0.3, 0.6}},
        {TransmutationId::T1_GegS_GegDS, "t1", {Family::GegS, 0.45}, {1.1, -0.7}},
        {TransmutationId::T2_H1S_H1H, "t2", {Family::H1S, 0.5, 0.8}, {0.3, 0.9}},
        {TransmutationId::T2_H1S_H1H, "t2", {Family::H1S, -0.2, 1.2}, {-0.5, 0.7}},
        {TransmutationId::T2_H1S_H1H, "t2", {Family::H1S, 1.1, 0.4}, {0.8, -0.6}},
        {TransmutationId::T3_H2H_H2DS, "t3", {Family::H2H, -0.8, 1.3}, {-1.5, 0.8}},
        {TransmutationId::T3_H2H_H2DS, "t3", {Family::H2H, -0.4, 0.9}, {-2.2, -0.7}},
        {TransmutationId::T3_H2H_H2DS, "t3", {Family::H2H, -1.2, 1.7}, {-1.0, 1.1}},
        {TransmutationId::T4_H1S_H2DS, "t4", {Family::H1S, 0.6, 0.9}, {0.5, 0.8}},
        {TransmutationId::T4_H1S_H2DS, "t4", {Family::H1S, 0.3, 1.3}, {-0.4, 0.7}},
        {TransmutationId::T4_H1S_H2DS, "t4", {Family::H1S, 1.0, 0.5}, {0.9, -0.9}},
        {TransmutationId::T5_H1H_H2H, "t5", {Family::H1H, 0.5, 0.7}, {-1.2, 0.8}},
        {TransmutationId::T5_H1H_H2H, "t5", {Family::H1H, 0.9, 0.3}, {-0.8, -0.9}},
        {TransmutationId::T5_H1H_H2H, "t5", {Family::H1H, 0.2, 1.1}, {-1.5, 0.6}},
        {TransmutationId::T6_H1DS_H2S, "t6", {Family::H1DS, {0.8, 0.3}, {0.5, -0.2}}, {-0.9, 0.7}},
        {TransmutationId::T6_H1DS_H2S, "t6",
         {Family::H1DS, {1.3, 0.25}, {0.9, -0.35}}, {-0.5, -0.8}},
        {TransmutationId::T6_H1DS_H2S, "t6", {Family::H1DS, {0.4, 0.2}, {1.1, -0.3}}, {-1.1, 0.9}},
    };
    int d = 0;
    TransmutationId last = TransmutationId::T1_GegS_GegDS;
    for (const auto& t : draws) {
        d = t.id == last ? d + 1 : 0;
        last = t.id;
        const FamilyDomain win = source_window(t.id);
        const double c = 0.5 * (win.a + win.b), r = 0.5 * (win.b - win.a);
        double node[8];
        for (int k = 0; k < 8; ++k) node[k] = c + r * std::cos((2 * k + 1) * pi / 16.0);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                C.run("transmute/" + std::string(t.name) + dtag(d) + "/p" + std::to_string(8 * i + j),
                      [&] { return kernel_residual(t.id, t.src, t.z, node[i], node[j]); });
    }
}

// ------------------------------------------------------------- degenerate --

void suite_degenerate_kernels(Collector& C) {
    const cplx h2s_c[] = {0.7, 1.3, -0.9};
    const cplx h2h_c[] = {-0.3, 0.8, -1.1};
    const cplx h2s_z[] = {{3.0, 0.5}, {-1.2, 0.8}, {0.0, 2.0}};
    const cplx h2h_z[] = {{-1.5, 0.7}, {2.0, -0.6}, {0.9, 1.1}};
    const double xs_s[] = {0.6, 1.5, 2.4}, ys_s[] = {0.7, 1.6, 2.5};
    const double xs_h[] = {0.5, 1.2, 2.3}, ys_h[] = {0.8, 1.7, 2.9};
    for (int ci = 0; ci < 3; ++ci)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                C.run("degenerate/h2s/c" + std::to_string(ci) + "/p" + std::to_string(3 * i + j),
                      [&] {
                          return degenerate_identity_residual(
                              Family::H2S, h2s_c[ci], {h2s_z[ci], xs_s[i], ys_s[j]});
                      });
                C.run("degenerate/h2h/c" + std::to_string(ci) + "/p" + std::to_string(3 * i + j),
                      [&] {
                          return degenerate_identity_residual(
                              Family::H2H, h2h_c[ci], {h2h_z[ci], xs_h[i], ys_h[j]});
                      });
            }
}

void suite_degenerate(Collector& C) {
    suite_degen_relation(C);
    suite_degenerate_kernels(C);
}

// ------------------------------------------------------------- elementary --

void suite_elementary(Collector& C) {
    struct ECase {
        const char* name;
        ElementaryCase which;
        FamilyParams fp;
        const double* xs;
        const double* ys;
    };
    static const double xs_int[] = {0.5, 1.4, 2.6}, ys_int[] = {0.9, 1.9, 2.8};
    static const double xs_half[] = {0.4, 1.3, 2.7}, ys_half[] = {0.8, 2.0, 3.5};
    static const double xs_line[] = {-2.2, -0.5, 1.4}, ys_line[] = {-1.1, 0.6, 2.3};
    const ECase ecases[] = {
        {"dd", ElementaryCase::DD, {Family::H1S, 0.5, 0.5}, xs_int, ys_int},
        {"nd", ElementaryCase::ND, {Family::H1S, -0.5, 0.5}, xs_int, ys_int},
        {"dn", ElementaryCase::DN, {Family::H1S, 0.5, -0.5}, xs_int, ys_int},
        {"nn", ElementaryCase::NN, {Family::H1S, -0.5, -0.5}, xs_int, ys_int},
        {"halfd", ElementaryCase::HalfD, {Family::GegH, 0.5}, xs_half, ys_half},
        {"halfn", ElementaryCase::HalfN, {Family::GegH, -0.5}, xs_half, ys_half},
        {"line", ElementaryCase::Line, {Family::GegDS, 0.5}, xs_line, ys_line},
    };
    const double ks[] = {0.8, 1.25};
    for (const auto& ec : ecases)
        for (double k : ks) {
            const std::string base =
                std::string("elementary/") + ec.name + "/k" + std::to_string(k);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    C.run(base + "/p" + std::to_string(3 * i + j), [&] {
                        const GreenKernel kern = green_kernel(ec.fp, -k * k);
                        return defect(kern(ec.xs[i], ec.ys[j]),
                                      elementary_kernel(ec.which, k, ec.xs[i], ec.ys[j]));
                    });
        }
    C.run("elementary/ddspec", [&] {
        const SpectrumSpec sp = spectrum({Family::H1S, 0.5, 0.5}, 26.0);
        if (sp.discrete.size() != 5) return kBlown;
        double worst = 0.0;
        for (int n = 1; n <= 5; ++n)
            worst = std::max(worst, std::abs(sp.discrete[n - 1] - cplx(n * n)));
        return worst;
    });
}

// --------------------------------------------------------------- geometry --

double gauged_ode_residual(const FamilyParams& fp, SolutionId which, cplx z, double r) {
    const double h = 1e-3;
    const cplx fm2 = solution(fp, which, z, r - 2 * h), fm1 = solution(fp, which, z, r - h);
    const cplx f0 = solution(fp, which, z, r);
    const cplx fp1 = solution(fp, which, z, r + h), fp2 = solution(fp, which, z, r + 2 * h);
    const cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    const cplx resid = -d2 + (potential(fp, r) - z) * f0;
    return std::abs(resid) / (1.0 + std::abs(z * f0));
}

void suite_geometry(Collector& C) {
    for (int d = 2; d <= 6; ++d)
        for (int L = 0; L <= 4; ++L) {
            ManifoldSpec m;
            m.kind = ManifoldKind::Sphere;
            m.d = d;
            m.l = 0;
            const double k = L + 0.5;
            C.run("geometry/sphere/d" + std::to_string(d) + "L" + std::to_string(L), [&] {
                const cplx got = manifold_eigenvalue(m, k);
                return std::abs(got - cplx(static_cast<double>(-L * (L + d - 1))));
            });
        }
    // Same total angular index split between the sector label and the radial
    // quantum number must land on the same eigenvalue.
    for (int L = 1; L <= 3; ++L) {
        ManifoldSpec m;
        m.kind = ManifoldKind::Sphere;
        m.d = 3;
        m.l = 1;
        C.run("geometry/sphere-sector/L" + std::to_string(L), [&] {
            const cplx got = manifold_eigenvalue(m, L - 1 + 0.5);
            return std::abs(got - cplx(static_cast<double>(-L * (L + 2))));
        });
    }

    struct GCase {
        const char* name;
        ManifoldSpec m;
    };
    std::vector<GCase> reductions;
    {
        ManifoldSpec m;
        m.kind = ManifoldKind::Hyperbolic;
        m.d = 3;
        m.l = 2;
        reductions.push_back({"hyperbolic3", m});
        m.kind = ManifoldKind::DeSitter;
        m.d = 4;
        m.l = 1;
        reductions.push_back({"desitter4", m});
        m = ManifoldSpec{};
        m.kind = ManifoldKind::DoubleSphere;
        m.p = 3;
        m.q = 4;
        m.l = 1;
        m.j = 2;
        reductions.push_back({"doublesphere34", m});
        m.kind = ManifoldKind::Hyperboloid;
        reductions.push_back({"hyperboloid34", m});
        m = ManifoldSpec{};
        m.kind = ManifoldKind::ComplexHyperboloid;
        m.p = 4;
        m.l = 1;
        m.j = 1;
        reductions.push_back({"cplxhyperboloid4", m});
    }
    for (const auto& gc : reductions)
        for (int ki = 0; ki < 3; ++ki) {
            const double k = ki + 0.5;
            C.run(std::string("geometry/consistency/") + gc.name + "/k" + std::to_string(ki),
                  [&] {
                      const Reduction red = reduce(gc.m);
                      const FamilyParams& fp = red.params;
                      cplx x;
                      if (fp.family == Family::GegS || fp.family == Family::GegH
                          || fp.family == Family::GegDS)
                          x = fp.p1;
                      else
                          x = 0.5 * (fp.p1 + fp.p2);
                      const cplx e2 = (k + x) * (k + x);
                      cplx want;
                      switch (gc.m.kind) {
                          case ManifoldKind::Sphere:
                          case ManifoldKind::DeSitter: want = red.gauge_shift - e2; break;
                          case ManifoldKind::Hyperbolic: want = e2 - red.gauge_shift; break;
                          case ManifoldKind::DoubleSphere:
                          case ManifoldKind::ComplexHyperboloid:
                              want = red.gauge_shift - red.scale * e2;
                              break;
                          case ManifoldKind::Hyperboloid:
                              want = red.scale * e2 - red.gauge_shift;
                              break;
                      }
                      return std::abs(manifold_eigenvalue(gc.m, k) - want);
                  });
        }

    {
        ManifoldSpec m;
        m.kind = ManifoldKind::Sphere;
        m.d = 2;
        m.l = 1;
        const Reduction red = reduce(m);
        const cplx z = (2.5 + red.params.p1) * (2.5 + red.params.p1);
        for (int i = 0; i < 10; ++i) {
            const double r = 0.3 + i * (2.55 / 9.0);
            C.run("geometry/gauged-ode/sphere2/p" + std::to_string(i),
                  [&] { return gauged_ode_residual(red.params, SolutionId::Ps, z, r); });
        }
    }
    {
        ManifoldSpec m;
        m.kind = ManifoldKind::Hyperbolic;
        m.d = 2;
        m.l = 1;
        const Reduction red = reduce(m);
        for (int i = 0; i < 10; ++i) {
            const double r = 0.4 + i * (2.7 / 9.0);
            C.run("geometry/gauged-ode/hyperbolic2/p" + std::to_string(i),
                  [&] { return gauged_ode_residual(red.params, SolutionId::Qh, -1.0, r); });
        }
    }
}

// ---------------------------------------------------------------- driver --

using SuiteFn = void (*)(Collector&);

struct SuiteDef {
    const char* name;
    double tol;
    SuiteFn fn;
};

const SuiteDef kSuiteDefs[] = {
    {"kummer", 1e-10, suite_kummer},
    {"connect", 1e-10, suite_connect},
    {"halfint", 1e-10, suite_halfint},
    {"whipple", 1e-10, suite_whipple},
    {"legendre", 1e-10, suite_legendre},
    {"wronskian", 1e-8, suite_wronskian},
    {"kernels-oracle", 1e-4, suite_kernels_oracle},
    {"spectra-oracle", 1e-3, suite_spectra_oracle},
    {"transmute", 1e-8, suite_transmute},
    {"degenerate", 1e-9, suite_degenerate},
    {"elementary", 1e-10, suite_elementary},
    {"geometry", 1e-7, suite_geometry},
};

CheckReport run_with(const std::string& name, double tol, SuiteFn fn) {
    CheckReport rep;
    rep.suite = name;
    rep.tolerance = tol;
    const auto t0 = std::chrono::steady_clock::now();
    Collector c{rep};
    fn(c);
    rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuiteDefs) v.push_back(s.name);
        return v;
    }();
    return names;
}

double default_tolerance(const std::string& suite) {
    for (const auto& s : kSuiteDefs)
        if (suite == s.name) return s.tol;
    throw UsageError("unknown verification suite: " + suite);
}

CheckReport run_suite(const std::string& suite, double tol_override) {
    for (const auto& s : kSuiteDefs)
        if (suite == s.name)
            return run_with(s.name, tol_override > 0.0 ? tol_override : s.tol, s.fn);
    throw UsageError("unknown verification suite: " + suite);
}

CheckReport degen_relation_report(double tol) {
    return run_with("degenerate-relation", tol, suite_degen_relation);
}

CheckReport degenerate_kernels_report(double tol) {
    return run_with("degenerate-kernels", tol, suite_degenerate_kernels);
}

}  // namespace hypergreen
