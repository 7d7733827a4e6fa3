#include "hypergreen/gammafn.hpp"

namespace hypergreen {
namespace {

// Lanczos approximation, g = 607/128, 15 terms.
constexpr double lanczos_g = 4.7421875;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Valid for Re z >= 0.5.
cplx gamma_lanczos(cplx z) {
    z -= 1.0;
    cplx a = lanczos_c[0];
    for (int k = 1; k < 15; ++k) a += lanczos_c[k] / (z + static_cast<double>(k));
    cplx t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

cplx gamma(cplx z) {
    if (is_real_int(z) && z.real() <= 0.0)
        throw PoleError("gamma pole at nonpositive integer");
    if (z.real() >= 0.5) return gamma_lanczos(z);
    return pi / (std::sin(pi * z) * gamma_lanczos(one_minus(z)));
}

cplx rgamma(cplx z) {
    if (is_real_int(z) && z.real() <= 0.0) return {0.0, 0.0};
    if (z.real() >= 0.5) return 1.0 / gamma_lanczos(z);
    return std::sin(pi * z) * gamma_lanczos(one_minus(z)) / pi;
}

}  // namespace hypergreen
