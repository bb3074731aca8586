#include "relspec/specfun.hpp"

#include <cmath>
#include <limits>

namespace relspec {
namespace specfun {
namespace {

// Chebyshev tables for the modified Bessel functions.  Small-argument
// series are in t = x^2/2 - 1 on (0,2]; the mid range uses t = (16/x-5)/3
// on [2,8] and the far range t = 16/x - 1 on [8,inf), all exponentially
// scaled.
inline constexpr double kK0Small[] = {
    -0.5353273932339028,
    0.3442898999246285,
    0.0359799365153615,
    0.001264615411446926,
    2.286212103119452e-05,
    2.5347910790261494e-07,
    1.904516377220209e-09,
    1.0349695257633625e-11,
    4.2598161427910826e-14,
    1.3744654358807508e-16,
};
inline constexpr double kK1Small[] = {
    -0.12818069033732507,
    -0.10916919599320105,
    -0.006636878452817714,
    -0.00016822792382067343,
    -2.389559180803608e-06,
    -2.1853569024549695e-08,
    -1.3982271326113327e-10,
    -6.618562752976041e-13,
    -2.4134516242987822e-15,
    -6.990873731242567e-18,
};
inline constexpr double kI0Small[] = {
    3.2058456136159266,
    0.638809625651177,
    0.03685485969436176,
    0.00098287812725148,
    1.4983654208927293e-05,
    1.4738449008423848e-07,
    1.0114797900674826e-09,
    5.1149979020112795e-12,
    1.984280622680562e-14,
    6.090516506058955e-17,
};
inline constexpr double kI1Small[] = {
    1.2835179939823749,
    0.1475393201491934,
    0.005898742680020788,
    0.00011988137174638708,
    1.4739165119093128e-06,
    1.2138074968740922e-08,
    7.161106692799279e-11,
    3.17487931131012e-13,
    1.0962998348773076e-15,
    3.0315021220933553e-18,
};
inline constexpr double kK0Mid[] = {
    2.4235605209667206,
    -0.02235652605699819,
    0.0007734181154693858,
    -4.281006688886099e-05,
    3.0817001738629747e-06,
    -2.639367222009665e-07,
    2.563713036403469e-08,
    -2.7427055499002012e-09,
    3.1694296580974997e-10,
    -3.902353286962184e-11,
    5.068040698188575e-12,
    -6.889574741007871e-13,
    9.744978497825918e-14,
    -1.4273328418845485e-14,
    2.156412571021463e-15,
    -3.3496542551495625e-16,
    5.3352602169529114e-17,
    -8.693669980890753e-18,
};
inline constexpr double kK0Large[] = {
    2.487981301736924,
    -0.009174852691025696,
    0.00014445509317750059,
    -4.01361417543571e-06,
    1.5678318108523108e-07,
    -7.770110438521738e-09,
    4.6111825761797177e-10,
    -3.158592997860566e-11,
    2.435018039365041e-12,
    -2.0743313873983479e-13,
    1.925787280589917e-14,
    -1.927554805838956e-15,
    2.0621980291978182e-16,
    -2.3416851175792425e-17,
    2.8059028106430423e-18,
};
inline constexpr double kK1Mid[] = {
    2.7744313406973884,
    0.07571989953199368,
    -0.0014410515564754062,
    6.650116955125748e-05,
    -4.369984709520141e-06,
    3.5402774997630525e-07,
    -3.311163779293292e-08,
    3.4459775819010535e-09,
    -3.898932347475427e-10,
    4.720819750465836e-11,
    -6.047835662875356e-12,
    8.128494874865875e-13,
    -1.138694574714789e-13,
    1.654035840846228e-14,
    -2.4809025677068848e-15,
    3.8292378907024097e-16,
    -6.064734104001242e-17,
    9.832425623264862e-18,
};
inline constexpr double kK1Large[] = {
    2.56379308343739,
    0.02832887813049721,
    -0.00024753706739052506,
    5.771972451607249e-06,
    -2.0689392195365484e-07,
    9.739983441381804e-09,
    -5.585336140380625e-10,
    3.7329966340461855e-11,
    -2.8250519610232256e-12,
    2.372019002484144e-13,
    -2.176677387991754e-14,
    2.1579141616160325e-15,
    -2.290196930718269e-16,
    2.582885729823275e-17,
    -3.076752641268463e-18,
};
inline constexpr double kI0Mid[] = {
    0.8401736276632971,
    0.015478511712486672,
    0.000957279312459077,
    -0.00018349606776142815,
    -5.47662255752754e-05,
    1.1218594893676038e-05,
    2.0835700901050486e-06,
    -1.1391723709103685e-06,
    1.1385099223387771e-07,
    5.6807828179196364e-08,
    -2.7089334534589872e-08,
    4.563005506871581e-09,
    6.521198303424641e-10,
    -6.604761357876228e-10,
    2.133728610009423e-10,
    -3.087262919785213e-11,
    -6.187722300928845e-12,
    5.74471041745708e-12,
    -2.1037219308627805e-12,
    4.551542419139785e-13,
    -1.808187570877758e-14,
    -3.5594941207128466e-14,
    1.978151348397556e-14,
    -6.6106392080381556e-15,
    1.458795828233721e-15,
    -1.0324030165760125e-16,
    -9.222364892647428e-17,
    5.990039481443701e-17,
    -2.3032946319477135e-17,
    6.453831393340835e-18,
};
inline constexpr double kI0Large[] = {
    0.8044904110141088,
    0.0033691164782556943,
    6.889758346916825e-05,
    2.8913705208347567e-06,
    2.0489185894690638e-07,
    2.266668990498178e-08,
    3.3962320257083865e-09,
    4.94060238822497e-10,
    1.1889147107846437e-11,
    -3.1499165279632416e-11,
    -1.3215811840447713e-11,
    -1.7941785315068076e-12,
    7.180124451383686e-13,
    3.852778382742172e-13,
    1.540086217520184e-14,
    -4.1505693472865785e-14,
    -9.55484669878791e-15,
    3.811680669268027e-15,
    1.7725601330086068e-15,
    -3.425485615467077e-16,
    -2.8276239842056236e-16,
    3.4612227363393705e-17,
    4.465621750561301e-17,
    -4.8305029007498465e-18,
    -7.233197098035753e-18,
};
inline constexpr double kI1Mid[] = {
    0.6869948173515494,
    -0.03765590726757852,
    -0.001640268909702521,
    0.0001777686331673665,
    7.025804863559332e-05,
    -1.0768484287127028e-05,
    -2.8333283190613124e-06,
    1.220758982252813e-06,
    -8.440822006941762e-08,
    -6.938397193589036e-08,
    2.8567734029723365e-08,
    -4.0958388904839495e-09,
    -9.26742505519716e-10,
    7.238965722587891e-10,
    -2.1535942090119523e-10,
    2.6327737544862564e-11,
    8.278786422202882e-12,
    -6.2592904870355994e-12,
    2.1486972695889766e-12,
    -4.293852855585575e-13,
    1.8154232666105314e-15,
    4.103472200316297e-14,
    -2.0924866546526882e-14,
    6.666583332895458e-15,
    -1.3783744561227636e-15,
    5.676760864641193e-17,
    1.0851809027860293e-16,
    -6.391723997582961e-17,
    2.3566227465198133e-17,
    -6.344444057009419e-18,
};
inline constexpr double kI1Large[] = {
    0.7785762350182801,
    -0.009761097491361469,
    -0.00011058893876262371,
    -3.882564808877691e-06,
    -2.512236237870209e-07,
    -2.6314688468895196e-08,
    -3.835380385964237e-09,
    -5.589743462196584e-10,
    -1.8974958123505413e-11,
    3.2526035830154884e-11,
    1.4125807436613782e-11,
    2.035628544147091e-12,
    -7.198551776245929e-13,
    -4.083551111092226e-13,
    -2.1015418427714147e-14,
    4.272440016711245e-14,
    1.042027698408835e-14,
    -3.8144030723496664e-15,
    -1.880354775466536e-15,
    3.308202306643791e-16,
    2.9626290015866564e-16,
    -3.209525791047657e-17,
    -4.650305709445141e-17,
    4.414346892475619e-18,
    7.517313219219004e-18,
};

template <std::size_t N>
double clenshaw(const double (&c)[N], double t) {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    const double t2 = 2.0 * t;
    for (std::size_t i = N; i-- > 0;) {
        b2 = b1;
        b1 = b0;
        b0 = t2 * b1 - b2 + c[i];
    }
    return 0.5 * (b0 - b2);
}

void check_positive(double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: argument must be positive");
}

} // namespace

double bessel_k0_reg(double x) { return clenshaw(kK0Small, 0.5 * x * x - 1.0); }
double bessel_k1_reg(double x) { return clenshaw(kK1Small, 0.5 * x * x - 1.0); }

double bessel_i0(double x) {
    x = std::abs(x);
    if (x <= 2.0) return clenshaw(kI0Small, 0.5 * x * x - 1.0);
    return bessel_i0e(x) * std::exp(x);
}

double bessel_i1(double x) {
    const double ax = std::abs(x);
    double v;
    if (ax <= 2.0)
        v = ax * clenshaw(kI1Small, 0.5 * ax * ax - 1.0);
    else
        v = bessel_i1e(ax) * std::exp(ax);
    return x < 0 ? -v : v;
}

double bessel_i0e(double x) {
    x = std::abs(x);
    if (x <= 2.0) return clenshaw(kI0Small, 0.5 * x * x - 1.0) * std::exp(-x);
    if (x <= 8.0) return clenshaw(kI0Mid, (16.0 / x - 5.0) / 3.0) / std::sqrt(x);
    return clenshaw(kI0Large, 16.0 / x - 1.0) / std::sqrt(x);
}

double bessel_i1e(double x) {
    const double ax = std::abs(x);
    double v;
    if (ax <= 2.0)
        v = ax * clenshaw(kI1Small, 0.5 * ax * ax - 1.0) * std::exp(-ax);
    else if (ax <= 8.0)
        v = clenshaw(kI1Mid, (16.0 / ax - 5.0) / 3.0) / std::sqrt(ax);
    else
        v = clenshaw(kI1Large, 16.0 / ax - 1.0) / std::sqrt(ax);
    return x < 0 ? -v : v;
}

double bessel_k0(double x) {
    check_positive(x);
    if (x <= 2.0)
        return -std::log(0.5 * x) * bessel_i0(x) + bessel_k0_reg(x);
    if (x > 705.0) return 0.0; // below exponential range
    return bessel_k0e(x) * std::exp(-x);
}

double bessel_k1(double x) {
    check_positive(x);
    if (x <= 2.0)
        return 1.0 / x + std::log(0.5 * x) * bessel_i1(x) + x * bessel_k1_reg(x);
    if (x > 705.0) return 0.0;
    return bessel_k1e(x) * std::exp(-x);
}

double bessel_k0e(double x) {
    check_positive(x);
    if (x <= 2.0) return bessel_k0(x) * std::exp(x);
    if (x <= 8.0) return clenshaw(kK0Mid, (16.0 / x - 5.0) / 3.0) / std::sqrt(x);
    return clenshaw(kK0Large, 16.0 / x - 1.0) / std::sqrt(x);
}

double bessel_k1e(double x) {
    check_positive(x);
    if (x <= 2.0) return bessel_k1(x) * std::exp(x);
    if (x <= 8.0) return clenshaw(kK1Mid, (16.0 / x - 5.0) / 3.0) / std::sqrt(x);
    return clenshaw(kK1Large, 16.0 / x - 1.0) / std::sqrt(x);
}

double bessel_k(int nu, double x) {
    check_positive(x);
    switch (nu) {
    case 0: return bessel_k0(x);
    case 1: return bessel_k1(x);
    case 2: return bessel_k0(x) + 2.0 / x * bessel_k1(x);
    default: throw std::domain_error("bessel_k: order must be 0, 1 or 2");
    }
}

} // namespace specfun

namespace {

double dist(Point2 x, Point2 y, int d) {
    const Point2 r = x - y;
    return d == 1 ? std::abs(r.x) : std::sqrt(dot(r, r));
}

} // namespace

GreenEval green(int d, Kappa kappa, Point2 x, Point2 y) {
    const double k = kappa.value;
    const double r = dist(x, y, d);
    if (r == 0.0) throw std::domain_error("green: x == y");
    GreenEval g;
    switch (d) {
    case 1: {
        const double e = std::exp(-k * r);
        g.value = e / (2.0 * k);
        const double s = (x.x > y.x) ? 1.0 : -1.0;
        g.grad_x[0] = -s * e / 2.0;            // d/dx
        g.hess_xy[0][0] = -k * e / 2.0;        // d^2/(dx dy) = -d^2/dx^2
        return g;
    }
    case 2: {
        const double z = k * r;
        const double inv2pi = 1.0 / (2.0 * M_PI);
        const double k0 = specfun::bessel_k0(z);
        const double k1 = specfun::bessel_k1(z);
        const double k2 = specfun::bessel_k0(z) + 2.0 / z * k1;
        g.value = inv2pi * k0;
        const Point2 rx = x - y;
        const double c = -inv2pi * k * k1 / r; // dG/dr * (1/r)
        g.grad_x = {c * rx.x, c * rx.y};
        // hess_xy = d^2 G / dx_i dy_j = -d^2 G / dx_i dx_j
        // d^2G/dx_i dx_j = A * rhat_i rhat_j + B * delta_ij with
        //   A = inv2pi * k^2 * (K0 + K2)/2 - B,  B = -inv2pi*k*K1/r
        const double B = c;
        const double A = inv2pi * k * k * 0.5 * (k0 + k2) - B;
        const double ux = rx.x / r, uy = rx.y / r;
        g.hess_xy[0][0] = -(A * ux * ux + B);
        g.hess_xy[0][1] = -(A * ux * uy);
        g.hess_xy[1][0] = g.hess_xy[0][1];
        g.hess_xy[1][1] = -(A * uy * uy + B);
        return g;
    }
    case 3: {
        const double e = std::exp(-k * r);
        g.value = e / (4.0 * M_PI * r);
        const Point2 rx = x - y;
        const double dgdr = -(k * r + 1.0) * e / (4.0 * M_PI * r * r);
        g.grad_x = {dgdr * rx.x / r, dgdr * rx.y / r};
        return g;
    }
    default:
        throw std::domain_error("green: dimension must be 1, 2 or 3");
    }
}

double green_dn(int d, Kappa kappa, Point2 x, Point2 y, Point2 normal_y) {
    const GreenEval g = green(d, kappa, x, y);
    // grad_y = -grad_x by translation invariance
    return -(normal_y.x * g.grad_x[0] + normal_y.y * g.grad_x[1]);
}

} // namespace relspec
