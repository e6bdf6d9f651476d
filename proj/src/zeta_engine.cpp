#include "zetaposet/zeta_engine.hpp"

#include <cmath>
#include <complex>
#include <iterator>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zetaposet {

namespace {

constexpr double k_pi = std::numbers::pi;
constexpr double k_two_pi = 2.0 * std::numbers::pi;

// Correction coefficient functions for the Riemann-Siegel remainder, as
// Chebyshev series on the fractional part p in [0, 1] (argument x = 2p - 1).
// Frozen numerical fits; regenerating them requires an extended-precision
// environment, so they are tabulated rather than derived at runtime.

static const double k_rs_c0[] = {
    0.6426672862397684, 0.0, 0.27197299999785507,
    0.0, 0.010738605819340285, 0.0,
    -0.0013743815296336614, 0.0, -0.00012468221880320676,
    0.0, -5.764599706783048e-07, 0.0,
    2.728067429580452e-07, 0.0, 8.07795305950047e-09,
    0.0, -2.0884608068869654e-10, 0.0,
    -1.3115561854739528e-11, 0.0, -1.4207987228087184e-14,
    0.0, 1.0271701357931162e-14, 0.0,
    1.3974598819518376e-16,
};
static const double k_rs_c1[] = {
    0.0, 0.010697913921003001, 0.0,
    0.017170651243377882, 0.0, 0.002793211149788471,
    0.0, -3.6375653719275045e-05, 0.0,
    -2.7108955231150888e-05, 0.0, -1.0483749866752774e-06,
    0.0, 5.886467166527572e-08, 0.0,
    4.322967268502779e-09, 0.0, -1.1369591588273713e-11,
    0.0, -6.699833910355327e-12, 0.0,
    -1.0079997652808478e-13, 0.0, 5.152488009222113e-15,
    0.0, 1.521695447183702e-16, 0.0,
    -1.861946483368696e-18,
};
static const double k_rs_c2[] = {
    0.0031461158539889122, -2.0656294548303373e-19, -0.0023087838845307503,
    0.0, 5.769820766689864e-05, 0.0,
    0.00035238862023665894, 0.0, 2.524666745868445e-05,
    0.0, -3.4428211971931383e-06, 0.0,
    -3.535074556622458e-07, 0.0, 3.730830183792703e-09,
    0.0, 1.2776951864116418e-09, 0.0,
    2.187461620414923e-11, 0.0, -1.9141410964609255e-12,
    0.0, -6.562883102172506e-14, 0.0,
    1.2586009182419913e-15, 0.0, 8.140076623909765e-17,
};
static const double k_rs_c3[] = {
    1.1960664494327504e-17, 7.123256221207015e-05, 9.133350406437436e-18,
    0.00023234305298164471, -3.0153814560344045e-17, -0.0001292991204547235,
    1.0832230339733684e-17, 1.807449641367098e-05, -2.4127301566742876e-18,
    6.526185187220565e-06, 3.703777855437392e-19, -1.1696365378525118e-07,
    0.0, -7.349476126517543e-08, 0.0,
    -1.7750910077912672e-09, 0.0, 2.5555529613261563e-10,
    0.0, 1.1376636600555383e-11, 0.0,
    -3.349863898545605e-13, 0.0, -2.5537379354265053e-14,
    0.0, 6.766500773130049e-17, 0.0,
    2.976888472010754e-17, 0.0, 2.995220807893749e-19,
};
static const double k_rs_c4[] = {
    0.00016765745246580016, -2.976476659583085e-15, -0.0002272876894350606,
    3.274572590977929e-16, 6.47738718873514e-05, -1.0902539104047873e-16,
    -8.492200501165136e-06, 3.930367862348205e-17, -2.61614072429024e-06,
    -1.0841803817522173e-17, 8.336764968377376e-07, 2.7846151568526857e-18,
    6.324704037661418e-08, -5.384330467841924e-19, -1.0059949401862276e-08,
    0.0, -7.822677207323914e-10, 0.0,
    3.1676582885436363e-11, 0.0, 3.5006944718276927e-12,
    0.0, -1.4314815095845674e-14, 0.0,
    -7.269402695780969e-15, 0.0, -8.78055618027646e-17,
    0.0, 8.150254372398905e-18, 0.0,
    1.9208395384721488e-19,
};
static const double k_rs_c5[] = {
    7.483365997048785e-14, 8.828845253144589e-05, 5.725721637258038e-14,
    -1.5628684990037643e-05, -1.8192805305947388e-13, -1.834244708852367e-07,
    6.534254358414601e-14, 2.109726785344529e-06, -1.4564119517488604e-14,
    -6.657016168081767e-07, 2.2381922080594394e-15, 2.7714741045484002e-08,
    -7.397436002488824e-17, 1.8111249408014658e-08, -7.138575471782492e-17,
    -5.765890849152561e-10, 2.0043377316334998e-17, -1.8675033429546576e-10,
    -2.0064085482056587e-18, -1.1051600555411661e-13, -1.0149960912054471e-19,
    7.87064327306881e-13, 0.0, 1.44583507667174e-14,
    0.0, -1.581459096528066e-15, 0.0,
    -4.910638972991423e-17, 0.0, 1.6444196976959767e-18,
};
static const double k_rs_c6[] = {
    1.2189738953893072e-05, -7.410412886585983e-12, -1.3829762579210893e-05,
    8.594266047800087e-13, 5.110974899495015e-06, -2.192748175798112e-13,
    -2.045816372105133e-06, 7.533229689133788e-14, 4.938142724842315e-07,
    -2.1491609294103832e-14, -3.6187621826581986e-08, 5.942359281715182e-15,
    -1.2876901985268117e-08, -1.2642152401595776e-15, 2.574415083524299e-09,
    1.6155365421632755e-16, 1.3641373528886032e-10, -2.521561348256771e-18,
    -3.032431205301446e-11, -2.9022778334323033e-18, -1.3216629029558129e-12,
    3.957068957155619e-19, 1.303149937076397e-13, 0.0,
    6.6359154214507365e-15, 0.0, -2.4599273809842917e-16,
    0.0, -1.6815547167650345e-17, 0.0,
    1.8933562261567534e-19,
};
static const double k_rs_c7[] = {
    8.928972794336153e-11, 1.2768850001948476e-05, 6.824420294980242e-11,
    -3.862956724266008e-06, -2.0824321962014237e-10, 1.3693880582097792e-06,
    7.47517305960891e-11, -2.7647205882071896e-07, -1.6669518544060967e-11,
    1.0283918026064746e-08, 2.5635982878812833e-12, 1.1754926177860658e-08,
    -8.584508238873444e-14, -3.055017190901397e-09, -8.132550143196525e-14,
    1.1429995287418096e-10, 2.2873452680291498e-14, 5.1308358006167786e-11,
    -2.2921509284097193e-15, -2.8354475298476877e-12, -1.1545975300530754e-16,
    -4.266759961925012e-13, 4.1814405674824643e-17, 1.2763748023908924e-14,
    -8.716163627585647e-19, 1.8569939386808916e-15, -2.9637956102168803e-19,
    -1.5368673793890614e-17, 0.0, -4.411912674642408e-18,
};
struct ChebTable {
    const double* coefs;
    std::size_t size;
};

const ChebTable k_rs_tables[] = {
    {k_rs_c0, std::size(k_rs_c0)}, {k_rs_c1, std::size(k_rs_c1)},
    {k_rs_c2, std::size(k_rs_c2)}, {k_rs_c3, std::size(k_rs_c3)},
    {k_rs_c4, std::size(k_rs_c4)}, {k_rs_c5, std::size(k_rs_c5)},
    {k_rs_c6, std::size(k_rs_c6)}, {k_rs_c7, std::size(k_rs_c7)},
};

// Clenshaw evaluation of coefs[0] + sum_{m>=1} coefs[m] * T_m(x).
double clenshaw(const ChebTable& table, double x) {
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t i = table.size; i-- > 1;) {
        const double b0 = 2.0 * x * b1 - b2 + table.coefs[i];
        b2 = b1;
        b1 = b0;
    }
    return x * b1 - b2 + table.coefs[0];
}

void require_t_at_least_10(double t, const char* caller) {
    if (!(t >= 10.0) || !std::isfinite(t)) {
        throw std::domain_error(std::string(caller) + ": t must be >= 10");
    }
}

// B_{2k} / (2k)! for 2k = 2, 4, ..., 12.
constexpr double k_bernoulli_over_factorial[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
};

// n^w for real n > 0 and complex w, via polar assembly.
std::complex<double> real_to_complex_power(double n, std::complex<double> w) {
    const double log_n = std::log(n);
    return std::polar(std::exp(w.real() * log_n), w.imag() * log_n);
}

double auto_scan_step(double t_hi) {
    // A quarter of the local mean zero gap at the top of the window; the
    // tightest pairs below 1e4 are still several times wider than this.
    const double mean_gap = k_two_pi / std::log(t_hi / k_two_pi);
    return 0.25 * mean_gap;
}

BracketedZero bisect_bracket(double lo, double hi, double z_lo,
                             const ZeroSearchConfig& config) {
    double a = lo;
    double b = hi;
    double z_a = z_lo;
    while (b - a > config.bisect_width) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) {
            break;  // double precision exhausted
        }
        const double z_mid = hardy_z(mid);
        if (z_mid == 0.0) {
            a = mid;
            b = mid;
            break;
        }
        if ((z_a < 0.0) == (z_mid < 0.0)) {
            a = mid;
            z_a = z_mid;
        } else {
            b = mid;
        }
    }
    BracketedZero out;
    out.lo = lo;
    out.hi = hi;
    out.refined = 0.5 * (a + b);
    out.residual = std::abs(hardy_z(out.refined));
    return out;
}

std::vector<BracketedZero> scan_gram_anchors(double t_lo, double t_hi,
                                             const ZeroSearchConfig& config) {
    long m = static_cast<long>(std::ceil(riemann_siegel_theta(t_lo) / k_pi));
    if (m < 0) {
        m = 0;
    }
    std::vector<BracketedZero> found;
    double t_prev = t_lo;
    double z_prev = hardy_z(t_prev);
    while (true) {
        double anchor = gram_point(m);
        while (anchor <= t_prev) {
            ++m;
            anchor = gram_point(m);
        }
        const double t_here = std::min(anchor, t_hi);
        if (t_here <= t_prev) {
            break;
        }
        const double z_here = hardy_z(t_here);
        if ((z_prev < 0.0) != (z_here < 0.0)) {
            found.push_back(bisect_bracket(t_prev, t_here, z_prev, config));
        }
        if (t_here >= t_hi) {
            break;
        }
        t_prev = t_here;
        z_prev = z_here;
        ++m;
    }
    return found;
}

}  // namespace

Ordinate::Ordinate(double t_value) : t(t_value) {
    if (!std::isfinite(t_value) || t_value <= 0.0) {
        throw std::domain_error("Ordinate: t must be finite and positive");
    }
}

double riemann_siegel_theta(double t) {
    require_t_at_least_10(t, "riemann_siegel_theta");
    const double t_cubed = t * t * t;
    return 0.5 * t * std::log(t / k_two_pi) - 0.5 * t - k_pi / 8.0 +
           1.0 / (48.0 * t) + 7.0 / (5760.0 * t_cubed);
}

double riemann_siegel_theta_derivative(double t) {
    require_t_at_least_10(t, "riemann_siegel_theta_derivative");
    const double t_sq = t * t;
    return 0.5 * std::log(t / k_two_pi) - 1.0 / (48.0 * t_sq) -
           7.0 / (1920.0 * t_sq * t_sq);
}

double hardy_z(double t) {
    require_t_at_least_10(t, "hardy_z");
    const double a = std::sqrt(t / k_two_pi);
    const long n_main = static_cast<long>(a);  // floor, a > 0
    const double p = a - static_cast<double>(n_main);
    const double theta = riemann_siegel_theta(t);

    double main_sum = 0.0;
    for (long n = 1; n <= n_main; ++n) {
        const double dn = static_cast<double>(n);
        main_sum += std::cos(theta - t * std::log(dn)) / std::sqrt(dn);
    }
    main_sum *= 2.0;

    const double x = 2.0 * p - 1.0;
    double correction = 0.0;
    double a_power = 1.0;
    for (const ChebTable& table : k_rs_tables) {
        correction += clenshaw(table, x) / a_power;
        a_power *= a;
    }
    correction /= std::sqrt(a);
    const double sign = (n_main % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n_main - 1)
    return main_sum + sign * correction;
}

std::complex<double> zeta_euler_maclaurin(std::complex<double> s, int n_terms,
                                          int tail_order) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()) ||
        !(s.real() > 0.0)) {
        throw std::domain_error("zeta_euler_maclaurin: requires Re(s) > 0");
    }
    if (s.real() == 1.0 && s.imag() == 0.0) {
        throw std::domain_error("zeta_euler_maclaurin: pole at s = 1");
    }
    if (n_terms < 10) {
        throw std::invalid_argument("zeta_euler_maclaurin: n_terms must be >= 10");
    }
    if (tail_order < 1 || tail_order > 6) {
        throw std::invalid_argument(
            "zeta_euler_maclaurin: tail_order must be in 1..6");
    }

    std::complex<double> sum{0.0, 0.0};
    for (int n = 1; n <= n_terms; ++n) {
        sum += real_to_complex_power(static_cast<double>(n), -s);
    }
    const double big_n = static_cast<double>(n_terms);
    const std::complex<double> one{1.0, 0.0};
    sum += real_to_complex_power(big_n, one - s) / (s - one);
    sum -= 0.5 * real_to_complex_power(big_n, -s);

    // Bernoulli tail: sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1).
    std::complex<double> rising = s;
    for (int k = 1; k <= tail_order; ++k) {
        const std::complex<double> exponent = -s - (2.0 * k - 1.0);
        sum += k_bernoulli_over_factorial[k - 1] * rising *
               real_to_complex_power(big_n, exponent);
        rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    }
    return sum;
}

std::complex<double> zeta_euler_maclaurin(std::complex<double> s) {
    const double abs_t = std::abs(s.imag());
    const int n_terms = std::max(32, static_cast<int>(std::ceil(abs_t)) + 16);
    return zeta_euler_maclaurin(s, n_terms, 6);
}

double gram_point(long n) {
    if (n < 0) {
        throw std::domain_error("gram_point: n must be >= 0");
    }
    const double target = static_cast<double>(n) * k_pi;

    // Initial guess from the leading term theta(t) ~ (t/2) log(t/(2 pi e))
    // - pi/8: with y = t/(2 pi e), solve y log y = (n + 1/8)/e by Newton on
    // a convex function (global convergence from the right).
    const double c = (static_cast<double>(n) + 0.125) / std::numbers::e;
    double y = 1.0 + c;
    for (int i = 0; i < 100; ++i) {
        const double f = y * std::log(y) - c;
        const double step = f / (std::log(y) + 1.0);
        y -= step;
        if (std::abs(step) < 1e-12 * y) {
            break;
        }
    }
    double t = std::max(10.0, k_two_pi * std::numbers::e * y);

    double residual = 0.0;
    for (int i = 0; i < 64; ++i) {
        residual = riemann_siegel_theta(t) - target;
        if (std::abs(residual) < 5e-11) {
            return t;
        }
        const double t_next =
            std::max(10.0, t - residual / riemann_siegel_theta_derivative(t));
        if (t_next == t) {
            break;
        }
        t = t_next;
    }
    residual = riemann_siegel_theta(t) - target;
    if (std::abs(residual) < 1e-10) {
        return t;
    }
    throw std::runtime_error("gram_point: Newton iteration failed to converge");
}

double default_scan_step(double t_hi) { return auto_scan_step(t_hi); }

std::vector<BracketedZero> scan_grid_for_zeros(double grid_origin, double step,
                                               long k_begin, long k_end,
                                               double t_clamp,
                                               const ZeroSearchConfig& config) {
    std::vector<BracketedZero> found;
    if (k_begin >= k_end) {
        return found;
    }
    const auto node = [&](long k) {
        return std::min(grid_origin + static_cast<double>(k) * step, t_clamp);
    };
    double t_prev = node(k_begin);
    double z_prev = hardy_z(t_prev);
    for (long k = k_begin + 1; k <= k_end; ++k) {
        const double t_here = node(k);
        if (t_here <= t_prev) {
            break;  // clamped out: the window ends here
        }
        const double z_here = hardy_z(t_here);
        if ((z_prev < 0.0) != (z_here < 0.0)) {
            found.push_back(bisect_bracket(t_prev, t_here, z_prev, config));
        }
        t_prev = t_here;
        z_prev = z_here;
    }
    return found;
}

std::vector<BracketedZero> find_zero_ordinates(double t_lo, double t_hi,
                                               const ZeroSearchConfig& config) {
    if (!(t_lo >= 10.0) || !(t_hi > t_lo) || !std::isfinite(t_hi)) {
        throw std::domain_error("find_zero_ordinates: requires 10 <= t_lo < t_hi");
    }
    if (config.scan_step < 0.0 || !std::isfinite(config.scan_step) ||
        !(config.bisect_width > 0.0) || !(config.residual_tol > 0.0)) {
        throw std::invalid_argument(
            "find_zero_ordinates: invalid search configuration");
    }
    if (config.gram_anchors) {
        return scan_gram_anchors(t_lo, t_hi, config);
    }
    const double step =
        config.scan_step > 0.0 ? config.scan_step : auto_scan_step(t_hi);
    if (step <= 2.0 * config.bisect_width) {
        throw std::invalid_argument(
            "find_zero_ordinates: scan_step must exceed twice bisect_width");
    }
    const long cells = static_cast<long>(std::ceil((t_hi - t_lo) / step)) + 1;
    return scan_grid_for_zeros(t_lo, step, 0, cells, t_hi, config);
}

CountCheck count_check(double t_max, long found) {
    require_t_at_least_10(t_max, "count_check");
    if (found < 0) {
        throw std::invalid_argument("count_check: found must be >= 0");
    }
    CountCheck out;
    out.t_max = t_max;
    out.found = found;
    out.expected = riemann_siegel_theta(t_max) / k_pi + 1.0;
    out.discrepancy = std::abs(static_cast<double>(found) - out.expected);
    out.warn = out.discrepancy >= 1.0;
    return out;
}

}  // namespace zetaposet
