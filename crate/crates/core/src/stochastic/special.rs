//! Standard-normal CDF and quantile function.
//!
//! Both directions are rational approximations evaluated in plain f64
//! arithmetic, so results do not depend on the platform's libm:
//!
//! * `norm_ppf` is Wichura's PPND16 (algorithm AS 241), accurate to about
//!   1e-15 relative over the full open interval.
//! * `norm_cdf` goes through Cody's rational Chebyshev approximation of
//!   erf/erfc (SPECFUN "calerf"), giving full double precision down to
//!   the far tail.

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const INV_SQRT_PI: f64 = 5.6418958354775628695e-1;

/// Quantile of the standard normal distribution (AS 241, PPND16).
///
/// `p` must lie strictly inside (0, 1); anything else is a caller bug and
/// returns NaN rather than an infinity that could leak into samples.
pub fn norm_ppf(p: f64) -> f64 {
    if !(p > 0.0 && p < 1.0) {
        return f64::NAN;
    }
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * poly7(r, &PPND_A) / poly7(r, &PPND_B);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        let r = r - 1.6;
        poly7(r, &PPND_C) / poly7(r, &PPND_D)
    } else {
        let r = r - 5.0;
        poly7(r, &PPND_E) / poly7(r, &PPND_F)
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

/// Standard normal CDF, `P(Z <= x)`.
pub fn norm_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / SQRT_2)
}

/// Error function via Cody's rational approximations.
pub fn erf(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= 0.46875 {
        let r = x * x;
        return x * poly4(r, &ERF_A) / poly4_monic(r, &ERF_B);
    }
    let e = erfc_abs(ax);
    if x < 0.0 {
        e - 1.0
    } else {
        1.0 - e
    }
}

/// Complementary error function, accurate for large positive arguments.
pub fn erfc(x: f64) -> f64 {
    let ax = x.abs();
    if ax <= 0.46875 {
        return 1.0 - erf(x);
    }
    let e = erfc_abs(ax);
    if x < 0.0 {
        2.0 - e
    } else {
        e
    }
}

// erfc(x) for x > 0.46875.
fn erfc_abs(x: f64) -> f64 {
    if x > 26.6 {
        // exp(-x^2) underflows; erfc is 0 to double precision.
        return 0.0;
    }
    // exp(-x^2) computed as exp(-xsq)*exp(-del) with xsq a truncated square,
    // which keeps the relative error of the exponential small.
    let xsq = (x * 16.0).trunc() / 16.0;
    let del = (x - xsq) * (x + xsq);
    let expt = (-xsq * xsq).exp() * (-del).exp();
    if x <= 4.0 {
        expt * poly8(x, &ERFC_C) / poly8_monic(x, &ERFC_D)
    } else {
        let r = 1.0 / (x * x);
        let frac = r * poly5(r, &ERFC_P) / poly5_monic(r, &ERFC_Q);
        expt * (INV_SQRT_PI - frac) / x
    }
}

fn poly7(x: f64, c: &[f64; 8]) -> f64 {
    ((((((c[7] * x + c[6]) * x + c[5]) * x + c[4]) * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]
}

fn poly4(x: f64, c: &[f64; 5]) -> f64 {
    (((c[4] * x + c[0]) * x + c[1]) * x + c[2]) * x + c[3]
}

fn poly4_monic(x: f64, c: &[f64; 4]) -> f64 {
    (((x + c[0]) * x + c[1]) * x + c[2]) * x + c[3]
}

fn poly8(x: f64, c: &[f64; 9]) -> f64 {
    let mut num = c[8] * x;
    for &k in &c[..7] {
        num = (num + k) * x;
    }
    num + c[7]
}

fn poly8_monic(x: f64, c: &[f64; 8]) -> f64 {
    let mut den = x;
    for &k in &c[..7] {
        den = (den + k) * x;
    }
    den + c[7]
}

fn poly5(x: f64, c: &[f64; 6]) -> f64 {
    let mut num = c[5] * x;
    for &k in &c[..4] {
        num = (num + k) * x;
    }
    num + c[4]
}

fn poly5_monic(x: f64, c: &[f64; 5]) -> f64 {
    let mut den = x;
    for &k in &c[..4] {
        den = (den + k) * x;
    }
    den + c[4]
}

// AS 241 PPND16 coefficients.
const PPND_A: [f64; 8] = [
    3.3871328727963666080e0,
    1.3314166789178437745e2,
    1.9715909503065514427e3,
    1.3731693765509461125e4,
    4.5921953931549871457e4,
    6.7265770927008700853e4,
    3.3430575583588128105e4,
    2.5090809287301226727e3,
];
const PPND_B: [f64; 8] = [
    1.0,
    4.2313330701600911252e1,
    6.8718700749205790830e2,
    5.3941960214247511077e3,
    2.1213794301586595867e4,
    3.9307895800092710610e4,
    2.8729085735721942674e4,
    5.2264952788528545610e3,
];
const PPND_C: [f64; 8] = [
    1.42343711074968357734e0,
    4.63033784615654529590e0,
    5.76949722146069140550e0,
    3.64784832476320460504e0,
    1.27045825245236838258e0,
    2.41780725177450611770e-1,
    2.27238449892691845833e-2,
    7.74545014278341407640e-4,
];
const PPND_D: [f64; 8] = [
    1.0,
    2.05319162663775882187e0,
    1.67638483018380384940e0,
    6.89767334985100004550e-1,
    1.48103976427480074590e-1,
    1.51986665636164571966e-2,
    5.47593808499534494600e-4,
    1.05075007164441684324e-9,
];
const PPND_E: [f64; 8] = [
    6.65790464350110377720e0,
    5.46378491116411436990e0,
    1.78482653991729133580e0,
    2.96560571828504891230e-1,
    2.65321895265761230930e-2,
    1.24266094738807843860e-3,
    2.71155556874348757815e-5,
    2.01033439929228813265e-7,
];
const PPND_F: [f64; 8] = [
    1.0,
    5.99832206555887937690e-1,
    1.36929880922735805310e-1,
    1.48753612908506148525e-2,
    7.86869131145613259100e-4,
    1.84631831751005468180e-5,
    1.42151175831644588870e-7,
    2.04426310338993978564e-15,
];

// Cody "calerf" coefficients.
const ERF_A: [f64; 5] = [
    3.16112374387056560e0,
    1.13864154151050156e2,
    3.77485237685302021e2,
    3.20937758913846947e3,
    1.85777706184603153e-1,
];
const ERF_B: [f64; 4] = [
    2.36012909523441209e1,
    2.44024637934444173e2,
    1.28261652607737228e3,
    2.84423683343917062e3,
];
const ERFC_C: [f64; 9] = [
    5.64188496988670089e-1,
    8.88314979438837594e0,
    6.61191906371416295e1,
    2.98635138197400131e2,
    8.81952221241769090e2,
    1.71204761263407058e3,
    2.05107837782607147e3,
    1.23033935479799725e3,
    2.15311535474403846e-8,
];
const ERFC_D: [f64; 8] = [
    1.57449261107098347e1,
    1.17693950891312499e2,
    5.37181101862009858e2,
    1.62138957456669019e3,
    3.29079923573345963e3,
    4.36261909014324716e3,
    3.43936767414372164e3,
    1.23033935480374942e3,
];
const ERFC_P: [f64; 6] = [
    3.05326634961232344e-1,
    3.60344899949804439e-1,
    1.25781726111229246e-1,
    1.60837851487422766e-2,
    6.58749161529837803e-4,
    1.63153871373020978e-2,
];
const ERFC_Q: [f64; 5] = [
    2.56852019228982242e0,
    1.87295284992346047e0,
    5.27905102951428412e-1,
    6.05183413124413191e-2,
    2.33520497626869185e-3,
];
