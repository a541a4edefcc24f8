//! Complete and incomplete elliptic integrals on the real domains needed by
//! the equilibrium formulas.
//!
//! All integrals are taken in the algebraic variable,
//!
//! ```text
//! K(k)    = int_0^1 ds / sqrt((1-s^2)(1-k^2 s^2))
//! E(k)    = int_0^1 sqrt((1-k^2 s^2)/(1-s^2)) ds
//! F(z; k) = int_0^z ds / sqrt((1-s^2)(1-k^2 s^2))
//! E(z; k) = int_0^z sqrt((1-k^2 s^2)/(1-s^2)) ds
//! Pi(v;k) = int_0^1 ds / ((1 - v s^2) sqrt((1-s^2)(1-k^2 s^2)))
//! ```
//!
//! Evaluation goes through Carlson's symmetric forms RF, RC, RD, RJ, which
//! converge quadratically for every argument set used here. The defining
//! integrals themselves, under `s = sin(theta)`, serve as the independent
//! quadrature oracle in the test suites.

use crate::{Error, Result};

/// Elliptic modulus `k` with its complement `m = 1 - k^2`.
///
/// `k` is stored, `m` is always derived, so the pair can never drift apart.
/// Construction refuses near-degenerate moduli outside
/// `[MIN_K, 1 - MIN_K]`; the transition solver never needs the endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
}

impl Modulus {
    /// Guard band excluded at both ends of (0, 1).
    pub const MIN_K: f64 = 1e-12;

    pub fn new(k: f64) -> Result<Self> {
        if !(k >= Self::MIN_K && k <= 1.0 - Self::MIN_K) {
            return Err(Error::domain(format!(
                "modulus k = {k} outside [{:e}, 1 - {:e}]",
                Self::MIN_K,
                Self::MIN_K
            )));
        }
        Ok(Modulus { k })
    }

    /// Construct from `m = 1 - k^2`.
    pub fn from_m(m: f64) -> Result<Self> {
        if !(m > 0.0 && m < 1.0) {
            return Err(Error::domain(format!("m = {m} outside (0, 1)")));
        }
        Self::new((1.0 - m).sqrt())
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// `m = 1 - k^2`, evaluated as `(1-k)(1+k)` so no precision is lost as
    /// `k` approaches 1.
    pub fn m(&self) -> f64 {
        (1.0 - self.k) * (1.0 + self.k)
    }
}

/// Complete integrals `K(k)` and `E(k)` evaluated at one modulus.
///
/// For every `k` in (0, 1): `E < pi/2 < K`.
#[derive(Debug, Clone, Copy)]
pub struct EllipticPair {
    pub big_k: f64,
    pub big_e: f64,
}

/// Complete pair `(K(k), E(k))`. Absolute error below 1e-14.
pub fn complete_pair(k: Modulus) -> EllipticPair {
    let m = k.m();
    let rf = carlson_rf(0.0, m, 1.0);
    let rd = carlson_rd(0.0, m, 1.0);
    let k2 = k.k() * k.k();
    EllipticPair {
        big_k: rf,
        big_e: rf - k2 / 3.0 * rd,
    }
}

/// Incomplete pair `(F(z; k), E(z; k))` for `z` in [0, 1].
pub fn incomplete_pair(z: f64, k: Modulus) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&z) {
        return Err(Error::domain(format!("incomplete argument z = {z} outside [0, 1]")));
    }
    if z == 0.0 {
        return Ok((0.0, 0.0));
    }
    let k2 = k.k() * k.k();
    let cc = (1.0 - z) * (1.0 + z);
    let q = 1.0 - k2 * z * z;
    let rf = carlson_rf(cc, q, 1.0);
    let rd = carlson_rd(cc, q, 1.0);
    let f = z * rf;
    let e = z * rf - k2 * z * z * z / 3.0 * rd;
    Ok((f, e))
}

/// Complete third-kind integral `Pi(v; k)` in the circular case `v` in (0, 1).
///
/// Strictly larger than `K(k)` and divergent as `v -> 1`.
pub fn pi3(nu: f64, k: Modulus) -> Result<f64> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain(format!(
            "third-kind characteristic nu = {nu} outside (0, 1)"
        )));
    }
    let m = k.m();
    Ok(carlson_rf(0.0, m, 1.0) + nu / 3.0 * carlson_rj(0.0, m, 1.0, 1.0 - nu))
}

/// Derivatives of the complete pair with respect to `m = 1 - k^2`:
/// `dE/dm = (E - K) / (2(m-1))` and `dK/dm = E / (2m(m-1)) - K / (2(m-1))`.
///
/// Returns `(dE/dm, dK/dm)`; positive and negative respectively on (0, 1).
pub fn m_derivatives(k: Modulus) -> (f64, f64) {
    let pair = complete_pair(k);
    let m = k.m();
    let de = (pair.big_e - pair.big_k) / (2.0 * (m - 1.0));
    let dk = pair.big_e / (2.0 * m * (m - 1.0)) - pair.big_k / (2.0 * (m - 1.0));
    (de, dk)
}

const CARLSON_MAX_ITER: usize = 1000;

/// Carlson RF(x, y, z); arguments non-negative, at most one zero.
fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    const ERRTOL: f64 = 0.0025;
    debug_assert!(x >= 0.0 && y >= 0.0 && z >= 0.0);
    debug_assert!(x + y > 0.0 && x + z > 0.0 && y + z > 0.0);
    let (mut xt, mut yt, mut zt) = (x, y, z);
    let (mut ave, mut dx, mut dy, mut dz);
    let mut it = 0;
    loop {
        let sx = xt.sqrt();
        let sy = yt.sqrt();
        let sz = zt.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = (xt + yt + zt) / 3.0;
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if dx.abs().max(dy.abs()).max(dz.abs()) < ERRTOL {
            break;
        }
        it += 1;
        assert!(it < CARLSON_MAX_ITER, "rf did not converge");
    }
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / ave.sqrt()
}

/// Carlson RC(x, y) for x >= 0, y > 0 (circular case only).
fn carlson_rc(x: f64, y: f64) -> f64 {
    const ERRTOL: f64 = 0.0012;
    debug_assert!(x >= 0.0 && y > 0.0);
    let (mut xt, mut yt) = (x, y);
    let (mut ave, mut s);
    let mut it = 0;
    loop {
        let lam = 2.0 * xt.sqrt() * yt.sqrt() + yt;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        ave = (xt + 2.0 * yt) / 3.0;
        s = (yt - ave) / ave;
        if s.abs() < ERRTOL {
            break;
        }
        it += 1;
        assert!(it < CARLSON_MAX_ITER, "rc did not converge");
    }
    (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / ave.sqrt()
}

/// Carlson RD(x, y, z); x, y non-negative with at most one zero, z > 0.
fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    const ERRTOL: f64 = 0.0015;
    const C1: f64 = 3.0 / 14.0;
    const C2: f64 = 1.0 / 6.0;
    const C3: f64 = 9.0 / 22.0;
    const C4: f64 = 3.0 / 26.0;
    debug_assert!(x >= 0.0 && y >= 0.0 && z > 0.0 && x + y > 0.0);
    let (mut xt, mut yt, mut zt) = (x, y, z);
    let mut sum = 0.0;
    let mut fac = 1.0;
    let (mut ave, mut dx, mut dy, mut dz);
    let mut it = 0;
    loop {
        let sx = xt.sqrt();
        let sy = yt.sqrt();
        let sz = zt.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if dx.abs().max(dy.abs()).max(dz.abs()) < ERRTOL {
            break;
        }
        it += 1;
        assert!(it < CARLSON_MAX_ITER, "rd did not converge");
    }
    let ea = dx * dy;
    let eb = dz * dz;
    let ec = ea - eb;
    let ed = ea - 6.0 * eb;
    let ee = ed + ec + ec;
    3.0 * sum
        + fac
            * (1.0 + ed * (-C1 + 0.25 * C3 * ed - 1.5 * C4 * dz * ee)
                + dz * (C2 * ee + dz * (-C3 * ec + dz * C4 * ea)))
            / (ave * ave.sqrt())
}

/// Carlson RJ(x, y, z, p) for p > 0 (circular case only).
fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> f64 {
    const ERRTOL: f64 = 0.0015;
    const C1: f64 = 3.0 / 14.0;
    const C2: f64 = 1.0 / 3.0;
    const C3: f64 = 3.0 / 22.0;
    const C4: f64 = 3.0 / 26.0;
    debug_assert!(x >= 0.0 && y >= 0.0 && z >= 0.0 && p > 0.0);
    debug_assert!(x + y > 0.0 && x + z > 0.0 && y + z > 0.0);
    let (mut xt, mut yt, mut zt, mut pt) = (x, y, z, p);
    let mut sum = 0.0;
    let mut fac = 1.0;
    let (mut ave, mut dx, mut dy, mut dz, mut dp);
    let mut it = 0;
    loop {
        let sx = xt.sqrt();
        let sy = yt.sqrt();
        let sz = zt.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        let alpha = (pt * (sx + sy + sz) + sx * sy * sz).powi(2);
        let beta = pt * (pt + lam) * (pt + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        ave = 0.2 * (xt + yt + zt + 2.0 * pt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        dp = (ave - pt) / ave;
        if dx.abs().max(dy.abs()).max(dz.abs()).max(dp.abs()) < ERRTOL {
            break;
        }
        it += 1;
        assert!(it < CARLSON_MAX_ITER, "rj did not converge");
    }
    let ea = dx * (dy + dz) + dy * dz;
    let eb = dx * dy * dz;
    let ec = dp * dp;
    let ed = ea - 3.0 * ec;
    let ee = eb + 2.0 * dp * (ea - ec);
    3.0 * sum
        + fac
            * (1.0 + ed * (-C1 + 0.75 * C3 * ed - 1.5 * C4 * ee)
                + eb * (0.5 * C2 + dp * (-C3 - C3 + dp * C4))
                + dp * ea * (C2 - dp * C3)
                - C2 * dp * ec)
            / (ave * ave.sqrt())
}
