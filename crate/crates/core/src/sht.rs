//! Real spherical harmonics, quadrature grids, and the forward/backward
//! transforms between harmonic coefficients and gridded fields.
//!
//! **Normalization.**  Everything in this crate integrates against the
//! *probability* measure on the unit sphere, `dmu = sin(theta) dtheta
//! dphi / (4 pi)`, so `\int_{S^2} dmu = 1` and the constant harmonic is
//! `y_{0,0} = 1` (not `1/sqrt(4 pi)`).  The real basis is orthonormal in
//! `L^2(S^2, mu)`:
//!
//! ```text
//!   y_{l,0}      = sqrt(2l+1)          P_l(cos theta)
//!   y_{l,  m>0}  = (-1)^m sqrt(2) N_{l,m}(cos theta) cos(m phi)
//!   y_{l, -m<0}  = (-1)^m sqrt(2) N_{l,m}(cos theta) sin(m phi)
//! ```
//!
//! with `N_{l,m} = sqrt((2l+1) (l-m)!/(l+m)!) P_{l,m}` the fully
//! normalized associated Legendre function *without* the Condon–Shortley
//! phase (the phase is applied in `y_real` itself).  To convert a
//! coefficient vector to the geodesy/surface-measure convention multiply
//! field values by 1 (they are pointwise identical) and coefficients by
//! `sqrt(4 pi)` — only the measure differs.
//!
//! **Grids.**  [`make_grid`] pairs `L+1` Gauss–Legendre colatitudes with
//! `2L+2` uniform longitudes.  Products of two harmonics up to degree `L`
//! are then integrated exactly: the Legendre part has polynomial degree
//! at most `2L <= 2(L+1) - 1` and the trigonometric part has order at
//! most `2L < 2L+2`.  Consequently [`analyze`] after [`synthesize`] is an
//! exact inverse (to rounding) for band-limited fields.
//!
//! The normalized Legendre recurrences are carried in scaled arithmetic
//! (a mantissa and a radix-2 exponent in units of `2^1000`) so that the
//! diagonal start `~ sin(theta)^m`, which underflows `f64` near the poles
//! long before `m = 4000`, loses nothing: values re-enter the
//! representable range as the degree climbs.

use rayon::prelude::*;
use std::f64::consts::PI;
use std::io::Write;

use crate::error::{Error, Result};

/// Legendre polynomial `P_l(x)` by the three-term recurrence.
pub fn legendre(ell: u32, x: f64) -> f64 {
    match ell {
        0 => 1.0,
        1 => x,
        _ => {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=ell {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            p1
        }
    }
}

// Scaled Legendre arithmetic: values are `mantissa * 2^(1000 e)`.
const SCALE_DOWN: f64 = 9.332636185032189e-302; // 2^-1000
const SCALE_UP: f64 = 1.0715086071862673e301; // 2^1000
const RENORM_LIMIT: f64 = 1.0231154535833315e150; // 2^500

#[derive(Clone, Copy)]
struct Scaled {
    f: f64,
    e: i32,
}

impl Scaled {
    fn renorm(&mut self) {
        if self.f.abs() >= RENORM_LIMIT {
            self.f *= SCALE_DOWN;
            self.e += 1;
        } else if self.f != 0.0 && self.f.abs() < 1.0 / RENORM_LIMIT {
            self.f *= SCALE_UP;
            self.e -= 1;
        }
    }

    fn value(&self) -> f64 {
        match self.e {
            0 => self.f,
            e if e > 0 => f64::INFINITY * self.f.signum(),
            _ => {
                let mut v = self.f;
                for _ in 0..(-self.e) {
                    v *= SCALE_DOWN;
                    if v == 0.0 {
                        break;
                    }
                }
                v
            }
        }
    }
}

/// Walk the normalized Legendre functions at fixed order `m` upward in
/// degree, invoking `emit(l, N_{l,m}(x))` for `l = m ..= l_max`.
///
/// `x = cos(theta)`, `s = sin(theta) >= 0`.  `start` must hold the scaled
/// diagonal value `N_{m,m}(x)`.
fn climb_degrees(
    l_max: u32,
    m: u32,
    x: f64,
    start: Scaled,
    mut emit: impl FnMut(u32, f64),
) {
    let mut prev = start; // N_{l-1, m}
    emit(m, prev.value());
    if l_max == m {
        return;
    }
    // First off-diagonal step: N_{m+1,m} = sqrt(2m+3) x N_{m,m}.
    let mf = m as f64;
    let mut cur = Scaled {
        f: (2.0 * mf + 3.0).sqrt() * x * prev.f,
        e: prev.e,
    };
    cur.renorm();
    if cur.e != prev.e {
        // Keep the pair on a common exponent for the three-term step.
        prev.f *= SCALE_DOWN;
        prev.e += 1;
    }
    emit(m + 1, cur.value());
    for l in (m + 2)..=l_max {
        let lf = l as f64;
        let a = ((2.0 * lf - 1.0) * (2.0 * lf + 1.0) / ((lf - mf) * (lf + mf))).sqrt();
        let b = ((2.0 * lf + 1.0) * (lf - 1.0 - mf) * (lf - 1.0 + mf)
            / ((2.0 * lf - 3.0) * (lf - mf) * (lf + mf)))
            .sqrt();
        let mut next = Scaled {
            f: a * x * cur.f - b * prev.f,
            e: cur.e,
        };
        next.renorm();
        prev = cur;
        if next.e != prev.e {
            prev.f *= SCALE_DOWN;
            prev.e += 1;
        }
        cur = next;
        emit(l, cur.value());
    }
}

/// Scaled diagonal value `N_{m,m}(x)` with `s = sin(theta)`.
fn diagonal(m: u32, s: f64) -> Scaled {
    let mut d = Scaled { f: 1.0, e: 0 };
    for j in 0..m {
        let jf = j as f64;
        d.f *= s * ((2.0 * jf + 3.0) / (2.0 * jf + 2.0)).sqrt();
        d.renorm();
    }
    d
}

/// Fully normalized associated Legendre function
/// `N_{l,m}(x) = sqrt((2l+1) (l-m)!/(l+m)!) P_{l,m}(x)` without the
/// Condon–Shortley phase, stable for degrees to 4000 at any `|x| <= 1`.
///
/// Returns 0 for `m > l`.  `N_{l,0}(x) = sqrt(2l+1) P_l(x)`.
pub fn assoc_legendre_norm(ell: u32, m: u32, x: f64) -> f64 {
    if m > ell {
        return 0.0;
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let start = diagonal(m, s);
    let mut out = 0.0;
    climb_degrees(ell, m, x, start, |l, v| {
        if l == ell {
            out = v;
        }
    });
    out
}

/// Real orthonormal spherical harmonic `y_{l,m}(theta, phi)` under the
/// probability measure (`y_{0,0} = 1`).  Orders with `|m| > l` give 0.
pub fn y_real(ell: u32, m: i32, theta: f64, phi: f64) -> f64 {
    let mm = m.unsigned_abs();
    if mm > ell {
        return 0.0;
    }
    let n = assoc_legendre_norm(ell, mm, theta.cos());
    if m == 0 {
        return n;
    }
    let cs = if mm % 2 == 1 { -1.0 } else { 1.0 };
    let angle = mm as f64 * phi;
    if m > 0 {
        cs * 2.0_f64.sqrt() * n * angle.cos()
    } else {
        cs * 2.0_f64.sqrt() * n * angle.sin()
    }
}

/// Quadrature grid: Gauss–Legendre colatitudes crossed with uniform
/// longitudes.  `weights[i]` is the probability-measure weight of *each*
/// node on latitude ring `i`, so `sum_i n_phi * weights[i] = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    n_theta: usize,
    n_phi: usize,
    thetas: Vec<f64>,
    phis: Vec<f64>,
    weights: Vec<f64>,
}

impl SphereGrid {
    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    /// Colatitudes in `(0, pi)`, increasing from the north pole.
    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    /// Longitudes `2 pi j / n_phi`, increasing in `[0, 2 pi)`.
    pub fn phis(&self) -> &[f64] {
        &self.phis
    }

    /// Per-node probability weights by latitude ring.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n {
        // Tricomi-style initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut pd = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pd = nf * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pd;
            x -= dx;
            if dx.abs() < 1e-15 {
                // One polishing step after convergence.
                let mut q0 = 1.0;
                let mut q1 = x;
                for k in 2..=n {
                    let k = k as f64;
                    let q2 = ((2.0 * k - 1.0) * x * q1 - (k - 1.0) * q0) / k;
                    q0 = q1;
                    q1 = q2;
                }
                pd = nf * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / pd;
                break;
            }
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pd * pd);
    }
    (nodes, weights)
}

/// Quadrature grid that integrates products of degree-`l_max` harmonics
/// exactly: `l_max + 1` Gauss–Legendre rings and `2 l_max + 2` longitudes.
pub fn make_grid(l_max: u32) -> SphereGrid {
    let n_theta = l_max as usize + 1;
    let n_phi = 2 * l_max as usize + 2;
    let (nodes, glw) = gauss_legendre(n_theta);
    // Nodes come out descending in x, i.e. ascending in theta.
    let thetas: Vec<f64> = nodes.iter().map(|&x| x.acos()).collect();
    let weights: Vec<f64> = glw.iter().map(|&w| w / 2.0 / n_phi as f64).collect();
    let phis: Vec<f64> = (0..n_phi).map(|j| 2.0 * PI * j as f64 / n_phi as f64).collect();
    SphereGrid {
        n_theta,
        n_phi,
        thetas,
        phis,
        weights,
    }
}

/// Real harmonic coefficients through degree `l_max`, packed
/// degree-major with orders ascending: index of `(l, m)` is
/// `l^2 + l + m`, total length `(l_max + 1)^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicCoeffs {
    l_max: u32,
    data: Vec<f64>,
}

impl HarmonicCoeffs {
    /// All-zero coefficients through `l_max`.
    pub fn zeros(l_max: u32) -> Self {
        HarmonicCoeffs {
            l_max,
            data: vec![0.0; ((l_max + 1) * (l_max + 1)) as usize],
        }
    }

    /// Wrap a packed vector; its length must be `(l_max + 1)^2`.
    pub fn from_vec(l_max: u32, data: Vec<f64>) -> Result<Self> {
        let want = ((l_max + 1) * (l_max + 1)) as usize;
        if data.len() != want {
            return Err(Error::invalid(format!(
                "coefficient vector has length {}, degree {l_max} needs {want}",
                data.len()
            )));
        }
        Ok(HarmonicCoeffs { l_max, data })
    }

    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    /// Packed index of `(l, m)`.  Panics if `|m| > l` or `l > l_max`.
    pub fn index(&self, ell: u32, m: i32) -> usize {
        assert!(
            ell <= self.l_max && m.unsigned_abs() <= ell,
            "harmonic index (l = {ell}, m = {m}) out of range for degree {}",
            self.l_max
        );
        (ell * ell) as usize + (ell as i64 + m as i64) as usize
    }

    pub fn get(&self, ell: u32, m: i32) -> f64 {
        self.data[self.index(ell, m)]
    }

    pub fn set(&mut self, ell: u32, m: i32, value: f64) {
        let i = self.index(ell, m);
        self.data[i] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Sum of squared coefficients (the field variance of a sample under
    /// the probability measure, by Parseval).
    pub fn energy(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }
}

/// A field sampled on a quadrature grid, row-major with latitude varying
/// slowest: `values[i * n_phi + j]` sits at `(thetas[i], phis[j])`.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldMap {
    grid: SphereGrid,
    values: Vec<f64>,
}

impl FieldMap {
    /// Wrap values on a grid; the length must be `n_theta * n_phi`.
    pub fn new(grid: SphereGrid, values: Vec<f64>) -> Result<Self> {
        let want = grid.n_theta * grid.n_phi;
        if values.len() != want {
            return Err(Error::invalid(format!(
                "field has {} values, grid needs {want}",
                values.len()
            )));
        }
        Ok(FieldMap { grid, values })
    }

    pub fn grid(&self) -> &SphereGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn at(&self, i_theta: usize, i_phi: usize) -> f64 {
        self.values[i_theta * self.grid.n_phi + i_phi]
    }

    /// Quadrature mean `sum w f` (exact integral for band-limited fields).
    pub fn mean(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.grid.n_theta {
            let w = self.grid.weights[i];
            let row = &self.values[i * self.grid.n_phi..(i + 1) * self.grid.n_phi];
            acc += w * row.iter().sum::<f64>();
        }
        acc
    }
}

/// Per-latitude Fourier profile of the harmonic expansion: the cosine
/// amplitudes `A_m` and sine amplitudes `B_m` such that the field on the
/// ring equals `A_0 + sum_{m>=1} A_m cos(m phi) + B_m sin(m phi)`.
fn latitude_profile(coeffs: &HarmonicCoeffs, x: f64, s: f64) -> (Vec<f64>, Vec<f64>) {
    let l_max = coeffs.l_max;
    let n = l_max as usize + 1;
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    let sqrt2 = 2.0_f64.sqrt();
    let mut diag = Scaled { f: 1.0, e: 0 };
    for m in 0..=l_max {
        let cs = if m % 2 == 1 { -1.0 } else { 1.0 };
        let scale = if m == 0 { 1.0 } else { cs * sqrt2 };
        let (mut am, mut bm) = (0.0, 0.0);
        climb_degrees(l_max, m, x, diag, |l, nv| {
            am += coeffs.get(l, m as i32) * nv;
            if m > 0 {
                bm += coeffs.get(l, -(m as i32)) * nv;
            }
        });
        a[m as usize] = scale * am;
        b[m as usize] = scale * bm;
        // Extend the diagonal one order for the next loop iteration.
        let mf = m as f64;
        diag.f *= s * ((2.0 * mf + 3.0) / (2.0 * mf + 2.0)).sqrt();
        diag.renorm();
    }
    (a, b)
}

/// Evaluate the expansion on every grid node.
///
/// # Errors
///
/// [`Error::InvalidArgument`] when the grid cannot resolve the expansion
/// (fewer rings than `l_max + 1` or fewer longitudes than `2 l_max + 2`).
pub fn synthesize(coeffs: &HarmonicCoeffs, grid: &SphereGrid) -> Result<FieldMap> {
    let l_max = coeffs.l_max;
    if grid.n_theta < l_max as usize + 1 || grid.n_phi < 2 * l_max as usize + 2 {
        return Err(Error::invalid(format!(
            "grid {}x{} cannot resolve degree {l_max} (needs at least {}x{})",
            grid.n_theta,
            grid.n_phi,
            l_max + 1,
            2 * l_max + 2
        )));
    }
    let rows: Vec<Vec<f64>> = (0..grid.n_theta)
        .into_par_iter()
        .map(|i| {
            let theta = grid.thetas[i];
            let (a, b) = latitude_profile(coeffs, theta.cos(), theta.sin());
            let mut row = vec![0.0; grid.n_phi];
            for (j, r) in row.iter_mut().enumerate() {
                let phi = grid.phis[j];
                // Rotate (cos, sin) through the orders instead of calling
                // cos/sin L times per node.
                let (cstep, sstep) = (phi.cos(), phi.sin());
                let (mut c, mut s) = (1.0, 0.0);
                let mut acc = a[0];
                for m in 1..a.len() {
                    let c_next = c * cstep - s * sstep;
                    let s_next = s * cstep + c * sstep;
                    c = c_next;
                    s = s_next;
                    acc += a[m] * c + b[m] * s;
                }
                *r = acc;
            }
            row
        })
        .collect();
    let mut values = Vec::with_capacity(grid.n_theta * grid.n_phi);
    for row in rows {
        values.extend_from_slice(&row);
    }
    FieldMap::new(grid.clone(), values)
}

/// Project a gridded field onto the harmonics through degree `l_max`
/// using the grid's quadrature.  Exact (to rounding) when the field is
/// band-limited to `l_max` and the grid resolves that degree.
///
/// # Errors
///
/// [`Error::InvalidArgument`] when the grid is too coarse for `l_max`.
pub fn analyze(map: &FieldMap, l_max: u32) -> Result<HarmonicCoeffs> {
    let grid = &map.grid;
    if grid.n_theta < l_max as usize + 1 || grid.n_phi < 2 * l_max as usize + 2 {
        return Err(Error::invalid(format!(
            "grid {}x{} cannot analyze degree {l_max} (needs at least {}x{})",
            grid.n_theta,
            grid.n_phi,
            l_max + 1,
            2 * l_max + 2
        )));
    }
    let n_orders = l_max as usize + 1;
    let per_latitude: Vec<Vec<f64>> = (0..grid.n_theta)
        .into_par_iter()
        .map(|i| {
            let theta = grid.thetas[i];
            let (x, s) = (theta.cos(), theta.sin());
            let w = grid.weights[i];
            let row = &map.values[i * grid.n_phi..(i + 1) * grid.n_phi];
            // Ring Fourier sums C_m = sum_j f_j cos(m phi_j), S_m likewise.
            let mut cm = vec![0.0; n_orders];
            let mut sm = vec![0.0; n_orders];
            for (j, &f) in row.iter().enumerate() {
                let phi = grid.phis[j];
                let (cstep, sstep) = (phi.cos(), phi.sin());
                let (mut c, mut sng) = (1.0, 0.0);
                cm[0] += f;
                for m in 1..n_orders {
                    let c_next = c * cstep - sng * sstep;
                    let s_next = sng * cstep + c * sstep;
                    c = c_next;
                    sng = s_next;
                    cm[m] += f * c;
                    sm[m] += f * sng;
                }
            }
            // Weighted Legendre projections for every (l, m).
            let mut partial = vec![0.0; (l_max as usize + 1) * (l_max as usize + 1)];
            let sqrt2 = 2.0_f64.sqrt();
            let mut diag = Scaled { f: 1.0, e: 0 };
            for m in 0..=l_max {
                let cs = if m % 2 == 1 { -1.0 } else { 1.0 };
                let scale = if m == 0 { 1.0 } else { cs * sqrt2 };
                climb_degrees(l_max, m, x, diag, |l, nv| {
                    let base = (l * l + l) as usize;
                    partial[(base as i64 + m as i64) as usize] +=
                        w * scale * nv * cm[m as usize];
                    if m > 0 {
                        partial[(base as i64 - m as i64) as usize] +=
                            w * scale * nv * sm[m as usize];
                    }
                });
                let mf = m as f64;
                diag.f *= s * ((2.0 * mf + 3.0) / (2.0 * mf + 2.0)).sqrt();
                diag.renorm();
            }
            partial
        })
        .collect();
    // Index-ordered reduction keeps the result independent of thread count.
    let mut data = vec![0.0; (l_max as usize + 1) * (l_max as usize + 1)];
    for partial in per_latitude {
        for (d, p) in data.iter_mut().zip(partial.iter()) {
            *d += p;
        }
    }
    HarmonicCoeffs::from_vec(l_max, data)
}

/// Evaluate the expansion at a single point (direct degree/order sum,
/// `O(l_max^2)` work).
pub fn evaluate_at(coeffs: &HarmonicCoeffs, theta: f64, phi: f64) -> f64 {
    let (a, b) = latitude_profile(coeffs, theta.cos(), theta.sin());
    let (cstep, sstep) = (phi.cos(), phi.sin());
    let (mut c, mut s) = (1.0, 0.0);
    let mut acc = a[0];
    for m in 1..a.len() {
        let c_next = c * cstep - s * sstep;
        let s_next = s * cstep + c * sstep;
        c = c_next;
        s = s_next;
        acc += a[m] * c + b[m] * s;
    }
    acc
}

/// Coefficients of the field rotated eastward about the polar axis:
/// the returned expansion evaluates at `(theta, phi)` to the original
/// field at `(theta, phi - dphi)`.
pub fn rotate_longitude(coeffs: &HarmonicCoeffs, dphi: f64) -> HarmonicCoeffs {
    let l_max = coeffs.l_max;
    let mut out = HarmonicCoeffs::zeros(l_max);
    for ell in 0..=l_max {
        out.set(ell, 0, coeffs.get(ell, 0));
        for m in 1..=ell {
            let (sin_md, cos_md) = (m as f64 * dphi).sin_cos();
            let cp = coeffs.get(ell, m as i32);
            let cm = coeffs.get(ell, -(m as i32));
            out.set(ell, m as i32, cp * cos_md - cm * sin_md);
            out.set(ell, -(m as i32), cp * sin_md + cm * cos_md);
        }
    }
    out
}

/// Write a field as CSV rows `theta,phi,value` with 17 significant
/// digits (lossless round-trip for `f64`).
pub fn write_map_csv(map: &FieldMap, out: &mut impl Write) -> Result<()> {
    writeln!(out, "theta,phi,value")?;
    let grid = &map.grid;
    for i in 0..grid.n_theta {
        for j in 0..grid.n_phi {
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e}",
                grid.thetas[i],
                grid.phis[j],
                map.at(i, j)
            )?;
        }
    }
    Ok(())
}

/// Write a field as a binary 8-bit PGM image (longitude across, latitude
/// down from the north pole), linearly rescaled to the full gray range.
/// The original value range is recorded in a comment line
/// `# min <v> max <v>` so the scaling is invertible.
pub fn write_map_pgm(map: &FieldMap, out: &mut impl Write) -> Result<()> {
    let grid = &map.grid;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &map.values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !lo.is_finite() || !hi.is_finite() {
        return Err(Error::invalid(
            "field contains non-finite values; refusing to render",
        ));
    }
    writeln!(out, "P5")?;
    writeln!(out, "# min {lo:.16e} max {hi:.16e}")?;
    writeln!(out, "{} {}", grid.n_phi, grid.n_theta)?;
    writeln!(out, "255")?;
    let span = hi - lo;
    let mut bytes = Vec::with_capacity(map.values.len());
    for &v in &map.values {
        let g = if span == 0.0 {
            128.0
        } else {
            ((v - lo) / span * 255.0).round()
        };
        bytes.push(g.clamp(0.0, 255.0) as u8);
    }
    out.write_all(&bytes)?;
    Ok(())
}
