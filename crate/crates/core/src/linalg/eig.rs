//! Spectral decompositions: Jacobi iteration for Hermitian matrices and a
//! shifted-QR eigenvalue solver for general complex matrices.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::mat::Mat;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Relative tolerance for accepting a matrix as Hermitian.
pub fn hermitian_tol<T: Scalar>(m: &Mat<T>) -> T {
    T::of(1e-10) * T::one().max(m.max_abs())
}

/// A validated Hermitian matrix.
#[derive(Clone)]
pub struct Hermitian<T: Scalar>(Mat<T>);

impl<T: Scalar> std::fmt::Debug for Hermitian<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hermitian({:?})", self.0)
    }
}

impl<T: Scalar> Hermitian<T> {
    /// Validate and wrap. Fails if `max |a_ij - conj(a_ji)|` exceeds
    /// `1e-10 * max(1, max |a_ij|)`.
    pub fn new(m: Mat<T>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimMismatch(m.rows(), m.cols()));
        }
        let defect = m.hermitian_defect();
        if defect > hermitian_tol(&m) {
            return Err(Error::NonHermitian(defect.to_f64().unwrap_or(f64::NAN)));
        }
        // Symmetrize exactly so downstream code can rely on a_ij = conj(a_ji).
        Ok(Hermitian(m.hermitize()))
    }

    /// Wrap `(M + M^dag)/2` without a defect check.
    pub fn symmetrized(m: &Mat<T>) -> Self {
        Hermitian(m.hermitize())
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn mat(&self) -> &Mat<T> {
        &self.0
    }

    pub fn into_mat(self) -> Mat<T> {
        self.0
    }

    /// Eigendecomposition with eigenvalues in descending order.
    pub fn eig(&self) -> SpectralDecomp<T> {
        eig_hermitian_mat(&self.0)
    }

    /// Apply a real function to the spectrum, keeping the eigenvectors.
    pub fn apply(&self, f: impl Fn(T) -> T) -> Result<Hermitian<T>> {
        let dec = self.eig();
        let mut vals = Vec::with_capacity(dec.eigenvalues.len());
        for &lam in &dec.eigenvalues {
            let y = f(lam);
            if !y.is_finite() {
                return Err(Error::Domain(lam.to_f64().unwrap_or(f64::NAN)));
            }
            vals.push(y);
        }
        Ok(Hermitian(dec.recompose_with(&vals)))
    }
}

/// A validated density matrix (Hermitian, PSD up to -1e-10, unit trace).
#[derive(Clone)]
pub struct Density<T: Scalar>(Hermitian<T>);

impl<T: Scalar> std::fmt::Debug for Density<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Density({:?})", self.0)
    }
}

impl<T: Scalar> Density<T> {
    pub fn new(m: Mat<T>) -> Result<Self> {
        let herm = Hermitian::new(m)?;
        let tr = herm.mat().trace();
        if (tr.re - T::one()).abs() > T::of(1e-10) || tr.im.abs() > T::of(1e-10) {
            return Err(Error::InvalidDensity(format!(
                "trace is {:.12e} + {:.3e}i, expected 1",
                tr.re.to_f64().unwrap_or(f64::NAN),
                tr.im.to_f64().unwrap_or(f64::NAN)
            )));
        }
        let min = herm.eig().eigenvalues.last().copied().unwrap_or_else(T::zero);
        if min < -T::of(1e-10) {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {:.3e}",
                min.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(Density(herm))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn mat(&self) -> &Mat<T> {
        self.0.mat()
    }

    pub fn hermitian(&self) -> &Hermitian<T> {
        &self.0
    }

    /// Eigenvalues descending, clamped into `[0, 1]`.
    pub fn probabilities(&self) -> Vec<T> {
        self.0
            .eig()
            .eigenvalues
            .iter()
            .map(|&l| l.max(T::zero()).min(T::one()))
            .collect()
    }

    pub fn min_eigenvalue(&self) -> T {
        self.0.eig().eigenvalues.last().copied().unwrap_or_else(T::zero)
    }

    /// The maximally mixed state `1/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        let m = Mat::identity(d).scale_re(T::one() / T::of(d as f64));
        Density(Hermitian(m))
    }
}

/// Result of a Hermitian eigendecomposition: `A = V diag(lambda) V^dag` with
/// eigenvalues descending and orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct SpectralDecomp<T: Scalar> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: Mat<T>,
}

impl<T: Scalar> SpectralDecomp<T> {
    /// Rebuild `V diag(vals) V^dag` with substituted eigenvalues.
    pub fn recompose_with(&self, vals: &[T]) -> Mat<T> {
        let v = &self.eigenvectors;
        let n = v.rows();
        let mut out = Mat::zeros(n, n);
        for (k, &lam) in vals.iter().enumerate() {
            if lam.is_zero() {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)];
                if vik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj() * Complex::new(lam, T::zero());
                }
            }
        }
        out
    }

    pub fn recompose(&self) -> Mat<T> {
        self.recompose_with(&self.eigenvalues)
    }

    /// k-th eigenvector as a column matrix view (copied).
    pub fn eigenvector(&self, k: usize) -> Vec<Complex<T>> {
        let v = &self.eigenvectors;
        (0..v.rows()).map(|i| v[(i, k)]).collect()
    }
}

/// Eigendecomposition of a validated Hermitian matrix, eigenvalues descending.
pub fn eig_hermitian<T: Scalar>(a: &Hermitian<T>) -> SpectralDecomp<T> {
    a.eig()
}

fn eig_hermitian_mat<T: Scalar>(a: &Mat<T>) -> SpectralDecomp<T> {
    let n = a.rows();
    let mut w = a.clone();
    let mut v = Mat::identity(n);
    if n > 1 {
        jacobi(&mut w, &mut v);
    }
    let mut pairs: Vec<(T, usize)> = (0..n).map(|i| (w[(i, i)].re, i)).collect();
    // Descending by eigenvalue.
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let eigenvalues: Vec<T> = pairs.iter().map(|p| p.0).collect();
    let eigenvectors = Mat::from_fn(n, n, |i, k| v[(i, pairs[k].1)]);
    SpectralDecomp { eigenvalues, eigenvectors }
}

/// Cyclic complex Jacobi iteration. On exit `w` is (numerically) diagonal and
/// `v` holds the accumulated unitary, `A = V W V^dag`.
fn jacobi<T: Scalar>(w: &mut Mat<T>, v: &mut Mat<T>) {
    let n = w.rows();
    let fro = w.fro_norm();
    if fro.is_zero() {
        return;
    }
    let tol = T::epsilon() * fro * T::of(n as f64);
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut off = T::zero();
        for p in 0..n {
            for q in (p + 1)..n {
                off += w[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(w, v, p, q);
            }
        }
    }
    // Enforce exact Hermitian symmetry of the residual diagonal.
    for i in 0..n {
        let d = w[(i, i)].re;
        w[(i, i)] = Complex::new(d, T::zero());
    }
}

/// One complex Jacobi rotation zeroing `w[(p, q)]`.
fn rotate<T: Scalar>(w: &mut Mat<T>, v: &mut Mat<T>, p: usize, q: usize) {
    let beta = w[(p, q)];
    let r = beta.norm();
    if r <= T::epsilon() * (w[(p, p)].norm() + w[(q, q)].norm() + T::epsilon()) {
        return;
    }
    let n = w.rows();
    let alpha = w[(p, p)].re;
    let gamma = w[(q, q)].re;
    let phase = beta / Complex::new(r, T::zero()); // e^{i phi}
    let tau = (gamma - alpha) / (T::of(2.0) * r);
    let t = if tau.is_zero() {
        T::one()
    } else {
        let sign = if tau > T::zero() { T::one() } else { -T::one() };
        sign / (tau.abs() + (T::one() + tau * tau).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;
    let cc = Complex::new(c, T::zero());
    let sc = Complex::new(s, T::zero());

    // G is identity except G[p][p] = c, G[p][q] = s,
    // G[q][p] = -s * conj(phase), G[q][q] = c * conj(phase).
    let gpp = cc;
    let gpq = sc;
    let gqp = -sc * phase.conj();
    let gqq = cc * phase.conj();

    // W <- G^dag W (rows p, q).
    for j in 0..n {
        let wp = w[(p, j)];
        let wq = w[(q, j)];
        w[(p, j)] = gpp.conj() * wp + gqp.conj() * wq;
        w[(q, j)] = gpq.conj() * wp + gqq.conj() * wq;
    }
    // W <- W G (columns p, q).
    for i in 0..n {
        let wp = w[(i, p)];
        let wq = w[(i, q)];
        w[(i, p)] = wp * gpp + wq * gqp;
        w[(i, q)] = wp * gpq + wq * gqq;
    }
    // V <- V G.
    for i in 0..n {
        let vp = v[(i, p)];
        let vq = v[(i, q)];
        v[(i, p)] = vp * gpp + vq * gqp;
        v[(i, q)] = vp * gpq + vq * gqq;
    }
    // The rotation annihilates the pivot by construction; zero it exactly.
    w[(p, q)] = Complex::zero();
    w[(q, p)] = Complex::zero();
}

/// All eigenvalues of a general complex square matrix, by Householder
/// Hessenberg reduction followed by Wilkinson-shifted QR. Values only.
pub fn eigenvalues<T: Scalar>(a: &Mat<T>) -> Vec<Complex<T>> {
    assert!(a.is_square());
    let n = a.rows();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![a[(0, 0)]];
    }
    let mut h = hessenberg(a);
    let mut eigs = vec![Complex::zero(); n];
    let eps = T::epsilon();
    let mut hi = n - 1;
    let mut since_deflation = 0usize;
    let mut iter_budget = 400 * n;
    loop {
        // Deflate tiny subdiagonals.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let scale = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= eps * (scale + eps) {
                h[(lo, lo - 1)] = Complex::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigs[hi] = h[(hi, hi)];
            since_deflation = 0;
            if hi == 0 {
                break;
            }
            hi -= 1;
            continue;
        }
        assert!(iter_budget > 0, "QR eigenvalue iteration failed to converge");
        iter_budget -= 1;
        since_deflation += 1;
        // An occasional exceptional shift breaks the symmetric cycling that
        // plain Wilkinson shifts can fall into on clustered spectra.
        let mu = if since_deflation.is_multiple_of(16) {
            h[(hi, hi)] + h[(hi, hi - 1)].scale(T::of(0.75))
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, mu);
    }
    eigs
}

/// Householder reduction to upper Hessenberg form.
fn hessenberg<T: Scalar>(a: &Mat<T>) -> Mat<T> {
    let n = a.rows();
    let mut h = a.clone();
    for k in 0..n.saturating_sub(2) {
        // Build the Householder vector for column k, rows k+1..n.
        let mut x: Vec<Complex<T>> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let xnorm = x.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        if xnorm <= T::epsilon() {
            continue;
        }
        let alpha = if x[0].norm() > T::zero() {
            -(x[0] / Complex::new(x[0].norm(), T::zero())) * Complex::new(xnorm, T::zero())
        } else {
            Complex::new(-xnorm, T::zero())
        };
        x[0] -= alpha;
        let vnorm = x.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        if vnorm <= T::epsilon() * xnorm {
            continue;
        }
        for z in x.iter_mut() {
            *z /= Complex::new(vnorm, T::zero());
        }
        // H <- P H with P = I - 2 v v^dag acting on rows k+1..n.
        for j in 0..n {
            let mut dot = Complex::zero();
            for (i, vi) in x.iter().enumerate() {
                dot += vi.conj() * h[(k + 1 + i, j)];
            }
            let two = Complex::new(T::of(2.0), T::zero());
            for (i, vi) in x.iter().enumerate() {
                let val = h[(k + 1 + i, j)] - two * *vi * dot;
                h[(k + 1 + i, j)] = val;
            }
        }
        // H <- H P (columns k+1..n).
        for i in 0..n {
            let mut dot = Complex::zero();
            for (j, vj) in x.iter().enumerate() {
                dot += h[(i, k + 1 + j)] * *vj;
            }
            let two = Complex::new(T::of(2.0), T::zero());
            for (j, vj) in x.iter().enumerate() {
                let val = h[(i, k + 1 + j)] - two * dot * vj.conj();
                h[(i, k + 1 + j)] = val;
            }
        }
        // Zero the annihilated part explicitly.
        for i in k + 2..n {
            h[(i, k)] = Complex::zero();
        }
    }
    h
}

fn wilkinson_shift<T: Scalar>(h: &Mat<T>, hi: usize) -> Complex<T> {
    let a = h[(hi - 1, hi - 1)];
    let b = h[(hi - 1, hi)];
    let c = h[(hi, hi - 1)];
    let d = h[(hi, hi)];
    // Eigenvalue of [[a, b], [c, d]] closest to d, with the smaller root
    // recovered through Vieta to dodge the cancellation in tr -+ disc.
    let half = Complex::new(T::of(0.5), T::zero());
    let tr = (a + d) * half;
    let det = a * d - b * c;
    let disc = (tr * tr - det).sqrt();
    let big = if (tr + disc).norm() >= (tr - disc).norm() {
        tr + disc
    } else {
        tr - disc
    };
    if big.norm() <= T::epsilon() {
        return d;
    }
    let small = det / big;
    if (big - d).norm() < (small - d).norm() {
        big
    } else {
        small
    }
}

/// One explicit shifted QR step `H - mu I = Q R; H <- R Q + mu I`,
/// restricted to the active block `lo..=hi` via Givens rotations.
fn qr_step<T: Scalar>(h: &mut Mat<T>, lo: usize, hi: usize, mu: Complex<T>) {
    let n = h.rows();
    for i in lo..=hi {
        let val = h[(i, i)] - mu;
        h[(i, i)] = val;
    }
    // Sequence of Givens rotations (c_i, s_i) zeroing subdiagonal entries.
    let mut rots: Vec<(Complex<T>, Complex<T>)> = Vec::with_capacity(hi - lo);
    for i in lo..hi {
        let a = h[(i, i)];
        let b = h[(i + 1, i)];
        let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if r.is_zero() {
            rots.push((Complex::one(), Complex::zero()));
            continue;
        }
        let c = a / Complex::new(r, T::zero());
        let s = b / Complex::new(r, T::zero());
        // Apply G^dag = [[c*, s*], [-s, c]] to rows i, i+1.
        for j in i..n {
            let x = h[(i, j)];
            let y = h[(i + 1, j)];
            h[(i, j)] = c.conj() * x + s.conj() * y;
            h[(i + 1, j)] = -s * x + c * y;
        }
        rots.push((c, s));
    }
    // H <- R Q: apply each G = [[c, -s*], [s, c*]] on columns i, i+1.
    for (idx, (c, s)) in rots.iter().enumerate() {
        let i = lo + idx;
        for row in 0..=(i + 1).min(hi) {
            let x = h[(row, i)];
            let y = h[(row, i + 1)];
            h[(row, i)] = x * *c + y * *s;
            h[(row, i + 1)] = -x * s.conj() + y * c.conj();
        }
    }
    for i in lo..=hi {
        let val = h[(i, i)] + mu;
        h[(i, i)] = val;
    }
}
