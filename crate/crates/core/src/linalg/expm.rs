//! Matrix exponential, LU solve and Householder QR.
//!
//! Hermitian inputs go through the spectral decomposition; everything else
//! uses scaling-and-squaring with the [13/13] Pade approximant.

use num_complex::Complex;
use num_traits::Zero;

use super::eig::{hermitian_tol, Hermitian};
use super::mat::Mat;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Norm cap above which `expm` refuses to run.
pub const EXPM_NORM_CAP: f64 = 1e4;

/// Matrix exponential `e^A`.
pub fn expm<T: Scalar>(a: &Mat<T>) -> Result<Mat<T>> {
    assert!(a.is_square());
    let norm = a.one_norm();
    if norm > T::of(EXPM_NORM_CAP) {
        return Err(Error::Overflow(
            norm.to_f64().unwrap_or(f64::INFINITY),
            EXPM_NORM_CAP,
        ));
    }
    if a.hermitian_defect() <= hermitian_tol(a) {
        let h = Hermitian::symmetrized(a);
        return Ok(h.apply(|x| x.exp())?.into_mat());
    }
    Ok(expm_pade(a, norm))
}

fn expm_pade<T: Scalar>(a: &Mat<T>, one_norm: T) -> Mat<T> {
    let n = a.rows();
    let theta13 = T::of(5.371920351148152);
    let mut squarings = 0usize;
    let mut scaled = a.clone();
    if one_norm > theta13 {
        let ratio = (one_norm / theta13).to_f64().unwrap();
        squarings = ratio.log2().ceil() as usize;
        let factor = T::of(0.5).powi(squarings as i32);
        scaled = scaled.scale_re(factor);
    }

    let b: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let bc = |i: usize| Complex::new(T::of(b[i]), T::zero());

    let id = Mat::identity(n);
    let a2 = &scaled * &scaled;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;

    let u_inner = &(&a6.scale(bc(13)) + &a4.scale(bc(11))) + &a2.scale(bc(9));
    let u_poly = &(&a6 * &u_inner)
        + &(&(&a6.scale(bc(7)) + &a4.scale(bc(5))) + &(&a2.scale(bc(3)) + &id.scale(bc(1))));
    let u = &scaled * &u_poly;

    let v_inner = &(&a6.scale(bc(12)) + &a4.scale(bc(10))) + &a2.scale(bc(8));
    let v = &(&a6 * &v_inner)
        + &(&(&a6.scale(bc(6)) + &a4.scale(bc(4))) + &(&a2.scale(bc(2)) + &id.scale(bc(0))));

    // r = (V - U)^{-1} (V + U)
    let lhs = &v - &u;
    let rhs = &v + &u;
    let mut r = solve(&lhs, &rhs).expect("Pade denominator is nonsingular for scaled input");
    for _ in 0..squarings {
        r = &r * &r;
    }
    r
}

/// Solve `A X = B` by LU with partial pivoting.
pub fn solve<T: Scalar>(a: &Mat<T>, b: &Mat<T>) -> Option<Mat<T>> {
    assert!(a.is_square());
    assert_eq!(a.rows(), b.rows());
    let n = a.rows();
    let mut lu = a.clone();
    let mut x = b.clone();
    let mut perm: Vec<usize> = (0..n).collect();

    for k in 0..n {
        // Partial pivot.
        let mut piv = k;
        let mut best = lu[(k, k)].norm();
        for i in k + 1..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if best <= T::epsilon() * T::of(n as f64) {
            return None;
        }
        if piv != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(piv, j)];
                lu[(piv, j)] = tmp;
            }
            for j in 0..x.cols() {
                let tmp = x[(k, j)];
                x[(k, j)] = x[(piv, j)];
                x[(piv, j)] = tmp;
            }
            perm.swap(k, piv);
        }
        let pivot = lu[(k, k)];
        for i in k + 1..n {
            let factor = lu[(i, k)] / pivot;
            lu[(i, k)] = factor;
            if factor.is_zero() {
                continue;
            }
            for j in k + 1..n {
                let val = lu[(i, j)] - factor * lu[(k, j)];
                lu[(i, j)] = val;
            }
        }
    }

    // Forward substitution with unit lower triangle.
    for j in 0..x.cols() {
        for i in 0..n {
            let mut acc = x[(i, j)];
            for k in 0..i {
                acc -= lu[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc;
        }
        // Back substitution.
        for i in (0..n).rev() {
            let mut acc = x[(i, j)];
            for k in i + 1..n {
                acc -= lu[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / lu[(i, i)];
        }
    }
    Some(x)
}

/// Householder QR decomposition `A = Q R` with `Q` unitary.
pub fn qr<T: Scalar>(a: &Mat<T>) -> (Mat<T>, Mat<T>) {
    let n = a.rows();
    let m = a.cols();
    let mut r = a.clone();
    let mut q = Mat::identity(n);
    for k in 0..m.min(n.saturating_sub(1)) {
        let mut v: Vec<Complex<T>> = (k..n).map(|i| r[(i, k)]).collect();
        let xnorm = v.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        if xnorm <= T::epsilon() {
            continue;
        }
        let alpha = if v[0].norm() > T::zero() {
            -(v[0] / Complex::new(v[0].norm(), T::zero())) * Complex::new(xnorm, T::zero())
        } else {
            Complex::new(-xnorm, T::zero())
        };
        v[0] -= alpha;
        let vnorm = v.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        if vnorm <= T::epsilon() * xnorm {
            continue;
        }
        for z in v.iter_mut() {
            *z /= Complex::new(vnorm, T::zero());
        }
        let two = Complex::new(T::of(2.0), T::zero());
        // R <- P R
        for j in k..m {
            let mut dot = Complex::zero();
            for (i, vi) in v.iter().enumerate() {
                dot += vi.conj() * r[(k + i, j)];
            }
            for (i, vi) in v.iter().enumerate() {
                let val = r[(k + i, j)] - two * *vi * dot;
                r[(k + i, j)] = val;
            }
        }
        // Q <- Q P
        for i in 0..n {
            let mut dot = Complex::zero();
            for (j, vj) in v.iter().enumerate() {
                dot += q[(i, k + j)] * *vj;
            }
            for (j, vj) in v.iter().enumerate() {
                let val = q[(i, k + j)] - two * dot * vj.conj();
                q[(i, k + j)] = val;
            }
        }
    }
    // Clean the strictly lower part of R.
    for i in 1..n {
        for j in 0..i.min(m) {
            r[(i, j)] = Complex::zero();
        }
    }
    (q, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat::cplx;

    type M = Mat<f64>;

    #[test]
    fn expm_zero_is_identity() {
        let e = expm(&M::zeros(3, 3)).unwrap();
        assert!((&e - &M::identity(3)).max_abs() < 1e-14);
    }

    #[test]
    fn expm_diagonal() {
        let e = expm(&M::diag_real(&[1.0, -2.0])).unwrap();
        assert!((e[(0, 0)].re - 1.0f64.exp()).abs() < 1e-12);
        assert!((e[(1, 1)].re - (-2.0f64).exp()).abs() < 1e-12);
        assert!(e[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn expm_inverse_identity() {
        // exp(A) exp(-A) = 1 for a non-normal fixed matrix with ||A|| <= 5.
        let mut a = M::zeros(3, 3);
        a[(0, 1)] = cplx(2.0, 1.0);
        a[(1, 2)] = cplx(-1.5, 0.5);
        a[(0, 2)] = cplx(0.3, -2.0);
        a[(1, 1)] = cplx(0.0, 1.0);
        a[(2, 0)] = cplx(0.7, 0.0);
        let e = expm(&a).unwrap();
        let eneg = expm(&(-a)).unwrap();
        let prod = &e * &eneg;
        assert!((&prod - &M::identity(3)).max_abs() < 1e-8);
    }

    #[test]
    fn expm_semigroup_property() {
        let mut a = M::zeros(2, 2);
        a[(0, 0)] = cplx(-1.0, 0.0);
        a[(0, 1)] = cplx(0.5, 0.5);
        a[(1, 0)] = cplx(0.5, -0.5);
        a[(1, 1)] = cplx(-0.3, 0.0);
        let t1 = 0.7;
        let t2 = 1.9;
        let e1 = expm(&a.scale_re(t1)).unwrap();
        let e2 = expm(&a.scale_re(t2)).unwrap();
        let e12 = expm(&a.scale_re(t1 + t2)).unwrap();
        assert!((&(&e1 * &e2) - &e12).max_abs() < 1e-8);
    }

    #[test]
    fn expm_overflow_cap() {
        let a = M::diag_real(&[2e4, 0.0]);
        assert!(matches!(expm(&a), Err(Error::Overflow(_, _))));
    }

    #[test]
    fn solve_roundtrip() {
        let mut a = M::zeros(3, 3);
        a[(0, 0)] = cplx(2.0, 0.0);
        a[(0, 1)] = cplx(1.0, -1.0);
        a[(1, 0)] = cplx(0.0, 1.0);
        a[(1, 1)] = cplx(3.0, 0.0);
        a[(1, 2)] = cplx(1.0, 0.0);
        a[(2, 2)] = cplx(-1.0, 2.0);
        a[(2, 0)] = cplx(0.5, 0.0);
        let b = M::identity(3);
        let x = solve(&a, &b).unwrap();
        assert!((&(&a * &x) - &b).max_abs() < 1e-12);
    }

    #[test]
    fn qr_reconstructs_and_q_unitary() {
        let mut a = M::zeros(3, 3);
        a[(0, 0)] = cplx(1.0, 2.0);
        a[(0, 1)] = cplx(-1.0, 0.0);
        a[(1, 1)] = cplx(0.0, 3.0);
        a[(2, 0)] = cplx(2.0, -1.0);
        a[(2, 2)] = cplx(1.0, 1.0);
        let (q, r) = qr(&a);
        assert!((&(&q * &r) - &a).max_abs() < 1e-12);
        let qdq = q.dagger() * q;
        assert!((&qdq - &M::identity(3)).max_abs() < 1e-12);
    }
}
