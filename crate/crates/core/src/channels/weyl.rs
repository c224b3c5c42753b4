//! Discrete Weyl unitaries `U_{k,l} = sum_r nu^{rl} |k+r><r|`, `nu = e^{2 pi i / d}`.

use num_complex::Complex;

use crate::linalg::Mat;
use crate::scalar::Scalar;

/// All `d^2` Weyl unitaries in row-major `(k, l)` order; element 0 is the
/// identity.
pub fn weyl_unitaries<T: Scalar>(d: usize) -> Vec<Mat<T>> {
    assert!(d >= 2, "Weyl system needs d >= 2");
    let mut out = Vec::with_capacity(d * d);
    for k in 0..d {
        for l in 0..d {
            out.push(weyl_unitary(d, k, l));
        }
    }
    out
}

/// Single Weyl unitary `U_{k,l}`.
pub fn weyl_unitary<T: Scalar>(d: usize, k: usize, l: usize) -> Mat<T> {
    let mut m = Mat::zeros(d, d);
    let base = T::of(2.0) * T::PI() / T::of(d as f64);
    for r in 0..d {
        let phase = base * T::of(((r * l) % d) as f64);
        m[((k + r) % d, r)] = Complex::new(phase.cos(), phase.sin());
    }
    m
}

/// Root of unity `nu^e` for the given dimension.
pub fn root_of_unity<T: Scalar>(d: usize, e: i64) -> Complex<T> {
    let e_mod = e.rem_euclid(d as i64) as usize;
    if e_mod == 0 {
        return Complex::new(T::one(), T::zero());
    }
    let phase = T::of(2.0) * T::PI() * T::of(e_mod as f64) / T::of(d as f64);
    Complex::new(phase.cos(), phase.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d2_reproduces_pauli_x_and_z() {
        let ws = weyl_unitaries::<f64>(2);
        // Row-major (k, l): index 2 = U_{1,0} = sigma_x, index 1 = U_{0,1} = sigma_z.
        let sx = crate::channels::pauli_matrix::<f64>(1);
        let sz = crate::channels::pauli_matrix::<f64>(3);
        assert!((&ws[2] - &sx).max_abs() < 1e-14);
        assert!((&ws[1] - &sz).max_abs() < 1e-14);
        assert!((&ws[0] - &Mat::identity(2)).max_abs() < 1e-14);
    }

    #[test]
    fn orthogonality_for_small_dimensions() {
        for d in 2..=5usize {
            let ws = weyl_unitaries::<f64>(d);
            for (a, ua) in ws.iter().enumerate() {
                for (b, ub) in ws.iter().enumerate() {
                    let tr = (ua.dagger() * ub.clone()).trace();
                    let expect = if a == b { d as f64 } else { 0.0 };
                    assert!(
                        (tr - Complex::new(expect, 0.0)).norm() < 1e-10,
                        "tr(U_{a}^dag U_{b}) = {tr} for d = {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn projective_composition_law() {
        // U_{i,j} U_{k,l} = nu^{jk} U_{i+k, j+l} for d in 2..=5.
        for d in 2..=5usize {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        for l in 0..d {
                            let lhs = weyl_unitary::<f64>(d, i, j) * weyl_unitary::<f64>(d, k, l);
                            let rhs = weyl_unitary::<f64>(d, (i + k) % d, (j + l) % d)
                                .scale(root_of_unity(d, (j * k) as i64));
                            assert!(
                                (&lhs - &rhs).max_abs() < 1e-10,
                                "composition law fails at d={d} ({i},{j}),({k},{l})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_law() {
        // U_{k,l}^{-1} = nu^{kl} U_{-k,-l}.
        for d in 2..=5usize {
            for k in 0..d {
                for l in 0..d {
                    let u = weyl_unitary::<f64>(d, k, l);
                    let inv = weyl_unitary::<f64>(d, (d - k) % d, (d - l) % d)
                        .scale(root_of_unity(d, (k * l) as i64));
                    let prod = u * inv;
                    assert!((&prod - &Mat::identity(d)).max_abs() < 1e-10);
                }
            }
        }
    }
}
