//! Seeded random instance generators: Haar unitaries, random states and
//! simplex weights. Every generator is deterministic given its RNG stream.

use num_complex::Complex;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::linalg::{qr, Density, Hermitian, Mat};
use crate::scalar::Scalar;

/// Root RNG for a given seed.
pub fn rng_from_seed(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Independent stream `index` of the root seed, safe to hand to parallel
/// workers without coupling their draws to scheduling order.
pub fn substream(seed: u64, index: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn normal<T: Scalar>(rng: &mut impl Rng) -> T {
    T::of(rng.sample::<f64, _>(StandardNormal))
}

/// Complex matrix with i.i.d. standard complex Gaussian entries.
pub fn gaussian_matrix<T: Scalar>(d: usize, rng: &mut impl Rng) -> Mat<T> {
    Mat::from_fn(d, d, |_, _| Complex::new(normal(rng), normal(rng)))
}

/// Haar-random unitary: QR of a complex Gaussian matrix with the R diagonal
/// phases absorbed into Q.
pub fn haar_unitary<T: Scalar>(d: usize, rng: &mut impl Rng) -> Mat<T> {
    let z = gaussian_matrix(d, rng);
    let (q, r) = qr(&z);
    let mut u = q;
    for j in 0..d {
        let rjj = r[(j, j)];
        let mag = rjj.norm();
        let phase = if mag > T::zero() {
            rjj / Complex::new(mag, T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        };
        for i in 0..d {
            u[(i, j)] *= phase;
        }
    }
    u
}

/// Random Hermitian matrix with Gaussian entries, normalized scale.
pub fn random_hermitian<T: Scalar>(d: usize, scale: T, rng: &mut impl Rng) -> Hermitian<T> {
    let g = gaussian_matrix(d, rng).scale_re(scale);
    Hermitian::symmetrized(&g)
}

/// Random positive semidefinite matrix `A^dag A` (Wishart).
pub fn random_psd<T: Scalar>(d: usize, rng: &mut impl Rng) -> Mat<T> {
    let g = gaussian_matrix::<T>(d, rng);
    g.dagger() * g
}

/// Random density matrix from the Hilbert-Schmidt ensemble, `G G^dag / tr`.
pub fn random_density<T: Scalar>(d: usize, rng: &mut impl Rng) -> Density<T> {
    let g = gaussian_matrix::<T>(d, rng);
    let w = &g * &g.dagger();
    let tr = w.trace().re;
    Density::new(w.scale_re(T::one() / tr)).expect("normalized Wishart matrix is a state")
}

/// Random full-rank density matrix: resamples until the smallest eigenvalue
/// clears `floor`.
pub fn random_full_rank_density<T: Scalar>(d: usize, floor: T, rng: &mut impl Rng) -> Density<T> {
    loop {
        let rho = random_density(d, rng);
        if rho.min_eigenvalue() >= floor {
            return rho;
        }
    }
}

/// Random pure state `|psi><psi|`.
pub fn random_pure_state<T: Scalar>(d: usize, rng: &mut impl Rng) -> Density<T> {
    let mut psi: Vec<Complex<T>> = (0..d).map(|_| Complex::new(normal(rng), normal(rng))).collect();
    let norm = psi.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
    for z in psi.iter_mut() {
        *z /= Complex::new(norm, T::zero());
    }
    let m = Mat::from_fn(d, d, |i, j| psi[i] * psi[j].conj());
    Density::new(m).expect("projector onto a unit vector is a state")
}

/// Uniform point on the probability simplex (Dirichlet(1,...,1)).
pub fn dirichlet_uniform<T: Scalar>(k: usize, rng: &mut impl Rng) -> Vec<T> {
    let raw: Vec<T> = (0..k)
        .map(|_| {
            let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
            T::of(-u.ln())
        })
        .collect();
    let total = raw.iter().fold(T::zero(), |s, &x| s + x);
    raw.into_iter().map(|x| x / total).collect()
}
