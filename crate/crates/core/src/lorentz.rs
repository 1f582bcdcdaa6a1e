//! Minkowski metric, Levi-Civita symbol and Hodge duals on four-index objects.

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::{Real, ScalarExt};

/// Four complex components indexed by a Lorentz index.
pub type Vec4<R> = [Complex<R>; 4];
/// A 4x4 grid of complex components (rank-2 tensor in a fixed index position).
pub type Grid<R> = [[Complex<R>; 4]; 4];

pub fn zero_vec<R: Real>() -> Vec4<R> {
    std::array::from_fn(|_| Complex::zero())
}

pub fn zero_grid<R: Real>() -> Grid<R> {
    std::array::from_fn(|_| zero_vec())
}

/// Overall sign of `eps^{0123}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EpsilonSign {
    #[default]
    Plus,
    Minus,
}

impl EpsilonSign {
    pub fn flipped(self) -> Self {
        match self {
            EpsilonSign::Plus => EpsilonSign::Minus,
            EpsilonSign::Minus => EpsilonSign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            EpsilonSign::Plus => 1,
            EpsilonSign::Minus => -1,
        }
    }
}

/// Whether a tensor's indices are stored contravariant or covariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Upper,
    Lower,
}

/// Metric g = diag(+1, -1, -1, -1) together with the epsilon convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Lorentz {
    pub epsilon: EpsilonSign,
}

/// Sign of the permutation `(a, b, c, d)` of `(0, 1, 2, 3)`, zero on repeats.
pub fn permutation_sign(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for i in 0..4 {
        for j in i + 1..4 {
            if idx[i] == idx[j] {
                return 0;
            }
            if idx[i] > idx[j] {
                sign = -sign;
            }
        }
    }
    sign
}

impl Lorentz {
    pub fn new(epsilon: EpsilonSign) -> Self {
        Lorentz { epsilon }
    }

    /// Diagonal metric entry `g_{mu mu} = g^{mu mu}`.
    pub fn metric(mu: usize) -> i64 {
        if mu == 0 {
            1
        } else {
            -1
        }
    }

    pub fn eps_upper(&self, idx: [usize; 4]) -> i64 {
        self.epsilon.value() * permutation_sign(idx)
    }

    /// `eps_{abcd}`; det g = -1 flips the sign relative to `eps^{abcd}`.
    pub fn eps_lower(&self, idx: [usize; 4]) -> i64 {
        -self.eps_upper(idx)
    }

    pub fn eps(&self, idx: [usize; 4], position: Position) -> i64 {
        match position {
            Position::Upper => self.eps_upper(idx),
            Position::Lower => self.eps_lower(idx),
        }
    }

    /// Moves a vector index between positions (the operation is an involution).
    pub fn flip_vec<R: Real>(v: &Vec4<R>) -> Vec4<R> {
        std::array::from_fn(|mu| scale_int(&v[mu], Self::metric(mu)))
    }

    /// Moves both indices of a rank-2 grid between positions.
    pub fn flip_both<R: Real>(x: &Grid<R>) -> Grid<R> {
        std::array::from_fn(|a| std::array::from_fn(|b| scale_int(&x[a][b], Self::metric(a) * Self::metric(b))))
    }

    /// Hodge dual `X~^{mu nu} = 1/2 eps^{mu nu rho sigma} X_{rho sigma}`,
    /// returned in the same index position as the input.
    pub fn dual<R: Real>(&self, x: &Grid<R>, position: Position) -> Grid<R> {
        // The opposite position of the input is what contracts against eps.
        let opposite = Self::flip_both(x);
        let half = Complex::<R>::ratio(1, 2);
        std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                let mut acc = Complex::<R>::zero();
                for rho in 0..4 {
                    for sigma in 0..4 {
                        let e = self.eps([mu, nu, rho, sigma], position);
                        if e != 0 {
                            acc = acc + scale_int(&opposite[rho][sigma], e);
                        }
                    }
                }
                acc * half.clone()
            })
        })
    }
}

pub fn scale_int<R: Real>(value: &Complex<R>, factor: i64) -> Complex<R> {
    match factor {
        0 => Complex::zero(),
        1 => value.clone(),
        -1 => -value.clone(),
        f => value * Complex::<R>::int(f),
    }
}

/// `a_mu b_nu - a_nu b_mu`.
pub fn wedge<R: Real>(a: &Vec4<R>, b: &Vec4<R>) -> Grid<R> {
    std::array::from_fn(|mu| std::array::from_fn(|nu| &a[mu] * &b[nu] - &a[nu] * &b[mu]))
}

/// Contracts `a^mu b_mu` for vectors given in opposite positions.
pub fn contract<R: Real>(a: &Vec4<R>, b: &Vec4<R>) -> Complex<R> {
    a.iter().zip(b).fold(Complex::zero(), |acc, (x, y)| acc + x * y)
}

/// Minkowski product `g_{mu nu} a^mu b^nu` for two vectors in the same position.
pub fn minkowski_dot<R: Real>(a: &Vec4<R>, b: &Vec4<R>) -> Complex<R> {
    contract(a, &Lorentz::flip_vec(b))
}

pub fn is_antisymmetric<R: Real>(x: &Grid<R>) -> bool {
    (0..4).all(|a| (0..4).all(|b| x[a][b] == -x[b][a].clone()))
}

/// Builds an antisymmetric grid from its six upper-triangle entries, ordered
/// (01, 02, 03, 12, 13, 23).
pub fn antisymmetric_from_pairs<R: Real>(values: [Complex<R>; 6]) -> Grid<R> {
    let mut x = zero_grid();
    for ((a, b), v) in PAIRS.iter().copied().zip(values) {
        x[b][a] = -v.clone();
        x[a][b] = v;
    }
    x
}

/// Index pairs `mu < nu` in canonical order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn grid_map<R: Real>(x: &Grid<R>, f: impl Fn(&Complex<R>) -> Complex<R>) -> Grid<R> {
    std::array::from_fn(|a| std::array::from_fn(|b| f(&x[a][b])))
}

pub fn grid_add<R: Real>(x: &Grid<R>, y: &Grid<R>) -> Grid<R> {
    std::array::from_fn(|a| std::array::from_fn(|b| &x[a][b] + &y[a][b]))
}
