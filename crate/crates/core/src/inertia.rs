//! Exact inertia of symmetric matrices.
//!
//! Two independent routes are provided:
//!
//! * [`inertia_congruence`] reduces the matrix by symmetric Gaussian elimination
//!   over the rationals. Every step is a congruence `S^T A S`, so by Sylvester's
//!   law of inertia the signs of the pivots give `(p, n, eta)` exactly.
//! * [`inertia_charpoly_oracle`] computes `det(λI - A)` with the division-free
//!   Berkowitz recurrence over the integers and reads the signs of the roots off
//!   the coefficients with Descartes' rule, which is exact because every root of
//!   a real symmetric matrix's characteristic polynomial is real.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub const fn new(positive: usize, negative: usize, nullity: usize) -> Self {
        Inertia {
            positive,
            negative,
            nullity,
        }
    }

    /// `r = p + n`.
    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    /// `p + n + eta`, the order of the matrix.
    pub fn order(&self) -> usize {
        self.rank() + self.nullity
    }
}

impl Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia::new(
            self.positive + rhs.positive,
            self.negative + rhs.negative,
            self.nullity + rhs.nullity,
        )
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.positive, self.negative, self.nullity
        )
    }
}

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(order: usize) -> Self {
        RationalMatrix {
            order,
            entries: vec![BigRational::zero(); order * order],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { order, entries }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        Self::from_fn(order, |i, j| {
            BigRational::from_integer(BigInt::from(rows[i][j]))
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.order + j] = value;
    }

    fn check_symmetric(&self) -> Result<()> {
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    fn integer_entries(&self) -> Result<Vec<BigInt>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, x)| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::NotInteger(k / self.order, k % self.order))
                }
            })
            .collect()
    }
}

/// `A(G)`: the symmetric 0/1 adjacency matrix with zero diagonal.
pub fn adjacency_matrix(g: &Graph) -> RationalMatrix {
    RationalMatrix::from_fn(g.order(), |i, j| {
        if g.has_edge(i, j) {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    })
}

/// Inertia by symmetric elimination under congruence.
///
/// Pivot order: the first nonzero diagonal entry in index order becomes a 1×1
/// pivot. When the remaining diagonal is all zero, the lexicographically
/// smallest nonzero `(i, j)` forms the 2×2 pivot `[[0, a], [a, 0]]`, which has
/// one positive and one negative eigenvalue. Whatever remains once every entry
/// is zero counts towards the nullity.
pub fn inertia_congruence(m: &RationalMatrix) -> Result<Inertia> {
    m.check_symmetric()?;
    let n = m.order;
    let mut a = m.entries.clone();
    let at = |i: usize, j: usize| i * n + j;
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();

    loop {
        if let Some(pos) = active.iter().position(|&i| !a[at(i, i)].is_zero()) {
            let piv = active.remove(pos);
            let d = a[at(piv, piv)].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            // Schur complement: a_jk -= a_jp a_pk / d.
            let col: Vec<BigRational> = active.iter().map(|&j| &a[at(j, piv)] / &d).collect();
            for (x, &j) in active.iter().enumerate() {
                if col[x].is_zero() {
                    continue;
                }
                for &k in &active[x..] {
                    if a[at(piv, k)].is_zero() {
                        continue;
                    }
                    let delta = &col[x] * &a[at(piv, k)];
                    let v = &a[at(j, k)] - delta;
                    a[at(k, j)] = v.clone();
                    a[at(j, k)] = v;
                }
            }
            continue;
        }

        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..]
                .iter()
                .find(|&&j| !a[at(i, j)].is_zero())
                .map(|&j| (i, j))
        });
        let Some((pi, pj)) = pair else {
            out.nullity += active.len();
            return Ok(out);
        };
        active.retain(|&k| k != pi && k != pj);
        out.positive += 1;
        out.negative += 1;
        // With B = [[0, a], [a, 0]], B^{-1} = [[0, 1/a], [1/a, 0]] and the
        // update is a_kl -= (a_ki a_jl + a_kj a_il) / a.
        let inv = a[at(pi, pj)].recip();
        let ci: Vec<BigRational> = active.iter().map(|&k| &a[at(k, pi)] * &inv).collect();
        let cj: Vec<BigRational> = active.iter().map(|&k| &a[at(k, pj)] * &inv).collect();
        for (x, &k) in active.iter().enumerate() {
            for &l in &active[x..] {
                let delta = &ci[x] * &a[at(pj, l)] + &cj[x] * &a[at(pi, l)];
                if delta.is_zero() {
                    continue;
                }
                let v = &a[at(k, l)] - delta;
                a[at(l, k)] = v.clone();
                a[at(k, l)] = v;
            }
        }
    }
}

/// Inertia of `A(G)`.
pub fn inertia(g: &Graph) -> Inertia {
    inertia_congruence(&adjacency_matrix(g)).expect("adjacency matrices are symmetric")
}

/// Integer polynomial, coefficients from the constant term upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    /// Trailing (highest-degree) zero coefficients are dropped.
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }
}

/// `det(λI - A)` by the Berkowitz recurrence.
///
/// Division-free: the leading principal submatrices are grown one row at a
/// time and each step multiplies the running coefficient vector by a lower
/// triangular Toeplitz matrix built from `a_rr` and the products `R M^k C`.
pub fn char_poly(m: &RationalMatrix) -> Result<IntPolynomial> {
    let a = m.integer_entries()?;
    let n = m.order;
    let at = |i: usize, j: usize| &a[i * n + j];

    // Highest-degree coefficient first while iterating.
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-at(r, r).clone());
        // power = M^k C, where M is the leading r×r block and C = A[0..r][r].
        let mut power: Vec<BigInt> = (0..r).map(|i| at(i, r).clone()).collect();
        for k in 0..r {
            let dot: BigInt = (0..r).map(|j| at(r, j) * &power[j]).sum();
            toeplitz.push(-dot);
            if k + 1 < r {
                power = (0..r)
                    .map(|i| (0..r).map(|j| at(i, j) * &power[j]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, c) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * c;
            }
        }
        poly = next;
    }
    poly.reverse();
    Ok(IntPolynomial::new(poly))
}

fn sign_changes<'a>(coefficients: impl Iterator<Item = &'a BigInt>, alternate: bool) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for (i, c) in coefficients.enumerate() {
        let mut s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if alternate && i % 2 == 1 {
            s = -s;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Inertia from the characteristic polynomial: the multiplicity of the zero
/// root gives the nullity, and with `χ(λ) = λ^eta q(λ)` the sign changes of
/// `q(λ)` and `q(-λ)` count the positive and negative roots.
pub fn inertia_charpoly_oracle(m: &RationalMatrix) -> Result<Inertia> {
    m.check_symmetric()?;
    let chi = char_poly(m)?;
    let coeffs = chi.coefficients();
    let nullity = coeffs.iter().take_while(|c| c.is_zero()).count();
    let q = &coeffs[nullity..];
    Ok(Inertia::new(
        sign_changes(q.iter(), false),
        sign_changes(q.iter(), true),
        nullity,
    ))
}
