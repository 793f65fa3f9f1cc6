//! Finite-dimensional commutative base algebras given by structure constants.
//!
//! These back the discrete presets: functions on Z₂, functions on Z₂×Z₂, and
//! the two-dimensional algebra with a square root of −1 (the complex numbers
//! viewed over the rationals, used by the quaternion preset). The hat and star
//! act diagonally on the chosen basis with signs ±1.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{conj, from_int, Scalar};

/// A unital algebra of fixed dimension: e_i · e_j = Σ_k table[i][j][k] e_k.
#[derive(Clone, PartialEq, Debug)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    unit: Vec<Scalar>,
    table: Vec<Vec<Vec<Scalar>>>,
    hat_signs: Vec<i8>,
    star_signs: Vec<i8>,
    trace: Vec<Scalar>,
}

impl FiniteAlgebra {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn zero_vec(&self) -> Vec<Scalar> {
        vec![Scalar::zero(); self.dimension()]
    }

    pub fn unit_vec(&self) -> Vec<Scalar> {
        self.unit.clone()
    }

    /// The k-th basis element as a coefficient vector.
    pub fn basis(&self, k: usize) -> Vec<Scalar> {
        let mut v = self.zero_vec();
        v[k] = Scalar::one();
        v
    }

    /// Product via structure constants. Errors on dimension mismatch.
    pub fn product(&self, a: &[Scalar], b: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        let d = self.dimension();
        if a.len() != d || b.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: if a.len() != d { a.len() } else { b.len() },
            });
        }
        let mut out = self.zero_vec();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.clone() * bj.clone();
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += c.clone() * t.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
    }

    pub fn hat(&self, a: &[Scalar]) -> Vec<Scalar> {
        a.iter()
            .zip(&self.hat_signs)
            .map(|(c, &s)| if s < 0 { -c.clone() } else { c.clone() })
            .collect()
    }

    pub fn star(&self, a: &[Scalar]) -> Vec<Scalar> {
        a.iter()
            .zip(&self.star_signs)
            .map(|(c, &s)| {
                let c = conj(c);
                if s < 0 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    /// The hat-invariant trace, as a linear functional on the basis.
    pub fn trace(&self, a: &[Scalar]) -> Scalar {
        a.iter()
            .zip(&self.trace)
            .map(|(c, t)| c.clone() * t.clone())
            .fold(Scalar::zero(), |acc, v| acc + v)
    }

    /// Exhaustive associativity over basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dimension();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let ij = self.product(&self.basis(i), &self.basis(j)).unwrap();
                    let jk = self.product(&self.basis(j), &self.basis(k)).unwrap();
                    let left = self.product(&ij, &self.basis(k)).unwrap();
                    let right = self.product(&self.basis(i), &jk).unwrap();
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dimension();
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(&self.basis(i), &self.basis(j)).unwrap();
                let ji = self.product(&self.basis(j), &self.basis(i)).unwrap();
                if ij != ji {
                    return false;
                }
            }
        }
        true
    }

    /// Unit law on every basis element.
    pub fn unit_is_identity(&self) -> bool {
        (0..self.dimension()).all(|k| {
            self.product(&self.unit, &self.basis(k)).unwrap() == self.basis(k)
                && self.product(&self.basis(k), &self.unit).unwrap() == self.basis(k)
        })
    }

    /// hat is an involutive algebra automorphism.
    pub fn hat_is_automorphism(&self) -> bool {
        let d = self.dimension();
        if self.hat(&self.unit) != self.unit {
            return false;
        }
        for i in 0..d {
            let e = self.basis(i);
            if self.hat(&self.hat(&e)) != e {
                return false;
            }
            for j in 0..d {
                let f = self.basis(j);
                let lhs = self.hat(&self.product(&e, &f).unwrap());
                let rhs = self.product(&self.hat(&e), &self.hat(&f)).unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Functions on Z₂: generator a with a² = 1, hat(a) = −a, a⋆ = a.
    /// The trace is the sum over the two points.
    pub fn z2() -> Self {
        let one = Scalar::one;
        let zero = Scalar::zero;
        FiniteAlgebra {
            labels: vec!["1".into(), "a".into()],
            unit: vec![one(), zero()],
            table: vec![
                vec![vec![one(), zero()], vec![zero(), one()]],
                vec![vec![zero(), one()], vec![one(), zero()]],
            ],
            hat_signs: vec![1, -1],
            star_signs: vec![1, 1],
            trace: vec![from_int(2), zero()],
        }
    }

    /// Functions on Z₂×Z₂: commuting a, b with a² = b² = 1, hat fixes a and
    /// flips b. The trace is the sum over the four points.
    pub fn z2z2() -> Self {
        let one = Scalar::one;
        let zero = Scalar::zero;
        // Basis order: 1, a, b, ab.
        let e = |k: usize| {
            let mut v = vec![zero(), zero(), zero(), zero()];
            v[k] = one();
            v
        };
        let table = vec![
            vec![e(0), e(1), e(2), e(3)],
            vec![e(1), e(0), e(3), e(2)],
            vec![e(2), e(3), e(0), e(1)],
            vec![e(3), e(2), e(1), e(0)],
        ];
        FiniteAlgebra {
            labels: vec!["1".into(), "a".into(), "b".into(), "ab".into()],
            unit: e(0),
            table,
            hat_signs: vec![1, 1, -1, -1],
            star_signs: vec![1, 1, 1, 1],
            trace: vec![from_int(4), zero(), zero(), zero()],
        }
    }

    /// The complex numbers as a two-dimensional algebra with basis {1, i},
    /// hat = conjugation (i ↦ −i), star likewise. Trace is the real part.
    pub fn complex_numbers() -> Self {
        let one = Scalar::one;
        let zero = Scalar::zero;
        FiniteAlgebra {
            labels: vec!["1".into(), "i".into()],
            unit: vec![one(), zero()],
            table: vec![
                vec![vec![one(), zero()], vec![zero(), one()]],
                vec![vec![zero(), one()], vec![-one(), zero()]],
            ],
            hat_signs: vec![1, -1],
            star_signs: vec![1, -1],
            trace: vec![one(), zero()],
        }
    }
}
