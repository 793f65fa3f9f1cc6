//! The twisted-double construction on A × A.
//!
//! Given a commutative algebra A, an involutive automorphism `hat`, and a
//! hat-invariant central element ξ, the double carries the product
//!
//!     (a, b)(A, B) = (a·A + ξ·b·hat(B), b·hat(A) + a·B)
//!
//! and, when ξ⋆ = ξ, the two star structures (a, b)⋆ = (a⋆, ±hat(b)⋆).
//! Specialized to plane polynomials with ξ = x and hat the mirror symmetry it
//! yields the anticommutative plane (XY + YX = 0, X² = x); over the complex
//! numbers with ξ = −1 it yields the quaternions; over functions on Z₂ and
//! Z₂×Z₂ the two discrete presets.

use std::fmt;

use num_traits::One;

use crate::error::Error;
use crate::finite::FiniteAlgebra;
use crate::poly::{forward_value_ops, PolyElement};
use crate::scalar::Scalar;

/// Sign ε selecting between the two star structures (a,b)⋆ = (a⋆, ε·hat(b)⋆).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarSign {
    Plus,
    Minus,
}

impl StarSign {
    pub fn apply<T: std::ops::Neg<Output = T>>(self, v: T) -> T {
        match self {
            StarSign::Plus => v,
            StarSign::Minus => -v,
        }
    }
}

impl std::str::FromStr for StarSign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(StarSign::Plus),
            "-" | "minus" => Ok(StarSign::Minus),
            other => Err(format!("unknown star sign `{}` (expected + or -)", other)),
        }
    }
}

/// Operations a base algebra must provide for the doubling.
pub trait BaseAlgebra: Clone {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, s: &Scalar, a: &Self::Elem) -> Self::Elem;
    fn hat(&self, a: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;
    fn trace(&self, a: &Self::Elem) -> Scalar;
    /// A finite set of base elements that, together with (0, 1), generate the
    /// double; used by centrality checks.
    fn generators(&self) -> Vec<Self::Elem>;
    /// Rejects elements that do not belong to this algebra (wrong context).
    fn check_member(&self, a: &Self::Elem) -> Result<(), Error>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The plane base: polynomials in x, y with hat the mirror symmetry y → −y.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct PlaneAlgebra;

impl BaseAlgebra for PlaneAlgebra {
    type Elem = PolyElement;

    fn zero(&self) -> PolyElement {
        PolyElement::zero()
    }
    fn one(&self) -> PolyElement {
        PolyElement::one()
    }
    fn add(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        a + b
    }
    fn neg(&self, a: &PolyElement) -> PolyElement {
        -a
    }
    fn mul(&self, a: &PolyElement, b: &PolyElement) -> PolyElement {
        a * b
    }
    fn scale(&self, s: &Scalar, a: &PolyElement) -> PolyElement {
        a.scale(s)
    }
    fn hat(&self, a: &PolyElement) -> PolyElement {
        a.hat()
    }
    fn star(&self, a: &PolyElement) -> PolyElement {
        a.star()
    }
    fn trace(&self, a: &PolyElement) -> Scalar {
        a.integrate()
    }
    fn generators(&self) -> Vec<PolyElement> {
        vec![PolyElement::x(), PolyElement::y()]
    }
    fn check_member(&self, _a: &PolyElement) -> Result<(), Error> {
        Ok(())
    }
}

impl BaseAlgebra for FiniteAlgebra {
    type Elem = Vec<Scalar>;

    fn zero(&self) -> Vec<Scalar> {
        self.zero_vec()
    }
    fn one(&self) -> Vec<Scalar> {
        self.unit_vec()
    }
    fn add(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        FiniteAlgebra::add(self, a, b)
    }
    fn neg(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|c| -c.clone()).collect()
    }
    fn mul(&self, a: &Vec<Scalar>, b: &Vec<Scalar>) -> Vec<Scalar> {
        self.product(a, b)
            .expect("context mismatch: coefficient vector of wrong dimension")
    }
    fn scale(&self, s: &Scalar, a: &Vec<Scalar>) -> Vec<Scalar> {
        a.iter().map(|c| c.clone() * s.clone()).collect()
    }
    fn hat(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        FiniteAlgebra::hat(self, a)
    }
    fn star(&self, a: &Vec<Scalar>) -> Vec<Scalar> {
        FiniteAlgebra::star(self, a)
    }
    fn trace(&self, a: &Vec<Scalar>) -> Scalar {
        FiniteAlgebra::trace(self, a)
    }
    fn generators(&self) -> Vec<Vec<Scalar>> {
        (0..self.dimension()).map(|k| self.basis(k)).collect()
    }
    fn check_member(&self, a: &Vec<Scalar>) -> Result<(), Error> {
        if a.len() == self.dimension() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dimension(), got: a.len() })
        }
    }
}

/// An ordered pair (first, second) of base elements.
#[derive(Clone)]
pub struct Doubled<B: BaseAlgebra> {
    pub first: B::Elem,
    pub second: B::Elem,
}

impl<B: BaseAlgebra> PartialEq for Doubled<B> {
    fn eq(&self, other: &Self) -> bool {
        self.first == other.first && self.second == other.second
    }
}

impl<B: BaseAlgebra> fmt::Debug for Doubled<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair({:?}, {:?})", self.first, self.second)
    }
}

/// The doubling data: base algebra, central hat-invariant element ξ, and the
/// chosen star sign.
#[derive(Clone, Debug)]
pub struct DoublingContext<B: BaseAlgebra> {
    pub base: B,
    pub xi: B::Elem,
    pub star_sign: StarSign,
}

impl<B: BaseAlgebra> DoublingContext<B> {
    /// Builds a context after validating hat(ξ) = ξ and ξ⋆ = ξ. Centrality of
    /// ξ is automatic for the commutative bases accepted here.
    pub fn new(base: B, xi: B::Elem, star_sign: StarSign) -> Result<Self, Error> {
        base.check_member(&xi)?;
        if base.hat(&xi) != xi {
            return Err(Error::InvalidContext("xi must be hat-invariant".into()));
        }
        if base.star(&xi) != xi {
            return Err(Error::InvalidContext("xi must be star-invariant".into()));
        }
        Ok(DoublingContext { base, xi, star_sign })
    }

    pub fn zero(&self) -> Doubled<B> {
        Doubled { first: self.base.zero(), second: self.base.zero() }
    }

    pub fn one(&self) -> Doubled<B> {
        Doubled { first: self.base.one(), second: self.base.zero() }
    }

    /// The inclusion a ↦ (a, 0) of Observation 2.
    pub fn embed(&self, a: B::Elem) -> Doubled<B> {
        Doubled { second: self.base.zero(), first: a }
    }

    /// The distinguished generator (0, 1) (X on the plane).
    pub fn gen_second(&self) -> Doubled<B> {
        Doubled { first: self.base.zero(), second: self.base.one() }
    }

    fn check(&self, u: &Doubled<B>) {
        self.base
            .check_member(&u.first)
            .and_then(|_| self.base.check_member(&u.second))
            .expect("context mismatch: element does not belong to this doubling context");
    }

    pub fn add(&self, u: &Doubled<B>, v: &Doubled<B>) -> Doubled<B> {
        self.check(u);
        self.check(v);
        Doubled {
            first: self.base.add(&u.first, &v.first),
            second: self.base.add(&u.second, &v.second),
        }
    }

    pub fn neg(&self, u: &Doubled<B>) -> Doubled<B> {
        Doubled { first: self.base.neg(&u.first), second: self.base.neg(&u.second) }
    }

    pub fn sub(&self, u: &Doubled<B>, v: &Doubled<B>) -> Doubled<B> {
        self.add(u, &self.neg(v))
    }

    pub fn scale(&self, s: &Scalar, u: &Doubled<B>) -> Doubled<B> {
        Doubled { first: self.base.scale(s, &u.first), second: self.base.scale(s, &u.second) }
    }

    /// The twisted product (a,b)(A,B) = (aA + ξ b hat(B), b hat(A) + a B).
    pub fn mul(&self, u: &Doubled<B>, v: &Doubled<B>) -> Doubled<B> {
        self.check(u);
        self.check(v);
        let b = &self.base;
        let first = b.add(
            &b.mul(&u.first, &v.first),
            &b.mul(&self.xi, &b.mul(&u.second, &b.hat(&v.second))),
        );
        let second = b.add(&b.mul(&u.second, &b.hat(&v.first)), &b.mul(&u.first, &v.second));
        Doubled { first, second }
    }

    /// (a,b)⋆ = (a⋆, ε·hat(b)⋆).
    pub fn star(&self, u: &Doubled<B>) -> Doubled<B> {
        let starred = self.base.star(&self.base.hat(&u.second));
        Doubled {
            first: self.base.star(&u.first),
            second: match self.star_sign {
                StarSign::Plus => starred,
                StarSign::Minus => self.base.neg(&starred),
            },
        }
    }

    pub fn pow(&self, u: &Doubled<B>, k: u32) -> Doubled<B> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, u);
        }
        out
    }

    pub fn is_zero(&self, u: &Doubled<B>) -> bool {
        self.base.is_zero(&u.first) && self.base.is_zero(&u.second)
    }

    /// True iff u commutes with every embedded base generator and with (0, 1).
    pub fn is_central(&self, u: &Doubled<B>) -> bool {
        let mut gens: Vec<Doubled<B>> =
            self.base.generators().into_iter().map(|g| self.embed(g)).collect();
        gens.push(self.gen_second());
        gens.iter().all(|g| self.mul(u, g) == self.mul(g, u))
    }

    /// The trace of Observation 3: (ψ, φ) ↦ ∫₀ ψ.
    pub fn trace(&self, u: &Doubled<B>) -> Scalar {
        self.base.trace(&u.first)
    }
}

/// The anticommutative-plane preset: base polynomials, ξ = x.
pub fn plane_context(star_sign: StarSign) -> DoublingContext<PlaneAlgebra> {
    DoublingContext::new(PlaneAlgebra, PolyElement::x(), star_sign)
        .expect("plane context is always valid")
}

/// The quaternion preset: base ℂ, hat = conjugation, ξ = −1, star (sss).
pub fn quaternion_context() -> DoublingContext<FiniteAlgebra> {
    let base = FiniteAlgebra::complex_numbers();
    let minus_one = base.neg(&base.unit_vec());
    DoublingContext::new(base, minus_one, StarSign::Minus)
        .expect("quaternion context is always valid")
}

/// Functions on Z₂ with hat(a) = −a and ξ = 1.
pub fn z2_context(star_sign: StarSign) -> DoublingContext<FiniteAlgebra> {
    let base = FiniteAlgebra::z2();
    let xi = base.unit_vec();
    DoublingContext::new(base, xi, star_sign).expect("z2 context is always valid")
}

/// Functions on Z₂×Z₂ with hat fixing a, flipping b, and ξ = a.
pub fn z2z2_context(star_sign: StarSign) -> DoublingContext<FiniteAlgebra> {
    let base = FiniteAlgebra::z2z2();
    let xi = base.basis(1);
    DoublingContext::new(base, xi, star_sign).expect("z2z2 context is always valid")
}

// ---------------------------------------------------------------------------
// The plane instantiation, with operator sugar and the plane-specific API.
// ---------------------------------------------------------------------------

/// An element of the anticommutative plane: a pair (p, q) of polynomials,
/// equal to embed(p) + embed(q)·X.
pub type PlaneElement = Doubled<PlaneAlgebra>;

impl PlaneElement {
    pub fn zero() -> Self {
        Doubled { first: PolyElement::zero(), second: PolyElement::zero() }
    }

    pub fn one() -> Self {
        Doubled { first: PolyElement::one(), second: PolyElement::zero() }
    }

    pub fn from_pair(first: PolyElement, second: PolyElement) -> Self {
        Doubled { first, second }
    }

    /// The inclusion of a commutative polynomial.
    pub fn embed(p: PolyElement) -> Self {
        Doubled { first: p, second: PolyElement::zero() }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Self::embed(PolyElement::constant(s))
    }

    /// The generator X = (0, 1).
    pub fn gen_x() -> Self {
        Doubled { first: PolyElement::zero(), second: PolyElement::one() }
    }

    /// The generator Y = (y, 0).
    pub fn gen_y() -> Self {
        Self::embed(PolyElement::y())
    }

    /// The central element x = X².
    pub fn coord_x() -> Self {
        Self::embed(PolyElement::x())
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    /// (a,b)⋆ = (a⋆, ε·hat(b)⋆).
    pub fn star(&self, sign: StarSign) -> Self {
        let starred = self.second.hat().star();
        Doubled {
            first: self.first.star(),
            second: match sign {
                StarSign::Plus => starred,
                StarSign::Minus => -&starred,
            },
        }
    }

    /// The automorphism with X u = σ_X(u) X: (p, q) ↦ (hat p, hat q).
    pub fn sigma_x(&self) -> Self {
        Doubled { first: self.first.hat(), second: self.second.hat() }
    }

    /// The automorphism with Y u = σ_Y(u) Y: (p, q) ↦ (p, −q).
    pub fn sigma_y(&self) -> Self {
        Doubled { first: self.first.clone(), second: -&self.second }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Doubled { first: self.first.scale(s), second: self.second.scale(s) }
    }

    /// Central elements of the plane double are exactly (p, 0) with p even
    /// in y; validated against brute-force commutation in the test suite.
    pub fn is_central(&self) -> bool {
        self.second.is_zero() && self.first.is_even_in_y()
    }

    /// The unitarity conditions u u⋆ ± x v v⋆ = 1 and v hat(u)⋆ ± u hat(v)⋆ = 0,
    /// i.e. self · self⋆ = 1 with the chosen star.
    pub fn is_unitary(&self, sign: StarSign) -> bool {
        let product = self * &self.star(sign);
        product == PlaneElement::one()
    }

    /// Decomposes into normal-ordered generator words: Σ c_{kl} X^k Y^l.
    ///
    /// X^{2m} Y^n = (x^m y^n, 0) and X^{2m+1} Y^n = (0, (−1)^n x^m y^n).
    pub fn to_words(&self) -> Vec<((u32, u32), Scalar)> {
        let mut words: Vec<((u32, u32), Scalar)> = Vec::new();
        for (&(m, n), c) in self.first.terms() {
            words.push(((2 * m, n), c.clone()));
        }
        for (&(m, n), c) in self.second.terms() {
            let c = if n % 2 == 1 { -c.clone() } else { c.clone() };
            words.push(((2 * m + 1, n), c));
        }
        words.sort_by_key(|&((k, l), _)| (k + l, k));
        words
    }

    /// The word X^k Y^l as an element.
    pub fn from_word(k: u32, l: u32) -> Self {
        if k % 2 == 0 {
            Self::embed(PolyElement::monomial(k / 2, l, Scalar::one()))
        } else {
            let sign = if l % 2 == 1 { -Scalar::one() } else { Scalar::one() };
            Self::from_pair(PolyElement::zero(), PolyElement::monomial(k / 2, l, sign))
        }
    }

    pub fn from_words(words: impl IntoIterator<Item = ((u32, u32), Scalar)>) -> Self {
        let mut out = Self::zero();
        for ((k, l), c) in words {
            out = &out + &Self::from_word(k, l).scale(&c);
        }
        out
    }

    /// Total degree in the generator-word grading (deg X = deg Y = 1).
    pub fn word_degree(&self) -> u32 {
        self.to_words().iter().map(|&((k, l), _)| k + l).max().unwrap_or(0)
    }

    /// Renders in normal-ordered word form, e.g. `X^2 - 1/2*Y^2`.
    pub fn to_word_string(&self) -> String {
        let words = self.to_words();
        if words.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, ((k, l), c)) in words.iter().enumerate() {
            let rendered = crate::scalar::render_scalar(c);
            let (sign, mag) = if let Some(stripped) = rendered.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", rendered)
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (*k == 0 && *l == 0) {
                factors.push(mag);
            }
            if *k > 0 {
                factors.push(if *k == 1 { "X".into() } else { format!("X^{}", k) });
            }
            if *l > 0 {
                factors.push(if *l == 1 { "Y".into() } else { format!("Y^{}", l) });
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &PlaneElement {
    type Output = PlaneElement;
    fn add(self, rhs: &PlaneElement) -> PlaneElement {
        Doubled { first: &self.first + &rhs.first, second: &self.second + &rhs.second }
    }
}

impl Sub for &PlaneElement {
    type Output = PlaneElement;
    fn sub(self, rhs: &PlaneElement) -> PlaneElement {
        Doubled { first: &self.first - &rhs.first, second: &self.second - &rhs.second }
    }
}

impl Neg for &PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        Doubled { first: -&self.first, second: -&self.second }
    }
}

impl Mul for &PlaneElement {
    type Output = PlaneElement;
    /// The twisted product with ξ = x, hat = mirror symmetry.
    fn mul(self, rhs: &PlaneElement) -> PlaneElement {
        let xi = PolyElement::x();
        let first = &(&self.first * &rhs.first) + &(&xi * &(&self.second * &rhs.second.hat()));
        let second = &(&self.second * &rhs.first.hat()) + &(&self.first * &rhs.second);
        Doubled { first, second }
    }
}

use std::ops::{Add, Mul, Neg, Sub};
forward_value_ops!(PlaneElement);

impl fmt::Display for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pair({}, {})", self.first, self.second)
    }
}
