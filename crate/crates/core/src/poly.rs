//! Commutative polynomials in x, y over the Gaussian rationals.
//!
//! `PolyElement` is the base-algebra element for the plane: a sparse map from
//! exponent pairs (m, n) to nonzero coefficients, so canonical form is unique
//! and equality is structural. The module carries the mirror automorphism
//! (y → −y), the star (coefficient conjugation), formal partial derivatives
//! and the exact hat-invariant integral over [−1, 1]².

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::{self, conj, from_int, from_ratio, render_scalar, Scalar};

/// Direction of a formal partial derivative on the base algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Derivation {
    X,
    Y,
}

/// Σ c_{mn} x^m y^n with no explicitly stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyElement {
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl PolyElement {
    pub fn zero() -> Self {
        PolyElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, from_int(1))
    }

    /// The generator x.
    pub fn x() -> Self {
        Self::monomial(1, 0, from_int(1))
    }

    /// The generator y.
    pub fn y() -> Self {
        Self::monomial(0, 1, from_int(1))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(m: u32, n: u32, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((m, n), c);
        }
        PolyElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Scalar)>) -> Self {
        let mut p = Self::zero();
        for ((m, n), c) in terms {
            p.add_term(m, n, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: u32, n: u32) -> Scalar {
        self.terms.get(&(m, n)).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, m: u32, n: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((m, n)).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        PolyElement {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Total degree max(m + n), or 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(m, n)| m + n).max().unwrap_or(0)
    }

    /// The mirror automorphism: x → x, y → −y.
    pub fn hat(&self) -> Self {
        PolyElement {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), c)| {
                    let c = if n % 2 == 1 { -c.clone() } else { c.clone() };
                    ((m, n), c)
                })
                .collect(),
        }
    }

    /// Antilinear involution: conjugates coefficients, fixes x and y.
    pub fn star(&self) -> Self {
        PolyElement {
            terms: self.terms.iter().map(|(&e, c)| (e, conj(c))).collect(),
        }
    }

    /// True iff hat(p) = p, i.e. every monomial is even in y.
    pub fn is_even_in_y(&self) -> bool {
        self.terms.keys().all(|&(_, n)| n % 2 == 0)
    }

    /// True iff hat(p) = −p, i.e. every monomial is odd in y.
    pub fn is_odd_in_y(&self) -> bool {
        self.terms.keys().all(|&(_, n)| n % 2 == 1)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, d: Derivation) -> Self {
        let mut out = Self::zero();
        for (&(m, n), c) in &self.terms {
            match d {
                Derivation::X => {
                    if m > 0 {
                        out.add_term(m - 1, n, c.clone() * from_int(m as i64));
                    }
                }
                Derivation::Y => {
                    if n > 0 {
                        out.add_term(m, n - 1, c.clone() * from_int(n as i64));
                    }
                }
            }
        }
        out
    }

    /// Exact integral over the square [−1, 1]²; this is the hat-invariant
    /// trace of the base algebra. x^m y^n ↦ 4/((m+1)(n+1)) for m, n both
    /// even, 0 otherwise.
    pub fn integrate(&self) -> Scalar {
        let mut total = Scalar::zero();
        for (&(m, n), c) in &self.terms {
            if m % 2 == 0 && n % 2 == 0 {
                let weight = from_ratio(4, ((m + 1) * (n + 1)) as i64);
                total += c.clone() * weight;
            }
        }
        total
    }

    /// Exact division by y. Returns None if some monomial has no factor y.
    pub fn div_y(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (&(m, n), c) in &self.terms {
            if n == 0 {
                return None;
            }
            out.add_term(m, n - 1, c.clone());
        }
        Some(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Add for &PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: &PolyElement) -> PolyElement {
        let mut out = self.clone();
        for (&(m, n), c) in &rhs.terms {
            out.add_term(m, n, c.clone());
        }
        out
    }
}

impl Sub for &PolyElement {
    type Output = PolyElement;
    fn sub(self, rhs: &PolyElement) -> PolyElement {
        let mut out = self.clone();
        for (&(m, n), c) in &rhs.terms {
            out.add_term(m, n, -c.clone());
        }
        out
    }
}

impl Neg for &PolyElement {
    type Output = PolyElement;
    fn neg(self) -> PolyElement {
        PolyElement {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &PolyElement {
    type Output = PolyElement;
    fn mul(self, rhs: &PolyElement) -> PolyElement {
        let mut out = PolyElement::zero();
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &rhs.terms {
                out.add_term(m1 + m2, n1 + n2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_value_ops;

forward_value_ops!(PolyElement);

impl fmt::Display for PolyElement {
    /// Canonical rendering in the expression grammar, e.g. `x^2*y - 1/2*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first, then lexicographic.
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(m, n)| (std::cmp::Reverse(m + n), std::cmp::Reverse(m)));
        let mut first = true;
        for &&(m, n) in &keys {
            let c = &self.terms[&(m, n)];
            let rendered = render_scalar(c);
            let (sign, mag) = if let Some(stripped) = rendered.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", rendered)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || (m == 0 && n == 0) {
                factors.push(mag);
            }
            if m > 0 {
                factors.push(if m == 1 { "x".into() } else { format!("x^{}", m) });
            }
            if n > 0 {
                factors.push(if n == 1 { "y".into() } else { format!("y^{}", n) });
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// LaTeX rendering of a base polynomial.
pub fn render_poly_latex(p: &PolyElement) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut keys: Vec<&(u32, u32)> = p.terms.keys().collect();
    keys.sort_by_key(|&&(m, n)| (std::cmp::Reverse(m + n), std::cmp::Reverse(m)));
    let mut out = String::new();
    for (idx, &&(m, n)) in keys.iter().enumerate() {
        let c = &p.terms[&(m, n)];
        let rendered = scalar::render_scalar_latex(c);
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
        let mut body = String::new();
        if mag != "1" || (m == 0 && n == 0) {
            body.push_str(&mag);
        }
        if m > 0 {
            body.push_str(&if m == 1 { " x".into() } else { format!(" x^{{{}}}", m) });
        }
        if n > 0 {
            body.push_str(&if n == 1 { " y".into() } else { format!(" y^{{{}}}", n) });
        }
        out.push_str(body.trim_start());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::imaginary_unit;
    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(n, d, im)| {
            Scalar::new(scalar::ratio(n, d), scalar::ratio(im, 1))
        })
    }

    pub(crate) fn arb_poly(max_deg: u32) -> impl Strategy<Value = PolyElement> {
        proptest::collection::vec(((0..=max_deg, 0..=max_deg), arb_scalar()), 0..5).prop_map(
            move |terms| {
                PolyElement::from_terms(
                    terms
                        .into_iter()
                        .filter(|&((m, n), _)| m + n <= max_deg)
                        .map(|((m, n), c)| ((m, n), c)),
                )
            },
        )
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&PolyElement::x() * &PolyElement::y(), PolyElement::monomial(1, 1, from_int(1)));
    }

    #[test]
    fn difference_of_squares() {
        let sum = &PolyElement::x() + &PolyElement::y();
        let diff = &PolyElement::x() - &PolyElement::y();
        let expect = &PolyElement::monomial(2, 0, from_int(1)) - &PolyElement::monomial(0, 2, from_int(1));
        assert_eq!(&sum * &diff, expect);
    }

    #[test]
    fn hat_flips_y() {
        assert_eq!(PolyElement::y().hat(), -&PolyElement::y());
        assert_eq!(PolyElement::x().hat(), PolyElement::x());
        let p = PolyElement::monomial(2, 3, from_int(1));
        assert_eq!(p.hat().hat(), p);
    }

    #[test]
    fn star_conjugates_coefficients() {
        let p = PolyElement::x().scale(&imaginary_unit());
        assert_eq!(p.star(), PolyElement::x().scale(&-imaginary_unit()));
        let q = &PolyElement::x() + &PolyElement::y().scale(&imaginary_unit());
        assert_eq!(q.star(), &PolyElement::x() - &PolyElement::y().scale(&imaginary_unit()));
    }

    #[test]
    fn power_rule() {
        let p = PolyElement::monomial(2, 1, from_int(1)); // x^2 y
        assert_eq!(p.derivative(Derivation::X), PolyElement::monomial(1, 1, from_int(2)));
        assert_eq!(PolyElement::x().derivative(Derivation::Y), PolyElement::zero());
    }

    // Independent route for the integral: iterated antiderivatives evaluated
    // at the endpoints, with no parity branching.
    fn integral_oracle(p: &PolyElement) -> Scalar {
        let mut total = Scalar::zero();
        for (&(m, n), c) in p.terms() {
            let fx = from_ratio(1 - (-1i64).pow(m + 1), (m + 1) as i64);
            let fy = from_ratio(1 - (-1i64).pow(n + 1), (n + 1) as i64);
            total += c.clone() * fx * fy;
        }
        total
    }

    #[test]
    fn integral_matches_antiderivative_oracle() {
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let p = PolyElement::monomial(m, n, from_int(1));
                assert_eq!(p.integrate(), integral_oracle(&p), "x^{} y^{}", m, n);
            }
        }
    }

    #[test]
    fn integral_frozen_values() {
        assert_eq!(PolyElement::one().integrate(), from_int(4));
        assert_eq!(PolyElement::y().integrate(), Scalar::zero());
        assert_eq!(PolyElement::monomial(2, 0, from_int(1)).integrate(), from_ratio(4, 3));
    }

    #[test]
    fn display_round_and_signs() {
        let p = &PolyElement::monomial(2, 1, from_int(2)) - &PolyElement::one();
        assert_eq!(p.to_string(), "2*x^2*y - 1");
        assert_eq!(PolyElement::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn unit_law(p in arb_poly(4)) {
            prop_assert_eq!(&p * &PolyElement::one(), p);
        }

        #[test]
        fn product_commutes_and_associates(
            p in arb_poly(3), q in arb_poly(3), r in arb_poly(3)
        ) {
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn hat_and_star_involutive_multiplicative(p in arb_poly(3), q in arb_poly(3)) {
            prop_assert_eq!(p.hat().hat(), p.clone());
            prop_assert_eq!(p.star().star(), p.clone());
            prop_assert_eq!((&p * &q).hat(), &p.hat() * &q.hat());
            prop_assert_eq!((&p * &q).star(), &p.star() * &q.star());
        }

        #[test]
        fn leibniz(p in arb_poly(4), q in arb_poly(4)) {
            let lhs = (&p * &q).derivative(Derivation::X);
            let rhs = &(&p.derivative(Derivation::X) * &q) + &(&p * &q.derivative(Derivation::X));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn trace_hat_invariant_star_covariant(p in arb_poly(5)) {
            prop_assert_eq!(p.hat().integrate(), p.integrate());
            prop_assert_eq!(p.star().integrate(), conj(&p.integrate()));
        }
    }
}
