//! First- and second-order differential calculus on the anticommutative plane.
//!
//! One-forms are kept in normal form dX·c_X + dY·c_Y with coefficients on the
//! right. A rewrite table expands g·dh for each algebra generator g and form
//! symbol dh; moving a general element through a form symbol walks its
//! normal-ordered generator words letter by letter. Three tables are
//! admissible (variants A, B, C); the differential is computed recursively by
//! the Leibniz rule, with the closed form for variant A available as an
//! independent route. Two-forms collapse onto the single component dX∧dY·c
//! via dX∧dX = dY∧dY = 0 and dX∧dY = dY∧dX.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::One;

use crate::doubling::PlaneElement;
use crate::poly::{Derivation, PolyElement};
use crate::scalar::{from_int, Scalar};

/// Algebra generators of the plane double.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    X,
    Y,
}

/// Form symbols.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FormGen {
    DX,
    DY,
}

/// dX·c_X + dY·c_Y with right coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct OneForm {
    pub c_x: PlaneElement,
    pub c_y: PlaneElement,
}

impl OneForm {
    pub fn zero() -> Self {
        OneForm { c_x: PlaneElement::zero(), c_y: PlaneElement::zero() }
    }

    pub fn dx(c: PlaneElement) -> Self {
        OneForm { c_x: c, c_y: PlaneElement::zero() }
    }

    pub fn dy(c: PlaneElement) -> Self {
        OneForm { c_x: PlaneElement::zero(), c_y: c }
    }

    pub fn component(&self, g: FormGen) -> &PlaneElement {
        match g {
            FormGen::DX => &self.c_x,
            FormGen::DY => &self.c_y,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c_x.is_zero() && self.c_y.is_zero()
    }

    /// Right module action: (dG·c)·a = dG·(c·a).
    pub fn mul_right(&self, a: &PlaneElement) -> Self {
        OneForm { c_x: &self.c_x * a, c_y: &self.c_y * a }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        OneForm { c_x: self.c_x.scale(s), c_y: self.c_y.scale(s) }
    }
}

impl Add for &OneForm {
    type Output = OneForm;
    fn add(self, rhs: &OneForm) -> OneForm {
        OneForm { c_x: &self.c_x + &rhs.c_x, c_y: &self.c_y + &rhs.c_y }
    }
}

impl Sub for &OneForm {
    type Output = OneForm;
    fn sub(self, rhs: &OneForm) -> OneForm {
        OneForm { c_x: &self.c_x - &rhs.c_x, c_y: &self.c_y - &rhs.c_y }
    }
}

impl Neg for &OneForm {
    type Output = OneForm;
    fn neg(self) -> OneForm {
        OneForm { c_x: -&self.c_x, c_y: -&self.c_y }
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.c_x.is_zero() {
            parts.push(format!("dX·{}", self.c_x));
        }
        if !self.c_y.is_zero() {
            parts.push(format!("dY·{}", self.c_y));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// dX∧dY·c.
#[derive(Clone, PartialEq, Debug)]
pub struct TwoForm {
    pub c: PlaneElement,
}

impl TwoForm {
    pub fn zero() -> Self {
        TwoForm { c: PlaneElement::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn mul_right(&self, a: &PlaneElement) -> Self {
        TwoForm { c: &self.c * a }
    }
}

impl Add for &TwoForm {
    type Output = TwoForm;
    fn add(self, rhs: &TwoForm) -> TwoForm {
        TwoForm { c: &self.c + &rhs.c }
    }
}

impl Neg for &TwoForm {
    type Output = TwoForm;
    fn neg(self) -> TwoForm {
        TwoForm { c: -&self.c }
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "dX∧dY·{}", self.c)
        }
    }
}

/// The three admissible first-order structures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    A,
    B,
    C,
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Variant::A),
            "B" | "b" => Ok(Variant::B),
            "C" | "c" => Ok(Variant::C),
            other => Err(format!("unknown calculus variant `{}` (expected A, B or C)", other)),
        }
    }
}

/// Variant plus the parameter w (ignored by variant A).
#[derive(Clone, PartialEq, Debug)]
pub struct CalculusSpec {
    pub variant: Variant,
    pub w: Scalar,
}

impl CalculusSpec {
    pub fn a() -> Self {
        CalculusSpec { variant: Variant::A, w: num_traits::Zero::zero() }
    }

    pub fn b(w: Scalar) -> Self {
        CalculusSpec { variant: Variant::B, w }
    }

    pub fn c(w: Scalar) -> Self {
        CalculusSpec { variant: Variant::C, w }
    }

    pub fn table(&self) -> RewriteTable {
        match self.variant {
            Variant::A => RewriteTable::variant_a(),
            Variant::B => RewriteTable::variant_b(self.w.clone()),
            Variant::C => RewriteTable::variant_c(self.w.clone()),
        }
    }
}

/// Expansions of g·dh in normal form, for g ∈ {X, Y}, dh ∈ {dX, dY}.
#[derive(Clone, PartialEq, Debug)]
pub struct RewriteTable {
    pub x_dx: OneForm,
    pub x_dy: OneForm,
    pub y_dx: OneForm,
    pub y_dy: OneForm,
}

fn gx() -> PlaneElement {
    PlaneElement::gen_x()
}

fn gy() -> PlaneElement {
    PlaneElement::gen_y()
}

impl RewriteTable {
    /// (A): X dX = dX X, Y dX = −dX Y, X dY = −dY X, Y dY = dY Y.
    pub fn variant_a() -> Self {
        RewriteTable {
            x_dx: OneForm::dx(gx()),
            x_dy: OneForm::dy(-&gx()),
            y_dx: OneForm::dx(-&gy()),
            y_dy: OneForm::dy(gy()),
        }
    }

    /// (B): X dX = −dX X + w dY Y, Y dX = −dX Y, X dY = −dY X, Y dY = dY Y.
    pub fn variant_b(w: Scalar) -> Self {
        RewriteTable {
            x_dx: OneForm { c_x: -&gx(), c_y: gy().scale(&w) },
            x_dy: OneForm::dy(-&gx()),
            y_dx: OneForm::dx(-&gy()),
            y_dy: OneForm::dy(gy()),
        }
    }

    /// (C): X dX = −dX X + w dY Y, X dY = dY X, Y dX = −dX Y − 2 dY X,
    /// Y dY = dY Y.
    ///
    /// This is the unique bimodule-consistent completion of the variant with
    /// X dY = dY X; see `printed_c` for the alternative sign on dX·X, which
    /// fails `consistency_check`.
    pub fn variant_c(w: Scalar) -> Self {
        RewriteTable {
            x_dx: OneForm { c_x: -&gx(), c_y: gy().scale(&w) },
            x_dy: OneForm::dy(gx()),
            y_dx: OneForm { c_x: -&gy(), c_y: gx().scale(&from_int(-2)) },
            y_dy: OneForm::dy(gy()),
        }
    }

    /// The (C) rules with X dX = +dX X + w dY Y. Kept for comparison: this
    /// table does not define a bimodule ((XY+YX)·dX rewrites to −4x·dY).
    pub fn printed_c(w: Scalar) -> Self {
        RewriteTable {
            x_dx: OneForm { c_x: gx(), c_y: gy().scale(&w) },
            x_dy: OneForm::dy(gx()),
            y_dx: OneForm { c_x: -&gy(), c_y: gx().scale(&from_int(-2)) },
            y_dy: OneForm::dy(gy()),
        }
    }

    /// Variant A with the sign of Y dX flipped; fails the Leibniz
    /// compatibility check against XY + YX = 0.
    pub fn perturbed_a() -> Self {
        RewriteTable { y_dx: OneForm::dx(gy()), ..RewriteTable::variant_a() }
    }

    pub fn rule(&self, g: Gen, h: FormGen) -> &OneForm {
        match (g, h) {
            (Gen::X, FormGen::DX) => &self.x_dx,
            (Gen::X, FormGen::DY) => &self.x_dy,
            (Gen::Y, FormGen::DX) => &self.y_dx,
            (Gen::Y, FormGen::DY) => &self.y_dy,
        }
    }

    /// g·(dX·c_X + dY·c_Y) in normal form.
    pub fn gen_act(&self, g: Gen, form: &OneForm) -> OneForm {
        let mut out = OneForm::zero();
        for h in [FormGen::DX, FormGen::DY] {
            let coeff = form.component(h);
            if coeff.is_zero() {
                continue;
            }
            out = &out + &self.rule(g, h).mul_right(coeff);
        }
        out
    }

    fn word_act(&self, k: u32, l: u32, form: &OneForm) -> OneForm {
        let mut out = form.clone();
        for _ in 0..l {
            out = self.gen_act(Gen::Y, &out);
        }
        for _ in 0..k {
            out = self.gen_act(Gen::X, &out);
        }
        out
    }

    /// Moves a through the form symbols: a·ω in normal form.
    pub fn left_multiply(&self, a: &PlaneElement, form: &OneForm) -> OneForm {
        let mut out = OneForm::zero();
        for ((k, l), c) in a.to_words() {
            out = &out + &self.word_act(k, l, form).scale(&c);
        }
        out
    }

    /// d on elements, by the Leibniz rule over normal-ordered words.
    pub fn differential(&self, a: &PlaneElement) -> OneForm {
        let mut memo: HashMap<(u32, u32), OneForm> = HashMap::new();
        let mut out = OneForm::zero();
        for ((k, l), c) in a.to_words() {
            let d = self.d_word(k, l, &mut memo).clone();
            out = &out + &d.scale(&c);
        }
        out
    }

    fn d_word<'m>(
        &self,
        k: u32,
        l: u32,
        memo: &'m mut HashMap<(u32, u32), OneForm>,
    ) -> &'m OneForm {
        if !memo.contains_key(&(k, l)) {
            let value = if k == 0 && l == 0 {
                OneForm::zero()
            } else if l > 0 {
                // d(w·Y) = d(w)·Y + w·dY
                let prefix = self.d_word(k, l - 1, memo).clone();
                let w = PlaneElement::from_word(k, l - 1);
                &prefix.mul_right(&gy()) + &self.left_multiply(&w, &OneForm::dy(PlaneElement::one()))
            } else {
                // d(w·X) = d(w)·X + w·dX
                let prefix = self.d_word(k - 1, 0, memo).clone();
                let w = PlaneElement::from_word(k - 1, 0);
                &prefix.mul_right(&gx()) + &self.left_multiply(&w, &OneForm::dx(PlaneElement::one()))
            };
            memo.insert((k, l), value);
        }
        &memo[&(k, l)]
    }

    /// ω∧η: moves ω's coefficients through η's symbols, then collapses the
    /// symbol pairs with dX∧dX = dY∧dY = 0 and dX∧dY = dY∧dX.
    pub fn wedge(&self, omega: &OneForm, eta: &OneForm) -> TwoForm {
        let from_dx = self.left_multiply(&omega.c_x, eta);
        let from_dy = self.left_multiply(&omega.c_y, eta);
        TwoForm { c: &from_dx.c_y + &from_dy.c_x }
    }

    /// d on one-forms with the graded convention d(dG·c) = −dG ∧ d(c).
    pub fn d_one_form(&self, form: &OneForm) -> TwoForm {
        let d_cx = self.differential(&form.c_x);
        let d_cy = self.differential(&form.c_y);
        TwoForm { c: -&(&d_cx.c_y + &d_cy.c_x) }
    }

    /// a·(dX∧dY·c) in normal form.
    pub fn two_form_left_multiply(&self, a: &PlaneElement, form: &TwoForm) -> TwoForm {
        let mut out = TwoForm::zero();
        for ((k, l), coeff) in a.to_words() {
            let mut cur = form.clone();
            for _ in 0..l {
                cur = self.gen_act_two_form(Gen::Y, &cur);
            }
            for _ in 0..k {
                cur = self.gen_act_two_form(Gen::X, &cur);
            }
            out = &out + &TwoForm { c: cur.c.scale(&coeff) };
        }
        out
    }

    fn gen_act_two_form(&self, g: Gen, form: &TwoForm) -> TwoForm {
        // g·(dX∧dY·c) = (g·dX)∧(dY·c), then collapse.
        let rule = self.rule(g, FormGen::DX);
        let dy_c = OneForm::dy(form.c.clone());
        let via_dx = self.left_multiply(&rule.c_x, &dy_c);
        let via_dy = self.left_multiply(&rule.c_y, &dy_c);
        TwoForm { c: &via_dx.c_y + &via_dy.c_x }
    }

    /// Exact basis of {a : word-degree(a) ≤ max_degree, d a = 0}.
    pub fn kernel_of_d(&self, max_degree: u32) -> Vec<PlaneElement> {
        let words = words_up_to(max_degree);
        let images: Vec<OneForm> = words
            .iter()
            .map(|&(k, l)| self.differential(&PlaneElement::from_word(k, l)))
            .collect();

        // Index every word appearing in any image component.
        let mut coord_index: HashMap<(FormGen, (u32, u32)), usize> = HashMap::new();
        for image in &images {
            for h in [FormGen::DX, FormGen::DY] {
                for ((k, l), _) in image.component(h).to_words() {
                    let next = coord_index.len();
                    coord_index.entry((h, (k, l))).or_insert(next);
                }
            }
        }
        let rows = coord_index.len().max(1);
        let mut matrix = crate::linalg::Matrix::zero(rows, words.len());
        for (col, image) in images.iter().enumerate() {
            for h in [FormGen::DX, FormGen::DY] {
                for ((k, l), c) in image.component(h).to_words() {
                    let row = coord_index[&(h, (k, l))];
                    matrix.set(row, col, c);
                }
            }
        }

        matrix
            .nullspace()
            .into_iter()
            .map(|v| {
                let elem = PlaneElement::from_words(
                    v.into_iter().enumerate().map(|(i, c)| (words[i], c)),
                );
                monic(elem)
            })
            .collect()
    }

    /// Verifies that the table defines a differential calculus on the
    /// quotient by XY + YX: the left action kills the relation and is
    /// compositional, the rewrite of d(XY + YX) vanishes, and the restriction
    /// relations (c1)–(c2) for the commutative pair (x, Y) hold.
    pub fn consistency_check(&self, max_degree: u32) -> ConsistencyReport {
        let mut failures = Vec::new();
        let x_elem = PlaneElement::gen_x();
        let y_elem = PlaneElement::gen_y();

        for h in [FormGen::DX, FormGen::DY] {
            let base = match h {
                FormGen::DX => OneForm::dx(PlaneElement::one()),
                FormGen::DY => OneForm::dy(PlaneElement::one()),
            };
            let xy = self.gen_act(Gen::X, &self.gen_act(Gen::Y, &base));
            let yx = self.gen_act(Gen::Y, &self.gen_act(Gen::X, &base));
            let total = &xy + &yx;
            if !total.is_zero() {
                failures.push(ConsistencyFailure {
                    law: "relation action".into(),
                    detail: format!("(XY + YX)·d{:?} = {}", h, total),
                });
            }
        }

        let words = words_up_to(max_degree);
        'outer: for &(k1, l1) in &words {
            for &(k2, l2) in &words {
                let a = PlaneElement::from_word(k1, l1);
                let b = PlaneElement::from_word(k2, l2);
                let ab = &a * &b;
                for base in [OneForm::dx(PlaneElement::one()), OneForm::dy(PlaneElement::one())] {
                    let joint = self.left_multiply(&ab, &base);
                    let nested = self.left_multiply(&a, &self.left_multiply(&b, &base));
                    if joint != nested {
                        failures.push(ConsistencyFailure {
                            law: "compositionality".into(),
                            detail: format!(
                                "(X^{}Y^{} · X^{}Y^{})·{} ≠ nested action",
                                k1, l1, k2, l2, base
                            ),
                        });
                        break 'outer;
                    }
                }
            }
        }

        // d(XY + YX) = dX·Y + X·dY + dY·X + Y·dX must rewrite to zero.
        let d_relation = &(&OneForm::dx(PlaneElement::one()).mul_right(&y_elem)
            + &self.gen_act(Gen::X, &OneForm::dy(PlaneElement::one())))
            + &(&OneForm::dy(PlaneElement::one()).mul_right(&x_elem)
                + &self.gen_act(Gen::Y, &OneForm::dx(PlaneElement::one())));
        if !d_relation.is_zero() {
            failures.push(ConsistencyFailure {
                law: "relation Leibniz".into(),
                detail: format!("d(XY + YX) = {}", d_relation),
            });
        }

        // (c1): Y dY = dY Y and x dY = dY x.
        let x_central = PlaneElement::coord_x();
        let c1a = &self.gen_act(Gen::Y, &OneForm::dy(PlaneElement::one()))
            - &OneForm::dy(y_elem.clone());
        let c1b = &self.left_multiply(&x_central, &OneForm::dy(PlaneElement::one()))
            - &OneForm::dy(x_central.clone());
        for (name, diff) in [("Y dY = dY Y", c1a), ("x dY = dY x", c1b)] {
            if !diff.is_zero() {
                failures.push(ConsistencyFailure {
                    law: "restriction (c1)".into(),
                    detail: format!("{} violated by {}", name, diff),
                });
            }
        }

        // (c2): x dx = dx x and Y dx = dx Y, with dx = X dX + dX X.
        let dx_form = &self.gen_act(Gen::X, &OneForm::dx(PlaneElement::one()))
            + &OneForm::dx(x_elem.clone());
        let c2a = &self.left_multiply(&x_central, &dx_form) - &dx_form.mul_right(&x_central);
        let c2b = &self.left_multiply(&y_elem, &dx_form) - &dx_form.mul_right(&y_elem);
        for (name, diff) in [("x dx = dx x", c2a), ("Y dx = dx Y", c2b)] {
            if !diff.is_zero() {
                failures.push(ConsistencyFailure {
                    law: "restriction (c2)".into(),
                    detail: format!("{} violated by {}", name, diff),
                });
            }
        }

        ConsistencyReport { passed: failures.is_empty(), failures }
    }
}

/// The closed form of the variant-A differential:
/// d(ψ, φ) = dX·(hat φ + 2x ∂_x hat φ, 2 ∂_x hat ψ) + dY·(∂_y ψ, ∂_y φ).
///
/// Computed from base-algebra operations only; serves as an independent route
/// against the recursive-Leibniz engine.
pub fn closed_differential_a(a: &PlaneElement) -> OneForm {
    let psi = &a.first;
    let phi = &a.second;
    let hat_phi = phi.hat();
    let two_x = PolyElement::monomial(1, 0, from_int(2));
    let cx_first = &hat_phi + &(&two_x * &hat_phi.derivative(Derivation::X));
    let cx_second = psi.hat().derivative(Derivation::X).scale(&from_int(2));
    let cy_first = psi.derivative(Derivation::Y);
    let cy_second = phi.derivative(Derivation::Y);
    OneForm {
        c_x: PlaneElement::from_pair(cx_first, cx_second),
        c_y: PlaneElement::from_pair(cy_first, cy_second),
    }
}

/// All normal-ordered words X^k Y^l with k + l ≤ max_degree, by degree.
pub fn words_up_to(max_degree: u32) -> Vec<(u32, u32)> {
    let mut words = Vec::new();
    for d in 0..=max_degree {
        for k in (0..=d).rev() {
            words.push((k, d - k));
        }
    }
    words
}

fn monic(elem: PlaneElement) -> PlaneElement {
    match elem.to_words().into_iter().find(|(_, c)| !num_traits::Zero::is_zero(c)) {
        Some((_, lead)) => elem.scale(&(Scalar::one() / lead)),
        None => elem,
    }
}

#[derive(Clone, Debug)]
pub struct ConsistencyFailure {
    pub law: String,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ConsistencyReport {
    pub passed: bool,
    pub failures: Vec<ConsistencyFailure>,
}

impl fmt::Display for ConsistencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "pass")
        } else {
            write!(f, "fail: ")?;
            let lines: Vec<String> =
                self.failures.iter().map(|x| format!("[{}] {}", x.law, x.detail)).collect();
            write!(f, "{}", lines.join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{from_ratio, ratio};
    use proptest::prelude::*;

    fn one_form_eq(a: &OneForm, b: &OneForm) -> bool {
        a == b
    }

    #[test]
    fn variant_a_left_action_examples() {
        let t = RewriteTable::variant_a();
        // Y·dX = dX·(−Y)
        let got = t.left_multiply(&gy(), &OneForm::dx(PlaneElement::one()));
        assert!(one_form_eq(&got, &OneForm::dx(-&gy())));
        // 1·ω = ω
        let omega = OneForm { c_x: gx(), c_y: gy() };
        assert_eq!(t.left_multiply(&PlaneElement::one(), &omega), omega);
    }

    #[test]
    fn variant_b_left_action_example() {
        let t = RewriteTable::variant_b(from_int(1).clone());
        let got = t.left_multiply(&gx(), &OneForm::dx(PlaneElement::one()));
        let expect = OneForm { c_x: -&gx(), c_y: gy() };
        assert_eq!(got, expect);
    }

    #[test]
    fn differential_of_generators() {
        for spec in [CalculusSpec::a(), CalculusSpec::b(from_int(2)), CalculusSpec::c(from_int(2))] {
            let t = spec.table();
            assert_eq!(t.differential(&gx()), OneForm::dx(PlaneElement::one()));
            assert_eq!(t.differential(&gy()), OneForm::dy(PlaneElement::one()));
            assert!(t.differential(&PlaneElement::one()).is_zero());
        }
    }

    #[test]
    fn differential_of_x_variant_a() {
        let t = RewriteTable::variant_a();
        let d = t.differential(&PlaneElement::coord_x());
        // d(x) = dX·(0, 2) = 2 dX·X
        let expect = OneForm::dx(PlaneElement::from_pair(
            PolyElement::zero(),
            PolyElement::constant(from_int(2)),
        ));
        assert_eq!(d, expect);
    }

    #[test]
    fn variant_b_kernel_element() {
        let w = from_int(2);
        let t = RewriteTable::variant_b(w.clone());
        // d(X² − (w/2) Y²) = 0
        let candidate = &(&gx() * &gx())
            - &(&gy() * &gy()).scale(&(w / from_int(2)));
        assert!(t.differential(&candidate).is_zero());
    }

    #[test]
    fn variant_c_kernel_element() {
        let w = from_ratio(-1, 2);
        let t = RewriteTable::variant_c(w.clone());
        let candidate = &(&gx() * &gx())
            - &(&gy() * &gy()).scale(&(w / from_int(2)));
        assert!(t.differential(&candidate).is_zero());
    }

    #[test]
    fn sigma_twist_is_variant_a_action() {
        // For variant A: a·(dX·c) = dX·(σ_X(a)·c), a·(dY·c) = dY·(σ_Y(a)·c).
        let t = RewriteTable::variant_a();
        let a = PlaneElement::from_pair(
            PolyElement::from_terms([((1, 1), from_int(3)), ((0, 0), from_int(1))]),
            PolyElement::y(),
        );
        let c = PlaneElement::from_pair(PolyElement::x(), PolyElement::one());
        let omega = OneForm { c_x: c.clone(), c_y: c.clone() };
        let got = t.left_multiply(&a, &omega);
        let expect = OneForm { c_x: &a.sigma_x() * &c, c_y: &a.sigma_y() * &c };
        assert_eq!(got, expect);
    }

    #[test]
    fn wedge_examples() {
        let t = RewriteTable::variant_a();
        let c = PlaneElement::from_pair(PolyElement::x(), PolyElement::y());
        // dX ∧ dX·c = 0
        let z = t.wedge(&OneForm::dx(PlaneElement::one()), &OneForm::dx(c.clone()));
        assert!(z.is_zero());
        // (dX·a)∧(dY·b) = dX∧dY·(σ_Y(a)·b) under variant A
        let a = PlaneElement::from_pair(PolyElement::y(), PolyElement::one());
        let b = c;
        let got = t.wedge(&OneForm::dx(a.clone()), &OneForm::dy(b.clone()));
        assert_eq!(got.c, &a.sigma_y() * &b);
        // linearity: 0 ∧ η = 0
        assert!(t.wedge(&OneForm::zero(), &OneForm::dy(b)).is_zero());
    }

    #[test]
    fn d_on_forms_examples() {
        let t = RewriteTable::variant_a();
        assert!(t.d_one_form(&OneForm::dx(PlaneElement::one())).is_zero());
        assert!(t.d_one_form(&OneForm::dy(PlaneElement::embed(PolyElement::y()))).is_zero());
    }

    #[test]
    fn d_squared_vanishes_variant_a() {
        let t = RewriteTable::variant_a();
        let samples = [
            PlaneElement::from_pair(
                PolyElement::from_terms([((2, 1), from_int(1)), ((0, 3), from_int(-2))]),
                PolyElement::from_terms([((1, 2), from_int(5))]),
            ),
            PlaneElement::from_word(3, 1),
            PlaneElement::from_pair(PolyElement::zero(), PolyElement::monomial(2, 2, from_int(1))),
        ];
        for u in &samples {
            assert!(t.d_one_form(&t.differential(u)).is_zero(), "d²({}) ≠ 0", u);
        }
    }

    #[test]
    fn kernel_variant_a_is_constants() {
        let t = RewriteTable::variant_a();
        let basis = t.kernel_of_d(4);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], PlaneElement::one());
    }

    #[test]
    fn kernel_variant_b_degree_two() {
        let t = RewriteTable::variant_b(from_int(2));
        let basis = t.kernel_of_d(2);
        assert_eq!(basis.len(), 2);
        let expected = &(&gx() * &gx()) - &(&gy() * &gy());
        assert!(basis.contains(&PlaneElement::one()));
        assert!(basis.contains(&expected), "basis: {:?}", basis);
    }

    #[test]
    fn consistency_pass_and_fail() {
        assert!(RewriteTable::variant_a().consistency_check(3).passed);
        assert!(RewriteTable::variant_b(from_int(1)).consistency_check(3).passed);
        assert!(RewriteTable::variant_c(from_ratio(3, 2)).consistency_check(3).passed);

        let perturbed = RewriteTable::perturbed_a().consistency_check(3);
        assert!(!perturbed.passed);
        assert!(perturbed.failures.iter().any(|f| f.law == "relation Leibniz"));

        let printed = RewriteTable::printed_c(from_int(1)).consistency_check(3);
        assert!(!printed.passed);
        assert!(printed.failures.iter().any(|f| f.law == "relation action"));
    }

    #[test]
    fn closed_form_matches_engine_on_low_monomials() {
        let t = RewriteTable::variant_a();
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                let mono = PolyElement::monomial(m, n, from_int(1));
                for elem in [
                    PlaneElement::embed(mono.clone()),
                    PlaneElement::from_pair(PolyElement::zero(), mono),
                ] {
                    assert_eq!(t.differential(&elem), closed_differential_a(&elem), "{}", elem);
                }
            }
        }
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::new(ratio(n, d), ratio(0, 1)))
    }

    fn arb_poly(max_deg: u32) -> impl Strategy<Value = PolyElement> {
        proptest::collection::vec(((0..=max_deg, 0..=max_deg), arb_scalar()), 0..4).prop_map(
            move |terms| {
                PolyElement::from_terms(terms.into_iter().filter(|&((m, n), _)| m + n <= max_deg))
            },
        )
    }

    fn arb_plane(max_deg: u32) -> impl Strategy<Value = PlaneElement> {
        (arb_poly(max_deg), arb_poly(max_deg)).prop_map(|(p, q)| PlaneElement::from_pair(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn leibniz_rule(a in arb_plane(2), b in arb_plane(2)) {
            for spec in [CalculusSpec::a(), CalculusSpec::b(from_int(1)), CalculusSpec::c(from_int(2))] {
                let t = spec.table();
                let lhs = t.differential(&(&a * &b));
                let rhs = &t.differential(&a).mul_right(&b) + &t.left_multiply(&a, &t.differential(&b));
                prop_assert_eq!(&lhs, &rhs, "variant {:?}", spec.variant);
            }
        }

        #[test]
        fn closed_form_agrees_with_engine(a in arb_plane(3)) {
            let t = RewriteTable::variant_a();
            prop_assert_eq!(t.differential(&a), closed_differential_a(&a));
        }

        #[test]
        fn left_action_is_compositional(a in arb_plane(2), b in arb_plane(2)) {
            for table in [RewriteTable::variant_a(), RewriteTable::variant_b(from_int(1)), RewriteTable::variant_c(from_int(1))] {
                let omega = OneForm::dx(PlaneElement::one());
                let joint = table.left_multiply(&(&a * &b), &omega);
                let nested = table.left_multiply(&a, &table.left_multiply(&b, &omega));
                prop_assert_eq!(joint, nested);
            }
        }

        #[test]
        fn embedded_even_elements_see_commutative_calculus(p in arb_poly(2)) {
            // For a = (p, 0) with p even in y, the dY slot obeys a dY = dY a.
            let t = RewriteTable::variant_a();
            let even = &p * &p.hat(); // even in y by construction? no: p·hat p is hat-invariant
            let a = PlaneElement::embed(even.clone());
            if a.is_central() {
                let lhs = t.left_multiply(&a, &OneForm::dy(PlaneElement::one()));
                prop_assert_eq!(lhs, OneForm::dy(a));
            }
        }
    }
}
