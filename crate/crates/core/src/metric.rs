//! Metrics on one-forms: middle-linear bimodule maps determined by their
//! values on generator differentials, and the exact constraint solver for
//! admissible components.
//!
//! Evaluation moves the first slot's coefficient into the second slot through
//! the rewrite table, contracts generator pairs against the components
//! g(dG, dH), and multiplies right coefficients out. Left covariance
//! g(a·ω, η) = a·g(ω, η) is not automatic; `metric_solve` turns it into an
//! exact linear system over the component coefficients and returns the full
//! solution space.

use std::collections::HashMap;

use crate::calculus::{words_up_to, FormGen, Gen, OneForm, RewriteTable};
use crate::doubling::PlaneElement;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// The four component values g(dG, dH).
#[derive(Clone, PartialEq, Debug)]
pub struct MetricSpec {
    pub g_xx: PlaneElement,
    pub g_yy: PlaneElement,
    pub g_xy: PlaneElement,
    pub g_yx: PlaneElement,
}

impl MetricSpec {
    /// The simplest admissible metric: g_XX = g_YY = 1, g_XY = g_YX = 0.
    pub fn identity() -> Self {
        MetricSpec {
            g_xx: PlaneElement::one(),
            g_yy: PlaneElement::one(),
            g_xy: PlaneElement::zero(),
            g_yx: PlaneElement::zero(),
        }
    }

    pub fn zero() -> Self {
        MetricSpec {
            g_xx: PlaneElement::zero(),
            g_yy: PlaneElement::zero(),
            g_xy: PlaneElement::zero(),
            g_yx: PlaneElement::zero(),
        }
    }

    pub fn component(&self, g: FormGen, h: FormGen) -> &PlaneElement {
        match (g, h) {
            (FormGen::DX, FormGen::DX) => &self.g_xx,
            (FormGen::DX, FormGen::DY) => &self.g_xy,
            (FormGen::DY, FormGen::DX) => &self.g_yx,
            (FormGen::DY, FormGen::DY) => &self.g_yy,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.g_xx.is_zero() && self.g_yy.is_zero() && self.g_xy.is_zero() && self.g_yx.is_zero()
    }
}

/// g(ω, η) = Σ_{G,H} g_{GH} · (a_G · η)_H where a_G is ω's G-coefficient.
pub fn metric_eval(
    omega: &OneForm,
    eta: &OneForm,
    g: &MetricSpec,
    table: &RewriteTable,
) -> PlaneElement {
    let mut out = PlaneElement::zero();
    for slot in [FormGen::DX, FormGen::DY] {
        let coeff = omega.component(slot);
        if coeff.is_zero() {
            continue;
        }
        let moved = table.left_multiply(coeff, eta);
        for h in [FormGen::DX, FormGen::DY] {
            let comp = moved.component(h);
            if comp.is_zero() {
                continue;
            }
            out = &out + &(g.component(slot, h) * comp);
        }
    }
    out
}

/// The solution space of the covariance constraints at a degree bound,
/// reported as a basis of component quadruples.
#[derive(Clone, Debug)]
pub struct MetricSolution {
    pub max_degree: u32,
    pub basis: Vec<MetricSpec>,
}

impl MetricSolution {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero_space(&self) -> bool {
        self.basis.is_empty()
    }
}

// Component slots in unknown-vector order.
const SLOTS: [(FormGen, FormGen); 4] = [
    (FormGen::DX, FormGen::DX),
    (FormGen::DY, FormGen::DY),
    (FormGen::DX, FormGen::DY),
    (FormGen::DY, FormGen::DX),
];

/// Solves the exact linear system expressing g(g·dG, dH) = g·g(dG, dH) for
/// both algebra generators and all symbol pairs, over components with
/// word-degree ≤ max_degree.
pub fn metric_solve(table: &RewriteTable, max_degree: u32) -> MetricSolution {
    metric_solve_with(table, max_degree, &[])
}

/// Same as `metric_solve`, with extra linear conditions on the components
/// (used to cut out sub-sectors of the solution space).
pub fn metric_solve_with(
    table: &RewriteTable,
    max_degree: u32,
    extra_conditions: &[ExtraCondition],
) -> MetricSolution {
    let words = words_up_to(max_degree);
    let per_slot = words.len();
    let unknowns = 4 * per_slot;

    // For each constraint (g, G, H) the equation is
    //     Σ_K g_{K,L}·(t_K·dH)_L − g·g_{G,H} = 0   where g·dG = Σ_K dK·t_K;
    // expanding each unknown component over the word basis and collecting the
    // coefficients of the resulting element words gives the linear system.
    let mut equations: Vec<HashMap<usize, Scalar>> = Vec::new();
    let mut eq_index: HashMap<(usize, (u32, u32)), usize> = HashMap::new();

    let add_entry = |equations: &mut Vec<HashMap<usize, Scalar>>,
                         eq_index: &mut HashMap<(usize, (u32, u32)), usize>,
                         constraint_id: usize,
                         word: (u32, u32),
                         col: usize,
                         c: Scalar| {
        let row = *eq_index.entry((constraint_id, word)).or_insert_with(|| {
            equations.push(HashMap::new());
            equations.len() - 1
        });
        let entry = equations[row].entry(col).or_insert_with(num_traits::Zero::zero);
        *entry = entry.clone() + c;
    };

    let gens = [
        (Gen::X, PlaneElement::gen_x()),
        (Gen::Y, PlaneElement::gen_y()),
    ];

    for (gen_idx, (gen, gen_elem)) in gens.iter().enumerate() {
        for (pair_idx, &(slot_g, slot_h)) in SLOTS.iter().enumerate() {
            let constraint_id = gen_idx * 4 + pair_idx;
            let rule = table.rule(*gen, slot_g);
            // Precompute (t_K·dH)_L for K ∈ {X, Y}.
            let dh = basis_form(slot_h);
            let moved_x = table.left_multiply(&rule.c_x, &dh);
            let moved_y = table.left_multiply(&rule.c_y, &dh);

            for (slot_idx, &(us_g, us_h)) in SLOTS.iter().enumerate() {
                for (w_idx, &(k, l)) in words.iter().enumerate() {
                    let col = slot_idx * per_slot + w_idx;
                    let unknown = PlaneElement::from_word(k, l);

                    // Contribution of this unknown component to the equation.
                    let mut lhs = PlaneElement::zero();
                    for (kk, moved) in [(FormGen::DX, &moved_x), (FormGen::DY, &moved_y)] {
                        if us_g == kk {
                            let piece = moved.component(us_h);
                            if !piece.is_zero() {
                                lhs = &lhs + &(&unknown * piece);
                            }
                        }
                    }
                    if us_g == slot_g && us_h == slot_h {
                        lhs = &lhs - &(gen_elem * &unknown);
                    }
                    for (word, c) in lhs.to_words() {
                        add_entry(&mut equations, &mut eq_index, constraint_id, word, col, c);
                    }
                }
            }
        }
    }

    for (cond_idx, cond) in extra_conditions.iter().enumerate() {
        for slot_idx in 0..SLOTS.len() {
            for (w_idx, &(k, l)) in words.iter().enumerate() {
                let col = slot_idx * per_slot + w_idx;
                let unknown = PlaneElement::from_word(k, l);
                let image = (cond.map)(slot_idx, &unknown);
                for (word, c) in image.to_words() {
                    add_entry(&mut equations, &mut eq_index, 1000 + cond_idx, word, col, c);
                }
            }
        }
    }

    let mut matrix = Matrix::zero(equations.len().max(1), unknowns);
    for (r, eq) in equations.iter().enumerate() {
        for (&c, v) in eq {
            matrix.set(r, c, v.clone());
        }
    }

    let basis = matrix
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut components = [
                PlaneElement::zero(),
                PlaneElement::zero(),
                PlaneElement::zero(),
                PlaneElement::zero(),
            ];
            for (slot_idx, comp) in components.iter_mut().enumerate() {
                let coeffs = &v[slot_idx * per_slot..(slot_idx + 1) * per_slot];
                *comp = PlaneElement::from_words(
                    coeffs.iter().cloned().enumerate().map(|(i, c)| (words[i], c)),
                );
            }
            let [g_xx, g_yy, g_xy, g_yx] = components;
            MetricSpec { g_xx, g_yy, g_xy, g_yx }
        })
        .collect();

    MetricSolution { max_degree, basis }
}

/// A linear condition on the components: slot index (in `SLOTS` order) and
/// unknown basis element ↦ contribution to an element that must vanish.
pub struct ExtraCondition {
    pub map: Box<dyn Fn(usize, &PlaneElement) -> PlaneElement>,
}

/// Central-diagonal sector: adds the conditions [g_XX, X] = [g_XX, Y] = 0 and
/// the same for g_YY, i.e. restricts to solutions with central diagonals.
pub fn central_diagonal_conditions() -> Vec<ExtraCondition> {
    let commutator_conditions = |slot: usize| ExtraCondition {
        map: Box::new(move |s, u: &PlaneElement| {
            if s != slot {
                return PlaneElement::zero();
            }
            let x_gen = PlaneElement::gen_x();
            let com_x = &(u * &x_gen) - &(&x_gen * u);
            com_x
        }),
    };
    let commutator_conditions_y = |slot: usize| ExtraCondition {
        map: Box::new(move |s, u: &PlaneElement| {
            if s != slot {
                return PlaneElement::zero();
            }
            let y_gen = PlaneElement::gen_y();
            &(u * &y_gen) - &(&y_gen * u)
        }),
    };
    vec![
        commutator_conditions(0),
        commutator_conditions_y(0),
        commutator_conditions(1),
        commutator_conditions_y(1),
    ]
}

/// If u = X·Y·f for a central f, returns f. The off-diagonal components of
/// admissible metrics have this shape: first slot zero, second slot odd in y.
pub fn off_diagonal_factor(u: &PlaneElement) -> Option<PlaneElement> {
    if !u.first.is_zero() {
        return None;
    }
    if u.second.is_zero() {
        return Some(PlaneElement::zero());
    }
    if !u.second.is_odd_in_y() {
        return None;
    }
    // X·Y·embed(c) = (0, −y·c)  ⇒  c = −(second / y).
    let c = (-&u.second).div_y()?;
    let f = PlaneElement::embed(c);
    if f.is_central() {
        Some(f)
    } else {
        None
    }
}

fn basis_form(h: FormGen) -> OneForm {
    match h {
        FormGen::DX => OneForm::dx(PlaneElement::one()),
        FormGen::DY => OneForm::dy(PlaneElement::one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::CalculusSpec;
    use crate::poly::PolyElement;
    use crate::scalar::from_int;

    #[test]
    fn component_readout() {
        let t = RewriteTable::variant_a();
        let g = MetricSpec::identity();
        let got = metric_eval(
            &OneForm::dx(PlaneElement::one()),
            &OneForm::dx(PlaneElement::one()),
            &g,
            &t,
        );
        assert_eq!(got, PlaneElement::one());
        let zero = metric_eval(
            &OneForm::dx(PlaneElement::gen_x()),
            &OneForm::dy(PlaneElement::one()),
            &g,
            &t,
        );
        assert!(zero.is_zero());
    }

    #[test]
    fn middle_linearity_both_routes() {
        let t = RewriteTable::variant_a();
        let g = MetricSpec::identity();
        let a = PlaneElement::from_pair(PolyElement::x(), PolyElement::y());
        let omega = OneForm { c_x: PlaneElement::gen_y(), c_y: PlaneElement::one() };
        let eta = OneForm { c_x: PlaneElement::one(), c_y: PlaneElement::gen_x() };
        let lhs = metric_eval(&omega.mul_right(&a), &eta, &g, &t);
        let rhs = metric_eval(&omega, &t.left_multiply(&a, &eta), &g, &t);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn variant_c_metric_vanishes() {
        for degree in 1..=3 {
            let sol = metric_solve(&CalculusSpec::c(from_int(1)).table(), degree);
            assert!(sol.is_zero_space(), "degree {}: dim {}", degree, sol.dimension());
        }
    }

    #[test]
    fn variant_a_admits_identity_metric() {
        let t = RewriteTable::variant_a();
        let sol = metric_solve(&t, 2);
        assert!(!sol.is_zero_space());
        // Identity metric satisfies all constraints: check covariance directly.
        let g = MetricSpec::identity();
        for gen in [PlaneElement::gen_x(), PlaneElement::gen_y()] {
            for omega in [basis_form(FormGen::DX), basis_form(FormGen::DY)] {
                for eta in [basis_form(FormGen::DX), basis_form(FormGen::DY)] {
                    let lhs = metric_eval(&t.left_multiply(&gen, &omega), &eta, &g, &t);
                    let rhs = &gen * &metric_eval(&omega, &eta, &g, &t);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn variant_a_solution_shapes() {
        let t = RewriteTable::variant_a();
        let sol = metric_solve(&t, 3);
        for m in &sol.basis {
            assert!(m.g_xx.is_central(), "g_XX not central: {}", m.g_xx);
            assert!(m.g_yy.is_central(), "g_YY not central: {}", m.g_yy);
            assert!(off_diagonal_factor(&m.g_xy).is_some(), "g_XY not XY·f: {}", m.g_xy);
            assert!(off_diagonal_factor(&m.g_yx).is_some(), "g_YX not XY·f: {}", m.g_yx);
        }
    }

    #[test]
    fn off_diagonal_factor_round_trip() {
        let t = RewriteTable::variant_a();
        let f = PlaneElement::embed(PolyElement::from_terms([
            ((1, 0), from_int(2)),
            ((0, 2), from_int(-1)),
        ]));
        assert!(f.is_central());
        let xy = &PlaneElement::gen_x() * &PlaneElement::gen_y();
        let u = &xy * &f;
        let recovered = off_diagonal_factor(&u).expect("factor exists");
        assert_eq!(recovered, f);
        let _ = t;
    }
}
