//! Scalar and gauge field theory on the anticommutative plane: star on forms,
//! kinetic terms, the trace and action, connections, curvature, Yang–Mills
//! density and the potential term.

use crate::calculus::{CalculusSpec, OneForm, RewriteTable, TwoForm, Variant};
use crate::doubling::{PlaneElement, StarSign};
use crate::error::Error;
use crate::metric::{metric_eval, MetricSpec};
use crate::poly::{Derivation, PolyElement};
use crate::scalar::{from_int, Scalar};

/// How the star acts on one-form coefficients.
///
/// `Twisted` renormalizes c⋆·dG back to dG·σ_G(c⋆); it reproduces the
/// antihermiticity component conditions of the gauge sector exactly.
/// `Coefficientwise` conjugates in place and is kept for comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarConvention {
    Twisted,
    Coefficientwise,
}

impl std::str::FromStr for StarConvention {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "twisted" => Ok(StarConvention::Twisted),
            "coefficientwise" => Ok(StarConvention::Coefficientwise),
            other => Err(format!(
                "unknown star convention `{}` (expected twisted or coefficientwise)",
                other
            )),
        }
    }
}

/// Star on one-forms. Involutive in both conventions.
pub fn form_star(omega: &OneForm, sign: StarSign, convention: StarConvention) -> OneForm {
    match convention {
        StarConvention::Twisted => OneForm {
            c_x: omega.c_x.star(sign).sigma_x(),
            c_y: omega.c_y.star(sign).sigma_y(),
        },
        StarConvention::Coefficientwise => OneForm {
            c_x: omega.c_x.star(sign),
            c_y: omega.c_y.star(sign),
        },
    }
}

/// Star on two-forms: (dX∧dY·c)⋆ = dX∧dY·σ_Y(σ_X(c⋆)).
pub fn two_form_star(f: &TwoForm, sign: StarSign) -> TwoForm {
    TwoForm { c: f.c.star(sign).sigma_x().sigma_y() }
}

/// A field Φ = (ψ, φ) together with the choices the action depends on.
#[derive(Clone, Debug)]
pub struct FieldConfig {
    pub phi: PlaneElement,
    pub star_sign: StarSign,
    pub calculus: CalculusSpec,
    pub metric: MetricSpec,
}

impl FieldConfig {
    /// Variant-A configuration with the simplest admissible metric.
    pub fn standard(phi: PlaneElement, star_sign: StarSign) -> Self {
        FieldConfig { phi, star_sign, calculus: CalculusSpec::a(), metric: MetricSpec::identity() }
    }
}

/// The kinetic term g(dΦ⋆, dΦ) with the twisted one-form star.
pub fn kinetic_term(cfg: &FieldConfig) -> PlaneElement {
    kinetic_term_with(cfg, StarConvention::Twisted)
}

pub fn kinetic_term_with(cfg: &FieldConfig, convention: StarConvention) -> PlaneElement {
    let table = cfg.calculus.table();
    let d_phi = table.differential(&cfg.phi);
    let d_phi_star = form_star(&d_phi, cfg.star_sign, convention);
    metric_eval(&d_phi_star, &d_phi, &cfg.metric, &table)
}

/// The trace on the double: (ψ, φ) ↦ ∫₀ ψ, with ∫₀ the exact integral over
/// [−1, 1]².
pub fn trace(u: &PlaneElement) -> Scalar {
    u.first.integrate()
}

/// The scalar action: trace of the kinetic term. Exact rational for
/// polynomial fields and rational star/metric data.
pub fn scalar_action(cfg: &FieldConfig) -> Scalar {
    trace(&kinetic_term(cfg))
}

/// A connection one-form with its star data.
#[derive(Clone, Debug)]
pub struct Connection {
    pub a: OneForm,
    pub star_sign: StarSign,
    pub convention: StarConvention,
}

impl Connection {
    /// Builds dX·(ψ_X, φ_X) + dY·(ψ_y, φ_y). Antihermiticity is checked by
    /// `is_antihermitian`, not imposed.
    pub fn from_components(
        psi_x: PolyElement,
        phi_x: PolyElement,
        psi_y: PolyElement,
        phi_y: PolyElement,
        star_sign: StarSign,
        convention: StarConvention,
    ) -> Self {
        Connection {
            a: OneForm {
                c_x: PlaneElement::from_pair(psi_x, phi_x),
                c_y: PlaneElement::from_pair(psi_y, phi_y),
            },
            star_sign,
            convention,
        }
    }

    /// A⋆ = −A under the connection's star convention.
    pub fn is_antihermitian(&self) -> bool {
        let starred = form_star(&self.a, self.star_sign, self.convention);
        (&starred + &self.a).is_zero()
    }
}

/// F = dA + A∧A.
pub fn curvature(conn: &Connection, table: &RewriteTable) -> TwoForm {
    let da = table.d_one_form(&conn.a);
    let aa = table.wedge(&conn.a, &conn.a);
    &da + &aa
}

/// F⋆·F on the single two-form component.
pub fn yang_mills_density(f: &TwoForm, sign: StarSign) -> PlaneElement {
    &f.c.star(sign) * &f.c
}

pub fn yang_mills_action(f: &TwoForm, sign: StarSign) -> Scalar {
    trace(&yang_mills_density(f, sign))
}

/// The potential sector: the curvature density of a constant-component
/// connection, split into its x-linear part (the quartic potential) and the
/// rest, with the proportionality to x·(ψ_X φ_y − ε ψ_X⋆ φ_y⋆)² reported.
#[derive(Clone, Debug)]
pub struct PotentialReport {
    /// The x-linear part of the constant-field density.
    pub potential: PlaneElement,
    /// x·(ψ_X φ_y − ε ψ_X⋆ φ_y⋆)², the reference shape.
    pub reference: PlaneElement,
    /// potential = ratio · reference, when the reference is nonzero.
    pub ratio: Option<Scalar>,
}

/// Evaluates the density for the connection with every component replaced by
/// its constant part, and extracts the non-derivative x-linear contribution.
pub fn potential_extract(conn: &Connection, table: &RewriteTable) -> PotentialReport {
    let constant = |p: &PolyElement| PolyElement::constant(p.coeff(0, 0));
    let const_conn = Connection {
        a: OneForm {
            c_x: PlaneElement::from_pair(constant(&conn.a.c_x.first), constant(&conn.a.c_x.second)),
            c_y: PlaneElement::from_pair(constant(&conn.a.c_y.first), constant(&conn.a.c_y.second)),
        },
        star_sign: conn.star_sign,
        convention: conn.convention,
    };
    let f = curvature(&const_conn, table);
    let density = yang_mills_density(&f, conn.star_sign);

    // For constant components the density's first slot is a polynomial in x
    // alone; its x¹ coefficient is the potential term.
    let x_part = PolyElement::monomial(1, 0, density.first.coeff(1, 0));
    let potential = PlaneElement::embed(x_part);

    let psi_x = const_conn.a.c_x.first.coeff(0, 0);
    let phi_y = const_conn.a.c_y.second.coeff(0, 0);
    let eps: Scalar = match conn.star_sign {
        StarSign::Plus => from_int(1),
        StarSign::Minus => from_int(-1),
    };
    let bracket = psi_x.clone() * phi_y.clone()
        - eps * crate::scalar::conj(&psi_x) * crate::scalar::conj(&phi_y);
    let reference =
        PlaneElement::embed(PolyElement::monomial(1, 0, bracket.clone() * bracket));

    let ratio = if !reference.is_zero() {
        Some(density.first.coeff(1, 0) / reference.first.coeff(1, 0))
    } else {
        None
    };

    PotentialReport { potential, reference, ratio }
}

/// Gauge transformation A ↦ u A u⋆ + u d(u⋆); requires u unitary.
pub fn gauge_transform(
    conn: &Connection,
    u: &PlaneElement,
    table: &RewriteTable,
) -> Result<Connection, Error> {
    if !u.is_unitary(conn.star_sign) {
        return Err(Error::NonUnitary);
    }
    let u_star = u.star(conn.star_sign);
    let conjugated = table.left_multiply(u, &conn.a).mul_right(&u_star);
    let inhomogeneous = table.left_multiply(u, &table.differential(&u_star));
    Ok(Connection {
        a: &conjugated + &inhomogeneous,
        star_sign: conn.star_sign,
        convention: conn.convention,
    })
}

/// u F u⋆ for two-forms, the curvature's transformation law.
pub fn conjugate_two_form(
    f: &TwoForm,
    u: &PlaneElement,
    sign: StarSign,
    table: &RewriteTable,
) -> TwoForm {
    table.two_form_left_multiply(u, f).mul_right(&u.star(sign))
}

// ---------------------------------------------------------------------------
// Closed forms computed from base-algebra operations only. These are the
// independent route for the kinetic reductions and the reduced curvature.
// ---------------------------------------------------------------------------

fn eps_scalar(sign: StarSign) -> Scalar {
    match sign {
        StarSign::Plus => from_int(1),
        StarSign::Minus => from_int(-1),
    }
}

/// Kinetic term of Φ = (ψ, φ) under variant A with the identity metric:
/// (|H|² + 4εx·∂_xψ⋆∂_xψ + ∂_yψ⋆∂_yψ + εx·hat(∂_yφ⋆∂_yφ),
///  ε·hat(K⋆H) + H⋆K + ε·hat(∂_yφ⋆∂_yψ) + ∂_yψ⋆∂_yφ)
/// with H = hatφ + 2x∂_x hatφ and K = 2∂_x hatψ.
pub fn kinetic_closed(phi_field: &PlaneElement, sign: StarSign) -> PlaneElement {
    let eps = eps_scalar(sign);
    let psi = &phi_field.first;
    let phi = &phi_field.second;
    let x = PolyElement::x();
    let two_x = PolyElement::monomial(1, 0, from_int(2));

    let h = &phi.hat() + &(&two_x * &phi.hat().derivative(Derivation::X));
    let k = psi.hat().derivative(Derivation::X).scale(&from_int(2));
    let dy_psi = psi.derivative(Derivation::Y);
    let dy_phi = phi.derivative(Derivation::Y);

    let first = &(&(&h.star() * &h)
        + &(&x * &(&k.star() * &k).hat()).scale(&eps))
        + &(&(&dy_psi.star() * &dy_psi)
            + &(&x * &(&dy_phi.star() * &dy_phi).hat()).scale(&eps));

    let second = &(&(&k.star() * &h).hat().scale(&eps) + &(&h.star() * &k))
        + &(&(&dy_phi.star() * &dy_psi).hat().scale(&eps) + &(&dy_psi.star() * &dy_phi));

    PlaneElement::from_pair(first, second)
}

/// The Φ_r = (ψ, 0) reduction: ±4x|∂_xψ|² + |∂_yψ|².
pub fn kinetic_phi_r_closed(psi: &PolyElement, sign: StarSign) -> PlaneElement {
    let eps = eps_scalar(sign);
    let x = PolyElement::x();
    let dx_psi = psi.derivative(Derivation::X);
    let dy_psi = psi.derivative(Derivation::Y);
    let first = &(&x * &(&dx_psi.star() * &dx_psi)).scale(&(eps * from_int(4)))
        + &(&dy_psi.star() * &dy_psi);
    PlaneElement::embed(first)
}

/// The Φ_n = (0, φ) reduction:
/// 4x²|∂_x hatφ|² ± x|∂_y hatφ|² + |hatφ|² + 2x(hatφ⋆ ∂_x hatφ + hatφ ∂_x hatφ⋆).
pub fn kinetic_phi_n_closed(phi: &PolyElement, sign: StarSign) -> PlaneElement {
    let eps = eps_scalar(sign);
    let x = PolyElement::x();
    let x2 = PolyElement::monomial(2, 0, from_int(1));
    let hat_phi = phi.hat();
    let dx_hat = hat_phi.derivative(Derivation::X);
    let dy_hat = hat_phi.derivative(Derivation::Y);
    let first = &(&(&x2 * &(&dx_hat.star() * &dx_hat)).scale(&from_int(4))
        + &(&x * &(&dy_hat.star() * &dy_hat)).scale(&eps))
        + &(&(&hat_phi.star() * &hat_phi)
            + &(&x * &(&(&hat_phi.star() * &dx_hat) + &(&hat_phi * &dx_hat.star())))
                .scale(&from_int(2)));
    PlaneElement::embed(first)
}

/// Reduced curvature of A_r = dX·(0, φ_X) + dY·(ψ_y, 0) under variant A:
/// F = dX∧dY·(0, −∂_y φ_X − 2 ∂_x hat ψ_y).
pub fn reduced_curvature_closed(phi_x: &PolyElement, psi_y: &PolyElement) -> TwoForm {
    let c = PlaneElement::from_pair(
        PolyElement::zero(),
        &(-&phi_x.derivative(Derivation::Y))
            - &psi_y.hat().derivative(Derivation::X).scale(&from_int(2)),
    );
    TwoForm { c }
}

/// Checks the §4 precondition when building configurations in front ends.
pub fn requires_variant_a(spec: &CalculusSpec) -> bool {
    spec.variant == Variant::A
}
