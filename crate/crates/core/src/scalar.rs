//! Exact Gaussian-rational scalars.
//!
//! Every coefficient in the engine is a complex number with rational real and
//! imaginary parts, stored exactly. `num_rational::BigRational` keeps fractions
//! reduced with positive denominators, so equality of scalars is structural
//! equality and every identity check in the crate is an exact comparison.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field: Gaussian rationals a + b·i with a, b ∈ ℚ.
pub type Scalar = Complex<BigRational>;

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The scalar `n` (as a Gaussian rational).
pub fn from_int(n: i64) -> Scalar {
    Scalar::new(ratio(n, 1), BigRational::zero())
}

/// The scalar `n/d`.
pub fn from_ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(ratio(n, d), BigRational::zero())
}

/// A real scalar from a rational.
pub fn from_rational(r: BigRational) -> Scalar {
    Scalar::new(r, BigRational::zero())
}

/// The imaginary unit i.
pub fn imaginary_unit() -> Scalar {
    Scalar::new(BigRational::zero(), BigRational::one())
}

/// Complex conjugate.
pub fn conj(s: &Scalar) -> Scalar {
    Scalar::new(s.re.clone(), -s.im.clone())
}

pub fn is_real(s: &Scalar) -> bool {
    s.im.is_zero()
}

/// Renders a rational without a denominator when it is integral: `3`, `-1/2`.
pub fn render_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a scalar in the expression grammar: `3`, `-1/2*i`, `(2+3*i)`.
///
/// Mixed real/imaginary values are parenthesized so the result can be used
/// verbatim as a coefficient factor.
pub fn render_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        return render_rational(&s.re);
    }
    let im = if s.im.is_one() {
        "i".to_string()
    } else if (-s.im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", render_rational(&s.im))
    };
    if s.re.is_zero() {
        return im;
    }
    if s.im.is_negative() {
        format!("({}{})", render_rational(&s.re), im)
    } else {
        format!("({}+{})", render_rational(&s.re), im)
    }
}

/// Renders a scalar as LaTeX.
pub fn render_scalar_latex(s: &Scalar) -> String {
    fn rat(r: &BigRational) -> String {
        if r.denom().is_one() {
            r.numer().to_string()
        } else if r.is_negative() {
            format!("-\\frac{{{}}}{{{}}}", -r.numer().clone(), r.denom())
        } else {
            format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
        }
    }
    if s.im.is_zero() {
        return rat(&s.re);
    }
    let im = if s.im.is_one() {
        "i".to_string()
    } else if (-s.im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{} i", rat(&s.im))
    };
    if s.re.is_zero() {
        im
    } else if s.im.is_negative() {
        format!("\\left({}{}\\right)", rat(&s.re), im)
    } else {
        format!("\\left({}+{}\\right)", rat(&s.re), im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let third = from_ratio(1, 3);
        let sum = third.clone() + third.clone() + third;
        assert_eq!(sum, from_int(1));
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = ratio(2, -4);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn conjugation() {
        let s = from_int(2) + imaginary_unit();
        assert_eq!(conj(&s), from_int(2) - imaginary_unit());
        assert_eq!(conj(&conj(&s)), s);
    }

    #[test]
    fn division_is_exact() {
        let s = from_int(3) + from_int(4) * imaginary_unit();
        let t = s.clone() / s.clone();
        assert_eq!(t, from_int(1));
    }

    #[test]
    fn rendering() {
        assert_eq!(render_scalar(&from_int(4)), "4");
        assert_eq!(render_scalar(&from_ratio(-1, 2)), "-1/2");
        assert_eq!(render_scalar(&imaginary_unit()), "i");
        assert_eq!(render_scalar(&(from_int(2) + from_int(3) * imaginary_unit())), "(2+3*i)");
        assert_eq!(render_scalar(&(from_int(1) - imaginary_unit())), "(1-i)");
    }
}
