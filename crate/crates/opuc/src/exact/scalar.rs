use num_complex::Complex64;
use num_traits::{One, ToPrimitive};

/// Arbitrary-precision rational number in canonical form: reduced, with a
/// positive denominator. Canonicalization is maintained by construction.
pub type Rational = num_rational::BigRational;

/// Complex number with rational real and imaginary parts.
///
/// Closed under `+`, `-`, `*`, `/` (by nonzero) and conjugation, so every
/// identity in this crate can be verified without rounding.
pub type GaussianRational = num_complex::Complex<Rational>;

/// `numer/denom` as a [`Rational`].
///
/// Panics if `denom == 0`.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// `re_numer/re_denom + (im_numer/im_denom) i`.
pub fn gaussian_rational(re_numer: i64, re_denom: i64, im_numer: i64, im_denom: i64) -> GaussianRational {
    GaussianRational::new(rational(re_numer, re_denom), rational(im_numer, im_denom))
}

/// The Gaussian integer `re + im*i`.
pub fn gaussian_int(re: i64, im: i64) -> GaussianRational {
    gaussian_rational(re, 1, im, 1)
}

/// Exact test for |x| < 1, done as |x|^2 < 1.
pub fn in_open_unit_disk(x: &GaussianRational) -> bool {
    x.norm_sqr() < Rational::one()
}

/// Exact test for |x| = 1, done as |x|^2 = 1.
pub fn on_unit_circle(x: &GaussianRational) -> bool {
    x.norm_sqr() == Rational::one()
}

/// Nearest double-precision value, for feeding exact data into floating checks.
pub fn to_complex64(x: &GaussianRational) -> Complex64 {
    Complex64::new(
        x.re.to_f64().unwrap_or(f64::NAN),
        x.im.to_f64().unwrap_or(f64::NAN),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn rational_is_canonical() {
        let r = rational(2, -4);
        assert_eq!(r, rational(-1, 2));
        assert!(r.denom() > &num_bigint::BigInt::zero());
    }

    #[test]
    fn gaussian_field_ops() {
        let a = gaussian_rational(1, 2, -1, 3);
        let b = gaussian_int(0, 1);
        let prod = &a * &b;
        assert_eq!(prod, gaussian_rational(1, 3, 1, 2));
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(a.conj(), gaussian_rational(1, 2, 1, 3));
    }

    #[test]
    fn disk_membership_is_exact() {
        assert!(in_open_unit_disk(&gaussian_rational(3, 5, 1, 5)));
        assert!(!in_open_unit_disk(&gaussian_rational(3, 5, 4, 5))); // |3/5 + 4/5 i| = 1
        assert!(on_unit_circle(&gaussian_rational(3, 5, 4, 5)));
    }
}
