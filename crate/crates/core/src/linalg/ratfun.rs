//! The fraction field of `Q(i)[alpha]`.
//!
//! Used to row-reduce matrices whose entries are polynomials in `alpha`,
//! giving generic ranks that hold identically in the parameter rather than
//! at a sampled value.

use crate::coeff::{Gaussian, Scalar};

use super::FieldElem;

/// Quotient and remainder of polynomial division.
pub fn poly_divmod(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    let db = b.degree().expect("division by the zero polynomial");
    let lead_inv = b.coeff(db).inv();
    let mut quot = Scalar::zero();
    let mut rem = a.clone();
    while let Some(dr) = rem.degree() {
        if dr < db {
            break;
        }
        let factor = Scalar::term(&rem.coeff(dr) * &lead_inv, dr - db);
        quot = &quot + &factor;
        rem = &rem - &(&factor * b);
    }
    (quot, rem)
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &Scalar, b: &Scalar) -> Scalar {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    match x.degree() {
        None => Scalar::zero(),
        Some(d) => x.scale(&x.coeff(d).inv()),
    }
}

/// Rational function `num/den` in `alpha`; `den` is monic and coprime to
/// `num`, and zero is stored as `0/1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFun {
    num: Scalar,
    den: Scalar,
}

impl RatFun {
    pub fn new(num: Scalar, den: Scalar) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun {
                num,
                den: Scalar::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let (num, _) = poly_divmod(&num, &g);
        let (den, _) = poly_divmod(&den, &g);
        let lead = den.coeff(den.degree().expect("nonzero")).inv();
        RatFun {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: Scalar) -> Self {
        RatFun {
            num: p,
            den: Scalar::one(),
        }
    }

    pub fn numerator(&self) -> &Scalar {
        &self.num
    }

    pub fn denominator(&self) -> &Scalar {
        &self.den
    }

    /// The underlying polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&Scalar> {
        self.den.is_one().then_some(&self.num)
    }

    /// Evaluate at a rational `alpha`, if the denominator does not vanish.
    pub fn eval_alpha(&self, v: &crate::coeff::Rational) -> Option<Gaussian> {
        let d = self.den.eval_alpha(v);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(&self.num.eval_alpha(v) * &d.inv())
    }
}

impl FieldElem for RatFun {
    fn zero() -> Self {
        RatFun::from_poly(Scalar::zero())
    }
    fn one() -> Self {
        RatFun::from_poly(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn neg(&self) -> Self {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat_int;

    fn poly(coeffs: &[i64]) -> Scalar {
        let mut s = Scalar::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            s = &s + &Scalar::alpha_pow(k as u32).scale_rat(&rat_int(c));
        }
        s
    }

    #[test]
    fn divmod_roundtrip() {
        let a = poly(&[2, 0, -3, 1]);
        let b = poly(&[1, 1]);
        let (q, r) = poly_divmod(&a, &b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_common_factor() {
        // (alpha^2 - 1) and (alpha - 1)*(alpha + 2) share (alpha - 1)
        let a = poly(&[-1, 0, 1]);
        let b = &poly(&[-1, 1]) * &poly(&[2, 1]);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, poly(&[-1, 1]));
    }

    #[test]
    fn field_arithmetic() {
        let x = RatFun::new(poly(&[0, 1]), poly(&[1, 1])); // alpha / (1 + alpha)
        let prod = x.mul(&x.inv());
        assert_eq!(prod, RatFun::one());
        let s = x.sub(&x);
        assert!(s.is_zero());
    }
}
