use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Gaussian, Rational};

/// Sparse polynomial in the formal parameter `alpha` over the Gaussian
/// rationals.
///
/// `alpha` stands for a real parameter, so the involution [`Scalar::conj`]
/// fixes it and conjugates the coefficients. Zero coefficients are never
/// stored; the zero polynomial is the empty map and has no degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar {
    terms: BTreeMap<u32, Gaussian>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_gaussian(Gaussian::from_int(n))
    }

    pub fn from_rat(r: Rational) -> Self {
        Scalar::from_gaussian(Gaussian::real(r))
    }

    pub fn from_gaussian(g: Gaussian) -> Self {
        Scalar::term(g, 0)
    }

    /// The imaginary unit as a constant polynomial.
    pub fn i() -> Self {
        Scalar::from_gaussian(Gaussian::i())
    }

    /// The formal parameter itself.
    pub fn alpha() -> Self {
        Scalar::alpha_pow(1)
    }

    pub fn alpha_pow(k: u32) -> Self {
        Scalar::term(Gaussian::one(), k)
    }

    /// The monomial `g * alpha^k`.
    pub fn term(g: Gaussian, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !g.is_zero() {
            terms.insert(k, g);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// Degree in `alpha`; the zero polynomial has none.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> Gaussian {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Gaussian)> {
        self.terms.iter().map(|(k, g)| (*k, g))
    }

    pub(crate) fn add_term(&mut self, k: u32, g: &Gaussian) {
        if g.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Gaussian::zero);
        *entry = &*entry + g;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// The antilinear involution: conjugates coefficients, fixes `alpha`.
    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, g)| (*k, g.conj())).collect(),
        }
    }

    /// Polynomial evaluation at `alpha = v`.
    pub fn eval_alpha(&self, v: &Rational) -> Gaussian {
        let mut pow = Rational::one();
        let mut prev = 0u32;
        let mut acc = Gaussian::zero();
        for (k, g) in &self.terms {
            for _ in prev..*k {
                pow = &pow * v;
            }
            prev = *k;
            acc = &acc + &(g * &Gaussian::real(pow.clone()));
        }
        acc
    }

    /// Evaluation at `alpha^2 = t`, defined only for even polynomials.
    pub fn eval_alpha_squared(&self, t: &Rational) -> Option<Gaussian> {
        if self.terms.keys().any(|k| k % 2 != 0) {
            return None;
        }
        let mut acc = Gaussian::zero();
        for (k, g) in &self.terms {
            let mut pow = Rational::one();
            for _ in 0..(k / 2) {
                pow = &pow * t;
            }
            acc = &acc + &(g * &Gaussian::real(pow));
        }
        Some(acc)
    }

    /// Constant value, if the polynomial has degree zero (or is zero).
    pub fn as_gaussian(&self) -> Option<Gaussian> {
        match self.degree() {
            None => Some(Gaussian::zero()),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    /// Constant rational value, if real and of degree zero.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gaussian().and_then(|g| g.as_rational().cloned())
    }

    pub fn is_constant(&self) -> bool {
        self.as_gaussian().is_some()
    }

    /// Fixed by conjugation, i.e. all coefficients real.
    pub fn is_self_conjugate(&self) -> bool {
        self.terms.values().all(Gaussian::is_real)
    }

    /// Negated by conjugation, i.e. all coefficients purely imaginary.
    pub fn is_pure_imaginary(&self) -> bool {
        self.terms.values().all(|g| g.re.is_zero())
    }

    /// Only odd powers of `alpha` occur.
    pub fn is_odd_in_alpha(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 1)
    }

    pub fn scale(&self, by: &Gaussian) -> Scalar {
        if by.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(k, g)| (*k, g * by)).collect(),
        }
    }

    pub fn scale_rat(&self, by: &Rational) -> Scalar {
        self.scale(&Gaussian::real(by.clone()))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (k, g) in &rhs.terms {
            out.add_term(*k, g);
        }
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ka, ga) in &self.terms {
            for (kb, gb) in &rhs.terms {
                out.add_term(ka + kb, &(ga * gb));
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(k, g)| (*k, -g)).collect(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// True when the Gaussian renders as a single product-safe token
/// (one of `p/q`, `i`, `-i`, `p/q*i`).
fn is_simple_coefficient(g: &Gaussian) -> bool {
    g.re.is_zero() || g.im.is_zero()
}

fn fmt_term(k: u32, g: &Gaussian, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if k == 0 {
        return write!(f, "{g}");
    }
    if !is_simple_coefficient(g) {
        write!(f, "({g})*")?;
    } else if g.is_one() {
        // bare alpha power
    } else if (-g.clone()).is_one() {
        write!(f, "-")?;
    } else {
        write!(f, "{g}*")?;
    }
    if k == 1 {
        write!(f, "alpha")
    } else {
        write!(f, "alpha^{k}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, g)) in self.terms.iter().enumerate() {
            if idx == 0 {
                fmt_term(*k, g, f)?;
                continue;
            }
            // Pull the sign out of later pure-real / pure-imaginary terms.
            let negated = -g;
            let lead_negative = if g.im.is_zero() {
                g.re.is_negative()
            } else if g.re.is_zero() {
                g.im.is_negative()
            } else {
                false
            };
            if lead_negative {
                write!(f, " - ")?;
                fmt_term(*k, &negated, f)?;
            } else {
                write!(f, " + ")?;
                fmt_term(*k, g, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, rat_int};

    fn ialpha(n: i64) -> Scalar {
        Scalar::term(Gaussian::imaginary(rat_int(n)), 1)
    }

    #[test]
    fn i_alpha_squared() {
        // (i*alpha) * (i*alpha) = -alpha^2
        let ia = &Scalar::i() * &Scalar::alpha();
        assert_eq!(&ia * &ia, -&Scalar::alpha_pow(2));
    }

    #[test]
    fn shift_by_eight() {
        // (1 + 12*alpha^2) + 8 = 9 + 12*alpha^2
        let a = &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        let expected = &Scalar::from_int(9) + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        assert_eq!(&a + &Scalar::from_int(8), expected);
    }

    #[test]
    fn absorbing_zero() {
        assert_eq!(&Scalar::alpha() * &Scalar::zero(), Scalar::zero());
    }

    #[test]
    fn conj_pure_imaginary() {
        assert_eq!(ialpha(16).conj(), ialpha(-16));
    }

    #[test]
    fn conj_fixes_real() {
        let s = &Scalar::from_rat(rat(3, 4)) + &Scalar::alpha_pow(2).scale_rat(&rat_int(2));
        assert_eq!(s.conj(), s);
    }

    #[test]
    fn conj_componentwise() {
        let s = Scalar::term(Gaussian::new(rat_int(1), rat_int(2)), 1);
        assert_eq!(
            s.conj(),
            Scalar::term(Gaussian::new(rat_int(1), rat_int(-2)), 1)
        );
    }

    #[test]
    fn eval_examples() {
        let c = &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        assert_eq!(c.eval_alpha(&rat(1, 2)), Gaussian::from_int(4));
        assert_eq!(ialpha(16).eval_alpha(&rat_int(0)), Gaussian::zero());
        let p = &Scalar::alpha_pow(2) - &Scalar::alpha();
        assert_eq!(p.eval_alpha(&rat_int(1)), Gaussian::zero());
    }

    #[test]
    fn eval_alpha_squared_requires_even() {
        let c = &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        assert_eq!(
            c.eval_alpha_squared(&rat_int(1)),
            Some(Gaussian::from_int(13))
        );
        assert_eq!(Scalar::alpha().eval_alpha_squared(&rat_int(1)), None);
    }

    #[test]
    fn display_canonical() {
        let s = &Scalar::one() + &Scalar::alpha_pow(2).scale_rat(&rat_int(12));
        assert_eq!(s.to_string(), "1 + 12*alpha^2");
        assert_eq!(ialpha(-2).to_string(), "-2*i*alpha");
        let mixed = Scalar::term(Gaussian::new(rat(1, 2), rat_int(3)), 4);
        assert_eq!(mixed.to_string(), "(1/2 + 3*i)*alpha^4");
        assert_eq!((&Scalar::one() - &Scalar::alpha()).to_string(), "1 - alpha");
    }
}
