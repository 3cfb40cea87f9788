//! Exact two-variable Laurent polynomials in `v` and `z`.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer coefficient with an inline fast path.
///
/// Values that fit in an `i64` are stored inline; anything larger is promoted
/// to a heap `BigInt`. The representation is normalized, so derived equality
/// and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Small(i64),
    Big(Box<BigInt>),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(0)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(n) => *n < 0,
            Coeff::Big(b) => b.is_negative(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Small(n) => BigInt::from(*n),
            Coeff::Big(b) => (**b).clone(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Coeff::Small(n) => Some(*n),
            Coeff::Big(_) => None,
        }
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(n) => Coeff::Small(n),
            None => Coeff::Big(Box::new(b)),
        }
    }

    pub fn abs(&self) -> Coeff {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::Small(n)
    }
}

impl From<i32> for Coeff {
    fn from(n: i32) -> Self {
        Coeff::Small(n as i64)
    }
}

impl From<BigInt> for Coeff {
    fn from(b: BigInt) -> Self {
        Coeff::from_big(b)
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Coeff::Small(s);
            }
        }
        Coeff::from_big(self.to_bigint() + rhs.to_bigint())
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(p) = a.checked_mul(*b) {
                return Coeff::Small(p);
            }
        }
        Coeff::from_big(self.to_bigint() * rhs.to_bigint())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(n) => match n.checked_neg() {
                Some(m) => Coeff::Small(m),
                None => Coeff::from_big(-BigInt::from(*n)),
            },
            Coeff::Big(b) => Coeff::from_big(-(**b).clone()),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(n) => write!(f, "{n}"),
            Coeff::Big(b) => write!(f, "{b}"),
        }
    }
}

/// One term `coeff * v^v * z^z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub v: i32,
    pub z: i32,
    pub coeff: Coeff,
}

impl Term {
    fn key(&self) -> (i32, i32) {
        (self.z, self.v)
    }
}

/// Laurent polynomial in `v` and `z` with integer coefficients.
///
/// Terms are kept sorted by z-exponent, then v-exponent, and zero
/// coefficients are never stored; structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: Vec<Term>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: impl Into<Coeff>, v: i32, z: i32) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { terms: alloc::vec![Term { v, z, coeff }] }
    }

    /// `(v^-1 - v) / z`, the value of a two-component crossing-free unlink.
    pub fn delta() -> Self {
        Self::from_terms([(-1, -1, Coeff::from(1)), (1, -1, Coeff::from(-1))])
    }

    /// Builds a polynomial from `(v, z, coeff)` triples, combining repeats.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, Coeff)>,
    {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(v, z, coeff)| Term { v, z, coeff })
            .collect();
        raw.sort_by_key(Term::key);
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.key() == t.key() => last.coeff = &last.coeff + &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: i32, z: i32) -> Coeff {
        match self.terms.binary_search_by_key(&(z, v), Term::key) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    /// Highest power of `z`; `None` for the zero polynomial.
    pub fn z_degree(&self) -> Option<i32> {
        self.terms.last().map(|t| t.z)
    }

    /// Lowest power of `z`; `None` for the zero polynomial.
    pub fn z_min_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.z)
    }

    /// The coefficient of `z^k`, as `(v-exponent, coeff)` pairs.
    pub fn z_coefficient(&self, k: i32) -> Vec<(i32, Coeff)> {
        self.terms
            .iter()
            .filter(|t| t.z == k)
            .map(|t| (t.v, t.coeff.clone()))
            .collect()
    }

    /// Multiplies by the monomial `v^dv z^dz`.
    pub fn shifted(&self, dv: i32, dz: i32) -> Self {
        // ordering by (z, v) is preserved by a uniform shift
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term { v: t.v + dv, z: t.z + dz, coeff: t.coeff.clone() })
                .collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let k = Coeff::from(k);
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| Term { v: t.v, z: t.z, coeff: &t.coeff * &k })
                .collect(),
        }
    }

    /// `self * (a * v^va * z^za) + other * (b * v^vb * z^zb)` in a single merge.
    pub fn combine(&self, a: i64, va: i32, za: i32, other: &Self, b: i64, vb: i32, zb: i32) -> Self {
        let (ca, cb) = (Coeff::from(a), Coeff::from(b));
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut xs = self.terms.iter().map(|t| Term { v: t.v + va, z: t.z + za, coeff: &t.coeff * &ca }).peekable();
        let mut ys = other.terms.iter().map(|t| Term { v: t.v + vb, z: t.z + zb, coeff: &t.coeff * &cb }).peekable();
        loop {
            let ord = match (xs.peek(), ys.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => x.key().cmp(&y.key()),
            };
            match ord {
                Ordering::Less => out.push(xs.next().unwrap()),
                Ordering::Greater => out.push(ys.next().unwrap()),
                Ordering::Equal => {
                    let x = xs.next().unwrap();
                    let y = ys.next().unwrap();
                    let c = &x.coeff + &y.coeff;
                    if !c.is_zero() {
                        out.push(Term { v: x.v, z: x.z, coeff: c });
                    }
                }
            }
        }
        Self { terms: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.combine(1, 0, 0, rhs, 1, 0, 0)
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        self.combine(1, 0, 0, rhs, -1, 0, 0)
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|t| Term { v: t.v, z: t.z, coeff: -&t.coeff }).collect(),
        }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut raw = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                raw.push((a.v + b.v, a.z + b.z, &a.coeff * &b.coeff));
            }
        }
        LaurentPoly2::from_terms(raw)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $m(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{e}")
    }
}

/// Sorted-term text: `2*v^2 - v^4 + v^2*z^2`, ordered by z- then v-exponent.
impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = t.coeff.abs();
            let unit = mag == Coeff::from(1);
            let mut first = true;
            if !unit || (t.v == 0 && t.z == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            write_power(f, 'v', t.v, &mut first)?;
            write_power(f, 'z', t.z, &mut first)?;
        }
        Ok(())
    }
}

impl Zero for LaurentPoly2 {
    fn zero() -> Self {
        LaurentPoly2::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly2 {
    fn one() -> Self {
        LaurentPoly2::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_terms(terms.iter().map(|&(v, z, c)| (v, z, Coeff::from(c))))
    }

    #[test]
    fn zero_terms_are_dropped() {
        let a = p(&[(1, 0, 2), (1, 0, -2), (0, 1, 3)]);
        assert_eq!(a.len(), 1);
        assert_eq!(a.coeff(0, 1), Coeff::from(3));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_orders_by_z_then_v() {
        let trefoil = p(&[(2, 2, 1), (4, 0, -1), (2, 0, 2)]);
        assert_eq!(trefoil.to_string(), "2*v^2 - v^4 + v^2*z^2");
        assert_eq!(LaurentPoly2::delta().to_string(), "v^-1*z^-1 - v*z^-1");
        assert_eq!(LaurentPoly2::one().to_string(), "1");
        assert_eq!(p(&[(0, 0, -3)]).to_string(), "-3");
    }

    #[test]
    fn delta_squared() {
        let d2 = LaurentPoly2::delta().pow(2);
        assert_eq!(d2, p(&[(-2, -2, 1), (0, -2, -2), (2, -2, 1)]));
        assert_eq!(LaurentPoly2::delta().pow(0), LaurentPoly2::one());
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let big = p(&[(0, 0, i64::MAX)]);
        let sum = &big + &big;
        let expect = BigInt::from(i64::MAX) * 2;
        assert_eq!(sum.coeff(0, 0).to_bigint(), expect);
        assert!(matches!(sum.coeff(0, 0), Coeff::Big(_)));
        // and demotes again once it fits
        let back = &sum - &big;
        assert_eq!(back.coeff(0, 0), Coeff::Small(i64::MAX));
        let neg_min = -&p(&[(0, 0, i64::MIN)]);
        assert_eq!(neg_min.coeff(0, 0).to_bigint(), -BigInt::from(i64::MIN));
    }

    #[test]
    fn combine_matches_shift_and_add() {
        let a = p(&[(1, 0, 1), (-1, 2, 3)]);
        let b = p(&[(0, 0, 2), (2, 1, -1)]);
        let lhs = a.combine(2, 2, 0, &b, 1, 1, 1);
        let rhs = &a.shifted(2, 0).scaled(2) + &b.shifted(1, 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degrees() {
        let a = p(&[(1, -1, 1), (0, 3, 2)]);
        assert_eq!(a.z_degree(), Some(3));
        assert_eq!(a.z_min_degree(), Some(-1));
        assert_eq!(LaurentPoly2::zero().z_degree(), None);
        assert_eq!(a.z_coefficient(3), alloc::vec![(0, Coeff::from(2))]);
    }
}
