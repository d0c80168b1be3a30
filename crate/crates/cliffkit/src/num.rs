//! Exact coefficient domains.
//!
//! Everything in this crate is computed without rounding. The base field is
//! the rationals [`Q`]; on top of it sit Gaussian rationals [`Cq`], rational
//! quaternions [`Quat`] and a small surd type [`Surd`] (finite sums of
//! Gaussian rationals times square roots of square-free integers), which is
//! enough to write down Gel'fand–Naimark matrices exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics on `d == 0`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Render a rational as `a` or `a/b`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `a` or `a/b`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Ring operations shared by every matrix entry type.
///
/// Methods take references so that big-integer coefficients are not cloned
/// needlessly; `conj` is complex conjugation of the scalar part (identity on
/// [`Q`], quaternion conjugation on [`Quat`]).
pub trait Entry: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn from_q(x: Q) -> Self;
    /// The imaginary unit, when the domain has one.
    fn imag_unit() -> Option<Self>;
    /// Embed a Gaussian rational, when the domain contains it.
    fn from_cq(c: &Cq) -> Option<Self> {
        if c.is_real() {
            Some(Self::from_q(c.re.clone()))
        } else {
            let i = Self::imag_unit()?;
            Some(Self::from_q(c.re.clone()).add(&i.mul(&Self::from_q(c.im.clone()))))
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_q(q(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Entry types with exact multiplicative inverses.
pub trait Field: Entry {
    fn inv(&self) -> Option<Self>;
}

impl Entry for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_q(x: Q) -> Self {
        x
    }
    fn imag_unit() -> Option<Self> {
        None
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cq {
    pub re: Q,
    pub im: Q,
}

impl Cq {
    pub fn new(re: Q, im: Q) -> Self {
        Cq { re, im }
    }
    pub fn real(re: Q) -> Self {
        Cq { re, im: Zero::zero() }
    }
    pub fn int(n: i64) -> Self {
        Cq::real(q(n))
    }
    pub fn i() -> Self {
        Cq::new(Zero::zero(), One::one())
    }
    pub fn is_real(&self) -> bool {
        Zero::is_zero(&self.im)
    }
    /// Multiply by a rational.
    pub fn scale(&self, s: &Q) -> Self {
        Cq::new(&self.re * s, &self.im * s)
    }
    /// Parse `a`, `a/b`, `bi`, `a+bi`, `a-b/c i` and similar.
    pub fn parse(s: &str) -> Option<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return None;
        }
        if !t.ends_with('i') {
            return parse_q(&t).map(Cq::real);
        }
        let body = &t[..t.len() - 1];
        // split at the last sign that is not the first character
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => "1",
            "-" => "-1",
            other => other.trim_start_matches('+'),
        };
        Some(Cq::new(parse_q(re)?, parse_q(im)?))
    }
}

impl fmt::Display for Cq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re0 = Zero::is_zero(&self.re);
        let im0 = Zero::is_zero(&self.im);
        let imag = |x: &Q| -> String {
            if One::is_one(x) {
                "i".to_string()
            } else if *x == -<Q as One>::one() {
                "-i".to_string()
            } else {
                format!("{} i", fmt_q(x))
            }
        };
        match (re0, im0) {
            (_, true) => write!(f, "{}", fmt_q(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let im = imag(&self.im.abs());
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}", fmt_q(&self.re), sign, im)
            }
        }
    }
}

impl Entry for Cq {
    fn zero() -> Self {
        Cq::real(Zero::zero())
    }
    fn one() -> Self {
        Cq::real(One::one())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        Cq::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        Cq::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        if Zero::is_zero(&self.im) && Zero::is_zero(&o.im) {
            return Cq::real(&self.re * &o.re);
        }
        Cq::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg(&self) -> Self {
        Cq::new(-&self.re, -&self.im)
    }
    fn conj(&self) -> Self {
        Cq::new(self.re.clone(), -&self.im)
    }
    fn from_q(x: Q) -> Self {
        Cq::real(x)
    }
    fn imag_unit() -> Option<Self> {
        Some(Cq::i())
    }
}

impl Field for Cq {
    fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&n) {
            return None;
        }
        Some(Cq::new(&self.re / &n, -&self.im / &n))
    }
}

/// Rational quaternion `w + x·i + y·j + z·k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quat {
    pub w: Q,
    pub x: Q,
    pub y: Q,
    pub z: Q,
}

impl Quat {
    pub fn new(w: Q, x: Q, y: Q, z: Q) -> Self {
        Quat { w, x, y, z }
    }
    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(q(w), q(x), q(y), q(z))
    }
    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }
    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }
    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }
    /// Components in the order (1, i, j, k).
    pub fn parts(&self) -> [&Q; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, sym) in self.parts().into_iter().zip(["", "i", "j", "k"]) {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = c.abs();
            let body = if sym.is_empty() {
                fmt_q(&mag)
            } else if One::is_one(&mag) {
                sym.to_string()
            } else {
                format!("{}{}", fmt_q(&mag), sym)
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push(if c.is_negative() { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

impl Entry for Quat {
    fn zero() -> Self {
        Quat::from_ints(0, 0, 0, 0)
    }
    fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.parts().iter().all(|c| Zero::is_zero(*c))
    }
    fn add(&self, o: &Self) -> Self {
        Quat::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
    fn sub(&self, o: &Self) -> Self {
        Quat::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
    fn mul(&self, o: &Self) -> Self {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
    fn neg(&self) -> Self {
        Quat::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
    fn conj(&self) -> Self {
        Quat::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }
    fn from_q(x: Q) -> Self {
        Quat::new(x, Zero::zero(), Zero::zero(), Zero::zero())
    }
    fn imag_unit() -> Option<Self> {
        None
    }
}

impl Field for Quat {
    fn inv(&self) -> Option<Self> {
        let n = &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z;
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conj();
        Some(Quat::new(&c.w / &n, &c.x / &n, &c.y / &n, &c.z / &n))
    }
}

/// Finite sum `Σ c_r √r` with `r` square-free and `c_r` Gaussian rational.
///
/// Closed under ring operations because the product of two square-free
/// radicands is again a square times a square-free radicand.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Surd {
    terms: BTreeMap<u64, Cq>,
}

/// Split `n > 0` as `s² · r` with `r` square-free.
fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut r = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        s *= d.pow(e / 2);
        if e % 2 == 1 {
            r *= d;
        }
        d += 1;
    }
    (s, r * n)
}

impl Surd {
    /// `c · √r` for a square-free `r`.
    fn term(r: u64, c: Cq) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(r, c);
        }
        Surd { terms }
    }

    pub fn from_cq(c: Cq) -> Self {
        Surd::term(1, c)
    }

    /// Exact square root of a non-negative rational. Returns `None` for
    /// negative input or radicands that do not fit in a machine word.
    pub fn sqrt(x: &Q) -> Option<Self> {
        if x.is_negative() {
            return None;
        }
        if Zero::is_zero(x) {
            return Some(Surd::default());
        }
        // √(a/b) = √(ab) / b
        let ab = (x.numer() * x.denom()).to_u64()?;
        let (s, r) = square_free_split(ab);
        let coeff = Q::new(BigInt::from(s), x.denom().clone());
        Some(Surd::term(r, Cq::real(coeff)))
    }

    /// Multiply by a Gaussian rational.
    pub fn scale(&self, c: &Cq) -> Self {
        let mut out = Surd::default();
        for (r, v) in &self.terms {
            let w = v.mul(c);
            if !w.is_zero() {
                out.terms.insert(*r, w);
            }
        }
        out
    }

    /// The value as a Gaussian rational when no irrational part remains.
    pub fn as_cq(&self) -> Option<Cq> {
        match self.terms.len() {
            0 => Some(Cq::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// Square-free radicands appearing with nonzero coefficient.
    pub fn radicands(&self) -> Vec<u64> {
        self.terms.keys().copied().collect()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| {
                if *r == 1 {
                    c.to_string()
                } else if c.is_one() {
                    format!("√{r}")
                } else {
                    format!("({c})√{r}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Entry for Surd {
    fn zero() -> Self {
        Surd::default()
    }
    fn one() -> Self {
        Surd::term(1, Cq::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &o.terms {
            let v = out.terms.get(r).map(|x| x.add(c)).unwrap_or_else(|| c.clone());
            if v.is_zero() {
                out.terms.remove(r);
            } else {
                out.terms.insert(*r, v);
            }
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = Surd::default();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &o.terms {
                let g = r1.gcd(r2);
                let r = (r1 / g) * (r2 / g);
                let c = c1.mul(c2).scale(&q(g as i64));
                out = out.add(&Surd::term(r, c));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        self.scale(&Cq::int(-1))
    }
    fn conj(&self) -> Self {
        let mut out = Surd::default();
        for (r, c) in &self.terms {
            out.terms.insert(*r, c.conj());
        }
        out
    }
    fn from_q(x: Q) -> Self {
        Surd::from_cq(Cq::real(x))
    }
    fn imag_unit() -> Option<Self> {
        Some(Surd::from_cq(Cq::i()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cq_display_and_parse_roundtrip() {
        for s in ["0", "3", "-1/2", "i", "-i", "1/2 i", "1+i", "-3/4-5/6 i"] {
            let c = Cq::parse(s).unwrap();
            assert_eq!(Cq::parse(&c.to_string()).unwrap(), c, "{s}");
        }
        assert_eq!(Cq::parse("2-3i").unwrap(), Cq::new(q(2), q(-3)));
    }

    #[test]
    fn quaternion_units() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(i.mul(&i), Quat::one().neg());
        assert_eq!(Quat::from_ints(1, 2, 3, 4).inv().unwrap().mul(&Quat::from_ints(1, 2, 3, 4)), Quat::one());
    }

    #[test]
    fn surd_arithmetic() {
        let r2 = Surd::sqrt(&q(2)).unwrap();
        let r3 = Surd::sqrt(&q(3)).unwrap();
        let r6 = Surd::sqrt(&q(6)).unwrap();
        assert_eq!(r2.mul(&r2), Surd::from_q(q(2)));
        assert_eq!(r2.mul(&r3), r6);
        assert_eq!(Surd::sqrt(&qr(8, 9)).unwrap(), r2.scale(&Cq::real(qr(2, 3))));
        assert_eq!(Surd::sqrt(&qr(1, 4)).unwrap().as_cq(), Some(Cq::real(qr(1, 2))));
        assert!(Surd::sqrt(&q(-1)).is_none());
    }
}
