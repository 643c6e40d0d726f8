//! Exact arithmetic over the field of rational functions in the formal
//! parameter `q`.
//!
//! The scalar type [`LaurentRational`] is a reduced ratio of two
//! integer-coefficient Laurent polynomials in `q`. All arithmetic is exact;
//! there is no floating-point mode. Values are canonical after every
//! operation, so equality is plain structural comparison.
//!
//! The classical limit `q -> 1` is only reachable through
//! [`LaurentRational::specialize`] with an explicit opt-in flag; nothing in
//! the library evaluates at roots of unity implicitly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Errors raised by scalar arithmetic and specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by the zero scalar.
    DivisionByZero,
    /// The denominator vanishes at the requested evaluation point.
    Pole,
    /// The evaluation point violates the generic-q assumption (q0 in
    /// {0, 1, -1}) and the classical-limit flag was not set.
    GenericityViolation,
    /// A scalar string failed to parse.
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero scalar"),
            ScalarError::Pole => write!(f, "denominator vanishes at the evaluation point"),
            ScalarError::GenericityViolation => {
                write!(f, "evaluation point violates the generic-q assumption")
            }
            ScalarError::Parse(s) => write!(f, "cannot parse scalar: {s}"),
        }
    }
}

impl std::error::Error for ScalarError {}

// ---- Laurent polynomials over the integers ----

/// An integer-coefficient Laurent polynomial in `q`.
///
/// Coefficients are stored in ascending exponent order starting at `ord`.
/// Invariant: `coeffs` is empty exactly for the zero polynomial, and
/// otherwise its first and last entries are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    ord: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            ord: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly {
            ord: 0,
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial `c * q^exp`. Returns zero when `c` is zero.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                ord: exp,
                coeffs: vec![c],
            }
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    fn from_raw(ord: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { ord, coeffs };
        p.normalize();
        p
    }

    /// Strip leading/trailing zero coefficients and fix `ord`.
    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.ord += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.ord = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.ord == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exponent of the lowest-degree term (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.ord
    }

    /// Exponent of the highest-degree term (0 for the zero polynomial).
    pub fn high_exp(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.ord + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        if exp < self.ord {
            return BigInt::zero();
        }
        let idx = (exp - self.ord) as usize;
        self.coeffs.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            ord: self.ord + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let ord = self.ord.min(rhs.ord);
        let high = self.high_exp().max(rhs.high_exp());
        let len = (high - ord + 1) as usize;
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.ord - ord) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.ord - ord) as usize + i] += c;
        }
        Self::from_raw(ord, coeffs)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::from_raw(self.ord + rhs.ord, coeffs)
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// GCD of all coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Evaluate at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut pow = pow_rational(q0, self.ord);
        for c in &self.coeffs {
            if !c.is_zero() {
                acc += BigRational::from(c.clone()) * &pow;
            }
            pow *= q0;
        }
        acc
    }

    /// Exact division in ZZ[q, q^-1]; panics if the division is not exact.
    /// Only called on divisor/dividend pairs produced by gcd computations.
    fn div_exact(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let rl = rhs.coeffs.len();
        assert!(rem.len() >= rl, "exact division with smaller dividend");
        let qlen = rem.len() - rl + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let lead = rhs.coeffs.last().unwrap();
        for k in (0..qlen).rev() {
            let top = rem[k + rl - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            assert!(r.is_zero(), "division not exact");
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = &qc * b;
                rem[k + j] -= prod;
            }
            quot[k] = qc;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
        Self::from_raw(self.ord - rhs.ord, quot)
    }

    /// Primitive part (content divided out; sign of the leading coefficient
    /// is preserved).
    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            ord: self.ord,
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Pseudo-remainder, used by the primitive PRS gcd.
    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let db = b.high_exp();
        let lead_b = b.coeffs.last().unwrap().clone();
        let mut r = a.clone();
        while !r.is_zero() && r.high_exp() >= db {
            let dr = r.high_exp();
            let lead_r = r.coeffs.last().unwrap().clone();
            r = r.mul_int(&lead_b).sub(&b.shifted(dr - db).mul_int(&lead_r));
        }
        r
    }

    /// GCD in ZZ[q] of two ord-0 (constant-term nonzero) polynomials, with a
    /// positive leading coefficient. Content and primitive part combined.
    fn gcd_ord0(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.abs_normalized();
        }
        if b.is_zero() {
            return a.abs_normalized();
        }
        let content = a.content().gcd(&b.content());
        let mut r0 = a.primitive_part();
        let mut r1 = b.primitive_part();
        if r0.high_exp() < r1.high_exp() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let rem = Self::pseudo_rem(&r0, &r1).primitive_part();
            r0 = r1;
            r1 = rem;
        }
        let mut g = r0.abs_normalized();
        // a gcd of polynomials with nonzero constant terms has no q factor,
        // but the PRS may introduce one; strip it.
        g = g.shifted(-g.low_exp());
        g.mul_int(&content)
    }

    fn abs_normalized(&self) -> Self {
        if self.coeffs.last().map_or(false, |c| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }
}

fn pow_rational(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

// ---- The scalar field ----

/// A reduced ratio of integer Laurent polynomials in `q`.
///
/// Canonical form: `gcd(num, den) = 1`, the denominator is an ordinary
/// polynomial with a nonzero positive constant term (every overall power of
/// `q` lives in the numerator), and the zero scalar is `0 / 1`. Equality of
/// canonical values is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentRational {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentRational {
    pub fn zero() -> Self {
        LaurentRational {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentRational {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        LaurentRational {
            num: LaurentPoly::from_int(c),
            den: LaurentPoly::one(),
        }
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(c: i64, exp: i64) -> Self {
        LaurentRational {
            num: LaurentPoly::monomial(BigInt::from(c), exp),
            den: LaurentPoly::one(),
        }
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^exp` for any integer exponent.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// `lambda = q - q^-1`.
    pub fn lambda() -> Self {
        Self::q_pow(1) - Self::q_pow(-1)
    }

    /// Build from a numerator/denominator pair, reducing to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        // Pull the overall q-powers out; the gcd works on ord-0 polynomials.
        let a = num.low_exp();
        let b = den.low_exp();
        let n0 = num.shifted(-a);
        let d0 = den.shifted(-b);
        let g = LaurentPoly::gcd_ord0(&n0, &d0);
        let mut n1 = n0.div_exact(&g);
        let mut d1 = d0.div_exact(&g);
        if d1.coeffs.first().map_or(false, |c| c.is_negative()) {
            n1 = n1.neg();
            d1 = d1.neg();
        }
        LaurentRational {
            num: n1.shifted(a - b),
            den: d1,
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let base = if exp > 0 {
            self.clone()
        } else {
            self.inverse().expect("negative power of zero scalar")
        };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// The q-analog `k_q = (q^k - q^-k) / (q - q^-1)`; `0_q = 0`.
    ///
    /// Expands to the Laurent polynomial `q^(k-1) + q^(k-3) + ... + q^(1-k)`.
    pub fn q_int(k: u32) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let k = k as i64;
        let mut cs = vec![BigInt::zero(); (2 * k - 1) as usize];
        for j in 0..k {
            cs[(2 * j) as usize] = BigInt::one();
        }
        LaurentRational {
            num: LaurentPoly::from_raw(1 - k, cs),
            den: LaurentPoly::one(),
        }
    }

    /// Exact evaluation at a rational point `q0`.
    ///
    /// `q0 = 0` is always rejected. `q0 = 1` or `-1` is rejected unless
    /// `classical_limit` is set, per the generic-q assumption (a nonzero
    /// rational other than +-1 is never a root of unity). A vanishing
    /// denominator is a pole even in the classical limit.
    pub fn specialize(
        &self,
        q0: &BigRational,
        classical_limit: bool,
    ) -> Result<BigRational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::GenericityViolation);
        }
        let is_unit = q0.is_one() || (-q0.clone()).is_one();
        if is_unit && !classical_limit {
            return Err(ScalarError::GenericityViolation);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Parse the bit-exact string format, e.g. `"2*q^3 - 1 + q^-2 / q + 1"`.
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        let (num_s, den_s) = match s.find('/') {
            Some(pos) => (&s[..pos], &s[pos + 1..]),
            None => (s, ""),
        };
        let num = parse_poly(num_s)?;
        if den_s.trim().is_empty() {
            return Ok(LaurentRational {
                num,
                den: LaurentPoly::one(),
            });
        }
        let den = parse_poly(den_s)?;
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::new(num, den))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.ord + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if exp == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                if exp == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{exp}")?;
                }
            } else if exp == 1 {
                write!(f, "{mag}*q")?;
            } else {
                write!(f, "{mag}*q^{exp}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

fn parse_poly(s: &str) -> Result<LaurentPoly, ScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarError::Parse("empty polynomial".into()));
    }
    let mut acc = LaurentPoly::zero();
    let mut rest = s;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        // end of this monomial: the next '+' or '-' that is not part of '^-'
        let bytes = rest.as_bytes();
        let mut end = bytes.len();
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            if b == b'^' {
                i += 1;
                if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                    i += 1;
                }
                continue;
            }
            if b == b'+' || b == b'-' {
                end = i;
                break;
            }
            i += 1;
        }
        let mono = rest[..end].trim();
        acc = acc.add(&parse_monomial(mono, sign)?);
        if end == bytes.len() {
            break;
        }
        sign = if bytes[end] == b'-' { -1 } else { 1 };
        rest = rest[end + 1..].trim_start();
        if rest.is_empty() {
            return Err(ScalarError::Parse(format!("trailing operator in '{s}'")));
        }
    }
    Ok(acc)
}

fn parse_monomial(s: &str, sign: i64) -> Result<LaurentPoly, ScalarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ScalarError::Parse("empty monomial".into()));
    }
    let (coeff_s, q_s) = match s.find('q') {
        Some(pos) => (
            s[..pos].trim().trim_end_matches('*').trim(),
            Some(s[pos..].trim()),
        ),
        None => (s, None),
    };
    let mut coeff: BigInt = if coeff_s.is_empty() {
        BigInt::one()
    } else {
        coeff_s
            .parse()
            .map_err(|_| ScalarError::Parse(format!("bad coefficient '{coeff_s}'")))?
    };
    if sign < 0 {
        coeff = -coeff;
    }
    let exp: i64 = match q_s {
        None => 0,
        Some("q") => 1,
        Some(qe) => {
            let e = qe
                .strip_prefix("q^")
                .ok_or_else(|| ScalarError::Parse(format!("bad monomial '{s}'")))?;
            e.parse()
                .map_err(|_| ScalarError::Parse(format!("bad exponent '{e}'")))?
        }
    };
    Ok(LaurentPoly::monomial(coeff, exp))
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait for &LaurentRational {
            type Output = LaurentRational;
            fn $method(self, rhs: &LaurentRational) -> LaurentRational {
                let f: fn(&LaurentRational, &LaurentRational) -> LaurentRational = $body;
                f(self, rhs)
            }
        }
        impl $trait for LaurentRational {
            type Output = LaurentRational;
            fn $method(self, rhs: LaurentRational) -> LaurentRational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    LaurentRational::new(a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den))
});

impl_binop!(Sub, sub, |a, b| {
    if b.is_zero() {
        return a.clone();
    }
    LaurentRational::new(a.num.mul(&b.den).sub(&b.num.mul(&a.den)), a.den.mul(&b.den))
});

impl_binop!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return LaurentRational::zero();
    }
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    LaurentRational::new(a.num.mul(&b.num), a.den.mul(&b.den))
});

impl_binop!(Div, div, |a, b| a
    .checked_div(b)
    .expect("division by zero scalar"));

impl Neg for &LaurentRational {
    type Output = LaurentRational;
    fn neg(self) -> LaurentRational {
        LaurentRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for LaurentRational {
    type Output = LaurentRational;
    fn neg(self) -> LaurentRational {
        -&self
    }
}

impl PartialOrd for LaurentRational {
    fn partial_cmp(&self, _other: &Self) -> Option<Ordering> {
        None
    }
}
