//! Univariate polynomial arithmetic over the rationals and the machinery the
//! algebra oracle needs from it: gcd, squarefree decomposition, Sturm
//! sequences for real-root counting, cyclotomic recognition, and full
//! factorization over Q (squarefree split, factorization modulo a good prime,
//! Hensel lifting, bounded subset recombination).

use crate::{rat, Rat};
use num::{BigInt, BigUint, Integer, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Degree cap for factorization; overridable via `HYPUNITS_MAX_DEGREE`.
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Cap on the number of modular factors before subset recombination is
/// declared infeasible. Converts silent blowups into an explicit error.
const MAX_MODULAR_FACTORS: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("factorization overflow: {0}")]
    FactorizationOverflow(String),
}

fn max_degree_cap() -> usize {
    std::env::var("HYPUNITS_MAX_DEGREE")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

/// Polynomial over Q, dense, little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    pub fn x() -> Self {
        QPoly { coeffs: vec![rat(0), rat(1)] }
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = QPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: (quotient, remainder).
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let dlc = d.lc();
        if self.is_zero() || self.degree() < dd && !(self.degree() == 0 && dd == 0) {
            if self.coeffs.len() < d.coeffs.len() {
                return (QPoly::zero(), self.clone());
            }
        }
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= d.coeffs.len() && !rem.is_empty() {
            let k = rem.len() - d.coeffs.len();
            let f = rem.last().unwrap() / &dlc;
            if !f.is_zero() {
                q[k] = f.clone();
                for (i, c) in d.coeffs.iter().enumerate() {
                    let t = c * &f;
                    rem[k + i] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < d.coeffs.len() {
                break;
            }
        }
        (QPoly::from_coeffs(q), QPoly::from_coeffs(rem))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    /// Exact division; panics if not divisible (internal use).
    pub fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let inv = rat(1) / self.lc();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat((i + 1) as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, s, t) monic with s*self + t*other = g.
    pub fn xgcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
        let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = rat(1) / r0.lc();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part f / gcd(f, f').
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Number of distinct real roots, by Sturm's theorem.
    pub fn real_root_count(&self) -> usize {
        let f = self.squarefree_part();
        if f.degree() == 0 {
            return 0;
        }
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        let sign_at_inf = |p: &QPoly, plus: bool| -> i32 {
            if p.is_zero() {
                return 0;
            }
            let lc = p.lc();
            let s = if lc.is_positive() { 1 } else { -1 };
            if plus || p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        };
        let variations = |plus: bool| -> usize {
            let mut count = 0;
            let mut last = 0;
            for p in &chain {
                let s = sign_at_inf(p, plus);
                if s != 0 {
                    if last != 0 && s != last {
                        count += 1;
                    }
                    last = s;
                }
            }
            count
        };
        variations(false) - variations(true)
    }

    /// Clear denominators and content: primitive integer polynomial with
    /// positive leading coefficient, plus the rational scalar removed.
    pub fn primitive_z(&self) -> (ZPoly, Rat) {
        if self.is_zero() {
            return (ZPoly { coeffs: vec![] }, rat(0));
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        let mut z: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        let mut scalar = Rat::new(content, den);
        if z.last().unwrap().is_negative() {
            for c in z.iter_mut() {
                *c = -c.clone();
            }
            scalar = -scalar;
        }
        (ZPoly { coeffs: z }, scalar)
    }

    /// Full factorization over Q into monic irreducibles with multiplicities.
    /// The constant content is discarded; factors are sorted for determinism.
    pub fn factor(&self) -> Result<Vec<(QPoly, usize)>, PolyError> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        if self.degree() > max_degree_cap() {
            return Err(PolyError::FactorizationOverflow(format!(
                "degree {} exceeds cap {}",
                self.degree(),
                max_degree_cap()
            )));
        }
        let mut result: Vec<(QPoly, usize)> = Vec::new();
        let mut f = self.monic();
        // strip powers of x
        let mut xpow = 0;
        while !f.is_zero() && f.coeffs[0].is_zero() {
            f = f.div_exact(&QPoly::x());
            xpow += 1;
        }
        if xpow > 0 {
            result.push((QPoly::x(), xpow));
        }
        if f.degree() >= 1 {
            let sqfree = f.squarefree_part();
            let irreducibles = factor_squarefree(&sqfree)?;
            for irr in irreducibles {
                let mut mult = 0;
                loop {
                    let (q, r) = f.div_rem(&irr);
                    if r.is_zero() {
                        mult += 1;
                        f = q;
                    } else {
                        break;
                    }
                }
                debug_assert!(mult >= 1);
                result.push((irr, mult));
            }
            debug_assert_eq!(f.degree(), 0);
        }
        result.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)));
        Ok(result)
    }

    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        if self.degree() == 0 {
            return Ok(false);
        }
        let f = self.factor()?;
        Ok(f.len() == 1 && f[0].1 == 1)
    }

    /// True when this monic irreducible is a cyclotomic polynomial.
    pub fn is_cyclotomic(&self) -> bool {
        let d = self.degree();
        if d == 0 {
            return false;
        }
        // phi(n) >= sqrt(n/2), so phi(n) = d forces n <= 2 d^2 + 2.
        for n in 1..=(2 * d * d + 2) {
            if euler_phi(n) == d && *self == cyclotomic(n) {
                return true;
            }
        }
        false
    }

    pub fn to_string_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let term = match i {
                0 => format!("{}", c),
                1 => {
                    if c.is_one() {
                        "x".to_string()
                    } else {
                        format!("{}*x", c)
                    }
                }
                _ => {
                    if c.is_one() {
                        format!("x^{}", i)
                    } else {
                        format!("{}*x^{}", c, i)
                    }
                }
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Deterministic ordering key: (degree, coefficient list).
fn poly_key(p: &QPoly) -> (usize, Vec<String>) {
    (p.degree(), p.coeffs.iter().map(|c| c.to_string()).collect())
}

/// Euler totient, by trial division.
pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The n-th cyclotomic polynomial, by the recursive quotient definition.
pub fn cyclotomic(n: usize) -> QPoly {
    assert!(n >= 1);
    let mut num = vec![Rat::zero(); n + 1];
    num[0] = rat(-1);
    num[n] = rat(1);
    let mut f = QPoly::from_coeffs(num); // x^n - 1
    for d in 1..n {
        if n % d == 0 {
            f = f.div_exact(&cyclotomic(d));
        }
    }
    f
}

// ---------------------------------------------------------------------------
// Integer polynomials and factorization machinery
// ---------------------------------------------------------------------------

/// Primitive integer polynomial, little-endian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn to_q(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// Polynomial over F_p, p an odd machine prime, little-endian, normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
struct PPoly {
    coeffs: Vec<u64>,
    p: u64,
}

impl PPoly {
    fn new(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PPoly { coeffs, p }
    }

    fn zero(p: u64) -> Self {
        PPoly { coeffs: vec![], p }
    }

    fn one(p: u64) -> Self {
        PPoly { coeffs: vec![1], p }
    }

    fn x(p: u64) -> Self {
        PPoly { coeffs: vec![0, 1], p }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }


    fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }


    fn sub(&self, other: &PPoly) -> PPoly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] = (out[i] + c) % p;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] = (out[i] + p - (c % p)) % p;
        }
        PPoly::new(out, p)
    }

    fn mul(&self, other: &PPoly) -> PPoly {
        if self.is_zero() || other.is_zero() {
            return PPoly::zero(self.p);
        }
        let p = self.p as u128;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = (a as u128 * b as u128 + out[i + j] as u128) % p;
                out[i + j] = t as u64;
            }
        }
        PPoly::new(out, self.p)
    }

    fn scale(&self, c: u64) -> PPoly {
        let p = self.p;
        PPoly::new(self.coeffs.iter().map(|&a| ((a as u128 * c as u128) % p as u128) as u64).collect(), p)
    }

    fn monic(&self) -> PPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv(self.lc(), self.p))
    }

    fn div_rem(&self, d: &PPoly) -> (PPoly, PPoly) {
        assert!(!d.is_zero());
        let p = self.p;
        let dlc_inv = mod_inv(d.lc(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (PPoly::zero(p), self.clone());
        }
        let mut q = vec![0u64; rem.len() - d.coeffs.len() + 1];
        for k in (0..q.len()).rev() {
            let idx = k + d.coeffs.len() - 1;
            let lead = rem[idx] % p;
            if lead == 0 {
                continue;
            }
            let f = ((lead as u128 * dlc_inv as u128) % p as u128) as u64;
            q[k] = f;
            for (i, &c) in d.coeffs.iter().enumerate() {
                let t = (c as u128 * f as u128) % p as u128;
                rem[k + i] = ((rem[k + i] as u128 + p as u128 - t) % p as u128) as u64;
            }
        }
        (PPoly::new(q, p), PPoly::new(rem, p))
    }

    fn rem(&self, d: &PPoly) -> PPoly {
        self.div_rem(d).1
    }

    fn gcd(&self, other: &PPoly) -> PPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: (g, s, t) with s*a + t*b = g, g monic.
    fn xgcd(&self, other: &PPoly) -> (PPoly, PPoly, PPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (PPoly::one(p), PPoly::zero(p));
        let (mut t0, mut t1) = (PPoly::zero(p), PPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = mod_inv(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    fn derivative(&self) -> PPoly {
        if self.coeffs.len() <= 1 {
            return PPoly::zero(self.p);
        }
        let p = self.p;
        PPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| ((c as u128 * ((i as u64 + 1) % p) as u128) % p as u128) as u64)
                .collect(),
            p,
        )
    }

    /// self^e mod m.
    fn pow_mod(&self, mut e: BigUint, m: &PPoly) -> PPoly {
        let mut base = self.rem(m);
        let mut acc = PPoly::one(self.p);
        while !e.is_zero() {
            if (&e & BigUint::one()) == BigUint::one() {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Distinct-degree + equal-degree (Cantor–Zassenhaus) factorization of a
/// squarefree monic polynomial mod p. Deterministic: splitting elements are
/// tried in a fixed order. Returns monic irreducible factors, sorted.
fn factor_mod_p(f: &PPoly) -> Vec<PPoly> {
    let p = f.p;
    let mut factors = Vec::new();
    let mut f = f.monic();
    // distinct-degree
    let mut h = PPoly::x(p);
    let mut d = 0usize;
    let mut stack: Vec<(PPoly, usize)> = Vec::new();
    while f.degree() >= 1 {
        d += 1;
        if 2 * d > f.degree() {
            stack.push((f.clone(), f.degree()));
            break;
        }
        h = h.pow_mod(BigUint::from(p), &f);
        let g = h.sub(&PPoly::x(p)).gcd(&f);
        if g.degree() >= 1 {
            stack.push((g.clone(), d));
            f = f.div_rem(&g).0.monic();
            h = h.rem(&f);
        }
    }
    // equal-degree splitting
    for (poly, d) in stack {
        split_equal_degree(&poly, d, &mut factors);
    }
    factors.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    factors
}

fn split_equal_degree(f: &PPoly, d: usize, out: &mut Vec<PPoly>) {
    let p = f.p;
    if f.degree() == d {
        out.push(f.monic());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    // deterministic sequence of splitting candidates: x+c, then x^2+c, ...
    let mut deg = 1usize;
    loop {
        for c in 0..p {
            let mut coeffs = vec![0u64; deg + 1];
            coeffs[0] = c;
            coeffs[deg] = 1;
            let a = PPoly::new(coeffs, p);
            let t = a.pow_mod(e.clone(), f).sub(&PPoly::one(p));
            let g = t.gcd(f);
            if g.degree() >= 1 && g.degree() < f.degree() {
                let other = f.div_rem(&g).0.monic();
                split_equal_degree(&g, d, out);
                split_equal_degree(&other, d, out);
                return;
            }
        }
        deg += 1;
        assert!(deg <= f.degree() + 2, "equal-degree splitting failed to progress");
    }
}

/// Symmetric representative of x mod m in (-m/2, m/2].
fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let mut r = x.mod_floor(m);
    if &r * 2 > *m {
        r -= m;
    }
    r
}

/// Integer polynomial with coefficients mod m (BigInt), little-endian.
#[derive(Debug, Clone)]
struct MPoly {
    coeffs: Vec<BigInt>,
}

impl MPoly {
    fn new(mut coeffs: Vec<BigInt>, m: &BigInt) -> Self {
        for c in coeffs.iter_mut() {
            *c = c.mod_floor(m);
        }
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        MPoly { coeffs }
    }

    fn from_p(p: &PPoly) -> Self {
        MPoly { coeffs: p.coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    fn mul(&self, other: &MPoly, m: &BigInt) -> MPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return MPoly { coeffs: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        MPoly::new(out, m)
    }

    fn add(&self, other: &MPoly, m: &BigInt) -> MPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            out[i] += a;
        }
        MPoly::new(out, m)
    }

    fn sub(&self, other: &MPoly, m: &BigInt) -> MPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i] += a;
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            out[i] -= a;
        }
        MPoly::new(out, m)
    }

    /// Division assuming the divisor's leading coefficient is invertible mod m
    /// (true for monic divisors).
    fn div_rem_monic(&self, d: &MPoly, m: &BigInt) -> (MPoly, MPoly) {
        assert!(d.coeffs.last().map_or(false, |c| c.is_one()), "divisor must be monic");
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (MPoly { coeffs: vec![] }, self.clone());
        }
        let mut q = vec![BigInt::zero(); rem.len() - d.coeffs.len() + 1];
        for k in (0..q.len()).rev() {
            let idx = k + d.coeffs.len() - 1;
            let lead = rem[idx].mod_floor(m);
            if lead.is_zero() {
                continue;
            }
            q[k] = lead.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let t = c * &lead;
                rem[k + i] -= t;
            }
        }
        (MPoly::new(q, m), MPoly::new(rem, m))
    }
}

/// Quadratic Hensel lifting of f = g*h (mod p) with s*g + t*h = 1 (mod p),
/// up to modulus >= bound. f, g, h monic. Returns (g, h) mod the final modulus
/// along with that modulus.
#[allow(clippy::too_many_arguments)]
fn hensel_pair(
    f: &ZPoly,
    g0: &PPoly,
    h0: &PPoly,
    s0: &PPoly,
    t0: &PPoly,
    p: u64,
    bound: &BigInt,
) -> (MPoly, MPoly, BigInt) {
    let mut m = BigInt::from(p);
    let mut g = MPoly::from_p(g0);
    let mut h = MPoly::from_p(h0);
    let mut s = MPoly::from_p(s0);
    let mut t = MPoly::from_p(t0);
    let fm = MPoly { coeffs: f.coeffs.clone() };
    while &m < bound {
        let m2 = &m * &m;
        // e = f - g h  (mod m2)
        let e = fm.sub(&g.mul(&h, &m2), &m2);
        // q, r with s e = q h + r
        let se = s.mul(&e, &m2);
        let (q, r) = se.div_rem_monic(&h, &m2);
        // g' = g + t e + q g ; h' = h + r
        let g_new = g.add(&t.mul(&e, &m2).add(&q.mul(&g, &m2), &m2), &m2);
        let h_new = h.add(&r, &m2);
        // lift Bezout: b = s g' + t h' - 1
        let one = MPoly { coeffs: vec![BigInt::one()] };
        let b = s.mul(&g_new, &m2).add(&t.mul(&h_new, &m2), &m2).sub(&one, &m2);
        let sb = s.mul(&b, &m2);
        let (c, d) = sb.div_rem_monic(&h_new, &m2);
        let s_new = s.sub(&d, &m2);
        let t_new = t.sub(&t.mul(&b, &m2).add(&c.mul(&g_new, &m2), &m2), &m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    (g, h, m)
}

/// Lift a list of pairwise-coprime monic factors of f mod p to factors mod
/// some p^k >= bound, by a factor tree.
fn hensel_tree(f: &ZPoly, factors: &[PPoly], p: u64, bound: &BigInt) -> (Vec<MPoly>, BigInt) {
    if factors.len() == 1 {
        let m = {
            let mut m = BigInt::from(p);
            while &m < bound {
                m = &m * &m;
            }
            m
        };
        return (vec![MPoly::new(f.coeffs.clone(), &m)], m);
    }
    let mid = factors.len() / 2;
    let g0 = factors[..mid].iter().fold(PPoly::one(p), |acc, x| acc.mul(x));
    let h0 = factors[mid..].iter().fold(PPoly::one(p), |acc, x| acc.mul(x));
    let (gg, ss, tt) = g0.xgcd(&h0);
    assert_eq!(gg.degree(), 0, "modular factors not coprime");
    let (g_lift, h_lift, m) = hensel_pair(f, &g0, &h0, &ss, &tt, p, bound);
    let gz = ZPoly { coeffs: g_lift.coeffs.iter().map(|c| symmetric(c, &m)).collect() };
    let hz = ZPoly { coeffs: h_lift.coeffs.iter().map(|c| symmetric(c, &m)).collect() };
    let (mut left, _) = hensel_tree(&gz, &factors[..mid], p, bound);
    let (right, _) = hensel_tree(&hz, &factors[mid..], p, bound);
    // re-reduce to the common modulus
    for f in left.iter_mut() {
        *f = MPoly::new(f.coeffs.clone(), &m);
    }
    let right: Vec<MPoly> = right.into_iter().map(|f| MPoly::new(f.coeffs, &m)).collect();
    left.extend(right);
    (left, m)
}

/// Zassenhaus factorization of a squarefree rational polynomial.
fn factor_squarefree(f: &QPoly) -> Result<Vec<QPoly>, PolyError> {
    let deg = f.degree();
    if deg == 0 {
        return Ok(vec![]);
    }
    if deg == 1 {
        return Ok(vec![f.monic()]);
    }
    let (fz, _) = f.primitive_z();
    let lc = fz.coeffs.last().unwrap().clone();
    if !lc.is_one() {
        // monicize: g(x) = lc^(n-1) f(x/lc) is monic over Z; factors map back
        // through x -> lc*x.
        let n = fz.degree();
        let lcq = Rat::from_integer(lc.clone());
        let mut gc = vec![Rat::zero(); n + 1];
        for (i, c) in fz.coeffs.iter().enumerate() {
            let mut pow = Rat::one();
            for _ in 0..(n - 1).saturating_sub(i) {
                pow *= &lcq;
            }
            if i == n {
                gc[i] = Rat::one();
            } else {
                gc[i] = Rat::from_integer(c.clone()) * pow;
            }
        }
        let g = QPoly::from_coeffs(gc);
        let sub_factors = factor_squarefree(&g)?;
        let mut out = Vec::new();
        for h in sub_factors {
            // h(lc * x), re-monicized
            let mapped = QPoly::from_coeffs(
                h.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let mut pow = Rat::one();
                        for _ in 0..i {
                            pow *= &lcq;
                        }
                        c * pow
                    })
                    .collect(),
            );
            out.push(mapped.monic());
        }
        out.sort_by(|a, b| poly_key(a).cmp(&poly_key(b)));
        return Ok(out);
    }

    // pick a good odd prime: lc nonzero mod p and f squarefree mod p;
    // among the first few good primes keep the one with fewest factors.
    const PRIMES: [u64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let mut best: Option<(u64, Vec<PPoly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = PPoly::new(
            fz.coeffs.iter().map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect(),
            p,
        )
        .monic();
        if fp.degree() != deg {
            continue;
        }
        if fp.gcd(&fp.derivative()).degree() != 0 {
            continue; // not squarefree mod p
        }
        let factors = factor_mod_p(&fp);
        let better = best.as_ref().map_or(true, |(_, bf)| factors.len() < bf.len());
        if better {
            best = Some((p, factors));
        }
        tried += 1;
        if tried >= 3 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, mod_factors) = best.ok_or_else(|| {
        PolyError::FactorizationOverflow("no usable prime found for modular factorization".into())
    })?;
    if mod_factors.len() == 1 {
        return Ok(vec![f.monic()]);
    }
    if mod_factors.len() > MAX_MODULAR_FACTORS {
        return Err(PolyError::FactorizationOverflow(format!(
            "{} modular factors exceeds recombination cap",
            mod_factors.len()
        )));
    }

    // Landau-Mignotte style bound on the coefficients of any factor:
    // 2^deg * (deg+1) * max|coeff| * |lc|, doubled for the symmetric range.
    let bound: BigInt =
        (BigInt::one() << (deg + 2)) * BigInt::from(deg as u64 + 1) * fz.max_abs_coeff() * lc.abs();

    let (lifted, modulus) = hensel_tree(&fz, &mod_factors, p, &bound);

    // subset recombination
    let mut remaining: Vec<MPoly> = lifted;
    let mut current = fz;
    let mut out: Vec<QPoly> = Vec::new();
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut prod = MPoly { coeffs: vec![BigInt::one()] };
            // include the leading coefficient to keep candidates integral
            prod.coeffs[0] = current.coeffs.last().unwrap().clone();
            for &i in &combo {
                prod = prod.mul(&remaining[i], &modulus);
            }
            let cand = ZPoly {
                coeffs: prod.coeffs.iter().map(|c| symmetric(c, &modulus)).collect(),
            };
            let cand_q = cand.to_q();
            if cand_q.is_zero() || cand_q.degree() == 0 {
                continue;
            }
            let (q, r) = current.to_q().div_rem(&cand_q.monic());
            if r.is_zero() {
                out.push(cand_q.monic());
                let (newz, _) = q.primitive_z();
                current = newz;
                let mut keep = Vec::new();
                for (i, fac) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(fac);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if current.degree() >= 1 {
        out.push(current.to_q().monic());
    }
    out.sort_by(|a, b| poly_key(a).cmp(&poly_key(b)));
    Ok(out)
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn div_rem_roundtrip() {
        let f = QPoly::from_ints(&[1, 2, 3, 4]);
        let d = QPoly::from_ints(&[1, 1]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
    }

    #[test]
    fn gcd_of_multiples() {
        let a = QPoly::from_ints(&[-1, 1]); // x - 1
        let b = QPoly::from_ints(&[1, 1]); // x + 1
        let f = a.mul(&b);
        assert_eq!(f.gcd(&a), a.monic());
        assert_eq!(a.gcd(&b).degree(), 0);
    }

    #[test]
    fn factor_x5_minus_1() {
        // (x - 1) * Phi_5
        let mut c = vec![rat(-1), rat(0), rat(0), rat(0), rat(0), rat(1)];
        let f = QPoly::from_coeffs(std::mem::take(&mut c));
        let factors = f.factor().unwrap();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, QPoly::from_ints(&[-1, 1]));
        assert_eq!(factors[1].0, cyclotomic(5));
    }

    #[test]
    fn factor_with_multiplicity() {
        let a = QPoly::from_ints(&[-1, 1]);
        let b = QPoly::from_ints(&[1, 0, 1]); // x^2 + 1
        let f = a.mul(&a).mul(&b);
        let factors = f.factor().unwrap();
        assert_eq!(factors, vec![(a.monic(), 2), (b.monic(), 1)]);
    }

    #[test]
    fn factor_product_of_cyclotomics() {
        // x^12 - 1 = prod of Phi_d over d | 12
        let mut c = vec![Rat::zero(); 13];
        c[0] = rat(-1);
        c[12] = rat(1);
        let f = QPoly::from_coeffs(c);
        let factors = f.factor().unwrap();
        assert_eq!(factors.len(), 6);
        for (p, m) in &factors {
            assert_eq!(*m, 1);
            assert!(p.is_cyclotomic());
        }
    }

    #[test]
    fn irreducible_quartic_stays_whole() {
        let f = cyclotomic(5);
        assert!(f.is_irreducible().unwrap());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(cyclotomic(5).real_root_count(), 0);
        assert_eq!(cyclotomic(7).real_root_count(), 0);
        // x^2 - 2 has two real roots
        assert_eq!(QPoly::from_ints(&[-2, 0, 1]).real_root_count(), 2);
        // x^3 - x = x(x-1)(x+1)
        assert_eq!(QPoly::from_ints(&[0, -1, 0, 1]).real_root_count(), 3);
        // x^2 + 1
        assert_eq!(QPoly::from_ints(&[1, 0, 1]).real_root_count(), 0);
    }

    #[test]
    fn cyclotomic_recognition() {
        assert!(cyclotomic(8).is_cyclotomic());
        assert!(cyclotomic(12).is_cyclotomic());
        assert!(!QPoly::from_ints(&[-2, 0, 1]).is_cyclotomic());
        // x - 2 is not cyclotomic, x - 1 and x + 1 are
        assert!(QPoly::from_ints(&[-1, 1]).is_cyclotomic());
        assert!(QPoly::from_ints(&[1, 1]).is_cyclotomic());
        assert!(!QPoly::from_ints(&[-2, 1]).is_cyclotomic());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let mut c = vec![Rat::zero(); 70];
        c[0] = rat(-1);
        c.push(rat(1));
        let f = QPoly::from_coeffs(c);
        assert!(matches!(f.factor(), Err(PolyError::FactorizationOverflow(_))));
    }

    #[test]
    fn euler_phi_small() {
        let vals: Vec<usize> = (1..=12).map(euler_phi).collect();
        assert_eq!(vals, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
