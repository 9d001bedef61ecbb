//! Exact arithmetic on monic integer polynomials: discriminants, resultants,
//! translation, and irreducibility / total-reality tests for degrees 2-3.

use crate::arith::{factorize, is_perfect_square};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// A monic polynomial with integer coefficients.
///
/// Coefficients are stored lowest degree first; the leading coefficient is
/// always exactly 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from coefficients, lowest degree first. The leading coefficient
    /// must be 1 and the degree at least 1.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidArgument(
                "polynomial must have degree >= 1".into(),
            ));
        }
        if !coeffs.last().unwrap().is_one() {
            return Err(Error::InvalidArgument(
                "polynomial must be monic (leading coefficient 1)".into(),
            ));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of x^i (0 beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Derivative; not monic in general, returned as a raw coefficient vector.
    pub fn derivative_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect()
    }

    /// The monic polynomial q with q(x) = p(x - c).
    pub fn translate(&self, c: &BigInt) -> IntPolynomial {
        // Horner with polynomial accumulator: acc <- acc*(x-c) + a_k
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // acc * (x - c)
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i + 1] += v;
                next[i] -= c * v;
            }
            next[0] += a;
            acc = next;
        }
        IntPolynomial { coeffs: acc }
    }

    /// Discriminant: (-1)^{n(n-1)/2} * Res(p, p') for monic p.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = self.degree();
        if n < 2 {
            return Err(Error::InvalidArgument(
                "discriminant requires degree >= 2".into(),
            ));
        }
        let res = resultant_raw(&self.coeffs, &self.derivative_coeffs())?;
        let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(res * BigInt::from(sign))
    }

    /// Resultant of two integer polynomials (Sylvester determinant sign
    /// convention); for monic p, q this is the product of root differences.
    pub fn resultant(&self, other: &IntPolynomial) -> Result<BigInt> {
        resultant_raw(&self.coeffs, &other.coeffs)
    }

    /// Degree 2: true iff the discriminant is not a perfect square.
    /// Degree 3: true iff there is no integer root (must divide the constant
    /// term). Larger degrees are rejected.
    pub fn is_irreducible_low_degree(&self) -> Result<bool> {
        match self.degree() {
            2 => Ok(!is_perfect_square(&self.discriminant()?)),
            3 => {
                let a0 = self.coeff(0);
                if a0.is_zero() {
                    return Ok(false);
                }
                for d in divisors(&a0) {
                    if self.eval(&d).is_zero() || self.eval(&(-&d)).is_zero() {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            n => Err(Error::UnsupportedDegree(n)),
        }
    }

    /// All roots real and distinct. Degrees 2 and 3 reduce to a positive
    /// discriminant; the Sturm count is asserted in tests as ground truth.
    pub fn is_totally_real(&self) -> Result<bool> {
        let disc = self.discriminant()?;
        if disc.is_zero() {
            return Err(Error::InvalidArgument(
                "is_totally_real requires a squarefree polynomial".into(),
            ));
        }
        match self.degree() {
            2 | 3 => Ok(disc.is_positive()),
            _ => Ok(self.count_real_roots() == self.degree()),
        }
    }

    /// Number of distinct real roots, by Sturm's theorem (exact rational
    /// arithmetic).
    pub fn count_real_roots(&self) -> usize {
        let to_rat = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
        };
        let mut chain: Vec<Vec<BigRational>> = Vec::new();
        chain.push(to_rat(&self.coeffs));
        chain.push(to_rat(&self.derivative_coeffs()));
        loop {
            let last = &chain[chain.len() - 1];
            if last.iter().all(|c| c.is_zero()) {
                chain.pop();
                break;
            }
            let prev = &chain[chain.len() - 2];
            let rem = poly_rem(prev, last);
            if rem.iter().all(|c| c.is_zero()) {
                break;
            }
            chain.push(rem.iter().map(|c| -c).collect());
        }
        let signs_at_inf = |dir: i32| -> Vec<i32> {
            chain
                .iter()
                .map(|p| {
                    let d = p.len() - 1;
                    let lc = &p[d];
                    let mut s = if lc.is_positive() { 1 } else { -1 };
                    if dir < 0 && d % 2 == 1 {
                        s = -s;
                    }
                    s
                })
                .collect()
        };
        let changes = |signs: &[i32]| signs.windows(2).filter(|w| w[0] != w[1]).count();
        changes(&signs_at_inf(-1)) - changes(&signs_at_inf(1))
    }
}

/// Remainder of a by b over Q, with normalized (trailing-zero-trimmed) output.
fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let deg = |p: &[BigRational]| p.iter().rposition(|c| !c.is_zero());
    let mut r: Vec<BigRational> = a.to_vec();
    let db = deg(b).expect("division by zero polynomial");
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &b[db];
        for i in 0..=db {
            let t = &f * &b[i];
            r[i + dr - db] -= t;
        }
        r.truncate(dr); // leading term cancelled exactly
    }
    match deg(&r) {
        Some(d) => {
            r.truncate(d + 1);
            r
        }
        None => vec![BigRational::zero()],
    }
}

/// Resultant via the Sylvester matrix, evaluated by fraction-free (Bareiss)
/// elimination so every intermediate stays an exact integer.
fn resultant_raw(p: &[BigInt], q: &[BigInt]) -> Result<BigInt> {
    let deg = |v: &[BigInt]| v.iter().rposition(|c| !c.is_zero());
    let (Some(n), Some(m)) = (deg(p), deg(q)) else {
        return Err(Error::InvalidArgument(
            "resultant of the zero polynomial".into(),
        ));
    };
    if n == 0 {
        return Ok(p[0].pow(m as u32));
    }
    if m == 0 {
        return Ok(q[0].pow(n as u32));
    }
    let size = n + m;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for row in 0..m {
        for (k, c) in p.iter().take(n + 1).enumerate() {
            mat[row][row + n - k] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in q.iter().take(m + 1).enumerate() {
            mat[m + row][row + m - k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Fraction-free Gaussian elimination; returns the determinant.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev; // divides exactly (Sylvester identity)
            }
        }
        prev = m[k][k].clone();
        for row in m.iter_mut().skip(k + 1) {
            row[k] = BigInt::zero();
        }
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Positive divisors of |n| (n nonzero), unsorted.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factorize(n) {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        let mut pk = BigInt::one();
        for _ in 0..=e {
            for d in &out {
                next.push(d * &pk);
            }
            pk *= BigInt::from(p);
        }
        out = next;
    }
    out
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match i {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}", abs)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Accepts either a coefficient list "1,-1,-1" (constant first) or a
    /// human form like "x^2-x-1".
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidArgument("empty polynomial".into()));
        }
        if s.contains(',') {
            let coeffs: Vec<BigInt> = s
                .split(',')
                .map(|t| {
                    t.trim().parse::<BigInt>().map_err(|_| {
                        Error::InvalidArgument(format!("bad coefficient '{}'", t.trim()))
                    })
                })
                .collect::<Result<_>>()?;
            return IntPolynomial::new(coeffs);
        }
        parse_human(s)
    }
}

fn parse_human(s: &str) -> Result<IntPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let bad = |msg: &str| Error::InvalidArgument(format!("cannot parse '{s}': {msg}"));
    let mut terms: Vec<(BigInt, usize)> = Vec::new();
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = BigInt::one();
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: BigInt = if start == i {
            BigInt::one()
        } else {
            compact[start..i].parse().map_err(|_| bad("bad number"))?
        };
        let exp: usize = if i < bytes.len() && bytes[i] == b'x' {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let estart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if estart == i {
                    return Err(bad("missing exponent"));
                }
                compact[estart..i].parse().map_err(|_| bad("bad exponent"))?
            } else {
                1
            }
        } else {
            if start == i {
                return Err(bad("dangling sign"));
            }
            0
        };
        terms.push((sign * coef, exp));
    }
    if terms.is_empty() {
        return Err(bad("no terms"));
    }
    let deg = terms.iter().map(|&(_, e)| e).max().unwrap();
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    IntPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs).unwrap()
    }

    #[test]
    fn discriminants() {
        assert_eq!(p(&[-1, -1, 1]).discriminant().unwrap(), BigInt::from(5));
        assert_eq!(p(&[-20, 0, 1]).discriminant().unwrap(), BigInt::from(80));
        assert_eq!(p(&[-1, -3, 0, 1]).discriminant().unwrap(), BigInt::from(81));
        assert_eq!(
            p(&[-8, -12, 0, 1]).discriminant().unwrap(),
            BigInt::from(5184)
        );
        assert_eq!(
            p(&[-1, -1, 0, 1]).discriminant().unwrap(),
            BigInt::from(-23)
        );
    }

    #[test]
    fn discriminant_rejects_degree_one() {
        assert!(p(&[3, 1]).discriminant().is_err());
    }

    #[test]
    fn resultants() {
        // single root difference
        assert_eq!(
            p(&[-1, 1]).resultant(&p(&[-2, 1])).unwrap(),
            BigInt::from(-1)
        );
        // evaluation of x^2+1 at root of x
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[0, 1])).unwrap(), BigInt::from(1));
        // Sylvester determinant with non-monic second argument
        let q = IntPolynomial {
            coeffs: vec![BigInt::from(-1), BigInt::from(2)],
        };
        assert_eq!(
            resultant_raw(p(&[-1, -1, 1]).coeffs(), q.coeffs()).unwrap(),
            BigInt::from(-5)
        );
    }

    #[test]
    fn resultant_zero_polynomial_rejected() {
        assert!(resultant_raw(&[BigInt::zero()], &[BigInt::one()]).is_err());
    }

    #[test]
    fn translate_examples() {
        let phi = p(&[-1, -1, 1]);
        assert_eq!(phi.translate(&BigInt::from(1)), p(&[1, -3, 1]));
        assert_eq!(phi.translate(&BigInt::zero()), phi);
        let cubic = p(&[-1, -3, 0, 1]);
        assert_eq!(
            cubic.translate(&BigInt::from(2)).discriminant().unwrap(),
            cubic.discriminant().unwrap()
        );
    }

    #[test]
    fn irreducibility() {
        assert!(p(&[-1, -1, 1]).is_irreducible_low_degree().unwrap());
        assert!(p(&[-1, -4, 0, 1]).is_irreducible_low_degree().unwrap());
        assert!(!p(&[-4, 0, 1]).is_irreducible_low_degree().unwrap());
        assert!(!p(&[0, -4, 0, 1]).is_irreducible_low_degree().unwrap());
        assert!(p(&[84, -20, -1, 1]).is_irreducible_low_degree().unwrap());
        assert!(matches!(
            p(&[1, 0, 0, 0, 1]).is_irreducible_low_degree(),
            Err(Error::UnsupportedDegree(4))
        ));
    }

    #[test]
    fn totally_real() {
        assert!(p(&[-1, -1, 1]).is_totally_real().unwrap());
        assert!(!p(&[-1, -1, 0, 1]).is_totally_real().unwrap()); // disc -23
        assert!(p(&[-1, -4, 0, 1]).is_totally_real().unwrap()); // disc 229
        assert!(p(&[-1, -3, 0, 1]).is_totally_real().unwrap());
        assert!(!p(&[1, 0, 1]).is_totally_real().unwrap());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(p(&[-1, -1, 1]).count_real_roots(), 2);
        assert_eq!(p(&[1, 0, 1]).count_real_roots(), 0);
        assert_eq!(p(&[-1, -4, 0, 1]).count_real_roots(), 3);
        assert_eq!(p(&[-1, -1, 0, 1]).count_real_roots(), 1);
        assert_eq!(p(&[0, 1]).count_real_roots(), 1);
    }

    #[test]
    fn parsing() {
        let phi: IntPolynomial = "x^2-x-1".parse().unwrap();
        assert_eq!(phi, p(&[-1, -1, 1]));
        // coefficient lists are read constant-first; a highest-first list is
        // rejected by the monic check rather than silently reinterpreted
        assert!("1,-1,-1".parse::<IntPolynomial>().is_err());
        let c: IntPolynomial = "-1,-1,1".parse().unwrap();
        assert_eq!(c, p(&[-1, -1, 1]));
        let d: IntPolynomial = "x^3 - 12x - 8".parse().unwrap();
        assert_eq!(d, p(&[-8, -12, 0, 1]));
        assert_eq!(d.to_string(), "x^3-12x-8");
        let e: IntPolynomial = "x^3-4*x^2+3*x+32".parse().unwrap();
        assert_eq!(e, p(&[32, 3, -4, 1]));
        assert!("x^2+x^2-2x^2".parse::<IntPolynomial>().is_err()); // zero, non-monic
        assert!("2x^2-1".parse::<IntPolynomial>().is_err()); // non-monic
        assert_eq!(p(&[-1, -1, 1]).to_string(), "x^2-x-1");
        assert_eq!(p(&[1, -3, 1]).to_string(), "x^2-3x+1");
    }

    #[test]
    fn display_round_trip() {
        for cs in [
            vec![-1i64, -1, 1],
            vec![-8, -12, 0, 1],
            vec![84, -20, -1, 1],
            vec![0, 1, 1],
        ] {
            let q = p(&cs);
            let back: IntPolynomial = q.to_string().parse().unwrap();
            assert_eq!(q, back);
        }
    }
}
