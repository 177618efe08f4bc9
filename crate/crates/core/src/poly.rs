//! Exact sparse multivariate polynomials in `t_1, …, t_n`, Schur polynomials
//! under the prefix-sum substitution, and both sides of the diagonal-vector
//! generating-function identity.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableaux::GapTable;

/// Exponents `(a_1, …, a_n)` of the monomial `t_1^{a_1} ⋯ t_n^{a_n}`.
pub type ExponentVector = Vec<u32>;

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

/// Graded lexicographic comparison: total degree first, then lexicographic.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl RationalPolynomial {
    pub fn zero(nvars: usize) -> Self {
        RationalPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The single variable `t_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, BigRational::one())
    }

    pub fn monomial(exp: ExponentVector, c: BigRational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn coefficient(&self, exp: &[u32]) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms_grlex(&self) -> Vec<(&ExponentVector, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }

    /// Adds `c · t^exp` in place.
    pub fn add_term(&mut self, exp: ExponentVector, c: BigRational) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        RationalPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exponent vectors with a non-zero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong dimension");
        let mut total = BigRational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                if e > 0 {
                    term *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += term;
        }
        total
    }

    /// Serializable form: terms in descending graded-lex order.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms_grlex()
            .into_iter()
            .map(|(e, c)| JsonTerm {
                exp: e.clone(),
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for t in terms {
            if t.exp.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: t.exp.len(),
                });
            }
            let parse = |s: &str| {
                s.parse::<BigInt>().map_err(|e| Error::BadPart {
                    text: s.to_string(),
                    reason: e.to_string(),
                })
            };
            let den = parse(&t.den)?;
            if den.is_zero() {
                return Err(Error::BadPart {
                    text: t.den.clone(),
                    reason: "zero denominator".to_string(),
                });
            }
            p.add_term(t.exp.clone(), BigRational::new(parse(&t.num)?, den));
        }
        Ok(p)
    }
}

/// One term of the JSON serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: HashMap<ExponentVector, BigRational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: ExponentVector = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        RationalPolynomial {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (exp, c)) in self.terms_grlex().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let c = c.abs();
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        format!("t{}", j + 1)
                    } else {
                        format!("t{}^{}", j + 1, e)
                    }
                })
                .collect();
            let numer = c.numer();
            let denom = c.denom();
            if vars.is_empty() {
                write!(f, "{numer}")?;
            } else if numer.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{numer}*{}", vars.join("*"))?;
            }
            if !denom.is_one() {
                write!(f, "/{denom}")?;
            }
        }
        Ok(())
    }
}

pub fn factorial(m: u32) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `Σ_{i ∈ indices} t_i` (1-based indices).
pub fn linear_form(nvars: usize, indices: &[usize]) -> Result<RationalPolynomial> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let mut p = RationalPolynomial::zero(nvars);
    for &i in indices {
        if i == 0 || i > nvars {
            return Err(Error::IndexOutOfRange { index: i, n: nvars });
        }
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        p.add_term(e, BigRational::one());
    }
    Ok(p)
}

/// `t_lo + ⋯ + t_hi`.
fn interval_form(nvars: usize, lo: usize, hi: usize) -> RationalPolynomial {
    let indices: Vec<usize> = (lo..=hi).collect();
    linear_form(nvars, &indices).expect("interval within range")
}

/// `∏_{1 ≤ i < j ≤ n} (t_i + ⋯ + t_{j-1})`.
pub fn staircase_product(n: usize) -> RationalPolynomial {
    let mut p = RationalPolynomial::one(n);
    for i in 1..=n {
        for j in i + 1..=n {
            p = &p * &interval_form(n, i, j - 1);
        }
    }
    p
}

/// A semistandard tableau of an ordinary (unshifted) shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ssyt {
    pub rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// `w_i` = number of entries equal to `i`.
    pub fn weight(&self, max_entry: u32) -> Vec<u32> {
        let mut w = vec![0; max_entry as usize];
        for &e in self.rows.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        w
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].len() <= pair[0].len() && pair[1].iter().zip(&pair[0]).all(|(lo, hi)| hi < lo)
        });
        rows_ok && cols_ok
    }
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// in lexicographic order of the row-major entry sequence.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<Ssyt> {
    let lens: Vec<usize> = shape
        .parts()
        .iter()
        .map(|&p| p as usize)
        .filter(|&p| p > 0)
        .collect();
    // Column c has height = number of rows longer than c.
    let height = |c: usize| lens.iter().filter(|&&l| l > c).count() as u32;
    let mut rows: Vec<Vec<u32>> = lens.iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();

    fn fill(
        r: usize,
        c: usize,
        lens: &[usize],
        height: &dyn Fn(usize) -> u32,
        max_entry: u32,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<Ssyt>,
    ) {
        if r == lens.len() {
            out.push(Ssyt { rows: rows.clone() });
            return;
        }
        if c == lens[r] {
            fill(r + 1, 0, lens, height, max_entry, rows, out);
            return;
        }
        let from_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let from_above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        // Leave room for the strictly increasing entries further down the column.
        let below = height(c) - r as u32 - 1;
        if max_entry < below {
            return;
        }
        for v in from_left.max(from_above)..=max_entry - below {
            rows[r][c] = v;
            fill(r, c + 1, lens, height, max_entry, rows, out);
        }
    }

    fill(0, 0, &lens, &height, max_entry, &mut rows, &mut out);
    out
}

/// `s_λ(t_1+⋯+t_n, t_2+⋯+t_n, …, t_n)`, summed over semistandard tableaux
/// as `∏_i (t_i + ⋯ + t_n)^{w_i}`.
pub fn schur_substituted(lambda: &Partition, n: usize) -> Result<RationalPolynomial> {
    let len = lambda.positive_part_count();
    if len > n {
        return Err(Error::TooManyParts { got: len, n });
    }
    let suffix: Vec<RationalPolynomial> = (1..=n).map(|i| interval_form(n, i, n)).collect();
    let mut powers: HashMap<(usize, u32), RationalPolynomial> = HashMap::new();
    let mut total = RationalPolynomial::zero(n);
    for t in enumerate_ssyt(lambda, n as u32) {
        let mut term = RationalPolynomial::one(n);
        for (i, &w) in t.weight(n as u32).iter().enumerate() {
            if w == 0 {
                continue;
            }
            let factor = powers
                .entry((i, w))
                .or_insert_with(|| suffix[i].pow(w));
            term = &term * factor;
        }
        total = &total + &term;
    }
    Ok(total)
}

/// `Σ_a N_λ(a) · ∏_i t_i^{a_i} / a_i!`.
pub fn lhs_polynomial(nvars: usize, table: &GapTable) -> RationalPolynomial {
    let mut p = RationalPolynomial::zero(nvars);
    for (gaps, count) in &table.counts {
        let denom: BigUint = gaps.0.iter().map(|&a| factorial(a)).product();
        let c = BigRational::new(BigInt::from(count.clone()), BigInt::from(denom));
        p.add_term(gaps.0.clone(), c);
    }
    p
}

/// `(1 / ∏_i (λ_i + n − i)!) · ∏_{i<j} (t_i+⋯+t_{j−1}) · s_λ(t_1+⋯+t_n, …, t_n)`.
pub fn rhs_polynomial(lambda: &Partition) -> RationalPolynomial {
    let n = lambda.n();
    let denom: BigUint = (1..=n)
        .map(|i| factorial(lambda.part(i) + (n - i) as u32))
        .product();
    let prefactor = BigRational::new(BigInt::one(), BigInt::from(denom));
    let schur = schur_substituted(lambda, n).expect("partition length is n");
    (&staircase_product(n) * &schur).scale(&prefactor)
}

pub fn support(p: &RationalPolynomial) -> BTreeSet<ExponentVector> {
    p.support()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::ShiftedDiagram;
    use crate::tableaux::{count_by_gaps, GapVector};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(nvars: usize, terms: &[(&[u32], i64, i64)]) -> RationalPolynomial {
        let mut p = RationalPolynomial::zero(nvars);
        for &(e, n, d) in terms {
            p.add_term(e.to_vec(), q(n, d));
        }
        p
    }

    fn part(parts: &[u32], n: usize) -> Partition {
        Partition::new(parts.to_vec(), n).unwrap()
    }

    #[test]
    fn linear_forms() {
        assert_eq!(linear_form(4, &[1]).unwrap(), RationalPolynomial::var(4, 1));
        assert_eq!(
            linear_form(2, &[1, 2]).unwrap(),
            poly(2, &[(&[1, 0], 1, 1), (&[0, 1], 1, 1)])
        );
        assert_eq!(
            linear_form(4, &[2, 3, 4]).unwrap().support(),
            [vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]].into_iter().collect()
        );
        assert_eq!(linear_form(3, &[]), Err(Error::EmptyIndexSet));
        assert!(matches!(linear_form(3, &[4]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn staircase_products() {
        assert_eq!(staircase_product(1), RationalPolynomial::one(1));
        assert_eq!(staircase_product(2), RationalPolynomial::var(2, 1));
        let t1 = RationalPolynomial::var(3, 1);
        let t2 = RationalPolynomial::var(3, 2);
        let expected = &(&t1 * &(&t1 + &t2)) * &t2;
        assert_eq!(staircase_product(3), expected);
    }

    #[test]
    fn ssyt_examples() {
        let one = enumerate_ssyt(&part(&[1], 2), 2);
        let weights: Vec<_> = one.iter().map(|t| t.weight(2)).collect();
        assert_eq!(weights, vec![vec![1, 0], vec![0, 1]]);

        let hook = enumerate_ssyt(&part(&[2, 1], 2), 2);
        let weights: Vec<_> = hook.iter().map(|t| t.weight(2)).collect();
        assert_eq!(weights, vec![vec![2, 1], vec![1, 2]]);

        assert!(enumerate_ssyt(&part(&[1, 1, 1], 3), 2).is_empty());
        // s_∅ = 1: exactly one (empty) tableau
        assert_eq!(enumerate_ssyt(&part(&[], 3), 3).len(), 1);
    }

    #[test]
    fn ssyt_counts_match_hook_content() {
        // s_λ(1,…,1) = ∏ (n + c(u)) / h(u); values from the hook-content formula.
        let cases: &[(&[u32], u32, usize)] = &[
            (&[2, 1], 3, 8),
            (&[2, 2], 3, 6),
            (&[3, 1], 4, 45),
            (&[3, 3, 3, 3], 4, 1),
            (&[2], 4, 10),
        ];
        for &(shape, n, count) in cases {
            let all = enumerate_ssyt(&part(shape, shape.len()), n);
            assert_eq!(all.len(), count, "shape {shape:?}, n = {n}");
            assert!(all.iter().all(Ssyt::is_semistandard));
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_substituted(&part(&[1], 2), 2).unwrap(),
            poly(2, &[(&[1, 0], 1, 1), (&[0, 1], 2, 1)])
        );
        assert_eq!(
            schur_substituted(&part(&[1, 1], 2), 2).unwrap(),
            poly(2, &[(&[1, 1], 1, 1), (&[0, 2], 1, 1)])
        );
        let s = linear_form(2, &[1, 2]).unwrap();
        let t2 = RationalPolynomial::var(2, 2);
        let expected = &(&s.pow(2) + &(&s * &t2)) + &t2.pow(2);
        assert_eq!(schur_substituted(&part(&[2], 2), 2).unwrap(), expected);
        assert!(schur_substituted(&part(&[1, 1, 1], 3), 2).is_err());
    }

    #[test]
    fn rhs_examples() {
        assert_eq!(
            rhs_polynomial(&part(&[1, 0], 2)),
            poly(2, &[(&[2, 0], 1, 2), (&[1, 1], 1, 1)])
        );
        for m in 0..6u32 {
            let expected = poly(1, &[(&[m], 1, factorial(m).try_into().unwrap())]);
            assert_eq!(rhs_polynomial(&part(&[m], 1)), expected);
        }
        assert_eq!(rhs_polynomial(&part(&[], 2)), RationalPolynomial::var(2, 1));
    }

    #[test]
    fn lhs_examples() {
        let table = count_by_gaps(&ShiftedDiagram::new(part(&[], 2)));
        assert_eq!(lhs_polynomial(2, &table), RationalPolynomial::var(2, 1));
        let table = count_by_gaps(&ShiftedDiagram::new(part(&[1, 0], 2)));
        assert_eq!(
            lhs_polynomial(2, &table),
            poly(2, &[(&[2, 0], 1, 2), (&[1, 1], 1, 1)])
        );
        let mut table = GapTable::default();
        table.counts.insert(GapVector(vec![4]), BigUint::one());
        assert_eq!(lhs_polynomial(1, &table), poly(1, &[(&[4], 1, 24)]));
    }

    #[test]
    fn supports() {
        let p = poly(2, &[(&[2, 0], 1, 2), (&[1, 1], 1, 1)]);
        assert_eq!(support(&p), [vec![2, 0], vec![1, 1]].into_iter().collect());
        assert!(support(&RationalPolynomial::zero(3)).is_empty());
        let sq = linear_form(2, &[1, 2]).unwrap().pow(2);
        assert_eq!(
            support(&sq),
            [vec![2, 0], vec![1, 1], vec![0, 2]].into_iter().collect()
        );
    }

    #[test]
    fn display_and_json() {
        let p = poly(2, &[(&[2, 0], 1, 2), (&[1, 1], 1, 1), (&[0, 0], -3, 1)]);
        assert_eq!(p.to_string(), "t1^2/2 + t1*t2 - 3");
        let json = p.to_json_terms();
        assert_eq!(json[0].exp, vec![2, 0]);
        assert_eq!(json[0].den, "2");
        assert_eq!(RationalPolynomial::from_json_terms(2, &json).unwrap(), p);
        assert_eq!(RationalPolynomial::zero(1).to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let p = poly(2, &[(&[2, 0], 1, 2), (&[1, 1], 1, 1)]);
        // 9/2 + 3·(1/3) = 11/2
        assert_eq!(p.evaluate(&[q(3, 1), q(1, 3)]), q(11, 2));
    }
}
