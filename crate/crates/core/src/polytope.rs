//! Generalized permutohedra `Σ y_I Δ_I` as formal Minkowski sums of scaled
//! coordinate simplices.

use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::Partition;

pub type LatticePoint = Vec<u32>;

/// `weight · Δ_indices`, indices 1-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexTerm {
    indices: Vec<usize>,
    weight: u32,
}

impl SimplexTerm {
    pub fn new(indices: impl IntoIterator<Item = usize>, weight: u32) -> Result<Self> {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        Ok(SimplexTerm { indices, weight })
    }

    /// `weight · Δ_{[lo, hi]}`.
    pub fn interval(lo: usize, hi: usize, weight: u32) -> Result<Self> {
        Self::new(lo..=hi, weight)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Whether the index set is contained in the interval `[lo, hi]`.
    pub fn within(&self, lo: usize, hi: usize) -> bool {
        self.indices[0] >= lo && *self.indices.last().unwrap() <= hi
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPermutohedron {
    n: usize,
    terms: Vec<SimplexTerm>,
}

impl GenPermutohedron {
    /// Drops zero-weight terms and checks every index lies in `1..=n`.
    pub fn new(n: usize, terms: Vec<SimplexTerm>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        for t in &terms {
            if let Some(&bad) = t.indices.iter().find(|&&i| i == 0 || i > n) {
                return Err(Error::IndexOutOfRange { index: bad, n });
            }
        }
        let terms = terms.into_iter().filter(|t| t.weight > 0).collect();
        Ok(GenPermutohedron { n, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[SimplexTerm] {
        &self.terms
    }

    /// Sum of the weights; every lattice point has this coordinate sum.
    pub fn coordinate_sum(&self) -> u32 {
        self.terms.iter().map(|t| t.weight).sum()
    }

    /// Integer points of the Minkowski sum, lexicographically sorted.
    ///
    /// The integer points of `Σ Δ_{I_j}` are exactly the sums of one vertex
    /// per simplex, so each `y·Δ_I` is processed as `y` unit steps, each step
    /// adding some `e_i` with `i ∈ I` to every point found so far.
    pub fn lattice_points(&self) -> BTreeSet<LatticePoint> {
        let mut points: BTreeSet<LatticePoint> = BTreeSet::new();
        points.insert(vec![0; self.n]);
        for term in &self.terms {
            for _ in 0..term.weight {
                let mut next = BTreeSet::new();
                for p in &points {
                    for &i in &term.indices {
                        let mut q = p.clone();
                        q[i - 1] += 1;
                        next.insert(q);
                    }
                }
                points = next;
            }
        }
        points
    }

    /// Unique maximizer of `w · x`: every term contributes `weight · e_{argmax}`.
    /// A tie for the maximum inside any term's index set is rejected.
    pub fn maximize(&self, w: &[BigRational]) -> Result<LatticePoint> {
        if w.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: w.len(),
            });
        }
        let mut point = vec![0; self.n];
        for term in &self.terms {
            let mut best = term.indices[0];
            let mut tied = false;
            for &i in &term.indices[1..] {
                match w[i - 1].cmp(&w[best - 1]) {
                    std::cmp::Ordering::Greater => {
                        best = i;
                        tied = false;
                    }
                    std::cmp::Ordering::Equal => tied = true,
                    std::cmp::Ordering::Less => {}
                }
            }
            if tied {
                return Err(Error::NonGeneric {
                    indices: term.indices.clone(),
                });
            }
            point[best - 1] += term.weight;
        }
        Ok(point)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// The vertex set, as the greedy maximizers of every strict ordering of the
/// coordinates. A generic functional's maximizer depends only on the order
/// of its entries, so this is exhaustive.
pub fn vertices_by_orderings(p: &GenPermutohedron) -> BTreeSet<LatticePoint> {
    permutations(p.n)
        .into_iter()
        .map(|ranks| {
            let w: Vec<BigRational> = ranks
                .iter()
                .map(|&r| BigRational::from_integer((r as i64).into()))
                .collect();
            p.maximize(&w).expect("distinct ranks are generic")
        })
        .collect()
}

/// `P_λ = Σ_{1≤i≤j≤n−1} Δ_{[i,j]} + Σ_i λ_i Δ_{[i,n]}`.
pub fn p_lambda(lambda: &Partition) -> GenPermutohedron {
    let n = lambda.n();
    let mut terms = Vec::new();
    for i in 1..n {
        for j in i..n {
            terms.push(SimplexTerm::interval(i, j, 1).expect("non-empty interval"));
        }
    }
    for i in 1..=n {
        terms.push(SimplexTerm::interval(i, n, lambda.part(i)).expect("non-empty interval"));
    }
    GenPermutohedron::new(n, terms).expect("indices within 1..=n")
}

/// `Σ λ_i Δ_{[i,n]}`, the Newton polytope of the substituted Schur polynomial.
pub fn schur_polytope(lambda: &Partition) -> GenPermutohedron {
    let n = lambda.n();
    let terms = (1..=n)
        .map(|i| SimplexTerm::interval(i, n, lambda.part(i)).expect("non-empty interval"))
        .collect();
    GenPermutohedron::new(n, terms).expect("indices within 1..=n")
}

pub fn lattice_points(p: &GenPermutohedron) -> BTreeSet<LatticePoint> {
    p.lattice_points()
}

pub fn maximize(p: &GenPermutohedron, w: &[BigRational]) -> Result<LatticePoint> {
    p.maximize(w)
}

pub fn coordinate_sum(p: &GenPermutohedron) -> u32 {
    p.coordinate_sum()
}

/// `w · x` over the rationals.
pub fn pairing(w: &[BigRational], x: &[u32]) -> BigRational {
    w.iter()
        .zip(x)
        .map(|(wi, &xi)| wi * BigRational::from_integer(xi.into()))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn part(parts: &[u32], n: usize) -> Partition {
        Partition::new(parts.to_vec(), n).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
    }

    fn set(points: &[&[u32]]) -> BTreeSet<LatticePoint> {
        points.iter().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn p_lambda_terms() {
        let p = p_lambda(&part(&[], 2));
        assert_eq!(p.terms(), &[SimplexTerm::new([1], 1).unwrap()]);

        let p = p_lambda(&part(&[1, 0], 2));
        assert_eq!(
            p.terms(),
            &[SimplexTerm::new([1], 1).unwrap(), SimplexTerm::new([1, 2], 1).unwrap()]
        );

        let p = p_lambda(&part(&[4, 2, 1, 0], 4));
        let units: Vec<_> = p.terms().iter().filter(|t| !t.contains(4)).collect();
        assert_eq!(units.len(), 6);
        assert!(units.iter().all(|t| t.weight() == 1));
        let tops: Vec<_> = p
            .terms()
            .iter()
            .filter(|t| t.contains(4))
            .map(|t| (t.indices().to_vec(), t.weight()))
            .collect();
        assert_eq!(
            tops,
            vec![(vec![1, 2, 3, 4], 4), (vec![2, 3, 4], 2), (vec![3, 4], 1)]
        );
    }

    #[test]
    fn lattice_point_examples() {
        let single = GenPermutohedron::new(2, vec![SimplexTerm::new([1], 1).unwrap()]).unwrap();
        assert_eq!(lattice_points(&single), set(&[&[1, 0]]));
        assert_eq!(
            lattice_points(&p_lambda(&part(&[1, 0], 2))),
            set(&[&[2, 0], &[1, 1]])
        );
        let scaled = GenPermutohedron::new(1, vec![SimplexTerm::new([1], 5).unwrap()]).unwrap();
        assert_eq!(lattice_points(&scaled), set(&[&[5]]));
    }

    #[test]
    fn sum_of_weights() {
        assert_eq!(coordinate_sum(&p_lambda(&part(&[4, 2, 1, 0], 4))), 13);
        assert_eq!(coordinate_sum(&p_lambda(&part(&[], 2))), 1);
        assert_eq!(coordinate_sum(&p_lambda(&part(&[7], 1))), 7);
    }

    #[test]
    fn greedy_maximizer() {
        let p = p_lambda(&part(&[1, 0], 2));
        assert_eq!(maximize(&p, &ints(&[1, 0])).unwrap(), vec![2, 0]);
        assert_eq!(maximize(&p, &ints(&[0, 1])).unwrap(), vec![1, 1]);
        assert!(matches!(
            maximize(&p, &ints(&[1, 1])),
            Err(Error::NonGeneric { .. })
        ));
        assert!(matches!(
            maximize(&p, &ints(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));

        let p = p_lambda(&part(&[2, 1, 1], 3));
        let picked = maximize(&p, &ints(&[3, 2, 1])).unwrap();
        let mut expected = vec![0; 3];
        for t in p.terms() {
            expected[t.indices()[0] - 1] += t.weight();
        }
        assert_eq!(picked, expected);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SimplexTerm::new([], 1), Err(Error::EmptyIndexSet));
        assert!(matches!(
            GenPermutohedron::new(2, vec![SimplexTerm::new([3], 1).unwrap()]),
            Err(Error::IndexOutOfRange { index: 3, n: 2 })
        ));
        let p = GenPermutohedron::new(2, vec![SimplexTerm::new([1, 2], 0).unwrap()]).unwrap();
        assert!(p.terms().is_empty());
        assert_eq!(p.lattice_points(), set(&[&[0, 0]]));
    }

    #[test]
    fn orderings() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        // a segment has both endpoints as vertices
        assert_eq!(
            vertices_by_orderings(&p_lambda(&part(&[1, 0], 2))),
            set(&[&[2, 0], &[1, 1]])
        );
        // triangle plus a parallel segment: a trapezoid
        assert_eq!(vertices_by_orderings(&p_lambda(&part(&[1, 0, 0], 3))).len(), 4);
    }

    #[test]
    fn level_sets() {
        for n in 1..=4 {
            for lambda in Partition::all_bounded(n, 2) {
                let p = p_lambda(&lambda);
                let s = p.coordinate_sum();
                assert!(p.lattice_points().iter().all(|x| x.iter().sum::<u32>() == s));
            }
        }
    }
}
