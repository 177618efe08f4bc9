//! Mechanical checks of the relations between tableaux, polynomials,
//! lattice points and trees, packaged as pass/fail reports.
//!
//! Every check is exact. Randomized checks draw from a ChaCha stream seeded
//! per case, so results do not depend on how cases are scheduled.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::poly::{linear_form, lhs_polynomial, rhs_polynomial, schur_substituted, RationalPolynomial};
use crate::polytope::{
    p_lambda, pairing, schur_polytope, vertices_by_orderings, GenPermutohedron, LatticePoint, SimplexTerm,
};
use crate::shapes::{build_diagram, Partition, ShiftedDiagram};
use crate::tableaux::{
    count_by_gaps, entries_are_standard, enumerate_tableaux, for_each_tableau, tableau_with_diagonal,
    DiagonalVector, GapTable, GapVector,
};
use crate::trees::{
    catalan, construct_vertex_tableau, enumerate_trees, enumerate_vertices, tree_family_vertices,
    tree_to_subdivision, vertex_count_closed_form, vertex_count_printed, vertex_from_tree, VertexPoint,
};
use crate::Error;

pub const DEFAULT_SEED: u64 = 0x5eed_d1a6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one claim. A failing report always carries a witness; a
/// passing one may carry informational data in the same slot.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: Value,
    pub status: Status,
    pub witness: Option<Value>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// The shapes a claim runs over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Grid {
    Single(Partition),
    /// Every `n ≤ max_n` and every partition of length `n` with parts `≤ max_part`.
    Bounded { max_n: usize, max_part: u32 },
}

impl Grid {
    pub fn cases(&self) -> Vec<Partition> {
        match self {
            Grid::Single(lambda) => vec![lambda.clone()],
            Grid::Bounded { max_n, max_part } => (1..=*max_n)
                .flat_map(|n| Partition::all_bounded(n, *max_part))
                .collect(),
        }
    }

    pub fn params(&self) -> Value {
        match self {
            Grid::Single(lambda) => json!({ "n": lambda.n(), "lambda": lambda.parts() }),
            Grid::Bounded { max_n, max_part } => json!({
                "max_n": max_n,
                "max_part": max_part,
                "cases": self.cases().len(),
            }),
        }
    }
}

/// Settings shared by `verify all`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub grid: Grid,
    pub seed: u64,
    /// Largest `n` for the `B_k`-forest counts.
    pub count_max_n: usize,
    /// Random functionals per shape in the extremity check.
    pub functionals: usize,
    /// Random interval families in the product-support check.
    pub families: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            grid: Grid::Bounded { max_n: 4, max_part: 3 },
            seed: DEFAULT_SEED,
            count_max_n: 8,
            functionals: 500,
            families: 50,
        }
    }
}

fn timed(claim: &str, params: Value, check: impl FnOnce() -> (bool, Option<Value>)) -> VerificationReport {
    let start = Instant::now();
    let (ok, witness) = check();
    VerificationReport {
        claim: claim.to_string(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        witness,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// First failing case, found in parallel but reported in grid order.
fn first_failure<F>(cases: &[Partition], check: F) -> Option<Value>
where
    F: Fn(usize, &Partition) -> Option<Value> + Sync,
{
    let results: Vec<Option<Value>> = cases
        .par_iter()
        .enumerate()
        .map(|(idx, lambda)| check(idx, lambda))
        .collect();
    results.into_iter().flatten().next()
}

fn case_json(lambda: &Partition) -> Value {
    json!({ "n": lambda.n(), "lambda": lambda.parts() })
}

fn with_case(lambda: &Partition, extra: Value) -> Value {
    let mut v = case_json(lambda);
    if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
        base.extend(more);
    }
    v
}

fn case_rng(seed: u64, idx: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn table_for(lambda: &Partition) -> GapTable {
    count_by_gaps(&ShiftedDiagram::new(lambda.clone()))
}

/// Generating-function identity: `Σ_a N_λ(a) t^a / a!` equals
/// `∏_{i<j}(t_i+⋯+t_{j−1}) · s_λ(prefix sums) / ∏(λ_i+n−i)!` exactly.
pub fn identity_case(lambda: &Partition) -> Option<Value> {
    let lhs = lhs_polynomial(lambda.n(), &table_for(lambda));
    let rhs = rhs_polynomial(lambda);
    (lhs != rhs).then(|| {
        with_case(
            lambda,
            json!({
                "lhs": lhs.to_json_terms(),
                "rhs": rhs.to_json_terms(),
                "difference": (&lhs - &rhs).to_json_terms(),
            }),
        )
    })
}

pub fn verify_identity(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    timed("identity", grid.params(), || {
        let w = first_failure(&cases, |_, l| identity_case(l));
        (w.is_none(), w)
    })
}

fn set_difference_json(lambda: &Partition, gaps: &BTreeSet<Vec<u32>>, points: &BTreeSet<LatticePoint>) -> Value {
    let only_gaps: Vec<_> = gaps.difference(points).collect();
    let only_points: Vec<_> = points.difference(gaps).collect();
    with_case(
        lambda,
        json!({
            "gap_vectors": gaps.len(),
            "lattice_points": points.len(),
            "only_gap_vectors": only_gaps,
            "only_lattice_points": only_points,
        }),
    )
}

/// Gap vectors of the tableaux of `D_λ` are exactly the lattice points of `P_λ`,
/// and distinct diagonal vectors are as many as lattice points.
pub fn bijection_case(lambda: &Partition) -> Option<Value> {
    let table = table_for(lambda);
    let gaps = table.support();
    let points = p_lambda(lambda).lattice_points();
    let diagonals: BTreeSet<DiagonalVector> = table.counts.keys().map(GapVector::to_diagonal).collect();
    (gaps != points || diagonals.len() != points.len())
        .then(|| set_difference_json(lambda, &gaps, &points))
}

pub fn verify_bijection(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    timed("bijection", grid.params(), || {
        let w = first_failure(&cases, |_, l| bijection_case(l));
        (w.is_none(), w)
    })
}

/// `B_k`-forest counts against `Σ_{i≤k} C_{i−1} C_{n−i}` and, at `k = n`,
/// against `C_n`. Differences from the printed-index form are reported in
/// the witness slot without failing.
pub fn verify_vertex_count(max_n: usize) -> VerificationReport {
    timed("vertex-count", json!({ "max_n": max_n }), || {
        let mut failures = Vec::new();
        let mut discrepancies = Vec::new();
        for n in 1..=max_n {
            let trees = enumerate_trees(n);
            for k in 1..=n {
                let enumerated = BigUint::from(trees.iter().filter(|t| t.is_bk_forest(k)).count());
                let closed = vertex_count_closed_form(n, k);
                let printed = vertex_count_printed(n, k);
                let catalan_ok = k < n || enumerated == catalan(n);
                if enumerated != closed || !catalan_ok {
                    failures.push(json!({
                        "n": n, "k": k,
                        "enumerated": enumerated.to_string(),
                        "closed_form": closed.to_string(),
                    }));
                }
                if printed != enumerated {
                    discrepancies.push(json!({
                        "n": n, "k": k,
                        "enumerated": enumerated.to_string(),
                        "printed_form": printed.to_string(),
                    }));
                }
            }
        }
        if failures.is_empty() {
            (true, Some(json!({ "printed_form_discrepancies": discrepancies })))
        } else {
            (false, Some(json!({ "mismatches": failures })))
        }
    })
}

fn random_functional(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| {
            let num: i64 = rng.random_range(-1000..=1000);
            let den: i64 = rng.random_range(1..=60);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect()
}

/// A functional favouring shallow nodes: `w_i = −depth(i) + ε_i`, `ε_i ∈ (0, 1/2)`.
/// Nodes absent from the forest (coordinate `n` when `λ = ∅`) get the lowest weight.
fn tree_functional(rng: &mut ChaCha8Rng, v: &VertexPoint, n: usize) -> Vec<BigRational> {
    (1..=n)
        .map(|i| {
            let depth = if v.forest.contains(i) { v.forest.depth(i) as i64 } else { n as i64 + 1 };
            let eps = BigRational::new(BigInt::from(rng.random_range(1..1000i64)), BigInt::from(2000));
            BigRational::from_integer(BigInt::from(-depth)) + eps
        })
        .collect()
}

/// Unique maximizer of `w · x` over a finite set, if any.
fn unique_argmax<'a>(points: &'a BTreeSet<LatticePoint>, w: &[BigRational]) -> Option<&'a LatticePoint> {
    let mut best: Option<(BigRational, &LatticePoint, bool)> = None;
    for p in points {
        let value = pairing(w, p);
        best = match best {
            None => Some((value, p, true)),
            Some((b, bp, unique)) => match value.cmp(&b) {
                std::cmp::Ordering::Greater => Some((value, p, true)),
                std::cmp::Ordering::Equal => Some((b, bp, false)),
                std::cmp::Ordering::Less => Some((b, bp, unique)),
            },
        };
    }
    best.and_then(|(_, p, unique)| unique.then_some(p))
}

/// Number of random functionals whose maximizer is cross-checked against the
/// full lattice-point set (the rest are only checked for vertex membership).
const BRUTE_FORCE_FUNCTIONALS: usize = 100;

pub fn extremity_case(lambda: &Partition, mut rng: ChaCha8Rng, functionals: usize) -> Option<Value> {
    let n = lambda.n();
    let p = p_lambda(lambda);
    let points = p.lattice_points();
    let vertices = enumerate_vertices(lambda);
    let vertex_set: BTreeSet<&LatticePoint> = vertices.iter().map(|v| &v.t).collect();
    if vertex_set.len() != vertices.len() {
        return Some(with_case(lambda, json!({ "error": "two forests give the same vertex" })));
    }
    let oracle = vertices_by_orderings(&p);
    if oracle.iter().collect::<BTreeSet<_>>() != vertex_set {
        let enumerated: BTreeSet<LatticePoint> = vertex_set.iter().map(|t| t.to_vec()).collect();
        return Some(with_case(lambda, json!({
            "missing": oracle.difference(&enumerated).collect::<Vec<_>>(),
            "extra": enumerated.difference(&oracle).collect::<Vec<_>>(),
            "error": "forest vertices differ from the maximizers of coordinate orderings",
        })));
    }
    for v in &vertices {
        if !points.contains(&v.t) {
            return Some(with_case(lambda, json!({ "forest": v.forest.encoding(), "vertex": v.t, "error": "not a lattice point" })));
        }
        let w = tree_functional(&mut rng, v, n);
        let greedy = p.maximize(&w);
        let brute = unique_argmax(&points, &w);
        if greedy.as_ref() != Ok(&v.t) || brute != Some(&v.t) {
            return Some(with_case(lambda, json!({
                "forest": v.forest.encoding(),
                "vertex": v.t,
                "greedy": greedy.ok(),
                "brute_force": brute,
                "error": "tree functional does not single out the vertex",
            })));
        }
    }
    let mut done = 0;
    while done < functionals {
        let w = random_functional(&mut rng, n);
        let x = match p.maximize(&w) {
            Ok(x) => x,
            Err(Error::NonGeneric { .. }) => continue,
            Err(e) => return Some(with_case(lambda, json!({ "error": e.to_string() }))),
        };
        let brute_ok = done >= BRUTE_FORCE_FUNCTIONALS || unique_argmax(&points, &w) == Some(&x);
        if !vertex_set.contains(&x) || !brute_ok {
            let w: Vec<String> = w.iter().map(ToString::to_string).collect();
            return Some(with_case(lambda, json!({
                "functional": w, "maximizer": x, "error": "maximizer is not an enumerated vertex",
            })));
        }
        done += 1;
    }
    None
}

/// Every forest vertex is a lattice point singled out by a generic functional,
/// and random generic functionals only ever pick forest vertices.
pub fn verify_vertex_extremity(grid: &Grid, seed: u64, functionals: usize) -> VerificationReport {
    let cases = grid.cases();
    let mut params = grid.params();
    params["seed"] = json!(seed);
    params["functionals"] = json!(functionals);
    timed("vertex-extremity", params, || {
        let w = first_failure(&cases, |idx, l| extremity_case(l, case_rng(seed, idx), functionals));
        (w.is_none(), w)
    })
}

fn random_interval_family(rng: &mut ChaCha8Rng) -> (usize, Vec<(usize, usize)>) {
    let n = rng.random_range(1..=5usize);
    let count = rng.random_range(1..=6usize);
    let family = (0..count)
        .map(|_| {
            let a = rng.random_range(1..=n);
            let b = rng.random_range(1..=n);
            (a.min(b), a.max(b))
        })
        .collect();
    (n, family)
}

/// Support of `∏ (Σ_{i∈I_j} t_i)` equals the lattice points of `Σ Δ_{I_j}`.
pub fn product_support_case(n: usize, family: &[(usize, usize)]) -> Option<Value> {
    let mut product = RationalPolynomial::one(n);
    let mut terms = Vec::new();
    for &(lo, hi) in family {
        let indices: Vec<usize> = (lo..=hi).collect();
        product = &product * &linear_form(n, &indices).expect("non-empty interval");
        terms.push(SimplexTerm::interval(lo, hi, 1).expect("non-empty interval"));
    }
    let polytope = GenPermutohedron::new(n, terms).expect("intervals inside 1..=n");
    let support = product.support();
    let points = polytope.lattice_points();
    (support != points).then(|| {
        json!({
            "n": n,
            "intervals": family,
            "support_only": support.difference(&points).collect::<Vec<_>>(),
            "lattice_only": points.difference(&support).collect::<Vec<_>>(),
        })
    })
}

/// Support of the substituted Schur polynomial equals the lattice points of `Σ λ_i Δ_{[i,n]}`.
pub fn schur_support_case(lambda: &Partition) -> Option<Value> {
    let support = schur_substituted(lambda, lambda.n()).expect("length n").support();
    let points = schur_polytope(lambda).lattice_points();
    (support != points).then(|| set_difference_json(lambda, &support, &points))
}

pub fn verify_supports(grid: &Grid, seed: u64, families: usize) -> VerificationReport {
    let mut params = grid.params();
    params["seed"] = json!(seed);
    params["families"] = json!(families);
    let cases = grid.cases();
    timed("supports", params, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..families {
            let (n, family) = random_interval_family(&mut rng);
            if let Some(w) = product_support_case(n, &family) {
                return (false, Some(w));
            }
        }
        let w = first_failure(&cases, |_, l| schur_support_case(l));
        (w.is_none(), w)
    })
}

/// `s_λ` is symmetric in the underlying `x_i = t_i + ⋯ + t_n`: evaluate at
/// random rational `x`, and at random permutations of it.
pub fn schur_symmetry_case(lambda: &Partition, mut rng: ChaCha8Rng) -> Option<Value> {
    let n = lambda.n();
    let s = schur_substituted(lambda, n).expect("length n");
    let to_t = |x: &[BigRational]| -> Vec<BigRational> {
        (0..n)
            .map(|i| if i + 1 < n { &x[i] - &x[i + 1] } else { x[i].clone() })
            .collect()
    };
    let mut x = random_functional(&mut rng, n);
    let reference = s.evaluate(&to_t(&x));
    for _ in 0..5 {
        x.shuffle(&mut rng);
        if s.evaluate(&to_t(&x)) != reference {
            let x: Vec<String> = x.iter().map(ToString::to_string).collect();
            return Some(with_case(lambda, json!({ "x": x })));
        }
    }
    None
}

pub fn verify_schur_symmetry(grid: &Grid, seed: u64) -> VerificationReport {
    let cases = grid.cases();
    let mut params = grid.params();
    params["seed"] = json!(seed);
    timed("schur-symmetry", params, || {
        let w = first_failure(&cases, |idx, l| schur_symmetry_case(l, case_rng(seed, idx)));
        (w.is_none(), w)
    })
}

pub fn verify_catalan(max_n: usize) -> VerificationReport {
    timed("catalan", json!({ "max_n": max_n }), || {
        for n in 0..=max_n {
            let count = enumerate_trees(n).len();
            if BigUint::from(count) != catalan(n) {
                return (false, Some(json!({ "n": n, "trees": count, "catalan": catalan(n).to_string() })));
            }
        }
        (true, None)
    })
}

pub fn verify_tiling(max_n: usize) -> VerificationReport {
    timed("tiling", json!({ "max_n": max_n }), || {
        for n in 1..=max_n {
            for t in enumerate_trees(n) {
                if !tree_to_subdivision(&t).is_tiling() {
                    return (false, Some(json!({ "tree": t.encoding() })));
                }
            }
        }
        (true, None)
    })
}

/// `diag ∘ gaps` is the identity on enumerated diagonals, and `gaps ∘ diag`
/// on every non-negative vector with the right sum.
pub fn roundtrip_case(lambda: &Partition) -> Option<Value> {
    let d = ShiftedDiagram::new(lambda.clone());
    let size = d.size();
    for gaps in table_for(lambda).counts.keys() {
        let diag = gaps.to_diagonal();
        if &diag.gaps(size) != gaps {
            return Some(with_case(lambda, json!({ "gaps": gaps.0 })));
        }
    }
    // all compositions of |D| - n into n non-negative parts
    for point in GenPermutohedron::new(lambda.n(), vec![SimplexTerm::interval(1, lambda.n(), (size - lambda.n()) as u32).expect("non-empty")])
        .expect("valid")
        .lattice_points()
    {
        let gaps = GapVector(point);
        if gaps.to_diagonal().gaps(size) != gaps {
            return Some(with_case(lambda, json!({ "gaps": gaps.0 })));
        }
    }
    None
}

pub fn verify_roundtrip(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    timed("roundtrip", grid.params(), || {
        let w = first_failure(&cases, |_, l| roundtrip_case(l));
        (w.is_none(), w)
    })
}

/// Largest diagram on which the canonical-order enumerator is also run in full.
const CANONICAL_CHECK_MAX_BOXES: usize = 16;

/// Every enumerated tableau is standard, starts with 1 at `(1,1)`, and the
/// two enumerators agree.
pub fn tableau_validity_case(lambda: &Partition) -> Option<Value> {
    let d = ShiftedDiagram::new(lambda.clone());
    let mut bad: Option<Vec<u32>> = None;
    let mut count = 0u64;
    for_each_tableau(&d, |e| {
        count += 1;
        if bad.is_none() && (!entries_are_standard(&d, e) || e[0] != 1) {
            bad = Some(e.to_vec());
        }
    });
    if let Some(e) = bad {
        return Some(with_case(lambda, json!({ "entries": e })));
    }
    if d.size() <= CANONICAL_CHECK_MAX_BOXES {
        let mut previous: Option<Vec<u32>> = None;
        let mut canonical = 0u64;
        for t in enumerate_tableaux(&d) {
            let ordered = previous.as_deref().is_none_or(|p| p < t.entries());
            if !t.is_standard() || !ordered {
                return Some(with_case(lambda, json!({ "entries": t.entries(), "error": "canonical enumeration" })));
            }
            previous = Some(t.entries().to_vec());
            canonical += 1;
        }
        if canonical != count {
            return Some(with_case(lambda, json!({ "visitor": count, "canonical": canonical })));
        }
    }
    None
}

pub fn verify_tableau_validity(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    let mut params = grid.params();
    params["canonical_max_boxes"] = json!(CANONICAL_CHECK_MAX_BOXES);
    timed("tableau-validity", params, || {
        let w = first_failure(&cases, |_, l| tableau_validity_case(l));
        (w.is_none(), w)
    })
}

/// Each vertex is the gap vector of a standard tableau; for the binary-tree
/// family that tableau comes from the rectangle construction.
pub fn constructed_case(lambda: &Partition) -> Option<Value> {
    let d = build_diagram(lambda);
    for v in enumerate_vertices(lambda) {
        let built = match &v.tree {
            Some(tree) if v.in_tree_family(lambda) => construct_vertex_tableau(tree, lambda).map_err(|e| e.to_string()),
            _ => tableau_with_diagonal(&d, &v.diagonal()).ok_or_else(|| "no tableau with this diagonal".to_string()),
        };
        match built {
            Ok(t) if t.is_standard() && t.diagonal() == v.diagonal() => {}
            Ok(t) => {
                return Some(with_case(lambda, json!({ "forest": v.forest.encoding(), "rows": t.rows() })));
            }
            Err(e) => {
                return Some(with_case(lambda, json!({ "forest": v.forest.encoding(), "error": e })));
            }
        }
    }
    None
}

pub fn verify_constructed(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    timed("constructed-tableaux", grid.params(), || {
        let w = first_failure(&cases, |_, l| constructed_case(l));
        (w.is_none(), w)
    })
}

/// Vertices of the binary-tree `B_k` family, and the true vertices they miss.
pub fn tree_family_case(lambda: &Partition) -> (bool, Option<Value>) {
    let all: BTreeSet<LatticePoint> = enumerate_vertices(lambda).into_iter().map(|v| v.t).collect();
    let family: BTreeSet<LatticePoint> = tree_family_vertices(lambda).into_iter().map(|v| v.t).collect();
    let subset = family.is_subset(&all);
    let missed: Vec<&LatticePoint> = all.difference(&family).collect();
    let witness = (!subset || !missed.is_empty()).then(|| {
        with_case(lambda, json!({
            "vertices": all.len(),
            "tree_family": family.len(),
            "missed": missed,
            "not_vertices": family.difference(&all).collect::<Vec<_>>(),
        }))
    });
    (subset, witness)
}

/// Passes when every binary-tree `B_k` vertex is a vertex; the witness lists
/// the cases where the family falls short of the full vertex set.
pub fn verify_tree_family(grid: &Grid) -> VerificationReport {
    let cases = grid.cases();
    timed("bk-tree-vertices", grid.params(), || {
        let results: Vec<(bool, Option<Value>)> = cases.par_iter().map(tree_family_case).collect();
        let ok = results.iter().all(|(ok, _)| *ok);
        let short: Vec<Value> = results.into_iter().filter_map(|(_, w)| w).collect();
        (ok, (!short.is_empty()).then(|| json!({ "incomplete": short })))
    })
}

fn example_lambda() -> Partition {
    Partition::new(vec![4, 2, 1, 0], 4).expect("valid partition")
}

/// The diagonal `(1,4,7,17)` occurs for `λ = (4,2,1,0)` and its gaps
/// `(2,2,9,0)` are a lattice point of `P_λ`.
pub fn verify_example_diagonal() -> VerificationReport {
    let lambda = example_lambda();
    timed("example-diagonal", case_json(&lambda), || {
        let diag = DiagonalVector(vec![1, 4, 7, 17]);
        let gaps = diag.gaps(17);
        let table = table_for(&lambda);
        let reached = table.get(&gaps).is_some();
        let is_point = p_lambda(&lambda).lattice_points().contains(&gaps.0);
        let ok = gaps.0 == [2, 2, 9, 0] && reached && is_point;
        let witness = json!({
            "diagonal": diag.0,
            "gaps": gaps.0,
            "tableaux_with_this_diagonal": table.get(&gaps).map(ToString::to_string),
            "lattice_point": is_point,
        });
        (ok, Some(witness))
    })
}

/// The tree `(())(())` gives vertex `(1,10,1,1)`, diagonal `(1,3,14,16)`,
/// and a standard tableau with that diagonal.
pub fn verify_example_vertex() -> VerificationReport {
    let lambda = example_lambda();
    timed("example-vertex", case_json(&lambda), || {
        let tree = crate::trees::LabeledBinaryTree::from_encoding("(())(())").expect("valid encoding");
        let v = match vertex_from_tree(&tree, &lambda) {
            Ok(v) => v,
            Err(e) => return (false, Some(json!({ "error": e.to_string() }))),
        };
        let tableau = construct_vertex_tableau(&tree, &lambda);
        let rows = tableau.as_ref().ok().map(|t| t.rows());
        let ok = v.t == [1, 10, 1, 1]
            && v.diagonal().0 == [1, 3, 14, 16]
            && tableau
                .as_ref()
                .is_ok_and(|t| t.is_standard() && t.diagonal() == v.diagonal());
        (
            ok,
            Some(json!({ "tree": tree.encoding(), "vertex": v.t, "diag": v.diagonal().0, "tableau": rows })),
        )
    })
}

/// Every claim, in a fixed order.
pub fn verify_all(config: &VerifyConfig) -> Vec<VerificationReport> {
    let grid = &config.grid;
    vec![
        verify_identity(grid),
        verify_bijection(grid),
        verify_vertex_count(config.count_max_n),
        verify_vertex_extremity(grid, config.seed, config.functionals),
        verify_tree_family(grid),
        verify_supports(grid, config.seed, config.families),
        verify_schur_symmetry(grid, config.seed),
        verify_catalan(10),
        verify_tiling(7),
        verify_roundtrip(grid),
        verify_tableau_validity(grid),
        verify_constructed(grid),
        verify_example_diagonal(),
        verify_example_vertex(),
    ]
}
