//! Plane binary trees with the binary search labeling, read as `B_k`-forests
//! of `P_λ`, as staircase subdivisions, and as recipes for vertex tableaux.
//!
//! A tree on `n` nodes labels its nodes by in-order position, so the subtree
//! of node `i` is the label interval `[i − |L_i|, i + |R_i|]`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polytope::{p_lambda, GenPermutohedron};
use crate::shapes::{Cell, Partition, ShiftedDiagram};
use crate::tableaux::{DiagonalVector, GapVector, ShiftedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledBinaryTree {
    root: Option<usize>,
    // Indexed by label; slot 0 is unused.
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
    left_size: Vec<usize>,
    right_size: Vec<usize>,
    depth: Vec<usize>,
}

impl LabeledBinaryTree {
    /// Parses the balanced-parentheses encoding `T := ε | "(" T ")" T`, where
    /// the first group is the left branch and the remainder the right branch.
    pub fn from_encoding(text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let n = bytes.len() / 2;
        let mut tree = LabeledBinaryTree {
            root: None,
            left: vec![None; n + 1],
            right: vec![None; n + 1],
            left_size: vec![0; n + 1],
            right_size: vec![0; n + 1],
            depth: vec![0; n + 1],
        };
        let mut pos = 0;
        let mut next_label = 1;
        tree.root = tree.parse(bytes, &mut pos, &mut next_label, 0);
        if pos != bytes.len() || next_label != n + 1 || !bytes.len().is_multiple_of(2) {
            return Err(Error::BadTreeEncoding(text.to_string()));
        }
        Ok(tree)
    }

    fn parse(
        &mut self,
        bytes: &[u8],
        pos: &mut usize,
        next_label: &mut usize,
        depth: usize,
    ) -> Option<usize> {
        if bytes.get(*pos) != Some(&b'(') || *next_label >= self.left.len() {
            return None;
        }
        *pos += 1;
        let left = self.parse(bytes, pos, next_label, depth + 1);
        if bytes.get(*pos) != Some(&b')') {
            // malformed; caught by the length check in from_encoding
            *next_label = usize::MAX;
            return None;
        }
        *pos += 1;
        let label = *next_label;
        *next_label += 1;
        let right = self.parse(bytes, pos, next_label, depth + 1);
        if *next_label == usize::MAX {
            return None;
        }
        self.left[label] = left;
        self.right[label] = right;
        self.depth[label] = depth;
        self.left_size[label] = left.map_or(0, |l| self.subtree_size(l));
        self.right_size[label] = right.map_or(0, |r| self.subtree_size(r));
        Some(label)
    }

    fn subtree_size(&self, i: usize) -> usize {
        self.left_size[i] + self.right_size[i] + 1
    }

    pub fn encoding(&self) -> String {
        fn go(t: &LabeledBinaryTree, node: Option<usize>, out: &mut String) {
            if let Some(i) = node {
                out.push('(');
                go(t, t.left[i], out);
                out.push(')');
                go(t, t.right[i], out);
            }
        }
        let mut s = String::with_capacity(2 * self.n());
        go(self, self.root, &mut s);
        s
    }

    pub fn n(&self) -> usize {
        self.left.len() - 1
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn left(&self, i: usize) -> Option<usize> {
        self.left[i]
    }

    pub fn right(&self, i: usize) -> Option<usize> {
        self.right[i]
    }

    /// `|L_i|`
    pub fn left_size(&self, i: usize) -> usize {
        self.left_size[i]
    }

    /// `|R_i|`
    pub fn right_size(&self, i: usize) -> usize {
        self.right_size[i]
    }

    /// Distance from the root.
    pub fn depth(&self, i: usize) -> usize {
        self.depth[i]
    }

    /// Labels in the subtree of `i`, as the interval `(lo, hi)`.
    pub fn descendants(&self, i: usize) -> (usize, usize) {
        (i - self.left_size[i], i + self.right_size[i])
    }

    /// Whether the tree is a `B_k`-forest: the left branch of the rightmost
    /// node `n` has at least `n − k` nodes. For `k = 0` no tree on `n ≥ 1`
    /// nodes qualifies, since `B_0` has no set containing `n`.
    pub fn is_bk_forest(&self, k: usize) -> bool {
        let n = self.n();
        if n == 0 || k == 0 {
            return false;
        }
        self.left_size[n] + k >= n
    }
}

impl fmt::Display for LabeledBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

pub fn descendants(tree: &LabeledBinaryTree, i: usize) -> (usize, usize) {
    tree.descendants(i)
}

pub fn is_bk_forest(tree: &LabeledBinaryTree, k: usize) -> bool {
    tree.is_bk_forest(k)
}

fn encodings(n: usize, memo: &mut Vec<Vec<String>>) -> Vec<String> {
    if n < memo.len() {
        return memo[n].clone();
    }
    let mut out = Vec::new();
    for l in 0..n {
        let lefts = encodings(l, memo);
        let rights = encodings(n - 1 - l, memo);
        for a in &lefts {
            for b in &rights {
                out.push(format!("({a}){b}"));
            }
        }
    }
    out.sort();
    debug_assert_eq!(memo.len(), n);
    memo.push(out.clone());
    out
}

/// All plane binary trees on `n` nodes, sorted by encoding. `n = 0` yields
/// the single empty tree.
pub fn enumerate_trees(n: usize) -> Vec<LabeledBinaryTree> {
    let mut memo = vec![vec![String::new()]];
    for m in 1..n {
        encodings(m, &mut memo);
    }
    encodings(n, &mut memo)
        .iter()
        .map(|e| LabeledBinaryTree::from_encoding(e).expect("generated encoding is valid"))
        .collect()
}

pub fn catalan(n: usize) -> BigUint {
    // C_{m+1} = C_m · 2(2m+1) / (m+2)
    let mut c = BigUint::one();
    for m in 0..n {
        c = c * BigUint::from(2 * (2 * m + 1)) / BigUint::from(m + 2);
    }
    c
}

/// `Σ_{i=1}^{k} C_{i−1} C_{n−i}`: trees whose rightmost node has a left branch of size `n − i ≥ n − k`.
pub fn vertex_count_closed_form(n: usize, k: usize) -> BigUint {
    (1..=k.min(n)).map(|i| catalan(i - 1) * catalan(n - i)).sum()
}

/// `Σ_{i=1}^{k} C_i C_{n−i}`, the count with the summand indices as they are
/// commonly printed. Kept only to report how it differs from enumeration.
pub fn vertex_count_printed(n: usize, k: usize) -> BigUint {
    (1..=k.min(n)).map(|i| catalan(i) * catalan(n - i)).sum()
}

/// A rooted forest on a subset of `1..=n`, recorded by parent pointers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BForest {
    // Indexed by label; slot 0 unused. `None` for roots and for labels outside the ground set.
    parent: Vec<Option<usize>>,
    member: Vec<bool>,
}

impl BForest {
    pub fn n(&self) -> usize {
        self.parent.len() - 1
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member[i]
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.member[i] && self.parent[i].is_none()).collect()
    }

    pub fn children(&self, i: usize) -> Vec<usize> {
        (1..=self.n()).filter(|&c| self.parent[c] == Some(i)).collect()
    }

    pub fn depth(&self, i: usize) -> usize {
        let mut d = 0;
        let mut cur = i;
        while let Some(p) = self.parent[cur] {
            d += 1;
            cur = p;
        }
        d
    }

    /// `desc(i, F)`, sorted, including `i`.
    pub fn descendants(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (1..=self.n())
            .filter(|&j| self.member[j] && {
                let mut cur = j;
                loop {
                    if cur == i {
                        break true;
                    }
                    match self.parent[cur] {
                        Some(p) => cur = p,
                        None => break false,
                    }
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Labelled nested notation, e.g. `2(1,4(3))`; roots are comma-separated.
    pub fn encoding(&self) -> String {
        fn go(f: &BForest, i: usize, out: &mut String) {
            out.push_str(&i.to_string());
            let kids = f.children(i);
            if !kids.is_empty() {
                out.push('(');
                for (j, c) in kids.iter().enumerate() {
                    if j > 0 {
                        out.push(',');
                    }
                    go(f, *c, out);
                }
                out.push(')');
            }
        }
        let mut s = String::new();
        for (j, r) in self.roots().iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            go(self, *r, &mut s);
        }
        s
    }

    /// The same forest as a plane binary tree with the binary search
    /// labeling, if it is one: a single root over labels `1..=m`, and every
    /// node with at most one child below it and at most one above it.
    pub fn as_binary_tree(&self) -> Option<LabeledBinaryTree> {
        let m = (1..=self.n()).filter(|&i| self.member[i]).count();
        if (1..=m).any(|i| !self.member[i]) {
            return None;
        }
        let roots = self.roots();
        if m > 0 && roots.len() != 1 {
            return None;
        }
        fn go(f: &BForest, i: usize, out: &mut String) -> bool {
            let kids = f.children(i);
            let below: Vec<_> = kids.iter().filter(|&&c| c < i).collect();
            let above: Vec<_> = kids.iter().filter(|&&c| c > i).collect();
            if below.len() > 1 || above.len() > 1 {
                return false;
            }
            out.push('(');
            if let Some(&&c) = below.first() {
                if !go(f, c, out) {
                    return false;
                }
            }
            out.push(')');
            if let Some(&&c) = above.first() {
                if !go(f, c, out) {
                    return false;
                }
            }
            true
        }
        let mut enc = String::new();
        if let Some(&r) = roots.first() {
            if !go(self, r, &mut enc) {
                return None;
            }
        }
        let tree = LabeledBinaryTree::from_encoding(&enc).ok()?;
        let same = (1..=m).all(|i| {
            let p = self.parent[i];
            p.map_or(tree.root() == Some(i), |p| tree.left(p) == Some(i) || tree.right(p) == Some(i))
        });
        same.then_some(tree)
    }

    pub fn from_binary_tree(tree: &LabeledBinaryTree, n: usize) -> Self {
        let mut parent = vec![None; n + 1];
        let mut member = vec![false; n + 1];
        for (i, slot) in member.iter_mut().enumerate().take(tree.n() + 1).skip(1) {
            *slot = true;
            for c in [tree.left(i), tree.right(i)].into_iter().flatten() {
                parent[c] = Some(i);
            }
        }
        BForest { parent, member }
    }
}

impl fmt::Display for BForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

/// The index sets of `p` completed with the singletons of their union,
/// after checking the building-set axiom (intersecting members have their
/// union as a member).
pub fn building_set(p: &GenPermutohedron) -> Result<BTreeSet<Vec<usize>>> {
    let mut sets: BTreeSet<Vec<usize>> = p.terms().iter().map(|t| t.indices().to_vec()).collect();
    let ground: BTreeSet<usize> = sets.iter().flatten().copied().collect();
    sets.extend(ground.into_iter().map(|i| vec![i]));
    let list: Vec<&Vec<usize>> = sets.iter().collect();
    for (x, a) in list.iter().enumerate() {
        for b in &list[x + 1..] {
            if a.iter().any(|i| b.binary_search(i).is_ok()) {
                let mut union: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                union.sort_unstable();
                union.dedup();
                if !sets.contains(&union) {
                    return Err(Error::NotBuildingSet {
                        a: a.to_vec(),
                        b: b.to_vec(),
                    });
                }
            }
        }
    }
    Ok(sets)
}

/// Maximal members of `sets` contained in `within`; for a building set with
/// all singletons these partition `within`.
fn components(sets: &BTreeSet<Vec<usize>>, within: &[usize]) -> Vec<Vec<usize>> {
    let inside: Vec<&Vec<usize>> = sets
        .iter()
        .filter(|s| s.iter().all(|i| within.binary_search(i).is_ok()))
        .collect();
    let mut out: Vec<Vec<usize>> = inside
        .iter()
        .filter(|s| {
            !inside
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|i| t.binary_search(i).is_ok()))
        })
        .map(|s| s.to_vec())
        .collect();
    out.sort();
    out
}

type ParentAssignment = Vec<(usize, Option<usize>)>;

/// Every forest on the member `set`, hung below `parent`.
fn forests_on(sets: &BTreeSet<Vec<usize>>, set: &[usize], parent: Option<usize>) -> Vec<ParentAssignment> {
    let mut out = Vec::new();
    for &root in set {
        let rest: Vec<usize> = set.iter().copied().filter(|&i| i != root).collect();
        let mut partial: Vec<ParentAssignment> = vec![vec![(root, parent)]];
        for comp in components(sets, &rest) {
            let subs = forests_on(sets, &comp, Some(root));
            partial = partial
                .iter()
                .flat_map(|base| {
                    subs.iter().map(move |sub| {
                        let mut v = base.clone();
                        v.extend_from_slice(sub);
                        v
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// All `B`-forests of the singleton-completed building set of `p`: one root
/// per maximal member, and below each node the components of what remains.
pub fn building_set_forests(p: &GenPermutohedron) -> Result<Vec<BForest>> {
    let sets = building_set(p)?;
    let ground: Vec<usize> = sets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let n = p.n();
    let mut assignments: Vec<ParentAssignment> = vec![Vec::new()];
    for comp in components(&sets, &ground) {
        let subs = forests_on(&sets, &comp, None);
        assignments = assignments
            .iter()
            .flat_map(|base| {
                subs.iter().map(move |sub| {
                    let mut v = base.clone();
                    v.extend_from_slice(sub);
                    v
                })
            })
            .collect();
    }
    let mut forests: Vec<BForest> = assignments
        .into_iter()
        .map(|assignment| {
            let mut parent = vec![None; n + 1];
            let mut member = vec![false; n + 1];
            for (i, p) in assignment {
                member[i] = true;
                parent[i] = p;
            }
            BForest { parent, member }
        })
        .collect();
    forests.sort_by_key(BForest::encoding);
    Ok(forests)
}

/// `t_i = Σ_{J ∈ B : i ∈ J ⊆ desc(i, F)} y_J`; coordinates outside the forest are zero.
pub fn forest_vertex(p: &GenPermutohedron, forest: &BForest) -> Vec<u32> {
    (1..=p.n())
        .map(|i| {
            if !forest.contains(i) {
                return 0;
            }
            let desc = forest.descendants(i);
            p.terms()
                .iter()
                .filter(|term| term.contains(i) && term.indices().iter().all(|j| desc.binary_search(j).is_ok()))
                .map(|term| term.weight())
                .sum()
        })
        .collect()
}

/// A vertex of `P_λ` together with the forest it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPoint {
    pub t: Vec<u32>,
    pub forest: BForest,
    /// The forest as a binary search tree, when it is one.
    pub tree: Option<LabeledBinaryTree>,
}

impl VertexPoint {
    pub fn gaps(&self) -> GapVector {
        GapVector(self.t.clone())
    }

    pub fn diagonal(&self) -> DiagonalVector {
        self.gaps().to_diagonal()
    }

    /// Whether this vertex comes from a `B_k`-forest in the binary-tree sense
    /// (`|L_n| ≥ n − k`), or, for `λ = ∅`, from a tree on `n − 1` nodes.
    pub fn in_tree_family(&self, lambda: &Partition) -> bool {
        let k = lambda.positive_part_count();
        self.tree.as_ref().is_some_and(|t| {
            if k == 0 {
                t.n() + 1 == lambda.n()
            } else {
                t.is_bk_forest(k)
            }
        })
    }
}

/// `t_i = Σ_{J ∈ B : i ∈ J ⊆ desc(i)} y_J` for a binary tree whose labels are a
/// prefix `1..=m` of `1..=p.n()`. Coordinates without a node are zero.
pub fn building_set_vertex(p: &GenPermutohedron, tree: &LabeledBinaryTree) -> Vec<u32> {
    let mut t = vec![0; p.n()];
    for (i, slot) in t.iter_mut().enumerate().take(tree.n()) {
        let label = i + 1;
        let (lo, hi) = tree.descendants(label);
        *slot = p
            .terms()
            .iter()
            .filter(|term| term.contains(label) && term.within(lo, hi))
            .map(|term| term.weight())
            .sum();
    }
    t
}

fn check_bk(tree: &LabeledBinaryTree, lambda: &Partition) -> Result<usize> {
    let n = lambda.n();
    if tree.n() != n {
        return Err(Error::TreeSize {
            expected: n,
            got: tree.n(),
        });
    }
    let k = lambda.positive_part_count();
    if !tree.is_bk_forest(k) {
        return Err(Error::NotBkForest { k });
    }
    Ok(k)
}

/// The vertex of `P_λ` attached to a `B_k`-forest, in closed form:
/// `(|L_i|+1)(|R_i|+1)` for a subtree ending before `n`, otherwise
/// `(|L_i|+1)|R_i| + Σ_{r ∈ desc(i), r ≤ i} λ_r`.
pub fn vertex_from_tree(tree: &LabeledBinaryTree, lambda: &Partition) -> Result<VertexPoint> {
    check_bk(tree, lambda)?;
    let n = lambda.n();
    let t = (1..=n)
        .map(|i| {
            let l = tree.left_size(i) as u32;
            let r = tree.right_size(i) as u32;
            let (lo, hi) = tree.descendants(i);
            if hi < n {
                (l + 1) * (r + 1)
            } else {
                (l + 1) * r + (lo..=i).map(|row| lambda.part(row)).sum::<u32>()
            }
        })
        .collect();
    Ok(VertexPoint {
        t,
        forest: BForest::from_binary_tree(tree, n),
        tree: Some(tree.clone()),
    })
}

/// The `B_k`-forests in the binary-tree sense, in encoding order: trees on
/// `n` nodes with `|L_n| ≥ n − k`, or all trees on `n − 1` nodes when `k = 0`.
pub fn tree_family(lambda: &Partition) -> Vec<LabeledBinaryTree> {
    let n = lambda.n();
    let k = lambda.positive_part_count();
    if k == 0 {
        enumerate_trees(n - 1)
    } else {
        enumerate_trees(n).into_iter().filter(|t| t.is_bk_forest(k)).collect()
    }
}

/// Vertices of [`tree_family`], by the closed form (or the building-set sum when `k = 0`).
pub fn tree_family_vertices(lambda: &Partition) -> Vec<VertexPoint> {
    let p = p_lambda(lambda);
    let n = lambda.n();
    let k = lambda.positive_part_count();
    tree_family(lambda)
        .into_iter()
        .map(|tree| {
            if k == 0 {
                VertexPoint {
                    t: building_set_vertex(&p, &tree),
                    forest: BForest::from_binary_tree(&tree, n),
                    tree: Some(tree),
                }
            } else {
                vertex_from_tree(&tree, lambda).expect("filtered to B_k-forests")
            }
        })
        .collect()
}

/// Every vertex of `P_λ`, one per forest of its singleton-completed building
/// set, in forest-encoding order.
///
/// When `1 ≤ k < n` the building set of `P_λ` lacks `{n}`; this is a
/// zero-weight term, so it does not move the polytope, but it does change
/// which forests qualify. Without it only the trees of [`tree_family`]
/// appear, and they miss vertices (already for `λ = (1, 0)`, a segment).
pub fn enumerate_vertices(lambda: &Partition) -> Vec<VertexPoint> {
    let p = p_lambda(lambda);
    building_set_forests(&p)
        .expect("intervals of P_λ form a building set")
        .into_iter()
        .map(|forest| VertexPoint {
            t: forest_vertex(&p, &forest),
            tree: forest.as_binary_tree(),
            forest,
        })
        .collect()
}

/// An axis-aligned block of boxes: rows `top..=bottom`, columns `left..=right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl Rect {
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.top..=self.bottom).flat_map(move |r| (self.left..=self.right).map(move |c| Cell::new(r, c)))
    }

    pub fn height(&self) -> usize {
        self.bottom + 1 - self.top
    }

    pub fn width(&self) -> usize {
        self.right + 1 - self.left
    }

    pub fn area(&self) -> usize {
        self.height() * self.width()
    }
}

/// A subdivision of the staircase `D_∅` into `n` rectangles; `rectangles[i-1]`
/// holds the diagonal box `(i, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub n: usize,
    pub rectangles: Vec<Rect>,
}

impl Subdivision {
    /// Disjoint rectangles covering `D_∅`, rectangle `i` meeting the diagonal only at `(i, i)`.
    pub fn is_tiling(&self) -> bool {
        let n = self.n;
        let mut owner = vec![vec![0usize; n + 1]; n + 1];
        for (idx, rect) in self.rectangles.iter().enumerate() {
            for c in rect.cells() {
                if c.row < 1 || c.col > n || c.row > c.col {
                    return false;
                }
                if owner[c.row][c.col] != 0 {
                    return false;
                }
                owner[c.row][c.col] = idx + 1;
                if c.row == c.col && c.row != idx + 1 {
                    return false;
                }
            }
        }
        (1..=n).all(|r| (r..=n).all(|c| owner[r][c] != 0))
    }
}

/// Rectangle `i` spans rows `[i − |L_i|, i]` and columns `[i, i + |R_i|]`.
pub fn tree_to_subdivision(tree: &LabeledBinaryTree) -> Subdivision {
    let rectangles = (1..=tree.n())
        .map(|i| {
            let (lo, hi) = tree.descendants(i);
            Rect {
                top: lo,
                bottom: i,
                left: i,
                right: hi,
            }
        })
        .collect();
    Subdivision {
        n: tree.n(),
        rectangles,
    }
}

/// Builds a standard tableau of `D_λ` whose diagonal vector is the vertex's.
///
/// Diagonal box `(i, i)` receives `d_i`. Region `i` is rectangle `i` of the
/// subdivision shifted one column right; when that rectangle reaches column
/// `n` its rows instead run to the end of the corresponding row of `D_λ`,
/// which absorbs the `λ` overhang and drops the column-`n+1` boxes of rows
/// with `λ_r = 0`. Region `i` is filled with `d_i + 1, …, d_{i+1} − 1` in
/// row-major order.
///
/// For `k ≥ 1` the tree must be a `B_k`-forest on `n` nodes. For `λ = ∅` the
/// tree has `n − 1` nodes, as in [`enumerate_vertices`].
pub fn construct_vertex_tableau(
    tree: &LabeledBinaryTree,
    lambda: &Partition,
) -> Result<ShiftedTableau> {
    let n = lambda.n();
    let gaps = if lambda.positive_part_count() == 0 {
        if tree.n() + 1 != n {
            return Err(Error::TreeSize {
                expected: n - 1,
                got: tree.n(),
            });
        }
        building_set_vertex(&p_lambda(lambda), tree)
    } else {
        vertex_from_tree(tree, lambda)?.t
    };
    let diag = GapVector(gaps.clone()).to_diagonal();
    let diagram = Arc::new(ShiftedDiagram::new(lambda.clone()));
    let mut entries = vec![0u32; diagram.size()];
    for i in 1..=n {
        entries[diagram.diagonal_index(i)] = diag.0[i - 1];
    }
    for i in 1..=tree.n() {
        let (lo, hi) = tree.descendants(i);
        let mut next = diag.0[i - 1] + 1;
        for row in lo..=i {
            let last = if hi == n { diagram.row_end(row) } else { hi + 1 };
            for col in i + 1..=last {
                let idx = diagram.index_of(Cell::new(row, col)).ok_or_else(|| {
                    Error::Construction(format!("region {i} leaves the diagram at ({row},{col})"))
                })?;
                if entries[idx] != 0 {
                    return Err(Error::Construction(format!("box ({row},{col}) filled twice")));
                }
                entries[idx] = next;
                next += 1;
            }
        }
        let filled = next - diag.0[i - 1] - 1;
        if filled != gaps[i - 1] {
            return Err(Error::Construction(format!(
                "region {i} has {filled} boxes, expected {}",
                gaps[i - 1]
            )));
        }
    }
    let tableau = ShiftedTableau::new(diagram, entries)?;
    if !tableau.is_standard() {
        return Err(Error::Construction(format!("invalid filling {:?}", tableau.rows())));
    }
    Ok(tableau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{lattice_points, vertices_by_orderings, SimplexTerm};

    fn tree(enc: &str) -> LabeledBinaryTree {
        LabeledBinaryTree::from_encoding(enc).unwrap()
    }

    fn part(parts: &[u32], n: usize) -> Partition {
        Partition::new(parts.to_vec(), n).unwrap()
    }

    /// root 2; left 1; right 4; 4's left child 3
    const EXAMPLE: &str = "(())(())";

    #[test]
    fn example_tree_structure() {
        let t = tree(EXAMPLE);
        assert_eq!(t.root(), Some(2));
        assert_eq!(t.left(2), Some(1));
        assert_eq!(t.right(2), Some(4));
        assert_eq!(t.left(4), Some(3));
        assert_eq!(t.right(4), None);
        assert_eq!(t.encoding(), EXAMPLE);
        assert_eq!(descendants(&t, 4), (3, 4));
        assert_eq!(descendants(&t, 2), (1, 4));
        assert_eq!(descendants(&t, 3), (3, 3));
        assert_eq!(t.depth(3), 2);
    }

    #[test]
    fn bad_encodings() {
        for bad in ["(", ")(", "(()", "())(", "x"] {
            assert!(LabeledBinaryTree::from_encoding(bad).is_err(), "{bad}");
        }
        assert_eq!(tree("").n(), 0);
    }

    #[test]
    fn small_tree_lists() {
        assert_eq!(enumerate_trees(1).len(), 1);
        let two = enumerate_trees(2);
        assert_eq!(two.len(), 2);
        // "(())" = root 2 with left child 1, "()()" = root 1 with right child 2
        assert_eq!(two[0].root(), Some(2));
        assert_eq!(two[0].left(2), Some(1));
        assert_eq!(two[1].root(), Some(1));
        assert_eq!(two[1].right(1), Some(2));
        assert_eq!(enumerate_trees(3).len(), 5);
        assert_eq!(enumerate_trees(0).len(), 1);
    }

    #[test]
    fn catalan_numbers() {
        let expected = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigUint::from(c));
        }
    }

    #[test]
    fn leaves_and_roots() {
        for n in 1..=6 {
            for t in enumerate_trees(n) {
                assert_eq!(t.descendants(t.root().unwrap()), (1, n));
                for i in 1..=n {
                    if t.left(i).is_none() && t.right(i).is_none() {
                        assert_eq!(t.descendants(i), (i, i));
                    }
                }
            }
        }
    }

    #[test]
    fn bk_examples() {
        assert!(enumerate_trees(3).iter().all(|t| t.is_bk_forest(3)));
        let k1: Vec<_> = enumerate_trees(3).into_iter().filter(|t| t.is_bk_forest(1)).collect();
        assert_eq!(k1.len(), 2);
        assert!(k1.iter().all(|t| t.root() == Some(3) && t.left_size(3) == 2));
        let k1: Vec<_> = enumerate_trees(2).into_iter().filter(|t| t.is_bk_forest(1)).collect();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].root(), Some(2));
        assert!(!tree("()").is_bk_forest(0));
    }

    #[test]
    fn example_vertex() {
        let lambda = part(&[4, 2, 1, 0], 4);
        let v = vertex_from_tree(&tree(EXAMPLE), &lambda).unwrap();
        assert_eq!(v.t, vec![1, 10, 1, 1]);
        assert_eq!(v.diagonal(), DiagonalVector(vec![1, 3, 14, 16]));
    }

    #[test]
    fn small_vertices() {
        for m in 0..5 {
            let vs = enumerate_vertices(&part(&[m], 1));
            assert_eq!(vs.len(), 1);
            assert_eq!(vs[0].t, vec![m]);
        }
        let lambda = part(&[1, 0], 2);
        assert_eq!(vertex_from_tree(&tree("(())"), &lambda).unwrap().t, vec![1, 1]);
        assert!(matches!(
            vertex_from_tree(&tree("()()"), &lambda),
            Err(Error::NotBkForest { k: 1 })
        ));
        let all: BTreeSet<_> = enumerate_vertices(&lambda).into_iter().map(|v| v.t).collect();
        assert_eq!(all, BTreeSet::from([vec![1, 1], vec![2, 0]]));
        let family: Vec<_> = tree_family_vertices(&lambda).into_iter().map(|v| v.t).collect();
        assert_eq!(family, vec![vec![1, 1]]);
        assert_eq!(enumerate_vertices(&part(&[1, 1, 1], 3)).len(), 5);
        assert!(matches!(
            vertex_from_tree(&tree("()"), &lambda),
            Err(Error::TreeSize { .. })
        ));
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(vertex_count_closed_form(3, 1), BigUint::from(2u32));
        assert_eq!(vertex_count_closed_form(3, 2), BigUint::from(3u32));
        assert_eq!(vertex_count_closed_form(3, 3), BigUint::from(5u32));
        assert_eq!(vertex_count_printed(3, 2), BigUint::from(4u32));
        for n in 1..=6 {
            let trees = enumerate_trees(n);
            for k in 1..=n {
                let count = trees.iter().filter(|t| t.is_bk_forest(k)).count();
                assert_eq!(BigUint::from(count), vertex_count_closed_form(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_matches_building_set_sum() {
        for n in 1..=5 {
            for lambda in Partition::all_bounded(n, 3) {
                let p = p_lambda(&lambda);
                let k = lambda.positive_part_count();
                for t in enumerate_trees(n).iter().filter(|t| t.is_bk_forest(k)) {
                    let v = vertex_from_tree(t, &lambda).unwrap();
                    assert_eq!(v.t, building_set_vertex(&p, t), "{lambda} {t}");
                }
            }
        }
    }

    #[test]
    fn vertices_are_lattice_points() {
        for n in 1..=4 {
            for lambda in Partition::all_bounded(n, 2) {
                let points = lattice_points(&p_lambda(&lambda));
                for v in enumerate_vertices(&lambda) {
                    assert!(points.contains(&v.t), "{lambda}: {:?}", v.t);
                }
            }
        }
    }

    #[test]
    fn subdivisions() {
        let s = tree_to_subdivision(&tree("()"));
        assert_eq!(s.rectangles, vec![Rect { top: 1, bottom: 1, left: 1, right: 1 }]);

        let s = tree_to_subdivision(&tree(EXAMPLE));
        assert_eq!(
            s.rectangles,
            vec![
                Rect { top: 1, bottom: 1, left: 1, right: 1 },
                Rect { top: 1, bottom: 2, left: 2, right: 4 },
                Rect { top: 3, bottom: 3, left: 3, right: 3 },
                Rect { top: 3, bottom: 4, left: 4, right: 4 },
            ]
        );
        assert!(s.is_tiling());

        let comb = tree("()()()()()");
        assert_eq!(comb.root(), Some(1));
        let s = tree_to_subdivision(&comb);
        for (i, r) in s.rectangles.iter().enumerate() {
            assert_eq!(*r, Rect { top: i + 1, bottom: i + 1, left: i + 1, right: 5 });
        }
        assert!(s.is_tiling());

        let broken = Subdivision {
            n: 2,
            rectangles: vec![
                Rect { top: 1, bottom: 1, left: 1, right: 2 },
                Rect { top: 1, bottom: 2, left: 2, right: 2 },
            ],
        };
        assert!(!broken.is_tiling());
    }

    /// Paper-style gluing: root rectangle, left staircase beside it, right below.
    fn glued(lo: usize, hi: usize, node: Option<usize>, t: &LabeledBinaryTree, out: &mut Vec<(usize, Rect)>) {
        if let Some(i) = node {
            out.push((i, Rect { top: lo, bottom: i, left: i, right: hi }));
            glued(lo, i - 1, t.left(i), t, out);
            glued(i + 1, hi, t.right(i), t, out);
        }
    }

    #[test]
    fn absolute_rectangles_match_gluing() {
        for n in 1..=6 {
            for t in enumerate_trees(n) {
                let mut parts = Vec::new();
                glued(1, n, t.root(), &t, &mut parts);
                parts.sort_by_key(|(i, _)| *i);
                let rects: Vec<Rect> = parts.into_iter().map(|(_, r)| r).collect();
                assert_eq!(tree_to_subdivision(&t).rectangles, rects);
            }
        }
    }

    #[test]
    fn constructed_examples() {
        let t = construct_vertex_tableau(&tree("()"), &part(&[3], 1)).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 2, 3, 4]]);

        let lambda = part(&[4, 2, 1, 0], 4);
        let t = construct_vertex_tableau(&tree(EXAMPLE), &lambda).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.diagonal(), DiagonalVector(vec![1, 3, 14, 16]));

        let t = construct_vertex_tableau(&tree("(())"), &part(&[1, 0], 2)).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.diagonal(), DiagonalVector(vec![1, 3]));

        assert!(construct_vertex_tableau(&tree("()()"), &part(&[1, 0], 2)).is_err());
    }

    #[test]
    fn constructed_for_empty_partition() {
        for n in 1..=5 {
            let lambda = Partition::empty(n).unwrap();
            for v in enumerate_vertices(&lambda) {
                let t = construct_vertex_tableau(v.tree.as_ref().unwrap(), &lambda).unwrap();
                assert_eq!(t.diagonal(), v.diagonal());
            }
        }
    }

    #[test]
    fn vertices_match_orderings() {
        for n in 1..=4 {
            for lambda in Partition::all_bounded(n, 3) {
                let p = p_lambda(&lambda);
                let vs = enumerate_vertices(&lambda);
                let got: BTreeSet<_> = vs.iter().map(|v| v.t.clone()).collect();
                assert_eq!(got.len(), vs.len(), "{lambda}");
                assert_eq!(got, vertices_by_orderings(&p), "{lambda}");
                let family: BTreeSet<_> = tree_family_vertices(&lambda).into_iter().map(|v| v.t).collect();
                assert!(family.is_subset(&got), "{lambda}");
            }
        }
    }

    #[test]
    fn vertex_counts_by_k() {
        let counts: Vec<usize> = [vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]
            .iter()
            .map(|p| enumerate_vertices(&part(p, 3)).len())
            .collect();
        assert_eq!(counts, vec![4, 5, 5]);
        // the binary-tree family of size 9 misses (7,4,2,0)
        let lambda = part(&[4, 2, 1, 0], 4);
        let vs: BTreeSet<_> = enumerate_vertices(&lambda).into_iter().map(|v| v.t).collect();
        assert_eq!(vs.len(), 14);
        assert_eq!(tree_family_vertices(&lambda).len(), 9);
        assert!(vs.contains(&vec![7, 4, 2, 0]));
    }

    #[test]
    fn forest_basics() {
        let p = p_lambda(&part(&[1, 0], 2));
        let forests = building_set_forests(&p).unwrap();
        let encodings: Vec<_> = forests.iter().map(BForest::encoding).collect();
        assert_eq!(encodings, vec!["1(2)", "2(1)"]);
        assert_eq!(forests[0].as_binary_tree().unwrap().encoding(), "()()");
        assert!(forests[1].as_binary_tree().is_some());
        assert_eq!(forest_vertex(&p, &forests[0]), vec![2, 0]);
        assert_eq!(forests[1].depth(1), 1);
        assert_eq!(forests[1].descendants(2), vec![1, 2]);
        let empty = p_lambda(&Partition::empty(3).unwrap());
        let forests = building_set_forests(&empty).unwrap();
        assert_eq!(forests.len(), 2);
        assert!(forests.iter().all(|f| !f.contains(3)));
        let bad = GenPermutohedron::new(3, vec![SimplexTerm::new(vec![1, 2], 1).unwrap(), SimplexTerm::new(vec![2, 3], 1).unwrap()]);
        assert!(matches!(building_set_forests(&bad.unwrap()), Err(Error::NotBuildingSet { .. })));
    }

    #[test]
    fn forest_encoding_roundtrip_for_trees() {
        for n in 1..=5 {
            for t in enumerate_trees(n) {
                let f = BForest::from_binary_tree(&t, n);
                assert_eq!(f.as_binary_tree().as_ref(), Some(&t));
            }
        }
    }
}
