//! Canonical forms for trees and the equal-polynomial / non-isomorphic
//! tree-pair check.

use crate::closed::closed_form;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;

/// The 1 or 2 central vertices of a tree, found by repeatedly stripping
/// leaves. Errors if the graph is not a tree.
pub fn tree_centers(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::NotATree("empty graph".into()));
    }
    if g.edge_count() != n - 1 || !g.is_connected() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges, connected: {}",
            n,
            g.edge_count(),
            g.is_connected()
        )));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers.sort_unstable();
    Ok(centers)
}

fn rooted_code(g: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut child_codes: Vec<String> = g
        .neighbors(root)
        .filter(|&c| Some(c) != parent)
        .map(|c| rooted_code(g, c, Some(root)))
        .collect();
    child_codes.sort();
    let mut out = String::with_capacity(2 + child_codes.iter().map(String::len).sum::<usize>());
    out.push('(');
    for c in child_codes {
        out.push_str(&c);
    }
    out.push(')');
    out
}

/// Center-rooted canonical encoding of a tree. Two trees are isomorphic iff
/// their codes are equal. For a bicentral tree the two center-rooted halves
/// are encoded separately and combined in sorted order.
pub fn tree_canonical_code(g: &Graph) -> Result<String> {
    let centers = tree_centers(g)?;
    match centers.as_slice() {
        [c] => Ok(rooted_code(g, *c, None)),
        [c1, c2] => {
            let a = rooted_code(g, *c1, Some(*c2));
            let b = rooted_code(g, *c2, Some(*c1));
            if a <= b {
                Ok(format!("[{a}{b}]"))
            } else {
                Ok(format!("[{b}{a}]"))
            }
        }
        _ => unreachable!("a tree has 1 or 2 centers"),
    }
}

/// True iff the two graphs are isomorphic trees.
pub fn trees_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.vertex_count() == h.vertex_count() && tree_canonical_code(g)? == tree_canonical_code(h)?)
}

/// Outcome of comparing the two spider-tree families at a given scale.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TreePairCheck {
    pub psi_equal: bool,
    pub isomorphic: bool,
}

/// Compares tree1(k) and tree2(k): whether their general position
/// polynomials (by the family closed form) agree, and whether the built
/// trees are isomorphic under the center-rooted canonical encoding.
pub fn trees_equal_nonisomorphic_check(k: usize) -> Result<TreePairCheck> {
    let s1 = FamilySpec::Tree1 { k };
    let s2 = FamilySpec::Tree2 { k };
    let psi_equal = closed_form(&s1)? == closed_form(&s2)?;
    let isomorphic = trees_isomorphic(&s1.build()?, &s2.build()?)?;
    Ok(TreePairCheck {
        psi_equal,
        isomorphic,
    })
}
