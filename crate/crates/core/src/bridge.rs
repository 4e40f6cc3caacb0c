//! Trivial tangles as matchings, the banded-link extraction, and Euler
//! characteristic bookkeeping for branch surfaces and cyclic covers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A perfect matching on `1..=2b`, stored as an involution.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<[usize; 2]>", into = "Vec<[usize; 2]>")]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(pairs: &[[usize; 2]]) -> Result<Self> {
        let n = 2 * pairs.len();
        if n == 0 {
            return Err(Error::Invalid("a matching needs at least one pair".into()));
        }
        let mut partner = vec![0; n + 1];
        for &[i, j] in pairs {
            for p in [i, j] {
                if p == 0 || p > n {
                    return Err(Error::Invalid(format!("point {p} outside 1..={n}")));
                }
                if partner[p] != 0 {
                    return Err(Error::Invalid(format!("point {p} matched twice")));
                }
            }
            if i == j {
                return Err(Error::Invalid(format!("point {i} matched to itself")));
            }
            partner[i] = j;
            partner[j] = i;
        }
        Ok(Self { partner })
    }

    /// The bridge number.
    pub fn b(&self) -> usize {
        (self.partner.len() - 1) / 2
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point]
    }

    /// Pairs `[i, j]` with `i < j`, sorted.
    pub fn pairs(&self) -> Vec<[usize; 2]> {
        (1..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| [i, self.partner[i]])
            .collect()
    }
}

impl TryFrom<Vec<[usize; 2]>> for Matching {
    type Error = Error;

    fn try_from(pairs: Vec<[usize; 2]>) -> Result<Self> {
        Matching::new(&pairs)
    }
}

impl From<Matching> for Vec<[usize; 2]> {
    fn from(m: Matching) -> Self {
        m.pairs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BridgeTrisection {
    pub b: usize,
    pub theta_alpha: Matching,
    pub theta_beta: Matching,
    pub theta_gamma: Matching,
    /// Caller's assertion that `θ_γ ∪ θ_α` is an unlink.
    #[serde(default)]
    pub unlink_assertion: bool,
    /// Planar diagram words, carried through untouched.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossings: Option<serde_json::Value>,
}

impl BridgeTrisection {
    pub fn new(alpha: Matching, beta: Matching, gamma: Matching, unlink_assertion: bool) -> Result<Self> {
        let bt = Self {
            b: alpha.b(),
            theta_alpha: alpha,
            theta_beta: beta,
            theta_gamma: gamma,
            unlink_assertion,
            crossings: None,
        };
        bt.check()?;
        Ok(bt)
    }

    /// All three matchings live on the same `2b` points.
    pub fn check(&self) -> Result<()> {
        for (name, m) in [("alpha", &self.theta_alpha), ("beta", &self.theta_beta), ("gamma", &self.theta_gamma)] {
            if m.b() != self.b {
                return Err(Error::DimensionMismatch(format!(
                    "theta_{name} has {} arcs, expected b = {}",
                    m.b(),
                    self.b
                )));
            }
        }
        Ok(())
    }

    fn certified(&self) -> Result<()> {
        self.check()?;
        if self.unlink_assertion {
            Ok(())
        } else {
            Err(Error::NotCertified)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkPair {
    pub beta: Matching,
    pub gamma: Matching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandedDiagram {
    pub link: LinkPair,
    /// Retained arcs of `θ_α`, identified by their endpoints.
    pub bands: Vec<[usize; 2]>,
}

fn same_size(m1: &Matching, m2: &Matching) -> Result<()> {
    if m1.b() != m2.b() {
        return Err(Error::DimensionMismatch(format!("matchings on {} and {} points", 2 * m1.b(), 2 * m2.b())));
    }
    Ok(())
}

/// Label every point with the index of its component in `m1 ∪ m2`;
/// components are numbered by their smallest point.
fn component_labels(m1: &Matching, m2: &Matching) -> (usize, Vec<usize>) {
    let n = 2 * m1.b();
    let mut label = vec![usize::MAX; n + 1];
    let mut count = 0;
    for start in 1..=n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut p = start;
        loop {
            label[p] = count;
            let q = m1.partner(p);
            label[q] = count;
            p = m2.partner(q);
            if p == start {
                break;
            }
        }
        count += 1;
    }
    (count, label)
}

/// Number of closed curves in the union of the two arc systems.
pub fn components_of_union(m1: &Matching, m2: &Matching) -> Result<usize> {
    same_size(m1, m2)?;
    Ok(component_labels(m1, m2).0)
}

/// Excise, on each component of `θ_α ∪ θ_γ`, the `θ_α` arc with the
/// smallest endpoint; the remaining arcs become bands on `θ_β ∪ θ_γ`.
pub fn banded_link(bt: &BridgeTrisection) -> Result<BandedDiagram> {
    bt.certified()?;
    let (count, label) = component_labels(&bt.theta_alpha, &bt.theta_gamma);
    let mut excised = vec![false; count];
    let mut bands = Vec::new();
    // pairs come sorted by smaller endpoint
    for arc in bt.theta_alpha.pairs() {
        let c = label[arc[0]];
        if excised[c] {
            bands.push(arc);
        } else {
            excised[c] = true;
        }
    }
    Ok(BandedDiagram {
        link: LinkPair { beta: bt.theta_beta.clone(), gamma: bt.theta_gamma.clone() },
        bands,
    })
}

/// `χ = F − b`: `2b` vertices, `3b` arcs, and one disk per component of
/// `θ_γ ∪ θ_α`.
pub fn branch_surface_euler(bt: &BridgeTrisection) -> Result<i64> {
    bt.certified()?;
    let f = components_of_union(&bt.theta_alpha, &bt.theta_gamma)?;
    Ok(f as i64 - bt.b as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryLinks {
    pub at_zero: usize,
    pub at_one: usize,
}

/// Component counts of `θ_α ∪ θ_β` and `θ_γ ∪ θ_β`.
pub fn boundary_links(bt: &BridgeTrisection) -> Result<BoundaryLinks> {
    bt.check()?;
    Ok(BoundaryLinks {
        at_zero: components_of_union(&bt.theta_alpha, &bt.theta_beta)?,
        at_one: components_of_union(&bt.theta_gamma, &bt.theta_beta)?,
    })
}

/// Euler characteristic of the `p`-fold cyclic cover branched along a
/// surface with Euler characteristic `chi_branch`.
pub fn branched_cover_euler(p: i64, chi_base: i64, chi_branch: i64) -> Result<i64> {
    if p < 1 {
        return Err(Error::Invalid(format!("cover degree must be at least 1, got {p}")));
    }
    Ok(p * chi_base - (p - 1) * chi_branch)
}

/// Number of fixed circles after attaching an equivariant 1-handle whose
/// band runs from component `c1` to `c2` of a fixed link with `components`
/// components. Ids are 1-based.
pub fn one_handle_fixed_set(components: usize, c1: usize, c2: usize, coherent: bool) -> Result<usize> {
    for c in [c1, c2] {
        if c == 0 || c > components {
            return Err(Error::IndexOutOfRange { index: c, len: components });
        }
    }
    Ok(match (c1 == c2, coherent) {
        (false, _) => components - 1,
        (true, true) => components + 1,
        (true, false) => components,
    })
}

/// The quotient data of the worked example: two arcs in each tangle, all
/// three equal, giving an annulus bounded by a Hopf link.
pub fn poincare_fixture() -> BridgeTrisection {
    let m = Matching::new(&[[1, 2], [3, 4]]).expect("valid matching");
    BridgeTrisection::new(m.clone(), m.clone(), m, true).expect("same size")
}

/// Every perfect matching on `1..=2b`, in lexicographic order of pairs.
pub fn all_matchings(b: usize) -> Vec<Matching> {
    fn go(free: &mut Vec<usize>, acc: &mut Vec<[usize; 2]>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching::new(acc).expect("perfect matching"));
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let other = free.remove(k);
            acc.push([first, other]);
            go(free, acc, out);
            acc.pop();
            free.insert(k, other);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if b > 0 {
        go(&mut (1..=2 * b).collect(), &mut Vec::new(), &mut out);
    }
    out
}
