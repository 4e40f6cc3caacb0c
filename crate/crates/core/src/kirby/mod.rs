//! Algebraic Kirby diagrams.
//!
//! A diagram records handle counts, the framings and pairwise linking
//! numbers of the 2-handles, and how many times (algebraically) each
//! 2-handle runs over each 1-handle. That is enough for the cellular chain
//! complex, the intersection form and the boundary homology; planar link
//! data is not modelled.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod matrix;

pub use matrix::{cokernel, smith_normal_form, AbelianGroup, IntegerMatrix, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoHandle {
    pub id: String,
    pub framing: i64,
    /// Linking numbers with the other 2-handles, keyed by id.
    #[serde(default)]
    pub linking: BTreeMap<String, i64>,
    /// Signed number of passes over each 1-handle, keyed by id.
    #[serde(default)]
    pub run_through: BTreeMap<String, i64>,
}

impl TwoHandle {
    pub fn new(id: impl Into<String>, framing: i64) -> Self {
        Self { id: id.into(), framing, linking: BTreeMap::new(), run_through: BTreeMap::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct KirbyDiagram {
    zero_handles: u32,
    one_handles: Vec<String>,
    two_handles: Vec<TwoHandle>,
    three_handles: u32,
    four_handles: u32,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    #[serde(default = "one")]
    zero_handles: u32,
    #[serde(default)]
    one_handles: Vec<String>,
    #[serde(default)]
    two_handles: Vec<TwoHandle>,
    #[serde(default)]
    three_handles: u32,
    #[serde(default)]
    four_handles: u32,
}

fn one() -> u32 {
    1
}

impl TryFrom<RawDiagram> for KirbyDiagram {
    type Error = Error;

    fn try_from(r: RawDiagram) -> Result<Self> {
        KirbyDiagram::new(r.zero_handles, r.one_handles, r.two_handles, r.three_handles, r.four_handles)
    }
}

impl From<KirbyDiagram> for RawDiagram {
    fn from(d: KirbyDiagram) -> Self {
        RawDiagram {
            zero_handles: d.zero_handles,
            one_handles: d.one_handles,
            two_handles: d.two_handles,
            three_handles: d.three_handles,
            four_handles: d.four_handles,
        }
    }
}

impl KirbyDiagram {
    /// Validates ids, symmetry of the linking data, and references.
    pub fn new(
        zero_handles: u32,
        one_handles: Vec<String>,
        mut two_handles: Vec<TwoHandle>,
        three_handles: u32,
        four_handles: u32,
    ) -> Result<Self> {
        if zero_handles == 0 {
            return Err(Error::Invalid("a diagram needs at least one 0-handle".into()));
        }
        let ones: BTreeSet<&str> = one_handles.iter().map(String::as_str).collect();
        if ones.len() != one_handles.len() {
            return Err(Error::Invalid("duplicate 1-handle id".into()));
        }
        let twos: BTreeMap<&str, usize> =
            two_handles.iter().enumerate().map(|(i, h)| (h.id.as_str(), i)).collect();
        if twos.len() != two_handles.len() {
            return Err(Error::Invalid("duplicate 2-handle id".into()));
        }
        for h in &two_handles {
            for (other, &lk) in &h.linking {
                if other == &h.id {
                    return Err(Error::Invalid(format!(
                        "2-handle {} lists itself in its linking map; use the framing",
                        h.id
                    )));
                }
                let Some(&j) = twos.get(other.as_str()) else {
                    return Err(Error::Invalid(format!("2-handle {} links unknown handle {other}", h.id)));
                };
                let back = two_handles[j].linking.get(&h.id).copied();
                if back.is_some_and(|b| b != lk) {
                    return Err(Error::Invalid(format!(
                        "linking of {} and {other} is not symmetric",
                        h.id
                    )));
                }
            }
            if let Some(bad) = h.run_through.keys().find(|k| !ones.contains(k.as_str())) {
                return Err(Error::Invalid(format!("2-handle {} runs over unknown 1-handle {bad}", h.id)));
            }
        }
        // fill in the mirror entries, drop zeros
        let mut pairs = Vec::new();
        for h in &two_handles {
            for (other, &lk) in &h.linking {
                pairs.push((twos[other.as_str()], h.id.clone(), lk));
            }
        }
        for (at, other, lk) in pairs {
            two_handles[at].linking.insert(other, lk);
        }
        for h in &mut two_handles {
            h.linking.retain(|_, v| *v != 0);
            h.run_through.retain(|_, v| *v != 0);
        }
        Ok(Self { zero_handles, one_handles, two_handles, three_handles, four_handles })
    }

    /// `B4`: a single 0-handle.
    pub fn ball() -> Self {
        Self { zero_handles: 1, one_handles: Vec::new(), two_handles: Vec::new(), three_handles: 0, four_handles: 0 }
    }

    pub fn zero_handles(&self) -> u32 {
        self.zero_handles
    }

    pub fn one_handles(&self) -> &[String] {
        &self.one_handles
    }

    pub fn two_handles(&self) -> &[TwoHandle] {
        &self.two_handles
    }

    pub fn three_handles(&self) -> u32 {
        self.three_handles
    }

    pub fn four_handles(&self) -> u32 {
        self.four_handles
    }

    pub fn linking(&self, a: usize, b: usize) -> i64 {
        if a == b {
            self.two_handles[a].framing
        } else {
            self.two_handles[a].linking.get(&self.two_handles[b].id).copied().unwrap_or(0)
        }
    }

    fn require_closed_off(&self, what: &str) -> Result<()> {
        if self.three_handles != 0 || self.four_handles != 0 {
            return Err(Error::Precondition(format!("{what} needs a diagram without 3- and 4-handles")));
        }
        Ok(())
    }

    fn require_no_one_handles(&self, what: &str) -> Result<()> {
        if !self.one_handles.is_empty() {
            return Err(Error::Precondition(format!("{what} needs a diagram without 1-handles")));
        }
        Ok(())
    }
}

/// Framings on the diagonal, linking numbers off it.
pub fn linking_matrix(d: &KirbyDiagram) -> IntegerMatrix {
    let n = d.two_handles.len();
    IntegerMatrix::from_fn(n, n, |i, j| BigInt::from(d.linking(i, j)))
}

/// The cellular boundary `∂₂: Z^{|2-handles|} → Z^{|1-handles|}`.
pub fn run_through_matrix(d: &KirbyDiagram) -> IntegerMatrix {
    IntegerMatrix::from_fn(d.one_handles.len(), d.two_handles.len(), |i, j| {
        BigInt::from(d.two_handles[j].run_through.get(&d.one_handles[i]).copied().unwrap_or(0))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Homology {
    pub h0: AbelianGroup,
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
}

pub fn homology_of_2handlebody(d: &KirbyDiagram) -> Result<Homology> {
    if d.three_handles != 0 || d.four_handles != 0 || d.zero_handles != 1 {
        return Err(Error::NotA2Handlebody(format!(
            "handle counts ({}, {}, {}, {}, {})",
            d.zero_handles,
            d.one_handles.len(),
            d.two_handles.len(),
            d.three_handles,
            d.four_handles
        )));
    }
    let boundary = run_through_matrix(d);
    Ok(Homology {
        h0: AbelianGroup::free(1),
        h1: cokernel(&boundary),
        h2: AbelianGroup::free(matrix::kernel_rank(&boundary)),
    })
}

/// `H1` of the boundary 3-manifold of a diagram without 1-handles: the
/// cokernel of the linking matrix.
pub fn boundary_first_homology(d: &KirbyDiagram) -> Result<AbelianGroup> {
    d.require_no_one_handles("boundary homology")?;
    d.require_closed_off("boundary homology")?;
    Ok(cokernel(&linking_matrix(d)))
}

pub fn euler_characteristic(d: &KirbyDiagram) -> i64 {
    d.zero_handles as i64 - d.one_handles.len() as i64 + d.two_handles.len() as i64
        - d.three_handles as i64
        + d.four_handles as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionForm {
    pub matrix: IntegerMatrix,
    pub signature: i64,
    #[serde(serialize_with = "ser_bigint")]
    pub determinant: BigInt,
    /// All framings even. This is the parity of the given basis only.
    pub even: bool,
}

fn ser_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    let v = i64::try_from(x).map_err(|_| S::Error::custom(format!("{x} exceeds i64")))?;
    s.serialize_i64(v)
}

pub fn intersection_form(d: &KirbyDiagram) -> Result<IntersectionForm> {
    d.require_no_one_handles("intersection form")?;
    let matrix = linking_matrix(d);
    Ok(IntersectionForm {
        signature: matrix.signature(),
        determinant: matrix.determinant(),
        even: d.two_handles.iter().all(|h| h.framing.is_even()),
        matrix,
    })
}

fn plumbing_id(i: usize) -> String {
    format!("h{}", i + 1)
}

/// A chain of unknots with the given framings, consecutive ones linking
/// once.
pub fn linear_plumbing(framings: &[i64]) -> KirbyDiagram {
    let k = framings.len();
    let two_handles = framings
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let mut h = TwoHandle::new(plumbing_id(i), n);
            if i > 0 {
                h.linking.insert(plumbing_id(i - 1), 1);
            }
            if i + 1 < k {
                h.linking.insert(plumbing_id(i + 1), 1);
            }
            h
        })
        .collect();
    KirbyDiagram::new(1, Vec::new(), two_handles, 0, 0).expect("plumbing data is consistent")
}

/// The one-2-handle diagram of the disk bundle over a closed surface of
/// genus `g` with Euler number `n`.
///
/// Orientable: 1-handles `x1, y1, …, xg, yg`; the attaching circle follows
/// the product of commutators and so runs algebraically zero times over
/// each. Nonorientable: 1-handles `w1, …, wg`; the circle follows
/// `w1² ⋯ wg²` and runs twice over each.
pub fn disk_bundle(orientable: bool, g: u32, n: i64) -> Result<KirbyDiagram> {
    if g == 0 {
        return Err(Error::Precondition("disk bundles need genus g >= 1".into()));
    }
    let mut one_handles = Vec::new();
    let mut h = TwoHandle::new("k", n);
    if orientable {
        for i in 1..=g {
            one_handles.push(format!("x{i}"));
            one_handles.push(format!("y{i}"));
        }
    } else {
        for i in 1..=g {
            let id = format!("w{i}");
            h.run_through.insert(id.clone(), 2);
            one_handles.push(id);
        }
    }
    KirbyDiagram::new(1, one_handles, vec![h], 0, 0)
}

/// The double `M ∪ M̄`: a 0-framed meridian for every 2-handle, one
/// 3-handle per 1-handle and one 4-handle per 0-handle.
pub fn double(d: &KirbyDiagram) -> Result<KirbyDiagram> {
    d.require_closed_off("doubling")?;
    let taken: BTreeSet<&str> = d
        .one_handles
        .iter()
        .map(String::as_str)
        .chain(d.two_handles.iter().map(|h| h.id.as_str()))
        .collect();
    let mut two_handles = d.two_handles.clone();
    for h in &d.two_handles {
        let mut id = format!("m_{}", h.id);
        while taken.contains(id.as_str()) {
            id.insert(0, '_');
        }
        let mut m = TwoHandle::new(id, 0);
        m.linking.insert(h.id.clone(), 1);
        two_handles.push(m);
    }
    KirbyDiagram::new(
        d.zero_handles,
        d.one_handles.clone(),
        two_handles,
        d.one_handles.len() as u32,
        d.zero_handles,
    )
}
