//! Decomposition profiles: per-level data of a handle decomposition
//! `b0 ∪ C1 ∪ D1 ∪ E1 ∪ … ∪ CN ∪ DN ∪ EN ∪ b4`, the level complexity, and
//! the width-changing moves.
//!
//! Heegaard genera and tunnel numbers are supplied as data; nothing here
//! tries to compute them from a diagram.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::widthset::WidthMultiset;

pub mod catalog;

/// One connected component `Y'` of a level 3-manifold `Y_i` together with
/// the part of the attaching link lying in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawComponent", into = "RawComponent")]
pub struct LevelComponent {
    heegaard_genus: u32,
    tunnel_number: Option<u32>,
    link_size: u32,
}

#[derive(Serialize, Deserialize)]
struct RawComponent {
    hg: u32,
    tunnel: Option<u32>,
    link_size: u32,
}

impl TryFrom<RawComponent> for LevelComponent {
    type Error = Error;

    fn try_from(raw: RawComponent) -> Result<Self> {
        match raw.tunnel {
            Some(t) => LevelComponent::linked(raw.hg, t, raw.link_size),
            None if raw.link_size == 0 => Ok(LevelComponent::unlinked(raw.hg)),
            None => Err(Error::Invalid(format!(
                "component has link_size {} but no tunnel number",
                raw.link_size
            ))),
        }
    }
}

impl From<LevelComponent> for RawComponent {
    fn from(c: LevelComponent) -> Self {
        RawComponent { hg: c.heegaard_genus, tunnel: c.tunnel_number, link_size: c.link_size }
    }
}

impl LevelComponent {
    pub fn unlinked(heegaard_genus: u32) -> Self {
        Self { heegaard_genus, tunnel_number: None, link_size: 0 }
    }

    pub fn linked(heegaard_genus: u32, tunnel_number: u32, link_size: u32) -> Result<Self> {
        if link_size == 0 {
            return Err(Error::Invalid("a tunnel number needs a nonempty link".into()));
        }
        Ok(Self { heegaard_genus, tunnel_number: Some(tunnel_number), link_size })
    }

    pub fn heegaard_genus(&self) -> u32 {
        self.heegaard_genus
    }

    pub fn tunnel_number(&self) -> Option<u32> {
        self.tunnel_number
    }

    pub fn link_size(&self) -> u32 {
        self.link_size
    }

    /// `2t + 1` with a link, `max(2 HG - 1, 0)` without.
    pub fn complexity(&self) -> u64 {
        match self.tunnel_number {
            Some(t) => 2 * t as u64 + 1,
            None => (2 * self.heegaard_genus as u64).saturating_sub(1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLevel")]
pub struct Level {
    pub one_handles: u32,
    pub three_handles: u32,
    components: Vec<LevelComponent>,
}

#[derive(Deserialize)]
struct RawLevel {
    one_handles: u32,
    three_handles: u32,
    components: Vec<LevelComponent>,
}

impl TryFrom<RawLevel> for Level {
    type Error = Error;

    fn try_from(raw: RawLevel) -> Result<Self> {
        Level::new(raw.one_handles, raw.components, raw.three_handles)
    }
}

impl Level {
    pub fn new(one_handles: u32, components: Vec<LevelComponent>, three_handles: u32) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("a level needs at least one component".into()));
        }
        Ok(Self { one_handles, three_handles, components })
    }

    pub fn components(&self) -> &[LevelComponent] {
        &self.components
    }

    pub fn two_handles(&self) -> u64 {
        self.components.iter().map(|c| c.link_size as u64).sum()
    }

    pub fn complexity(&self) -> u64 {
        self.components.iter().map(LevelComponent::complexity).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DecompositionProfile {
    #[serde(default)]
    pub label: String,
    pub levels: Vec<Level>,
}

impl DecompositionProfile {
    pub fn new(label: impl Into<String>, levels: Vec<Level>) -> Self {
        Self { label: label.into(), levels }
    }

    pub fn level_complexities(&self) -> Vec<u64> {
        self.levels.iter().map(Level::complexity).collect()
    }

    pub fn width(&self) -> WidthMultiset {
        self.levels.iter().map(Level::complexity).collect()
    }

    /// Handle counts `(b0, |C|, |D|, |E|, b4)`, assuming one 0- and one
    /// 4-handle.
    pub fn handle_counts(&self) -> [u64; 5] {
        let mut counts = [1, 0, 0, 0, 1];
        for l in &self.levels {
            counts[1] += l.one_handles as u64;
            counts[2] += l.two_handles();
            counts[3] += l.three_handles as u64;
        }
        counts
    }

    /// The upside-down decomposition: levels in reverse order with the roles
    /// of 1- and 3-handles exchanged. Component data is kept per level.
    pub fn reverse(&self) -> DecompositionProfile {
        let levels = self
            .levels
            .iter()
            .rev()
            .map(|l| Level {
                one_handles: l.three_handles,
                three_handles: l.one_handles,
                components: l.components.clone(),
            })
            .collect();
        DecompositionProfile { label: self.label.clone(), levels }
    }

    fn check_index(&self, i: usize) -> Result<&Level> {
        self.levels.get(i).ok_or(Error::IndexOutOfRange { index: i, len: self.levels.len() })
    }
}

pub fn component_complexity(c: &LevelComponent) -> u64 {
    c.complexity()
}

pub fn level_complexity(l: &Level) -> u64 {
    l.complexity()
}

pub fn width_of(p: &DecompositionProfile) -> WidthMultiset {
    p.width()
}

pub fn reverse(p: &DecompositionProfile) -> DecompositionProfile {
    p.reverse()
}

/// Tunnel number of a split link `K1 ∪ K2` in `X1 # X2`: `t1 + t2 + 1` when
/// both sides carry a link, `t1 + HG(X2)` when only the first does (and
/// symmetrically).
pub fn tunnel_split_union(t1: Option<u32>, t2: Option<u32>, hg1: u32, hg2: u32) -> Result<u64> {
    match (t1, t2) {
        (Some(a), Some(b)) => Ok(a as u64 + b as u64 + 1),
        (Some(a), None) => Ok(a as u64 + hg2 as u64),
        (None, Some(b)) => Ok(b as u64 + hg1 as u64),
        (None, None) => Err(Error::NoLinkOnEitherSide),
    }
}

/// Data describing how the link on one component of a level splits as
/// `L_A ∪ L_B` along a sphere `Y* = A #_S B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitData {
    /// Index of the component `Y*` inside the level.
    pub component: usize,
    /// `HG(B)`.
    pub hg_b: u32,
    /// `t_B(L_B)`.
    pub t_b: u32,
    /// `HG(A[L_A])`.
    pub hg_a_surgered: u32,
    /// `t_A(L_A)`.
    pub t_a: u32,
    /// `|L_B|`; the remaining `|L*| - |L_B|` components form `L_A`.
    pub link_size_b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitOutcome {
    pub profile: DecompositionProfile,
    pub c_new_a: u64,
    pub c_new_b: u64,
}

/// Attaches the 2-handles of level `i` in two batches, `D_i - D_i^B` first
/// and `D_i^B` second. The level is replaced by two levels of complexity
/// `c_A = c_i + 2(HG(B) - t_B)` and `c_B = c_i + 2(HG(A[L_A]) - t_A)`.
///
/// The shift is carried by the tunnel number of the split component; the
/// other components are copied into both new levels. 1-handles stay with
/// the first new level and 3-handles move to the second.
pub fn split_level(p: &DecompositionProfile, i: usize, side: &SplitData) -> Result<SplitOutcome> {
    let level = p.check_index(i)?;
    let comp = level.components.get(side.component).ok_or(Error::IndexOutOfRange {
        index: side.component,
        len: level.components.len(),
    })?;
    let t_star = comp.tunnel_number.ok_or_else(|| {
        Error::InconsistentSplitData("the split component carries no link".into())
    })?;
    if side.link_size_b == 0 || side.link_size_b >= comp.link_size {
        return Err(Error::InconsistentSplitData(format!(
            "link of size {} cannot split off {} components on both sides",
            comp.link_size, side.link_size_b
        )));
    }

    let c_i = level.complexity() as i64;
    let delta_a = side.hg_b as i64 - side.t_b as i64;
    let delta_b = side.hg_a_surgered as i64 - side.t_a as i64;

    let shifted = |delta: i64, link_size: u32| -> Result<LevelComponent> {
        let t = t_star as i64 + delta;
        if t < 0 {
            return Err(Error::InconsistentSplitData(format!(
                "tunnel number {t_star} shifted by {delta} is negative"
            )));
        }
        LevelComponent::linked(comp.heegaard_genus, t as u32, link_size)
    };

    let mut comps_a = level.components.clone();
    comps_a[side.component] = shifted(delta_a, comp.link_size - side.link_size_b)?;
    let mut comps_b = level.components.clone();
    comps_b[side.component] = shifted(delta_b, side.link_size_b)?;

    let level_a = Level { one_handles: level.one_handles, three_handles: 0, components: comps_a };
    let level_b = Level { one_handles: 0, three_handles: level.three_handles, components: comps_b };
    let c_new_a = level_a.complexity();
    let c_new_b = level_b.complexity();
    debug_assert_eq!(c_new_a as i64, c_i + 2 * delta_a);
    debug_assert_eq!(c_new_b as i64, c_i + 2 * delta_b);

    let mut levels = p.levels.clone();
    levels.splice(i..=i, [level_a, level_b]);
    Ok(SplitOutcome {
        profile: DecompositionProfile { label: p.label.clone(), levels },
        c_new_a,
        c_new_b,
    })
}

/// Merges an empty level `i` (no 2- and no 3-handles) into level `i + 1` by
/// attaching both batches of 1-handles at once. The complexity of level
/// `i + 1` is unchanged, so the width loses one copy of `c_i`.
pub fn merge_levels(p: &DecompositionProfile, i: usize) -> Result<DecompositionProfile> {
    let level = p.check_index(i)?;
    if i + 1 >= p.levels.len() {
        return Err(Error::LevelNotMergeable(format!("level {i} is the last level")));
    }
    if level.two_handles() > 0 || level.three_handles > 0 {
        return Err(Error::LevelNotMergeable(format!(
            "level {i} has {} 2-handles and {} 3-handles",
            level.two_handles(),
            level.three_handles
        )));
    }
    let mut levels = p.levels.clone();
    let removed = levels.remove(i);
    levels[i].one_handles += removed.one_handles;
    Ok(DecompositionProfile { label: p.label.clone(), levels })
}

/// Which kind of cancelling pair is removed by [`cancel_pair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CancellingPair {
    OneTwo,
    TwoThree,
}

/// Removes a 1/2 or 2/3 cancelling pair at level `i`, where component
/// `component` loses one link component and is replaced by `updated`
/// (whose tunnel data the caller knows). Geometric cancellation is taken on
/// trust. A level left with no handles at all is dropped.
pub fn cancel_pair(
    p: &DecompositionProfile,
    i: usize,
    kind: CancellingPair,
    component: usize,
    updated: LevelComponent,
) -> Result<DecompositionProfile> {
    let level = p.check_index(i)?;
    let old = level.components.get(component).ok_or(Error::IndexOutOfRange {
        index: component,
        len: level.components.len(),
    })?;
    if old.link_size == 0 || updated.link_size + 1 != old.link_size {
        return Err(Error::Precondition(format!(
            "cancelling removes exactly one link component (had {}, replacement has {})",
            old.link_size, updated.link_size
        )));
    }
    let mut level = level.clone();
    match kind {
        CancellingPair::OneTwo if level.one_handles == 0 => {
            return Err(Error::Precondition(format!("level {i} has no 1-handles")))
        }
        CancellingPair::OneTwo => level.one_handles -= 1,
        CancellingPair::TwoThree if level.three_handles == 0 => {
            return Err(Error::Precondition(format!("level {i} has no 3-handles")))
        }
        CancellingPair::TwoThree => level.three_handles -= 1,
    }
    level.components[component] = updated;
    let mut levels = p.levels.clone();
    if level.one_handles == 0 && level.three_handles == 0 && level.two_handles() == 0 {
        levels.remove(i);
    } else {
        levels[i] = level;
    }
    Ok(DecompositionProfile { label: p.label.clone(), levels })
}

/// `p_M` followed by `p_N` upside down: a decomposition of `M ∪_f N`.
pub fn concat_with_reversed(pm: &DecompositionProfile, pn: &DecompositionProfile) -> DecompositionProfile {
    let mut levels = pm.levels.clone();
    levels.extend(pn.reverse().levels);
    let label = match (pm.label.is_empty(), pn.label.is_empty()) {
        (true, true) => String::new(),
        _ => format!("{} U {}", pm.label, pn.label),
    };
    DecompositionProfile { label, levels }
}
