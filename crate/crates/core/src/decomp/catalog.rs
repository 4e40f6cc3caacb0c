//! Profiles for the standard families whose level data is known exactly.

use super::{concat_with_reversed, DecompositionProfile, Level, LevelComponent};
use crate::kirby;

fn one_level(label: &str, one_handles: u32, component: LevelComponent, three_handles: u32) -> DecompositionProfile {
    let level = Level::new(one_handles, vec![component], three_handles).expect("one component");
    DecompositionProfile::new(label, vec![level])
}

fn unknot() -> LevelComponent {
    LevelComponent::linked(0, 0, 1).expect("nonempty link")
}

/// `b0 ∪ b4`, empty width.
pub fn s4() -> DecompositionProfile {
    DecompositionProfile::new("S4", Vec::new())
}

/// One 1-handle and one 3-handle: a single level `S1xS2` with no link.
pub fn s1xs3() -> DecompositionProfile {
    one_level("S1xS3", 1, LevelComponent::unlinked(1), 1)
}

/// `S1xB3`: one 1-handle, boundary `S1xS2`.
pub fn s1xb3() -> DecompositionProfile {
    one_level("S1xB3", 1, LevelComponent::unlinked(1), 0)
}

/// `±CP2`: a (±1)-framed unknot in `S3`.
pub fn cp2(positive: bool) -> DecompositionProfile {
    one_level(if positive { "CP2" } else { "-CP2" }, 0, unknot(), 0)
}

/// The linear plumbing with the given Euler numbers, one 2-handle per level.
///
/// Level `i` sees the boundary of the plumbing of the first `i` handles,
/// which is `S3` when the partial linking matrix has determinant `±1`, and a
/// lens space or `S1xS2` (Heegaard genus one) otherwise. Each attaching
/// circle is a core of a genus-one splitting, so its tunnel number is 0.
pub fn linear_plumbing(framings: &[i64]) -> DecompositionProfile {
    let levels = (0..framings.len())
        .map(|i| {
            let hg = if i == 0 {
                0
            } else {
                let partial = kirby::linear_plumbing(&framings[..i]);
                let det = kirby::linking_matrix(&partial).determinant();
                u32::from(det.magnitude() != &1u32.into())
            };
            let comp = LevelComponent::linked(hg, 0, 1).expect("nonempty link");
            Level::new(0, vec![comp], 0).expect("one component")
        })
        .collect();
    let label = format!(
        "plumbing({})",
        framings.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",")
    );
    DecompositionProfile::new(label, levels)
}

/// The one-2-handle diagram of the disk bundle `X_{g,n}` (orientable) or
/// `Y_{g,n}` (nonorientable): the attaching circle sits in `#_m S1xS2` with
/// `m = 2g` (resp. `g`) and has a tunnel system of `m` arcs, giving width
/// `{4g+1}` (resp. `{2g+1}`).
pub fn disk_bundle_profile(orientable: bool, g: u32) -> DecompositionProfile {
    let m = if orientable { 2 * g } else { g };
    let label = format!("{}_{{{g},n}}", if orientable { "X" } else { "Y" });
    let comp = LevelComponent::linked(m, m, 1).expect("nonempty link");
    one_level(&label, m, comp, 0)
}

/// The double as `p_M` followed by `p_M` upside down; width `{c, c}`.
pub fn disk_bundle_double_profile(orientable: bool, g: u32) -> DecompositionProfile {
    let p = disk_bundle_profile(orientable, g);
    let mut d = concat_with_reversed(&p, &p);
    d.label = format!("D({})", p.label);
    d
}

/// The double with all 2-handles attached at once: one level with tunnel
/// number `2g+1` (resp. `g+1`), i.e. a trisection of genus `2g+2`
/// (resp. `g+2`).
pub fn disk_bundle_double_simultaneous(orientable: bool, g: u32) -> DecompositionProfile {
    let m = if orientable { 2 * g } else { g };
    let label = format!("D({}_{{{g},n}}) simultaneous", if orientable { "X" } else { "Y" });
    let comp = LevelComponent::linked(m, m + 1, 2).expect("nonempty link");
    one_level(&label, m, comp, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn width_one_family() {
        assert!(s4().width().is_empty());
        assert_eq!(s1xs3().width().entries(), &[1]);
        assert_eq!(cp2(true).width().entries(), &[1]);
        assert_eq!(cp2(false).width().entries(), &[1]);
        for k in 1..=10 {
            let framings: Vec<i64> = (0..k).map(|i| (i % 5) as i64 - 2).collect();
            let p = linear_plumbing(&framings);
            assert_eq!(p.width().entries(), vec![1; k].as_slice());
        }
    }

    #[test]
    fn plumbing_levels_track_boundary() {
        // (1): after the first handle the boundary is S3 again
        let p = linear_plumbing(&[1, 2]);
        assert_eq!(p.levels[1].components()[0].heegaard_genus(), 0);
        let p = linear_plumbing(&[2, 2, 2]);
        assert_eq!(p.levels[1].components()[0].heegaard_genus(), 1);
        assert_eq!(p.levels[2].components()[0].heegaard_genus(), 1);
    }

    #[test]
    fn bundle_widths() {
        for g in 1..=4u64 {
            let x = disk_bundle_profile(true, g as u32);
            let y = disk_bundle_profile(false, g as u32);
            assert_eq!(x.width().entries(), &[4 * g + 1]);
            assert_eq!(y.width().entries(), &[2 * g + 1]);
            assert_eq!(disk_bundle_double_profile(true, g as u32).width().entries(), &[4 * g + 1, 4 * g + 1]);
            assert_eq!(disk_bundle_double_simultaneous(true, g as u32).width().entries(), &[4 * g + 3]);
            assert_eq!(disk_bundle_double_simultaneous(false, g as u32).width().entries(), &[2 * g + 3]);
        }
    }
}
