//! Planar diagram codes for pretzel links and component counting.
//!
//! The diagram has one vertical twist region per entry, left to right. Each
//! crossing has four corners, listed counterclockwise as NE, NW, SW, SE; a
//! strand runs NW-SE or NE-SW through it. Inside a region the SW/SE corners of
//! one crossing meet the NW/NE corners of the one below. The top NE corner of
//! region `i` joins the top NW corner of region `i + 1`, the bottom SE corner
//! joins the bottom SW corner of region `i + 1`, and the last region wraps to
//! the first.
//!
//! A positive twist count puts the NW-SE strand over; a negative count puts
//! the NE-SW strand over. Arc labels start at 1 and run consecutively along
//! each component in the direction of travel. Each crossing is written
//! counterclockwise starting from its incoming under-arc.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::tanglecalc::PretzelTriple;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PdCode {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Checks that labels are exactly `1..=2n` with each appearing twice.
    pub fn validate(&self) -> Result<()> {
        let arcs = 2 * self.crossings.len();
        let mut seen = vec![0u8; arcs + 1];
        for (i, x) in self.crossings.iter().enumerate() {
            for &label in x {
                let slot = label as usize;
                if slot == 0 || slot > arcs {
                    return Err(Error::InvalidPd(format!(
                        "crossing {i} uses label {label} outside 1..={arcs}"
                    )));
                }
                seen[slot] += 1;
            }
        }
        match seen.iter().enumerate().skip(1).find(|(_, n)| **n != 2) {
            Some((label, n)) => Err(Error::InvalidPd(format!("label {label} appears {n} times"))),
            None => Ok(()),
        }
    }

    /// Standard text form, a JSON array of 4-element arrays.
    pub fn to_json(&self) -> String {
        let body: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("[{a},{b},{c},{d}]"))
            .collect();
        format!("[{}]", body.join(","))
    }
}

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// The endpoint across the crossing from `endpoint` along the same strand.
fn across(endpoint: usize) -> usize {
    endpoint - endpoint % 4 + (endpoint % 4 + 2) % 4
}

/// Builds the PD code of the pretzel link with the given twist counts.
pub fn pretzel_diagram(twists: &[i64]) -> Result<PdCode> {
    if twists.is_empty() {
        return Err(Error::DegenerateDiagram("no twist regions".to_string()));
    }
    if let Some(i) = twists.iter().position(|t| *t == 0) {
        return Err(Error::DegenerateDiagram(format!(
            "twist region {i} has no crossings"
        )));
    }

    let sizes: Vec<usize> = twists.iter().map(|t| t.unsigned_abs() as usize).collect();
    let total: usize = sizes.iter().sum();
    let mut first = Vec::with_capacity(sizes.len());
    let mut over_nw_se = Vec::with_capacity(total);
    let mut acc = 0;
    for (&size, &t) in sizes.iter().zip(twists) {
        first.push(acc);
        acc += size;
        over_nw_se.extend(std::iter::repeat_n(t > 0, size));
    }

    // partner[endpoint] is the other end of the edge leaving that corner,
    // with endpoint = 4 * crossing + corner.
    let mut partner = vec![usize::MAX; 4 * total];
    let mut join = |a: usize, b: usize| {
        partner[a] = b;
        partner[b] = a;
    };
    let regions = sizes.len();
    for i in 0..regions {
        let top = first[i];
        let bottom = first[i] + sizes[i] - 1;
        for c in top..bottom {
            join(4 * c + SW, 4 * (c + 1) + NW);
            join(4 * c + SE, 4 * (c + 1) + NE);
        }
        let j = (i + 1) % regions;
        let next_top = first[j];
        let next_bottom = first[j] + sizes[j] - 1;
        join(4 * top + NE, 4 * next_top + NW);
        join(4 * bottom + SE, 4 * next_bottom + SW);
    }

    let mut label = vec![0u32; 4 * total];
    let mut incoming = vec![false; 4 * total];
    let mut next_label = 1u32;
    for start in 0..4 * total {
        if label[start] != 0 {
            continue;
        }
        let mut out = start;
        loop {
            let into = partner[out];
            label[out] = next_label;
            label[into] = next_label;
            incoming[into] = true;
            next_label += 1;
            out = across(into);
            if out == start {
                break;
            }
        }
    }

    let crossings = (0..total)
        .map(|c| {
            let under = if over_nw_se[c] { [NE, SW] } else { [NW, SE] };
            let from = if incoming[4 * c + under[0]] {
                under[0]
            } else {
                under[1]
            };
            std::array::from_fn(|k| label[4 * c + (from + k) % 4])
        })
        .collect();
    Ok(PdCode { crossings })
}

/// Number of link components, found by following each arc straight through
/// every crossing it meets.
pub fn component_count(pd: &PdCode) -> Result<usize> {
    pd.validate()?;
    let arcs = 2 * pd.len();
    let mut parent: Vec<usize> = (0..=arcs).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = arcs;
    for &[a, b, c, d] in &pd.crossings {
        for (u, v) in [(a, c), (b, d)] {
            let (ru, rv) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            if ru != rv {
                parent[ru] = rv;
                components -= 1;
            }
        }
    }
    Ok(components)
}

/// Components of the pretzel link `P(p,q,r)` by strand tracing.
pub fn pretzel_components(t: PretzelTriple) -> Result<usize> {
    if t.has_zero() {
        return Err(Error::DegenerateTangle(format!(
            "{t} has a twist region with no crossings"
        )));
    }
    component_count(&pretzel_diagram(&t.to_array())?)
}

pub fn is_knot(t: PretzelTriple) -> Result<bool> {
    Ok(pretzel_components(t)? == 1)
}

/// Component count from twist parities alone.
///
/// Only the parity of each region matters for connectivity, and a region
/// with no crossings behaves like an even one (two parallel vertical
/// strands), so this also covers diagrams the PD code cannot express.
pub fn region_components(twists: &[i64]) -> usize {
    let n = twists.len();
    if n == 0 {
        return 0;
    }
    // Endpoints per region: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right.
    let mut parent: Vec<usize> = (0..4 * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut union = |a: usize, b: usize| {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            true
        } else {
            false
        }
    };
    let mut merges = 0;
    for (i, t) in twists.iter().enumerate() {
        let base = 4 * i;
        let next = 4 * ((i + 1) % n);
        let pairs = if t.is_odd() {
            [(base, base + 3), (base + 1, base + 2)]
        } else {
            [(base, base + 2), (base + 1, base + 3)]
        };
        for (a, b) in pairs
            .into_iter()
            .chain([(base + 1, next), (base + 3, next + 2)])
        {
            if union(a, b) {
                merges += 1;
            }
        }
    }
    4 * n - merges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity_rule(t: [i64; 3]) -> bool {
        let evens = t.iter().filter(|x| x.is_even()).count();
        evens <= 1
    }

    #[test]
    fn diagram_sizes() {
        for (twists, n) in [
            (vec![1, 1, 1], 3),
            (vec![-2, 3, 3], 8),
            (vec![-2, 3, 5], 10),
        ] {
            let pd = pretzel_diagram(&twists).unwrap();
            assert_eq!(pd.len(), n);
            pd.validate().unwrap();
        }
        assert!(matches!(
            pretzel_diagram(&[2, 0, 3]),
            Err(Error::DegenerateDiagram(_))
        ));
        assert!(matches!(
            pretzel_diagram(&[]),
            Err(Error::DegenerateDiagram(_))
        ));
    }

    #[test]
    fn trefoil_pd_is_standard_shape() {
        // Three positive half twists read as P(1,1,1). Shifting every label
        // by one (mod 6) gives the textbook [[1,5,2,4],[3,1,4,6],[5,3,6,2]].
        let pd = pretzel_diagram(&[1, 1, 1]).unwrap();
        assert_eq!(pd.to_json(), "[[6,4,1,3],[4,2,5,1],[2,6,3,5]]");
        assert_eq!(component_count(&pd).unwrap(), 1);
    }

    #[test]
    fn counts() {
        let count = |t: &[i64]| component_count(&pretzel_diagram(t).unwrap()).unwrap();
        assert_eq!(count(&[-2, 3, 3]), 1);
        assert_eq!(count(&[-2, 3, 5]), 1);
        assert_eq!(count(&[2, 2, 2]), 3);
        assert_eq!(count(&[2, 4, 5]), 2);
        assert_eq!(count(&[2, 4, 6]), 3);
        // A single region closed on top and bottom is a twisted unknot.
        assert_eq!(count(&[3]), 1);
        assert_eq!(count(&[4]), 1);
    }

    #[test]
    fn knot_examples() {
        assert_eq!(is_knot(PretzelTriple::new(-2, 3, 3)), Ok(true));
        assert_eq!(is_knot(PretzelTriple::new(3, 5, 7)), Ok(true));
        assert_eq!(is_knot(PretzelTriple::new(2, 4, 5)), Ok(false));
        assert!(matches!(
            is_knot(PretzelTriple::new(0, 3, 5)),
            Err(Error::DegenerateTangle(_))
        ));
    }

    #[test]
    fn tracing_matches_parity_rule_exhaustively() {
        let range: Vec<i64> = (-9..=9).filter(|x| *x != 0).collect();
        for &p in &range {
            for &q in &range {
                for &r in &range {
                    let t = PretzelTriple::new(p, q, r);
                    let pd = pretzel_diagram(&t.to_array()).unwrap();
                    pd.validate().unwrap();
                    let traced = component_count(&pd).unwrap();
                    assert_eq!(traced == 1, parity_rule([p, q, r]), "{t}");
                    assert_eq!(traced, region_components(&[p, q, r]), "{t}");
                    let rev = component_count(&pretzel_diagram(&[r, q, p]).unwrap()).unwrap();
                    let neg = component_count(&pretzel_diagram(&[-p, -q, -r]).unwrap()).unwrap();
                    assert_eq!((rev, neg), (traced, traced), "{t}");
                }
            }
        }
    }

    #[test]
    fn crossingless_regions() {
        // P(0,q,r) is the connected sum T(2,q) # T(2,r).
        assert_eq!(region_components(&[0, 3, 5]), 1);
        assert_eq!(region_components(&[0, 3, 4]), 2);
        assert_eq!(region_components(&[0, 0, 3]), 2);
        assert_eq!(region_components(&[0, 0, 0]), 3);
    }

    #[test]
    fn malformed_pd_is_rejected() {
        let bad = PdCode {
            crossings: vec![[1, 2, 3, 4], [1, 2, 3, 3]],
        };
        assert!(matches!(component_count(&bad), Err(Error::InvalidPd(_))));
        let out_of_range = PdCode {
            crossings: vec![[1, 1, 2, 5]],
        };
        assert!(matches!(out_of_range.validate(), Err(Error::InvalidPd(_))));
    }
}
