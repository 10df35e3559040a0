//! Brute-force computation of the combinatorial R matrix and energy by
//! building the full affine crystal graph of `B_l (x) B_k`.
//!
//! The image map is seeded at the anchor `(l,0,---,0) (x) (k,0,---,0)`,
//! whose image is forced (it is the unique element surviving `e_0^{l+k}`,
//! and for family A2 additionally `f_1^{l+k}`), and transported along all
//! crystal edges by the morphism property.  Energies propagate from a seed
//! value: along classical edges unchanged, along 0-edges by the defining
//! three-branch condition of the energy function.  Every revisit must agree
//! with the stored value; a conflict aborts, since it would falsify an
//! assumption rather than indicate bad input.

use std::collections::{HashMap, VecDeque};

use crate::element::{Family, OneRowElement};
use crate::error::Error;
use crate::rmatrix;

/// All elements of B_l, lexicographically ordered by their coordinate
/// vector `(x1, ..., xn, xbn, ..., xb1)`.
pub fn enumerate_b(family: Family, n: usize, l: usize) -> Vec<OneRowElement> {
    let mut sums = vec![l];
    if family == Family::C1 {
        let mut s = l;
        while s >= 2 {
            s -= 2;
            sums.push(s);
        }
    }
    let mut coords = Vec::new();
    let mut buf = vec![0u32; 2 * n];
    for &s in &sums {
        compositions(s, 0, &mut buf, &mut coords);
    }
    coords.sort();
    coords
        .into_iter()
        .map(|c| OneRowElement::from_coords(family, n, l, &c).expect("enumerated element"))
        .collect()
}

fn compositions(remaining: usize, slot: usize, buf: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slot == buf.len() - 1 {
        buf[slot] = remaining as u32;
        out.push(buf.clone());
        return;
    }
    for v in 0..=remaining {
        buf[slot] = v as u32;
        compositions(remaining - v, slot + 1, buf, out);
    }
}

/// How the energy table is seeded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnergySeed {
    /// C1: H(anchor) = min(l,k); A2: H(anchor) computed by Rule 5.1 once.
    Anchor,
    /// Seed H = 0 at the normalization element
    /// (C1: `(l,0,---,0) (x) (0,k,0,---,0)`; A2: `... (x) (0,---,0,k)`).
    Normalization,
}

/// Exhaustive R-matrix and energy tables for one `B_l (x) B_k`.
pub struct BruteForce {
    pub family: Family,
    pub n: usize,
    pub l: usize,
    pub k: usize,
    pub left: Vec<OneRowElement>,
    pub right: Vec<OneRowElement>,
    index_left: HashMap<OneRowElement, usize>,
    index_right: HashMap<OneRowElement, usize>,
    /// image[v] = (index into right-enumeration of B_k, index into B_l)
    image: Vec<(usize, usize)>,
    energy: Vec<i64>,
}

pub const DEFAULT_VERTEX_CAP: usize = 2_000_000;

impl BruteForce {
    pub fn build(
        family: Family,
        n: usize,
        l: usize,
        k: usize,
        seed: EnergySeed,
        vertex_cap: usize,
    ) -> Result<Self, Error> {
        let left = enumerate_b(family, n, l);
        let right = enumerate_b(family, n, k);
        let total = left.len() * right.len();
        if total > vertex_cap {
            return Err(Error::SizeCap(total, vertex_cap));
        }
        let index_left: HashMap<_, _> =
            left.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let index_right: HashMap<_, _> =
            right.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();

        let vertex = |i1: usize, i2: usize| i1 * right.len() + i2;

        // Transport the anchor image over the whole graph.
        let anchor = vertex(
            index_left[&OneRowElement::anchor(family, n, l)],
            index_right[&OneRowElement::anchor(family, n, k)],
        );
        let anchor_image = (
            index_right[&OneRowElement::anchor(family, n, k)],
            index_left[&OneRowElement::anchor(family, n, l)],
        );

        let mut image: Vec<Option<(usize, usize)>> = vec![None; total];
        image[anchor] = Some(anchor_image);
        let mut queue = VecDeque::from([anchor]);
        let mut visited = 1usize;
        while let Some(v) = queue.pop_front() {
            let (i1, i2) = (v / right.len(), v % right.len());
            let (j1, j2) = image[v].unwrap();
            for i in 0..=n {
                for dir in [Direction::Raise, Direction::Lower] {
                    let stepped = step_pair(&left[i1], &right[i2], i, dir);
                    let Some((a, b)) = stepped else { continue };
                    let w = vertex(index_left[&a], index_right[&b]);
                    let img = step_pair(&right[j1], &left[j2], i, dir).unwrap_or_else(|| {
                        panic!(
                            "image of an edge vanished: {} (x) {} at i = {i}",
                            right[j1], left[j2]
                        )
                    });
                    let img = (index_right[&img.0], index_left[&img.1]);
                    match image[w] {
                        None => {
                            image[w] = Some(img);
                            visited += 1;
                            queue.push_back(w);
                        }
                        Some(existing) => assert_eq!(
                            existing, img,
                            "inconsistent image transport at vertex {w}"
                        ),
                    }
                }
            }
        }
        assert_eq!(visited, total, "tensor crystal graph is not connected");
        let image: Vec<(usize, usize)> = image.into_iter().map(Option::unwrap).collect();

        // Energy: seed, then propagate.
        let seed_vertex;
        let seed_value;
        match seed {
            EnergySeed::Anchor => {
                seed_vertex = anchor;
                seed_value = match family {
                    Family::C1 => l.min(k) as i64,
                    Family::A2 => {
                        let a1 = OneRowElement::anchor(family, n, l);
                        let a2 = OneRowElement::anchor(family, n, k);
                        rmatrix::rmap(&a1, &a2, false)?.energy
                    }
                };
            }
            EnergySeed::Normalization => {
                let b1 = OneRowElement::anchor(family, n, l);
                let mut x = vec![0u32; n];
                let mut xbar = vec![0u32; n];
                match family {
                    Family::C1 => x[1] = k as u32,
                    Family::A2 => xbar[0] = k as u32,
                }
                let b2 = OneRowElement::new(family, n, k, x, xbar)?;
                seed_vertex = vertex(index_left[&b1], index_right[&b2]);
                seed_value = 0;
            }
        }

        let mut energy: Vec<Option<i64>> = vec![None; total];
        energy[seed_vertex] = Some(seed_value);
        let mut queue = VecDeque::from([seed_vertex]);
        while let Some(v) = queue.pop_front() {
            let (i1, i2) = (v / right.len(), v % right.len());
            let h = energy[v].unwrap();
            for i in 0..=n {
                // e_i edge from v: H(e_i (b (x) b')) = H + delta(v)
                if let Some((a, b)) = step_pair(&left[i1], &right[i2], i, Direction::Raise) {
                    let w = vertex(index_left[&a], index_right[&b]);
                    let hw = h + energy_delta(i, &left[i1], &right[i2], &right[image[v].0], &left[image[v].1]);
                    match energy[w] {
                        None => {
                            energy[w] = Some(hw);
                            queue.push_back(w);
                        }
                        Some(existing) => {
                            assert_eq!(existing, hw, "inconsistent energy propagation")
                        }
                    }
                }
                // f_i edge: v = e_i(w), so H(v) = H(w) + delta(w)
                if let Some((a, b)) = step_pair(&left[i1], &right[i2], i, Direction::Lower) {
                    let w = vertex(index_left[&a], index_right[&b]);
                    let hw = h - energy_delta(i, &a, &b, &right[image[w].0], &left[image[w].1]);
                    match energy[w] {
                        None => {
                            energy[w] = Some(hw);
                            queue.push_back(w);
                        }
                        Some(existing) => {
                            assert_eq!(existing, hw, "inconsistent energy propagation")
                        }
                    }
                }
            }
        }
        let energy: Vec<i64> = energy.into_iter().map(Option::unwrap).collect();

        Ok(BruteForce { family, n, l, k, left, right, index_left, index_right, image, energy })
    }

    pub fn lookup(&self, b1: &OneRowElement, b2: &OneRowElement) -> (&OneRowElement, &OneRowElement, i64) {
        let v = self.index_left[b1] * self.right.len() + self.index_right[b2];
        let (j1, j2) = self.image[v];
        (&self.right[j1], &self.left[j2], self.energy[v])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&OneRowElement, &OneRowElement)> {
        self.left.iter().flat_map(move |b1| self.right.iter().map(move |b2| (b1, b2)))
    }

    /// Checks the defining three-branch condition of the energy function on
    /// every 0-edge of the table.
    pub fn verify_energy_axiom(&self) -> bool {
        for (b1, b2) in self.pairs() {
            let v = self.index_left[b1] * self.right.len() + self.index_right[b2];
            if let Some((a, b)) = step_pair(b1, b2, 0, Direction::Raise) {
                let w = self.index_left[&a] * self.right.len() + self.index_right[&b];
                let delta =
                    energy_delta(0, b1, b2, &self.right[self.image[v].0], &self.left[self.image[v].1]);
                if self.energy[w] != self.energy[v] + delta {
                    return false;
                }
            }
        }
        true
    }

    /// Line-oriented dump of the crystal graph with image and energy data.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (b1, b2) in self.pairs() {
            let (c2, c1, h) = self.lookup(b1, b2);
            out.push_str(&format!("vertex {b1} (x) {b2} -> {c2} (x) {c1} H={h}\n"));
        }
        for (b1, b2) in self.pairs() {
            for i in 0..=self.n {
                if let Some((a, b)) = step_pair(b1, b2, i, Direction::Lower) {
                    out.push_str(&format!("edge f{i} {b1} (x) {b2} -> {a} (x) {b}\n"));
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    Raise,
    Lower,
}

/// Applies e_i or f_i to a two-factor tensor element, by the signed rule.
fn step_pair(
    b1: &OneRowElement,
    b2: &OneRowElement,
    i: usize,
    dir: Direction,
) -> Option<(OneRowElement, OneRowElement)> {
    let (phi_left, eps_right) = (b1.phi(i), b2.eps(i));
    match dir {
        Direction::Raise => {
            if phi_left >= eps_right {
                Some((b1.apply_e(i)?, b2.clone()))
            } else {
                Some((b1.clone(), b2.apply_e(i)?))
            }
        }
        Direction::Lower => {
            if phi_left > eps_right {
                Some((b1.apply_f(i)?, b2.clone()))
            } else {
                Some((b1.clone(), b2.apply_f(i)?))
            }
        }
    }
}

/// The change of H along the e_i edge out of `b1 (x) b2`, whose image is
/// `c2 (x) c1`: +1 or -1 in the two 0-branches, 0 otherwise.
fn energy_delta(
    i: usize,
    b1: &OneRowElement,
    b2: &OneRowElement,
    c2: &OneRowElement,
    c1: &OneRowElement,
) -> i64 {
    if i != 0 {
        return 0;
    }
    let first = b1.phi(0) >= b2.eps(0);
    let second = c2.phi(0) >= c1.eps(0);
    match (first, second) {
        (true, true) => 1,
        (false, false) => -1,
        _ => 0,
    }
}
