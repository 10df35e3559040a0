//! The combinatorial R matrix and energy function for both families via
//! the column-insertion rule, plus closed-form images of highest elements.
//!
//! Energy normalization is baked in: for family C1,
//! `H((l,0,---,0) (x) (0,k,0,---,0)) = 0`; for family A2,
//! `H((l,0,---,0) (x) (0,---,0,k)) = 0`.

use crate::element::{Family, OneRowElement};
use crate::error::Error;
use crate::letter::Letter;
use crate::tableau::{from_word, insert_word, reverse_bump, to_tableau, TwoRowTableau};

/// Diagnostic record of one R-matrix evaluation.
#[derive(Clone, Debug)]
pub struct RTrace {
    /// Number of stripped (0,0b) pairs (C1) or stripped 1/1b letters (A2).
    pub z: usize,
    pub l_prime: usize,
    pub k_prime: usize,
    /// Second-row length of the insertion product.
    pub m: usize,
    /// The insertion product before reverse bumping.
    pub insertion: TwoRowTableau,
    /// The letters w_1 <= ... <= w_{l'} ejected by reverse bumping.
    pub bumped: Vec<Letter>,
    /// Tableaux T^(0), ..., T^(l'), retained only on request.
    pub snapshots: Option<Vec<TwoRowTableau>>,
}

#[derive(Clone, Debug)]
pub struct RMatrixResult {
    /// b'_2, the left factor of the image, in B_k.
    pub image_left: OneRowElement,
    /// b'_1, the right factor of the image, in B_l.
    pub image_right: OneRowElement,
    pub energy: i64,
    pub trace: RTrace,
}

/// Applies the combinatorial R matrix `B_l (x) B_k -> B_k (x) B_l`,
/// dispatching on the family of the inputs.
pub fn rmap(
    b1: &OneRowElement,
    b2: &OneRowElement,
    snapshots: bool,
) -> Result<RMatrixResult, Error> {
    if b1.family() != b2.family() {
        return Err(Error::FamilyMismatch);
    }
    if b1.rank() != b2.rank() {
        return Err(Error::RankMismatch);
    }
    match b1.family() {
        Family::C1 => rmap_c(b1, b2, snapshots),
        Family::A2 => rmap_a(b1, b2, snapshots),
    }
}

/// Shared core: insert the stripped word of b2 into the stripped word of
/// b1, reverse-bump `l'` letters, and return the final one-row tableau,
/// the ejected word and the trace data.
fn insert_and_unbump(
    w1: Vec<Letter>,
    w2: Vec<Letter>,
    n: u32,
    snapshots: bool,
) -> Result<(Vec<Letter>, Vec<Letter>, TwoRowTableau, usize, Option<Vec<TwoRowTableau>>), Error> {
    let l_prime = w1.len();
    let k_prime = w2.len();
    let product = insert_word(&w2, &TwoRowTableau::from_row(&w1), n)?;
    let m = product.row2().len();
    if m > l_prime || m > k_prime {
        return Err(Error::InsertionUndefined(format!(
            "insertion product {product} has second row longer than min(l', k')"
        )));
    }
    let mut snaps = snapshots.then(|| vec![product.clone()]);
    let mut current = product.clone();
    let mut ejected = Vec::with_capacity(l_prime);
    for _ in 0..l_prime - m {
        let col = current.row1().len();
        let (next, w) = reverse_bump(&current, 1, col, n)?;
        ejected.push(w);
        if let Some(s) = snaps.as_mut() {
            s.push(next.clone());
        }
        current = next;
    }
    for _ in 0..m {
        let col = current.row2().len();
        let (next, w) = reverse_bump(&current, 2, col, n)?;
        ejected.push(w);
        if let Some(s) = snaps.as_mut() {
            s.push(next.clone());
        }
        current = next;
    }
    if !current.is_one_row() || current.row1().len() != k_prime {
        return Err(Error::InsertionUndefined(format!(
            "reverse bumping left {current}, expected one row of length {k_prime}"
        )));
    }
    if ejected.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InsertionUndefined(
            "ejected letters are not weakly increasing".into(),
        ));
    }
    Ok((current.row1().to_vec(), ejected, product, m, snaps))
}

fn rmap_c(
    b1: &OneRowElement,
    b2: &OneRowElement,
    snapshots: bool,
) -> Result<RMatrixResult, Error> {
    let n = b1.rank();
    let (l, k) = (b1.capacity(), b2.capacity());
    let z = b1.zero_pairs().min(b2.zero_pairs());

    let strip = |b: &OneRowElement| {
        let word = to_tableau(b);
        word[z..word.len() - z].to_vec()
    };
    let w1 = strip(b1);
    let w2 = strip(b2);
    let (l_prime, k_prime) = (w1.len(), w2.len());

    let (t_final, ejected, product, m, snaps) = insert_and_unbump(w1, w2, n as u32, snapshots)?;

    let pad = |core: &[Letter]| {
        let mut word = Vec::with_capacity(core.len() + 2 * z);
        word.extend(std::iter::repeat(Letter::plain(0)).take(z));
        word.extend_from_slice(core);
        word.extend(std::iter::repeat(Letter::bar(0)).take(z));
        word
    };
    let image_left = from_word(&pad(&t_final), Family::C1, n, k)?;
    let image_right = from_word(&pad(&ejected), Family::C1, n, l)?;
    let energy = l_prime.min(k_prime) as i64 - m as i64;

    Ok(RMatrixResult {
        image_left,
        image_right,
        energy,
        trace: RTrace { z, l_prime, k_prime, m, insertion: product, bumped: ejected, snapshots: snaps },
    })
}

fn rmap_a(
    b1: &OneRowElement,
    b2: &OneRowElement,
    snapshots: bool,
) -> Result<RMatrixResult, Error> {
    let n = b1.rank();
    let (l, k) = (b1.capacity(), b2.capacity());
    let z = (b1.x(1) as usize).min(b2.xbar(1) as usize);

    // strip z letters 1 from the front of T(b1) and z letters 1b from the
    // end of T(b2)
    let w1 = {
        let word = to_tableau(b1);
        word[z..].to_vec()
    };
    let w2 = {
        let word = to_tableau(b2);
        word[..word.len() - z].to_vec()
    };
    let (l_prime, k_prime) = (w1.len(), w2.len());

    let (t_final, ejected, product, m, snaps) = insert_and_unbump(w1, w2, n as u32, snapshots)?;

    let mut left_word = Vec::with_capacity(k);
    left_word.extend(std::iter::repeat(Letter::plain(1)).take(z));
    left_word.extend_from_slice(&t_final);
    let mut right_word = Vec::with_capacity(l);
    right_word.extend_from_slice(&ejected);
    right_word.extend(std::iter::repeat(Letter::bar(1)).take(z));

    let image_left = from_word(&left_word, Family::A2, n, k)?;
    let image_right = from_word(&right_word, Family::A2, n, l)?;
    let energy = 2 * l_prime.min(k_prime) as i64 - m as i64;

    Ok(RMatrixResult {
        image_left,
        image_right,
        energy,
        trace: RTrace { z, l_prime, k_prime, m, insertion: product, bumped: ejected, snapshots: snaps },
    })
}

/// Classification of a highest element handled by the closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HighestKind {
    TypeI,
    /// l - k > y0 >= x1 - xb1
    TypeIIFirst,
    /// l - k <= y0 or y0 < x1 - xb1
    TypeIISecond,
}

#[derive(Clone, Debug)]
pub struct HighestImage {
    pub image_left: OneRowElement,
    pub image_right: OneRowElement,
    pub energy: i64,
    pub kind: HighestKind,
}

/// Closed-form image and energy for C_n-highest elements of
/// `B_l (x) B_k` (l >= k) whose left or right tableau is free of 0's.
/// No insertion is performed; this exists as a redundant oracle.
pub fn highest_image_c(
    b1: &OneRowElement,
    b2: &OneRowElement,
) -> Result<HighestImage, Error> {
    if b1.family() != Family::C1 || b2.family() != Family::C1 {
        return Err(Error::FamilyMismatch);
    }
    if b1.rank() != b2.rank() {
        return Err(Error::RankMismatch);
    }
    let n = b1.rank();
    let (l, k) = (b1.capacity(), b2.capacity());
    if l < k {
        return Err(Error::CapacityOrder { l, k });
    }

    // b1 must be (l - 2*y0, 0, ---, 0)
    let y0 = b1.zero_pairs();
    let b1_ok = (2..=n).all(|i| b1.x(i) == 0) && (1..=n).all(|i| b1.xbar(i) == 0);
    // b2 must be (x1, x2, ---, xb1)
    let b2_ok = (3..=n).all(|i| b2.x(i) == 0) && (2..=n).all(|i| b2.xbar(i) == 0);
    if !b1_ok || !b2_ok {
        return Err(Error::NotHighest(format!("{b1} (x) {b2} is not of the classified shape")));
    }
    let x1 = b2.x(1) as i64;
    let x2 = b2.x(2) as i64;
    let xb1 = b2.xbar(1) as i64;
    let x0 = b2.zero_pairs() as i64;
    // tensor highest condition: phi_1(b1) >= eps_1(b2)
    if (l as i64 - 2 * y0 as i64) < x2 + xb1 {
        return Err(Error::NotHighest(format!("{b1} (x) {b2} is not C_n highest")));
    }

    let (l, k) = (l as i64, k as i64);
    let y0 = y0 as i64;
    let elem = |cap: i64, x1: i64, x2: i64, xb1: i64| -> Result<OneRowElement, Error> {
        let mut x = vec![0u32; n];
        let mut xbar = vec![0u32; n];
        x[0] = u32::try_from(x1)
            .map_err(|_| Error::NotHighest("negative coordinate in closed form".into()))?;
        x[1] = x2 as u32;
        xbar[0] = u32::try_from(xb1)
            .map_err(|_| Error::NotHighest("negative coordinate in closed form".into()))?;
        OneRowElement::new(Family::C1, n, cap as usize, x, xbar)
    };

    if y0 == 0 {
        // type I: (l,0,---,0) (x) (x1,x2,---,xb1), y = min[l-k, (xb1-x1)_+]
        let y = (l - k).min((xb1 - x1).max(0));
        let image_left = OneRowElement::anchor(Family::C1, n, k as usize);
        let image_right = elem(l, x1 + l - k - y, x2, xb1 - y)?;
        let energy = x0 + (x1 - xb1).max(0);
        return Ok(HighestImage { image_left, image_right, energy, kind: HighestKind::TypeI });
    }
    if x0 != 0 {
        return Err(Error::NotHighest(
            "both factors carry (0,0b) pairs; reduce by tau first".into(),
        ));
    }
    // type II: (l-2y0,0,---,0) (x) (x1,x2,---,k-x1-x2)
    if l - k > y0 && y0 >= x1 - xb1 {
        let z = (y0 + xb1 - x1).min(l - k - y0);
        let image_left = OneRowElement::anchor(Family::C1, n, k as usize);
        let image_right = elem(l, x1 + l - k - y0 - z, x2, xb1 + y0 - z)?;
        Ok(HighestImage { image_left, image_right, energy: 0, kind: HighestKind::TypeIIFirst })
    } else {
        let w = (l - k).min((2 * y0 - x1 + xb1).max(0));
        let image_left = elem(k, k - 2 * y0 + 2 * w, 0, 0)?;
        let image_right = elem(l, x1 + l - k - w, x2, xb1 + w)?;
        let energy = (y0 - l + k).max(x1 - xb1 - y0);
        Ok(HighestImage { image_left, image_right, energy, kind: HighestKind::TypeIISecond })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::{word_from_str, word_to_string};

    fn parse(family: Family, n: usize, word: &str) -> OneRowElement {
        let w = word_from_str(word).unwrap();
        let l = w.len();
        from_word(&w, family, n, l).unwrap()
    }

    fn word_of(b: &OneRowElement) -> String {
        word_to_string(&to_tableau(b))
    }

    #[test]
    fn scattering_example_c() {
        // 123 (x) 2b1b -> 23 (x) 0 2b 0b
        let b1 = parse(Family::C1, 3, "1 2 3");
        let b2 = parse(Family::C1, 3, "2b 1b");
        let res = rmap(&b1, &b2, false).unwrap();
        assert_eq!(word_of(&res.image_left), "2 3");
        assert_eq!(word_of(&res.image_right), "0 2b 0b");
    }

    #[test]
    fn scattering_example_a() {
        // 123 (x) 2b1b -> 13 (x) 1 1b 1b
        let b1 = parse(Family::A2, 3, "1 2 3");
        let b2 = parse(Family::A2, 3, "2b 1b");
        let res = rmap(&b1, &b2, false).unwrap();
        assert_eq!(word_of(&res.image_left), "1 3");
        assert_eq!(word_of(&res.image_right), "1 1b 1b");
    }

    #[test]
    fn worked_example_b9_b7() {
        let b1 = OneRowElement::from_coords(
            Family::C1,
            4,
            9,
            &[2, 0, 1, 1, 0, 1, 1, 1],
        )
        .unwrap();
        let b2 = OneRowElement::from_coords(
            Family::C1,
            4,
            7,
            &[0, 0, 0, 0, 3, 0, 0, 2],
        )
        .unwrap();
        assert_eq!(word_of(&b2), "0 4b 4b 4b 1b 1b 0b");
        let res = rmap(&b1, &b2, true).unwrap();
        assert_eq!(res.trace.z, 1);
        assert_eq!(res.trace.l_prime, 7);
        assert_eq!(res.trace.k_prime, 5);
        assert_eq!(res.trace.m, 5);
        let product = &res.trace.insertion;
        assert_eq!(word_to_string(product.row1()), "0 0 3 4 3b 2b 1b");
        assert_eq!(word_to_string(product.row2()), "4b 4b 4b 0b 0b");
        assert_eq!(
            res.image_right,
            OneRowElement::from_coords(Family::C1, 4, 9, &[0, 0, 0, 0, 4, 0, 0, 1]).unwrap()
        );
        assert_eq!(
            res.image_left,
            OneRowElement::from_coords(Family::C1, 4, 7, &[1, 0, 0, 2, 0, 0, 1, 1]).unwrap()
        );
        assert_eq!(res.energy, 0);
        assert_eq!(res.trace.snapshots.as_ref().unwrap().len(), 8);
    }

    #[test]
    fn anchor_maps_to_swapped_anchor() {
        for family in [Family::C1, Family::A2] {
            for (l, k) in [(3, 2), (2, 3), (4, 4)] {
                let b1 = OneRowElement::anchor(family, 2, l);
                let b2 = OneRowElement::anchor(family, 2, k);
                let res = rmap(&b1, &b2, false).unwrap();
                assert_eq!(res.image_left, OneRowElement::anchor(family, 2, k));
                assert_eq!(res.image_right, OneRowElement::anchor(family, 2, l));
                let expected = match family {
                    Family::C1 => l.min(k) as i64,
                    Family::A2 => 2 * l.min(k) as i64,
                };
                assert_eq!(res.energy, expected);
            }
        }
    }

    #[test]
    fn normalization_elements_have_zero_energy() {
        for (l, k) in [(3, 2), (2, 3), (4, 4), (1, 4)] {
            let b1 = OneRowElement::anchor(Family::C1, 2, l);
            let mut x = vec![0u32; 2];
            x[1] = k as u32;
            let b2 = OneRowElement::new(Family::C1, 2, k, x, vec![0; 2]).unwrap();
            assert_eq!(rmap(&b1, &b2, false).unwrap().energy, 0);

            let b1 = OneRowElement::anchor(Family::A2, 2, l);
            let mut xbar = vec![0u32; 2];
            xbar[0] = k as u32;
            let b2 = OneRowElement::new(Family::A2, 2, k, vec![0; 2], xbar).unwrap();
            assert_eq!(rmap(&b1, &b2, false).unwrap().energy, 0);
        }
    }

    #[test]
    fn example_both_families() {
        // 1123 (x) 1 1b 1b under both readings
        let b1 = parse(Family::C1, 3, "1 1 2 3");
        let b2 = parse(Family::C1, 3, "1 1b 1b");
        let res = rmap(&b1, &b2, false).unwrap();
        assert_eq!(word_of(&res.image_left), "1 2 3");
        assert_eq!(word_of(&res.image_right), "0 1 1b 0b");
        assert_eq!(res.energy, 0);

        let b1 = parse(Family::A2, 3, "1 1 2 3");
        let b2 = parse(Family::A2, 3, "1 1b 1b");
        let res = rmap(&b1, &b2, false).unwrap();
        assert_eq!(word_of(&res.image_left), "1 1 3");
        assert_eq!(word_of(&res.image_right), "1 2 1b 1b");
        assert_eq!(res.energy, 2);
    }

    #[test]
    fn identity_on_equal_capacities_a2() {
        // R is the identity on B_l (x) B_l
        let elems = crate::oracle::enumerate_b(Family::A2, 2, 2);
        for b1 in &elems {
            for b2 in &elems {
                let res = rmap(b1, b2, false).unwrap();
                assert_eq!(&res.image_left, b1);
                assert_eq!(&res.image_right, b2);
            }
        }
    }

    #[test]
    fn mismatched_inputs_rejected() {
        let b1 = OneRowElement::anchor(Family::C1, 2, 2);
        let b2 = OneRowElement::anchor(Family::A2, 2, 2);
        assert!(matches!(rmap(&b1, &b2, false), Err(Error::FamilyMismatch)));
        let b3 = OneRowElement::anchor(Family::C1, 3, 2);
        assert!(matches!(rmap(&b1, &b3, false), Err(Error::RankMismatch)));
    }

    #[test]
    fn highest_image_type_i() {
        // l=4, k=3, b2=(0,1,---,2): y = min(1, 2) = 1,
        // image (3,0,---,0) (x) (0+1,1,---,1) with H = x0 + (x1-xb1)_+ = 0
        let b1 = OneRowElement::anchor(Family::C1, 2, 4);
        let b2 = OneRowElement::from_coords(Family::C1, 2, 3, &[0, 1, 0, 2]).unwrap();
        let img = highest_image_c(&b1, &b2).unwrap();
        assert_eq!(img.kind, HighestKind::TypeI);
        assert_eq!(img.image_left, OneRowElement::anchor(Family::C1, 2, 3));
        assert_eq!(
            img.image_right,
            OneRowElement::from_coords(Family::C1, 2, 4, &[0, 1, 0, 1]).unwrap()
        );
        assert_eq!(img.energy, 0);
    }

    #[test]
    fn highest_image_rejects_non_highest() {
        let b1 = OneRowElement::anchor(Family::C1, 2, 2);
        let b2 = OneRowElement::from_coords(Family::C1, 2, 3, &[0, 2, 0, 1]).unwrap();
        // eps_1(b2) = 3 > phi_1(b1) = 2
        assert!(highest_image_c(&b1, &b2).is_err());
        // l < k rejected
        let b3 = OneRowElement::anchor(Family::C1, 2, 4);
        assert!(matches!(
            highest_image_c(&b1, &b3),
            Err(Error::CapacityOrder { .. })
        ));
    }
}
