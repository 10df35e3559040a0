//! Two-row semistandard tableaux, the column insertion algorithm and its
//! reverse bumping, together with word/element conversions.
//!
//! Column insertion inserts a letter into the leftmost column and cascades
//! bumped letters rightward until a non-bumping case terminates.  Reverse
//! bumping removes an outer corner and cascades its letter leftward, finally
//! ejecting a letter from column 1.  The case analysis is checked: a
//! configuration not covered by any case is an `InsertionUndefined` error,
//! and in debug builds the dispatch asserts that exactly one case matches.

use std::fmt;

use crate::element::{Family, OneRowElement};
use crate::error::Error;
use crate::letter::{is_pair, word_to_string, Letter};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoRowTableau {
    row1: Vec<Letter>,
    row2: Vec<Letter>,
}

impl TwoRowTableau {
    pub fn empty() -> Self {
        TwoRowTableau { row1: Vec::new(), row2: Vec::new() }
    }

    pub fn from_row(row: &[Letter]) -> Self {
        TwoRowTableau { row1: row.to_vec(), row2: Vec::new() }
    }

    pub fn new(row1: Vec<Letter>, row2: Vec<Letter>) -> Result<Self, Error> {
        let t = TwoRowTableau { row1, row2 };
        if !t.is_semistandard() {
            return Err(Error::InvalidElement(format!("not semistandard: {t}")));
        }
        Ok(t)
    }

    pub fn row1(&self) -> &[Letter] {
        &self.row1
    }

    pub fn row2(&self) -> &[Letter] {
        &self.row2
    }

    pub fn cells(&self) -> usize {
        self.row1.len() + self.row2.len()
    }

    pub fn is_one_row(&self) -> bool {
        self.row2.is_empty()
    }

    pub fn is_semistandard(&self) -> bool {
        if self.row2.len() > self.row1.len() {
            return false;
        }
        let rows_weak = |r: &[Letter]| r.windows(2).all(|w| w[0] <= w[1]);
        if !rows_weak(&self.row1) || !rows_weak(&self.row2) {
            return false;
        }
        self.row2.iter().zip(&self.row1).all(|(below, above)| above < below)
    }

    /// Japanese reading word: columns right to left, top to bottom.
    pub fn reading_word(&self) -> Vec<Letter> {
        let mut word = Vec::with_capacity(self.cells());
        for j in (0..self.row1.len()).rev() {
            word.push(self.row1[j]);
            if j < self.row2.len() {
                word.push(self.row2[j]);
            }
        }
        word
    }
}

impl fmt::Display for TwoRowTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", word_to_string(&self.row1))?;
        if !self.row2.is_empty() {
            write!(f, " / {}", word_to_string(&self.row2))?;
        }
        write!(f, "]")
    }
}

/// One column of a two-row tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Column {
    One(Letter),
    Two(Letter, Letter),
}

/// Result of inserting into a single column: the new column, and the letter
/// bumped into the next column (`None` for the terminating cases).
pub fn column_step(col: Column, incoming: Letter, n: u32) -> Result<(Column, Option<Letter>), Error> {
    let c = incoming;
    match col {
        Column::One(v) => {
            if c <= v {
                // case 1b
                Ok((Column::One(c), Some(v)))
            } else {
                // case 2a
                Ok((Column::Two(v, c), None))
            }
        }
        Column::Two(top, bot) => {
            let p2b = top < c && c <= bot && !is_pair(top, bot);
            let p3b = c <= top && !is_pair(c, bot);
            let p4b = is_pair(top, bot) && top <= c && c <= bot;
            let p5b = !c.barred && bot == c.flipped() && c < top && top < bot;
            debug_assert!(
                [p2b, p3b, p4b, p5b].iter().filter(|&&p| p).count() <= 1,
                "overlapping insertion cases for {c} into ({top}/{bot})"
            );
            if p2b {
                Ok((Column::Two(top, c), Some(bot)))
            } else if p3b {
                Ok((Column::Two(c, bot), Some(top)))
            } else if p4b {
                let x = top.value;
                if x == 0 {
                    return Err(Error::InsertionUndefined(format!(
                        "case 4b with x = 0: {c} into ({top}/{bot})"
                    )));
                }
                Ok((Column::Two(Letter::plain(x - 1), c), Some(Letter::bar(x - 1))))
            } else if p5b {
                let x = c.value;
                if x == n {
                    return Err(Error::InsertionUndefined(format!(
                        "case 5b with x = n: {c} into ({top}/{bot})"
                    )));
                }
                Ok((Column::Two(Letter::plain(x + 1), Letter::bar(x + 1)), Some(top)))
            } else {
                Err(Error::InsertionUndefined(format!("no case for {c} into ({top}/{bot})")))
            }
        }
    }
}

/// Left inverse of `column_step`: pushes the letter that was bumped out of
/// this column back in from the right; returns the restored column and the
/// letter ejected leftward.
pub fn reverse_column_step(col: Column, incoming: Letter, n: u32) -> Result<(Column, Letter), Error> {
    let u = incoming;
    match col {
        Column::One(v) => {
            // case 1c
            if v <= u {
                Ok((Column::One(u), v))
            } else {
                Err(Error::InsertionUndefined(format!("no reverse case for {u} into ({v})")))
            }
        }
        Column::Two(top, bot) => {
            let p2c = top < bot && bot <= u && !is_pair(top, u);
            let p3c = top <= u && u < bot && !is_pair(top, bot);
            let p4c = !top.barred && u == top.flipped() && top < bot && bot < u;
            let p5c = is_pair(top, bot) && top <= u && u <= bot;
            debug_assert!(
                [p2c, p3c, p4c, p5c].iter().filter(|&&p| p).count() <= 1,
                "overlapping reverse cases for {u} into ({top}/{bot})"
            );
            if p2c {
                Ok((Column::Two(top, u), bot))
            } else if p3c {
                Ok((Column::Two(u, bot), top))
            } else if p4c {
                let x = top.value;
                if x == n {
                    return Err(Error::InsertionUndefined(format!(
                        "case 4c with x = n: {u} into ({top}/{bot})"
                    )));
                }
                Ok((Column::Two(Letter::plain(x + 1), Letter::bar(x + 1)), bot))
            } else if p5c {
                let x = top.value;
                if x == 0 {
                    return Err(Error::InsertionUndefined(format!(
                        "case 5c with x = 0: {u} into ({top}/{bot})"
                    )));
                }
                Ok((Column::Two(u, Letter::bar(x - 1)), Letter::plain(x - 1)))
            } else {
                Err(Error::InsertionUndefined(format!(
                    "no reverse case for {u} into ({top}/{bot})"
                )))
            }
        }
    }
}

/// Column insertion of a letter, cascading bumps rightward.
pub fn insert_letter(t: &TwoRowTableau, letter: Letter, n: u32) -> Result<TwoRowTableau, Error> {
    let mut row1 = t.row1.clone();
    let mut row2 = t.row2.clone();
    let mut carry = letter;
    let mut j = 0usize;
    loop {
        if j == row1.len() {
            // case 1a
            row1.push(carry);
            break;
        }
        let col = if j < row2.len() {
            Column::Two(row1[j], row2[j])
        } else {
            Column::One(row1[j])
        };
        let (new_col, bumped) = column_step(col, carry, n)?;
        match new_col {
            Column::One(a) => row1[j] = a,
            Column::Two(a, b) => {
                row1[j] = a;
                if j < row2.len() {
                    row2[j] = b;
                } else {
                    if j != row2.len() {
                        return Err(Error::InsertionUndefined(format!(
                            "case 2a would leave a gap in row 2 at column {}",
                            j + 1
                        )));
                    }
                    row2.push(b);
                }
            }
        }
        match bumped {
            Some(b) => {
                carry = b;
                j += 1;
            }
            None => break,
        }
    }
    let out = TwoRowTableau { row1, row2 };
    if !out.is_semistandard() {
        return Err(Error::InsertionUndefined(format!(
            "insertion of {letter} into {t} produced non-semistandard {out}"
        )));
    }
    Ok(out)
}

/// Inserts the letters of the one-row word `src` into `dst`, rightmost
/// letter first; `(T -> empty) = T`.
pub fn insert_word(src: &[Letter], dst: &TwoRowTableau, n: u32) -> Result<TwoRowTableau, Error> {
    let mut acc = dst.clone();
    for &letter in src.iter().rev() {
        acc = insert_letter(&acc, letter, n)?;
    }
    Ok(acc)
}

/// Removes the outer corner at `(row, col)` (1-based) and cascades its
/// letter leftward; returns the reduced tableau and the ejected letter.
pub fn reverse_bump(
    t: &TwoRowTableau,
    row: usize,
    col: usize,
    n: u32,
) -> Result<(TwoRowTableau, Letter), Error> {
    let mut row1 = t.row1.clone();
    let mut row2 = t.row2.clone();
    let corner = match row {
        1 => col == row1.len() && col > row2.len() && col >= 1,
        2 => col == row2.len() && col >= 1,
        _ => false,
    };
    if !corner {
        return Err(Error::NotACorner { row, col });
    }
    let mut carry = if row == 1 { row1.pop().unwrap() } else { row2.pop().unwrap() };
    for j in (0..col - 1).rev() {
        let c = if j < row2.len() {
            Column::Two(row1[j], row2[j])
        } else {
            Column::One(row1[j])
        };
        let (new_col, ejected) = reverse_column_step(c, carry, n)?;
        match new_col {
            Column::One(a) => row1[j] = a,
            Column::Two(a, b) => {
                row1[j] = a;
                row2[j] = b;
            }
        }
        carry = ejected;
    }
    let out = TwoRowTableau { row1, row2 };
    debug_assert!(out.is_semistandard(), "reverse bump broke {t} -> {out}");
    Ok((out, carry))
}

/// Ejected letters of a reverse-bumping run, with optional snapshots
/// `T^(0), ..., T^(l')`.
#[derive(Clone, Debug)]
pub struct BumpTrace {
    pub ejected: Vec<Letter>,
    pub snapshots: Option<Vec<TwoRowTableau>>,
}

/// One-row tableau word of an element: for family C1 the word carries the
/// x0 letters 0 up front and x0 letters 0b at the end.
pub fn to_tableau(b: &OneRowElement) -> Vec<Letter> {
    let n = b.rank();
    let mut word = Vec::with_capacity(b.capacity());
    let zeros = b.zero_pairs();
    word.extend(std::iter::repeat(Letter::plain(0)).take(zeros));
    for i in 1..=n {
        word.extend(std::iter::repeat(Letter::plain(i as u32)).take(b.x(i) as usize));
    }
    for i in (1..=n).rev() {
        word.extend(std::iter::repeat(Letter::bar(i as u32)).take(b.xbar(i) as usize));
    }
    word.extend(std::iter::repeat(Letter::bar(0)).take(zeros));
    word
}

/// Inverse of `to_tableau`.
pub fn from_word(
    word: &[Letter],
    family: Family,
    n: usize,
    l: usize,
) -> Result<OneRowElement, Error> {
    if word.len() != l {
        return Err(Error::WordParse(format!(
            "word length {} does not match capacity {l}",
            word.len()
        )));
    }
    if word.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::WordParse("word is not weakly increasing".into()));
    }
    let mut x = vec![0u32; n];
    let mut xbar = vec![0u32; n];
    let mut zeros = 0usize;
    let mut zero_bars = 0usize;
    for &letter in word {
        if letter.value as usize > n {
            return Err(Error::WordParse(format!("letter {letter} exceeds rank {n}")));
        }
        match (letter.value, letter.barred) {
            (0, false) => zeros += 1,
            (0, true) => zero_bars += 1,
            (v, false) => x[v as usize - 1] += 1,
            (v, true) => xbar[v as usize - 1] += 1,
        }
    }
    match family {
        Family::A2 => {
            if zeros + zero_bars > 0 {
                return Err(Error::WordParse("family a2 admits no letter 0 or 0b".into()));
            }
        }
        Family::C1 => {
            if zeros != zero_bars {
                return Err(Error::WordParse(format!(
                    "unbalanced zero pair: {zeros} letters 0 vs {zero_bars} letters 0b"
                )));
            }
        }
    }
    OneRowElement::new(family, n, l, x, xbar)
}

/// The embedding shift: i -> i+1 and ib -> (i+1)b.
pub fn sigma_embed(word: &[Letter]) -> Vec<Letter> {
    word.iter()
        .map(|l| Letter { value: l.value + 1, barred: l.barred })
        .collect()
}
