//! Classically restricted one-dimensional sums X_{lambda,mu}(t) for the
//! C-family, built from the R matrix and energy function.
//!
//! A summand is a highest element b_1 (x) ... (x) b_L of
//! B_{mu_1} (x) ... (x) B_{mu_L} whose phi string lengths match
//! lambda_i - lambda_{i+1}; its weight is t to the sum of all pairwise
//! energies H(b_i (x) b_j^(i+1)), where b_j^(i) arises by carrying b_j
//! leftward with successive R applications, and the i = 0 term is fixed by
//! the convention H(b_0 (x) b_j^(1)) = -#(0 in the tableau of b_j^(1)).

use std::collections::{BTreeMap, HashMap};

use crate::element::{Family, OneRowElement, Partition, TensorElement};
use crate::error::Error;
use crate::laurent::LaurentPolynomial;
use crate::letter::Letter;
use crate::oracle::enumerate_b;
use crate::rmatrix::rmap;
use crate::tableau::{insert_word, to_tableau, TwoRowTableau};

/// True iff the tensor element is C_n-highest with phi_i = lambda_i -
/// lambda_{i+1} for every classical index.
pub fn highest_weight_filter(t: &TensorElement, lambda: &Partition) -> bool {
    if !t.is_cn_highest() {
        return false;
    }
    let n = t.rank();
    if lambda.len() > n {
        return false;
    }
    (1..=n).all(|i| t.phi(i) as usize == lambda.part(i) - lambda.part(i + 1))
}

type RCache = HashMap<(OneRowElement, OneRowElement), (OneRowElement, OneRowElement, i64)>;

fn cached_rmap(
    cache: &mut RCache,
    b1: &OneRowElement,
    b2: &OneRowElement,
) -> Result<(OneRowElement, OneRowElement, i64), Error> {
    let key = (b1.clone(), b2.clone());
    if let Some(hit) = cache.get(&key) {
        return Ok(hit.clone());
    }
    let res = rmap(b1, b2, false)?;
    let value = (res.image_left, res.image_right, res.energy);
    cache.insert(key, value.clone());
    Ok(value)
}

/// The total energy exponent of one summand.
fn energy_exponent(factors: &[OneRowElement], cache: &mut RCache) -> Result<i64, Error> {
    let mut total = 0i64;
    for j in 0..factors.len() {
        let mut carried = factors[j].clone();
        for i in (0..j).rev() {
            let (left, _, h) = cached_rmap(cache, &factors[i], &carried)?;
            total += h;
            carried = left;
        }
        // carried = b_j^(1); it must look like 0...0 1...1 0b...0b
        let n = carried.rank();
        let plain_form = (2..=n).all(|i| carried.x(i) == 0) && (1..=n).all(|i| carried.xbar(i) == 0);
        assert!(plain_form, "propagated factor {carried} is not of the form 0..0 1..1 0b..0b");
        total -= carried.zero_pairs() as i64;
    }
    Ok(total)
}

/// All C_n-highest elements of B_{mu_1} (x) ... (x) B_{mu_L}, found by a
/// depth-first search that prunes any prefix that is not itself highest
/// (the tensor eps fold is monotone, so such a prefix cannot recover).
fn highest_elements(mu: &Partition, n: usize) -> Vec<Vec<OneRowElement>> {
    let mut pools: HashMap<usize, Vec<OneRowElement>> = HashMap::new();
    for &l in mu.parts() {
        pools.entry(l).or_insert_with(|| enumerate_b(Family::C1, n, l));
    }
    let mut out = Vec::new();
    let mut prefix: Vec<OneRowElement> = Vec::new();
    // phis[i-1] = phi_i of the prefix, valid when the prefix is highest
    fn rec(
        mu: &Partition,
        n: usize,
        pools: &HashMap<usize, Vec<OneRowElement>>,
        prefix: &mut Vec<OneRowElement>,
        phis: &[u32],
        out: &mut Vec<Vec<OneRowElement>>,
    ) {
        let level = prefix.len();
        if level == mu.len() {
            out.push(prefix.clone());
            return;
        }
        for b in &pools[&mu.part(level + 1)] {
            let mut next_phis = Vec::with_capacity(n);
            let mut ok = true;
            for i in 1..=n {
                let (eps, phi) = b.eps_phi(i);
                if level == 0 {
                    if eps > 0 {
                        ok = false;
                        break;
                    }
                    next_phis.push(phi);
                } else {
                    if eps > phis[i - 1] {
                        ok = false;
                        break;
                    }
                    next_phis.push(phi + phis[i - 1] - eps);
                }
            }
            if !ok {
                continue;
            }
            prefix.push(b.clone());
            rec(mu, n, pools, prefix, &next_phis, out);
            prefix.pop();
        }
    }
    rec(mu, n, &pools, &mut prefix, &[], &mut out);
    out
}

/// Every X_{lambda,mu}(t) for a fixed mu at once, keyed by lambda.
pub fn one_d_sums(mu: &Partition, n: usize) -> Result<BTreeMap<Partition, LaurentPolynomial>, Error> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if mu.is_empty() {
        return Err(Error::OneDSum("mu must be a nonempty partition".into()));
    }
    let mut cache = RCache::new();
    let mut table: BTreeMap<Partition, LaurentPolynomial> = BTreeMap::new();
    for factors in highest_elements(mu, n) {
        let t = TensorElement::new(factors.clone())?;
        let mut parts = Vec::new();
        for i in 1..=n {
            let tail: u32 = (i..=n).map(|j| t.phi(j)).sum();
            if tail == 0 {
                break;
            }
            parts.push(tail as usize);
        }
        let lambda = Partition::new(parts).expect("phi tails are weakly decreasing");
        let exponent = energy_exponent(&factors, &mut cache)?;
        table
            .entry(lambda)
            .or_insert_with(LaurentPolynomial::zero)
            .add_term(1, exponent);
    }
    Ok(table)
}

/// The classically restricted 1dsum X_{lambda,mu}(t).
pub fn x_polynomial(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<LaurentPolynomial, Error> {
    if lambda.size() > mu.size() {
        return Err(Error::OneDSum(format!(
            "|lambda| = {} exceeds |mu| = {}",
            lambda.size(),
            mu.size()
        )));
    }
    if (mu.size() - lambda.size()) % 2 != 0 {
        return Err(Error::OneDSum(format!(
            "|lambda| = {} and |mu| = {} differ in parity",
            lambda.size(),
            mu.size()
        )));
    }
    if lambda.len() > n {
        return Err(Error::OneDSum(format!(
            "length of lambda {lambda} exceeds the rank {n}"
        )));
    }
    let table = one_d_sums(mu, n)?;
    Ok(table.get(lambda).cloned().unwrap_or_else(LaurentPolynomial::zero))
}

/// Debug-mode cross-check of the highest-weight condition: chain the
/// factor words through column insertion, cancel (0,0b) pairs by sliding,
/// and compare with the unique tableau of shape and weight lambda.
///
/// Chains that would need the full bumping-sliding transition (pair
/// annihilation inside columns, shapes deeper than two rows) are outside
/// the tableau model here; those return `None`, as does any run whose
/// reduced result still carries barred or zero letters.
pub fn hwcond_check(t: &TensorElement, lambda: &Partition) -> Option<bool> {
    if lambda.len() > 2 {
        return None;
    }
    let n = t.rank() as u32;
    let mut acc = TwoRowTableau::from_row(&to_tableau(&t.factors()[0]));
    for b in &t.factors()[1..] {
        acc = insert_word(&to_tableau(b), &acc, n).ok()?;
    }
    let reduced = cancel_zero_pairs(acc)?;
    let plain = reduced
        .row1()
        .iter()
        .chain(reduced.row2())
        .all(|l| !l.barred && l.value > 0);
    if !plain {
        return None;
    }
    let target = TwoRowTableau::new(
        vec![Letter::plain(1); lambda.part(1)],
        vec![Letter::plain(2); lambda.part(2)],
    )
    .expect("weight tableau");
    Some(reduced == target)
}

/// Removes (0, 0b) pairs from a two-row tableau, rectifying the holes by
/// jeu de taquin slides, until no pair remains.
fn cancel_zero_pairs(mut t: TwoRowTableau) -> Option<TwoRowTableau> {
    loop {
        let has_zero = t.row1().first().is_some_and(|l| l.is_zero());
        // 0b letters sit at the end of a row; prefer the row-2 corner
        let bar_in_row2 = t.row2().last().is_some_and(|l| l.is_zero_bar());
        let bar_in_row1 =
            t.row1().last().is_some_and(|l| l.is_zero_bar()) && t.row1().len() > t.row2().len();
        if !has_zero || !(bar_in_row2 || bar_in_row1) {
            return Some(t);
        }
        let mut row1 = t.row1().to_vec();
        let mut row2 = t.row2().to_vec();
        if bar_in_row2 {
            row2.pop();
        } else {
            row1.pop();
        }
        // hole starts at row 1, column 0; slide until it exits
        let mut col = 0usize;
        let mut row = 1usize;
        loop {
            if row == 1 {
                let right = row1.get(col + 1).copied();
                let below = row2.get(col).copied();
                match (right, below) {
                    (None, None) => {
                        row1.truncate(col);
                        break;
                    }
                    (Some(r), None) => {
                        row1[col] = r;
                        col += 1;
                    }
                    (None, Some(b)) => {
                        row1[col] = b;
                        row = 2;
                    }
                    (Some(r), Some(b)) => {
                        if b <= r {
                            row1[col] = b;
                            row = 2;
                        } else {
                            row1[col] = r;
                            col += 1;
                        }
                    }
                }
            } else {
                match row2.get(col + 1).copied() {
                    None => {
                        row2.truncate(col);
                        break;
                    }
                    Some(r) => {
                        row2[col] = r;
                        col += 1;
                    }
                }
            }
        }
        t = TwoRowTableau::new(row1, row2).ok()?;
    }
}

/// Text table of one-dimensional sums: rows are lambda, columns mu over
/// all partitions of the given size, computed at rank max(2, length(mu)).
pub fn format_size_table(size: usize) -> Result<String, Error> {
    let mus = Partition::all_of(size);
    let mut lambdas: Vec<Partition> = Vec::new();
    let mut columns: Vec<BTreeMap<Partition, LaurentPolynomial>> = Vec::new();
    for mu in &mus {
        let n = mu.len().max(2);
        let table = one_d_sums(mu, n)?;
        for lambda in table.keys() {
            if !lambdas.contains(lambda) {
                lambdas.push(lambda.clone());
            }
        }
        columns.push(table);
    }
    lambdas.sort_by_key(|l| (l.size(), std::cmp::Reverse(l.parts().to_vec())));

    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec![format!("|mu| = {size}")];
    header.extend(mus.iter().map(|m| m.to_string()));
    grid.push(header);
    for lambda in &lambdas {
        let mut row = vec![lambda.to_string()];
        for column in &columns {
            row.push(match column.get(lambda) {
                Some(poly) => poly.to_string(),
                None => String::new(),
            });
        }
        grid.push(row);
    }

    let cols = grid[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> =
            row.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out.push_str(line.join(" | ").trim_end());
        out.push('\n');
    }
    Ok(out)
}
