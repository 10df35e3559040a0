//! Gaussian binomials and the fermionic configuration sum for the Kostka
//! polynomial, used as an independent oracle for the |lambda| = |mu| case
//! of the one-dimensional sums.
//!
//! The sum runs over multiplicity arrays m^(a)_i (a = 1..n-1, i >= 1) with
//! sum_i i m^(a)_i = lambda_{a+1} + ... + lambda_n, subject to the vacancy
//! numbers p^(a)_i being nonnegative; each configuration contributes
//! q^c({m}) times a product of q-binomials [p + m, m].  This expression
//! differs from the conventional Kostka polynomial normalization by an
//! overall power of q.

use crate::element::Partition;
use crate::error::Error;
use crate::laurent::LaurentPolynomial;

/// Gaussian polynomial [m, n]_q via the recurrence
/// [m, n] = [m-1, n-1] + q^n [m-1, n].
pub fn q_binomial(m: usize, n: usize) -> LaurentPolynomial {
    if n > m {
        return LaurentPolynomial::zero();
    }
    let n = n.min(m - n);
    // row-by-row DP over [j, i] for j = 0..=m
    let mut row: Vec<LaurentPolynomial> = vec![LaurentPolynomial::one(); 1];
    for j in 1..=m {
        let width = n.min(j);
        let mut next = Vec::with_capacity(width + 1);
        next.push(LaurentPolynomial::one());
        for i in 1..=width {
            let keep = if i < row.len() {
                row[i].scale_by_power(i as i64)
            } else {
                LaurentPolynomial::zero()
            };
            next.push(row[i - 1].add(&keep));
        }
        row = next;
    }
    row[n].clone()
}

/// Kostka polynomial by the fermionic formula, for sl_n with
/// |lambda| = |mu| and length(lambda) <= n.
pub fn kostka_fermionic(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
) -> Result<LaurentPolynomial, Error> {
    if lambda.size() != mu.size() {
        return Err(Error::OneDSum(format!(
            "fermionic formula needs |lambda| = |mu|, got {} and {}",
            lambda.size(),
            mu.size()
        )));
    }
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if lambda.len() > n {
        return Err(Error::OneDSum(format!(
            "length of lambda {lambda} exceeds the rank {n}"
        )));
    }

    // Row a of the configuration is a partition of tail(a).
    let tails: Vec<usize> = (1..n)
        .map(|a| (a + 1..=n).map(|i| lambda.part(i)).sum())
        .collect();
    let rows: Vec<Vec<Partition>> = tails.iter().map(|&t| Partition::all_of(t)).collect();

    let cartan = |a: usize, b: usize| -> i64 {
        if a == b {
            2
        } else if a.abs_diff(b) == 1 {
            -1
        } else {
            0
        }
    };

    let i_max = mu
        .parts()
        .iter()
        .copied()
        .chain(tails.iter().copied())
        .max()
        .unwrap_or(1)
        .max(1);
    // q_j(i) = sum_j min(i, mu_j), precomputed for i = 1..=i_max
    let mu_min: Vec<i64> = (0..=i_max)
        .map(|i| mu.parts().iter().map(|&p| p.min(i) as i64).sum())
        .collect();

    // multiplicity m^(a)_i of part i in the a-th row partition
    let mult = |p: &Partition, i: usize| p.parts().iter().filter(|&&q| q == i).count() as i64;
    // B_a(i) = sum_j min(i, j) m^(a)_j = sum over parts of min(i, part)
    let b_sum = |p: &Partition, i: usize| -> i64 {
        p.parts().iter().map(|&q| q.min(i) as i64).sum()
    };

    let mut total = LaurentPolynomial::zero();
    let mut choice = vec![0usize; rows.len()];
    'outer: loop {
        let config: Vec<&Partition> = choice.iter().zip(&rows).map(|(&c, r)| &r[c]).collect();

        // vacancy numbers and admissibility
        let mut admissible = true;
        let mut product = LaurentPolynomial::one();
        'rows: for a in 1..n {
            for i in 1..=i_max {
                let mut p = if a == 1 { mu_min[i] } else { 0 };
                for b in 1..n {
                    p -= cartan(a, b) * b_sum(config[b - 1], i);
                }
                if p < 0 {
                    admissible = false;
                    break 'rows;
                }
                let m = mult(config[a - 1], i);
                if m > 0 {
                    product = product.mul(&q_binomial((p + m) as usize, m as usize));
                }
            }
        }

        if admissible {
            // c({m}) = (1/2) sum_{a,b} C_ab sum_{i,j} min(i,j) m_i m_j
            //          - sum_{i,j} min(i, mu_j) m^(1)_i
            let mut twice_quad = 0i64;
            for a in 1..n {
                for b in 1..n {
                    let c_ab = cartan(a, b);
                    if c_ab == 0 {
                        continue;
                    }
                    let mut s = 0i64;
                    for &pi in config[a - 1].parts() {
                        for &pj in config[b - 1].parts() {
                            s += pi.min(pj) as i64;
                        }
                    }
                    twice_quad += c_ab * s;
                }
            }
            assert!(twice_quad % 2 == 0, "quadratic form is not even");
            let linear: i64 = config[0].parts().iter().map(|&pi| mu_min[pi.min(i_max)]).sum();
            let c = twice_quad / 2 - linear;
            total = total.add(&product.scale_by_power(c));
        }

        // advance the odometer
        for pos in 0..choice.len() {
            choice[pos] += 1;
            if choice[pos] < rows[pos].len() {
                continue 'outer;
            }
            choice[pos] = 0;
        }
        break;
    }
    Ok(total)
}
