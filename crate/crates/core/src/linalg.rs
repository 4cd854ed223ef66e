//! Sparse row echelon forms over the integers with fraction-free
//! elimination. A row's leading entry is its largest column.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sorted by column, no zero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

fn content(row: &SparseRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub fn normalize(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = content(row);
    if row.last().unwrap().1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a·x − b·y`, merged by column.
fn combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let c = a * &x[i].1 - b * &y[j].1;
            if !c.is_zero() {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Builds a sorted row from unsorted entries, merging duplicates.
pub fn row_from_entries(mut entries: Vec<(usize, BigInt)>) -> SparseRow {
    entries.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Scales rational entries to a primitive integer row.
pub fn row_from_rationals(entries: Vec<(usize, BigRational)>) -> SparseRow {
    let mut l = BigInt::one();
    for (_, q) in &entries {
        l = l.lcm(q.denom());
    }
    let ints = entries
        .into_iter()
        .map(|(c, q)| (c, q.numer() * (&l / q.denom())))
        .collect();
    let mut row = row_from_entries(ints);
    normalize(&mut row);
    row
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot.contains_key(&col)
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Eliminates leading entries until the leading column is free or the
    /// row vanishes.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, c)) = row.last() {
            let Some(&r) = self.pivot.get(lead) else {
                break;
            };
            let p = &self.rows[r];
            let pc = &p.last().unwrap().1;
            let g = pc.gcd(c);
            let (a, b) = (pc / &g, c / &g);
            row = combine(&a, &row, &b, p);
            normalize(&mut row);
        }
        row
    }

    /// Inserts the row; returns its reduced form when it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> Option<SparseRow> {
        let row = self.reduce(row);
        let (lead, _) = row.last()?;
        self.pivot.insert(*lead, self.rows.len());
        self.rows.push(row.clone());
        Some(row)
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Full reduction: every pivot column is eliminated, leaving a
    /// combination of free columns. Returns the reduced row and the
    /// denominator it carries relative to the input.
    pub fn reduce_full(&self, mut row: SparseRow) -> (SparseRow, BigInt) {
        let mut den = BigInt::one();
        let mut bound = usize::MAX;
        loop {
            let next = row
                .iter()
                .rev()
                .find(|(col, _)| *col < bound && self.pivot.contains_key(col))
                .map(|(col, c)| (*col, c.clone()));
            let Some((col, c)) = next else {
                break;
            };
            let p = &self.rows[self.pivot[&col]];
            let pc = &p.last().unwrap().1;
            let g = pc.gcd(&c);
            let (a, b) = (pc / &g, &c / &g);
            row = combine(&a, &row, &b, p);
            den *= &a;
            let mut g = content(&row).gcd(&den);
            if g.is_zero() {
                g = BigInt::one();
            }
            if !g.is_one() {
                for (_, v) in row.iter_mut() {
                    *v = &*v / &g;
                }
                den /= &g;
            }
            bound = col;
        }
        (row, den)
    }
}
