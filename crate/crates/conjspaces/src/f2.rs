//! Dense linear algebra over GF(2) with bit-packed rows.
//!
//! Everything here is exact and deterministic: rank, membership in a row
//! span, and solving square systems.  Rows are `u64`-block bitsets; the
//! matrices that show up in this crate (admissible-basis coordinates, cup
//! pairings, exponent-sum matrices) stay well under a few hundred columns.

/// A bit vector of fixed width.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    bits: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            bits: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits[i / 64] |= 1 << (i % 64);
        } else {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_set(&self) -> Option<usize> {
        for (block, &word) in self.bits.iter().enumerate() {
            if word != 0 {
                let i = block * 64 + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
        }
        None
    }

    pub fn iter_set(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Row-echelon accumulator over GF(2).  Rows can be fed one at a time; the
/// reducer tracks, for every retained pivot row, which input rows sum to it,
/// so span membership comes with a certificate.
pub struct RowReducer {
    cols: usize,
    /// (pivot column, reduced row, combination of original row indices)
    rows: Vec<(usize, BitVec, Vec<usize>)>,
    fed: usize,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: Vec::new(),
            fed: 0,
        }
    }

    /// Reduce `row` against the current echelon rows.  Returns the residue
    /// and the set of original-row indices used (including, notionally, the
    /// new row itself once fed).
    fn reduce(&self, mut row: BitVec) -> (BitVec, Vec<usize>) {
        let mut used = Vec::new();
        for (pivot, reduced, combo) in &self.rows {
            if row.get(*pivot) {
                row.xor_assign(reduced);
                used.extend_from_slice(combo);
            }
        }
        // XOR-cancel duplicate indices.
        used.sort_unstable();
        let mut combo = Vec::new();
        for idx in used {
            if combo.last() == Some(&idx) {
                combo.pop();
            } else {
                combo.push(idx);
            }
        }
        (row, combo)
    }

    /// Feed a row; returns true if it enlarged the span.
    pub fn feed(&mut self, row: BitVec) -> bool {
        assert_eq!(row.len(), self.cols);
        let index = self.fed;
        self.fed += 1;
        let (residue, mut combo) = self.reduce(row);
        match residue.first_set() {
            Some(pivot) => {
                combo.push(index);
                self.rows.push((pivot, residue, combo));
                true
            }
            None => false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// If `target` lies in the span of the rows fed so far, return the list
    /// of fed-row indices whose sum is `target`.
    pub fn express(&self, target: &BitVec) -> Option<Vec<usize>> {
        let (residue, combo) = self.reduce(target.clone());
        residue.is_zero().then_some(combo)
    }
}

/// Rank of a 0/1 matrix given as explicit rows.
pub fn rank(cols: usize, rows: impl IntoIterator<Item = BitVec>) -> usize {
    let mut reducer = RowReducer::new(cols);
    for row in rows {
        reducer.feed(row);
    }
    reducer.rank()
}

/// Solve the square system `M x = rhs` over GF(2).  Returns `None` when the
/// system is singular or inconsistent.  `m[i]` is row `i`.
pub fn solve_square(m: &[BitVec], rhs: &BitVec) -> Option<BitVec> {
    let n = m.len();
    if n == 0 {
        return Some(BitVec::zeros(0));
    }
    let cols = m[0].len();
    assert_eq!(cols, n, "solve_square expects a square matrix");
    assert_eq!(rhs.len(), n);

    // Augment each row with its rhs bit and run elimination.
    let mut rows: Vec<(BitVec, bool)> = m
        .iter()
        .cloned()
        .zip((0..n).map(|i| rhs.get(i)))
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut next = 0;
    for (col, pivot) in pivot_of_col.iter_mut().enumerate() {
        let Some(found) = (next..n).find(|&r| rows[r].0.get(col)) else {
            continue;
        };
        rows.swap(next, found);
        let (pivot_row, pivot_rhs) = rows[next].clone();
        for (r, (row, b)) in rows.iter_mut().enumerate() {
            if r != next && row.get(col) {
                row.xor_assign(&pivot_row);
                *b ^= pivot_rhs;
            }
        }
        *pivot = Some(next);
        next += 1;
        if next == n {
            break;
        }
    }
    // Inconsistent if a zero row has rhs 1.
    if rows.iter().any(|(row, b)| row.is_zero() && *b) {
        return None;
    }
    // Singular (under-determined) systems are rejected: callers check
    // non-singularity separately and want a unique answer.
    if pivot_of_col.iter().any(|p| p.is_none()) {
        return None;
    }
    let mut x = BitVec::zeros(n);
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        let r = pivot.unwrap();
        x.set(col, rows[r].1);
    }
    Some(x)
}

/// True when the square matrix is invertible over GF(2).
pub fn is_nonsingular(m: &[BitVec]) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && rank(n.max(1), m.iter().cloned()) == n
}
